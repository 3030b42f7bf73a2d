#pragma once

#include "chi/simplicial.hpp"

namespace chi {

// Word [a_1|...|a_m] of basis cochain letters; the empty word is the counit
// element.  A letter of cochain dimension j contributes j+1 to the total
// degree; only its parity enters any identity.
struct BarWord {
  std::vector<Simplex> letters;

  int length() const { return static_cast<int>(letters.size()); }
  int total_degree() const;
  auto operator<=>(const BarWord&) const = default;
};

std::string to_string(const BarWord& w);

using BarSum = FormalSum<BarWord>;
using BarPairSum = FormalSum<std::pair<BarWord, BarWord>>;

// Finite window of the bar construction: all words of length <= max_len
// (and total degree <= max_degree when bounded).
class BarTruncation {
 public:
  BarTruncation(const SimplicialComplex& cx, int max_len, int max_degree = -1);

  const SimplicialComplex& complex() const { return *cx_; }
  int max_len() const { return max_len_; }
  int max_degree() const { return max_degree_; }
  const std::vector<BarWord>& basis() const { return basis_; }
  bool contains(const BarWord& w) const;

 private:
  const SimplicialComplex* cx_;
  int max_len_, max_degree_;
  std::vector<BarWord> basis_;
};

// Bar differential: letterwise coboundary plus adjacent letter products,
// expanded to basis words; letters that vanish delete the term.
BarSum bar_diff(const SimplicialComplex& cx, const BarWord& w);
BarSum bar_diff(const SimplicialComplex& cx, const BarSum& s);

// The higher twisting cochain E^k on a pair of words: the generator
// operation evaluated on the letters, with boundary conventions
// E^0([a];[]) = a, E^0([];[b]) = b, zero on every other empty-sided input.
Cochain e_map(const SimplicialComplex& cx, int k, const BarWord& alpha, const BarWord& beta);

// Deconcatenation coproduct.
BarPairSum deconcatenations(const BarWord& w);

struct CupBarResult {
  BarSum words;
  bool exact = true;  // false when some output word leaves the truncation
};

// cup-i product of two words: the cofree extension of the e_map projections.
// The length-r component runs over splittings of both words into r blocks
// and compositions i = i_1+...+i_r, each letter e_map(i_j, pair_j) with the
// pair swapped after an odd amount of accumulated twisting.
CupBarResult cup_bar(const BarTruncation& t, int i, const BarWord& alpha, const BarWord& beta);

// Multiplication mu = cup_bar(0): chain map, associative, unital with the
// empty word, and a coalgebra map.
CheckReport check_hopf(const BarTruncation& t);

// Both Steenrod laws on the truncation: the twisting-cochain form for the
// e_map family and the coboundary form for cup_bar, exact on pairs with
// combined length within the window.
CheckReport check_steenrod_bar(const BarTruncation& t, int i);

// Deconcatenation of cup_bar(i) against the convolution of lower cup_bar's.
CheckReport check_decomposition(const BarTruncation& t, int i);

}  // namespace chi
