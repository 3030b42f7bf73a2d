#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chi/formal_sum.hpp"

namespace chi {

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Basis element of the operad: a nondegenerate surjection
// u : (1..n+d) -> (1..n), stored as its value string (u(1),...,u(n+d)).
// Nondegenerate means u(i) != u(i+1); degenerate or non-surjective strings
// are identified with zero and never stored.
class Surjection {
 public:
  explicit Surjection(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int arity() const { return arity_; }
  int length() const { return static_cast<int>(entries_.size()); }
  int degree() const { return length() - arity_; }

  auto operator<=>(const Surjection& o) const { return entries_ <=> o.entries_; }
  bool operator==(const Surjection& o) const { return entries_ == o.entries_; }

 private:
  std::vector<int> entries_;
  int arity_;
};

// True iff the string is a valid basis element (positive entries, surjective
// onto 1..max, no equal adjacent entries, nonempty).
bool valid_surjection_string(const std::vector<int>& entries);

// The arity-1 operad unit (1).
Surjection unit_surjection();

// Bijection of {1..n}; acts on surjection values.
class ValuePermutation {
 public:
  explicit ValuePermutation(std::vector<int> images);  // images[i-1] = sigma(i)
  static ValuePermutation identity(int n);
  static ValuePermutation transposition(int n, int a, int b);
  // sigma(s) = first block shifted past the second: s -> s+right for s <= left,
  // s -> s-left otherwise.  Used to swap argument blocks of sizes (left,right).
  static ValuePermutation block_swap(int left, int right);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int v) const { return images_[static_cast<std::size_t>(v) - 1]; }
  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

// GF(2) combination of surjections of a common arity.
class SurjChain {
 public:
  SurjChain() = default;
  explicit SurjChain(int arity) : arity_(arity) {}
  explicit SurjChain(const Surjection& s) : arity_(s.arity()) { sum_.toggle(s); }
  SurjChain(int arity, FormalSum<Surjection> sum);

  int arity() const { return arity_; }
  bool zero() const { return sum_.empty(); }
  const FormalSum<Surjection>& terms() const { return sum_; }

  // Degree common to all terms; nullopt when zero or mixed.
  std::optional<int> homogeneous_degree() const;

  SurjChain& operator+=(const SurjChain& o);
  friend SurjChain operator+(SurjChain a, const SurjChain& b) {
    a += b;
    return a;
  }

  bool operator==(const SurjChain& o) const {
    if (sum_.empty() && o.sum_.empty()) return true;
    return arity_ == o.arity_ && sum_ == o.sum_;
  }

 private:
  int arity_ = 0;
  FormalSum<Surjection> sum_;
};

// Validating constructor from raw strings; requires common arity and
// homogeneous degree.
SurjChain make_chain(const std::vector<std::vector<int>>& strings);

// Sum of single-entry deletions, discarding results that are degenerate or
// non-surjective.  Lowers degree by one; zero on degree-0 chains.
SurjChain differential(const SurjChain& c);
SurjChain differential(const Surjection& u);

// Partial composition u o_slot v: v's values are relabelled to
// slot..slot+arity(v)-1, u's larger values shifted up, and v's string is
// split into r overlapping blocks (r = occurrences of slot in u) in all
// ways, each block substituted for one occurrence.  Degenerate results are
// dropped.
SurjChain compose(const Surjection& u, int slot, const Surjection& v);
SurjChain compose(const SurjChain& u, int slot, const SurjChain& v);

// Value substitution e -> sigma(e); always maps basis elements to basis
// elements.
SurjChain relabel(const SurjChain& c, const ValuePermutation& sigma);
Surjection relabel(const Surjection& u, const ValuePermutation& sigma);

// Max over value pairs i<j of (maximal constant blocks of the {i,j}
// subsequence) - 1; the filtration level of the basis element.
int complexity(const Surjection& u);

std::string to_string(const Surjection& u);
// Terms in lexicographic entry order joined by " + "; the zero chain prints "0".
std::string to_string(const SurjChain& c);

// Inverse of to_string; accepts tolerant whitespace around '+'.
SurjChain parse_chain(std::string_view text);

}  // namespace chi
