#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "chi/bit_matrix.hpp"
#include "chi/relations.hpp"
#include "chi/surjection.hpp"

namespace chi {

// Sorted tuple of vertex ids; dimension = size - 1.
using Simplex = std::vector<int>;

// Finite ordered simplicial complex: a downward-closed family of simplices
// over integer vertices with the global vertex order.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(const std::vector<Simplex>& facets);
  // One facet per non-empty line: whitespace-separated distinct vertex ids.
  // '#' starts a comment.
  static SimplicialComplex parse(std::string_view text);

  int top_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(int dim) const;
  std::size_t count(int dim) const { return simplices(dim).size(); }
  long index_of(int dim, const Simplex& s) const;  // -1 when absent
  std::size_t total_simplices() const;

 private:
  std::vector<std::vector<Simplex>> by_dim_;  // each level sorted
  static const std::vector<Simplex> kEmpty;
};

// GF(2) cochain, homogeneous of one dimension.
struct Cochain {
  const SimplicialComplex* complex = nullptr;
  int dim = 0;
  FormalSum<Simplex> terms;

  static Cochain zero(const SimplicialComplex& cx, int dim);
  static Cochain basis(const SimplicialComplex& cx, const Simplex& s);

  bool is_zero() const { return terms.empty(); }
  Cochain& operator+=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) {
    a += b;
    return a;
  }
  bool operator==(const Cochain& o) const {
    if (terms.empty() && o.terms.empty()) return true;
    return complex == o.complex && dim == o.dim && terms == o.terms;
  }
};

std::string to_string(const Cochain& x);

// Simplicial coboundary over GF(2).
Cochain coboundary(const Cochain& x);

// Interval-cut action of a surjection string on cochains: for every target
// simplex the vertex range is cut into overlapping intervals indexed by the
// string; each value collects its intervals' positions, terms with a
// repeated position inside one value are dropped, and each factor is
// evaluated on its collected sub-simplex.
Cochain evaluate(const Surjection& u, const std::vector<Cochain>& xs);
Cochain evaluate(const SurjChain& u, const std::vector<Cochain>& xs);

// cup-i product, evaluate(cup_string(i), {x, y}); dimension dim x + dim y - i.
Cochain cup_i(const Cochain& x, const Cochain& y, int i);

struct CohomologyClass {
  int dim = 0;
  Cochain representative;  // a cocycle
  BitVec coords;           // coordinates in the computed basis of H^dim
};

// Basis of H^dim over GF(2) with representative cocycles.
class CohomologyBasis {
 public:
  CohomologyBasis(const SimplicialComplex& cx, int dim);

  int rank() const { return static_cast<int>(classes_.size()); }
  const std::vector<CohomologyClass>& classes() const { return classes_; }
  // Coordinates of a cocycle's class; throws ValidationError when the input
  // is not a cocycle of the right dimension.
  BitVec coordinates_of(const Cochain& cocycle) const;

 private:
  const SimplicialComplex* cx_;
  int dim_;
  std::vector<CohomologyClass> classes_;
  BitMatrix span_;  // columns: image basis then class representatives
  int image_rank_;
};

std::vector<CohomologyClass> cohomology(const SimplicialComplex& cx, int dim);

// Sq^k on an n-class: the class of x cup_{n-k} x.  Representative
// independence is cross-checked against coboundary perturbations.
CohomologyClass steenrod_square(const SimplicialComplex& cx, const CohomologyClass& c, int k,
                                int perturbation_trials = 4);

// d(x .i y) = dx .i y + x .i dy + x .{i-1} y + y .{i-1} x on random cochains,
// with cup_{-1} = 0.
CheckReport check_steenrod_coboundary(const SimplicialComplex& cx, int i, int trials,
                                      unsigned seed = 20240901);

Cochain random_cochain(const SimplicialComplex& cx, int dim, std::mt19937& rng);

}  // namespace chi
