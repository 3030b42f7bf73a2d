#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chi/surjection.hpp"

namespace chi {

// Row-structured recipe producing one basis surjection of E^k_{p,q}.
//
// The string is woven from two increasing value sequences, A = 1..p and
// B = p+1..p+q.  Row 1 is (1).  Rows then alternate B,A,B,...  Row 2 emits
// t>=1 fresh B values as (p+1, 1, p+2, 1, ..., 1, p+t).  Every later row
// restarts with the current last value of its own sequence, appends t>=0
// fresh values at odd positions with the other sequence's current last
// value in between, and the final of the k+3 rows is a bare restart.
// Fresh-value counts are constrained by: A rows emit p-1 in total, B rows
// emit q in total.
struct AdmissibleTable {
  int k = 0, p = 0, q = 0;
  std::vector<int> emission;               // fresh-value count per row, rows 2..k+3
  std::vector<std::vector<int>> rows;      // k+3 rows, rows[0] = {1}

  Surjection flatten() const;              // concatenation of the rows
};

// Rows joined by "; " inside parentheses, e.g. "(1; 2,1,3; 1)".
std::string to_string(const AdmissibleTable& t);

// All tables for the given parameters, ordered by flattened string.
// Empty when the constraints are unsatisfiable (e.g. k=0 and p>1).
std::vector<AdmissibleTable> admissible_tables(int k, int p, int q);

struct GeneratorElement {
  int k = 0, p = 0, q = 0;
  SurjChain chain;                         // degree p+q+k-1 in arity p+q
  std::vector<AdmissibleTable> tables;
};

// E^k_{p,q}: the sum of all flattened admissible tables.
GeneratorElement generator(int k, int p, int q);

// Closed forms of the k=1 and k=2 families, transcribed independently of
// the table enumeration.
SurjChain e1_closed(int p, int q);
SurjChain e2_closed(int p, int q);

// Alternating string 1,2,1,2,... of length i+2; represents the cup-i product.
Surjection cup_string(int i);

// The two arity-3 degree-4 elements linking cup-2 with cup-1.
std::pair<Surjection, Surjection> g_elements();

}  // namespace chi
