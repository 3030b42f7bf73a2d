#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chi/generators.hpp"

namespace chi {

// Argument layout of an operation E(a_1..a_m; b_1..b_n): the a-inputs occupy
// operadic slots 1..m, the b-inputs slots m+1..m+n.
struct SlotConvention {
  int m = 0;
  int n = 0;
};

struct CheckReport {
  std::string name;    // identity family, e.g. "EHGA"
  std::string params;  // rendered parameters, e.g. "k=1 m=2 n=2"
  bool pass = false;
  std::string stats;   // short summary, e.g. "lhs_terms=12"
  std::string lhs, rhs, difference;  // chain grammar; set on failure
  long long millis = 0;

  // One certificate line: "EHGA k=1 m=2 n=2 PASS (lhs_terms=12)".
  std::string line(bool with_millis = false) const;
  // line() plus the failing chains, when any.
  std::string full_text(bool with_millis = false) const;
};

// Both sides of the graded compatibility relation tying E^k_{m,n} to the
// lower operations, assembled inside the operad.  The differential summands
// collapse into the single operadic term d E^k_{m,n} because the action on
// cochains is a chain map.
std::pair<SurjChain, SurjChain> assemble_ehga_sides(int k, int m, int n);

CheckReport check_ehga(int k, int m, int n);

// Brace composition law: E_{1,n} o_1 E_{1,m} equals the sum over all
// order-preserving insertions of the b-arguments into the c-string.
CheckReport check_hga_assoc(int m, int n);

// Two identities of cup-1 against the product, exact in the operad:
// the Hirsch relation summing to zero and its left variant summing to
// d(1,2,1,3,1).
std::vector<CheckReport> check_remark1_identities();

// The two G-element identities tying cup-2 to cup-1, exact in the operad.
std::vector<CheckReport> check_g_relations();

// Every term of E^k_{p,q} has complexity <= k+2.
CheckReport check_filtration(int k, int p, int q);

}  // namespace chi
