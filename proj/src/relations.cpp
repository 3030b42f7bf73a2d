#include "chi/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace chi {

namespace {

// An operad element whose slots are tagged with global argument ids.
// Routing to the global slot order is a value relabelling: the element
// feeding global argument g(s) into slot s is relabel(chain, sigma) with
// sigma(s) = g(s).
struct LabeledOp {
  SurjChain chain;
  std::vector<int> labels;  // labels[s-1] = global argument id of slot s
};

LabeledOp labeled(SurjChain chain, std::vector<int> labels) {
  return LabeledOp{std::move(chain), std::move(labels)};
}

// Partial composition with label splicing; composite slots are u's slots
// with slot `slot` replaced by v's slot block.
LabeledOp compose_at(const LabeledOp& u, int slot, const LabeledOp& v) {
  LabeledOp out;
  out.chain = compose(u.chain, slot, v.chain);
  out.labels.reserve(u.labels.size() + v.labels.size() - 1);
  out.labels.insert(out.labels.end(), u.labels.begin(), u.labels.begin() + (slot - 1));
  out.labels.insert(out.labels.end(), v.labels.begin(), v.labels.end());
  out.labels.insert(out.labels.end(), u.labels.begin() + slot, u.labels.end());
  return out;
}

SurjChain to_global(const LabeledOp& op) {
  if (op.chain.zero()) return op.chain;
  return relabel(op.chain, ValuePermutation(op.labels));
}

// E^j_{p,q} as a chain, extended by the boundary conventions used in the
// big relation: the a-side identity operation when (j,p,q) = (0,1,0),
// zero whenever a side is otherwise missing.
SurjChain e_chain(int j, int p, int q) {
  if (j < 0) return SurjChain();
  if (p >= 1 && q >= 1) return generator(j, p, q).chain;
  if (j == 0 && p == 1 && q == 0) return SurjChain(unit_surjection());
  return SurjChain();
}

SurjChain cup0() { return SurjChain(cup_string(0)); }
SurjChain cup(int i) { return SurjChain(cup_string(i)); }

// labels (a_1..a_p, b_1..b_q) of an E_{p,q} factor placed at global
// argument offsets: a block starts at global a0, b block at global b0.
std::vector<int> pq_labels(int p, int a0, int q, int b0) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(p + q));
  for (int i = 0; i < p; ++i) v.push_back(a0 + i);
  for (int i = 0; i < q; ++i) v.push_back(b0 + i);
  return v;
}

}  // namespace

std::pair<SurjChain, SurjChain> assemble_ehga_sides(int k, int m, int n) {
  if (k < 0 || m < 1 || n < 1) throw ValidationError("assemble_ehga_sides requires k>=0, m,n>=1");
  const int N = m + n;
  SurjChain lhs(N), rhs(N);

  // d E^k_{m,n}
  lhs += differential(e_chain(k, m, n));

  // adjacent products inside each block: E^k_{m-1,n} o_i (1,2), slots i=1..m-1
  for (int i = 1; i + 1 <= m; ++i) lhs += compose(e_chain(k, m - 1, n), i, cup0());
  // and E^k_{m,n-1} o_{m+i} (1,2), i=1..n-1
  for (int i = 1; i + 1 <= n; ++i) lhs += compose(e_chain(k, m, n - 1), m + i, cup0());

  // a_1 * E^k_{m-1,n}(a_2..;b)  -- identity routing
  {
    auto op = compose_at(labeled(cup0(), {1, 0}),
                         2, labeled(e_chain(k, m - 1, n), pq_labels(m - 1, 2, n, m + 1)));
    lhs += to_global(op);
  }
  // E^k_{m-1,n}(a_1..a_{m-1};b) * a_m
  {
    auto op = compose_at(labeled(cup0(), {0, m}),
                         1, labeled(e_chain(k, m - 1, n), pq_labels(m - 1, 1, n, m + 1)));
    lhs += to_global(op);
  }
  // b_1 * E^k_{m,n-1}(a;b_2..)
  {
    auto op = compose_at(labeled(cup0(), {m + 1, 0}),
                         2, labeled(e_chain(k, m, n - 1), pq_labels(m, 1, n - 1, m + 2)));
    lhs += to_global(op);
  }
  // E^k_{m,n-1}(a;b_1..b_{n-1}) * b_n
  {
    auto op = compose_at(labeled(cup0(), {0, m + n}),
                         1, labeled(e_chain(k, m, n - 1), pq_labels(m, 1, n - 1, m + 1)));
    lhs += to_global(op);
  }

  // product sum: E^{k-i}_{p,q}(a_1..a_p;b_1..b_q) * T^{k-i} E^i_{m-p,n-q}(rest);
  // the block twist rides on the second factor, driven by the first
  // factor's superscript, exactly as in the convolution on the bar side
  for (int i = 0; i <= k; ++i) {
    for (int p = 1; p + 1 <= m; ++p) {
      for (int q = 1; q + 1 <= n; ++q) {
        SurjChain first = e_chain(k - i, p, q);
        if (first.zero()) continue;
        SurjChain second = e_chain(i, m - p, n - q);
        if ((k - i) % 2 != 0) {
          // T E^i(x;y) = E^i_{n-q,m-p}(y;x): swap the argument blocks
          second = relabel(e_chain(i, n - q, m - p),
                           ValuePermutation::block_swap(n - q, m - p));
        }
        if (second.zero()) continue;
        auto op = compose_at(labeled(cup0(), {0, -1}), 1,
                             labeled(std::move(first), pq_labels(p, 1, q, m + 1)));
        op = compose_at(op, p + q + 1,
                        labeled(std::move(second), pq_labels(m - p, p + 1, n - q, m + q + 1)));
        lhs += to_global(op);
      }
    }
  }

  // E^{k-1}_{m,n} + E^{k-1}_{n,m} with swapped blocks
  rhs += e_chain(k - 1, m, n);
  {
    SurjChain sw = e_chain(k - 1, n, m);
    if (!sw.zero()) rhs += relabel(sw, ValuePermutation::block_swap(n, m));
  }
  return {lhs, rhs};
}

namespace {

CheckReport report_equal(std::string name, std::string params, const SurjChain& lhs,
                         const SurjChain& rhs, std::string stats = {}) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.pass = (lhs == rhs);
  if (stats.empty()) stats = "lhs_terms=" + std::to_string(lhs.terms().size());
  r.stats = std::move(stats);
  if (!r.pass) {
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    SurjChain diff = lhs;
    diff += rhs;
    r.difference = to_string(diff);
  }
  return r;
}

}  // namespace

std::string CheckReport::line(bool with_millis) const {
  std::string s = name;
  if (!params.empty()) s += " " + params;
  s += pass ? " PASS" : " FAIL";
  std::string extra = stats;
  if (with_millis) {
    if (!extra.empty()) extra += ", ";
    extra += "millis=" + std::to_string(millis);
  }
  if (!extra.empty()) s += " (" + extra + ")";
  return s;
}

std::string CheckReport::full_text(bool with_millis) const {
  std::string s = line(with_millis);
  if (!pass) {
    s += "\n  lhs  = " + lhs;
    s += "\n  rhs  = " + rhs;
    s += "\n  diff = " + difference;
  }
  return s;
}

CheckReport check_ehga(int k, int m, int n) {
  auto [lhs, rhs] = assemble_ehga_sides(k, m, n);
  return report_equal("EHGA",
                      "k=" + std::to_string(k) + " m=" + std::to_string(m) +
                          " n=" + std::to_string(n),
                      lhs, rhs);
}

namespace {

// Inserts b_j (carrying a block of l_j c-arguments) after position k_j of the
// c-string, for every admissible placement.
void enumerate_placements(int m, int n, int j, int prev_end, std::vector<std::pair<int, int>>& cur,
                          std::vector<std::vector<std::pair<int, int>>>& out) {
  if (j == m) {
    out.push_back(cur);
    return;
  }
  for (int kj = prev_end; kj <= n; ++kj)
    for (int lj = 0; kj + lj <= n; ++lj) {
      cur.emplace_back(kj, lj);
      enumerate_placements(m, n, j + 1, kj + lj, cur, out);
      cur.pop_back();
    }
}

}  // namespace

CheckReport check_hga_assoc(int m, int n) {
  if (m < 1 || n < 1) throw ValidationError("check_hga_assoc requires m,n >= 1");
  // global ids: a = 1, b_j = 1+j, c_t = 1+m+t
  const auto a_id = 1;
  auto b_id = [&](int j) { return 1 + j; };
  auto c_id = [&](int t) { return 1 + m + t; };

  // LHS: E_{1,n}(E_{1,m}(a;b_1..b_m); c_1..c_n)
  std::vector<int> outer_labels{0};
  for (int t = 1; t <= n; ++t) outer_labels.push_back(c_id(t));
  std::vector<int> inner_labels{a_id};
  for (int j = 1; j <= m; ++j) inner_labels.push_back(b_id(j));
  SurjChain lhs = to_global(compose_at(labeled(generator(0, 1, n).chain, outer_labels), 1,
                                       labeled(generator(0, 1, m).chain, inner_labels)));

  // RHS: sum over placements of the b's (with their c-blocks) into the c-string
  SurjChain rhs(m + n + 1);
  std::vector<std::vector<std::pair<int, int>>> placements;
  std::vector<std::pair<int, int>> cur;
  enumerate_placements(m, n, 0, 0, cur, placements);
  for (const auto& pl : placements) {
    int total_l = 0;
    for (auto [kj, lj] : pl) total_l += lj;
    const int outer_args = m + n - total_l;
    std::vector<int> labels{a_id};
    {
      int next_c = 1;
      for (int j = 0; j < m; ++j) {
        while (next_c <= pl[static_cast<std::size_t>(j)].first) labels.push_back(c_id(next_c++));
        labels.push_back(-(j + 1));  // placeholder for the j-th insertion
        next_c += pl[static_cast<std::size_t>(j)].second;
      }
      while (next_c <= n) labels.push_back(c_id(next_c++));
    }
    LabeledOp op = labeled(generator(0, 1, outer_args).chain, labels);
    for (int j = m; j >= 1; --j) {
      const auto [kj, lj] = pl[static_cast<std::size_t>(j - 1)];
      const int slot = static_cast<int>(
          std::find(op.labels.begin(), op.labels.end(), -j) - op.labels.begin() + 1);
      std::vector<int> inner{b_id(j)};
      for (int t = 1; t <= lj; ++t) inner.push_back(c_id(kj + t));
      SurjChain inner_chain =
          lj == 0 ? SurjChain(unit_surjection()) : generator(0, 1, lj).chain;
      op = compose_at(op, slot, labeled(std::move(inner_chain), std::move(inner)));
    }
    rhs += to_global(op);
  }
  return report_equal("HGA-ASSOC", "m=" + std::to_string(m) + " n=" + std::to_string(n), lhs, rhs);
}

std::vector<CheckReport> check_remark1_identities() {
  std::vector<CheckReport> out;
  const ValuePermutation swap23 = ValuePermutation::transposition(3, 2, 3);
  const ValuePermutation swap12 = ValuePermutation::transposition(3, 1, 2);
  {
    // (1,2,1) o_1 (1,2) + (1,2) o_2 (1,2,1) + (id x T)(1,2) o_1 (1,2,1) = 0
    SurjChain lhs = compose(cup(1), 1, cup0());
    lhs += compose(cup0(), 2, cup(1));
    lhs += relabel(compose(cup0(), 1, cup(1)), swap23);
    out.push_back(report_equal("REMARK1", "hirsch", lhs, SurjChain(3)));
  }
  {
    // (1,2,1) o_2 (1,2) + (T x id)(1,2) o_2 (1,2,1) + (1,2) o_1 (1,2,1)
    //   = d(1,2,1,3,1)
    SurjChain lhs = compose(cup(1), 2, cup0());
    lhs += relabel(compose(cup0(), 2, cup(1)), swap12);
    lhs += compose(cup0(), 1, cup(1));
    SurjChain rhs = differential(SurjChain(Surjection({1, 2, 1, 3, 1})));
    out.push_back(report_equal("REMARK1", "left-hirsch", lhs, rhs));
  }
  return out;
}

std::vector<CheckReport> check_g_relations() {
  std::vector<CheckReport> out;
  auto [g12, g21] = g_elements();
  const ValuePermutation swap23 = ValuePermutation::transposition(3, 2, 3);
  const ValuePermutation swap12 = ValuePermutation::transposition(3, 1, 2);
  {
    // d G_{2,1}(a,b;c) = (a.1b).2c + a.1(b.2c) + (a.2c).1b
    //                    + E^1_{2,1}(a,b;c) + E^1_{2,1}(b,a;c)
    SurjChain rhs = compose(cup(2), 1, cup(1));
    rhs += compose(cup(1), 2, cup(2));
    rhs += relabel(compose(cup(1), 1, cup(2)), swap23);
    rhs += generator(1, 2, 1).chain;
    rhs += relabel(generator(1, 2, 1).chain, swap12);
    out.push_back(report_equal("G-RELATION", "G21", differential(SurjChain(g21)), rhs));
  }
  {
    // d G_{1,2}(a;b,c) = a.2(b.1c) + b.1(a.2c) + (a.2b).1c
    //                    + E^1_{1,2}(a;b,c) + E^1_{1,2}(a;c,b)
    SurjChain rhs = compose(cup(2), 2, cup(1));
    rhs += relabel(compose(cup(1), 2, cup(2)), swap12);
    rhs += compose(cup(1), 1, cup(2));
    rhs += generator(1, 1, 2).chain;
    rhs += relabel(generator(1, 1, 2).chain, swap23);
    out.push_back(report_equal("G-RELATION", "G12", differential(SurjChain(g12)), rhs));
  }
  return out;
}

CheckReport check_filtration(int k, int p, int q) {
  const auto g = generator(k, p, q);
  int maxc = 0;
  for (const auto& t : g.chain.terms().terms()) maxc = std::max(maxc, complexity(t));
  CheckReport r;
  r.name = "FILTRATION";
  r.params = "k=" + std::to_string(k) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
  r.pass = maxc <= k + 2;
  r.stats = "max_complexity=" + std::to_string(maxc) + " bound=" + std::to_string(k + 2);
  if (!r.pass) r.lhs = to_string(g.chain);
  return r;
}

}  // namespace chi
