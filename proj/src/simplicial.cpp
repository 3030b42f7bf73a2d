#include "chi/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace chi {

const std::vector<Simplex> SimplicialComplex::kEmpty;

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
  std::set<Simplex> all;
  for (const auto& f : facets) {
    Simplex s = f;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ValidationError("facet has a repeated vertex");
    if (s.empty()) throw ValidationError("empty facet");
    for (int v : s)
      if (v < 0) throw ValidationError("vertex ids must be non-negative");
    // downward closure by subset masks
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) face.push_back(s[i]);
      all.insert(std::move(face));
    }
  }
  SimplicialComplex cx;
  for (const auto& s : all) {
    const std::size_t d = s.size() - 1;
    if (cx.by_dim_.size() <= d) cx.by_dim_.resize(d + 1);
    cx.by_dim_[d].push_back(s);
  }
  for (auto& level : cx.by_dim_) std::sort(level.begin(), level.end());
  return cx;
}

SimplicialComplex SimplicialComplex::parse(std::string_view text) {
  std::vector<Simplex> facets;
  std::size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    Simplex facet;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(line[i])))
        throw ParseError("expected a vertex id on line " + std::to_string(line_no), pos + i);
      int v = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        v = v * 10 + (line[i] - '0');
        if (v > 1'000'000) throw ParseError("vertex id too large", pos + i);
        ++i;
      }
      facet.push_back(v);
    }
    if (!facet.empty()) {
      Simplex sorted = facet;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("repeated vertex in facet on line " + std::to_string(line_no), pos);
      facets.push_back(std::move(facet));
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (facets.empty()) throw ParseError("no facets found", 0);
  return from_facets(facets);
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[static_cast<std::size_t>(dim)];
}

long SimplicialComplex::index_of(int dim, const Simplex& s) const {
  const auto& level = simplices(dim);
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return -1;
  return it - level.begin();
}

std::size_t SimplicialComplex::total_simplices() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

Cochain Cochain::zero(const SimplicialComplex& cx, int dim) { return Cochain{&cx, dim, {}}; }

Cochain Cochain::basis(const SimplicialComplex& cx, const Simplex& s) {
  const int dim = static_cast<int>(s.size()) - 1;
  if (cx.index_of(dim, s) < 0) throw ValidationError("simplex not in complex");
  Cochain x{&cx, dim, {}};
  x.terms.toggle(s);
  return x;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (o.terms.empty()) return *this;
  if (terms.empty()) {
    *this = o;
    return *this;
  }
  if (complex != o.complex || dim != o.dim)
    throw ValidationError("cannot add cochains of different dimension or complex");
  terms += o.terms;
  return *this;
}

std::string to_string(const Cochain& x) {
  if (x.terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < x.terms.size(); ++i) {
    if (i) s += " + ";
    s += '(';
    const auto& t = x.terms.terms()[i];
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(t[j]);
    }
    s += ')';
  }
  return s;
}

Cochain coboundary(const Cochain& x) {
  if (x.complex == nullptr) return x;
  const auto& cx = *x.complex;
  Cochain out = Cochain::zero(cx, x.dim + 1);
  std::vector<Simplex> hits;
  for (const auto& tau : cx.simplices(x.dim + 1)) {
    unsigned acc = 0;
    Simplex face;
    face.reserve(tau.size() - 1);
    for (std::size_t j = 0; j < tau.size(); ++j) {
      face.clear();
      for (std::size_t i = 0; i < tau.size(); ++i)
        if (i != j) face.push_back(tau[i]);
      acc ^= static_cast<unsigned>(x.terms.contains(face));
    }
    if (acc & 1u) hits.push_back(tau);
  }
  out.terms = FormalSum<Simplex>::collapse(std::move(hits));
  return out;
}

namespace {

// coefficient of `u` acting on xs at one target simplex
bool evaluate_at(const Surjection& u, const std::vector<Cochain>& xs, const Simplex& sigma) {
  const int m = static_cast<int>(sigma.size()) - 1;
  const int L = u.length();
  const auto& e = u.entries();
  // nondecreasing cuts 0 <= a_1 <= ... <= a_{L-1} <= m; interval j spans
  // positions a_{j-1}..a_j (a_0 = 0, a_L = m)
  std::vector<int> cuts(static_cast<std::size_t>(L) - 1, 0);
  std::vector<std::vector<int>> positions(xs.size());
  Simplex sub;
  unsigned acc = 0;
  for (;;) {
    bool ok = true;
    for (auto& p : positions) p.clear();
    for (int j = 0; j < L && ok; ++j) {
      const int lo = j == 0 ? 0 : cuts[static_cast<std::size_t>(j) - 1];
      const int hi = j == L - 1 ? m : cuts[static_cast<std::size_t>(j)];
      auto& pos = positions[static_cast<std::size_t>(e[static_cast<std::size_t>(j)]) - 1];
      if (!pos.empty() && pos.back() >= lo) {
        ok = false;  // a position repeats within this value's intervals
        break;
      }
      for (int p = lo; p <= hi; ++p) pos.push_back(p);
    }
    if (ok) {
      unsigned prod = 1;
      for (std::size_t v = 0; v < xs.size() && prod; ++v) {
        sub.clear();
        for (int p : positions[v]) sub.push_back(sigma[static_cast<std::size_t>(p)]);
        if (static_cast<int>(sub.size()) - 1 != xs[v].dim || !xs[v].terms.contains(sub)) prod = 0;
      }
      acc ^= prod;
    }
    // advance nondecreasing odometer over [0, m]
    int k = static_cast<int>(cuts.size()) - 1;
    while (k >= 0 && cuts[static_cast<std::size_t>(k)] == m) --k;
    if (k < 0) break;
    const int base = ++cuts[static_cast<std::size_t>(k)];
    for (std::size_t j = static_cast<std::size_t>(k) + 1; j < cuts.size(); ++j) cuts[j] = base;
  }
  return acc & 1u;
}

}  // namespace

Cochain evaluate(const Surjection& u, const std::vector<Cochain>& xs) {
  if (xs.empty()) throw ValidationError("evaluate needs at least one cochain");
  if (u.arity() != static_cast<int>(xs.size()))
    throw ValidationError("arity does not match the number of cochains");
  const SimplicialComplex* cx = xs.front().complex;
  int total_dim = 0;
  for (const auto& x : xs) {
    if (x.complex != cx) throw ValidationError("cochains live on different complexes");
    total_dim += x.dim;
  }
  const int target = total_dim - u.degree();
  Cochain out = Cochain::zero(*cx, target);
  if (target < 0) return out;
  std::vector<Simplex> hits;
  for (const auto& sigma : cx->simplices(target))
    if (evaluate_at(u, xs, sigma)) hits.push_back(sigma);
  out.terms = FormalSum<Simplex>::collapse(std::move(hits));
  return out;
}

Cochain evaluate(const SurjChain& u, const std::vector<Cochain>& xs) {
  if (u.zero()) {
    return xs.empty() ? Cochain{} : Cochain::zero(*xs.front().complex, 0);
  }
  if (!u.homogeneous_degree())
    throw ValidationError("evaluate needs a homogeneous chain");
  Cochain acc;
  bool first = true;
  for (const auto& t : u.terms().terms()) {
    Cochain part = evaluate(t, xs);
    if (first) {
      acc = std::move(part);
      first = false;
    } else {
      acc.terms += part.terms;
    }
  }
  return acc;
}

Cochain cup_i(const Cochain& x, const Cochain& y, int i) {
  if (i < 0) throw ValidationError("cup_i requires i >= 0");
  if (x.complex != y.complex) throw ValidationError("cochains live on different complexes");
  return evaluate(cup_string(i), {x, y});
}

CohomologyBasis::CohomologyBasis(const SimplicialComplex& cx, int dim)
    : cx_(&cx), dim_(dim), span_(0, 0), image_rank_(0) {
  const auto& cells = cx.simplices(dim);
  const int ncells = static_cast<int>(cells.size());

  // coboundary matrix d_dim : C^dim -> C^{dim+1}
  const auto& up = cx.simplices(dim + 1);
  BitMatrix d_up(static_cast<int>(up.size()), ncells);
  for (int c = 0; c < ncells; ++c) {
    Cochain dx = coboundary(Cochain::basis(cx, cells[static_cast<std::size_t>(c)]));
    for (const auto& t : dx.terms.terms()) d_up.set(static_cast<int>(cx.index_of(dim + 1, t)), c, true);
  }
  auto zk = rank_and_kernel(d_up);

  // image basis of d_{dim-1} inside C^dim
  std::vector<BitVec> image;
  if (dim >= 1) {
    const auto& down = cx.simplices(dim - 1);
    for (const auto& s : down) {
      Cochain dx = coboundary(Cochain::basis(cx, s));
      BitVec v(static_cast<std::size_t>(ncells), 0);
      for (const auto& t : dx.terms.terms()) v[static_cast<std::size_t>(cx.index_of(dim, t))] = 1;
      image.push_back(std::move(v));
    }
  }

  // greedy quotient basis: seed elimination with the image, then adjoin
  // kernel vectors that add a new pivot
  std::vector<BitVec> rows;        // reduced spanning rows
  std::vector<int> pivots;
  auto reduce = [&](BitVec v) -> BitVec {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (v[static_cast<std::size_t>(pivots[r])]) {
        for (int c = 0; c < ncells; ++c) v[static_cast<std::size_t>(c)] ^= rows[r][static_cast<std::size_t>(c)];
      }
    return v;
  };
  auto insert = [&](const BitVec& v) -> bool {
    BitVec w = reduce(v);
    for (int c = 0; c < ncells; ++c)
      if (w[static_cast<std::size_t>(c)]) {
        rows.push_back(w);
        pivots.push_back(c);
        return true;
      }
    return false;
  };
  std::vector<BitVec> span_cols;
  for (const auto& v : image)
    if (insert(v)) span_cols.push_back(v);
  image_rank_ = static_cast<int>(span_cols.size());
  for (const auto& v : zk.kernel) {
    if (insert(v)) {
      span_cols.push_back(v);
      CohomologyClass cls;
      cls.dim = dim;
      cls.representative = Cochain::zero(cx, dim);
      std::vector<Simplex> ts;
      for (int c = 0; c < ncells; ++c)
        if (v[static_cast<std::size_t>(c)]) ts.push_back(cells[static_cast<std::size_t>(c)]);
      cls.representative.terms = FormalSum<Simplex>::collapse(std::move(ts));
      classes_.push_back(std::move(cls));
    }
  }
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    classes_[i].coords.assign(classes_.size(), 0);
    classes_[i].coords[i] = 1;
  }
  // columns: image part then representatives
  span_ = BitMatrix(ncells, static_cast<int>(span_cols.size()));
  for (int c = 0; c < static_cast<int>(span_cols.size()); ++c)
    for (int r = 0; r < ncells; ++r)
      if (span_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]) span_.set(r, c, true);
}

BitVec CohomologyBasis::coordinates_of(const Cochain& cocycle) const {
  if (cocycle.complex != cx_ || (!cocycle.is_zero() && cocycle.dim != dim_))
    throw ValidationError("cocycle has the wrong dimension or complex");
  if (!coboundary(cocycle).is_zero()) throw ValidationError("cochain is not a cocycle");
  const auto& cells = cx_->simplices(dim_);
  BitVec v(cells.size(), 0);
  for (const auto& t : cocycle.terms.terms())
    v[static_cast<std::size_t>(cx_->index_of(dim_, t))] = 1;
  auto sol = solve_membership(span_, v);
  if (!sol) throw ValidationError("cocycle is outside the computed span");
  BitVec coords(classes_.size(), 0);
  for (std::size_t i = 0; i < classes_.size(); ++i)
    coords[i] = (*sol)[static_cast<std::size_t>(image_rank_) + i];
  return coords;
}

std::vector<CohomologyClass> cohomology(const SimplicialComplex& cx, int dim) {
  return CohomologyBasis(cx, dim).classes();
}

CohomologyClass steenrod_square(const SimplicialComplex& cx, const CohomologyClass& c, int k,
                                int perturbation_trials) {
  const int n = c.dim;
  if (k < 0 || k > n) throw ValidationError("steenrod_square requires 0 <= k <= dim");
  CohomologyBasis target(cx, n + k);
  Cochain y = cup_i(c.representative, c.representative, n - k);
  BitVec coords = target.coordinates_of(y);

  // representative independence under coboundary perturbations
  std::mt19937 rng(911);
  for (int t = 0; t < perturbation_trials && n >= 1; ++t) {
    Cochain rep = c.representative;
    rep += coboundary(random_cochain(cx, n - 1, rng));
    Cochain y2 = cup_i(rep, rep, n - k);
    if (target.coordinates_of(y2) != coords)
      throw std::logic_error("steenrod square depends on the representative");
  }

  CohomologyClass out;
  out.dim = n + k;
  out.representative = std::move(y);
  out.coords = std::move(coords);
  return out;
}

Cochain random_cochain(const SimplicialComplex& cx, int dim, std::mt19937& rng) {
  Cochain x = Cochain::zero(cx, dim);
  std::vector<Simplex> picked;
  for (const auto& s : cx.simplices(dim))
    if (rng() & 1u) picked.push_back(s);
  x.terms = FormalSum<Simplex>::collapse(std::move(picked));
  return x;
}

CheckReport check_steenrod_coboundary(const SimplicialComplex& cx, int i, int trials,
                                      unsigned seed) {
  CheckReport r;
  r.name = "STEENROD-COBOUNDARY";
  r.params = "i=" + std::to_string(i) + " trials=" + std::to_string(trials);
  if (i < 0) throw ValidationError("check_steenrod_coboundary requires i >= 0");
  std::mt19937 rng(seed);
  const int top = cx.top_dim();
  r.pass = true;
  for (int t = 0; t < trials; ++t) {
    const int dx = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
    const int dy = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
    Cochain x = random_cochain(cx, dx, rng);
    Cochain y = random_cochain(cx, dy, rng);
    Cochain lhs = coboundary(cup_i(x, y, i));
    lhs += cup_i(coboundary(x), y, i);
    lhs += cup_i(x, coboundary(y), i);
    if (i >= 1) {
      lhs += cup_i(x, y, i - 1);
      lhs += cup_i(y, x, i - 1);
    }
    if (!lhs.is_zero()) {
      r.pass = false;
      r.lhs = to_string(lhs);
      r.rhs = "0";
      r.difference = r.lhs;
      r.stats = "failed_trial=" + std::to_string(t) + " dims=(" + std::to_string(dx) + "," +
                std::to_string(dy) + ")";
      break;
    }
  }
  if (r.pass) r.stats = "trials=" + std::to_string(trials);
  return r;
}

}  // namespace chi
