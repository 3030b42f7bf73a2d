#include "chi/bar.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace chi {

int BarWord::total_degree() const {
  int d = 0;
  for (const auto& l : letters) d += static_cast<int>(l.size());  // (dim) + 1
  return d;
}

std::string to_string(const BarWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += '|';
    s += '(';
    for (std::size_t j = 0; j < w.letters[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(w.letters[i][j]);
    }
    s += ')';
  }
  s += ']';
  return s;
}

BarTruncation::BarTruncation(const SimplicialComplex& cx, int max_len, int max_degree)
    : cx_(&cx), max_len_(max_len), max_degree_(max_degree) {
  std::vector<Simplex> letters;
  for (int d = 0; d <= cx.top_dim(); ++d)
    for (const auto& s : cx.simplices(d)) letters.push_back(s);
  std::vector<BarWord> frontier{BarWord{}};
  basis_.push_back(BarWord{});
  for (int len = 1; len <= max_len_; ++len) {
    std::vector<BarWord> next;
    for (const auto& w : frontier)
      for (const auto& l : letters) {
        BarWord z = w;
        z.letters.push_back(l);
        if (max_degree_ >= 0 && z.total_degree() > max_degree_) continue;
        next.push_back(std::move(z));
      }
    basis_.insert(basis_.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(basis_.begin(), basis_.end());
}

bool BarTruncation::contains(const BarWord& w) const {
  if (w.length() > max_len_) return false;
  if (max_degree_ >= 0 && w.total_degree() > max_degree_) return false;
  for (const auto& l : w.letters)
    if (cx_->index_of(static_cast<int>(l.size()) - 1, l) < 0) return false;
  return true;
}

namespace {

// words obtained by replacing letter `idx` of `w` with each term of `x`;
// an empty cochain deletes the whole term
void splice_letter(const BarWord& w, std::size_t idx, std::size_t span, const Cochain& x,
                   std::vector<BarWord>& out) {
  for (const auto& t : x.terms.terms()) {
    BarWord z;
    z.letters.reserve(w.letters.size() - span + 1);
    z.letters.insert(z.letters.end(), w.letters.begin(), w.letters.begin() + idx);
    z.letters.push_back(t);
    z.letters.insert(z.letters.end(), w.letters.begin() + idx + span, w.letters.end());
    out.push_back(std::move(z));
  }
}

const SurjChain& cached_generator(int k, int m, int n) {
  static std::map<std::tuple<int, int, int>, SurjChain> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(k, m, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, generator(k, m, n).chain).first;
  return it->second;
}

}  // namespace

BarSum bar_diff(const SimplicialComplex& cx, const BarWord& w) {
  std::vector<BarWord> out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    Cochain d = coboundary(Cochain::basis(cx, w.letters[i]));
    splice_letter(w, i, 1, d, out);
  }
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
    Cochain prod = cup_i(Cochain::basis(cx, w.letters[i]),
                         Cochain::basis(cx, w.letters[i + 1]), 0);
    splice_letter(w, i, 2, prod, out);
  }
  return BarSum::collapse(std::move(out));
}

BarSum bar_diff(const SimplicialComplex& cx, const BarSum& s) {
  BarSum acc;
  for (const auto& w : s.terms()) acc += bar_diff(cx, w);
  return acc;
}

Cochain e_map(const SimplicialComplex& cx, int k, const BarWord& alpha, const BarWord& beta) {
  const int m = alpha.length(), n = beta.length();
  if (m == 0 || n == 0) {
    if (k == 0 && m == 1 && n == 0) return Cochain::basis(cx, alpha.letters[0]);
    if (k == 0 && m == 0 && n == 1) return Cochain::basis(cx, beta.letters[0]);
    int dims = 0;
    for (const auto& l : alpha.letters) dims += static_cast<int>(l.size()) - 1;
    for (const auto& l : beta.letters) dims += static_cast<int>(l.size()) - 1;
    return Cochain::zero(cx, dims - (m + n + k - 1));
  }
  if (k == 0 && m > 1) {
    int dims = 0;
    for (const auto& l : alpha.letters) dims += static_cast<int>(l.size()) - 1;
    for (const auto& l : beta.letters) dims += static_cast<int>(l.size()) - 1;
    return Cochain::zero(cx, dims - (m + n - 1));
  }
  const SurjChain& op = cached_generator(k, m, n);
  std::vector<Cochain> xs;
  xs.reserve(static_cast<std::size_t>(m + n));
  int dims = 0;
  for (const auto& l : alpha.letters) {
    xs.push_back(Cochain::basis(cx, l));
    dims += static_cast<int>(l.size()) - 1;
  }
  for (const auto& l : beta.letters) {
    xs.push_back(Cochain::basis(cx, l));
    dims += static_cast<int>(l.size()) - 1;
  }
  if (op.zero()) return Cochain::zero(cx, dims - (m + n + k - 1));
  return evaluate(op, xs);
}

BarPairSum deconcatenations(const BarWord& w) {
  std::vector<std::pair<BarWord, BarWord>> out;
  for (int s = 0; s <= w.length(); ++s) {
    BarWord a, b;
    a.letters.assign(w.letters.begin(), w.letters.begin() + s);
    b.letters.assign(w.letters.begin() + s, w.letters.end());
    out.emplace_back(std::move(a), std::move(b));
  }
  return BarPairSum::collapse(std::move(out));
}

namespace {

BarWord slice(const BarWord& w, int from, int to) {
  BarWord out;
  out.letters.assign(w.letters.begin() + from, w.letters.begin() + to);
  return out;
}

// splits of w into r consecutive possibly-empty blocks
void enumerate_splits(const BarWord& w, int r, std::vector<std::vector<BarWord>>& out) {
  std::vector<int> cuts(static_cast<std::size_t>(r) - 1, 0);
  const int len = w.length();
  for (;;) {
    std::vector<BarWord> blocks;
    blocks.reserve(static_cast<std::size_t>(r));
    int prev = 0;
    for (int j = 0; j < r; ++j) {
      const int end = j + 1 == r ? len : cuts[static_cast<std::size_t>(j)];
      blocks.push_back(slice(w, prev, end));
      prev = end;
    }
    out.push_back(std::move(blocks));
    int k = static_cast<int>(cuts.size()) - 1;
    while (k >= 0 && cuts[static_cast<std::size_t>(k)] == len) --k;
    if (k < 0) break;
    const int base = ++cuts[static_cast<std::size_t>(k)];
    for (std::size_t j = static_cast<std::size_t>(k) + 1; j < cuts.size(); ++j) cuts[j] = base;
  }
}

// compositions of i into r parts >= 0
void enumerate_compositions(int i, int r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    int used = 0;
    for (int v : cur) used += v;
    cur.push_back(i - used);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  int used = 0;
  for (int v : cur) used += v;
  for (int v = 0; v <= i - used; ++v) {
    cur.push_back(v);
    enumerate_compositions(i, r, cur, out);
    cur.pop_back();
  }
}

// expands [c_1|...|c_r] with cochain letters into basis words
void expand_word(const std::vector<Cochain>& cs, std::size_t idx, BarWord& cur,
                 std::vector<BarWord>& out) {
  if (idx == cs.size()) {
    out.push_back(cur);
    return;
  }
  for (const auto& t : cs[idx].terms.terms()) {
    cur.letters.push_back(t);
    expand_word(cs, idx + 1, cur, out);
    cur.letters.pop_back();
  }
}

}  // namespace

CupBarResult cup_bar(const BarTruncation& t, int i, const BarWord& alpha, const BarWord& beta) {
  const auto& cx = t.complex();
  CupBarResult res;
  if (alpha.length() == 0 && beta.length() == 0) {
    // counit coherence: the empty word multiplies to itself, higher products vanish
    if (i == 0) res.words.toggle(BarWord{});
    return res;
  }
  std::vector<BarWord> collected;
  const int rmax = alpha.length() + beta.length();
  for (int r = 1; r <= rmax; ++r) {
    std::vector<std::vector<BarWord>> asplits, bsplits;
    enumerate_splits(alpha, r, asplits);
    enumerate_splits(beta, r, bsplits);
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    enumerate_compositions(i, r, cur, comps);
    for (const auto& as : asplits)
      for (const auto& bs : bsplits)
        for (const auto& is : comps) {
          std::vector<Cochain> letters;
          letters.reserve(static_cast<std::size_t>(r));
          bool dead = false;
          int twist = 0;
          for (int j = 0; j < r && !dead; ++j) {
            const BarWord& a = as[static_cast<std::size_t>(j)];
            const BarWord& b = bs[static_cast<std::size_t>(j)];
            Cochain c = (twist % 2 == 0) ? e_map(cx, is[static_cast<std::size_t>(j)], a, b)
                                         : e_map(cx, is[static_cast<std::size_t>(j)], b, a);
            if (c.is_zero()) {
              dead = true;
              break;
            }
            letters.push_back(std::move(c));
            twist += is[static_cast<std::size_t>(j)];
          }
          if (dead) continue;
          BarWord scratch;
          expand_word(letters, 0, scratch, collected);
        }
  }
  res.words = BarSum::collapse(std::move(collected));
  for (const auto& w : res.words.terms())
    if (!t.contains(w)) {
      res.exact = false;
      break;
    }
  return res;
}

namespace {

std::string trunc_params(const BarTruncation& t) {
  std::string s = "L=" + std::to_string(t.max_len());
  if (t.max_degree() >= 0) s += " D=" + std::to_string(t.max_degree());
  return s;
}

BarSum cup_bar_sum(const BarTruncation& t, int i, const BarSum& a, const BarWord& beta) {
  BarSum acc;
  for (const auto& w : a.terms()) acc += cup_bar(t, i, w, beta).words;
  return acc;
}

BarSum cup_bar_sum_right(const BarTruncation& t, int i, const BarWord& alpha, const BarSum& b) {
  BarSum acc;
  for (const auto& w : b.terms()) acc += cup_bar(t, i, alpha, w).words;
  return acc;
}

}  // namespace

CheckReport check_hopf(const BarTruncation& t) {
  const auto& cx = t.complex();
  CheckReport r;
  r.name = "BAR-HOPF";
  r.params = trunc_params(t);
  r.pass = true;
  std::size_t pair_count = 0, triple_count = 0;

  auto fail = [&](const std::string& what, const std::string& lhs, const std::string& rhs) {
    r.pass = false;
    r.stats = what;
    r.lhs = lhs;
    r.rhs = rhs;
  };

  // unit: mu([], w) = w = mu(w, [])
  for (const auto& w : t.basis()) {
    BarSum left = cup_bar(t, 0, BarWord{}, w).words;
    BarSum right = cup_bar(t, 0, w, BarWord{}).words;
    BarSum expect = BarSum::single(w);
    if (left != expect || right != expect) {
      fail("unit law at " + to_string(w), "", "");
      return r;
    }
  }

  // chain map + coalgebra map on pairs within the exact window
  for (const auto& a : t.basis()) {
    for (const auto& b : t.basis()) {
      if (a.length() + b.length() > t.max_len()) continue;
      ++pair_count;
      BarSum prod = cup_bar(t, 0, a, b).words;
      BarSum lhs = bar_diff(cx, prod);
      BarSum rhs = cup_bar_sum(t, 0, bar_diff(cx, a), b);
      rhs += cup_bar_sum_right(t, 0, a, bar_diff(cx, b));
      if (lhs != rhs) {
        fail("chain map at " + to_string(a) + " * " + to_string(b), "", "");
        return r;
      }
      // deconcatenation of the product vs product of deconcatenations
      BarPairSum dl;
      for (const auto& w : prod.terms()) dl += deconcatenations(w);
      std::vector<std::pair<BarWord, BarWord>> dr;
      const BarPairSum da = deconcatenations(a), db = deconcatenations(b);
      for (const auto& [a1, a2] : da.terms())
        for (const auto& [b1, b2] : db.terms()) {
          BarSum left = cup_bar(t, 0, a1, b1).words;
          BarSum right = cup_bar(t, 0, a2, b2).words;
          for (const auto& l : left.terms())
            for (const auto& rr : right.terms()) dr.emplace_back(l, rr);
        }
      if (dl != BarPairSum::collapse(std::move(dr))) {
        fail("coalgebra map at " + to_string(a) + " * " + to_string(b), "", "");
        return r;
      }
    }
  }

  // associativity on triples within the exact window
  for (const auto& a : t.basis())
    for (const auto& b : t.basis()) {
      if (a.length() + b.length() > t.max_len()) continue;
      BarSum ab = cup_bar(t, 0, a, b).words;
      for (const auto& c : t.basis()) {
        if (a.length() + b.length() + c.length() > t.max_len()) continue;
        ++triple_count;
        BarSum lhs = cup_bar_sum(t, 0, ab, c);
        BarSum bc = cup_bar(t, 0, b, c).words;
        BarSum rhs = cup_bar_sum_right(t, 0, a, bc);
        if (lhs != rhs) {
          fail("associativity at " + to_string(a) + "," + to_string(b) + "," + to_string(c), "", "");
          return r;
        }
      }
    }

  r.stats = "pairs=" + std::to_string(pair_count) + " triples=" + std::to_string(triple_count);
  return r;
}

CheckReport check_steenrod_bar(const BarTruncation& t, int i) {
  const auto& cx = t.complex();
  CheckReport r;
  r.name = "BAR-STEENROD";
  r.params = "i=" + std::to_string(i) + " " + trunc_params(t);
  r.pass = true;
  std::size_t pair_count = 0;

  for (const auto& a : t.basis()) {
    for (const auto& b : t.basis()) {
      if (a.length() + b.length() > t.max_len()) continue;
      ++pair_count;

      // twisting form for the e_map family
      {
        Cochain lhs = coboundary(e_map(cx, i, a, b));
        const BarSum da_ = bar_diff(cx, a), db_ = bar_diff(cx, b);
        for (const auto& w : da_.terms()) lhs += e_map(cx, i, w, b);
        for (const auto& w : db_.terms()) lhs += e_map(cx, i, a, w);
        const BarPairSum da = deconcatenations(a), db = deconcatenations(b);
        for (int k = 0; k <= i; ++k)
          for (const auto& [a1, a2] : da.terms())
            for (const auto& [b1, b2] : db.terms()) {
              Cochain first = e_map(cx, k, a1, b1);
              if (first.is_zero()) continue;
              Cochain second = (k % 2 == 0) ? e_map(cx, i - k, a2, b2) : e_map(cx, i - k, b2, a2);
              if (second.is_zero()) continue;
              lhs += cup_i(first, second, 0);
            }
        Cochain rhs;
        if (i >= 1) {
          rhs = e_map(cx, i - 1, a, b);
          rhs += e_map(cx, i - 1, b, a);
        }
        if (!(lhs == rhs)) {
          r.pass = false;
          r.stats = "twisting form at " + to_string(a) + " , " + to_string(b);
          r.lhs = to_string(lhs);
          r.rhs = to_string(rhs);
          return r;
        }
      }

      // coboundary form for the cup_bar products
      {
        BarSum lhs = bar_diff(cx, cup_bar(t, i, a, b).words);
        lhs += cup_bar_sum(t, i, bar_diff(cx, a), b);
        lhs += cup_bar_sum_right(t, i, a, bar_diff(cx, b));
        if (i >= 1) {
          lhs += cup_bar(t, i - 1, a, b).words;
          lhs += cup_bar(t, i - 1, b, a).words;
        }
        if (!lhs.empty()) {
          r.pass = false;
          r.stats = "product form at " + to_string(a) + " , " + to_string(b);
          return r;
        }
      }
    }
  }
  r.stats = "pairs=" + std::to_string(pair_count);
  return r;
}

CheckReport check_decomposition(const BarTruncation& t, int i) {
  CheckReport r;
  r.name = "BAR-DECOMPOSITION";
  r.params = "i=" + std::to_string(i) + " " + trunc_params(t);
  r.pass = true;
  std::size_t pair_count = 0;

  for (const auto& a : t.basis()) {
    for (const auto& b : t.basis()) {
      if (a.length() + b.length() > t.max_len()) continue;
      ++pair_count;
      BarPairSum lhs;
      const BarSum prod = cup_bar(t, i, a, b).words;
      for (const auto& w : prod.terms()) lhs += deconcatenations(w);
      std::vector<std::pair<BarWord, BarWord>> rhs;
      const BarPairSum da = deconcatenations(a), db = deconcatenations(b);
      for (int k = 0; k <= i; ++k)
        for (const auto& [a1, a2] : da.terms())
          for (const auto& [b1, b2] : db.terms()) {
            BarSum left = cup_bar(t, k, a1, b1).words;
            if (left.empty()) continue;
            BarSum right = (k % 2 == 0) ? cup_bar(t, i - k, a2, b2).words
                                        : cup_bar(t, i - k, b2, a2).words;
            for (const auto& l : left.terms())
              for (const auto& rr : right.terms()) rhs.emplace_back(l, rr);
          }
      if (lhs != BarPairSum::collapse(std::move(rhs))) {
        r.pass = false;
        r.stats = "at " + to_string(a) + " , " + to_string(b);
        return r;
      }
    }
  }
  r.stats = "pairs=" + std::to_string(pair_count);
  return r;
}

}  // namespace chi
