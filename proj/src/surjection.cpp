#include "chi/surjection.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace chi {

namespace {

// 0 = ok, otherwise the violated rule
enum class Violation { ok, empty, non_positive, adjacent_equal, not_surjective };

Violation classify(const std::vector<int>& e) {
  if (e.empty()) return Violation::empty;
  int maxv = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] <= 0) return Violation::non_positive;
    if (i + 1 < e.size() && e[i] == e[i + 1]) return Violation::adjacent_equal;
    maxv = std::max(maxv, e[i]);
  }
  std::vector<char> seen(static_cast<std::size_t>(maxv) + 1, 0);
  for (int v : e) seen[static_cast<std::size_t>(v)] = 1;
  for (int v = 1; v <= maxv; ++v)
    if (!seen[static_cast<std::size_t>(v)]) return Violation::not_surjective;
  return Violation::ok;
}

}  // namespace

bool valid_surjection_string(const std::vector<int>& entries) {
  return classify(entries) == Violation::ok;
}

Surjection::Surjection(std::vector<int> entries) : entries_(std::move(entries)), arity_(0) {
  switch (classify(entries_)) {
    case Violation::ok:
      break;
    case Violation::empty:
      throw ValidationError("surjection string is empty");
    case Violation::non_positive:
      throw ValidationError("surjection entries must be positive");
    case Violation::adjacent_equal:
      throw ValidationError("degenerate surjection: equal adjacent entries");
    case Violation::not_surjective:
      throw ValidationError("string is not surjective onto 1..max");
  }
  arity_ = *std::max_element(entries_.begin(), entries_.end());
}

Surjection unit_surjection() { return Surjection({1}); }

ValuePermutation::ValuePermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw ValidationError("permutation images must be a bijection of 1..n");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

ValuePermutation ValuePermutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return ValuePermutation(std::move(im));
}

ValuePermutation ValuePermutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(a) - 1],
            p.images_[static_cast<std::size_t>(b) - 1]);
  return p;
}

ValuePermutation ValuePermutation::block_swap(int left, int right) {
  std::vector<int> im;
  im.reserve(static_cast<std::size_t>(left + right));
  for (int s = 1; s <= left; ++s) im.push_back(s + right);
  for (int s = 1; s <= right; ++s) im.push_back(s);
  return ValuePermutation(std::move(im));
}

SurjChain::SurjChain(int arity, FormalSum<Surjection> sum) : arity_(arity), sum_(std::move(sum)) {
  for (const auto& t : sum_.terms())
    if (t.arity() != arity_) throw ValidationError("chain terms must share one arity");
}

std::optional<int> SurjChain::homogeneous_degree() const {
  if (sum_.empty()) return std::nullopt;
  const int d = sum_.terms().front().degree();
  for (const auto& t : sum_.terms())
    if (t.degree() != d) return std::nullopt;
  return d;
}

SurjChain& SurjChain::operator+=(const SurjChain& o) {
  if (o.sum_.empty()) return *this;
  if (sum_.empty()) {
    arity_ = o.arity_;
    sum_ = o.sum_;
    return *this;
  }
  if (arity_ != o.arity_) throw ValidationError("cannot add chains of different arity");
  sum_ += o.sum_;
  return *this;
}

SurjChain make_chain(const std::vector<std::vector<int>>& strings) {
  if (strings.empty()) return SurjChain();
  std::vector<Surjection> terms;
  terms.reserve(strings.size());
  for (const auto& s : strings) terms.emplace_back(s);
  const int arity = terms.front().arity();
  const int degree = terms.front().degree();
  for (const auto& t : terms) {
    if (t.arity() != arity) throw ValidationError("chain terms must share one arity");
    if (t.degree() != degree) throw ValidationError("chain terms must share one degree");
  }
  return SurjChain(arity, FormalSum<Surjection>::collapse(std::move(terms)));
}

SurjChain differential(const Surjection& u) {
  const auto& e = u.entries();
  std::vector<Surjection> out;
  std::vector<int> del;
  del.reserve(e.size() - 1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    del.clear();
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != i) del.push_back(e[j]);
    // deletions must stay surjective onto 1..arity and nondegenerate
    if (!valid_surjection_string(del)) continue;
    if (*std::max_element(del.begin(), del.end()) != u.arity()) continue;
    out.emplace_back(del);
  }
  return SurjChain(u.arity(), FormalSum<Surjection>::collapse(std::move(out)));
}

SurjChain differential(const SurjChain& c) {
  SurjChain acc(c.arity());
  for (const auto& t : c.terms().terms()) acc += differential(t);
  return acc;
}

SurjChain compose(const Surjection& u, int slot, const Surjection& v) {
  if (slot < 1 || slot > u.arity())
    throw ValidationError("composition slot out of range");
  const int av = v.arity();
  const int shift = av - 1;
  const int out_arity = u.arity() + shift;

  std::vector<int> uu;  // u with values > slot shifted up
  uu.reserve(u.entries().size());
  std::vector<std::size_t> occ;  // positions of `slot` in uu
  for (std::size_t i = 0; i < u.entries().size(); ++i) {
    const int e = u.entries()[i];
    uu.push_back(e > slot ? e + shift : e);
    if (e == slot) occ.push_back(i);
  }
  std::vector<int> vv;  // v relabelled into slot..slot+av-1
  vv.reserve(v.entries().size());
  for (int e : v.entries()) vv.push_back(e + slot - 1);

  const int r = static_cast<int>(occ.size());
  const int lv = v.length();

  std::vector<Surjection> out;
  // nondecreasing cut positions 1 <= a_1 <= ... <= a_{r-1} <= lv;
  // block j covers positions a_{j-1}..a_j inclusive (a_0 = 1, a_r = lv)
  std::vector<int> cuts(static_cast<std::size_t>(r - 1), 1);
  std::vector<int> result;
  for (;;) {
    result.clear();
    std::size_t next_occ = 0;
    for (std::size_t i = 0; i < uu.size(); ++i) {
      if (next_occ < occ.size() && occ[next_occ] == i) {
        const int lo = next_occ == 0 ? 1 : cuts[next_occ - 1];
        const int hi = next_occ + 1 == occ.size() ? lv : cuts[next_occ];
        for (int p = lo; p <= hi; ++p) result.push_back(vv[static_cast<std::size_t>(p) - 1]);
        ++next_occ;
      } else {
        result.push_back(uu[i]);
      }
    }
    if (valid_surjection_string(result)) out.emplace_back(result);

    // advance the odometer of nondecreasing cuts
    int k = static_cast<int>(cuts.size()) - 1;
    while (k >= 0 && cuts[static_cast<std::size_t>(k)] == lv) --k;
    if (k < 0) break;
    const int base = ++cuts[static_cast<std::size_t>(k)];
    for (std::size_t j = static_cast<std::size_t>(k) + 1; j < cuts.size(); ++j) cuts[j] = base;
  }
  return SurjChain(out_arity, FormalSum<Surjection>::collapse(std::move(out)));
}

SurjChain compose(const SurjChain& u, int slot, const SurjChain& v) {
  SurjChain acc(u.arity() + v.arity() - 1);
  if (u.zero() || v.zero()) return acc;
  for (const auto& a : u.terms().terms())
    for (const auto& b : v.terms().terms()) acc += compose(a, slot, b);
  return acc;
}

Surjection relabel(const Surjection& u, const ValuePermutation& sigma) {
  if (sigma.size() != u.arity())
    throw ValidationError("permutation size must equal chain arity");
  std::vector<int> e;
  e.reserve(u.entries().size());
  for (int v : u.entries()) e.push_back(sigma.apply(v));
  return Surjection(std::move(e));
}

SurjChain relabel(const SurjChain& c, const ValuePermutation& sigma) {
  if (c.zero()) return c;
  if (sigma.size() != c.arity())
    throw ValidationError("permutation size must equal chain arity");
  std::vector<Surjection> out;
  out.reserve(c.terms().size());
  for (const auto& t : c.terms().terms()) out.push_back(relabel(t, sigma));
  return SurjChain(c.arity(), FormalSum<Surjection>::collapse(std::move(out)));
}

int complexity(const Surjection& u) {
  int best = 0;
  for (int i = 1; i <= u.arity(); ++i)
    for (int j = i + 1; j <= u.arity(); ++j) {
      int blocks = 0, last = 0;
      for (int e : u.entries()) {
        if (e != i && e != j) continue;
        if (e != last) ++blocks;
        last = e;
      }
      best = std::max(best, blocks - 1);
    }
  return best;
}

std::string to_string(const Surjection& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.entries().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(u.entries()[i]);
  }
  s += ')';
  return s;
}

std::string to_string(const SurjChain& c) {
  if (c.zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c.terms().size(); ++i) {
    if (i) s += " + ";
    s += to_string(c.terms().terms()[i]);
  }
  return s;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  void expect(char c) {
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    int value = 0;
    for (std::size_t i = start; i < pos; ++i) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("integer too large", start);
    }
    return value;
  }
};

}  // namespace

SurjChain parse_chain(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.peek() == '0') {
    ++c.pos;
    if (!c.at_end()) throw ParseError("trailing input after '0'", c.pos);
    return SurjChain();
  }
  std::vector<std::vector<int>> strings;
  for (;;) {
    c.skip_ws();
    const std::size_t term_start = c.pos;
    c.expect('(');
    std::vector<int> entries;
    entries.push_back(c.integer());
    for (;;) {
      c.skip_ws();
      if (c.peek() == ',') {
        ++c.pos;
        entries.push_back(c.integer());
      } else {
        break;
      }
    }
    c.expect(')');
    if (!valid_surjection_string(entries))
      throw ParseError("invalid surjection term", term_start);
    strings.push_back(std::move(entries));
    if (c.at_end()) break;
    c.skip_ws();
    c.expect('+');
  }
  try {
    return make_chain(strings);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace chi
