#include "chi/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace chi {

Surjection AdmissibleTable::flatten() const {
  std::vector<int> s;
  for (const auto& row : rows) s.insert(s.end(), row.begin(), row.end());
  if (!valid_surjection_string(s))
    throw std::logic_error("admissible table flattened to an invalid string");
  return Surjection(std::move(s));
}

std::string to_string(const AdmissibleTable& t) {
  std::string s = "(";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) s += "; ";
    for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(t.rows[r][i]);
    }
  }
  s += ')';
  return s;
}

namespace {

// Builds the rows determined by one emission profile.
AdmissibleTable build_table(int k, int p, int q, const std::vector<int>& emission) {
  AdmissibleTable t;
  t.k = k;
  t.p = p;
  t.q = q;
  t.emission = emission;
  t.rows.push_back({1});
  int last_a = 1, last_b = 0;
  for (int r = 2; r <= k + 3; ++r) {
    const int tr = emission[static_cast<std::size_t>(r - 2)];
    const bool b_row = (r % 2 == 0);
    std::vector<int> row;
    if (r == 2) {
      // no restart: the first B value opens the row
      row.push_back(p + 1);
      for (int s = 2; s <= tr; ++s) {
        row.push_back(last_a);
        row.push_back(p + s);
      }
      last_b = p + tr;
    } else if (b_row) {
      row.push_back(last_b);
      for (int s = 1; s <= tr; ++s) {
        row.push_back(last_a);
        row.push_back(last_b + s);
      }
      last_b += tr;
    } else {
      row.push_back(last_a);
      for (int s = 1; s <= tr; ++s) {
        row.push_back(last_b);
        row.push_back(last_a + s);
      }
      last_a += tr;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

// Enumerates emission profiles: t_2 >= 1, later rows >= 0, the final row 0,
// with B rows summing to q and A rows to p-1.
void enumerate_profiles(int k, int p, int q, std::vector<std::vector<int>>& out) {
  const int nrows = k + 2;  // rows 2..k+3
  std::vector<int> prof(static_cast<std::size_t>(nrows), 0);
  auto rec = [&](auto&& self, int idx, int rem_b, int rem_a) -> void {
    if (idx == nrows) {
      if (rem_b == 0 && rem_a == 0) out.push_back(prof);
      return;
    }
    const int row = idx + 2;
    const bool b_row = (row % 2 == 0);
    const bool last = (row == k + 3);
    const int rem = b_row ? rem_b : rem_a;
    const int lo = (row == 2) ? 1 : 0;
    const int hi = last ? 0 : rem;
    for (int t = lo; t <= hi; ++t) {
      prof[static_cast<std::size_t>(idx)] = t;
      self(self, idx + 1, rem_b - (b_row ? t : 0), rem_a - (b_row ? 0 : t));
    }
  };
  if (q >= 1 && p >= 1) rec(rec, 0, q, p - 1);
}

}  // namespace

std::vector<AdmissibleTable> admissible_tables(int k, int p, int q) {
  std::vector<AdmissibleTable> tables;
  if (k < 0 || p < 1 || q < 1) return tables;
  std::vector<std::vector<int>> profiles;
  enumerate_profiles(k, p, q, profiles);
  tables.reserve(profiles.size());
  for (const auto& prof : profiles) tables.push_back(build_table(k, p, q, prof));
  std::sort(tables.begin(), tables.end(), [](const AdmissibleTable& a, const AdmissibleTable& b) {
    return a.flatten() < b.flatten();
  });
  return tables;
}

GeneratorElement generator(int k, int p, int q) {
  GeneratorElement g;
  g.k = k;
  g.p = p;
  g.q = q;
  g.tables = admissible_tables(k, p, q);
  std::vector<Surjection> terms;
  terms.reserve(g.tables.size());
  for (const auto& t : g.tables) terms.push_back(t.flatten());
  auto sum = FormalSum<Surjection>::collapse(std::move(terms));
  if (sum.size() != g.tables.size())
    throw std::logic_error("admissible tables produced colliding strings");
  g.chain = SurjChain(p + q, std::move(sum));
  return g;
}

SurjChain e1_closed(int p, int q) {
  if (p < 1 || q < 1) throw ValidationError("e1_closed requires p,q >= 1");
  std::vector<int> s;
  s.push_back(1);
  s.push_back(p + 1);
  for (int j = 2; j <= q; ++j) {
    s.push_back(1);
    s.push_back(p + j);
  }
  s.push_back(1);
  for (int j = 2; j <= p; ++j) {
    s.push_back(p + q);
    s.push_back(j);
  }
  s.push_back(p + q);
  return SurjChain(Surjection(std::move(s)));
}

SurjChain e2_closed(int p, int q) {
  if (p < 1 || q < 1) throw ValidationError("e2_closed requires p,q >= 1");
  std::vector<std::vector<int>> strings;
  for (int j = 0; j < q; ++j) {
    std::vector<int> s;
    s.push_back(1);
    s.push_back(p + 1);
    for (int t = 2; t <= j + 1; ++t) {
      s.push_back(1);
      s.push_back(p + t);
    }
    s.push_back(1);
    for (int t = 2; t <= p; ++t) {
      s.push_back(p + j + 1);
      s.push_back(t);
    }
    s.push_back(p + j + 1);
    for (int t = p + j + 2; t <= p + q; ++t) {
      s.push_back(p);
      s.push_back(t);
    }
    s.push_back(p);
    strings.push_back(std::move(s));
  }
  return make_chain(strings);
}

Surjection cup_string(int i) {
  if (i < 0) throw ValidationError("cup_string requires i >= 0");
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(i) + 2);
  for (int j = 0; j < i + 2; ++j) s.push_back(j % 2 == 0 ? 1 : 2);
  return Surjection(std::move(s));
}

std::pair<Surjection, Surjection> g_elements() {
  return {Surjection({1, 2, 1, 3, 1, 3, 2}), Surjection({1, 2, 3, 2, 3, 1, 3})};
}

}  // namespace chi
