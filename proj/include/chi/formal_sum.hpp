#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <vector>

namespace chi {

// Formal sum over GF(2): a sorted, duplicate-free set of basis keys.
// Coefficients are implicit (a key is present iff its coefficient is 1),
// so addition is the symmetric difference and x + x = 0.
template <typename Key>
class FormalSum {
 public:
  FormalSum() = default;

  // Builds a sum from an arbitrary key list, cancelling pairs mod 2.
  static FormalSum collapse(std::vector<Key> keys) {
    std::sort(keys.begin(), keys.end());
    std::vector<Key> out;
    out.reserve(keys.size());
    std::size_t i = 0;
    while (i < keys.size()) {
      std::size_t j = i + 1;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      if ((j - i) % 2 != 0) out.push_back(std::move(keys[i]));
      i = j;
    }
    FormalSum s;
    s.terms_ = std::move(out);
    return s;
  }

  static FormalSum single(Key k) {
    FormalSum s;
    s.terms_.push_back(std::move(k));
    return s;
  }

  void toggle(const Key& k) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k);
    if (it != terms_.end() && *it == k)
      terms_.erase(it);
    else
      terms_.insert(it, k);
  }

  FormalSum& operator+=(const FormalSum& other) {
    std::vector<Key> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(),
                                  other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) {
    a += b;
    return a;
  }

  bool contains(const Key& k) const {
    return std::binary_search(terms_.begin(), terms_.end(), k);
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Key>& terms() const { return terms_; }

  bool operator==(const FormalSum&) const = default;
  auto operator<=>(const FormalSum&) const = default;

 private:
  std::vector<Key> terms_;  // sorted, unique
};

}  // namespace chi
