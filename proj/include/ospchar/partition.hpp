#pragma once

// Integer partitions and the staircase index sets used by bialternant
// determinants. Partitions are stored with trailing zeros stripped, so
// the empty partition has length 0.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospchar {

class Partition {
 public:
  Partition() = default;

  // Validates: entries nonnegative and weakly decreasing (zeros may be
  // interleaved only as a trailing run). Trailing zeros are stripped.
  explicit Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 0)
        throw std::invalid_argument("Partition: negative part");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
  }

  // (r^k): k copies of r. r = 0 or k = 0 gives the empty partition.
  static Partition rectangle(int r, int k) {
    if (r < 0 || k < 0) throw std::invalid_argument("Partition::rectangle: negative argument");
    if (r == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(k), r));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  long weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  // 1-based; parts beyond the length are 0.
  int part(int j) const {
    if (j < 1) throw std::invalid_argument("Partition::part: 1-based index");
    return j <= length() ? parts_[static_cast<std::size_t>(j - 1)] : 0;
  }

  // Drops the first part: (λ₂, λ₃, …). Tail of the empty partition is empty.
  Partition tail() const {
    if (parts_.empty()) return Partition{};
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
  }

  bool operator==(const Partition&) const = default;

  // Weight-major order, ties broken lexicographically descending.
  // Total, deterministic; also the enumeration order of enumerate_bounded.
  bool operator<(const Partition& o) const {
    if (weight() != o.weight()) return weight() < o.weight();
    return o.parts_ < parts_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<int> parts_;
};

// All partitions that fit the (max_len) x (max_part) box, i.e. length <=
// max_len and every part <= max_part. Order: weight ascending, then
// lexicographically descending, e.g. box (2,1) -> [], [1], [1,1].
inline std::vector<Partition> enumerate_bounded(int max_len, int max_part) {
  if (max_len < 0 || max_part < 0)
    throw std::invalid_argument("enumerate_bounded: negative bound");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int slots, int cap) -> void {
    out.emplace_back(Partition(cur));
    if (slots == 0) return;
    for (int p = cap; p >= 1; --p) {
      cur.push_back(p);
      self(self, slots - 1, p);
      cur.pop_back();
    }
  };
  rec(rec, max_len, max_part);
  std::sort(out.begin(), out.end());
  return out;
}

// ((r^k), λ): k parts equal to r in front of λ. Requires λ₁ <= r so the
// result is a partition.
inline Partition prepend_rect(int r, int k, const Partition& lambda) {
  if (r < 0 || k < 0) throw std::invalid_argument("prepend_rect: negative argument");
  if (lambda.part(1) > r)
    throw std::invalid_argument("prepend_rect: first part of lambda exceeds r");
  std::vector<int> parts(static_cast<std::size_t>(k), r);
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(parts));
}

// A set of distinct nonnegative integers, stored ascending.
class IndexSet {
 public:
  explicit IndexSet(std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] < 0) throw std::invalid_argument("IndexSet: negative element");
      if (i > 0 && elems[i] == elems[i - 1])
        throw std::invalid_argument("IndexSet: duplicate element");
    }
    elems_ = std::move(elems);
  }

  const std::vector<int>& elements() const { return elems_; }  // ascending
  std::size_t size() const { return elems_.size(); }
  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<int> elems_;
};

// I_m(λ) = { λ_j + m - j : j = 1..m }. Distinctness is automatic: the map
// j -> λ_j + m - j is strictly decreasing. Requires length(λ) <= m.
inline IndexSet index_set(const Partition& lambda, int m) {
  if (m < 0) throw std::invalid_argument("index_set: negative size");
  if (lambda.length() > m)
    throw std::invalid_argument("index_set: partition longer than requested size");
  std::vector<int> elems;
  elems.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) elems.push_back(lambda.part(j) + m - j);
  return IndexSet(std::move(elems));
}

}  // namespace ospchar
