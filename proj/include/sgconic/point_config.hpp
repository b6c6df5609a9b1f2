#pragma once

#include <algorithm>
#include <span>
#include <variant>
#include <vector>

#include "sgconic/projective.hpp"

namespace sgconic {

/// A finite, nonempty set of distinct projective points. Insertion order is
/// kept; membership queries use a sorted shadow copy.
template <class K>
class PointConfig {
 public:
  explicit PointConfig(std::vector<ProjPoint<K>> pts) : pts_(std::move(pts)), sorted_(pts_) {
    if (pts_.empty()) throw DegenerateInput("a point configuration needs at least one point");
    std::sort(sorted_.begin(), sorted_.end());
    auto dup = std::adjacent_find(sorted_.begin(), sorted_.end());
    if (dup != sorted_.end()) throw DegenerateInput("duplicate point " + dup->to_string());
  }

  std::span<const ProjPoint<K>> points() const noexcept { return pts_; }
  std::span<const ProjPoint<K>> sorted() const noexcept { return sorted_; }
  std::size_t size() const noexcept { return pts_.size(); }

  bool contains(const ProjPoint<K>& p) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), p);
  }

  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  operator std::span<const ProjPoint<K>>() const noexcept { return pts_; }

  friend bool operator==(const PointConfig& a, const PointConfig& b) { return a.pts_ == b.pts_; }

 private:
  std::vector<ProjPoint<K>> pts_;
  std::vector<ProjPoint<K>> sorted_;
};

/// A configuration over either supported field, as read from a file.
using AnyConfig = std::variant<PointConfig<Rational>, PointConfig<Fp>>;

}  // namespace sgconic
