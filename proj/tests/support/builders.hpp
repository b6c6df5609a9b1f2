#pragma once

#include <array>
#include <initializer_list>
#include <vector>

#include "sgconic/conic.hpp"
#include "sgconic/point_config.hpp"
#include "support/reference.hpp"

namespace testing_support {

using sgconic::PointConfig;
using sgconic::ProjPoint;
using sgconic::Rational;

inline std::vector<ProjPoint<Rational>> pts_q(std::initializer_list<std::array<long, 3>> xs) {
  std::vector<ProjPoint<Rational>> out;
  for (const auto& x : xs) out.push_back(sgconic::point_q(x[0], x[1], x[2]));
  return out;
}

inline PointConfig<Rational> cfg_q(std::initializer_list<std::array<long, 3>> xs) {
  return PointConfig<Rational>(pts_q(xs));
}

inline ref::V3 to_ref(const ProjPoint<Rational>& p) { return {p[0], p[1], p[2]}; }

inline std::vector<ref::V3> to_ref(std::span<const ProjPoint<Rational>> pts) {
  std::vector<ref::V3> out;
  for (const auto& p : pts) out.push_back(to_ref(p));
  return out;
}

inline ProjPoint<Rational> from_ref(const ref::V3& v) { return ProjPoint<Rational>(v); }

/// n distinct random points with coordinates in [-bound, bound].
inline std::vector<ProjPoint<Rational>> random_points(ref::Gen& g, std::size_t n, long bound) {
  std::vector<ProjPoint<Rational>> out;
  while (out.size() < n) {
    auto p = from_ref(g.point(bound));
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

inline std::array<ref::Q, 6> coeffs_ref(const sgconic::Conic<Rational>& c) {
  std::array<ref::Q, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = c[i];
  return out;
}

}  // namespace testing_support
