#pragma once

/**
 * @file incidence.hpp
 * @brief Determined lines of a point set, the t_k spectrum, ordinary lines,
 * and the classical inequalities on t_k.
 *
 * All inequality checks return both sides so equality cases can be
 * asserted directly.
 */

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "sgconic/point_config.hpp"
#include "sgconic/projective.hpp"

namespace sgconic {

template <class K>
struct DeterminedLine {
  ProjLine<K> line;
  std::vector<ProjPoint<K>> points;  // canonical order
};

template <class K>
struct IncidenceProfile {
  std::vector<DeterminedLine<K>> lines;  // ordered by line
  std::map<std::size_t, std::size_t> tk;
  std::size_t s = 0;

  std::size_t t(std::size_t k) const {
    auto it = tk.find(k);
    return it == tk.end() ? 0 : it->second;
  }

  bool all_collinear() const { return t(s) == 1; }
};

inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

/// Sum_k C(k,2) t_k == C(s,2): every pair lies on exactly one determined line.
template <class K>
bool pair_count_identity_holds(const IncidenceProfile<K>& prof) {
  std::int64_t lhs = 0;
  for (auto [k, t] : prof.tk) lhs += choose2(static_cast<std::int64_t>(k)) * static_cast<std::int64_t>(t);
  return lhs == choose2(static_cast<std::int64_t>(prof.s));
}

template <class K>
IncidenceProfile<K> incidence_profile(std::span<const ProjPoint<K>> pts) {
  if (pts.size() < 2) throw DegenerateInput("incidence_profile needs at least 2 points");
  std::map<ProjLine<K>, std::set<std::size_t>> by_line;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto& members = by_line.try_emplace(line_through(pts[i], pts[j])).first->second;
      members.insert(i);
      members.insert(j);
    }
  }
  IncidenceProfile<K> prof;
  prof.s = pts.size();
  prof.lines.reserve(by_line.size());
  for (auto& [line, idx] : by_line) {
    DeterminedLine<K> dl{line, {}};
    for (auto i : idx) dl.points.push_back(pts[i]);
    std::sort(dl.points.begin(), dl.points.end());
    ++prof.tk[dl.points.size()];
    prof.lines.push_back(std::move(dl));
  }
  if (!pair_count_identity_holds(prof))
    throw InternalInvariantViolation("pair-counting identity failed for an incidence profile");
  return prof;
}

template <class K>
IncidenceProfile<K> incidence_profile(const PointConfig<K>& cfg) {
  return incidence_profile(cfg.points());
}

template <class K>
struct OrdinaryLine {
  ProjLine<K> line;
  std::pair<ProjPoint<K>, ProjPoint<K>> points;
};

template <class K>
std::vector<OrdinaryLine<K>> ordinary_lines(const IncidenceProfile<K>& prof) {
  std::vector<OrdinaryLine<K>> out;
  for (const auto& dl : prof.lines)
    if (dl.points.size() == 2) out.push_back({dl.line, {dl.points[0], dl.points[1]}});
  return out;
}

template <class K>
std::vector<OrdinaryLine<K>> ordinary_lines(std::span<const ProjPoint<K>> pts) {
  return ordinary_lines(incidence_profile(pts));
}

/// True iff all points lie on one line (vacuously for fewer than 3 points).
template <class K>
bool all_collinear(std::span<const ProjPoint<K>> pts) {
  if (pts.size() < 3) return true;
  std::size_t j = 1;
  while (j < pts.size() && pts[j] == pts[0]) ++j;
  if (j == pts.size()) return true;
  for (std::size_t k = j + 1; k < pts.size(); ++k)
    if (!collinear(pts[0], pts[j], pts[k])) return false;
  return true;
}

struct InequalityReport {
  bool holds;
  std::int64_t lhs;
  std::int64_t rhs;
};

/// t_2 >= 3 + sum_{k>=4} (k-3) t_k. Valid for real non-collinear sets.
template <class K>
InequalityReport melchior_check(const IncidenceProfile<K>& prof) {
  if (prof.all_collinear()) throw PreconditionViolated("Melchior inequality needs non-collinear points");
  std::int64_t rhs = 3;
  for (auto [k, t] : prof.tk)
    if (k >= 4) rhs += static_cast<std::int64_t>(k - 3) * static_cast<std::int64_t>(t);
  const auto lhs = static_cast<std::int64_t>(prof.t(2));
  return {lhs >= rhs, lhs, rhs};
}

/// t_2 + t_3 >= s + sum_{k>=5} (k-4) t_k, unless all or all but one point
/// are collinear.
template <class K>
InequalityReport dual_hirzebruch_check(const IncidenceProfile<K>& prof) {
  if (prof.all_collinear()) throw PreconditionViolated("dual Hirzebruch inequality needs non-collinear points");
  if (prof.s >= 2 && prof.t(prof.s - 1) != 0)
    throw PreconditionViolated("dual Hirzebruch inequality excludes all-but-one collinear sets");
  std::int64_t rhs = static_cast<std::int64_t>(prof.s);
  for (auto [k, t] : prof.tk)
    if (k >= 5) rhs += static_cast<std::int64_t>(k - 4) * static_cast<std::int64_t>(t);
  const auto lhs = static_cast<std::int64_t>(prof.t(2) + prof.t(3));
  return {lhs >= rhs, lhs, rhs};
}

/// t_k spectrum of a line arrangement: points where exactly k lines meet.
template <class K>
std::map<std::size_t, std::size_t> arrangement_spectrum(std::span<const ProjLine<K>> lines) {
  std::map<ProjPoint<K>, std::set<std::size_t>> by_point;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto& members = by_point.try_emplace(meet(lines[i], lines[j])).first->second;
      members.insert(i);
      members.insert(j);
    }
  std::map<std::size_t, std::size_t> tk;
  for (const auto& [p, idx] : by_point) ++tk[idx.size()];
  return tk;
}

/// t_2 + t_3 >= d + sum_{k>=5} (k-4) t_k for an arrangement of d >= 4 lines
/// with t_d = t_{d-1} = 0.
template <class K>
InequalityReport primal_hirzebruch_check(std::span<const ProjLine<K>> lines) {
  const std::size_t d = lines.size();
  if (d < 4) throw PreconditionViolated("Hirzebruch inequality needs at least 4 lines");
  std::set<ProjLine<K>> uniq(lines.begin(), lines.end());
  if (uniq.size() != d) throw PreconditionViolated("Hirzebruch inequality needs distinct lines");
  auto tk = arrangement_spectrum(lines);
  if (tk.count(d) || tk.count(d - 1))
    throw PreconditionViolated("Hirzebruch inequality needs t_d = t_(d-1) = 0");
  std::int64_t rhs = static_cast<std::int64_t>(d);
  for (auto [k, t] : tk)
    if (k >= 5) rhs += static_cast<std::int64_t>(k - 4) * static_cast<std::int64_t>(t);
  auto get = [&](std::size_t k) { return tk.count(k) ? static_cast<std::int64_t>(tk.at(k)) : 0; };
  const std::int64_t lhs = get(2) + get(3);
  return {lhs >= rhs, lhs, rhs};
}

/// Ordinary-line count against 3s/7 (s = 7) or 6s/13 (otherwise). The bound
/// is kept as an exact fraction.
struct OrdinaryBoundReport {
  std::size_t count;
  Rational bound;
  bool holds;
};

template <class K>
OrdinaryBoundReport ordinary_line_bound_check(const IncidenceProfile<K>& prof) {
  if (prof.all_collinear()) throw PreconditionViolated("ordinary-line bound needs non-collinear points");
  const long s = static_cast<long>(prof.s);
  Rational bound = s == 7 ? Rational(3 * s, 7) : Rational(6 * s, 13);
  bound.canonicalize();
  const std::size_t count = prof.t(2);
  return {count, bound, Rational(static_cast<long>(count)) >= bound};
}

template <class K>
OrdinaryBoundReport ordinary_line_bound_check(std::span<const ProjPoint<K>> pts) {
  return ordinary_line_bound_check(incidence_profile(pts));
}

}  // namespace sgconic
