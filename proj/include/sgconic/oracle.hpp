#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth for ordinary curves.
 *
 * Nothing here reuses the elimination in linalg.hpp: the oracle runs its own
 * Gauss-Jordan reduction (pivoting from the last column and the bottom row)
 * so that its verdicts are an independent cross-check of the geometry core
 * and of the finder.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <thread>
#include <vector>

#include "sgconic/conic.hpp"
#include "sgconic/field.hpp"
#include "sgconic/linalg.hpp"
#include "sgconic/projective.hpp"

namespace sgconic::oracle {

namespace detail {

/// Reduced row echelon form, columns scanned right to left, pivot chosen as
/// the lowest unused row. Returns the nullspace basis, normalized.
template <class K>
std::vector<std::vector<K>> gauss_jordan_nullspace(Matrix<K> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<bool> used(rows, false);
  std::vector<std::optional<std::size_t>> pivot_row_of(cols);
  K like{};
  for (std::size_t i = 0; i < rows && is_zero(like); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!is_zero(m(i, j))) {
        like = m(i, j);
        break;
      }

  for (std::size_t c = cols; c-- > 0;) {
    std::optional<std::size_t> piv;
    for (std::size_t r = rows; r-- > 0;)
      if (!used[r] && !is_zero(m(r, c))) {
        piv = r;
        break;
      }
    if (!piv) continue;
    const std::size_t p = *piv;
    used[p] = true;
    pivot_row_of[c] = p;
    const K inv = from_int(1, like) / m(p, c);
    for (std::size_t j = 0; j < cols; ++j) m(p, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == p || is_zero(m(r, c))) continue;
      const K factor = m(r, c);
      for (std::size_t j = 0; j < cols; ++j) m(r, j) -= factor * m(p, j);
    }
  }

  std::vector<std::vector<K>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_row_of[f]) continue;
    std::vector<K> x(cols, K{});
    x[f] = from_int(1, like);
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_row_of[c]) x[c] = -m(*pivot_row_of[c], f);
    field_traits<K>::normalize(std::span<K>(x));
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Monomial exponents of degree d in a fixed order. Degree 2 matches the
/// Conic coefficient layout.
inline std::vector<std::array<int, 3>> monomials(int d) {
  switch (d) {
    case 1: return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    case 2: return {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    case 3:
      return {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0},
              {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {1, 1, 1}};
    default: throw UnsupportedDegree("degree " + std::to_string(d) + " is outside 1..3");
  }
}

template <class K>
std::vector<K> monomial_row(const ProjPoint<K>& p, const std::vector<std::array<int, 3>>& mons) {
  std::vector<K> row;
  row.reserve(mons.size());
  for (const auto& e : mons) {
    K v = one_like(p);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) v *= p[i];
    row.push_back(v);
  }
  return row;
}

template <class K>
K evaluate(const std::vector<K>& coeffs, const std::vector<K>& row) {
  K acc{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * row[i];
  return acc;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// The combination of rank `rank` (lexicographic order) of k indices < n.
inline std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k) {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t v = next;; ++v) {
      const std::uint64_t with_v = binomial(n - v - 1, k - slot - 1);
      if (rank < with_v) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      rank -= with_v;
    }
  }
  return out;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Runs visit(combination) over all k-subsets of n, split into contiguous
/// rank ranges across `jobs` threads. Each thread fills its own bucket; the
/// buckets are concatenated in rank order, so the result does not depend on
/// the thread count.
template <class T, class Visit>
std::vector<T> parallel_combinations(std::size_t n, std::size_t k, unsigned jobs, Visit visit) {
  const std::uint64_t total = binomial(n, k);
  if (total == 0) return {};
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
  std::vector<std::vector<T>> buckets(jobs);
  auto work = [&](unsigned j) {
    const std::uint64_t lo = total * j / jobs, hi = total * (j + 1) / jobs;
    if (lo >= hi) return;
    auto comb = unrank_combination(lo, n, k);
    for (std::uint64_t r = lo; r < hi; ++r) {
      visit(comb, buckets[j]);
      next_combination(comb, n);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  std::vector<T> out;
  for (auto& b : buckets)
    for (auto& x : b) out.push_back(std::move(x));
  return out;
}

}  // namespace detail

/// Number of monomials of degree d: (d+1)(d+2)/2.
constexpr std::size_t monomial_count(int d) { return static_cast<std::size_t>((d + 1) * (d + 2) / 2); }

template <class K>
struct OrdinaryConicCertificate {
  std::array<ProjPoint<K>, 5> subset;  // canonical order
  Conic<K> conic;
  bool singular;

  friend bool operator==(const OrdinaryConicCertificate&, const OrdinaryConicCertificate&) = default;
};

template <class K>
struct CurveCertificate {
  std::vector<ProjPoint<K>> subset;  // canonical order
  std::vector<K> coeffs;             // in detail::monomials(d) order, normalized

  friend bool operator==(const CurveCertificate&, const CurveCertificate&) = default;
};

/// Every subset of N(d) - 1 points that determines a unique curve of degree
/// d meeting the set in exactly that subset. Subsets are visited in
/// lexicographic order of the canonically sorted points.
template <class K>
std::vector<CurveCertificate<K>> find_ordinary_curves_deg_d(std::span<const ProjPoint<K>> input, int d,
                                                            unsigned jobs = 1) {
  const auto mons = detail::monomials(d);
  const std::size_t k = mons.size() - 1;
  if (input.size() < k)
    throw DegenerateInput("need at least " + std::to_string(k) + " points for degree " + std::to_string(d));
  std::vector<ProjPoint<K>> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  std::vector<std::vector<K>> rows;
  for (const auto& p : pts) rows.push_back(detail::monomial_row(p, mons));

  auto visit = [&](const std::vector<std::size_t>& comb, std::vector<CurveCertificate<K>>& out) {
    Matrix<K> m(k, mons.size());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < mons.size(); ++j) m(i, j) = rows[comb[i]][j];
    auto basis = detail::gauss_jordan_nullspace(std::move(m));
    if (basis.size() != 1) return;
    const auto& curve = basis.front();
    std::size_t hits = 0;
    for (const auto& row : rows) {
      if (is_zero(detail::evaluate(curve, row)) && ++hits > k) return;
    }
    if (hits != k) return;
    CurveCertificate<K> cert{{}, curve};
    for (auto i : comb) cert.subset.push_back(pts[i]);
    out.push_back(std::move(cert));
  };
  return detail::parallel_combinations<CurveCertificate<K>>(pts.size(), k, jobs, visit);
}

/// All ordinary conics: 5-subsets that determine a conic meeting the set in
/// exactly those five points.
template <class K>
std::vector<OrdinaryConicCertificate<K>> enumerate_ordinary_conics(std::span<const ProjPoint<K>> pts,
                                                                   unsigned jobs = 1) {
  if (pts.size() < 5) throw DegenerateInput("enumerate_ordinary_conics needs at least 5 points");
  std::vector<OrdinaryConicCertificate<K>> out;
  for (auto& c : find_ordinary_curves_deg_d(pts, 2, jobs)) {
    std::array<K, 6> coeffs;
    std::copy(c.coeffs.begin(), c.coeffs.end(), coeffs.begin());
    Conic<K> conic(coeffs);
    out.push_back({{c.subset[0], c.subset[1], c.subset[2], c.subset[3], c.subset[4]}, conic, conic.is_singular()});
  }
  return out;
}

/// Conic through every point, by the oracle's own elimination.
template <class K>
std::optional<Conic<K>> exists_conic_through_all_bruteforce(std::span<const ProjPoint<K>> pts) {
  if (pts.empty()) throw DegenerateInput("empty configuration");
  const auto mons = detail::monomials(2);
  Matrix<K> m(pts.size(), 6);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto row = detail::monomial_row(pts[i], mons);
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = row[j];
  }
  auto basis = detail::gauss_jordan_nullspace(std::move(m));
  if (basis.empty()) return std::nullopt;
  std::vector<Conic<K>> conics;
  for (auto& v : basis) {
    std::array<K, 6> a;
    std::copy(v.begin(), v.end(), a.begin());
    conics.emplace_back(a);
  }
  return *std::min_element(conics.begin(), conics.end());
}

struct FinitePlane {
  std::int64_t p;
  std::vector<ProjPoint<Fp>> points;  // canonical order
};

/// Every point of the projective plane over F_p.
inline FinitePlane finite_plane(std::int64_t p) {
  require_odd_prime(p);
  FinitePlane plane{p, {}};
  plane.points.push_back(point_fp(0, 0, 1, p));
  for (std::int64_t b = 0; b < p; ++b) plane.points.push_back(point_fp(0, 1, b, p));
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b) plane.points.push_back(point_fp(1, a, b, p));
  std::sort(plane.points.begin(), plane.points.end());
  return plane;
}

enum class ConicClass { Smooth, LinePair, ConjugateLinePair, DoubleLine };

inline const char* to_string(ConicClass c) {
  switch (c) {
    case ConicClass::Smooth: return "smooth";
    case ConicClass::LinePair: return "line-pair";
    case ConicClass::ConjugateLinePair: return "conjugate-line-pair";
    case ConicClass::DoubleLine: return "double-line";
  }
  return "?";
}

struct ConicClassStats {
  std::uint64_t conics = 0;
  std::set<std::size_t> point_counts;  // distinct counts observed in the class
};

/// Classifies a conic over F_p: rank of its matrix, and for rank 2 whether
/// the two lines are defined over F_p (restriction to a line missing the
/// vertex has a square discriminant).
inline ConicClass classify_conic(const Conic<Fp>& c) {
  const Mat3<Fp> m = c.matrix();
  Matrix<Fp> mm(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) mm(i, j) = m[i][j];
  const std::size_t r = rank(mm);
  if (r == 3) return ConicClass::Smooth;
  if (r == 1) return ConicClass::DoubleLine;
  // Vertex: cross product of two independent rows.
  std::array<Fp, 3> vertex{};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      auto v = cross(m[a], m[b]);
      if (!is_zero(v[0]) || !is_zero(v[1]) || !is_zero(v[2])) vertex = v;
    }
  int i = 0;
  while (is_zero(vertex[i])) ++i;
  // Restrict to x_i = 0: a u^2 + b uv + c v^2 over the other two variables.
  const auto& k = c.coeffs();
  Fp a, b, cc;
  if (i == 0) {
    a = k[1], b = k[5], cc = k[2];
  } else if (i == 1) {
    a = k[0], b = k[4], cc = k[2];
  } else {
    a = k[0], b = k[3], cc = k[1];
  }
  const std::int64_t p = vertex[i].modulus();
  const Fp one(1, p);
  const Fp disc = b * b - Fp(4, p) * a * cc;
  // Euler's criterion.
  Fp pw = one, base = disc;
  for (std::int64_t e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) pw *= base;
    base *= base;
  }
  return pw == one ? ConicClass::LinePair : ConicClass::ConjugateLinePair;
}

/// For every nonzero conic over F_p (one per projective class), its class
/// and the number of plane points it carries, aggregated per class.
inline std::map<ConicClass, ConicClassStats> conic_point_count_spectrum(const FinitePlane& plane) {
  const std::int64_t p = plane.p;
  // Monomial values per point, as plain residues.
  std::vector<std::array<std::int64_t, 6>> mono;
  for (const auto& pt : plane.points) {
    const std::int64_t x = pt[0].value(), y = pt[1].value(), z = pt[2].value();
    mono.push_back({x * x % p, y * y % p, z * z % p, x * y % p, x * z % p, y * z % p});
  }
  std::map<ConicClass, ConicClassStats> out;
  std::array<std::int64_t, 6> c{};
  for (int lead = 0; lead < 6; ++lead) {
    // Coefficients before `lead` are 0, c[lead] = 1, the rest range freely.
    const int free = 5 - lead;
    std::int64_t combos = 1;
    for (int i = 0; i < free; ++i) combos *= p;
    for (std::int64_t code = 0; code < combos; ++code) {
      c.fill(0);
      c[lead] = 1;
      std::int64_t rem = code;
      for (int i = lead + 1; i < 6; ++i) {
        c[i] = rem % p;
        rem /= p;
      }
      std::size_t count = 0;
      for (const auto& m : mono) {
        std::int64_t v = 0;
        for (int i = lead; i < 6; ++i) v += c[i] * m[i];
        if (v % p == 0) ++count;
      }
      std::array<Fp, 6> coeffs;
      for (int i = 0; i < 6; ++i) coeffs[i] = Fp(c[i], p);
      auto& stats = out[classify_conic(Conic<Fp>(coeffs))];
      ++stats.conics;
      stats.point_counts.insert(count);
    }
  }
  return out;
}

}  // namespace sgconic::oracle
