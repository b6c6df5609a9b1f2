#pragma once

/**
 * @file svg.hpp
 * @brief Static SVG figures of rational configurations in an affine chart.
 *
 * The chart is x_c != 0 for a chosen coordinate c; the remaining two
 * coordinates, divided by x_c, become the plane coordinates (u, v). Every
 * position is computed exactly and rounded to hundredths of a pixel with
 * integer arithmetic, so the bytes do not depend on the platform's floats.
 * A conic is traced by marching squares on exact signs of its form.
 */

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sgconic/conic.hpp"
#include "sgconic/incidence.hpp"
#include "sgconic/point_config.hpp"

namespace sgconic::io {

struct PlotOptions {
  std::optional<int> chart;  // 0, 1, 2 for x, y, z != 0; automatic if empty
  int size = 640;            // square canvas, pixels
  int margin = 20;
  int resolution = 160;      // marching-squares cells per side
};

namespace svg_detail {

/// Rounds to the nearest hundredth and prints it with exactly two decimals.
inline std::string fixed2(const Rational& q) {
  Rational scaled = q * 100 + Rational(1, 2);
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const bool neg = n < 0;
  if (neg) n = -n;
  Integer whole = n / 100, frac = n % 100;
  std::string f = frac.get_str();
  if (f.size() < 2) f = "0" + f;
  return (neg ? "-" : "") + whole.get_str() + "." + f;
}

struct Frame {
  Rational umin, vmax, scale;
  int margin;

  std::string x(const Rational& u) const { return fixed2(margin + (u - umin) * scale); }
  std::string y(const Rational& v) const { return fixed2(margin + (vmax - v) * scale); }
};

inline std::array<int, 2> others(int c) {
  if (c == 0) return {1, 2};
  if (c == 1) return {0, 2};
  return {0, 1};
}

}  // namespace svg_detail

/// Chart with the most finite points; ties prefer z, then y, then x.
inline int auto_chart(std::span<const ProjPoint<Rational>> pts) {
  int best = 2;
  std::size_t best_count = 0;
  for (int c = 2; c >= 0; --c) {
    std::size_t n = 0;
    for (const auto& p : pts)
      if (sgn(p[c]) != 0) ++n;
    if (n > best_count) best = c, best_count = n;
  }
  return best;
}

/// Points, determined lines clipped to the viewport, and optionally a conic
/// and a highlighted witness set.
inline std::string render_svg(const PointConfig<Rational>& cfg, const std::optional<Conic<Rational>>& conic,
                              std::span<const ProjPoint<Rational>> highlight, const PlotOptions& opt = {}) {
  using svg_detail::fixed2;
  const int chart = opt.chart ? *opt.chart : auto_chart(cfg.points());
  if (chart < 0 || chart > 2) throw RenderFailed("chart must be x, y or z");
  const auto [a, b] = svg_detail::others(chart);

  struct Affine {
    Rational u, v;
    bool highlighted;
  };
  std::vector<Affine> finite;
  std::size_t at_infinity = 0;
  for (const auto& p : cfg) {
    if (sgn(p[chart]) == 0) {
      ++at_infinity;
      continue;
    }
    bool hl = std::find(highlight.begin(), highlight.end(), p) != highlight.end();
    finite.push_back({p[a] / p[chart], p[b] / p[chart], hl});
  }
  if (finite.empty()) throw RenderFailed("every point lies at infinity in the chosen chart");

  // Square viewport around the bounding box, padded by a tenth of its span.
  Rational umin = finite[0].u, umax = umin, vmin = finite[0].v, vmax = vmin;
  for (const auto& f : finite) {
    umin = std::min(umin, f.u), umax = std::max(umax, f.u);
    vmin = std::min(vmin, f.v), vmax = std::max(vmax, f.v);
  }
  Rational span = std::max(umax - umin, vmax - vmin);
  if (sgn(span) == 0) span = 2;
  const Rational side = span + span / 5;
  const Rational cu = (umin + umax) / 2, cv = (vmin + vmax) / 2;
  umin = cu - side / 2, umax = cu + side / 2;
  vmin = cv - side / 2, vmax = cv + side / 2;
  const Rational scale = Rational(opt.size - 2 * opt.margin) / side;
  const svg_detail::Frame fr{umin, vmax, scale, opt.margin};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size << "\" height=\"" << opt.size
      << "\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\">\n"
      << "<!-- chart: " << "xyz"[chart] << " != 0; points at infinity omitted: " << at_infinity << " -->\n"
      << "<rect width=\"" << opt.size << "\" height=\"" << opt.size << "\" fill=\"white\"/>\n";

  // Determined lines, clipped against the four viewport edges.
  if (cfg.size() >= 2) {
    const auto prof = incidence_profile(cfg);
    out << "<g id=\"lines\" stroke-width=\"1\">\n";
    for (const auto& dl : prof.lines) {
      const Rational &la = dl.line[a], &lb = dl.line[b], &lc = dl.line[chart];
      if (sgn(la) == 0 && sgn(lb) == 0) continue;  // the line at infinity
      std::vector<std::pair<Rational, Rational>> hits;
      auto add = [&](const Rational& u, const Rational& v) {
        if (u < umin || u > umax || v < vmin || v > vmax) return;
        for (const auto& h : hits)
          if (h.first == u && h.second == v) return;
        hits.emplace_back(u, v);
      };
      if (sgn(lb) != 0) {
        for (const Rational& u : {umin, umax}) add(u, -(la * u + lc) / lb);
      }
      if (sgn(la) != 0) {
        for (const Rational& v : {vmin, vmax}) add(-(lb * v + lc) / la, v);
      }
      if (hits.size() < 2) continue;
      std::sort(hits.begin(), hits.end());
      const auto& p = hits.front();
      const auto& q = hits.back();
      out << "<line x1=\"" << fr.x(p.first) << "\" y1=\"" << fr.y(p.second) << "\" x2=\"" << fr.x(q.first)
          << "\" y2=\"" << fr.y(q.second) << "\" stroke=\"" << (dl.points.size() == 2 ? "#b0b0b0" : "#404040")
          << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (conic) {
    const auto& k = conic->coeffs();
    // Coefficients of A x^2 + B y^2 + C z^2 + D xy + E xz + F yz with x_chart = 1.
    auto eval = [&](const Rational& u, const Rational& v) -> Rational {
      std::array<Rational, 3> p;
      p[a] = u, p[b] = v, p[chart] = 1;
      return k[0] * p[0] * p[0] + k[1] * p[1] * p[1] + k[2] * p[2] * p[2] + k[3] * p[0] * p[1] +
             k[4] * p[0] * p[2] + k[5] * p[1] * p[2];
    };
    const int n = opt.resolution;
    const Rational step = side / n;
    std::vector<Rational> us(n + 1), vs(n + 1);
    for (int i = 0; i <= n; ++i) us[i] = umin + step * i, vs[i] = vmin + step * i;
    std::vector<std::vector<Rational>> f(n + 1, std::vector<Rational>(n + 1));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) f[i][j] = eval(us[i], vs[j]);

    auto pos = [](const Rational& val) { return sgn(val) > 0; };
    // Crossing on the segment from (u0, v0) to (u1, v1) with values f0, f1.
    auto cross_at = [](const Rational& u0, const Rational& v0, const Rational& f0, const Rational& u1,
                       const Rational& v1, const Rational& f1) {
      const Rational t = f0 / (f0 - f1);
      return std::pair<Rational, Rational>{u0 + (u1 - u0) * t, v0 + (v1 - v0) * t};
    };
    std::ostringstream d;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Rational &f00 = f[i][j], &f10 = f[i + 1][j], &f11 = f[i + 1][j + 1], &f01 = f[i][j + 1];
        const bool s00 = pos(f00), s10 = pos(f10), s11 = pos(f11), s01 = pos(f01);
        if (s00 == s10 && s10 == s11 && s11 == s01) continue;
        // Edges: 0 bottom, 1 right, 2 top, 3 left.
        auto edge = [&](int e) {
          switch (e) {
            case 0: return cross_at(us[i], vs[j], f00, us[i + 1], vs[j], f10);
            case 1: return cross_at(us[i + 1], vs[j], f10, us[i + 1], vs[j + 1], f11);
            case 2: return cross_at(us[i], vs[j + 1], f01, us[i + 1], vs[j + 1], f11);
            default: return cross_at(us[i], vs[j], f00, us[i], vs[j + 1], f01);
          }
        };
        std::vector<int> crossing;
        if (s00 != s10) crossing.push_back(0);
        if (s10 != s11) crossing.push_back(1);
        if (s01 != s11) crossing.push_back(2);
        if (s00 != s01) crossing.push_back(3);
        std::vector<std::pair<int, int>> segs;
        if (crossing.size() == 2) {
          segs.emplace_back(crossing[0], crossing[1]);
        } else {
          // Saddle: the center's sign decides which diagonal is connected.
          const bool sc = pos(eval((us[i] + us[i + 1]) / 2, (vs[j] + vs[j + 1]) / 2));
          if (sc == s00) {
            segs = {{0, 1}, {3, 2}};
          } else {
            segs = {{0, 3}, {1, 2}};
          }
        }
        for (auto [e0, e1] : segs) {
          const auto p = edge(e0), q = edge(e1);
          d << 'M' << fr.x(p.first) << ' ' << fr.y(p.second) << 'L' << fr.x(q.first) << ' ' << fr.y(q.second);
        }
      }
    }
    out << "<g id=\"conic\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\">\n"
        << "<path d=\"" << d.str() << "\"/>\n</g>\n";
  }

  out << "<g id=\"points\">\n";
  for (const auto& p : finite)
    out << "<circle cx=\"" << fr.x(p.u) << "\" cy=\"" << fr.y(p.v) << "\" r=\"" << (p.highlighted ? 6 : 4)
        << "\" fill=\"" << (p.highlighted ? "#c0392b" : "#1f3a93") << "\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace sgconic::io
