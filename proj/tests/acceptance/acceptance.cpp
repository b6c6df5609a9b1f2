// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "sgconic/corpus.hpp"
#include "sgconic/cremona.hpp"
#include "sgconic/finder.hpp"
#include "sgconic/incidence.hpp"
#include "sgconic/oracle.hpp"

using namespace sgconic;
namespace fs = std::filesystem;

namespace {

using Pts = std::span<const ProjPoint<Rational>>;

struct Check {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why = msg;
    }
  }
};

std::size_t profiles_checked = 0;
std::size_t identity_failures = 0;

/// Every profile built here goes through this, so criterion 7 sees them all.
template <class K>
IncidenceProfile<K> profile(std::span<const ProjPoint<K>> pts) {
  auto prof = incidence_profile(pts);
  ++profiles_checked;
  std::uint64_t lhs = 0;
  for (auto [k, t] : prof.tk) lhs += t * k * (k - 1) / 2;
  if (lhs != prof.s * (prof.s - 1) / 2) ++identity_failures;
  return prof;
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Check criterion_f5() {
  Check c;
  const auto plane = corpus::gen_finite_plane_full(5);
  c.expect(plane.size() == 31, "plane has " + std::to_string(plane.size()) + " points");
  const auto spec = oracle::conic_point_count_spectrum(oracle::finite_plane(5));
  c.expect(spec.at(oracle::ConicClass::Smooth).point_counts == std::set<std::size_t>{6}, "smooth conics not all 6");
  c.expect(spec.at(oracle::ConicClass::LinePair).point_counts == std::set<std::size_t>{11},
           "line pairs not all 11");
  c.expect(oracle::detail::binomial(plane.size(), 5) == 169911, "subset count");
  const auto certs = oracle::enumerate_ordinary_conics(plane.points(), jobs());
  c.expect(certs.empty(), std::to_string(certs.size()) + " certificates over F_5");
  return c;
}

Check criterion_singular_only() {
  Check c;
  const auto cfg = corpus::gen_singular_only();
  c.expect(cfg.size() == 7, "not 7 points");
  const auto certs = oracle::enumerate_ordinary_conics(cfg.points());
  c.expect(!certs.empty(), "no certificates");
  for (const auto& cert : certs) c.expect(cert.singular, "smooth certificate " + cert.conic.to_string());
  const auto res = find_ordinary_conic(cfg);
  const auto* o = std::get_if<OrdinaryConic<Rational>>(&res);
  c.expect(o != nullptr, "finder returned AllOnConic");
  if (o) c.expect(conic_is_singular(o->conic), "finder conic is smooth");
  return c;
}

Check criterion_general_position() {
  Check c;
  for (std::size_t n = 6; n <= 9; ++n)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto cfg = corpus::gen_general_position(n, seed);
      const auto certs = oracle::enumerate_ordinary_conics(cfg.points());
      c.expect(certs.size() == oracle::detail::binomial(n, 5),
               "n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": missing certificates");
      for (const auto& cert : certs)
        c.expect(!cert.singular, "n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": singular certificate");
    }
  return c;
}

std::vector<PointConfig<Rational>> fuzz_configs() {
  static const std::int64_t bounds[] = {2, 3, 4, 10, 1000};
  std::vector<PointConfig<Rational>> out;
  Xorshift64Star rng(20240501);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 12));
    out.push_back(corpus::gen_random_rational(n, rng.next(), bounds[t % 5]));
  }
  return out;
}

Check criterion_finder_fuzz(const std::vector<PointConfig<Rational>>& configs) {
  Check c;
  std::size_t ordinary = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& cfg = configs[i];
    const std::string tag = "config " + std::to_string(i);
    std::optional<SGConicResult<Rational>> found_result;
    try {
      found_result = find_ordinary_conic(cfg);
    } catch (const Error& e) {
      c.expect(false, tag + ": " + e.what());
      continue;
    }
    const auto& res = *found_result;
    if (const auto* o = std::get_if<OrdinaryConic<Rational>>(&res)) {
      ++ordinary;
      c.expect(is_valid_trace(o->trace, true), tag + ": invalid trace");
      const auto certs = oracle::enumerate_ordinary_conics(cfg.points());
      const bool found = std::any_of(certs.begin(), certs.end(), [&](const auto& cert) {
        return cert.subset == o->witness && cert.conic == o->conic;
      });
      c.expect(found, tag + ": witness not certified by the oracle");
      c.expect(!oracle::exists_conic_through_all_bruteforce(cfg.points()), tag + ": a conic through all exists");
    } else {
      const auto& a = std::get<AllOnConic<Rational>>(res);
      c.expect(is_valid_trace(a.trace, false), tag + ": invalid trace");
      const auto rank_conic = oracle::exists_conic_through_all_bruteforce(cfg.points());
      c.expect(rank_conic.has_value(), tag + ": rank oracle finds no conic through all");
      for (const auto& p : cfg) c.expect(a.conic.contains(p), tag + ": point off the returned conic");
    }
    if (cfg.size() >= 2) profile(cfg.points());
  }
  c.expect(ordinary > 100, "only " + std::to_string(ordinary) + " ordinary verdicts");
  return c;
}

Check criterion_inequalities(const std::vector<PointConfig<Rational>>& configs) {
  Check c;
  std::size_t dual_checked = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& cfg = configs[i];
    if (cfg.size() < 3) continue;
    const auto prof = profile(cfg.points());
    if (prof.all_collinear()) continue;
    const std::string tag = "config " + std::to_string(i);
    c.expect(melchior_check(prof).holds, tag + ": Melchior fails");
    c.expect(ordinary_line_bound_check(prof).holds, tag + ": ordinary line bound fails");
    try {
      c.expect(dual_hirzebruch_check(prof).holds, tag + ": dual Hirzebruch fails");
      ++dual_checked;
    } catch (const PreconditionViolated&) {
    }
  }
  c.expect(dual_checked > 100, "dual Hirzebruch checked only " + std::to_string(dual_checked) + " times");

  const auto tri = corpus::gen_triangle_midpoints_centroid();
  const auto prof = profile(tri.points());
  const auto m = melchior_check(prof);
  c.expect(m.lhs == 3 && m.rhs == 3, "triangle Melchior is not 3 = 3");
  const auto b = ordinary_line_bound_check(prof);
  c.expect(prof.s == 7 && b.count == 3 && Rational(static_cast<long>(3 * prof.s)) / 7 == Rational(static_cast<long>(b.count)),
           "triangle ordinary count is not 3s/7");
  return c;
}

Check criterion_cremona() {
  Check c;
  Xorshift64Star rng(77);
  auto random_point = [&](std::int64_t bound) {
    for (;;) {
      std::array<Rational, 3> v;
      for (auto& x : v) x = Rational(rng.uniform(-bound, bound));
      if (sgn(v[0]) || sgn(v[1]) || sgn(v[2])) return ProjPoint<Rational>(v);
    }
  };
  int bases = 0, inverse_checks = 0, line_checks = 0, pencil_checks = 0, conic_checks = 0;
  while (bases < 200) {
    const auto f = random_point(6), g = random_point(6), h = random_point(6);
    if (f == g || f == h || g == h || collinear(f, g, h)) continue;
    ++bases;
    const CremonaMap<Rational> phi(f, g, h);
    const auto inv = phi.inverse();
    const std::string tag = "base " + std::to_string(bases);

    for (int k = 0; k < 5; ++k) {
      const auto p = random_point(20);
      if (!phi.in_generic_locus(p)) continue;
      const auto q = phi.apply_generic(p);
      ++inverse_checks;
      c.expect(inv.in_generic_locus(q) && inv.apply_generic(q) == p, tag + ": inverse fails at " + p.to_string());
    }

    const std::array<ProjPoint<Rational>, 3> b{f, g, h};
    for (int i = 0; i < 3; ++i) {
      const auto& u = b[(i + 1) % 3];
      const auto& v = b[(i + 2) % 3];
      std::array<Rational, 3> mix;
      const Rational k(rng.uniform(1, 9));
      for (int j = 0; j < 3; ++j) mix[j] = u[j] + k * v[j];
      const ProjPoint<Rational> p(mix);
      const auto img = phi.apply(p);
      const auto* ct = std::get_if<ContractedTo<Rational>>(&img);
      c.expect(ct && ct->which == static_cast<RPoint>(i) && ct->point == phi.r_point(static_cast<RPoint>(i)),
               tag + ": side point not contracted to its R point");
    }

    // Profiles: generic line, line through F, conic through F, G, H.
    const auto l1 = random_point(9), l2 = random_point(9);
    const bool distinct = !(l1 == l2);
    const auto l = distinct ? line_through(l1, l2) : ProjLine<Rational>(l1.coords());
    if (!incident(f, l) && !incident(g, l) && !incident(h, l)) {
      const auto img = phi.image_of_curve(TernaryForm<Rational>::from_line(l));
      ++line_checks;
      c.expect(img.image == transform_multiplicity_profile(1, 0, 0, 0) && img.image == CurveProfile{2, {1, 1, 1}},
               tag + ": generic line profile");
      const auto conic = img.form.as_conic();
      c.expect(conic.has_value(), tag + ": generic line image is not a conic");
      if (conic)
        for (int i = 0; i < 3; ++i)
          c.expect(conic->contains(phi.r_point(static_cast<RPoint>(i))), tag + ": image conic misses an R point");
    }
    const auto q = random_point(9);
    if (!(q == f) && !collinear(f, q, g) && !collinear(f, q, h)) {
      const auto img = phi.image_of_curve(TernaryForm<Rational>::from_line(line_through(f, q)));
      ++pencil_checks;
      c.expect(img.source == CurveProfile{1, {1, 0, 0}} && img.image == transform_multiplicity_profile(1, 1, 0, 0),
               tag + ": line through F profile");
      const auto line = img.form.as_line();
      c.expect(line && incident(phi.r_point(RPoint::GH), *line), tag + ": image line misses R_GH");
    }
    const auto e = random_point(9), d = random_point(9);
    std::vector<ProjPoint<Rational>> five{f, g, h, e, d};
    std::sort(five.begin(), five.end());
    if (std::adjacent_find(five.begin(), five.end()) == five.end()) {
      const auto fit = conic_through_five(Pts(five));
      if (fit.determined && !fit.conic.is_singular()) {
        const auto img = phi.image_of_curve(TernaryForm<Rational>::from_conic(fit.conic));
        ++conic_checks;
        c.expect(img.source == CurveProfile{2, {1, 1, 1}} && img.image == transform_multiplicity_profile(2, 1, 1, 1) &&
                     img.image == CurveProfile{1, {0, 0, 0}},
                 tag + ": conic through base profile");
        const auto line = img.form.as_line();
        c.expect(line.has_value(), tag + ": conic image is not a line");
        if (line && phi.in_generic_locus(e)) c.expect(incident(phi.apply_generic(e), *line), tag + ": image off line");
      }
    }
  }
  c.expect(inverse_checks >= 500 && line_checks >= 100 && pencil_checks >= 100 && conic_checks >= 100,
           "too few checks: inverse " + std::to_string(inverse_checks) + ", line " + std::to_string(line_checks) +
               ", pencil " + std::to_string(pencil_checks) + ", conic " + std::to_string(conic_checks));
  return c;
}

Check criterion_pair_identity() {
  Check c;
  c.expect(profiles_checked > 500, "only " + std::to_string(profiles_checked) + " profiles");
  c.expect(identity_failures == 0, std::to_string(identity_failures) + " profiles violate the identity");
  return c;
}

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + SGCONIC_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Check criterion_determinism() {
  Check c;
  const fs::path dir = fs::temp_directory_path() / ("sgconic_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto same = [&](const std::string& args, const std::string& what) {
    const auto a = run(args), b = run(args);
    c.expect(a.code == 0 && b.code == 0, what + ": nonzero exit");
    c.expect(a.out == b.out, what + ": output differs between runs");
    return a.out;
  };
  const std::vector<std::pair<std::string, std::string>> gens = {
      {"singular", "--kind singular-only"},
      {"gp", "--kind general-position --n 9 --seed 5"},
      {"rnd", "--kind random --n 12 --seed 42 --bound 10"},
      {"tri", "--kind triangle-midpoints-centroid"}};
  for (const auto& [name, spec] : gens) {
    const auto text = same("gen " + spec, "gen " + name);
    const auto path = (dir / (name + ".cfg")).string();
    std::ofstream(path, std::ios::binary) << text;
    same("stats " + path, "stats " + name);
    const auto result = same("find-conic " + path, "find-conic " + name);
    const auto base = run("oracle --jobs 1 --check-finder " + path);
    for (const char* j : {"2", "3", "8"}) {
      const auto other = run(std::string("oracle --check-finder --jobs ") + j + " " + path);
      c.expect(base.code == 0 && other.code == 0 && base.out == other.out, "oracle " + name + " --jobs " + j);
    }
    const auto env = run("oracle --check-finder " + path, "SGCONIC_JOBS=4");
    c.expect(env.out == base.out, "oracle " + name + " with SGCONIC_JOBS");
    const auto rpath = (dir / (name + ".json")).string();
    std::ofstream(rpath, std::ios::binary) << result;
    const auto s1 = (dir / (name + "1.svg")).string(), s2 = (dir / (name + "2.svg")).string();
    c.expect(run("plot " + path + " --result " + rpath + " -o " + s1).code == 0, "plot " + name);
    c.expect(run("plot " + path + " --result " + rpath + " -o " + s2).code == 0, "plot " + name);
    c.expect(!slurp(s1).empty() && slurp(s1) == slurp(s2), "plot " + name + ": SVG differs");
  }
  fs::remove_all(dir);
  return c;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const std::function<Check()>& f) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = f();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const auto secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count() / 1000.0;
    std::cout << (c.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << secs << " s)";
    if (!c.ok) std::cout << ": " << c.why;
    std::cout << std::endl;
    failures += !c.ok;
  };

  const auto configs = fuzz_configs();
  report(1, "F_5 plane: 31 points, conic sizes 6 and 11, no ordinary conic in 169911 subsets", criterion_f5);
  report(2, "singular-only configuration: every ordinary conic is singular", criterion_singular_only);
  report(3, "general position n = 6..9, 20 seeds: every ordinary conic is smooth", criterion_general_position);
  report(4, "finder totality and oracle agreement on 500 random configurations",
         [&] { return criterion_finder_fuzz(configs); });
  report(5, "incidence inequalities and the sharp triangle configuration",
         [&] { return criterion_inequalities(configs); });
  report(6, "quadratic transformation: involution, contraction, multiplicity law", criterion_cremona);
  report(7, "pair-count identity on every incidence profile", criterion_pair_identity);
  report(8, "CLI byte-determinism including --jobs", criterion_determinism);
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 8 - failures << "/8" << std::endl;
  return failures ? 1 : 0;
}
