#pragma once

/**
 * @file config_file.hpp
 * @brief Plain-text point configuration files.
 *
 *     # comment
 *     field rational          (or: field fp 5; optional, default rational)
 *     1 0 0
 *     0 1 0
 *     2 -3 7
 *
 * Each point line holds three integers, the homogeneous coordinates. Points
 * are reduced to canonical form on load and duplicates are rejected.
 */

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sgconic/point_config.hpp"

namespace sgconic::io {

class ParseError : public DegenerateInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : DegenerateInput(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size() || line[i] == '#') break;  // rest of the line is a comment
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline Integer parse_integer(const Token& tok, std::size_t line) {
  std::string_view s = tok.text;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError(line, tok.column, "expected an integer, got '" + std::string(s) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      throw ParseError(line, tok.column + j, "expected an integer, got '" + std::string(s) + "'");
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s), 10);
}

inline std::int64_t reduce_mod(const Integer& v, std::int64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(r.get_si());
}

}  // namespace detail

/// Parses a configuration; throws ParseError with a 1-based line and column.
inline AnyConfig parse_config(std::istream& in) {
  std::int64_t p = 0;  // 0 while rational
  bool seen_point = false, seen_field = false;
  std::vector<ProjPoint<Rational>> rat;
  std::vector<ProjPoint<Fp>> fin;
  std::vector<std::size_t> origin;  // line of each point, for duplicate diagnostics
  std::string raw;
  std::size_t lineno = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = detail::tokenize(raw);
    if (toks.empty() || toks[0].text[0] == '#') continue;

    if (toks[0].text == "field") {
      if (seen_field) throw ParseError(lineno, toks[0].column, "duplicate field directive");
      if (seen_point) throw ParseError(lineno, toks[0].column, "field directive must precede all points");
      seen_field = true;
      if (toks.size() == 2 && toks[1].text == "rational") continue;
      if (toks.size() == 3 && toks[1].text == "fp") {
        const Integer q = detail::parse_integer(toks[2], lineno);
        if (q > kMaxPrimeModulus || q < 2) throw ParseError(lineno, toks[2].column, "modulus out of range");
        p = q.get_si();
        require_odd_prime(p);  // UnsupportedField, not a syntax error
        continue;
      }
      const std::size_t col = toks.size() > 1 ? toks[1].column : toks[0].column + toks[0].text.size();
      throw ParseError(lineno, col, "expected 'field rational' or 'field fp <p>'");
    }

    if (toks.size() != 3) {
      const std::size_t col = toks.size() > 3 ? toks[3].column : toks.back().column + toks.back().text.size();
      throw ParseError(lineno, col, "expected 3 coordinates, got " + std::to_string(toks.size()));
    }
    std::array<Integer, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = detail::parse_integer(toks[i], lineno);
    seen_point = true;

    auto check_dup = [&](auto& pts) {
      for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] == pts.back())
          throw ParseError(lineno, 1, "duplicate point " + pts.back().to_string() + " (first on line " +
                                          std::to_string(origin[i]) + ")");
    };
    try {
      if (p == 0) {
        rat.emplace_back(std::array<Rational, 3>{Rational(v[0]), Rational(v[1]), Rational(v[2])});
        origin.push_back(lineno);
        check_dup(rat);
      } else {
        fin.emplace_back(std::array<Fp, 3>{Fp(detail::reduce_mod(v[0], p), p), Fp(detail::reduce_mod(v[1], p), p),
                                           Fp(detail::reduce_mod(v[2], p), p)});
        origin.push_back(lineno);
        check_dup(fin);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const DegenerateInput&) {
      throw ParseError(lineno, toks[0].column, "coordinates are all zero" + std::string(p ? " modulo p" : ""));
    }
  }
  if (!seen_point) throw ParseError(lineno + 1, 1, "no points in configuration");
  if (p == 0) return PointConfig<Rational>(std::move(rat));
  return PointConfig<Fp>(std::move(fin));
}

inline AnyConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

inline AnyConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DegenerateInput("cannot open " + path);
  return parse_config(in);
}

template <class K>
void write_config(std::ostream& out, const PointConfig<K>& cfg) {
  if constexpr (field_traits<K>::is_rational) {
    out << "field rational\n";
  } else {
    out << "field fp " << one_like(cfg.points()[0]).modulus() << "\n";
  }
  for (const auto& pt : cfg)
    out << field_traits<K>::to_string(pt[0]) << ' ' << field_traits<K>::to_string(pt[1]) << ' '
        << field_traits<K>::to_string(pt[2]) << '\n';
}

inline void write_config(std::ostream& out, const AnyConfig& cfg) {
  std::visit([&](const auto& c) { write_config(out, c); }, cfg);
}

}  // namespace sgconic::io
