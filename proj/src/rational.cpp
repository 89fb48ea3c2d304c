#include "qvcount/rational.hpp"

#include <cctype>
#include <numeric>

#include "qvcount/errors.hpp"

namespace qvc {

Rational frac(std::int64_t p, std::int64_t q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = slash == std::string_view::npos ? text : trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : trim(text.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "' (expected p/q)");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

RationalVector parse_rational_list(std::string_view text, char sep) {
  RationalVector out;
  for (auto piece : split(text, sep)) out.push_back(parse_rational(piece));
  return out;
}

IntVector parse_int_list(std::string_view text, char sep) {
  IntVector out;
  for (auto piece : split(text, sep)) {
    if (!is_integer_literal(piece)) throw ParseError("malformed integer '" + std::string(piece) + "'");
    try {
      out.push_back(std::stoll(std::string(piece)));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range '" + std::string(piece) + "'");
    }
  }
  return out;
}

std::string join(const IntVector& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join(const RationalVector& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += to_string(v[i]);
  }
  return s;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_integral(const RationalVector& v) {
  for (const auto& x : v) {
    if (!is_integer(x)) return false;
  }
  return true;
}

Rational dot(const RationalVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<long>(b[i]);
  return s;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t gcd_of(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace qvc
