#include "wof/core.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace wof {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const QVec& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

boost::multiprecision::cpp_int parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw DomainError("empty number");
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) throw DomainError("malformed number '" + std::string(s) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw DomainError("malformed number '" + std::string(s) + "'");
  boost::multiprecision::cpp_int v(std::string(s.substr(i)));
  return s[0] == '-' ? -v : v;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  s = trim(s);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto den = parse_int(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(s) + "'");
    return Rational(parse_int(s.substr(0, slash)), den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    bool neg = !s.empty() && s[0] == '-';
    std::string digits(s.substr(0, dot));
    std::string frac(s.substr(dot + 1));
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    auto ip = parse_int(digits);
    auto fp = frac.empty() ? boost::multiprecision::cpp_int(0) : parse_int(frac);
    if (neg) fp = -fp;
    return Rational(ip * scale + fp, scale);
  }
  return Rational(parse_int(s));
}

QVec parse_qvec(std::string_view csv) {
  QVec out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    out.push_back(parse_rational(csv.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

RVec parse_rvec(std::string_view csv) {
  RVec out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string tok(trim(csv.substr(start, end - start)));
    if (tok.find('/') != std::string::npos) {
      out.push_back(to_double(parse_rational(tok)));
    } else {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        throw DomainError("malformed number '" + tok + "'");
      }
      if (used != tok.size()) throw DomainError("malformed number '" + tok + "'");
      out.push_back(v);
    }
    start = end + 1;
  }
  return out;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

RVec to_double(const QVec& v) {
  RVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

QVec to_rational(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QMat inverse(const QMat& a) {
  const std::size_t n = a.size();
  QMat m = a;
  QMat inv(n, QVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw DomainError("singular matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

QMat to_qmat(const IMat& a) {
  QMat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int x : a[i]) out[i].emplace_back(x);
  return out;
}

QMat matmul(const QMat& a, const QMat& b) {
  QMat c(a.size(), QVec(b.empty() ? 0 : b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

QMat transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat t(a[0].size(), QVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QVec mul(const QMat& a, const QVec& v) {
  QVec out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

QVec mul_row(const QVec& v, const QMat& a) {
  QVec out(a.empty() ? 0 : a[0].size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j] += v[i] * a[i][j];
  }
  return out;
}

QVec mul(const IMat& a, const QVec& v) {
  QVec out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0) out[i] += a[i][j] * v[j];
  return out;
}

RVec mul(const IMat& a, const RVec& v) {
  RVec out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

QVec operator+(const QVec& a, const QVec& b) {
  QVec c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

QVec operator-(const QVec& a, const QVec& b) {
  QVec c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

QVec operator-(const QVec& a) {
  QVec c(a);
  for (auto& x : c) x = -x;
  return c;
}

QVec operator*(const Rational& s, const QVec& a) {
  QVec c(a);
  for (auto& x : c) x *= s;
  return c;
}

Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dot(const RVec& a, const RVec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

template <class T>
T det_impl(std::vector<std::vector<T>> a) {
  const std::size_t n = a.size();
  T d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (std::abs(a[p][c]) == 0) return T(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      T f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

template <class T>
T permanent_impl(const std::vector<std::vector<T>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return T(1);
  T total = 0;
  // Ryser with Gray-code subset order.
  std::vector<T> rowsum(n, T(0));
  unsigned long long prev = 0;
  for (unsigned long long k = 1; k < (1ULL << n); ++k) {
    unsigned long long g = k ^ (k >> 1);
    unsigned long long diff = g ^ prev;
    int j = __builtin_ctzll(diff);
    bool added = (g >> j) & 1ULL;
    for (int i = 0; i < n; ++i) rowsum[i] += added ? a[i][j] : -a[i][j];
    prev = g;
    T prod = 1;
    for (int i = 0; i < n; ++i) prod *= rowsum[i];
    int bits = __builtin_popcountll(g);
    total += ((n - bits) % 2 == 0) ? prod : -prod;
  }
  return total;
}

}  // namespace

Complex det(std::vector<std::vector<Complex>> a) { return det_impl(std::move(a)); }
double det(std::vector<std::vector<double>> a) { return det_impl(std::move(a)); }
Complex permanent(const std::vector<std::vector<Complex>>& a) { return permanent_impl(a); }
double permanent(const std::vector<std::vector<double>>& a) { return permanent_impl(a); }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace wof
