#include "wof/orbitfn.hpp"

#include <algorithm>
#include <cctype>

namespace wof {

AnIdentity parse_an_identity(std::string_view s) {
  std::string k(s);
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::tolower(c); });
  if (k == "r1") return AnIdentity::R1;
  if (k == "cauchy") return AnIdentity::cauchy;
  if (k == "cha3") return AnIdentity::cha3;
  if (k == "cha4") return AnIdentity::cha4;
  if (k == "cha5") return AnIdentity::cha5;
  if (k == "cha6") return AnIdentity::cha6;
  if (k == "cha7") return AnIdentity::cha7;
  throw DomainError("unknown identity '" + std::string(s) + "'");
}

const char* to_string(AnIdentity id) {
  switch (id) {
    case AnIdentity::R1: return "R1";
    case AnIdentity::cauchy: return "cauchy";
    case AnIdentity::cha3: return "cha3";
    case AnIdentity::cha4: return "cha4";
    case AnIdentity::cha5: return "cha5";
    case AnIdentity::cha6: return "cha6";
    case AnIdentity::cha7: return "cha7";
  }
  return "?";
}

Complex alternant(const std::vector<long long>& l, const std::vector<Complex>& y) {
  if (l.size() != y.size()) throw DomainError("alternant: exponent and variable counts differ");
  std::vector<std::vector<Complex>> a(l.size(), std::vector<Complex>(y.size()));
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) a[i][j] = std::pow(y[j], static_cast<int>(l[i]));
  return det(std::move(a));
}

BigInt vandermonde(const std::vector<long long>& v) {
  BigInt p = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) p *= BigInt(v[i] - v[j]);
  return p;
}

namespace {

void partitions_rec(int left, int parts, long long cap, std::vector<long long>& cur,
                    std::vector<std::vector<long long>>& out) {
  if (parts == 0) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (long long v = std::min<long long>(cap, left); v >= 0; --v) {
    if (v * parts < left) break;
    cur.push_back(v);
    partitions_rec(static_cast<int>(left - v), parts - 1, v, cur, out);
    cur.pop_back();
  }
}

std::vector<long long> rho_vec(int n) {
  std::vector<long long> r(n);
  for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
  return r;
}

std::vector<long long> plus(std::vector<long long> a, const std::vector<long long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<long long> pad(std::vector<long long> a, std::size_t n) {
  a.resize(n, 0);
  return a;
}

// (m1, m1, m2, m2, ...) padded with zeros to length n.
std::vector<long long> doubled(const std::vector<long long>& m, std::size_t n) {
  std::vector<long long> out;
  for (auto v : m) {
    out.push_back(v);
    out.push_back(v);
  }
  return pad(out, n);
}

BigInt binomial(long long n, long long k) {
  BigInt b = 1;
  for (long long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

void require_disc(const std::vector<Complex>& v, const char* name) {
  if (v.empty()) throw DomainError(std::string("identity needs at least one ") + name + " variable");
  for (const auto& c : v)
    if (!(std::abs(c) < 1)) throw DomainError(std::string("series diverges: need |") + name + "_i| < 1");
}

Complex vandermonde(const std::vector<Complex>& y) {
  Complex p = 1;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j) p *= y[i] - y[j];
  return p;
}

}  // namespace

std::vector<std::vector<long long>> partitions(int total, int parts) {
  std::vector<std::vector<long long>> out;
  if (total < 0 || parts < 0) return out;
  std::vector<long long> cur;
  partitions_rec(total, parts, total, cur, out);
  return out;
}

AnIdentityResult an_identity(AnIdentity id, const AnIdentityParams& p) {
  AnIdentityResult res;
  if (p.cutoff < 0) throw DomainError("cutoff must be nonnegative");
  switch (id) {
    case AnIdentity::R1: {
      require_disc(p.y, "y");
      require_disc(p.z, "z");
      // Symmetric in the two variable sets; sum over partitions with at most min(n1, n2) parts.
      const auto& y = p.y.size() <= p.z.size() ? p.y : p.z;
      const auto& z = p.y.size() <= p.z.size() ? p.z : p.y;
      const auto r1 = rho_vec(static_cast<int>(y.size())), r2 = rho_vec(static_cast<int>(z.size()));
      Complex prod = 1;
      for (auto a : y)
        for (auto b : z) prod /= 1.0 - a * b;
      res.lhs = alternant(r1, y) * alternant(r2, z) * prod;
      for (int k = 0; k <= p.cutoff; ++k)
        for (const auto& s : partitions(k, static_cast<int>(y.size()))) {
          res.rhs += alternant(plus(s, r1), y) * alternant(plus(pad(s, z.size()), r2), z);
          ++res.terms;
        }
      res.residual = std::abs(res.lhs - res.rhs);
      break;
    }
    case AnIdentity::cauchy: {
      require_disc(p.y, "y");
      require_disc(p.z, "z");
      if (p.y.size() != p.z.size()) throw DomainError("the Cauchy determinant needs as many y as z variables");
      const std::size_t n = p.y.size();
      std::vector<std::vector<Complex>> c(n, std::vector<Complex>(n));
      Complex prod = 1;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          c[i][j] = 1.0 / (1.0 - p.y[i] * p.z[j]);
          prod *= c[i][j];
        }
      res.lhs = det(c);
      const Complex closed = vandermonde(p.y) * vandermonde(p.z) * prod;
      const auto rho = rho_vec(static_cast<int>(n));
      for (int k = 0; k <= p.cutoff; ++k)
        for (const auto& s : partitions(k, static_cast<int>(n))) {
          const auto l = plus(s, rho);
          res.rhs += alternant(l, p.y) * alternant(l, p.z);
          ++res.terms;
        }
      res.residual = std::max(std::abs(res.lhs - res.rhs), std::abs(res.lhs - closed));
      break;
    }
    case AnIdentity::cha3:
    case AnIdentity::cha4: {
      require_disc(p.y, "y");
      if (!(std::abs(p.t) < 1)) throw DomainError("series diverges: need |t| < 1");
      const auto& y = p.y;
      const int n = static_cast<int>(y.size());
      const bool diag = id == AnIdentity::cha3;
      const auto rho = rho_vec(n);
      Complex prod = 1;
      for (int i = 0; i < n; ++i)
        for (int j = diag ? i : i + 1; j < n; ++j) prod /= 1.0 - p.t * y[i] * y[j];
      res.rhs = alternant(rho, y) * prod;
      const int parts = diag ? n : n / 2;
      Complex tk = 1;
      for (int k = 0; k <= p.cutoff; ++k, tk *= p.t)
        for (const auto& m : partitions(k, parts)) {
          std::vector<long long> l;
          if (diag) {
            l = m;
            for (auto& v : l) v *= 2;
          } else {
            l = doubled(m, n);
          }
          res.lhs += alternant(plus(l, rho), y) * tk;
          ++res.terms;
        }
      res.residual = std::abs(res.lhs - res.rhs);
      break;
    }
    case AnIdentity::cha5: {
      if (p.s < 1 || p.r < p.s) throw DomainError("cha5 needs r >= s >= 1");
      if (p.m < 0) throw DomainError("cha5 needs m >= 0");
      const auto rs = rho_vec(p.s), rr = rho_vec(p.r);
      for (const auto& m : partitions(p.m, p.s)) {
        res.lhs_exact += vandermonde(plus(m, rs)) * vandermonde(plus(pad(m, p.r), rr));
        ++res.terms;
      }
      const long long sr = static_cast<long long>(p.s) * p.r;
      res.rhs_exact = binomial(sr + p.m - 1, p.m) * vandermonde(rs) * vandermonde(rr);
      break;
    }
    case AnIdentity::cha6:
    case AnIdentity::cha7: {
      const bool six = id == AnIdentity::cha6;
      if (p.n < (six ? 1 : 2)) throw DomainError(six ? "cha6 needs n >= 1" : "cha7 needs n >= 2");
      if (p.m < 0) throw DomainError("m must be nonnegative");
      const auto rho = rho_vec(p.n);
      for (const auto& m : partitions(p.m, six ? p.n : p.n / 2)) {
        std::vector<long long> l;
        if (six) {
          l = m;
          for (auto& v : l) v *= 2;
        } else {
          l = doubled(m, p.n);
        }
        res.lhs_exact += vandermonde(plus(l, rho));
        ++res.terms;
      }
      const long long big = six ? p.n * (p.n + 1) / 2 : p.n * (p.n - 1) / 2;
      res.rhs_exact = binomial(big + p.m - 1, p.m) * vandermonde(rho);
      break;
    }
  }
  if (id == AnIdentity::cha5 || id == AnIdentity::cha6 || id == AnIdentity::cha7) {
    res.lhs = Complex(res.lhs_exact.convert_to<double>(), 0);
    res.rhs = Complex(res.rhs_exact.convert_to<double>(), 0);
    const BigInt diff = res.lhs_exact - res.rhs_exact;
    res.residual = abs(diff).convert_to<double>();
  }
  return res;
}

}  // namespace wof
