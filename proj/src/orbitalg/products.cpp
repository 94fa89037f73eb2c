#include "wof/orbitalg.hpp"

#include <map>
#include <sstream>

namespace wof {

long long OrbitSum::coeff(const QVec& label) const {
  for (const auto& t : terms)
    if (t.label == label) return t.coeff;
  return 0;
}

std::string to_string(const OrbitSum& s) {
  if (s.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : s.terms) {
    long long c = t.coeff;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    if (c < 0) c = -c;
    if (c != 1) out << c << " ";
    out << (t.type == OrbitType::signed_orbit ? "O^±(" : "O(") << to_string(t.label) << ")";
  }
  return out.str();
}

nlohmann::json to_json(const OrbitSum& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : s.terms) {
    nlohmann::json label = nlohmann::json::array();
    for (const auto& v : t.label) label.push_back(to_string(v));
    terms.push_back({{"coeff", t.coeff},
                     {"label", label},
                     {"type", t.type == OrbitType::signed_orbit ? "signed" : "plain"}});
  }
  return {{"terms", terms}};
}

namespace {

using Acc = std::map<QVec, long long>;

void check_dims(const RootSystem& rs, const QVec& a, const QVec& b) {
  if (a.size() != static_cast<std::size_t>(rs.rank()) || b.size() != static_cast<std::size_t>(rs.rank()))
    throw DomainError("dimension mismatch in orbit product");
}

void require_strict(const QVec& v) {
  if (!is_strictly_dominant(v))
    throw DomainError("signed orbits need a strictly dominant weight; (" + to_string(v) + ") is not");
}

void require_dominant(const QVec& v) {
  if (!is_dominant(v)) throw DomainError("orbit labels must be dominant; (" + to_string(v) + ") is not");
}

OrbitSum collect(const Acc& acc, OrbitType type) {
  OrbitSum s;
  for (const auto& [label, c] : acc)
    if (c != 0) s.terms.push_back({c, label, type});
  return s;  // std::map keeps the labels sorted
}

// A signed multiset of points that is anti-invariant under W decomposes into signed orbits:
// the coefficient of O^±(nu) is the weight at nu itself, and wall points carry nothing.
OrbitSum signed_decomposition(const RootSystem& rs, const Acc& acc) {
  Acc strict;
  for (const auto& [p, c] : acc) {
    if (c == 0) continue;
    const auto d = to_dominant(rs, p);
    if (d.on_wall) throw std::logic_error("signed expansion left a nonzero wall point " + to_string(p));
    const auto it = acc.find(d.weight);
    if (it == acc.end() || it->second * d.sign != c)
      throw std::logic_error("signed expansion is not anti-invariant at " + to_string(p));
    if (p == d.weight) strict[p] = c;
  }
  return collect(strict, OrbitType::signed_orbit);
}

OrbitSum plain_decomposition(const RootSystem& rs, const Acc& acc) {
  Acc dom;
  for (const auto& [p, c] : acc) {
    if (c == 0) continue;
    const auto d = to_dominant(rs, p);
    const auto it = acc.find(d.weight);
    if (it == acc.end() || it->second != c) throw std::logic_error("expansion is not W-invariant at " + to_string(p));
    if (p == d.weight) dom[p] = c;
  }
  return collect(dom, OrbitType::plain);
}

}  // namespace

OrbitSum product_plain_signed(const RootSystem& rs, const QVec& lambda, const QVec& mu) {
  check_dims(rs, lambda, mu);
  require_dominant(lambda);
  require_strict(mu);
  Acc acc;
  for (const auto& p : orbit(rs, lambda)) {
    const auto d = to_dominant(rs, p + mu);
    if (!d.on_wall) acc[d.weight] += d.sign;
  }
  return collect(acc, OrbitType::signed_orbit);
}

OrbitSum product_plain_signed_bruteforce(const RootSystem& rs, const QVec& lambda, const QVec& mu) {
  check_dims(rs, lambda, mu);
  require_dominant(lambda);
  require_strict(mu);
  const auto so = signed_orbit(rs, mu);
  Acc acc;
  for (const auto& p : orbit(rs, lambda))
    for (const auto& s : so.points) acc[p + s.w] += s.sign;
  return signed_decomposition(rs, acc);
}

OrbitSum product_signed_signed(const RootSystem& rs, const QVec& lambda, const QVec& mu) {
  check_dims(rs, lambda, mu);
  require_strict(lambda);
  require_strict(mu);
  const auto a = signed_orbit(rs, lambda), b = signed_orbit(rs, mu);
  Acc acc;
  for (const auto& p : a.points)
    for (const auto& q : b.points) acc[p.w + q.w] += p.sign * q.sign;
  return plain_decomposition(rs, acc);
}

OrbitSum product_plain_plain(const RootSystem& rs, const QVec& lambda, const QVec& mu) {
  check_dims(rs, lambda, mu);
  require_dominant(lambda);
  require_dominant(mu);
  const auto a = orbit(rs, lambda), b = orbit(rs, mu);
  Acc acc;
  for (const auto& p : a)
    for (const auto& q : b) acc[p + q] += 1;
  return plain_decomposition(rs, acc);
}

OrbitSum expand_function_product(const RootSystem& rs, OrbitKind a, const QVec& lambda, OrbitKind b,
                                 const QVec& mu) {
  const bool anti_a = a == OrbitKind::antisymmetric, anti_b = b == OrbitKind::antisymmetric;
  OrbitSum s;
  if (anti_a && anti_b)
    s = product_signed_signed(rs, lambda, mu);
  else if (anti_a)
    s = product_plain_signed(rs, mu, lambda);
  else if (anti_b)
    s = product_plain_signed(rs, lambda, mu);
  else
    s = product_plain_plain(rs, lambda, mu);
  long long scale = 1;
  if (a == OrbitKind::normalized_symmetric) scale *= static_cast<long long>(stabilizer_order(rs, lambda));
  if (b == OrbitKind::normalized_symmetric) scale *= static_cast<long long>(stabilizer_order(rs, mu));
  for (auto& t : s.terms) t.coeff *= scale;
  return s;
}

Complex evaluate(const RootSystem& rs, const OrbitSum& s, const RVec& x) {
  Complex v = 0;
  for (const auto& t : s.terms) {
    const auto kind = t.type == OrbitType::signed_orbit ? OrbitKind::antisymmetric : OrbitKind::symmetric;
    v += static_cast<double>(t.coeff) * eval(rs, kind, t.label, x);
  }
  return v;
}

}  // namespace wof
