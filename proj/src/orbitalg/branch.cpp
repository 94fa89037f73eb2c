#include "wof/orbitalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace wof {

BranchRule BranchRule::parse(std::string_view s) {
  BranchRule r;
  if (s == "drop" || s == "drop-last" || s == "drop-first") return r;
  if (s.substr(0, 6) == "split:") {
    r.kind = Kind::split;
    const std::string num(s.substr(6));
    std::size_t used = 0;
    try {
      r.p = std::stoi(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size() || r.p < 1) throw DomainError("bad split size in rule '" + std::string(s) + "'");
    return r;
  }
  throw DomainError("unknown branch rule '" + std::string(s) + "' (expected drop or split:p)");
}

std::string BranchRule::label() const { return kind == Kind::drop ? "drop" : "split:" + std::to_string(p); }

namespace {

std::uint64_t block_order(const BranchBlock& b) {
  std::uint64_t f = factorial(b.dim);
  if (b.family == Family::B || b.family == Family::C) f <<= b.dim;
  if (b.family == Family::D) f <<= (b.dim - 1);
  return f;
}

// Strict dominance and wall membership of the W'-orbit of v, for one block.
struct BlockClass {
  bool strict;
  bool wall;
};

BlockClass classify(Family f, const QVec& v) {
  const std::size_t k = v.size();
  QVec a = v;
  if (f != Family::A)
    for (auto& x : a) x = abs(x);
  std::vector<Rational> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  bool wall = false;
  for (std::size_t i = 0; i + 1 < k; ++i) wall |= sorted[i] == sorted[i + 1];
  if ((f == Family::B || f == Family::C) && sorted.back() == 0) wall = true;
  bool strict = !wall;
  for (std::size_t i = 0; strict && i + 1 < k; ++i) {
    if (f == Family::D && i + 2 == k)
      strict = v[i] > abs(v[i + 1]);
    else
      strict = v[i] > v[i + 1];
  }
  if (strict && (f == Family::B || f == Family::C)) strict = v.back() > 0;
  return {strict, wall};
}

}  // namespace

Complex anti_block(Family f, const RVec& m, const RVec& x) {
  const std::size_t n = m.size();
  if (x.size() != n) throw DomainError("anti_block: dimension mismatch");
  std::vector<std::vector<Complex>> e(n, std::vector<Complex>(n)), c(n, std::vector<Complex>(n)),
      s(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double t = 2 * kPi * m[i] * x[j];
      e[i][j] = std::polar(1.0, t);
      c[i][j] = std::cos(t);
      s[i][j] = std::sin(t);
    }
  const Complex two_i(0, 2);
  switch (f) {
    case Family::A: return det(e);
    case Family::B:
    case Family::C: return std::pow(two_i, static_cast<int>(n)) * det(s);
    case Family::D:
      return std::pow(2.0, static_cast<int>(n) - 1) * det(c) + 0.5 * std::pow(two_i, static_cast<int>(n)) * det(s);
    default: throw DomainError("anti_block: no orthogonal model");
  }
}

BranchResult branch(const RootSystem& rs, const BranchRule& rule, const QVec& m) {
  if (!rs.has_orthogonal_model()) throw DomainError("branching needs an orthogonal model; " + rs.label() + " has none");
  const int dim = rs.orth_dim();
  if (m.size() != static_cast<std::size_t>(dim))
    throw DomainError("branch: expected " + std::to_string(dim) + " orthogonal coordinates");
  if (!is_strictly_dominant(from_orthogonal(rs, m)))
    throw DomainError("branch: label (" + to_string(from_orthogonal(rs, m)) + ") is not strictly dominant");
  const Family f = rs.family();
  BranchResult r;
  if (rule.kind == BranchRule::Kind::drop) {
    // A_n keeps the first n coordinates; B/C/D keep the last n-1.
    if (f == Family::A) {
      if (dim < 3) throw DomainError("drop rule needs A_n with n >= 2");
      for (int i = 0; i + 1 < dim; ++i) r.kept.push_back(i);
      r.target = {{Family::A, dim - 1}};
    } else {
      if (dim < 3 && f == Family::D) throw DomainError("drop rule needs D_n with n >= 4");
      for (int i = 1; i < dim; ++i) r.kept.push_back(i);
      r.target = {{f, dim - 1}};
    }
  } else {
    const int p = rule.p, q = dim - p;
    if (p < 1 || q < 1 || (f == Family::D && q < 2))
      throw DomainError("split:" + std::to_string(p) + " does not fit " + rs.label());
    for (int i = 0; i < dim; ++i) r.kept.push_back(i);
    r.target = {{Family::A, p}, {f, q}};
    if (f == Family::A) r.target[1].family = Family::A;
  }

  std::map<std::vector<QVec>, long long> acc;
  const auto group = orth_group(f, dim);
  r.source_points = group.size();
  for (const auto& g : group) {
    const QVec pt = act(g, m);
    std::vector<QVec> blocks;
    std::size_t at = 0;
    for (const auto& b : r.target) {
      QVec v;
      for (int k = 0; k < b.dim; ++k) v.push_back(pt[r.kept[at++]]);
      blocks.push_back(std::move(v));
    }
    acc[blocks] += g.det;
  }

  std::uint64_t covered = 0, wprime = 1;
  for (const auto& b : r.target) wprime *= block_order(b);
  for (const auto& [blocks, c] : acc) {
    if (c == 0) continue;
    bool strict = true, wall = false;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto k = classify(r.target[i].family, blocks[i]);
      strict &= k.strict;
      wall |= k.wall;
    }
    if (wall) throw std::logic_error("restricted signed orbit left a nonzero wall point");
    if (!strict) continue;
    r.terms.push_back({c, blocks});
    covered += static_cast<std::uint64_t>(std::llabs(c)) * wprime;
  }
  if (covered > r.source_points) throw std::logic_error("branch: more points than the source orbit");
  r.cancelled = r.source_points - covered;
  return r;
}

RVec branch_embed(const RootSystem& rs, const BranchResult& r, const RVec& x_target) {
  if (x_target.size() != r.kept.size()) throw DomainError("branch_embed: dimension mismatch");
  RVec x(rs.orth_dim(), 0.0);
  for (std::size_t i = 0; i < r.kept.size(); ++i) x[r.kept[i]] = x_target[i];
  return x;
}

Complex evaluate(const BranchResult& r, const RVec& x) {
  if (x.size() != r.kept.size()) throw DomainError("branch evaluate: dimension mismatch");
  Complex total = 0;
  for (const auto& t : r.terms) {
    Complex v = static_cast<double>(t.coeff);
    std::size_t at = 0;
    for (std::size_t b = 0; b < r.target.size(); ++b) {
      const RVec xb(x.begin() + at, x.begin() + at + r.target[b].dim);
      at += r.target[b].dim;
      v *= anti_block(r.target[b].family, to_double(t.blocks[b]), xb);
    }
    total += v;
  }
  return total;
}

std::string to_string(const BranchResult& r) {
  if (r.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : r.terms) {
    long long c = t.coeff;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    if (c < 0) c = -c;
    if (c != 1) out << c << " ";
    out << "O^±(";
    for (std::size_t b = 0; b < t.blocks.size(); ++b) out << (b ? ")(" : "") << to_string(t.blocks[b]);
    out << ")";
  }
  return out.str();
}

nlohmann::json to_json(const BranchResult& r) {
  nlohmann::json target = nlohmann::json::array(), terms = nlohmann::json::array();
  for (const auto& b : r.target) target.push_back(std::string(1, family_letter(b.family)) + std::to_string(b.dim));
  for (const auto& t : r.terms) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : t.blocks) {
      nlohmann::json v = nlohmann::json::array();
      for (const auto& c : b) v.push_back(to_string(c));
      blocks.push_back(v);
    }
    terms.push_back({{"coeff", t.coeff}, {"blocks", blocks}});
  }
  return {{"target_blocks", target},
          {"terms", terms},
          {"source_points", r.source_points},
          {"cancelled_points", r.cancelled}};
}

}  // namespace wof
