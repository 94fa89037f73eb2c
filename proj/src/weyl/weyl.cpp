#include "wof/weyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>

namespace wof {

const char* to_string(FDClass c) {
  switch (c) {
    case FDClass::interior: return "interior";
    case FDClass::boundary: return "boundary";
    case FDClass::outside: return "outside";
  }
  return "?";
}

namespace {

void require_group(const RootSystem& rs) {
  if (!rs.group_enumerable())
    throw DomainError("group enumeration is not supported for " + rs.label());
}

IMat identity(int n) {
  IMat m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat matmul(const IMat& a, const IMat& b) {
  const std::size_t n = a.size();
  IMat c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

struct MatHash {
  std::size_t operator()(const IMat& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& row : m)
      for (int x : row) h = (h ^ static_cast<std::size_t>(x + 1000)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

std::vector<WeylElement> generators(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<WeylElement> gens;
  for (int i = 0; i < n; ++i) {
    // r_i x = x - x_i * (row i of M): column i of the matrix is e_i - M[i,:]^T.
    IMat m = identity(n);
    for (int k = 0; k < n; ++k) m[k][i] -= rs.cartan()[i][k];
    gens.push_back({m, -1, {i}});
  }
  return gens;
}

std::vector<WeylElement> generate_group(const RootSystem& rs, std::uint64_t limit) {
  require_group(rs);
  if (rs.weyl_order() > limit)
    throw SizeLimitError("|W(" + rs.label() + ")| = " + std::to_string(rs.weyl_order()) +
                         " exceeds the group size limit " + std::to_string(limit));
  const auto gens = generators(rs);
  std::vector<WeylElement> group;
  group.reserve(rs.weyl_order());
  std::unordered_map<IMat, std::size_t, MatHash> index;
  group.push_back({identity(rs.rank()), 1, {}});
  index.emplace(group.back().matrix, 0);
  // BFS: words are shortest, so det = (-1)^depth.
  for (std::size_t head = 0; head < group.size(); ++head) {
    for (const auto& g : gens) {
      IMat m = matmul(g.matrix, group[head].matrix);
      if (index.count(m)) continue;
      WeylElement e;
      e.matrix = std::move(m);
      e.det = -group[head].det;
      e.word.reserve(group[head].word.size() + 1);
      e.word.push_back(g.word[0]);
      e.word.insert(e.word.end(), group[head].word.begin(), group[head].word.end());
      index.emplace(e.matrix, group.size());
      group.push_back(std::move(e));
      if (group.size() > limit) throw SizeLimitError("group generation exceeded limit");
    }
  }
  if (group.size() != rs.weyl_order())
    throw DomainError("generated group order " + std::to_string(group.size()) + " differs from |W| = " +
                      std::to_string(rs.weyl_order()));
  return group;
}

const std::vector<WeylElement>& weyl_group(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<const std::vector<WeylElement>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[rs.label()];
  if (!slot) slot = std::make_unique<const std::vector<WeylElement>>(generate_group(rs));
  return *slot;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.matrix = matmul(a.matrix, b.matrix);
  c.det = a.det * b.det;
  c.word = a.word;
  c.word.insert(c.word.end(), b.word.begin(), b.word.end());
  return c;
}

QVec act(const WeylElement& w, const QVec& x) { return mul(w.matrix, x); }
RVec act(const WeylElement& w, const RVec& x) { return mul(w.matrix, x); }

QVec reflect(const RootSystem& rs, int i, const QVec& x) {
  QVec y = x;
  const Rational xi = x[i];
  if (xi == 0) return y;
  for (int k = 0; k < rs.rank(); ++k) y[k] -= xi * rs.cartan()[i][k];
  return y;
}

RVec reflect(const RootSystem& rs, int i, const RVec& x) {
  RVec y = x;
  const double xi = x[i];
  for (int k = 0; k < rs.rank(); ++k) y[k] -= xi * rs.cartan()[i][k];
  return y;
}

bool is_dominant(const QVec& x) {
  for (const auto& v : x)
    if (v < 0) return false;
  return true;
}

bool is_strictly_dominant(const QVec& x) {
  for (const auto& v : x)
    if (v <= 0) return false;
  return true;
}

namespace {

DominantForm walk(const RootSystem& rs, const QVec& x, WeylElement* path) {
  if (x.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("dimension mismatch in to_dominant");
  DominantForm out{x, 1, false};
  const auto gens = path ? generators(rs) : std::vector<WeylElement>{};
  if (path) *path = {identity(rs.rank()), 1, {}};
  for (;;) {
    int pick = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (out.weight[i] < 0 && (pick < 0 || out.weight[i] < out.weight[pick])) pick = i;
    if (pick < 0) break;
    out.weight = reflect(rs, pick, out.weight);
    out.sign = -out.sign;
    if (path) *path = compose(gens[pick], *path);
  }
  for (const auto& v : out.weight)
    if (v == 0) out.on_wall = true;
  return out;
}

}  // namespace

DominantForm to_dominant(const RootSystem& rs, const QVec& x) { return walk(rs, x, nullptr); }

DominantForm to_dominant(const RootSystem& rs, const QVec& x, WeylElement& path) { return walk(rs, x, &path); }

SignedOrbit signed_orbit(const RootSystem& rs, const QVec& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("dimension mismatch in signed_orbit");
  if (!is_strictly_dominant(lambda))
    throw DomainError("signed orbits need a strictly dominant weight; (" + to_string(lambda) + ") is not");
  SignedOrbit o{lambda, {}};
  const auto& group = weyl_group(rs);
  o.points.reserve(group.size());
  for (const auto& w : group) o.points.push_back({act(w, lambda), w.det});
  return o;
}

std::vector<QVec> orbit(const RootSystem& rs, const QVec& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("dimension mismatch in orbit");
  require_group(rs);
  // Reflection closure on the integer vector L*lambda (L = common denominator); the
  // orbit of a lattice point stays in the lattice, so no rationals are needed in the loop.
  boost::multiprecision::cpp_int L = 1, bound = 0;
  for (const auto& v : lambda) L = boost::multiprecision::lcm(L, denominator(v));
  IVec start;
  for (const auto& v : lambda) {
    const boost::multiprecision::cpp_int k = numerator(v) * (L / denominator(v));
    if (abs(k) > bound) bound = abs(k);
    start.push_back(k.convert_to<long long>());
  }
  if (bound > 1000000000000LL || L > 1000000000000LL) {
    std::set<QVec> seen{lambda};
    std::vector<QVec> queue{lambda};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int i = 0; i < rs.rank(); ++i) {
        if (queue[head][i] == 0) continue;
        QVec y = reflect(rs, i, queue[head]);
        if (seen.insert(y).second) queue.push_back(std::move(y));
      }
    return {seen.begin(), seen.end()};
  }
  std::set<IVec> seen{start};
  std::vector<IVec> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int i = 0; i < rs.rank(); ++i) {
      const long long xi = queue[head][i];
      if (xi == 0) continue;
      IVec y = queue[head];
      for (int k = 0; k < rs.rank(); ++k) y[k] -= xi * rs.cartan()[i][k];
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  std::vector<QVec> out;
  out.reserve(seen.size());
  const Rational inv = Rational(1) / Rational(L);
  for (const auto& y : seen) {
    QVec v;
    for (auto c : y) v.push_back(Rational(c) * inv);
    out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t stabilizer_order(const RootSystem& rs, const QVec& lambda) {
  std::uint64_t count = 0;
  for (const auto& w : weyl_group(rs))
    if (act(w, lambda) == lambda) ++count;
  return count;
}

QVec reflect_highest(const RootSystem& rs, const QVec& x) {
  // r_xi x = x - <x, xi^vee> xi, and <x, xi^vee> = sum_k x_k q_k.
  Rational pairing = 0;
  for (int k = 0; k < rs.rank(); ++k) pairing += x[k] * rs.comarks()[k];
  return x - pairing * rs.highest_root();
}

QVec affine_r0(const RootSystem& rs, const QVec& x) {
  if (x.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("dimension mismatch in affine_r0");
  return reflect_highest(rs, x) + rs.highest_root();
}

RVec affine_r0(const RootSystem& rs, const RVec& x) {
  if (x.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("dimension mismatch in affine_r0");
  double pairing = 0;
  for (int k = 0; k < rs.rank(); ++k) pairing += x[k] * rs.comarks()[k];
  RVec y = x;
  for (int k = 0; k < rs.rank(); ++k) y[k] += (1.0 - pairing) * to_double(rs.highest_root()[k]);
  return y;
}

FDClass in_fundamental_domain(const RootSystem& rs, const QVec& x) {
  if (x.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("dimension mismatch");
  bool boundary = false;
  Rational level = 0;
  for (int k = 0; k < rs.rank(); ++k) {
    if (x[k] < 0) return FDClass::outside;
    if (x[k] == 0) boundary = true;
    level += x[k] * rs.comarks()[k];
  }
  if (level > 1) return FDClass::outside;
  if (level == 1) boundary = true;
  return boundary ? FDClass::boundary : FDClass::interior;
}

FDClass in_fundamental_domain(const RootSystem& rs, const RVec& x, double tol) {
  if (x.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("dimension mismatch");
  bool boundary = false;
  double level = 0;
  for (int k = 0; k < rs.rank(); ++k) {
    if (x[k] < -tol) return FDClass::outside;
    if (x[k] <= tol) boundary = true;
    level += x[k] * rs.comarks()[k];
  }
  if (level > 1 + tol) return FDClass::outside;
  if (level >= 1 - tol) boundary = true;
  return boundary ? FDClass::boundary : FDClass::interior;
}

}  // namespace wof
