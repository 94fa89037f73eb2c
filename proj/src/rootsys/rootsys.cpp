#include "wof/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace wof {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

DiagramId DiagramId::parse(std::string_view label) {
  if (label.size() < 2) throw DomainError("bad diagram label '" + std::string(label) + "'");
  DiagramId id{};
  switch (std::toupper(static_cast<unsigned char>(label[0]))) {
    case 'A': id.family = Family::A; break;
    case 'B': id.family = Family::B; break;
    case 'C': id.family = Family::C; break;
    case 'D': id.family = Family::D; break;
    case 'E': id.family = Family::E; break;
    case 'F': id.family = Family::F; break;
    case 'G': id.family = Family::G; break;
    default: throw DomainError("unknown diagram family in '" + std::string(label) + "'");
  }
  int rank = 0;
  for (char c : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError("bad diagram label '" + std::string(label) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 64) throw DomainError("rank too large in '" + std::string(label) + "'");
  }
  id.rank = rank;
  return id;
}

std::string DiagramId::label() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

Basis parse_basis(std::string_view s) {
  if (s == "omega") return Basis::omega;
  if (s == "alpha") return Basis::alpha;
  if (s == "alpha_check" || s == "coroot") return Basis::alpha_check;
  throw DomainError("unknown basis '" + std::string(s) + "'");
}

namespace {

void check_rank(const DiagramId& id) {
  const int n = id.rank;
  bool ok = false;
  switch (id.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw DomainError("invalid rank " + std::to_string(n) + " for family " + family_letter(id.family));
}

IMat chain(int n) {
  IMat m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

void link(IMat& m, int a, int b) { m[a][b] = m[b][a] = -1; }

IMat build_cartan(const DiagramId& id) {
  const int n = id.rank;
  switch (id.family) {
    case Family::A: return chain(n);
    case Family::B: {
      auto m = chain(n);
      m[n - 2][n - 1] = -2;
      return m;
    }
    case Family::C: {
      auto m = chain(n);
      m[n - 1][n - 2] = -2;
      return m;
    }
    case Family::D: {
      auto m = chain(n - 1);
      for (auto& row : m) row.push_back(0);
      m.emplace_back(n, 0);
      m[n - 1][n - 1] = 2;
      link(m, n - 3, n - 1);
      return m;
    }
    case Family::E: {
      // Chain of n-1 nodes; the extra node hangs off node 3 (E6, E7) or node 5 (E8).
      auto m = chain(n - 1);
      for (auto& row : m) row.push_back(0);
      m.emplace_back(n, 0);
      m[n - 1][n - 1] = 2;
      link(m, n == 8 ? 4 : 2, n - 1);
      return m;
    }
    case Family::F: return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    case Family::G: return {{2, -3}, {-1, 2}};
  }
  return {};
}

QVec build_norms(const DiagramId& id) {
  const int n = id.rank;
  QVec v(n, Rational(2));
  switch (id.family) {
    case Family::B: v[n - 1] = 1; break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) v[i] = 1;
      break;
    case Family::F: v[2] = v[3] = 1; break;
    case Family::G: v[1] = Rational(2, 3); break;
    default: break;
  }
  return v;
}

std::uint64_t order_formula(const DiagramId& id) {
  const int n = id.rank;
  switch (id.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (1ULL << n) * factorial(n);
    case Family::D: return (1ULL << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

// Closure of the simple roots under simple reflections, in the alpha basis.
std::vector<IVec> all_roots(const IMat& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::set<IVec> seen;
  std::vector<IVec> queue;
  for (int i = 0; i < n; ++i) {
    IVec a(n, 0);
    a[i] = 1;
    if (seen.insert(a).second) queue.push_back(a);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const IVec b = queue[head];
    for (int i = 0; i < n; ++i) {
      long long pairing = 0;  // <b, alpha_i^vee> = sum_j b_j M_ji
      for (int j = 0; j < n; ++j) pairing += b[j] * cartan[j][i];
      if (pairing == 0) continue;
      IVec c = b;
      c[i] -= pairing;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return queue;
}

}  // namespace

RootSystem::RootSystem(DiagramId id) : id_(id) {
  check_rank(id_);
  const int n = id_.rank;
  cartan_ = build_cartan(id_);
  cartan_inv_ = inverse(to_qmat(cartan_));
  norms_ = build_norms(id_);
  S_ = cartan_inv_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S_[i][j] *= norms_[j] / 2;
  S_inv_ = inverse(S_);
  S_d_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S_d_[i * n + j] = to_double(S_[i][j]);
  weyl_order_ = order_formula(id_);

  // Gram matrix of simple roots: <a_i,a_j> = M_ij <a_j,a_j>/2.
  QMat gram(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = cartan_[i][j] * norms_[j] / 2;
  auto norm_of = [&](const IVec& a) {
    Rational s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += a[i] * a[j] * gram[i][j];
    return s;
  };
  auto height = [](const IVec& a) { return std::accumulate(a.begin(), a.end(), 0LL); };

  for (const auto& r : all_roots(cartan_))
    if (std::all_of(r.begin(), r.end(), [](long long c) { return c >= 0; })) pos_alpha_.push_back(r);
  std::stable_sort(pos_alpha_.begin(), pos_alpha_.end(), [&](const IVec& a, const IVec& b) {
    auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (const auto& a : pos_alpha_) {
    QVec w(n, Rational(0));
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) w[k] += a[j] * cartan_[j][k];
    pos_omega_.push_back(std::move(w));
  }

  const IVec& xi = pos_alpha_.back();
  highest_ = pos_omega_.back();
  marks_.assign(xi.begin(), xi.end());
  for (int k = 0; k < n; ++k) {
    Rational q = marks_[k] * norms_[k] / 2;
    comarks_.push_back(static_cast<int>(numerator(q)));
  }

  Rational short_norm = *std::min_element(norms_.begin(), norms_.end());
  const IVec* eta = nullptr;
  for (const auto& a : pos_alpha_)
    if (norm_of(a) == short_norm) eta = &a;  // sorted by height, last wins
  for (int k = 0; k < n; ++k) {
    Rational c = (*eta)[k] * norms_[k] / short_norm;
    dual_marks_.push_back(static_cast<int>(numerator(c)));
  }
}

bool RootSystem::has_orthogonal_model() const {
  switch (id_.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D: return true;
    default: return false;
  }
}

bool RootSystem::group_enumerable() const { return has_orthogonal_model() || id_.family == Family::G; }

int RootSystem::orth_dim() const { return id_.family == Family::A ? id_.rank + 1 : id_.rank; }

double RootSystem::orth_scale() const { return id_.family == Family::C ? 0.5 : 1.0; }

Rational inner(const RootSystem& rs, const QVec& x, const QVec& y) {
  const auto n = static_cast<std::size_t>(rs.rank());
  if (x.size() != n || y.size() != n) throw DomainError("dimension mismatch in inner product");
  return dot(x, mul(rs.metric_S(), y));
}

RVec metric_apply(const RootSystem& rs, const RVec& y) {
  const int n = rs.rank();
  const auto& S = rs.metric_S_double();
  RVec out(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += S[i * n + j] * y[j];
  return out;
}

double inner(const RootSystem& rs, const RVec& x, const RVec& y) {
  if (x.size() != static_cast<std::size_t>(rs.rank()) || y.size() != x.size())
    throw DomainError("dimension mismatch in inner product");
  return dot(x, metric_apply(rs, y));
}

QVec convert_basis(const RootSystem& rs, const QVec& v, Basis from, Basis to) {
  const int n = rs.rank();
  if (v.size() != static_cast<std::size_t>(n)) throw DomainError("dimension mismatch in convert_basis");
  if (from == to) return v;
  // Go through alpha coordinates: alpha_j = sum_k M_jk omega_k, alpha_j^vee = (2/|a_j|^2) alpha_j.
  QVec a(n);
  switch (from) {
    case Basis::alpha: a = v; break;
    case Basis::alpha_check:
      for (int j = 0; j < n; ++j) a[j] = v[j] * 2 / rs.root_norms()[j];
      break;
    case Basis::omega: a = mul_row(v, rs.cartan_inv()); break;
  }
  switch (to) {
    case Basis::alpha: return a;
    case Basis::alpha_check: {
      QVec b(n);
      for (int j = 0; j < n; ++j) b[j] = a[j] * rs.root_norms()[j] / 2;
      return b;
    }
    case Basis::omega: {
      QVec w(n, Rational(0));
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) w[k] += a[j] * rs.cartan()[j][k];
      return w;
    }
  }
  return a;
}

namespace {

void require_orth(const RootSystem& rs) {
  if (!rs.has_orthogonal_model())
    throw DomainError("no orthogonal coordinates for diagram " + rs.label());
}

template <class T>
std::vector<T> weight_to_orth(Family f, int n, const std::vector<T>& l, const T& offset) {
  std::vector<T> m(f == Family::A ? n + 1 : n, T(0));
  switch (f) {
    case Family::A: {
      T first = 0;
      for (int k = 0; k < n; ++k) first += T(n - k) * l[k];
      m[0] = first / T(n + 1) + offset;
      for (int i = 0; i < n; ++i) m[i + 1] = m[i] - l[i];
      break;
    }
    case Family::B:
      m[n - 1] = l[n - 1] / T(2);
      for (int k = n - 2; k >= 0; --k) m[k] = m[k + 1] + l[k];
      break;
    case Family::C:
      m[n - 1] = l[n - 1];
      for (int k = n - 2; k >= 0; --k) m[k] = m[k + 1] + l[k];
      break;
    case Family::D:
      m[n - 1] = (l[n - 2] - l[n - 1]) / T(2);
      m[n - 2] = (l[n - 2] + l[n - 1]) / T(2);
      for (int k = n - 3; k >= 0; --k) m[k] = m[k + 1] + l[k];
      break;
    default: break;
  }
  return m;
}

template <class T>
std::vector<T> orth_to_weight(Family f, int n, const std::vector<T>& m) {
  std::vector<T> l(n);
  switch (f) {
    case Family::A:
      for (int i = 0; i < n; ++i) l[i] = m[i] - m[i + 1];
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) l[i] = m[i] - m[i + 1];
      l[n - 1] = T(2) * m[n - 1];
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) l[i] = m[i] - m[i + 1];
      l[n - 1] = m[n - 1];
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) l[i] = m[i] - m[i + 1];
      l[n - 2] = m[n - 2] + m[n - 1];
      l[n - 1] = m[n - 2] - m[n - 1];
      break;
    default: break;
  }
  return l;
}

}  // namespace

QVec to_orthogonal(const RootSystem& rs, const QVec& lambda, const Rational& offset) {
  require_orth(rs);
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("dimension mismatch in to_orthogonal");
  return weight_to_orth<Rational>(rs.family(), rs.rank(), lambda, offset);
}

QVec from_orthogonal(const RootSystem& rs, const QVec& m) {
  require_orth(rs);
  if (m.size() != static_cast<std::size_t>(rs.orth_dim())) throw DomainError("dimension mismatch in from_orthogonal");
  return orth_to_weight<Rational>(rs.family(), rs.rank(), m);
}

RVec to_orthogonal(const RootSystem& rs, const RVec& lambda) {
  require_orth(rs);
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("dimension mismatch in to_orthogonal");
  return weight_to_orth<double>(rs.family(), rs.rank(), lambda, 0.0);
}

RVec from_orthogonal(const RootSystem& rs, const RVec& m) {
  require_orth(rs);
  if (m.size() != static_cast<std::size_t>(rs.orth_dim())) throw DomainError("dimension mismatch in from_orthogonal");
  return orth_to_weight<double>(rs.family(), rs.rank(), m);
}

RVec point_to_orthogonal(const RootSystem& rs, const RVec& theta) {
  RVec x = to_orthogonal(rs, theta);
  for (auto& v : x) v *= rs.orth_scale();
  return x;
}

RVec point_from_orthogonal(const RootSystem& rs, const RVec& x) {
  RVec m = x;
  for (auto& v : m) v /= rs.orth_scale();
  return from_orthogonal(rs, m);
}

nlohmann::json to_json(const RootSystem& rs) {
  auto qmat = [](const QMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : m) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& x : r) row.push_back(to_string(x));
      rows.push_back(row);
    }
    return rows;
  };
  nlohmann::json j;
  j["diagram"] = rs.label();
  j["rank"] = rs.rank();
  j["cartan"] = rs.cartan();
  j["cartan_inv"] = qmat(rs.cartan_inv());
  nlohmann::json norms = nlohmann::json::array();
  for (const auto& x : rs.root_norms()) norms.push_back(to_string(x));
  j["root_norms"] = norms;
  j["metric_S"] = qmat(rs.metric_S());
  j["marks"] = rs.marks();
  j["comarks"] = rs.comarks();
  j["rho"] = std::vector<int>(rs.rank(), 1);
  j["weyl_order"] = rs.weyl_order();
  j["positive_roots"] = rs.positive_roots().size();
  return j;
}

}  // namespace wof
