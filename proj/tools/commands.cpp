#include "commands.hpp"

#include "suite.hpp"
#include "wof/analysis.hpp"
#include "wof/orbitalg.hpp"
#include "wof/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

namespace wof::cli {

namespace {

using json = nlohmann::json;

enum class Format { plain, json, csv };

struct Global {
  std::string format;  // empty: the command's natural format
  std::string out;
  std::optional<double> tolerance;
  int threads = 1;
  std::uint64_t seed = 1;
};

Format format_or(const Global& g, Format dflt) {
  if (g.format.empty()) return dflt;
  if (g.format == "json") return Format::json;
  if (g.format == "csv") return Format::csv;
  return Format::plain;
}

double tolerance_or(const Global& g, double dflt) { return g.tolerance.value_or(dflt); }

// stdout, or the --out file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw DomainError("cannot write '" + path + "'");
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// ---- formatting ----

std::string num(double v, const char* f = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v + 0.0);
  return buf;
}

// Parts below 1e-12 of the magnitude are printed as 0.
std::string complex_str(Complex z) {
  const double scale = std::max(1.0, std::abs(z));
  double re = z.real(), im = z.imag();
  if (std::abs(re) < 1e-12 * scale) re = 0;
  if (std::abs(im) < 1e-12 * scale) im = 0;
  return num(re) + (std::signbit(im) ? "-" : "+") + num(std::abs(im)) + "i";
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json qvec_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json envelope(const std::string& diagram, const json& params, const json& payload) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["provenance"] = {{"diagram", diagram}, {"parameters", params}, {"tool", "wof"}, {"version", kVersion}};
  for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
  return j;
}

template <class Row>
std::string join(const Row& r, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += sep;
    s += r[i];
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    while (!cur.empty() && (cur.back() == '\r' || cur.back() == ' ')) cur.pop_back();
    std::size_t b = 0;
    while (b < cur.size() && cur[b] == ' ') ++b;
    out.push_back(cur.substr(b));
  }
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string matrix_str(const QMat& m) {
  std::string s;
  for (const auto& row : m) s += "  " + to_string(row, ' ') + "\n";
  return s;
}

std::string matrix_str(const IMat& m) {
  std::string s;
  for (const auto& row : m) {
    s += " ";
    for (int v : row) s += " " + std::to_string(v);
    s += "\n";
  }
  return s;
}

template <class V>
std::string list_str(const V& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// ---- CSV input ----

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int col(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
  }
  // Indices of prefix1..prefixN, or empty when any is missing.
  std::vector<int> cols(const std::string& prefix, int n) const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
      const int c = col(prefix + std::to_string(i));
      if (c < 0) return {};
      out.push_back(c);
    }
    return out;
  }
};

Table read_csv(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw DomainError("cannot read '" + path + "'");
    in = &file;
  }
  Table t;
  std::string line;
  while (std::getline(*in, line)) {
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    auto cells = split(line);
    if (t.header.empty()) {
      t.header = std::move(cells);
      continue;
    }
    if (cells.size() != t.header.size())
      throw DomainError("'" + path + "': row " + std::to_string(t.rows.size() + 1) + " has " +
                        std::to_string(cells.size()) + " fields, header has " + std::to_string(t.header.size()));
    t.rows.push_back(std::move(cells));
  }
  if (t.header.empty()) throw DomainError("'" + path + "' is empty");
  return t;
}

double cell_double(const std::string& s) {
  if (s.find('/') != std::string::npos) return to_double(parse_rational(s));
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed number '" + s + "'");
  }
  if (used != s.size()) throw DomainError("malformed number '" + s + "'");
  return v;
}

// Exact key for a coordinate tuple: every entry re-printed as a reduced fraction.
std::string key_of(const std::vector<std::string>& cells) {
  std::vector<std::string> parts;
  for (const auto& c : cells) parts.push_back(to_string(parse_rational(c)));
  return join(parts);
}

// ---- deterministic parallel map ----

template <class F>
void parallel_for(std::size_t n, int threads, F&& fn) {
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n));
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(t);
  for (std::size_t k = 0; k < t; ++k)
    pool.emplace_back([&, k] {
      try {
        for (std::size_t i = k; i < n; i += t) fn(i);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

QVec parse_label(const RootSystem& rs, const std::string& s, const char* what = "lambda") {
  QVec v = parse_qvec(s);
  if (v.size() != static_cast<std::size_t>(rs.rank()))
    throw DomainError(std::string(what) + " has " + std::to_string(v.size()) + " coordinates; " + rs.label() +
                      " needs " + std::to_string(rs.rank()));
  return v;
}

RVec parse_point(const RootSystem& rs, const std::string& s) {
  const RVec x = to_double(parse_qvec(s));
  if (x.size() != static_cast<std::size_t>(rs.rank()))
    throw DomainError("x has " + std::to_string(x.size()) + " coordinates; " + rs.label() + " needs " +
                      std::to_string(rs.rank()));
  return x;
}

// ================= rootsys =================

struct RootsysArgs {
  std::string diagram, vector, from = "omega", to = "alpha";
};

int cmd_rootsys_info(const Global& g, const RootsysArgs& a) {
  const auto rs = RootSystem::build(a.diagram);
  Sink sink(g.out);
  auto& os = sink.os();
  if (format_or(g, Format::plain) == Format::json) {
    os << envelope(rs.label(), {{"command", "rootsys info"}}, to_json(rs)).dump(2) << "\n";
    return 0;
  }
  os << "diagram " << rs.label() << "\n";
  os << "rank " << rs.rank() << "\n";
  os << "|W| = " << rs.weyl_order() << "\n";
  os << "positive roots " << rs.positive_roots().size() << "\n";
  os << "root norms <a_i,a_i>: " << to_string(rs.root_norms(), ' ') << "\n";
  os << "cartan M:\n" << matrix_str(rs.cartan());
  os << "cartan inverse:\n" << matrix_str(rs.cartan_inv());
  os << "metric S:\n" << matrix_str(rs.metric_S());
  os << "metric S^-1:\n" << matrix_str(rs.metric_S_inv());
  os << "marks: " << list_str(rs.marks()) << "\n";
  os << "comarks: " << list_str(rs.comarks()) << "\n";
  os << "highest root: (" << to_string(rs.highest_root()) << ")\n";
  return 0;
}

int cmd_rootsys_convert(const Global& g, const RootsysArgs& a) {
  const auto rs = RootSystem::build(a.diagram);
  const QVec v = parse_label(rs, a.vector, "vector");
  QVec out;
  if (a.to == "orthogonal") {
    out = to_orthogonal(rs, convert_basis(rs, v, parse_basis(a.from), Basis::omega));
  } else if (a.from == "orthogonal") {
    throw DomainError("conversion from orthogonal coordinates: use --to with an orthogonal-coordinate vector of rank " +
                      std::to_string(rs.orth_dim()));
  } else {
    out = convert_basis(rs, v, parse_basis(a.from), parse_basis(a.to));
  }
  Sink sink(g.out);
  if (format_or(g, Format::plain) == Format::json)
    sink.os() << envelope(rs.label(), {{"command", "rootsys convert"}, {"from", a.from}, {"to", a.to}, {"vector", a.vector}},
                          {{"result", qvec_json(out)}})
                     .dump(2)
              << "\n";
  else
    sink.os() << to_string(out) << "\n";
  return 0;
}

// ================= orbit =================

struct OrbitArgs {
  std::string diagram, lambda;
};

int cmd_orbit(const Global& g, const OrbitArgs& a, bool is_signed) {
  const auto rs = RootSystem::build(a.diagram);
  const QVec lam = parse_label(rs, a.lambda);
  const json params = {{"command", is_signed ? "orbit signed" : "orbit plain"}, {"lambda", a.lambda}};
  Sink sink(g.out);
  auto& os = sink.os();
  const Format f = format_or(g, Format::plain);
  const int n = rs.rank();
  if (is_signed) {
    const auto so = signed_orbit(rs, lam);
    if (f == Format::json) {
      json pts = json::array();
      for (const auto& p : so.points) pts.push_back({{"w", qvec_json(p.w)}, {"sign", p.sign}});
      os << envelope(rs.label(), params, {{"dominant", qvec_json(so.dominant)}, {"points", pts}}).dump(2) << "\n";
    } else if (f == Format::csv) {
      std::vector<std::string> h;
      for (int i = 1; i <= n; ++i) h.push_back("w" + std::to_string(i));
      h.push_back("sign");
      os << join(h) << "\n";
      for (const auto& p : so.points) os << to_string(p.w) << "," << p.sign << "\n";
    } else {
      os << "dominant (" << to_string(so.dominant) << "), " << so.points.size() << " points\n";
      for (const auto& p : so.points) os << "(" << to_string(p.w) << ") " << (p.sign > 0 ? "+" : "-") << "\n";
    }
    return 0;
  }
  const auto pts = orbit(rs, lam);
  const auto dom = to_dominant(rs, lam).weight;
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({{"w", qvec_json(p)}});
    os << envelope(rs.label(), params,
                   {{"dominant", qvec_json(dom)}, {"stabilizer_order", stabilizer_order(rs, dom)}, {"points", arr}})
              .dump(2)
       << "\n";
  } else if (f == Format::csv) {
    std::vector<std::string> h;
    for (int i = 1; i <= n; ++i) h.push_back("w" + std::to_string(i));
    os << join(h) << "\n";
    for (const auto& p : pts) os << to_string(p) << "\n";
  } else {
    os << "dominant (" << to_string(dom) << "), " << pts.size() << " points\n";
    for (const auto& p : pts) os << "(" << to_string(p) << ")\n";
  }
  return 0;
}

// ================= eval =================

struct EvalArgs {
  std::string diagram, kind = "anti", lambda, x, batch;
};

int cmd_eval(const Global& g, const EvalArgs& a) {
  const auto rs = RootSystem::build(a.diagram);
  const QVec lam = parse_label(rs, a.lambda);
  const bool chi = a.kind == "character" || a.kind == "char";
  std::optional<OrbitFunction> fn;
  if (!chi) fn.emplace(rs, parse_orbit_kind(a.kind), lam);
  const auto value = [&](const RVec& x) { return chi ? character(rs, lam, x) : (*fn)(x); };
  const json params = {{"command", "eval"}, {"kind", a.kind}, {"lambda", a.lambda}};
  Sink sink(g.out);
  auto& os = sink.os();

  if (a.batch.empty()) {
    if (a.x.empty()) throw DomainError("eval needs --x or --batch");
    const RVec x = parse_point(rs, a.x);
    const Complex v = value(x);
    switch (format_or(g, Format::plain)) {
      case Format::json:
        os << envelope(rs.label(), params, {{"x", a.x}, {"value", complex_json(v)}, {"text", complex_str(v)}}).dump(2)
           << "\n";
        break;
      case Format::csv:
        os << "re,im\n" << num(v.real(), "%.17g") << "," << num(v.imag(), "%.17g") << "\n";
        break;
      default:
        os << complex_str(v) << "\n";
    }
    return 0;
  }

  // Batch: omega coordinates from theta*/x* columns, or coweights from c* columns.
  const Table t = read_csv(a.batch);
  const int n = rs.rank();
  std::vector<int> cols = t.cols("theta", n);
  bool coweight = false;
  if (cols.empty()) cols = t.cols("x", n);
  if (cols.empty()) {
    cols = t.cols("c", n);
    coweight = true;
  }
  if (cols.empty())
    throw DomainError("batch file needs columns theta1..theta" + std::to_string(n) + ", x1..x" + std::to_string(n) +
                      " or c1..c" + std::to_string(n));
  std::vector<RVec> xs(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (coweight) {
      QVec c;
      for (int k : cols) c.push_back(parse_rational(t.rows[r][k]));
      xs[r] = to_double(coweight_to_omega(rs, c));
    } else {
      for (int k : cols) xs[r].push_back(cell_double(t.rows[r][k]));
    }
  }
  std::vector<Complex> vals(xs.size());
  parallel_for(xs.size(), g.threads, [&](std::size_t i) { vals[i] = value(xs[i]); });

  if (format_or(g, Format::csv) == Format::json) {
    json rows = json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      json row;
      for (std::size_t c = 0; c < t.header.size(); ++c) row[t.header[c]] = t.rows[r][c];
      row["value"] = complex_json(vals[r]);
      rows.push_back(row);
    }
    os << envelope(rs.label(), params, {{"rows", rows}}).dump(2) << "\n";
    return 0;
  }
  const int re_col = t.col("re"), im_col = t.col("im");
  std::vector<std::string> h = t.header;
  if (re_col < 0) h.push_back("re");
  if (im_col < 0) h.push_back("im");
  os << join(h) << "\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    auto row = t.rows[r];
    const std::string re = num(vals[r].real(), "%.17g"), im = num(vals[r].imag(), "%.17g");
    if (re_col < 0) row.push_back(re); else row[re_col] = re;
    if (im_col < 0) row.push_back(im); else row[im_col] = im;
    os << join(row) << "\n";
  }
  return 0;
}

// ================= product =================

struct ProductArgs {
  std::string diagram;
  std::vector<std::string> signed_labels, plain_labels;
  bool brute = false;
};

int cmd_product(const Global& g, const ProductArgs& a) {
  const auto rs = RootSystem::build(a.diagram);
  if (a.signed_labels.size() + a.plain_labels.size() != 2)
    throw DomainError("product takes exactly two factors (--signed/--plain, each repeatable)");
  OrbitSum s;
  std::string what;
  if (a.signed_labels.size() == 1) {
    const QVec lam = parse_label(rs, a.plain_labels[0]), mu = parse_label(rs, a.signed_labels[0]);
    s = a.brute ? product_plain_signed_bruteforce(rs, lam, mu) : product_plain_signed(rs, lam, mu);
    what = "O(" + to_string(lam) + ") x O^±(" + to_string(mu) + ")";
  } else if (a.signed_labels.size() == 2) {
    const QVec lam = parse_label(rs, a.signed_labels[0]), mu = parse_label(rs, a.signed_labels[1]);
    s = product_signed_signed(rs, lam, mu);
    what = "O^±(" + to_string(lam) + ") x O^±(" + to_string(mu) + ")";
  } else {
    const QVec lam = parse_label(rs, a.plain_labels[0]), mu = parse_label(rs, a.plain_labels[1]);
    s = product_plain_plain(rs, lam, mu);
    what = "O(" + to_string(lam) + ") x O(" + to_string(mu) + ")";
  }
  Sink sink(g.out);
  if (format_or(g, Format::json) == Format::json) {
    json payload = to_json(s);
    payload["product"] = what;
    payload["text"] = to_string(s);
    sink.os() << envelope(rs.label(),
                          {{"command", "product"}, {"signed", a.signed_labels}, {"plain", a.plain_labels},
                           {"method", a.brute ? "brute-force" : "coset"}},
                          payload)
                     .dump(2)
              << "\n";
  } else {
    sink.os() << what << " = " << to_string(s) << "\n";
  }
  return 0;
}

// ================= branch =================

struct BranchArgs {
  std::string from, rule = "drop", lambda, basis = "omega";
};

int cmd_branch(const Global& g, const BranchArgs& a) {
  const auto rs = RootSystem::build(a.from);
  QVec m;
  if (a.basis == "orthogonal") {
    m = parse_qvec(a.lambda);
  } else if (a.basis == "omega") {
    m = to_orthogonal(rs, parse_label(rs, a.lambda));
    // A_n: shift so the last coordinate is 0 (m_i = lambda_i + ... + lambda_n).
    if (rs.family() == Family::A) {
      const Rational last = m.back();
      for (auto& v : m) v -= last;
    }
  } else {
    throw DomainError("unknown basis '" + a.basis + "' (omega, orthogonal)");
  }
  const auto r = branch(rs, BranchRule::parse(a.rule), m);
  Sink sink(g.out);
  if (format_or(g, Format::json) == Format::json) {
    json payload = to_json(r);
    payload["source_orthogonal"] = qvec_json(m);
    payload["text"] = to_string(r);
    sink.os() << envelope(rs.label(), {{"command", "branch"}, {"rule", a.rule}, {"lambda", a.lambda}, {"basis", a.basis}},
                          payload)
                     .dump(2)
              << "\n";
  } else {
    sink.os() << "restriction of phi_(" << to_string(m) << ") = " << to_string(r) << "\n";
  }
  return 0;
}

// ================= grid =================

struct GridArgs {
  std::string diagram;
  int M = 0;
  bool interior = false;
};

int cmd_grid(const Global& g, const GridArgs& a) {
  const auto rs = RootSystem::build(a.diagram);
  if (a.M < 1) throw DomainError("--M must be positive");
  const auto grid = grid_FM(rs, a.M);
  const auto pts = a.interior ? grid.interior() : grid.points;
  const int n = rs.rank();
  Sink sink(g.out);
  auto& os = sink.os();
  switch (format_or(g, Format::csv)) {
    case Format::json: {
      json arr = json::array();
      for (const auto& p : pts)
        arr.push_back({{"s", p.s}, {"coweight", qvec_json(p.coweight)}, {"theta", qvec_json(p.omega)}, {"interior", p.interior}});
      os << envelope(rs.label(), {{"command", "grid"}, {"M", a.M}, {"interior_only", a.interior}},
                     {{"count", pts.size()}, {"points", arr}})
                .dump(2)
         << "\n";
      break;
    }
    case Format::csv: {
      std::vector<std::string> h;
      for (int i = 0; i <= n; ++i) h.push_back("s" + std::to_string(i));
      for (int i = 1; i <= n; ++i) h.push_back("c" + std::to_string(i));
      for (int i = 1; i <= n; ++i) h.push_back("theta" + std::to_string(i));
      h.push_back("interior");
      os << join(h) << "\n";
      for (const auto& p : pts) {
        std::vector<std::string> row;
        for (int v : p.s) row.push_back(std::to_string(v));
        for (const auto& v : p.coweight) row.push_back(to_string(v));
        for (const auto& v : p.omega) row.push_back(to_string(v));
        row.push_back(p.interior ? "1" : "0");
        os << join(row) << "\n";
      }
      break;
    }
    default:
      os << rs.label() << " M=" << a.M << ": " << pts.size() << " points\n";
      for (const auto& p : pts)
        os << "s=(" << join([&] {
          std::vector<std::string> v;
          for (int s : p.s) v.push_back(std::to_string(s));
          return v;
        }()) << ") x=(" << to_string(p.coweight) << ")" << (p.interior ? " interior" : "") << "\n";
  }
  return 0;
}

// ================= transform =================

struct TransformArgs {
  std::string kind, diagram, in, ref, direction = "forward";
  int n = 0, N = 0, M = 0;
};

// Either transform behind one interface: keyed points and labels plus the two maps.
struct Job {
  std::string diagram;
  json params;
  std::vector<std::string> point_header, label_header;
  std::vector<std::vector<std::string>> point_cells, label_cells;
  std::function<std::vector<Complex>(const std::vector<Complex>&)> forward, inverse;
};

Job make_job(const TransformArgs& a) {
  Job j;
  if (a.kind == "orbit") {
    if (a.diagram.empty() || a.M < 1) throw DomainError("--kind orbit needs --diagram and --M");
    const auto rs = RootSystem::build(a.diagram);
    auto plan = std::make_shared<FinitePlan>(FinitePlan::build(rs, a.M));
    j.diagram = rs.label();
    j.params = {{"kind", "orbit"}, {"M", a.M}};
    for (int i = 1; i <= rs.rank(); ++i) {
      j.point_header.push_back("theta" + std::to_string(i));
      j.label_header.push_back("m" + std::to_string(i));
    }
    for (const auto& p : plan->grid()) {
      std::vector<std::string> c;
      for (const auto& v : p.omega) c.push_back(to_string(v));
      j.point_cells.push_back(c);
    }
    for (const auto& l : plan->labels()) {
      std::vector<std::string> c;
      for (const auto& v : l) c.push_back(to_string(v));
      j.label_cells.push_back(c);
    }
    j.forward = [plan](const std::vector<Complex>& f) { return plan->forward(f); };
    j.inverse = [plan](const std::vector<Complex>& c) { return plan->inverse(c); };
    return j;
  }
  if (a.n < 1 || a.N < 1) throw DomainError("--kind " + a.kind + " needs --n and --N");
  auto plan = std::make_shared<DiscretePlan>(DiscretePlan::build(a.kind, a.n, a.N));
  j.diagram = "";
  j.params = {{"kind", plan->kind().name()}, {"n", a.n}, {"N", a.N}};
  for (int i = 1; i <= a.n; ++i) {
    j.point_header.push_back("p" + std::to_string(i));
    j.label_header.push_back("m" + std::to_string(i));
  }
  for (std::size_t i = 0; i < plan->grid().size(); ++i) j.point_cells.push_back(split(plan->point_label(i)));
  for (std::size_t i = 0; i < plan->labels().size(); ++i) j.label_cells.push_back(split(plan->label_string(i)));
  j.forward = [plan](const std::vector<Complex>& f) { return plan->forward(f); };
  j.inverse = [plan](const std::vector<Complex>& c) { return plan->inverse(c); };
  return j;
}

// Values keyed by exact coordinates; rows outside `cells` are ignored.
std::vector<Complex> read_keyed(const std::string& path, const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& cells, const char* what) {
  const Table t = read_csv(path);
  std::vector<int> kc;
  for (const auto& h : header) {
    const int c = t.col(h);
    if (c < 0) throw DomainError("'" + path + "' lacks column " + h + " (expected " + what + ")");
    kc.push_back(c);
  }
  const int re = t.col("re"), im = t.col("im");
  if (re < 0) throw DomainError("'" + path + "' lacks column re");
  std::map<std::string, Complex> values;
  for (const auto& row : t.rows) {
    std::vector<std::string> k;
    for (int c : kc) k.push_back(row[c]);
    values[key_of(k)] = {cell_double(row[re]), im < 0 ? 0.0 : cell_double(row[im])};
  }
  std::vector<Complex> out;
  for (const auto& c : cells) {
    const auto it = values.find(key_of(c));
    if (it == values.end()) throw DomainError("'" + path + "' has no value at (" + join(c) + ")");
    out.push_back(it->second);
  }
  return out;
}

void write_keyed(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& cells, const std::vector<Complex>& v) {
  os << join(header) << ",re,im\n";
  for (std::size_t i = 0; i < cells.size(); ++i)
    os << join(cells[i]) << "," << num(v[i].real(), "%.17g") << "," << num(v[i].imag(), "%.17g") << "\n";
}

int cmd_transform(const Global& g, const TransformArgs& a) {
  const Job j = make_job(a);
  Sink sink(g.out);
  auto& os = sink.os();
  const auto& d = a.direction;
  if (d == "points" || d == "labels") {
    const bool pts = d == "points";
    const auto& cells = pts ? j.point_cells : j.label_cells;
    write_keyed(os, pts ? j.point_header : j.label_header, cells, std::vector<Complex>(cells.size()));
    return 0;
  }
  if (a.in.empty()) throw DomainError("--direction " + d + " needs --in");
  if (d == "forward") {
    const auto f = read_keyed(a.in, j.point_header, j.point_cells, "grid points");
    write_keyed(os, j.label_header, j.label_cells, j.forward(f));
    return 0;
  }
  if (d == "inverse") {
    const auto c = read_keyed(a.in, j.label_header, j.label_cells, "labels");
    write_keyed(os, j.point_header, j.point_cells, j.inverse(c));
    return 0;
  }
  if (d == "compare") {
    if (a.ref.empty()) throw DomainError("--direction compare needs --ref");
    // Coefficient files when the label columns are present, signals otherwise.
    const Table probe = read_csv(a.in);
    const bool labels = probe.col(j.label_header[0]) >= 0;
    const auto& h = labels ? j.label_header : j.point_header;
    const auto& cells = labels ? j.label_cells : j.point_cells;
    const auto x = read_keyed(a.in, h, cells, labels ? "labels" : "grid points");
    const auto y = read_keyed(a.ref, h, cells, labels ? "labels" : "grid points");
    double diff = 0;
    for (std::size_t i = 0; i < x.size(); ++i) diff = std::max(diff, std::abs(x[i] - y[i]));
    const double tol = tolerance_or(g, 1e-10);
    const bool ok = diff <= tol;
    if (format_or(g, Format::plain) == Format::json)
      os << envelope(j.diagram, j.params, {{"entries", x.size()}, {"max_abs_diff", diff}, {"tolerance", tol}, {"ok", ok}})
                .dump(2)
         << "\n";
    else
      os << "entries " << x.size() << ", max abs diff " << num(diff, "%.3e") << ", tolerance " << num(tol, "%.1e")
         << (ok ? ": ok" : ": FAIL") << "\n";
    return ok ? 0 : 1;
  }
  throw DomainError("unknown direction '" + d + "' (forward, inverse, points, labels, compare)");
}

// ================= plan =================

int cmd_plan_verify(const Global& g, const TransformArgs& a) {
  Sink sink(g.out);
  auto& os = sink.os();
  const Format f = format_or(g, Format::plain);
  if (a.kind.empty() || a.kind == "orbit") {
    if (a.diagram.empty() || a.M < 1) throw DomainError("plan verify needs --diagram and --M (or --kind, --n, --N)");
    const auto rs = RootSystem::build(a.diagram);
    const auto plan = FinitePlan::build(rs, a.M);
    const double c = plan.constant();
    const double literal = static_cast<double>(a.M) * a.M * static_cast<double>(rs.weyl_order());
    const double tol = tolerance_or(g, 1e-9);
    const bool ok = plan.max_offdiag() <= tol * c && plan.max_diag_error() <= tol * c;
    if (f == Format::json) {
      json labels = json::array();
      for (const auto& l : plan.labels()) labels.push_back(qvec_json(l));
      os << envelope(rs.label(), {{"command", "plan verify"}, {"M", a.M}},
                     {{"labels", labels},
                      {"T_size", plan.T_size()},
                      {"weyl_order", plan.weyl_order()},
                      {"constant", c},
                      {"m2_W", literal},
                      {"max_offdiag", plan.max_offdiag()},
                      {"max_diag_error", plan.max_diag_error()},
                      {"ok", ok}})
                .dump(2)
         << "\n";
    } else {
      os << rs.label() << " M=" << a.M << ": " << plan.labels().size() << " labels\n";
      for (const auto& l : plan.labels()) os << "  (" << to_string(l) << ")\n";
      os << "|T| = " << plan.T_size() << ", |W| = " << plan.weyl_order() << ", Gram diagonal |T||W| = " << num(c)
         << " (m^2|W| = " << num(literal) << ")\n";
      os << "max off-diagonal " << num(plan.max_offdiag(), "%.3e") << ", max diagonal error "
         << num(plan.max_diag_error(), "%.3e") << (ok ? ": ok" : ": FAIL") << "\n";
    }
    return ok ? 0 : 1;
  }
  if (a.n < 1 || a.N < 1) throw DomainError("plan verify --kind " + a.kind + " needs --n and --N");
  const auto plan = DiscretePlan::build(a.kind, a.n, a.N);
  const double res = plan.gram_residual();
  const double tol = tolerance_or(g, 1e-10);
  const bool ok = res <= tol;
  if (f == Format::json) {
    json labels = json::array();
    for (std::size_t i = 0; i < plan.labels().size(); ++i)
      labels.push_back({{"m", plan.label_string(i)}, {"constant", plan.expected()[i]}});
    os << envelope("", {{"command", "plan verify"}, {"kind", plan.kind().name()}, {"n", a.n}, {"N", a.N}},
                   {{"labels", labels}, {"points", plan.grid().size()}, {"gram_residual", res}, {"ok", ok}})
              .dump(2)
       << "\n";
  } else {
    os << plan.kind().name() << " n=" << a.n << " N=" << a.N << ": " << plan.labels().size() << " labels, "
       << plan.grid().size() << " points\n";
    for (std::size_t i = 0; i < plan.labels().size(); ++i)
      os << "  (" << plan.label_string(i) << ") " << num(plan.expected()[i]) << "\n";
    os << "Gram residual " << num(res, "%.3e") << (ok ? ": ok" : ": FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

// ================= check =================

struct CheckArgs {
  std::string what, diagram, lambda, variant, m;
  int trials = 20;
  double h = 0;
};

struct CheckOutcome {
  double worst = 0;
  double worst_stated = -1;  // shift: printed right-hand sides
  int trials = 0;
};

std::vector<MultiIndex> parse_multi(const std::string& s) {
  std::vector<MultiIndex> out;
  for (const auto& part : split(s, ';')) {
    MultiIndex m;
    for (const auto& q : parse_qvec(part)) {
      if (!is_integer(q) || q < 0) throw DomainError("multi-index entries must be non-negative integers");
      m.push_back(q.convert_to<int>());
    }
    out.push_back(m);
  }
  return out;
}

int cmd_check(const Global& g, const CheckArgs& a) {
  const std::string& w = a.what;
  CheckOutcome out;
  double tol = 0;
  std::string label = w;

  if (w == "hermite") {
    tol = tolerance_or(g, 1e-5);
    std::vector<std::pair<MultiIndex, SymVariant>> cases;
    const std::vector<SymVariant> variants =
        a.variant.empty() ? std::vector<SymVariant>{SymVariant::anti, SymVariant::sym}
                          : std::vector<SymVariant>{parse_sym_variant(a.variant)};
    for (auto v : variants) {
      if (!a.m.empty()) {
        for (const auto& m : parse_multi(a.m)) cases.push_back({m, v});
        continue;
      }
      for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= i && i + j <= 4; ++j)
          if (v == SymVariant::sym || i > j) cases.push_back({{i, j}, v});
    }
    std::vector<double> errs(cases.size());
    parallel_for(cases.size(), g.threads,
                 [&](std::size_t i) { errs[i] = transform_eigen_check(cases[i].first, cases[i].second).rel_err; });
    for (double e : errs) out.worst = std::max(out.worst, e);
    out.trials = static_cast<int>(cases.size());
  } else {
    if (a.diagram.empty()) throw DomainError("check " + w + " needs --diagram");
    const auto rs = RootSystem::build(a.diagram);
    label += " " + rs.label();
    const std::optional<QVec> fixed = a.lambda.empty() ? std::nullopt : std::optional<QVec>(parse_label(rs, a.lambda));
    if (a.trials < 1) throw DomainError("--trials must be positive");
    out.trials = a.trials;
    std::vector<double> errs(a.trials), stated(a.trials, -1);
    std::function<void(std::size_t)> trial;
    // Each trial draws from its own stream, so --threads does not change results.
    auto rng_for = [&](std::size_t i) { return std::mt19937_64(g.seed * 1000003 + i); };
    auto label_for = [&](std::mt19937_64& rng, int hi) {
      if (fixed) return *fixed;
      std::uniform_int_distribution<int> u(1, hi);
      QVec v;
      for (int k = 0; k < rs.rank(); ++k) v.emplace_back(u(rng));
      return v;
    };
    auto point = [&](std::mt19937_64& rng) {
      std::uniform_real_distribution<double> u(-1, 1);
      RVec x(rs.rank());
      for (auto& v : x) v = u(rng);
      return x;
    };
    if (w == "laplace" || w == "sigma2" || w == "omega") {
      if (w != "omega" && !rs.has_orthogonal_model())
        throw DomainError(rs.label() + " has no orthogonal model; 'check omega' runs the Laplace check in omega coordinates");
      tol = tolerance_or(g, w == "laplace" ? 1e-5 : w == "sigma2" ? 1e-3 : 1e-4);
      trial = [&](std::size_t i) {
        auto rng = rng_for(i);
        const QVec l = label_for(rng, w == "sigma2" ? 2 : 3);
        const RVec x = sample_interior(rs, rng, l);
        const bool step = a.h > 0;
        if (w == "laplace") errs[i] = (step ? laplace_check(rs, l, x, a.h) : laplace_check(rs, l, x)).rel_err;
        else if (w == "sigma2") errs[i] = (step ? sigma_k_check(rs, l, x, 2, a.h) : sigma_k_check(rs, l, x, 2)).rel_err;
        else errs[i] = (step ? omega_laplace_check(rs, l, x, a.h) : omega_laplace_check(rs, l, x)).rel_err;
      };
    } else if (w == "shift") {
      tol = tolerance_or(g, 1e-10);
      std::vector<ShiftVariant> vs = {ShiftVariant::D, ShiftVariant::D_hat, ShiftVariant::D_on_sym};
      if (!a.variant.empty() && a.variant != "all") vs = {parse_shift_variant(a.variant)};
      trial = [&, vs](std::size_t i) {
        auto rng = rng_for(i);
        const QVec l = label_for(rng, 4);
        const RVec x = point(rng), y = point(rng);
        for (auto v : vs) {
          const auto r = shift_operator_check(rs, l, x, y, v);
          errs[i] = std::max(errs[i], r.rel_err);
          stated[i] = std::max(stated[i], r.rel_err_stated);
        }
      };
    } else if (w == "derivative") {
      tol = tolerance_or(g, 1e-8);
      trial = [&](std::size_t i) {
        auto rng = rng_for(i);
        const QVec l = label_for(rng, 3);
        const RVec x = point(rng);
        errs[i] = a.h > 0 ? derivative_identity_residual(rs, l, x, a.h) : derivative_identity_residual(rs, l, x);
      };
    } else {
      throw DomainError("unknown check '" + w + "' (laplace, sigma2, omega, shift, derivative, hermite)");
    }
    parallel_for(static_cast<std::size_t>(a.trials), g.threads, trial);
    for (double e : errs) out.worst = std::max(out.worst, e);
    for (double e : stated) out.worst_stated = std::max(out.worst_stated, e);
  }

  const bool ok = out.worst <= tol;
  Sink sink(g.out);
  auto& os = sink.os();
  if (format_or(g, Format::plain) == Format::json) {
    json payload = {{"check", w}, {"trials", out.trials}, {"max_rel_err", out.worst}, {"tolerance", tol}, {"ok", ok}};
    if (out.worst_stated >= 0) payload["max_rel_err_printed_form"] = out.worst_stated;
    os << envelope(a.diagram, {{"command", "check"}, {"lambda", a.lambda}, {"variant", a.variant}, {"seed", g.seed}}, payload)
              .dump(2)
       << "\n";
  } else {
    os << "check " << label << ": " << out.trials << (w == "hermite" ? " multi-indices" : " trials") << ", max rel_err "
       << num(out.worst, "%.3e");
    if (out.worst_stated >= 0) os << " (printed right-hand sides " << num(out.worst_stated, "%.3e") << ")";
    os << ", tolerance " << num(tol, "%.1e") << (ok ? ": ok" : ": FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

// ================= selftest =================

int cmd_selftest(const Global& g, bool quick) {
  suite::Options opt;
  opt.quick = quick;
  opt.seed = g.seed;
  Sink sink(g.out);
  auto& os = sink.os();
  const bool as_json = format_or(g, Format::plain) == Format::json;
  bool unexpected = false;
  json rows = json::array();
  suite::run_all(opt, [&](const suite::Result& r) {
    const bool known = !r.pass && suite::known_failure(r.id);
    unexpected = unexpected || (!r.pass && !known);
    if (as_json)
      rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"known_failure", known},
                      {"detail", r.detail}, {"seconds", r.seconds}});
    else
      os << suite::format_line(r) << (known ? " [known]" : "") << std::endl;
  });
  if (as_json)
    os << envelope("", {{"command", "selftest"}, {"quick", quick}, {"seed", g.seed}},
                   {{"results", rows}, {"ok", !unexpected}})
              .dump(2)
       << "\n";
  return unexpected ? 1 : 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Weyl-group orbit functions: root systems, orbits, orbit algebra, transforms, checks", "wof"};
  app.set_version_flag("--version", std::string("wof ") + kVersion);
  app.fallthrough();
  app.require_subcommand(1);

  Global g;
  app.add_option("--format", g.format, "plain, json or csv (default depends on the command)")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", g.out, "write output to this file");
  app.add_option("--tolerance", g.tolerance, "override the pass/fail tolerance");
  app.add_option("--threads", g.threads, "worker threads for batch evaluation and checks")->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "seed for randomized checks");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> fn) {
    sub->fallthrough();
    sub->callback([&action, fn] { action = fn; });
  };

  // rootsys
  RootsysArgs ra;
  auto* rootsys = app.add_subcommand("rootsys", "root-system data");
  rootsys->fallthrough();
  rootsys->require_subcommand(1);
  auto* info = rootsys->add_subcommand("info", "Cartan matrix, inverse, metric, marks, |W|");
  info->add_option("diagram", ra.diagram, "A2, C3, G2, ...")->required();
  on(info, [&] { return cmd_rootsys_info(g, ra); });
  auto* convert = rootsys->add_subcommand("convert", "change basis of a vector");
  convert->add_option("diagram", ra.diagram)->required();
  convert->add_option("--vector", ra.vector)->required();
  convert->add_option("--from", ra.from, "omega, alpha, alpha_check")->capture_default_str();
  convert->add_option("--to", ra.to, "omega, alpha, alpha_check, orthogonal")->capture_default_str();
  on(convert, [&] { return cmd_rootsys_convert(g, ra); });

  // orbit
  OrbitArgs oa;
  auto* orb = app.add_subcommand("orbit", "Weyl orbits");
  orb->fallthrough();
  orb->require_subcommand(1);
  for (const char* kind : {"plain", "signed"}) {
    auto* s = orb->add_subcommand(kind, std::string(kind) + " orbit of a weight (omega basis)");
    s->add_option("--diagram", oa.diagram)->required();
    s->add_option("--lambda", oa.lambda)->required();
    const bool is_signed = std::string(kind) == "signed";
    on(s, [&, is_signed] { return cmd_orbit(g, oa, is_signed); });
  }

  // eval
  EvalArgs ea;
  auto* ev = app.add_subcommand("eval", "evaluate an orbit function (x in omega coordinates)");
  ev->add_option("--diagram", ea.diagram)->required();
  ev->add_option("--kind", ea.kind, "sym, sym-norm, anti or character")->capture_default_str();
  ev->add_option("--lambda", ea.lambda)->required();
  ev->add_option("--x", ea.x, "point, e.g. 0.25,1/8");
  ev->add_option("--batch", ea.batch, "CSV with theta*, x* or c* columns ('-' for stdin)");
  on(ev, [&] { return cmd_eval(g, ea); });

  // product
  ProductArgs pa;
  auto* prod = app.add_subcommand("product", "decompose a product of orbits");
  prod->add_option("--diagram", pa.diagram)->required();
  prod->add_option("--signed", pa.signed_labels, "signed orbit label (repeatable)")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  prod->add_option("--plain", pa.plain_labels, "plain orbit label (repeatable)")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  prod->add_flag("--brute", pa.brute, "expand every point instead of the coset shortcut");
  on(prod, [&] { return cmd_product(g, pa); });

  // branch
  BranchArgs ba;
  auto* br = app.add_subcommand("branch", "restrict a signed orbit to a subsystem");
  br->add_option("--from", ba.from)->required();
  br->add_option("--rule", ba.rule, "drop or split:p")->capture_default_str();
  br->add_option("--lambda", ba.lambda)->required();
  br->add_option("--basis", ba.basis, "omega or orthogonal")->capture_default_str();
  on(br, [&] { return cmd_branch(g, ba); });

  // grid
  GridArgs ga;
  auto* gr = app.add_subcommand("grid", "points of F_M");
  gr->add_option("--diagram", ga.diagram)->required();
  gr->add_option("--M", ga.M)->required();
  gr->add_flag("--interior", ga.interior, "interior points only");
  on(gr, [&] { return cmd_grid(g, ga); });

  // transform
  TransformArgs ta;
  auto* tr = app.add_subcommand("transform", "finite and discrete transforms on CSV data");
  tr->add_option("--kind", ta.kind, "orbit, sine, cosine, dct1..4, dst1..4, exp, anti_exp, sym_exp, anti_sine, "
                                    "sym_cosine, amdct1..4, smdct1..4")
      ->required();
  tr->add_option("--diagram", ta.diagram, "orbit kind");
  tr->add_option("--M", ta.M, "orbit kind");
  tr->add_option("--n", ta.n);
  tr->add_option("--N", ta.N);
  tr->add_option("--in", ta.in);
  tr->add_option("--ref", ta.ref, "reference file for --direction compare");
  tr->add_option("--direction", ta.direction, "forward, inverse, points, labels, compare")->capture_default_str();
  on(tr, [&] { return cmd_transform(g, ta); });

  // plan verify
  TransformArgs pv;
  auto* plan = app.add_subcommand("plan", "transform plans");
  plan->fallthrough();
  plan->require_subcommand(1);
  auto* verify = plan->add_subcommand("verify", "Gram matrix of a plan");
  verify->add_option("--diagram", pv.diagram);
  verify->add_option("--M", pv.M);
  verify->add_option("--kind", pv.kind);
  verify->add_option("--n", pv.n);
  verify->add_option("--N", pv.N);
  on(verify, [&] { return cmd_plan_verify(g, pv); });

  // check
  CheckArgs ca;
  auto* chk = app.add_subcommand("check", "numerical eigen-relation checks");
  chk->add_option("what", ca.what, "laplace, sigma2, omega, shift, derivative, hermite")
      ->required()
      ->check(CLI::IsMember({"laplace", "sigma2", "omega", "shift", "derivative", "hermite"}));
  chk->add_option("--diagram", ca.diagram);
  chk->add_option("--lambda", ca.lambda, "fixed label (random strictly dominant labels otherwise)");
  chk->add_option("--trials", ca.trials)->capture_default_str();
  chk->add_option("--variant", ca.variant, "shift: D, D_hat, D_sym, all; hermite: anti, sym");
  chk->add_option("--m", ca.m, "hermite multi-indices, e.g. '2,1;3,0'");
  chk->add_option("--step", ca.h, "finite-difference step");
  on(chk, [&] { return cmd_check(g, ca); });

  // selftest
  bool quick = false, full = false;
  auto* st = app.add_subcommand("selftest", "run the invariant suite");
  auto* q = st->add_flag("--quick", quick, "fewer random instances");
  st->add_flag("--full", full, "full size (default)")->excludes(q);
  on(st, [&] { return cmd_selftest(g, quick); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!action) {
    std::cerr << app.help();
    return 2;
  }
  try {
    return action();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wof::cli
