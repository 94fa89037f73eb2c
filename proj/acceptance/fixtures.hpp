// Published signed-orbit listings and orbit-product decompositions, shared by the unit
// tests, the acceptance run and `wof selftest`. Entries are written in the symbols a, b, c.
#pragma once

#include "wof/orbitalg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wof::fixtures {

inline QVec qi(std::initializer_list<long long> xs) {
  QVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

// Coefficients of a, b, c in a linear form such as "a+2b-c".
inline std::vector<long long> linear_form(const std::string& s) {
  std::vector<long long> c(3, 0);
  std::size_t i = 0;
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn = s[i] == '-' ? -1 : 1;
      ++i;
    }
    long long k = 0;
    bool digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      k = k * 10 + (s[i] - '0');
      digits = true;
      ++i;
    }
    if (!digits) k = 1;
    if (i >= s.size() || s[i] < 'a' || s[i] > 'c') throw std::invalid_argument("bad linear form '" + s + "'");
    c[s[i] - 'a'] += sgn * k;
    ++i;
  }
  return c;
}

using SignedSet = std::multiset<std::pair<QVec, int>>;

// Entries "x y z:s" with linear forms as coordinates and s in {+,-}.
inline SignedSet signed_set(const std::vector<std::string>& entries, const std::vector<long long>& abc) {
  SignedSet out;
  for (const auto& e : entries) {
    const auto colon = e.find(':');
    std::istringstream coords(e.substr(0, colon));
    QVec p;
    std::string tok;
    while (coords >> tok) {
      const auto c = linear_form(tok);
      long long v = 0;
      for (int k = 0; k < 3; ++k) v += c[k] * abc[k];
      p.emplace_back(v);
    }
    out.insert({p, e[colon + 1] == '+' ? 1 : -1});
  }
  return out;
}

inline SignedSet computed_signed(const RootSystem& rs, const QVec& lambda) {
  SignedSet out;
  for (const auto& p : signed_orbit(rs, lambda).points) out.insert({p.w, p.sign});
  return out;
}

// Adds the image of every entry under x -> -x (reversed if asked), sign times flip.
inline SignedSet close_under(const SignedSet& s, int flip, bool reverse) {
  SignedSet out = s;
  for (const auto& [p, sign] : s) {
    QVec r = -p;
    if (reverse) std::reverse(r.begin(), r.end());
    out.insert({r, sign * flip});
  }
  return out;
}

struct SignedTable {
  std::string diagram;
  std::vector<std::string> entries;
  bool half = false;  // only half the orbit is listed; the rest is close_under(flip, reverse)
  int flip = 1;
  bool reverse = false;

  SignedSet expected(const std::vector<long long>& abc) const {
    const auto s = signed_set(entries, abc);
    return half ? close_under(s, flip, reverse) : s;
  }
};

inline const std::vector<std::vector<long long>>& signed_params() {
  static const std::vector<std::vector<long long>> p = {{1, 1, 1}, {2, 3, 5}, {7, 2, 3}, {4, 9, 1}};
  return p;
}

// A1 x A1, built from two rank-one orbits.
inline const std::vector<std::string>& a1xa1_entries() {
  static const std::vector<std::string> e = {"a b:+", "-a b:-", "a -b:-", "-a -b:+"};
  return e;
}

inline const std::vector<SignedTable>& signed_tables() {
  static const std::vector<SignedTable> t = {
      {"A1", {"a:+", "-a:-"}},
      {"A2", {"a b:+", "-a a+b:-", "a+b -b:-", "-b -a:-", "-a-b a:+", "b -a-b:+"}},
      // Seventh entry corrected from (-a -a-b) to (a -a-b).
      {"C2",
       {"a b:+", "-a a+b:-", "a+2b -b:-", "a+2b -a-b:+", "-a -b:+", "a -a-b:-", "-a-2b b:-", "-a-2b a+b:+"}},
      {"G2", {"a b:+", "-a 3a+b:-", "a+b -b:-", "2a+b -3a-b:+", "-a-b 3a+2b:+", "-2a-b 3a+2b:-"}, true, 1, false},
      {"A3",
       {"a b c:+", "a+b -b b+c:-", "a+b c -b-c:+", "a b+c -c:-", "a+b+c -c -b:-", "a+b+c -b-c b:+", "-a a+b c:-",
        "-a a+b+c -c:+", "b -a-b a+b+c:+", "b+c -a-b-c a+b:-", "-a-b a b+c:+", "-b -a a+b+c:-"},
       true, 1, true},
      {"B3",
       {"a b c:+",          "a+b -b 2b+c:-",        "-a a+b c:-",           "b -a-b 2a+2b+c:+",
        "-a-b a 2b+c:+",    "-b -a 2a+2b+c:-",      "a b+c -c:-",           "a+b+c -b-c 2b+c:+",
        "-a a+b+c -c:+",    "b+c -a-b-c 2a+2b+c:-", "-a-b-c a 2b+c:-",      "-b-c -a 2a+2b+c:+",
        "-a-2b-c b c:-",    "-a-b-c -b 2b+c:+",     "a+2b+c -a-b-c c:+",    "b a+b+c -2a-2b-c:-",
        "a+b+c -a-2b-c 2b+c:-", "-b a+2b+c -2a-2b-c:+", "-a-2b-c b+c -c:+", "-a-b -b-c 2b+c:-",
        "a+2b+c -a-b -c:-", "b+c a+b -2a-2b-c:+",   "a+b -a-2b-c 2b+c:+",   "-b-c a+2b+c -2a-2b-c:-"},
       true, -1, false},
      {"C3",
       {"a b c:+",            "a+b -b b+c:-",         "-a a+b c:-",            "b -a-b a+b+c:+",
        "-a-b a b+c:+",       "-b -a a+b+c:-",        "a b+2c -c:-",           "a+b+2c -b-2c b+c:+",
        "-a a+b+2c -c:+",     "b+2c -a-b-2c a+b+c:-", "-a-b-2c a b+c:-",       "-b-2c -a a+b+c:+",
        "-a-2b-2c b c:-",     "-a-b-2c -b b+c:+",     "a+2b+2c -a-b-2c c:+",   "b a+b+2c -a-b-c:-",
        "a+b+2c -a-2b-2c b+c:-", "-b a+2b+2c -a-b-c:+", "-a-2b-2c b+2c -c:+", "-a-b -b-2c b+c:-",
        "a+2b+2c -a-b -c:-",  "b+2c a+b -a-b-c:+",    "a+b -a-2b-2c b+c:+",    "-b-2c a+2b+2c -a-b-c:-"},
       true, -1, false},
  };
  return t;
}

// ---- products O(c,0) (x) O^±(a,b) ----

using Expected = std::map<QVec, long long>;
using TermList = std::vector<std::pair<long long, QVec>>;

struct ProductRow {
  const char* name;
  std::function<bool(long long, long long, long long)> when;
  std::function<TermList(long long, long long, long long)> terms;
};

inline Expected merge(const TermList& ts) {
  Expected e;
  for (const auto& [c, l] : ts) e[l] += c;
  for (auto it = e.begin(); it != e.end();) it = it->second == 0 ? e.erase(it) : std::next(it);
  return e;
}

inline Expected as_map(const OrbitSum& s) {
  Expected e;
  for (const auto& t : s.terms) e[t.label] = t.coeff;
  return e;
}

// Rows whose printed regime or terms needed correcting are named in corrected_rows().
inline const std::vector<ProductRow>& a2_product_rows() {
  static const std::vector<ProductRow> rows = {
      {"a>c>b", [](auto a, auto b, auto c) { return a > c && c > b; },
       [](auto a, auto b, auto c) {
         return TermList{{1, qi({a + c, b})}, {1, qi({a - c, b + c})}, {-1, qi({a + b - c, c - b})}};
       }},
      {"a>c,b>c", [](auto a, auto b, auto c) { return a > c && b > c; },
       [](auto a, auto b, auto c) { return TermList{{1, qi({a + c, b})}, {1, qi({a - c, b + c})}, {1, qi({a, b - c})}}; }},
      {"a=b=c", [](auto a, auto b, auto c) { return a == b && b == c; },
       [](auto a, auto b, auto c) { return TermList{{1, qi({a + c, b})}}; }},
      {"a=c>b", [](auto a, auto b, auto c) { return a == c && c > b; },
       [](auto a, auto b, auto c) { return TermList{{1, qi({a + c, b})}, {-1, qi({a + b - c, c - b})}}; }},
      {"b>a=c", [](auto a, auto b, auto c) { return b > a && a == c; },
       [](auto a, auto b, auto c) { return TermList{{1, qi({a + c, b})}, {1, qi({a, b - c})}}; }},
      {"a<b=c", [](auto a, auto b, auto c) { return a < b && b == c; },
       [](auto a, auto b, auto c) { return TermList{{1, qi({a + c, b})}, {-1, qi({c - a, a + b})}}; }},
      {"c>a+b", [](auto a, auto b, auto c) { return c > a + b; },
       [](auto a, auto b, auto c) {
         return TermList{{1, qi({a + c, b})}, {-1, qi({c - a, a + b})}, {1, qi({c - a - b, a})}};
       }},
      {"a+b>c>b,c>a", [](auto a, auto b, auto c) { return a + b > c && c > b && c > a; },
       [](auto a, auto b, auto c) {
         return TermList{{1, qi({a + c, b})}, {-1, qi({c - a, a + b})}, {-1, qi({a + b - c, c - b})}};
       }},
      {"b>c>a", [](auto a, auto b, auto c) { return b > c && c > a; },
       [](auto a, auto b, auto c) { return TermList{{1, qi({a + c, b})}, {-1, qi({c - a, a + b})}, {1, qi({a, b - c})}}; }},
      {"a=b,c>2a", [](auto a, auto b, auto c) { return a == b && c > 2 * a; },
       [](auto a, auto, auto c) {
         return TermList{{1, qi({a + c, a})}, {1, qi({c - 2 * a, a})}, {-1, qi({c - a, 2 * a})}};
       }},
      {"a=b,2a>c>a", [](auto a, auto b, auto c) { return a == b && 2 * a > c && c > a; },
       [](auto a, auto, auto c) {
         return TermList{{1, qi({a + c, a})}, {-1, qi({2 * a - c, c - a})}, {-1, qi({c - a, 2 * a})}};
       }},
      {"a=b>c", [](auto a, auto b, auto c) { return a == b && a > c; },
       [](auto a, auto, auto c) { return TermList{{1, qi({a + c, a})}, {1, qi({a - c, a + c})}, {1, qi({a, a - c})}}; }},
  };
  return rows;
}

inline const std::vector<ProductRow>& c2_product_rows() {
  static const std::vector<ProductRow> rows = {
      {"c>a+2b", [](auto a, auto b, auto c) { return c > a + 2 * b; },
       [](auto a, auto b, auto c) {
         return TermList{
             {1, qi({a + c, b})}, {-1, qi({c - a - 2 * b, b})}, {-1, qi({c - a, a + b})}, {1, qi({c - a - 2 * b, a + b})}};
       }},
      {"a>c,b>c", [](auto a, auto b, auto c) { return a > c && b > c; },
       [](auto a, auto b, auto c) {
         return TermList{{1, qi({a + c, b})}, {1, qi({a - c, b + c})}, {1, qi({a + c, b - c})}, {1, qi({a - c, b})}};
       }},
      {"a+b<c<a+2b", [](auto a, auto b, auto c) { return a + b < c && c < a + 2 * b; },
       [](auto a, auto b, auto c) {
         return TermList{{1, qi({a + c, b})},
                         {1, qi({a + 2 * b - c, c - a - b})},
                         {-1, qi({c - a, a + b})},
                         {-1, qi({a + 2 * b - c, c - b})}};
       }},
      {"a>c>b", [](auto a, auto b, auto c) { return a > c && c > b; },
       [](auto a, auto b, auto c) {
         return TermList{{1, qi({a + c, b})}, {1, qi({a - c, b})}, {1, qi({a - c, b + c})}, {-1, qi({a + 2 * b - c, c - b})}};
       }},
      {"c>a,b<c<a+b", [](auto a, auto b, auto c) { return c > a && b < c && c < a + b; },
       [](auto a, auto b, auto c) {
         return TermList{
             {1, qi({a + c, b})}, {-1, qi({c - a, a + b - c})}, {-1, qi({c - a, a + b})}, {-1, qi({a + 2 * b - c, c - b})}};
       }},
  };
  return rows;
}

inline const char* corrected_rows() {
  return "A2: a+b>c>b,c>a (term), b>c>a (regime); C2: all regimes re-derived, row 2 replaced by a>c,b>c, "
         "duplicate row 6 dropped";
}

}  // namespace wof::fixtures
