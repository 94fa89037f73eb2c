#include "wof/transforms.hpp"

#include "kernels.hpp"

#include <algorithm>
#include <cctype>

namespace wof {

namespace {

using Base = DiscreteKind::Base;
using Sym = DiscreteKind::Sym;

struct BaseName {
  const char* name;
  Base base;
};

constexpr BaseName kBases[] = {{"exp", Base::exp},   {"sine", Base::sine},   {"cosine", Base::cosine},
                               {"dct1", Base::dct1}, {"dct2", Base::dct2},   {"dct3", Base::dct3},
                               {"dct4", Base::dct4}, {"dst1", Base::dst1},   {"dst2", Base::dst2},
                               {"dst3", Base::dst3}, {"dst4", Base::dst4}};

const char* base_name(Base b) {
  for (const auto& e : kBases)
    if (e.base == b) return e.name;
  return "?";
}

}  // namespace

DiscreteKind DiscreteKind::parse(std::string_view in) {
  std::string s;
  for (char ch : in) s += ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  auto find_base = [&](const std::string& b) -> const BaseName* {
    for (const auto& e : kBases)
      if (b == e.name) return &e;
    return nullptr;
  };
  if (const auto* e = find_base(s)) return {e->base, Sym::plain};
  for (auto [prefix, sym] : {std::pair{"anti_", Sym::anti}, {"sym_", Sym::sym}})
    if (s.rfind(prefix, 0) == 0)
      if (const auto* e = find_base(s.substr(std::string_view(prefix).size()))) return {e->base, sym};
  // amdct2 = anti_dct2, smdst3 = sym_dst3
  std::string t;
  for (char ch : s)
    if (ch != '_') t += ch;
  if (t.size() == 6 && (t[0] == 'a' || t[0] == 's') && t[1] == 'm')
    if (const auto* e = find_base(t.substr(2))) return {e->base, t[0] == 'a' ? Sym::anti : Sym::sym};
  throw DomainError("unknown transform kind '" + std::string(in) + "'");
}

std::string DiscreteKind::name() const {
  const std::string b = base_name(base);
  if (sym == Sym::plain) return b;
  const bool trig = b.size() == 4 && (b[0] == 'd');
  if (trig) return std::string(sym == Sym::anti ? "am" : "sm") + b;
  return std::string(sym == Sym::anti ? "anti_" : "sym_") + b;
}

namespace detail {

Kernel1D kernel_1d(Base b, int N) {
  if (N < 1) throw DomainError("discrete transform: N must be positive");
  const double n = N;
  Kernel1D k;
  k.N = N;
  auto cs = [n](double u) { return std::cos(kPi * u / n); };
  auto sn = [n](double u) { return std::sin(kPi * u / n); };
  switch (b) {
    case Base::exp:
      k.r_lo = 1, k.r_hi = N, k.k_lo = 1, k.k_hi = N;
      k.value = [n](int r, int x) { return std::polar(1.0 / std::sqrt(n), 2 * kPi * r * x / n); };
      k.norm = [](int) { return 1.0; };
      k.fraction_grid = true;
      break;
    case Base::sine:
      if (N < 2) throw DomainError("discrete sine transform needs M >= 2");
      k.r_lo = 1, k.r_hi = N - 1, k.k_lo = 1, k.k_hi = N - 1;
      k.value = [sn](int r, int x) { return Complex(0, 2 * sn(double(r) * x)); };
      k.norm = [n](int) { return 2 * n; };
      k.fraction_grid = true;
      break;
    case Base::cosine:
      k.r_lo = 0, k.r_hi = N, k.k_lo = 0, k.k_hi = N;
      k.value = [cs](int r, int x) { return Complex(2 * cs(double(r) * x)); };
      k.weight = [N](int x) { return x == 0 || x == N ? 0.5 : 1.0; };
      k.norm = [N, n](int r) { return (r == 0 || r == N ? 4.0 : 2.0) * n; };
      k.fraction_grid = true;
      break;
    case Base::dct1:
      k.r_lo = 0, k.r_hi = N, k.k_lo = 0, k.k_hi = N;
      k.value = [cs](int r, int x) { return Complex(cs(double(r) * x)); };
      k.weight = [N](int x) { return x == 0 || x == N ? 0.5 : 1.0; };
      k.norm = [N, n](int r) { return (r == 0 || r == N ? 2.0 : 1.0) * n / 2; };
      break;
    case Base::dct2:
      k.r_lo = 0, k.r_hi = N - 1, k.k_lo = 0, k.k_hi = N - 1;
      k.value = [cs](int r, int x) { return Complex(cs((r + 0.5) * x)); };
      k.weight = [](int x) { return x == 0 ? 0.5 : 1.0; };
      k.norm = [n](int) { return n / 2; };
      break;
    case Base::dct3:
      k.r_lo = 0, k.r_hi = N - 1, k.k_lo = 0, k.k_hi = N - 1;
      k.value = [cs](int r, int x) { return Complex(cs(r * (x + 0.5))); };
      k.norm = [n](int r) { return (r == 0 ? 2.0 : 1.0) * n / 2; };
      break;
    case Base::dct4:
      k.r_lo = 0, k.r_hi = N - 1, k.k_lo = 0, k.k_hi = N - 1;
      k.value = [cs](int r, int x) { return Complex(cs((r + 0.5) * (x + 0.5))); };
      k.norm = [n](int) { return n / 2; };
      break;
    case Base::dst1:
      if (N < 2) throw DomainError("DST-1 needs N >= 2");
      k.r_lo = 1, k.r_hi = N - 1, k.k_lo = 1, k.k_hi = N - 1;
      k.value = [sn](int r, int x) { return Complex(sn(double(r) * x)); };
      k.norm = [n](int) { return n / 2; };
      break;
    case Base::dst2:
      k.r_lo = 0, k.r_hi = N - 1, k.k_lo = 1, k.k_hi = N;
      k.value = [sn](int r, int x) { return Complex(sn((r + 0.5) * x)); };
      k.weight = [N](int x) { return x == N ? 0.5 : 1.0; };
      k.norm = [n](int) { return n / 2; };
      break;
    case Base::dst3:
      k.r_lo = 1, k.r_hi = N, k.k_lo = 0, k.k_hi = N - 1;
      k.value = [sn](int r, int x) { return Complex(sn(r * (x + 0.5))); };
      k.norm = [N, n](int r) { return (r == N ? 2.0 : 1.0) * n / 2; };
      break;
    case Base::dst4:
      k.r_lo = 0, k.r_hi = N - 1, k.k_lo = 0, k.k_hi = N - 1;
      k.value = [sn](int r, int x) { return Complex(sn((r + 0.5) * (x + 0.5))); };
      k.norm = [n](int) { return n / 2; };
      break;
  }
  if (!k.weight) k.weight = [](int) { return 1.0; };
  return k;
}

}  // namespace detail

}  // namespace wof
