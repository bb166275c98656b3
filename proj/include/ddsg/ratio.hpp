#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "ddsg/errors.hpp"

namespace ddsg {

// Exact fraction over 64-bit integers. Densities, dominance ratios and
// approximation floors all fit comfortably: numerators are edge counts and
// denominators are node counts. Comparisons cross-multiply in 128 bits and
// never touch floating point. The stored numerator/denominator are kept as
// constructed (e.g. 6/4 for a K4 pair count), so a density still reads back
// its raw |E(S)| and |S|; use reduced() for canonical form.
struct Frac {
  long long num = 0;
  long long den = 1;

  constexpr Frac() = default;
  constexpr Frac(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw InputError("fraction with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  static constexpr Frac of(long long v) { return Frac(v, 1); }

  friend constexpr bool operator==(const Frac& a, const Frac& b) {
    return static_cast<__int128>(a.num) * b.den ==
           static_cast<__int128>(b.num) * a.den;
  }
  friend constexpr std::strong_ordering operator<=>(const Frac& a,
                                                    const Frac& b) {
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Frac reduced() const {
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) return Frac(0, 1);
    return Frac(num / g, den / g);
  }

  double value() const { return static_cast<double>(num) / den; }

  // Canonical text form: "3/2", or plain "2" when the reduced denominator
  // is 1. parse() accepts both.
  std::string str() const {
    Frac r = reduced();
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
  }

  static Frac parse(const std::string& text) {
    auto bad = [&] {
      throw InputError("expected an exact fraction P/Q or integer, got '" +
                       text + "'");
    };
    if (text.empty()) bad();
    auto slash = text.find('/');
    auto to_ll = [&](const std::string& part) {
      if (part.empty()) bad();
      size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(part, &pos);
      } catch (const std::exception&) {
        bad();
      }
      if (pos != part.size()) bad();
      return v;
    };
    if (slash == std::string::npos) return Frac(to_ll(text), 1);
    long long p = to_ll(text.substr(0, slash));
    long long q = to_ll(text.substr(slash + 1));
    if (q == 0) throw InputError("fraction with zero denominator: '" + text + "'");
    return Frac(p, q);
  }
};

namespace detail {
inline long long checked_mul(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > INT64_MAX || p < INT64_MIN)
    throw SolverError("64-bit fraction overflow");
  return static_cast<long long>(p);
}
}  // namespace detail

inline Frac operator*(const Frac& a, const Frac& b) {
  // Cross-reduce before multiplying to keep intermediates small.
  long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
  long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Frac(detail::checked_mul(a.num / g1, b.num / g2),
              detail::checked_mul(a.den / g2, b.den / g1));
}

inline Frac operator/(const Frac& a, const Frac& b) {
  if (b.num == 0) throw InputError("division by zero fraction");
  return a * Frac(b.den, b.num);
}

inline Frac operator+(const Frac& a, const Frac& b) {
  long long g = std::gcd(a.den, b.den);
  long long lcm = detail::checked_mul(a.den / g, b.den);
  return Frac(detail::checked_mul(a.num, lcm / a.den) +
                  detail::checked_mul(b.num, lcm / b.den),
              lcm)
      .reduced();
}

inline Frac operator-(const Frac& a, const Frac& b) {
  return a + Frac(-b.num, b.den);
}

// Smallest integer >= 1/alpha, computed on the exact fraction.
inline long long ceil_inverse(const Frac& alpha) {
  if (alpha.num <= 0) throw InputError("ceil_inverse needs a positive fraction");
  return (alpha.den + alpha.num - 1) / alpha.num;
}

}  // namespace ddsg
