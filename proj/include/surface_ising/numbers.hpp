#ifndef SURFACE_ISING_NUMBERS_HPP
#define SURFACE_ISING_NUMBERS_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace surface_ising {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" into an exact rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
bool looks_like_rational(const std::string& text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {

template <typename T>
T checked_add(const T& a, const T& b) {
  if constexpr (std::is_integral_v<T>) {
    T out;
    if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in addition");
    return out;
  } else {
    return a + b;
  }
}

template <typename T>
T checked_sub(const T& a, const T& b) {
  if constexpr (std::is_integral_v<T>) {
    T out;
    if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in subtraction");
    return out;
  } else {
    return a - b;
  }
}

template <typename T>
T checked_mul(const T& a, const T& b) {
  if constexpr (std::is_integral_v<T>) {
    T out;
    if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in multiplication");
    return out;
  } else {
    return a * b;
  }
}

}  // namespace detail

/// Element c0 + c1 z + c2 z^2 + c3 z^3 of Z[z] (or Q(z)) with z = exp(i pi/4), z^4 = -1.
/// Hosts the Gaussian numbers (z^2 = i) and the Brown-invariant phases exactly.
template <typename T>
struct Zeta8 {
  std::array<T, 4> c{};

  Zeta8() : c{T(0), T(0), T(0), T(0)} {}
  Zeta8(T c0) : c{std::move(c0), T(0), T(0), T(0)} {}  // NOLINT(google-explicit-constructor)
  Zeta8(T c0, T c1, T c2, T c3) : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  /// z^k for any integer k.
  static Zeta8 zeta_pow(int k) {
    int r = ((k % 8) + 8) % 8;
    Zeta8 out;
    if (r < 4) {
      out.c[r] = T(1);
    } else {
      out.c[r - 4] = T(-1);
    }
    return out;
  }
  /// i^k.
  static Zeta8 i_pow(int k) { return zeta_pow(2 * k); }
  /// sqrt(2) = z - z^3.
  static Zeta8 sqrt2() { return Zeta8(T(0), T(1), T(0), T(-1)); }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
  bool is_gaussian() const { return c[1] == 0 && c[3] == 0; }
  const T& real_part_if_rational() const { return c[0]; }

  Zeta8 conj() const { return Zeta8(c[0], -c[3], -c[2], -c[1]); }

  Zeta8& operator+=(const Zeta8& o) {
    for (int k = 0; k < 4; ++k) c[k] = detail::checked_add(c[k], o.c[k]);
    return *this;
  }
  Zeta8& operator-=(const Zeta8& o) {
    for (int k = 0; k < 4; ++k) c[k] = detail::checked_sub(c[k], o.c[k]);
    return *this;
  }
  Zeta8 operator-() const { return Zeta8(-c[0], -c[1], -c[2], -c[3]); }

  friend Zeta8 operator+(Zeta8 a, const Zeta8& b) { return a += b; }
  friend Zeta8 operator-(Zeta8 a, const Zeta8& b) { return a -= b; }
  friend Zeta8 operator*(const Zeta8& a, const Zeta8& b) {
    Zeta8 out;
    for (int j = 0; j < 4; ++j) {
      if (a.c[j] == 0) continue;
      for (int k = 0; k < 4; ++k) {
        if (b.c[k] == 0) continue;
        T prod = detail::checked_mul(a.c[j], b.c[k]);
        int idx = j + k;
        if (idx < 4) {
          out.c[idx] = detail::checked_add(out.c[idx], prod);
        } else {
          out.c[idx - 4] = detail::checked_sub(out.c[idx - 4], prod);
        }
      }
    }
    return out;
  }
  Zeta8& operator*=(const Zeta8& o) { return *this = *this * o; }

  friend bool operator==(const Zeta8& a, const Zeta8& b) { return a.c == b.c; }
  friend bool operator!=(const Zeta8& a, const Zeta8& b) { return !(a == b); }

  std::complex<double> to_complex() const {
    const double h = 0.70710678118654752440;
    auto d = [](const T& v) {
      if constexpr (std::is_same_v<T, Rational>) {
        return to_double(v);
      } else {
        return static_cast<double>(v);
      }
    };
    return {d(c[0]) + h * d(c[1]) - h * d(c[3]), h * d(c[1]) + d(c[2]) + h * d(c[3])};
  }

  template <typename U>
  Zeta8<U> cast() const {
    return Zeta8<U>(U(c[0]), U(c[1]), U(c[2]), U(c[3]));
  }
};

using GaussInt = Zeta8<std::int64_t>;
using ExactCoeff = Zeta8<Rational>;

/// Divides every component by a rational.
ExactCoeff divide(const ExactCoeff& a, const Rational& d);
/// Exact inverse in Q(z); throws std::domain_error on zero.
ExactCoeff inverse(const ExactCoeff& a);
/// |a|^2 when a is Gaussian (a * conj(a) is then rational); general elements return the z^0 part of a*conj(a).
Rational norm_squared_gaussian(const ExactCoeff& a);
/// Human-readable rendering, e.g. "3", "-1/2", "i", "(1+2*i)", "(1+z)".
std::string to_string(const ExactCoeff& a);

}  // namespace surface_ising

#endif  // SURFACE_ISING_NUMBERS_HPP
