#ifndef SURFACE_ISING_POLYNOMIAL_HPP
#define SURFACE_ISING_POLYNOMIAL_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surface_ising/numbers.hpp"

namespace surface_ising {

/// Product of named symbols with positive exponents, kept sorted by name.
struct Monomial {
  std::vector<std::pair<std::string, int>> powers;

  int degree() const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.powers == b.powers; }
  friend bool operator<(const Monomial& a, const Monomial& b);
};

/// Multivariate polynomial over named symbols with coefficients in Q(exp(i pi/4)).
class Polynomial {
 public:
  using Terms = std::map<Monomial, ExactCoeff>;

  Polynomial() = default;
  static Polynomial constant(const ExactCoeff& c);
  static Polynomial symbol(const std::string& name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every coefficient is a rational number.
  bool has_rational_coefficients() const;
  ExactCoeff coefficient(const Monomial& m) const;
  ExactCoeff constant_term() const { return coefficient(Monomial{}); }

  void add_term(const Monomial& m, const ExactCoeff& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const ExactCoeff& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Numeric evaluation; every symbol must be bound.
  std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& values) const;

  /// Deterministic rendering, highest total degree first: "x*y + x + y + 1".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Parses the output of Polynomial::to_string for rational or Gaussian coefficients.
/// Accepts forms like "x*y - i + x + i*y", "x^2 + 2/3*y", "(1+2*i)*x".
Polynomial parse_polynomial(const std::string& text);

}  // namespace surface_ising

#endif  // SURFACE_ISING_POLYNOMIAL_HPP
