#include "surface_ising/numbers.hpp"

#include <cctype>
#include <sstream>

namespace surface_ising {

bool looks_like_rational(const std::string& text) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  if (text[pos] == '-' || text[pos] == '+') ++pos;
  bool digits = false;
  bool slash = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = true;
    } else if (ch == '/' && digits && !slash) {
      slash = true;
      digits = false;
    } else {
      return false;
    }
  }
  return digits;
}

Rational parse_rational(const std::string& text) {
  if (!looks_like_rational(text)) throw std::invalid_argument("not a rational number: '" + text + "'");
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

ExactCoeff divide(const ExactCoeff& a, const Rational& d) {
  if (d == 0) throw std::domain_error("division by zero");
  return ExactCoeff(a.c[0] / d, a.c[1] / d, a.c[2] / d, a.c[3] / d);
}

namespace {

ExactCoeff galois(const ExactCoeff& a, int k) {
  ExactCoeff out;
  for (int j = 0; j < 4; ++j) {
    if (a.c[j] == 0) continue;
    out += ExactCoeff(a.c[j]) * ExactCoeff::zeta_pow(j * k);
  }
  return out;
}

}  // namespace

ExactCoeff inverse(const ExactCoeff& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  ExactCoeff others = galois(a, 3) * galois(a, 5) * galois(a, 7);
  ExactCoeff norm = a * others;
  if (!norm.is_rational()) throw std::logic_error("field norm is not rational");
  return divide(others, norm.c[0]);
}

Rational norm_squared_gaussian(const ExactCoeff& a) { return (a * a.conj()).c[0]; }

std::string to_string(const ExactCoeff& a) {
  if (a.is_rational()) return to_string(a.c[0]);
  if (a.is_gaussian()) {
    const Rational& re = a.c[0];
    const Rational& im = a.c[2];
    std::string imag;
    if (im == 1) {
      imag = "i";
    } else if (im == -1) {
      imag = "-i";
    } else {
      imag = to_string(im) + "*i";
    }
    if (re == 0) return imag;
    std::string out = "(" + to_string(re);
    out += (imag[0] == '-') ? imag : "+" + imag;
    return out + ")";
  }
  std::string out = "(";
  bool first = true;
  static const char* basis[4] = {"", "*z", "*z^2", "*z^3"};
  for (int k = 0; k < 4; ++k) {
    if (a.c[k] == 0) continue;
    std::string part = to_string(a.c[k]) + basis[k];
    if (!first && part[0] != '-') out += "+";
    out += part;
    first = false;
  }
  return out + ")";
}

}  // namespace surface_ising
