#include "surface_ising/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace surface_ising {

int Monomial::degree() const {
  int d = 0;
  for (const auto& [name, e] : powers) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.powers.begin();
  auto j = b.powers.begin();
  while (i != a.powers.end() || j != b.powers.end()) {
    if (j == b.powers.end() || (i != a.powers.end() && i->first < j->first)) {
      out.powers.push_back(*i++);
    } else if (i == a.powers.end() || j->first < i->first) {
      out.powers.push_back(*j++);
    } else {
      out.powers.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

// Higher degree sorts first so that map iteration already gives the printing order.
bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da > db;
  return a.powers < b.powers;
}

Polynomial Polynomial::constant(const ExactCoeff& c) {
  Polynomial p;
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::symbol(const std::string& name) {
  Polynomial p;
  p.add_term(Monomial{{{name, 1}}}, ExactCoeff(Rational(1)));
  return p;
}

bool Polynomial::has_rational_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

ExactCoeff Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactCoeff() : it->second;
}

void Polynomial::add_term(const Monomial& m, const ExactCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial operator*(const ExactCoeff& c, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, pc] : p.terms_) out.add_term(m, c * pc);
  return out;
}

std::complex<double> Polynomial::evaluate(const std::map<std::string, std::complex<double>>& values) const {
  std::complex<double> total = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (const auto& [name, e] : m.powers) {
      auto it = values.find(name);
      if (it == values.end()) throw std::invalid_argument("unbound symbol '" + name + "'");
      for (int k = 0; k < e; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (const auto& [name, e] : m.powers) {
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
      Rational v = c.c[0];
      if (v < 0) {
        negative = true;
        v = -v;
      }
      if (v != 1 || mono.empty()) coeff = surface_ising::to_string(v);
    } else if (c.is_gaussian() && c.c[0] == 0) {
      Rational v = c.c[2];
      if (v < 0) {
        negative = true;
        v = -v;
      }
      coeff = (v == 1) ? "i" : surface_ising::to_string(v) + "*i";
    } else {
      coeff = surface_ising::to_string(c);
    }
    std::string term = coeff;
    if (!coeff.empty() && !mono.empty()) term += "*";
    term += mono;
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  Polynomial parse() {
    Polynomial out;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [m, c] = term();
      out.add_term(m, negative ? -c : c);
      skip();
      if (pos_ >= s_.size()) break;
      char op = s_[pos_++];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = (op == '-');
    }
    return out;
  }

 private:
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + why);
  }

  ExactCoeff number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    return ExactCoeff(parse_rational(s_.substr(start, pos_ - start)));
  }

  ExactCoeff paren_coeff() {
    ++pos_;  // '('
    std::size_t close = s_.find(')', pos_);
    if (close == std::string::npos) fail("unbalanced parenthesis");
    Polynomial inner = PolyParser(s_.substr(pos_, close - pos_)).parse();
    pos_ = close + 1;
    ExactCoeff c;
    for (const auto& [m, v] : inner.terms()) {
      if (m.powers.empty()) {
        c += v;
      } else if (m.powers.size() == 1 && m.powers[0].first == "z" && m.powers[0].second < 4) {
        c += v * ExactCoeff::zeta_pow(m.powers[0].second);
      } else {
        fail("unsupported coefficient");
      }
    }
    return c;
  }

  std::pair<Monomial, ExactCoeff> term() {
    ExactCoeff c(Rational(1));
    Monomial m;
    while (true) {
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= number();
      } else if (ch == '(') {
        c *= paren_coeff();
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          std::size_t es = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
          if (es == pos_) fail("missing exponent");
          e = std::stoi(s_.substr(es, pos_ - es));
        }
        if (name == "i") {
          c *= ExactCoeff::i_pow(e);
        } else {
          m = m * Monomial{{{name, e}}};
        }
      } else {
        fail("unexpected character");
      }
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {m, c};
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) { return PolyParser(text).parse(); }

}  // namespace surface_ising
