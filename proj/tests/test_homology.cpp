#include <doctest.h>

#include "surface_ising/homology.hpp"

using namespace surface_ising;

namespace {

const SurfaceSignature kTorus{SurfaceKind::Orientable, 1};
const SurfaceSignature kKlein{SurfaceKind::KleinSum, 0};
const SurfaceSignature kProjective{SurfaceKind::ProjectiveSum, 0};

std::vector<SurfaceSignature> small_signatures() {
  std::vector<SurfaceSignature> out;
  for (int g = 0; g <= 3; ++g) out.push_back({SurfaceKind::Orientable, g});
  for (int g = 0; g <= 2; ++g) out.push_back({SurfaceKind::KleinSum, g});
  for (int g = 0; g <= 2; ++g) out.push_back({SurfaceKind::ProjectiveSum, g});
  return out;
}

}  // namespace

TEST_CASE("betti numbers and side words") {
  CHECK(kTorus.b1() == 2);
  CHECK(SurfaceSignature{SurfaceKind::Orientable, 3}.b1() == 6);
  CHECK(kKlein.b1() == 2);
  CHECK(SurfaceSignature{SurfaceKind::KleinSum, 1}.b1() == 4);
  CHECK(SurfaceSignature{SurfaceKind::ProjectiveSum, 1}.b1() == 3);
  for (const auto& sig : small_signatures()) {
    auto word = sig.side_word();
    CHECK(word.size() == static_cast<std::size_t>(2 * sig.b1()));
    for (int p = 0; p < sig.b1(); ++p) {
      auto [a, b] = sig.occurrences_of(p);
      CHECK(a < b);
      CHECK((word[a].sign == word[b].sign) == sig.pair_twisted(p));
    }
  }
  CHECK(kKlein.pair_name(0) == "a");
  CHECK(kKlein.pair_twisted(1));
  CHECK_FALSE(kKlein.pair_twisted(0));
  CHECK(kProjective.pair_name(0) == "c");
}

TEST_CASE("intersection form") {
  IntersectionForm torus(kTorus);
  CHECK(torus(Z2Vector::unit(2, 0), Z2Vector::unit(2, 1)) == 1);
  CHECK(torus(Z2Vector::unit(2, 0), Z2Vector::unit(2, 0)) == 0);
  IntersectionForm klein(kKlein);
  CHECK(klein(Z2Vector::unit(2, 0), Z2Vector::unit(2, 1)) == 1);
  CHECK(klein(Z2Vector::unit(2, 0), Z2Vector::unit(2, 0)) == 1);
  CHECK(klein(Z2Vector::unit(2, 1), Z2Vector::unit(2, 1)) == 0);
  for (const auto& sig : small_signatures()) {
    IntersectionForm form(sig);
    const int n = sig.b1();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      Z2Vector x{b, n};
      CHECK(form.apply(form.solve(x)) == x);
      CHECK(form(x, x) == omega(sig, x));
    }
  }
}

TEST_CASE("omega class") {
  CHECK(omega_class(kTorus).is_zero());
  CHECK(omega_class(kKlein) == Z2Vector::unit(2, 0));
  CHECK(omega_class(kProjective) == Z2Vector::unit(1, 0));
  for (const auto& sig : small_signatures()) {
    CHECK(omega_class(sig).is_zero() == (sig.kind == SurfaceKind::Orientable));
  }
}

TEST_CASE("dual flip vector") {
  IntersectionForm torus(kTorus);
  CHECK(dual_flip_vector(torus, Z2Vector::unit(2, 0)) == Z2Vector::unit(2, 1));
  CHECK(dual_flip_vector(torus, Z2Vector::zero(2)).is_zero());
  IntersectionForm rp(kProjective);
  CHECK(dual_flip_vector(rp, Z2Vector::unit(1, 0)) == Z2Vector::unit(1, 0));
}

TEST_CASE("quadratic form evaluation") {
  IntersectionForm torus(kTorus);
  CHECK(eval_form(torus, zero_form(kTorus), Z2Vector{3, 2}) == 1);
  CHECK(eval_form(torus, QuadraticForm{{1, 1}}, Z2Vector::zero(2)) == 0);
  CHECK(eval_form(torus, QuadraticForm{{1, 1}}, Z2Vector::unit(2, 0)) == 1);
  CHECK_THROWS_AS(eval_form(torus, QuadraticForm{{1}}, Z2Vector::zero(2)), DimensionMismatch);
}

TEST_CASE("arf invariant") {
  IntersectionForm torus(kTorus);
  CHECK(arf(torus, zero_form(kTorus)) == 0);
  CHECK(arf(torus, QuadraticForm{{1, 1}}) == 1);
  SurfaceSignature g2{SurfaceKind::Orientable, 2};
  CHECK(arf(IntersectionForm(g2), zero_form(g2)) == 0);
  int odd = 0;
  for (const auto& q : enumerate_forms(g2)) odd += arf(IntersectionForm(g2), q);
  CHECK(odd == 6);  // 2^{g-1}(2^g - 1) odd forms
}

TEST_CASE("brown invariant") {
  CHECK(brown(IntersectionForm(kProjective), reference_enhancement(kProjective)) == 1);
  CHECK(brown(IntersectionForm(kKlein), reference_enhancement(kKlein)) == 0);
  CHECK(reference_enhancement(kKlein).basis_values == std::vector<int>{3, 0});
  IntersectionForm torus(kTorus);
  for (const auto& q : enumerate_forms(kTorus)) {
    QuadraticEnhancement doubled{{2 * q.basis_values[0], 2 * q.basis_values[1]}};
    CHECK(brown(torus, doubled) == 4 * arf(torus, q));
  }
}

TEST_CASE("enumerations") {
  CHECK(enumerate_forms(kTorus).size() == 4);
  CHECK(enumerate_enhancements(SurfaceSignature{SurfaceKind::Orientable, 2}).size() == 16);
  auto rp = enumerate_enhancements(kProjective);
  REQUIRE(rp.size() == 2);
  CHECK(rp[0].basis_values == std::vector<int>{1});
  CHECK(rp[1].basis_values == std::vector<int>{3});
  CHECK(enumerate_enhancements(kKlein).size() == 4);
  auto forms = enumerate_forms(kTorus);
  CHECK(forms[1].basis_values == std::vector<int>{0, 1});
}

TEST_CASE("enhancement axiom and parity") {
  for (const auto& sig : small_signatures()) {
    if (sig.b1() > 6) continue;
    IntersectionForm form(sig);
    const int n = sig.b1();
    for (const auto& q : enumerate_enhancements(sig)) {
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        Z2Vector x{a, n};
        CHECK(eval_enhancement(form, q, x) % 2 == omega(sig, x));
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
          Z2Vector y{b, n};
          int lhs = eval_enhancement(form, q, x + y);
          int rhs = (eval_enhancement(form, q, x) + eval_enhancement(form, q, y) + 2 * form(x, y)) % 4;
          if (lhs != rhs) FAIL("enhancement axiom broken");
        }
      }
    }
  }
}

TEST_CASE("quadratic form axiom") {
  for (int g = 1; g <= 4; ++g) {
    SurfaceSignature sig{SurfaceKind::Orientable, g};
    IntersectionForm form(sig);
    const int n = sig.b1();
    for (const auto& q : enumerate_forms(sig)) {
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); a += 3) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); b += 5) {
          Z2Vector x{a, n};
          Z2Vector y{b, n};
          int lhs = eval_form(form, q, x + y);
          int rhs = (eval_form(form, q, x) + eval_form(form, q, y) + form(x, y)) % 2;
          if (lhs != rhs) FAIL("quadratic form axiom broken");
        }
      }
    }
  }
}
