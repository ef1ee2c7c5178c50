#ifndef SURFACE_ISING_HOMOLOGY_HPP
#define SURFACE_ISING_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "surface_ising/numbers.hpp"

namespace surface_ising {

enum class SurfaceKind { Orientable, KleinSum, ProjectiveSum };

std::string to_string(SurfaceKind kind);
SurfaceKind parse_surface_kind(const std::string& text);

/// One side of the fundamental polygon: which identified pair it belongs to and its
/// exponent in the polygon word (+1 for x, -1 for x^-1).
struct SideOccurrence {
  int pair;
  int sign;
};

/// Polygon word of a closed surface. Basis order of H_1 is a_1..a_g, b_1..b_g, then
/// a, b (Klein sum) or c (projective sum); pair ids follow the same order.
struct SurfaceSignature {
  SurfaceKind kind = SurfaceKind::Orientable;
  int genus = 0;

  int b1() const;
  int pair_count() const { return b1(); }
  /// Side occurrences in word order: a_i b_i a_i^-1 b_i^-1 ..., then a b a^-1 b or c c.
  std::vector<SideOccurrence> side_word() const;
  /// Both occurrences of a twisted pair carry the same exponent (Klein b, projective c).
  bool pair_twisted(int pair) const;
  std::string pair_name(int pair) const;
  /// The two occurrence indices of a pair, in word order.
  std::pair<int, int> occurrences_of(int pair) const;

  friend bool operator==(const SurfaceSignature& a, const SurfaceSignature& b) {
    return a.kind == b.kind && a.genus == b.genus;
  }
};

/// Element of Z2^dim, dim <= 64.
struct Z2Vector {
  std::uint64_t bits = 0;
  int dim = 0;

  Z2Vector() = default;
  Z2Vector(std::uint64_t b, int d) : bits(b), dim(d) {}
  static Z2Vector zero(int d) { return {0, d}; }
  static Z2Vector unit(int d, int i) { return {std::uint64_t{1} << i, d}; }

  bool operator[](int i) const { return (bits >> i) & 1U; }
  int weight() const;
  bool is_zero() const { return bits == 0; }
  Z2Vector& operator+=(const Z2Vector& o);
  friend Z2Vector operator+(Z2Vector a, const Z2Vector& b) { return a += b; }
  friend bool operator==(const Z2Vector& a, const Z2Vector& b) { return a.bits == b.bits && a.dim == b.dim; }
  friend bool operator!=(const Z2Vector& a, const Z2Vector& b) { return !(a == b); }
  friend bool operator<(const Z2Vector& a, const Z2Vector& b) { return a.bits < b.bits; }
  /// Plain coordinate dot product (no intersection form).
  friend int dot(const Z2Vector& a, const Z2Vector& b);
  /// Bits in basis order, e.g. "10" for [a_1] on the torus.
  std::string to_string() const;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Z2 intersection form of the signature. Orientable blocks pair a_i with b_i; the
/// Klein block is [[1,1],[1,0]] on (a, b); the projective block is [c].[c] = 1.
class IntersectionForm {
 public:
  explicit IntersectionForm(const SurfaceSignature& sig);

  int dim() const { return static_cast<int>(rows_.size()); }
  const SurfaceSignature& signature() const { return sig_; }
  int operator()(const Z2Vector& x, const Z2Vector& y) const;
  /// Matrix-vector product I*d: the covector x -> x.d.
  Z2Vector apply(const Z2Vector& d) const;
  /// Solves I*c = t.
  Z2Vector solve(const Z2Vector& t) const;
  std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

 private:
  SurfaceSignature sig_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> inverse_rows_;
};

/// First Stiefel-Whitney class as a covector on H_1. It agrees with x -> x.x.
Z2Vector omega_class(const SurfaceSignature& sig);
int omega(const SurfaceSignature& sig, const Z2Vector& x);

/// Covector representing x -> x.d.
Z2Vector dual_flip_vector(const IntersectionForm& form, const Z2Vector& d);

/// Z2-valued quadratic refinement of the intersection form, fixed by basis values.
struct QuadraticForm {
  std::vector<int> basis_values;
};

/// Z4-valued quadratic enhancement: q(x+y) = q(x) + q(y) + 2 x.y.
struct QuadraticEnhancement {
  std::vector<int> basis_values;
};

int eval_form(const IntersectionForm& form, const QuadraticForm& q, const Z2Vector& x);
int eval_enhancement(const IntersectionForm& form, const QuadraticEnhancement& q, const Z2Vector& x);

/// Arf invariant from the exact Gauss sum. Requires even b1 and an orientable form.
int arf(const IntersectionForm& form, const QuadraticForm& q);
/// Brown invariant in Z8 from the exact Gauss sum over Z[exp(i pi/4)].
int brown(const IntersectionForm& form, const QuadraticEnhancement& q);

/// q_0: all basis values zero.
QuadraticForm zero_form(const SurfaceSignature& sig);
/// The reference enhancement: 3 on [a] (Klein), 1 on [c] (projective), 0 elsewhere.
QuadraticEnhancement reference_enhancement(const SurfaceSignature& sig);

/// All 2^b1 quadratic forms, lexicographic in basis values.
std::vector<QuadraticForm> enumerate_forms(const SurfaceSignature& sig);
/// All 2^b1 enhancements, each basis value of parity omega, lexicographic in basis values.
std::vector<QuadraticEnhancement> enumerate_enhancements(const SurfaceSignature& sig);

/// (sqrt 2)^k as an element of Z[zeta].
GaussInt sqrt2_pow(int k);

}  // namespace surface_ising

#endif  // SURFACE_ISING_HOMOLOGY_HPP
