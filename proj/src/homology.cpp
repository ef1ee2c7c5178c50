#include "surface_ising/homology.hpp"

#include <bit>
#include <stdexcept>

namespace surface_ising {

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Orientable:
      return "orientable";
    case SurfaceKind::KleinSum:
      return "klein";
    case SurfaceKind::ProjectiveSum:
      return "projective";
  }
  return "?";
}

SurfaceKind parse_surface_kind(const std::string& text) {
  if (text == "orientable") return SurfaceKind::Orientable;
  if (text == "klein") return SurfaceKind::KleinSum;
  if (text == "projective") return SurfaceKind::ProjectiveSum;
  throw std::invalid_argument("unknown surface kind '" + text + "' (expected orientable, klein or projective)");
}

int SurfaceSignature::b1() const {
  switch (kind) {
    case SurfaceKind::Orientable:
      return 2 * genus;
    case SurfaceKind::KleinSum:
      return 2 * genus + 2;
    case SurfaceKind::ProjectiveSum:
      return 2 * genus + 1;
  }
  return 0;
}

std::vector<SideOccurrence> SurfaceSignature::side_word() const {
  std::vector<SideOccurrence> word;
  for (int i = 0; i < genus; ++i) {
    word.push_back({i, +1});
    word.push_back({genus + i, +1});
    word.push_back({i, -1});
    word.push_back({genus + i, -1});
  }
  if (kind == SurfaceKind::KleinSum) {
    word.push_back({2 * genus, +1});
    word.push_back({2 * genus + 1, +1});
    word.push_back({2 * genus, -1});
    word.push_back({2 * genus + 1, +1});
  } else if (kind == SurfaceKind::ProjectiveSum) {
    word.push_back({2 * genus, +1});
    word.push_back({2 * genus, +1});
  }
  return word;
}

bool SurfaceSignature::pair_twisted(int pair) const {
  if (pair < 2 * genus) return false;
  if (kind == SurfaceKind::KleinSum) return pair == 2 * genus + 1;
  return kind == SurfaceKind::ProjectiveSum;
}

std::string SurfaceSignature::pair_name(int pair) const {
  if (pair < genus) return "a" + std::to_string(pair + 1);
  if (pair < 2 * genus) return "b" + std::to_string(pair - genus + 1);
  if (kind == SurfaceKind::KleinSum) return pair == 2 * genus ? "a" : "b";
  return "c";
}

std::pair<int, int> SurfaceSignature::occurrences_of(int pair) const {
  auto word = side_word();
  int first = -1;
  for (int k = 0; k < static_cast<int>(word.size()); ++k) {
    if (word[static_cast<std::size_t>(k)].pair != pair) continue;
    if (first < 0) {
      first = k;
    } else {
      return {first, k};
    }
  }
  throw std::out_of_range("no side pair " + std::to_string(pair));
}

int Z2Vector::weight() const { return std::popcount(bits); }

Z2Vector& Z2Vector::operator+=(const Z2Vector& o) {
  if (dim != o.dim) throw DimensionMismatch("Z2 vectors of different dimension");
  bits ^= o.bits;
  return *this;
}

int dot(const Z2Vector& a, const Z2Vector& b) {
  if (a.dim != b.dim) throw DimensionMismatch("Z2 vectors of different dimension");
  return std::popcount(a.bits & b.bits) & 1;
}

std::string Z2Vector::to_string() const {
  std::string s;
  for (int i = 0; i < dim; ++i) s += (*this)[i] ? '1' : '0';
  return s;
}

IntersectionForm::IntersectionForm(const SurfaceSignature& sig) : sig_(sig) {
  const int n = sig.b1();
  if (n > 64) throw std::invalid_argument("first Betti number above 64 is not supported");
  rows_.assign(static_cast<std::size_t>(n), 0);
  auto set = [&](int i, int j) {
    rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    rows_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
  };
  const int g = sig.genus;
  for (int i = 0; i < g; ++i) set(i, g + i);
  if (sig.kind == SurfaceKind::KleinSum) {
    set(2 * g, 2 * g);
    set(2 * g, 2 * g + 1);
  } else if (sig.kind == SurfaceKind::ProjectiveSum) {
    set(2 * g, 2 * g);
  }

  // Gauss-Jordan over Z2 on [I | 1].
  std::vector<std::uint64_t> a = rows_;
  inverse_rows_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) inverse_rows_[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if ((a[static_cast<std::size_t>(r)] >> col) & 1U) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("degenerate intersection form");
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
    std::swap(inverse_rows_[static_cast<std::size_t>(col)], inverse_rows_[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < n; ++r) {
      if (r != col && ((a[static_cast<std::size_t>(r)] >> col) & 1U)) {
        a[static_cast<std::size_t>(r)] ^= a[static_cast<std::size_t>(col)];
        inverse_rows_[static_cast<std::size_t>(r)] ^= inverse_rows_[static_cast<std::size_t>(col)];
      }
    }
  }
}

Z2Vector IntersectionForm::apply(const Z2Vector& d) const {
  if (d.dim != dim()) throw DimensionMismatch("vector dimension does not match the intersection form");
  std::uint64_t out = 0;
  for (int i = 0; i < dim(); ++i) {
    if (std::popcount(rows_[static_cast<std::size_t>(i)] & d.bits) & 1) out |= std::uint64_t{1} << i;
  }
  return {out, dim()};
}

Z2Vector IntersectionForm::solve(const Z2Vector& t) const {
  if (t.dim != dim()) throw DimensionMismatch("vector dimension does not match the intersection form");
  std::uint64_t out = 0;
  for (int i = 0; i < dim(); ++i) {
    if (std::popcount(inverse_rows_[static_cast<std::size_t>(i)] & t.bits) & 1) out |= std::uint64_t{1} << i;
  }
  return {out, dim()};
}

int IntersectionForm::operator()(const Z2Vector& x, const Z2Vector& y) const { return dot(x, apply(y)); }

Z2Vector omega_class(const SurfaceSignature& sig) {
  Z2Vector w = Z2Vector::zero(sig.b1());
  if (sig.kind != SurfaceKind::Orientable) w.bits = std::uint64_t{1} << (2 * sig.genus);
  return w;
}

int omega(const SurfaceSignature& sig, const Z2Vector& x) { return dot(omega_class(sig), x); }

Z2Vector dual_flip_vector(const IntersectionForm& form, const Z2Vector& d) { return form.apply(d); }

namespace {

void check_dim(const IntersectionForm& form, const std::vector<int>& values, const Z2Vector& x) {
  if (static_cast<int>(values.size()) != form.dim() || x.dim != form.dim()) {
    throw DimensionMismatch("quadratic form and vector must have dimension b1 = " + std::to_string(form.dim()));
  }
}

// Sum over set basis vectors of value, plus m * sum_{i<j} x_i x_j (e_i . e_j).
int expand(const IntersectionForm& form, const std::vector<int>& values, const Z2Vector& x, int m, int mod) {
  int total = 0;
  const int n = form.dim();
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    total += values[static_cast<std::size_t>(i)];
    std::uint64_t later = form.row(i) & x.bits & ~((std::uint64_t{2} << i) - 1);
    total += m * std::popcount(later);
  }
  return ((total % mod) + mod) % mod;
}

}  // namespace

int eval_form(const IntersectionForm& form, const QuadraticForm& q, const Z2Vector& x) {
  check_dim(form, q.basis_values, x);
  return expand(form, q.basis_values, x, 1, 2);
}

int eval_enhancement(const IntersectionForm& form, const QuadraticEnhancement& q, const Z2Vector& x) {
  check_dim(form, q.basis_values, x);
  return expand(form, q.basis_values, x, 2, 4);
}

GaussInt sqrt2_pow(int k) {
  GaussInt out(1);
  for (int i = 0; i < k; ++i) out *= GaussInt::sqrt2();
  return out;
}

int arf(const IntersectionForm& form, const QuadraticForm& q) {
  const int n = form.dim();
  if (n % 2 != 0 || form.signature().kind != SurfaceKind::Orientable) {
    throw std::invalid_argument("Arf invariant needs an orientable signature");
  }
  std::int64_t sum = 0;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) sum += eval_form(form, q, {b, n}) ? -1 : 1;
  const std::int64_t root = std::int64_t{1} << (n / 2);
  if (sum == root) return 0;
  if (sum == -root) return 1;
  throw std::logic_error("Gauss sum " + std::to_string(sum) + " is not +-sqrt|H|; corrupted form");
}

int brown(const IntersectionForm& form, const QuadraticEnhancement& q) {
  const int n = form.dim();
  GaussInt sum;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) sum += GaussInt::i_pow(eval_enhancement(form, q, {b, n}));
  const GaussInt root = sqrt2_pow(n);
  for (int k = 0; k < 8; ++k) {
    if (GaussInt::zeta_pow(k) * root == sum) return k;
  }
  throw std::logic_error("Gauss sum has modulus other than sqrt|H|; corrupted enhancement");
}

QuadraticForm zero_form(const SurfaceSignature& sig) {
  return {std::vector<int>(static_cast<std::size_t>(sig.b1()), 0)};
}

QuadraticEnhancement reference_enhancement(const SurfaceSignature& sig) {
  QuadraticEnhancement q{std::vector<int>(static_cast<std::size_t>(sig.b1()), 0)};
  if (sig.kind == SurfaceKind::KleinSum) q.basis_values[static_cast<std::size_t>(2 * sig.genus)] = 3;
  if (sig.kind == SurfaceKind::ProjectiveSum) q.basis_values[static_cast<std::size_t>(2 * sig.genus)] = 1;
  return q;
}

std::vector<QuadraticForm> enumerate_forms(const SurfaceSignature& sig) {
  const int n = sig.b1();
  std::vector<QuadraticForm> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    QuadraticForm q{std::vector<int>(static_cast<std::size_t>(n))};
    // Most significant coordinate first gives lexicographic order.
    for (int i = 0; i < n; ++i) q.basis_values[static_cast<std::size_t>(i)] = static_cast<int>((b >> (n - 1 - i)) & 1U);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<QuadraticEnhancement> enumerate_enhancements(const SurfaceSignature& sig) {
  const int n = sig.b1();
  const Z2Vector w = omega_class(sig);
  std::vector<QuadraticEnhancement> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    QuadraticEnhancement q{std::vector<int>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i) {
      int high = static_cast<int>((b >> (n - 1 - i)) & 1U);
      q.basis_values[static_cast<std::size_t>(i)] = (w[i] ? 1 : 0) + 2 * high;
    }
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace surface_ising
