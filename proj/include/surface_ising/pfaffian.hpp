#ifndef SURFACE_ISING_PFAFFIAN_HPP
#define SURFACE_ISING_PFAFFIAN_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "surface_ising/numbers.hpp"
#include "surface_ising/orientation.hpp"
#include "surface_ising/polynomial.hpp"
#include "surface_ising/terminal.hpp"

namespace surface_ising {

/// Monomial in the half-weights s_e (s_e^2 = x_e): edges with exponent 1 and 2.
struct HalfMonomial {
  std::uint64_t odd = 0;
  std::uint64_t square = 0;

  friend bool operator==(const HalfMonomial& a, const HalfMonomial& b) { return a.odd == b.odd && a.square == b.square; }
  friend bool operator<(const HalfMonomial& a, const HalfMonomial& b) {
    return a.square != b.square ? a.square < b.square : a.odd < b.odd;
  }
};

/// Sorted terms with nonzero coefficients.
using HalfPoly = std::vector<std::pair<HalfMonomial, GaussInt>>;

/// Multilinear polynomial in the x_e, keyed by the set of edges in the monomial.
template <typename C>
using EdgePolyT = std::map<std::uint64_t, C>;
using EdgePoly = EdgePolyT<GaussInt>;
using ExactEdgePoly = EdgePolyT<ExactCoeff>;

/// Skew-symmetric matrix with entries in Z[i][s_e]; stores the full square.
struct ExactSkewMatrix {
  int n = 0;
  std::vector<HalfPoly> entries;

  const HalfPoly& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entries sum over parallel edges: +-i^omega(e) for long edges (the i-power only
/// when twisted), +-s_e s_e' for short edges. Rows follow terminal order, or
/// row = indexing[terminal] when an indexing is given.
ExactSkewMatrix build_exact_adjacency(const TerminalGraph& gt, const Orientation& k, bool twisted,
                                      const std::vector<int>& indexing = {});

/// Sum over perfect matchings, by first-row expansion memoized on the set of
/// remaining rows. Throws SizeLimitExceeded above max_size rows.
EdgePoly pfaffian_exact(const ExactSkewMatrix& a, int max_size = 16);

/// Numeric adjacency; weights are non-negative values of x_e per graph edge.
Eigen::MatrixXcd build_numeric_adjacency(const TerminalGraph& gt, const Orientation& k, bool twisted,
                                         const std::vector<double>& weights, const std::vector<int>& indexing = {});

/// Pfaffian of a dense skew-symmetric matrix by Parlett-Reid elimination with pivoting.
/// A pivot below 1e-13 times the largest entry counts as a structural zero.
template <typename Derived>
typename Derived::Scalar pfaffian(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (input.rows() != input.cols()) throw std::invalid_argument("Pfaffian of a non-square matrix");
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);
  if (n % 2 != 0) return Scalar(0);
  Matrix a = input;
  const Real scale = a.cwiseAbs().maxCoeff();
  if (!std::isfinite(static_cast<double>(scale))) throw std::overflow_error("non-finite matrix entry");
  if (scale == Real(0)) return Scalar(0);
  if ((a + a.transpose()).cwiseAbs().maxCoeff() > Real(1e-12) * scale) {
    throw std::invalid_argument("matrix is not skew-symmetric");
  }
  Scalar pf(1);
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp = 0;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (std::abs(a(k + 1, k)) <= Real(1e-13) * scale) return Scalar(0);
    pf *= a(k, k + 1);
    const Eigen::Index m = n - k - 2;
    if (m > 0) {
      Vector tau = a.row(k).tail(m).transpose() / a(k, k + 1);
      Vector col = a.col(k + 1).tail(m);
      a.bottomRightCorner(m, m).noalias() += tau * col.transpose();
      a.bottomRightCorner(m, m).noalias() -= col * tau.transpose();
    }
  }
  if (!std::isfinite(static_cast<double>(std::abs(pf)))) throw std::overflow_error("Pfaffian overflows double range");
  return pf;
}

/// Sign of the matching under k: sign of the permutation listing each edge tail then
/// head, in rows of the given indexing (identity when empty).
int matching_sign(const TerminalGraph& gt, const Orientation& k, const std::vector<int>& matching,
                  const std::vector<int>& indexing = {});

/// Every perfect matching of the terminal graph, each as sorted edge ids.
std::vector<std::vector<int>> enumerate_matchings(const TerminalGraph& gt);

/// Sign of a permutation given as images 0..n-1.
int permutation_sign(const std::vector<int>& perm);

/// Replaces each x_e by the edge weight (symbol or rational).
Polynomial substitute(const ExactEdgePoly& p, const EmbeddedGraph& g);
ExactEdgePoly to_exact(const EdgePoly& p);

}  // namespace surface_ising

#endif  // SURFACE_ISING_PFAFFIAN_HPP
