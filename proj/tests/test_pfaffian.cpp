#include <doctest.h>

#include <bit>
#include <random>

#include "helpers.hpp"
#include "surface_ising/pfaffian.hpp"

using namespace surface_ising;
using namespace surface_ising::testing;

namespace {

using Cx = std::complex<double>;

Eigen::MatrixXcd random_skew(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = Cx(u(rng), u(rng));
      a(j, i) = -a(i, j);
    }
  }
  return a;
}

Polynomial pf_poly(const TerminalGraph& gt, const Orientation& k) {
  const bool twisted = gt.graph().signature.kind != SurfaceKind::Orientable;
  return substitute(to_exact(pfaffian_exact(build_exact_adjacency(gt, k, twisted))), gt.graph());
}

Polynomial poly(const std::string& s) { return parse_polynomial(s); }

}  // namespace

TEST_CASE("numeric Pfaffian small cases") {
  Eigen::Matrix2cd two;
  two << 0.0, 1.0, -1.0, 0.0;
  CHECK(std::abs(pfaffian(two) - Cx(1.0)) < 1e-15);

  Eigen::Matrix4d id4 = Eigen::Matrix4d::Zero();
  id4(0, 1) = 1;
  id4(2, 3) = 1;
  id4(1, 0) = -1;
  id4(3, 2) = -1;
  CHECK(pfaffian(id4) == doctest::Approx(1.0));

  std::mt19937_64 rng(1);
  const Eigen::MatrixXcd a = random_skew(4, rng);
  const Cx expansion = a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);
  CHECK(std::abs(pfaffian(a) - expansion) < 1e-14);

  CHECK(pfaffian(Eigen::MatrixXcd::Zero(3, 3)) == Cx(0.0));
  CHECK(pfaffian(Eigen::MatrixXcd::Zero(4, 4)) == Cx(0.0));
  Eigen::MatrixXcd not_skew = a;
  not_skew(0, 1) += 1.0;
  CHECK_THROWS_AS(pfaffian(not_skew), std::invalid_argument);
  Eigen::MatrixXcd inf = a;
  inf(0, 1) = std::numeric_limits<double>::infinity();
  inf(1, 0) = -inf(0, 1);
  CHECK_THROWS_AS(pfaffian(inf), std::overflow_error);
}

TEST_CASE("Pfaffian squared is the determinant and permutations act by their sign") {
  std::mt19937_64 rng(2);
  for (int n : {2, 6, 10, 20, 40}) {
    const Eigen::MatrixXcd a = random_skew(n, rng);
    const Cx pf = pfaffian(a);
    const Cx det = a.partialPivLu().determinant();
    CHECK(std::abs(pf * pf - det) <= 1e-9 * std::abs(det));

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Eigen::MatrixXcd b(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) b(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = a(i, j);
    }
    CHECK(std::abs(pfaffian(b) - static_cast<double>(permutation_sign(perm)) * pf) <= 1e-9 * std::abs(pf));
  }
}

TEST_CASE("worked examples") {
  TerminalGraph torus(torus_lattice(1, 1, kX, kY));
  const Orientation k = construct_good(torus);
  CHECK(pf_poly(torus, k) == poly("x*y - 1 + x + y"));

  // A long edge contributes a bare +-1; the parallel short edge carries s s'.
  const ExactSkewMatrix a = build_exact_adjacency(torus, k, false);
  for (int e = 0; e < torus.long_edge_count(); ++e) {
    const auto& entry = a(torus.edge(e).a, torus.edge(e).b);
    const auto bare = std::find_if(entry.begin(), entry.end(), [](const auto& t) { return t.first == HalfMonomial{}; });
    REQUIRE(bare != entry.end());
    CHECK((bare->second == GaussInt(1) || bare->second == GaussInt(-1)));
    for (const auto& [m, c] : entry) CHECK(std::popcount(m.odd) + 2 * std::popcount(m.square) <= 2);
  }

  std::vector<double> half{0.5, 0.5};
  CHECK(std::abs(pfaffian(build_numeric_adjacency(torus, k, false, half)) - Cx(0.25)) < 1e-14);

  TerminalGraph klein(klein_lattice(1, 1, kX, kY));
  const Orientation kk = construct_good(klein);
  CHECK(pf_poly(klein, kk) == poly("x*y - i + x + i*y"));
  CHECK_THROWS_AS(build_exact_adjacency(klein, kk, false), std::invalid_argument);

  TerminalGraph edge(single_edge());
  const Orientation ke = construct_good(edge);
  const Eigen::MatrixXcd m = build_numeric_adjacency(edge, ke, false, {0.3});
  CHECK(m(0, 1) == Cx(1.0));
  CHECK(m(1, 0) == Cx(-1.0));
  CHECK(matching_sign(edge, ke, {0}) == 1);
  CHECK(matching_sign(edge, Orientation{{false}}, {0}) == -1);
  CHECK_THROWS_AS(matching_sign(edge, ke, {}), std::invalid_argument);
}

TEST_CASE("exact Pfaffian equals the signed matching sum") {
  std::vector<EmbeddedGraph> instances = named_instances();
  for (const auto& g : small_random(4, 8, 23)) instances.push_back(g);
  int checked = 0;
  for (const auto& raw : instances) {
    const EmbeddedGraph g = normalize(raw);
    if (!is_connected(g)) continue;
    TerminalGraph gt(g);
    if (gt.terminal_count() > 8) continue;
    const bool twisted = g.signature.kind != SurfaceKind::Orientable;
    const Orientation k = construct_good(gt, 4);
    EdgePoly sum;
    for (const auto& d : enumerate_matchings(gt)) {
      GaussInt c(matching_sign(gt, k, d));
      std::uint64_t odd = 0;
      std::uint64_t square = 0;
      for (int e : d) {
        const TerminalEdge& te = gt.edge(e);
        if (te.kind == TerminalEdgeKind::Long) {
          if (twisted) c = c * GaussInt::i_pow(gt.omega(e));
          continue;
        }
        for (int half : {te.edge_a, te.edge_b}) {
          const std::uint64_t b = std::uint64_t{1} << half;
          if (odd & b) {
            odd &= ~b;
            square |= b;
          } else {
            odd |= b;
          }
        }
      }
      REQUIRE(odd == 0);
      sum[square] += c;
    }
    std::erase_if(sum, [](const auto& kv) { return kv.second.is_zero(); });
    CHECK(sum == pfaffian_exact(build_exact_adjacency(gt, k, twisted)));
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("exact and numeric Pfaffians agree") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(1, 9);
  for (const auto& raw : small_random(4, 12, 31)) {
    const EmbeddedGraph g = normalize(raw);
    TerminalGraph gt(g);
    const bool twisted = g.signature.kind != SurfaceKind::Orientable;
    const Orientation k = construct_good(gt);
    std::vector<double> w;
    std::map<std::string, std::complex<double>> values;
    EmbeddedGraph named = g;
    for (auto& e : named.edges) {
      const Rational r(num(rng), 10);
      e.weight = Weight::named("w" + std::to_string(e.id));
      w.push_back(to_double(r));
      values[e.weight.symbol] = to_double(r);
    }
    TerminalGraph nt(named);
    const Polynomial exact = substitute(to_exact(pfaffian_exact(build_exact_adjacency(nt, k, twisted))), named);
    const Cx expected = exact.evaluate(values);
    const Cx got = pfaffian(build_numeric_adjacency(gt, k, twisted, w));
    CHECK(std::abs(got - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
    const Cx det = build_numeric_adjacency(gt, k, twisted, w).partialPivLu().determinant();
    CHECK(std::abs(got * got - det) <= 1e-9 * std::max(1.0, std::abs(det)));
  }
}

TEST_CASE("matching sign ignores listing order and row order changes Pfaffian by the permutation sign") {
  TerminalGraph gt(torus_lattice(1, 2, kX, kY));
  const Orientation k = construct_good(gt);
  std::mt19937_64 rng(9);
  for (const auto& d : enumerate_matchings(gt)) {
    auto shuffled = d;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(matching_sign(gt, k, shuffled) == matching_sign(gt, k, d));
  }
  std::vector<int> perm(static_cast<std::size_t>(gt.terminal_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const EdgePoly base = pfaffian_exact(build_exact_adjacency(gt, k, false));
  EdgePoly moved = pfaffian_exact(build_exact_adjacency(gt, k, false, perm));
  for (auto& [m, c] : moved) c = c * GaussInt(permutation_sign(perm));
  CHECK(moved == base);
}

TEST_CASE("exact size bound") {
  TerminalGraph gt(torus_lattice(2, 2, kX, kY));
  const auto a = build_exact_adjacency(gt, construct_good(gt), false);
  CHECK_THROWS_AS(pfaffian_exact(a, 12), SizeLimitExceeded);
  CHECK_NOTHROW(pfaffian_exact(a));
}
