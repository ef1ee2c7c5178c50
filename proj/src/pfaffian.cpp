#include "surface_ising/pfaffian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

namespace surface_ising {

namespace {

template <typename V>
decltype(auto) at(V& v, int i) {
  return v[static_cast<std::size_t>(i)];
}

std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

HalfMonomial times(const HalfMonomial& x, const HalfMonomial& y) {
  if ((x.square & (y.square | y.odd)) != 0 || (y.square & x.odd) != 0) {
    throw std::logic_error("half-weight exponent above 2 in a matching term");
  }
  const std::uint64_t common = x.odd & y.odd;
  return {x.odd ^ y.odd, x.square | y.square | common};
}

// Sorts and merges equal monomials, dropping zeros.
void compact(HalfPoly& p) {
  std::sort(p.begin(), p.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  HalfPoly out;
  for (auto& [m, c] : p) {
    if (!out.empty() && out.back().first == m) {
      out.back().second += c;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!c.is_zero()) {
      out.emplace_back(m, c);
    }
  }
  p = std::move(out);
}

std::vector<int> resolve_indexing(const TerminalGraph& gt, const std::vector<int>& indexing) {
  const int n = gt.terminal_count();
  if (indexing.empty()) {
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) at(id, i) = i;
    return id;
  }
  if (static_cast<int>(indexing.size()) != n) throw std::invalid_argument("indexing size differs from terminal count");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int r : indexing) {
    if (r < 0 || r >= n || seen[static_cast<std::size_t>(r)]) throw std::invalid_argument("indexing is not a permutation");
    seen[static_cast<std::size_t>(r)] = true;
  }
  return indexing;
}

void require_twist_ok(const TerminalGraph& gt, bool twisted) {
  if (twisted) return;
  for (int e = 0; e < gt.long_edge_count(); ++e) {
    if (gt.omega(e) != 0) throw std::invalid_argument("untwisted adjacency needs omega = 0 on every edge");
  }
}

class ExactSolver {
 public:
  explicit ExactSolver(const ExactSkewMatrix& a) : a_(a) {
    adj_.resize(static_cast<std::size_t>(a.n));
    for (int i = 0; i < a.n; ++i) {
      for (int j = i + 1; j < a.n; ++j) {
        if (!a(i, j).empty()) at(adj_, i).push_back(j);
      }
    }
  }

  const HalfPoly& solve(std::uint64_t rows) {
    static const HalfPoly one{{HalfMonomial{}, GaussInt(1)}};
    if (rows == 0) return one;
    auto it = memo_.find(rows);
    if (it != memo_.end()) return it->second;
    const int i = std::countr_zero(rows);
    const std::uint64_t rest = rows & ~bit(i);
    HalfPoly acc;
    for (int j : at(adj_, i)) {
      if ((rest & bit(j)) == 0) continue;
      const int between = std::popcount(rest & (bit(j) - 1));
      const HalfPoly& sub = solve(rest & ~bit(j));
      for (const auto& [m1, c1] : a_(i, j)) {
        const GaussInt c = between % 2 == 0 ? c1 : -c1;
        for (const auto& [m2, c2] : sub) acc.emplace_back(times(m1, m2), c * c2);
      }
    }
    compact(acc);
    return memo_.emplace(rows, std::move(acc)).first->second;
  }

 private:
  const ExactSkewMatrix& a_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::uint64_t, HalfPoly> memo_;
};

}  // namespace

ExactSkewMatrix build_exact_adjacency(const TerminalGraph& gt, const Orientation& k, bool twisted,
                                      const std::vector<int>& indexing) {
  require_twist_ok(gt, twisted);
  if (gt.long_edge_count() > 64) throw SizeLimitExceeded("exact Pfaffians support at most 64 graph edges");
  if (static_cast<int>(k.forward.size()) != gt.edge_count()) throw std::invalid_argument("orientation size mismatch");
  const std::vector<int> row = resolve_indexing(gt, indexing);
  ExactSkewMatrix a;
  a.n = gt.terminal_count();
  a.entries.resize(static_cast<std::size_t>(a.n * a.n));
  auto put = [&a](int i, int j, const HalfMonomial& m, const GaussInt& c) {
    a.entries[static_cast<std::size_t>(i * a.n + j)].emplace_back(m, c);
    a.entries[static_cast<std::size_t>(j * a.n + i)].emplace_back(m, -c);
  };
  for (const TerminalEdge& e : gt.edges()) {
    HalfMonomial m;
    GaussInt c(1);
    if (e.kind == TerminalEdgeKind::Long) {
      if (twisted) c = GaussInt::i_pow(gt.omega(e.source_edge));
    } else if (e.edge_a == e.edge_b) {
      m.square = bit(e.edge_a);
    } else {
      m.odd = bit(e.edge_a) | bit(e.edge_b);
    }
    if (!at(k.forward, e.id)) c = -c;
    put(at(row, e.a), at(row, e.b), m, c);
  }
  for (HalfPoly& p : a.entries) compact(p);
  return a;
}

EdgePoly pfaffian_exact(const ExactSkewMatrix& a, int max_size) {
  if (a.n > max_size || a.n > 64) {
    throw SizeLimitExceeded("exact Pfaffian of a " + std::to_string(a.n) + "-row matrix exceeds the bound " +
                            std::to_string(max_size) + "; use numeric mode");
  }
  EdgePoly out;
  if (a.n % 2 != 0) return out;
  ExactSolver solver(a);
  const std::uint64_t all = a.n == 64 ? ~std::uint64_t{0} : bit(a.n) - 1;
  for (const auto& [m, c] : solver.solve(all)) {
    if (m.odd != 0) throw std::logic_error("Pfaffian term with odd half-weight degree");
    out[m.square] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Eigen::MatrixXcd build_numeric_adjacency(const TerminalGraph& gt, const Orientation& k, bool twisted,
                                         const std::vector<double>& weights, const std::vector<int>& indexing) {
  require_twist_ok(gt, twisted);
  if (static_cast<int>(weights.size()) != gt.long_edge_count()) throw std::invalid_argument("one weight per graph edge expected");
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("numeric weights must be non-negative and finite");
  }
  const std::vector<int> row = resolve_indexing(gt, indexing);
  const Eigen::Index n = gt.terminal_count();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (const TerminalEdge& e : gt.edges()) {
    std::complex<double> v(1.0);
    if (e.kind == TerminalEdgeKind::Long) {
      if (twisted && gt.omega(e.source_edge) != 0) v *= std::complex<double>(0.0, 1.0);
    } else {
      v = std::sqrt(at(weights, e.edge_a)) * std::sqrt(at(weights, e.edge_b));
    }
    if (!at(k.forward, e.id)) v = -v;
    a(at(row, e.a), at(row, e.b)) += v;
    a(at(row, e.b), at(row, e.a)) -= v;
  }
  return a;
}

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int matching_sign(const TerminalGraph& gt, const Orientation& k, const std::vector<int>& matching,
                  const std::vector<int>& indexing) {
  if (!is_perfect_matching(gt, matching)) throw std::invalid_argument("not a perfect matching of the terminal graph");
  const std::vector<int> row = resolve_indexing(gt, indexing);
  std::vector<int> perm;
  for (int id : matching) {
    const TerminalEdge& e = gt.edge(id);
    const bool f = at(k.forward, id);
    perm.push_back(at(row, f ? e.a : e.b));
    perm.push_back(at(row, f ? e.b : e.a));
  }
  return permutation_sign(perm);
}

std::vector<std::vector<int>> enumerate_matchings(const TerminalGraph& gt) {
  const int n = gt.terminal_count();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (const TerminalEdge& e : gt.edges()) {
    at(incident, e.a).push_back(e.id);
    at(incident, e.b).push_back(e.id);
  }
  std::vector<std::vector<int>> out;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> current;
  auto rec = [&](auto& self) -> void {
    int i = 0;
    while (i < n && used[static_cast<std::size_t>(i)]) ++i;
    if (i == n) {
      std::vector<int> m = current;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    used[static_cast<std::size_t>(i)] = true;
    for (int id : at(incident, i)) {
      const TerminalEdge& e = gt.edge(id);
      const int j = e.a == i ? e.b : e.a;
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      current.push_back(id);
      self(self);
      current.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(i)] = false;
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

ExactEdgePoly to_exact(const EdgePoly& p) {
  ExactEdgePoly out;
  for (const auto& [m, c] : p) out[m] = c.cast<Rational>();
  return out;
}

Polynomial substitute(const ExactEdgePoly& p, const EmbeddedGraph& g) {
  Polynomial out;
  for (const auto& [mask, c] : p) {
    Monomial mono;
    ExactCoeff coeff = c;
    for (int e = 0; e < static_cast<int>(g.edges.size()) && e < 64; ++e) {
      if ((mask & bit(e)) == 0) continue;
      const Weight& w = at(g.edges, e).weight;
      if (w.is_symbolic()) {
        mono = mono * Monomial{{{w.symbol, 1}}};
      } else {
        coeff = coeff * ExactCoeff(w.value);
      }
    }
    out.add_term(mono, coeff);
  }
  return out;
}

}  // namespace surface_ising
