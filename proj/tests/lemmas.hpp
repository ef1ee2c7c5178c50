#ifndef SURFACE_ISING_TEST_LEMMAS_HPP
#define SURFACE_ISING_TEST_LEMMAS_HPP

// Exhaustive checks of the algebraic identities the Pfaffian formulas rest on.
// Each returns an empty string on success, else a description of the first failure.

#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "surface_ising/homology.hpp"
#include "surface_ising/pfaffian.hpp"
#include "surface_ising/terminal.hpp"

namespace surface_ising::testing {

/// Calls visit on every pairing of the given labels, pairs (k, l) with k < l.
inline void for_each_pairing(std::vector<int> free, std::vector<std::pair<int, int>>& cur,
                             const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  if (free.empty()) {
    visit(cur);
    return;
  }
  const int a = free.front();
  for (std::size_t j = 1; j < free.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < free.size(); ++k) {
      if (k != j) rest.push_back(free[k]);
    }
    cur.emplace_back(a, free[j]);
    for_each_pairing(rest, cur, visit);
    cur.pop_back();
  }
}

/// Sum over pairings of 2n points on a circle of (-1)^(number of crossing chords) is 1.
inline std::string dimer_sign_lemma(int n) {
  TerminalGraph gt(star(2 * n));
  std::vector<int> labels;
  for (int k = 1; k <= 2 * n; ++k) labels.push_back(k);
  long sum = 0;
  std::vector<std::pair<int, int>> cur;
  for_each_pairing(labels, cur, [&](const std::vector<std::pair<int, int>>& p) {
    int t = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        t ^= chord_cross(gt, gt.short_edge(0, p[i].first, p[i].second), gt.short_edge(0, p[j].first, p[j].second));
      }
    }
    sum += t ? -1 : 1;
  });
  return sum == 1 ? "" : "K_" + std::to_string(2 * n) + ": sum " + std::to_string(sum);
}

inline std::vector<Z2Vector> all_classes(int b1) {
  std::vector<Z2Vector> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << b1); ++bits) out.push_back({bits, b1});
  return out;
}

/// (1/sqrt|H|) sum_q (-1)^(Arf q + q x) = 1 for every x.
inline std::string arf_lemma_i(const SurfaceSignature& sig) {
  const IntersectionForm form(sig);
  const auto forms = enumerate_forms(sig);
  const long root = 1L << (sig.b1() / 2);
  for (const Z2Vector& x : all_classes(sig.b1())) {
    long sum = 0;
    for (const auto& q : forms) sum += ((arf(form, q) + eval_form(form, q, x)) % 2) ? -1 : 1;
    if (sum != root) return "x=" + x.to_string() + ": sum " + std::to_string(sum);
  }
  return "";
}

/// Arf q + Arf q' = q(D) = q'(D) where (q + q')(x) = D.x.
inline std::string arf_lemma_ii(const SurfaceSignature& sig) {
  const IntersectionForm form(sig);
  const auto forms = enumerate_forms(sig);
  const int b1 = sig.b1();
  for (const auto& q : forms) {
    for (const auto& p : forms) {
      Z2Vector t = Z2Vector::zero(b1);
      for (int i = 0; i < b1; ++i) {
        if ((q.basis_values[static_cast<std::size_t>(i)] + p.basis_values[static_cast<std::size_t>(i)]) % 2) t += Z2Vector::unit(b1, i);
      }
      const Z2Vector delta = form.solve(t);
      for (const Z2Vector& x : all_classes(b1)) {
        if ((eval_form(form, q, x) + eval_form(form, p, x)) % 2 != form(delta, x)) return "difference is not D.x";
      }
      const int lhs = (arf(form, q) + arf(form, p)) % 2;
      if (lhs != eval_form(form, q, delta) || lhs != eval_form(form, p, delta)) return "failed at delta " + delta.to_string();
    }
  }
  return "";
}

/// (1/sqrt|H|) sum_q zeta^(-Br q) i^(q x) = 1 for every x.
inline std::string brown_lemma_i(const SurfaceSignature& sig) {
  const IntersectionForm form(sig);
  const auto enhancements = enumerate_enhancements(sig);
  const GaussInt root = sqrt2_pow(sig.b1());
  for (const Z2Vector& x : all_classes(sig.b1())) {
    GaussInt sum;
    for (const auto& q : enhancements) sum += GaussInt::zeta_pow(-brown(form, q)) * GaussInt::i_pow(eval_enhancement(form, q, x));
    if (sum != root) return "x=" + x.to_string();
  }
  return "";
}

/// Br q1 - Br q2 = 2 q1(D) = -2 q2(D) mod 8 where q1(x) + 2 D.x = q2(x).
/// 2 q2(D) = 2 q1(D) + 4 D.D, so "+2 q2(D)" only holds when D.D = 0.
inline std::string brown_lemma_ii(const SurfaceSignature& sig) {
  const IntersectionForm form(sig);
  const auto enhancements = enumerate_enhancements(sig);
  const int b1 = sig.b1();
  for (const auto& q1 : enhancements) {
    for (const auto& q2 : enhancements) {
      Z2Vector t = Z2Vector::zero(b1);
      for (int i = 0; i < b1; ++i) {
        const int diff = (q2.basis_values[static_cast<std::size_t>(i)] - q1.basis_values[static_cast<std::size_t>(i)] + 4) % 4;
        if (diff % 2) return "basis values of different parity";
        if (diff == 2) t += Z2Vector::unit(b1, i);
      }
      const Z2Vector delta = form.solve(t);
      for (const Z2Vector& x : all_classes(b1)) {
        if ((eval_enhancement(form, q1, x) + 2 * form(delta, x)) % 4 != eval_enhancement(form, q2, x)) return "q2 - q1 is not 2 D.x";
      }
      const int lhs = ((brown(form, q1) - brown(form, q2)) % 8 + 8) % 8;
      if (lhs != 2 * eval_enhancement(form, q1, delta) % 8) return "2 q1(D) fails at delta " + delta.to_string();
      if (lhs != (8 - 2 * eval_enhancement(form, q2, delta)) % 8) return "-2 q2(D) fails at delta " + delta.to_string();
    }
  }
  return "";
}

/// Signatures with the given first Betti numbers.
inline std::vector<SurfaceSignature> signatures_with_b1(const std::vector<int>& wanted) {
  std::vector<SurfaceSignature> out;
  for (auto kind : {SurfaceKind::Orientable, SurfaceKind::KleinSum, SurfaceKind::ProjectiveSum}) {
    for (int g = 0; g <= 3; ++g) {
      const SurfaceSignature sig{kind, g};
      if (std::find(wanted.begin(), wanted.end(), sig.b1()) != wanted.end()) out.push_back(sig);
    }
  }
  return out;
}

/// n^K(C) for a closed walk: steps against the orientation.
inline int against_count(const Orientation& k, const std::vector<Step>& cycle) {
  int n = 0;
  for (const Step& s : cycle) n += s.along != k.forward[static_cast<std::size_t>(s.edge)] ? 1 : 0;
  return n;
}

/// For every perfect matching D: sum_j (n^K(C_j) + 1) = t(D) + t(D0) mod 2 over the
/// alternating cycles of D and D0, and the sign law holds with the same constant.
inline std::string cycle_identity(const TerminalGraph& gt, const Orientation& k) {
  const auto d0 = gt.standard_dimer();
  const int t0 = t_in_parity(gt, d0) ^ t_out_parity(gt, d0);
  const int eps0 = matching_sign(gt, k, d0);
  for (const auto& d : enumerate_matchings(gt)) {
    int sum = 0;
    for (const auto& c : alternating_cycles(gt, d, d0)) sum += against_count(k, c) + 1;
    const int t = t_in_parity(gt, d) ^ t_out_parity(gt, d);
    if (sum % 2 != (t ^ t0)) return "cycle identity fails";
    if (eps0 * matching_sign(gt, k, d) != (sum % 2 ? -1 : 1)) return "matching sign disagrees with the cycles";
  }
  return "";
}

}  // namespace surface_ising::testing

#endif  // SURFACE_ISING_TEST_LEMMAS_HPP
