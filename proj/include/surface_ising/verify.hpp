#ifndef SURFACE_ISING_VERIFY_HPP
#define SURFACE_ISING_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "surface_ising/partition.hpp"

namespace surface_ising {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::string> details;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

struct VerifyLimits {
  int sign_law_terminals = 12;
  int oracle_dimension = 16;
};

/// validate, good orientation, sign law and triple agreement. An orientation file
/// replaces the constructed one; it needs a connected normalized graph.
VerifyReport verify_graph(const EmbeddedGraph& g, const std::optional<std::string>& orientation_text = std::nullopt,
                          const Options& opt = {}, const VerifyLimits& limits = {});

/// Distinct values of eps^K(D) (-1)^{t(D)} over all perfect matchings D.
std::vector<int> sign_law_values(const TerminalGraph& gt, const Orientation& k);

std::string to_string(CheckStatus s);

}  // namespace surface_ising

#endif  // SURFACE_ISING_VERIFY_HPP
