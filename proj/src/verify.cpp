#include "surface_ising/verify.hpp"

#include <algorithm>
#include <set>

#include "surface_ising/drawing.hpp"

namespace surface_ising {

bool VerifyReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

std::vector<int> sign_law_values(const TerminalGraph& gt, const Orientation& k) {
  std::set<int> seen;
  for (const auto& d : enumerate_matchings(gt)) {
    const int t = t_in_parity(gt, d) ^ t_out_parity(gt, d);
    seen.insert(matching_sign(gt, k, d) * (t ? -1 : 1));
  }
  return {seen.begin(), seen.end()};
}

VerifyReport verify_graph(const EmbeddedGraph& g, const std::optional<std::string>& orientation_text, const Options& opt,
                          const VerifyLimits& limits) {
  VerifyReport report;
  CheckResult valid{"validate", CheckStatus::Pass, {}};
  for (const auto& v : validate(g)) valid.details.push_back(to_string(v.kind) + ": " + v.detail);
  if (!valid.details.empty()) valid.status = CheckStatus::Fail;
  report.checks.push_back(valid);
  if (valid.status == CheckStatus::Fail) return report;

  const EmbeddedGraph n = normalize(g);
  const auto components = split_components(n);
  std::vector<TerminalGraph> gts;
  std::vector<Orientation> ks;
  CheckResult good{"orientation", CheckStatus::Pass, {}};
  if (orientation_text) {
    if (!is_normalized(g) || components.size() != 1 || components.front().graph.vertices.size() != g.vertices.size() ||
        !inside_connected(g)) {
      throw std::invalid_argument(
          "an orientation file needs a connected, normalized graph whose inside edges reach every vertex");
    }
  }
  for (std::size_t c = 0; c < components.size(); ++c) {
    gts.emplace_back(connect_inside(components[c].graph));
    ks.push_back(orientation_text ? read_orientation(gts.back(), *orientation_text)
                                  : construct_good(gts.back(), opt.orientation_seed));
    for (const auto& v : check_good(gts.back(), ks.back())) {
      good.details.push_back("component " + std::to_string(c) + ": " + v.describe());
    }
  }
  if (!good.details.empty()) good.status = CheckStatus::Fail;
  report.checks.push_back(good);

  CheckResult law{"sign law", CheckStatus::Pass, {}};
  for (std::size_t c = 0; c < gts.size(); ++c) {
    if (gts[c].terminal_count() > limits.sign_law_terminals) {
      law.status = law.status == CheckStatus::Fail ? law.status : CheckStatus::Skipped;
      law.details.push_back("component " + std::to_string(c) + " skipped: bound");
      continue;
    }
    const auto values = sign_law_values(gts[c], ks[c]);
    if (values.size() != 1) {
      law.status = CheckStatus::Fail;
      law.details.push_back("component " + std::to_string(c) + ": sign times (-1)^t takes both values");
    }
  }
  report.checks.push_back(law);

  CheckResult agree{"agreement", CheckStatus::Pass, {}};
  const int dim = cycle_space_dimension(g);
  bool small = dim <= limits.oracle_dimension;
  for (const auto& gt : gts) small = small && gt.terminal_count() <= opt.exact_limit;
  if (!small) {
    agree.status = CheckStatus::Skipped;
    agree.details.push_back("skipped: bound");
  } else {
    Options o = opt;
    o.mode = Mode::Exact;
    try {
      const Polynomial b = z_bruteforce(g, o).exact;
      const Polynomial p = z_practical(g, o).exact;
      const Polynomial q = z_general(g, o).exact;
      if (p != b) agree.details.push_back("practical " + p.to_string() + " differs from bruteforce " + b.to_string());
      if (q != b) agree.details.push_back("general " + q.to_string() + " differs from bruteforce " + b.to_string());
    } catch (const PhaseError& e) {
      agree.details.push_back(e.what());
    }
    if (!agree.details.empty()) agree.status = CheckStatus::Fail;
  }
  report.checks.push_back(agree);
  return report;
}

}  // namespace surface_ising
