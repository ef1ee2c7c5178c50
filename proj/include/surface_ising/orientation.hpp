#ifndef SURFACE_ISING_ORIENTATION_HPP
#define SURFACE_ISING_ORIENTATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surface_ising/homology.hpp"
#include "surface_ising/terminal.hpp"

namespace surface_ising {

/// Direction of every terminal-graph edge: true means a -> b.
struct Orientation {
  std::vector<bool> forward;

  friend bool operator==(const Orientation& x, const Orientation& y) { return x.forward == y.forward; }
};

/// Number of steps of the walk that run against the orientation.
int disagreements(const Orientation& k, const FaceCycle& cycle);

/// Short edges from big to small label, inside long edges low to high terminal (or at
/// random when a seed is given), then parities fixed along a dual spanning tree, and
/// every outside edge set by its outside face. The graph must be connected.
Orientation construct_good(const TerminalGraph& gt, std::optional<std::uint64_t> seed = std::nullopt);

enum class FaceRole { ShortRule, Inside, Outside };

struct GoodnessViolation {
  FaceRole role;
  int id;  // short edge id, inside face index, or outside long edge id
  std::string describe() const;
};

/// Empty when the orientation is good.
std::vector<GoodnessViolation> check_good(const TerminalGraph& gt, const Orientation& k);

/// Reverse every long edge e with flips . tally(e) = 1.
Orientation variant(const TerminalGraph& gt, const Orientation& k0, const Z2Vector& flips);
/// Reverse every long edge e with q([e]) != q0~([e]).
Orientation variant_for_enhancement(const TerminalGraph& gt, const Orientation& k0, const QuadraticEnhancement& q);
/// Reverse every long edge e with q([e]) != q_0([e]).
Orientation variant_for_form(const TerminalGraph& gt, const Orientation& k0, const QuadraticForm& q);

/// JSON listing {"schema": 1, "edges": [{"id", "from", "to"}]} in terminal ids.
std::string write_orientation(const TerminalGraph& gt, const Orientation& k);
Orientation read_orientation(const TerminalGraph& gt, const std::string& text);

}  // namespace surface_ising

#endif  // SURFACE_ISING_ORIENTATION_HPP
