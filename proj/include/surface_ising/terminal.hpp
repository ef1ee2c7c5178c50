#ifndef SURFACE_ISING_TERMINAL_HPP
#define SURFACE_ISING_TERMINAL_HPP

#include <vector>

#include "surface_ising/drawing.hpp"
#include "surface_ising/embedding.hpp"
#include "surface_ising/homology.hpp"

namespace surface_ising {

/// Terminal (v, label): one per half-edge, labels 1..d(v) clockwise from the first
/// rotation entry.
struct Terminal {
  int vertex;
  int label;
  int half_edge;
};

enum class TerminalEdgeKind { Long, Short };

/// Long edges copy a graph edge (a = terminal of its u end, b = of its v end). Short
/// edges join two terminals of one vertex, a carrying the smaller label. The weight of
/// a short edge is s(half_a) * s(half_b) with s(e)^2 = x_e.
struct TerminalEdge {
  int id;
  TerminalEdgeKind kind;
  int a;
  int b;
  int source_edge;  // graph edge for long edges, -1 for short ones
  int edge_a;       // graph edge whose half sits at terminal a
  int edge_b;
};

/// One step of a walk in the terminal graph; along means from a to b.
struct Step {
  int edge;
  bool along;
};

/// Closed walk bounding a face; edges met twice are listed twice.
struct FaceCycle {
  std::vector<Step> steps;
  int face = -1;          // face of the drawing map, for inside faces
  int outside_edge = -1;  // the long edge the face belongs to, for outside faces
};

class TerminalGraph {
 public:
  /// The graph must be valid and normalized. Vertices of degree 0 are rejected.
  explicit TerminalGraph(const EmbeddedGraph& g);

  const EmbeddedGraph& graph() const { return graph_; }
  const IntersectionForm& form() const { return form_; }
  int terminal_count() const { return static_cast<int>(terminals_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int long_edge_count() const { return static_cast<int>(graph_.edges.size()); }
  const std::vector<Terminal>& terminals() const { return terminals_; }
  const std::vector<TerminalEdge>& edges() const { return edges_; }
  const TerminalEdge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  int terminal(int vertex, int label) const;
  int terminal_of_half(int half_edge) const;
  int degree(int vertex) const;
  /// Short edge between labels k != l of a vertex.
  int short_edge(int vertex, int k, int l) const;

  /// Raw side-pair tally of a long edge.
  const Z2Vector& tally(int long_edge) const { return tally_[static_cast<std::size_t>(long_edge)]; }
  /// Homology class of a long edge.
  const Z2Vector& edge_class(int long_edge) const { return class_[static_cast<std::size_t>(long_edge)]; }
  int omega(int long_edge) const { return omega_[static_cast<std::size_t>(long_edge)]; }

  /// All long edges.
  std::vector<int> standard_dimer() const;

 private:
  EmbeddedGraph graph_;
  IntersectionForm form_;
  std::vector<Terminal> terminals_;
  std::vector<int> first_terminal_;
  std::vector<int> first_short_;
  std::vector<int> terminal_of_half_;
  std::vector<TerminalEdge> edges_;
  std::vector<Z2Vector> tally_;
  std::vector<Z2Vector> class_;
  std::vector<int> omega_;
};

/// Labels {k1,l1} and {k2,l2} interleave around the circle.
int chord_cross(const TerminalGraph& gt, int s1, int s2);

/// True when the edge ids form a perfect matching.
bool is_perfect_matching(const TerminalGraph& gt, const std::vector<int>& matching);

/// Parity of crossings among short edges of the matching.
int t_in_parity(const TerminalGraph& gt, const std::vector<int>& matching);
/// Parity of crossings outside the polygon among long edges of the matching.
int t_out_parity(const TerminalGraph& gt, const std::vector<int>& matching);
/// Same parity from the class of the whole set: (q0~([M]) - omega count) / 2.
int t_out_parity_global(const TerminalGraph& gt, const std::vector<int>& matching);
/// Self-crossing parity of a single long edge.
int edge_self_parity(const TerminalGraph& gt, int long_edge);
/// Homology class of a set of long edges (short edges carry none).
Z2Vector matching_class(const TerminalGraph& gt, const std::vector<int>& matching);

/// Lifted faces of the drawing lying fully inside the polygon, traversed counterclockwise.
/// The graph must be connected. For a crossing-free drawing every face but the outer one.
std::vector<FaceCycle> inside_face_cycles(const TerminalGraph& gt);
/// The face formed by an outside long edge and the boundary of the drawing with every
/// other outside edge removed.
FaceCycle outside_face_cycle(const TerminalGraph& gt, int long_edge);

/// Lifts a closed walk of graph edges (edge id, traversed u -> v) to the terminal graph,
/// adding the short edges clockwise around every corner.
FaceCycle lift_walk(const TerminalGraph& gt, const std::vector<std::pair<int, bool>>& walk);

}  // namespace surface_ising

#endif  // SURFACE_ISING_TERMINAL_HPP
