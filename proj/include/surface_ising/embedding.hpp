#ifndef SURFACE_ISING_EMBEDDING_HPP
#define SURFACE_ISING_EMBEDDING_HPP

#include <optional>
#include <string>
#include <vector>

#include "surface_ising/homology.hpp"
#include "surface_ising/numbers.hpp"

namespace surface_ising {

/// Edge weight: a named symbol or an exact positive rational.
struct Weight {
  std::string symbol;
  Rational value{1};

  bool is_symbolic() const { return !symbol.empty(); }
  std::string to_string() const;
  static Weight parse(const std::string& text);
  static Weight number(const Rational& r) { return {"", r}; }
  static Weight named(const std::string& name) { return {name, Rational(1)}; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.symbol == b.symbol && a.value == b.value; }
};

/// Passage of an edge through a side of the polygon: the occurrence it leaves by and
/// the global slot of the exit point. The re-entry slot follows from the side pairing.
struct Crossing {
  int side;
  int slot;
  friend bool operator==(const Crossing& a, const Crossing& b) { return a.side == b.side && a.slot == b.slot; }
};

/// Edge between the vertices owning half-edges u and v; crossings are listed from u to v.
struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  Weight weight;
  std::vector<Crossing> crossings;

  bool is_outside() const { return !crossings.empty(); }
};

/// Vertex with its half-edges listed clockwise around it.
struct Vertex {
  int id = 0;
  std::vector<int> rotation;
};

/// A graph drawn in the fundamental polygon of a closed surface.
///
/// Half-edge ids run over 0..2|E|-1. Slots are global integers that increase
/// counterclockwise along the polygon word; perimeter[k] lists the slots on side
/// occurrence k in that order.
struct EmbeddedGraph {
  SurfaceSignature signature;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> perimeter;
  /// Optional half-edge on the outer face, used only for crossing-free components.
  std::optional<int> outer_face;

  int b1() const { return signature.b1(); }
};

/// Where a half-edge lives: its vertex, position in that rotation, edge and end (0 = u, 1 = v).
struct HalfEdgeInfo {
  int vertex = -1;
  int position = -1;
  int edge = -1;
  int end = -1;
};

std::vector<HalfEdgeInfo> half_edge_table(const EmbeddedGraph& g);
int edge_tail(const EmbeddedGraph& g, const std::vector<HalfEdgeInfo>& table, int e);
int edge_head(const EmbeddedGraph& g, const std::vector<HalfEdgeInfo>& table, int e);

/// Slot bookkeeping derived from the perimeter.
class SlotTable {
 public:
  explicit SlotTable(const EmbeddedGraph& g);

  bool contains(int slot) const;
  int side_of(int slot) const;
  int index_on_side(int slot) const;
  /// Slot identified with `slot` on the partner occurrence.
  int partner(int slot) const;
  /// All slots in counterclockwise order.
  const std::vector<int>& ordered() const { return ordered_; }

 private:
  SurfaceSignature sig_;
  std::vector<std::vector<int>> perimeter_;
  std::vector<SideOccurrence> word_;
  std::vector<int> ordered_;
  std::vector<std::pair<int, std::pair<int, int>>> where_;  // sorted: slot -> (side, index)
  const std::pair<int, std::pair<int, int>>* find(int slot) const;
};

enum class ViolationKind {
  SideWordMismatch,
  VertexIdMismatch,
  EdgeIdMismatch,
  UnknownHalfEdge,
  MissingHalfEdge,
  DuplicateHalfEdge,
  NonPositiveWeight,
  UnknownSide,
  SlotNotOnSide,
  SlotPairingMismatch,
  SlotOrder,
  SlotUsage,
  NonPlanarDrawing,
  BadOuterFace,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Checks every structural invariant. Empty result means the graph is usable.
std::vector<Violation> validate(const EmbeddedGraph& g);

/// Throws std::invalid_argument listing the violations, if any.
void require_valid(const EmbeddedGraph& g);

/// Subdivides every edge with two or more crossings through new degree-2 vertices,
/// giving weights (x_e, 1, ..., 1). Graphs without such edges come back unchanged.
EmbeddedGraph normalize(const EmbeddedGraph& g);
bool is_normalized(const EmbeddedGraph& g);

/// Per-pair parity of the edge's side crossings.
Z2Vector crossing_vector(const EmbeddedGraph& g, int e);
/// Parity of crossings with the twisted pair (b for Klein sums, c for projective sums).
int omega_edge(const EmbeddedGraph& g, int e);
/// Homology class carried by the edge: the solution c of I c = crossing_vector.
Z2Vector edge_class(const EmbeddedGraph& g, const IntersectionForm& form, int e);

/// A connected component as a standalone instance, with the map back to the parent.
struct Component {
  EmbeddedGraph graph;
  std::vector<int> vertex_ids;  // local vertex -> parent vertex
  std::vector<int> edge_ids;    // local edge -> parent edge
};

/// Connected components that contain at least one edge. Isolated vertices are dropped
/// (each contributes a factor 1 to the partition function).
std::vector<Component> split_components(const EmbeddedGraph& g);
bool is_connected(const EmbeddedGraph& g);

/// Distinct symbol names, sorted.
std::vector<std::string> symbols(const EmbeddedGraph& g);

/// JSON text in and out. Parse errors report line and column.
EmbeddedGraph read_graph_json(const std::string& text);
std::string write_graph_json(const EmbeddedGraph& g);
EmbeddedGraph load_graph(const std::string& path);
void save_graph(const EmbeddedGraph& g, const std::string& path);

}  // namespace surface_ising

#endif  // SURFACE_ISING_EMBEDDING_HPP
