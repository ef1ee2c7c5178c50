#ifndef SURFACE_ISING_DRAWING_HPP
#define SURFACE_ISING_DRAWING_HPP

#include <vector>

#include "surface_ising/embedding.hpp"

namespace surface_ising {

enum class DartKind { Piece, Next, Prev };

/// Directed side of one drawn segment. Pieces are the parts of a graph edge between
/// its endpoints and polygon slots; Next/Prev run along the polygon boundary
/// counterclockwise/clockwise between consecutive slots.
struct Dart {
  int tail = -1;
  int head = -1;
  int twin = -1;
  DartKind kind = DartKind::Piece;
  int edge = -1;
  int piece = -1;
  bool forward = true;  // along the edge's u -> v direction
};

enum class FaceKind { Inside, Boundary, Exterior };

/// Plane map of the drawing inside the polygon, closed off by the polygon boundary.
/// Nodes 0..|V|-1 are graph vertices; the rest are slots in counterclockwise order.
struct DrawingMap {
  int vertex_nodes = 0;
  std::vector<int> node_slot;
  std::vector<Dart> darts;
  std::vector<std::vector<int>> rotation;  // clockwise outgoing darts per node
  std::vector<int> rotation_pos;           // dart -> index in rotation[tail]
  std::vector<int> half_edge_dart;         // half-edge -> dart leaving its vertex, or -1
  std::vector<std::vector<int>> faces;     // each face keeps itself on the left
  std::vector<int> face_of;
  std::vector<FaceKind> face_kind;

  int node_count() const { return static_cast<int>(rotation.size()); }
  int next_in_face(int d) const;
  int slot_node(int slot) const;
  bool connected() const;
  int euler_characteristic() const;
};

/// Builds the map for the edges marked in keep (all edges when keep is empty). Slots
/// of dropped edges are dropped too. The graph must pass the structural checks.
DrawingMap build_drawing(const EmbeddedGraph& g, const std::vector<bool>& keep = {});

/// Outer face of a crossing-free drawing: the face of g.outer_face when set, else the
/// face with the most darts (lowest index on ties).
int choose_outer_face(const DrawingMap& map, const EmbeddedGraph& g);

/// True when the edges that stay inside the polygon already connect every vertex.
bool inside_connected(const EmbeddedGraph& g);

/// Adds weight-0 edges inside the polygon, each drawn through a face of the current
/// drawing, until inside_connected holds. Z_I does not change. Without this an outside
/// edge can be a bridge of its own face, which then runs along it on both sides.
/// Expects a connected, normalized graph.
EmbeddedGraph connect_inside(const EmbeddedGraph& g);

}  // namespace surface_ising

#endif  // SURFACE_ISING_DRAWING_HPP
