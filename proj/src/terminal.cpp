#include "surface_ising/terminal.hpp"

#include <algorithm>
#include <stdexcept>

namespace surface_ising {

namespace {

template <typename V>
decltype(auto) at(V& v, int i) {
  return v[static_cast<std::size_t>(i)];
}

}  // namespace

TerminalGraph::TerminalGraph(const EmbeddedGraph& g) : graph_(g), form_(g.signature) {
  if (!is_normalized(g)) throw std::invalid_argument("terminal graph needs a normalized graph (one crossing per edge)");
  const int halves = 2 * static_cast<int>(g.edges.size());
  terminal_of_half_.assign(static_cast<std::size_t>(halves), -1);
  for (const Vertex& v : g.vertices) {
    if (v.rotation.empty()) throw std::invalid_argument("vertex " + std::to_string(v.id) + " has degree 0; delete it first");
    first_terminal_.push_back(static_cast<int>(terminals_.size()));
    for (int k = 0; k < static_cast<int>(v.rotation.size()); ++k) {
      at(terminal_of_half_, at(v.rotation, k)) = static_cast<int>(terminals_.size());
      terminals_.push_back({v.id, k + 1, at(v.rotation, k)});
    }
  }
  first_terminal_.push_back(static_cast<int>(terminals_.size()));
  if (terminals_.size() % 2 != 0) throw std::logic_error("odd number of terminals");

  std::vector<int> edge_of_half(static_cast<std::size_t>(halves), -1);
  for (const Edge& e : g.edges) {
    at(edge_of_half, e.u) = e.id;
    at(edge_of_half, e.v) = e.id;
    edges_.push_back({e.id, TerminalEdgeKind::Long, at(terminal_of_half_, e.u), at(terminal_of_half_, e.v), e.id, e.id, e.id});
    tally_.push_back(crossing_vector(g, e.id));
    class_.push_back(form_.solve(tally_.back()));
    omega_.push_back(omega_edge(g, e.id));
  }
  for (const Vertex& v : g.vertices) {
    first_short_.push_back(static_cast<int>(edges_.size()));
    const int d = static_cast<int>(v.rotation.size());
    for (int k = 1; k <= d; ++k) {
      for (int l = k + 1; l <= d; ++l) {
        const int id = static_cast<int>(edges_.size());
        edges_.push_back({id, TerminalEdgeKind::Short, terminal(v.id, k), terminal(v.id, l), -1,
                          at(edge_of_half, at(v.rotation, k - 1)), at(edge_of_half, at(v.rotation, l - 1))});
      }
    }
  }
}

int TerminalGraph::terminal(int vertex, int label) const { return at(first_terminal_, vertex) + label - 1; }

int TerminalGraph::terminal_of_half(int half_edge) const { return at(terminal_of_half_, half_edge); }

int TerminalGraph::degree(int vertex) const { return at(first_terminal_, vertex + 1) - at(first_terminal_, vertex); }

int TerminalGraph::short_edge(int vertex, int k, int l) const {
  if (k == l) throw std::invalid_argument("short edge needs two distinct labels");
  if (k > l) std::swap(k, l);
  const int d = degree(vertex);
  int offset = 0;
  for (int i = 1; i < k; ++i) offset += d - i;
  return at(first_short_, vertex) + offset + (l - k - 1);
}

std::vector<int> TerminalGraph::standard_dimer() const {
  std::vector<int> d(static_cast<std::size_t>(long_edge_count()));
  for (int e = 0; e < long_edge_count(); ++e) at(d, e) = e;
  return d;
}

int chord_cross(const TerminalGraph& gt, int s1, int s2) {
  const TerminalEdge& x = gt.edge(s1);
  const TerminalEdge& y = gt.edge(s2);
  if (x.kind != TerminalEdgeKind::Short || y.kind != TerminalEdgeKind::Short) return 0;
  const auto& t = gt.terminals();
  if (at(t, x.a).vertex != at(t, y.a).vertex) return 0;
  const int a = at(t, x.a).label;
  const int b = at(t, x.b).label;
  const int c = at(t, y.a).label;
  const int d = at(t, y.b).label;
  auto inside = [a, b](int p) { return a < p && p < b; };
  return (inside(c) != inside(d)) && c != a && c != b && d != a && d != b ? 1 : 0;
}

bool is_perfect_matching(const TerminalGraph& gt, const std::vector<int>& matching) {
  std::vector<int> seen(static_cast<std::size_t>(gt.terminal_count()), 0);
  for (int e : matching) {
    if (e < 0 || e >= gt.edge_count()) return false;
    if (++at(seen, gt.edge(e).a) > 1 || ++at(seen, gt.edge(e).b) > 1) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

namespace {

void require_matching(const TerminalGraph& gt, const std::vector<int>& matching) {
  if (!is_perfect_matching(gt, matching)) throw std::invalid_argument("not a perfect matching of the terminal graph");
}

int half_difference(const TerminalGraph& gt, const Z2Vector& c, int omega_count) {
  const int q = eval_enhancement(gt.form(), reference_enhancement(gt.graph().signature), c);
  const int diff = ((q - omega_count) % 4 + 4) % 4;
  if (diff % 2 != 0) throw std::logic_error("enhancement parity disagrees with omega");
  return diff / 2;
}

}  // namespace

int t_in_parity(const TerminalGraph& gt, const std::vector<int>& matching) {
  require_matching(gt, matching);
  int t = 0;
  for (std::size_t i = 0; i < matching.size(); ++i) {
    for (std::size_t j = i + 1; j < matching.size(); ++j) t ^= chord_cross(gt, matching[i], matching[j]);
  }
  return t;
}

int edge_self_parity(const TerminalGraph& gt, int long_edge) {
  return half_difference(gt, gt.edge_class(long_edge), gt.omega(long_edge));
}

int t_out_parity(const TerminalGraph& gt, const std::vector<int>& matching) {
  require_matching(gt, matching);
  std::vector<int> longs;
  for (int e : matching) {
    if (gt.edge(e).kind == TerminalEdgeKind::Long) longs.push_back(e);
  }
  int t = 0;
  for (std::size_t i = 0; i < longs.size(); ++i) {
    t ^= edge_self_parity(gt, longs[i]);
    for (std::size_t j = i + 1; j < longs.size(); ++j) t ^= gt.form()(gt.edge_class(longs[i]), gt.edge_class(longs[j]));
  }
  return t;
}

Z2Vector matching_class(const TerminalGraph& gt, const std::vector<int>& matching) {
  Z2Vector c = Z2Vector::zero(gt.graph().b1());
  for (int e : matching) {
    if (gt.edge(e).kind == TerminalEdgeKind::Long) c += gt.edge_class(e);
  }
  return c;
}

int t_out_parity_global(const TerminalGraph& gt, const std::vector<int>& matching) {
  require_matching(gt, matching);
  int omega_count = 0;
  for (int e : matching) {
    if (gt.edge(e).kind == TerminalEdgeKind::Long) omega_count += gt.omega(e);
  }
  return half_difference(gt, matching_class(gt, matching), omega_count);
}

FaceCycle lift_walk(const TerminalGraph& gt, const std::vector<std::pair<int, bool>>& walk) {
  const EmbeddedGraph& g = gt.graph();
  FaceCycle out;
  const int n = static_cast<int>(walk.size());
  for (int i = 0; i < n; ++i) {
    const auto [e, forward] = at(walk, i);
    const auto [e2, forward2] = at(walk, (i + 1) % n);
    out.steps.push_back({e, forward});
    const int arrive = forward ? at(g.edges, e).v : at(g.edges, e).u;
    const int leave = forward2 ? at(g.edges, e2).u : at(g.edges, e2).v;
    const Terminal& tin = at(gt.terminals(), gt.terminal_of_half(arrive));
    const Terminal& tout = at(gt.terminals(), gt.terminal_of_half(leave));
    if (tin.vertex != tout.vertex) throw std::logic_error("walk is not closed at a vertex");
    const int d = gt.degree(tin.vertex);
    int steps = ((tout.label - tin.label) % d + d) % d;
    if (steps == 0 && d > 1) steps = d;  // every other edge at this vertex was removed
    int label = tin.label;
    for (int s = 0; s < steps; ++s) {
      const int next = label % d + 1;
      out.steps.push_back({gt.short_edge(tin.vertex, label, next), label < next});
      label = next;
    }
  }
  return out;
}

std::vector<FaceCycle> inside_face_cycles(const TerminalGraph& gt) {
  const EmbeddedGraph& g = gt.graph();
  if (!is_connected(g)) throw std::invalid_argument("face cycles need a connected graph");
  const DrawingMap map = build_drawing(g);
  const bool crossing_free = map.node_count() == map.vertex_nodes;
  const int outer = crossing_free ? choose_outer_face(map, g) : -1;
  std::vector<FaceCycle> out;
  for (int f = 0; f < static_cast<int>(map.faces.size()); ++f) {
    if (crossing_free ? f == outer : at(map.face_kind, f) != FaceKind::Inside) continue;
    std::vector<std::pair<int, bool>> walk;
    for (int d : at(map.faces, f)) walk.emplace_back(at(map.darts, d).edge, at(map.darts, d).forward);
    FaceCycle c = lift_walk(gt, walk);
    c.face = f;
    out.push_back(std::move(c));
  }
  return out;
}

FaceCycle outside_face_cycle(const TerminalGraph& gt, int long_edge) {
  const EmbeddedGraph& g = gt.graph();
  if (long_edge < 0 || long_edge >= gt.long_edge_count() || !at(g.edges, long_edge).is_outside()) {
    throw std::invalid_argument("edge " + std::to_string(long_edge) + " is not an outside edge");
  }
  std::vector<bool> keep(g.edges.size());
  for (const Edge& e : g.edges) at(keep, e.id) = !e.is_outside() || e.id == long_edge;
  const DrawingMap map = build_drawing(g, keep);

  const Crossing& cr = at(g.edges, long_edge).crossings.front();
  const SlotTable slots(g);
  const int small = std::min(cr.slot, slots.partner(cr.slot));
  const int small_node = map.slot_node(small);
  const int arc = at(at(map.rotation, small_node), 1);  // next arc out of the smaller slot
  const auto& face = at(map.faces, at(map.face_of, arc));

  // The piece entering the smaller slot gives the direction of the edge in the face.
  const auto start = std::find(face.begin(), face.end(), arc) - face.begin();
  const int len = static_cast<int>(face.size());
  const Dart& before = at(map.darts, at(face, static_cast<int>((start + len - 1) % len)));
  if (before.kind != DartKind::Piece || before.edge != long_edge) {
    throw std::runtime_error("outside face of edge " + std::to_string(long_edge) + " does not enter the boundary along it");
  }
  std::vector<std::pair<int, bool>> walk{{long_edge, before.forward}};
  for (int i = 1; i < len; ++i) {
    const Dart& d = at(map.darts, at(face, static_cast<int>((start + i) % len)));
    if (d.kind != DartKind::Piece) {
      // Only the far side of the edge's own outside arc may show up here.
      if (walk.back().first != long_edge) throw std::runtime_error("outside face of edge " + std::to_string(long_edge) + " meets the boundary twice");
      continue;
    }
    if (d.edge == long_edge) {
      if (i == 1 || i == len - 1) continue;
      // A bridge of the kept subgraph: the face also runs back along the other side.
      if (walk.back() == std::pair{d.edge, static_cast<bool>(d.forward)}) continue;
    }
    walk.emplace_back(d.edge, d.forward);
  }
  while (walk.size() > 1 && walk.back() == walk.front()) walk.pop_back();
  FaceCycle c = lift_walk(gt, walk);
  c.outside_edge = long_edge;
  return c;
}

}  // namespace surface_ising
