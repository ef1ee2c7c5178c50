#include "surface_ising/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace surface_ising {

int DrawingMap::next_in_face(int d) const {
  const Dart& dart = darts[static_cast<std::size_t>(d)];
  const auto& rot = rotation[static_cast<std::size_t>(dart.head)];
  int pos = rotation_pos[static_cast<std::size_t>(dart.twin)];
  return rot[(static_cast<std::size_t>(pos) + 1) % rot.size()];
}

int DrawingMap::slot_node(int slot) const {
  for (int n = vertex_nodes; n < node_count(); ++n) {
    if (node_slot[static_cast<std::size_t>(n)] == slot) return n;
  }
  return -1;
}

bool DrawingMap::connected() const {
  const int n = node_count();
  if (n == 0) return true;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int groups = n;
  for (const Dart& d : darts) {
    int a = find(d.tail);
    int b = find(d.head);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --groups;
    }
  }
  return groups == 1;
}

int DrawingMap::euler_characteristic() const {
  return node_count() - static_cast<int>(darts.size()) / 2 + static_cast<int>(faces.size());
}

DrawingMap build_drawing(const EmbeddedGraph& g, const std::vector<bool>& keep) {
  auto kept = [&](int e) { return keep.empty() || keep[static_cast<std::size_t>(e)]; };
  const SlotTable slots(g);
  DrawingMap map;
  map.vertex_nodes = static_cast<int>(g.vertices.size());

  std::vector<int> used;
  for (const Edge& e : g.edges) {
    if (!kept(e.id)) continue;
    for (const Crossing& c : e.crossings) {
      used.push_back(c.slot);
      used.push_back(slots.partner(c.slot));
    }
  }
  std::sort(used.begin(), used.end());
  // Global slot ids increase counterclockwise, so sorting gives the boundary order.
  map.node_slot.assign(static_cast<std::size_t>(map.vertex_nodes), -1);
  map.node_slot.insert(map.node_slot.end(), used.begin(), used.end());
  const int nodes = static_cast<int>(map.node_slot.size());
  auto node_of_slot = [&](int slot) {
    auto it = std::lower_bound(used.begin(), used.end(), slot);
    return map.vertex_nodes + static_cast<int>(it - used.begin());
  };

  auto add_pair = [&](int a, int b, DartKind kind, DartKind back_kind, int edge, int piece) {
    int id = static_cast<int>(map.darts.size());
    map.darts.push_back({a, b, id + 1, kind, edge, piece, true});
    map.darts.push_back({b, a, id, back_kind, edge, piece, false});
    return id;
  };

  const auto table = half_edge_table(g);
  map.half_edge_dart.assign(table.size(), -1);
  std::vector<int> inward(static_cast<std::size_t>(nodes), -1);
  for (const Edge& e : g.edges) {
    if (!kept(e.id)) continue;
    const int k = static_cast<int>(e.crossings.size());
    int tail = table[static_cast<std::size_t>(e.u)].vertex;
    for (int p = 0; p <= k; ++p) {
      int head = (p < k) ? node_of_slot(e.crossings[static_cast<std::size_t>(p)].slot)
                         : table[static_cast<std::size_t>(e.v)].vertex;
      int fwd = add_pair(tail, head, DartKind::Piece, DartKind::Piece, e.id, p);
      if (p == 0) map.half_edge_dart[static_cast<std::size_t>(e.u)] = fwd;
      if (p == k) map.half_edge_dart[static_cast<std::size_t>(e.v)] = fwd + 1;
      if (p > 0) inward[static_cast<std::size_t>(tail)] = fwd;
      if (p < k) inward[static_cast<std::size_t>(head)] = fwd + 1;
      if (p < k) tail = node_of_slot(slots.partner(e.crossings[static_cast<std::size_t>(p)].slot));
    }
  }

  const int m = static_cast<int>(used.size());
  std::vector<int> next_arc(static_cast<std::size_t>(nodes), -1);
  std::vector<int> prev_arc(static_cast<std::size_t>(nodes), -1);
  for (int j = 0; j < m; ++j) {
    int a = map.vertex_nodes + j;
    int b = map.vertex_nodes + (j + 1) % m;
    int id = add_pair(a, b, DartKind::Next, DartKind::Prev, -1, -1);
    next_arc[static_cast<std::size_t>(a)] = id;
    prev_arc[static_cast<std::size_t>(b)] = id + 1;
  }

  map.rotation.assign(static_cast<std::size_t>(nodes), {});
  for (const Vertex& v : g.vertices) {
    for (int h : v.rotation) {
      int d = map.half_edge_dart[static_cast<std::size_t>(h)];
      if (d >= 0) map.rotation[static_cast<std::size_t>(v.id)].push_back(d);
    }
  }
  // Clockwise at a boundary point: into the polygon, then counterclockwise along the
  // boundary, then clockwise along it.
  for (int n = map.vertex_nodes; n < nodes; ++n) {
    map.rotation[static_cast<std::size_t>(n)] = {inward[static_cast<std::size_t>(n)],
                                                 next_arc[static_cast<std::size_t>(n)],
                                                 prev_arc[static_cast<std::size_t>(n)]};
  }
  map.rotation_pos.assign(map.darts.size(), -1);
  for (const auto& rot : map.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (rot[i] < 0) throw std::logic_error("slot without an incident edge piece");
      map.rotation_pos[static_cast<std::size_t>(rot[i])] = static_cast<int>(i);
    }
  }

  map.face_of.assign(map.darts.size(), -1);
  for (int start = 0; start < static_cast<int>(map.darts.size()); ++start) {
    if (map.face_of[static_cast<std::size_t>(start)] >= 0) continue;
    const int f = static_cast<int>(map.faces.size());
    std::vector<int> cycle;
    bool has_next = false;
    bool has_prev = false;
    int d = start;
    do {
      map.face_of[static_cast<std::size_t>(d)] = f;
      cycle.push_back(d);
      has_next |= map.darts[static_cast<std::size_t>(d)].kind == DartKind::Next;
      has_prev |= map.darts[static_cast<std::size_t>(d)].kind == DartKind::Prev;
      d = map.next_in_face(d);
    } while (d != start);
    map.faces.push_back(std::move(cycle));
    map.face_kind.push_back(has_prev ? FaceKind::Exterior : has_next ? FaceKind::Boundary : FaceKind::Inside);
  }
  return map;
}

int choose_outer_face(const DrawingMap& map, const EmbeddedGraph& g) {
  if (map.faces.empty()) return -1;
  if (g.outer_face) {
    int h = *g.outer_face;
    if (h < 0 || h >= static_cast<int>(map.half_edge_dart.size()) || map.half_edge_dart[static_cast<std::size_t>(h)] < 0) {
      throw std::invalid_argument("outer_face names an unknown half-edge");
    }
    return map.face_of[static_cast<std::size_t>(map.half_edge_dart[static_cast<std::size_t>(h)])];
  }
  int best = 0;
  for (int f = 1; f < static_cast<int>(map.faces.size()); ++f) {
    if (map.faces[static_cast<std::size_t>(f)].size() > map.faces[static_cast<std::size_t>(best)].size()) best = f;
  }
  return best;
}

namespace {

std::vector<int> inside_roots(const EmbeddedGraph& g) {
  const auto table = half_edge_table(g);
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const Edge& e : g.edges) {
    if (e.is_outside()) continue;
    parent[static_cast<std::size_t>(find(table[static_cast<std::size_t>(e.u)].vertex))] = find(table[static_cast<std::size_t>(e.v)].vertex);
  }
  std::vector<int> roots(g.vertices.size());
  for (std::size_t v = 0; v < roots.size(); ++v) roots[v] = find(static_cast<int>(v));
  return roots;
}

}  // namespace

bool inside_connected(const EmbeddedGraph& g) {
  const auto roots = inside_roots(g);
  return std::all_of(roots.begin(), roots.end(), [&roots](int r) { return r == roots.front(); });
}

EmbeddedGraph connect_inside(const EmbeddedGraph& g) {
  EmbeddedGraph out = g;
  while (!inside_connected(out)) {
    const auto roots = inside_roots(out);
    const DrawingMap map = build_drawing(out);
    std::vector<int> half_of(map.darts.size(), -1);
    for (std::size_t h = 0; h < map.half_edge_dart.size(); ++h) {
      if (map.half_edge_dart[h] >= 0) half_of[static_cast<std::size_t>(map.half_edge_dart[h])] = static_cast<int>(h);
    }
    // A corner (vertex, half-edge it follows clockwise) on a face inside the polygon
    // whose vertex lies in another inside component than the face's first corner.
    std::pair<int, int> a{-1, -1};
    std::pair<int, int> b{-1, -1};
    for (std::size_t f = 0; f < map.faces.size() && b.first < 0; ++f) {
      if (map.face_kind[f] == FaceKind::Exterior) continue;
      a = {-1, -1};
      for (int d : map.faces[f]) {
        const Dart& dart = map.darts[static_cast<std::size_t>(d)];
        if (dart.head >= map.vertex_nodes) continue;
        const std::pair<int, int> corner{dart.head, half_of[static_cast<std::size_t>(dart.twin)]};
        if (a.first < 0) {
          a = corner;
        } else if (roots[static_cast<std::size_t>(corner.first)] != roots[static_cast<std::size_t>(a.first)]) {
          b = corner;
          break;
        }
      }
    }
    if (b.first < 0) throw std::invalid_argument("inside components share no face; is the graph connected?");
    const int half = 2 * static_cast<int>(out.edges.size());
    Edge e;
    e.id = static_cast<int>(out.edges.size());
    e.u = half;
    e.v = half + 1;
    e.weight = Weight::number(Rational(0));
    out.edges.push_back(e);
    for (const auto& [corner, h] : {std::pair{a, half}, std::pair{b, half + 1}}) {
      auto& rot = out.vertices[static_cast<std::size_t>(corner.first)].rotation;
      rot.insert(std::find(rot.begin(), rot.end(), corner.second) + 1, h);
    }
  }
  return out;
}

}  // namespace surface_ising
