#include "surface_ising/orientation.hpp"

#include <deque>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace surface_ising {

namespace {

template <typename V>
decltype(auto) at(V& v, int i) {
  return v[static_cast<std::size_t>(i)];
}

}  // namespace

int disagreements(const Orientation& k, const FaceCycle& cycle) {
  int n = 0;
  for (const Step& s : cycle.steps) n += (s.along != at(k.forward, s.edge)) ? 1 : 0;
  return n;
}

Orientation construct_good(const TerminalGraph& gt, std::optional<std::uint64_t> seed) {
  const EmbeddedGraph& g = gt.graph();
  Orientation k;
  k.forward.assign(static_cast<std::size_t>(gt.edge_count()), true);
  std::mt19937_64 rng(seed.value_or(0));
  for (const TerminalEdge& e : gt.edges()) {
    if (e.kind == TerminalEdgeKind::Short) {
      at(k.forward, e.id) = false;
    } else if (!at(g.edges, e.id).is_outside()) {
      at(k.forward, e.id) = seed ? (rng() & 1U) != 0 : e.a < e.b;
    }
  }

  // Dual graph: inside faces plus one node for everything else, joined across inside
  // long edges. Flipping a tree edge toggles exactly its two end faces.
  const DrawingMap map = build_drawing(g);
  const std::vector<FaceCycle> faces = inside_face_cycles(gt);
  const int outer = static_cast<int>(faces.size());
  std::vector<int> node_of_face(map.faces.size(), outer);
  for (int i = 0; i < outer; ++i) at(node_of_face, at(faces, i).face) = i;
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(outer + 1));
  for (const Edge& e : g.edges) {
    if (e.is_outside()) continue;
    const int d = map.half_edge_dart[static_cast<std::size_t>(e.u)];
    const int x = at(node_of_face, at(map.face_of, d));
    const int y = at(node_of_face, at(map.face_of, at(map.darts, d).twin));
    if (x == y) continue;
    at(adj, x).emplace_back(y, e.id);
    at(adj, y).emplace_back(x, e.id);
  }
  std::vector<int> parent_edge(static_cast<std::size_t>(outer + 1), -2);
  std::vector<int> order;
  std::deque<int> queue{outer};
  at(parent_edge, outer) = -1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (auto [y, e] : at(adj, x)) {
      if (at(parent_edge, y) != -2) continue;
      at(parent_edge, y) = e;
      queue.push_back(y);
    }
  }
  if (static_cast<int>(order.size()) != outer + 1) throw std::logic_error("dual graph of inside faces is disconnected");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it == outer) continue;
    if (disagreements(k, at(faces, *it)) % 2 == 0) {
      const int e = at(parent_edge, *it);
      at(k.forward, e) = !at(k.forward, e);
    }
  }

  for (const Edge& e : g.edges) {
    if (!e.is_outside()) continue;
    const FaceCycle cycle = outside_face_cycle(gt, e.id);
    int others = 0;
    int visits = 0;
    bool along = true;
    for (const Step& s : cycle.steps) {
      if (s.edge == e.id) {
        along = s.along;
        ++visits;
      } else if (s.along != at(k.forward, s.edge)) {
        ++others;
      }
    }
    if (visits == 1) {
      at(k.forward, e.id) = (others % 2 == 0) ? !along : along;
    } else if ((others + 1) % 2 == 0) {
      // Walked once each way, the edge adds one disagreement whichever way it points.
      throw std::runtime_error("outside face of edge " + std::to_string(e.id) + " passes it twice with even parity");
    }
  }
  return k;
}

std::string GoodnessViolation::describe() const {
  switch (role) {
    case FaceRole::ShortRule:
      return "short edge " + std::to_string(id) + " points from small to big label";
    case FaceRole::Inside:
      return "inside face " + std::to_string(id) + " has an even number of disagreeing edges";
    case FaceRole::Outside:
      return "outside face of edge " + std::to_string(id) + " has an even number of disagreeing edges";
  }
  return "?";
}

std::vector<GoodnessViolation> check_good(const TerminalGraph& gt, const Orientation& k) {
  if (static_cast<int>(k.forward.size()) != gt.edge_count()) throw std::invalid_argument("orientation size mismatch");
  std::vector<GoodnessViolation> out;
  for (const TerminalEdge& e : gt.edges()) {
    if (e.kind == TerminalEdgeKind::Short && at(k.forward, e.id)) out.push_back({FaceRole::ShortRule, e.id});
  }
  const auto faces = inside_face_cycles(gt);
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    if (disagreements(k, at(faces, i)) % 2 == 0) out.push_back({FaceRole::Inside, i});
  }
  for (const Edge& e : gt.graph().edges) {
    if (e.is_outside() && disagreements(k, outside_face_cycle(gt, e.id)) % 2 == 0) out.push_back({FaceRole::Outside, e.id});
  }
  return out;
}

Orientation variant(const TerminalGraph& gt, const Orientation& k0, const Z2Vector& flips) {
  if (flips.dim != gt.graph().b1()) throw DimensionMismatch("flip vector must have dimension b1");
  Orientation k = k0;
  for (int e = 0; e < gt.long_edge_count(); ++e) {
    if (dot(flips, gt.tally(e))) at(k.forward, e) = !at(k.forward, e);
  }
  return k;
}

Orientation variant_for_enhancement(const TerminalGraph& gt, const Orientation& k0, const QuadraticEnhancement& q) {
  const QuadraticEnhancement ref = reference_enhancement(gt.graph().signature);
  Orientation k = k0;
  for (int e = 0; e < gt.long_edge_count(); ++e) {
    if (eval_enhancement(gt.form(), q, gt.edge_class(e)) != eval_enhancement(gt.form(), ref, gt.edge_class(e))) {
      at(k.forward, e) = !at(k.forward, e);
    }
  }
  return k;
}

Orientation variant_for_form(const TerminalGraph& gt, const Orientation& k0, const QuadraticForm& q) {
  const QuadraticForm ref = zero_form(gt.graph().signature);
  Orientation k = k0;
  for (int e = 0; e < gt.long_edge_count(); ++e) {
    if (eval_form(gt.form(), q, gt.edge_class(e)) != eval_form(gt.form(), ref, gt.edge_class(e))) {
      at(k.forward, e) = !at(k.forward, e);
    }
  }
  return k;
}

std::string write_orientation(const TerminalGraph& gt, const Orientation& k) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["edges"] = nlohmann::ordered_json::array();
  for (const TerminalEdge& e : gt.edges()) {
    const bool f = at(k.forward, e.id);
    j["edges"].push_back({{"id", e.id}, {"from", f ? e.a : e.b}, {"to", f ? e.b : e.a}});
  }
  return j.dump(1) + "\n";
}

Orientation read_orientation(const TerminalGraph& gt, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("orientation file: ") + e.what());
  }
  Orientation k;
  k.forward.assign(static_cast<std::size_t>(gt.edge_count()), true);
  std::vector<bool> seen(static_cast<std::size_t>(gt.edge_count()), false);
  for (const auto& entry : j.at("edges")) {
    const int id = entry.at("id").get<int>();
    const int from = entry.at("from").get<int>();
    const int to = entry.at("to").get<int>();
    if (id < 0 || id >= gt.edge_count()) throw std::invalid_argument("orientation names unknown edge " + std::to_string(id));
    const TerminalEdge& e = gt.edge(id);
    if (from == e.a && to == e.b) {
      at(k.forward, id) = true;
    } else if (from == e.b && to == e.a) {
      at(k.forward, id) = false;
    } else {
      throw std::invalid_argument("orientation of edge " + std::to_string(id) + " does not match its endpoints");
    }
    seen[static_cast<std::size_t>(id)] = true;
  }
  for (int id = 0; id < gt.edge_count(); ++id) {
    if (!seen[static_cast<std::size_t>(id)]) throw std::invalid_argument("orientation misses edge " + std::to_string(id));
  }
  return k;
}

}  // namespace surface_ising
