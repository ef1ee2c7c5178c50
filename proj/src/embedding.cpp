#include "surface_ising/embedding.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "surface_ising/drawing.hpp"

namespace surface_ising {

using Json = nlohmann::ordered_json;

namespace {

template <typename V>
decltype(auto) at(V& v, int i) {
  return v[static_cast<std::size_t>(i)];
}

bool valid_symbol(const std::string& s) {
  if (s.empty() || s == "i" || s == "z") return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

std::string Weight::to_string() const { return is_symbolic() ? symbol : surface_ising::to_string(value); }

Weight Weight::parse(const std::string& text) {
  if (looks_like_rational(text)) return number(parse_rational(text));
  if (!valid_symbol(text)) {
    throw std::invalid_argument("weight '" + text + "' is neither a rational nor a symbol name ('i' and 'z' are reserved)");
  }
  return named(text);
}

std::vector<HalfEdgeInfo> half_edge_table(const EmbeddedGraph& g) {
  std::vector<HalfEdgeInfo> table(2 * g.edges.size());
  auto in_range = [&](int h) { return h >= 0 && h < static_cast<int>(table.size()); };
  for (const Edge& e : g.edges) {
    if (in_range(e.u)) {
      at(table, e.u).edge = e.id;
      at(table, e.u).end = 0;
    }
    if (in_range(e.v)) {
      at(table, e.v).edge = e.id;
      at(table, e.v).end = 1;
    }
  }
  for (const Vertex& v : g.vertices) {
    for (int p = 0; p < static_cast<int>(v.rotation.size()); ++p) {
      int h = at(v.rotation, p);
      if (!in_range(h)) continue;
      at(table, h).vertex = v.id;
      at(table, h).position = p;
    }
  }
  return table;
}

int edge_tail(const EmbeddedGraph& g, const std::vector<HalfEdgeInfo>& table, int e) {
  return at(table, at(g.edges, e).u).vertex;
}

int edge_head(const EmbeddedGraph& g, const std::vector<HalfEdgeInfo>& table, int e) {
  return at(table, at(g.edges, e).v).vertex;
}

SlotTable::SlotTable(const EmbeddedGraph& g) : sig_(g.signature), perimeter_(g.perimeter), word_(g.signature.side_word()) {
  for (int s = 0; s < static_cast<int>(perimeter_.size()); ++s) {
    for (int i = 0; i < static_cast<int>(at(perimeter_, s).size()); ++i) {
      where_.push_back({at(at(perimeter_, s), i), {s, i}});
      ordered_.push_back(at(at(perimeter_, s), i));
    }
  }
  std::sort(where_.begin(), where_.end());
  std::sort(ordered_.begin(), ordered_.end());
}

const std::pair<int, std::pair<int, int>>* SlotTable::find(int slot) const {
  auto it = std::lower_bound(where_.begin(), where_.end(), std::make_pair(slot, std::make_pair(-1, -1)));
  if (it == where_.end() || it->first != slot) return nullptr;
  return &*it;
}

bool SlotTable::contains(int slot) const { return find(slot) != nullptr; }

int SlotTable::side_of(int slot) const {
  auto* w = find(slot);
  if (!w) throw std::out_of_range("unknown slot " + std::to_string(slot));
  return w->second.first;
}

int SlotTable::index_on_side(int slot) const {
  auto* w = find(slot);
  if (!w) throw std::out_of_range("unknown slot " + std::to_string(slot));
  return w->second.second;
}

int SlotTable::partner(int slot) const {
  const int side = side_of(slot);
  const int index = index_on_side(slot);
  const SideOccurrence occ = at(word_, side);
  auto [first, second] = sig_.occurrences_of(occ.pair);
  const int other = (side == first) ? second : first;
  const auto& list = at(perimeter_, other);
  const int k = static_cast<int>(list.size());
  if (k != static_cast<int>(at(perimeter_, side).size())) throw std::logic_error("slot counts differ on a side pair");
  // x ... x^-1 reverses the order of points, x ... x preserves it.
  return sig_.pair_twisted(occ.pair) ? at(list, index) : at(list, k - 1 - index);
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::SideWordMismatch:
      return "SideWordMismatch";
    case ViolationKind::VertexIdMismatch:
      return "VertexIdMismatch";
    case ViolationKind::EdgeIdMismatch:
      return "EdgeIdMismatch";
    case ViolationKind::UnknownHalfEdge:
      return "UnknownHalfEdge";
    case ViolationKind::MissingHalfEdge:
      return "MissingHalfEdge";
    case ViolationKind::DuplicateHalfEdge:
      return "DuplicateHalfEdge";
    case ViolationKind::NonPositiveWeight:
      return "NonPositiveWeight";
    case ViolationKind::UnknownSide:
      return "UnknownSide";
    case ViolationKind::SlotNotOnSide:
      return "SlotNotOnSide";
    case ViolationKind::SlotPairingMismatch:
      return "SlotPairingMismatch";
    case ViolationKind::SlotOrder:
      return "SlotOrder";
    case ViolationKind::SlotUsage:
      return "SlotUsage";
    case ViolationKind::NonPlanarDrawing:
      return "NonPlanarDrawing";
    case ViolationKind::BadOuterFace:
      return "BadOuterFace";
  }
  return "?";
}

std::vector<Violation> validate(const EmbeddedGraph& g) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind k, std::string detail) { out.push_back({k, std::move(detail)}); };

  const auto word = g.signature.side_word();
  if (g.signature.genus < 0) report(ViolationKind::SideWordMismatch, "negative genus");
  if (g.perimeter.size() != word.size()) {
    report(ViolationKind::SideWordMismatch, "perimeter has " + std::to_string(g.perimeter.size()) + " sides, word has " +
                                                std::to_string(word.size()));
  }
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
    if (at(g.vertices, i).id != i) report(ViolationKind::VertexIdMismatch, "vertex at index " + std::to_string(i));
  }
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (at(g.edges, i).id != i) report(ViolationKind::EdgeIdMismatch, "edge at index " + std::to_string(i));
  }
  if (!out.empty()) return out;

  const int halves = 2 * static_cast<int>(g.edges.size());
  std::vector<int> edge_uses(static_cast<std::size_t>(halves), 0);
  std::vector<int> rotation_uses(static_cast<std::size_t>(halves), 0);
  for (const Edge& e : g.edges) {
    for (int h : {e.u, e.v}) {
      if (h < 0 || h >= halves) {
        report(ViolationKind::UnknownHalfEdge, "edge " + std::to_string(e.id) + " half-edge " + std::to_string(h));
      } else if (++at(edge_uses, h) == 2) {
        report(ViolationKind::DuplicateHalfEdge, "half-edge " + std::to_string(h) + " on two edge ends");
      }
    }
    if (!e.weight.is_symbolic() && e.weight.value <= 0) {
      report(ViolationKind::NonPositiveWeight, "edge " + std::to_string(e.id) + " weight " + e.weight.to_string());
    }
  }
  for (const Vertex& v : g.vertices) {
    for (int h : v.rotation) {
      if (h < 0 || h >= halves) {
        report(ViolationKind::UnknownHalfEdge, "vertex " + std::to_string(v.id) + " half-edge " + std::to_string(h));
      } else if (++at(rotation_uses, h) == 2) {
        report(ViolationKind::DuplicateHalfEdge, "half-edge " + std::to_string(h) + " in two rotation entries");
      }
    }
  }
  for (int h = 0; h < halves; ++h) {
    if (at(rotation_uses, h) == 0) report(ViolationKind::MissingHalfEdge, "half-edge " + std::to_string(h) + " in no rotation");
    if (at(edge_uses, h) == 0) report(ViolationKind::MissingHalfEdge, "half-edge " + std::to_string(h) + " on no edge");
  }
  if (!out.empty()) return out;

  int last = -1;
  bool order_ok = true;
  for (int s = 0; s < static_cast<int>(g.perimeter.size()); ++s) {
    for (int slot : at(g.perimeter, s)) {
      if (slot <= last) {
        report(ViolationKind::SlotOrder, "slot " + std::to_string(slot) + " on side " + std::to_string(s));
        order_ok = false;
      }
      last = std::max(last, slot);
    }
  }
  for (int pair = 0; pair < g.signature.pair_count(); ++pair) {
    auto [a, b] = g.signature.occurrences_of(pair);
    if (at(g.perimeter, a).size() != at(g.perimeter, b).size()) {
      report(ViolationKind::SlotPairingMismatch, "side pair " + g.signature.pair_name(pair) + ": " +
                                                     std::to_string(at(g.perimeter, a).size()) + " vs " +
                                                     std::to_string(at(g.perimeter, b).size()) + " slots");
      order_ok = false;
    }
  }
  if (!order_ok) return out;

  const SlotTable slots(g);
  std::map<int, int> slot_uses;
  for (int slot : slots.ordered()) slot_uses[slot] = 0;
  for (const Edge& e : g.edges) {
    for (const Crossing& c : e.crossings) {
      const std::string where = "edge " + std::to_string(e.id) + " crossing side " + std::to_string(c.side);
      if (c.side < 0 || c.side >= static_cast<int>(word.size())) {
        report(ViolationKind::UnknownSide, where);
        continue;
      }
      if (!slots.contains(c.slot) || slots.side_of(c.slot) != c.side) {
        report(ViolationKind::SlotNotOnSide, where + " slot " + std::to_string(c.slot));
        continue;
      }
      ++slot_uses[c.slot];
      ++slot_uses[slots.partner(c.slot)];
    }
  }
  if (!out.empty()) return out;
  for (const auto& [slot, uses] : slot_uses) {
    if (uses != 1) report(ViolationKind::SlotUsage, "slot " + std::to_string(slot) + " used " + std::to_string(uses) + " times");
  }
  if (!out.empty()) return out;

  bool outer_seen = false;
  for (const Component& comp : split_components(g)) {
    const DrawingMap map = build_drawing(comp.graph);
    if (!map.connected() || map.euler_characteristic() != 2) {
      report(ViolationKind::NonPlanarDrawing, "component with vertex " + std::to_string(comp.vertex_ids.front()) +
                                                  " has Euler characteristic " + std::to_string(map.euler_characteristic()));
    }
    if (comp.graph.outer_face) outer_seen = true;
  }
  if (g.outer_face && (!outer_seen || *g.outer_face < 0 || *g.outer_face >= halves)) {
    report(ViolationKind::BadOuterFace, "half-edge " + std::to_string(*g.outer_face));
  }
  return out;
}

void require_valid(const EmbeddedGraph& g) {
  auto violations = validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid embedded graph:";
  for (const auto& v : violations) msg += "\n  " + to_string(v.kind) + ": " + v.detail;
  throw std::invalid_argument(msg);
}

bool is_normalized(const EmbeddedGraph& g) {
  return std::all_of(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.crossings.size() <= 1; });
}

EmbeddedGraph normalize(const EmbeddedGraph& g) {
  if (is_normalized(g)) return g;
  EmbeddedGraph out = g;
  int next_half = 2 * static_cast<int>(g.edges.size());
  for (const Edge& original : g.edges) {
    const int k = static_cast<int>(original.crossings.size());
    if (k < 2) continue;
    // Chain u -> w_1 -> ... -> w_{k-1} -> v, one crossing per link.
    std::vector<int> w_in(static_cast<std::size_t>(k - 1));
    std::vector<int> w_out(static_cast<std::size_t>(k - 1));
    for (int j = 0; j < k - 1; ++j) {
      at(w_in, j) = next_half++;
      at(w_out, j) = next_half++;
      out.vertices.push_back({static_cast<int>(out.vertices.size()), {at(w_in, j), at(w_out, j)}});
    }
    Edge& first = at(out.edges, original.id);
    first.v = at(w_in, 0);
    first.crossings = {at(original.crossings, 0)};
    for (int j = 1; j < k; ++j) {
      Edge link;
      link.id = static_cast<int>(out.edges.size());
      link.u = at(w_out, j - 1);
      link.v = (j == k - 1) ? original.v : at(w_in, j);
      link.weight = Weight::number(Rational(1));
      link.crossings = {at(original.crossings, j)};
      out.edges.push_back(link);
    }
  }
  // Half-edge ids must stay dense in 0..2|E|-1; renumber in edge order.
  std::vector<int> relabel(static_cast<std::size_t>(next_half), -1);
  for (Edge& e : out.edges) {
    at(relabel, e.u) = 2 * e.id;
    at(relabel, e.v) = 2 * e.id + 1;
    e.u = 2 * e.id;
    e.v = 2 * e.id + 1;
  }
  for (Vertex& v : out.vertices) {
    for (int& h : v.rotation) h = at(relabel, h);
  }
  if (out.outer_face) out.outer_face = at(relabel, *out.outer_face);
  return out;
}

Z2Vector crossing_vector(const EmbeddedGraph& g, int e) {
  if (e < 0 || e >= static_cast<int>(g.edges.size())) throw std::out_of_range("unknown edge id " + std::to_string(e));
  const auto word = g.signature.side_word();
  Z2Vector t = Z2Vector::zero(g.b1());
  for (const Crossing& c : at(g.edges, e).crossings) t.bits ^= std::uint64_t{1} << at(word, c.side).pair;
  return t;
}

int omega_edge(const EmbeddedGraph& g, int e) {
  const Z2Vector t = crossing_vector(g, e);
  int w = 0;
  for (int p = 0; p < g.b1(); ++p) {
    if (g.signature.pair_twisted(p) && t[p]) w ^= 1;
  }
  return w;
}

Z2Vector edge_class(const EmbeddedGraph& g, const IntersectionForm& form, int e) { return form.solve(crossing_vector(g, e)); }

std::vector<Component> split_components(const EmbeddedGraph& g) {
  const auto table = half_edge_table(g);
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges) {
    at(incident, edge_tail(g, table, e.id)).push_back(e.id);
    at(incident, edge_head(g, table, e.id)).push_back(e.id);
  }
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  std::vector<Component> out;
  for (int root = 0; root < n; ++root) {
    if (at(comp_of, root) >= 0 || at(incident, root).empty()) continue;
    const int c = static_cast<int>(out.size());
    Component comp;
    std::vector<int> stack{root};
    at(comp_of, root) = c;
    std::set<int> edge_set;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.vertex_ids.push_back(v);
      for (int e : at(incident, v)) {
        edge_set.insert(e);
        for (int w : {edge_tail(g, table, e), edge_head(g, table, e)}) {
          if (at(comp_of, w) < 0) {
            at(comp_of, w) = c;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(comp.vertex_ids.begin(), comp.vertex_ids.end());
    comp.edge_ids.assign(edge_set.begin(), edge_set.end());

    std::map<int, int> local_vertex;
    for (int i = 0; i < static_cast<int>(comp.vertex_ids.size()); ++i) local_vertex[at(comp.vertex_ids, i)] = i;
    std::map<int, int> local_half;
    std::set<int> slots_used;
    const SlotTable slots(g);
    EmbeddedGraph& sub = comp.graph;
    sub.signature = g.signature;
    for (int i = 0; i < static_cast<int>(comp.edge_ids.size()); ++i) {
      Edge e = at(g.edges, at(comp.edge_ids, i));
      local_half[e.u] = 2 * i;
      local_half[e.v] = 2 * i + 1;
      e.id = i;
      e.u = 2 * i;
      e.v = 2 * i + 1;
      for (const Crossing& cr : e.crossings) {
        slots_used.insert(cr.slot);
        slots_used.insert(slots.partner(cr.slot));
      }
      sub.edges.push_back(std::move(e));
    }
    for (int i = 0; i < static_cast<int>(comp.vertex_ids.size()); ++i) {
      Vertex v{i, {}};
      for (int h : at(g.vertices, at(comp.vertex_ids, i)).rotation) v.rotation.push_back(local_half.at(h));
      sub.vertices.push_back(std::move(v));
    }
    for (const auto& side : g.perimeter) {
      std::vector<int> kept;
      for (int slot : side) {
        if (slots_used.count(slot)) kept.push_back(slot);
      }
      sub.perimeter.push_back(std::move(kept));
    }
    if (g.outer_face && local_half.count(*g.outer_face)) sub.outer_face = local_half.at(*g.outer_face);
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const EmbeddedGraph& g) {
  auto comps = split_components(g);
  std::size_t covered = comps.empty() ? 0 : comps.front().vertex_ids.size();
  return comps.size() <= 1 && covered == g.vertices.size();
}

std::vector<std::string> symbols(const EmbeddedGraph& g) {
  std::set<std::string> names;
  for (const Edge& e : g.edges) {
    if (e.weight.is_symbolic()) names.insert(e.weight.symbol);
  }
  return {names.begin(), names.end()};
}

namespace {

std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

template <typename T>
T field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(where + "." + key + ": " + e.what());
  }
}

}  // namespace

EmbeddedGraph read_graph_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("JSON syntax error at " + locate(text, e.byte) + ": " + e.what());
  }
  EmbeddedGraph g;
  const int schema = field<int>(j, "schema", "graph");
  if (schema != 1) throw std::invalid_argument("unsupported schema version " + std::to_string(schema));
  const Json& surface = j.contains("surface") ? j.at("surface") : Json();
  g.signature.kind = parse_surface_kind(field<std::string>(surface, "kind", "surface"));
  g.signature.genus = field<int>(surface, "genus", "surface");
  const Json vertices = j.contains("vertices") ? j.at("vertices") : Json::array();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    g.vertices.push_back({field<int>(vertices[i], "id", where), field<std::vector<int>>(vertices[i], "rotation", where)});
  }
  const Json edges = j.contains("edges") ? j.at("edges") : Json::array();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    Edge e;
    e.id = field<int>(edges[i], "id", where);
    e.u = field<int>(edges[i], "u", where);
    e.v = field<int>(edges[i], "v", where);
    e.weight = Weight::parse(field<std::string>(edges[i], "weight", where));
    if (edges[i].contains("crossings")) {
      const Json& cs = edges[i].at("crossings");
      for (std::size_t k = 0; k < cs.size(); ++k) {
        const std::string cw = where + ".crossings[" + std::to_string(k) + "]";
        e.crossings.push_back({field<int>(cs[k], "side", cw), field<int>(cs[k], "slot", cw)});
      }
    }
    g.edges.push_back(std::move(e));
  }
  g.perimeter = j.contains("perimeter") ? field<std::vector<std::vector<int>>>(j, "perimeter", "graph")
                                        : std::vector<std::vector<int>>(g.signature.side_word().size());
  if (j.contains("outer_face") && !j.at("outer_face").is_null()) g.outer_face = field<int>(j, "outer_face", "graph");
  return g;
}

std::string write_graph_json(const EmbeddedGraph& g) {
  Json j;
  j["schema"] = 1;
  j["surface"] = {{"kind", to_string(g.signature.kind)}, {"genus", g.signature.genus}};
  j["vertices"] = Json::array();
  for (const Vertex& v : g.vertices) j["vertices"].push_back({{"id", v.id}, {"rotation", v.rotation}});
  j["edges"] = Json::array();
  for (const Edge& e : g.edges) {
    Json ej{{"id", e.id}, {"u", e.u}, {"v", e.v}, {"weight", e.weight.to_string()}, {"crossings", Json::array()}};
    for (const Crossing& c : e.crossings) ej["crossings"].push_back({{"side", c.side}, {"slot", c.slot}});
    j["edges"].push_back(std::move(ej));
  }
  j["perimeter"] = g.perimeter;
  if (g.outer_face) j["outer_face"] = *g.outer_face;
  return j.dump(1) + "\n";
}

EmbeddedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return read_graph_json(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void save_graph(const EmbeddedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << write_graph_json(g);
}

}  // namespace surface_ising
