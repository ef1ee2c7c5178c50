#include "surface_ising/generators.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace surface_ising {

namespace {

template <typename V>
decltype(auto) at(V& v, int i) {
  return v[static_cast<std::size_t>(i)];
}

std::vector<int> iota_vec(int from, int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), from);
  return v;
}

EmbeddedGraph square_lattice(int m, int n, const Weight& wx, const Weight& wy, bool klein) {
  if (m < 1 || n < 1) throw std::invalid_argument("lattice dimensions must be at least 1");
  EmbeddedGraph g;
  g.signature = klein ? SurfaceSignature{SurfaceKind::KleinSum, 0} : SurfaceSignature{SurfaceKind::Orientable, 1};
  auto vid = [n](int r, int c) { return r * n + c; };
  const int hcount = m * n;
  std::vector<int> west(static_cast<std::size_t>(m * n));
  std::vector<int> south(static_cast<std::size_t>(m * n));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      const int id = vid(r, c);
      Edge e{id, 2 * id, 2 * id + 1, wx, {}};
      int target = vid(r, c + 1);
      if (c == n - 1) {
        // Leaves through the right side, re-enters on the left.
        e.crossings.push_back({1, n + r});
        target = klein ? vid(m - 1 - r, 0) : vid(r, 0);
      }
      at(west, target) = e.v;
      g.edges.push_back(e);
    }
  }
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      const int id = hcount + vid(r, c);
      Edge e{id, 2 * id, 2 * id + 1, wy, {}};
      int target = vid(r + 1, c);
      if (r == m - 1) {
        // Leaves through the top, re-enters at the bottom.
        e.crossings.push_back({2, n + m + (n - 1 - c)});
        target = vid(0, c);
      }
      at(south, target) = e.v;
      g.edges.push_back(e);
    }
  }
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      const int v = vid(r, c);
      g.vertices.push_back({v, {2 * (hcount + v), 2 * v, at(south, v), at(west, v)}});
    }
  }
  g.perimeter = {iota_vec(0, n), iota_vec(n, m), iota_vec(n + m, n), iota_vec(2 * n + m, m)};
  return g;
}

}  // namespace

EmbeddedGraph torus_lattice(int m, int n, const Weight& wx, const Weight& wy) {
  return square_lattice(m, n, wx, wy, false);
}

EmbeddedGraph klein_lattice(int m, int n, const Weight& wx, const Weight& wy) {
  return square_lattice(m, n, wx, wy, true);
}

EmbeddedGraph rp2_wheel(int m, int n, const Weight& wx, const Weight& wy) {
  if (m < 1 || n < 2 || n % 2 != 0) throw std::invalid_argument("rp2_wheel needs m >= 1 and even n >= 2");
  EmbeddedGraph g;
  g.signature = {SurfaceKind::ProjectiveSum, 0};
  const int half = n / 2;
  auto ring_vertex = [n](int j, int k) { return 1 + j * n + k; };
  auto spoke = [](int k) { return k; };
  auto ring_edge = [n](int j, int k) { return n + j * n + k; };
  auto radial = [n, m](int j, int k) { return n + m * n + j * n + k; };
  auto cap = [n, m](int k) { return n + m * n + (m - 1) * n + k; };
  const int edge_count = n + m * n + (m - 1) * n + half;
  g.edges.resize(static_cast<std::size_t>(edge_count));
  auto put = [&](int id, const Weight& w, std::vector<Crossing> cr = {}) {
    at(g.edges, id) = Edge{id, 2 * id, 2 * id + 1, w, std::move(cr)};
  };
  for (int k = 0; k < n; ++k) put(spoke(k), wy);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < n; ++k) put(ring_edge(j, k), wx);
  }
  for (int j = 0; j + 1 < m; ++j) {
    for (int k = 0; k < n; ++k) put(radial(j, k), wy);
  }
  for (int k = 0; k < half; ++k) put(cap(k), wy, {{0, k}});

  Vertex hub{0, {}};
  hub.rotation.push_back(2 * spoke(0));
  for (int k = n - 1; k >= 1; --k) hub.rotation.push_back(2 * spoke(k));
  g.vertices.push_back(hub);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < n; ++k) {
      int out = 0;
      if (j + 1 < m) {
        out = 2 * radial(j, k);
      } else {
        out = (k < half) ? 2 * cap(k) : 2 * cap(k - half) + 1;
      }
      const int prev = 2 * ring_edge(j, (k + n - 1) % n) + 1;
      const int in = (j == 0) ? 2 * spoke(k) + 1 : 2 * radial(j - 1, k) + 1;
      const int next = 2 * ring_edge(j, k);
      g.vertices.push_back({ring_vertex(j, k), {out, prev, in, next}});
    }
  }
  g.perimeter = {iota_vec(0, half), iota_vec(half, half)};
  return g;
}

EmbeddedGraph planar_grid(int m, int n, const Weight& wx, const Weight& wy) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be at least 1");
  EmbeddedGraph g;
  g.signature = {SurfaceKind::Orientable, 0};
  auto vid = [n](int r, int c) { return r * n + c; };
  std::vector<std::array<int, 4>> halves(static_cast<std::size_t>(m * n), {-1, -1, -1, -1});  // N E S W
  auto add = [&](int a, int b, const Weight& w, int side_a, int side_b) {
    const int id = static_cast<int>(g.edges.size());
    g.edges.push_back({id, 2 * id, 2 * id + 1, w, {}});
    at(halves, a)[static_cast<std::size_t>(side_a)] = 2 * id;
    at(halves, b)[static_cast<std::size_t>(side_b)] = 2 * id + 1;
  };
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c + 1 < n; ++c) add(vid(r, c), vid(r, c + 1), wx, 1, 3);
  }
  for (int r = 0; r + 1 < m; ++r) {
    for (int c = 0; c < n; ++c) add(vid(r, c), vid(r + 1, c), wy, 0, 2);
  }
  for (int v = 0; v < m * n; ++v) {
    Vertex vx{v, {}};
    for (int h : at(halves, v)) {
      if (h >= 0) vx.rotation.push_back(h);
    }
    g.vertices.push_back(vx);
  }
  // Walking the bottom row leftward keeps the unbounded face on the left.
  if (!g.edges.empty()) g.outer_face = 1;
  return g;
}

namespace {

struct Point {
  double x;
  double y;
};

double orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

struct Segment {
  Point a;
  Point b;
};

bool crosses_any(const Segment& s, const std::vector<Segment>& others) {
  return std::any_of(others.begin(), others.end(), [&](const Segment& o) { return proper_cross(s.a, s.b, o.a, o.b); });
}

bool connected_without(int n, const std::vector<std::pair<int, int>>& edges, std::size_t skip) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return at(parent, x) == x ? x : at(parent, x) = find(at(parent, x)); };
  int groups = n;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == skip) continue;
    int a = find(edges[i].first);
    int b = find(edges[i].second);
    if (a != b) {
      at(parent, a) = b;
      --groups;
    }
  }
  return groups == 1;
}

std::optional<EmbeddedGraph> try_random(const RandomSpec& spec, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pi = std::acos(-1.0);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < spec.vertices) {
    Point p{2 * unit(rng) - 1, 2 * unit(rng) - 1};
    if (p.x * p.x + p.y * p.y > 0.75 * 0.75) continue;
    bool close = std::any_of(pts.begin(), pts.end(), [&](const Point& q) { return std::hypot(p.x - q.x, p.y - q.y) < 0.12; });
    if (!close) pts.push_back(p);
  }

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < spec.vertices; ++a) {
    for (int b = a + 1; b < spec.vertices; ++b) pairs.emplace_back(a, b);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<std::pair<int, int>> inside;
  std::vector<Segment> segments;
  for (auto [a, b] : pairs) {
    Segment s{at(pts, a), at(pts, b)};
    if (crosses_any(s, segments)) continue;
    inside.emplace_back(a, b);
    segments.push_back(s);
  }
  // Thin the triangulation while keeping it connected.
  bool removed = true;
  while (static_cast<int>(inside.size()) > spec.inside_edges && removed) {
    removed = false;
    std::vector<std::size_t> order(inside.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i : order) {
      if (connected_without(spec.vertices, inside, i)) {
        inside.erase(inside.begin() + static_cast<std::ptrdiff_t>(i));
        segments.erase(segments.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }

  struct Outside {
    int u;
    int v;
    int exit_side;
    double exit_angle;
    double entry_angle;
  };
  std::vector<Outside> outside;
  const auto word = spec.signature.side_word();
  const int sides = static_cast<int>(word.size());
  if (sides > 0) {
    std::uniform_int_distribution<int> pick_vertex(0, spec.vertices - 1);
    std::uniform_int_distribution<int> pick_pair(0, spec.signature.pair_count() - 1);
    for (int attempt = 0; attempt < 400 && static_cast<int>(outside.size()) < spec.outside_edges; ++attempt) {
      const int pair = pick_pair(rng);
      auto [o1, o2] = spec.signature.occurrences_of(pair);
      if (unit(rng) < 0.5) std::swap(o1, o2);
      const double t = 0.05 + 0.9 * unit(rng);
      const double t2 = spec.signature.pair_twisted(pair) ? t : 1.0 - t;
      const double a1 = 2 * pi * (o1 + t) / sides;
      const double a2 = 2 * pi * (o2 + t2) / sides;
      const int u = pick_vertex(rng);
      const int v = pick_vertex(rng);
      Segment s1{at(pts, u), {std::cos(a1), std::sin(a1)}};
      Segment s2{{std::cos(a2), std::sin(a2)}, at(pts, v)};
      if (crosses_any(s1, segments) || crosses_any(s2, segments) || proper_cross(s1.a, s1.b, s2.a, s2.b)) continue;
      segments.push_back(s1);
      segments.push_back(s2);
      outside.push_back({u, v, o1, a1, a2});
    }
  }

  EmbeddedGraph g;
  g.signature = spec.signature;
  std::vector<std::vector<std::pair<double, int>>> around(static_cast<std::size_t>(spec.vertices));
  auto direction = [&](int from, Point to) { return std::atan2(to.y - at(pts, from).y, to.x - at(pts, from).x); };
  std::uniform_int_distribution<int> pick_num(1, 4);
  auto weight_for = [&](int id) {
    return spec.numeric_weights ? Weight::number(Rational(pick_num(rng), 5)) : Weight::named("x" + std::to_string(id));
  };
  for (auto [a, b] : inside) {
    const int id = static_cast<int>(g.edges.size());
    g.edges.push_back({id, 2 * id, 2 * id + 1, weight_for(id), {}});
    at(around, a).emplace_back(direction(a, at(pts, b)), 2 * id);
    at(around, b).emplace_back(direction(b, at(pts, a)), 2 * id + 1);
  }
  std::vector<std::pair<double, int>> boundary;  // angle -> crossing owner (edge id)
  for (const Outside& o : outside) {
    const int id = static_cast<int>(g.edges.size());
    g.edges.push_back({id, 2 * id, 2 * id + 1, weight_for(id), {{o.exit_side, -1}}});
    at(around, o.u).emplace_back(direction(o.u, {std::cos(o.exit_angle), std::sin(o.exit_angle)}), 2 * id);
    at(around, o.v).emplace_back(direction(o.v, {std::cos(o.entry_angle), std::sin(o.entry_angle)}), 2 * id + 1);
    boundary.emplace_back(o.exit_angle, id);
    boundary.emplace_back(o.entry_angle, -1);
  }
  std::sort(boundary.begin(), boundary.end());
  g.perimeter.assign(static_cast<std::size_t>(sides), {});
  for (int slot = 0; slot < static_cast<int>(boundary.size()); ++slot) {
    const auto& [angle, owner] = at(boundary, slot);
    const int side = std::min(sides - 1, static_cast<int>(angle / (2 * pi) * sides));
    at(g.perimeter, side).push_back(slot);
    if (owner >= 0) at(g.edges, owner).crossings.front().slot = slot;
  }
  for (int v = 0; v < spec.vertices; ++v) {
    auto& list = at(around, v);
    // Clockwise means decreasing angle.
    std::sort(list.begin(), list.end(), [](const auto& p, const auto& q) { return p.first > q.first; });
    Vertex vx{v, {}};
    for (const auto& entry : list) vx.rotation.push_back(entry.second);
    g.vertices.push_back(vx);
  }
  if (!validate(g).empty()) return std::nullopt;
  return g;
}

}  // namespace

EmbeddedGraph random_instance(const RandomSpec& spec, std::mt19937_64& rng) {
  if (spec.vertices < 1) throw std::invalid_argument("random instance needs at least one vertex");
  for (int attempt = 0; attempt < 100; ++attempt) {
    if (auto g = try_random(spec, rng)) return *g;
  }
  throw std::runtime_error("could not draw a valid random instance");
}

EmbeddedGraph generate(const GeneratorSpec& spec) {
  if (spec.family == "torus_lattice") return torus_lattice(spec.m, spec.n, spec.wx, spec.wy);
  if (spec.family == "klein_lattice") return klein_lattice(spec.m, spec.n, spec.wx, spec.wy);
  if (spec.family == "rp2_wheel") return rp2_wheel(spec.m, spec.n, spec.wx, spec.wy);
  if (spec.family == "planar_grid") return planar_grid(spec.m, spec.n, spec.wx, spec.wy);
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

}  // namespace surface_ising
