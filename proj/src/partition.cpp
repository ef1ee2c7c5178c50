#include "surface_ising/partition.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include <boost/dynamic_bitset.hpp>

#include "surface_ising/drawing.hpp"

namespace surface_ising {

namespace {

template <typename V>
decltype(auto) at(V& v, int i) {
  return v[static_cast<std::size_t>(i)];
}

constexpr double kResidualTolerance = 1e-8;

// Runs fn(0..count-1) on a small worker pool; the first exception is rethrown.
template <typename Fn>
void parallel_for(int count, int threads, Fn fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct Prepared {
  EmbeddedGraph graph;
  TerminalGraph gt;
  Orientation k0;
  std::vector<int> indexing;
  std::vector<double> weights;
  bool twisted;

  Prepared(const EmbeddedGraph& g, const Options& opt, int index)
      : graph(g), gt(g), k0(construct_good(gt, opt.orientation_seed)), twisted(g.signature.kind != SurfaceKind::Orientable) {
    const auto bad = check_good(gt, k0);
    if (!bad.empty()) throw std::logic_error("constructed orientation is not good: " + bad.front().describe());
    if (opt.indexing_seed) {
      indexing.resize(static_cast<std::size_t>(gt.terminal_count()));
      std::iota(indexing.begin(), indexing.end(), 0);
      std::mt19937_64 rng(*opt.indexing_seed + static_cast<std::uint64_t>(index));
      std::shuffle(indexing.begin(), indexing.end(), rng);
    }
    if (opt.mode == Mode::Numeric) weights = numeric_weights(g, opt.values);
  }
};

std::vector<std::unique_ptr<Prepared>> prepare(const EmbeddedGraph& g, const Options& opt) {
  require_valid(g);
  std::vector<std::unique_ptr<Prepared>> out;
  int index = 0;
  for (const Component& c : split_components(normalize(g))) {
    out.push_back(std::make_unique<Prepared>(c.graph.edges.empty() ? c.graph : connect_inside(c.graph), opt, index++));
  }
  return out;
}

struct PfValue {
  EdgePoly exact;
  std::complex<double> numeric;
};

PfValue evaluate_pf(const Prepared& p, const Orientation& k, const Options& opt) {
  PfValue v;
  if (opt.mode == Mode::Exact) {
    v.exact = pfaffian_exact(build_exact_adjacency(p.gt, k, p.twisted, p.indexing), opt.exact_limit);
  } else {
    v.numeric = pfaffian(build_numeric_adjacency(p.gt, k, p.twisted, p.weights, p.indexing));
  }
  return v;
}

// Evaluates the Pfaffian of every orientation once, in parallel; out[i] belongs to ks[i].
std::vector<const PfValue*> evaluate_all(const Prepared& p, const std::vector<Orientation>& ks, const Options& opt,
                                         std::map<std::vector<bool>, PfValue>& cache) {
  std::vector<std::vector<bool>> todo;
  for (const Orientation& k : ks) {
    if (!cache.count(k.forward) && std::find(todo.begin(), todo.end(), k.forward) == todo.end()) todo.push_back(k.forward);
  }
  std::vector<PfValue> results(todo.size());
  parallel_for(static_cast<int>(todo.size()), resolve_threads(opt.threads),
               [&](int i) { at(results, i) = evaluate_pf(p, Orientation{at(todo, i)}, opt); });
  for (std::size_t i = 0; i < todo.size(); ++i) cache.emplace(todo[i], std::move(results[i]));
  std::vector<const PfValue*> out;
  for (const Orientation& k : ks) out.push_back(&cache.at(k.forward));
  return out;
}

template <typename C>
void add_scaled(EdgePolyT<C>& acc, const EdgePoly& p, const C& factor) {
  for (const auto& [m, c] : p) {
    C term = factor * c.template cast<typename std::decay_t<decltype(factor.c[0])>>();
    auto [it, inserted] = acc.emplace(m, term);
    if (!inserted) it->second += term;
  }
}

void drop_zeros(ExactEdgePoly& p) {
  std::erase_if(p, [](const auto& kv) { return kv.second.is_zero(); });
}

// Divides by the constant term and checks every coefficient came out rational.
Polynomial normalize_sum(ExactEdgePoly s, const EmbeddedGraph& g, int b1, bool check_norm) {
  drop_zeros(s);
  auto it = s.find(0);
  if (it == s.end()) throw PhaseError("phased Pfaffian sum has no constant term");
  const ExactCoeff c = it->second;
  if (check_norm && norm_squared_gaussian(c) != Rational(BigInt(1) << b1)) {
    throw PhaseError("constant term " + to_string(c) + " of the phased sum does not have norm 2^b1");
  }
  const ExactCoeff inv = inverse(c);
  for (auto& [m, coeff] : s) {
    coeff = coeff * inv;
    if (!coeff.is_rational()) throw PhaseError("coefficient " + to_string(coeff) + " is not real after normalization");
  }
  return substitute(s, g);
}

std::string coeff_label(const GaussInt& c) { return to_string(c.cast<Rational>()); }

std::string values_label(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += std::to_string(x);
  return s;
}

PfaffianRecord make_record(const Prepared& p, int comp, std::string label, const GaussInt& phase, const PfValue& v,
                           const Options& opt) {
  PfaffianRecord r;
  r.component = comp;
  r.label = std::move(label);
  r.phase = coeff_label(phase);
  if (opt.mode == Mode::Exact) {
    r.exact = substitute(to_exact(v.exact), p.graph);
  } else {
    r.numeric = v.numeric;
  }
  return r;
}

double try_evaluate(const Polynomial& p, const std::map<std::string, double>& values) {
  std::map<std::string, std::complex<double>> bound;
  for (const auto& [k, v] : values) bound[k] = v;
  try {
    return p.evaluate(bound).real();
  } catch (const std::exception&) {
    return std::nan("");
  }
}

// Rotates z onto the positive real axis by the nearest multiple of pi/4.
std::pair<double, double> unphase(std::complex<double> z) {
  const double step = std::atan(1.0);
  const double r = std::round(std::arg(z) / step);
  const std::complex<double> w = z * std::polar(1.0, -r * step);
  return {w.real(), std::abs(w.imag())};
}

void finish_numeric(PartitionResult& res, double value, double residual) {
  if (!(value > 0.0) || residual > kResidualTolerance * std::abs(value)) {
    throw PhaseError("numeric sum has residual " + std::to_string(residual) + " against value " + std::to_string(value));
  }
  res.numeric *= value;
  res.residual = std::max(res.residual, residual / std::abs(value));
}

std::vector<Z2Vector> all_vectors(int dim) {
  std::vector<Z2Vector> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << dim); ++b) out.emplace_back(b, dim);
  return out;
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "numeric"; }

std::string to_string(Method m) {
  switch (m) {
    case Method::Practical:
      return "practical";
    case Method::General:
      return "general";
    case Method::Bruteforce:
      return "bruteforce";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::Exact;
  if (text == "numeric") return Mode::Numeric;
  throw std::invalid_argument("unknown mode '" + text + "' (exact|numeric)");
}

Method parse_method(const std::string& text) {
  if (text == "practical") return Method::Practical;
  if (text == "general") return Method::General;
  if (text == "bruteforce") return Method::Bruteforce;
  throw std::invalid_argument("unknown method '" + text + "' (practical|general|bruteforce)");
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SURFACE_ISING_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

std::vector<double> numeric_weights(const EmbeddedGraph& g, const std::map<std::string, double>& values) {
  std::vector<double> out;
  for (const Edge& e : g.edges) {
    if (e.weight.is_symbolic()) {
      auto it = values.find(e.weight.symbol);
      if (it == values.end()) throw std::invalid_argument("no numeric value given for weight '" + e.weight.symbol + "'");
      out.push_back(it->second);
    } else {
      out.push_back(to_double(e.weight.value));
    }
  }
  return out;
}

int epsilon0(const TerminalGraph& gt, const Orientation& k0, const std::vector<int>& indexing) {
  const std::vector<int> d0 = gt.standard_dimer();
  const int t = t_in_parity(gt, d0) ^ t_out_parity(gt, d0);
  return matching_sign(gt, k0, d0, indexing) * (t ? -1 : 1);
}

PartitionResult z_practical(const EmbeddedGraph& g, const Options& opt) {
  PartitionResult res;
  res.method = Method::Practical;
  res.mode = opt.mode;
  res.exact = Polynomial::constant(ExactCoeff(Rational(1)));
  res.numeric = 1.0;
  const auto parts = prepare(g, opt);
  const int b1 = g.b1();
  const IntersectionForm form(g.signature);
  const QuadraticEnhancement ref = reference_enhancement(g.signature);
  const std::vector<Z2Vector> flips = all_vectors(b1);
  for (int ci = 0; ci < static_cast<int>(parts.size()); ++ci) {
    const Prepared& p = *at(parts, ci);
    std::vector<Orientation> ks;
    for (const Z2Vector& f : flips) ks.push_back(variant(p.gt, p.k0, f));
    std::map<std::vector<bool>, PfValue> cache;
    const auto pfs = evaluate_all(p, ks, opt, cache);
    ExactEdgePoly sum;
    std::complex<double> nsum = 0.0;
    for (std::size_t i = 0; i < flips.size(); ++i) {
      const GaussInt phase = GaussInt::i_pow(eval_enhancement(form, ref, flips[i]));
      res.pfaffians.push_back(make_record(p, ci, flips[i].to_string(), phase, *pfs[i], opt));
      if (opt.mode == Mode::Exact) {
        add_scaled(sum, pfs[i]->exact, phase.cast<Rational>());
      } else {
        nsum += phase.to_complex() * pfs[i]->numeric;
      }
    }
    if (opt.mode == Mode::Exact) {
      res.exact = res.exact * normalize_sum(sum, p.graph, b1, true);
    } else {
      const auto [value, residual] = unphase(nsum);
      const double scale = std::pow(2.0, -0.5 * b1);
      finish_numeric(res, value * scale, residual * scale);
    }
  }
  if (opt.mode == Mode::Exact) res.numeric = try_evaluate(res.exact, opt.values);
  return res;
}

PartitionResult z_general(const EmbeddedGraph& g, const Options& opt) {
  PartitionResult res;
  res.method = Method::General;
  res.mode = opt.mode;
  res.exact = Polynomial::constant(ExactCoeff(Rational(1)));
  res.numeric = 1.0;
  const auto parts = prepare(g, opt);
  const int b1 = g.b1();
  const IntersectionForm form(g.signature);
  const bool orientable = g.signature.kind == SurfaceKind::Orientable;
  std::vector<std::string> labels;
  std::vector<GaussInt> phases;
  std::vector<QuadraticForm> forms;
  std::vector<QuadraticEnhancement> enhancements;
  if (orientable) {
    forms = enumerate_forms(g.signature);
    for (const auto& q : forms) {
      labels.push_back(values_label(q.basis_values));
      phases.push_back(GaussInt(arf(form, q) ? -1 : 1));
    }
  } else {
    enhancements = enumerate_enhancements(g.signature);
    for (const auto& q : enhancements) {
      labels.push_back(values_label(q.basis_values));
      phases.push_back(GaussInt::zeta_pow(-brown(form, q)));
    }
  }
  // eps0 (sqrt 2)^b1 / 2^b1 = eps0 / 2^(b1/2)
  const ExactCoeff scale = divide(sqrt2_pow(b1).cast<Rational>(), Rational(BigInt(1) << b1));
  for (int ci = 0; ci < static_cast<int>(parts.size()); ++ci) {
    const Prepared& p = *at(parts, ci);
    std::vector<Orientation> ks;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      ks.push_back(orientable ? variant_for_form(p.gt, p.k0, forms[i]) : variant_for_enhancement(p.gt, p.k0, enhancements[i]));
    }
    std::map<std::vector<bool>, PfValue> cache;
    const auto pfs = evaluate_all(p, ks, opt, cache);
    const int eps0 = epsilon0(p.gt, p.k0, p.indexing);
    res.epsilon0.push_back(eps0);
    ExactEdgePoly sum;
    std::complex<double> nsum = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      res.pfaffians.push_back(make_record(p, ci, labels[i], phases[i], *pfs[i], opt));
      if (opt.mode == Mode::Exact) {
        add_scaled(sum, pfs[i]->exact, phases[i].cast<Rational>() * scale * ExactCoeff(Rational(eps0)));
      } else {
        nsum += phases[i].to_complex() * pfs[i]->numeric;
      }
    }
    if (opt.mode == Mode::Exact) {
      drop_zeros(sum);
      auto it = sum.find(0);
      if (it == sum.end() || it->second != ExactCoeff(Rational(1))) {
        throw PhaseError("general formula gives constant term " + (it == sum.end() ? std::string("0") : to_string(it->second)));
      }
      for (const auto& [m, c] : sum) {
        if (!c.is_rational()) throw PhaseError("general formula gives non-real coefficient " + to_string(c));
      }
      res.exact = res.exact * substitute(sum, p.graph);
    } else {
      const std::complex<double> z = nsum * static_cast<double>(eps0) * std::pow(2.0, -0.5 * b1);
      finish_numeric(res, z.real(), std::abs(z.imag()));
    }
  }
  if (opt.mode == Mode::Exact) res.numeric = try_evaluate(res.exact, opt.values);
  return res;
}

namespace {

struct CycleSpace {
  std::vector<boost::dynamic_bitset<>> basis;
  std::vector<std::uint64_t> classes;
};

CycleSpace cycle_space(const EmbeddedGraph& g, bool with_classes) {
  const int nv = static_cast<int>(g.vertices.size());
  const auto table = half_edge_table(g);
  std::vector<int> parent(static_cast<std::size_t>(nv));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (at(parent, x) != x) x = at(parent, x) = at(parent, at(parent, x));
    return x;
  };
  // Spanning forest adjacency, then tree paths by BFS parents.
  std::vector<std::vector<std::pair<int, int>>> tree(static_cast<std::size_t>(nv));
  std::vector<int> non_tree;
  for (const Edge& e : g.edges) {
    const int a = edge_tail(g, table, e.id);
    const int b = edge_head(g, table, e.id);
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) {
      non_tree.push_back(e.id);
    } else {
      at(parent, ra) = rb;
      at(tree, a).emplace_back(b, e.id);
      at(tree, b).emplace_back(a, e.id);
    }
  }
  std::vector<int> up_vertex(static_cast<std::size_t>(nv), -1);
  std::vector<int> up_edge(static_cast<std::size_t>(nv), -1);
  std::vector<int> depth(static_cast<std::size_t>(nv), -1);
  for (int root = 0; root < nv; ++root) {
    if (at(depth, root) >= 0) continue;
    at(depth, root) = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (auto [y, e] : at(tree, x)) {
        if (at(depth, y) >= 0) continue;
        at(depth, y) = at(depth, x) + 1;
        at(up_vertex, y) = x;
        at(up_edge, y) = e;
        stack.push_back(y);
      }
    }
  }
  const IntersectionForm form(g.signature);
  std::vector<std::uint64_t> edge_classes;
  if (with_classes) {
    for (const Edge& e : g.edges) edge_classes.push_back(edge_class(g, form, e.id).bits);
  }
  CycleSpace cs;
  for (int e : non_tree) {
    boost::dynamic_bitset<> mask(g.edges.size());
    mask.set(static_cast<std::size_t>(e));
    int a = edge_tail(g, table, e);
    int b = edge_head(g, table, e);
    while (a != b) {
      if (at(depth, a) < at(depth, b)) std::swap(a, b);
      mask.flip(static_cast<std::size_t>(at(up_edge, a)));
      a = at(up_vertex, a);
    }
    std::uint64_t cls = 0;
    if (with_classes) {
      for (std::size_t i = mask.find_first(); i != boost::dynamic_bitset<>::npos; i = mask.find_next(i)) cls ^= edge_classes[i];
    }
    cs.basis.push_back(std::move(mask));
    cs.classes.push_back(cls);
  }
  return cs;
}

std::map<std::uint64_t, Polynomial> enumerate_even(const EmbeddedGraph& g, bool with_classes) {
  require_valid(g);
  const CycleSpace cs = cycle_space(g, with_classes);
  const int dim = static_cast<int>(cs.basis.size());
  if (dim > 24) {
    throw SizeLimitExceeded("cycle space of dimension " + std::to_string(dim) + " exceeds the brute-force bound 24");
  }
  // Symbols get exponent slots; numeric weights multiply the coefficient.
  std::vector<std::string> names = symbols(g);
  std::vector<int> slot;
  bool all_one = true;
  for (const Edge& e : g.edges) {
    if (e.weight.is_symbolic()) {
      slot.push_back(static_cast<int>(std::lower_bound(names.begin(), names.end(), e.weight.symbol) - names.begin()));
    } else {
      slot.push_back(-1);
      if (e.weight.value != 1) all_one = false;
    }
  }
  std::map<std::pair<std::uint64_t, std::vector<int>>, Rational> acc;
  boost::dynamic_bitset<> current(g.edges.size());
  std::vector<int> exps(names.size(), 0);
  std::uint64_t cls = 0;
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step > 0) {
      const int k = std::countr_zero(step);
      const auto& c = at(cs.basis, k);
      for (std::size_t i = c.find_first(); i != boost::dynamic_bitset<>::npos; i = c.find_next(i)) {
        const int s = slot[i];
        if (s >= 0) exps[static_cast<std::size_t>(s)] += current[i] ? -1 : 1;
        current.flip(i);
      }
      cls ^= at(cs.classes, k);
    }
    Rational coeff(1);
    if (!all_one) {
      for (std::size_t i = current.find_first(); i != boost::dynamic_bitset<>::npos; i = current.find_next(i)) {
        if (slot[i] < 0) coeff *= g.edges[i].weight.value;
      }
    }
    auto [it, inserted] = acc.emplace(std::make_pair(cls, exps), coeff);
    if (!inserted) it->second += coeff;
  }
  std::map<std::uint64_t, Polynomial> out;
  for (const auto& [key, coeff] : acc) {
    Monomial m;
    for (std::size_t s = 0; s < names.size(); ++s) {
      if (key.second[s] > 0) m.powers.emplace_back(names[s], key.second[s]);
    }
    out[key.first].add_term(m, ExactCoeff(coeff));
  }
  return out;
}

}  // namespace

int cycle_space_dimension(const EmbeddedGraph& g) { return static_cast<int>(cycle_space(g, false).basis.size()); }

PartitionResult z_bruteforce(const EmbeddedGraph& g, const Options& opt) {
  PartitionResult res;
  res.method = Method::Bruteforce;
  res.mode = opt.mode;
  for (const auto& [cls, p] : enumerate_even(g, false)) res.exact += p;
  res.numeric = try_evaluate(res.exact, opt.values);
  return res;
}

PartitionResult compute(const EmbeddedGraph& g, Method method, const Options& opt) {
  switch (method) {
    case Method::Practical:
      return z_practical(g, opt);
    case Method::General:
      return z_general(g, opt);
    case Method::Bruteforce:
      return z_bruteforce(g, opt);
  }
  throw std::invalid_argument("unknown method");
}

std::map<std::uint64_t, Polynomial> z_per_class(const EmbeddedGraph& g) { return enumerate_even(g, true); }

Polynomial z_q_oracle(const EmbeddedGraph& g, const QuadraticEnhancement& q) {
  const IntersectionForm form(g.signature);
  Polynomial out;
  for (const auto& [bits, p] : z_per_class(g)) {
    out += GaussInt::i_pow(eval_enhancement(form, q, Z2Vector(bits, g.b1()))).cast<Rational>() * p;
  }
  return out;
}

Polynomial z_q_oracle(const EmbeddedGraph& g, const QuadraticForm& q) {
  const IntersectionForm form(g.signature);
  Polynomial out;
  for (const auto& [bits, p] : z_per_class(g)) {
    out += ExactCoeff(Rational(eval_form(form, q, Z2Vector(bits, g.b1())) ? -1 : 1)) * p;
  }
  return out;
}

namespace {

void require_single_component(const std::vector<std::unique_ptr<Prepared>>& parts) {
  if (parts.size() != 1) throw std::invalid_argument("z_q needs a connected graph with at least one edge");
}

}  // namespace

Polynomial z_q_pfaffian(const EmbeddedGraph& g, const QuadraticEnhancement& q, const Options& opt) {
  Options o = opt;
  o.mode = Mode::Exact;
  const auto parts = prepare(g, o);
  require_single_component(parts);
  const Prepared& p = *parts.front();
  const IntersectionForm& form = p.gt.form();
  const std::vector<int> d0 = p.gt.standard_dimer();
  const Z2Vector cls = matching_class(p.gt, d0);
  // q + 2 [D0]^*: shift every basis value by twice its pairing with [D0].
  QuadraticEnhancement shifted = q;
  const Z2Vector dual = dual_flip_vector(form, cls);
  for (int i = 0; i < form.dim(); ++i) at(shifted.basis_values, i) = (at(q.basis_values, i) + 2 * (dual[i] ? 1 : 0)) % 4;
  const Orientation k = variant_for_enhancement(p.gt, p.k0, shifted);
  const EdgePoly pf = pfaffian_exact(build_exact_adjacency(p.gt, k, p.twisted, p.indexing), o.exact_limit);
  ExactEdgePoly scaled;
  add_scaled(scaled, pf, ExactCoeff(Rational(epsilon0(p.gt, p.k0, p.indexing))) *
                             GaussInt::i_pow(eval_enhancement(form, q, cls)).cast<Rational>());
  drop_zeros(scaled);
  return substitute(scaled, p.graph);
}

Polynomial z_q_pfaffian(const EmbeddedGraph& g, const QuadraticForm& q, const Options& opt) {
  Options o = opt;
  o.mode = Mode::Exact;
  const auto parts = prepare(g, o);
  require_single_component(parts);
  const Prepared& p = *parts.front();
  const IntersectionForm& form = p.gt.form();
  const std::vector<int> d0 = p.gt.standard_dimer();
  const Z2Vector cls = matching_class(p.gt, d0);
  QuadraticForm shifted = q;
  const Z2Vector dual = dual_flip_vector(form, cls);
  for (int i = 0; i < form.dim(); ++i) at(shifted.basis_values, i) = at(q.basis_values, i) ^ (dual[i] ? 1 : 0);
  const Orientation k = variant_for_form(p.gt, p.k0, shifted);
  const EdgePoly pf = pfaffian_exact(build_exact_adjacency(p.gt, k, false, p.indexing), o.exact_limit);
  const int sign = epsilon0(p.gt, p.k0, p.indexing) * (eval_form(form, q, cls) ? -1 : 1);
  ExactEdgePoly scaled;
  add_scaled(scaled, pf, ExactCoeff(Rational(sign)));
  drop_zeros(scaled);
  return substitute(scaled, p.graph);
}

namespace {

// Per-edge (x_e, cosh(beta J_e)); numeric weights stand for x_e directly.
std::vector<std::pair<double, double>> thermal_weights(const EmbeddedGraph& g, double beta,
                                                       const std::map<std::string, double>& couplings,
                                                       std::optional<double> default_coupling) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be finite and non-negative");
  std::vector<std::pair<double, double>> out;
  for (const Edge& e : g.edges) {
    if (e.weight.is_symbolic()) {
      auto it = couplings.find(e.weight.symbol);
      if (it == couplings.end() && !default_coupling) {
        throw std::invalid_argument("no coupling given for weight '" + e.weight.symbol + "'");
      }
      const double j = it == couplings.end() ? *default_coupling : it->second;
      if (!(j > 0.0) || !std::isfinite(j)) throw std::invalid_argument("couplings must be positive and finite");
      out.emplace_back(std::tanh(beta * j), std::cosh(beta * j));
    } else {
      const double x = to_double(e.weight.value);
      if (!(x < 1.0)) throw std::invalid_argument("numeric weight " + to_string(e.weight.value) + " is not below 1, so it is no tanh");
      out.emplace_back(x, 1.0 / std::sqrt(1.0 - x * x));
    }
  }
  return out;
}

}  // namespace

double boltzmann(const EmbeddedGraph& g, double beta, const std::map<std::string, double>& couplings,
                 std::optional<double> default_coupling, const Options& opt) {
  const auto w = thermal_weights(g, beta, couplings, default_coupling);
  double prefactor = std::pow(2.0, static_cast<double>(g.vertices.size()));
  for (const auto& [x, c] : w) prefactor *= c;
  // Substitute numeric x_e edge by edge through renamed symbols.
  EmbeddedGraph h = g;
  Options o = opt;
  o.mode = Mode::Numeric;
  o.values.clear();
  for (Edge& e : h.edges) {
    const std::string name = "e" + std::to_string(e.id);
    e.weight = Weight::named(name);
    o.values[name] = at(w, e.id).first;
  }
  const double z = h.edges.empty() ? 1.0 : z_practical(h, o).numeric;
  const double out = prefactor * z;
  if (!std::isfinite(out)) throw std::overflow_error("Boltzmann partition function overflows double range");
  return out;
}

double boltzmann_direct(const EmbeddedGraph& g, double beta, const std::map<std::string, double>& couplings,
                        std::optional<double> default_coupling) {
  const auto w = thermal_weights(g, beta, couplings, default_coupling);
  const int nv = static_cast<int>(g.vertices.size());
  if (nv > 24) throw SizeLimitExceeded("direct spin sum limited to 24 vertices");
  const auto table = half_edge_table(g);
  std::vector<std::pair<int, int>> ends;
  std::vector<double> beta_j;
  for (const Edge& e : g.edges) {
    ends.emplace_back(edge_tail(g, table, e.id), edge_head(g, table, e.id));
    beta_j.push_back(std::atanh(at(w, e.id).first));
  }
  double total = 0.0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << nv); ++s) {
    double energy = 0.0;
    for (std::size_t i = 0; i < ends.size(); ++i) {
      const bool same = ((s >> ends[i].first) & 1U) == ((s >> ends[i].second) & 1U);
      energy += same ? beta_j[i] : -beta_j[i];
    }
    total += std::exp(energy);
  }
  return total;
}

}  // namespace surface_ising
