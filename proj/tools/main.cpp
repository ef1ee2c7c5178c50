// surface_ising: command-line front end.
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "surface_ising/drawing.hpp"
#include "surface_ising/generators.hpp"
#include "surface_ising/partition.hpp"
#include "surface_ising/report.hpp"
#include "surface_ising/verify.hpp"

using namespace surface_ising;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// "name=value" pairs into a map; a bare number goes to *uniform when allowed.
std::map<std::string, double> parse_bindings(const std::vector<std::string>& items, std::optional<double>* uniform) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (!uniform) throw std::invalid_argument("expected name=value, got '" + item + "'");
      *uniform = std::stod(item);
      continue;
    }
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

struct CommonFlags {
  std::string mode = "exact";
  std::vector<std::string> values;
  int threads = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> indexing_seed;
  int exact_limit = 24;

  void add(CLI::App* app) {
    app->add_option("--mode", mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
    app->add_option("--value", values, "numeric value for a weight symbol, name=v (repeatable)");
    app->add_option("--threads", threads, "worker threads (default: SURFACE_ISING_THREADS or all cores)");
    app->add_option("--seed", seed, "seed for the arbitrary steps of the base orientation");
    app->add_option("--indexing-seed", indexing_seed, "shuffle terminal rows with this seed");
    app->add_option("--exact-limit", exact_limit, "largest terminal graph for exact Pfaffians");
  }

  Options options() const {
    Options o;
    o.mode = parse_mode(mode);
    o.values = parse_bindings(values, nullptr);
    o.threads = threads;
    o.orientation_seed = seed;
    o.indexing_seed = indexing_seed;
    o.exact_limit = exact_limit;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact high-temperature Ising partition functions of graphs drawn on surfaces"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a generated instance as JSON");
  GeneratorSpec spec;
  std::string surface = "orientable";
  int genus = 1;
  RandomSpec rspec;
  std::uint64_t seed = 1;
  std::string wx = "x";
  std::string wy = "y";
  std::string gen_out;
  gen->add_option("--family", spec.family, "torus_lattice | klein_lattice | rp2_wheel | planar_grid | random")->required();
  gen->add_option("-m", spec.m, "rows (or rings)");
  gen->add_option("-n", spec.n, "columns (or spokes)");
  gen->add_option("--wx", wx, "horizontal weight, symbol or rational");
  gen->add_option("--wy", wy, "vertical weight, symbol or rational");
  gen->add_option("--surface", surface, "random: orientable | klein | projective");
  gen->add_option("--genus", genus, "random: genus of the surface word");
  gen->add_option("--vertices", rspec.vertices, "random: vertex count");
  gen->add_option("--inside", rspec.inside_edges, "random: edges inside the polygon");
  gen->add_option("--outside", rspec.outside_edges, "random: edges through the sides");
  gen->add_option("--seed", seed, "random: seed");
  gen->add_flag("--numeric-weights", rspec.numeric_weights, "random: rational weights instead of symbols");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  auto* comp = app.add_subcommand("compute", "evaluate Z_I (or Z_beta with --beta)");
  std::string comp_file;
  std::string method = "practical";
  std::optional<double> beta;
  std::vector<std::string> couplings;
  bool comp_json = false;
  CommonFlags comp_flags;
  comp->add_option("file", comp_file, "instance JSON")->required();
  comp->add_option("--method", method, "practical | general | bruteforce")
      ->check(CLI::IsMember({"practical", "general", "bruteforce"}));
  comp->add_option("--beta", beta, "inverse temperature; prints Z_beta");
  comp->add_option("--coupling", couplings, "J for every symbol, or name=J (repeatable)");
  comp->add_flag("--json", comp_json, "JSON output");
  comp_flags.add(comp);

  auto* pf = app.add_subcommand("pfaffians", "table of the Pfaffians entering the sum");
  std::string pf_file;
  std::string pf_method = "practical";
  bool pf_json = false;
  CommonFlags pf_flags;
  pf->add_option("file", pf_file, "instance JSON")->required();
  pf->add_option("--method", pf_method, "practical (flip vectors) | general (enhancements)")
      ->check(CLI::IsMember({"practical", "general"}));
  pf->add_flag("--json", pf_json, "JSON instead of TSV");
  pf_flags.add(pf);

  auto* ver = app.add_subcommand("verify", "validate, check orientation, sign law and oracle agreement");
  std::string ver_file;
  std::string orientation_in;
  std::string orientation_out;
  bool ver_json = false;
  VerifyLimits limits;
  CommonFlags ver_flags;
  ver->add_option("file", ver_file, "instance JSON")->required();
  ver->add_option("--orientation", orientation_in, "check this orientation file instead of the constructed one");
  ver->add_option("--write-orientation", orientation_out, "write the constructed orientation (connected normalized graphs)");
  ver->add_option("--sign-law-bound", limits.sign_law_terminals, "largest terminal graph for the matching scan");
  ver->add_option("--oracle-bound", limits.oracle_dimension, "largest cycle-space dimension for the oracle");
  ver->add_flag("--json", ver_json, "JSON output");
  ver_flags.add(ver);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      EmbeddedGraph g;
      if (spec.family == "random") {
        rspec.signature = {parse_surface_kind(surface), genus};
        std::mt19937_64 rng(seed);
        g = random_instance(rspec, rng);
      } else {
        spec.wx = Weight::parse(wx);
        spec.wy = Weight::parse(wy);
        g = generate(spec);
      }
      write_output(gen_out, write_graph_json(g));
      return 0;
    }
    if (*comp) {
      const EmbeddedGraph g = load_graph(comp_file);
      const Options opt = comp_flags.options();
      if (beta) {
        std::optional<double> uniform;
        const auto js = parse_bindings(couplings, &uniform);
        const double z = boltzmann(g, *beta, js, uniform, opt);
        if (comp_json) {
          Json j;
          j["schema"] = 1;
          j["beta"] = *beta;
          j["z_beta"] = z;
          std::cout << j.dump(1) << "\n";
        } else {
          std::cout << "beta: " << format_double(*beta) << "\nZ_beta ~ " << format_double(z) << "\n";
        }
        return 0;
      }
      const PartitionResult r = compute(g, parse_method(method), opt);
      std::cout << (comp_json ? to_json(r).dump(1) + "\n" : render_text(r));
      return 0;
    }
    if (*pf) {
      const EmbeddedGraph g = load_graph(pf_file);
      const PartitionResult r = compute(g, parse_method(pf_method), pf_flags.options());
      std::cout << (pf_json ? pfaffian_table_json(r).dump(1) + "\n" : pfaffian_table_tsv(r));
      return 0;
    }
    if (*ver) {
      const EmbeddedGraph g = load_graph(ver_file);
      const Options opt = ver_flags.options();
      std::optional<std::string> text;
      if (!orientation_in.empty()) text = read_file(orientation_in);
      const VerifyReport report = verify_graph(g, text, opt, limits);
      if (!orientation_out.empty()) {
        if (!is_normalized(g) || !is_connected(g) || !inside_connected(g)) {
          throw std::invalid_argument("--write-orientation needs a connected, normalized graph whose inside edges reach every vertex");
        }
        const TerminalGraph gt(g);
        write_output(orientation_out, write_orientation(gt, construct_good(gt, opt.orientation_seed)));
      }
      if (ver_json) {
        Json j;
        j["schema"] = 1;
        j["ok"] = report.ok();
        j["checks"] = Json::array();
        for (const auto& c : report.checks) j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
        std::cout << j.dump(1) << "\n";
      } else {
        for (const auto& c : report.checks) {
          std::cout << c.name << ": " << to_string(c.status) << "\n";
          for (const auto& d : c.details) std::cout << "  " << d << "\n";
        }
      }
      return report.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
