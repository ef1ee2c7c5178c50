#ifndef SURFACE_ISING_PARTITION_HPP
#define SURFACE_ISING_PARTITION_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surface_ising/embedding.hpp"
#include "surface_ising/homology.hpp"
#include "surface_ising/orientation.hpp"
#include "surface_ising/pfaffian.hpp"
#include "surface_ising/polynomial.hpp"
#include "surface_ising/terminal.hpp"

namespace surface_ising {

enum class Mode { Exact, Numeric };
enum class Method { Practical, General, Bruteforce };

std::string to_string(Mode m);
std::string to_string(Method m);
Mode parse_mode(const std::string& text);
Method parse_method(const std::string& text);

struct Options {
  Mode mode = Mode::Exact;
  /// Values for symbolic weights in numeric mode.
  std::map<std::string, double> values;
  /// Seed for the arbitrary inside long-edge directions of the base orientation.
  std::optional<std::uint64_t> orientation_seed;
  /// Shuffles the terminal rows with this seed (numeric consistency checks).
  std::optional<std::uint64_t> indexing_seed;
  /// 0 means SURFACE_ISING_THREADS, else the hardware concurrency.
  int threads = 0;
  /// Largest terminal graph handled by the exact Pfaffian.
  int exact_limit = 24;
};

/// One Pfaffian of a sum: the label names the flip vector or the enhancement.
struct PfaffianRecord {
  int component = 0;
  std::string label;
  std::string phase;  // coefficient the Pfaffian enters the sum with
  std::optional<Polynomial> exact;
  std::complex<double> numeric;
};

struct PartitionResult {
  Method method = Method::Practical;
  Mode mode = Mode::Exact;
  Polynomial exact;
  double numeric = 0.0;
  /// Imaginary part left after removing the expected phase, numeric mode.
  double residual = 0.0;
  std::vector<PfaffianRecord> pfaffians;
  /// Matching-sign constant per component (general method).
  std::vector<int> epsilon0;
};

class PhaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signed phased sum of the 2^b1 variant Pfaffians, normalized by its constant term.
PartitionResult z_practical(const EmbeddedGraph& g, const Options& opt = {});
/// Sum over quadratic forms (orientable) or enhancements with Arf or Brown phases.
PartitionResult z_general(const EmbeddedGraph& g, const Options& opt = {});
/// Sum over the cycle space; always exact, bounded by cycle-space dimension 24.
PartitionResult z_bruteforce(const EmbeddedGraph& g, const Options& opt = {});
PartitionResult compute(const EmbeddedGraph& g, Method method, const Options& opt = {});

/// Even subgraphs grouped by homology class (key: class bits).
std::map<std::uint64_t, Polynomial> z_per_class(const EmbeddedGraph& g);
/// Sum_alpha i^q(alpha) Z_alpha from the class table.
Polynomial z_q_oracle(const EmbeddedGraph& g, const QuadraticEnhancement& q);
/// Sum_alpha (-1)^q(alpha) Z_alpha.
Polynomial z_q_oracle(const EmbeddedGraph& g, const QuadraticForm& q);
/// The same quantities as one Pfaffian of a connected normalized graph.
Polynomial z_q_pfaffian(const EmbeddedGraph& g, const QuadraticEnhancement& q, const Options& opt = {});
Polynomial z_q_pfaffian(const EmbeddedGraph& g, const QuadraticForm& q, const Options& opt = {});

/// eps^{K0}(D0) (-1)^{t(D0)} for a connected normalized graph.
int epsilon0(const TerminalGraph& gt, const Orientation& k0, const std::vector<int>& indexing = {});

/// Spin partition function sum_sigma exp(beta sum_e J_e s_u s_v). Symbolic weights take
/// J from couplings (or default_coupling); a numeric weight x is used as tanh(beta J) itself.
double boltzmann(const EmbeddedGraph& g, double beta, const std::map<std::string, double>& couplings,
                 std::optional<double> default_coupling, const Options& opt = {});
/// Direct sum over the 2^|V| spin states, |V| <= 24.
double boltzmann_direct(const EmbeddedGraph& g, double beta, const std::map<std::string, double>& couplings,
                        std::optional<double> default_coupling);

/// Numeric x_e per edge: rationals converted, symbols looked up.
std::vector<double> numeric_weights(const EmbeddedGraph& g, const std::map<std::string, double>& values);

int resolve_threads(int requested);

/// |E| - |V| + number of connected components.
int cycle_space_dimension(const EmbeddedGraph& g);

}  // namespace surface_ising

#endif  // SURFACE_ISING_PARTITION_HPP
