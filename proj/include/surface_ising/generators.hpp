#ifndef SURFACE_ISING_GENERATORS_HPP
#define SURFACE_ISING_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "surface_ising/embedding.hpp"

namespace surface_ising {

/// m x n square lattice on the torus. Rows grow upward; horizontal edges get wx and
/// vertical edges wy. Rotation at each vertex is N, E, S, W (clockwise).
EmbeddedGraph torus_lattice(int m, int n, const Weight& wx, const Weight& wy);

/// Same lattice on the Klein bottle: a horizontal edge leaving row r on the right
/// comes back on the left at row m-1-r.
EmbeddedGraph klein_lattice(int m, int n, const Weight& wx, const Weight& wy);

/// Hub with m concentric rings of n vertices (n even) on the projective plane. The
/// outer ring vertex k joins vertex k+n/2 through the crosscap. Ring edges get wx,
/// radial and crosscap edges wy.
EmbeddedGraph rp2_wheel(int m, int n, const Weight& wx, const Weight& wy);

/// m x n grid on the sphere with its outer face marked.
EmbeddedGraph planar_grid(int m, int n, const Weight& wx, const Weight& wy);

/// Random straight-line drawing in the disc: vertices at random points, a connected
/// set of non-crossing inside edges, and outside edges that cross one side pair once.
/// Each edge gets its own symbol "x<id>" (or a random small rational when numeric).
struct RandomSpec {
  SurfaceSignature signature;
  int vertices = 4;
  int inside_edges = 5;
  int outside_edges = 3;
  bool numeric_weights = false;
};
EmbeddedGraph random_instance(const RandomSpec& spec, std::mt19937_64& rng);

struct GeneratorSpec {
  std::string family;  // torus_lattice | klein_lattice | rp2_wheel | planar_grid
  int m = 1;
  int n = 1;
  Weight wx = Weight::named("x");
  Weight wy = Weight::named("y");
};
EmbeddedGraph generate(const GeneratorSpec& spec);

}  // namespace surface_ising

#endif  // SURFACE_ISING_GENERATORS_HPP
