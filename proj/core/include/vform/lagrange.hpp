#pragma once

#include "vform/polynomial.hpp"

#include <array>
#include <vector>

namespace vform {

/// Where a Lagrange node sits on the reference simplex. Carries the local
/// vertices spanning the entity and the node's lattice weights with respect
/// to them (weights over all d+1 vertices sum to the degree).
struct NodeEntity {
  enum class Kind { Vertex, Edge, Face, Interior };
  Kind kind;
  std::array<int, 3> verts{-1, -1, -1};   // local vertex ids, ascending
  std::array<int, 3> weights{0, 0, 0};    // lattice weights for those vertices
};

/// Lagrange basis of given degree on the unit d-simplex. Nodes are the
/// principal lattice points (coordinates i/k); functions carry exact
/// rational coefficients and satisfy functions[i](nodes[j]) = δ_ij exactly.
///
/// Node order: vertices 0..d first (origin, then unit vectors), then for
/// each edge the k-1 interior nodes running from the lower to the higher
/// local vertex, then (3D) per-face interior nodes, then cell-interior
/// nodes. Edges and faces are listed in descending lexicographic order of
/// their sorted vertex tuples, which makes "entity i opposite vertex i"
/// hold for triangles and tetrahedra.
struct LagrangeBasis {
  int dim = 0;
  int degree = 0;
  std::vector<std::array<Rational, 3>> nodes;
  std::vector<Polynomial> functions;
  std::vector<NodeEntity> entities;

  int size() const { return static_cast<int>(functions.size()); }
};

/// C(degree + dim, dim), the dimension of P_k on a d-simplex.
int simplex_space_dim(int dim, int degree);

/// Highest supported degree per spatial dimension (5 in 2D, 4 in 3D).
int max_supported_degree(int dim);

/// Local edges of the d-simplex in basis order (sorted pairs, descending lex).
std::vector<std::array<int, 2>> simplex_edges(int dim);
/// Local faces of the tetrahedron in basis order (sorted triples, descending lex).
std::vector<std::array<int, 3>> simplex_faces();

LagrangeBasis lagrange_basis(int dim, int degree);

} // namespace vform
