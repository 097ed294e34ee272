#include "vform/lagrange.hpp"

#include <algorithm>
#include <stdexcept>

namespace vform {

int simplex_space_dim(int dim, int degree) {
  long long n = 1;
  for (int i = 1; i <= dim; ++i) n = n * (degree + i) / i;
  return static_cast<int>(n);
}

int max_supported_degree(int dim) { return dim == 2 ? 5 : 4; }

std::vector<std::array<int, 2>> simplex_edges(int dim) {
  std::vector<std::array<int, 2>> edges;
  for (int a = 0; a <= dim; ++a)
    for (int b = a + 1; b <= dim; ++b) edges.push_back({a, b});
  std::sort(edges.begin(), edges.end(), std::greater<>());
  return edges;
}

std::vector<std::array<int, 3>> simplex_faces() {
  std::vector<std::array<int, 3>> faces = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  return faces;
}

namespace {

// Reference vertices: origin then unit coordinate vectors.
std::array<Rational, 3> reference_vertex(int v) {
  std::array<Rational, 3> p = {Rational(0), Rational(0), Rational(0)};
  if (v > 0) p[v - 1] = Rational(1);
  return p;
}

// Node at the lattice point with the given per-vertex weights (sum = k).
std::array<Rational, 3> lattice_point(int dim, int degree, std::span<const int> vertex_weights) {
  std::array<Rational, 3> p = {Rational(0), Rational(0), Rational(0)};
  for (int v = 0; v <= dim; ++v) {
    if (vertex_weights[v] == 0) continue;
    auto vert = reference_vertex(v);
    Rational w(vertex_weights[v], degree);
    for (int a = 0; a < dim; ++a) p[a] += w * vert[a];
  }
  return p;
}

struct NodeSet {
  std::vector<std::array<Rational, 3>> nodes;
  std::vector<NodeEntity> entities;
};

NodeSet enumerate_nodes(int dim, int k) {
  NodeSet out;
  auto push = [&](NodeEntity e, std::span<const int> all_weights) {
    out.nodes.push_back(lattice_point(dim, k, all_weights));
    out.entities.push_back(e);
  };

  std::vector<int> w(static_cast<size_t>(dim) + 1, 0);

  // Vertices.
  for (int v = 0; v <= dim; ++v) {
    std::fill(w.begin(), w.end(), 0);
    w[v] = k;
    NodeEntity e{NodeEntity::Kind::Vertex, {v, -1, -1}, {k, 0, 0}};
    push(e, w);
  }

  // Edge interiors, running from the lower to the higher local vertex.
  for (const auto& edge : simplex_edges(dim)) {
    for (int t = 1; t <= k - 1; ++t) {
      std::fill(w.begin(), w.end(), 0);
      w[edge[0]] = k - t;
      w[edge[1]] = t;
      NodeEntity e{NodeEntity::Kind::Edge, {edge[0], edge[1], -1}, {k - t, t, 0}};
      push(e, w);
    }
  }

  // Face interiors (tetrahedra only), lexicographic in the first two weights.
  if (dim == 3) {
    for (const auto& face : simplex_faces()) {
      for (int a = 1; a <= k - 2; ++a)
        for (int b = 1; b <= k - 1 - a; ++b) {
          int c = k - a - b;
          std::fill(w.begin(), w.end(), 0);
          w[face[0]] = a;
          w[face[1]] = b;
          w[face[2]] = c;
          NodeEntity e{NodeEntity::Kind::Face, face, {a, b, c}};
          push(e, w);
        }
    }
  }

  // Cell interior: every vertex weight positive; lexicographic in the
  // coordinate weights (vertices 1..d).
  if (dim == 2) {
    for (int m1 = 1; m1 <= k - 2; ++m1)
      for (int m2 = 1; m2 <= k - 1 - m1; ++m2) {
        w = {k - m1 - m2, m1, m2};
        NodeEntity e{NodeEntity::Kind::Interior, {-1, -1, -1}, {m1, m2, 0}};
        push(e, w);
      }
  } else {
    for (int m1 = 1; m1 <= k - 3; ++m1)
      for (int m2 = 1; m2 <= k - 2 - m1; ++m2)
        for (int m3 = 1; m3 <= k - 1 - m1 - m2; ++m3) {
          w = {k - m1 - m2 - m3, m1, m2, m3};
          NodeEntity e{NodeEntity::Kind::Interior, {-1, -1, -1}, {m1, m2, m3}};
          push(e, w);
        }
  }
  return out;
}

std::vector<Exponents> monomial_list(int dim, int k) {
  std::vector<Exponents> monos;
  if (dim == 2) {
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k - a; ++b) monos.push_back({a, b, 0});
  } else {
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k - a; ++b)
        for (int c = 0; c <= k - a - b; ++c) monos.push_back({a, b, c});
  }
  return monos;
}

Rational eval_monomial(const Exponents& m, const std::array<Rational, 3>& p, int dim) {
  Rational v(1);
  for (int a = 0; a < dim; ++a)
    for (int e = 0; e < m[a]; ++e) v *= p[a];
  return v;
}

// Solve V·C = I exactly over the rationals. Pivot: first row with a nonzero
// entry in the current column.
std::vector<std::vector<Rational>> solve_identity(std::vector<std::vector<Rational>> v) {
  const int n = static_cast<int>(v.size());
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) c[i][i] = Rational(1);

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!v[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::runtime_error("lagrange_basis: singular interpolation system");
    std::swap(v[col], v[pivot]);
    std::swap(c[col], c[pivot]);
    Rational inv = Rational(1) / v[col][col];
    for (int j = 0; j < n; ++j) {
      v[col][j] *= inv;
      c[col][j] *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || v[r][col].is_zero()) continue;
      Rational f = v[r][col];
      for (int j = 0; j < n; ++j) {
        v[r][j] -= f * v[col][j];
        c[r][j] -= f * c[col][j];
      }
    }
  }
  return c;
}

} // namespace

LagrangeBasis lagrange_basis(int dim, int degree) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("lagrange_basis: dim must be 2 or 3");
  if (degree < 1 || degree > max_supported_degree(dim))
    throw std::invalid_argument("lagrange_basis: unsupported degree");

  LagrangeBasis basis;
  basis.dim = dim;
  basis.degree = degree;

  auto node_set = enumerate_nodes(dim, degree);
  basis.nodes = std::move(node_set.nodes);
  basis.entities = std::move(node_set.entities);

  const auto monos = monomial_list(dim, degree);
  const int n = static_cast<int>(monos.size());
  if (n != static_cast<int>(basis.nodes.size()))
    throw std::runtime_error("lagrange_basis: node/monomial count mismatch");

  std::vector<std::vector<Rational>> vm(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) vm[i][j] = eval_monomial(monos[j], basis.nodes[i], dim);

  // V·C = I, so column i of C holds the coefficients of basis function i.
  auto coeffs = solve_identity(std::move(vm));
  basis.functions.reserve(n);
  for (int i = 0; i < n; ++i) {
    Polynomial f(dim);
    for (int j = 0; j < n; ++j) f.add_term(monos[j], coeffs[j][i]);
    basis.functions.push_back(std::move(f));
  }
  return basis;
}

} // namespace vform
