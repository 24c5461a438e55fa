#include "reeb_orbit/torus_pl.hpp"

#include <string>

namespace reeb_orbit {

TorusComplex TorusComplex::grid(int n, int m) {
  if (n < 3 || m < 3)
    throw DimensionError("grid must be at least 3x3, got " + std::to_string(n) +
                         "x" + std::to_string(m));
  TorusComplex c;
  c.n = n;
  c.m = m;
  return c;
}

int TorusComplex::edge_head(int e) const {
  auto [i, j] = vertex_ij(edge_tail(e));
  switch (edge_family(e)) {
    case EdgeFamily::Right:
      return vertex_id(i + 1, j);
    case EdgeFamily::Up:
      return vertex_id(i, j + 1);
    case EdgeFamily::Diag:
      return vertex_id(i + 1, j + 1);
  }
  return -1;
}

std::array<int, 3> TorusComplex::triangle_vertices(int t) const {
  int cell = t / 2;
  int i = cell % n, j = cell / n;
  if (t % 2 == 0)
    return {vertex_id(i, j), vertex_id(i + 1, j), vertex_id(i + 1, j + 1)};
  return {vertex_id(i, j), vertex_id(i + 1, j + 1), vertex_id(i, j + 1)};
}

std::array<OrientedEdge, 3> TorusComplex::triangle_boundary(int t) const {
  int cell = t / 2;
  int i = cell % n, j = cell / n;
  int a = vertex_id(i, j);
  if (t % 2 == 0) {
    int b = vertex_id(i + 1, j);
    return {OrientedEdge{edge_id(a, EdgeFamily::Right), true},
            OrientedEdge{edge_id(b, EdgeFamily::Up), true},
            OrientedEdge{edge_id(a, EdgeFamily::Diag), false}};
  }
  int d = vertex_id(i, j + 1);
  return {OrientedEdge{edge_id(a, EdgeFamily::Diag), true},
          OrientedEdge{edge_id(d, EdgeFamily::Right), false},
          OrientedEdge{edge_id(a, EdgeFamily::Up), false}};
}

std::array<int, 2> TorusComplex::edge_triangles(int e) const {
  auto [i, j] = vertex_ij(edge_tail(e));
  int cell = j * n + i;
  switch (edge_family(e)) {
    case EdgeFamily::Right:
      return {2 * cell, 2 * (vertex_id(i, j - 1)) + 1};
    case EdgeFamily::Up:
      return {2 * cell + 1, 2 * (vertex_id(i - 1, j))};
    case EdgeFamily::Diag:
      return {2 * cell, 2 * cell + 1};
  }
  return {-1, -1};
}

std::array<int, 6> TorusComplex::link(int v) const {
  auto [i, j] = vertex_ij(v);
  return {vertex_id(i + 1, j),     vertex_id(i + 1, j + 1),
          vertex_id(i, j + 1),     vertex_id(i - 1, j),
          vertex_id(i - 1, j - 1), vertex_id(i, j - 1)};
}

std::array<OrientedEdge, 6> TorusComplex::link_edges(int v) const {
  auto [i, j] = vertex_ij(v);
  int left = vertex_id(i - 1, j);
  int antidiag = vertex_id(i - 1, j - 1);
  int down = vertex_id(i, j - 1);
  return {OrientedEdge{edge_id(v, EdgeFamily::Right), true},
          OrientedEdge{edge_id(v, EdgeFamily::Diag), true},
          OrientedEdge{edge_id(v, EdgeFamily::Up), true},
          OrientedEdge{edge_id(left, EdgeFamily::Right), false},
          OrientedEdge{edge_id(antidiag, EdgeFamily::Diag), false},
          OrientedEdge{edge_id(down, EdgeFamily::Up), false}};
}

int TorusComplex::corner_index(int t, int v) const {
  auto vs = triangle_vertices(t);
  for (int k = 0; k < 3; ++k)
    if (vs[k] == v) return k;
  throw InvariantError("vertex " + std::to_string(v) + " not in triangle " +
                       std::to_string(t));
}

std::array<Rat, 6> CircleFunction::link_lifts(int v) const {
  auto edges = complex.link_edges(v);
  std::array<Rat, 6> out;
  for (int k = 0; k < 6; ++k) out[k] = lift(edges[k]);
  return out;
}

namespace {

const char* family_name(EdgeFamily f) {
  switch (f) {
    case EdgeFamily::Right:
      return "right";
    case EdgeFamily::Up:
      return "up";
    case EdgeFamily::Diag:
      return "diag";
  }
  return "?";
}

}  // namespace

CircleFunction build_function(const TorusComplex& complex, long a, long b,
                              const std::vector<std::vector<Rat>>& perturbation) {
  const int n = complex.n, m = complex.m;
  if (static_cast<int>(perturbation.size()) != m)
    throw DimensionError("perturbation must have " + std::to_string(m) +
                         " rows, got " + std::to_string(perturbation.size()));
  for (const auto& row : perturbation)
    if (static_cast<int>(row.size()) != n)
      throw DimensionError("perturbation rows must have " + std::to_string(n) +
                           " entries");

  // Explicit lift over the fundamental domain.
  std::vector<Rat> lift(complex.vertex_count());
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      lift[complex.vertex_id(i, j)] =
          Rat(a * i, n) + Rat(b * j, m) + perturbation[j][i];

  CircleFunction f;
  f.complex = complex;
  f.theta.resize(complex.vertex_count());
  for (int v = 0; v < complex.vertex_count(); ++v) f.theta[v] = rat_frac(lift[v]);

  f.delta.resize(complex.edge_count());
  for (int v = 0; v < complex.vertex_count(); ++v) {
    auto [i, j] = complex.vertex_ij(v);
    bool wrap_i = i == n - 1, wrap_j = j == m - 1;
    auto fill = [&](EdgeFamily fam, int head, bool add_a, bool add_b) {
      Rat d = lift[head] - lift[v];
      if (add_a) d += a;
      if (add_b) d += b;
      int e = complex.edge_id(v, fam);
      if (d == 0)
        throw FlatEdgeError(v, static_cast<int>(fam),
                            "flat " + std::string(family_name(fam)) +
                                " edge at vertex (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      f.delta[e] = d;
    };
    fill(EdgeFamily::Right, complex.vertex_id(i + 1, j), wrap_i, false);
    fill(EdgeFamily::Up, complex.vertex_id(i, j + 1), false, wrap_j);
    fill(EdgeFamily::Diag, complex.vertex_id(i + 1, j + 1), wrap_i, wrap_j);
  }
  return f;
}

std::pair<long, long> cohomology_class(const CircleFunction& f) {
  const TorusComplex& c = f.complex;
  Rat row(0), col(0);
  for (int i = 0; i < c.n; ++i)
    row += f.delta[c.edge_id(c.vertex_id(i, 0), EdgeFamily::Right)];
  for (int j = 0; j < c.m; ++j)
    col += f.delta[c.edge_id(c.vertex_id(0, j), EdgeFamily::Up)];
  if (!rat_is_integer(row) || !rat_is_integer(col))
    throw InvariantError("cycle sums must be integers: (" + rat_str(row) +
                         ", " + rat_str(col) + ")");
  return {rat_to_long(row), rat_to_long(col)};
}

VertexType classify_vertex(const CircleFunction& f, int v) {
  auto lifts = f.link_lifts(v);
  int signs[6];
  for (int k = 0; k < 6; ++k) {
    int s = sgn(lifts[k]);
    if (s == 0) {
      auto oe = f.complex.link_edges(v)[k];
      throw FlatEdgeError(f.complex.edge_tail(oe.edge),
                          static_cast<int>(f.complex.edge_family(oe.edge)),
                          "flat edge incident to vertex " + std::to_string(v));
    }
    signs[k] = s;
  }
  VertexType t;
  for (int k = 0; k < 6; ++k)
    if (signs[k] != signs[(k + 1) % 6]) ++t.sign_changes;
  t.descending = t.sign_changes == 0 && signs[0] < 0;
  return t;
}

long index_sum(const CircleFunction& f) {
  long sum = 0;
  for (int v = 0; v < f.complex.vertex_count(); ++v)
    sum += classify_vertex(f, v).index();
  return sum;
}

}  // namespace reeb_orbit
