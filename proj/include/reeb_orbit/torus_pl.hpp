#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "reeb_orbit/errors.hpp"
#include "reeb_orbit/rational.hpp"

namespace reeb_orbit {

// Diagonal triangulation of the flat torus with n columns and m rows.
//
// Vertex (i,j), 0<=i<n, 0<=j<m, has id j*n+i. Every vertex owns three
// canonical outgoing edges: Right to (i+1,j), Up to (i,j+1) and Diag to
// (i+1,j+1), indices mod n / mod m, so edge ids are 3*v+family. Each grid
// cell holds a lower triangle {(i,j),(i+1,j),(i+1,j+1)} (id 2*cell) and an
// upper triangle {(i,j),(i+1,j+1),(i,j+1)} (id 2*cell+1). Hence V = nm,
// E = 3nm, F = 2nm and the Euler characteristic vanishes. Every vertex link
// is a hexagon; n,m >= 3 keeps all edges distinct.

enum class EdgeFamily : std::uint8_t { Right = 0, Up = 1, Diag = 2 };

struct OrientedEdge {
  int edge;
  bool forward;
};

struct TorusComplex {
  int n = 0;
  int m = 0;

  // Throws DimensionError for n < 3 or m < 3.
  static TorusComplex grid(int n, int m);

  int vertex_count() const { return n * m; }
  int edge_count() const { return 3 * n * m; }
  int triangle_count() const { return 2 * n * m; }

  int vertex_id(int i, int j) const {
    i = ((i % n) + n) % n;
    j = ((j % m) + m) % m;
    return j * n + i;
  }
  std::pair<int, int> vertex_ij(int v) const { return {v % n, v / n}; }

  int edge_id(int v, EdgeFamily f) const { return 3 * v + static_cast<int>(f); }
  int edge_tail(int e) const { return e / 3; }
  EdgeFamily edge_family(int e) const { return static_cast<EdgeFamily>(e % 3); }
  int edge_head(int e) const;

  std::array<int, 3> triangle_vertices(int t) const;

  // Boundary walk v0 -> v1 -> v2 -> v0 as canonical edges with orientation
  // flags. Lift sums over this walk vanish for any cocycle.
  std::array<OrientedEdge, 3> triangle_boundary(int t) const;

  // The two triangles glued along a canonical edge.
  std::array<int, 2> edge_triangles(int e) const;

  // Six link neighbours of v in cyclic order:
  // Right, Diag, Up, Left, AntiDiag, Down.
  std::array<int, 6> link(int v) const;

  // Canonical edges joining v to its link, same order as link(); forward
  // means v is the tail.
  std::array<OrientedEdge, 6> link_edges(int v) const;

  // Local index (0..2) of vertex v in triangle t; throws InvariantError if v
  // is not a corner of t.
  int corner_index(int t, int v) const;
};

// A generic PL circle-valued function: a value theta(v) in [0,1) per vertex
// plus an exact lift delta(e) per canonical edge with
// delta(e) == theta(head) - theta(tail) (mod 1), antisymmetric under
// orientation reversal and summing to zero around every triangle boundary.
// Genericity: no delta is zero.
struct CircleFunction {
  TorusComplex complex;
  std::vector<Rat> theta;  // size V
  std::vector<Rat> delta;  // size E, canonical orientation

  Rat lift(int edge, bool forward = true) const {
    return forward ? delta[edge] : Rat(-delta[edge]);
  }
  Rat lift(const OrientedEdge& oe) const { return lift(oe.edge, oe.forward); }

  // Outgoing lifts to the six link neighbours, cyclic order as in link().
  std::array<Rat, 6> link_lifts(int v) const;
};

// PL vertex classification by cyclic sign alternations of the six outgoing
// edge lifts: 0 = extremum, 2 = regular, 4 or 6 = saddle.
struct VertexType {
  int sign_changes = 0;
  bool descending = false;  // extremum with all lifts negative (local max)

  bool extremum() const { return sign_changes == 0; }
  bool regular() const { return sign_changes == 2; }
  bool saddle() const { return sign_changes >= 4; }
  int index() const { return 1 - sign_changes / 2; }
};

// theta(i,j) = frac(a*i/n + b*j/m + v[j][i]) with the lifts of the explicit
// real lift F(i,j) = a*i/n + b*j/m + v[j][i]; a row wrap adds a, a column
// wrap adds b. The perturbation has m rows of n entries. Throws
// DimensionError on a shape mismatch and FlatEdgeError naming the first flat
// edge.
CircleFunction build_function(const TorusComplex& complex, long a, long b,
                              const std::vector<std::vector<Rat>>& perturbation);

// (sum of lifts along the horizontal cycle of row 0, sum along the vertical
// cycle of column 0). Both are exact integers for any closed cocycle; the
// choice of row/column does not matter.
std::pair<long, long> cohomology_class(const CircleFunction& f);

// Throws FlatEdgeError if an incident lift is zero.
VertexType classify_vertex(const CircleFunction& f, int v);

// Sum over all vertices of the PL index 1 - sign_changes/2; equals the Euler
// characteristic, i.e. zero, for every generic function on the torus.
long index_sum(const CircleFunction& f);

}  // namespace reeb_orbit
