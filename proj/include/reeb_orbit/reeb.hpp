#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reeb_orbit/torus_pl.hpp"

namespace reeb_orbit {

// Distinct values of theta at critical vertices, ascending, all in [0,1).
// Empty result means every vertex is regular.
std::vector<Rat> critical_values(const CircleFunction& f);

// One transverse crossing of a level through the interior of an edge.
// The level value seen along edge e, measured in the lift based at
// theta(tail(e)), is q + k for the integer k stored here.
struct LevelCrossing {
    int edge = -1;
    long k = 0;

    auto operator<=>(const LevelCrossing&) const = default;
};

// One triangle segment of a level component. The level enters through
// entry_edge and leaves through exit_edge; kappa is the integer offset of
// the level value in the triangle frame based at the triangle's corner 0.
// entry_pos / exit_pos are the crossing parameters in (0,1) along the
// canonical orientation of those edges.
struct TraceStep {
    int triangle = -1;
    long kappa = 0;
    int entry_edge = -1;
    int exit_edge = -1;
    Rat entry_pos;
    Rat exit_pos;
};

// A closed level-set component at a regular value: a cyclic list of
// triangle segments. steps.front() continues steps.back().
struct LeafTrace {
    Rat value;
    std::vector<TraceStep> steps;
};

// All components of the level set at value c. Requires c to be distinct
// from every vertex value mod 1; throws ValueNotRegularError otherwise.
// Components are ordered by their least (triangle, kappa) pair and each
// starts at that segment.
std::vector<LeafTrace> level_components(const CircleFunction& f, const Rat& c);

struct ReebNode {
    Rat value;              // in [0,1)
    std::vector<int> vertices;  // function vertices lying on this component
    int n_max = 0;
    int n_min = 0;
    int n_saddle = 0;

    bool marker() const { return n_max + n_min + n_saddle == 0; }
};

// A band of the function between two consecutive critical values. The arc
// is (low, high) with high <= low + 1; high wraps past 1 when the arc
// crosses the basepoint of the value circle.
struct ReebEdge {
    int arc = -1;   // index into critical_values of the arc's lower end
    Rat low;
    Rat high;
    int bottom = -1;  // node at value low
    int top = -1;     // node at value frac(high)
};

struct ReebGraph {
    std::vector<Rat> values;   // critical values, ascending
    std::vector<ReebNode> nodes;
    std::vector<ReebEdge> edges;

    int degree(int node) const;
};

// Quotient of the torus by connected components of levels, restricted to
// the critical values: every component of every critical level becomes a
// node (components with no critical vertex become markers), every band
// between consecutive critical values becomes an edge. Throws
// FibrationError when f has no critical points. threads > 1 distributes
// the per-arc work; the result does not depend on the thread count.
ReebGraph reeb_graph(const CircleFunction& f, int threads = 1);

// E - V + 1 for a connected graph; throws DisconnectedError otherwise.
int first_betti(const ReebGraph& g);

// One position of the decorated cycle: the node, the cycle edge leaving it
// in traversal direction, the canonical code of the trees hanging off the
// node, and the signed value increment along that edge.
struct CycleEntry {
    int node = -1;
    int edge = -1;
    Rat value;        // node value in [0,1)
    std::string forest;
    Rat increment;    // +arc length upward, -arc length downward
    std::string token;  // serialized entry, used for rotation matching
};

struct DecoratedCycle {
    std::vector<CycleEntry> entries;
    long winding = 0;    // sum of increments, an integer
    bool reflective = false;  // some reversal matches the decoration

    int length() const { return static_cast<int>(entries.size()); }
};

// Extracts the unique cycle of a first-betti-1 graph together with its
// decoration. Traversal direction makes the winding nonnegative (ties
// broken by the lexicographically smaller token sequence) and the starting
// position is the lexicographically least rotation. Throws NoCycleError
// when the graph is a tree.
DecoratedCycle decorated_cycle(const ReebGraph& g);

// Number of rotations of the entry sequence matching every value, forest
// code and increment exactly. Always divides the cycle length.
int rotation_order(const std::vector<std::string>& tokens);
int rotation_order(const DecoratedCycle& dc);

// Independent degree count for a node: boundary circles of the component
// of f^-1(value - eps, value + eps) containing the node's level component,
// for eps small enough to clear all other critical and vertex values.
int node_degree_oracle(const CircleFunction& f, const ReebGraph& g, int node);

}  // namespace reeb_orbit
