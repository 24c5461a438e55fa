#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reeb_orbit/group_expr.hpp"
#include "reeb_orbit/reeb.hpp"
#include "reeb_orbit/torus_pl.hpp"

namespace reeb_orbit {

// Exact real-valued lift of a null-homotopic function: values[v] equals
// theta[v] mod 1 and values[head] - values[tail] equals the edge lift
// exactly, for every edge.
struct RealLift {
    std::vector<Rat> values;
};

enum class LiftOrder { Breadth, Depth };

// Integrates the edge lifts over a spanning tree rooted at vertex 0. Only
// the traversal order is selectable; the result is the same for any
// spanning tree because all cycle sums vanish when the class is (0,0).
// Throws NotNullHomotopicError otherwise.
RealLift lift_null_homotopic(const CircleFunction& f,
                             LiftOrder order = LiftOrder::Breadth);

enum class Branch { Fibration, NullHomotopicTree, CycleCase };

// One of the n cyclically equivalent pieces the decorated cycle is cut
// into. The cuts sit at the orbit of the canonical starting position under
// the order-n rotation group; x_minus/x_plus are the graph edges crossing
// the lower/upper cut, the bands a neighborhood of the cut runs through.
struct SegmentDescriptor {
    int index = 0;
    int first_entry = 0;   // position in the decorated cycle
    std::string code;      // concatenated entry tokens, equal for all segments
    int x_minus_edge = -1;
    int x_plus_edge = -1;
};

// Cuts the cycle into n segments of equal length; n must be an admissible
// rotation count (it divides the cycle length and rotating by length/n
// fixes the decoration). All produced codes are equal.
std::vector<SegmentDescriptor> cycle_segments(const ReebGraph& g,
                                              const DecoratedCycle& dc, int n);

struct CriticalCensus {
    int n_max = 0;
    int n_min = 0;
    int n_saddle = 0;

    int total() const { return n_max + n_min + n_saddle; }
};

struct OrbitReport {
    int grid_n = 0;
    int grid_m = 0;
    std::pair<long, long> cls{0, 0};
    CriticalCensus census;
    Branch branch = Branch::Fibration;
    std::vector<Rat> critical_values;

    // level-set graph summary (tree and cycle branches)
    int nodes = 0;
    int edges = 0;
    int betti = -1;

    // cycle branch
    int cycle_length = 0;
    int rotation = 0;  // order n of the decoration rotation group
    long winding = 0;
    bool reflective = false;
    std::vector<SegmentDescriptor> segments;
    std::optional<GroupExpr> result;
    std::optional<GroupExpr> kernel_blocks;
    std::optional<GroupExpr> kernel_slide;

    // fibration branch
    int fiber_count = 0;

    // tree branch
    std::optional<RealLift> lift;

    std::vector<std::string> notes;
};

// Full pipeline: census and class, then one of three branches. A function
// with no critical vertex reports the fibration branch; a tree-shaped
// level-set graph reports the real-valued reduction with its exact lift;
// a graph with a cycle reports the rotation order n, the cylinder segment
// codes and the symbolic wreath description of the deformation group.
OrbitReport analyze(const CircleFunction& f, int threads = 1);

struct KernelForms {
    GroupExpr blockwise;  // n equal segment stabilizer factors
    GroupExpr slide;      // free slide factor times the full-curve stabilizer
};

// Both presentations of the kernel of the block shift; cycle branch only,
// otherwise WrongBranchError.
KernelForms kernel_report(const OrbitReport& r);

// Stable plain-text rendering; byte-identical for equal reports.
std::string render_report(const OrbitReport& r);

}  // namespace reeb_orbit
