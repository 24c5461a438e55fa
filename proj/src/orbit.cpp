#include "reeb_orbit/orbit.hpp"

#include <algorithm>
#include <deque>

#include "reeb_orbit/errors.hpp"

namespace reeb_orbit {

RealLift lift_null_homotopic(const CircleFunction& f, LiftOrder order) {
    auto cls = cohomology_class(f);
    if (cls != std::pair<long, long>{0, 0})
        throw NotNullHomotopicError(cls.first, cls.second,
                                    "class (" + std::to_string(cls.first) + ", " +
                                        std::to_string(cls.second) +
                                        ") admits no real-valued lift");
    const TorusComplex& cx = f.complex;
    int nv = cx.vertex_count();
    RealLift lift;
    lift.values.assign(nv, Rat(0));
    std::vector<char> seen(nv, 0);
    std::deque<int> frontier;
    lift.values[0] = f.theta[0];
    seen[0] = 1;
    frontier.push_back(0);
    while (!frontier.empty()) {
        int v;
        if (order == LiftOrder::Breadth) {
            v = frontier.front();
            frontier.pop_front();
        } else {
            v = frontier.back();
            frontier.pop_back();
        }
        auto nbrs = cx.link(v);
        auto edges = cx.link_edges(v);
        for (int s = 0; s < 6; ++s) {
            int w = nbrs[s];
            if (seen[w]) continue;
            lift.values[w] = lift.values[v] + f.lift(edges[s]);
            seen[w] = 1;
            frontier.push_back(w);
        }
    }
    // exactness check: with class (0,0) every edge difference must match the
    // cocycle, independently of the tree that produced the values
    for (int e = 0; e < cx.edge_count(); ++e) {
        Rat diff = lift.values[cx.edge_head(e)] - lift.values[cx.edge_tail(e)];
        if (diff != f.delta[e]) throw InvariantError("lift does not integrate the cocycle");
    }
    return lift;
}

std::vector<SegmentDescriptor> cycle_segments(const ReebGraph& g,
                                              const DecoratedCycle& dc, int n) {
    int len = dc.length();
    if (n <= 0 || len % n != 0)
        throw InvariantError("segment count does not divide the cycle length");
    int p = len / n;
    for (int i = 0; i < len; ++i)
        if (dc.entries[(i + p) % len].token != dc.entries[i].token)
            throw InvariantError("rotation by one segment does not fix the decoration");
    std::vector<SegmentDescriptor> segs;
    for (int j = 0; j < n; ++j) {
        SegmentDescriptor sd;
        sd.index = j;
        sd.first_entry = j * p;
        for (int i = 0; i < p; ++i) sd.code += dc.entries[j * p + i].token;
        sd.x_minus_edge = dc.entries[(j * p - 1 + len) % len].edge;
        sd.x_plus_edge = dc.entries[(j + 1) * p - 1].edge;
        if (sd.x_minus_edge < 0 || sd.x_minus_edge >= static_cast<int>(g.edges.size()) ||
            sd.x_plus_edge < 0 || sd.x_plus_edge >= static_cast<int>(g.edges.size()))
            throw InvariantError("segment boundary band outside the graph");
        segs.push_back(std::move(sd));
    }
    for (int j = 1; j < n; ++j)
        if (segs[j].code != segs[0].code)
            throw InvariantError("segment codes disagree");
    return segs;
}

namespace {

// deterministic regular value: midpoint of the widest gap between adjacent
// vertex values on the circle
Rat widest_gap_midpoint(const CircleFunction& f) {
    std::vector<Rat> vals(f.theta.begin(), f.theta.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    int k = static_cast<int>(vals.size());
    Rat best_gap(-1), best_mid(0);
    for (int i = 0; i < k; ++i) {
        Rat next = (i + 1 < k) ? vals[i + 1] : Rat(vals[0] + 1);
        Rat gap = next - vals[i];
        if (gap > best_gap) {
            best_gap = gap;
            best_mid = rat_frac((vals[i] + next) / 2);
        }
    }
    return best_mid;
}

}  // namespace

OrbitReport analyze(const CircleFunction& f, int threads) {
    OrbitReport r;
    r.grid_n = f.complex.n;
    r.grid_m = f.complex.m;
    r.cls = cohomology_class(f);
    for (int v = 0; v < f.complex.vertex_count(); ++v) {
        VertexType vt = classify_vertex(f, v);
        if (vt.extremum())
            vt.descending ? ++r.census.n_max : ++r.census.n_min;
        else if (vt.saddle())
            ++r.census.n_saddle;
    }
    r.critical_values = critical_values(f);

    if (r.census.total() == 0) {
        r.branch = Branch::Fibration;
        r.fiber_count =
            static_cast<int>(level_components(f, widest_gap_midpoint(f)).size());
        r.notes.push_back(
            "no critical vertices: the function is a locally trivial fibration over "
            "the circle and the cycle analysis does not apply");
        return r;
    }

    ReebGraph g = reeb_graph(f, threads);
    r.nodes = static_cast<int>(g.nodes.size());
    r.edges = static_cast<int>(g.edges.size());
    r.betti = first_betti(g);

    if (r.betti == 0) {
        r.branch = Branch::NullHomotopicTree;
        if (r.cls != std::pair<long, long>{0, 0})
            throw InvariantError("tree-shaped level-set graph with nonzero class");
        r.lift = lift_null_homotopic(f);
        r.notes.push_back(
            "the level-set graph is a tree; the function factors through an exact "
            "real-valued lift (attached) and the real-valued theory applies");
        return r;
    }
    if (r.betti != 1) throw InvariantError("level-set graph with extra cycles");

    r.branch = Branch::CycleCase;
    DecoratedCycle dc = decorated_cycle(g);
    r.cycle_length = dc.length();
    r.winding = dc.winding;
    r.reflective = dc.reflective;
    r.rotation = rotation_order(dc);
    r.segments = cycle_segments(g, dc, r.rotation);

    GroupExpr atom_q = GroupExpr::atom("pi0S'(f|Q,X)", r.segments[0].code);
    r.result = canonicalize(GroupExpr::wreath_z(atom_q, r.rotation));
    r.kernel_blocks = canonicalize(
        GroupExpr::product(std::vector<GroupExpr>(r.rotation, atom_q)));
    std::string full_code;
    for (const auto& e : dc.entries) full_code += e.token;
    r.kernel_slide = canonicalize(GroupExpr::product(
        {GroupExpr::zfree(1), GroupExpr::atom("pi0S'(f,V)", full_code)}));

    r.notes.push_back(
        "model: every decoration-preserving rotation is assumed to be realized by a "
        "function-preserving homeomorphism; the reported group is exact under that "
        "assumption");
    r.notes.push_back(
        "rotation order n is computed from the full decorated cycle, so it does not "
        "depend on any cylinder subdivision choice");
    r.notes.push_back(
        "the two kernel presentations describe the same group; the identification is "
        "part of the model and is not re-verified here");
    return r;
}

KernelForms kernel_report(const OrbitReport& r) {
    if (r.branch != Branch::CycleCase)
        throw WrongBranchError("kernel presentations exist only for the cycle branch");
    return {*r.kernel_blocks, *r.kernel_slide};
}

std::string render_report(const OrbitReport& r) {
    std::string out;
    out += "level-set orbit report\n";
    out += "grid: " + std::to_string(r.grid_n) + " x " + std::to_string(r.grid_m) + "\n";
    out += "class: (" + std::to_string(r.cls.first) + ", " +
           std::to_string(r.cls.second) + ")\n";
    out += "critical vertices: " + std::to_string(r.census.total()) + " (max " +
           std::to_string(r.census.n_max) + ", min " + std::to_string(r.census.n_min) +
           ", saddle " + std::to_string(r.census.n_saddle) + ")\n";
    out += "critical values:";
    if (r.critical_values.empty()) {
        out += " none";
    } else {
        for (const Rat& q : r.critical_values) out += " " + rat_str(q);
    }
    out += "\n";
    switch (r.branch) {
        case Branch::Fibration:
            out += "branch: fibration\n";
            out += "fiber count: " + std::to_string(r.fiber_count) + "\n";
            break;
        case Branch::NullHomotopicTree: {
            out += "branch: tree\n";
            out += "graph: nodes " + std::to_string(r.nodes) + ", edges " +
                   std::to_string(r.edges) + ", first betti 0\n";
            const auto& vals = r.lift->values;
            Rat lo = *std::min_element(vals.begin(), vals.end());
            Rat hi = *std::max_element(vals.begin(), vals.end());
            out += "lift range: [" + rat_str(lo) + ", " + rat_str(hi) + "]\n";
            break;
        }
        case Branch::CycleCase: {
            out += "branch: cycle\n";
            out += "graph: nodes " + std::to_string(r.nodes) + ", edges " +
                   std::to_string(r.edges) + ", first betti 1\n";
            out += "cycle: length " + std::to_string(r.cycle_length) + ", winding " +
                   std::to_string(r.winding) + ", rotation order " +
                   std::to_string(r.rotation) +
                   (r.reflective ? ", reflective yes" : ", reflective no") + "\n";
            for (const auto& seg : r.segments)
                out += "segment Q" + std::to_string(seg.index) + " [X- e" +
                       std::to_string(seg.x_minus_edge) + ", X+ e" +
                       std::to_string(seg.x_plus_edge) + "]: " + seg.code + "\n";
            out += "result: " + render(*r.result) + "\n";
            out += "kernel (blockwise): " + render(*r.kernel_blocks) + "\n";
            out += "kernel (slide): " + render(*r.kernel_slide) + "\n";
            out += "abelianization: " + render(abelianization(*r.result)) + "\n";
            break;
        }
    }
    out += "notes:\n";
    for (const auto& note : r.notes) out += "- " + note + "\n";
    return out;
}

}  // namespace reeb_orbit
