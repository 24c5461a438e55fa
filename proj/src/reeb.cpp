#include "reeb_orbit/reeb.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "reeb_orbit/errors.hpp"

namespace reeb_orbit {

namespace {

long floor_long(const Rat& x) {
    mpz_class z = rat_floor(x);
    if (!z.fits_slong_p()) throw InvariantError("level offset out of range");
    return z.get_si();
}

// least integer strictly greater than x
long first_int_gt(const Rat& x) { return floor_long(x) + 1; }

// greatest integer strictly less than x
long last_int_lt(const Rat& x) {
    return rat_is_integer(x) ? floor_long(x) - 1 : floor_long(x);
}

long int_ceil(const Rat& x) {
    return rat_is_integer(x) ? floor_long(x) : floor_long(x) + 1;
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Per-triangle value frame based at corner 0 plus the integer shift between
// that frame and each corner's own theta. For an edge inside a triangle the
// tail-based edge frame and the triangle frame differ by sig at the tail
// corner.
struct TriFrame {
    std::array<Rat, 3> val;
    std::array<long, 3> sig;
    Rat lo, hi;
};

struct Geometry {
    const CircleFunction* f = nullptr;
    std::vector<TriFrame> tri;
    std::vector<Rat> edge_lo, edge_hi;  // value interval of each edge, tail frame

    const TorusComplex& cx() const { return f->complex; }

    long edge_offset(int t, int e) const {
        int u = cx().edge_tail(e);
        return tri[t].sig[cx().corner_index(t, u)];
    }
};

Geometry make_geometry(const CircleFunction& f) {
    Geometry geo;
    geo.f = &f;
    const TorusComplex& cx = f.complex;
    geo.tri.resize(cx.triangle_count());
    for (int t = 0; t < cx.triangle_count(); ++t) {
        TriFrame& fr = geo.tri[t];
        auto corners = cx.triangle_vertices(t);
        auto bd = cx.triangle_boundary(t);
        fr.val[0] = f.theta[corners[0]];
        fr.val[1] = fr.val[0] + f.lift(bd[0]);
        fr.val[2] = fr.val[1] + f.lift(bd[1]);
        for (int c = 0; c < 3; ++c) {
            Rat d = fr.val[c] - f.theta[corners[c]];
            if (!rat_is_integer(d)) throw InvariantError("frame shift not integral");
            fr.sig[c] = rat_to_long(d);
        }
        fr.lo = std::min({fr.val[0], fr.val[1], fr.val[2]});
        fr.hi = std::max({fr.val[0], fr.val[1], fr.val[2]});
    }
    geo.edge_lo.resize(cx.edge_count());
    geo.edge_hi.resize(cx.edge_count());
    for (int e = 0; e < cx.edge_count(); ++e) {
        Rat t0 = f.theta[cx.edge_tail(e)];
        Rat t1 = t0 + f.delta[e];
        geo.edge_lo[e] = std::min(t0, t1);
        geo.edge_hi[e] = std::max(t0, t1);
    }
    return geo;
}

using PieceKey = std::pair<int, long>;  // (triangle, kappa)
using CrossKey = std::pair<int, long>;  // (edge, k)

// All transverse edge crossings of the level at value q (q regular, any
// lift), sorted by (edge, k).
std::vector<CrossKey> regular_crossings(const Geometry& geo, const Rat& q) {
    std::vector<CrossKey> out;
    for (int e = 0; e < geo.cx().edge_count(); ++e) {
        long k0 = first_int_gt(geo.edge_lo[e] - q);
        long k1 = last_int_lt(geo.edge_hi[e] - q);
        for (long k = k0; k <= k1; ++k) out.push_back({e, k});
    }
    return out;
}

// Connected components of the level at a critical (or at least vertex-
// hitting) value q in [0,1). Members are the vertices with theta == q plus
// the interior edge crossings; adjacency comes from the segments the level
// cuts across each triangle.
struct CritLevel {
    Rat value;
    std::map<int, int> vert_comp;
    std::map<CrossKey, int> cross_comp;
    std::vector<std::vector<int>> comp_vertices;
    int count = 0;
};

CritLevel crit_level(const Geometry& geo, const Rat& q) {
    const CircleFunction& f = *geo.f;
    const TorusComplex& cx = geo.cx();
    CritLevel lvl;
    lvl.value = q;

    std::vector<int> verts;
    for (int v = 0; v < cx.vertex_count(); ++v)
        if (f.theta[v] == q) verts.push_back(v);
    std::vector<CrossKey> crossings = regular_crossings(geo, q);

    std::map<int, int> vidx;
    std::map<CrossKey, int> cidx;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) vidx[verts[i]] = i;
    int nv = static_cast<int>(verts.size());
    for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
        cidx[crossings[i]] = nv + i;

    UnionFind uf(nv + static_cast<int>(crossings.size()));

    auto crossing_index = [&](int t, int side, long kappa) {
        auto bd = cx.triangle_boundary(t);
        int e = bd[side].edge;
        long k = kappa - geo.edge_offset(t, e);
        auto it = cidx.find({e, k});
        if (it == cidx.end()) throw InvariantError("missing level crossing");
        return it->second;
    };

    for (int t = 0; t < cx.triangle_count(); ++t) {
        const TriFrame& fr = geo.tri[t];
        auto corners = cx.triangle_vertices(t);
        long kap0 = int_ceil(fr.lo - q);
        long kap1 = floor_long(fr.hi - q);
        for (long kappa = kap0; kappa <= kap1; ++kappa) {
            Rat val = q + kappa;
            int eq = -1, neq = 0;
            for (int c = 0; c < 3; ++c)
                if (fr.val[c] == val) {
                    eq = c;
                    ++neq;
                }
            if (neq > 1) throw InvariantError("level meets two corners of one triangle");
            if (neq == 0) {
                // interior segment between two side crossings
                int sides[2];
                int ns = 0;
                for (int s = 0; s < 3; ++s) {
                    const Rat& a = fr.val[s];
                    const Rat& b = fr.val[(s + 1) % 3];
                    if ((a < val && val < b) || (b < val && val < a)) sides[ns++] = s;
                }
                if (ns != 2) throw InvariantError("level does not cross two sides");
                uf.unite(crossing_index(t, sides[0], kappa),
                         crossing_index(t, sides[1], kappa));
            } else if (val > fr.lo && val < fr.hi) {
                // middle corner: segment from the vertex to the opposite side
                int opp = (eq + 1) % 3;
                uf.unite(vidx.at(corners[eq]), crossing_index(t, opp, kappa));
            }
            // corner at the triangle's min or max: isolated touch, no segment
        }
    }

    std::map<int, int> renumber;
    auto comp_of = [&](int idx) {
        int root = uf.find(idx);
        auto [it, fresh] = renumber.try_emplace(root, lvl.count);
        if (fresh) {
            ++lvl.count;
            lvl.comp_vertices.emplace_back();
        }
        return it->second;
    };
    for (int i = 0; i < nv; ++i) {
        int c = comp_of(i);
        lvl.vert_comp[verts[i]] = c;
        lvl.comp_vertices[c].push_back(verts[i]);
    }
    for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
        lvl.cross_comp[crossings[i]] = comp_of(nv + i);
    return lvl;
}

// Pieces (t, kappa) of the preimage of the open value interval (a, b) with
// b - a <= 1, glued across shared edges. Each piece is the convex slab
// a + kappa < frame < b + kappa inside its triangle.
struct PieceFill {
    std::map<PieceKey, int> comp;
    int count = 0;
};

PieceFill fill_pieces(const Geometry& geo, const Rat& a, const Rat& b) {
    const TorusComplex& cx = geo.cx();
    PieceFill out;
    std::map<PieceKey, int> idx;
    for (int t = 0; t < cx.triangle_count(); ++t) {
        const TriFrame& fr = geo.tri[t];
        long k0 = first_int_gt(fr.lo - b);
        long k1 = last_int_lt(fr.hi - a);
        for (long kappa = k0; kappa <= k1; ++kappa)
            idx[{t, kappa}] = static_cast<int>(idx.size());
    }
    UnionFind uf(static_cast<int>(idx.size()));
    for (int e = 0; e < cx.edge_count(); ++e) {
        auto ts = cx.edge_triangles(e);
        long off0 = geo.edge_offset(ts[0], e);
        long off1 = geo.edge_offset(ts[1], e);
        long j0 = first_int_gt(geo.edge_lo[e] - b);
        long j1 = last_int_lt(geo.edge_hi[e] - a);
        for (long j = j0; j <= j1; ++j) {
            auto p0 = idx.find({ts[0], j + off0});
            auto p1 = idx.find({ts[1], j + off1});
            if (p0 == idx.end() || p1 == idx.end())
                throw InvariantError("edge strip without matching piece");
            uf.unite(p0->second, p1->second);
        }
    }
    std::map<int, int> renumber;
    for (const auto& [key, i] : idx) {
        int root = uf.find(i);
        auto [it, fresh] = renumber.try_emplace(root, out.count);
        if (fresh) ++out.count;
        out.comp[key] = it->second;
    }
    return out;
}

// Sample values inside the arc (a, b) clear of all vertex values: p_low has
// no vertex value in (a, p_low], p_high none in [p_high, b). Level circles
// at these values slide to the arc ends without leaving their edges.
std::pair<Rat, Rat> arc_probes(const CircleFunction& f, const Rat& a, const Rat& b) {
    Rat wmin = b, wmax = a;
    for (const Rat& tv : f.theta) {
        Rat up = tv + first_int_gt(a - tv);
        if (up < wmin) wmin = up;
        Rat dn = tv + last_int_lt(b - tv);
        if (dn > wmax) wmax = dn;
    }
    Rat p_low = (a + wmin) / 2;
    Rat p_high = (wmax + b) / 2;
    return {p_low, p_high};
}

struct NodeKey {
    bool is_vertex = false;
    int vertex = -1;
    CrossKey cross{-1, 0};
};

// Where the crossing (e, k) of a probe level ends up when the level slides
// to the arc end with value `target` (in the tail frame of e). lvl_shift
// rebases k from the arc-end lift to the critical value in [0,1).
NodeKey slide_crossing(const Geometry& geo, int e, long k, const Rat& target,
                       long lvl_shift) {
    const CircleFunction& f = *geo.f;
    int tail = geo.cx().edge_tail(e);
    Rat tv = f.theta[tail];
    Rat hv = tv + f.delta[e];
    NodeKey key;
    if (target == tv) {
        key.is_vertex = true;
        key.vertex = tail;
    } else if (target == hv) {
        key.is_vertex = true;
        key.vertex = geo.cx().edge_head(e);
    } else if (geo.edge_lo[e] < target && target < geo.edge_hi[e]) {
        key.cross = {e, k + lvl_shift};
    } else {
        throw InvariantError("level slide leaves its edge");
    }
    return key;
}

int resolve_node(const CritLevel& lvl, const NodeKey& key) {
    if (key.is_vertex) {
        auto it = lvl.vert_comp.find(key.vertex);
        if (it == lvl.vert_comp.end())
            throw InvariantError("slide target vertex not on the critical level");
        return it->second;
    }
    auto it = lvl.cross_comp.find(key.cross);
    if (it == lvl.cross_comp.end())
        throw InvariantError("slide target crossing not on the critical level");
    return it->second;
}

struct ArcBands {
    PieceFill pieces;
    std::vector<int> bottom_comp;  // component in the level below, per band
    std::vector<int> top_comp;     // component in the level above, per band
};

ArcBands arc_bands(const Geometry& geo, const CritLevel& below, const CritLevel& above,
                   const Rat& a, const Rat& b) {
    ArcBands out;
    out.pieces = fill_pieces(geo, a, b);
    if (out.pieces.count == 0) return out;
    out.bottom_comp.assign(out.pieces.count, -1);
    out.top_comp.assign(out.pieces.count, -1);

    auto [p_low, p_high] = arc_probes(*geo.f, a, b);
    long top_shift = rat_to_long(b - rat_frac(b));

    auto attach = [&](const Rat& probe, const Rat& end, long lvl_shift,
                      const CritLevel& lvl, std::vector<int>& slot) {
        for (const auto& [e, k] : regular_crossings(geo, probe)) {
            int t = geo.cx().edge_triangles(e)[0];
            auto it = out.pieces.comp.find({t, k + geo.edge_offset(t, e)});
            if (it == out.pieces.comp.end())
                throw InvariantError("probe crossing outside every piece");
            int band = it->second;
            Rat target = end + k;
            int comp = resolve_node(lvl, slide_crossing(geo, e, k, target, lvl_shift));
            if (slot[band] == -1) {
                slot[band] = comp;
            } else if (slot[band] != comp) {
                throw InvariantError("band attaches to two level components");
            }
        }
    };
    attach(p_low, a, 0, below, out.bottom_comp);
    attach(p_high, b, top_shift, above, out.top_comp);

    for (int i = 0; i < out.pieces.count; ++i)
        if (out.bottom_comp[i] == -1 || out.top_comp[i] == -1)
            throw InvariantError("band with an unattached end");
    return out;
}

}  // namespace

std::vector<Rat> critical_values(const CircleFunction& f) {
    std::set<Rat> vals;
    for (int v = 0; v < f.complex.vertex_count(); ++v)
        if (!classify_vertex(f, v).regular()) vals.insert(f.theta[v]);
    return {vals.begin(), vals.end()};
}

std::vector<LeafTrace> level_components(const CircleFunction& f, const Rat& c) {
    Rat q = c;
    Rat qf = rat_frac(q);
    for (const Rat& tv : f.theta)
        if (tv == qf)
            throw ValueNotRegularError("level value hits a vertex: " + rat_str(qf));

    Geometry geo = make_geometry(f);
    const TorusComplex& cx = f.complex;

    struct Visit {
        int tri;
        long kappa;
        CrossKey cross[2];
    };
    std::vector<Visit> visits;
    std::map<CrossKey, std::array<int, 2>> owners;  // crossing -> two visit ids

    for (int t = 0; t < cx.triangle_count(); ++t) {
        const TriFrame& fr = geo.tri[t];
        long k0 = first_int_gt(fr.lo - q);
        long k1 = last_int_lt(fr.hi - q);
        for (long kappa = k0; kappa <= k1; ++kappa) {
            Rat val = q + kappa;
            Visit vi{t, kappa, {}};
            int ns = 0;
            auto bd = cx.triangle_boundary(t);
            for (int s = 0; s < 3; ++s) {
                const Rat& x = fr.val[s];
                const Rat& y = fr.val[(s + 1) % 3];
                if (x == val || y == val)
                    throw InvariantError("regular level meets a corner");
                if ((x < val && val < y) || (y < val && val < x)) {
                    if (ns == 2) throw InvariantError("level crosses three sides");
                    int e = bd[s].edge;
                    vi.cross[ns++] = {e, kappa - geo.edge_offset(t, e)};
                }
            }
            if (ns != 2) throw InvariantError("level does not cross two sides");
            if (vi.cross[1] < vi.cross[0]) std::swap(vi.cross[0], vi.cross[1]);
            int id = static_cast<int>(visits.size());
            visits.push_back(vi);
            for (int s = 0; s < 2; ++s) {
                auto [it, fresh] = owners.try_emplace(vi.cross[s], std::array<int, 2>{-1, -1});
                auto& pair = it->second;
                if (pair[0] == -1) {
                    pair[0] = id;
                } else if (pair[1] == -1 && !fresh) {
                    pair[1] = id;
                } else {
                    throw InvariantError("crossing shared by three segments");
                }
            }
        }
    }
    for (const auto& [key, pair] : owners)
        if (pair[1] == -1) throw InvariantError("crossing with one incident segment");

    auto position = [&](const CrossKey& ck) {
        int tail = cx.edge_tail(ck.first);
        Rat val = q + ck.second;
        return Rat((val - f.theta[tail]) / f.delta[ck.first]);
    };

    std::vector<LeafTrace> traces;
    std::vector<char> used(visits.size(), 0);
    for (int start = 0; start < static_cast<int>(visits.size()); ++start) {
        if (used[start]) continue;
        LeafTrace trace;
        trace.value = c;
        int cur = start;
        CrossKey entry = visits[start].cross[0];  // smaller key enters first
        while (true) {
            used[cur] = 1;
            const Visit& vi = visits[cur];
            CrossKey exit = vi.cross[0] == entry ? vi.cross[1] : vi.cross[0];
            TraceStep step;
            step.triangle = vi.tri;
            step.kappa = vi.kappa;
            step.entry_edge = entry.first;
            step.exit_edge = exit.first;
            step.entry_pos = position(entry);
            step.exit_pos = position(exit);
            trace.steps.push_back(step);
            const auto& own = owners.at(exit);
            int next = own[0] == cur ? own[1] : own[0];
            if (next == start && exit == visits[start].cross[0]) break;
            if (used[next]) throw InvariantError("level trace is not a simple cycle");
            entry = exit;
            cur = next;
        }
        traces.push_back(std::move(trace));
    }
    return traces;
}

int ReebGraph::degree(int node) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.bottom == node) ++d;
        if (e.top == node) ++d;
    }
    return d;
}

ReebGraph reeb_graph(const CircleFunction& f, int threads) {
    std::vector<Rat> q = critical_values(f);
    if (q.empty())
        throw FibrationError("no critical vertex: the function fibers over the circle");

    Geometry geo = make_geometry(f);
    int rr = static_cast<int>(q.size());

    std::vector<CritLevel> levels(rr);
    for (int r = 0; r < rr; ++r) levels[r] = crit_level(geo, q[r]);

    auto arc_ends = [&](int r) {
        Rat a = q[r];
        Rat b = (r + 1 < rr) ? q[r + 1] : Rat(q[0] + 1);
        return std::pair<Rat, Rat>{a, b};
    };

    std::vector<ArcBands> bands(rr);
    auto work = [&](int r) {
        auto [a, b] = arc_ends(r);
        bands[r] = arc_bands(geo, levels[r], levels[(r + 1) % rr], a, b);
    };
    if (threads <= 1 || rr == 1) {
        for (int r = 0; r < rr; ++r) work(r);
    } else {
        int lanes = std::min(threads, rr);
        std::vector<std::future<void>> futs;
        for (int lane = 0; lane < lanes; ++lane)
            futs.push_back(std::async(std::launch::async, [&, lane] {
                for (int r = lane; r < rr; r += lanes) work(r);
            }));
        for (auto& fu : futs) fu.get();
    }

    ReebGraph g;
    g.values = q;
    std::vector<int> base(rr + 1, 0);
    for (int r = 0; r < rr; ++r) base[r + 1] = base[r] + levels[r].count;
    for (int r = 0; r < rr; ++r) {
        for (int c = 0; c < levels[r].count; ++c) {
            ReebNode node;
            node.value = q[r];
            node.vertices = levels[r].comp_vertices[c];
            for (int v : node.vertices) {
                VertexType vt = classify_vertex(f, v);
                if (vt.extremum())
                    vt.descending ? ++node.n_max : ++node.n_min;
                else if (vt.saddle())
                    ++node.n_saddle;
            }
            g.nodes.push_back(std::move(node));
        }
    }
    for (int r = 0; r < rr; ++r) {
        auto [a, b] = arc_ends(r);
        const ArcBands& ab = bands[r];
        for (int i = 0; i < ab.pieces.count; ++i) {
            ReebEdge e;
            e.arc = r;
            e.low = a;
            e.high = b;
            e.bottom = base[r] + ab.bottom_comp[i];
            e.top = base[(r + 1) % rr] + ab.top_comp[i];
            g.edges.push_back(std::move(e));
        }
    }
    return g;
}

int first_betti(const ReebGraph& g) {
    int nv = static_cast<int>(g.nodes.size());
    if (nv == 0) throw DisconnectedError("empty graph");
    UnionFind uf(nv);
    for (const auto& e : g.edges) uf.unite(e.bottom, e.top);
    int root = uf.find(0);
    for (int v = 1; v < nv; ++v)
        if (uf.find(v) != root)
            throw DisconnectedError("level-set graph is not connected");
    return static_cast<int>(g.edges.size()) - nv + 1;
}

namespace {

std::string node_core(const ReebGraph& g, int v) {
    const ReebNode& n = g.nodes[v];
    return "v=" + rat_str(n.value) + ";c=" + std::to_string(n.n_max) + "/" +
           std::to_string(n.n_min) + "/" + std::to_string(n.n_saddle);
}

// Canonical code of the subtree hanging below `node`, entered along
// via_edge. Children are serialized recursively and sorted, so isomorphic
// decorated trees get equal codes.
std::string subtree_code(const ReebGraph& g,
                         const std::vector<std::vector<std::pair<int, int>>>& forest,
                         int node, int via_edge) {
    std::vector<std::string> parts;
    for (const auto& [e, w] : forest[node]) {
        if (e == via_edge) continue;
        const ReebEdge& ed = g.edges[e];
        Rat len = ed.high - ed.low;
        Rat inc = (ed.bottom == node) ? len : Rat(-len);
        parts.push_back("{d=" + rat_str(inc) + ";" + node_core(g, w) +
                        subtree_code(g, forest, w, e) + "}");
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
}

std::vector<std::string> entry_tokens(const std::vector<CycleEntry>& entries) {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.token);
    return out;
}

// Index of the lexicographically least rotation of the token sequence.
int least_rotation(const std::vector<std::string>& tok) {
    int n = static_cast<int>(tok.size());
    int best = 0;
    for (int r = 1; r < n; ++r) {
        for (int i = 0; i < n; ++i) {
            int cmp = tok[(r + i) % n].compare(tok[(best + i) % n]);
            if (cmp < 0) best = r;
            if (cmp != 0) break;
        }
    }
    return best;
}

}  // namespace

DecoratedCycle decorated_cycle(const ReebGraph& g) {
    int b1 = first_betti(g);
    if (b1 == 0) throw NoCycleError("level-set graph is a tree");
    if (b1 > 1) throw InvariantError("level-set graph has extra cycles");

    int nv = static_cast<int>(g.nodes.size());
    int ne = static_cast<int>(g.edges.size());
    std::vector<std::vector<std::pair<int, int>>> inc(nv);  // (edge, other end)
    for (int e = 0; e < ne; ++e) {
        inc[g.edges[e].bottom].push_back({e, g.edges[e].top});
        inc[g.edges[e].top].push_back({e, g.edges[e].bottom});
    }
    for (auto& lst : inc) std::sort(lst.begin(), lst.end());

    // strip hanging trees: repeatedly remove degree-1 nodes
    std::vector<char> edge_alive(ne, 1);
    std::vector<int> deg(nv, 0);
    for (int v = 0; v < nv; ++v) deg[v] = static_cast<int>(inc[v].size());
    std::vector<int> queue;
    for (int v = 0; v < nv; ++v)
        if (deg[v] == 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (deg[v] != 1) continue;
        for (const auto& [e, w] : inc[v]) {
            if (!edge_alive[e]) continue;
            edge_alive[e] = 0;
            --deg[v];
            --deg[w];
            if (deg[w] == 1) queue.push_back(w);
            break;
        }
    }

    std::vector<int> cycle_nodes;
    for (int v = 0; v < nv; ++v)
        if (deg[v] > 0) cycle_nodes.push_back(v);
    if (cycle_nodes.empty()) throw InvariantError("stripping erased the cycle");
    for (int v : cycle_nodes)
        if (deg[v] != 2) throw InvariantError("2-core is not a single cycle");

    // hanging forest: everything except the surviving cycle edges
    std::vector<std::vector<std::pair<int, int>>> forest(nv);
    for (int e = 0; e < ne; ++e) {
        if (edge_alive[e]) continue;
        forest[g.edges[e].bottom].push_back({e, g.edges[e].top});
        forest[g.edges[e].top].push_back({e, g.edges[e].bottom});
    }
    for (auto& lst : forest) std::sort(lst.begin(), lst.end());

    // walk the cycle
    std::vector<int> walk_nodes, walk_edges;
    int start = cycle_nodes.front();
    {
        int cur = start, prev_edge = -1;
        do {
            int chosen = -1, next = -1;
            for (const auto& [e, w] : inc[cur]) {
                if (!edge_alive[e] || e == prev_edge) continue;
                chosen = e;
                next = w;
                break;
            }
            if (chosen == -1) {
                // backtracking over a loop: the single alive edge is prev_edge
                for (const auto& [e, w] : inc[cur])
                    if (edge_alive[e]) {
                        chosen = e;
                        next = w;
                    }
                if (chosen == -1) throw InvariantError("cycle walk stalled");
            }
            walk_nodes.push_back(cur);
            walk_edges.push_back(chosen);
            prev_edge = chosen;
            cur = next;
            if (g.edges[chosen].bottom == g.edges[chosen].top) break;  // loop edge
        } while (cur != start);
    }
    int len = static_cast<int>(walk_nodes.size());
    if (len != static_cast<int>(cycle_nodes.size()))
        throw InvariantError("cycle walk missed nodes");

    std::vector<std::string> forest_code(nv);
    for (int v : cycle_nodes) forest_code[v] = subtree_code(g, forest, v, -1);

    auto make_entries = [&](bool forward) {
        std::vector<CycleEntry> entries(len);
        for (int i = 0; i < len; ++i) {
            int node, edge;
            if (forward) {
                node = walk_nodes[i];
                edge = walk_edges[i];
            } else {
                node = walk_nodes[(len - i) % len];
                edge = walk_edges[len - 1 - i];
            }
            const ReebEdge& ed = g.edges[edge];
            Rat len_e = ed.high - ed.low;
            Rat incr;
            if (ed.bottom == ed.top) {
                incr = forward ? len_e : Rat(-len_e);
            } else {
                bool upward = (ed.bottom == node);
                incr = upward ? len_e : Rat(-len_e);
            }
            CycleEntry ce;
            ce.node = node;
            ce.edge = edge;
            ce.value = g.nodes[node].value;
            ce.forest = forest_code[node];
            ce.increment = incr;
            ce.token = "[" + node_core(g, node) + "|F=" + ce.forest +
                       "|d=" + rat_str(incr) + "]";
            entries[i] = std::move(ce);
        }
        return entries;
    };

    std::vector<CycleEntry> fwd = make_entries(true);
    std::vector<CycleEntry> rev = make_entries(false);

    Rat wsum(0);
    for (const auto& e : fwd) wsum += e.increment;
    if (!rat_is_integer(wsum)) throw InvariantError("cycle winding is not integral");
    long w = rat_to_long(wsum);

    auto canonical = [&](std::vector<CycleEntry> entries) {
        int r = least_rotation(entry_tokens(entries));
        std::rotate(entries.begin(), entries.begin() + r, entries.end());
        return entries;
    };
    std::vector<CycleEntry> cf = canonical(fwd);
    std::vector<CycleEntry> cr = canonical(rev);
    std::vector<std::string> tf = entry_tokens(cf);
    std::vector<std::string> tr = entry_tokens(cr);

    DecoratedCycle dc;
    dc.reflective = (tf == tr);
    if (w > 0) {
        dc.entries = std::move(cf);
        dc.winding = w;
    } else if (w < 0) {
        dc.entries = std::move(cr);
        dc.winding = -w;
    } else {
        dc.entries = (tr < tf) ? std::move(cr) : std::move(cf);
        dc.winding = 0;
    }
    return dc;
}

int rotation_order(const std::vector<std::string>& tokens) {
    int n = static_cast<int>(tokens.size());
    if (n == 0) return 0;
    int count = 0;
    for (int r = 0; r < n; ++r) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (tokens[(i + r) % n] != tokens[i]) ok = false;
        if (ok) ++count;
    }
    return count;
}

int rotation_order(const DecoratedCycle& dc) {
    return rotation_order(entry_tokens(dc.entries));
}

int node_degree_oracle(const CircleFunction& f, const ReebGraph& g, int node) {
    Geometry geo = make_geometry(f);
    int rr = static_cast<int>(g.values.size());
    const Rat& qv = g.nodes[node].value;
    int r = -1;
    for (int i = 0; i < rr; ++i)
        if (g.values[i] == qv) r = i;
    if (r == -1) throw InvariantError("node value is not a critical value");

    std::vector<CritLevel> levels(rr);
    for (int i = 0; i < rr; ++i) levels[i] = crit_level(geo, g.values[i]);
    std::vector<int> base(rr + 1, 0);
    for (int i = 0; i < rr; ++i) base[i + 1] = base[i] + levels[i].count;
    int comp = node - base[r];
    if (comp < 0 || comp >= levels[r].count)
        throw InvariantError("node id out of range for its level");

    // vertex-free margin below and above the node's value
    int prev = (r - 1 + rr) % rr;
    Rat pa = g.values[prev];
    Rat pb = (prev + 1 < rr) ? g.values[prev + 1] : Rat(g.values[0] + 1);
    Rat na = g.values[r];
    Rat nb = (r + 1 < rr) ? g.values[r + 1] : Rat(g.values[0] + 1);
    Rat below_probe = arc_probes(f, pa, pb).second - rat_to_long(pb - rat_frac(pb));
    Rat above_probe = arc_probes(f, na, nb).first;

    PieceFill fill = fill_pieces(geo, below_probe, above_probe);

    // locate the neighborhood component containing the node's leaf
    const TorusComplex& cx = f.complex;
    int home = -1;
    auto note_piece = [&](const PieceKey& key) {
        auto it = fill.comp.find(key);
        if (it == fill.comp.end()) throw InvariantError("leaf member outside its slab");
        if (home == -1)
            home = it->second;
        else if (home != it->second)
            throw InvariantError("leaf spans two neighborhood components");
    };
    for (const auto& [v, c] : levels[r].vert_comp) {
        if (c != comp) continue;
        for (int t = 0; t < cx.triangle_count(); ++t) {
            auto corners = cx.triangle_vertices(t);
            for (int s = 0; s < 3; ++s)
                if (corners[s] == v) note_piece({t, geo.tri[t].sig[s]});
        }
    }
    for (const auto& [ck, c] : levels[r].cross_comp) {
        if (c != comp) continue;
        int t = cx.edge_triangles(ck.first)[0];
        note_piece({t, ck.second + geo.edge_offset(t, ck.first)});
    }
    if (home == -1) throw InvariantError("empty level component");

    // boundary circles = level components at the two margins inside home
    auto circles_inside = [&](const Rat& probe) {
        int count = 0;
        for (const auto& trace : level_components(f, probe)) {
            const TraceStep& s0 = trace.steps.front();
            auto it = fill.comp.find({s0.triangle, s0.kappa});
            if (it != fill.comp.end() && it->second == home) ++count;
        }
        return count;
    };
    Rat mid_below = (below_probe + qv) / 2;
    Rat mid_above = (qv + above_probe) / 2;
    return circles_inside(mid_below) + circles_inside(mid_above);
}

}  // namespace reeb_orbit
