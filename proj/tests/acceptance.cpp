// End-to-end acceptance run. Prints one verdict line per criterion and a
// final tally; the process exits 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "reeb_orbit/errors.hpp"
#include "reeb_orbit/finite_group.hpp"
#include "reeb_orbit/function_file.hpp"
#include "reeb_orbit/orbit.hpp"
#include "reeb_orbit/reeb.hpp"
#include "reeb_orbit/selftest.hpp"
#include "reeb_orbit/wreath.hpp"

using namespace reeb_orbit;
using Clock = std::chrono::steady_clock;

namespace {

int g_pass = 0, g_total = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void verdict(const char* tag, const char* name, bool ok, const std::string& detail) {
    ++g_total;
    if (ok) ++g_pass;
    std::printf("[%s] %s: %s (%s)\n", tag, name, ok ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
}

const std::pair<long, long> kClasses[3] = {{0, 0}, {1, 0}, {2, 1}};

// (1) first Betti number of the level-set graph is 0 or 1, and a nonzero
// degree pair forces the cycle
void criterion_graph_shape() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(20260816u);
    int checked = 0, fibrations = 0;
    std::string bad;
    for (int t = 0; t < 200 && bad.empty(); ++t) {
        int n = 4 + static_cast<int>(rng() % 13);
        int m = 4 + static_cast<int>(rng() % 13);
        auto cls = kClasses[t % 3];
        FunctionFile ff = random_function(rng, n, m, cls.first, cls.second);
        CircleFunction f = build_from_file(ff);
        try {
            ReebGraph g = reeb_graph(f);
            int b = first_betti(g);
            if (b != 0 && b != 1)
                bad = "betti " + std::to_string(b) + " on a " + std::to_string(n) +
                      "x" + std::to_string(m) + " grid";
            else if (cls != std::pair<long, long>{0, 0} && b != 1)
                bad = "nonzero class with betti 0";
            ++checked;
        } catch (const FibrationError&) {
            ++fibrations;  // no critical vertex: nothing to check
        }
    }
    double el = seconds_since(t0);
    bool ok = bad.empty() && checked + fibrations == 200 && el <= 60.0;
    if (bad.empty() && el > 60.0) bad = "over budget";
    verdict("1", "level-set graph is a point, a tree or one cycle", ok,
            bad.empty() ? std::to_string(checked) + " graphs, " +
                              std::to_string(fibrations) + " fibrations, " +
                              std::to_string(el).substr(0, 5) + "s"
                        : bad);
}

// (2) PL indices of the critical vertices balance to the Euler
// characteristic, which vanishes on the torus
void criterion_index_balance() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(911u);
    std::string bad;
    for (int t = 0; t < 200 && bad.empty(); ++t) {
        int n = 4 + static_cast<int>(rng() % 13);
        int m = 4 + static_cast<int>(rng() % 13);
        auto cls = kClasses[t % 3];
        FunctionFile ff = random_function(rng, n, m, cls.first, cls.second);
        CircleFunction f = build_from_file(ff);
        long s = index_sum(f);
        if (s != 0)
            bad = "index sum " + std::to_string(s) + " on a " + std::to_string(n) +
                  "x" + std::to_string(m) + " grid";
    }
    verdict("2", "saddle indices cancel the extrema", bad.empty(),
            bad.empty() ? "200 functions, " +
                              std::to_string(seconds_since(t0)).substr(0, 5) + "s"
                        : bad);
}

// (3) in B wr Z conjugation by the generator advances the block index, and
// the canonical section of the finite quotient is a splitting homomorphism
void criterion_wreath_model() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(333u);
    std::string bad;
    const FiniteGroup bases[3] = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                  FiniteGroup::symmetric3()};
    long pairs = 0;
    for (const FiniteGroup& base : bases) {
        for (int n = 1; n <= 3 && bad.empty(); ++n) {
            WreathZ w(&base, n);
            for (int i = 0; i < n; ++i)
                for (int x = 0; x < base.order(); ++x)
                    if (!(w.conj(w.g(), w.from_block(i, x)) ==
                          w.from_block((i + 1) % n, x)))
                        bad = base.name() + " n=" + std::to_string(n) +
                              ": conjugation misses block " + std::to_string(i + 1);
            for (int m = 1; m <= 3 && bad.empty(); ++m) {
                WreathQuotient q(&base, n, m);
                FiniteGroup fg = q.as_finite_group(base.name() + "_q");
                XiModel model = self_model(q, &fg);
                for (int id = 0; id < q.order() && bad.empty(); ++id)
                    if (xi_map(model, q.decode(id)) != id)
                        bad = base.name() + ": xi moves code " + std::to_string(id);
                auto rand_elem = [&]() {
                    WreathElement e;
                    e.block.resize(n);
                    for (int j = 0; j < n; ++j)
                        e.block[j] = static_cast<int>(rng() % base.order());
                    e.shift = static_cast<long>(rng() % 21) - 10;
                    return e;
                };
                for (int t = 0; t < 1000 && bad.empty(); ++t) {
                    WreathElement x = rand_elem(), y = rand_elem();
                    int gx = xi_map(model, x), gy = xi_map(model, y);
                    if (xi_map(model, w.mul(x, y)) != fg.mul(gx, gy))
                        bad = base.name() + " n=" + std::to_string(n) + " m=" +
                              std::to_string(m) + ": xi not multiplicative";
                    long want =
                        ((x.shift % model.modulus) + model.modulus) % model.modulus;
                    if (model.phi[gx] != want)
                        bad = base.name() + ": phi after xi mismatches the shift";
                    ++pairs;
                }
            }
        }
        if (!bad.empty()) break;
    }
    double el = seconds_since(t0);
    bool ok = bad.empty() && el <= 60.0;
    if (bad.empty() && el > 60.0) bad = "over budget";
    verdict("3", "wreath conjugation and the quotient section", ok,
            bad.empty() ? std::to_string(pairs) + " pairs, " +
                              std::to_string(el).substr(0, 5) + "s"
                        : bad);
}

// (4) the direct-product recognizer agrees with the explicit product
// bijection on every subgroup pair and triple of every catalog group
void criterion_product_recognition() {
    auto t0 = Clock::now();
    std::string bad;
    long pairs = 0, triples = 0;
    for (const FiniteGroup& g : group_corpus_up_to_16()) {
        auto subs = g.all_subgroups();
        ElemSet whole(g.order());
        std::iota(whole.begin(), whole.end(), 0);
        for (std::size_t i = 0; i < subs.size() && bad.empty(); ++i)
            for (std::size_t j = i; j < subs.size() && bad.empty(); ++j) {
                bool fast = check_direct_product(g, {subs[i], subs[j]});
                bool slow = product_map_is_isomorphism(g, whole, {subs[i], subs[j]});
                if (fast != slow)
                    bad = g.name() + ": pair disagreement at (" + std::to_string(i) +
                          ", " + std::to_string(j) + ")";
                ++pairs;
                for (std::size_t k = j; k < subs.size() && bad.empty(); ++k) {
                    // sizes must multiply out before the expensive map check
                    unsigned long sz = subs[i].size() * subs[j].size() * subs[k].size();
                    if (sz != static_cast<unsigned long>(g.order())) continue;
                    bool f3 = check_direct_product(g, {subs[i], subs[j], subs[k]});
                    bool s3 =
                        product_map_is_isomorphism(g, whole, {subs[i], subs[j], subs[k]});
                    if (f3 != s3)
                        bad = g.name() + ": triple disagreement at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ", " +
                              std::to_string(k) + ")";
                    ++triples;
                }
            }
        if (!bad.empty()) break;
    }
    double el = seconds_since(t0);
    bool ok = bad.empty() && el <= 60.0;
    if (bad.empty() && el > 60.0) bad = "over budget";
    verdict("4", "product recognizer vs explicit bijection", ok,
            bad.empty() ? std::to_string(pairs) + " pairs, " +
                              std::to_string(triples) + " full triples, " +
                              std::to_string(el).substr(0, 5) + "s"
                        : bad);
}

void criterion_reports() {
    {
        auto t0 = Clock::now();
        std::string why;
        try {
            OrbitReport r = analyze(build_from_file(two_peak_file()));
            std::string text = render_report(r);
            if (r.branch != Branch::CycleCase) why = "wrong branch";
            if (r.rotation != 1 || r.winding != 0 || !r.reflective)
                why = "wrong cycle decoration";
            if (text.find("result: pi0S'(f|Q,X) x Z\n") == std::string::npos)
                why = "result line missing";
        } catch (const Error& e) {
            why = e.what();
        }
        double el = seconds_since(t0);
        if (why.empty() && el > 10.0) why = "over budget";
        verdict("5a", "two-peak function reduces to a direct factor", why.empty(),
                why.empty() ? std::to_string(el).substr(0, 5) + "s" : why);
    }
    {
        auto t0 = Clock::now();
        std::string why;
        try {
            OrbitReport r = analyze(build_from_file(doubled_bump_file()));
            std::string text = render_report(r);
            if (r.branch != Branch::CycleCase) why = "wrong branch";
            if (r.rotation != 2 || r.winding != 2) why = "wrong cycle decoration";
            if (r.segments.size() != 2 || r.segments[0].code != r.segments[1].code)
                why = "segments disagree";
            if (text.find("result: pi0S'(f|Q,X) wr_2 Z\n") == std::string::npos)
                why = "result line missing";
        } catch (const Error& e) {
            why = e.what();
        }
        double el = seconds_since(t0);
        if (why.empty() && el > 10.0) why = "over budget";
        verdict("5b", "doubled bump realizes the order-2 wreath form", why.empty(),
                why.empty() ? std::to_string(el).substr(0, 5) + "s" : why);
        std::printf("note: the order-2 rotation needs degree (2, 0); with degree "
                    "(1, 0) the level cycle winds once, so its rotation order is 1\n");
    }
    {
        auto t0 = Clock::now();
        std::string why;
        try {
            OrbitReport r = analyze(build_from_file(fibration_file()));
            std::string text = render_report(r);
            if (r.branch != Branch::Fibration) why = "wrong branch";
            if (r.fiber_count != 1) why = "wrong fiber count";
            if (text.find("fiber count: 1\n") == std::string::npos)
                why = "fiber line missing";
        } catch (const Error& e) {
            why = e.what();
        }
        double el = seconds_since(t0);
        if (why.empty() && el > 10.0) why = "over budget";
        verdict("5c", "critical-point-free function is a fibration", why.empty(),
                why.empty() ? std::to_string(el).substr(0, 5) + "s" : why);
    }
}

// (6) every degree-(0,0) function lifts exactly, via either traversal
void criterion_exact_lifts() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(606u);
    std::string bad;
    for (int t = 0; t < 50 && bad.empty(); ++t) {
        int n = 4 + static_cast<int>(rng() % 9);
        int m = 4 + static_cast<int>(rng() % 9);
        FunctionFile ff = random_function(rng, n, m, 0, 0);
        CircleFunction f = build_from_file(ff);
        RealLift bl = lift_null_homotopic(f, LiftOrder::Breadth);
        RealLift dl = lift_null_homotopic(f, LiftOrder::Depth);
        if (!(bl.values == dl.values)) bad = "traversal order changed the lift";
        for (int v = 0; v < f.complex.vertex_count() && bad.empty(); ++v)
            if (rat_frac(bl.values[v]) != f.theta[v]) bad = "lift off its residue";
        for (int e = 0; e < f.complex.edge_count() && bad.empty(); ++e)
            if (bl.values[f.complex.edge_head(e)] -
                    bl.values[f.complex.edge_tail(e)] !=
                f.delta[e])
                bad = "lift does not integrate an edge";
    }
    verdict("6", "null-homotopic functions lift exactly", bad.empty(),
            bad.empty() ? "50 functions, " +
                              std::to_string(seconds_since(t0)).substr(0, 5) + "s"
                        : bad);
}

// (7) the rendered report is byte-stable across repeat runs and thread counts
void criterion_determinism() {
    auto t0 = Clock::now();
    std::string bad;
    {
        CircleFunction f = build_from_file(doubled_bump_file());
        std::string one = render_report(analyze(f, 1));
        std::string two = render_report(analyze(f, 1));
        std::string par = render_report(analyze(f, 4));
        if (one != two) bad = "repeat run differed";
        if (one != par) bad = "thread count changed the report";
    }
    if (bad.empty()) {
        std::mt19937_64 rng(707u);
        FunctionFile ff = random_function(rng, 8, 7, 2, 1);
        CircleFunction f = build_from_file(ff);
        std::string one = render_report(analyze(f, 1));
        std::string par = render_report(analyze(f, 4));
        if (one != par) bad = "thread count changed a random report";
    }
    verdict("7", "reports render deterministically", bad.empty(),
            bad.empty() ? std::to_string(seconds_since(t0)).substr(0, 5) + "s" : bad);
}

}  // namespace

int main() {
    criterion_graph_shape();
    criterion_index_balance();
    criterion_wreath_model();
    criterion_product_recognition();
    criterion_reports();
    criterion_exact_lifts();
    criterion_determinism();
    std::printf("ACCEPTANCE: %d/%d %s\n", g_pass, g_total,
                g_pass == g_total ? "PASS" : "FAIL");
    return g_pass == g_total ? 0 : 1;
}
