#include "reeb_orbit/selftest.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "reeb_orbit/errors.hpp"
#include "reeb_orbit/finite_group.hpp"
#include "reeb_orbit/group_expr.hpp"
#include "reeb_orbit/orbit.hpp"
#include "reeb_orbit/reeb.hpp"
#include "reeb_orbit/wreath.hpp"

namespace reeb_orbit {

namespace {

FunctionFile make_file(int n, int m, long a, long b,
                       std::vector<std::vector<Rat>> pert) {
    FunctionFile ff;
    ff.n = n;
    ff.m = m;
    ff.a = a;
    ff.b = b;
    ff.perturbation = std::move(pert);
    return ff;
}

std::vector<std::vector<Rat>> zero_rows(int n, int m) {
    return std::vector<std::vector<Rat>>(m, std::vector<Rat>(n, Rat(0)));
}

// Saw profile in j that keeps vertical edges off level, 1/1000 per step.
constexpr std::array<int, 6> kTent = {0, 1, 2, 3, 2, 1};

}  // namespace

FunctionFile two_peak_file() {
    const std::array<Rat, 6> a = {Rat(1),  Rat(1, 3),  Rat(-1, 3),
                                  Rat(-1), Rat(-1, 3), Rat(1, 3)};
    const std::array<Rat, 6> b = {Rat(3), Rat(7, 3), Rat(5, 3),
                                  Rat(1), Rat(5, 3), Rat(7, 3)};
    auto pert = zero_rows(6, 6);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) pert[j][i] = a[i] * b[j] / 10;
    return make_file(6, 6, 0, 0, std::move(pert));
}

FunctionFile single_bump_file() {
    const std::array<Rat, 6> bump = {Rat(0), Rat(0),    Rat(2, 5),
                                     Rat(1), Rat(2, 5), Rat(0)};
    auto pert = zero_rows(6, 6);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i)
            pert[j][i] = Rat(3, 10) * bump[i] * bump[j] + Rat(kTent[j], 1000);
    return make_file(6, 6, 1, 0, std::move(pert));
}

FunctionFile doubled_bump_file() {
    const std::array<Rat, 3> prof = {Rat(0), Rat(1), Rat(2, 5)};
    const std::array<Rat, 6> bump = {Rat(0), Rat(0),    Rat(2, 5),
                                     Rat(1), Rat(2, 5), Rat(0)};
    auto pert = zero_rows(6, 6);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i)
            pert[j][i] = Rat(3, 5) * prof[i % 3] * bump[j] + Rat(kTent[j], 1000);
    return make_file(6, 6, 2, 0, std::move(pert));
}

FunctionFile fibration_file() {
    auto pert = zero_rows(6, 6);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) pert[j][i] = Rat(kTent[j], 1000);
    return make_file(6, 6, 1, 0, std::move(pert));
}

FunctionFile shared_level_tree_file() {
    // cos(k pi / 3) sampled on the grid: c(i) + c(j) + c(i+j), sheared to
    // keep every edge off level. Six samples per period leave several
    // critical vertices sharing a level (indices 0 and 3 share both shear
    // offsets), which is what collapses the level graph to a tree: 14
    // critical vertices over 6 levels, 11 nodes, 10 edges, first betti 0.
    const std::array<Rat, 6> c = {Rat(1),  Rat(1, 2),  Rat(-1, 2),
                                  Rat(-1), Rat(-1, 2), Rat(1, 2)};
    const std::array<int, 6> sa = {0, 1, 3, 0, 3, 1};
    const std::array<int, 6> sb = {0, 2, 1, 0, 1, 2};
    auto pert = zero_rows(6, 6);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i)
            pert[j][i] = (c[i] + c[j] + c[(i + j) % 6]) / 10 +
                         Rat(sa[i] + sb[j], 1000);
    return make_file(6, 6, 0, 0, std::move(pert));
}

FunctionFile random_function(std::mt19937_64& rng, int n, int m, long a,
                             long b) {
    std::uniform_int_distribution<long> pick(0, 9972);
    for (int attempt = 0; attempt < 50; ++attempt) {
        auto pert = zero_rows(n, m);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i) pert[j][i] = Rat(pick(rng), 9973);
        FunctionFile ff = make_file(n, m, a, b, std::move(pert));
        try {
            build_from_file(ff);
            return ff;
        } catch (const FlatEdgeError&) {
        }
    }
    throw InvariantError("no level-free perturbation found in 50 attempts");
}

namespace {

struct Suite {
    SuiteResult r;

    explicit Suite(std::string name) { r.name = std::move(name); }

    void expect(bool ok, const std::string& what) {
        ++r.cases;
        if (!ok) {
            ++r.failures;
            if (r.counterexample.empty()) r.counterexample = what;
        }
    }
};

const std::array<std::pair<long, long>, 3> kClasses = {
    {{0, 0}, {1, 0}, {2, 1}}};

std::string case_label(int n, int m, long a, long b, int t) {
    std::ostringstream os;
    os << "grid " << n << "x" << m << " class (" << a << ", " << b
       << ") case " << t;
    return os.str();
}

SuiteResult suite_index_sum(const SelfTestOptions& opt) {
    Suite s("index-sum");
    std::mt19937_64 rng(opt.seed ^ 0x1111u);
    const int count = opt.quick ? 8 : 60;
    for (int t = 0; t < count; ++t) {
        int n = 4 + static_cast<int>(rng() % 9);
        int m = 4 + static_cast<int>(rng() % 9);
        auto [a, b] = kClasses[t % kClasses.size()];
        FunctionFile ff = random_function(rng, n, m, a, b);
        CircleFunction f = build_from_file(ff);
        long sum = index_sum(f);
        s.expect(sum == 0, case_label(n, m, a, b, t) + ": index sum " +
                               std::to_string(sum));
    }
    return s.r;
}

SuiteResult suite_graph_betti(const SelfTestOptions& opt) {
    Suite s("graph-betti");
    std::mt19937_64 rng(opt.seed ^ 0x2222u);
    const int count = opt.quick ? 6 : 40;
    for (int t = 0; t < count; ++t) {
        int n = 4 + static_cast<int>(rng() % 6);
        int m = 4 + static_cast<int>(rng() % 6);
        auto [a, b] = kClasses[t % kClasses.size()];
        FunctionFile ff = random_function(rng, n, m, a, b);
        CircleFunction f = build_from_file(ff);
        const std::string label = case_label(n, m, a, b, t);
        try {
            ReebGraph g = reeb_graph(f, opt.threads);
            int betti = first_betti(g);
            std::string why;
            if (betti != 0 && betti != 1)
                why = label + ": betti " + std::to_string(betti);
            if ((a != 0 || b != 0) && betti != 1)
                why = label + ": nonzero class but betti " +
                      std::to_string(betti);
            long degsum = 0;
            for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
                degsum += g.degree(v);
            if (degsum != 2 * static_cast<long>(g.edges.size()))
                why = label + ": degree sum " + std::to_string(degsum) +
                      " vs " + std::to_string(2 * g.edges.size()) + " ends";
            s.expect(why.empty(), why);
        } catch (const FibrationError&) {
            s.expect(true, "");  // no critical vertex: nothing to check
        } catch (const Error& e) {
            s.expect(false, label + ": " + e.what());
        }
    }
    return s.r;
}

// Midpoints of the vertex-free gaps inside one arc of the value circle.
std::vector<Rat> arc_probe_values(const CircleFunction& f,
                                  const std::vector<Rat>& vals, int arc) {
    Rat lo = vals[arc];
    Rat hi = (arc + 1 < static_cast<int>(vals.size())) ? vals[arc + 1]
                                                       : vals[0] + 1;
    std::set<Rat> cuts;
    for (const Rat& tv : f.theta) {
        Rat u = tv;
        while (u <= lo) u += 1;
        if (u < hi) cuts.insert(u);
    }
    std::vector<Rat> pts{lo};
    pts.insert(pts.end(), cuts.begin(), cuts.end());
    pts.push_back(hi);
    std::vector<Rat> mids;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
        mids.push_back((pts[k] + pts[k + 1]) / 2);
    return mids;
}

SuiteResult suite_level_counts(const SelfTestOptions& opt) {
    Suite s("level-counts");
    std::mt19937_64 rng(opt.seed ^ 0x3333u);

    // Node degrees of the pinned inputs against the independent count of
    // boundary circles around each node's component.
    const std::array<std::pair<const char*, FunctionFile>, 3> pinned = {
        {{"two-peak", two_peak_file()},
         {"single-bump", single_bump_file()},
         {"doubled-bump", doubled_bump_file()}}};
    for (const auto& [name, ff] : pinned) {
        CircleFunction f = build_from_file(ff);
        try {
            ReebGraph g = reeb_graph(f, opt.threads);
            for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
                int got = node_degree_oracle(f, g, v);
                s.expect(got == g.degree(v),
                         std::string(name) + " node " + std::to_string(v) +
                             ": oracle degree " + std::to_string(got) +
                             " vs graph " + std::to_string(g.degree(v)));
            }
        } catch (const Error& e) {
            s.expect(false, std::string(name) + ": " + e.what());
        }
    }

    // Per-arc band count equals the level component count at every
    // vertex-free probe of that arc.
    const int count = opt.quick ? 2 : 6;
    for (int t = 0; t < count; ++t) {
        int n = 4 + static_cast<int>(rng() % 4);
        int m = 4 + static_cast<int>(rng() % 4);
        auto [a, b] = kClasses[t % kClasses.size()];
        FunctionFile ff = random_function(rng, n, m, a, b);
        CircleFunction f = build_from_file(ff);
        const std::string label = case_label(n, m, a, b, t);
        try {
            ReebGraph g = reeb_graph(f, opt.threads);
            for (int arc = 0; arc < static_cast<int>(g.values.size()); ++arc) {
                long bands = std::count_if(
                    g.edges.begin(), g.edges.end(),
                    [&](const ReebEdge& e) { return e.arc == arc; });
                std::string why;
                for (const Rat& c : arc_probe_values(f, g.values, arc)) {
                    long comps =
                        static_cast<long>(level_components(f, c).size());
                    if (comps != bands) {
                        why = label + " arc " + std::to_string(arc) + " at " +
                              rat_str(c) + ": " + std::to_string(comps) +
                              " components vs " + std::to_string(bands) +
                              " bands";
                        break;
                    }
                }
                s.expect(why.empty(), why);
            }
        } catch (const Error& e) {
            s.expect(false, label + ": " + e.what());
        }
    }
    return s.r;
}

struct WreathConfig {
    FiniteGroup base;
    int n;
    int m;
};

std::string wreath_label(const WreathConfig& cfg) {
    return cfg.base.name() + " n=" + std::to_string(cfg.n) +
           " m=" + std::to_string(cfg.m);
}

// Product with the block rotation turned the wrong way; inv(g) is shared by
// both conventions, so conjugation built on this multiply isolates the bug.
WreathElement mutated_mul(const WreathZ& w, const WreathElement& x,
                          const WreathElement& y, bool flipped) {
    if (!flipped) return w.mul(x, y);
    const int n = w.blocks();
    long k = ((x.shift % n) + n) % n;
    WreathElement r;
    r.block.resize(n);
    for (int j = 0; j < n; ++j)
        r.block[j] = w.base().mul(
            x.block[j], y.block[static_cast<int>((j - k + n) % n)]);
    r.shift = x.shift + y.shift;
    return r;
}

WreathElement mutated_conj(const WreathZ& w, const WreathElement& by,
                           const WreathElement& x, bool flipped) {
    return mutated_mul(w, mutated_mul(w, w.inv(by), x, flipped), by, flipped);
}

SuiteResult suite_wreath_axioms(const SelfTestOptions& opt) {
    Suite s("wreath-axioms");
    std::mt19937_64 rng(opt.seed ^ 0x4444u);
    const bool flip = opt.mutations.flip_wreath_shift;

    std::vector<WreathConfig> configs;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m) {
            configs.push_back({FiniteGroup::cyclic(2), n, m});
            configs.push_back({FiniteGroup::cyclic(3), n, m});
        }
    configs.push_back({FiniteGroup::symmetric3(), 1, 1});
    configs.push_back({FiniteGroup::symmetric3(), 2, 1});

    for (const WreathConfig& cfg : configs) {
        const std::string label = wreath_label(cfg);
        WreathZ w(&cfg.base, cfg.n);
        auto rand_elem = [&]() {
            WreathElement x;
            x.block.resize(cfg.n);
            for (int j = 0; j < cfg.n; ++j)
                x.block[j] = static_cast<int>(rng() % cfg.base.order());
            x.shift = static_cast<long>(rng() % 11) - 5;
            return x;
        };

        const int rounds = opt.quick ? 40 : 200;
        bool assoc = true, unit = true, inverse = true;
        for (int t = 0; t < rounds; ++t) {
            WreathElement x = rand_elem(), y = rand_elem(), z = rand_elem();
            if (!(w.mul(w.mul(x, y), z) == w.mul(x, w.mul(y, z))))
                assoc = false;
            if (!(w.mul(x, w.identity()) == x && w.mul(w.identity(), x) == x))
                unit = false;
            if (!(w.mul(x, w.inv(x)) == w.identity() &&
                  w.mul(w.inv(x), x) == w.identity()))
                inverse = false;
        }
        s.expect(assoc, label + ": associativity");
        s.expect(unit, label + ": identity");
        s.expect(inverse, label + ": inverses");

        // Conjugation by g carries block i onto block i+1, exhaustively.
        std::string bad;
        for (int i = 0; i < cfg.n && bad.empty(); ++i)
            for (int x = 0; x < cfg.base.order(); ++x) {
                WreathElement lhs =
                    mutated_conj(w, w.g(), w.from_block(i, x), flip);
                if (!(lhs == w.from_block((i + 1) % cfg.n, x))) {
                    bad = label + ": block " + std::to_string(i) +
                          " element " + std::to_string(x);
                    break;
                }
            }
        s.expect(bad.empty(), bad);

        // The finite quotient materializes as a verified table group.
        std::string qwhy;
        try {
            WreathQuotient q(&cfg.base, cfg.n, cfg.m);
            FiniteGroup fg = q.as_finite_group(label);
            long want = q.modulus();
            for (int j = 0; j < cfg.n; ++j) want *= cfg.base.order();
            if (fg.order() != want) qwhy = label + ": quotient order";
            if (q.phi_table()[q.g_id()] != 1 % q.modulus())
                qwhy = label + ": phi(g)";
            for (int id = 0; id < std::min(q.order(), 64); ++id)
                if (q.encode(q.decode(id)) != id) {
                    qwhy = label + ": code roundtrip at " + std::to_string(id);
                    break;
                }
        } catch (const Error& e) {
            qwhy = label + ": " + e.what();
        }
        s.expect(qwhy.empty(), qwhy);
    }
    return s.r;
}

SuiteResult suite_xi_splitting(const SelfTestOptions& opt) {
    Suite s("xi-splitting");
    std::mt19937_64 rng(opt.seed ^ 0x5555u);

    std::vector<WreathConfig> configs;
    configs.push_back({FiniteGroup::cyclic(2), 2, 2});
    configs.push_back({FiniteGroup::cyclic(3), 2, 1});
    configs.push_back({FiniteGroup::cyclic(2), 3, 1});
    if (!opt.quick) configs.push_back({FiniteGroup::symmetric3(), 2, 1});

    for (const WreathConfig& cfg : configs) {
        const std::string label = wreath_label(cfg);
        WreathQuotient q(&cfg.base, cfg.n, cfg.m);
        FiniteGroup fg = q.as_finite_group(label);
        XiModel model = self_model(q, &fg);
        WreathZ w(&cfg.base, cfg.n);

        // xi reassembles every canonical code to itself, hence bijectively.
        std::string bad;
        for (int id = 0; id < q.order(); ++id)
            if (xi_map(model, q.decode(id)) != id) {
                bad = label + ": xi moves code " + std::to_string(id);
                break;
            }
        s.expect(bad.empty(), bad);

        // Homomorphism and shift tracking on arbitrary-shift elements.
        auto rand_elem = [&]() {
            WreathElement x;
            x.block.resize(cfg.n);
            for (int j = 0; j < cfg.n; ++j)
                x.block[j] = static_cast<int>(rng() % cfg.base.order());
            x.shift = static_cast<long>(rng() % 15) - 7;
            return x;
        };
        const int rounds = opt.quick ? 60 : 300;
        bool hom = true, shift = true;
        for (int t = 0; t < rounds; ++t) {
            WreathElement x = rand_elem(), y = rand_elem();
            int gx = xi_map(model, x), gy = xi_map(model, y);
            if (xi_map(model, w.mul(x, y)) != fg.mul(gx, gy)) hom = false;
            long want = ((x.shift % model.modulus) + model.modulus) %
                        model.modulus;
            if (model.phi[gx] != want) shift = false;
        }
        s.expect(hom, label + ": xi is not multiplicative");
        s.expect(shift, label + ": phi after xi mismatches the shift");

        // Splitting hypotheses hold for the block-0 copy of the base.
        ElemSet l0(model.l0.begin(), model.l0.end());
        std::sort(l0.begin(), l0.end());
        LemmaReport rep = verify_lemma_hypotheses(fg, model.phi, model.modulus,
                                                  l0, model.g, cfg.n);
        s.expect(rep.ok(), label + ": " + rep.detail);

        // ... and must fail for the diagonal, which conjugation by g fixes.
        if (cfg.n >= 2) {
            ElemSet diag;
            for (int x = 0; x < cfg.base.order(); ++x) {
                WreathElement d;
                d.block.assign(cfg.n, x);
                d.shift = 0;
                diag.push_back(q.encode(d));
            }
            std::sort(diag.begin(), diag.end());
            LemmaReport drep = verify_lemma_hypotheses(
                fg, model.phi, model.modulus, diag, model.g, cfg.n);
            s.expect(drep.phi_ok && drep.power_central && !drep.kernel_splits,
                     label + ": diagonal copy must not split the kernel");
        }
    }
    return s.r;
}

SuiteResult suite_direct_product(const SelfTestOptions& opt) {
    Suite s("direct-product");
    const int max_order = opt.quick ? 8 : 12;

    // The cheap criterion agrees with the explicit product bijection on
    // every subgroup pair of every small group.
    for (const FiniteGroup& g : group_corpus_up_to_16()) {
        if (g.order() > max_order) continue;
        auto subs = g.all_subgroups();
        ElemSet whole(g.order());
        std::iota(whole.begin(), whole.end(), 0);
        std::string bad;
        for (std::size_t i = 0; i < subs.size() && bad.empty(); ++i)
            for (std::size_t j = i; j < subs.size(); ++j) {
                bool fast = check_direct_product(g, {subs[i], subs[j]});
                bool slow =
                    product_map_is_isomorphism(g, whole, {subs[i], subs[j]});
                if (fast != slow) {
                    bad = g.name() + ": pair (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") fast " +
                          std::to_string(fast) + " slow " +
                          std::to_string(slow);
                    break;
                }
            }
        s.expect(bad.empty(), bad);
    }

    // All subgroup triples of the elementary abelian group of order 8.
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const FiniteGroup e8 = FiniteGroup::direct_product(
        FiniteGroup::direct_product(c2, c2), c2, "C2xC2xC2");
    {
        auto subs = e8.all_subgroups();
        ElemSet whole(e8.order());
        std::iota(whole.begin(), whole.end(), 0);
        std::string bad;
        for (std::size_t i = 0; i < subs.size() && bad.empty(); ++i)
            for (std::size_t j = i; j < subs.size() && bad.empty(); ++j)
                for (std::size_t k = j; k < subs.size(); ++k) {
                    bool fast = check_direct_product(
                        e8, {subs[i], subs[j], subs[k]});
                    bool slow = product_map_is_isomorphism(
                        e8, whole, {subs[i], subs[j], subs[k]});
                    if (fast != slow) {
                        bad = "triple (" + std::to_string(i) + ", " +
                              std::to_string(j) + ", " + std::to_string(k) +
                              ")";
                        break;
                    }
                }
        s.expect(bad.empty(), "C2xC2xC2 " + bad);

        // Independent generators pass, a dependent triple fails both ways.
        int a = -1, b = -1, c = -1;
        for (int x = 0; x < e8.order(); ++x) {
            if (x == e8.identity()) continue;
            if (a < 0) {
                a = x;
            } else if (b < 0) {
                ElemSet got = e8.closure({a});
                if (!std::binary_search(got.begin(), got.end(), x)) b = x;
            } else if (c < 0) {
                ElemSet got = e8.closure({a, b});
                if (!std::binary_search(got.begin(), got.end(), x)) c = x;
            }
        }
        ElemSet sa = e8.closure({a}), sb = e8.closure({b}),
                sc = e8.closure({c});
        ElemSet sab = e8.closure({e8.mul(a, b)});
        s.expect(check_direct_product(e8, {sa, sb, sc}) &&
                     product_map_is_isomorphism(e8, whole, {sa, sb, sc}),
                 "independent generator triple must decompose C2xC2xC2");
        s.expect(!check_direct_product(e8, {sa, sb, sab}) &&
                     !product_map_is_isomorphism(e8, whole, {sa, sb, sab}),
                 "dependent triple must not decompose C2xC2xC2");
    }

    // Order-6 witness: products of a reflection subgroup and the rotation
    // subgroup cover the whole group, yet the decomposition is not direct.
    {
        const FiniteGroup s3 = FiniteGroup::symmetric3();
        int refl = -1, rot = -1;
        for (int x = 0; x < s3.order(); ++x) {
            if (refl < 0 && s3.element_order(x) == 2) refl = x;
            if (rot < 0 && s3.element_order(x) == 3) rot = x;
        }
        ElemSet A = s3.closure({refl}), B = s3.closure({rot});
        std::set<int> prods;
        for (int x : A)
            for (int y : B) prods.insert(s3.mul(x, y));
        ElemSet whole(s3.order());
        std::iota(whole.begin(), whole.end(), 0);
        s.expect(static_cast<int>(prods.size()) == s3.order(),
                 "reflection and rotation products must cover the group");
        s.expect(!check_direct_product(s3, {A, B}),
                 "S3 reported as C2 x C3 by the checker");
        s.expect(!product_map_is_isomorphism(s3, whole, {A, B}),
                 "S3 reported as C2 x C3 by the product map");
        s.expect(!groups_isomorphic(
                     s3, FiniteGroup::direct_product(c2, FiniteGroup::cyclic(3))),
                 "S3 confused with C6");
    }

    // Repeated factor degenerates.
    {
        const FiniteGroup v4 = FiniteGroup::direct_product(c2, c2, "C2xC2");
        int x = (0 == v4.identity()) ? 1 : 0;
        ElemSet a = v4.closure({x});
        ElemSet whole(v4.order());
        std::iota(whole.begin(), whole.end(), 0);
        s.expect(!check_direct_product(v4, {a, a}) &&
                     !product_map_is_isomorphism(v4, whole, {a, a}),
                 "repeated factor must not decompose C2xC2");
    }
    return s.r;
}

// Smallest rotation matching the sequence; every match is a multiple of it.
int first_period(const std::vector<std::string>& toks) {
    const int L = static_cast<int>(toks.size());
    for (int d = 1; d <= L; ++d) {
        bool match = true;
        for (int i = 0; i < L && match; ++i) match = toks[i] == toks[(i + d) % L];
        if (match) return d;
    }
    return L;
}

// Drops the value field from a decoration token.
std::string strip_value(const std::string& tok) {
    auto p = tok.find("v=");
    if (p == std::string::npos) return tok;
    auto q = tok.find(';', p);
    if (q == std::string::npos) return tok;
    return tok.substr(0, p) + tok.substr(q + 1);
}

SuiteResult suite_rotation_order(const SelfTestOptions& opt) {
    Suite s("rotation-order");
    std::mt19937_64 rng(opt.seed ^ 0x7777u);
    const bool skew = opt.mutations.skew_rotation_tokens;

    auto order_of = [&](std::vector<std::string> toks) {
        if (skew)
            for (auto& t : toks) t = strip_value(t);
        return rotation_order(toks);
    };

    const std::string A = "[v=1/3;c=1/0/0|F=|d=1]";
    const std::string B = "[v=2/3;c=0/1/0|F=|d=1]";
    const std::string C = "[v=1/5;c=0/0/1|F=|d=2]";
    const std::string D = "[v=4/5;c=0/0/1|F=|d=0]";
    s.expect(order_of({A, B, A, B, A, B}) == 3, "period two over six entries");
    s.expect(order_of({A, B, C, D}) == 1, "four distinct entries");
    s.expect(order_of({A, A, A, A}) == 4, "four constant entries");

    const int count = opt.quick ? 80 : 400;
    for (int t = 0; t < count; ++t) {
        const int p = 1 + static_cast<int>(rng() % 6);
        const int reps = 1 + static_cast<int>(rng() % 4);
        const int L = p * reps;
        const bool value_only = (t % 2 == 0);
        const int denom = 7 + static_cast<int>(rng() % 5);

        std::vector<std::string> period(p);
        for (int i = 0; i < p; ++i) {
            std::string core =
                "v=" + std::to_string(i + 1) + "/" + std::to_string(denom);
            std::string rest =
                value_only ? ";c=0/0/1|F={d=1;v=0;c=1/0/0}|d=2"
                           : ";c=0/0/1|F=|d=" + std::to_string(i);
            period[i] = "[" + core + rest + "]";
        }
        std::vector<std::string> toks(L);
        for (int i = 0; i < L; ++i) toks[i] = period[i % p];

        const int d0 = first_period(toks);
        const int got = order_of(toks);
        s.expect(d0 == p && got == L / d0,
                 "planted period " + std::to_string(p) + " repeated " +
                     std::to_string(reps) + ": order " + std::to_string(got) +
                     " vs " + std::to_string(L / p));
    }
    return s.r;
}

int marker_count(const ReebGraph& g) {
    int k = 0;
    for (const ReebNode& nd : g.nodes)
        if (nd.marker()) ++k;
    return k;
}

SuiteResult suite_fixtures(const SelfTestOptions& opt) {
    Suite s("fixtures");

    try {
        CircleFunction f = build_from_file(two_peak_file());
        OrbitReport r = analyze(f, opt.threads);
        s.expect(r.branch == Branch::CycleCase, "two-peak branch");
        s.expect(r.census.n_max == 1 && r.census.n_min == 1 &&
                     r.census.n_saddle == 2,
                 "two-peak census");
        s.expect(r.nodes == 4 && r.edges == 4 && r.betti == 1,
                 "two-peak graph shape");
        s.expect(r.cycle_length == 2 && r.winding == 0 && r.rotation == 1,
                 "two-peak cycle data");
        const std::vector<Rat> want{Rat(1, 10), Rat(3, 10), Rat(7, 10),
                                    Rat(9, 10)};
        s.expect(r.critical_values == want, "two-peak critical values");
        s.expect(r.result && render(*r.result) == "pi0S'(f|Q,X) x Z",
                 "two-peak result rendering");
        s.expect(marker_count(reeb_graph(f, opt.threads)) == 0,
                 "two-peak marker count");
    } catch (const Error& e) {
        s.expect(false, std::string("two-peak: ") + e.what());
    }

    try {
        CircleFunction f = build_from_file(single_bump_file());
        OrbitReport r = analyze(f, opt.threads);
        s.expect(r.branch == Branch::CycleCase, "single-bump branch");
        s.expect(r.census.n_max == 1 && r.census.n_min == 0 &&
                     r.census.n_saddle == 1,
                 "single-bump census");
        s.expect(r.nodes == 3 && r.edges == 3 && r.betti == 1,
                 "single-bump graph shape");
        s.expect(r.cycle_length == 2 && r.winding == 1 && r.rotation == 1,
                 "single-bump cycle data");
        const std::vector<Rat> want{Rat(2369, 3000), Rat(803, 1000)};
        s.expect(r.critical_values == want, "single-bump critical values");
        s.expect(marker_count(reeb_graph(f, opt.threads)) == 1,
                 "single-bump marker count");
    } catch (const Error& e) {
        s.expect(false, std::string("single-bump: ") + e.what());
    }

    try {
        CircleFunction f = build_from_file(doubled_bump_file());
        OrbitReport r = analyze(f, opt.threads);
        s.expect(r.branch == Branch::CycleCase, "doubled-bump branch");
        s.expect(r.census.n_max == 2 && r.census.n_min == 0 &&
                     r.census.n_saddle == 2,
                 "doubled-bump census");
        s.expect(r.nodes == 6 && r.edges == 6 && r.betti == 1,
                 "doubled-bump graph shape");
        s.expect(r.cycle_length == 4 && r.winding == 2 && r.rotation == 2,
                 "doubled-bump cycle data");
        const std::vector<Rat> want{Rat(2729, 3000), Rat(2809, 3000)};
        s.expect(r.critical_values == want, "doubled-bump critical values");
        s.expect(r.result && render(*r.result) == "pi0S'(f|Q,X) wr_2 Z",
                 "doubled-bump result rendering");
        s.expect(r.segments.size() == 2 &&
                     r.segments[0].code == r.segments[1].code,
                 "doubled-bump segment codes");
        s.expect(marker_count(reeb_graph(f, opt.threads)) == 2,
                 "doubled-bump marker count");

        std::string rep1 = render_report(analyze(f, 1));
        std::string rep4 = render_report(analyze(f, 4));
        s.expect(rep1 == rep4, "report differs across thread counts");
    } catch (const Error& e) {
        s.expect(false, std::string("doubled-bump: ") + e.what());
    }

    try {
        CircleFunction f = build_from_file(fibration_file());
        OrbitReport r = analyze(f, opt.threads);
        s.expect(r.branch == Branch::Fibration, "fibration branch");
        s.expect(r.census.total() == 0, "fibration census");
        s.expect(r.fiber_count == 1, "fibration fiber count");
    } catch (const Error& e) {
        s.expect(false, std::string("fibration: ") + e.what());
    }

    // Serialization closes: write, reparse, rebuild, identical function.
    const std::array<std::pair<const char*, FunctionFile>, 5> files = {
        {{"two-peak", two_peak_file()},
         {"single-bump", single_bump_file()},
         {"doubled-bump", doubled_bump_file()},
         {"fibration", fibration_file()},
         {"shared-level-tree", shared_level_tree_file()}}};
    for (const auto& [name, ff] : files) {
        try {
            FunctionFile back = parse_function_file(write_function_file(ff));
            CircleFunction f1 = build_from_file(ff);
            CircleFunction f2 = build_from_file(back);
            s.expect(f1.theta == f2.theta && f1.delta == f2.delta,
                     std::string(name) + " file roundtrip");
        } catch (const Error& e) {
            s.expect(false, std::string(name) + " roundtrip: " + e.what());
        }
    }
    return s.r;
}

}  // namespace

std::vector<SuiteResult> run_selftests(const SelfTestOptions& opt) {
    std::vector<SuiteResult> out;
    out.push_back(suite_index_sum(opt));
    out.push_back(suite_graph_betti(opt));
    out.push_back(suite_level_counts(opt));
    out.push_back(suite_wreath_axioms(opt));
    out.push_back(suite_xi_splitting(opt));
    out.push_back(suite_direct_product(opt));
    out.push_back(suite_rotation_order(opt));
    out.push_back(suite_fixtures(opt));
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(
        results.begin(), results.end(),
        [](const SuiteResult& r) { return r.failures == 0; });
}

std::string selftest_report(const SelfTestOptions& opt,
                            const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    os << "selftest seed: " << opt.seed << "\n";
    os << "mode: " << (opt.quick ? "quick" : "full") << "\n";
    for (const SuiteResult& r : results) {
        os << "suite " << r.name << ": " << r.cases << " cases, "
           << r.failures << (r.failures == 1 ? " failure" : " failures")
           << "\n";
        if (!r.counterexample.empty())
            os << "  first failure: " << r.counterexample << "\n";
    }
    os << "result: " << (all_passed(results) ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace reeb_orbit
