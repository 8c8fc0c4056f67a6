// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance              run every criterion
//   acceptance --criterion N

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgraph/bubble_algebra.hpp"
#include "cgraph/bubbles.hpp"
#include "cgraph/canonical.hpp"
#include "cgraph/cli.hpp"
#include "cgraph/dimensions.hpp"
#include "cgraph/dipoles.hpp"
#include "cgraph/homology.hpp"
#include "cgraph/jackets.hpp"
#include "cgraph/melonic.hpp"
#include "support.hpp"

using namespace cgraph;

namespace {

// Collects sub-check outcomes for one criterion.
struct Report {
    bool ok = true;
    std::vector<std::string> notes;

    void check(bool cond, const std::string& what) {
        if (!cond) ok = false;
        notes.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    }
    void info(const std::string& what) { notes.push_back("     " + what); }
};

std::string fmt(double x, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

long long top_bubbles(const ColoredGraph& g) {
    long long n = 0;
    for (ColorSet s : subsets_of_size(g.dimension(), g.dimension())) n += bubble_labels(g, s).count;
    return n;
}

// Graph corpus shared by criteria 3 and 4: 600 graphs per dimension.
const std::vector<ColoredGraph>& shared_corpus(int D) {
    static std::map<int, std::vector<ColoredGraph>> cache;
    auto it = cache.find(D);
    if (it == cache.end()) it = cache.emplace(D, support::corpus(D, 600, 1000 + static_cast<std::uint64_t>(D), 8)).first;
    return it->second;
}

void criterion_1(Report& r) {
    const int D = 3;
    const long expected[] = {1, 4, 22, 140};
    for (int p = 1; p <= 4; ++p) {
        mpz_class formula = count_melonic(D, p);
        auto trees = all_trees(D, p);
        std::set<std::string> dedup;
        for (const MelonTree& t : trees) dedup.insert(canonical_form(tree_to_graph(t)).key);
        std::size_t grown = support::grown_rooted_classes(D, p).size();
        r.check(formula == expected[p - 1] && dedup.size() == static_cast<std::size_t>(expected[p - 1]) &&
                    grown == static_cast<std::size_t>(expected[p - 1]),
                "p=" + std::to_string(p) + ": formula " + formula.get_str() + ", trees " + std::to_string(trees.size()) +
                    ", distinct graphs " + std::to_string(dedup.size()) + ", grown by insertion " + std::to_string(grown) +
                    ", expected " + std::to_string(expected[p - 1]));
    }
}

void criterion_2(Report& r) {
    SusceptibilityResult s = susceptibility_check(3, 500, 1000);
    r.check(std::abs(s.fit.exponent + 1.5) <= 0.015, "slope " + fmt(s.fit.exponent, 5) + " (target -1.500 +- 0.015)");
    double rel = std::abs(s.prefactor_exact - s.beta_formula) / s.beta_formula;
    r.check(rel <= 0.01, "C_p z_c^p p^{3/2} at p=1000 = " + fmt(s.prefactor_exact, 5) + " vs beta = " + fmt(s.beta_formula, 5) +
                             " (relative gap " + fmt(rel, 4) + ", tolerance 0.01)");
    r.info("fitted prefactor exp(intercept) = " + fmt(s.fit.prefactor, 5) + "; ratio beta / exact = " +
           fmt(s.beta_formula / s.prefactor_exact, 5));
    r.info("gamma = slope + 2 = " + fmt(s.gamma(), 5));
}

void criterion_3(Report& r) {
    long long graphs = 0, dipoles = 0, steps = 0, bad_bubble = 0, bad_ineq = 0, bad_dipole = 0, bad_routing = 0;
    for (int D : {3, 4}) {
        for (const ColoredGraph& g : shared_corpus(D)) {
            ++graphs;
            DegreeIdentities id = degree_identities(g);
            bad_bubble += id.bubble_identity_residual2 != 0;
            bad_ineq += id.inequality_slack < 0;
            for (int k = 1; k <= D; ++k)
                for (const Dipole& d : find_dipoles(g, k)) {
                    ++dipoles;
                    bad_dipole += 2 * id.omega != contraction_drop2(D, k) + 2 * degree(contract(g, d));
                }
            RoutingResult routed = route_to_core(g);
            replay_routing(g, routed.log, [&](std::size_t, const ColoredGraph& next, const Dipole&) {
                ++steps;
                bad_routing += degree(next) != id.omega;
            });
        }
    }
    r.check(graphs >= 1000, std::to_string(graphs) + " graphs (D = 3, 4)");
    r.check(bad_bubble == 0, "bubble identity residual nonzero on " + std::to_string(bad_bubble) + " graphs");
    r.check(bad_dipole == 0, "contraction identity violated on " + std::to_string(bad_dipole) + " of " + std::to_string(dipoles) + " contractions");
    r.check(bad_routing == 0, "degree changed on " + std::to_string(bad_routing) + " of " + std::to_string(steps) + " routing steps");
    r.check(bad_ineq == 0, "bubble inequality violated on " + std::to_string(bad_ineq) + " graphs");
}

void criterion_4(Report& r) {
    long long graphs = 0, bad_dd = 0, bad_ab = 0;
    for (int D : {3, 4}) {
        for (const ColoredGraph& g : shared_corpus(D)) {
            ++graphs;
            ChainComplex cc = chain_complex(g);
            for (int d = 2; d <= D; ++d)
                bad_dd += !(cc.boundary[static_cast<std::size_t>(d - 1)] * cc.boundary[static_cast<std::size_t>(d)]).is_zero();
            auto h = homology(cc);
            Abelianization a = abelianize(fundamental_group_presentation(g));
            bad_ab += a.rank != h[1].betti || a.torsion != h[1].torsion;
        }
    }
    r.check(bad_dd == 0, "boundary composite nonzero in " + std::to_string(bad_dd) + " cases over " + std::to_string(graphs) + " graphs");
    r.check(bad_ab == 0, "abelianized fundamental group differs from H1 on " + std::to_string(bad_ab) + " graphs");
    int samples = 0, bad_sphere = 0;
    for (int i = 0; i < 300; ++i) {
        Rng rng = make_rng(4, static_cast<std::uint64_t>(i));
        ColoredGraph g = tree_to_closed_graph(sample_uniform(3, 1 + static_cast<int>(uniform_below(rng, 40)), rng));
        ++samples;
        auto h = homology(g);
        bool sphere = h[0].betti == 1 && h[1].betti == 0 && h[2].betti == 0 && h[3].betti == 1;
        for (const auto& x : h) sphere = sphere && x.torsion.empty();
        bad_sphere += !sphere;
    }
    r.check(bad_sphere == 0, "melonic D=3 samples without sphere homology: " + std::to_string(bad_sphere) + " of " + std::to_string(samples));
}

void criterion_5(Report& r) {
    long long antisym = 0, jacobi = 0, closure = 0, bad_anti = 0, bad_jac = 0, bad_close = 0;
    auto jac = [&](const GraphChain& x, const GraphChain& y, const GraphChain& z) {
        GraphChain xy = bracket(x, y), yz = bracket(y, z), zx = bracket(z, x);
        GraphChain a = bracket(xy, z), b = bracket(yz, x), c = bracket(zx, y);
        for (const GraphChain* ch : {&xy, &yz, &zx, &a, &b, &c}) {
            ++closure;
            bad_close += !is_melonic_closed(*ch);
        }
        ++jacobi;
        bad_jac += !(a + b + c).is_zero();
    };
    for (int colors : {3, 4}) {
        auto basis = marked_melonic_basis(colors, 4);
        r.info(std::to_string(colors) + "-colored marked melonic graphs with <= 4 vertices: " + std::to_string(basis.size()));
        std::vector<GraphChain> chains;
        for (const MarkedGraph& m : basis) chains.push_back(GraphChain::basis(m));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                ++antisym;
                bad_anti += !(bracket(basis[i], basis[j]) + bracket(basis[j], basis[i])).is_zero();
            }
        for (const auto& x : chains)
            for (const auto& y : chains)
                for (const auto& z : chains) jac(x, y, z);
    }
    const long long exhaustive = jacobi;
    for (int i = 0; i < 1000; ++i) {
        Rng rng = make_rng(5, static_cast<std::uint64_t>(i));
        const int D = 2 + static_cast<int>(uniform_below(rng, 2));  // graphs with D+1 = 3 or 4 colors
        std::vector<GraphChain> xyz;
        for (int k = 0; k < 3; ++k) {
            ColoredGraph g = tree_to_closed_graph(sample_uniform(D, 1 + static_cast<int>(uniform_below(rng, 3)), rng));
            xyz.push_back(GraphChain::basis(make_marked(g, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(g.negative_count()))))));
        }
        ++antisym;
        bad_anti += !(bracket(xyz[0], xyz[1]) + bracket(xyz[1], xyz[0])).is_zero();
        jac(xyz[0], xyz[1], xyz[2]);
    }
    r.check(bad_anti == 0, "antisymmetry failures: " + std::to_string(bad_anti) + " of " + std::to_string(antisym));
    r.check(bad_jac == 0, "Jacobi failures: " + std::to_string(bad_jac) + " of " + std::to_string(jacobi) + " triples (" +
                              std::to_string(exhaustive) + " exhaustive, " + std::to_string(jacobi - exhaustive) + " random)");
    r.check(bad_close == 0, "non-melonic brackets: " + std::to_string(bad_close) + " of " + std::to_string(closure));
}

HausdorffOptions hausdorff_config() {
    HausdorffOptions o;
    o.dimension = 3;
    for (int k = 8; k <= 14; ++k) o.sizes.push_back(1 << k);
    o.samples = 200;
    o.sources = 4;
    o.seed = 1;
    return o;
}

SpectralOptions spectral_config() {
    SpectralOptions o;
    o.dimension = 3;
    o.p = 10000;
    o.samples = 200;
    o.t_min = 50;
    o.t_max = 500;
    o.seed = 1;
    return o;
}

void criterion_6(Report& r) {
    HausdorffResult h = hausdorff_estimate(hausdorff_config());
    for (const auto& row : h.rows)
        r.info("p=" + std::to_string(row.p) + " mean distance " + fmt(row.mean) + " +- " + fmt(row.stderr_) + ", rescaled " + fmt(row.rescaled));
    r.check(std::abs(h.offset.exponent - 0.5) <= 0.05,
            "distance exponent (fit A p^a + B) = " + fmt(h.offset.exponent) + " +- " + fmt(h.offset.stderr_) + ", offset B = " +
                fmt(h.offset.offset, 3) + " -> d_H = " + fmt(1 / h.offset.exponent, 3) + " (target 0.50 +- 0.05)");
    r.info("pure power-law fit exponent = " + fmt(h.power.exponent) + " +- " + fmt(h.power.stderr_));
    r.info("rescaled-mean spread over the top decade = " + fmt(h.top_decade_variation, 3));

    LambdaEstimate l = lambda_monte_carlo(3, 1000000, 1, 6);
    double rel = std::abs(l.mean - l.exact) / l.exact;
    r.check(rel < 0.01, "Lambda(w)/n at n=10^6 = " + fmt(l.mean, 6) + " vs 3/22 = " + fmt(l.exact, 6) + " (relative " + fmt(rel, 5) + ")");

    long long pairs = 0, violations = 0;
    int min_off = 1 << 30, max_off = -(1 << 30);
    for (int i = 0; i < 10; ++i) {
        Rng rng = make_rng(66, static_cast<std::uint64_t>(i));
        MelonTree t = sample_uniform(3, 1000, rng);
        BallMetric m(t);
        for (int s = 0; s < 10; ++s) {
            int a = static_cast<int>(uniform_below(rng, 1000));
            auto d = m.distances_from(a);
            for (int b = 0; b < 1000; ++b) {
                PairEstimate e = pair_distance_estimate(t, a, b);
                int dist = d[static_cast<std::size_t>(b)];
                ++pairs;
                violations += dist < e.lower || dist > e.upper;
                min_off = std::min(min_off, dist - e.estimate);
                max_off = std::max(max_off, dist - e.estimate);
            }
        }
    }
    r.check(violations == 0, "pair-distance bound violated on " + std::to_string(violations) + " of " + std::to_string(pairs) +
                                 " pairs at p=1000 (observed offsets " + std::to_string(min_off) + ".." + std::to_string(max_off) + ")");
}

void criterion_7(Report& r) {
    long long coefficients = 0, mismatches = 0;
    for (int i = 0; i < 50; ++i) {
        Rng rng = make_rng(7, static_cast<std::uint64_t>(i));
        MelonTree t = sample_uniform(3, 1 + static_cast<int>(uniform_below(rng, 20)), rng);
        ColoredGraph g = tree_to_graph(t);
        auto p1 = first_return_series(t, 40);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                auto brute = support::first_passage(g, x == 0, y == 0, 40);
                for (int k = 0; k <= 40; ++k) {
                    ++coefficients;
                    mismatches += p1.a[x][y][k] != brute[static_cast<std::size_t>(k)];
                }
            }
    }
    r.check(mismatches == 0, "series vs brute-force walk enumeration: " + std::to_string(mismatches) + " mismatches in " +
                                 std::to_string(coefficients) + " coefficients (50 trees, p <= 20, y^0..y^40)");

    SpectralResult s = spectral_estimate(spectral_config());
    r.check(std::abs(s.ds - 4.0 / 3.0) <= 0.15, "d_S = " + fmt(s.ds) + " +- " + fmt(s.ds_stderr) + " over t in [" +
                                                   std::to_string(s.options.t_min) + ", " + std::to_string(s.options.t_max) +
                                                   "], p = 10^4, 200 graphs (target 1.33 +- 0.15)");
    std::string eff;
    for (auto [t, e] : s.effective) eff += " t=" + std::to_string(t) + ":" + fmt(e, 3);
    r.info("effective d_S over [t, 2t]:" + eff);
    for (const auto& w : s.warnings) r.info("warning: " + w);

    long long odd_nonzero = 0;
    for (int i = 0; i < 20; ++i) {
        ColoredGraph g = tree_to_graph(sample_uniform(3, 200, 700 + static_cast<std::uint64_t>(i)));
        auto exact = walk_return_exact(g, true, 300);
        auto mc = walk_return_mc(g, true, 300, 2000, static_cast<std::uint64_t>(i));
        for (int t = 1; t <= 300; t += 2) odd_nonzero += exact[static_cast<std::size_t>(t)] != 0 || mc[static_cast<std::size_t>(t)].estimate != 0;
    }
    r.check(s.odd_mass == 0 && odd_nonzero == 0, "odd-time return mass: pooled " + fmt(s.odd_mass, 1) + ", nonzero odd entries " +
                                                     std::to_string(odd_nonzero) + " (exact and Monte-Carlo, 20 graphs)");
}

void criterion_8(Report& r) {
    int melonic = 0, not_supermelon = 0;
    for (int i = 0; i < 300; ++i) {
        Rng rng = make_rng(8, static_cast<std::uint64_t>(i));
        const int D = 3 + static_cast<int>(uniform_below(rng, 2));
        ColoredGraph g = tree_to_closed_graph(sample_uniform(D, 1 + static_cast<int>(uniform_below(rng, 60)), rng));
        RoutingResult routed = route_to_core(g);
        ++melonic;
        not_supermelon += !(routed.core.vertex_count() == 2 && isomorphic(routed.core, supermelon(D)));
    }
    r.check(not_supermelon == 0, "melonic samples not routed to the supermelon: " + std::to_string(not_supermelon) + " of " + std::to_string(melonic));

    long long routed_graphs = 0, non_core = 0, steps = 0, drift = 0;
    for (int D : {3, 4}) {
        for (const ColoredGraph& g : support::corpus(D, 300, 800 + static_cast<std::uint64_t>(D), 8)) {
            for (TreePolicy policy : {TreePolicy::breadth_first, TreePolicy::randomized}) {
                RoutingResult routed = route_to_core(g, policy, 88);
                ++routed_graphs;
                non_core += !is_core(routed.core);
                const long long conserved = g.positive_count() - top_bubbles(g);
                replay_routing(g, routed.log, [&](std::size_t, const ColoredGraph& next, const Dipole&) {
                    ++steps;
                    drift += next.positive_count() - top_bubbles(next) != conserved;
                });
            }
        }
    }
    r.check(non_core == 0, "routed graphs that are not core: " + std::to_string(non_core) + " of " + std::to_string(routed_graphs));
    r.check(drift == 0, "p - B^[D] changed on " + std::to_string(drift) + " of " + std::to_string(steps) + " 1-dipole contractions");
}

std::string cli_output(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (code != 0) throw std::runtime_error("cli failed: " + err.str());
    return out.str();
}

void criterion_9(Report& r) {
    HausdorffOptions h = hausdorff_config();
    h.jobs = 1;
    std::string h1 = hausdorff_estimate(h).to_csv();
    h.jobs = 4;
    std::string h2 = hausdorff_estimate(h).to_csv();
    r.check(h1 == h2, "Hausdorff CSV identical with 1 and 4 workers (" + std::to_string(h1.size()) + " bytes)");

    SpectralOptions s = spectral_config();
    s.jobs = 1;
    std::string s1 = spectral_estimate(s).to_csv();
    s.jobs = 3;
    std::string s2 = spectral_estimate(s).to_csv();
    r.check(s1 == s2, "spectral CSV identical with 1 and 3 workers (" + std::to_string(s1.size()) + " bytes)");

    std::vector<std::string> hc{"hausdorff", "--sizes", "256,512,1024,2048", "--samples", "50", "--seed", "9"};
    std::vector<std::string> sc{"spectral", "--p", "2000", "--samples", "40", "--window", "20:200", "--seed", "9"};
    std::vector<std::string> dc{"sample", "--dim", "3", "--p", "500", "-n", "200", "--format", "depths", "--seed", "9"};
    r.check(cli_output(hc) == cli_output(hc), "hausdorff command output repeats byte for byte");
    r.check(cli_output(sc) == cli_output(sc), "spectral command output repeats byte for byte");
    r.check(cli_output(dc) == cli_output(dc), "sample command output repeats byte for byte");
    LambdaEstimate a = lambda_monte_carlo(3, 100000, 3, 12), b = lambda_monte_carlo(3, 100000, 3, 12);
    r.check(format_double(a.mean) == format_double(b.mean), "Lambda Monte-Carlo repeats");
}

const std::map<int, std::pair<std::string, std::function<void(Report&)>>>& criteria() {
    static const std::map<int, std::pair<std::string, std::function<void(Report&)>>> table{
        {1, {"enumeration", criterion_1}},     {2, {"susceptibility", criterion_2}}, {3, {"degree identities", criterion_3}},
        {4, {"homology", criterion_4}},        {5, {"Lie algebra", criterion_5}},   {6, {"Hausdorff", criterion_6}},
        {7, {"spectral", criterion_7}},        {8, {"reduction", criterion_8}},     {9, {"determinism", criterion_9}},
    };
    return table;
}

bool run_one(int n) {
    const auto& [name, body] = criteria().at(n);
    Report r;
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& note : r.notes) std::cout << "  " << note << "\n";
    std::cout << "CRITERION " << n << " " << (r.ok ? "PASS" : "FAIL") << " " << name << " (" << fmt(secs, 1) << " s)" << std::endl;
    return r.ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> which;
    app.add_option("--criterion", which, "Criterion number(s) 1-9; default all")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);
    if (which.empty())
        for (const auto& [n, entry] : criteria()) which.push_back(n);
    bool ok = true;
    for (int n : which) ok = run_one(n) && ok;
    return ok ? 0 : 1;
}
