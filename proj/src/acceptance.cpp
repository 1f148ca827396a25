#include "plap/acceptance.hpp"

#include "plap/cheeger.hpp"
#include "plap/errors.hpp"
#include "plap/graph.hpp"
#include "plap/limits.hpp"
#include "plap/linear.hpp"
#include "plap/radical.hpp"
#include "plap/spectral.hpp"
#include "plap/symmetry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>

namespace plap {
namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

double now_seconds() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

// ---------------------------------------------------------------------------
// Certificate log. Every solver run made by the criteria goes through the
// logged_* wrappers below so the audit criterion can inspect positivity,
// alternation, and restart agreement of the whole batch afterwards.

struct SolveRecord {
    std::string where;
    bool isMax = false;
    bool certified = false;
    unsigned agreeing = 0;
    unsigned restarts = 0;
};

std::vector<SolveRecord> g_solveLog;

EigenPair logged_first(const DirichletDomain& d, double p, const std::string& where,
                       const SolverConfig& cfg = {}) {
    EigenPair e = first_eigenpair(d, p, cfg);
    g_solveLog.push_back({where, false, e.certified, e.restartsAgreeing, cfg.restarts});
    return e;
}

EigenPair logged_max(const DirichletDomain& d, double p, const std::string& where,
                     const SolverConfig& cfg = {}) {
    EigenPair e = max_eigenpair_bipartite(d, p, cfg);
    g_solveLog.push_back({where, true, e.certified, e.restartsAgreeing, cfg.restarts});
    return e;
}

// ---------------------------------------------------------------------------
// Fixtures.

// Path v0-v1-v2-v3-v4 with unit edge weights and vertex measure equal to
// the weighted degree; the domain is the middle three vertices.
DirichletDomain five_path_domain() {
    WeightedGraph g;
    g.add_vertex("v0", 1);
    g.add_vertex("v1", 2);
    g.add_vertex("v2", 2);
    g.add_vertex("v3", 2);
    g.add_vertex("v4", 1);
    for (int i = 0; i < 4; ++i)
        g.add_edge("v" + std::to_string(i), "v" + std::to_string(i + 1), 1);
    return build_domain(g, {"v1", "v2", "v3"});
}

// Eight-vertex host: a pendant path v1-v2-v3 feeding the triangle-ish block
// {v3,v4,v5} plus three outside vertices w1..w3, each adjacent to v4 and v5.
// The domain is {v1..v5}; the minimum ratio 1/3 is attained twice.
DirichletDomain nested_cut_domain() {
    WeightedGraph g;
    g.add_vertex("v1", 1);
    g.add_vertex("v2", 2);
    g.add_vertex("v3", 3);
    g.add_vertex("v4", 5);
    g.add_vertex("v5", 5);
    for (int i = 1; i <= 3; ++i) g.add_vertex("w" + std::to_string(i), 2);
    g.add_edge("v1", "v2", 1);
    g.add_edge("v2", "v3", 1);
    g.add_edge("v3", "v4", 1);
    g.add_edge("v3", "v5", 1);
    g.add_edge("v4", "v5", 1);
    for (int i = 1; i <= 3; ++i) {
        g.add_edge("w" + std::to_string(i), "v4", 1);
        g.add_edge("w" + std::to_string(i), "v5", 1);
    }
    return build_domain(g, {"v1", "v2", "v3", "v4", "v5"});
}

// Star with eight leaves, measure = degree; the domain keeps the center and
// six of the leaves, so the center carries Dirichlet weight 2.
DirichletDomain star_domain() {
    WeightedGraph g;
    g.add_vertex("c", 8);
    for (int i = 1; i <= 8; ++i) g.add_vertex("x" + std::to_string(i), 1);
    for (int i = 1; i <= 8; ++i) g.add_edge("c", "x" + std::to_string(i), 1);
    std::vector<std::string> omega = {"c"};
    for (int i = 1; i <= 6; ++i) omega.push_back("x" + std::to_string(i));
    return build_domain(g, omega);
}

// Ball of radius `radius` inside the order-1 anti-tree truncated one sphere
// further out, with counting measure and unit edge weights. Also returns the
// sphere cells of the domain in `cells`.
DirichletDomain antitree_ball_domain(int radius, std::vector<std::vector<std::size_t>>& cells) {
    WeightedGraph g;
    auto name = [](int r, int k) { return "r" + std::to_string(r) + "s" + std::to_string(k); };
    for (int r = 0; r <= radius + 1; ++r)
        for (int k = 0; k <= r; ++k) g.add_vertex(name(r, k), 1);
    for (int r = 0; r <= radius; ++r)
        for (int k = 0; k <= r; ++k)
            for (int j = 0; j <= r + 1; ++j) g.add_edge(name(r, k), name(r + 1, j), 1);
    std::vector<std::string> omega;
    cells.clear();
    std::size_t at = 0;
    for (int r = 0; r <= radius; ++r) {
        std::vector<std::size_t> cell;
        for (int k = 0; k <= r; ++k) {
            omega.push_back(name(r, k));
            cell.push_back(at++);
        }
        cells.push_back(cell);
    }
    return build_domain(g, omega);
}

// ---------------------------------------------------------------------------
// Seeded random domains.

double unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1p-53; }

struct AmbientDraw {
    WeightedGraph g;
    std::vector<std::pair<std::size_t, std::size_t>> treeEdges;
    std::size_t n = 0;
};

AmbientDraw draw_ambient(std::mt19937_64& rng, bool normalized, bool treeOnly) {
    AmbientDraw out;
    std::size_t n = 4 + rng() % 9;  // 4..12 vertices
    out.n = n;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t j = rng() % i;
        edges.emplace_back(j, i);
        out.treeEdges.emplace_back(j, i);
    }
    if (!treeOnly)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                bool have = false;
                for (auto& e : edges)
                    if (e == std::make_pair(i, j)) have = true;
                if (!have && unit(rng) < 0.22) edges.emplace_back(i, j);
            }
    std::vector<Rat> mu;
    mu.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
        mu.push_back(Rat(1 + (long long)(rng() % 6), 1 + (long long)(rng() % 4)));
    std::vector<Rat> nu(n);
    if (normalized) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
            nu[edges[e].first] += mu[e];
            nu[edges[e].second] += mu[e];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            nu[i] = Rat(1 + (long long)(rng() % 6), 1 + (long long)(rng() % 3));
    }
    for (std::size_t i = 0; i < n; ++i) out.g.add_vertex("a" + std::to_string(i), nu[i]);
    for (std::size_t e = 0; e < edges.size(); ++e)
        out.g.add_edge("a" + std::to_string(edges[e].first),
                       "a" + std::to_string(edges[e].second), mu[e]);
    return out;
}

DirichletDomain random_domain(std::mt19937_64& rng, std::size_t maxOmega, bool normalized,
                              bool treeOnly, bool properSubset) {
    AmbientDraw amb = draw_ambient(rng, normalized, treeOnly);
    std::size_t n = amb.n;
    std::size_t cap = std::min(maxOmega, properSubset ? n - 1 : n);
    std::size_t k = 2 + rng() % (cap - 1);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (int attempt = 0; attempt < 200; ++attempt) {
        if (attempt > 0 && attempt % 40 == 0 && k > 2) --k;
        for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
        std::vector<std::string> omega;
        for (std::size_t i = 0; i < k; ++i) omega.push_back("a" + std::to_string(order[i]));
        try {
            return build_domain(amb.g, omega);
        } catch (const DisconnectedDomain&) {
        }
    }
    auto& e = amb.treeEdges[rng() % amb.treeEdges.size()];
    return build_domain(amb.g, {"a" + std::to_string(e.first), "a" + std::to_string(e.second)});
}

// ---------------------------------------------------------------------------
// Shared small checks.

std::vector<double> counting_p_normalized(std::vector<double> u, double p) {
    double s = 0;
    for (double x : u) s += std::pow(std::abs(x), p);
    double scale = std::pow(s, 1.0 / p);
    for (double& x : u) x /= scale;
    return u;
}

double ray_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double dm = 0, dp = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dm = std::max(dm, std::abs(a[i] - b[i]));
        dp = std::max(dp, std::abs(a[i] + b[i]));
    }
    return std::min(dm, dp);
}

bool rs_equals_rat(const RadicalSum& a, const Rat& b) {
    return rs_sign(rs_sub(a, RadicalSum(QuadVal(b)))) == 0;
}

// ---------------------------------------------------------------------------
// Criterion 1: the 5-path example at p=4: both extremal eigenfunctions
// against the reference triples, per component, after renormalizing to a
// unit counting p-norm.

CriterionResult c1_example41() {
    CriterionResult r{1, "example41", false, "", 0};
    double t0 = now_seconds();
    DirichletDomain d = five_path_domain();
    EigenPair lo = logged_first(d, 4, "example41 first p=4");
    EigenPair hi = logged_max(d, 4, "example41 max p=4");
    std::vector<double> u1 = counting_p_normalized(lo.u, 4);
    std::vector<double> um = counting_p_normalized(hi.u, 4);
    const std::vector<double> refLo = {0.422207, 0.966286, 0.422207};
    const std::vector<double> refHi = {0.696725, -0.852721, 0.696725};
    double devLo = 0, devHi = 0;
    for (int i = 0; i < 3; ++i) {
        devLo = std::max(devLo, std::abs(u1[i] - refLo[i]));
        devHi = std::max(devHi, std::abs(um[i] - refHi[i]));
    }
    r.seconds = now_seconds() - t0;
    bool inTime = r.seconds < 1.0;
    r.passed = devLo <= 1e-5 && devHi <= 1e-5 && inTime;
    if (r.passed) {
        r.detail = fmt("u1 within %.2e, umax within %.2e of the reference triples", devLo, devHi);
    } else {
        // Diagnose how far the reference triple itself is from solving the
        // eigen-equation, using its own Rayleigh value.
        double lamRef = rayleigh_quotient(d, 4, refLo);
        std::vector<double> res = apply_p_laplacian(d, 4, refLo);
        double defRef = 0;
        for (int i = 0; i < 3; ++i) {
            double s = refLo[i];
            double phi = std::abs(s) * std::abs(s) * s;  // |s|^2 s at p=4
            defRef = std::max(defRef, std::abs(res[i] + lamRef * phi));
        }
        r.detail = fmt(
            "umax matches to %.2e; u1 deviates by %.4f in the outer components "
            "(computed %.6f vs reference %.6f; lambda1=%.12g, solver residual %.1e, "
            "while the reference triple leaves defect %.2e in the eigen-equation)",
            devHi, devLo, u1[0], refLo[0], lo.lambda, lo.residual, defRef);
        if (!inTime) r.detail += fmt("; runtime %.2fs exceeded 1s", r.seconds);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 2: h = 1/3 exactly on the nested-cut fixture, with both the
// two-vertex and the three-vertex minimizer reported.

CriterionResult c2_example51() {
    CriterionResult r{2, "example51", false, "", 0};
    double t0 = now_seconds();
    DirichletDomain d = nested_cut_domain();
    CheegerResult res = cheeger_exact(d);
    auto cut_ids = [&](const std::vector<std::size_t>& cut) {
        std::vector<std::string> ids;
        for (std::size_t i : cut) ids.push_back(d.ids[i]);
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    bool sawPair = false, sawTriple = false;
    for (const auto& cut : res.cuts) {
        auto ids = cut_ids(cut);
        if (ids == std::vector<std::string>{"v1", "v2"}) sawPair = true;
        if (ids == std::vector<std::string>{"v1", "v2", "v3"}) sawTriple = true;
    }
    r.seconds = now_seconds() - t0;
    bool inTime = r.seconds < 1.0;
    r.passed = res.h == Rat(1, 3) && sawPair && sawTriple && res.subsetsExamined == 31 && inTime;
    r.detail = fmt("h=%s over %llu subsets, %zu minimizing cuts (pair %s, triple %s)",
                   rat_to_string(res.h).c_str(),
                   (unsigned long long)res.subsetsExamined, res.cuts.size(),
                   sawPair ? "present" : "missing", sawTriple ? "present" : "missing");
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 3: the six isoperimetric constants of the anti-tree families of
// order 1, 2, 3 against their closed forms, at horizon 200.

CriterionResult c3_antitree_table() {
    CriterionResult r{3, "antitree-table", false, "", 0};
    double t0 = now_seconds();
    int ok = 0, total = 0;
    std::string bad;
    auto finite = [&](const char* label, int a, double got, const RefEntry& ref) {
        ++total;
        if (!ref.infinite && std::abs(got - ref.value.to_double()) <= 1e-9) {
            ++ok;
            return;
        }
        if (!bad.empty()) bad += "; ";
        bad += fmt("%s(a=%d) computed %.9g vs reference %.9g", label, a, got,
                   ref.value.to_double());
        if (got == 0 && ref.value.to_double() > 0)
            bad += " (the ball ratio decreases to 0 along the radius, so the infimum "
                   "over finite sets is 0 and is not attained)";
    };
    auto tail = [&](const char* label, int a, const LimitEstimate& est, const RefEntry& ref) {
        ++total;
        bool good;
        if (ref.infinite) {
            good = est.status == LimitStatus::DivergesToInfinity;
        } else {
            good = est.status == LimitStatus::Converged && est.value &&
                   std::abs(*est.value - ref.value.to_double()) <= 1e-9;
        }
        if (good) {
            ++ok;
            return;
        }
        if (!bad.empty()) bad += "; ";
        bad += fmt("%s(a=%d) %s vs reference %s", label, a,
                   est.value ? fmt("%.9g", *est.value).c_str() : "divergent/inconclusive",
                   ref.infinite ? "infinite" : fmt("%.9g", ref.value.to_double()).c_str());
    };
    for (int a = 1; a <= 3; ++a) {
        AntitreeRow ref = antitree_reference_row(a);
        ModelSpec spec;
        spec.family = Family::AntiTree;
        spec.order = a;
        spec.scheme = Scheme::Physical;
        SchemeConstants phys = model_constants(spec, 200);
        spec.scheme = Scheme::ModifiedPhysical;
        SchemeConstants mod = model_constants(spec, 200);
        spec.scheme = Scheme::Normalized;
        SchemeConstants norm = model_constants(spec, 200);
        finite("h", a, phys.ball.h, ref.h);
        tail("h_inf", a, phys.atInfinity, ref.hInf);
        finite("h_mod", a, mod.ball.h, ref.hM);
        tail("h_inf_mod", a, mod.atInfinity, ref.hInfM);
        finite("h_norm", a, norm.ball.h, ref.hN);
        tail("h_inf_norm", a, norm.atInfinity, ref.hInfN);
    }
    r.seconds = now_seconds() - t0;
    bool inTime = r.seconds < 5.0;
    r.passed = ok == total && inTime;
    r.detail = fmt("%d/%d table entries match at horizon 200", ok, total);
    if (!bad.empty()) {
        r.detail += "; ";
        r.detail += bad;
    }
    if (!inTime) r.detail += fmt("; runtime %.2fs exceeded 5s", r.seconds);
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 4: rapidly growing branching numbers drive the normalized
// constant at infinity to 1; constant branching 3 gives exactly 1/2.

CriterionResult c4_rapidly_branching() {
    CriterionResult r{4, "rapidly-branching", false, "", 0};
    double t0 = now_seconds();
    std::vector<long long> growing;
    for (long long i = 1; i <= 41; ++i) growing.push_back(i);  // m_i = i+1
    LimitEstimate grow = rapidly_branching_check(growing, 40, nullptr);
    bool growOk = grow.status == LimitStatus::Converged && grow.value &&
                  std::abs(*grow.value - 1.0) <= 1e-3;
    LimitEstimate tri = rapidly_branching_check({3}, 200, nullptr);
    bool triOk = tri.status == LimitStatus::Converged && tri.value &&
                 std::abs(*tri.value - 0.5) <= 1e-9 && tri.exactValue &&
                 rs_equals_rat(*tri.exactValue, Rat(1, 2));
    r.seconds = now_seconds() - t0;
    r.passed = growOk && triOk;
    r.detail = fmt("m_i=i+1 at horizon 40: %s (off 1 by %.2e); m=3: %s exactly",
                   grow.value ? fmt("%.9g", *grow.value).c_str() : "no value",
                   grow.value ? std::abs(*grow.value - 1.0) : -1.0,
                   tri.exactValue ? rs_to_string(*tri.exactValue).c_str() : "no exact value");
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 5: on seeded random domains, the 1-Laplacian value equals the
// enumerated Cheeger constant, every reported cut passes an independent
// indicator-function certificate, and the co-area identities hold for
// random functions.

CriterionResult c5_one_lap_suite() {
    CriterionResult r{5, "one-lap-suite", false, "", 0};
    double t0 = now_seconds();
    std::mt19937_64 rng(987001);
    int domains = 0, cutsCertified = 0, coareaOk = 0;
    std::string bad;
    for (int i = 0; i < 50; ++i) {
        DirichletDomain d = random_domain(rng, 10, false, false, false);
        ++domains;
        CheegerResult res = cheeger_exact(d);
        if (lambda_1_1(d) != res.h) {
            if (bad.empty()) bad = fmt("domain %d: lambda_1_1 != h", i);
            continue;
        }
        for (const auto& cut : res.cuts) {
            // Exact re-computation of the ratio from scratch, then the same
            // value through the p=1 energy of the indicator function.
            Rat ratio = edge_boundary(d, cut) / volume(d, cut);
            std::vector<double> ind(d.size(), 0.0);
            for (std::size_t v : cut) ind[v] = 1.0;
            double e1 = dirichlet_energy(d, 1, ind);
            double l1 = p_norm(d, 1, ind);
            double target = rat_to_double(res.h);
            bool exact = ratio == res.h;
            bool energy = std::abs(e1 / l1 - target) <= 1e-12 * std::max(1.0, target);
            if (exact && energy) {
                ++cutsCertified;
            } else if (bad.empty()) {
                bad = fmt("domain %d: cut certificate failed (exact %d, energy %d)", i,
                          (int)exact, (int)energy);
            }
        }
        for (int f = 0; f < 10; ++f) {
            std::vector<double> fn(d.size());
            bool nonzero = false;
            for (auto& x : fn) {
                x = (unit(rng) < 0.2) ? 0.0 : 2 * unit(rng) - 1;
                nonzero = nonzero || x != 0;
            }
            if (!nonzero) fn[0] = 1;
            CoareaReport rep = coarea_verify(d, fn);
            if (rep.holds) {
                ++coareaOk;
            } else if (bad.empty()) {
                bad = fmt("domain %d: coarea identity failed on function %d", i, f);
            }
        }
    }
    r.seconds = now_seconds() - t0;
    bool inTime = r.seconds < 30.0;
    r.passed = bad.empty() && coareaOk == 500 && inTime;
    r.detail = fmt("%d domains: lambda_1_1 == h on all, %d cuts certified, %d/500 coarea checks",
                   domains, cutsCertified, coareaOk);
    if (!bad.empty()) {
        r.detail += "; ";
        r.detail += bad;
    }
    if (!inTime) r.detail += fmt("; runtime %.2fs exceeded 30s", r.seconds);
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 6: eigenvalues and Cheeger data survive the quotient by a
// symmetry partition on three fixtures.

CriterionResult c6_quotient_invariance() {
    CriterionResult r{6, "quotient-invariance", false, "", 0};
    double t0 = now_seconds();
    const std::vector<double> ps = {1.5, 2, 4};
    std::string bad;
    auto judge = [&](const char* label, const InvarianceReport& rep) {
        if (rep.allAgree && rep.hEqual && rep.cutIsCellUnion) return true;
        if (!bad.empty()) bad += "; ";
        double worst = 0;
        for (const auto& row : rep.rows)
            worst = std::max(worst, std::abs(row.lambdaOriginal - row.lambdaQuotient));
        bad += fmt("%s: lambda gap %.2e, h %s, cell-union cut %s", label, worst,
                   rep.hEqual ? "equal" : "different", rep.cutIsCellUnion ? "yes" : "no");
        return false;
    };
    int good = 0;
    {
        DirichletDomain d = five_path_domain();
        AutomorphismGroup g = enumerate_automorphisms(d);
        VertexPartition parts = orbits(g, d.size());
        InvarianceReport rep = verify_quotient_invariance(d, parts, ps);
        if (g.size() == 2 && parts.cells.size() == 2 && judge("path reflection", rep)) ++good;
        else if (g.size() != 2 && bad.empty())
            bad = fmt("path reflection: expected 2 automorphisms, found %zu", g.size());
    }
    {
        DirichletDomain d = star_domain();
        AutomorphismGroup g = enumerate_automorphisms(d);
        VertexPartition parts = orbits(g, d.size());
        InvarianceReport rep = verify_quotient_invariance(d, parts, ps);
        if (g.size() == 720 && parts.cells.size() == 2 && judge("star leaves", rep)) ++good;
        else if (g.size() != 720 && bad.empty())
            bad = fmt("star leaves: expected 720 automorphisms, found %zu", g.size());
    }
    {
        std::vector<std::vector<std::size_t>> cells;
        DirichletDomain d = antitree_ball_domain(4, cells);
        InvarianceReport rep = verify_quotient_invariance(d, {cells}, ps);
        if (judge("anti-tree spheres R=4", rep)) ++good;
    }
    r.seconds = now_seconds() - t0;
    bool inTime = r.seconds < 10.0;
    r.passed = good == 3 && bad.empty() && inTime;
    r.detail = fmt("%d/3 fixtures invariant for p in {1.5, 2, 4}", good);
    if (!bad.empty()) {
        r.detail += "; ";
        r.detail += bad;
    }
    if (!inTime) r.detail += fmt("; runtime %.2fs exceeded 10s", r.seconds);
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 7: p |-> p * lambda^{1/p} is nondecreasing on normalized
// domains.

CriterionResult c7_monotonicity() {
    CriterionResult r{7, "monotonicity", false, "", 0};
    double t0 = now_seconds();
    std::mt19937_64 rng(555002);
    const std::vector<double> ps = {1.2, 1.5, 2, 3, 4};
    int good = 0;
    std::string bad;
    for (int i = 0; i < 20; ++i) {
        DirichletDomain d = random_domain(rng, 8, true, false, true);
        std::vector<double> prods;
        for (double p : ps) {
            EigenPair e = logged_first(d, p, fmt("monotonicity domain %d p=%g", i, p));
            prods.push_back(p * std::pow(e.lambda, 1.0 / p));
        }
        // The library profile must reproduce the same products.
        auto profile = monotonicity_profile(d, ps);
        bool sameAsProfile = true;
        for (std::size_t k = 0; k < ps.size(); ++k)
            if (std::abs(profile[k].second - prods[k]) > 1e-9 * std::max(1.0, prods[k]))
                sameAsProfile = false;
        bool monotone = true;
        for (std::size_t k = 1; k < prods.size(); ++k)
            if (prods[k] < prods[k - 1] - 1e-6) monotone = false;
        if (monotone && sameAsProfile) {
            ++good;
        } else if (bad.empty()) {
            bad = fmt("domain %d (|Omega|=%zu): ", i, d.size());
            if (!monotone) bad += "product sequence decreased";
            if (!sameAsProfile) bad += "profile disagreed with direct solves";
            for (double v : prods) bad += fmt(" %.9g", v);
        }
    }
    r.seconds = now_seconds() - t0;
    r.passed = good == 20;
    r.detail = fmt("%d/20 normalized domains nondecreasing over p in {1.2, 1.5, 2, 3, 4}", good);
    if (!bad.empty()) {
        r.detail += "; ";
        r.detail += bad;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 8: at p=2 both iterative solvers agree with a dense symmetric
// eigensolve.

CriterionResult c8_p2_oracle() {
    CriterionResult r{8, "p2-oracle", false, "", 0};
    double t0 = now_seconds();
    std::mt19937_64 rng(333008);
    int good = 0, bipartite = 0;
    std::string bad;
    for (int i = 0; i < 30; ++i) {
        DirichletDomain d = random_domain(rng, 8, false, i % 2 == 0, true);
        DenseSpectrum dense = p2_dense_spectrum(d);
        EigenPair lo = logged_first(d, 2, fmt("p2-oracle domain %d first", i));
        bool ok = std::abs(lo.lambda - dense.lambdas.front()) <= 1e-8 &&
                  ray_distance(lo.u, dense.vectors.front()) <= 1e-8;
        bool isBip = true;
        try {
            bipartition(d);
        } catch (const NotBipartite&) {
            isBip = false;
        }
        if (isBip) {
            ++bipartite;
            EigenPair hi = logged_max(d, 2, fmt("p2-oracle domain %d max", i));
            ok = ok && std::abs(hi.lambda - dense.lambdas.back()) <= 1e-8 &&
                 ray_distance(hi.u, dense.vectors.back()) <= 1e-8;
        }
        if (ok) {
            ++good;
        } else if (bad.empty()) {
            bad = fmt("domain %d (|Omega|=%zu) disagreed with the dense solve", i, d.size());
        }
    }
    r.seconds = now_seconds() - t0;
    r.passed = good == 30;
    r.detail = fmt("%d/30 domains match the dense solve to 1e-8 (%d bipartite, both solvers)",
                   good, bipartite);
    if (!bad.empty()) {
        r.detail += "; ";
        r.detail += bad;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 9: audit of every solver run the other criteria made.

CriterionResult c9_certificates() {
    CriterionResult r{9, "certificates", false, "", 0};
    double t0 = now_seconds();
    int firsts = 0, maxes = 0;
    std::string bad;
    for (const SolveRecord& rec : g_solveLog) {
        (rec.isMax ? maxes : firsts)++;
        if (!rec.certified && bad.empty())
            bad = fmt("%s: %s", rec.where.c_str(),
                      rec.isMax ? "maximum eigenfunction does not strictly alternate"
                                : "first eigenfunction not strictly positive");
        if (rec.agreeing != rec.restarts && bad.empty())
            bad = fmt("%s: only %u of %u restarts agreed", rec.where.c_str(), rec.agreeing,
                      rec.restarts);
    }
    r.seconds = now_seconds() - t0;
    if (g_solveLog.empty()) {
        r.passed = false;
        r.detail = "no solver runs logged; run together with the other criteria";
    } else {
        r.passed = bad.empty();
        r.detail = fmt(
            "%d first-eigenpair runs strictly positive, %d maximum runs strictly "
            "alternating, all restarts agreeing",
            firsts, maxes);
        if (!bad.empty()) r.detail = bad;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 10: on random linear graphs, full subset enumeration equals the
// structured ball and annulus minima.

CriterionResult c10_linear_enumeration() {
    CriterionResult r{10, "linear-enumeration", false, "", 0};
    double t0 = now_seconds();
    std::mt19937_64 rng(424200);
    const int n = 18;
    int good = 0;
    std::string bad;
    for (int i = 0; i < 10; ++i) {
        std::vector<long long> nuI(n), muI(n);
        std::vector<Rat> nu(n);
        std::vector<QuadVal> mu(n);
        for (int v = 0; v < n; ++v) {
            nuI[v] = 1 + (long long)(rng() % 9);
            muI[v] = 1 + (long long)(rng() % 9);
            nu[v] = Rat(nuI[v]);
            mu[v] = QuadVal(Rat(muI[v]));
        }
        LinearGraph L(nu, mu);
        LinearCheeger withRoot = cheeger_linear(L, true);
        LinearCheeger without = cheeger_linear(L, false);
        // Exhaustive minima over all nonempty subsets, split by whether the
        // subset contains vertex 0. Small integer weights keep this in
        // 64-bit arithmetic; ratios compare by cross multiplication.
        long long rootNum = -1, rootDen = 1, offNum = -1, offDen = 1;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            long long vol = 0, bnd = 0;
            for (int v = 0; v < n; ++v) {
                bool inV = (mask >> v) & 1;
                bool inNext = v + 1 < n && ((mask >> (v + 1)) & 1);
                if (inV) vol += nuI[v];
                if (inV != inNext) bnd += muI[v];
            }
            long long& num = (mask & 1) ? rootNum : offNum;
            long long& den = (mask & 1) ? rootDen : offDen;
            if (num < 0 || bnd * den < num * vol) {
                num = bnd;
                den = vol;
            }
        }
        bool ok = rs_equals_rat(withRoot.finiteMin, Rat(rootNum, rootDen)) &&
                  rs_equals_rat(without.finiteMin, Rat(offNum, offDen));
        if (ok) {
            ++good;
        } else if (bad.empty()) {
            bad = fmt("graph %d: structured minima %s / %s vs exhaustive %lld/%lld / %lld/%lld",
                      i, rs_to_string(withRoot.finiteMin).c_str(),
                      rs_to_string(without.finiteMin).c_str(), rootNum, rootDen, offNum, offDen);
        }
    }
    r.seconds = now_seconds() - t0;
    r.passed = good == 10;
    r.detail = fmt("%d/10 linear graphs: ball and annulus minima match exhaustive enumeration",
                   good);
    if (!bad.empty()) {
        r.detail += "; ";
        r.detail += bad;
    }
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& only) {
    struct Entry {
        const char* name;
        CriterionResult (*fn)();
    };
    static const Entry entries[] = {
        {"example41", c1_example41},
        {"example51", c2_example51},
        {"antitree-table", c3_antitree_table},
        {"rapidly-branching", c4_rapidly_branching},
        {"one-lap-suite", c5_one_lap_suite},
        {"quotient-invariance", c6_quotient_invariance},
        {"monotonicity", c7_monotonicity},
        {"p2-oracle", c8_p2_oracle},
        {"certificates", c9_certificates},
        {"linear-enumeration", c10_linear_enumeration},
    };
    std::set<std::string> want(only.begin(), only.end());
    for (const std::string& name : want) {
        bool known = false;
        for (const Entry& e : entries)
            if (name == e.name) known = true;
        if (!known) throw std::invalid_argument("unknown criterion: " + name);
    }
    g_solveLog.clear();
    std::vector<CriterionResult> out;
    for (const Entry& e : entries) {
        if (!want.empty() && !want.count(e.name)) continue;
        out.push_back(e.fn());
    }
    return out;
}

} // namespace plap
