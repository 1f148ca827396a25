#include "plap/linear.hpp"
#include "plap/errors.hpp"
#include "plap/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace plap {

namespace {

void validate_spec(const ModelSpec& spec) {
    if (spec.family == Family::Tree) {
        if (spec.branching.empty()) throw InvalidSpec("tree needs branching numbers");
        for (long long m : spec.branching)
            if (m < 1) throw InvalidSpec("branching numbers must be positive");
    } else {
        if (spec.order < 1) throw InvalidSpec("anti-tree order must be positive");
    }
}

long long branch_at(const std::vector<long long>& m, long long i) {
    return m[std::min<std::size_t>(i, m.size() - 1)];
}

BigInt pow_a(long long x, int a) { return ipow(BigInt(x), static_cast<unsigned>(a)); }

// Deg = deg/ν of the physical model, constant on each sphere.
BigInt tree_Deg(const std::vector<long long>& m, int r) {
    return r == 0 ? BigInt(branch_at(m, 0)) : BigInt(branch_at(m, r)) + 1;
}

BigInt antitree_Deg(int a, int r) {
    return r == 0 ? pow_a(2, a) : pow_a(r, a) + pow_a(r + 2, a);
}

} // namespace

LinearGraph::LinearGraph(std::vector<Rat> nuSeq, std::vector<QuadVal> muSeq) {
    if (nuSeq.empty() || nuSeq.size() != muSeq.size())
        throw InvalidSpec("nu and mu sequences must be nonempty and equally long");
    for (const Rat& v : nuSeq)
        if (v <= 0) throw InvalidSpec("nu entries must be positive");
    for (const QuadVal& v : muSeq)
        if (v.sign() <= 0) throw InvalidSpec("mu entries must be positive");
    nu = std::move(nuSeq);
    mu = std::move(muSeq);
    horizon = static_cast<int>(nu.size()) - 1;
    Rat acc = 0;
    for (const Rat& v : nu) {
        acc += v;
        ballVol.push_back(acc);
    }
    exactRational = std::all_of(mu.begin(), mu.end(),
                                [](const QuadVal& q) { return q.is_rational(); });
}

LinearGraph build_linear(const ModelSpec& spec, int horizon) {
    validate_spec(spec);
    if (horizon < 1) throw InvalidSpec("horizon must be at least 1");
    std::vector<Rat> nu;
    std::vector<QuadVal> mu;
    if (spec.family == Family::Tree) {
        const auto& m = spec.branching;
        // partial products P_r = Π_{i≤r} m_i, with P_{-1} = 1
        std::vector<BigInt> P(horizon + 2);
        BigInt acc = 1;
        for (int r = 0; r <= horizon + 1; ++r) {
            acc *= branch_at(m, r);
            P[r] = acc;
        }
        auto Pm1 = [&](int r) { return r == 0 ? BigInt(1) : P[r - 1]; };
        for (int r = 0; r <= horizon; ++r) {
            switch (spec.scheme) {
                case Scheme::Physical:
                    nu.push_back(Rat(Pm1(r)));
                    mu.push_back(QuadVal(Rat(P[r])));
                    break;
                case Scheme::ModifiedPhysical: {
                    nu.push_back(Rat(Pm1(r)));
                    BigInt D = std::max(tree_Deg(m, r), tree_Deg(m, r + 1));
                    mu.push_back(QuadVal(Rat(P[r], D), D));
                    break;
                }
                case Scheme::Normalized:
                    nu.push_back(r == 0 ? Rat(P[0]) : Rat(Pm1(r) + P[r]));
                    mu.push_back(QuadVal(Rat(P[r])));
                    break;
            }
        }
    } else {
        int a = spec.order;
        for (int r = 0; r <= horizon; ++r) {
            BigInt sphere = pow_a(r + 1, a);
            BigInt muPhys = sphere * pow_a(r + 2, a);
            switch (spec.scheme) {
                case Scheme::Physical:
                    nu.push_back(Rat(sphere));
                    mu.push_back(QuadVal(Rat(muPhys)));
                    break;
                case Scheme::ModifiedPhysical: {
                    nu.push_back(Rat(sphere));
                    BigInt D = std::max(antitree_Deg(a, r), antitree_Deg(a, r + 1));
                    mu.push_back(QuadVal(Rat(muPhys, D), D));
                    break;
                }
                case Scheme::Normalized:
                    nu.push_back(Rat(sphere * antitree_Deg(a, r)));
                    mu.push_back(QuadVal(Rat(muPhys)));
                    break;
            }
        }
    }
    LinearGraph L(std::move(nu), std::move(mu));
    L.spec = spec;
    return L;
}

QuadVal ball_ratio(const LinearGraph& L, int r) {
    if (r < 0 || r > L.horizon) throw HorizonExceeded(r, L.horizon);
    return q_div(L.mu[r], L.ballVol[r]);
}

LimitEstimate cheeger_at_infinity(const LinearGraph& L) {
    int H = L.horizon;
    // Infinite total measure is what makes the ball formula valid; probe it
    // by volume growth across the half window.
    bool volumeDiverges = L.ballVol[H] > L.ballVol[H / 2] * Rat(1001, 1000);
    if (!volumeDiverges) {
        int outer = H / 2;
        std::vector<RadicalSum> g(outer + 1);
        bool interior = true;
        for (int r = 0; r <= outer; ++r) {
            RadicalSum best;
            int argR = -1;
            for (int R = r + 1; R <= H; ++R) {
                RadicalSum ratio = rs_scale(rs_add(RadicalSum(L.mu[r]), RadicalSum(L.mu[R])),
                                            Rat(1) / (L.ballVol[R] - L.ballVol[r]));
                if (argR < 0 || rs_less(ratio, best)) {
                    best = ratio;
                    argR = R;
                }
            }
            if (argR == H) interior = false;
            g[r] = best;
        }
        if (!interior) {
            LimitEstimate est;
            est.status = LimitStatus::Inconclusive;
            est.windowFirst = 0;
            est.windowLast = outer;
            est.note = "finite volume; annulus infimum not attained inside the horizon";
            for (int r = std::max(0, outer - 4); r <= outer; ++r)
                est.tailValues.push_back(g[r].to_double());
            return est;
        }
        LimitEstimate est =
            estimate_limit([&](int r) { return g[r]; }, 0, outer);
        est.note = "finite volume, annulus formula; " + est.note;
        return est;
    }

    // difference-quotient acceleration s_r = (μ_r − μ_{r−1})/ν_r
    LimitEstimate sc = estimate_limit(
        [&](int r) {
            return rs_scale(rs_sub(RadicalSum(L.mu[r]), RadicalSum(L.mu[r - 1])),
                            Rat(1) / L.nu[r]);
        },
        1, H);
    if (sc.status != LimitStatus::Inconclusive) {
        sc.note = "difference quotient; " + sc.note;
        return sc;
    }
    LimitEstimate raw =
        estimate_limit([&](int r) { return RadicalSum(ball_ratio(L, r)); }, 0, H);
    raw.note = "ball-ratio fallback; " + raw.note;
    return raw;
}

LinearCheeger cheeger_linear(const LinearGraph& L, bool containsRoot) {
    if (L.horizon < 2) throw InvalidSpec("horizon must be at least 2");
    LinearCheeger out;
    if (containsRoot) {
        QuadVal best = ball_ratio(L, 0);
        out.argmin = 0;
        for (int r = 1; r <= L.horizon; ++r) {
            QuadVal f = ball_ratio(L, r);
            if (q_less(f, best)) {
                best = f;
                out.argmin = r;
            }
        }
        out.finiteMin = RadicalSum(best);
    } else {
        for (int r = 1; r <= L.horizon; ++r) {
            for (int k = 0; k < r; ++k) {
                RadicalSum ratio = rs_scale(rs_add(RadicalSum(L.mu[k]), RadicalSum(L.mu[r])),
                                            Rat(1) / (L.ballVol[r] - L.ballVol[k]));
                if (out.argminK < 0 || rs_less(ratio, out.finiteMin)) {
                    out.finiteMin = ratio;
                    out.argminK = k;
                    out.argmin = r;
                }
            }
        }
    }
    out.tail = cheeger_at_infinity(L);
    out.h = out.finiteMin.to_double();
    if (out.tail.status == LimitStatus::Converged)
        out.h = std::min(out.h, *out.tail.value);
    return out;
}

AntitreeRow antitree_reference_row(int a) {
    if (a < 1) throw InvalidSpec("anti-tree order must be positive");
    AntitreeRow row;
    BigInt twoA = pow_a(2, a);
    BigInt D = 1 + pow_a(3, a);
    row.h.value = QuadVal(Rat(twoA));
    if (a == 1)
        row.hInf.value = QuadVal(Rat(2));
    else
        row.hInf.infinite = true;
    row.hM.value = QuadVal(Rat(twoA, D), D);
    if (a == 1)
        row.hInfM.value = QuadVal(Rat(0));
    else if (a == 2)
        row.hInfM.value = QuadVal(Rat(3, 2), 2);
    else
        row.hInfM.infinite = true;
    row.hN.value = QuadVal(Rat(0));
    row.hInfN.value = QuadVal(Rat(0));
    return row;
}

SchemeConstants model_constants(const ModelSpec& spec, int horizon) {
    LinearGraph L = build_linear(spec, horizon);
    SchemeConstants out;
    out.ball = cheeger_linear(L, true);
    out.atInfinity = cheeger_at_infinity(L);
    return out;
}

LimitEstimate rapidly_branching_check(const std::vector<long long>& branching, int horizon,
                                      LimitEstimate* closedRoute) {
    if (horizon < 10) throw InvalidSpec("horizon must be at least 10");
    ModelSpec spec;
    spec.family = Family::Tree;
    spec.branching = branching;
    spec.scheme = Scheme::Normalized;
    LimitEstimate est = cheeger_at_infinity(build_linear(spec, horizon));

    // closed route: P_r / (2 Σ_{i<r} P_i + P_r), exactly
    std::vector<Rat> closed;
    BigInt P = 1, sumBelow = 0;
    for (int r = 0; r <= horizon; ++r) {
        P *= branch_at(branching, r);
        closed.push_back(Rat(P, 2 * sumBelow + P));
        sumBelow += P;
    }
    LimitEstimate second =
        estimate_limit([&](int r) { return RadicalSum(closed[r]); }, 0, horizon);
    std::ostringstream note;
    note << est.note << "; closed partial-product route: ";
    switch (second.status) {
        case LimitStatus::Converged:
            note << "converged to " << *second.value;
            break;
        case LimitStatus::DivergesToInfinity:
            note << "diverges";
            break;
        case LimitStatus::Inconclusive:
            note << "inconclusive, last term " << rat_to_double(closed.back());
            break;
    }
    est.note = note.str();
    if (closedRoute) *closedRoute = second;
    return est;
}

TreeCheeger tree_cheeger(const std::vector<long long>& branching, Scheme scheme,
                         int horizon) {
    if (horizon < 2) throw InvalidSpec("horizon must be at least 2");
    ModelSpec spec;
    spec.family = Family::Tree;
    spec.branching = branching;
    spec.scheme = scheme;
    LinearGraph L = build_linear(spec, horizon);
    TreeCheeger out;
    out.ball = cheeger_linear(L, true);
    out.atInfinity = cheeger_at_infinity(L);
    out.h = out.ball.h;

    // re-derive every ball ratio from the printed closed forms
    std::vector<BigInt> P(horizon + 2);
    BigInt acc = 1;
    for (int r = 0; r <= horizon + 1; ++r) {
        acc *= branch_at(branching, r);
        P[r] = acc;
    }
    out.closedFormAgrees = true;
    BigInt volPhys = 0;  // Σ_{i≤r} P_{i-1}
    BigInt sumP = 0;     // Σ_{i<r} P_i
    for (int r = 0; r <= horizon; ++r) {
        volPhys += r == 0 ? BigInt(1) : P[r - 1];
        QuadVal closedVal;
        switch (scheme) {
            case Scheme::Physical:
                closedVal = QuadVal(Rat(P[r], volPhys));
                break;
            case Scheme::ModifiedPhysical:
                if (r == 0) {
                    long long m0 = branch_at(branching, 0), m1 = branch_at(branching, 1);
                    QuadVal left(Rat(m0, m1 + 1), BigInt(m1 + 1)); // m_0/√(m_1+1)
                    QuadVal right(Rat(1), BigInt(m0));             // √m_0
                    closedVal = q_less(left, right) ? left : right;
                } else {
                    BigInt D = std::max(branch_at(branching, r), branch_at(branching, r + 1)) + 1;
                    closedVal = QuadVal(Rat(P[r], D * volPhys), D);
                }
                break;
            case Scheme::Normalized:
                closedVal = QuadVal(Rat(P[r], 2 * sumP + P[r]));
                break;
        }
        if (!(closedVal == ball_ratio(L, r))) out.closedFormAgrees = false;
        sumP += P[r];
    }
    return out;
}

SphereConsistency sphere_partition_consistency(const ModelSpec& spec, int radius) {
    validate_spec(spec);
    if (spec.scheme == Scheme::ModifiedPhysical)
        throw InvalidSpec("modified weights are irrational; no exact ambient graph");
    if (radius < 1) throw InvalidSpec("radius must be at least 1");

    // sphere sizes out to radius+1
    std::vector<long long> size(radius + 2);
    long long total = 0;
    for (int r = 0; r <= radius + 1; ++r) {
        if (spec.family == Family::Tree)
            size[r] = r == 0 ? 1 : size[r - 1] * branch_at(spec.branching, r - 1);
        else
            size[r] = pow_a(r + 1, spec.order).convert_to<long long>();
        total += size[r];
        if (total > 400) throw TooLarge(static_cast<std::size_t>(total), 400);
    }

    // ν comes from the ambient (infinite) graph, so the frontier sphere
    // keeps its full degree even though its outward edges are cut off
    auto ambient_nu = [&](int r) -> Rat {
        if (spec.scheme == Scheme::Physical) return Rat(1);
        if (spec.family == Family::Tree) return Rat(tree_Deg(spec.branching, r));
        return Rat(antitree_Deg(spec.order, r));
    };

    WeightedGraph g;
    auto name = [](int r, long long k) {
        return "s" + std::to_string(r) + "_" + std::to_string(k);
    };
    for (int r = 0; r <= radius + 1; ++r)
        for (long long k = 0; k < size[r]; ++k) g.add_vertex(name(r, k), ambient_nu(r));
    for (int r = 0; r <= radius; ++r) {
        if (spec.family == Family::Tree) {
            long long m = branch_at(spec.branching, r);
            for (long long k = 0; k < size[r + 1]; ++k)
                g.add_edge(name(r, k / m), name(r + 1, k), Rat(1));
        } else {
            for (long long j = 0; j < size[r]; ++j)
                for (long long k = 0; k < size[r + 1]; ++k)
                    g.add_edge(name(r, j), name(r + 1, k), Rat(1));
        }
    }

    std::vector<std::string> omega;
    VertexPartition parts;
    std::size_t next = 0;
    for (int r = 0; r <= radius; ++r) {
        std::vector<std::size_t> cell;
        for (long long k = 0; k < size[r]; ++k) {
            omega.push_back(name(r, k));
            cell.push_back(next++);
        }
        parts.cells.push_back(std::move(cell));
    }
    DirichletDomain dom = build_domain(g, omega);
    DirichletDomain q = quotient(dom, parts);

    LinearGraph L = build_linear(spec, std::max(1, radius));
    SphereConsistency rep;
    rep.vertexCount = g.size();
    auto mismatch = [&](const std::string& s) { rep.mismatches.push_back(s); };
    for (int r = 0; r <= radius; ++r)
        if (q.nu[r] != L.nu[r])
            mismatch("nu differs at radius " + std::to_string(r));
    std::vector<Rat> qmu(radius, Rat(0));
    for (const auto& e : q.edges) {
        if (e.v != e.u + 1)
            mismatch("quotient has a non-path edge");
        else
            qmu[e.u] = e.mu;
    }
    for (int r = 0; r < radius; ++r)
        if (!L.mu[r].is_rational() || qmu[r] != L.mu[r].as_rational())
            mismatch("mu differs at radius " + std::to_string(r));
    for (int r = 0; r < radius; ++r)
        if (q.boundary[r] != 0) mismatch("interior sphere has boundary weight");
    if (!L.mu[radius].is_rational() || q.boundary[radius] != L.mu[radius].as_rational())
        mismatch("frontier boundary weight differs from mu at the cut radius");
    rep.consistent = rep.mismatches.empty();
    return rep;
}

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Physical: return "physical";
        case Scheme::ModifiedPhysical: return "modified";
        case Scheme::Normalized: return "normalized";
    }
    return "";
}

} // namespace plap
