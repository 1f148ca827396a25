#include "plap/spectral.hpp"
#include "plap/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace plap {

namespace {

// |t|^{p-2} t with the p=1 sign convention; differences below 1e-12 are
// flattened to 0 for p < 2 so the sub-quadratic exponent never acts on
// numerical noise.
double phi(double p, double t) {
    if (p < 2.0 && std::abs(t) < 1e-12) return 0.0;
    if (p == 1.0) return t > 0 ? 1.0 : -1.0;
    if (p == 2.0) return t;
    return std::pow(std::abs(t), p - 2.0) * t;
}

void check_dim(const DirichletDomain& d, const std::vector<double>& u) {
    if (u.size() != d.size()) throw DimensionMismatch(d.size(), u.size());
}

std::vector<double> nu_dbl(const DirichletDomain& d) {
    std::vector<double> nu(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) nu[i] = rat_to_double(d.nu[i]);
    return nu;
}

std::vector<double> bw_dbl(const DirichletDomain& d) {
    std::vector<double> bw(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) bw[i] = rat_to_double(d.boundary[i]);
    return bw;
}

void normalize_p(const DirichletDomain& d, double p, std::vector<double>& u) {
    double n = p_norm(d, p, u);
    if (n == 0) throw ZeroFunction();
    for (double& x : u) x /= n;
}

// max_x |Δ_p u(x) + λ |u(x)|^{p-2} u(x)|
double defect(const DirichletDomain& d, double p, const std::vector<double>& u,
              double lambda) {
    std::vector<double> lap = apply_p_laplacian(d, p, u);
    double r = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        r = std::max(r, std::abs(lap[i] + lambda * phi(p, u[i])));
    return r;
}

// ∇E_p(u)_x = p [Σ_y μ φ_p(u_x − u_y) + bw_x φ_p(u_x)] = −p ν_x Δ_p u(x).
std::vector<double> energy_gradient(const DirichletDomain& d, double p,
                                    const std::vector<double>& u,
                                    const std::vector<double>& bw) {
    std::vector<double> g(u.size(), 0.0);
    for (const auto& e : d.edges) {
        double t = phi(p, u[e.u] - u[e.v]) * rat_to_double(e.mu);
        g[e.u] += t;
        g[e.v] -= t;
    }
    for (std::size_t i = 0; i < u.size(); ++i) g[i] += bw[i] * phi(p, u[i]);
    for (double& x : g) x *= p;
    return g;
}

struct Candidate {
    std::vector<double> u;
    double lambda = 0;
    double residual = 0;
};

double phi_prime(double p, double t) {
    if (p == 2.0) return 1.0;
    if (p == 1.0) return 0.0;
    if (p < 2.0 && std::abs(t) < 1e-12) return 0.0;
    return (p - 1.0) * std::pow(std::abs(t), p - 2.0);
}

// Damped Newton on the system {ν_x(Δ_p u + λ φ_p(u))_x = 0, ‖u‖_p^p = 1}.
// The line search above gets within a few digits of the eigenpair but the
// Rayleigh value resolves distance only quadratically, so it cannot reach
// tight residuals in double precision; Newton closes the gap.
void newton_polish(const DirichletDomain& d, double p, std::vector<double>& u,
                   double& lambda, const std::vector<double>& nu,
                   const std::vector<double>& bw, double maxMove = 0.05) {
    const std::size_t n = d.size();
    std::vector<double> bestU = u;
    double bestLam = lambda;
    double bestDef = defect(d, p, u, lambda);
    std::vector<double> curU = u;
    double curLam = lambda;
    for (int it = 0; it < 40; ++it) {
        Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n + 1, n + 1);
        Eigen::VectorXd F(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            double gi = -bw[i] * phi(p, curU[i]) + curLam * nu[i] * phi(p, curU[i]);
            double dii = -bw[i] * phi_prime(p, curU[i]) + curLam * nu[i] * phi_prime(p, curU[i]);
            F(i) = gi;
            J(i, i) = dii;
            J(i, n) = nu[i] * phi(p, curU[i]);
            J(n, i) = p * nu[i] * phi(p, curU[i]);
        }
        for (const auto& e : d.edges) {
            double t = curU[e.v] - curU[e.u];
            double f = phi(p, t) * rat_to_double(e.mu);
            double fp = phi_prime(p, t) * rat_to_double(e.mu);
            F(e.u) += f;
            F(e.v) -= f;
            J(e.u, e.u) -= fp;
            J(e.u, e.v) += fp;
            J(e.v, e.v) -= fp;
            J(e.v, e.u) += fp;
        }
        double nrm = 0;
        for (std::size_t i = 0; i < n; ++i)
            nrm += nu[i] * std::pow(std::abs(curU[i]), p);
        F(n) = nrm - 1.0;
        double fmax = F.cwiseAbs().maxCoeff();
        Eigen::VectorXd delta = J.colPivHouseholderQr().solve(-F);
        if (!delta.allFinite()) break;
        bool moved = false;
        double damp = 1.0;
        for (int bt = 0; bt < 30; ++bt) {
            std::vector<double> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = curU[i] + damp * delta(i);
            double lv = curLam + damp * delta(n);
            Eigen::VectorXd F2(n + 1);
            for (std::size_t i = 0; i < n; ++i)
                F2(i) = -bw[i] * phi(p, v[i]) + lv * nu[i] * phi(p, v[i]);
            for (const auto& e : d.edges) {
                double f = phi(p, v[e.v] - v[e.u]) * rat_to_double(e.mu);
                F2(e.u) += f;
                F2(e.v) -= f;
            }
            double nv = 0;
            for (std::size_t i = 0; i < n; ++i) nv += nu[i] * std::pow(std::abs(v[i]), p);
            F2(n) = nv - 1.0;
            if (F2.cwiseAbs().maxCoeff() < fmax) {
                curU = std::move(v);
                curLam = lv;
                moved = true;
                break;
            }
            damp *= 0.5;
        }
        if (!moved) break;
        double defNow = defect(d, p, curU, curLam);
        if (defNow < bestDef) {
            bestDef = defNow;
            bestU = curU;
            bestLam = curLam;
        }
        if (defNow < 1e-15) break;
    }
    // Keep the polish only if it stayed local; a runaway Newton step could
    // land on a different eigenpair. Callers that verify the result by an
    // independent certificate pass maxMove = infinity instead.
    double dist = 0;
    for (std::size_t i = 0; i < n; ++i) dist = std::max(dist, std::abs(bestU[i] - u[i]));
    if (dist < maxMove && bestDef <= defect(d, p, u, lambda)) {
        u = std::move(bestU);
        lambda = bestLam;
    }
}

Candidate descend(const DirichletDomain& d, double p, const SolverConfig& cfg,
                  std::vector<double> u) {
    auto bw = bw_dbl(d);
    auto nu = nu_dbl(d);
    normalize_p(d, p, u);
    double lam = rayleigh_quotient(d, p, u);
    double step = 0.1;
    unsigned stalled = 0;
    for (unsigned it = 0; it < cfg.maxIterations; ++it) {
        if (defect(d, p, u, lam) <= cfg.residualTol) break;
        // The line search converges slowly for p < 2, so try to finish with
        // Newton from time to time; the polish keeps its locality guard and
        // simply leaves u alone until the iterate is close enough.
        if (it % 200 == 199) {
            std::vector<double> pu = u;
            double pl = lam;
            newton_polish(d, p, pu, pl, nu, bw);
            normalize_p(d, p, pu);
            pl = rayleigh_quotient(d, p, pu);
            if (defect(d, p, pu, pl) <= cfg.residualTol) {
                u = std::move(pu);
                lam = pl;
                break;
            }
        }
        // Rayleigh gradient on the unit sphere: ∇E − λ ∇(‖u‖_p^p); the raw
        // energy gradient alone is not a descent direction once the iterate
        // is renormalized.
        std::vector<double> g = energy_gradient(d, p, u, bw);
        for (std::size_t i = 0; i < u.size(); ++i)
            g[i] -= lam * p * nu[i] * phi(p, u[i]);
        double lamBefore = lam;
        bool moved = false;
        for (int bt = 0; bt < 60; ++bt) {
            std::vector<double> v(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] - step * g[i];
            double n = p_norm(d, p, v);
            if (n > 0) {
                for (double& x : v) x /= n;
                double lv = rayleigh_quotient(d, p, v);
                if (lv < lam) {
                    u = std::move(v);
                    lam = lv;
                    moved = true;
                    break;
                }
            }
            step *= cfg.stepShrink;
        }
        if (!moved) break;
        step *= 1.5;
        // Once the Rayleigh value flatlines the iterate sits in a basin the
        // quotient can no longer resolve; hand over to Newton.
        if (lamBefore - lam > 1e-13 * std::max(1.0, std::abs(lam)))
            stalled = 0;
        else if (++stalled > 100)
            break;
    }
    double lamFinal = rayleigh_quotient(d, p, u);
    newton_polish(d, p, u, lamFinal, nu, bw);
    normalize_p(d, p, u);
    Candidate c;
    c.lambda = rayleigh_quotient(d, p, u);
    c.residual = defect(d, p, u, c.lambda);
    c.u = std::move(u);
    return c;
}

bool same_ray(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-6) return false;
    return true;
}

void sign_fix(std::vector<double>& u) {
    double s = 0;
    for (double x : u) s += x;
    if (s < 0)
        for (double& x : u) x = -x;
}

} // namespace

std::vector<double> apply_p_laplacian(const DirichletDomain& d, double p,
                                      const std::vector<double>& u) {
    if (p < 1) throw InvalidP(p, "p >= 1");
    check_dim(d, u);
    std::vector<double> out(u.size(), 0.0);
    for (const auto& e : d.edges) {
        double t = phi(p, u[e.v] - u[e.u]) * rat_to_double(e.mu);
        out[e.u] += t;
        out[e.v] -= t;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] += rat_to_double(d.boundary[i]) * phi(p, -u[i]);
        out[i] /= rat_to_double(d.nu[i]);
    }
    return out;
}

double dirichlet_energy(const DirichletDomain& d, double p, const std::vector<double>& u) {
    if (p < 1) throw InvalidP(p, "p >= 1");
    check_dim(d, u);
    double e = 0;
    for (const auto& ed : d.edges)
        e += rat_to_double(ed.mu) * std::pow(std::abs(u[ed.v] - u[ed.u]), p);
    for (std::size_t i = 0; i < u.size(); ++i)
        e += rat_to_double(d.boundary[i]) * std::pow(std::abs(u[i]), p);
    return e;
}

double p_norm(const DirichletDomain& d, double p, const std::vector<double>& u) {
    check_dim(d, u);
    double s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        s += rat_to_double(d.nu[i]) * std::pow(std::abs(u[i]), p);
    return std::pow(s, 1.0 / p);
}

double rayleigh_quotient(const DirichletDomain& d, double p, const std::vector<double>& u) {
    double n = p_norm(d, p, u);
    if (n == 0) throw ZeroFunction();
    return dirichlet_energy(d, p, u) / std::pow(n, p);
}

EigenPair first_eigenpair(const DirichletDomain& d, double p, const SolverConfig& cfg) {
    if (p <= 1) throw InvalidP(p, "p > 1");
    if (!is_connected(d)) throw DisconnectedDomain();
    std::size_t n = d.size();
    std::vector<Candidate> results;
    for (unsigned r = 0; r < std::max(1u, cfg.restarts); ++r) {
        std::mt19937_64 rng(cfg.rngSeed + r);
        std::uniform_real_distribution<double> noise(-0.3, 0.3);
        std::vector<double> u(n, 1.0);
        if (r > 0)
            for (double& x : u) x += noise(rng);
        results.push_back(descend(d, p, cfg, std::move(u)));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].lambda < results[best].lambda) best = i;

    EigenPair out;
    out.p = p;
    out.u = results[best].u;
    sign_fix(out.u);
    out.lambda = results[best].lambda;
    out.residual = results[best].residual;
    for (auto& c : results) {
        sign_fix(c.u);
        if (same_ray(c.u, out.u)) ++out.restartsAgreeing;
    }
    if (out.residual > cfg.residualTol) throw NoConvergence(out.residual, cfg.residualTol);
    bool positive = std::all_of(out.u.begin(), out.u.end(), [](double x) { return x > 0; });
    out.certified = positive;
    return out;
}

EigenPair max_eigenpair_bipartite(const DirichletDomain& d, double p,
                                  const SolverConfig& cfg) {
    if (p <= 1) throw InvalidP(p, "p > 1");
    if (!is_connected(d)) throw DisconnectedDomain();
    Bipartition parts = bipartition(d);
    std::size_t n = d.size();
    auto nu = nu_dbl(d);
    auto bw = bw_dbl(d);

    auto Q = [&](const std::vector<double>& g) {
        double q = 0;
        for (const auto& e : d.edges)
            q += rat_to_double(e.mu) *
                 std::pow(std::pow(g[e.u], 1.0 / p) + std::pow(g[e.v], 1.0 / p), p);
        for (std::size_t i = 0; i < n; ++i) q += bw[i] * g[i];
        return q;
    };
    auto gradQ = [&](const std::vector<double>& g) {
        std::vector<double> gr(bw);
        for (const auto& e : d.edges) {
            double su = std::pow(g[e.u], 1.0 / p), sv = std::pow(g[e.v], 1.0 / p);
            double c = rat_to_double(e.mu) * std::pow(su + sv, p - 1.0);
            gr[e.u] += c * std::pow(g[e.u], 1.0 / p - 1.0);
            gr[e.v] += c * std::pow(g[e.v], 1.0 / p - 1.0);
        }
        return gr;
    };
    double nunu = 0, nusum = 0;
    for (double x : nu) { nunu += x * x; nusum += x; }
    auto project = [&](std::vector<double>& g) {
        // affine reprojection onto Σ g ν = 1, falling back to rescale if it
        // would leave the positive cone
        for (double& x : g) x = std::max(x, 1e-14);
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += g[i] * nu[i];
        double shift = (s - 1.0) / nunu;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] - shift * nu[i] <= 0) { ok = false; break; }
        if (ok) {
            for (std::size_t i = 0; i < n; ++i) g[i] -= shift * nu[i];
        } else {
            for (double& x : g) x /= s;
        }
    };

    auto alternates = [&](const std::vector<double>& u) {
        for (const auto& e : d.edges)
            if (u[e.u] * u[e.v] >= 0) return false;
        return true;
    };

    struct MaxCandidate {
        std::vector<double> u;
        double lambda = 0;
        double def = std::numeric_limits<double>::infinity();
        bool ok = false;
    };

    // The simplex ascent alone converges only sublinearly when the maximizer
    // has components of very different magnitude, so a Newton polish of the
    // eigen-system is attempted along the way. A polished pair is accepted
    // on the certificate that singles out the maximum among all eigenpairs
    // of a bipartite domain: it solves the eigen-equation to tolerance and
    // strictly alternates on every edge (an interior critical point of the
    // concave program is its unique maximum).
    std::vector<MaxCandidate> candidates;
    for (unsigned r = 0; r < std::max(1u, cfg.restarts); ++r) {
        std::mt19937_64 rng(cfg.rngSeed + 1000 + r);
        std::uniform_real_distribution<double> noise(0.5, 1.5);
        std::vector<double> g(n, 1.0 / nusum);
        if (r > 0)
            for (double& x : g) x *= noise(rng);
        project(g);
        double q = Q(g);
        double step = 0.1;
        MaxCandidate cand;
        auto attempt = [&]() {
            std::vector<double> u(n);
            for (std::size_t i = 0; i < n; ++i) u[i] = std::pow(g[i], 1.0 / p);
            for (std::size_t i : parts.partTwo) u[i] = -u[i];
            normalize_p(d, p, u);
            double lam = rayleigh_quotient(d, p, u);
            newton_polish(d, p, u, lam, nu, bw, std::numeric_limits<double>::infinity());
            normalize_p(d, p, u);
            lam = rayleigh_quotient(d, p, u);
            double def = defect(d, p, u, lam);
            bool good = def <= cfg.residualTol && alternates(u);
            bool better = good ? (!cand.ok || lam > cand.lambda) : (!cand.ok && def < cand.def);
            if (better) {
                cand.u = std::move(u);
                cand.lambda = lam;
                cand.def = def;
                cand.ok = good;
            }
            return good;
        };
        for (unsigned it = 0; it < cfg.maxIterations; ++it) {
            std::vector<double> gr = gradQ(g);
            // project gradient onto the tangent space of the affine constraint
            double dot = 0;
            for (std::size_t i = 0; i < n; ++i) dot += gr[i] * nu[i];
            for (std::size_t i = 0; i < n; ++i) gr[i] -= dot / nunu * nu[i];
            double gnorm = 0;
            for (double x : gr) gnorm = std::max(gnorm, std::abs(x));
            if (gnorm < 1e-13) break;
            if (it % 50 == 0 && attempt()) break;
            bool moved = false;
            for (int bt = 0; bt < 60; ++bt) {
                std::vector<double> g2(n);
                for (std::size_t i = 0; i < n; ++i) g2[i] = g[i] + step * gr[i];
                project(g2);
                double q2 = Q(g2);
                if (q2 > q) {
                    g = std::move(g2);
                    q = q2;
                    moved = true;
                    break;
                }
                step *= cfg.stepShrink;
            }
            if (!moved) break;
            step *= 1.5;
        }
        if (!cand.ok) attempt();
        candidates.push_back(std::move(cand));
    }

    std::size_t best = candidates.size();
    double bestDef = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bestDef = std::min(bestDef, candidates[i].def);
        if (candidates[i].ok &&
            (best == candidates.size() || candidates[i].lambda > candidates[best].lambda))
            best = i;
    }
    if (best == candidates.size()) throw NoConvergence(bestDef, cfg.residualTol);

    auto oriented = [](std::vector<double> u) {
        if (u[0] < 0)
            for (double& x : u) x = -x;
        return u;
    };
    EigenPair out;
    out.p = p;
    out.u = oriented(candidates[best].u);
    out.lambda = candidates[best].lambda;
    out.residual = candidates[best].def;
    for (const auto& cand : candidates)
        if (cand.ok && same_ray(oriented(cand.u), out.u)) ++out.restartsAgreeing;
    out.certified = alternates(out.u);
    return out;
}

std::vector<double> involution(const DirichletDomain& d, const Bipartition& parts,
                               const std::vector<double>& u) {
    check_dim(d, u);
    std::vector<char> seen(d.size(), 0);
    for (std::size_t i : parts.partOne) {
        if (i >= d.size() || seen[i]) throw InvalidBipartition("bad index in partOne");
        seen[i] = 1;
    }
    for (std::size_t i : parts.partTwo) {
        if (i >= d.size() || seen[i]) throw InvalidBipartition("bad index in partTwo");
        seen[i] = 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw InvalidBipartition("parts do not cover the domain");
    std::vector<double> v(u);
    for (std::size_t i : parts.partTwo) v[i] = -v[i];
    return v;
}

std::vector<std::pair<double, double>>
monotonicity_profile(const DirichletDomain& d, const std::vector<double>& ps,
                     const SolverConfig& cfg) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        Rat deg = d.boundary[i];
        for (const auto& [w, m] : d.adj[i]) deg += m;
        if (deg != d.nu[i]) throw NotNormalized(d.ids[i]);
    }
    std::vector<std::pair<double, double>> rows;
    for (double p : ps) {
        EigenPair e = first_eigenpair(d, p, cfg);
        rows.push_back({p, p * std::pow(e.lambda, 1.0 / p)});
    }
    return rows;
}

DenseSpectrum p2_dense_spectrum(const DirichletDomain& d) {
    std::size_t n = d.size();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : d.edges) {
        double m = rat_to_double(e.mu);
        L(e.u, e.u) += m;
        L(e.v, e.v) += m;
        L(e.u, e.v) -= m;
        L(e.v, e.u) -= m;
    }
    Eigen::VectorXd sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        L(i, i) += rat_to_double(d.boundary[i]);
        sq(i) = std::sqrt(rat_to_double(d.nu[i]));
    }
    Eigen::MatrixXd B = sq.cwiseInverse().asDiagonal() * L * sq.cwiseInverse().asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
    DenseSpectrum out;
    for (std::size_t k = 0; k < n; ++k) {
        out.lambdas.push_back(es.eigenvalues()(k));
        Eigen::VectorXd v = sq.cwiseInverse().asDiagonal() * es.eigenvectors().col(k);
        std::vector<double> u(v.data(), v.data() + n);
        normalize_p(d, 2.0, u);
        sign_fix(u);
        out.vectors.push_back(std::move(u));
    }
    return out;
}

} // namespace plap
