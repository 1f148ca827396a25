#pragma once

#include "plap/graph.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace plap {

struct SolverConfig {
    unsigned maxIterations = 50000;
    double residualTol = 1e-9;
    double stepShrink = 0.5;
    unsigned restarts = 5;
    std::uint64_t rngSeed = 0;
};

struct EigenPair {
    double p = 2;
    double lambda = 0;
    std::vector<double> u;    // indexed by domain order, ‖u‖_{p,ν} = 1
    double residual = 0;
    unsigned restartsAgreeing = 0;
    bool certified = false;
};

/// x ↦ (1/ν_x)[Σ_{y∼x} μ_xy φ_p(u(y)−u(x)) − bw(x) φ_p(u(x))] with
/// φ_p(t) = |t|^{p−2} t, and at p=1 the convention φ_1 = sign, sign(0)=0.
std::vector<double> apply_p_laplacian(const DirichletDomain& d, double p,
                                      const std::vector<double>& u);

/// E_p(u) = Σ_edges μ|u_v − u_u|^p + Σ_x bw(x)|u(x)|^p.
double dirichlet_energy(const DirichletDomain& d, double p, const std::vector<double>& u);

/// (Σ_x ν_x |u(x)|^p)^{1/p}.
double p_norm(const DirichletDomain& d, double p, const std::vector<double>& u);

/// E_p(u) / ‖u‖_{p,ν}^p. Throws ZeroFunction on u ≡ 0.
double rayleigh_quotient(const DirichletDomain& d, double p, const std::vector<double>& u);

/// Smallest eigenvalue, by projected gradient descent on the ν-weighted
/// unit p-sphere with backtracking and seeded restarts. The result is
/// strictly positive and certified when the residual passes.
EigenPair first_eigenpair(const DirichletDomain& d, double p, const SolverConfig& cfg = {});

/// Largest eigenvalue of a bipartite domain, through the concave program
/// max Q_p(g) over {g > 0, Σ g_x ν_x = 1} with
/// Q_p(g) = Σ_edges μ (g_u^{1/p} + g_v^{1/p})^p + Σ_x bw(x) g_x,
/// then u = ±g^{1/p} with alternating signs from the two-coloring.
EigenPair max_eigenpair_bipartite(const DirichletDomain& d, double p,
                                  const SolverConfig& cfg = {});

/// Negates u on parts.partTwo. Throws InvalidBipartition if parts do not
/// partition the domain.
std::vector<double> involution(const DirichletDomain& d, const Bipartition& parts,
                               const std::vector<double>& u);

/// Rows (p, p·λ_{1,p}^{1/p}) for each requested p; nondecreasing when the
/// domain carries normalized weights ν = deg (checked exactly, else
/// NotNormalized).
std::vector<std::pair<double, double>>
monotonicity_profile(const DirichletDomain& d, const std::vector<double>& ps,
                     const SolverConfig& cfg = {});

/// All p=2 eigenvalues of Δ_2 u = −λ u (ascending) with ν-normalized,
/// sign-fixed eigenvectors, by a dense symmetric solve. Oracle for the
/// iterative solvers.
struct DenseSpectrum {
    std::vector<double> lambdas;
    std::vector<std::vector<double>> vectors;
};
DenseSpectrum p2_dense_spectrum(const DirichletDomain& d);

} // namespace plap
