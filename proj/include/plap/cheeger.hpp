#pragma once

#include "plap/graph.hpp"
#include "plap/spectral.hpp"

#include <cstdint>
#include <vector>

namespace plap {

struct CheegerResult {
    Rat h;
    /// All minimizing cuts, each sorted ascending, the list in
    /// lexicographic order.
    std::vector<std::vector<std::size_t>> cuts;
    std::uint64_t subsetsExamined = 0;
};

/// Exact minimum of |∂U|_μ/|U|_ν over every nonempty U ⊆ Ω, by Gray-code
/// enumeration with incremental boundary and volume updates. Throws
/// TooLarge beyond the cap.
CheegerResult cheeger_exact(const DirichletDomain& d, std::size_t cap = 24);

/// Same minimum restricted to unions of the given cells. Throws
/// InvalidPartition if the cells do not partition the domain.
CheegerResult cheeger_over_cells(const DirichletDomain& d,
                                 const std::vector<std::vector<std::size_t>>& cells,
                                 std::size_t cap = 24);

/// First eigenvalue of the Dirichlet 1-Laplacian, which equals the Cheeger
/// constant.
Rat lambda_1_1(const DirichletDomain& d, std::size_t cap = 24);

struct CoareaReport {
    double energy = 0;          // E₁(|f|)
    double coareaIntegral = 0;  // Σ_levels |∂{|f| > t}|_μ · Δt
    double l1Norm = 0;          // ‖f‖_{1,ν}
    double areaIntegral = 0;    // Σ_levels |{|f| > t}|_ν · Δt
    bool holds = false;
};

/// Level-set decomposition of u = |f|: checks E₁(u) against the co-area
/// sum and ‖f‖₁ against the layer-cake sum, both by exact level sorting.
CoareaReport coarea_verify(const DirichletDomain& d, const std::vector<double>& f);

struct CheegerBoundsRow {
    double p = 2;
    double lower = 0;   // 2^{p−1} (h/p)^p
    double lambda = 0;  // λ_{1,p}
    double h = 0;
    bool lowerHolds = false;
    bool upperHolds = false;  // λ_{1,p} ≤ h
};

/// Bracket 2^{p−1}(h/p)^p ≤ λ_{1,p} ≤ h per requested p. Requires
/// normalized weights ν = deg (NotNormalized otherwise); the lower end is
/// a diagnostic, the upper end always holds.
std::vector<CheegerBoundsRow> cheeger_bounds_report(const DirichletDomain& d,
                                                    const std::vector<double>& ps,
                                                    const SolverConfig& cfg = {});

} // namespace plap
