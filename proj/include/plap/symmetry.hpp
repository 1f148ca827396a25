#pragma once

#include "plap/cheeger.hpp"
#include "plap/graph.hpp"
#include "plap/spectral.hpp"

#include <string>
#include <vector>

namespace plap {

/// Partition of the interior into disjoint nonempty cells, by dense index.
struct VertexPartition {
    std::vector<std::vector<std::size_t>> cells;
};

struct AutomorphismGroup {
    /// Each element is a permutation of the interior order: perm[i] is the
    /// image of vertex i. Contains the identity.
    std::vector<std::vector<std::size_t>> elements;
    std::size_t size() const { return elements.size(); }
};

/// All weight-preserving vertex bijections: ν, pairwise μ and boundary
/// weight invariant. Backtracking pruned by local signatures. Throws
/// TooLarge past the cap.
AutomorphismGroup enumerate_automorphisms(const DirichletDomain& d, std::size_t cap = 12);

/// Orbit cells of the group action, ordered by smallest member, members
/// ascending.
VertexPartition orbits(const AutomorphismGroup& g, std::size_t n);

struct EquitableReport {
    bool equitable = false;
    std::vector<std::string> violations;
};

/// Checks the weight-sum conditions a quotient needs: constant ν per cell,
/// constant cross-cell weight sums per (cell, cell) pair, constant
/// within-cell sum and boundary weight per cell.
EquitableReport validate_equitable(const DirichletDomain& d, const VertexPartition& parts);

/// Collapses cells to vertices: ν and boundary weights add, crossing edge
/// weights add, within-cell edges vanish. Cell ids are "[x]" with x the
/// lowest-index member. Throws NotEquitable when the sums are ambiguous.
DirichletDomain quotient(const DirichletDomain& d, const VertexPartition& parts);

/// Constant-on-cells extension of a function on the quotient back to Ω.
std::vector<double> lift(const VertexPartition& parts, std::size_t n,
                         const std::vector<double>& f);

struct InvarianceRow {
    double p = 2;
    double lambdaOriginal = 0;
    double lambdaQuotient = 0;
    bool agree = false;
};

struct InvarianceReport {
    std::vector<InvarianceRow> rows;
    Rat hOriginal, hQuotient;
    bool hEqual = false;
    bool cutIsCellUnion = false;  // some original Cheeger cut is a union of cells
    bool allAgree = false;
};

/// Eigenvalue rows per p (tolerance 1e-7), exact h on both sides, and the
/// cell-union property of the original minimizers.
InvarianceReport verify_quotient_invariance(const DirichletDomain& d,
                                            const VertexPartition& parts,
                                            const std::vector<double>& ps,
                                            const SolverConfig& cfg = {});

} // namespace plap
