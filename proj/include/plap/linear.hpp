#pragma once

#include "plap/graph.hpp"
#include "plap/limits.hpp"
#include "plap/radical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plap {

enum class Scheme { Physical, ModifiedPhysical, Normalized };
enum class Family { Tree, AntiTree };

struct ModelSpec {
    Family family = Family::Tree;
    /// Tree branching numbers m_0, m_1, …; the last entry repeats beyond
    /// the end of the list.
    std::vector<long long> branching;
    /// Anti-tree order a (sphere r has (r+1)^a vertices).
    int order = 1;
    Scheme scheme = Scheme::Physical;
};

/// Weighted half-line: vertex r carries ν_r, the edge {r, r+1} carries μ_r.
/// Both sequences are materialized through index `horizon`. Weights are
/// exact; the modified scheme stores values of the form rational·√integer.
struct LinearGraph {
    std::vector<Rat> nu;       // ν_0 … ν_horizon
    std::vector<QuadVal> mu;   // μ_0 … μ_horizon
    std::vector<Rat> ballVol;  // Σ_{i≤r} ν_i
    int horizon = 0;
    bool exactRational = true; // no radicals anywhere in mu
    std::optional<ModelSpec> spec;

    LinearGraph() = default;
    /// Direct sequence form for synthetic graphs; sizes must match and all
    /// entries must be positive.
    LinearGraph(std::vector<Rat> nuSeq, std::vector<QuadVal> muSeq);
};

/// Materializes the spherically symmetric model as its sphere-quotient
/// half-line under the requested weight scheme.
LinearGraph build_linear(const ModelSpec& spec, int horizon);

/// |∂B̲_r| / |B̲_r| = μ_r / Σ_{i≤r} ν_i, exact.
QuadVal ball_ratio(const LinearGraph& L, int r);

struct LinearCheeger {
    RadicalSum finiteMin;  // exact minimum over the horizon window
    int argmin = 0;        // ball radius, or annulus right end
    int argminK = -1;      // annulus left index (rootless case), −1 for balls
    LimitEstimate tail;    // escape-to-infinity behavior of the same family
    double h = 0;          // min(finiteMin, tail value when Converged)
};

/// Cheeger constant of the half-line by Dirichlet-free enumeration over the
/// structured minimizers: balls around the root when the subsets may
/// contain it, annuli otherwise. The tail estimate reports non-attained
/// infima.
LinearCheeger cheeger_linear(const LinearGraph& L, bool containsRoot);

/// liminf_r |∂B̲_r|/|B̲_r| via the difference-quotient acceleration
/// s_r = (μ_r − μ_{r−1})/ν_r, with a raw-ratio fallback; when the volume
/// does not diverge, the annulus formula g_r = inf_R (μ_r+μ_R)/vol(A_{r,R})
/// is used instead and is conclusive only if every inner infimum is
/// attained strictly inside the horizon.
LimitEstimate cheeger_at_infinity(const LinearGraph& L);

struct RefEntry {
    bool infinite = false;
    QuadVal value; // meaningful when finite
};

/// The six anti-tree constants (h, h_∞, h_M, h_{∞,M}, h_N, h_{∞,N}) in
/// closed form, for cross-checking the computed pipeline.
struct AntitreeRow {
    RefEntry h, hInf, hM, hInfM, hN, hInfN;
};
AntitreeRow antitree_reference_row(int a);

/// h and h_∞ of one model/scheme through the generic pipeline.
struct SchemeConstants {
    LinearCheeger ball;
    LimitEstimate atInfinity;
};
SchemeConstants model_constants(const ModelSpec& spec, int horizon);

/// Normalized-tree Cheeger constant at infinity: the generic pipeline
/// estimate, with the closed partial-product sequence
/// P_r / (2 Σ_{i<r} P_i + P_r) evaluated exactly as a second route whose
/// outcome lands in the note (and in *closedRoute when given).
LimitEstimate rapidly_branching_check(const std::vector<long long>& branching, int horizon,
                                      LimitEstimate* closedRoute = nullptr);

/// Tree constants through the generic pipeline, with every ball ratio
/// re-derived from the printed closed-form expressions and compared
/// exactly.
struct TreeCheeger {
    LinearCheeger ball;
    LimitEstimate atInfinity;
    bool closedFormAgrees = false;
    double h = 0;
};
TreeCheeger tree_cheeger(const std::vector<long long>& branching, Scheme scheme,
                         int horizon);

/// Materializes the actual tree/anti-tree out to `radius`+1, quotients it
/// by spheres through the symmetry machinery, and compares the result with
/// build_linear. Physical and Normalized schemes only (the modified weights
/// are irrational and have no exact ambient-graph representation here).
struct SphereConsistency {
    bool consistent = false;
    std::vector<std::string> mismatches;
    std::size_t vertexCount = 0;
};
SphereConsistency sphere_partition_consistency(const ModelSpec& spec, int radius);

std::string scheme_name(Scheme s);

} // namespace plap
