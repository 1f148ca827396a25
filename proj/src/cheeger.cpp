#include "plap/cheeger.hpp"
#include "plap/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace plap {

namespace {

std::vector<std::size_t> mask_to_set(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) out.push_back(i);
    return out;
}

// Walks all nonempty subsets in Gray-code order, maintaining boundary and
// volume incrementally; collects every exact minimizer of boundary/volume.
CheegerResult enumerate_cuts(std::size_t n, const std::vector<Rat>& nu,
                             const std::vector<Rat>& bw,
                             const std::vector<std::vector<std::pair<std::size_t, Rat>>>& adj) {
    std::uint64_t mask = 0;
    Rat boundary = 0, vol = 0;
    Rat bestNum, bestDen; // h = bestNum / bestDen, invalid until first subset
    bool haveBest = false;
    std::vector<std::uint64_t> argmin;
    const std::uint64_t total = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t k = 1; k <= total; ++k) {
        std::size_t i = std::countr_zero(k); // bit flipped between g(k-1), g(k)
        bool entering = !(mask >> i & 1);
        mask ^= std::uint64_t{1} << i;
        if (entering) {
            vol += nu[i];
            boundary += bw[i];
            for (const auto& [j, m] : adj[i])
                boundary += (mask >> j & 1) ? -m : m;
        } else {
            vol -= nu[i];
            boundary -= bw[i];
            for (const auto& [j, m] : adj[i])
                boundary -= (mask >> j & 1) ? -m : m;
        }
        // compare boundary/vol with bestNum/bestDen by cross multiplication
        if (!haveBest || boundary * bestDen < bestNum * vol) {
            bestNum = boundary;
            bestDen = vol;
            haveBest = true;
            argmin.assign(1, mask);
        } else if (boundary * bestDen == bestNum * vol) {
            argmin.push_back(mask);
        }
    }
    CheegerResult out;
    out.h = Rat(bestNum) / bestDen;
    out.subsetsExamined = total;
    for (std::uint64_t m : argmin) out.cuts.push_back(mask_to_set(m, n));
    std::sort(out.cuts.begin(), out.cuts.end());
    return out;
}

} // namespace

CheegerResult cheeger_exact(const DirichletDomain& d, std::size_t cap) {
    if (d.size() > cap) throw TooLarge(d.size(), cap);
    return enumerate_cuts(d.size(), d.nu, d.boundary, d.adj);
}

CheegerResult cheeger_over_cells(const DirichletDomain& d,
                                 const std::vector<std::vector<std::size_t>>& cells,
                                 std::size_t cap) {
    if (cells.empty()) throw InvalidPartition("no cells");
    if (cells.size() > cap) throw TooLarge(cells.size(), cap);
    std::vector<int> cellOf(d.size(), -1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].empty()) throw InvalidPartition("empty cell");
        for (std::size_t i : cells[c]) {
            if (i >= d.size()) throw InvalidPartition("index out of range");
            if (cellOf[i] != -1) throw InvalidPartition("cells overlap");
            cellOf[i] = static_cast<int>(c);
        }
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        if (cellOf[i] == -1) throw InvalidPartition("cells do not cover the domain");

    // Collapse to one pseudo-vertex per cell. Crossing weights add up;
    // within-cell edges never contribute to a union-of-cells boundary.
    std::size_t nc = cells.size();
    std::vector<Rat> nu(nc, Rat(0)), bw(nc, Rat(0));
    std::vector<std::map<std::size_t, Rat>> cross(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t i : cells[c]) {
            nu[c] += d.nu[i];
            bw[c] += d.boundary[i];
        }
    }
    for (const auto& e : d.edges) {
        std::size_t a = cellOf[e.u], b = cellOf[e.v];
        if (a != b) {
            cross[a][b] += e.mu;
            cross[b][a] += e.mu;
        }
    }
    std::vector<std::vector<std::pair<std::size_t, Rat>>> adj(nc);
    for (std::size_t c = 0; c < nc; ++c)
        for (const auto& [j, m] : cross[c]) adj[c].push_back({j, m});

    CheegerResult coarse = enumerate_cuts(nc, nu, bw, adj);
    CheegerResult out;
    out.h = coarse.h;
    out.subsetsExamined = coarse.subsetsExamined;
    for (const auto& cellSet : coarse.cuts) {
        std::vector<std::size_t> cut;
        for (std::size_t c : cellSet) cut.insert(cut.end(), cells[c].begin(), cells[c].end());
        std::sort(cut.begin(), cut.end());
        out.cuts.push_back(std::move(cut));
    }
    std::sort(out.cuts.begin(), out.cuts.end());
    return out;
}

Rat lambda_1_1(const DirichletDomain& d, std::size_t cap) {
    return cheeger_exact(d, cap).h;
}

CoareaReport coarea_verify(const DirichletDomain& d, const std::vector<double>& f) {
    if (f.size() != d.size()) throw DimensionMismatch(d.size(), f.size());
    std::vector<double> u(f.size());
    bool allZero = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        u[i] = std::abs(f[i]);
        if (u[i] != 0) allZero = false;
    }
    if (allZero) throw ZeroFunction();

    CoareaReport rep;
    rep.energy = dirichlet_energy(d, 1.0, u);
    rep.l1Norm = p_norm(d, 1.0, u);

    // distinct levels descending; {u > t} is constant between consecutive
    // levels, so both integrals are finite sums
    std::vector<double> levels(u);
    levels.push_back(0.0);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        double lo = levels[k], hi = levels[k + 1];
        std::vector<std::size_t> super;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] > lo) super.push_back(i);
        rep.coareaIntegral += rat_to_double(edge_boundary(d, super)) * (hi - lo);
        rep.areaIntegral += rat_to_double(volume(d, super)) * (hi - lo);
    }
    double scale = std::max({rep.energy, rep.l1Norm, 1e-300});
    rep.holds = std::abs(rep.energy - rep.coareaIntegral) <= 1e-12 * scale &&
                std::abs(rep.l1Norm - rep.areaIntegral) <= 1e-12 * scale;
    return rep;
}

std::vector<CheegerBoundsRow> cheeger_bounds_report(const DirichletDomain& d,
                                                    const std::vector<double>& ps,
                                                    const SolverConfig& cfg) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        Rat deg = d.boundary[i];
        for (const auto& [w, m] : d.adj[i]) deg += m;
        if (deg != d.nu[i]) throw NotNormalized(d.ids[i]);
    }
    double h = rat_to_double(cheeger_exact(d).h);
    std::vector<CheegerBoundsRow> rows;
    for (double p : ps) {
        CheegerBoundsRow row;
        row.p = p;
        row.h = h;
        row.lambda = first_eigenpair(d, p, cfg).lambda;
        row.lower = std::pow(2.0, p - 1.0) * std::pow(h / p, p);
        row.lowerHolds = row.lower <= row.lambda + 1e-9;
        row.upperHolds = row.lambda <= h + 1e-9;
        rows.push_back(row);
    }
    return rows;
}

} // namespace plap
