#include "plap/symmetry.hpp"
#include "plap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace plap {

namespace {

std::vector<std::vector<Rat>> weight_matrix(const DirichletDomain& d) {
    std::vector<std::vector<Rat>> w(d.size(), std::vector<Rat>(d.size(), Rat(0)));
    for (const auto& e : d.edges) {
        w[e.u][e.v] = e.mu;
        w[e.v][e.u] = e.mu;
    }
    return w;
}

void check_partition(const DirichletDomain& d, const VertexPartition& parts,
                     std::vector<int>& cellOf) {
    cellOf.assign(d.size(), -1);
    if (parts.cells.empty()) throw InvalidPartition("no cells");
    for (std::size_t c = 0; c < parts.cells.size(); ++c) {
        if (parts.cells[c].empty()) throw InvalidPartition("empty cell");
        for (std::size_t i : parts.cells[c]) {
            if (i >= d.size()) throw InvalidPartition("index out of range");
            if (cellOf[i] != -1) throw InvalidPartition("cells overlap");
            cellOf[i] = static_cast<int>(c);
        }
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        if (cellOf[i] == -1) throw InvalidPartition("cells do not cover the domain");
}

} // namespace

AutomorphismGroup enumerate_automorphisms(const DirichletDomain& d, std::size_t cap) {
    std::size_t n = d.size();
    if (n > cap) throw TooLarge(n, cap);
    auto w = weight_matrix(d);

    // signature: (ν, boundary weight, sorted incident weights)
    std::vector<std::tuple<Rat, Rat, std::vector<Rat>>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> inc;
        for (const auto& [j, m] : d.adj[i]) inc.push_back(m);
        std::sort(inc.begin(), inc.end());
        sig[i] = {d.nu[i], d.boundary[i], std::move(inc)};
    }

    AutomorphismGroup group;
    std::vector<std::size_t> perm(n);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            group.elements.push_back(perm);
            return;
        }
        for (std::size_t img = 0; img < n; ++img) {
            if (used[img] || sig[i] != sig[img]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (w[i][j] != w[img][perm[j]]) ok = false;
            if (!ok) continue;
            perm[i] = img;
            used[img] = 1;
            self(self, i + 1);
            used[img] = 0;
        }
    };
    rec(rec, 0);
    return group;
}

VertexPartition orbits(const AutomorphismGroup& g, std::size_t n) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& perm : g.elements)
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t a = find(i), b = find(perm[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<std::size_t, std::vector<std::size_t>> byRoot;
    for (std::size_t i = 0; i < n; ++i) byRoot[find(i)].push_back(i);
    VertexPartition parts;
    for (auto& [root, cell] : byRoot) parts.cells.push_back(std::move(cell));
    return parts;
}

EquitableReport validate_equitable(const DirichletDomain& d, const VertexPartition& parts) {
    std::vector<int> cellOf;
    check_partition(d, parts, cellOf);
    auto w = weight_matrix(d);
    EquitableReport rep;
    std::size_t nc = parts.cells.size();
    for (std::size_t c = 0; c < nc; ++c) {
        const auto& cell = parts.cells[c];
        for (std::size_t i : cell) {
            if (d.nu[i] != d.nu[cell[0]])
                rep.violations.push_back("nu differs inside cell of " + d.ids[cell[0]]);
            if (d.boundary[i] != d.boundary[cell[0]])
                rep.violations.push_back("boundary weight differs inside cell of " +
                                         d.ids[cell[0]]);
        }
        for (std::size_t c2 = 0; c2 < nc; ++c2) {
            Rat ref;
            bool first = true;
            for (std::size_t i : cell) {
                Rat sum = 0;
                for (std::size_t j : parts.cells[c2]) sum += w[i][j];
                if (first) {
                    ref = sum;
                    first = false;
                } else if (sum != ref) {
                    rep.violations.push_back("weight sum toward cell of " +
                                             d.ids[parts.cells[c2][0]] +
                                             " differs inside cell of " + d.ids[cell[0]]);
                    break;
                }
            }
        }
    }
    std::sort(rep.violations.begin(), rep.violations.end());
    rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()),
                         rep.violations.end());
    rep.equitable = rep.violations.empty();
    return rep;
}

DirichletDomain quotient(const DirichletDomain& d, const VertexPartition& parts) {
    EquitableReport rep = validate_equitable(d, parts);
    if (!rep.equitable) throw NotEquitable(rep.violations.front());
    std::vector<int> cellOf;
    check_partition(d, parts, cellOf);

    DirichletDomain q;
    std::size_t nc = parts.cells.size();
    for (std::size_t c = 0; c < nc; ++c) {
        std::size_t rep0 = *std::min_element(parts.cells[c].begin(), parts.cells[c].end());
        q.ids.push_back("[" + d.ids[rep0] + "]");
        Rat nu = 0, bw = 0;
        for (std::size_t i : parts.cells[c]) {
            nu += d.nu[i];
            bw += d.boundary[i];
        }
        q.nu.push_back(nu);
        q.boundary.push_back(bw);
    }
    std::map<std::pair<std::size_t, std::size_t>, Rat> cross;
    for (const auto& e : d.edges) {
        std::size_t a = cellOf[e.u], b = cellOf[e.v];
        if (a == b) continue;
        cross[{std::min(a, b), std::max(a, b)}] += e.mu;
    }
    q.adj.assign(nc, {});
    for (const auto& [key, m] : cross) {
        q.edges.push_back({key.first, key.second, m});
        q.adj[key.first].push_back({key.second, m});
        q.adj[key.second].push_back({key.first, m});
    }
    return q;
}

std::vector<double> lift(const VertexPartition& parts, std::size_t n,
                         const std::vector<double>& f) {
    if (f.size() != parts.cells.size())
        throw DimensionMismatch(parts.cells.size(), f.size());
    std::vector<double> out(n, 0.0);
    for (std::size_t c = 0; c < parts.cells.size(); ++c)
        for (std::size_t i : parts.cells[c]) {
            if (i >= n) throw InvalidPartition("index out of range");
            out[i] = f[c];
        }
    return out;
}

InvarianceReport verify_quotient_invariance(const DirichletDomain& d,
                                            const VertexPartition& parts,
                                            const std::vector<double>& ps,
                                            const SolverConfig& cfg) {
    DirichletDomain q = quotient(d, parts);
    InvarianceReport rep;
    rep.allAgree = true;
    for (double p : ps) {
        InvarianceRow row;
        row.p = p;
        row.lambdaOriginal = first_eigenpair(d, p, cfg).lambda;
        row.lambdaQuotient = first_eigenpair(q, p, cfg).lambda;
        row.agree = std::abs(row.lambdaOriginal - row.lambdaQuotient) <= 1e-7;
        rep.allAgree = rep.allAgree && row.agree;
        rep.rows.push_back(row);
    }
    CheegerResult ho = cheeger_exact(d);
    CheegerResult hq = cheeger_exact(q);
    rep.hOriginal = ho.h;
    rep.hQuotient = hq.h;
    rep.hEqual = ho.h == hq.h;

    std::vector<int> cellOf;
    check_partition(d, parts, cellOf);
    for (const auto& cut : ho.cuts) {
        std::vector<char> in(d.size(), 0);
        for (std::size_t i : cut) in[i] = 1;
        bool isUnion = true;
        for (const auto& cell : parts.cells) {
            std::size_t inside = 0;
            for (std::size_t i : cell) inside += in[i];
            if (inside != 0 && inside != cell.size()) isUnion = false;
        }
        if (isUnion) {
            rep.cutIsCellUnion = true;
            break;
        }
    }
    return rep;
}

} // namespace plap
