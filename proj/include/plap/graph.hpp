#pragma once

#include "plap/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace plap {

/// Finite weighted graph: symmetric edge weights mu, vertex measure nu.
/// Vertices carry string ids; internally they are dense indices in
/// insertion order.
class WeightedGraph {
public:
    struct Edge {
        std::size_t u, v;
        Rat mu;
    };

    std::size_t add_vertex(const std::string& id, const Rat& nu);
    void add_edge(const std::string& a, const std::string& b, const Rat& mu);

    std::size_t size() const { return ids_.size(); }
    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }
    std::size_t index_of(const std::string& id) const;
    const std::string& id_of(std::size_t i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const { return ids_; }

    const Rat& nu(std::size_t i) const { return nu_.at(i); }
    const std::vector<Edge>& edges() const { return edges_; }
    /// Neighbors of i as (vertex, mu) pairs, in edge insertion order.
    const std::vector<std::pair<std::size_t, Rat>>& adjacency(std::size_t i) const {
        return adj_.at(i);
    }
    /// Weighted degree: sum of mu over incident edges.
    Rat degree(std::size_t i) const;

private:
    std::vector<std::string> ids_;
    std::map<std::string, std::size_t> index_;
    std::vector<Rat> nu_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> adj_;
};

/// A finite domain with Dirichlet boundary condition. Vertices are the
/// interior; boundary coupling is collapsed into a single weight bw per
/// vertex (total mu toward the deleted exterior).
struct DirichletDomain {
    std::vector<std::string> ids;       // interior vertex ids, domain order
    std::vector<Rat> nu;                // vertex measure
    std::vector<Rat> boundary;          // bw: mass toward the exterior
    std::vector<WeightedGraph::Edge> edges; // interior-interior edges
    std::vector<std::vector<std::pair<std::size_t, Rat>>> adj;

    std::size_t size() const { return ids.size(); }
    /// True if some vertex has positive boundary weight.
    bool has_boundary() const;
};

/// Restricts g to the interior set omega (ids; duplicates collapse to the
/// first occurrence, which fixes the domain order). Edges leaving omega
/// become boundary weight. Throws UnknownVertex, EmptyDomain and, when the
/// interior is not connected, DisconnectedDomain.
DirichletDomain build_domain(const WeightedGraph& g, const std::vector<std::string>& omega);

/// Sum of mu over edges with exactly one endpoint in subset, plus boundary
/// weight of subset members. subset holds interior indices.
Rat edge_boundary(const DirichletDomain& d, const std::vector<std::size_t>& subset);

/// Sum of nu over subset.
Rat volume(const DirichletDomain& d, const std::vector<std::size_t>& subset);

bool is_connected(const DirichletDomain& d);

/// Two-coloring of the interior by interior edges. Vertex 0 goes in partOne.
struct Bipartition {
    std::vector<std::size_t> partOne, partTwo;
};

/// Throws NotBipartite if an interior odd cycle exists.
Bipartition bipartition(const DirichletDomain& d);

/// Closed metric ball and sphere of radius r around center (graph metric,
/// all edges length 1), as sorted dense indices of g.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
metric_balls(const WeightedGraph& g, const std::string& center, std::size_t r);

} // namespace plap
