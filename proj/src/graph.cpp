#include "plap/graph.hpp"
#include "plap/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace plap {

std::size_t WeightedGraph::add_vertex(const std::string& id, const Rat& nu) {
    if (index_.count(id)) throw std::invalid_argument("duplicate vertex id: " + id);
    if (nu <= 0) throw std::invalid_argument("vertex measure must be positive: " + id);
    std::size_t i = ids_.size();
    ids_.push_back(id);
    index_[id] = i;
    nu_.push_back(nu);
    adj_.emplace_back();
    return i;
}

void WeightedGraph::add_edge(const std::string& a, const std::string& b, const Rat& mu) {
    std::size_t u = index_of(a), v = index_of(b);
    if (u == v) throw std::invalid_argument("self loop at " + a);
    if (mu <= 0) throw std::invalid_argument("edge weight must be positive: " + a + "-" + b);
    for (const auto& [w, m] : adj_[u])
        if (w == v) throw std::invalid_argument("duplicate edge " + a + "-" + b);
    edges_.push_back({u, v, mu});
    adj_[u].push_back({v, mu});
    adj_[v].push_back({u, mu});
}

std::size_t WeightedGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownVertex(id);
    return it->second;
}

Rat WeightedGraph::degree(std::size_t i) const {
    Rat d = 0;
    for (const auto& [w, m] : adj_.at(i)) d += m;
    return d;
}

bool DirichletDomain::has_boundary() const {
    for (const auto& b : boundary)
        if (b > 0) return true;
    return false;
}

DirichletDomain build_domain(const WeightedGraph& g, const std::vector<std::string>& omega) {
    if (omega.empty()) throw EmptyDomain();
    DirichletDomain d;
    std::map<std::size_t, std::size_t> local; // ambient index -> domain index
    std::vector<std::size_t> ambient;
    for (const auto& id : omega) {
        std::size_t gi = g.index_of(id);
        if (local.count(gi)) continue;
        local[gi] = d.ids.size();
        ambient.push_back(gi);
        d.ids.push_back(g.id_of(gi));
        d.nu.push_back(g.nu(gi));
    }
    std::size_t n = d.ids.size();
    d.boundary.assign(n, Rat(0));
    d.adj.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [w, m] : g.adjacency(ambient[i])) {
            auto it = local.find(w);
            if (it == local.end()) {
                d.boundary[i] += m;
            } else if (it->second > i) {
                d.edges.push_back({i, it->second, m});
            }
        }
    }
    for (const auto& e : d.edges) {
        d.adj[e.u].push_back({e.v, e.mu});
        d.adj[e.v].push_back({e.u, e.mu});
    }
    if (!is_connected(d)) throw DisconnectedDomain();
    return d;
}

Rat edge_boundary(const DirichletDomain& d, const std::vector<std::size_t>& subset) {
    std::vector<char> in(d.size(), 0);
    for (std::size_t i : subset) in.at(i) = 1;
    Rat b = 0;
    for (std::size_t i : subset) {
        b += d.boundary[i];
        for (const auto& [w, m] : d.adj[i])
            if (!in[w]) b += m;
    }
    return b;
}

Rat volume(const DirichletDomain& d, const std::vector<std::size_t>& subset) {
    Rat v = 0;
    for (std::size_t i : subset) v += d.nu.at(i);
    return v;
}

bool is_connected(const DirichletDomain& d) {
    if (d.size() == 0) return false;
    std::vector<char> seen(d.size(), 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop();
        for (const auto& [w, m] : d.adj[i]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == d.size();
}

Bipartition bipartition(const DirichletDomain& d) {
    std::vector<int> color(d.size(), -1);
    Bipartition out;
    std::queue<std::size_t> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop();
        for (const auto& [w, m] : d.adj[i]) {
            if (color[w] == -1) {
                color[w] = 1 - color[i];
                q.push(w);
            } else if (color[w] == color[i]) {
                throw NotBipartite();
            }
        }
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        (color[i] == 0 ? out.partOne : out.partTwo).push_back(i);
    return out;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
metric_balls(const WeightedGraph& g, const std::string& center, std::size_t r) {
    std::size_t c = g.index_of(center);
    std::vector<std::size_t> dist(g.size(), SIZE_MAX);
    std::queue<std::size_t> q;
    dist[c] = 0;
    q.push(c);
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop();
        if (dist[i] == r) continue;
        for (const auto& [w, m] : g.adjacency(i)) {
            if (dist[w] == SIZE_MAX) {
                dist[w] = dist[i] + 1;
                q.push(w);
            }
        }
    }
    std::vector<std::size_t> ball, sphere;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (dist[i] <= r) ball.push_back(i);
        if (dist[i] == r) sphere.push_back(i);
    }
    return {ball, sphere};
}

} // namespace plap
