#pragma once

#include "gtbrion/gt_pattern.hpp"
#include "gtbrion/linalg.hpp"
#include "gtbrion/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace gtbrion {

/// Edge of the triangle graph T between a node and one of its two upper
/// neighbours, oriented by the interlacing inequality it carries:
/// coordinate(greater) >= coordinate(lesser).
struct TEdge {
    Node lower;
    Node upper;
    Node greater;
    Node lesser;
    auto operator<=>(const TEdge&) const = default;
};

/// All edges of T touching row i >= 1 nodes, in (i, j)-major order,
/// upper-left edge first.
inline std::vector<TEdge> triangle_edges(int n) {
    std::vector<TEdge> out;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n - i; ++j) {
            Node p{i, j}, ul{i - 1, j}, ur{i - 1, j + 1};
            out.push_back({p, ul, ul, p});
            out.push_back({p, ur, p, ur});
        }
    return out;
}

inline bool t_adjacent(const Node& a, const Node& b) {
    if (a.row == b.row + 1) return a.col == b.col || a.col + 1 == b.col;
    if (b.row == a.row + 1) return b.col == a.col || b.col + 1 == a.col;
    return false;
}

/// A node subset of T taken with all T-edges among its nodes (induced).
class Subgraph {
public:
    Subgraph() = default;
    Subgraph(int n, std::vector<Node> nodes) : n_(n), nodes_(std::move(nodes)) {
        std::sort(nodes_.begin(), nodes_.end());
        nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
        Layout layout{n_};
        for (const auto& p : nodes_)
            if (!layout.contains(p)) throw Error("subgraph node outside the triangle");
    }

    int n() const { return n_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    bool contains(const Node& p) const { return std::binary_search(nodes_.begin(), nodes_.end(), p); }

    std::vector<TEdge> edges() const {
        std::vector<TEdge> out;
        for (const auto& e : triangle_edges(n_))
            if (contains(e.lower) && contains(e.upper)) out.push_back(e);
        return out;
    }

    int top_row() const { return nodes_.empty() ? -1 : nodes_.front().row; }

    /// Nodes in the topmost occupied row.
    std::vector<Node> top_nodes() const {
        std::vector<Node> out;
        for (const auto& p : nodes_)
            if (p.row == top_row()) out.push_back(p);
        return out;
    }

    bool is_connected() const { return component_count() <= 1; }

    std::size_t component_count() const {
        if (nodes_.empty()) return 0;
        std::vector<bool> seen(nodes_.size(), false);
        std::size_t count = 0;
        for (std::size_t start = 0; start < nodes_.size(); ++start) {
            if (seen[start]) continue;
            ++count;
            std::vector<std::size_t> stack{start};
            seen[start] = true;
            while (!stack.empty()) {
                std::size_t k = stack.back();
                stack.pop_back();
                for (std::size_t m = 0; m < nodes_.size(); ++m)
                    if (!seen[m] && t_adjacent(nodes_[k], nodes_[m])) {
                        seen[m] = true;
                        stack.push_back(m);
                    }
            }
        }
        return count;
    }

    /// Property A: containing (i,j) and (i,j+1) forces (i-1,j+1) and (i+1,j).
    bool has_property_a() const {
        for (const auto& p : nodes_) {
            Node right{p.row, p.col + 1};
            if (!contains(right)) continue;
            if (!contains(Node{p.row - 1, p.col + 1}) || !contains(Node{p.row + 1, p.col})) return false;
        }
        return true;
    }

    /// Connected, induced (by construction), property A, single top node.
    bool is_ordinary() const { return !nodes_.empty() && is_connected() && has_property_a() && top_nodes().size() == 1; }

    /// Cyclomatic number E - V + C is positive.
    bool has_cycle() const { return edges().size() + component_count() > nodes_.size(); }

    auto operator<=>(const Subgraph&) const = default;

private:
    int n_ = 0;
    std::vector<Node> nodes_;
};

using OrdinarySubgraph = Subgraph;

/// Equality graph Γ_v of a vertex pattern: T-edges whose endpoints carry
/// equal entries, together with its connected components.
struct GammaGraph {
    int n = 0;
    std::vector<TEdge> edges;
    std::vector<Subgraph> components;

    bool is_acyclic() const {
        for (const auto& c : components)
            if (c.edges().size() + 1 != c.size()) return false;
        return true;
    }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace detail

inline GammaGraph gamma_graph(const GTPattern& v) {
    GammaGraph g;
    g.n = v.n();
    Layout layout{g.n};
    detail::UnionFind uf(layout.size());
    for (const auto& e : triangle_edges(g.n))
        if (v.at(e.lower) == v.at(e.upper)) {
            g.edges.push_back(e);
            uf.unite(layout.index(e.lower), layout.index(e.upper));
        }
    std::map<int, std::vector<Node>> groups;
    for (const auto& p : layout.nodes()) groups[uf.find(layout.index(p))].push_back(p);
    for (auto& [root, nodes] : groups) g.components.emplace_back(g.n, std::move(nodes));
    if (v.top().is_regular() && static_cast<int>(g.components.size()) != g.n)
        throw InternalInconsistency("equality graph of " + v.to_string() + " has " +
                                    std::to_string(g.components.size()) + " components, expected " +
                                    std::to_string(g.n));
    return g;
}

/// Dimension of the affine set cut out by the tight constraints at a pattern:
/// row 0 fixed plus one equality per edge of Γ_v. Zero exactly at vertices.
inline std::size_t tight_dimension(const GTPattern& v) {
    Layout layout{v.n()};
    std::vector<linalg::IntVector> rows;
    for (int j = 1; j <= v.n(); ++j) {
        linalg::IntVector r(layout.size(), 0);
        r[layout.index(0, j)] = 1;
        rows.push_back(std::move(r));
    }
    for (const auto& e : triangle_edges(v.n()))
        if (v.at(e.lower) == v.at(e.upper)) {
            linalg::IntVector r(layout.size(), 0);
            r[layout.index(e.lower)] = 1;
            r[layout.index(e.upper)] = -1;
            rows.push_back(std::move(r));
        }
    return static_cast<std::size_t>(layout.size()) - linalg::rank(rows);
}

struct PolytopeVertex {
    GTPattern pattern;
    GammaGraph graph;
    /// Γ_v acyclic; this is simpliciality when the top row is regular.
    bool simplicial = false;
    /// Present iff the vertex is simplicial and the weight is regular.
    std::optional<Permutation> w;
    Weight mu;

    bool regular_weight() const { return pattern.top().is_regular(); }
};

inline bool is_simplicial(const PolytopeVertex& v) { return v.graph.is_acyclic(); }

/// w_v: row i+1 is row i with λ_{w^{-1}(i+1)} deleted (rows counted from 0,
/// row n empty).
inline Permutation vertex_permutation(const GTPattern& v) {
    Weight lambda = v.top();
    int n = v.n();
    if (!lambda.is_regular()) throw Error("vertex permutation requires a regular weight");
    std::vector<int> inverse_images(n);
    for (int i = 0; i < n; ++i) {
        std::multiset<long long> upper(v.rows()[i].begin(), v.rows()[i].end());
        if (i + 1 < n)
            for (long long x : v.rows()[i + 1]) {
                auto it = upper.find(x);
                if (it == upper.end()) throw Error("pattern " + v.to_string() + " is not a simplicial vertex");
                upper.erase(it);
            }
        if (upper.size() != 1) throw Error("pattern " + v.to_string() + " is not a simplicial vertex");
        long long deleted = *upper.begin();
        int k = 0;
        for (int j = 1; j <= n; ++j)
            if (lambda.at(j) == deleted) k = j;
        if (k == 0) throw InternalInconsistency("deleted value " + std::to_string(deleted) + " is not a weight coordinate");
        inverse_images[i] = k;
    }
    return Permutation(inverse_images).inverse();
}

inline Permutation vertex_permutation(const PolytopeVertex& v) {
    if (!v.simplicial) throw Error("vertex permutation requires a simplicial vertex");
    return vertex_permutation(v.pattern);
}

inline PolytopeVertex make_vertex(const GTPattern& pattern) {
    PolytopeVertex v;
    v.pattern = pattern;
    v.graph = gamma_graph(pattern);
    v.simplicial = v.graph.is_acyclic();
    v.mu = weight_of(pattern);
    if (v.simplicial && pattern.top().is_regular()) v.w = vertex_permutation(pattern);
    return v;
}

/// Every entry below row 0 equals one of its upper neighbours.
inline bool satisfies_neighbor_condition(const GTPattern& a) {
    for (int i = 1; i < a.n(); ++i)
        for (int j = 1; j <= a.n() - i; ++j)
            if (a.at(i, j) != a.at(i - 1, j) && a.at(i, j) != a.at(i - 1, j + 1)) return false;
    return true;
}

namespace detail {

inline void assign_vertex_rows(std::vector<std::vector<long long>>& rows, int i, int j,
                               std::set<GTPattern>& out) {
    int n = static_cast<int>(rows.size());
    if (i == n) {
        out.emplace(rows);
        return;
    }
    if (j > n - i) {
        assign_vertex_rows(rows, i + 1, 1, out);
        return;
    }
    long long left = rows[i - 1][j - 1];
    long long right = rows[i - 1][j];
    rows[i][j - 1] = left;
    assign_vertex_rows(rows, i, j + 1, out);
    if (right != left) {
        rows[i][j - 1] = right;
        assign_vertex_rows(rows, i, j + 1, out);
    }
}

}  // namespace detail

/// Vertices of GT_λ (λ regular or singular), sorted lexicographically.
inline std::vector<PolytopeVertex> enumerate_vertices(const Weight& lambda) {
    require_dominant(lambda);
    int n = lambda.size();
    std::vector<std::vector<long long>> rows(n);
    rows[0] = lambda.entries;
    for (int i = 1; i < n; ++i) rows[i].assign(n - i, 0);
    std::set<GTPattern> patterns;
    if (n == 1) patterns.emplace(rows);
    else detail::assign_vertex_rows(rows, 1, 1, patterns);
    std::vector<PolytopeVertex> out;
    for (const auto& p : patterns) {
        if (!is_valid_pattern(p, lambda)) throw InternalInconsistency("vertex candidate violates interlacing");
        out.push_back(make_vertex(p));
    }
    return out;
}

/// π(v'): every coordinate of v' equal to λ'_j becomes λ_j.
inline PolytopeVertex project_vertex(const PolytopeVertex& vprime, const Weight& lambda_prime, const Weight& lambda) {
    require_dominant(lambda_prime);
    require_dominant(lambda);
    if (!lambda_prime.is_regular()) throw InvalidWeight("projection source weight must be regular");
    if (lambda_prime.size() != lambda.size() || vprime.pattern.n() != lambda.size())
        throw InvalidWeight("projection weights must have the same length");
    if (vprime.pattern.top() != lambda_prime) throw Error("vertex does not belong to the source polytope");
    std::vector<std::vector<long long>> rows = vprime.pattern.rows();
    for (auto& row : rows)
        for (auto& value : row) {
            int k = 0;
            for (int j = 1; j <= lambda_prime.size(); ++j)
                if (lambda_prime.at(j) == value) k = j;
            if (k == 0) throw Error("coordinate " + std::to_string(value) + " matches no source weight entry");
            value = lambda.at(k);
        }
    return make_vertex(GTPattern(std::move(rows)));
}

/// S_n λ as a sorted set of weights.
inline std::vector<Weight> orbit(const Weight& lambda) {
    std::vector<long long> e = lambda.entries;
    std::sort(e.begin(), e.end());
    std::vector<Weight> out;
    do {
        out.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

}  // namespace gtbrion
