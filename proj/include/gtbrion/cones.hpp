#pragma once

#include "gtbrion/linalg.hpp"
#include "gtbrion/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace gtbrion {

using IntVector = linalg::IntVector;

/// coordinate(greater) - coordinate(lesser) >= 0, relative to the apex.
struct Inequality {
    Node greater;
    Node lesser;
    auto operator<=>(const Inequality&) const = default;
};

/// Pointed rational cone in pattern-coordinate space; vectors have one entry
/// per pattern coordinate in (i, j)-major order.
struct Cone {
    int n = 0;
    std::vector<Rational> apex;
    std::vector<IntVector> rays;
    std::vector<Inequality> inequalities;
    /// Coordinates that never move away from the apex (row 0, nodes outside a component).
    std::vector<Node> pinned;

    Layout layout() const { return {n}; }

    bool contains_direction(const IntVector& y) const {
        Layout l = layout();
        for (const auto& p : pinned)
            if (y[l.index(p)] != 0) return false;
        for (const auto& q : inequalities)
            if (y[l.index(q.greater)] < y[l.index(q.lesser)]) return false;
        return true;
    }

    bool contains_point(const IntVector& x) const {
        IntVector y(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) {
            Rational d = Rational(static_cast<long>(x[k])) - apex[k];
            if (!is_integer(d)) return false;
            y[k] = d.get_num().get_si();
        }
        return contains_direction(y);
    }
};

/// One simplicial piece of a half-open decomposition: the points
/// apex + Σ α_k r_k with α_k >= 0, and α_k > 0 where excluded[k].
struct HalfOpenSimplicialCone {
    std::vector<Rational> apex;
    std::vector<IntVector> rays;
    std::vector<bool> excluded;
};

/// (Σ_p t^p) / Π_r (1 - t^r)
struct SigmaTerm {
    std::vector<IntVector> numerator_points;
    std::vector<IntVector> denominator_rays;
};

namespace detail {

inline IntVector node_indicator(const Layout& layout, const std::vector<Node>& nodes, long long value) {
    IntVector v(layout.size(), 0);
    for (const auto& p : nodes) v[layout.index(p)] = value;
    return v;
}

inline std::vector<Inequality> edge_inequalities(const std::vector<TEdge>& edges) {
    std::vector<Inequality> out;
    for (const auto& e : edges) out.push_back({e.greater, e.lesser});
    return out;
}

/// Nodes of Δ squeezed between two pinned nodes, hence constant zero on C_Δ.
inline std::set<Node> forced_zero_nodes(const Subgraph& delta, const std::vector<Node>& pinned) {
    std::vector<TEdge> edges = delta.edges();
    auto closure = [&](bool downward) {
        std::set<Node> reached(pinned.begin(), pinned.end());
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& e : edges) {
                const Node& from = downward ? e.greater : e.lesser;
                const Node& to = downward ? e.lesser : e.greater;
                if (reached.count(from) && !reached.count(to)) {
                    reached.insert(to);
                    grew = true;
                }
            }
        }
        return reached;
    };
    std::set<Node> below = closure(true);   // <= some pinned node
    std::set<Node> above = closure(false);  // >= some pinned node
    std::set<Node> forced;
    for (const auto& p : delta.nodes())
        if (below.count(p) && above.count(p)) forced.insert(p);
    return forced;
}

/// Connectivity where all pinned nodes count as mutually adjacent.
inline bool connected_with_pins(const std::vector<Node>& nodes, const std::set<Node>& pinned) {
    if (nodes.empty()) return false;
    std::vector<bool> seen(nodes.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t k = stack.back();
        stack.pop_back();
        for (std::size_t m = 0; m < nodes.size(); ++m) {
            if (seen[m]) continue;
            bool linked = t_adjacent(nodes[k], nodes[m]) || (pinned.count(nodes[k]) && pinned.count(nodes[m]));
            if (linked) {
                seen[m] = true;
                ++reached;
                stack.push_back(m);
            }
        }
    }
    return reached == nodes.size();
}

}  // namespace detail

/// A split Δ = Δ_1 ⊔ Δ_2 with the candidate ray that is 0 on Δ_1 (which holds
/// the pinned top) and ±1 on Δ_2.
struct RayCandidate {
    std::vector<Node> moving;  // Δ_2
    int sign = 0;              // 0 when crossing edges demand conflicting signs
    IntVector ray;
    bool extreme = false;
    /// Both parts ordinary; nullopt when Δ has more than one top node.
    std::optional<bool> ordinary_split;
};

/// Every split with connected Δ_2 (avoiding the pinned top row) and connected
/// Δ_1, with its sign and extremality verdict.
inline std::vector<RayCandidate> component_ray_candidates(const Subgraph& delta) {
    const int n = delta.n();
    Layout layout{n};
    std::vector<Node> pinned = delta.top_nodes();
    std::set<Node> pinned_set(pinned.begin(), pinned.end());
    std::set<Node> forced = detail::forced_zero_nodes(delta, pinned);
    std::vector<Node> free_nodes;
    for (const auto& p : delta.nodes())
        if (!forced.count(p)) free_nodes.push_back(p);
    if (free_nodes.size() > 24) throw Error("component too large for split enumeration");

    std::vector<TEdge> edges = delta.edges();
    const bool single_top = pinned.size() == 1;
    std::vector<RayCandidate> out;
    const std::uint64_t subsets = std::uint64_t{1} << free_nodes.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        std::vector<Node> moving, resting;
        for (std::size_t k = 0; k < free_nodes.size(); ++k)
            if (mask >> k & 1) moving.push_back(free_nodes[k]);
        std::set<Node> moving_set(moving.begin(), moving.end());
        for (const auto& p : delta.nodes())
            if (!moving_set.count(p)) resting.push_back(p);
        if (!Subgraph(n, moving).is_connected()) continue;
        if (!detail::connected_with_pins(resting, pinned_set)) continue;

        RayCandidate c;
        c.moving = moving;
        int demanded = 0;
        bool conflict = false;
        for (const auto& e : edges) {
            bool g = moving_set.count(e.greater), l = moving_set.count(e.lesser);
            if (g == l) continue;
            int want = g ? +1 : -1;
            if (demanded != 0 && demanded != want) conflict = true;
            demanded = want;
        }
        if (conflict || demanded == 0) {
            out.push_back(std::move(c));
            continue;
        }
        c.sign = demanded;
        c.ray = detail::node_indicator(layout, moving, c.sign);

        std::vector<IntVector> tight;
        for (const auto& p : pinned) tight.push_back(detail::node_indicator(layout, {p}, 1));
        for (const auto& e : edges)
            if (c.ray[layout.index(e.greater)] == c.ray[layout.index(e.lesser)]) {
                IntVector r(layout.size(), 0);
                r[layout.index(e.greater)] = 1;
                r[layout.index(e.lesser)] = -1;
                tight.push_back(std::move(r));
            }
        c.extreme = delta.size() - linalg::rank(tight) == 1;
        if (single_top) c.ordinary_split = Subgraph(n, moving).is_ordinary() && Subgraph(n, resting).is_ordinary();
        out.push_back(std::move(c));
    }
    return out;
}

/// Extreme rays of C_Δ, sorted lexicographically. Kept: sign-consistent,
/// extreme, and (for a single top node) splitting Δ into two ordinary parts.
inline std::vector<IntVector> component_rays(const Subgraph& delta) {
    std::vector<IntVector> rays;
    for (const auto& c : component_ray_candidates(delta))
        if (c.sign != 0 && c.extreme && c.ordinary_split.value_or(true)) rays.push_back(c.ray);
    std::sort(rays.begin(), rays.end());
    return rays;
}

/// Splits that pass the extremality test but not the ordinary-split shape.
/// Expected to be empty; reported rather than silently dropped.
inline std::vector<RayCandidate> component_ray_discrepancies(const Subgraph& delta) {
    std::vector<RayCandidate> out;
    for (auto& c : component_ray_candidates(delta))
        if (c.sign != 0 && c.extreme && c.ordinary_split == false) out.push_back(std::move(c));
    return out;
}

/// C_Δ: apex at the origin, coordinates outside Δ and its top row pinned.
inline Cone component_cone(const Subgraph& delta) {
    Cone c;
    c.n = delta.n();
    Layout layout{c.n};
    c.apex.assign(layout.size(), Rational(0));
    for (const auto& p : layout.nodes())
        if (!delta.contains(p)) c.pinned.push_back(p);
    for (const auto& p : delta.top_nodes()) c.pinned.push_back(p);
    std::sort(c.pinned.begin(), c.pinned.end());
    c.inequalities = detail::edge_inequalities(delta.edges());
    c.rays = component_rays(delta);
    return c;
}

/// Tangent cone C_v = v + Σ_Δ C_Δ over the components of Γ_v.
inline Cone tangent_cone(const PolytopeVertex& v) {
    Cone c;
    c.n = v.pattern.n();
    for (long long a : v.pattern.flat()) c.apex.emplace_back(static_cast<long>(a));
    for (int j = 1; j <= c.n; ++j) c.pinned.push_back({0, j});
    c.inequalities = detail::edge_inequalities(v.graph.edges);
    for (const auto& delta : v.graph.components)
        for (auto& r : component_rays(delta)) c.rays.push_back(std::move(r));
    std::sort(c.rays.begin(), c.rays.end());
    return c;
}

/// Rays of a simplicial vertex read off its permutation: for 1 <= a <= b <= n-1
/// the chain carrying λ_{w^{-1}(b+1)} moves on rows a..b, with entries +1 when
/// w^{-1}(a) < w^{-1}(b+1) and -1 otherwise.
struct PairRay {
    int a = 0;
    int b = 0;
    int sign = 0;
    IntVector ray;
};

inline std::vector<PairRay> simplicial_vertex_rays(const PolytopeVertex& v) {
    if (!v.regular_weight() || !v.simplicial || !v.w) throw Error("simplicial_vertex_rays needs a simplicial vertex of a regular weight");
    const GTPattern& p = v.pattern;
    const int n = p.n();
    Layout layout{n};
    Permutation winv = v.w->inverse();
    Weight lambda = p.top();
    std::vector<PairRay> out;
    for (int a = 1; a <= n - 1; ++a)
        for (int b = a; b <= n - 1; ++b) {
            long long value = lambda.at(winv(b + 1));
            PairRay pr{a, b, winv(a) < winv(b + 1) ? +1 : -1, IntVector(layout.size(), 0)};
            int col_a = 0;
            for (int r = a; r <= b; ++r) {
                int col = 0;
                for (int j = 1; j <= n - r; ++j)
                    if (p.at(r, j) == value) col = j;
                if (col == 0) throw InternalInconsistency("chain of value " + std::to_string(value) + " missing in row " + std::to_string(r));
                if (r == a) col_a = col;
                pr.ray[layout.index(r, col)] = pr.sign;
            }
            // The only inequality crossing the split is the chain edge into row a.
            int forced = p.at(a - 1, col_a) == value ? -1 : +1;
            if (forced != pr.sign)
                throw InternalInconsistency("ray sign from the permutation disagrees with the tangent-cone inequalities");
            out.push_back(std::move(pr));
        }
    return out;
}

namespace detail {

inline linalg::Matrix projected(const std::vector<IntVector>& rays, const std::vector<std::size_t>& coords) {
    // rows = coordinates, columns = rays
    linalg::Matrix m(coords.size(), std::vector<Rational>(rays.size()));
    for (std::size_t c = 0; c < coords.size(); ++c)
        for (std::size_t k = 0; k < rays.size(); ++k) m[c][k] = static_cast<long>(rays[k][coords[c]]);
    return m;
}

inline int det_sign(const std::vector<IntVector>& rays, const std::vector<std::size_t>& coords) {
    Rational d = linalg::determinant(projected(rays, coords));
    return sgn(d);
}

}  // namespace detail

/// Placing triangulation of the cone's rays (lexicographic order) made
/// half-open with respect to a fixed generic interior direction, so every
/// lattice point of the cone lies in exactly one piece.
inline std::vector<HalfOpenSimplicialCone> half_open_triangulate(const Cone& c) {
    Layout layout = c.layout();
    {
        std::vector<IntVector> lineality;
        for (const auto& p : c.pinned) lineality.push_back(detail::node_indicator(layout, {p}, 1));
        for (const auto& q : c.inequalities) {
            IntVector r(layout.size(), 0);
            r[layout.index(q.greater)] += 1;
            r[layout.index(q.lesser)] -= 1;
            lineality.push_back(std::move(r));
        }
        if (static_cast<int>(linalg::rank(lineality)) < layout.size()) throw Error("cone contains a line");
    }

    std::vector<IntVector> rays = c.rays;
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    if (rays.empty()) return {HalfOpenSimplicialCone{c.apex, {}, {}}};

    using Simplex = std::vector<int>;
    std::vector<Simplex> simplices;
    std::vector<IntVector> span;
    for (int r = 0; r < static_cast<int>(rays.size()); ++r) {
        if (simplices.empty()) {
            simplices.push_back({r});
            span.push_back(rays[r]);
            continue;
        }
        std::vector<IntVector> grown = span;
        grown.push_back(rays[r]);
        if (linalg::rank(grown) > span.size()) {
            for (auto& s : simplices) s.push_back(r);
            span = std::move(grown);
            continue;
        }
        auto coords = linalg::independent_coordinates(span);
        std::map<Simplex, int> facet_count;
        for (const auto& s : simplices)
            for (std::size_t k = 0; k < s.size(); ++k) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(k));
                std::sort(f.begin(), f.end());
                ++facet_count[f];
            }
        std::vector<Simplex> added;
        for (const auto& s : simplices)
            for (std::size_t k = 0; k < s.size(); ++k) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(k));
                Simplex key = f;
                std::sort(key.begin(), key.end());
                if (facet_count[key] != 1) continue;
                std::vector<IntVector> with_opposite, with_new;
                for (int idx : f) {
                    with_opposite.push_back(rays[idx]);
                    with_new.push_back(rays[idx]);
                }
                with_opposite.push_back(rays[s[k]]);
                with_new.push_back(rays[r]);
                int so = detail::det_sign(with_opposite, coords);
                int sn = detail::det_sign(with_new, coords);
                if (so * sn < 0) {
                    f.push_back(r);
                    added.push_back(f);
                }
            }
        if (added.empty()) {
            // The ray is not extreme so far: subdivide every simplex containing it.
            std::vector<Simplex> refined;
            std::vector<Rational> target;
            for (auto idx : coords) target.emplace_back(static_cast<long>(rays[r][idx]));
            for (const auto& s : simplices) {
                std::vector<IntVector> cols;
                for (int idx : s) cols.push_back(rays[idx]);
                auto inv = linalg::inverse(detail::projected(cols, coords));
                if (!inv) throw InternalInconsistency("triangulation produced a degenerate simplex");
                auto beta = linalg::multiply(*inv, target);
                if (std::any_of(beta.begin(), beta.end(), [](const Rational& b) { return b < 0; })) {
                    refined.push_back(s);
                    continue;
                }
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (beta[k] > 0) {
                        Simplex t = s;
                        t[k] = r;
                        refined.push_back(std::move(t));
                    }
            }
            simplices = std::move(refined);
            continue;
        }
        for (auto& s : added) simplices.push_back(std::move(s));
    }

    auto coords = linalg::independent_coordinates(span);
    std::mt19937_64 rng(0x5eed'c0de);
    std::uniform_int_distribution<long long> weight(1000, 1999);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Rational> interior(layout.size(), Rational(0));
        for (const auto& ray : rays) {
            long long w = weight(rng);
            for (int k = 0; k < layout.size(); ++k) interior[k] += static_cast<long>(w * ray[k]);
        }
        std::vector<Rational> target;
        for (auto idx : coords) target.push_back(interior[idx]);
        std::vector<HalfOpenSimplicialCone> pieces;
        bool generic = true;
        for (const auto& s : simplices) {
            HalfOpenSimplicialCone piece{c.apex, {}, {}};
            for (int idx : s) piece.rays.push_back(rays[idx]);
            auto inv = linalg::inverse(detail::projected(piece.rays, coords));
            if (!inv) throw InternalInconsistency("triangulation produced a degenerate simplex");
            for (const auto& beta : linalg::multiply(*inv, target)) {
                if (beta == 0) generic = false;
                piece.excluded.push_back(beta < 0);
            }
            pieces.push_back(std::move(piece));
        }
        if (generic) return pieces;
    }
    throw InternalInconsistency("no generic interior direction found for the half-open decomposition");
}

/// Lattice points Σ α_k r_k of the half-open fundamental parallelepiped
/// (α_k in [0,1), or (0,1] for excluded facets), relative to the apex.
inline std::vector<IntVector> parallelepiped_points(const HalfOpenSimplicialCone& piece, bool force_box = false) {
    const std::size_t dim = piece.apex.size();
    if (piece.rays.empty()) return {IntVector(dim, 0)};
    auto coords = linalg::independent_coordinates(piece.rays);
    linalg::Matrix m = detail::projected(piece.rays, coords);
    Rational det = linalg::determinant(m);
    if (!force_box && abs(det) == 1) {
        IntVector corner(dim, 0);
        for (std::size_t k = 0; k < piece.rays.size(); ++k)
            if (piece.excluded[k])
                for (std::size_t c = 0; c < dim; ++c) corner[c] += piece.rays[k][c];
        return {corner};
    }
    auto inv = linalg::inverse(m);
    if (!inv) throw Error("parallelepiped rays are linearly dependent");
    std::vector<long long> lo(coords.size(), 0), hi(coords.size(), 0);
    for (std::size_t c = 0; c < coords.size(); ++c)
        for (const auto& r : piece.rays) {
            lo[c] += std::min(0LL, r[coords[c]]);
            hi[c] += std::max(0LL, r[coords[c]]);
        }
    std::vector<IntVector> out;
    std::vector<long long> y = lo;
    while (true) {
        std::vector<Rational> yr;
        for (long long v : y) yr.emplace_back(static_cast<long>(v));
        auto alpha = linalg::multiply(*inv, yr);
        bool inside = true;
        for (std::size_t k = 0; k < alpha.size() && inside; ++k)
            inside = piece.excluded[k] ? (alpha[k] > 0 && alpha[k] <= 1) : (alpha[k] >= 0 && alpha[k] < 1);
        if (inside) {
            IntVector point(dim, 0);
            bool integral = true;
            for (std::size_t c = 0; c < dim && integral; ++c) {
                Rational v(0);
                for (std::size_t k = 0; k < alpha.size(); ++k) v += alpha[k] * static_cast<long>(piece.rays[k][c]);
                integral = is_integer(v);
                if (integral) point[c] = v.get_num().get_si();
            }
            if (integral) out.push_back(std::move(point));
        }
        std::size_t c = 0;
        while (c < y.size() && y[c] == hi[c]) {
            y[c] = lo[c];
            ++c;
        }
        if (c == y.size()) break;
        ++y[c];
    }
    return out;
}

/// σ(C) as a list of terms, one per half-open piece; numerator points are
/// absolute (apex included).
inline std::vector<SigmaTerm> sigma_terms(const Cone& c) {
    IntVector apex;
    for (const auto& a : c.apex) {
        if (!is_integer(a)) throw Error("sigma_terms requires an integral apex");
        apex.push_back(a.get_num().get_si());
    }
    std::vector<SigmaTerm> terms;
    for (const auto& piece : half_open_triangulate(c)) {
        SigmaTerm t;
        for (auto p : parallelepiped_points(piece)) {
            for (std::size_t k = 0; k < p.size(); ++k) p[k] += apex[k];
            t.numerator_points.push_back(std::move(p));
        }
        t.denominator_rays = piece.rays;
        terms.push_back(std::move(t));
    }
    return terms;
}

/// t^u for a flat t-point.
inline Rational t_monomial(const IntVector& u, const std::vector<Rational>& t) {
    Rational v(1);
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] != 0) v *= power(t[k], u[k]);
    return v;
}

/// Value of Σ terms at a t-point with no vanishing denominator factor.
inline Rational sigma_value(const std::vector<SigmaTerm>& terms, const std::vector<Rational>& t) {
    Rational total(0);
    for (const auto& term : terms) {
        Rational num(0), den(1);
        for (const auto& p : term.numerator_points) num += t_monomial(p, t);
        for (const auto& r : term.denominator_rays) {
            Rational f = 1 - t_monomial(r, t);
            if (f == 0) throw EvaluationError("t-point makes a denominator factor vanish");
            den *= f;
        }
        total += num / den;
    }
    return total;
}

}  // namespace gtbrion
