#pragma once

#include "gtbrion/cones.hpp"
#include "gtbrion/parallel.hpp"
#include "gtbrion/unipoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

namespace gtbrion {

/// The chosen evaluation point makes some factor that should be nonzero vanish.
class NonGenericPoint : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Specialization t_{0,j} -> x_1, t_{i,j} -> x_i^{-1} x_{i+1}

/// Dense x-exponent (length n) of F(t^u) for a flat pattern-coordinate vector u.
inline std::vector<long long> specialize_exponent(const IntVector& u, int n) {
    Layout layout{n};
    std::vector<long long> e(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n - i; ++j) {
            long long a = u[layout.index(i, j)];
            if (a == 0) continue;
            if (i == 0) {
                e[0] += a;
            } else {
                e[i - 1] -= a;
                e[i] += a;
            }
        }
    return e;
}

inline ExponentVector apply_F(const ExponentVector& m) {
    ExponentVector out;
    for (const auto& [v, e] : m.entries()) {
        if (v.family != Variable::Family::T) throw Error("specialization applies to t-variables only");
        if (v.row == 0) {
            out.add(Variable::x(1), e);
        } else {
            out.add(Variable::x(v.row), -e);
            out.add(Variable::x(v.row + 1), e);
        }
    }
    return out;
}

/// t^u for a flat vector, as an exponent vector over t_{i,j}.
inline ExponentVector t_exponent(const IntVector& u, int n) {
    Layout layout{n};
    ExponentVector m;
    for (int k = 0; k < layout.size(); ++k) {
        Node p = layout.node(k);
        m.set(Variable::t(p.row, p.col), u[k]);
    }
    return m;
}

/// Nonzero rational x_1..x_n at which every specialized factor in play is nonzero.
struct GenericXPoint {
    std::vector<Rational> x;

    int n() const { return static_cast<int>(x.size()); }

    Rational monomial(const std::vector<long long>& e) const {
        Rational v(1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) v *= power(x[i], e[i]);
        return v;
    }
    Rational specialized(const IntVector& u) const { return monomial(specialize_exponent(u, n())); }

    /// Nonzero coordinates and nonvanishing Weyl factors 1 - x_j/x_i.
    void validate_weyl() const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) throw NonGenericPoint("x" + std::to_string(i + 1) + " is zero");
            for (std::size_t j = 0; j < i; ++j)
                if (x[i] == x[j])
                    throw NonGenericPoint("x" + std::to_string(j + 1) + " = x" + std::to_string(i + 1) +
                                          " makes a Weyl denominator factor vanish");
        }
    }

    /// F(t^r) != 1 at the point for every ray whose specialization is not identically 1.
    void validate_rays(const std::vector<IntVector>& rays) const {
        for (const auto& r : rays) {
            auto e = specialize_exponent(r, n());
            bool trivial = std::all_of(e.begin(), e.end(), [](long long a) { return a == 0; });
            if (!trivial && monomial(e) == 1) throw NonGenericPoint("point makes a specialized ray monomial equal 1");
        }
    }
};

/// Distinct primes below 100; a monomial in distinct primes equals 1 only when
/// its exponent vector is zero, so such points are generic for every ray.
inline GenericXPoint sample_x_point(int n, std::mt19937_64& rng) {
    static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    std::vector<int> pool(std::begin(primes), std::end(primes));
    if (n > static_cast<int>(pool.size())) throw Error("too many variables for prime sampling");
    GenericXPoint p;
    for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::size_t k = pick(rng);
        p.x.emplace_back(pool[k]);
        pool.erase(pool.begin() + static_cast<long>(k));
    }
    return p;
}

/// Generic rational t-point over all n(n+1)/2 pattern coordinates.
inline std::vector<Rational> sample_t_point(int n, std::mt19937_64& rng) {
    GenericXPoint p = sample_x_point(n * (n + 1) / 2, rng);
    return p.x;
}

inline void validate_t_point(const std::vector<Rational>& t, const std::vector<IntVector>& rays) {
    for (const auto& v : t)
        if (v == 0) throw NonGenericPoint("t-point has a zero coordinate");
    for (const auto& r : rays)
        if (t_monomial(r, t) == 1) throw NonGenericPoint("t-point makes a denominator factor 1 - t^r vanish");
}

/// Integer direction c with <c, r> != 0 for every ray in play; the limit
/// variable s enters through t_k = X_k s^{c_k}.
struct PerturbationVector {
    IntVector c;

    long long pairing(const IntVector& u) const {
        long long s = 0;
        for (std::size_t k = 0; k < u.size(); ++k) s += c[k] * u[k];
        return s;
    }
    bool avoids(const std::vector<IntVector>& rays) const {
        return std::all_of(rays.begin(), rays.end(), [&](const IntVector& r) { return pairing(r) != 0; });
    }
};

inline PerturbationVector sample_perturbation(int n, const std::vector<IntVector>& rays, std::mt19937_64& rng) {
    Layout layout{n};
    for (long long h = 2; h < (1LL << 20); h *= 2) {
        std::uniform_int_distribution<long long> coord(-h, h);
        for (int attempt = 0; attempt < 64; ++attempt) {
            PerturbationVector p{IntVector(layout.size())};
            for (auto& v : p.c) v = coord(rng);
            if (p.avoids(rays)) return p;
        }
    }
    throw Error("could not find a perturbation vector avoiding every ray");
}

inline std::vector<IntVector> rays_of(const std::vector<SigmaTerm>& terms) {
    std::vector<IntVector> rays;
    for (const auto& t : terms) rays.insert(rays.end(), t.denominator_rays.begin(), t.denominator_rays.end());
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

/// The numerator and denominator of Σ_terms F(σ) along t_k = X_k s^{c_k},
/// brought to a common denominator Π_r g_r(s) over the distinct rays.
struct PerturbedSum {
    UniPoly numerator;
    UniPoly denominator;
};

inline PerturbedSum perturbed_sum(const std::vector<SigmaTerm>& terms, const GenericXPoint& x,
                                  const PerturbationVector& c) {
    std::vector<IntVector> rays = rays_of(terms);
    x.validate_rays(rays);
    if (!c.avoids(rays)) throw NonGenericPoint("perturbation vector is orthogonal to a ray");

    // 1 - X s^d  =  g(s) / s^{max(0,-d)}
    std::vector<UniPoly> factors;
    std::vector<long long> lift;
    for (const auto& r : rays) {
        Rational value = x.specialized(r);
        long long d = c.pairing(r);
        if (d > 0) {
            factors.push_back(UniPoly(Rational(1)) - UniPoly::monomial(value, static_cast<std::size_t>(d)));
            lift.push_back(0);
        } else {
            factors.push_back(UniPoly::monomial(Rational(1), static_cast<std::size_t>(-d)) - UniPoly(value));
            lift.push_back(-d);
        }
    }
    auto ray_index = [&](const IntVector& r) {
        return static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin());
    };

    struct Piece {
        UniPoly cofactor;
        std::vector<std::pair<long long, Rational>> monomials;  // (s-exponent, coefficient)
    };
    std::vector<Piece> pieces;
    long long min_exp = 0;
    for (const auto& term : terms) {
        std::vector<bool> used(rays.size(), false);
        long long shift = 0;
        for (const auto& r : term.denominator_rays) {
            std::size_t k = ray_index(r);
            used[k] = true;
            shift += lift[k];
        }
        Piece piece{UniPoly(Rational(1)), {}};
        for (std::size_t k = 0; k < rays.size(); ++k)
            if (!used[k]) piece.cofactor *= factors[k];
        for (const auto& p : term.numerator_points) {
            long long e = c.pairing(p) + shift;
            min_exp = std::min(min_exp, e);
            piece.monomials.emplace_back(e, x.specialized(p));
        }
        pieces.push_back(std::move(piece));
    }

    PerturbedSum out;
    out.denominator = UniPoly(Rational(1));
    for (const auto& f : factors) out.denominator *= f;
    for (const auto& piece : pieces) {
        std::map<long long, Rational> coeffs;
        for (const auto& [e, v] : piece.monomials) coeffs[e - min_exp] += v;
        long long top = coeffs.empty() ? 0 : coeffs.rbegin()->first;
        std::vector<Rational> dense(static_cast<std::size_t>(top + 1), Rational(0));
        for (const auto& [e, v] : coeffs) dense[static_cast<std::size_t>(e)] = v;
        out.numerator += UniPoly(std::move(dense)) * piece.cofactor;
    }
    // The common factor s^{-min_exp} tends to 1 and is left out of both sides.
    return out;
}

/// F(Σ terms) at x, as the s -> 1 limit of the perturbed sum.
inline Rational specialized_value(const std::vector<SigmaTerm>& terms, const GenericXPoint& x,
                                  const PerturbationVector& c) {
    PerturbedSum sum = perturbed_sum(terms, x, c);
    return limit_at_one(sum.numerator, sum.denominator);
}

/// F(σ(C_v)) at x, from the half-open decomposition of the whole tangent cone.
inline Rational vertex_contribution(const PolytopeVertex& v, const GenericXPoint& x, const PerturbationVector& c) {
    return specialized_value(sigma_terms(tangent_cone(v)), x, c);
}

/// F(σ(C_Δ)) at x.
inline Rational component_contribution(const Subgraph& delta, const GenericXPoint& x, const PerturbationVector& c) {
    return specialized_value(sigma_terms(component_cone(delta)), x, c);
}

/// F(t^v) Π_Δ F(σ(C_Δ)) over the components of Γ_v.
inline Rational vertex_contribution_by_components(const PolytopeVertex& v, const GenericXPoint& x,
                                                  const PerturbationVector& c) {
    Rational value = x.specialized(v.pattern.flat());
    for (const auto& delta : v.graph.components) value *= component_contribution(delta, x, c);
    return value;
}

// ---------------------------------------------------------------------------
// Weyl side

/// w(e^λ / Π_{i<j}(1 - x_j/x_i)) = x^{wλ} / Π_{i<j}(1 - x_{w(j)}/x_{w(i)}) at x.
inline Rational weyl_summand(const Permutation& w, const Weight& lambda, const GenericXPoint& x) {
    const int n = lambda.size();
    if (w.size() != n || x.n() != n) throw Error("permutation, weight and point sizes differ");
    Rational num(1), den(1);
    for (int i = 1; i <= n; ++i) {
        const Rational& xi = x.x[w(i) - 1];
        if (xi == 0) throw NonGenericPoint("zero coordinate in Weyl summand");
        num *= power(xi, lambda.at(i));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rational f = 1 - x.x[w(j) - 1] / x.x[w(i) - 1];
            if (f == 0) throw NonGenericPoint("Weyl denominator factor vanishes at the point");
            den *= f;
        }
    return num / den;
}

inline Rational weyl_character(const Weight& lambda, const GenericXPoint& x) {
    require_dominant(lambda);
    x.validate_weyl();
    Rational total(0);
    for (const auto& w : all_permutations(lambda.size())) total += weyl_summand(w, lambda, x);
    return total;
}

/// Σ of Weyl summands over {w : wλ = μ}.
inline Rational grouped_contribution(const Weight& mu, const Weight& lambda, const GenericXPoint& x) {
    Rational total(0);
    bool found = false;
    for (const auto& w : all_permutations(lambda.size()))
        if (Weight(w.act(lambda.entries)) == mu) {
            found = true;
            total += weyl_summand(w, lambda, x);
        }
    if (!found) throw Error("weight " + mu.to_string() + " is not in the orbit of " + lambda.to_string());
    return total;
}

// ---------------------------------------------------------------------------
// Brion side

/// Everything a run needs about GT_λ, computed once: vertices, their σ terms,
/// and a perturbation direction valid for every ray of every tangent cone.
struct BrionContext {
    Weight lambda;
    std::vector<PolytopeVertex> vertices;
    std::vector<std::vector<SigmaTerm>> terms;
    PerturbationVector c;

    std::vector<IntVector> all_rays() const {
        std::vector<IntVector> rays;
        for (const auto& t : terms) {
            auto r = rays_of(t);
            rays.insert(rays.end(), r.begin(), r.end());
        }
        std::sort(rays.begin(), rays.end());
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        return rays;
    }
};

inline BrionContext make_context(const Weight& lambda, std::mt19937_64& rng, unsigned jobs = 1) {
    require_dominant(lambda);
    BrionContext ctx;
    ctx.lambda = lambda;
    ctx.vertices = enumerate_vertices(lambda);
    ctx.terms = parallel_map(ctx.vertices.size(), jobs,
                             [&](std::size_t k) { return sigma_terms(tangent_cone(ctx.vertices[k])); });
    ctx.c = sample_perturbation(lambda.size(), ctx.all_rays(), rng);
    return ctx;
}

inline std::vector<Rational> vertex_contributions(const BrionContext& ctx, const GenericXPoint& x, unsigned jobs = 1) {
    x.validate_rays(ctx.all_rays());
    return parallel_map(ctx.vertices.size(), jobs,
                        [&](std::size_t k) { return specialized_value(ctx.terms[k], x, ctx.c); });
}

/// Σ_v F(σ(C_v)) at x.
inline Rational brion_character(const BrionContext& ctx, const GenericXPoint& x, unsigned jobs = 1) {
    Rational total(0);
    for (const auto& v : vertex_contributions(ctx, x, jobs)) total += v;
    return total;
}

inline Rational brion_character(const Weight& lambda, const GenericXPoint& x, std::uint64_t seed = 1,
                                unsigned jobs = 1) {
    std::mt19937_64 rng(seed);
    return brion_character(make_context(lambda, rng, jobs), x, jobs);
}

/// For a simplicial vertex of a regular weight: the cone is unimodular,
/// F(t^v) = w(e^λ), and the multiset {F(t^ε)} over its rays equals
/// {w(x_j/x_i) : i < j}. Together these give F(σ(C_v)) = w(e^λ/Π(1 - x_j/x_i))
/// as rational functions.
inline bool simplicial_closed_form_matches(const PolytopeVertex& v) {
    if (!v.simplicial || !v.w) return false;
    const int n = v.pattern.n();
    Cone cone = tangent_cone(v);
    if (static_cast<int>(cone.rays.size()) != n * (n - 1) / 2) return false;
    auto pieces = half_open_triangulate(cone);
    if (pieces.size() != 1) return false;
    if (parallelepiped_points(pieces[0], true).size() != 1) return false;

    const Permutation& w = *v.w;
    std::vector<long long> apex_image = specialize_exponent(v.pattern.flat(), n);
    if (apex_image != w.act(v.pattern.top().entries)) return false;

    std::vector<std::vector<long long>> from_rays, from_weyl;
    for (const auto& r : cone.rays) from_rays.push_back(specialize_exponent(r, n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<long long> e(n, 0);
            e[w(j) - 1] += 1;
            e[w(i) - 1] -= 1;
            from_weyl.push_back(e);
        }
    std::sort(from_rays.begin(), from_rays.end());
    std::sort(from_weyl.begin(), from_weyl.end());
    return from_rays == from_weyl;
}

// ---------------------------------------------------------------------------
// σ(C_v) = Σ_{π(v')=v} t^{v-v'} σ(C_{v'}) for a singular λ and regular λ'

struct DegenerationCheck {
    GTPattern vertex;
    std::vector<GTPattern> preimages;
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

inline std::vector<DegenerationCheck> degeneration_checks(const Weight& lambda, const Weight& lambda_prime,
                                                          const std::vector<Rational>& t) {
    require_dominant(lambda);
    require_dominant(lambda_prime);
    if (!lambda_prime.is_regular()) throw InvalidWeight("companion weight must be regular");
    if (lambda.size() != lambda_prime.size()) throw InvalidWeight("weights must have the same length");
    const int n = lambda.size();
    if (static_cast<int>(t.size()) != n * (n + 1) / 2) throw Error("t-point has the wrong dimension");

    auto vertices = enumerate_vertices(lambda);
    auto sources = enumerate_vertices(lambda_prime);
    std::vector<std::vector<SigmaTerm>> source_terms;
    std::vector<IntVector> rays;
    for (const auto& vp : sources) {
        source_terms.push_back(sigma_terms(tangent_cone(vp)));
        auto r = rays_of(source_terms.back());
        rays.insert(rays.end(), r.begin(), r.end());
    }
    std::vector<std::vector<SigmaTerm>> target_terms;
    for (const auto& v : vertices) {
        target_terms.push_back(sigma_terms(tangent_cone(v)));
        auto r = rays_of(target_terms.back());
        rays.insert(rays.end(), r.begin(), r.end());
    }
    validate_t_point(t, rays);

    std::vector<DegenerationCheck> out;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        DegenerationCheck check{vertices[k].pattern, {}, sigma_value(target_terms[k], t), Rational(0)};
        IntVector v = vertices[k].pattern.flat();
        for (std::size_t m = 0; m < sources.size(); ++m) {
            if (project_vertex(sources[m], lambda_prime, lambda).pattern != vertices[k].pattern) continue;
            IntVector vp = sources[m].pattern.flat();
            IntVector shift(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) shift[i] = v[i] - vp[i];
            check.preimages.push_back(sources[m].pattern);
            check.rhs += t_monomial(shift, t) * sigma_value(source_terms[m], t);
        }
        out.push_back(std::move(check));
    }
    return out;
}

inline bool verify_degbri(const Weight& lambda, const Weight& lambda_prime, const std::vector<Rational>& t) {
    auto checks = degeneration_checks(lambda, lambda_prime, t);
    return std::all_of(checks.begin(), checks.end(), [](const DegenerationCheck& c) { return c.holds(); });
}

}  // namespace gtbrion
