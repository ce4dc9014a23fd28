// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

#include "gtbrion/gtbrion.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace gtbrion;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    return f;
}

std::string str(const std::vector<Rational>& x) {
    std::string s = "(";
    for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + to_string(x[k]);
    return s + ")";
}

Outcome oracle_equivalence() {
    Outcome out;
    std::mt19937_64 rng(101);
    int checked = 0;
    for (const Weight& l : {Weight{1, 0}, Weight{2, 0}, Weight{1, 1}, Weight{2, 1, 0}, Weight{2, 2, 0},
                            Weight{5, 4, 2, 0}, Weight{3, 2, 1, 0}, Weight{3, 1, 1, 0}}) {
        auto ctx = make_context(l, rng, default_jobs());
        for (int p = 0; p < 3; ++p) {
            auto x = sample_x_point(l.size(), rng);
            Rational b = brion_character(ctx, x, default_jobs());
            Rational w = weyl_character(l, x);
            Rational s = schur_eval(l, x.x);
            if (!(b == w && w == s)) out.fail(l.to_string() + " at " + str(x.x));
            ++checked;
        }
    }
    out.detail = out.pass ? std::to_string(checked) + " (weight, point) pairs agree" : out.detail;
    return out;
}

Outcome simplicial_counting() {
    Outcome out;
    std::mt19937_64 rng(202);
    std::uniform_int_distribution<int> size(2, 4), step(1, 4), base(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        int n = size(rng);
        std::vector<long long> e(n);
        e[n - 1] = base(rng);
        for (int i = n - 2; i >= 0; --i) e[i] = e[i + 1] + step(rng);
        Weight l(e);
        std::set<Permutation> perms;
        std::size_t count = 0;
        for (const auto& v : enumerate_vertices(l))
            if (v.simplicial) {
                ++count;
                perms.insert(vertex_permutation(v));
            }
        auto all = all_permutations(n);
        if (count != factorial(n) || perms != std::set<Permutation>(all.begin(), all.end()))
            out.fail(l.to_string() + ": " + std::to_string(count) + " simplicial vertices");
    }
    if (out.pass) out.detail = "10 random regular weights, n in {2,3,4}";
    return out;
}

Outcome regular_contributions() {
    Outcome out;
    const Weight l{5, 4, 2, 0};
    const GTPattern cyclic_vertex({{5, 4, 2, 0}, {4, 4, 0}, {4, 0}, {4}});
    std::mt19937_64 rng(303);
    auto ctx = make_context(l, rng, default_jobs());
    bool saw_cyclic = false;
    std::size_t simplicial = 0, other = 0;
    for (int p = 0; p < 3; ++p) {
        auto x = sample_x_point(4, rng);
        auto values = vertex_contributions(ctx, x, default_jobs());
        for (std::size_t k = 0; k < values.size(); ++k) {
            const auto& v = ctx.vertices[k];
            if (v.pattern == cyclic_vertex) saw_cyclic = !v.simplicial && values[k] == 0;
            if (v.simplicial) {
                ++simplicial;
                if (values[k] != weyl_summand(*v.w, l, x)) out.fail(v.pattern.to_string() + " at " + str(x.x));
            } else {
                ++other;
                if (values[k] != 0) out.fail(v.pattern.to_string() + " nonzero at " + str(x.x));
            }
        }
    }
    if (!saw_cyclic) out.fail("cyclic vertex missing or nonzero");
    if (out.pass)
        out.detail = std::to_string(simplicial) + " simplicial and " + std::to_string(other) +
                     " non-simplicial evaluations over 3 points";
    return out;
}

Outcome component_contributions() {
    Outcome out;
    std::mt19937_64 rng(404);
    std::size_t cyclic = 0, acyclic = 0;
    for (const Weight& l : {Weight{5, 4, 2, 0}, Weight{3, 2, 1, 0}}) {
        auto x = sample_x_point(l.size(), rng);
        for (const auto& v : enumerate_vertices(l)) {
            auto vertex_terms = sigma_terms(tangent_cone(v));
            std::vector<IntVector> rays = rays_of(vertex_terms);
            std::vector<std::vector<SigmaTerm>> component_terms;
            for (const auto& delta : v.graph.components) {
                component_terms.push_back(sigma_terms(component_cone(delta)));
                auto r = rays_of(component_terms.back());
                rays.insert(rays.end(), r.begin(), r.end());
            }
            auto c = sample_perturbation(l.size(), rays, rng);
            Rational product = x.specialized(v.pattern.flat());
            for (std::size_t d = 0; d < component_terms.size(); ++d) {
                Rational value = specialized_value(component_terms[d], x, c);
                product *= value;
                if (v.graph.components[d].has_cycle()) {
                    ++cyclic;
                    if (value != 0) out.fail("cyclic component of " + v.pattern.to_string() + " is nonzero");
                } else {
                    ++acyclic;
                    if (value == 0) out.fail("acyclic component of " + v.pattern.to_string() + " vanishes");
                }
            }
            if (product != specialized_value(vertex_terms, x, c))
                out.fail("component product differs at " + v.pattern.to_string());
        }
    }
    if (out.pass)
        out.detail = std::to_string(cyclic) + " cyclic components zero, " + std::to_string(acyclic) +
                     " acyclic nonzero, product identity per vertex";
    return out;
}

Outcome singular_contributions() {
    Outcome out;
    std::mt19937_64 rng(505);
    for (const Weight& l : {Weight{1, 1}, Weight{2, 2, 0}, Weight{3, 1, 1, 0}, Weight{2, 2, 1, 0}}) {
        auto ctx = make_context(l, rng, default_jobs());
        auto x = sample_x_point(l.size(), rng);
        auto values = vertex_contributions(ctx, x, default_jobs());
        std::vector<Weight> mus;
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (values[k] == 0) continue;
            mus.push_back(ctx.vertices[k].mu);
            if (values[k] != grouped_contribution(ctx.vertices[k].mu, l, x))
                out.fail(ctx.vertices[k].pattern.to_string() + " differs from its group sum");
        }
        std::sort(mus.begin(), mus.end());
        if (mus != orbit(l)) out.fail(l.to_string() + ": nonzero vertices do not biject with the orbit");
    }
    if (out.pass) out.detail = "4 singular weights";
    return out;
}

Outcome degeneration_identity() {
    Outcome out;
    std::mt19937_64 rng(606);
    int checked = 0;
    for (const auto& [l, lp] : std::vector<std::pair<Weight, Weight>>{
             {{1, 1}, {1, 0}}, {{2, 2, 0}, {3, 2, 0}}, {{2, 2, 1, 0}, {3, 2, 1, 0}}}) {
        for (int p = 0; p < 2; ++p) {
            auto t = sample_t_point(l.size(), rng);
            for (const auto& check : degeneration_checks(l, lp, t)) {
                ++checked;
                if (!check.holds()) out.fail(check.vertex.to_string() + " from " + lp.to_string());
            }
        }
    }
    if (out.pass) out.detail = std::to_string(checked) + " vertex identities over 6 t-points";
    return out;
}

Outcome counting_sanity() {
    Outcome out;
    const std::vector<std::pair<Weight, std::size_t>> expected = {{{1, 0}, 2}, {{2, 1, 0}, 8}, {{3, 2, 1, 0}, 64}};
    for (const auto& [l, count] : expected)
        if (enumerate_patterns(l).size() != count || oracle::box_patterns(l).size() != count)
            out.fail(l.to_string() + " count differs from " + std::to_string(count));
    std::vector<Rational> ones(4, Rational(1));
    if (schur_eval({3, 2, 1, 0}, ones) != 64) out.fail("s_(3,2,1,0)(1,1,1,1) != 64");
    if (out.pass) out.detail = "2, 8, 64 patterns; s(1,1,1,1) = 64";
    return out;
}

Outcome series_check() {
    Outcome out;
    std::size_t cones = 0;
    for (const Weight& l : {Weight{1, 0}, Weight{2, 0}, Weight{1, 1}, Weight{3, -1}, Weight{2, 1, 0}, Weight{2, 2, 0},
                            Weight{2, 0, 0}, Weight{3, 1, 0}, Weight{3, 2, 0}, Weight{1, 1, 1}, Weight{4, 1, 0}}) {
        for (const auto& v : enumerate_vertices(l)) {
            Cone c = tangent_cone(v);
            IntVector apex = v.pattern.flat();
            if (oracle::expand_terms(sigma_terms(c), apex, 4) != oracle::cone_points_in_ball(c, 4))
                out.fail(v.pattern.to_string());
            ++cones;
        }
    }
    if (out.pass) out.detail = std::to_string(cones) + " vertex cones, bound 4";
    return out;
}

Outcome perturbation_invariance() {
    Outcome out;
    std::mt19937_64 rng(909);
    std::size_t count = 0;
    for (const Weight& l : {Weight{2, 1, 0}, Weight{2, 2, 0}}) {
        auto x = sample_x_point(l.size(), rng);
        for (const auto& v : enumerate_vertices(l)) {
            auto terms = sigma_terms(tangent_cone(v));
            auto a = sample_perturbation(l.size(), rays_of(terms), rng);
            auto b = sample_perturbation(l.size(), rays_of(terms), rng);
            if (a.c == b.c) out.fail("perturbation samples coincide at " + v.pattern.to_string());
            if (specialized_value(terms, x, a) != specialized_value(terms, x, b)) out.fail(v.pattern.to_string());
            ++count;
        }
    }
    if (out.pass) out.detail = std::to_string(count) + " vertices, two perturbations each";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 oracle equivalence (Brion = Weyl = Schur)", oracle_equivalence},
        {"2 simplicial vertex count n! and bijection onto S_n", simplicial_counting},
        {"3 vertex contributions for (5,4,2,0)", regular_contributions},
        {"4 cyclic components vanish, component product identity", component_contributions},
        {"5 singular weights: contributions grouped by the orbit", singular_contributions},
        {"6 degeneration identity", degeneration_identity},
        {"7 counting sanity", counting_sanity},
        {"8 cone series check", series_check},
        {"9 perturbation invariance", perturbation_invariance},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << o.detail << "; "
             << static_cast<long>(ms) << " ms]";
        std::cout << line.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all 9 criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
