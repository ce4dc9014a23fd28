#include "gtbrion/brion.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace gtbrion;

namespace {

Rational q(long long a, long long b = 1) { return make_rational(a, b); }

const GTPattern kCyclicVertex({{5, 4, 2, 0}, {4, 4, 0}, {4, 0}, {4}});
const GTPattern kChainVertex({{5, 4, 2, 0}, {5, 4, 0}, {4, 0}, {4}});

GenericXPoint point(std::initializer_list<long long> values) {
    GenericXPoint p;
    for (auto v : values) p.x.emplace_back(static_cast<long>(v));
    return p;
}

PerturbationVector perturbation_for(const std::vector<SigmaTerm>& terms, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_perturbation(n, rays_of(terms), rng);
}

Rational contribution(const PolytopeVertex& v, const GenericXPoint& x, std::uint64_t seed = 1) {
    auto terms = sigma_terms(tangent_cone(v));
    return specialized_value(terms, x, perturbation_for(terms, v.pattern.n(), seed));
}

std::vector<Rational> generic_t(int n, const std::vector<IntVector>& rays, std::mt19937_64& rng) {
    auto t = sample_t_point(n, rng);
    validate_t_point(t, rays);
    return t;
}

}  // namespace

TEST(ApplyF, Examples) {
    EXPECT_EQ(apply_F(t_exponent(kChainVertex.flat(), 4)),
              weight_monomial({2, 5, 0, 4}));
    ExponentVector t11 = ExponentVector::single(Variable::t(1, 1));
    ExponentVector expected;
    expected.set(Variable::x(1), -1);
    expected.set(Variable::x(2), 1);
    EXPECT_EQ(apply_F(t11), expected);
    EXPECT_TRUE(apply_F(ExponentVector{}).empty());
}

TEST(ApplyF, PatternExponentialIsWeight) {
    for (const Weight& l : {Weight{2, 1, 0}, Weight{3, 1, 1, 0}, Weight{1, -1}})
        for (const auto& a : enumerate_patterns(l)) {
            EXPECT_EQ(apply_F(t_exponent(a.flat(), l.size())), weight_monomial(weight_of(a)));
            EXPECT_EQ(specialize_exponent(a.flat(), l.size()), weight_of(a).entries);
        }
}

TEST(VertexContribution, Segment) {
    auto x = point({2, 3});
    auto high = make_vertex(GTPattern({{1, 0}, {0}}));
    auto low = make_vertex(GTPattern({{1, 0}, {1}}));
    EXPECT_EQ(contribution(high, x), q(-4));
    EXPECT_EQ(contribution(low, x), q(9));
    EXPECT_EQ(contribution(high, x) + contribution(low, x), q(5));
}

TEST(VertexContribution, CyclicVertexVanishes) {
    std::mt19937_64 rng(17);
    auto v = make_vertex(kCyclicVertex);
    for (int trial = 0; trial < 3; ++trial) EXPECT_EQ(contribution(v, sample_x_point(4, rng), trial + 1), q(0));
}

TEST(VertexContribution, RejectsNonGenericPoints) {
    auto v = make_vertex(GTPattern({{1, 0}, {1}}));
    EXPECT_THROW(contribution(v, point({2, 2})), NonGenericPoint);
}

TEST(ComponentContribution, Examples) {
    auto x = point({2, 3});
    Subgraph edge(2, {{0, 1}, {1, 1}});
    auto terms = sigma_terms(component_cone(edge));
    // Single ray t_{1,1}^{-1}, F-image x1/x2.
    EXPECT_EQ(specialized_value(terms, x, perturbation_for(terms, 2, 3)), 1 / (1 - q(2, 3)));

    auto cyclic = make_vertex(kCyclicVertex);
    std::mt19937_64 rng(8);
    auto x4 = sample_x_point(4, rng);
    for (const auto& delta : cyclic.graph.components) {
        auto t = sigma_terms(component_cone(delta));
        Rational value = specialized_value(t, x4, perturbation_for(t, 4, 5));
        if (delta.has_cycle()) {
            EXPECT_EQ(delta.size(), 5u);
            EXPECT_EQ(value, q(0));
        } else {
            EXPECT_NE(value, q(0));
        }
    }
}

TEST(WeylSummand, Examples) {
    auto x = point({2, 3});
    EXPECT_EQ(weyl_summand(Permutation::identity(2), {1, 0}, x), q(-4));
    EXPECT_EQ(weyl_summand(Permutation({2, 1}), {1, 0}, x), q(9));
    EXPECT_EQ(weyl_character({1, 0}, x), q(5));
    EXPECT_EQ(weyl_character({1, 1}, x), q(6));
    EXPECT_EQ(weyl_character({0, 0, 0}, point({2, 5, 7})), q(1));
    EXPECT_EQ(weyl_character({2, 1, 0}, point({1, 2, 3})), schur_eval({2, 1, 0}, {q(1), q(2), q(3)}));
    EXPECT_THROW(weyl_character({1, 0}, point({2, 2})), NonGenericPoint);
}

TEST(GroupedContribution, Examples) {
    auto x = point({2, 3});
    EXPECT_EQ(grouped_contribution({1, 1}, {1, 1}, x), q(6));
    EXPECT_EQ(grouped_contribution({0, 1}, {1, 0}, x), weyl_summand(Permutation({2, 1}), {1, 0}, x));
    EXPECT_THROW(grouped_contribution({2, 0}, {1, 0}, x), Error);

    auto x3 = point({2, 3, 5});
    Rational total(0);
    for (const auto& mu : orbit({2, 2, 0})) total += grouped_contribution(mu, {2, 2, 0}, x3);
    EXPECT_EQ(total, schur_eval({2, 2, 0}, x3.x));
}

TEST(BrionCharacter, Examples) {
    EXPECT_EQ(brion_character(Weight{1, 0}, point({2, 3})), q(5));
    EXPECT_EQ(brion_character(Weight{1, 1}, point({2, 3})), q(6));
    std::mt19937_64 rng(99);
    auto x = sample_x_point(4, rng);
    EXPECT_EQ(brion_character(Weight{5, 4, 2, 0}, x, 7, 2), schur_eval({5, 4, 2, 0}, x.x));
}

TEST(BrionCharacter, MatchesOraclesOnManyWeights) {
    std::mt19937_64 rng(1234);
    for (const Weight& l : {Weight{2, 0}, Weight{3, -1}, Weight{2, 1, 0}, Weight{2, 2, 0}, Weight{1, 0, -1},
                            Weight{3, 3, 1}, Weight{2, 1, 1, 0}, Weight{1, 1, 0, 0}}) {
        auto ctx = make_context(l, rng);
        for (int trial = 0; trial < 2; ++trial) {
            auto x = sample_x_point(l.size(), rng);
            Rational b = brion_character(ctx, x);
            EXPECT_EQ(b, schur_eval(l, x.x)) << l.to_string();
            EXPECT_EQ(b, weyl_character(l, x)) << l.to_string();
        }
    }
}

TEST(SimplicialVertices, SimplicialAndNonSimplicial) {
    std::mt19937_64 rng(31);
    for (const Weight& l : {Weight{2, 1, 0}, Weight{3, 2, 1, 0}, Weight{4, 1, 0}}) {
        auto ctx = make_context(l, rng);
        auto x = sample_x_point(l.size(), rng);
        auto values = vertex_contributions(ctx, x, 2);
        for (std::size_t k = 0; k < ctx.vertices.size(); ++k) {
            const auto& v = ctx.vertices[k];
            if (v.simplicial) {
                EXPECT_EQ(values[k], weyl_summand(*v.w, l, x)) << v.pattern.to_string();
                EXPECT_TRUE(simplicial_closed_form_matches(v)) << v.pattern.to_string();
            } else {
                EXPECT_EQ(values[k], q(0)) << v.pattern.to_string();
            }
        }
    }
}

TEST(Components, CyclicComponentsVanishAndComponentsMultiply) {
    std::mt19937_64 rng(41);
    for (const Weight& l : {Weight{2, 1, 0}, Weight{3, 2, 1, 0}, Weight{2, 2, 0}}) {
        auto x = sample_x_point(l.size(), rng);
        for (const auto& v : enumerate_vertices(l)) {
            std::vector<SigmaTerm> all = sigma_terms(tangent_cone(v));
            std::vector<IntVector> rays = rays_of(all);
            for (const auto& delta : v.graph.components) {
                auto r = rays_of(sigma_terms(component_cone(delta)));
                rays.insert(rays.end(), r.begin(), r.end());
            }
            auto c = sample_perturbation(l.size(), rays, rng);
            for (const auto& delta : v.graph.components) {
                if (delta.top_nodes().size() != 1) continue;
                Rational value = component_contribution(delta, x, c);
                if (delta.has_cycle()) EXPECT_EQ(value, q(0));
                else EXPECT_NE(value, q(0));
            }
            EXPECT_EQ(vertex_contribution_by_components(v, x, c), vertex_contribution(v, x, c))
                << v.pattern.to_string();
        }
    }
}

TEST(SingularWeights, SingularContributionsFollowTheOrbit) {
    std::mt19937_64 rng(51);
    for (const Weight& l : {Weight{1, 1}, Weight{2, 2, 0}, Weight{2, 0, 0}, Weight{3, 1, 1, 0}}) {
        auto ctx = make_context(l, rng);
        auto x = sample_x_point(l.size(), rng);
        auto values = vertex_contributions(ctx, x);
        std::set<Weight> mus;
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (values[k] == 0) continue;
            EXPECT_TRUE(mus.insert(ctx.vertices[k].mu).second);
            EXPECT_EQ(values[k], grouped_contribution(ctx.vertices[k].mu, l, x));
        }
        auto o = orbit(l);
        EXPECT_EQ(mus, std::set<Weight>(o.begin(), o.end())) << l.to_string();
    }
}

TEST(Perturbation, LimitDoesNotDependOnDirection) {
    std::mt19937_64 rng(61);
    for (const Weight& l : {Weight{2, 1, 0}, Weight{2, 2, 0}, Weight{3, 1, 1, 0}}) {
        auto x = sample_x_point(l.size(), rng);
        for (const auto& v : enumerate_vertices(l)) {
            auto terms = sigma_terms(tangent_cone(v));
            auto a = perturbation_for(terms, l.size(), 100);
            auto b = perturbation_for(terms, l.size(), 200);
            ASSERT_NE(a.c, b.c);
            EXPECT_EQ(specialized_value(terms, x, a), specialized_value(terms, x, b)) << v.pattern.to_string();
        }
    }
}

TEST(Degeneration, Examples) {
    std::mt19937_64 rng(71);
    auto checks = degeneration_checks({1, 1}, {1, 0}, generic_t(2, {}, rng));
    ASSERT_EQ(checks.size(), 1u);
    EXPECT_EQ(checks[0].preimages.size(), 2u);
    EXPECT_TRUE(checks[0].holds());

    for (const auto& [l, lp] : std::vector<std::pair<Weight, Weight>>{
             {{2, 2, 0}, {2, 1, 0}}, {{2, 2, 0}, {3, 2, 0}}, {{2, 1, 0}, {2, 1, 0}}, {{2, 2, 1, 0}, {3, 2, 1, 0}}}) {
        for (int trial = 0; trial < 2; ++trial) {
            auto t = sample_t_point(l.size(), rng);
            EXPECT_TRUE(verify_degbri(l, lp, t)) << l.to_string() << " from " << lp.to_string();
        }
    }
    auto same = degeneration_checks({2, 1, 0}, {2, 1, 0}, sample_t_point(3, rng));
    for (const auto& c : same) EXPECT_EQ(c.preimages, std::vector<GTPattern>{c.vertex});
}

TEST(Degeneration, RejectsSingularCompanion) {
    std::mt19937_64 rng(72);
    EXPECT_THROW(verify_degbri({2, 2, 0}, {2, 2, 0}, sample_t_point(3, rng)), InvalidWeight);
}
