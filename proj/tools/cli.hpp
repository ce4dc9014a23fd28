#pragma once

// Command implementations for the gtbrion tool. Each command takes a parsed
// RunConfig and returns the exit status together with the full report text,
// so the same code path serves the binary and the tests.

#include "gtbrion/gtbrion.hpp"

#include <json.hpp>

#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gtbrion::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw Error("unknown format '" + s + "' (expected text, json or csv)");
}

struct RunConfig {
    std::string command;
    Weight lambda;
    std::optional<std::vector<Rational>> at;
    std::optional<std::vector<Rational>> t_at;
    std::optional<Weight> companion;
    std::uint64_t seed = 1;
    Format format = Format::Text;
    std::uint64_t cap = kDefaultPatternCap;
    unsigned jobs = 1;
    bool dump_cones = false;
};

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadInput = 2, kInternal = 3 };

inline std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
        if (b == std::string::npos) throw Error("empty coordinate in point '" + text + "'");
        out.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw Error("empty point");
    return out;
}

namespace detail {

inline Json json_point(const std::vector<Rational>& x) {
    Json a = Json::array();
    for (const auto& v : x) a.push_back(to_string(v));
    return a;
}

inline std::string text_point(const std::vector<Rational>& x) {
    std::string s = "(";
    for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + to_string(x[k]);
    return s + ")";
}

inline Json json_pattern(const GTPattern& p) { return Json{{"lambda", p.top().entries}, {"rows", p.rows()}}; }

inline Json json_node(const Node& p) { return Json::array({p.row, p.col}); }

inline Json json_vertex(const PolytopeVertex& v) {
    Json edges = Json::array();
    for (const auto& e : v.graph.edges) edges.push_back(Json::array({json_node(e.lower), json_node(e.upper)}));
    Json r{{"pattern", json_pattern(v.pattern)}, {"edges", edges}};
    r[v.regular_weight() ? "simplicial" : "acyclic"] = v.simplicial;
    if (v.w) r["permutation"] = v.w->images();
    r["mu"] = v.mu.entries;
    return r;
}

inline std::string csv_flat(const std::vector<long long>& v, char sep = ' ') {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? std::string(1, sep) : "") + std::to_string(v[k]);
    return s;
}

inline Json json_cone(const Cone& c, const std::vector<SigmaTerm>& terms) {
    Json rays = Json::array(), ts = Json::array();
    for (const auto& r : c.rays) rays.push_back(r);
    for (const auto& t : terms) ts.push_back({{"numerator_points", t.numerator_points}, {"denominator_rays", t.denominator_rays}});
    return {{"apex", json_point(c.apex)}, {"rays", rays}, {"terms", ts}};
}

inline void require_length(const std::vector<Rational>& x, int n, const char* what) {
    if (static_cast<int>(x.size()) != n)
        throw Error(std::string(what) + " has " + std::to_string(x.size()) + " coordinates, expected " +
                    std::to_string(n));
}

inline void require_under_cap(const Weight& lambda, std::uint64_t cap) {
    Integer count = weyl_dimension(lambda);
    if (count > Integer(std::to_string(cap))) throw CapExceeded(count, cap);
}

/// Sampled x-points (or the single override), validated against the Weyl
/// denominators and the given rays.
inline std::vector<GenericXPoint> x_points(const RunConfig& cfg, std::mt19937_64& rng, int count,
                                           const std::vector<IntVector>& rays) {
    const int n = cfg.lambda.size();
    std::vector<GenericXPoint> out;
    if (cfg.at) {
        require_length(*cfg.at, n, "--at point");
        GenericXPoint p{*cfg.at};
        p.validate_weyl();
        p.validate_rays(rays);
        out.push_back(std::move(p));
        return out;
    }
    for (int k = 0; k < count; ++k) out.push_back(sample_x_point(n, rng));
    return out;
}

inline std::vector<std::vector<Rational>> t_points(const RunConfig& cfg, std::mt19937_64& rng, int count) {
    const int n = cfg.lambda.size();
    if (cfg.t_at) {
        require_length(*cfg.t_at, n * (n + 1) / 2, "--t-at point");
        return {*cfg.t_at};
    }
    std::vector<std::vector<Rational>> out;
    for (int k = 0; k < count; ++k) out.push_back(sample_t_point(n, rng));
    return out;
}

/// How a vertex contribution relates to the Weyl side.
inline std::string classify(const PolytopeVertex& v, const Rational& value, const GenericXPoint& x) {
    const Weight& lambda = v.pattern.top();
    if (lambda.is_regular()) {
        if (v.simplicial) return value == weyl_summand(*v.w, lambda, x) ? "weyl_summand" : "mismatch";
        return value == 0 ? "zero" : "mismatch";
    }
    if (value == 0) return "zero";
    auto o = orbit(lambda);
    if (!std::binary_search(o.begin(), o.end(), v.mu)) return "mismatch";
    return value == grouped_contribution(v.mu, lambda, x) ? "group" : "mismatch";
}

/// Terms of a polynomial in x1..xn as dense exponents, lexicographically descending.
inline std::vector<std::pair<std::vector<long long>, Rational>> dense_terms(const LaurentPolynomial& p, int n) {
    std::vector<std::pair<std::vector<long long>, Rational>> out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<long long> e(n, 0);
        for (const auto& [var, k] : m.entries()) e[var.row - 1] = k;
        out.emplace_back(std::move(e), c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

}  // namespace detail

// ---------------------------------------------------------------------------

inline CommandResult cmd_schur(const RunConfig& cfg) {
    require_dominant(cfg.lambda);
    detail::require_under_cap(cfg.lambda, cfg.cap);
    const int n = cfg.lambda.size();
    std::ostringstream out;
    if (cfg.at) {
        detail::require_length(*cfg.at, n, "--at point");
        Rational v = schur_eval(cfg.lambda, *cfg.at, cfg.cap);
        if (cfg.format == Format::Json)
            out << Json{{"lambda", cfg.lambda.entries}, {"at", detail::json_point(*cfg.at)}, {"value", to_string(v)}}.dump(2)
                << "\n";
        else if (cfg.format == Format::Csv)
            out << "value\n" << to_string(v) << "\n";
        else
            out << to_string(v) << "\n";
        return {kOk, out.str()};
    }
    LaurentPolynomial s = schur_polynomial(cfg.lambda, cfg.cap);
    if (cfg.format == Format::Json) {
        Json terms = Json::array();
        for (const auto& [e, c] : detail::dense_terms(s, n))
            terms.push_back({{"exponent", e}, {"coefficient", to_string(c)}});
        out << Json{{"lambda", cfg.lambda.entries}, {"polynomial", s.to_string()}, {"terms", terms}}.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "coefficient";
        for (int i = 1; i <= n; ++i) out << ",x" << i;
        out << "\n";
        for (const auto& [e, c] : detail::dense_terms(s, n)) out << to_string(c) << "," << detail::csv_flat(e, ',') << "\n";
    } else {
        out << s.to_string() << "\n";
    }
    return {kOk, out.str()};
}

inline CommandResult cmd_weyl(const RunConfig& cfg) {
    require_dominant(cfg.lambda);
    std::mt19937_64 rng(cfg.seed);
    GenericXPoint x = detail::x_points(cfg, rng, 1, {}).front();
    x.validate_weyl();
    std::ostringstream out;
    Rational total(0);
    Json summands = Json::array();
    std::vector<std::pair<Permutation, Rational>> rows;
    for (const auto& w : all_permutations(cfg.lambda.size())) {
        Rational v = weyl_summand(w, cfg.lambda, x);
        total += v;
        rows.emplace_back(w, v);
    }
    if (cfg.format == Format::Json) {
        for (const auto& [w, v] : rows) summands.push_back({{"permutation", w.images()}, {"value", to_string(v)}});
        out << Json{{"lambda", cfg.lambda.entries}, {"at", detail::json_point(x.x)}, {"summands", summands},
                    {"value", to_string(total)}}
                   .dump(2)
            << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "permutation,value\n";
        for (const auto& [w, v] : rows) out << detail::csv_flat({w.images().begin(), w.images().end()}) << "," << to_string(v) << "\n";
        out << "total," << to_string(total) << "\n";
    } else {
        out << "weyl character of " << cfg.lambda.to_string() << " at " << detail::text_point(x.x) << "\n";
        for (const auto& [w, v] : rows) out << "  w = " << w.to_string() << "  " << to_string(v) << "\n";
        out << "total " << to_string(total) << "\n";
    }
    return {kOk, out.str()};
}

inline CommandResult cmd_vertices(const RunConfig& cfg) {
    require_dominant(cfg.lambda);
    auto vertices = enumerate_vertices(cfg.lambda);
    std::size_t simplicial = 0;
    for (const auto& v : vertices) simplicial += v.simplicial;
    const bool regular = cfg.lambda.is_regular();
    const char* label = regular ? "simplicial" : "acyclic";
    std::ostringstream out;
    if (cfg.format == Format::Json) {
        Json list = Json::array();
        for (const auto& v : vertices) {
            Json r = detail::json_vertex(v);
            if (cfg.dump_cones) {
                Cone c = tangent_cone(v);
                r["cone"] = detail::json_cone(c, sigma_terms(c));
            }
            list.push_back(std::move(r));
        }
        Json summary{{"vertices", vertices.size()}};
        summary[label] = simplicial;
        out << Json{{"lambda", cfg.lambda.entries}, {"summary", summary}, {"vertices", list}}.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "pattern,mu," << label << ",permutation,edges\n";
        for (const auto& v : vertices)
            out << detail::csv_flat(v.pattern.flat()) << "," << detail::csv_flat(v.mu.entries) << ","
                << (v.simplicial ? "true" : "false") << ","
                << (v.w ? detail::csv_flat({v.w->images().begin(), v.w->images().end()}) : "") << ","
                << v.graph.edges.size() << "\n";
    } else {
        out << vertices.size() << " vertices, " << simplicial << " " << label << "\n";
        for (const auto& v : vertices) {
            out << "  " << v.pattern.to_string() << "  mu=" << v.mu.to_string() << "  "
                << (v.simplicial ? label : std::string("non-") + label);
            if (v.w) out << "  w=" << v.w->to_string();
            out << "\n";
            if (cfg.dump_cones) {
                Cone c = tangent_cone(v);
                out << "    apex " << detail::text_point(c.apex) << "\n";
                for (const auto& r : c.rays) out << "    ray  " << detail::csv_flat(r) << "\n";
                for (const auto& t : sigma_terms(c)) {
                    out << "    term " << t.numerator_points.size() << " point(s) over " << t.denominator_rays.size()
                        << " ray(s)\n";
                    for (const auto& p : t.numerator_points) out << "      point " << detail::csv_flat(p) << "\n";
                }
            }
        }
    }
    return {kOk, out.str()};
}

inline CommandResult cmd_contributions(const RunConfig& cfg) {
    require_dominant(cfg.lambda);
    std::mt19937_64 rng(cfg.seed);
    BrionContext ctx = make_context(cfg.lambda, rng, cfg.jobs);
    GenericXPoint x = detail::x_points(cfg, rng, 1, ctx.all_rays()).front();
    auto values = vertex_contributions(ctx, x, cfg.jobs);
    Rational total(0);
    for (const auto& v : values) total += v;
    std::ostringstream out;
    if (cfg.format == Format::Json) {
        Json list = Json::array();
        for (std::size_t k = 0; k < values.size(); ++k) {
            Json r = detail::json_vertex(ctx.vertices[k]);
            r["contribution"] = to_string(values[k]);
            r["match"] = detail::classify(ctx.vertices[k], values[k], x);
            list.push_back(std::move(r));
        }
        out << Json{{"lambda", cfg.lambda.entries}, {"at", detail::json_point(x.x)}, {"vertices", list},
                    {"brion_total", to_string(total)}}
                   .dump(2)
            << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "pattern,mu,contribution,match\n";
        for (std::size_t k = 0; k < values.size(); ++k)
            out << detail::csv_flat(ctx.vertices[k].pattern.flat()) << "," << detail::csv_flat(ctx.vertices[k].mu.entries)
                << "," << to_string(values[k]) << "," << detail::classify(ctx.vertices[k], values[k], x) << "\n";
    } else {
        out << "contributions for " << cfg.lambda.to_string() << " at " << detail::text_point(x.x) << "\n";
        for (std::size_t k = 0; k < values.size(); ++k)
            out << "  " << ctx.vertices[k].pattern.to_string() << "  " << to_string(values[k]) << "  ("
                << detail::classify(ctx.vertices[k], values[k], x) << ")\n";
        out << "total " << to_string(total) << "\n";
    }
    return {kOk, out.str()};
}

// ---------------------------------------------------------------------------

inline CommandResult cmd_verify(const RunConfig& cfg) {
    using detail::Check;
    const Weight& lambda = cfg.lambda;
    require_dominant(lambda);
    detail::require_under_cap(lambda, cfg.cap);
    if (cfg.companion) {
        require_dominant(*cfg.companion);
        if (!cfg.companion->is_regular()) throw InvalidWeight("--regular-companion must be a regular weight");
        if (cfg.companion->size() != lambda.size()) throw InvalidWeight("--regular-companion must have the same length as --lambda");
    }
    const int n = lambda.size();
    const bool regular = lambda.is_regular();
    std::mt19937_64 rng(cfg.seed);
    BrionContext ctx = make_context(lambda, rng, cfg.jobs);
    auto points = detail::x_points(cfg, rng, 3, ctx.all_rays());
    std::vector<Check> checks;
    auto add = [&](std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };

    auto patterns = enumerate_patterns(lambda, cfg.cap);
    add("pattern_count", Integer(static_cast<unsigned long>(patterns.size())) == weyl_dimension(lambda),
        std::to_string(patterns.size()) + " patterns");

    // Vertex structure.
    {
        std::string bad;
        for (const auto& v : ctx.vertices)
            if (tight_dimension(v.pattern) != 0) bad = v.pattern.to_string();
        add("vertices_zero_dimensional", bad.empty(), bad);
        std::string odd;
        for (const auto& v : ctx.vertices)
            for (const auto& delta : v.graph.components)
                if (!component_ray_discrepancies(delta).empty()) odd = v.pattern.to_string();
        add("component_ray_shapes", odd.empty(), odd);
    }
    if (regular) {
        std::set<Permutation> perms;
        std::size_t simplicial = 0;
        std::string bad_mu, bad_rays;
        for (const auto& v : ctx.vertices) {
            if (!v.simplicial) continue;
            ++simplicial;
            perms.insert(*v.w);
            if (Weight(v.w->act(lambda.entries)) != v.mu) bad_mu = v.pattern.to_string();
            std::set<IntVector> a, b;
            for (const auto& pr : simplicial_vertex_rays(v)) a.insert(pr.ray);
            for (const auto& r : tangent_cone(v).rays) b.insert(r);
            if (a != b || !simplicial_closed_form_matches(v)) bad_rays = v.pattern.to_string();
        }
        std::size_t factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= static_cast<std::size_t>(k);
        add("simplicial_count", simplicial == factorial,
            std::to_string(simplicial) + " simplicial, expected " + std::to_string(factorial));
        add("permutation_bijection", perms.size() == factorial && simplicial == factorial);
        add("mu_equals_w_lambda", bad_mu.empty(), bad_mu);
        add("simplicial_rays_closed_form", bad_rays.empty(), bad_rays);
    }

    // Values at every point.
    std::vector<Rational> first_values;
    Rational brion_first, schur_first, weyl_first;
    bool all_equal = true;
    std::string value_fail, match_fail, orbit_fail, component_fail, product_fail, perturb_fail;
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto& x = points[p];
        auto values = vertex_contributions(ctx, x, cfg.jobs);
        Rational brion(0);
        for (const auto& v : values) brion += v;
        Rational schur = schur_eval(lambda, x.x, cfg.cap);
        Rational weyl = weyl_character(lambda, x);
        if (!(brion == schur && schur == weyl)) {
            all_equal = false;
            value_fail = "at " + detail::text_point(x.x) + ": brion " + to_string(brion) + ", schur " + to_string(schur) +
                         ", weyl " + to_string(weyl);
        }
        if (p == 0) {
            first_values = values;
            brion_first = brion;
            schur_first = schur;
            weyl_first = weyl;
        }
        std::set<Weight> nonzero_mu;
        bool orbit_ok = true;
        for (std::size_t k = 0; k < values.size(); ++k) {
            const auto& v = ctx.vertices[k];
            if (detail::classify(v, values[k], x) == "mismatch")
                match_fail = v.pattern.to_string() + " at " + detail::text_point(x.x);
            if (values[k] != 0 && !nonzero_mu.insert(v.mu).second) orbit_ok = false;
        }
        auto o = orbit(lambda);
        if (!orbit_ok || nonzero_mu != std::set<Weight>(o.begin(), o.end()))
            orbit_fail = "nonzero vertices do not match the orbit at " + detail::text_point(x.x);
    }
    add("brion_equals_schur_equals_weyl", all_equal, value_fail);
    add(regular ? "vertex_contributions_match_weyl_summands" : "vertex_contributions_match_grouped_summands",
        match_fail.empty(), match_fail);
    add("nonzero_vertices_biject_with_orbit", orbit_fail.empty(), orbit_fail);

    // Components and perturbation independence, at the first point.
    {
        const auto& x = points.front();
        for (std::size_t k = 0; k < ctx.vertices.size(); ++k) {
            const auto& v = ctx.vertices[k];
            std::vector<IntVector> rays = rays_of(ctx.terms[k]);
            std::vector<std::vector<SigmaTerm>> comp_terms;
            for (const auto& delta : v.graph.components) {
                comp_terms.push_back(sigma_terms(component_cone(delta)));
                auto r = rays_of(comp_terms.back());
                rays.insert(rays.end(), r.begin(), r.end());
            }
            auto c = sample_perturbation(n, rays, rng);
            x.validate_rays(rays);
            Rational product = x.specialized(v.pattern.flat());
            for (std::size_t d = 0; d < comp_terms.size(); ++d) {
                Rational value = specialized_value(comp_terms[d], x, c);
                product *= value;
                const auto& delta = v.graph.components[d];
                if (delta.top_nodes().size() == 1 && (value == 0) != delta.has_cycle())
                    component_fail = v.pattern.to_string();
            }
            Rational direct = specialized_value(ctx.terms[k], x, c);
            if (product != direct) product_fail = v.pattern.to_string();
            if (direct != first_values[k]) perturb_fail = v.pattern.to_string();
        }
    }
    add("cyclic_components_vanish", component_fail.empty(), component_fail);
    add("component_product_identity", product_fail.empty(), product_fail);
    add("perturbation_invariance", perturb_fail.empty(), perturb_fail);

    if (cfg.companion) {
        std::string fail;
        for (const auto& t : detail::t_points(cfg, rng, 2))
            for (const auto& check : degeneration_checks(lambda, *cfg.companion, t))
                if (!check.holds()) fail = check.vertex.to_string() + " at " + detail::text_point(t);
        add("degeneration_identity", fail.empty(), fail);
    }

    bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    std::ostringstream out;
    const auto& x0 = points.front();
    if (cfg.format == Format::Json) {
        Json vs = Json::array();
        for (std::size_t k = 0; k < ctx.vertices.size(); ++k) {
            const auto& v = ctx.vertices[k];
            Json r{{"mu", v.mu.entries}};
            r[regular ? "simplicial" : "acyclic"] = v.simplicial;
            r["contribution"] = to_string(first_values[k]);
            r["match"] = detail::classify(v, first_values[k], x0);
            vs.push_back(std::move(r));
        }
        Json cs = Json::array();
        for (const auto& c : checks) {
            Json r{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
            if (!c.detail.empty()) r["detail"] = c.detail;
            cs.push_back(std::move(r));
        }
        Json pts = Json::array();
        for (const auto& x : points) pts.push_back(detail::json_point(x.x));
        Json report{{"lambda", lambda.entries}, {"seed", cfg.seed}, {"points", pts}, {"vertices", vs},
                    {"brion_total", to_string(brion_first)}, {"schur_oracle", to_string(schur_first)},
                    {"weyl_total", to_string(weyl_first)}, {"all_equal", all_equal}, {"checks", cs},
                    {"status", pass ? "pass" : "fail"}};
        if (cfg.companion) report["regular_companion"] = cfg.companion->entries;
        out << report.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
        out << "check,status,detail\n";
        for (const auto& c : checks) out << c.name << "," << (c.pass ? "pass" : "fail") << "," << c.detail << "\n";
    } else {
        out << "verify " << lambda.to_string() << " seed " << cfg.seed << "\n";
        out << "  brion " << to_string(brion_first) << "  schur " << to_string(schur_first) << "  weyl "
            << to_string(weyl_first) << "  at " << detail::text_point(x0.x) << "\n";
        for (const auto& c : checks) {
            out << "  " << (c.pass ? "pass " : "FAIL ") << c.name;
            if (!c.detail.empty()) out << "  (" << c.detail << ")";
            out << "\n";
        }
        out << (pass ? "all checks passed" : "some checks failed") << "\n";
    }
    return {pass ? kOk : kCheckFailed, out.str()};
}

/// Dispatch with errors mapped to exit codes; messages go to the output.
inline CommandResult run(const RunConfig& cfg) {
    try {
        if (cfg.command == "schur") return cmd_schur(cfg);
        if (cfg.command == "weyl") return cmd_weyl(cfg);
        if (cfg.command == "vertices") return cmd_vertices(cfg);
        if (cfg.command == "contributions") return cmd_contributions(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        return {kBadInput, "error: unknown command '" + cfg.command + "'\n"};
    } catch (const CapExceeded& e) {
        return {kBadInput, "error: refusing to enumerate: " + std::string(e.what()) + " (raise --cap to proceed)\n"};
    } catch (const InternalInconsistency& e) {
        return {kInternal, "internal inconsistency: " + std::string(e.what()) + "\n"};
    } catch (const Error& e) {
        return {kBadInput, "error: " + std::string(e.what()) + "\n"};
    }
}

}  // namespace gtbrion::cli
