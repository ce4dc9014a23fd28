#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace gtbrion;
    CLI::App app{"Characters of GL_n via lattice points of Gelfand-Tsetlin polytopes"};
    app.require_subcommand(1);

    std::string lambda, at, t_at, companion, format = "text";
    std::uint64_t seed = 1, cap = kDefaultPatternCap;
    unsigned jobs = default_jobs();
    bool dump_cones = false;

    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", lambda, "Dominant weight, comma-separated (e.g. 5,4,2,0)")
            ->required()
            ->envname("GTBRION_LAMBDA");
        cmd->add_option("--seed", seed, "Seed for every sampled point and perturbation")->envname("GTBRION_SEED");
        cmd->add_option("--format", format, "Output format: text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->envname("GTBRION_FORMAT");
        cmd->add_option("--cap", cap, "Refuse pattern enumerations larger than this")->envname("GTBRION_CAP");
        cmd->add_option("--jobs", jobs, "Worker threads for per-vertex work (default: all cores)")
            ->check(CLI::PositiveNumber)
            ->envname("GTBRION_JOBS");
    };
    auto x_point = [&](CLI::App* cmd) {
        cmd->add_option("--at", at, "Evaluation point x1,...,xn (rationals such as 2 or 3/4); must be generic");
    };

    auto* schur = app.add_subcommand("schur", "Schur polynomial, or its value with --at");
    common(schur);
    x_point(schur);
    auto* weyl = app.add_subcommand("weyl", "Weyl character formula summands at a point");
    common(weyl);
    x_point(weyl);
    auto* vertices = app.add_subcommand("vertices", "Vertices of the polytope with their equality graphs");
    common(vertices);
    vertices->add_flag("--dump-cones", dump_cones, "Include tangent-cone apex, rays and sigma terms");
    auto* contributions = app.add_subcommand("contributions", "Specialized tangent-cone contribution of each vertex");
    common(contributions);
    x_point(contributions);
    auto* verify = app.add_subcommand("verify", "Run the full consistency suite; exit 0 iff every check passes");
    common(verify);
    x_point(verify);
    verify->add_option("--t-at", t_at, "t-point (one rational per pattern coordinate) for the degeneration check");
    verify->add_option("--regular-companion", companion,
                       "Regular weight whose vertices project onto those of --lambda (enables the degeneration check)");

    CLI11_PARSE(app, argc, argv);

    cli::RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        cfg.lambda = parse_weight(lambda);
        if (!at.empty()) cfg.at = cli::parse_point(at);
        if (!t_at.empty()) cfg.t_at = cli::parse_point(t_at);
        if (!companion.empty()) cfg.companion = parse_weight(companion);
        cfg.format = cli::parse_format(format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kBadInput;
    }
    cfg.seed = seed;
    cfg.cap = cap;
    cfg.jobs = jobs;
    cfg.dump_cones = dump_cones;

    auto result = cli::run(cfg);
    (result.exit_code == cli::kOk || result.exit_code == cli::kCheckFailed ? std::cout : std::cerr) << result.output;
    return result.exit_code;
}
