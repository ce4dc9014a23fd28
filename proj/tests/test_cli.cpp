#include "cli.hpp"

#include <gtest/gtest.h>

using namespace gtbrion;
using cli::RunConfig;

namespace {

RunConfig config(std::string command, Weight lambda) {
    RunConfig c;
    c.command = std::move(command);
    c.lambda = std::move(lambda);
    return c;
}

}  // namespace

TEST(Cli, SchurExamples) {
    EXPECT_EQ(cli::run(config("schur", {1, 0})).output, "x1 + x2\n");
    auto c = config("schur", {2, 1, 0});
    c.at = cli::parse_point("1,1,1");
    EXPECT_EQ(cli::run(c).output, "8\n");
    c = config("schur", {3, 2, 1, 0});
    c.at = cli::parse_point("1, 1, 1, 1");
    EXPECT_EQ(cli::run(c).output, "64\n");
}

TEST(Cli, SchurRefusesAboveCap) {
    auto c = config("schur", {3, 2, 1, 0});
    c.cap = 63;
    auto r = cli::run(c);
    EXPECT_EQ(r.exit_code, cli::kBadInput);
    EXPECT_NE(r.output.find("64"), std::string::npos);
}

TEST(Cli, VerticesSummaries) {
    EXPECT_EQ(cli::run(config("vertices", {1, 0})).output.rfind("2 vertices, 2 simplicial", 0), 0u);
    EXPECT_EQ(cli::run(config("vertices", {5, 4, 2, 0})).output.rfind("40 vertices, 24 simplicial", 0), 0u);
    EXPECT_EQ(cli::run(config("vertices", {1, 1})).output.rfind("1 vertices", 0), 0u);
    auto c = config("vertices", {5, 4, 2, 0});
    c.format = cli::Format::Json;
    auto j = cli::Json::parse(cli::run(c).output);
    bool cyclic = false, chain = false;
    for (const auto& v : j["vertices"]) {
        auto rows = v["pattern"]["rows"].get<std::vector<std::vector<long long>>>();
        if (rows == std::vector<std::vector<long long>>{{5, 4, 2, 0}, {4, 4, 0}, {4, 0}, {4}}) cyclic = !v["simplicial"].get<bool>();
        if (rows == std::vector<std::vector<long long>>{{5, 4, 2, 0}, {5, 4, 0}, {4, 0}, {4}}) {
            chain = v["simplicial"].get<bool>();
            EXPECT_EQ(v["mu"].get<std::vector<long long>>(), (std::vector<long long>{2, 5, 0, 4}));
        }
    }
    EXPECT_TRUE(cyclic);
    EXPECT_TRUE(chain);
}

TEST(Cli, ContributionsAtUserPoint) {
    auto c = config("contributions", {1, 0});
    c.at = cli::parse_point("2,3");
    c.format = cli::Format::Json;
    auto r = cli::run(c);
    ASSERT_EQ(r.exit_code, 0);
    auto j = cli::Json::parse(r.output);
    EXPECT_EQ(j["brion_total"], "5");
    EXPECT_EQ(j["vertices"][0]["contribution"], "-4");
    EXPECT_EQ(j["vertices"][1]["contribution"], "9");
}

TEST(Cli, DegenerateUserPointIsRejected) {
    auto c = config("contributions", {1, 0});
    c.at = cli::parse_point("2,2");
    EXPECT_EQ(cli::run(c).exit_code, cli::kBadInput);
    c.at = cli::parse_point("2,3,4");
    EXPECT_EQ(cli::run(c).exit_code, cli::kBadInput);
}

TEST(Cli, VerifyExamples) {
    auto c = config("verify", {2, 1, 0});
    c.seed = 7;
    EXPECT_EQ(cli::run(c).exit_code, 0);

    c = config("verify", {2, 2, 0});
    c.seed = 7;
    c.companion = Weight{3, 2, 0};
    c.format = cli::Format::Json;
    auto r = cli::run(c);
    EXPECT_EQ(r.exit_code, 0);
    auto j = cli::Json::parse(r.output);
    bool saw_degeneration = false;
    for (const auto& check : j["checks"]) {
        EXPECT_EQ(check["status"], "pass") << check["name"];
        saw_degeneration |= check["name"] == "degeneration_identity";
    }
    EXPECT_TRUE(saw_degeneration);
    EXPECT_TRUE(j["all_equal"].get<bool>());
    EXPECT_EQ(j["brion_total"], j["schur_oracle"]);

    EXPECT_EQ(cli::run(config("verify", {1, 0})).exit_code, 0);
}

TEST(Cli, ReportsAreDeterministic) {
    for (auto format : {cli::Format::Text, cli::Format::Json, cli::Format::Csv}) {
        auto a = config("verify", {3, 1, 1, 0});
        a.format = format;
        a.seed = 11;
        auto b = a;
        b.jobs = 4;
        EXPECT_EQ(cli::run(a).output, cli::run(b).output);
    }
    auto c = config("contributions", {2, 1, 0});
    c.seed = 3;
    auto d = config("contributions", {2, 1, 0});
    d.seed = 4;
    EXPECT_EQ(cli::run(c).output, cli::run(c).output);
    EXPECT_NE(cli::run(c).output, cli::run(d).output);
}

TEST(Cli, BadInputs) {
    EXPECT_EQ(cli::run(config("schur", {0, 1})).exit_code, cli::kBadInput);
    EXPECT_EQ(cli::run(config("frobnicate", {1, 0})).exit_code, cli::kBadInput);
    auto c = config("verify", {2, 2, 0});
    c.companion = Weight{2, 2, 0};
    EXPECT_EQ(cli::run(c).exit_code, cli::kBadInput);
    EXPECT_THROW(cli::parse_point("1,,2"), Error);
    EXPECT_THROW(cli::parse_format("yaml"), Error);
}
