#include "ergm/cli.hpp"
#include "ergm/error.hpp"
#include "ergm/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ergm;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "ergm-cluster");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("ergm_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_text(const std::string& name, const std::string& text)
{
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kFigure1 = R"({"n": 4, "edges": [[0,1],[0,3],[1,2],[1,3]]})";

}  // namespace

TEST_CASE("motif and graph documents", "[io]")
{
    const auto m = motif_from_json(json::parse(R"({"name":"path","m":3,"edges":[[0,1],[1,2]]})"));
    CHECK(m.p() == 2);
    CHECK(motif_from_json(motif_to_json(m)) == m);
    CHECK_THROWS_AS(motif_from_json(json::parse(R"({"m":3})")), InvalidArgument);
    CHECK_THROWS_AS(motif_from_json(json::parse(R"({"m":3,"edges":[[0,0]]})")), InvalidArgument);
    const auto g = graph_from_json(json::parse(kFigure1));
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":3,"edges":[[0,1],[1,0]]})")), InvalidArgument);
    CHECK_THROWS_AS(load_motif("no-such-motif"), InvalidArgument);
    CHECK(load_motif("triangle") == Motif::triangle());
    CHECK(load_motif(write_text("path.json", motif_to_json(m).dump()).string()) == m);
}

TEST_CASE("interaction dump round trip and canonical order", "[io]")
{
    const auto k = build_interaction(Model({Motif::edge(), Motif::two_star()}, {0.3, -0.11}), 4);
    const auto dumped = interaction_to_json(k);
    const auto back = interaction_from_json(json::parse(dumped.dump()), 4, 2);
    CHECK(back.values() == k.values());
    std::uint64_t previous = 0;
    for (const auto& entry : dumped) {
        std::vector<EdgeSite> sites;
        for (const auto& s : entry["sites"]) sites.emplace_back(s[0].get<int>(), s[1].get<int>());
        const auto bits = EdgeSubset::of(sites, 4).bits;
        CHECK(bits > previous);
        previous = bits;
    }
}

TEST_CASE("interaction golden file", "[io]")
{
    const auto golden = json::parse(slurp(fs::path(ERGM_TEST_DATA) / "two_star_n4_interaction.json"));
    const auto k = build_interaction(Model({Motif::two_star()}, {1.0}), 4);
    CHECK(interaction_to_json(k) == golden);
}

TEST_CASE("artifact round trips", "[io]")
{
    const auto r = solve_ensemble(Model({Motif::edge(), Motif::triangle()}, {0.05, 0.02}), 4);
    const auto back = ensemble_from_json(json::parse(ensemble_to_json(r).dump()));
    CHECK(back.psi_n == r.psi_n);
    CHECK(back.log_w == r.log_w);
    CHECK(back.phi_n == r.phi_n);
    CHECK(back.expectations == r.expectations);
    CHECK(back.betas == r.betas);

    ExpansionOptions opts;
    opts.order = 2;
    opts.head_links = 1;
    const auto report = expand(Model({Motif::two_star()}, {0.3}), 4, opts);
    const auto text = expansion_to_json(report).dump();
    const auto again = expansion_from_json(json::parse(text));
    CHECK(expansion_to_json(again).dump() == text);
    CHECK(again.orders[1].partial_sum == report.orders[1].partial_sum);
    CHECK(std::isinf(again.kp.tail) == std::isinf(report.kp.tail));
    CHECK(again.kp.per_site_sums == report.kp.per_site_sums);
}

TEST_CASE("format_double round trips", "[io]")
{
    for (double x : {0.1, 1.0 / 3, 6.02214076e23, -2.5e-300, 0.0})
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
}

TEST_CASE("ensemble csv golden file", "[io][cli]")
{
    const auto res = invoke({"exact", "--motif", "edge,two-star", "--beta", "0.1,0.2", "--n", "2", "--n-max", "5", "--format", "csv"});
    REQUIRE(res.code == 0);
    CHECK(res.out == slurp(fs::path(ERGM_TEST_DATA) / "exact_edge_two_star.csv"));
}

TEST_CASE("density command prints the figure-1 value", "[cli]")
{
    const auto graph = write_text("fig1.json", kFigure1);
    const auto res = invoke({"density", "--motif", "two-star", "--n", "4", "--graph", graph.string()});
    REQUIRE(res.code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["densities"][0]["t"] == "18/64");
    CHECK(j["densities"][0]["hom_count"] == 18);
}

TEST_CASE("exact command at beta 0", "[cli]")
{
    const auto res = invoke({"exact", "--motifs", "edge", "--beta", "0", "--n", "4"});
    REQUIRE(res.code == 0);
    const auto j = json::parse(res.out);
    CHECK(j[0]["psi_n"].get<double>() == Catch::Approx(6 * std::log(2.0) / 16).epsilon(1e-15));
}

TEST_CASE("region command", "[cli]")
{
    const auto res = invoke({"region", "--p", "2", "--m", "3"});
    REQUIRE(res.code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["M"].get<double>() == Catch::Approx(std::exp((std::sqrt(3.0) - 1) / 2)));
    CHECK(j["beta_budget"].get<double>() == Catch::Approx(region_bound(2, 3, optimal_M(2))));
    CHECK(invoke({"region", "--p", "1"}).code == 2);
}

TEST_CASE("expand reports a divergent tail with exit 0", "[cli]")
{
    const auto res = invoke({"expand", "--motif", "two-star", "--beta", "0.2", "--n", "4", "--order", "2", "--head-links", "1"});
    REQUIRE(res.code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["kp"]["verdict"] == "fail");
    CHECK(j["kp"]["tail"].is_null());
    CHECK(j["orders"].size() == 2);
    CHECK_FALSE(j["orders"][0]["gap_to_exact"].is_null());
}

TEST_CASE("coeffs command", "[cli]")
{
    const auto res = invoke({"coeffs", "--p", "3", "--terms", "6", "--norm", "0.001", "--M", "1.3"});
    REQUIRE(res.code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["coefficients"][5]["gamma"] == "1428");
    CHECK(j["generating_function_identity"] == true);
}

TEST_CASE("exit codes and error JSON", "[cli]")
{
    auto bad = invoke({"exact", "--motif", "edge,triangle", "--beta", "0.1", "--n", "4"});
    CHECK(bad.code == 2);
    CHECK(json::parse(bad.err)["error"] == "invalid_config");
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({"exact", "--motif", "edge", "--beta", "0.1", "--format", "xml"}).code == 2);
    CHECK(invoke({"density", "--motif", "two-star", "--graph", write_text("loop.json", R"({"n":3,"edges":[[1,1]]})").string()}).code == 2);
    auto guard = invoke({"exact", "--motif", "edge", "--beta", "0.1", "--n", "7"});
    CHECK(guard.code == 3);
    CHECK(json::parse(guard.err)["error"] == "guard_exceeded");
    CHECK(invoke({"exact", "--motif", "edge", "--beta", "0.1", "--n", "7", "--force"}).code == 0);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("config precedence: flags over file over defaults", "[cli]")
{
    const auto cfg_path = write_text("cfg.json", R"({"n": 5, "motifs": ["edge"], "betas": [0.3], "order": 2})");
    const std::vector<std::string> args{"ergm-cluster", "exact", "--config", cfg_path.string(), "--n", "3"};
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    const auto cfg = cli::parse_command_line(static_cast<int>(argv.size()), argv.data());
    CHECK(cfg.command == cli::Command::exact);
    CHECK(cfg.n == 3);
    CHECK(cfg.order == 2);
    CHECK(cfg.betas == std::vector<double>{0.3});
    CHECK(cfg.max_links == kDefaultMaxLinks);
    CHECK(cli::command_name(cli::parse_command("coeffs")) == "coeffs");
    CHECK_THROWS_AS(cli::parse_command("plot"), InvalidArgument);

    const auto broken = write_text("broken.json", "{not json");
    CHECK(invoke({"exact", "--config", broken.string()}).code == 2);
}

TEST_CASE("thread count falls back to the environment", "[cli]")
{
    ::setenv("ERGM_CLUSTER_THREADS", "3", 1);
    const std::vector<std::string> args{"ergm-cluster", "region", "--p", "2"};
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    CHECK(cli::parse_command_line(4, argv.data()).threads == 3);
    const std::vector<std::string> flagged{"ergm-cluster", "region", "--p", "2", "--threads", "2"};
    argv.clear();
    for (const auto& a : flagged) argv.push_back(a.c_str());
    CHECK(cli::parse_command_line(6, argv.data()).threads == 2);
    ::unsetenv("ERGM_CLUSTER_THREADS");
}

TEST_CASE("artifacts are deterministic and written atomically", "[cli]")
{
    const auto a = scratch() / "a.json";
    const auto b = scratch() / "b.json";
    const std::vector<std::string> common{"exact", "--motif", "edge,two-star,triangle", "--beta", "0.1,0.2,0.3", "--n", "5",
                                          "--random-betas", "3", "--seed", "42", "--threads", "4"};
    auto with_output = [&](const fs::path& out) {
        auto args = common;
        args.push_back("--output");
        args.push_back(out.string());
        return invoke(args);
    };
    REQUIRE(with_output(a).code == 0);
    REQUIRE(with_output(b).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(fs::exists(scratch() / "a.json.tmp"));
    CHECK(json::parse(slurp(a)).size() == 4);

    auto other_seed = common;
    other_seed[10] = "43";
    CHECK(invoke(other_seed).out != slurp(a));
}
