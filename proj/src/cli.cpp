#include "ergm/cli.hpp"

#include "ergm/error.hpp"
#include "ergm/io.hpp"
#include "ergm/parallel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace ergm::cli {

Command parse_command(const std::string& name)
{
    if (name == "density") return Command::density;
    if (name == "represent") return Command::represent;
    if (name == "exact") return Command::exact;
    if (name == "expand") return Command::expand;
    if (name == "region") return Command::region;
    if (name == "coeffs") return Command::coeffs;
    throw InvalidArgument("unknown command '" + name + "'");
}

std::string command_name(Command c)
{
    switch (c) {
    case Command::density: return "density";
    case Command::represent: return "represent";
    case Command::exact: return "exact";
    case Command::expand: return "expand";
    case Command::region: return "region";
    case Command::coeffs: return "coeffs";
    }
    return "?";
}

namespace {

// Raw flag storage; a value is applied only when its flag was given.
struct Flags {
    std::string config;
    int n = 0, n_max = 0, order = 0, random_betas = 0, threads = 0, p = 0, m = 0, terms = 0;
    std::vector<std::string> motifs;
    std::vector<double> betas;
    double M = 0, norm = 0;
    std::size_t max_links = 0, head_links = 0;
    std::string graph, output, format;
    std::uint64_t seed = 0;
    bool force = false;
};

void apply_config_file(const std::string& path, RunConfig& cfg)
{
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open config '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("malformed config: ") + e.what());
    }
    try {
        if (j.contains("n")) cfg.n = j["n"].get<int>();
        if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
        if (j.contains("motifs")) cfg.motifs = j["motifs"].get<std::vector<std::string>>();
        if (j.contains("betas")) cfg.betas = j["betas"].get<std::vector<double>>();
        if (j.contains("M")) cfg.M = j["M"].get<double>();
        if (j.contains("order")) cfg.order = j["order"].get<int>();
        if (j.contains("max_links")) cfg.max_links = j["max_links"].get<std::size_t>();
        if (j.contains("head_links")) cfg.head_links = j["head_links"].get<std::size_t>();
        if (j.contains("graph")) cfg.graph = j["graph"].get<std::string>();
        if (j.contains("output")) cfg.output = j["output"].get<std::string>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("random_betas")) cfg.random_betas = j["random_betas"].get<int>();
        if (j.contains("force")) cfg.force = j["force"].get<bool>();
        if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
        if (j.contains("p")) cfg.p = j["p"].get<int>();
        if (j.contains("m")) cfg.m = j["m"].get<int>();
        if (j.contains("norm")) cfg.norm = j["norm"].get<double>();
        if (j.contains("terms")) cfg.terms = j["terms"].get<int>();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("bad config value: ") + e.what());
    }
}

void add_options(CLI::App& sub, Flags& f)
{
    sub.add_option("--config", f.config, "JSON config file (flags take precedence)");
    sub.add_option("--n", f.n, "vertex count");
    sub.add_option("--n-max", f.n_max, "exact: sweep n..n-max");
    sub.add_option("--motif,--motifs", f.motifs, "built-in motif name or motif JSON path")->delimiter(',');
    sub.add_option("--beta,--betas", f.betas, "parameters aligned with the motifs")->delimiter(',');
    sub.add_option("--M", f.M, "Kotecky-Preiss weight base M > 1 (default: optimal M)");
    sub.add_option("--order", f.order, "cluster expansion order");
    sub.add_option("--max-links", f.max_links, "links per hypergraph in the polymer universe");
    sub.add_option("--head-links", f.head_links, "links enumerated exactly in the KP head");
    sub.add_option("--graph", f.graph, "graph JSON file");
    sub.add_option("--output,-o", f.output, "artifact path (default: stdout)");
    sub.add_option("--format", f.format, "csv or json");
    sub.add_option("--seed", f.seed, "seed for randomized parameter sweeps");
    sub.add_option("--random-betas", f.random_betas, "exact: extra random beta vectors in [-1,1]");
    sub.add_flag("--force", f.force, "override enumeration guards");
    sub.add_option("--threads", f.threads, "worker thread hint (fallback: ERGM_CLUSTER_THREADS)");
    sub.add_option("--p", f.p, "max motif edge count");
    sub.add_option("--m", f.m, "max motif vertex count");
    sub.add_option("--norm", f.norm, "interaction norm ||K|| for coeffs");
    sub.add_option("--terms", f.terms, "number of coefficients for coeffs");
}

RunConfig merge(const CLI::App& sub, const Flags& f)
{
    RunConfig cfg;
    cfg.command = parse_command(sub.get_name());
    if (const char* env = std::getenv("ERGM_CLUSTER_THREADS")) {
        try {
            cfg.threads = std::stoi(env);
        } catch (const std::exception&) {
            throw InvalidArgument("ERGM_CLUSTER_THREADS must be an integer");
        }
    }
    if (sub.count("--config")) apply_config_file(f.config, cfg);
    auto given = [&](const char* name) { return sub.count(name) > 0; };
    if (given("--n")) cfg.n = f.n;
    if (given("--n-max")) cfg.n_max = f.n_max;
    if (given("--motif")) cfg.motifs = f.motifs;
    if (given("--beta")) cfg.betas = f.betas;
    if (given("--M")) cfg.M = f.M;
    if (given("--order")) cfg.order = f.order;
    if (given("--max-links")) cfg.max_links = f.max_links;
    if (given("--head-links")) cfg.head_links = f.head_links;
    if (given("--graph")) cfg.graph = f.graph;
    if (given("--output")) cfg.output = f.output;
    if (given("--format")) cfg.format = f.format;
    if (given("--seed")) cfg.seed = f.seed;
    if (given("--random-betas")) cfg.random_betas = f.random_betas;
    if (given("--force")) cfg.force = f.force;
    if (given("--threads")) cfg.threads = f.threads;
    if (given("--p")) cfg.p = f.p;
    if (given("--m")) cfg.m = f.m;
    if (given("--norm")) cfg.norm = f.norm;
    if (given("--terms")) cfg.terms = f.terms;
    return cfg;
}

void build_app(CLI::App& app, Flags& flags)
{
    app.require_subcommand(1);
    for (const char* name : {"density", "represent", "exact", "expand", "region", "coeffs"}) {
        auto* sub = app.add_subcommand(name);
        add_options(*sub, flags);
    }
    app.get_subcommand("density")->description("homomorphism densities t(H, G) of a graph");
    app.get_subcommand("represent")->description("lattice-gas supports d(H, X), interaction dump, representation check");
    app.get_subcommand("exact")->description("exact ensemble: psi_n, phi_n and expectations by enumeration");
    app.get_subcommand("expand")->description("cluster expansion of log W with KP certificate");
    app.get_subcommand("region")->description("admissible sum |beta| budget and optimal M");
    app.get_subcommand("coeffs")->description("majorant coefficients, radius and tails");
}

const CLI::App& chosen(const CLI::App& app) { return *app.get_subcommands().front(); }

// ------------------------------------------------------------------ commands

void validate(const RunConfig& cfg)
{
    if (cfg.format != "json" && cfg.format != "csv") throw InvalidArgument("--format must be csv or json");
    if (cfg.threads < 1) throw InvalidArgument("--threads must be >= 1");
    const bool needs_motifs = cfg.command == Command::density || cfg.command == Command::represent ||
                              cfg.command == Command::exact || cfg.command == Command::expand;
    if (needs_motifs && cfg.motifs.empty()) throw InvalidArgument("at least one --motif is required");
    if ((cfg.command == Command::exact || cfg.command == Command::expand) && cfg.betas.size() != cfg.motifs.size())
        throw InvalidArgument("betas length must equal motif count");
    if (cfg.command == Command::represent && !cfg.betas.empty() && cfg.betas.size() != cfg.motifs.size())
        throw InvalidArgument("betas length must equal motif count");
    if (cfg.order < 1) throw InvalidArgument("--order must be >= 1");
}

std::vector<Motif> load_motifs(const RunConfig& cfg)
{
    std::vector<Motif> out;
    for (const auto& s : cfg.motifs) out.push_back(load_motif(s));
    return out;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string sites_string(EdgeSubset x, int n)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& e : x.sites(n)) {
        os << (first ? "" : " ") << e.i << '-' << e.j;
        first = false;
    }
    return os.str();
}

json sites_json(EdgeSubset x, int n)
{
    json out = json::array();
    for (const auto& e : x.sites(n)) out.push_back({e.i, e.j});
    return out;
}

std::string cmd_density(const RunConfig& cfg)
{
    const auto motifs = load_motifs(cfg);
    const SimpleGraph g = cfg.graph ? load_graph(*cfg.graph) : SimpleGraph::complete(cfg.n);
    json rows = json::array();
    std::ostringstream csv;
    csv << "motif,hom_count,total_maps,density,value\n";
    for (const auto& h : motifs) {
        const auto hom = hom_count(h, g);
        const BigInt maps = ipow(static_cast<std::uint64_t>(g.n()), static_cast<unsigned>(h.m()));
        const Rational t = hom_density(h, g);
        const std::string raw = std::to_string(hom) + "/" + maps.str();
        rows.push_back({{"motif", h.name()}, {"hom_count", hom}, {"total_maps", maps.str()}, {"t", raw}, {"density", to_string(t)},
                        {"value", to_double(t)}});
        csv << csv_escape(h.name()) << ',' << hom << ',' << maps.str() << ',' << to_string(t) << ',' << format_double(to_double(t)) << '\n';
    }
    json out = {{"graph", graph_to_json(g)}, {"densities", rows}};
    if (!cfg.betas.empty()) {
        const double wd = weighted_density(Model(motifs, cfg.betas), g);
        out["weighted_density"] = wd;
        csv << "weighted," << ",,," << format_double(wd) << '\n';
    }
    return cfg.format == "json" ? out.dump(2) + "\n" : csv.str();
}

std::string cmd_represent(const RunConfig& cfg)
{
    const auto motifs = load_motifs(cfg);
    std::optional<SimpleGraph> g;
    if (cfg.graph) g = load_graph(*cfg.graph);
    const int n = g ? g->n() : cfg.n;
    EnumerationGuard{kDefaultEnumerationLimit, cfg.force}.check(n, "represent");

    json families = json::array();
    std::ostringstream csv;
    csv << "motif,sites,density\n";
    for (const auto& h : motifs) {
        const auto supports = support_families(h, n);
        json list = json::array();
        Rational total = 0;
        for (const auto& [x, d] : supports) {
            list.push_back({{"sites", sites_json(x, n)}, {"density", to_string(d)}});
            csv << csv_escape(h.name()) << ',' << sites_string(x, n) << ',' << to_string(d) << '\n';
            total += d;
        }
        json entry = {{"motif", h.name()}, {"supports", list}, {"total", to_string(total)}};
        if (g) {
            const auto check = representation_check(h, *g, supports);
            entry["representation"] = {{"direct", to_string(check.direct)}, {"lattice", to_string(check.lattice)}, {"holds", check.holds()}};
        }
        families.push_back(entry);
    }
    json out = {{"n", n}, {"families", families}};
    if (!cfg.betas.empty()) {
        const auto k = build_interaction(Model(motifs, cfg.betas), n, {kDefaultEnumerationLimit, cfg.force});
        out["interaction"] = interaction_to_json(k);
        out["norm"] = banach_norm(k);
    }
    return cfg.format == "json" ? out.dump(2) + "\n" : csv.str();
}

std::string cmd_exact(const RunConfig& cfg)
{
    const auto motifs = load_motifs(cfg);
    std::vector<std::vector<double>> beta_sets{cfg.betas};
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int r = 0; r < cfg.random_betas; ++r) {
        std::vector<double> b(motifs.size());
        for (auto& x : b) x = unit(rng);
        beta_sets.push_back(std::move(b));
    }
    const int last = cfg.n_max.value_or(cfg.n);
    if (last < cfg.n) throw InvalidArgument("--n-max must be >= --n");
    std::vector<EnsembleResult> rows;
    for (int n = cfg.n; n <= last; ++n)
        for (const auto& b : beta_sets) rows.push_back(solve_ensemble(Model(motifs, b), n, ensemble_guard(cfg.force)));

    if (cfg.format == "csv") {
        std::ostringstream os;
        write_ensemble_csv(os, rows);
        return os.str();
    }
    json out = json::array();
    for (const auto& r : rows) out.push_back(ensemble_to_json(r));
    return out.dump(2) + "\n";
}

std::string cmd_expand(const RunConfig& cfg)
{
    const Model model(load_motifs(cfg), cfg.betas);
    ExpansionOptions opts;
    opts.order = cfg.order;
    opts.max_links = cfg.max_links;
    opts.head_links = cfg.head_links;
    opts.M = cfg.M;
    opts.guard = ensemble_guard(cfg.force);
    const auto report = expand(model, cfg.n, opts);
    if (cfg.format == "json") return expansion_to_json(report).dump(2) + "\n";
    std::ostringstream os;
    os << "order,partial_sum,gap_to_exact,tail_bound\n";
    for (const auto& row : report.orders)
        os << row.order << ',' << format_double(row.partial_sum) << ',' << (row.gap_to_exact ? format_double(*row.gap_to_exact) : "")
           << ',' << format_double(row.tail_bound) << '\n';
    return os.str();
}

std::pair<int, int> family_shape(const RunConfig& cfg)
{
    int p = 0;
    int m = 0;
    if (!cfg.motifs.empty()) {
        for (const auto& h : load_motifs(cfg)) {
            p = std::max(p, h.p());
            m = std::max(m, h.m());
        }
    }
    if (cfg.p) p = *cfg.p;
    if (cfg.m) m = *cfg.m;
    if (p == 0) throw InvalidArgument("give --p (and --m) or --motif");
    if (m == 0) m = p + 1;
    return {p, m};
}

std::string cmd_region(const RunConfig& cfg)
{
    const auto [p, m] = family_shape(cfg);
    const double M = cfg.M.value_or(optimal_M(p));
    const double threshold = norm_threshold(p, M);
    const double budget = region_bound(p, m, M);
    json out = {{"p", p},
                {"m", m},
                {"M", M},
                {"logM", std::log(M)},
                {"optimal_M", optimal_M(p)},
                {"norm_threshold", threshold},
                {"norm_cap", kMeanValueNormCap},
                {"beta_budget", budget}};
    if (!cfg.betas.empty()) {
        double l1 = 0.0;
        for (double b : cfg.betas) l1 += std::abs(b);
        out["beta_l1"] = l1;
        out["inside"] = l1 <= budget;
    }
    if (cfg.format == "json") return out.dump(2) + "\n";
    std::ostringstream os;
    os << "p,m,M,logM,optimal_M,norm_threshold,beta_budget\n"
       << p << ',' << m << ',' << format_double(M) << ',' << format_double(std::log(M)) << ',' << format_double(optimal_M(p)) << ','
       << format_double(threshold) << ',' << format_double(budget) << '\n';
    return os.str();
}

std::string cmd_coeffs(const RunConfig& cfg)
{
    const auto [p, m] = family_shape(cfg);
    const double M = cfg.M.value_or(optimal_M(std::max(p, 2)));
    const double norm = cfg.norm.value_or(norm_threshold(std::max(p, 2), M));
    const auto table = abar_recursion(p, norm, M, cfg.terms);
    std::optional<TailModel> tail;
    if (p >= 2) tail = radius_and_tail(p, norm, M);
    if (cfg.format == "json") {
        json out = coefficients_to_json(table, tail ? &*tail : nullptr);
        out["generating_function_identity"] = generating_function_check(table);
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "n,gamma,abar,abar_bound\n";
    for (int n = 1; n <= table.n_max(); ++n)
        os << n << ',' << to_string(table.gamma[static_cast<std::size_t>(n - 1)]) << ',' << format_double(table.abar(n)) << ','
           << (tail ? format_double(tail->term_bound(n)) : "") << '\n';
    return os.str();
}

void emit_error(std::ostream& err, const char* kind, const std::string& message)
{
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

RunConfig parse_command_line(int argc, const char* const* argv)
{
    CLI::App app{"ergm-cluster"};
    Flags flags;
    build_app(app, flags);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        throw InvalidArgument(e.what());
    }
    return merge(chosen(app), flags);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        validate(cfg);
        set_thread_hint(cfg.threads);
        std::string artifact;
        switch (cfg.command) {
        case Command::density: artifact = cmd_density(cfg); break;
        case Command::represent: artifact = cmd_represent(cfg); break;
        case Command::exact: artifact = cmd_exact(cfg); break;
        case Command::expand: artifact = cmd_expand(cfg); break;
        case Command::region: artifact = cmd_region(cfg); break;
        case Command::coeffs: artifact = cmd_coeffs(cfg); break;
        }
        if (cfg.output)
            write_file_atomic(*cfg.output, artifact);
        else
            out << artifact;
        return kOk;
    } catch (const GuardExceeded& e) {
        emit_error(err, "guard_exceeded", e.what());
        return kGuardExceeded;
    } catch (const InvalidArgument& e) {
        emit_error(err, "invalid_config", e.what());
        return kInvalidConfig;
    } catch (const std::exception& e) {
        emit_error(err, "failure", e.what());
        return kFailure;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"ergm-cluster: exponential random graph models as lattice gases"};
    Flags flags;
    build_app(app, flags);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "invalid_config", e.what());
        return kInvalidConfig;
    }
    RunConfig cfg;
    try {
        cfg = merge(chosen(app), flags);
    } catch (const InvalidArgument& e) {
        emit_error(err, "invalid_config", e.what());
        return kInvalidConfig;
    }
    return run(cfg, out, err);
}

}  // namespace ergm::cli
