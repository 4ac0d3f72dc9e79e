#include "ergm/io.hpp"

#include "ergm/error.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace ergm {

namespace {

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
    }
}

std::vector<std::pair<int, int>> pairs_from_json(const json& edges)
{
    if (!edges.is_array()) throw InvalidArgument("'edges' must be an array of [u, v] pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) throw InvalidArgument("each edge must be a two-element array");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_or_inf(const json& j) { return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>(); }

}  // namespace

Motif motif_from_json(const json& j)
{
    try {
        return Motif(j.value("name", std::string("custom")), j.at("m").get<int>(), pairs_from_json(j.at("edges")));
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("bad motif document: ") + e.what());
    }
}

json motif_to_json(const Motif& motif)
{
    json edges = json::array();
    for (auto [a, b] : motif.edges()) edges.push_back({a, b});
    return {{"name", motif.name()}, {"m", motif.m()}, {"edges", edges}};
}

Motif load_motif(const std::string& name_or_path)
{
    if (name_or_path == "edge" || name_or_path == "two-star" || name_or_path == "triangle" || name_or_path == "K2" ||
        name_or_path == "K3")
        return Motif::named(name_or_path);
    if (!std::filesystem::exists(name_or_path)) throw InvalidArgument("unknown motif '" + name_or_path + "' (not a built-in name or a file)");
    return motif_from_json(read_json_file(name_or_path));
}

SimpleGraph graph_from_json(const json& j)
{
    try {
        const auto pairs = pairs_from_json(j.at("edges"));
        return make_graph(j.at("n").get<int>(), pairs, true);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("bad graph document: ") + e.what());
    }
}

json graph_to_json(const SimpleGraph& graph)
{
    json edges = json::array();
    for (const auto& e : graph.edge_list()) edges.push_back({e.i, e.j});
    return {{"n", graph.n()}, {"edges", edges}};
}

SimpleGraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

json interaction_to_json(const Interaction& k)
{
    json out = json::array();
    for (const auto& [x, v] : k.values()) {
        json sites = json::array();
        for (const auto& e : x.sites(k.n())) sites.push_back({e.i, e.j});
        out.push_back({{"sites", sites}, {"value", v}});
    }
    return out;
}

Interaction interaction_from_json(const json& j, int n, int p_max)
{
    Interaction k(n, p_max);
    for (const auto& entry : j) {
        std::vector<EdgeSite> sites;
        for (const auto& s : entry.at("sites")) sites.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
        k.set(EdgeSubset::of(sites, n), entry.at("value").get<double>());
    }
    return k;
}

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_ensemble_csv(std::ostream& os, std::span<const EnsembleResult> rows)
{
    const std::size_t k = rows.empty() ? 0 : rows.front().betas.size();
    os << "n";
    for (std::size_t i = 1; i <= k; ++i) os << ",beta_" << i;
    os << ",psi_n,phi_n";
    for (std::size_t i = 1; i <= k; ++i) os << ",E_" << i;
    os << '\n';
    for (const auto& r : rows) {
        os << r.n;
        for (double b : r.betas) os << ',' << format_double(b);
        os << ',' << format_double(r.psi_n) << ',' << format_double(r.phi_n);
        for (double e : r.expectations) os << ',' << format_double(e);
        os << '\n';
    }
}

json ensemble_to_json(const EnsembleResult& r)
{
    return {{"n", r.n},         {"betas", r.betas}, {"log_W", r.log_w},
            {"psi_n", r.psi_n}, {"phi_n", r.phi_n}, {"expectations", r.expectations}};
}

EnsembleResult ensemble_from_json(const json& j)
{
    EnsembleResult r;
    r.n = j.at("n").get<int>();
    r.betas = j.at("betas").get<std::vector<double>>();
    r.log_w = j.at("log_W").get<double>();
    r.psi_n = j.at("psi_n").get<double>();
    r.phi_n = j.at("phi_n").get<double>();
    r.expectations = j.at("expectations").get<std::vector<double>>();
    return r;
}

json certificate_to_json(const KPCertificate& cert)
{
    json sites = json::array();
    for (const auto& [e, s] : cert.per_site_sums) sites.push_back({{"site", {e.i, e.j}}, {"sum", finite_or_null(s)}});
    return {{"M", cert.M},
            {"logM", cert.log_m},
            {"norm", cert.norm},
            {"head_links", cert.head_links},
            {"head_exhaustive", cert.head_exhaustive},
            {"tail", finite_or_null(cert.tail)},
            {"max_site_sum", finite_or_null(cert.max_site_sum)},
            {"verdict", cert.pass ? "pass" : "fail"},
            {"diagnostic", cert.diagnostic},
            {"per_site", sites}};
}

json region_to_json(const RegionInfo& region)
{
    return {{"p", region.p},
            {"m", region.m},
            {"M", region.M},
            {"beta_budget", region.beta_budget ? json(*region.beta_budget) : json(nullptr)},
            {"beta_l1", region.beta_l1},
            {"inside", region.inside()}};
}

json expansion_to_json(const ExpansionReport& report)
{
    json orders = json::array();
    for (const auto& row : report.orders)
        orders.push_back({{"order", row.order},
                          {"partial_sum", row.partial_sum},
                          {"gap_to_exact", row.gap_to_exact ? json(*row.gap_to_exact) : json(nullptr)},
                          {"tail_bound", finite_or_null(row.tail_bound)}});
    return {{"n", report.n},
            {"norm", report.norm},
            {"polymers_complete", report.polymers_complete},
            {"polymer_count", report.polymer_count},
            {"exact_log_W", report.exact_log_w ? json(*report.exact_log_w) : json(nullptr)},
            {"orders", orders},
            {"kp", certificate_to_json(report.kp)},
            {"region", region_to_json(report.region)}};
}

ExpansionReport expansion_from_json(const json& j)
{
    ExpansionReport r;
    r.n = j.at("n").get<int>();
    r.norm = j.at("norm").get<double>();
    r.polymers_complete = j.at("polymers_complete").get<bool>();
    r.polymer_count = j.at("polymer_count").get<std::size_t>();
    if (!j.at("exact_log_W").is_null()) r.exact_log_w = j.at("exact_log_W").get<double>();
    for (const auto& o : j.at("orders")) {
        OrderRow row;
        row.order = o.at("order").get<int>();
        row.partial_sum = o.at("partial_sum").get<double>();
        if (!o.at("gap_to_exact").is_null()) row.gap_to_exact = o.at("gap_to_exact").get<double>();
        row.tail_bound = number_or_inf(o.at("tail_bound"));
        r.orders.push_back(row);
    }
    const auto& kp = j.at("kp");
    r.kp.M = kp.at("M").get<double>();
    r.kp.log_m = kp.at("logM").get<double>();
    r.kp.norm = kp.at("norm").get<double>();
    r.kp.head_links = kp.at("head_links").get<std::size_t>();
    r.kp.head_exhaustive = kp.at("head_exhaustive").get<bool>();
    r.kp.tail = number_or_inf(kp.at("tail"));
    r.kp.max_site_sum = number_or_inf(kp.at("max_site_sum"));
    r.kp.pass = kp.at("verdict").get<std::string>() == "pass";
    r.kp.diagnostic = kp.at("diagnostic").get<std::string>();
    for (const auto& s : kp.at("per_site"))
        r.kp.per_site_sums.emplace(EdgeSite(s.at("site").at(0).get<int>(), s.at("site").at(1).get<int>()), number_or_inf(s.at("sum")));
    const auto& region = j.at("region");
    r.region.p = region.at("p").get<int>();
    r.region.m = region.at("m").get<int>();
    r.region.M = region.at("M").get<double>();
    if (!region.at("beta_budget").is_null()) r.region.beta_budget = region.at("beta_budget").get<double>();
    r.region.beta_l1 = region.at("beta_l1").get<double>();
    return r;
}

json coefficients_to_json(const CoefficientTable& table, const TailModel* tail)
{
    json rows = json::array();
    for (int n = 1; n <= table.n_max(); ++n) {
        json row = {{"n", n}, {"gamma", to_string(table.gamma[static_cast<std::size_t>(n - 1)])}, {"abar", table.abar(n)}};
        if (tail) row["abar_bound"] = tail->term_bound(n);
        rows.push_back(row);
    }
    json out = {{"p", table.p}, {"norm", table.norm}, {"M", table.M}, {"c", table.scale()}, {"coefficients", rows}};
    if (tail) {
        out["radius"] = finite_or_null(tail->radius);
        out["ratio"] = tail->ratio;
        out["tail_from_zero"] = finite_or_null(tail->tail_bound(0));
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& contents)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp.string() + "'");
        out << contents;
        out.flush();
        if (!out) throw Error("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

}  // namespace ergm
