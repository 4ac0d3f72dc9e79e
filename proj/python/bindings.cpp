#include "ergm/error.hpp"
#include "ergm/expansion.hpp"
#include "ergm/io.hpp"
#include "ergm/polymer.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ergm;

namespace {

py::object fraction(const Rational& r)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

using Edges = std::vector<std::pair<int, int>>;

Model model_of(const std::vector<std::string>& motifs, const std::vector<double>& betas)
{
    std::vector<Motif> hs;
    for (const auto& s : motifs) hs.push_back(load_motif(s));
    return Model(std::move(hs), betas);
}

py::list sites_list(EdgeSubset x, int n)
{
    py::list out;
    for (const auto& e : x.sites(n)) out.append(py::make_tuple(e.i, e.j));
    return out;
}

EdgeSubset subset_of(const Edges& sites, int n)
{
    std::vector<EdgeSite> es;
    for (auto [a, b] : sites) es.emplace_back(a, b);
    return EdgeSubset::of(es, n);
}

}  // namespace

PYBIND11_MODULE(_ergm_cluster, mod)
{
    mod.doc() = "Exact ERGM lattice-gas representation and cluster expansion";

    // Later registrations are tried first, so the base class goes first.
    py::register_exception<Error>(mod, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(mod, "InvalidArgument", PyExc_ValueError);
    py::register_exception<GuardExceeded>(mod, "GuardExceeded", PyExc_RuntimeError);

    py::class_<Motif>(mod, "Motif")
        .def(py::init<std::string, int, Edges>(), py::arg("name"), py::arg("m"), py::arg("edges"))
        .def_static("named", &Motif::named)
        .def_property_readonly("name", &Motif::name)
        .def_property_readonly("m", &Motif::m)
        .def_property_readonly("p", &Motif::p)
        .def_property_readonly("edges", &Motif::edges);

    py::class_<SimpleGraph>(mod, "Graph")
        .def(py::init([](int n, const Edges& edges) { return make_graph(n, edges, true); }), py::arg("n"), py::arg("edges"))
        .def_static("complete", &SimpleGraph::complete)
        .def_property_readonly("n", &SimpleGraph::n)
        .def_property_readonly("edges", [](const SimpleGraph& g) {
            Edges out;
            for (const auto& e : g.edge_list()) out.emplace_back(e.i, e.j);
            return out;
        })
        .def("has_edge", &SimpleGraph::has_edge);

    mod.def("load_motif", &load_motif, py::arg("name_or_path"));
    mod.def("hom_count", &hom_count, py::arg("motif"), py::arg("graph"));
    mod.def("hom_density", [](const Motif& h, const SimpleGraph& g) { return fraction(hom_density(h, g)); }, py::arg("motif"),
            py::arg("graph"));
    mod.def("exact_density", [](const Motif& h, const Edges& x, int n) { return fraction(exact_density(h, subset_of(x, n), n)); },
            py::arg("motif"), py::arg("sites"), py::arg("n"));
    mod.def(
        "support_families",
        [](const Motif& h, int n) {
            py::list out;
            for (const auto& [x, d] : support_families(h, n)) out.append(py::make_tuple(sites_list(x, n), fraction(d)));
            return out;
        },
        py::arg("motif"), py::arg("n"));
    mod.def(
        "representation_check",
        [](const Motif& h, const SimpleGraph& g) {
            const auto c = representation_check(h, g);
            return py::make_tuple(fraction(c.direct), fraction(c.lattice));
        },
        py::arg("motif"), py::arg("graph"));
    mod.def(
        "pinned_density", [](const Motif& h, const SimpleGraph& g, int i, int j) { return fraction(pinned_density(h, g, EdgeSite(i, j))); },
        py::arg("motif"), py::arg("graph"), py::arg("i"), py::arg("j"));

    mod.def(
        "interaction",
        [](const std::vector<std::string>& motifs, const std::vector<double>& betas, int n) {
            return to_python(interaction_to_json(build_interaction(model_of(motifs, betas), n)));
        },
        py::arg("motifs"), py::arg("betas"), py::arg("n"));
    mod.def(
        "banach_norm",
        [](const std::vector<std::string>& motifs, const std::vector<double>& betas, int n) {
            return banach_norm(build_interaction(model_of(motifs, betas), n));
        },
        py::arg("motifs"), py::arg("betas"), py::arg("n"));
    mod.def(
        "log_partition",
        [](const std::vector<std::string>& motifs, const std::vector<double>& betas, int n) {
            return partition_normalized(build_interaction(model_of(motifs, betas), n));
        },
        py::arg("motifs"), py::arg("betas"), py::arg("n"));
    mod.def(
        "solve_ensemble",
        [](const std::vector<std::string>& motifs, const std::vector<double>& betas, int n, bool force) {
            return to_python(ensemble_to_json(solve_ensemble(model_of(motifs, betas), n, ensemble_guard(force))));
        },
        py::arg("motifs"), py::arg("betas"), py::arg("n"), py::arg("force") = false);

    mod.def(
        "cluster_partition_sum",
        [](const std::vector<std::string>& motifs, const std::vector<double>& betas, int n) {
            return cluster_partition_sum(build_polymers(build_interaction(model_of(motifs, betas), n), kUnlimitedLinks));
        },
        py::arg("motifs"), py::arg("betas"), py::arg("n"));
    mod.def(
        "ursell_coefficient",
        [](const std::vector<std::uint64_t>& masks) {
            std::vector<EdgeSubset> s;
            for (auto m : masks) s.push_back({m});
            return ursell_coefficient(s);
        },
        py::arg("support_masks"));
    mod.def(
        "expand",
        [](const std::vector<std::string>& motifs, const std::vector<double>& betas, int n, int order, std::size_t max_links,
           std::size_t head_links, std::optional<double> M) {
            ExpansionOptions o;
            o.order = order;
            o.max_links = max_links;
            o.head_links = head_links;
            o.M = M;
            return to_python(expansion_to_json(expand(model_of(motifs, betas), n, o)));
        },
        py::arg("motifs"), py::arg("betas"), py::arg("n"), py::arg("order") = 4, py::arg("max_links") = kDefaultMaxLinks,
        py::arg("head_links") = kDefaultMaxLinks, py::arg("M") = py::none());

    mod.def("region_bound", &region_bound, py::arg("p"), py::arg("m"), py::arg("M"));
    mod.def("norm_threshold", &norm_threshold, py::arg("p"), py::arg("M"));
    mod.def("optimal_M", &optimal_M, py::arg("p"));
    mod.def(
        "gamma_coefficients",
        [](int p, int n_max) {
            py::list out;
            for (const auto& g : abar_recursion(p, 0.0, 2.0, n_max).gamma) out.append(fraction(g));
            return out;
        },
        py::arg("p"), py::arg("n_max"));
    mod.def(
        "coefficients",
        [](int p, double norm, double M, int n_max) {
            const auto table = abar_recursion(p, norm, M, n_max);
            if (p < 2) return to_python(coefficients_to_json(table, nullptr));
            const auto tail = radius_and_tail(p, norm, M);
            return to_python(coefficients_to_json(table, &tail));
        },
        py::arg("p"), py::arg("norm"), py::arg("M"), py::arg("n_max"));
}
