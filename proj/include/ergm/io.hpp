#pragma once

// Text formats: motif and graph JSON inputs, the canonical interaction dump,
// the ensemble CSV, and JSON artifacts for expansion / region / coefficients.

#include "ergm/coefficients.hpp"
#include "ergm/ensemble.hpp"
#include "ergm/expansion.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>

namespace ergm {

using json = nlohmann::json;

/// {"name": ..., "m": ..., "edges": [[u, v], ...]}, 0-based vertices.
Motif motif_from_json(const json& j);
json motif_to_json(const Motif& motif);
/// A built-in name ("edge", "two-star", "triangle") or a path to a motif file.
Motif load_motif(const std::string& name_or_path);

/// {"n": ..., "edges": [[u, v], ...]}
SimpleGraph graph_from_json(const json& j);
json graph_to_json(const SimpleGraph& graph);
SimpleGraph load_graph(const std::string& path);

/// [{"sites": [[i, j], ...], "value": K(X)}, ...] in canonical subset order.
json interaction_to_json(const Interaction& k);
Interaction interaction_from_json(const json& j, int n, int p_max);

/// %.17g, the serialization used for every float in CSV artifacts.
std::string format_double(double x);

/// Columns: n, beta_1..beta_k, psi_n, phi_n, E_1..E_k
void write_ensemble_csv(std::ostream& os, std::span<const EnsembleResult> rows);
json ensemble_to_json(const EnsembleResult& r);
EnsembleResult ensemble_from_json(const json& j);

json certificate_to_json(const KPCertificate& cert);
json region_to_json(const RegionInfo& region);

/// {"orders": [{order, partial_sum, gap_to_exact, tail_bound}],
///  "kp": {M, max_site_sum, logM, verdict, ...}, "region": {p, m, M, beta_budget}, ...}
json expansion_to_json(const ExpansionReport& report);
ExpansionReport expansion_from_json(const json& j);

json coefficients_to_json(const CoefficientTable& table, const TailModel* tail);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace ergm
