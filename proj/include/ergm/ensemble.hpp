#pragma once

// Brute-force ensemble over all 2^C(n,2) graphs: the exact partition
// function, the finite-n free energies and model expectations.
//
//   psi_n  = (1/n^2) log sum_G exp(n^2 T^beta(G))
//   log W  = log 2^{-C(n,2)} sum_sigma exp(sum_X K(X) sigma_X)
//   phi_n  = log W / C(n,2)
//   psi_n  = (C(n,2)/n^2) (log 2 + phi_n)

#include "ergm/graph.hpp"
#include "ergm/lattice_gas.hpp"

#include <memory>
#include <span>
#include <vector>

namespace ergm {

inline constexpr int kDefaultEnsembleLimit = 6;

inline EnumerationGuard ensemble_guard(bool force = false) { return {kDefaultEnsembleLimit, force}; }

/// log of the mean of exp(values), stable for large exponents and accurate
/// (no cancellation) when all values are small.
double log_mean_exp(std::span<const double> values);

/// log W for the interaction, summing sites in bitmask order.
double partition_normalized(const Interaction& k, EnumerationGuard guard = ensemble_guard());

/// t(H, G) for every graph on n vertices, indexed by edge mask. Memoized per
/// (motif, n) for the lifetime of the process.
std::shared_ptr<const std::vector<double>> density_table(const Motif& motif, int n, EnumerationGuard guard = ensemble_guard());

struct EnsembleResult {
    int n = 0;
    std::vector<double> betas;
    double log_w = 0.0;
    double psi_n = 0.0;
    double phi_n = 0.0;
    std::vector<double> expectations;
};

double psi_n(const Model& model, int n, EnumerationGuard guard = ensemble_guard());
std::vector<double> expectation_densities(const Model& model, int n, EnumerationGuard guard = ensemble_guard());

struct DerivativeCheck {
    double finite_difference;  // (psi(beta + h e_i) - psi(beta - h e_i)) / 2h
    double expectation;        // E[t(H_i, G)]
};

DerivativeCheck derivative_check(const Model& model, int n, std::size_t i, double h, EnumerationGuard guard = ensemble_guard());

/// psi_n and expectations from the homomorphism-density route, log W from
/// the interaction route.
EnsembleResult solve_ensemble(const Model& model, int n, EnumerationGuard guard = ensemble_guard());

}  // namespace ergm
