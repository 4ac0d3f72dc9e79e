#pragma once

// Majorant series for rooted connected hypergraphs. With c = 2||K|| M^p the
// coefficients abar_n = gamma_n c^n obey
//   abar_n = c sum_{k=0}^p binom(p,k) sum_{n_1+...+n_k+1=n} abar_{n_1}...abar_{n_k},
// equivalently w = c z (1+w)^p for w = sum abar_n z^n. The gamma_n are kept
// exact with c factored out symbolically.

#include "ergm/rational.hpp"

#include <vector>

namespace ergm {

struct CoefficientTable {
    int p = 2;
    double norm = 0.0;
    double M = 1.0;
    std::vector<Rational> gamma;  // gamma[n-1] for n = 1..n_max

    int n_max() const { return static_cast<int>(gamma.size()); }
    double scale() const;             // c = 2||K|| M^p
    double abar(int n) const;         // gamma_n c^n
    double abar_bound(int n) const;   // (2||K||(Mp)^p)^n (p-1)^{-(1+(p-1)n)}
};

CoefficientTable abar_recursion(int p, double norm, double M, int n_max);

/// True iff the table's series satisfies w = u (1+w)^p, u = c z, through
/// order n_max in exact arithmetic.
bool generating_function_check(const CoefficientTable& table);
bool generating_function_check(int p, double norm, double M, int n_max);

/// Radius of convergence and geometric tail of the abar_n majorant.
struct TailModel {
    int p = 2;
    double norm = 0.0;
    double M = 1.0;
    double radius = 0.0;  // (p-1)^{p-1} / (2||K||(Mp)^p), +inf at zero norm
    double ratio = 0.0;   // 2||K||(Mp)^p / (p-1)^{p-1}

    bool convergent() const { return ratio < 1.0; }
    double term_bound(int n) const;
    /// sum_{n > n0} term_bound(n) = ratio^{n0+1} / ((p-1)(1 - ratio)); +inf if divergent.
    double tail_bound(int n0) const;
};

TailModel radius_and_tail(int p, double norm, double M);

}  // namespace ergm
