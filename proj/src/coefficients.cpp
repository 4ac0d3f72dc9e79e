#include "ergm/coefficients.hpp"

#include "ergm/error.hpp"

#include <cmath>
#include <limits>

namespace ergm {

namespace {

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

void check_params(int p, double norm, double M)
{
    if (p < 1) throw InvalidArgument("motif edge count p must be >= 1");
    if (!(norm >= 0.0)) throw InvalidArgument("norm must be nonnegative");
    if (!(M > 1.0)) throw InvalidArgument("M must exceed 1");
}

// Truncated product of two series indexed from z^0.
std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t terms)
{
    std::vector<Rational> out(terms, Rational(0));
    for (std::size_t i = 0; i < a.size() && i < terms; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

double CoefficientTable::scale() const { return 2.0 * norm * std::pow(M, p); }

double CoefficientTable::abar(int n) const
{
    if (n < 1 || n > n_max()) throw InvalidArgument("abar index outside table");
    return to_double(gamma[static_cast<std::size_t>(n - 1)]) * std::pow(scale(), n);
}

double CoefficientTable::abar_bound(int n) const { return radius_and_tail(p, norm, M).term_bound(n); }

CoefficientTable abar_recursion(int p, double norm, double M, int n_max)
{
    check_params(p, norm, M);
    if (n_max < 1 || n_max > 200) throw InvalidArgument("n_max must lie in [1, 200]");

    CoefficientTable table{p, norm, M, {}};
    // conv[k][s] = sum over n_1+...+n_k = s (all n_i >= 1) of gamma_{n_1}...gamma_{n_k}
    std::vector<std::vector<Rational>> conv(static_cast<std::size_t>(p + 1), std::vector<Rational>(static_cast<std::size_t>(n_max), Rational(0)));
    conv[0][0] = 1;
    std::vector<BigInt> binom;
    for (int k = 0; k <= p; ++k) binom.push_back(binomial(p, k));

    for (int n = 1; n <= n_max; ++n) {
        const int s = n - 1;
        // conv[k][s] needs gamma_1..gamma_s only, all known by now.
        for (int k = 1; k <= p; ++k) {
            Rational acc = 0;
            for (int j = 1; j <= s; ++j) acc += table.gamma[static_cast<std::size_t>(j - 1)] * conv[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - j)];
            conv[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] = acc;
        }
        Rational g = 0;
        for (int k = 0; k <= p; ++k) g += Rational(binom[static_cast<std::size_t>(k)]) * conv[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
        table.gamma.push_back(g);
    }
    return table;
}

bool generating_function_check(const CoefficientTable& table)
{
    const std::size_t terms = static_cast<std::size_t>(table.n_max()) + 1;
    // 1 + w in the variable u = c z
    std::vector<Rational> one_plus_w(terms, Rational(0));
    one_plus_w[0] = 1;
    for (int n = 1; n <= table.n_max(); ++n) one_plus_w[static_cast<std::size_t>(n)] = table.gamma[static_cast<std::size_t>(n - 1)];

    std::vector<Rational> power(terms, Rational(0));
    power[0] = 1;
    for (int k = 0; k < table.p; ++k) power = multiply(power, one_plus_w, terms);

    // [u^n] w = [u^{n-1}] (1+w)^p
    for (int n = 1; n <= table.n_max(); ++n)
        if (table.gamma[static_cast<std::size_t>(n - 1)] != power[static_cast<std::size_t>(n - 1)]) return false;
    return true;
}

bool generating_function_check(int p, double norm, double M, int n_max)
{
    return generating_function_check(abar_recursion(p, norm, M, n_max));
}

double TailModel::term_bound(int n) const
{
    if (norm == 0.0) return 0.0;
    // (2||K||(Mp)^p)^n (p-1)^{-(1+(p-1)n)} = ratio^n / (p-1)
    return std::pow(ratio, n) / (p - 1);
}

double TailModel::tail_bound(int n0) const
{
    if (norm == 0.0) return 0.0;
    if (!convergent()) return std::numeric_limits<double>::infinity();
    return std::pow(ratio, n0 + 1) / ((p - 1) * (1.0 - ratio));
}

TailModel radius_and_tail(int p, double norm, double M)
{
    check_params(p, norm, M);
    if (p < 2) throw InvalidArgument("radius_and_tail needs p >= 2: the majorant divides by p-1");
    TailModel out{p, norm, M};
    const double head = 2.0 * norm * std::pow(M * p, p);
    const double core = std::pow(p - 1.0, p - 1);
    out.radius = norm == 0.0 ? std::numeric_limits<double>::infinity() : core / head;
    out.ratio = head / core;
    return out;
}

}  // namespace ergm
