#include "ergm/ensemble.hpp"

#include "ergm/error.hpp"
#include "ergm/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace ergm {

double log_mean_exp(std::span<const double> values)
{
    if (values.empty()) throw InvalidArgument("log_mean_exp of an empty range");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const long double count = static_cast<long double>(values.size());
    if (*hi <= 1.0 && *lo >= -1.0) {
        // log1p(mean(expm1)) keeps full relative precision near W = 1.
        long double acc = 0.0L;
        for (double v : values) acc += std::expm1(static_cast<long double>(v));
        return static_cast<double>(std::log1p(acc / count));
    }
    const long double shift = *hi;
    long double acc = 0.0L;
    for (double v : values) acc += std::exp(static_cast<long double>(v) - shift);
    return static_cast<double>(shift + std::log(acc / count));
}

double partition_normalized(const Interaction& k, EnumerationGuard guard)
{
    guard.check(k.n(), "partition_normalized");
    const std::size_t total = std::size_t{1} << edge_count(k.n());
    const std::vector<std::pair<EdgeSubset, double>> links(k.values().begin(), k.values().end());
    std::vector<double> exponent(total, 0.0);
    parallel_for(total, [&](std::size_t begin, std::size_t end) {
        for (std::size_t mask = begin; mask < end; ++mask) {
            const EdgeSubset sigma{mask};
            double e = 0.0;
            for (const auto& [x, v] : links)
                if (x.subset_of(sigma)) e += v;
            exponent[mask] = e;
        }
    });
    return log_mean_exp(exponent);
}

std::shared_ptr<const std::vector<double>> density_table(const Motif& motif, int n, EnumerationGuard guard)
{
    guard.check(n, "density_table");
    using Key = std::tuple<int, std::vector<std::pair<int, int>>, int>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const std::vector<double>>> cache;

    Key key{motif.m(), motif.edges(), n};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    const std::size_t total = std::size_t{1} << edge_count(n);
    auto table = std::make_shared<std::vector<double>>(total);
    const double maps = std::pow(static_cast<double>(n), motif.m());
    const bool exact_division = maps < 9007199254740992.0;  // 2^53
    parallel_for(total, [&](std::size_t begin, std::size_t end) {
        for (std::size_t mask = begin; mask < end; ++mask) {
            const SimpleGraph g = SimpleGraph::from_mask(n, {mask});
            // Both operands are exact integers here, so the quotient is the
            // correctly rounded value of the rational density.
            (*table)[mask] = exact_division ? static_cast<double>(hom_count(motif, g)) / maps : to_double(hom_density(motif, g));
        }
    });

    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(table)).first->second;
}

namespace {

struct Tables {
    int n;
    std::vector<std::shared_ptr<const std::vector<double>>> t;

    Tables(const Model& model, int n_, EnumerationGuard guard) : n(n_)
    {
        if (n < 2) throw InvalidArgument("ensemble needs n >= 2");
        for (const auto& h : model.motifs) t.push_back(density_table(h, n, guard));
    }

    std::size_t graphs() const { return t.front()->size(); }

    std::vector<double> exponents(std::span<const double> betas) const
    {
        const double n2 = static_cast<double>(n) * n;
        std::vector<double> out(graphs(), 0.0);
        for (std::size_t g = 0; g < out.size(); ++g) {
            double s = 0.0;
            for (std::size_t i = 0; i < t.size(); ++i) s += betas[i] * (*t[i])[g];
            out[g] = n2 * s;
        }
        return out;
    }

    double psi(std::span<const double> betas) const
    {
        const double c = edge_count(n);
        return (c * std::log(2.0) + log_mean_exp(exponents(betas))) / (static_cast<double>(n) * n);
    }

    std::vector<double> expectations(std::span<const double> betas) const
    {
        const auto ex = exponents(betas);
        const double shift = *std::max_element(ex.begin(), ex.end());
        long double z = 0.0L;
        std::vector<long double> acc(t.size(), 0.0L);
        for (std::size_t g = 0; g < ex.size(); ++g) {
            const long double w = std::exp(static_cast<long double>(ex[g]) - shift);
            z += w;
            for (std::size_t i = 0; i < t.size(); ++i) acc[i] += w * (*t[i])[g];
        }
        std::vector<double> out;
        for (auto a : acc) out.push_back(static_cast<double>(a / z));
        return out;
    }
};

}  // namespace

double psi_n(const Model& model, int n, EnumerationGuard guard) { return Tables(model, n, guard).psi(model.betas); }

std::vector<double> expectation_densities(const Model& model, int n, EnumerationGuard guard)
{
    return Tables(model, n, guard).expectations(model.betas);
}

DerivativeCheck derivative_check(const Model& model, int n, std::size_t i, double h, EnumerationGuard guard)
{
    if (i >= model.size()) throw InvalidArgument("derivative_check: motif index out of range");
    if (!(h > 0.0)) throw InvalidArgument("derivative_check: step must be positive");
    const Tables tables(model, n, guard);
    auto up = model.betas;
    auto down = model.betas;
    up[i] += h;
    down[i] -= h;
    return {(tables.psi(up) - tables.psi(down)) / (2.0 * h), tables.expectations(model.betas)[i]};
}

EnsembleResult solve_ensemble(const Model& model, int n, EnumerationGuard guard)
{
    const Tables tables(model, n, guard);
    EnsembleResult out;
    out.n = n;
    out.betas = model.betas;
    out.psi_n = tables.psi(model.betas);
    out.expectations = tables.expectations(model.betas);
    out.log_w = partition_normalized(build_interaction(model, n, guard), guard);
    out.phi_n = out.log_w / edge_count(n);
    return out;
}

}  // namespace ergm
