#include "ergm/kotecky_preiss.hpp"

#include "ergm/coefficients.hpp"
#include "ergm/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ergm {

KPCertificate kp_certify(const Interaction& k, double M, std::size_t head_links, std::size_t limit)
{
    if (!(M > 1.0)) throw InvalidArgument("kp_certify: M must exceed 1");

    KPCertificate cert;
    cert.M = M;
    cert.log_m = std::log(M);
    cert.norm = banach_norm(k);
    cert.head_links = head_links;

    const int sites = edge_count(k.n());
    std::vector<long double> head(static_cast<std::size_t>(sites), 0.0L);
    const auto links = interaction_links(k);
    std::vector<double> factor;
    for (const auto& x : links) factor.push_back(std::expm1(std::abs(k.at(x))));

    const auto walk = for_each_connected_hypergraph(
        links, head_links, std::nullopt,
        [&](std::span<const int> idx, EdgeSubset support) {
            long double term = std::pow(static_cast<long double>(M), support.size());
            for (int i : idx) term *= factor[static_cast<std::size_t>(i)];
            for (std::uint64_t b = support.bits; b != 0; b &= b - 1) head[static_cast<std::size_t>(__builtin_ctzll(b))] += term;
        },
        limit);
    cert.head_exhaustive = !walk.truncated;

    const double inf = std::numeric_limits<double>::infinity();
    if (cert.head_exhaustive) {
        cert.tail = 0.0;
    } else if (k.p_max() < 2) {
        cert.tail = inf;
        cert.diagnostic = "tail majorant needs p >= 2; raise head_links to cover all hypergraphs";
    } else if (cert.norm > kMeanValueNormCap) {
        cert.tail = inf;
        std::ostringstream os;
        os << "norm " << cert.norm << " exceeds 1/2; the bound exp(|K|)-1 <= 2|K| behind the tail is unavailable";
        cert.diagnostic = os.str();
    } else {
        const auto tail = radius_and_tail(k.p_max(), cert.norm, M);
        cert.tail = tail.tail_bound(static_cast<int>(std::min<std::size_t>(head_links, 1'000'000)));
        if (!tail.convergent()) {
            std::ostringstream os;
            os << "tail series divergent: 2||K||(Mp)^p / (p-1)^(p-1) = " << tail.ratio << " >= 1";
            cert.diagnostic = os.str();
        }
    }

    for (int s = 0; s < sites; ++s) {
        const double sum = static_cast<double>(head[static_cast<std::size_t>(s)]) + cert.tail;
        cert.per_site_sums.emplace(EdgeSite::at(s, k.n()), sum);
        cert.max_site_sum = std::max(cert.max_site_sum, sum);
    }
    cert.pass = std::isfinite(cert.max_site_sum) && cert.max_site_sum <= cert.log_m;
    if (!cert.pass && cert.diagnostic.empty()) {
        std::ostringstream os;
        os << "max per-site sum " << cert.max_site_sum << " exceeds log M = " << cert.log_m;
        cert.diagnostic = os.str();
    }
    return cert;
}

double norm_threshold(int p, double M)
{
    if (p < 2) throw InvalidArgument("region formulas need p >= 2 (they divide by p-1); the edge-only model is solved exactly");
    if (!(M > 1.0)) throw InvalidArgument("M must exceed 1");
    const double log_m = std::log(M);
    return log_m * std::pow(p - 1.0, p) / (2.0 * std::pow(M * p, p) * (1.0 + (p - 1) * log_m));
}

double region_bound(int p, int m, double M)
{
    if (m < 2) throw InvalidArgument("motif vertex count m must be >= 2");
    return std::min(norm_threshold(p, M), kMeanValueNormCap) / (m * (m - 1.0));
}

double optimal_M(int p)
{
    if (p < 2) throw InvalidArgument("optimal_M needs p >= 2");
    return std::exp((-p + std::sqrt(5.0 * p * p - 4.0 * p)) / (2.0 * p * (p - 1.0)));
}

}  // namespace ergm
