#include "mcda/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mcda {

WeightVector aggregate_gm(std::span<const WeightVector> vectors) {
    if (vectors.size() < 2)
        throw Error("geometric-mean aggregation needs at least 2 weight vectors, got " +
                    std::to_string(vectors.size()));
    const std::size_t n = vectors.front().size();
    for (const auto& v : vectors) {
        if (v.size() != n) throw Error("weight vectors have mismatched lengths");
        for (double w : v.weights)
            if (w <= 0.0) throw Error("GM undefined at zero weight");
    }

    // exp of the mean log; raw geometric means do not sum to 1, so renormalize.
    std::vector<double> gm(n, 0.0);
    const double inv = 1.0 / static_cast<double>(vectors.size());
    for (std::size_t j = 0; j < n; ++j) {
        double logsum = 0.0;
        for (const auto& v : vectors) logsum += std::log(v.weights[j]);
        gm[j] = std::exp(inv * logsum);
    }
    double total = 0.0;
    for (double g : gm) total += g;
    for (double& g : gm) g /= total;

    WeightDiagnostics diag;
    const auto [lo, hi] = std::minmax_element(gm.begin(), gm.end());
    diag.max_min_ratio = *hi / *lo;
    return WeightVector{std::move(gm), WeightMethod::Aggregated, std::move(diag)};
}

CategoricalSummary categorize(const WeightVector& weights, std::span<const Criterion> criteria) {
    if (weights.size() != criteria.size())
        throw Error("weight vector length does not match criteria list");

    CategoricalSummary out;
    for (std::size_t j = 0; j < criteria.size(); ++j)
        out.shares[static_cast<std::size_t>(criteria[j].category)] += 100.0 * weights.weights[j];

    const auto [lo, hi] = std::minmax_element(out.shares.begin(), out.shares.end());
    out.max_min_ratio = *lo > 0.0 ? *hi / *lo
                                  : std::numeric_limits<double>::infinity();
    return out;
}

} // namespace mcda
