#pragma once

#include <array>
#include <span>

#include "mcda/core.hpp"

namespace mcda {

/// Weight mass per category, as percentages summing to 100.
struct CategoricalSummary {
    std::array<double, 3> shares{}; // indexed by Category: Environment, Cost, Performance
    double max_min_ratio = 1.0;

    double share(Category c) const { return shares[static_cast<std::size_t>(c)]; }
};

/// Per-criterion geometric mean of several weight vectors, renormalized to
/// the unit simplex. Requires at least two vectors of equal length with
/// strictly positive entries.
WeightVector aggregate_gm(std::span<const WeightVector> vectors);

/// Sums weights per criterion category and reports the shares as percentages.
CategoricalSummary categorize(const WeightVector& weights, std::span<const Criterion> criteria);

} // namespace mcda
