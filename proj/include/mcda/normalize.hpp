#pragma once

#include <span>

#include "mcda/core.hpp"

namespace mcda {

/// Euclidean-norm normalization. Benefit columns map to x / ||x||_2, cost
/// columns to 1 - x / ||x||_2, so higher always means better.
NormalizedMatrix normalize_vector(const DecisionMatrix& matrix);

/// Ratio-to-extreme normalization: benefit columns x / max, cost columns
/// min / x. Outputs lie in (0, 1].
NormalizedMatrix normalize_linear_scale(const DecisionMatrix& matrix);

/// Affine [0,1] normalization: benefit (x - min)/(max - min), cost
/// (max - x)/(max - min). Column extremes map to exactly 0 and 1; constant
/// columns are an error.
NormalizedMatrix normalize_minmax(const DecisionMatrix& matrix);

/// Domain-based normalization for R-TOPSIS: Max variant x / d2, MaxMin
/// variant (x - d1)/(d2 - d1). Criterion sense is NOT folded in; it is
/// handled at the ideal points. Data outside its domain is an error.
NormalizedMatrix normalize_rtopsis(const DecisionMatrix& matrix,
                                   std::span<const CriterionDomain> domains,
                                   RTopsisVariant variant);

/// Dispatch on scheme. The RTopsis schemes require domains.
NormalizedMatrix normalize(const DecisionMatrix& matrix, NormScheme scheme,
                           std::span<const CriterionDomain> domains = {});

/// Checks that domains are well-formed (lower < upper, upper > 0) and enclose
/// every observed value; throws Error with coordinates otherwise.
void require_domains_enclose(const DecisionMatrix& matrix,
                             std::span<const CriterionDomain> domains);

} // namespace mcda
