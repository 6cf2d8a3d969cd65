#pragma once

#include <span>
#include <vector>

#include "mcda/core.hpp"

namespace mcda {

/// Simple additive weighting: V_i = sum_j w_j n_ij. Requires a sense-folded
/// normalization scheme.
RankResult rank_saw(const NormalizedMatrix& normalized, const WeightVector& weights);

/// Weighted product: P_i = prod_j n_ij^{w_j}, scores V_i = P_i / max P. The
/// best alternative scores exactly 1. Zero normalized values are an error
/// (min-max normalization produces them).
RankResult rank_wp(const NormalizedMatrix& normalized, const WeightVector& weights);

/// Classical TOPSIS: weighted normalized matrix, ideal/anti-ideal points,
/// Euclidean separations, closeness C_i = S-/(S+ + S-). With a sense-folded
/// scheme every column is benefit-like; with an RTopsis scheme the criterion
/// senses from the matrix apply.
RankResult rank_topsis(const NormalizedMatrix& normalized, const WeightVector& weights);

/// TOPSIS with explicit senses, applying the benefit/cost ideal-point rule
/// literally regardless of scheme. For standalone use on non-folded input.
RankResult rank_topsis(const NormalizedMatrix& normalized, const WeightVector& weights,
                       std::span<const Sense> senses);

/// R-TOPSIS: domain normalization of the raw matrix, fixed ideal points
/// derived from the domain ratios (benefit: A+ = w_j, A- = (d1/d2) w_j; cost
/// reversed), Euclidean separations and closeness. Ideal points do not depend
/// on the alternative set, which removes rank reversal. The domains used are
/// echoed into the result detail.
RankResult rank_rtopsis(const DecisionMatrix& matrix, const WeightVector& weights,
                        std::span<const CriterionDomain> domains,
                        RTopsisVariant variant = RTopsisVariant::Max);

/// Conservative default domains when none are supplied: lower 0, upper 1.1x
/// the observed column maximum.
std::vector<CriterionDomain> default_domains(const DecisionMatrix& matrix);

} // namespace mcda
