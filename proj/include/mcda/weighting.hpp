#pragma once

#include "mcda/core.hpp"

namespace mcda {

/// Standard-deviation weighting: w_j = s_j / sum_k s_k with s_j the sample
/// (m-1 denominator) standard deviation of column j.
WeightVector weights_sd(const NormalizedMatrix& normalized);

/// Coefficient-of-variation weighting: w_j proportional to s_j / mean_j.
WeightVector weights_cov(const NormalizedMatrix& normalized);

/// Shannon-entropy weighting: w_j proportional to the diversification
/// d_j = 1 - e_j, with e_j the column entropy of the column-sum proportions
/// (convention 0 ln 0 = 0).
WeightVector weights_entropy(const NormalizedMatrix& normalized);

/// CRITIC weighting: contrast intensity (sample standard deviation) times
/// conflict sum_k (1 - r_jk) over Pearson correlations. A zero-variance
/// column correlates 0 with everything.
WeightVector weights_critic(const NormalizedMatrix& normalized);

/// MEREC weighting: removal effect of each criterion on the logarithmic
/// performance score S_i = ln(1 + (1/n) sum_j |ln n_ij|). The per-criterion
/// sum runs over criteria with a 1/n factor and removal effects are summed
/// over alternatives. Requires strictly positive normalized values.
WeightVector weights_merec(const NormalizedMatrix& normalized);

/// Dispatch on method. Aggregated is not computable from a matrix.
WeightVector compute_weights(const NormalizedMatrix& normalized, WeightMethod method);

/// False for combinations whose formulas are undefined (MEREC with min-max
/// normalization, whose exact zeros break the logarithm).
bool method_compatible(WeightMethod method, NormScheme scheme);

} // namespace mcda
