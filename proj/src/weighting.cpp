#include "mcda/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace mcda {

namespace {

std::vector<double> column_means(const Grid& g) {
    std::vector<double> mu(g.cols(), 0.0);
    for (std::size_t j = 0; j < g.cols(); ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < g.rows(); ++i) sum += g(i, j);
        mu[j] = sum / static_cast<double>(g.rows());
    }
    return mu;
}

// Sample standard deviation per column (m-1 denominator).
std::vector<double> column_std_devs(const Grid& g, const std::vector<double>& mu) {
    std::vector<double> s(g.cols(), 0.0);
    for (std::size_t j = 0; j < g.cols(); ++j) {
        double ss = 0.0;
        for (std::size_t i = 0; i < g.rows(); ++i) {
            const double d = g(i, j) - mu[j];
            ss += d * d;
        }
        s[j] = std::sqrt(ss / static_cast<double>(g.rows() - 1));
    }
    return s;
}

void require_rows(const NormalizedMatrix& nm, std::size_t min_rows, const char* method) {
    if (nm.alternative_count() < min_rows)
        throw Error(std::string(method) + " requires at least " + std::to_string(min_rows) +
                    " alternatives");
    if (nm.criterion_count() == 0) throw Error(std::string(method) + " requires criteria");
    if (nm.values.rows() != nm.alternative_count() || nm.values.cols() != nm.criterion_count())
        throw Error(std::string(method) + ": grid dimensions do not match labels");
}

double ratio_max_min(const std::vector<double>& w) {
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    return *hi / *lo;
}

WeightVector finish(std::vector<double> raw, WeightMethod method, WeightDiagnostics diag,
                    const char* zero_sum_message) {
    double total = 0.0;
    for (double v : raw) total += v;
    if (total <= 0.0) throw Error(zero_sum_message);
    for (double& v : raw) v /= total;
    diag.max_min_ratio = ratio_max_min(raw);
    return WeightVector{std::move(raw), method, std::move(diag)};
}

} // namespace

WeightVector weights_sd(const NormalizedMatrix& nm) {
    require_rows(nm, 2, "SD weighting");
    WeightDiagnostics diag;
    diag.means = column_means(nm.values);
    diag.std_devs = column_std_devs(nm.values, diag.means);
    return finish(diag.std_devs, WeightMethod::SD, std::move(diag), "no dispersion: all criteria are constant");
}

WeightVector weights_cov(const NormalizedMatrix& nm) {
    require_rows(nm, 2, "COV weighting");
    WeightDiagnostics diag;
    diag.means = column_means(nm.values);
    diag.std_devs = column_std_devs(nm.values, diag.means);
    diag.coef_variation.resize(nm.criterion_count());
    for (std::size_t j = 0; j < nm.criterion_count(); ++j) {
        if (diag.means[j] <= 0.0)
            throw Error("COV undefined: column '" + nm.criteria[j].id + "' has non-positive mean");
        diag.coef_variation[j] = diag.std_devs[j] / diag.means[j];
    }
    return finish(diag.coef_variation, WeightMethod::COV, std::move(diag),
                  "no dispersion: all criteria are constant");
}

WeightVector weights_entropy(const NormalizedMatrix& nm) {
    require_rows(nm, 1, "Entropy weighting");
    const std::size_t m = nm.alternative_count();
    const std::size_t n = nm.criterion_count();

    WeightDiagnostics diag;
    diag.proportions = Grid(m, n);
    diag.entropies.assign(n, 0.0);
    diag.diversification.assign(n, 0.0);

    const double k = 1.0 / std::log(static_cast<double>(m));
    for (std::size_t j = 0; j < n; ++j) {
        double colsum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double v = nm.values(i, j);
            if (v < 0.0)
                throw Error("entropy undefined: negative value at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
            colsum += v;
        }
        if (colsum <= 0.0)
            throw Error("entropy undefined: column '" + nm.criteria[j].id + "' sums to zero");
        double e = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double p = nm.values(i, j) / colsum;
            diag.proportions(i, j) = p;
            if (p > 0.0) e -= p * std::log(p); // 0 ln 0 = 0
        }
        diag.entropies[j] = m > 1 ? k * e : 1.0;
        diag.diversification[j] = 1.0 - diag.entropies[j];
        // Guard tiny negative diversification from rounding of a uniform column.
        if (diag.diversification[j] < 0.0 && diag.diversification[j] > -1e-15)
            diag.diversification[j] = 0.0;
    }
    return finish(diag.diversification, WeightMethod::Entropy, std::move(diag),
                  "no information: every criterion is uniformly distributed");
}

WeightVector weights_critic(const NormalizedMatrix& nm) {
    require_rows(nm, 2, "CRITIC weighting");
    const std::size_t m = nm.alternative_count();
    const std::size_t n = nm.criterion_count();

    WeightDiagnostics diag;
    diag.means = column_means(nm.values);
    diag.std_devs = column_std_devs(nm.values, diag.means);
    diag.correlations = Grid(n, n);

    // Pearson correlation; a zero-variance column has no measurable linear
    // relation and correlates 0 with everything (including itself).
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t kk = j; kk < n; ++kk) {
            double num = 0.0, den_j = 0.0, den_k = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const double dj = nm.values(i, j) - diag.means[j];
                const double dk = nm.values(i, kk) - diag.means[kk];
                num += dj * dk;
                den_j += dj * dj;
                den_k += dk * dk;
            }
            const double den = std::sqrt(den_j * den_k);
            const double r = den > 0.0 ? num / den : 0.0;
            diag.correlations(j, kk) = r;
            diag.correlations(kk, j) = r;
        }
    }

    diag.information.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double conflict = 0.0;
        for (std::size_t kk = 0; kk < n; ++kk) conflict += 1.0 - diag.correlations(j, kk);
        diag.information[j] = diag.std_devs[j] * conflict;
    }
    return finish(diag.information, WeightMethod::CRITIC, std::move(diag),
                  "no contrast: information content is zero for every criterion");
}

WeightVector weights_merec(const NormalizedMatrix& nm) {
    require_rows(nm, 1, "MEREC weighting");
    const std::size_t m = nm.alternative_count();
    const std::size_t n = nm.criterion_count();

    // |ln n_ij| grid; requires strictly positive input.
    Grid abslog(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = nm.values(i, j);
            if (v <= 0.0)
                throw Error("MEREC undefined for non-positive normalized value at (" +
                            std::to_string(i) + "," + std::to_string(j) +
                            "); min-max normalization produces exact zeros and is incompatible");
            abslog(i, j) = std::abs(std::log(v));
        }
    }

    WeightDiagnostics diag;
    diag.baseline_scores.assign(m, 0.0);
    diag.removal_scores = Grid(m, n);
    diag.removal_effects.assign(n, 0.0);

    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> rowsum(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) rowsum[i] += abslog(i, j);
        diag.baseline_scores[i] = std::log1p(inv_n * rowsum[i]);
    }
    for (std::size_t j = 0; j < n; ++j) {
        double effect = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double removed = std::log1p(inv_n * (rowsum[i] - abslog(i, j)));
            diag.removal_scores(i, j) = removed;
            effect += std::abs(removed - diag.baseline_scores[i]);
        }
        diag.removal_effects[j] = effect;
    }
    if (n == 1) {
        // Removing the only criterion zeroes every score; the single weight is 1.
        diag.removal_effects[0] = std::max(diag.removal_effects[0], 0.0);
        if (diag.removal_effects[0] == 0.0) diag.removal_effects[0] = 1.0;
    }
    return finish(diag.removal_effects, WeightMethod::MEREC, std::move(diag),
                  "no removal effect: criteria are indistinguishable");
}

WeightVector compute_weights(const NormalizedMatrix& nm, WeightMethod method) {
    switch (method) {
    case WeightMethod::SD: return weights_sd(nm);
    case WeightMethod::COV: return weights_cov(nm);
    case WeightMethod::Entropy: return weights_entropy(nm);
    case WeightMethod::CRITIC: return weights_critic(nm);
    case WeightMethod::MEREC: return weights_merec(nm);
    case WeightMethod::Aggregated:
        throw Error("aggregated weights come from aggregate_gm, not from a matrix");
    }
    throw Error("unhandled weighting method");
}

bool method_compatible(WeightMethod method, NormScheme scheme) {
    return !(method == WeightMethod::MEREC && scheme == NormScheme::MinMax);
}

} // namespace mcda
