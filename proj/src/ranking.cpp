#include "mcda/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcda/normalize.hpp"

namespace mcda {

namespace {

void require_weight_fit(const WeightVector& w, std::size_t n, const char* method) {
    if (w.size() != n)
        throw Error(std::string(method) + ": weight vector length " + std::to_string(w.size()) +
                    " does not match " + std::to_string(n) + " criteria");
    double sum = 0.0;
    for (double v : w.weights) {
        if (!(v >= 0.0)) throw Error(std::string(method) + ": negative weight");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw Error(std::string(method) + ": weights do not sum to 1");
}

void require_folded(const NormalizedMatrix& nm, const char* method) {
    if (!sense_folded(nm.scheme))
        throw Error(std::string(method) + " requires a sense-folded normalization scheme (got '" +
                    std::string(to_token(nm.scheme)) + "')");
}

// Closeness from a weighted matrix and fixed ideal points.
RankResult closeness_result(RankMethod method, Grid weighted, std::vector<double> ideal_best,
                            std::vector<double> ideal_worst) {
    const std::size_t m = weighted.rows();
    const std::size_t n = weighted.cols();

    RankDetail detail;
    detail.separation_best.assign(m, 0.0);
    detail.separation_worst.assign(m, 0.0);
    std::vector<double> scores(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double sp = 0.0, sm = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double dp = ideal_best[j] - weighted(i, j);
            const double dm = weighted(i, j) - ideal_worst[j];
            sp += dp * dp;
            sm += dm * dm;
        }
        detail.separation_best[i] = std::sqrt(sp);
        detail.separation_worst[i] = std::sqrt(sm);
        const double denom = detail.separation_best[i] + detail.separation_worst[i];
        if (denom == 0.0)
            throw Error("indistinguishable alternatives: ideal and anti-ideal points coincide");
        scores[i] = detail.separation_worst[i] / denom;
    }

    detail.weighted = std::move(weighted);
    detail.ideal_best = std::move(ideal_best);
    detail.ideal_worst = std::move(ideal_worst);

    RankResult result;
    result.method = method;
    result.scores = scores;
    result.ranks = rank_from_scores(result.scores, /*higher_is_better=*/true);
    result.detail = std::move(detail);
    return result;
}

} // namespace

RankResult rank_saw(const NormalizedMatrix& nm, const WeightVector& w) {
    require_folded(nm, "SAW");
    require_weight_fit(w, nm.criterion_count(), "SAW");

    const std::size_t m = nm.alternative_count();
    std::vector<double> scores(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double v = 0.0;
        for (std::size_t j = 0; j < nm.criterion_count(); ++j)
            v += w.weights[j] * nm.values(i, j);
        scores[i] = v;
    }

    RankResult result;
    result.method = RankMethod::SAW;
    result.scores = std::move(scores);
    result.ranks = rank_from_scores(result.scores, true);
    return result;
}

RankResult rank_wp(const NormalizedMatrix& nm, const WeightVector& w) {
    require_folded(nm, "WP");
    require_weight_fit(w, nm.criterion_count(), "WP");

    const std::size_t m = nm.alternative_count();
    std::vector<double> prefs(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < nm.criterion_count(); ++j) {
            const double v = nm.values(i, j);
            if (v <= 0.0)
                throw Error("WP undefined at zero normalized value (" + std::to_string(i) + "," +
                            std::to_string(j) + "); min-max normalization produces exact zeros");
            p *= std::pow(v, w.weights[j]);
        }
        prefs[i] = p;
    }
    const double best = *std::max_element(prefs.begin(), prefs.end());
    for (double& p : prefs) p /= best;

    RankResult result;
    result.method = RankMethod::WP;
    result.scores = std::move(prefs);
    result.ranks = rank_from_scores(result.scores, true);
    return result;
}

RankResult rank_topsis(const NormalizedMatrix& nm, const WeightVector& w,
                       std::span<const Sense> senses) {
    require_weight_fit(w, nm.criterion_count(), "TOPSIS");
    if (senses.size() != nm.criterion_count())
        throw Error("TOPSIS: sense list length does not match criteria");
    if (nm.alternative_count() == 0) throw Error("TOPSIS: no alternatives");

    const std::size_t m = nm.alternative_count();
    const std::size_t n = nm.criterion_count();
    Grid y(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) y(i, j) = w.weights[j] * nm.values(i, j);

    std::vector<double> best(n), worst(n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = y(0, j), hi = y(0, j);
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, y(i, j));
            hi = std::max(hi, y(i, j));
        }
        const bool benefit = senses[j] == Sense::Benefit;
        best[j] = benefit ? hi : lo;
        worst[j] = benefit ? lo : hi;
    }
    return closeness_result(RankMethod::TOPSIS, std::move(y), std::move(best), std::move(worst));
}

RankResult rank_topsis(const NormalizedMatrix& nm, const WeightVector& w) {
    // Folded schemes already encode sense: every column is benefit-like.
    std::vector<Sense> senses;
    if (sense_folded(nm.scheme)) {
        senses.assign(nm.criterion_count(), Sense::Benefit);
    } else {
        for (const auto& c : nm.criteria) senses.push_back(c.sense);
    }
    return rank_topsis(nm, w, senses);
}

RankResult rank_rtopsis(const DecisionMatrix& matrix, const WeightVector& w,
                        std::span<const CriterionDomain> domains, RTopsisVariant variant) {
    require_weight_fit(w, matrix.criterion_count(), "R-TOPSIS");
    const auto nm = normalize_rtopsis(matrix, domains, variant); // checks domain enclosure

    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    Grid y(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) y(i, j) = w.weights[j] * nm.values(i, j);

    // Ideal points depend only on weights and domain ratios, never on the
    // alternative set.
    std::vector<double> best(n), worst(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double floor = domains[j].lower / domains[j].upper * w.weights[j];
        const bool benefit = matrix.criteria[j].sense == Sense::Benefit;
        best[j] = benefit ? w.weights[j] : floor;
        worst[j] = benefit ? floor : w.weights[j];
    }

    auto result = closeness_result(RankMethod::RTOPSIS, std::move(y), std::move(best),
                                   std::move(worst));
    result.detail->domains.assign(domains.begin(), domains.end());
    return result;
}

std::vector<CriterionDomain> default_domains(const DecisionMatrix& matrix) {
    if (matrix.values.rows() == 0 || matrix.values.cols() == 0)
        throw Error("cannot derive domains from an empty matrix");
    std::vector<CriterionDomain> out(matrix.criterion_count());
    for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
        double hi = matrix.values(0, j);
        for (std::size_t i = 1; i < matrix.alternative_count(); ++i)
            hi = std::max(hi, matrix.values(i, j));
        out[j] = CriterionDomain{0.0, 1.1 * hi};
    }
    return out;
}

} // namespace mcda
