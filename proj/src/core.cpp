#include "mcda/core.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

namespace mcda {

std::string_view to_token(Sense s) {
    return s == Sense::Benefit ? "benefit" : "cost";
}

std::string_view to_token(Category c) {
    switch (c) {
    case Category::Environment: return "environment";
    case Category::Cost: return "cost";
    case Category::Performance: return "performance";
    }
    return "environment";
}

std::string_view to_token(NormScheme s) {
    switch (s) {
    case NormScheme::Vector: return "vector";
    case NormScheme::LinearScale: return "linear-scale";
    case NormScheme::MinMax: return "minmax";
    case NormScheme::RTopsisMax: return "rtopsis-max";
    case NormScheme::RTopsisMaxMin: return "rtopsis-maxmin";
    }
    return "vector";
}

std::string_view to_token(WeightMethod m) {
    switch (m) {
    case WeightMethod::SD: return "sd";
    case WeightMethod::COV: return "cov";
    case WeightMethod::Entropy: return "entropy";
    case WeightMethod::CRITIC: return "critic";
    case WeightMethod::MEREC: return "merec";
    case WeightMethod::Aggregated: return "gm";
    }
    return "sd";
}

std::string_view to_token(RankMethod m) {
    switch (m) {
    case RankMethod::SAW: return "saw";
    case RankMethod::WP: return "wp";
    case RankMethod::TOPSIS: return "topsis";
    case RankMethod::RTOPSIS: return "rtopsis";
    }
    return "saw";
}

std::string_view to_token(RTopsisVariant v) {
    return v == RTopsisVariant::Max ? "max" : "maxmin";
}

Sense sense_from_token(std::string_view tok) {
    if (tok == "benefit") return Sense::Benefit;
    if (tok == "cost") return Sense::Cost;
    throw Error("unknown sense token '" + std::string(tok) + "' (expected 'benefit' or 'cost')");
}

Category category_from_token(std::string_view tok) {
    if (tok == "environment") return Category::Environment;
    if (tok == "cost") return Category::Cost;
    if (tok == "performance") return Category::Performance;
    throw Error("unknown category token '" + std::string(tok) +
                "' (expected 'environment', 'cost' or 'performance')");
}

NormScheme scheme_from_token(std::string_view tok) {
    if (tok == "vector") return NormScheme::Vector;
    if (tok == "linear-scale") return NormScheme::LinearScale;
    if (tok == "minmax") return NormScheme::MinMax;
    if (tok == "rtopsis-max") return NormScheme::RTopsisMax;
    if (tok == "rtopsis-maxmin") return NormScheme::RTopsisMaxMin;
    throw Error("unknown normalization scheme '" + std::string(tok) + "'");
}

WeightMethod weight_method_from_token(std::string_view tok) {
    if (tok == "sd") return WeightMethod::SD;
    if (tok == "cov") return WeightMethod::COV;
    if (tok == "entropy") return WeightMethod::Entropy;
    if (tok == "critic") return WeightMethod::CRITIC;
    if (tok == "merec") return WeightMethod::MEREC;
    if (tok == "gm" || tok == "aggregated") return WeightMethod::Aggregated;
    throw Error("unknown weighting method '" + std::string(tok) + "'");
}

RankMethod rank_method_from_token(std::string_view tok) {
    if (tok == "saw") return RankMethod::SAW;
    if (tok == "wp") return RankMethod::WP;
    if (tok == "topsis") return RankMethod::TOPSIS;
    if (tok == "rtopsis") return RankMethod::RTOPSIS;
    throw Error("unknown ranking method '" + std::string(tok) + "'");
}

RTopsisVariant variant_from_token(std::string_view tok) {
    if (tok == "max") return RTopsisVariant::Max;
    if (tok == "maxmin") return RTopsisVariant::MaxMin;
    throw Error("unknown R-TOPSIS variant '" + std::string(tok) + "' (expected 'max' or 'maxmin')");
}

std::string_view display_name(WeightMethod m) {
    switch (m) {
    case WeightMethod::SD: return "SD";
    case WeightMethod::COV: return "COV";
    case WeightMethod::Entropy: return "Entropy";
    case WeightMethod::CRITIC: return "CRITIC";
    case WeightMethod::MEREC: return "MEREC";
    case WeightMethod::Aggregated: return "GM";
    }
    return "SD";
}

std::string_view display_name(RankMethod m) {
    switch (m) {
    case RankMethod::SAW: return "SAW";
    case RankMethod::WP: return "WP";
    case RankMethod::TOPSIS: return "TOPSIS";
    case RankMethod::RTOPSIS: return "R-TOPSIS";
    }
    return "SAW";
}

std::vector<Sense> DecisionMatrix::senses() const {
    std::vector<Sense> out;
    out.reserve(criteria.size());
    for (const auto& c : criteria) out.push_back(c.sense);
    return out;
}

std::optional<std::size_t> DecisionMatrix::criterion_index(std::string_view id) const {
    for (std::size_t j = 0; j < criteria.size(); ++j)
        if (criteria[j].id == id) return j;
    return std::nullopt;
}

std::vector<Violation> validate(const DecisionMatrix& matrix) {
    std::vector<Violation> report;
    const std::size_t m = matrix.alternatives.size();
    const std::size_t n = matrix.criteria.size();

    if (m < 2) report.push_back({"m >= 2 required (got " + std::to_string(m) + " alternatives)", {}, {}});
    if (n < 1) report.push_back({"n >= 1 required (got 0 criteria)", {}, {}});

    if (matrix.values.rows() != m || matrix.values.cols() != n) {
        report.push_back({"value grid is " + std::to_string(matrix.values.rows()) + "x" +
                              std::to_string(matrix.values.cols()) + " but labels describe " +
                              std::to_string(m) + "x" + std::to_string(n),
                          {}, {}});
        return report; // coordinates below would be meaningless
    }

    std::unordered_set<std::string> seen;
    for (std::size_t j = 0; j < n; ++j) {
        if (!seen.insert(matrix.criteria[j].id).second)
            report.push_back({"duplicate criterion id '" + matrix.criteria[j].id + "'", {}, j});
    }

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = matrix.values(i, j);
            if (!std::isfinite(v)) {
                report.push_back({"non-finite value at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")",
                                  i, j});
            } else if (v <= 0.0) {
                report.push_back({"non-positive value at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")",
                                  i, j});
            }
        }
    }
    return report;
}

void require_valid(const DecisionMatrix& matrix) {
    const auto report = validate(matrix);
    if (!report.empty()) throw Error("invalid decision matrix: " + report.front().message);
}

std::vector<int> rank_from_scores(std::span<const double> scores, bool higher_is_better) {
    if (scores.empty()) throw Error("no scores");
    for (double s : scores)
        if (!std::isfinite(s)) throw Error("non-finite score");

    // Competition rank: 1 + number of strictly better scores.
    std::vector<int> ranks(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        int better = 0;
        for (std::size_t k = 0; k < scores.size(); ++k) {
            if (higher_is_better ? scores[k] > scores[i] : scores[k] < scores[i]) ++better;
        }
        ranks[i] = better + 1;
    }
    return ranks;
}

} // namespace mcda
