#include "mcda/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mcda {

namespace {

NormalizedMatrix make_result(const DecisionMatrix& matrix, NormScheme scheme) {
    NormalizedMatrix out;
    out.alternatives = matrix.alternatives;
    out.criteria = matrix.criteria;
    out.values = Grid(matrix.alternative_count(), matrix.criterion_count());
    out.scheme = scheme;
    return out;
}

} // namespace

NormalizedMatrix normalize_vector(const DecisionMatrix& matrix) {
    require_valid(matrix);
    auto out = make_result(matrix, NormScheme::Vector);
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();

    for (std::size_t j = 0; j < n; ++j) {
        double sumsq = 0.0;
        for (std::size_t i = 0; i < m; ++i) sumsq += matrix.values(i, j) * matrix.values(i, j);
        const double norm = std::sqrt(sumsq);
        if (norm == 0.0)
            throw Error("zero-norm column '" + matrix.criteria[j].id + "' in vector normalization");
        const bool benefit = matrix.criteria[j].sense == Sense::Benefit;
        for (std::size_t i = 0; i < m; ++i) {
            const double r = matrix.values(i, j) / norm;
            out.values(i, j) = benefit ? r : 1.0 - r;
        }
    }
    return out;
}

NormalizedMatrix normalize_linear_scale(const DecisionMatrix& matrix) {
    require_valid(matrix);
    auto out = make_result(matrix, NormScheme::LinearScale);
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();

    for (std::size_t j = 0; j < n; ++j) {
        double lo = matrix.values(0, j), hi = matrix.values(0, j);
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, matrix.values(i, j));
            hi = std::max(hi, matrix.values(i, j));
        }
        const bool benefit = matrix.criteria[j].sense == Sense::Benefit;
        for (std::size_t i = 0; i < m; ++i) {
            out.values(i, j) = benefit ? matrix.values(i, j) / hi : lo / matrix.values(i, j);
        }
    }
    return out;
}

NormalizedMatrix normalize_minmax(const DecisionMatrix& matrix) {
    require_valid(matrix);
    auto out = make_result(matrix, NormScheme::MinMax);
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();

    for (std::size_t j = 0; j < n; ++j) {
        double lo = matrix.values(0, j), hi = matrix.values(0, j);
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, matrix.values(i, j));
            hi = std::max(hi, matrix.values(i, j));
        }
        if (lo == hi)
            throw Error("degenerate column for min-max: '" + matrix.criteria[j].id +
                        "' is constant");
        const double span = hi - lo;
        const bool benefit = matrix.criteria[j].sense == Sense::Benefit;
        for (std::size_t i = 0; i < m; ++i) {
            const double x = matrix.values(i, j);
            out.values(i, j) = benefit ? (x - lo) / span : (hi - x) / span;
        }
    }
    return out;
}

void require_domains_enclose(const DecisionMatrix& matrix,
                             std::span<const CriterionDomain> domains) {
    const std::size_t n = matrix.criterion_count();
    if (domains.size() != n)
        throw Error("expected " + std::to_string(n) + " criterion domains, got " +
                    std::to_string(domains.size()));
    for (std::size_t j = 0; j < n; ++j) {
        if (!(domains[j].lower < domains[j].upper))
            throw Error("domain for '" + matrix.criteria[j].id + "' has lower >= upper");
        if (!(domains[j].upper > 0.0))
            throw Error("domain for '" + matrix.criteria[j].id + "' has non-positive upper bound");
    }
    for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = matrix.values(i, j);
            if (x < domains[j].lower || x > domains[j].upper)
                throw Error("value at (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside domain [" + std::to_string(domains[j].lower) + ", " +
                            std::to_string(domains[j].upper) + "]");
        }
    }
}

NormalizedMatrix normalize_rtopsis(const DecisionMatrix& matrix,
                                   std::span<const CriterionDomain> domains,
                                   RTopsisVariant variant) {
    require_domains_enclose(matrix, domains);
    const NormScheme scheme = variant == RTopsisVariant::Max ? NormScheme::RTopsisMax
                                                             : NormScheme::RTopsisMaxMin;
    auto out = make_result(matrix, scheme);
    for (std::size_t i = 0; i < matrix.alternative_count(); ++i) {
        for (std::size_t j = 0; j < matrix.criterion_count(); ++j) {
            const double x = matrix.values(i, j);
            const auto& d = domains[j];
            out.values(i, j) = variant == RTopsisVariant::Max
                                   ? x / d.upper
                                   : (x - d.lower) / (d.upper - d.lower);
        }
    }
    return out;
}

NormalizedMatrix normalize(const DecisionMatrix& matrix, NormScheme scheme,
                           std::span<const CriterionDomain> domains) {
    switch (scheme) {
    case NormScheme::Vector: return normalize_vector(matrix);
    case NormScheme::LinearScale: return normalize_linear_scale(matrix);
    case NormScheme::MinMax: return normalize_minmax(matrix);
    case NormScheme::RTopsisMax: return normalize_rtopsis(matrix, domains, RTopsisVariant::Max);
    case NormScheme::RTopsisMaxMin:
        return normalize_rtopsis(matrix, domains, RTopsisVariant::MaxMin);
    }
    throw Error("unhandled normalization scheme");
}

} // namespace mcda
