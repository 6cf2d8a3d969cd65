#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcda {

/// Error type thrown by all operations on contract violations.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Optimization direction of a criterion.
enum class Sense { Benefit, Cost };

/// Thematic group of a criterion.
enum class Category { Environment, Cost, Performance };

/// Normalization scheme applied to a matrix. Vector/LinearScale/MinMax fold the
/// criterion sense into the values (higher is always better); the RTopsis
/// schemes do not — sense is handled at the ideal points instead.
enum class NormScheme { Vector, LinearScale, MinMax, RTopsisMax, RTopsisMaxMin };

/// Objective weighting method (or the geometric-mean aggregate of several).
enum class WeightMethod { SD, COV, Entropy, CRITIC, MEREC, Aggregated };

/// Ranking method.
enum class RankMethod { SAW, WP, TOPSIS, RTOPSIS };

/// Domain normalization variant for R-TOPSIS.
enum class RTopsisVariant { Max, MaxMin };

// Token conversions used by file formats and the CLI. Parsers throw Error on
// unknown tokens; to_token is total.
std::string_view to_token(Sense s);
std::string_view to_token(Category c);
std::string_view to_token(NormScheme s);
std::string_view to_token(WeightMethod m);
std::string_view to_token(RankMethod m);
std::string_view to_token(RTopsisVariant v);
Sense sense_from_token(std::string_view tok);
Category category_from_token(std::string_view tok);
NormScheme scheme_from_token(std::string_view tok);
WeightMethod weight_method_from_token(std::string_view tok);
RankMethod rank_method_from_token(std::string_view tok);
RTopsisVariant variant_from_token(std::string_view tok);

/// Human-readable names matching the usual presentation (SD, R-TOPSIS, ...).
std::string_view display_name(WeightMethod m);
std::string_view display_name(RankMethod m);

/// One evaluation criterion with its metadata. Sense and category are always
/// explicit; unit is informational only.
struct Criterion {
    std::string id;
    std::string name;
    Sense sense = Sense::Cost;
    Category category = Category::Environment;
    std::string unit;
};

/// Closed value domain [lower, upper] declared for one criterion (R-TOPSIS).
struct CriterionDomain {
    double lower = 0.0;
    double upper = 1.0;
};

/// Dense row-major m x n grid of doubles.
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return values_.empty(); }

    std::span<const double> row(std::size_t r) const {
        return {values_.data() + r * cols_, cols_};
    }
    std::vector<double> column(std::size_t c) const {
        std::vector<double> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = values_[r * cols_ + c];
        return out;
    }

    const std::vector<double>& data() const { return values_; }

    bool operator==(const Grid&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// Raw alternatives x criteria decision matrix. All values are expected to be
/// strictly positive and finite; validate() reports deviations.
struct DecisionMatrix {
    std::vector<std::string> alternatives;
    std::vector<Criterion> criteria;
    Grid values;

    std::size_t alternative_count() const { return alternatives.size(); }
    std::size_t criterion_count() const { return criteria.size(); }

    std::vector<Sense> senses() const;
    std::optional<std::size_t> criterion_index(std::string_view id) const;
};

/// Dimensionless matrix produced by a normalization scheme. Labels and
/// criterion metadata are carried over from the source matrix.
struct NormalizedMatrix {
    std::vector<std::string> alternatives;
    std::vector<Criterion> criteria;
    Grid values;
    NormScheme scheme = NormScheme::Vector;

    std::size_t alternative_count() const { return alternatives.size(); }
    std::size_t criterion_count() const { return criteria.size(); }
};

/// True when the scheme folds criterion sense into the values.
inline bool sense_folded(NormScheme s) {
    return s == NormScheme::Vector || s == NormScheme::LinearScale || s == NormScheme::MinMax;
}

/// Per-criterion intermediates recorded by the weighting method that produced
/// a WeightVector. Only the fields the method actually uses are populated.
struct WeightDiagnostics {
    std::vector<double> std_devs;         // s_j
    std::vector<double> means;            // column means
    std::vector<double> coef_variation;   // CV_j
    Grid proportions;                     // p_ij (entropy)
    std::vector<double> entropies;        // e_j
    std::vector<double> diversification;  // d_j
    Grid correlations;                    // r_jk (CRITIC)
    std::vector<double> information;      // C_j (CRITIC)
    std::vector<double> baseline_scores;  // S_i (MEREC)
    Grid removal_scores;                  // S'_ij (MEREC)
    std::vector<double> removal_effects;  // E_j (MEREC)
    double max_min_ratio = 1.0;           // largest weight / smallest weight
};

/// Criterion weights on the unit simplex with method provenance.
struct WeightVector {
    std::vector<double> weights;
    WeightMethod method = WeightMethod::SD;
    WeightDiagnostics diagnostics;

    std::size_t size() const { return weights.size(); }
};

/// Method-specific detail attached to a RankResult: weighted matrix, ideal
/// points and separations (TOPSIS family), and the domains actually used
/// (R-TOPSIS echoes them for auditability).
struct RankDetail {
    Grid weighted;                        // y_ij
    std::vector<double> ideal_best;       // A+
    std::vector<double> ideal_worst;      // A-
    std::vector<double> separation_best;  // S+_i
    std::vector<double> separation_worst; // S-_i
    std::vector<CriterionDomain> domains; // R-TOPSIS only
};

/// Scores and ranks of all alternatives under one ranking method.
struct RankResult {
    RankMethod method = RankMethod::SAW;
    std::vector<double> scores;
    std::vector<int> ranks; // 1 = best; ties share the minimum rank
    std::optional<RankDetail> detail;
};

/// One invariant violation found by validate(), with coordinates when the
/// violation is tied to a cell.
struct Violation {
    std::string message;
    std::optional<std::size_t> row;
    std::optional<std::size_t> col;
};

/// Checks every DecisionMatrix invariant and returns one entry per violation.
/// An empty report means the matrix is valid.
std::vector<Violation> validate(const DecisionMatrix& matrix);

/// Throws Error with the first violation's message unless the matrix is valid.
void require_valid(const DecisionMatrix& matrix);

/// Competition ("min") ranking: the best score gets rank 1 and tied scores
/// share the smallest rank of their group. Throws Error on empty or
/// non-finite input.
std::vector<int> rank_from_scores(std::span<const double> scores, bool higher_is_better);

} // namespace mcda
