#pragma once

#include "impactcalc/decimal.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace impactcalc::cpi {

/// Weight rows must sum to one within this tolerance.
inline const Decimal kWeightTolerance = Decimal::from_scaled(1, 9);
/// Fractional digits kept when a weight is obtained by division.
inline constexpr unsigned kWeightScale = 30;

using Cell = std::optional<Decimal>;

/// Monthly expenditure weights and 12-month category inflation (percent),
/// both indexed [month][category]. An empty cell is a missing observation.
struct CpiSeries {
    std::vector<std::string> categories;
    std::vector<std::string> months;
    std::vector<std::vector<Cell>> weights;
    std::vector<std::vector<Cell>> inflation;

    /// Throws MissingMonth.
    std::size_t month_index(std::string_view month) const;
    /// Shape, completeness and normalization checks.
    /// Throws IncompleteRow, SeriesMismatch or InfeasibleAdjustment.
    void validate() const;
};

using WeightRow = std::vector<std::pair<std::string, Decimal>>;

/// Sum over categories of weight x inflation for `month`.
Decimal weighted_inflation(const CpiSeries& series, std::string_view month);

/// Moves the named categories by the given percentage points and spreads
/// the opposite residual over the untouched categories in proportion to
/// their base weight. The output total equals the base total exactly.
WeightRow adjust_weights(const WeightRow& base, const std::map<std::string, Decimal>& deltas_pp);

/// Divides by the row sum; the largest category absorbs the division
/// remainder so the result sums to exactly one.
WeightRow normalize_weights(const WeightRow& row);

/// Copy of `series` whose weights are `base_month`'s row for every month.
CpiSeries with_fixed_weights(const CpiSeries& series, std::string_view base_month);

struct IndexPoint {
    std::string month;
    Decimal official;
    Decimal covid;
    friend bool operator==(const IndexPoint&, const IndexPoint&) = default;
};

/// Per-month weighted inflation under both weightings. Categories and
/// months must be identical, else SeriesMismatch.
std::vector<IndexPoint> compare_indices(const CpiSeries& official, const CpiSeries& covid);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::string> row_labels;
    std::vector<std::vector<Cell>> cells;
};

/// First column holds the month stamp; the header names the categories.
CsvTable parse_table_csv(std::string_view text);

/// Builds a series from a weights table and an inflation table. Complete
/// weight rows are normalized to sum to one.
CpiSeries series_from_csv(std::string_view weights_csv, std::string_view inflation_csv);

std::string indices_to_csv(const std::vector<IndexPoint>& points);

}  // namespace impactcalc::cpi
