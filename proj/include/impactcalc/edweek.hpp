#pragma once

#include "impactcalc/decimal.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace impactcalc::edweek {

/// District-level inputs. Fractions are in [0, 1]; everything else >= 0.
struct EdweekInput {
    std::string state;
    std::uint64_t enrolled_students = 0;
    Decimal annual_revenue;
    Decimal pct_without_internet;
    std::uint64_t extra_meal_days = 0;
    Decimal meals_per_day_cost;
    std::uint64_t extra_school_days = 0;
    Decimal cost_per_school_day;
    Decimal pct_students_impacted;
    Decimal revenue_cut_y1;
    Decimal revenue_cut_y2;
    Decimal per_student_internet_cost;
};

struct EdweekBreakdown {
    Decimal internet;
    Decimal meals;
    Decimal extended_year;
    Decimal revenue_loss_y1;
    Decimal revenue_loss_y2;
    Decimal total_increased_cost;
    Decimal total_revenue_loss;
    friend bool operator==(const EdweekBreakdown&, const EdweekBreakdown&) = default;
};

/// Linear school-cost model:
///   internet      = enrolled x pct_without_internet x per_student_internet_cost
///   meals         = enrolled x pct_students_impacted x extra_meal_days x meals_per_day_cost
///   extended_year = extra_school_days x cost_per_school_day
///   revenue_loss  = annual_revenue x revenue_cut, per school year
EdweekBreakdown edweek_cost(const EdweekInput& input);

/// Per-state enrollment and revenue fallbacks.
struct StateDefault {
    std::string state;
    std::uint64_t enrolled_students = 0;
    Decimal annual_revenue;
    friend bool operator==(const StateDefault&, const StateDefault&) = default;
};

const StateDefault* find_default(std::span<const StateDefault> defaults, const std::string& state);

}  // namespace impactcalc::edweek
