#include "impactcalc/edweek.hpp"

#include "impactcalc/error.hpp"

namespace impactcalc::edweek {

namespace {

void require_fraction(const Decimal& d, const char* name) {
    if (d.sign() < 0 || d > Decimal(1)) {
        throw CalcError(ErrorKind::OutOfRange, std::string(name) + " must be in [0, 1]");
    }
}

void require_nonnegative(const Decimal& d, const char* name) {
    if (d.sign() < 0) throw CalcError(ErrorKind::OutOfRange, std::string(name) + " must be >= 0");
}

}  // namespace

EdweekBreakdown edweek_cost(const EdweekInput& in) {
    require_nonnegative(in.annual_revenue, "annual_revenue");
    require_nonnegative(in.meals_per_day_cost, "meals_per_day_cost");
    require_nonnegative(in.cost_per_school_day, "cost_per_school_day");
    require_nonnegative(in.per_student_internet_cost, "per_student_internet_cost");
    require_fraction(in.pct_without_internet, "pct_without_internet");
    require_fraction(in.pct_students_impacted, "pct_students_impacted");
    require_fraction(in.revenue_cut_y1, "revenue_cut_y1");
    require_fraction(in.revenue_cut_y2, "revenue_cut_y2");

    const Decimal enrolled(in.enrolled_students);
    EdweekBreakdown out;
    out.internet = enrolled * in.pct_without_internet * in.per_student_internet_cost;
    out.meals = enrolled * in.pct_students_impacted * Decimal(in.extra_meal_days) * in.meals_per_day_cost;
    out.extended_year = Decimal(in.extra_school_days) * in.cost_per_school_day;
    out.revenue_loss_y1 = in.annual_revenue * in.revenue_cut_y1;
    out.revenue_loss_y2 = in.annual_revenue * in.revenue_cut_y2;
    out.total_increased_cost = out.internet + out.meals + out.extended_year;
    out.total_revenue_loss = out.revenue_loss_y1 + out.revenue_loss_y2;
    return out;
}

const StateDefault* find_default(std::span<const StateDefault> defaults, const std::string& state) {
    for (const auto& d : defaults) {
        if (d.state == state) return &d;
    }
    return nullptr;
}

}  // namespace impactcalc::edweek
