#include "impactcalc/sample.hpp"

namespace impactcalc {

namespace {

LineItem literal(std::string id, std::string label, Side side, const char* amount, Unit unit) {
    return {std::move(id), std::move(label), side, LiteralSource{Quantity(Decimal::parse(amount), unit)},
            Provenance::PaperSample, 1};
}

LineItem derived(std::string id, std::string label, std::string formula, ParameterMap args,
                 int horizon = 1) {
    return {std::move(id), std::move(label), Side::Credit,
            DerivedSource{std::move(formula), std::move(args), {}, std::nullopt}, Provenance::PaperSample,
            horizon};
}

LineItem tbd(std::string id, std::string label, Side side, Provenance provenance) {
    return {std::move(id), std::move(label), side, TbdSource{}, provenance, 1};
}

}  // namespace

Scenario sample_scenario() {
    Scenario s;
    s.name = "U.S. value creation sample";
    s.parameters = {
        {"monthly_loss", "50000000000"_dec},
        {"months", Decimal(12)},
        {"conversion", "0.10"_dec},
        {"gdp", "21000000000000"_dec},
        {"covid_attribution", "0.04"_dec},
        {"total_deaths", Decimal(793000)},
        {"jobs_lost", Decimal(22000000)},
        {"bps", Decimal(50)},
    };
    s.line_items = {
        literal("a", "(a) Cost over the years to bring the AI solution to the U.S. market", Side::Debit,
                "75000000.00", Unit::USD),
        tbd("b", "(b) Additional future potential through a public/private partnership", Side::Debit,
            Provenance::PaperSample),
        tbd("c", "(c) Additional criteria 1 from the user", Side::Debit, Provenance::User),
        tbd("d", "(d) Additional criteria 2 from the user", Side::Debit, Provenance::User),
        derived("e", "(e) Reduction in COVID-related healthcare expenses", "healthcare_savings",
                {{"reduction_fraction", "0.001"_dec}}),
        derived("f", "(f) Increase in U.S. GDP", "gdp_gain", {{"fraction", "0.001"_dec}}),
        derived("g", "(g) Reduction of COVID-related deaths", "lives_saved",
                {{"reduction_fraction", "0.01"_dec}}, 3),
        derived("h", "(h) U.S. jobs saved", "jobs_saved", {{"fraction", "0.001"_dec}}, 3),
        literal("i", "(i) Reduction in U.S. PCR testing", Side::Credit, "8000000.00", Unit::USD),
        literal("j", "(j) Reduction in U.S. school-related expenses and delayed learning", Side::Credit,
                "50000000.00", Unit::USD),
        derived("k", "(k) Reduction in COVID-related U.S. inflation", "inflation_reduction",
                {{"fraction", "0.001"_dec}}),
        tbd("l", "(l) Measurable progress toward pre-COVID normalcy", Side::Credit,
            Provenance::PaperSample),
        tbd("m", "(m) Additional criteria 3 from the user", Side::Credit, Provenance::User),
        tbd("n", "(n) Additional criteria 4 from the user", Side::Credit, Provenance::User),
    };
    return s;
}

}  // namespace impactcalc
