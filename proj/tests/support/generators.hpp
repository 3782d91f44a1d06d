#pragma once

// Seeded generators for property tests. Everything here builds values
// directly from the public types; nothing calls back into the engine.

#include "impactcalc/analysis.hpp"
#include "impactcalc/cpi.hpp"
#include "impactcalc/ledger.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace impactcalc::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    /// Whole cents in [0, max_dollars].
    Decimal cents(std::int64_t max_dollars) {
        return Decimal::from_scaled(integer(0, max_dollars * 100), 2);
    }
    /// [0, 1] with up to `digits` fractional digits.
    Decimal fraction(unsigned digits = 4) {
        std::int64_t scale = 1;
        for (unsigned i = 0; i < digits; ++i) scale *= 10;
        return Decimal::from_scaled(integer(0, scale), digits);
    }
    Decimal count(std::int64_t hi) { return Decimal(integer(0, hi)); }

    Unit non_tbd_unit() {
        static constexpr Unit units[] = {Unit::USD, Unit::Lives, Unit::Jobs, Unit::BasisPoints, Unit::Dimensionless};
        return units[integer(0, 4)];
    }

    Provenance provenance() {
        static constexpr Provenance ps[] = {Provenance::User, Provenance::PaperSample, Provenance::Default};
        return ps[integer(0, 2)];
    }

    Quantity literal_quantity(Unit unit) {
        if (unit == Unit::USD) return Quantity::usd(cents(1'000'000'000));
        return {Decimal::from_scaled(integer(0, 100'000'000), static_cast<unsigned>(integer(0, 3))), unit};
    }

    LineItem literal_item(const std::string& id) {
        return {id, "literal " + id, coin() ? Side::Debit : Side::Credit,
                LiteralSource{literal_quantity(non_tbd_unit())}, provenance(),
                static_cast<int>(integer(1, 5))};
    }

    LineItem tbd_item(const std::string& id) {
        return {id, "tbd " + id, coin() ? Side::Debit : Side::Credit, TbdSource{}, provenance(), 1};
    }

    /// A derived item whose arguments are all item-local and in range.
    LineItem derived_item(const std::string& id) {
        LineItem item{id, "derived " + id, coin() ? Side::Debit : Side::Credit, TbdSource{}, provenance(),
                      static_cast<int>(integer(1, 5))};
        DerivedSource d;
        switch (integer(0, 5)) {
            case 0:
                d.formula = "healthcare_savings";
                d.args = {{"monthly_loss", cents(100'000'000'000)},
                          {"months", Decimal(integer(1, 24))},
                          {"reduction_fraction", fraction()},
                          {"conversion", fraction(2)}};
                break;
            case 1:
                d.formula = "gdp_gain";
                d.args = {{"gdp", cents(30'000'000'000'000)},
                          {"covid_attribution", fraction(2)},
                          {"fraction", fraction()}};
                break;
            case 2:
                d.formula = "lives_saved";
                d.args = {{"total_deaths", count(2'000'000)}, {"reduction_fraction", fraction()}};
                break;
            case 3:
                d.formula = "jobs_saved";
                d.args = {{"jobs_lost", count(50'000'000)}, {"fraction", fraction()}};
                break;
            case 4:
                d.formula = "inflation_reduction";
                d.args = {{"bps", count(500)}, {"fraction", fraction()}};
                break;
            default:
                d.formula = "product";
                d.args = {{"qty", count(100'000)}, {"rate", cents(1'000)}};
                d.unit = non_tbd_unit();
                break;
        }
        if (coin(0.3) && d.formula != "product") d.unit = d.formula == "lives_saved"  ? Unit::Lives
                                                          : d.formula == "jobs_saved" ? Unit::Jobs
                                                          : d.formula == "inflation_reduction"
                                                              ? Unit::BasisPoints
                                                              : Unit::USD;
        item.source = std::move(d);
        return item;
    }

    /// Random scenario with unique ids. Some derived items read a shared
    /// scenario parameter instead of a local argument.
    Scenario scenario(std::size_t max_items, bool with_derived = true) {
        Scenario s;
        s.name = "random-" + std::to_string(integer(0, 1'000'000));
        std::size_t n = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_items)));
        if (with_derived) {
            s.parameters["conversion"] = fraction(2);
            s.parameters["bps"] = count(400);
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::string id = "r" + std::to_string(i);
            auto roll = integer(0, 9);
            if (roll < 2) {
                s.line_items.push_back(tbd_item(id));
            } else if (roll < 6 || !with_derived) {
                s.line_items.push_back(literal_item(id));
            } else {
                LineItem item = derived_item(id);
                auto& d = std::get<DerivedSource>(item.source);
                // Move a local argument to the shared parameter map.
                if ((d.formula == "healthcare_savings" || d.formula == "inflation_reduction") && coin()) {
                    d.args.erase(d.formula == "healthcare_savings" ? "conversion" : "bps");
                }
                s.line_items.push_back(std::move(item));
            }
        }
        return s;
    }

    /// All parameter paths present in `s`.
    static std::vector<std::string> parameter_paths(const Scenario& s) {
        std::vector<std::string> out;
        for (const auto& [name, _] : s.parameters) out.push_back(name);
        for (const auto& item : s.line_items) {
            if (const auto* d = std::get_if<DerivedSource>(&item.source)) {
                for (const auto& [name, _] : d->args) out.push_back(item.id + "." + name);
            }
        }
        return out;
    }

    /// A value that keeps the named argument inside its formula's domain.
    Decimal value_for(const std::string& path) {
        auto name = path.substr(path.find('.') == std::string::npos ? 0 : path.find('.') + 1);
        if (name.find("fraction") != std::string::npos || name == "conversion" || name == "covid_attribution") {
            return fraction();
        }
        if (name == "months") return Decimal(integer(1, 36));
        if (name == "qty" || name == "rate") return cents(10'000);
        return count(10'000'000);
    }

    /// Weight row of `n` categories summing to exactly one.
    cpi::WeightRow weight_row(std::size_t n) {
        std::vector<std::int64_t> parts(n);
        std::int64_t total = 0;
        for (auto& p : parts) total += (p = integer(0, 1000));
        if (total == 0) {
            parts[0] = 1;
            total = 1;
        }
        cpi::WeightRow row;
        Decimal assigned;
        for (std::size_t i = 0; i < n; ++i) {
            Decimal w = i + 1 == n ? Decimal(1) - assigned
                                   : Decimal(parts[i]).divided_by(Decimal(total), 12, Rounding::HalfEven);
            assigned += w;
            row.emplace_back("c" + std::to_string(i), w);
        }
        return row;
    }

    /// Percent inflation in [-5, 15] with two decimals.
    Decimal inflation_pct() { return Decimal::from_scaled(integer(-500, 1500), 2); }

    cpi::CpiSeries cpi_series(std::size_t categories, std::size_t months) {
        cpi::CpiSeries s;
        for (std::size_t c = 0; c < categories; ++c) s.categories.push_back("c" + std::to_string(c));
        for (std::size_t m = 0; m < months; ++m) {
            s.months.push_back("2020-" + std::string(m < 9 ? "0" : "") + std::to_string(m + 1));
            auto row = weight_row(categories);
            std::vector<cpi::Cell> w, r;
            for (const auto& [_, v] : row) w.push_back(v);
            for (std::size_t c = 0; c < categories; ++c) r.push_back(inflation_pct());
            s.weights.push_back(std::move(w));
            s.inflation.push_back(std::move(r));
        }
        return s;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace impactcalc::testing
