#include "impactcalc/cpi.hpp"

#include "impactcalc/error.hpp"

#include <set>
#include <sstream>

namespace impactcalc::cpi {

namespace {

Decimal require_cell(const Cell& c, const std::string& month, const std::string& category,
                     const char* table) {
    if (!c) {
        throw CalcError(ErrorKind::IncompleteRow,
                        std::string(table) + " missing for " + month + " / " + category);
    }
    return *c;
}

Decimal row_sum(const WeightRow& row) {
    Decimal sum;
    for (const auto& [_, w] : row) sum += w;
    return sum;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

std::size_t CpiSeries::month_index(std::string_view month) const {
    for (std::size_t i = 0; i < months.size(); ++i) {
        if (months[i] == month) return i;
    }
    throw CalcError(ErrorKind::MissingMonth, "no data for month '" + std::string(month) + "'");
}

void CpiSeries::validate() const {
    if (weights.size() != months.size() || inflation.size() != months.size()) {
        throw CalcError(ErrorKind::SeriesMismatch, "table row count differs from month count");
    }
    for (std::size_t m = 0; m < months.size(); ++m) {
        if (weights[m].size() != categories.size() || inflation[m].size() != categories.size()) {
            throw CalcError(ErrorKind::IncompleteRow, "row " + months[m] + " has the wrong width");
        }
        Decimal sum;
        for (std::size_t c = 0; c < categories.size(); ++c) {
            Decimal w = require_cell(weights[m][c], months[m], categories[c], "weight");
            require_cell(inflation[m][c], months[m], categories[c], "inflation");
            if (w.sign() < 0 || w > Decimal(1)) {
                throw CalcError(ErrorKind::InfeasibleAdjustment,
                                "weight outside [0, 1] in " + months[m] + " / " + categories[c]);
            }
            sum += w;
        }
        if ((sum - Decimal(1)).abs() > kWeightTolerance) {
            throw CalcError(ErrorKind::InfeasibleAdjustment,
                            "weights for " + months[m] + " sum to " + sum.to_string());
        }
    }
}

Decimal weighted_inflation(const CpiSeries& series, std::string_view month) {
    std::size_t m = series.month_index(month);
    if (m >= series.weights.size() || m >= series.inflation.size() ||
        series.weights[m].size() != series.categories.size() ||
        series.inflation[m].size() != series.categories.size()) {
        throw CalcError(ErrorKind::IncompleteRow, "row " + std::string(month) + " has the wrong width");
    }
    Decimal total;
    for (std::size_t c = 0; c < series.categories.size(); ++c) {
        total += require_cell(series.weights[m][c], series.months[m], series.categories[c], "weight") *
                 require_cell(series.inflation[m][c], series.months[m], series.categories[c], "inflation");
    }
    return total;
}

WeightRow adjust_weights(const WeightRow& base, const std::map<std::string, Decimal>& deltas_pp) {
    auto infeasible = [](const std::string& why) {
        throw CalcError(ErrorKind::InfeasibleAdjustment, why);
    };
    Decimal base_total = row_sum(base);
    if ((base_total - Decimal(1)).abs() > kWeightTolerance) {
        infeasible("base weights sum to " + base_total.to_string() + ", not 1");
    }
    for (const auto& [cat, _] : deltas_pp) {
        bool found = false;
        for (const auto& [name, w] : base) found = found || name == cat;
        if (!found) infeasible("unknown category '" + cat + "'");
    }

    WeightRow out = base;
    Decimal residual;
    Decimal untouched_total;
    std::vector<std::size_t> untouched;
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto it = deltas_pp.find(out[i].first);
        if (it == deltas_pp.end()) {
            untouched.push_back(i);
            untouched_total += out[i].second;
            continue;
        }
        Decimal shift = it->second.divided_by(Decimal(100), kWeightScale, Rounding::HalfEven);
        out[i].second += shift;
        residual -= shift;
        if (out[i].second.sign() < 0 || out[i].second > Decimal(1)) {
            infeasible("category '" + out[i].first + "' leaves [0, 1]");
        }
    }
    if (residual.is_zero()) return out;
    if (untouched.empty()) infeasible("every category adjusted but deltas do not cancel");
    if (untouched_total.is_zero()) infeasible("untouched categories have zero weight to absorb residual");

    std::size_t absorber = untouched.front();
    for (std::size_t i : untouched) {
        if (out[i].second > out[absorber].second) absorber = i;
    }
    Decimal assigned;
    for (std::size_t i : untouched) {
        if (i == absorber) continue;
        Decimal share = (residual * out[i].second).divided_by(untouched_total, kWeightScale, Rounding::HalfEven);
        assigned += share;
        out[i].second += share;
    }
    out[absorber].second += residual - assigned;
    for (std::size_t i : untouched) {
        if (out[i].second.sign() < 0 || out[i].second > Decimal(1)) {
            infeasible("category '" + out[i].first + "' leaves [0, 1]");
        }
    }
    return out;
}

WeightRow normalize_weights(const WeightRow& row) {
    Decimal total = row_sum(row);
    if (total.sign() <= 0) throw CalcError(ErrorKind::InfeasibleAdjustment, "weights sum to zero");
    for (const auto& [name, w] : row) {
        if (w.sign() < 0) throw CalcError(ErrorKind::InfeasibleAdjustment, "negative weight for " + name);
    }
    WeightRow out = row;
    std::size_t absorber = 0;
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].second > out[absorber].second) absorber = i;
    }
    Decimal assigned;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i == absorber) continue;
        out[i].second = out[i].second.divided_by(total, kWeightScale, Rounding::HalfEven);
        assigned += out[i].second;
    }
    out[absorber].second = Decimal(1) - assigned;
    return out;
}

CpiSeries with_fixed_weights(const CpiSeries& series, std::string_view base_month) {
    std::size_t base = series.month_index(base_month);
    CpiSeries out = series;
    for (auto& row : out.weights) row = series.weights.at(base);
    return out;
}

std::vector<IndexPoint> compare_indices(const CpiSeries& official, const CpiSeries& covid) {
    if (official.categories != covid.categories) {
        throw CalcError(ErrorKind::SeriesMismatch, "category sets differ");
    }
    if (official.months != covid.months) {
        throw CalcError(ErrorKind::SeriesMismatch, "month ranges differ");
    }
    std::vector<IndexPoint> out;
    out.reserve(official.months.size());
    for (const auto& month : official.months) {
        out.push_back({month, weighted_inflation(official, month), weighted_inflation(covid, month)});
    }
    return out;
}

CsvTable parse_table_csv(std::string_view text) {
    CsvTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool header = true;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split(line);
        if (header) {
            if (fields.size() < 2) {
                throw CalcError(ErrorKind::ParseError, "header needs a month column and a category")
                    .with_line(line_no);
            }
            table.columns.assign(fields.begin() + 1, fields.end());
            std::set<std::string> cats(table.columns.begin(), table.columns.end());
            if (cats.size() != table.columns.size() || cats.count("")) {
                throw CalcError(ErrorKind::ParseError, "duplicate or empty category").with_line(line_no);
            }
            header = false;
            continue;
        }
        if (fields.size() > table.columns.size() + 1) {
            throw CalcError(ErrorKind::ParseError, "more cells than categories").with_line(line_no);
        }
        if (fields[0].empty() || !seen.insert(fields[0]).second) {
            throw CalcError(ErrorKind::ParseError, "empty or duplicate month '" + fields[0] + "'")
                .with_line(line_no);
        }
        std::vector<Cell> row(table.columns.size());
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (fields[i].empty()) continue;
            auto value = Decimal::try_parse(fields[i]);
            if (!value) {
                throw CalcError(ErrorKind::ParseError, "bad number '" + fields[i] + "'").with_line(line_no);
            }
            row[i - 1] = *value;
        }
        table.row_labels.push_back(fields[0]);
        table.cells.push_back(std::move(row));
    }
    if (header) throw CalcError(ErrorKind::ParseError, "empty CSV");
    return table;
}

CpiSeries series_from_csv(std::string_view weights_csv, std::string_view inflation_csv) {
    CsvTable w = parse_table_csv(weights_csv);
    CsvTable r = parse_table_csv(inflation_csv);
    if (w.columns != r.columns) throw CalcError(ErrorKind::SeriesMismatch, "weight and inflation categories differ");
    if (w.row_labels != r.row_labels) throw CalcError(ErrorKind::SeriesMismatch, "weight and inflation months differ");

    CpiSeries s{w.columns, w.row_labels, std::move(w.cells), std::move(r.cells)};
    for (auto& row : s.weights) {
        bool complete = true;
        for (const auto& c : row) complete = complete && c.has_value();
        if (!complete) continue;
        WeightRow named;
        for (std::size_t i = 0; i < row.size(); ++i) named.emplace_back(s.categories[i], *row[i]);
        named = normalize_weights(named);
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = named[i].second;
    }
    return s;
}

std::string indices_to_csv(const std::vector<IndexPoint>& points) {
    std::string out = "month,official_pct,covid_pct\n";
    for (const auto& p : points) {
        out += p.month + "," + p.official.to_string() + "," + p.covid.to_string() + "\n";
    }
    return out;
}

}  // namespace impactcalc::cpi
