#include "impactcalc/render.hpp"

#include "impactcalc/document.hpp"
#include "impactcalc/error.hpp"

#include <algorithm>

namespace impactcalc::io {

namespace {

constexpr std::string_view kItemHeader = "Costs & Value Creation";
constexpr std::string_view kSubtotalDebit = "Subtotal Debit (s)";
constexpr std::string_view kSubtotalCredit = "Subtotal Credit (s)";
constexpr std::string_view kNetLabel = "Positive Value Creation (Credit - Debit)";
constexpr std::size_t kColumn = 22;

std::string group_thousands(const std::string& digits) {
    std::string out;
    int n = static_cast<int>(digits.size());
    for (int i = 0; i < n; ++i) {
        out += digits[i];
        int left = n - i - 1;
        if (left > 0 && left % 3 == 0) out += ',';
    }
    return out;
}

std::string pad_right(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

std::string pad_left(std::string_view s, std::size_t width) {
    std::string out;
    if (s.size() < width) out.append(width - s.size(), ' ');
    out += s;
    return out;
}

struct TextRow {
    std::string label;
    std::string debit;
    std::string credit;
    std::string net;
};

std::string format_row(const TextRow& r, std::size_t label_width) {
    std::string line = pad_right(r.label, label_width) + pad_left(r.debit, kColumn) + pad_left(r.credit, kColumn);
    if (!r.net.empty()) line += pad_left(r.net, kColumn);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + "\n";
}

std::string item_label(const ItemTrace& item) {
    std::string label = item.label.empty() ? item.id : item.label;
    if (item.per_year) {
        label += " [" + display_amount(item.per_year->amount(), item.per_year->unit()) + "/yr]";
    }
    return label;
}

std::string render_text(const LedgerReport& report) {
    std::size_t width = std::max<std::size_t>(kNetLabel.size(), kItemHeader.size());
    for (const auto& item : report.items) width = std::max(width, item_label(item).size());
    width += 2;

    std::string out = format_row({std::string(kItemHeader), "Debits", "Credits", "Net"}, width);
    if (report.items.empty() && report.totals.empty()) return out;

    for (const auto& item : report.items) {
        std::string value = item.value.is_tbd() ? "TBD" : display_amount(item.value.amount(), item.value.unit());
        TextRow row{item_label(item), "", "", ""};
        (item.side == Side::Debit ? row.debit : row.credit) = value;
        out += format_row(row, width);
    }
    for (const auto& [unit, t] : report.totals) {
        out += "\n[" + std::string(to_string(unit)) + "]\n";
        out += format_row({std::string(kSubtotalDebit), display_amount(t.subtotal_debits, unit), "", ""}, width);
        out += format_row({std::string(kSubtotalCredit), "", display_amount(t.subtotal_credits, unit), ""}, width);
        out += format_row({std::string(kNetLabel), "", "", display_amount(t.net, unit)}, width);
    }
    return out;
}

std::string render_csv(const LedgerReport& report) {
    std::string out = "row,id,label,side,unit,amount,per_year,provenance\n";
    for (const auto& item : report.items) {
        out += "item," + csv_field(item.id) + "," + csv_field(item.label) + "," +
               std::string(to_string(item.side)) + "," + std::string(to_string(item.value.unit())) + ",";
        out += item.value.is_tbd() ? "TBD" : amount_text(item.value.amount(), item.value.unit());
        out += ",";
        if (item.per_year) out += amount_text(item.per_year->amount(), item.per_year->unit());
        out += "," + std::string(to_string(item.provenance)) + "\n";
    }
    for (const auto& [unit, t] : report.totals) {
        std::string u(to_string(unit));
        out += "subtotal_debit,," + csv_field(kSubtotalDebit) + ",debit," + u + "," +
               amount_text(t.subtotal_debits, unit) + ",,\n";
        out += "subtotal_credit,," + csv_field(kSubtotalCredit) + ",credit," + u + "," +
               amount_text(t.subtotal_credits, unit) + ",,\n";
        out += "net,," + csv_field(kNetLabel) + ",," + u + "," + amount_text(t.net, unit) + ",,\n";
    }
    return out;
}

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "csv") return ReportFormat::Csv;
    throw CalcError(ErrorKind::ParseError, "format must be 'text' or 'csv'");
}

std::string render_report(const LedgerReport& report, ReportFormat format) {
    return format == ReportFormat::Csv ? render_csv(report) : render_text(report);
}

std::string display_amount(const Decimal& amount, Unit unit) {
    std::string plain = amount_text(amount.abs(), unit);
    auto dot = plain.find('.');
    std::string grouped = group_thousands(plain.substr(0, dot));
    if (dot != std::string::npos) grouped += plain.substr(dot);

    std::string sign = amount.sign() < 0 ? "-" : "";
    switch (unit) {
        case Unit::USD: return sign + "$" + grouped;
        case Unit::Lives: return sign + grouped + " Lives";
        case Unit::Jobs: return sign + grouped + " Jobs";
        case Unit::BasisPoints: return sign + grouped + " bps";
        case Unit::Dimensionless: return sign + grouped;
        case Unit::TBD: return "TBD";
    }
    return sign + grouped;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string out = "param_value,usd_net\n";
    for (const auto& p : result.points) {
        out += p.param_value.to_string() + "," + amount_text(p.usd_net, Unit::USD) + "\n";
    }
    return out;
}

std::string break_even_to_csv(const std::string& path, const BreakEvenResult& r) {
    return "param_path,value,usd_net,evaluations,bisection_steps\n" + csv_field(path) + "," + r.value.to_string() +
           "," + amount_text(r.usd_net, Unit::USD) + "," + std::to_string(r.evaluations) + "," +
           std::to_string(r.bisection_steps) + "\n";
}

std::string tornado_to_csv(const std::vector<TornadoBar>& bars) {
    std::string out = "param_path,net_low,net_high,span\n";
    for (const auto& b : bars) {
        out += csv_field(b.param_path) + "," + amount_text(b.net_low, Unit::USD) + "," +
               amount_text(b.net_high, Unit::USD) + "," + amount_text(b.span, Unit::USD) + "\n";
    }
    return out;
}

}  // namespace impactcalc::io
