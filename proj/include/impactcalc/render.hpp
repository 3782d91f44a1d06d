#pragma once

#include "impactcalc/analysis.hpp"
#include "impactcalc/ledger.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace impactcalc::io {

enum class ReportFormat { Text, Csv };

ReportFormat report_format_from_string(std::string_view name);

/// Text mirrors the ledger table: one row per item in scenario order with
/// debit and credit columns, then a subtotal/net block per unit. CSV has one
/// row per item followed by the subtotal and net rows of each unit. TBD rows
/// print as "TBD". An empty report renders the header only.
std::string render_report(const LedgerReport& report, ReportFormat format);

/// Display form with thousands separators: "$883,000,000.00",
/// "23,790 Lives", "0.05 bps". Negative USD prints as "-$75,000,000.00".
std::string display_amount(const Decimal& amount, Unit unit);

std::string sweep_to_csv(const SweepResult& result);
std::string break_even_to_csv(const std::string& path, const BreakEvenResult& result);
std::string tornado_to_csv(const std::vector<TornadoBar>& bars);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace impactcalc::io
