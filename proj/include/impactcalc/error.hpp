#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace impactcalc {

enum class ErrorKind {
    UnknownFormula,
    MissingArgument,
    UnitMismatch,
    InvalidItem,
    OutOfRange,
    DuplicateInfectionType,
    MissingMonth,
    IncompleteRow,
    InfeasibleAdjustment,
    SeriesMismatch,
    UnknownParameter,
    NoSignChange,
    NoConvergence,
    ParseError,
    UnsupportedVersion,
    ValidationError,
    NotFound,
    RevisionConflict,
    DivisionByZero,
};

std::string_view to_string(ErrorKind kind);

/// Every engine failure is reported as a CalcError. The kind is stable and
/// is what the HTTP layer maps to status codes; the message is for humans.
class CalcError : public std::runtime_error {
public:
    CalcError(ErrorKind kind, std::string message);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

    /// Line item the failure belongs to, set by compute_ledger.
    const std::optional<std::string>& item_id() const noexcept { return item_id_; }
    /// Document path such as `$.line_items[2].source.amount`.
    const std::optional<std::string>& path() const noexcept { return path_; }
    /// 1-based line in the input text, for syntax errors.
    const std::optional<int>& line() const noexcept { return line_; }

    CalcError with_item(std::string id) const;
    CalcError with_path(std::string path) const;
    CalcError with_line(int line) const;

private:
    void rebuild();

    ErrorKind kind_;
    std::string detail_;
    std::optional<std::string> item_id_;
    std::optional<std::string> path_;
    std::optional<int> line_;
};

}  // namespace impactcalc
