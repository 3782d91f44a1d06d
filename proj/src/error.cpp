#include "impactcalc/error.hpp"

namespace impactcalc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownFormula: return "UnknownFormula";
        case ErrorKind::MissingArgument: return "MissingArgument";
        case ErrorKind::UnitMismatch: return "UnitMismatch";
        case ErrorKind::InvalidItem: return "InvalidItem";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::DuplicateInfectionType: return "DuplicateInfectionType";
        case ErrorKind::MissingMonth: return "MissingMonth";
        case ErrorKind::IncompleteRow: return "IncompleteRow";
        case ErrorKind::InfeasibleAdjustment: return "InfeasibleAdjustment";
        case ErrorKind::SeriesMismatch: return "SeriesMismatch";
        case ErrorKind::UnknownParameter: return "UnknownParameter";
        case ErrorKind::NoSignChange: return "NoSignChange";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::NotFound: return "NotFound";
        case ErrorKind::RevisionConflict: return "RevisionConflict";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
    }
    return "Unknown";
}

CalcError::CalcError(ErrorKind kind, std::string message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      detail_(std::move(message)) {}

void CalcError::rebuild() {
    std::string text(to_string(kind_));
    if (line_) text += " at line " + std::to_string(*line_);
    if (path_) text += " at " + *path_;
    if (item_id_) text += " [item " + *item_id_ + "]";
    text += ": " + detail_;
    static_cast<std::runtime_error&>(*this) = std::runtime_error(text);
}

CalcError CalcError::with_item(std::string id) const {
    CalcError copy = *this;
    copy.item_id_ = std::move(id);
    copy.rebuild();
    return copy;
}

CalcError CalcError::with_path(std::string path) const {
    CalcError copy = *this;
    copy.path_ = std::move(path);
    copy.rebuild();
    return copy;
}

CalcError CalcError::with_line(int line) const {
    CalcError copy = *this;
    copy.line_ = line;
    copy.rebuild();
    return copy;
}

}  // namespace impactcalc
