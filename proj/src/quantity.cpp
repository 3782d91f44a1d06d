#include "impactcalc/quantity.hpp"

#include "impactcalc/error.hpp"

#include <string>

namespace impactcalc {

std::string_view to_string(Unit unit) {
    switch (unit) {
        case Unit::USD: return "USD";
        case Unit::Lives: return "Lives";
        case Unit::Jobs: return "Jobs";
        case Unit::BasisPoints: return "BasisPoints";
        case Unit::Dimensionless: return "Dimensionless";
        case Unit::TBD: return "TBD";
    }
    return "?";
}

Unit unit_from_string(std::string_view name) {
    for (Unit u : {Unit::USD, Unit::Lives, Unit::Jobs, Unit::BasisPoints, Unit::Dimensionless,
                   Unit::TBD}) {
        if (to_string(u) == name) return u;
    }
    throw CalcError(ErrorKind::ParseError, "unknown unit '" + std::string(name) + "'");
}

Quantity::Quantity(Decimal amount, Unit unit) : amount_(std::move(amount)), unit_(unit) {
    if (unit == Unit::TBD) {
        throw CalcError(ErrorKind::UnitMismatch, "a TBD quantity cannot carry an amount");
    }
}

const Decimal& Quantity::amount() const {
    if (!amount_) throw CalcError(ErrorKind::UnitMismatch, "TBD quantity has no amount");
    return *amount_;
}

void Quantity::require_compatible(const Quantity& rhs) const {
    if (is_tbd() || rhs.is_tbd() || unit_ != rhs.unit_) {
        throw CalcError(ErrorKind::UnitMismatch, "cannot combine " + std::string(to_string(unit_)) +
                                                     " with " + std::string(to_string(rhs.unit_)));
    }
}

Quantity Quantity::operator-() const {
    if (is_tbd()) return *this;
    return {-*amount_, unit_};
}

Quantity& Quantity::operator+=(const Quantity& rhs) {
    require_compatible(rhs);
    *amount_ += *rhs.amount_;
    return *this;
}

Quantity& Quantity::operator-=(const Quantity& rhs) {
    require_compatible(rhs);
    *amount_ -= *rhs.amount_;
    return *this;
}

Quantity Quantity::scaled(const Decimal& factor) const {
    if (is_tbd()) return *this;
    return {*amount_ * factor, unit_};
}

}  // namespace impactcalc
