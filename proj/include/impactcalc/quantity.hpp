#pragma once

#include "impactcalc/decimal.hpp"

#include <optional>
#include <string_view>

namespace impactcalc {

enum class Unit {
    USD,
    Lives,
    Jobs,
    BasisPoints,
    Dimensionless,
    TBD,
};

std::string_view to_string(Unit unit);
/// Throws CalcError(ParseError) for unknown names.
Unit unit_from_string(std::string_view name);

/// Fractional digits every USD amount is held at in the ledger.
inline constexpr unsigned kCentScale = 2;

/// An exact amount tagged with its unit, or the TBD marker (no amount).
/// Arithmetic is only defined between equal, non-TBD units.
class Quantity {
public:
    Quantity(Decimal amount, Unit unit);

    static Quantity tbd() { return Quantity(); }
    static Quantity usd(Decimal amount) { return {std::move(amount), Unit::USD}; }

    Unit unit() const noexcept { return unit_; }
    bool is_tbd() const noexcept { return unit_ == Unit::TBD; }
    /// Throws CalcError(UnitMismatch) on a TBD quantity.
    const Decimal& amount() const;

    Quantity operator-() const;
    Quantity& operator+=(const Quantity& rhs);
    Quantity& operator-=(const Quantity& rhs);
    Quantity scaled(const Decimal& factor) const;

    friend Quantity operator+(Quantity lhs, const Quantity& rhs) { return lhs += rhs; }
    friend Quantity operator-(Quantity lhs, const Quantity& rhs) { return lhs -= rhs; }
    friend bool operator==(const Quantity&, const Quantity&) = default;

private:
    Quantity() : unit_(Unit::TBD) {}
    void require_compatible(const Quantity& rhs) const;

    std::optional<Decimal> amount_;
    Unit unit_;
};

}  // namespace impactcalc
