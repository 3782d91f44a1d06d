#pragma once

#include "impactcalc/decimal.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace impactcalc::hai {

/// Whole-dollar rounding used at every HAI output boundary.
inline constexpr Rounding kDollarRounding = Rounding::HalfTowardZero;

struct UsdRange {
    Decimal low;
    Decimal high;
    friend bool operator==(const UsdRange&, const UsdRange&) = default;
};

struct ApicInput {
    Decimal incidence_per_1000_patient_days;
    Decimal cost_low;
    Decimal cost_high;
    Decimal reduction_fraction;
};

/// Cost to the facility per 1000 patient days: incidence times each bound of
/// the attributable-cost range, rounded to whole dollars.
UsdRange apic_estimated_cost(const ApicInput& input);

/// Each bound of `cost_range` times the reduction, rounded to whole dollars.
UsdRange apic_potential_savings(const UsdRange& cost_range, const Decimal& reduction_fraction);

enum class BedSize { Small, Medium, Large };

enum class InfectionType { SSI, VAP, CAUTI, CLABSI, MRSA, CDIFF };

inline constexpr std::array<InfectionType, 6> kInfectionTypes{
    InfectionType::SSI,    InfectionType::VAP,  InfectionType::CAUTI,
    InfectionType::CLABSI, InfectionType::MRSA, InfectionType::CDIFF,
};

std::string_view to_string(BedSize size);
std::string_view to_string(InfectionType type);
BedSize bed_size_from_string(std::string_view name);
InfectionType infection_type_from_string(std::string_view name);

/// Device-patient volumes are carried for context only; they do not enter
/// the cost arithmetic.
struct HospitalProfile {
    BedSize bed_size = BedSize::Medium;
    std::string region;
    bool teaching = false;
    std::uint64_t annual_medical_admissions = 0;
    std::uint64_t annual_surgical_admissions = 0;
    std::uint64_t ventilator_patients = 0;
    std::uint64_t urinary_catheter_patients = 0;
    std::uint64_t central_line_patients = 0;
    friend bool operator==(const HospitalProfile&, const HospitalProfile&) = default;
};

struct InfectionEntry {
    InfectionType type = InfectionType::SSI;
    std::uint64_t infections_per_year = 0;
    Decimal excess_cost_per_infection;
    Decimal excess_los_days_per_infection;
};

struct TmitLine {
    InfectionType type = InfectionType::SSI;
    std::uint64_t infections_per_year = 0;
    Decimal annual_cost;
    Decimal excess_los_days;
    friend bool operator==(const TmitLine&, const TmitLine&) = default;
};

struct TmitReport {
    HospitalProfile profile;
    /// Always six lines, in kInfectionTypes order; missing types are zero.
    std::array<TmitLine, 6> lines;
    std::uint64_t total_infections = 0;
    Decimal total_cost;
    Decimal total_los_days;

    const TmitLine& line(InfectionType type) const;
    friend bool operator==(const TmitReport&, const TmitReport&) = default;
};

/// Per-type annual cost and excess LOS days, plus exact totals.
/// Throws DuplicateInfectionType if a type appears twice.
TmitReport tmit_report(const HospitalProfile& profile, std::span<const InfectionEntry> entries);

/// Editable national defaults for per-infection cost and LOS, keyed by
/// hospital category and infection type.
struct TmitDefault {
    BedSize bed_size = BedSize::Medium;
    std::string region;
    bool teaching = false;
    InfectionType type = InfectionType::SSI;
    Decimal excess_cost_per_infection;
    Decimal excess_los_days_per_infection;
    friend bool operator==(const TmitDefault&, const TmitDefault&) = default;
};

/// Matching default, or nullptr.
const TmitDefault* find_default(std::span<const TmitDefault> defaults, const HospitalProfile& profile,
                                InfectionType type);

}  // namespace impactcalc::hai
