#include "impactcalc/hai.hpp"

#include "impactcalc/error.hpp"

namespace impactcalc::hai {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw CalcError(ErrorKind::OutOfRange, what);
}

Decimal whole_dollars(const Decimal& d) { return d.rounded(0, kDollarRounding); }

}  // namespace

UsdRange apic_estimated_cost(const ApicInput& in) {
    require(in.incidence_per_1000_patient_days.sign() >= 0, "incidence must be >= 0");
    require(in.cost_low.sign() >= 0, "attributable cost must be >= 0");
    require(in.cost_low <= in.cost_high, "cost_low must not exceed cost_high");
    require(in.reduction_fraction.sign() >= 0 && in.reduction_fraction <= Decimal(1),
            "reduction_fraction must be in [0, 1]");
    return {whole_dollars(in.incidence_per_1000_patient_days * in.cost_low),
            whole_dollars(in.incidence_per_1000_patient_days * in.cost_high)};
}

UsdRange apic_potential_savings(const UsdRange& cost_range, const Decimal& reduction_fraction) {
    require(reduction_fraction.sign() >= 0 && reduction_fraction <= Decimal(1),
            "reduction_fraction must be in [0, 1]");
    require(cost_range.low <= cost_range.high, "range low must not exceed high");
    return {whole_dollars(cost_range.low * reduction_fraction),
            whole_dollars(cost_range.high * reduction_fraction)};
}

std::string_view to_string(BedSize size) {
    switch (size) {
        case BedSize::Small: return "small";
        case BedSize::Medium: return "medium";
        case BedSize::Large: return "large";
    }
    return "?";
}

std::string_view to_string(InfectionType type) {
    switch (type) {
        case InfectionType::SSI: return "SSI";
        case InfectionType::VAP: return "VAP";
        case InfectionType::CAUTI: return "CAUTI";
        case InfectionType::CLABSI: return "CLABSI";
        case InfectionType::MRSA: return "MRSA";
        case InfectionType::CDIFF: return "CDIFF";
    }
    return "?";
}

BedSize bed_size_from_string(std::string_view name) {
    for (BedSize s : {BedSize::Small, BedSize::Medium, BedSize::Large}) {
        if (to_string(s) == name) return s;
    }
    throw CalcError(ErrorKind::ParseError, "unknown bed size '" + std::string(name) + "'");
}

InfectionType infection_type_from_string(std::string_view name) {
    for (InfectionType t : kInfectionTypes) {
        if (to_string(t) == name) return t;
    }
    throw CalcError(ErrorKind::ParseError, "unknown infection type '" + std::string(name) + "'");
}

const TmitLine& TmitReport::line(InfectionType type) const {
    return lines[static_cast<std::size_t>(type)];
}

TmitReport tmit_report(const HospitalProfile& profile, std::span<const InfectionEntry> entries) {
    TmitReport report;
    report.profile = profile;
    std::array<bool, 6> seen{};
    for (InfectionType t : kInfectionTypes) report.lines[static_cast<std::size_t>(t)].type = t;

    for (const auto& e : entries) {
        auto idx = static_cast<std::size_t>(e.type);
        if (seen[idx]) {
            throw CalcError(ErrorKind::DuplicateInfectionType,
                            "infection type " + std::string(to_string(e.type)) + " listed twice");
        }
        seen[idx] = true;
        require(e.excess_cost_per_infection.sign() >= 0, "excess cost must be >= 0");
        require(e.excess_los_days_per_infection.sign() >= 0, "excess LOS must be >= 0");

        Decimal count(e.infections_per_year);
        TmitLine& line = report.lines[idx];
        line.infections_per_year = e.infections_per_year;
        line.annual_cost = count * e.excess_cost_per_infection;
        line.excess_los_days = count * e.excess_los_days_per_infection;
    }
    for (const auto& line : report.lines) {
        report.total_infections += line.infections_per_year;
        report.total_cost += line.annual_cost;
        report.total_los_days += line.excess_los_days;
    }
    return report;
}

const TmitDefault* find_default(std::span<const TmitDefault> defaults, const HospitalProfile& profile,
                                InfectionType type) {
    for (const auto& d : defaults) {
        if (d.bed_size == profile.bed_size && d.region == profile.region &&
            d.teaching == profile.teaching && d.type == type) {
            return &d;
        }
    }
    return nullptr;
}

}  // namespace impactcalc::hai
