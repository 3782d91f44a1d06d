#pragma once

#include "impactcalc/ledger.hpp"

namespace impactcalc {

/// The sample value-creation ledger: rows (a)-(n) with the sample
/// assumptions (0.1% healthcare reduction, 0.1% GDP share, 1% fewer deaths,
/// 0.1% of jobs lost, 0.1% of 50 bps inflation). USD net is $883,000,000.
/// Deaths are 793,000 so that 1% gives 7,930 lives per year.
Scenario sample_scenario();

}  // namespace impactcalc
