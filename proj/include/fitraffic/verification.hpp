#pragma once

#include <iosfwd>
#include <string_view>

namespace fitraffic {

enum class Suite { all, prop1, prop2, formulas };

Suite parse_suite(std::string_view name);

/// Runs the cross-checks of one suite, printing a "PASS <name>" or
/// "FAIL <name>" line per identity. Returns true iff all pass.
///
///   prop1     flow = 1 - N/L - freq(0^(m+1)) exactly, on random rings
///             before and after evolution.
///   prop2     admissibility <=> brute-force preimage for every string with
///             (n+1)(m+1) <= 16, m <= 3; the admissible set is closed
///             under one windowed step; both admissibility forms agree.
///   formulas  path counts vs enumeration; preimage sum = closed-form sum =
///             hypergeometric form as exact rationals; floating closed
///             form vs exact and vs the hypergeometric form.
bool run_verification(Suite suite, std::ostream& out);

}  // namespace fitraffic
