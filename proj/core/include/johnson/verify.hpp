#pragma once

#include <string>
#include <vector>

#include "johnson/io.hpp"

namespace johnson {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // failure witnesses or scope summary
};

struct VerifyOptions {
    int n_max = 8;
    int jobs = 1;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<VerdictRow> agreement;  // one row per swept criterion/oracle instance

    bool all_pass() const;
    const CheckResult* find(const std::string& name) const;
};

/// The full property sweep. Instance grids scale with n_max; the checks tied
/// to fixed graphs (J(8,3), J(8,4), ...) run once n_max admits them.
/// jobs parallelizes across (n, w) groups only; each instance stays
/// sequential, and results merge in a fixed order.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace johnson
