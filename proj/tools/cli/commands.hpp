#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace warpcurv::cli {

enum ExitCode : int {
    kOk = 0,
    // classify: genuine C0 junction; schwarzschild and verify: a check failed.
    kCheckFailed = 1,
    kConfigError = 2,
    kEvaluationError = 3,
};

/// Entry point shared by the executable and the tests. args excludes the
/// program name. Reports go to `out` unless --out is given; diagnostics and
/// summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace warpcurv::cli
