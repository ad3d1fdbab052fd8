#ifndef HSK_VERIFY_HPP
#define HSK_VERIFY_HPP

#include <string>
#include <vector>

namespace hsk {

struct CheckResult {
    std::string id;
    bool passed;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool all_passed() const
    {
        for (const auto &c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
};

std::vector<std::string> verify_suite_names();

// Runs one invariant suite ("exact", "series", "schwarzian", "norms",
// "multiplier") at the documented default orders; deterministic.
VerifyReport run_verify_suite(const std::string &name, int order_override = 0);

} // namespace hsk

#endif
