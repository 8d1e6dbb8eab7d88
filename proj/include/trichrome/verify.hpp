#pragma once

#include <string>
#include <vector>

#include "trichrome/enumeration.hpp"

namespace trichrome {

struct Verdict {
    std::string claim;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string skipped; // empty, "capacity", or "extended"
    bool required = true;

    bool counts_as_failure() const { return skipped.empty() && !pass; }
    bool counts_as_incomplete() const { return !skipped.empty() && required; }
};

struct SuiteReport {
    std::vector<Verdict> verdicts;

    bool all_passed() const {
        for (const Verdict& v : verdicts)
            if (v.counts_as_failure() || v.counts_as_incomplete()) return false;
        return true;
    }

    // 0 all pass, 2 on any failed claim, 3 when a required check was skipped.
    int exit_code() const {
        bool incomplete = false;
        for (const Verdict& v : verdicts) {
            if (v.counts_as_failure()) return 2;
            if (v.counts_as_incomplete()) incomplete = true;
        }
        return incomplete ? 3 : 0;
    }
};

// The whole acceptance battery, one verdict per claim. `extended` unlocks
// the long scans (10-vertex catalogue, 9-vertex minimum-order search);
// without it those verdicts come back skipped and not required.
SuiteReport full_suite(bool extended, int threads = 0);

// Single claims, for the CLI scopes. Skipped entries stay `required` here:
// the caller asked for exactly this check.
Verdict minorder_verdict(const Triple& t, int threads = 0);
Verdict hoptimal_verdict(int h, bool extended, int threads = 0);

} // namespace trichrome
