#include "doctest.h"

#include <stdexcept>

#include "trichrome/verify.hpp"

using namespace trichrome;

TEST_CASE("verdict bookkeeping") {
    Verdict pass{"c", "x", "x", true, "", true};
    CHECK_FALSE(pass.counts_as_failure());
    CHECK_FALSE(pass.counts_as_incomplete());

    Verdict fail{"c", "x", "y", false, "", true};
    CHECK(fail.counts_as_failure());
    CHECK_FALSE(fail.counts_as_incomplete());

    Verdict skipped_required{"c", "x", "", false, "capacity", true};
    CHECK_FALSE(skipped_required.counts_as_failure());
    CHECK(skipped_required.counts_as_incomplete());

    Verdict skipped_optional{"c", "x", "", false, "extended", false};
    CHECK_FALSE(skipped_optional.counts_as_failure());
    CHECK_FALSE(skipped_optional.counts_as_incomplete());

    SuiteReport report;
    report.verdicts = {pass, skipped_optional};
    CHECK(report.all_passed());
    CHECK(report.exit_code() == 0);

    report.verdicts = {pass, skipped_required};
    CHECK_FALSE(report.all_passed());
    CHECK(report.exit_code() == 3);

    report.verdicts = {fail, skipped_required};
    CHECK(report.exit_code() == 2); // failure outranks incompleteness
}

TEST_CASE("single minimum-order claims") {
    Verdict v = minorder_verdict({2, 3, 3});
    CHECK(v.pass);
    CHECK(v.skipped.empty());
    CHECK(v.claim.find("2") != std::string::npos); // claim names the triple

    Verdict big = minorder_verdict({2, 4, 7}); // order 12 exceeds the search budget
    CHECK_FALSE(big.pass);
    CHECK(big.skipped == "capacity");
    CHECK(big.required);
    CHECK(big.counts_as_incomplete());

    CHECK_THROWS_AS(minorder_verdict({2, 2, 3}), std::domain_error);
}

TEST_CASE("single extremal-catalogue claims") {
    Verdict four = hoptimal_verdict(4, false);
    CHECK(four.pass);
    CHECK(four.skipped.empty());

    Verdict six = hoptimal_verdict(6, false);
    CHECK_FALSE(six.pass);
    CHECK(six.skipped == "extended");
    CHECK(six.counts_as_incomplete());

    Verdict seven = hoptimal_verdict(7, false);
    CHECK(seven.skipped == "capacity");
    CHECK(seven.counts_as_incomplete());

    CHECK_THROWS_AS(hoptimal_verdict(3, false), std::invalid_argument);
}
