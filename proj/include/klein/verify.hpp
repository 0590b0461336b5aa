#pragma once

// The five verification suites behind `verify-all`: each one checks a
// computed object against the corresponding embedded table and reports
// fine-grained failures ("table2 row 1", ...). Fixtures are passed in so a
// harness can inject perturbed copies.

#include <cstdint>
#include <string>
#include <vector>

#include "klein/fixtures.hpp"
#include "klein/params.hpp"

namespace klein {

struct VerifyOptions {
    std::uint64_t seed = 0;  // for the randomized removal orders
    int random_orders = 5;
};

struct SuiteResult {
    std::string name;
    std::string summary;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    ConfigParams off_params;  // measured on the off-quadric structure

    bool all_passed() const;
    std::vector<std::string> failures() const;
};

VerifyReport verify_all(const PaperFixtures& fx, const VerifyOptions& opt = {});

} // namespace klein
