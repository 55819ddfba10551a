#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "srforge/verify.hpp"

namespace srforge {

/// One regression case from the source paper, checked against expected
/// values embedded as data. detail collects human-readable notes and,
/// on failure, the mismatching checks.
struct ExampleOutcome {
    std::string id;
    bool pass = false;
    std::string detail;
};

const std::vector<std::string>& example_ids();

/// Runs one case; display (optional) receives the paper-style printout
/// of the constructed objects.
ExampleOutcome run_example(const std::string& id, const VerifyOptions& opts = {},
                           std::ostream* display = nullptr);

/// Runs every case in id order.
std::vector<ExampleOutcome> run_all_examples(const VerifyOptions& opts = {});

} // namespace srforge
