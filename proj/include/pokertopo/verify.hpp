#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "pokertopo/equity.hpp"

namespace pokertopo::verify {

struct CheckResult {
    int id = 0;
    std::string title;
    bool passed = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    /// Skip the full-matrix reproduction.
    bool fast = true;
    /// Use this matrix for the full-matrix check instead of computing one.
    std::filesystem::path matrix;
    /// Checkpoint for computing the matrix when none is given.
    std::filesystem::path checkpoint;
    int jobs = 1;
    /// Only run these ids (empty = all).
    std::vector<int> only;
    std::function<void(const CheckResult&)> on_result;
};

/// Convention under which the published probabilities are reproduced.
inline constexpr TieConvention kReferenceConvention = TieConvention::SplitTie;

std::vector<CheckResult> run_suite(const SuiteOptions& options);

/// Individual checks, numbered as in the suite.
CheckResult check_evaluator_oracle();
CheckResult check_five_card_census();
CheckResult check_matchup_totals();
CheckResult check_triangle();
CheckResult check_closest_call();
CheckResult check_sphere();
CheckResult check_penney_small();
CheckResult check_penney_six();
CheckResult check_penney_odds();
CheckResult check_persistence();
CheckResult check_full_matrix(const CountsMatrix& m);

}  // namespace pokertopo::verify
