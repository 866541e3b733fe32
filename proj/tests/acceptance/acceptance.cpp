// Acceptance suite: one PASS/FAIL line per criterion. Tolerances live with
// each check in the library so the CLI and this binary report identically.

#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "pokertopo/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"pokertopo acceptance suite"};
    pokertopo::verify::SuiteOptions opts;
    std::string matrix, checkpoint;
    app.add_flag("--fast", opts.fast, "Skip the full-matrix criterion unless --matrix is given");
    app.add_option("--matrix", matrix, "Precomputed counts matrix for criterion 11")->check(CLI::ExistingFile);
    app.add_option("--checkpoint", checkpoint, "Checkpoint used when criterion 11 computes the matrix");
    app.add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--only", opts.only, "Criterion numbers to run");
    CLI11_PARSE(app, argc, argv);
    opts.matrix = matrix;
    opts.checkpoint = checkpoint;

    int failed = 0, skipped = 0;
    opts.on_result = [&](const pokertopo::verify::CheckResult& r) {
        const char* status = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
        failed += !r.passed;
        skipped += r.skipped;
        std::cout << status << " criterion " << std::setw(2) << r.id << ": " << r.title << " [" << std::fixed << std::setprecision(1)
                  << r.seconds << " s] " << r.detail << std::endl;
    };
    const auto results = pokertopo::verify::run_suite(opts);
    std::cout << results.size() - failed - skipped << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed == 0 ? 0 : 1;
}
