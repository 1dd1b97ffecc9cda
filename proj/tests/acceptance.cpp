// Acceptance suite: runs every verification check over the full term ranges
// and prints one pass/fail line per criterion.

#include "g2seq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>

int main() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    try {
        const g2seq::VerificationReport report = g2seq::run_verification("all");
        for (const auto& check : report.checks) {
            std::printf("[%s] %s (%ld terms) %s\n", check.pass ? "PASS" : "FAIL",
                        check.name.c_str(), check.terms_compared,
                        check.detail.c_str());
        }
        const auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                              clock::now() - start)
                              .count() /
                          1000.0;
        std::printf("%s: %zu/%zu checks passed in %.1fs\n",
                    report.all_pass() ? "OK" : "FAILED",
                    static_cast<size_t>(
                        std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const auto& c) { return c.pass; })),
                    report.checks.size(), secs);
        return report.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
        return 1;
    }
}
