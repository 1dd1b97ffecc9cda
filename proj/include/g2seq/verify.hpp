#pragma once

#include "g2seq/sequence.hpp"

#include <map>
#include <string>
#include <vector>

namespace g2seq {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    long terms_compared = 0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;          // sorted by name
    std::map<long, std::string> sigma;        // uniform-recurrence k -> OEIS tag

    bool all_pass() const;
};

/// Resolves which Figure-3 row each specialization of the uniform recurrence
/// annihilates, by brute-force term matching. Throws std::runtime_error if
/// the match is not a bijection.
std::map<long, std::string> resolve_sigma();

/// Runs the named verification scope: one of
/// all, thm1, thm2, factorization, closed, quadrant.
/// The reference-table overload exists so tests can inject corrupted data.
VerificationReport run_verification(const std::string& scope);
VerificationReport run_verification(const std::string& scope,
                                    const std::map<std::string, Sequence>& refs);

std::string report_to_json(const VerificationReport& r);

} // namespace g2seq
