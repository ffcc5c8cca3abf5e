#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qsurf/kronecker.hpp"
#include "qsurf/skein_mult.hpp"

namespace qsurf {

struct CheckResult {
    CheckResult() = default;
    CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool pass = true;
    size_t cases = 0;
    size_t skipped = 0;
    std::string detail; // first failure, with enough context to reproduce it
};

struct VerifyOptions {
    size_t max_length = 5;
    size_t mutation_depth = 0; // 0 skips the mutation oracle
    int kronecker_s = -1;      // < 0 skips the Kronecker checks
    size_t jobs = 1;
};

// Runs fn(0..count-1) on up to jobs threads. fn must only write to its own slot.
void parallel_for(size_t count, size_t jobs, const std::function<void(size_t)>& fn);

// Per-string checks, in reporting order: counts, bijection, counting
// lemmas, valuations, factorization, bar invariance, positivity.
std::vector<CheckResult> verify_string(const Surface& s, const StringWord& w);

// Every non-initial variable reachable by at most depth mutations whose
// denominator has at most max_length crossings must be the expansion of
// some string.
CheckResult verify_mutation_oracle(const Surface& s, size_t depth, size_t max_length);

std::vector<CheckResult> verify_kronecker(const Surface& annulus, int max_s);

std::vector<CheckResult> verify_surface(const Surface& s, const VerifyOptions& opt);

} // namespace qsurf
