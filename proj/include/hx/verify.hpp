#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hx/moments.hpp"

namespace hx {

struct InvariantResult {
    std::string name;
    std::size_t samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Runs every invariant of the library at its stated tolerance on seeded
// random samples; deterministic for a fixed (seed, samples) pair. Residuals
// are reported as the worst case seen, normalized so that pass means
// max_residual <= tolerance (flag mismatches count as residual 1).
std::vector<InvariantResult> run_verification(std::uint64_t seed, int samples);

bool all_passed(const std::vector<InvariantResult>& results);

}  // namespace hx
