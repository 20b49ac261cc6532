#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace swnav {

/// Parses a size list. Accepts a comma-separated list of integers and
/// geometric runs written BASExMULT^COUNT, meaning COUNT sizes
/// BASE, BASE*MULT, ..., BASE*MULT^(COUNT-1). "1000x2^10" is
/// 1000, 2000, ..., 512000. Results must be strictly increasing.
std::vector<std::size_t> parse_sizes(const std::string& text);

/// A step count that is either absolute ("5000") or a multiple of the
/// lattice size ("10n").
struct StepCount {
    std::size_t value = 10;
    bool per_vertex = true;

    std::size_t resolve(std::size_t n) const { return per_vertex ? value * n : value; }
    std::string to_string() const;
    bool operator==(const StepCount&) const = default;
};

StepCount parse_step_count(const std::string& text);

} // namespace swnav
