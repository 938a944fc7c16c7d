#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace prek {

// Trial-division helpers. All of them reject 0 with std::invalid_argument
// where 0 has no meaningful answer.

/// Number of positive divisors of n.
std::uint64_t tau(std::uint64_t n);

/// Unordered factorizations d * d' == n with d <= d', ascending in d.
std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_pairs(std::uint64_t n);

bool is_prime(std::uint64_t n);
bool is_perfect_square(std::uint64_t n);

/// Floor of the square root, exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t n);

} // namespace prek
