#include "prek/divisors.hpp"

#include <cmath>
#include <stdexcept>

namespace prek {

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && (r > n / r))
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r;
}

bool is_perfect_square(std::uint64_t n)
{
    const auto r = isqrt(n);
    return r * r == n;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_pairs(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("divisor_pairs: n must be >= 1");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const auto root = isqrt(n);
    for (std::uint64_t d = 1; d <= root; ++d)
        if (n % d == 0)
            out.emplace_back(d, n / d);
    return out;
}

std::uint64_t tau(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("tau: n must be >= 1");
    const auto pairs = divisor_pairs(n);
    std::uint64_t count = 2 * pairs.size();
    if (pairs.back().first == pairs.back().second)
        --count;
    return count;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace prek
