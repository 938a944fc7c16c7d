#include "prek/prek_map.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace prek {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // acc * (n - k + i) / i stays integral at every step
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

BigNat binomial_big(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigNat acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

namespace {

void collect_products(const std::vector<BigNat>& parts, std::size_t start, std::uint64_t remaining,
                      const BigNat& prefix, std::vector<BigNat>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    const std::size_t last_start = parts.size() - remaining;
    for (std::size_t i = start; i <= last_start; ++i)
        collect_products(parts, i + 1, remaining - 1, prefix * parts[i], out);
}

} // namespace

PrekResult pre_k(const Partition& lambda, std::uint64_t k)
{
    if (k == 0)
        throw std::invalid_argument("pre_k: k must be >= 1");
    PrekResult result;
    result.k = k;
    result.source_length = lambda.length();
    if (lambda.length() < k)
        return result;
    if (k == 1) {
        result.image = lambda;
        return result;
    }
    const auto count = binomial(lambda.length(), k);
    if (count > max_image_parts)
        throw std::length_error("pre_k: image would have " + std::to_string(count) + " parts");
    std::vector<BigNat> products;
    products.reserve(count);
    collect_products(lambda.parts(), 0, k, BigNat(1), products);
    std::sort(products.begin(), products.end(), std::greater<>());
    result.image = partition_from_sorted(std::move(products));
    return result;
}

BigNat product_of_parts(const Partition& lambda)
{
    BigNat acc = 1;
    for (const auto& p : lambda.parts())
        acc *= p;
    return acc;
}

BigNat e2_sum(const Partition& lambda)
{
    BigNat squares = 0;
    for (const auto& p : lambda.parts())
        squares += p * p;
    const BigNat& sum = lambda.weight();
    return (sum * sum - squares) / 2;
}

Partition complement_image(const Partition& lambda, std::uint64_t k)
{
    if (k == 0 || k >= lambda.length())
        throw std::invalid_argument("complement_image: requires 1 <= k < length (k=" + std::to_string(k)
                                    + ", length=" + std::to_string(lambda.length()) + ")");
    const auto total = product_of_parts(lambda);
    const auto image = pre_k(lambda, k).image;
    std::vector<BigNat> quotients;
    quotients.reserve(image.length());
    for (const auto& part : image.parts())
        quotients.push_back(total / part);
    return make_partition(std::move(quotients));
}

} // namespace prek
