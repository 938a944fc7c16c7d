#pragma once

#include "prek/partition.hpp"

#include <cstdint>

namespace prek {

/// Image of a partition under pre_k together with the source length.
struct PrekResult {
    Partition image;
    std::uint64_t source_length = 0;
    std::uint64_t k = 0;
};

/// Largest number of products pre_k will materialize; larger requests throw
/// std::length_error instead of exhausting memory.
inline constexpr std::uint64_t max_image_parts = std::uint64_t{1} << 24;

/// Binomial coefficient C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
BigNat binomial_big(std::uint64_t n, std::uint64_t k);

/// The partition formed by all products of k distinct-index parts of
/// `lambda`. Repeated parts contribute once per index tuple, so
/// pre_k((7,4,4), 2) == (28,28,16). Empty when lambda has fewer than k
/// parts. Throws std::invalid_argument for k == 0.
PrekResult pre_k(const Partition& lambda, std::uint64_t k);

/// Product of all parts; 1 for the empty partition.
BigNat product_of_parts(const Partition& lambda);

/// Weight of pre_2(lambda) computed as ((sum)^2 - sum of squares) / 2.
BigNat e2_sum(const Partition& lambda);

/// Divides the total product of `lambda` by each part of pre_k(lambda). The
/// result is pre_{l-k}(lambda) for l = lambda.length(). Requires
/// 1 <= k < length; throws std::invalid_argument otherwise.
Partition complement_image(const Partition& lambda, std::uint64_t k);

} // namespace prek
