#pragma once

#include "prek/partition.hpp"
#include "prek/verdict.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace prek {

/// Parameters of the two-prime family. Invariants: p > q, both prime,
/// m >= ceil((p-1)/(q-1)), k >= 3.
struct PQFamilyParams {
    std::uint64_t p = 3;
    std::uint64_t q = 2;
    std::uint64_t m = 3;
    std::uint64_t k = 3;
};

/// Two distinct partitions of equal weight and length with the same pre_k
/// image. `weight` and `shared_image` hold the closed-form claims made by
/// the generator; validate_pair checks them against direct evaluation.
struct CounterexamplePair {
    Partition first;
    Partition second;
    BigNat weight;
    std::uint64_t k = 0;
    Partition shared_image;

    std::string family;
    std::vector<std::pair<std::string, std::uint64_t>> params;
    /// Tuples as written by the family formula, before canonicalization.
    /// Empty for hand-built pairs.
    std::vector<BigNat> raw_first;
    std::vector<BigNat> raw_second;
};

/// Smallest admissible m for a (p, q) pair: ceil((p-1)/(q-1)).
std::uint64_t pq_min_m(std::uint64_t p, std::uint64_t q);

/// (6,6,1^(k-2)) and (9,2,2,1^(k-3)), partitions of k+10 with image (36).
CounterexamplePair gen_alpha_beta(std::uint64_t k);

/// (6m,6m,m) and (9m,2m,2m), partitions of 13m with image (36m^3).
CounterexamplePair gen_scaled_triple(std::uint64_t m);

/// (3m,2m-1,2) and (4m-2,m,3) for m >= 3, partitions of 5m+1 with image
/// (6m(2m-1)); each member has coprime parts.
CounterexamplePair gen_coprime_triple(std::uint64_t m);

/// (q(1+m(p-1)), 1+m(q-1), p, 1^(k-3)) and (p(1+m(q-1)), 1+m(p-1), q, 1^(k-3)),
/// partitions of p+q+k+m(pq-1)-2 with image (pq(1+m(p-1))(1+m(q-1))).
CounterexamplePair gen_pq_family(const PQFamilyParams& params);

/// Re-derives every pair invariant through pre_k. Also requires recorded raw
/// tuples, when present, to be weakly decreasing already.
Verdict validate_pair(const CounterexamplePair& pair);

/// gcd of all parts; 0 for the empty partition.
BigNat parts_gcd(const Partition& p);

} // namespace prek
