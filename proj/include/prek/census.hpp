#pragma once

#include "prek/partition.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace prek {

/// Members of Pre_2(n): the partitions of n that are pre_2 images.
struct CensusRecord {
    std::uint64_t n = 0;
    std::uint64_t exact_count = 0;
    std::uint64_t lower_bound = 0;
    std::vector<Partition> images;          ///< descending
    std::vector<Partition> first_preimages; ///< one preimage per image, same order
    std::vector<std::pair<Partition, Partition>> divisor_witnesses; ///< (preimage, image)
};

struct CensusSweep {
    std::vector<CensusRecord> records;   ///< n = 1 .. n_max
    std::vector<std::uint64_t> singletons; ///< n with exact_count == 1
    std::vector<std::uint64_t> bound_violations; ///< n with exact_count < lower_bound
};

/// Largest n accepted by the census routines.
inline constexpr std::uint64_t census_n_limit = 100000;

/// tau(n+1)/2, or (tau(n+1)+1)/2 when n+1 is a perfect square.
std::uint64_t pre2_lower_bound(std::uint64_t n);

/// One witness per unordered factorization n+1 = (a+1)(b+1), a >= b >= 0:
/// preimage (a,b,1) with image (ab,a,b), or (n,1) with image (n) when b = 0.
std::vector<std::pair<Partition, Partition>> divisor_witnesses(std::uint64_t n);

/// Exact Pre_2(n). Searches partitions with at least two parts whose e_2
/// value equals n; such partitions weigh at most n+1.
CensusRecord pre2_exact(std::uint64_t n);

/// Records for n = 1 .. n_max from a single shared search.
CensusSweep pre2_sweep(std::uint64_t n_max, unsigned jobs = 1);

} // namespace prek
