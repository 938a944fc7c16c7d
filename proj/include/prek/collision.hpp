#pragma once

#include "prek/image_key.hpp"
#include "prek/partition.hpp"
#include "prek/verdict.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace prek {

/// Preimages per image key. Within a key, partitions keep stream order.
using ImageGroups = std::unordered_map<ImageKey, std::vector<Partition>>;

ImageGroups group_by_image(PartitionStream& partitions, std::uint64_t k);
ImageGroups group_by_image(const std::vector<Partition>& partitions, std::uint64_t k);

/// An image with at least two distinct preimages.
struct CollisionClass {
    Partition image;
    std::vector<Partition> preimages;
};

struct InjectivityReport {
    std::uint64_t n = 0;
    std::uint64_t k = 1;
    std::optional<std::uint64_t> length_filter; ///< nullopt means all lengths
    std::uint64_t partitions_examined = 0;
    /// Partitions with fewer than k parts; they all map to the empty
    /// partition and never form a collision class.
    std::uint64_t degenerate_count = 0;
    std::vector<CollisionClass> classes; ///< sorted by image, descending
    bool injective = true;

    friend bool operator==(const InjectivityReport&, const InjectivityReport&);
};

/// Exhaustive injectivity test of pre_k over partitions of n, optionally
/// restricted to a fixed length.
InjectivityReport find_collisions(std::uint64_t n, std::uint64_t k,
                                  std::optional<std::uint64_t> length_filter = std::nullopt);

/// No two partitions of n with different lengths (both >= k) share a pre_k
/// image.
Verdict cross_length_check(std::uint64_t n, std::uint64_t k);

/// For l-part partitions of n: pre_k images agree iff pre_{l-k} images
/// agree. Throws std::invalid_argument unless 1 <= k < l.
Verdict duality_check(std::uint64_t n, std::uint64_t length, std::uint64_t k);

struct SweepOptions {
    std::optional<std::filesystem::path> cache_dir;
    unsigned jobs = 1;
};

struct SweepResult {
    std::vector<InjectivityReport> reports; ///< ascending n
    std::uint64_t cache_hits = 0;
    std::uint64_t computed = 0;
    std::vector<std::string> cache_warnings;
};

/// One report per n in [n_from, n_to]. With a cache directory, results
/// already on disk are reused and new ones are appended.
SweepResult sweep(std::uint64_t n_from, std::uint64_t n_to, std::uint64_t k,
                  std::optional<std::uint64_t> length_filter, const SweepOptions& options = {});

} // namespace prek
