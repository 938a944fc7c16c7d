#pragma once

#include "prek/bignat.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prek {

/// An integer partition in canonical form: parts weakly decreasing, all >= 1.
///
/// Instances are immutable once built. Equality is sequence equality, which is
/// multiset equality because of the canonical order. The ordering operator is
/// lexicographic on the part sequence.
class Partition {
public:
    Partition() = default;

    const std::vector<BigNat>& parts() const noexcept { return parts_; }
    const BigNat& weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    const BigNat& operator[](std::size_t i) const { return parts_[i]; }

    /// Comma-separated parts, e.g. "7,4,4"; the empty partition renders as "".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    friend Partition make_partition(std::vector<BigNat> values);
    friend Partition partition_from_sorted(std::vector<BigNat> parts);

    std::vector<BigNat> parts_;
    BigNat weight_ = 0;
};

/// Canonicalizes a multiset of positive values. Throws std::invalid_argument
/// if any value is zero or negative.
Partition make_partition(std::vector<BigNat> values);
Partition make_partition(std::initializer_list<std::uint64_t> values);
Partition make_partition(std::span<const std::uint64_t> values);

/// Wraps parts that the caller guarantees are already weakly decreasing and
/// positive. Checked in debug builds only.
Partition partition_from_sorted(std::vector<BigNat> parts);

/// Parses "7,4,4" (whitespace tolerated around commas). An empty string gives
/// the empty partition. Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

/// True iff the sequence is weakly decreasing (no positivity check).
bool is_weakly_decreasing(std::span<const BigNat> values);

/// Single-consumer stream of the partitions of n in reverse lexicographic
/// order: (n), (n-1,1), (n-2,2), (n-2,1,1), ... , (1,...,1).
///
/// When constructed with a fixed length l, only partitions with exactly l
/// parts are produced, still in reverse lexicographic order.
class PartitionStream {
public:
    explicit PartitionStream(std::uint64_t n);
    PartitionStream(std::uint64_t n, std::uint64_t length);

    /// Next partition, or std::nullopt once exhausted.
    std::optional<Partition> next();

    /// Next partition as raw machine words; avoids big-number conversion
    /// for callers that only need small parts. Returns nullptr when done.
    const std::vector<std::uint64_t>* next_raw();

private:
    bool advance_unrestricted();
    bool advance_fixed_length();

    std::uint64_t n_;
    std::optional<std::uint64_t> length_;
    std::vector<std::uint64_t> current_;
    bool started_ = false;
    bool done_ = false;
};

/// Convenience wrappers that drain a stream.
std::vector<Partition> enumerate_partitions(std::uint64_t n);
std::vector<Partition> enumerate_partitions_with_length(std::uint64_t n, std::uint64_t length);

Partition from_words(std::span<const std::uint64_t> parts);

} // namespace prek
