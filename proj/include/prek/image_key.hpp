#pragma once

#include "prek/partition.hpp"

#include <cstddef>
#include <functional>
#include <string>

namespace prek {

/// Canonical byte encoding of a partition, usable as an exact hash key.
///
/// Layout: part count as 8-byte big-endian, then for every part a 4-byte
/// big-endian byte length followed by the big-endian magnitude. Two
/// partitions have equal keys iff they are equal.
class ImageKey {
public:
    explicit ImageKey(const Partition& p);

    const std::string& bytes() const noexcept { return bytes_; }

    friend bool operator==(const ImageKey&, const ImageKey&) = default;
    friend auto operator<=>(const ImageKey&, const ImageKey&) = default;

private:
    std::string bytes_;
};

/// Inverse of the encoding; throws std::invalid_argument on malformed bytes.
Partition decode_image_key(const std::string& bytes);

} // namespace prek

template <>
struct std::hash<prek::ImageKey> {
    std::size_t operator()(const prek::ImageKey& key) const noexcept
    {
        return std::hash<std::string>{}(key.bytes());
    }
};
