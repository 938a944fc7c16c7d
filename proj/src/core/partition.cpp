#include "prek/partition.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace prek {

BigNat parse_bignat(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty number");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
    return BigNat(std::string(text));
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += parts_[i].str();
    }
    return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    const std::size_t common = std::min(a.length(), b.length());
    for (std::size_t i = 0; i < common; ++i) {
        if (a.parts_[i] < b.parts_[i])
            return std::strong_ordering::less;
        if (b.parts_[i] < a.parts_[i])
            return std::strong_ordering::greater;
    }
    return a.length() <=> b.length();
}

Partition make_partition(std::vector<BigNat> values)
{
    for (const auto& v : values)
        if (v <= 0)
            throw std::invalid_argument("partition parts must be positive, got " + v.str());
    std::sort(values.begin(), values.end(), std::greater<>());
    Partition p;
    for (const auto& v : values)
        p.weight_ += v;
    p.parts_ = std::move(values);
    return p;
}

Partition make_partition(std::initializer_list<std::uint64_t> values)
{
    return make_partition(std::span<const std::uint64_t>(values.begin(), values.size()));
}

Partition make_partition(std::span<const std::uint64_t> values)
{
    return make_partition(std::vector<BigNat>(values.begin(), values.end()));
}

Partition partition_from_sorted(std::vector<BigNat> parts)
{
    assert(is_weakly_decreasing(parts));
    assert(parts.empty() || parts.back() >= 1);
    Partition p;
    for (const auto& v : parts)
        p.weight_ += v;
    p.parts_ = std::move(parts);
    return p;
}

Partition from_words(std::span<const std::uint64_t> parts)
{
    return partition_from_sorted(std::vector<BigNat>(parts.begin(), parts.end()));
}

Partition parse_partition(std::string_view text)
{
    std::vector<BigNat> values;
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        return {};
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto field = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        values.push_back(parse_bignat(field));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return make_partition(std::move(values));
}

bool is_weakly_decreasing(std::span<const BigNat> values)
{
    return std::is_sorted(values.begin(), values.end(), std::greater<>());
}

PartitionStream::PartitionStream(std::uint64_t n)
    : n_(n)
{
}

PartitionStream::PartitionStream(std::uint64_t n, std::uint64_t length)
    : n_(n)
    , length_(length)
{
    if (length == 0)
        throw std::invalid_argument("partition length filter must be >= 1");
}

const std::vector<std::uint64_t>* PartitionStream::next_raw()
{
    if (done_)
        return nullptr;
    if (!started_) {
        started_ = true;
        if (!length_) {
            if (n_ > 0)
                current_.assign(1, n_);
            return &current_;
        }
        if (*length_ > n_) {
            done_ = true;
            return nullptr;
        }
        current_.assign(*length_, 1);
        current_[0] = n_ - *length_ + 1;
        return &current_;
    }
    const bool more = length_ ? advance_fixed_length() : advance_unrestricted();
    if (!more) {
        done_ = true;
        return nullptr;
    }
    return &current_;
}

std::optional<Partition> PartitionStream::next()
{
    const auto* raw = next_raw();
    if (!raw)
        return std::nullopt;
    return from_words(*raw);
}

// Decrement the rightmost part greater than one and refill the tail with
// copies of the decremented value, largest first.
bool PartitionStream::advance_unrestricted()
{
    std::uint64_t ones = 0;
    while (!current_.empty() && current_.back() == 1) {
        current_.pop_back();
        ++ones;
    }
    if (current_.empty())
        return false;
    const std::uint64_t v = --current_.back();
    std::uint64_t remaining = ones + 1;
    while (remaining >= v) {
        current_.push_back(v);
        remaining -= v;
    }
    if (remaining)
        current_.push_back(remaining);
    return true;
}

// Rightmost position whose part can drop by one while the tail, refilled
// with parts no larger than the new value, still has the same count.
bool PartitionStream::advance_fixed_length()
{
    const std::size_t len = current_.size();
    if (len < 2)
        return false;
    std::uint64_t tail_sum = current_[len - 1];
    for (std::size_t i = len - 1; i-- > 0;) {
        const std::uint64_t v = current_[i] - 1;
        const std::uint64_t count = len - 1 - i;
        const std::uint64_t rest = tail_sum + 1;
        if (v >= 1 && rest <= count * v) {
            current_[i] = v;
            std::uint64_t left = rest;
            for (std::size_t j = i + 1; j < len; ++j) {
                const std::uint64_t slots_after = len - 1 - j;
                const std::uint64_t part = std::min(v, left - slots_after);
                current_[j] = part;
                left -= part;
            }
            return true;
        }
        tail_sum += current_[i];
    }
    return false;
}

std::vector<Partition> enumerate_partitions(std::uint64_t n)
{
    std::vector<Partition> out;
    PartitionStream stream(n);
    while (auto p = stream.next())
        out.push_back(std::move(*p));
    return out;
}

std::vector<Partition> enumerate_partitions_with_length(std::uint64_t n, std::uint64_t length)
{
    std::vector<Partition> out;
    PartitionStream stream(n, length);
    while (auto p = stream.next())
        out.push_back(std::move(*p));
    return out;
}

} // namespace prek
