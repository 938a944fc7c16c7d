#include "prek/image_key.hpp"

#include <iterator>
#include <stdexcept>
#include <vector>

namespace prek {

namespace {

void put_be(std::string& out, std::uint64_t value, int width)
{
    for (int shift = 8 * (width - 1); shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((value >> shift) & 0xff));
}

std::uint64_t get_be(const std::string& in, std::size_t& pos, int width)
{
    if (pos + width > in.size())
        throw std::invalid_argument("image key truncated");
    std::uint64_t value = 0;
    for (int i = 0; i < width; ++i)
        value = (value << 8) | static_cast<unsigned char>(in[pos++]);
    return value;
}

} // namespace

ImageKey::ImageKey(const Partition& p)
{
    bytes_.reserve(8 + p.length() * 6);
    put_be(bytes_, p.length(), 8);
    std::vector<unsigned char> magnitude;
    for (const auto& part : p.parts()) {
        magnitude.clear();
        boost::multiprecision::export_bits(part, std::back_inserter(magnitude), 8, true);
        put_be(bytes_, magnitude.size(), 4);
        bytes_.append(magnitude.begin(), magnitude.end());
    }
}

Partition decode_image_key(const std::string& bytes)
{
    std::size_t pos = 0;
    const auto count = get_be(bytes, pos, 8);
    std::vector<BigNat> parts;
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto len = get_be(bytes, pos, 4);
        if (pos + len > bytes.size())
            throw std::invalid_argument("image key truncated");
        BigNat value;
        boost::multiprecision::import_bits(value, bytes.begin() + pos, bytes.begin() + pos + len, 8, true);
        pos += len;
        parts.push_back(std::move(value));
    }
    if (pos != bytes.size())
        throw std::invalid_argument("image key has trailing bytes");
    return make_partition(std::move(parts));
}

} // namespace prek
