#include "prek/collision.hpp"

#include "prek/prek_map.hpp"
#include "prek/sweep_cache.hpp"
#include "prek/workers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace prek {

bool operator==(const InjectivityReport& a, const InjectivityReport& b)
{
    if (a.n != b.n || a.k != b.k || a.length_filter != b.length_filter
        || a.partitions_examined != b.partitions_examined || a.degenerate_count != b.degenerate_count
        || a.injective != b.injective || a.classes.size() != b.classes.size())
        return false;
    for (std::size_t i = 0; i < a.classes.size(); ++i)
        if (a.classes[i].image != b.classes[i].image || a.classes[i].preimages != b.classes[i].preimages)
            return false;
    return true;
}

ImageGroups group_by_image(PartitionStream& partitions, std::uint64_t k)
{
    ImageGroups groups;
    while (auto p = partitions.next()) {
        ImageKey key(pre_k(*p, k).image);
        groups[std::move(key)].push_back(std::move(*p));
    }
    return groups;
}

ImageGroups group_by_image(const std::vector<Partition>& partitions, std::uint64_t k)
{
    ImageGroups groups;
    for (const auto& p : partitions)
        groups[ImageKey(pre_k(p, k).image)].push_back(p);
    return groups;
}

InjectivityReport find_collisions(std::uint64_t n, std::uint64_t k, std::optional<std::uint64_t> length_filter)
{
    if (k == 0)
        throw std::invalid_argument("find_collisions: k must be >= 1");
    InjectivityReport report;
    report.n = n;
    report.k = k;
    report.length_filter = length_filter;

    PartitionStream stream = length_filter ? PartitionStream(n, *length_filter) : PartitionStream(n);
    ImageGroups groups;
    while (auto p = stream.next()) {
        ++report.partitions_examined;
        if (p->length() < k) {
            ++report.degenerate_count;
            continue;
        }
        groups[ImageKey(pre_k(*p, k).image)].push_back(std::move(*p));
    }

    for (auto& [key, members] : groups) {
        if (members.size() < 2)
            continue;
        report.classes.push_back({pre_k(members.front(), k).image, std::move(members)});
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const CollisionClass& a, const CollisionClass& b) { return a.image > b.image; });
    report.injective = report.classes.empty();
    return report;
}

Verdict cross_length_check(std::uint64_t n, std::uint64_t k)
{
    if (k == 0)
        throw std::invalid_argument("cross_length_check: k must be >= 1");
    std::unordered_map<ImageKey, Partition> first_seen;
    PartitionStream stream(n);
    while (auto p = stream.next()) {
        if (p->length() < k)
            continue;
        auto [it, inserted] = first_seen.try_emplace(ImageKey(pre_k(*p, k).image), *p);
        if (!inserted && it->second.length() != p->length())
            return Verdict::fail("partitions of different lengths share a pre_" + std::to_string(k) + " image",
                                 {it->second, *p});
    }
    return Verdict::ok();
}

Verdict duality_check(std::uint64_t n, std::uint64_t length, std::uint64_t k)
{
    if (k == 0 || k >= length)
        throw std::invalid_argument("duality_check: requires 1 <= k < length");
    const std::uint64_t dual = length - k;
    const auto partitions = enumerate_partitions_with_length(n, length);

    // Index of the first partition sharing each image, under both maps.
    std::unordered_map<ImageKey, std::size_t> first_k, first_dual;
    std::vector<std::size_t> rep_k(partitions.size()), rep_dual(partitions.size());
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        rep_k[i] = first_k.try_emplace(ImageKey(pre_k(partitions[i], k).image), i).first->second;
        rep_dual[i] = first_dual.try_emplace(ImageKey(pre_k(partitions[i], dual).image), i).first->second;
    }

    auto same = [&](std::size_t a, std::size_t b, std::uint64_t kk) {
        return pre_k(partitions[a], kk).image == pre_k(partitions[b], kk).image;
    };
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        if (rep_k[i] == rep_dual[i])
            continue;
        for (std::size_t j : {rep_k[i], rep_dual[i]}) {
            if (same(i, j, k) != same(i, j, dual))
                return Verdict::fail("pre_" + std::to_string(k) + " and pre_" + std::to_string(dual)
                                         + " disagree on whether the pair collides",
                                     {partitions[i], partitions[j]});
        }
    }
    return Verdict::ok();
}

SweepResult sweep(std::uint64_t n_from, std::uint64_t n_to, std::uint64_t k,
                  std::optional<std::uint64_t> length_filter, const SweepOptions& options)
{
    if (n_from > n_to)
        throw std::invalid_argument("sweep: n_from must not exceed n_to");
    if (k == 0)
        throw std::invalid_argument("sweep: k must be >= 1");
    if (length_filter && *length_filter == 0)
        throw std::invalid_argument("sweep: length filter must be >= 1");

    SweepResult result;
    const std::size_t count = n_to - n_from + 1;
    std::vector<std::optional<InjectivityReport>> slots(count);

    std::optional<CollisionCache> cache;
    if (options.cache_dir) {
        cache.emplace(*options.cache_dir);
        result.cache_warnings = cache->warnings();
        for (std::size_t i = 0; i < count; ++i) {
            if (auto hit = cache->lookup(n_from + i, k, length_filter)) {
                slots[i] = std::move(*hit);
                ++result.cache_hits;
            }
        }
    }

    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < count; ++i)
        if (!slots[i])
            missing.push_back(i);

    parallel_for(missing.size(), options.jobs, [&](std::size_t j) {
        const std::size_t i = missing[j];
        slots[i] = find_collisions(n_from + i, k, length_filter);
    });
    result.computed = missing.size();

    // Single writer, ascending n.
    if (cache)
        for (std::size_t i : missing)
            cache->append(*slots[i]);

    result.reports.reserve(count);
    for (auto& slot : slots)
        result.reports.push_back(std::move(*slot));
    return result;
}

} // namespace prek
