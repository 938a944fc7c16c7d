#include "prek/census.hpp"

#include "prek/divisors.hpp"
#include "prek/image_key.hpp"
#include "prek/workers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace prek {

std::uint64_t pre2_lower_bound(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("pre2_lower_bound: n must be >= 1");
    const auto t = tau(n + 1);
    return is_perfect_square(n + 1) ? (t + 1) / 2 : t / 2;
}

std::vector<std::pair<Partition, Partition>> divisor_witnesses(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("divisor_witnesses: n must be >= 1");
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& [small, large] : divisor_pairs(n + 1)) {
        const std::uint64_t a = large - 1;
        const std::uint64_t b = small - 1;
        if (b == 0)
            out.emplace_back(make_partition({n, 1}), make_partition({n}));
        else
            out.emplace_back(make_partition({a, b, 1}), make_partition({a * b, a, b}));
    }
    return out;
}

namespace {

// Images of weight at most `limit`, bucketed by weight. Each image keeps
// the greatest (lexicographic) preimage seen so the merge is order-free.
struct Buckets {
    std::vector<std::unordered_map<ImageKey, Partition>> by_weight;

    explicit Buckets(std::uint64_t limit)
        : by_weight(limit + 1)
    {
    }

    void offer(std::uint64_t weight, ImageKey key, Partition preimage)
    {
        auto [it, inserted] = by_weight[weight].try_emplace(std::move(key), preimage);
        if (!inserted && it->second < preimage)
            it->second = std::move(preimage);
    }

    void merge(Buckets&& other)
    {
        for (std::size_t w = 0; w < by_weight.size(); ++w)
            for (auto& [key, pre] : other.by_weight[w])
                offer(w, key, std::move(pre));
    }
};

// Depth-first over weakly decreasing part sequences. Appending part x to a
// prefix with sum s raises e_2 by x*s, so any branch past `limit` is dead.
class E2Search {
public:
    E2Search(std::uint64_t limit, Buckets& out)
        : limit_(limit)
        , out_(out)
    {
    }

    void run_from_first_part(std::uint64_t first)
    {
        parts_.assign(1, first);
        descend(first, 0, first);
    }

private:
    void descend(std::uint64_t sum, std::uint64_t e2, std::uint64_t max_part)
    {
        if (parts_.size() >= 2)
            record(e2);
        for (std::uint64_t x = std::min(max_part, limit_ / sum); x >= 1; --x) {
            const std::uint64_t next = e2 + x * sum;
            if (next > limit_)
                continue;
            parts_.push_back(x);
            descend(sum + x, next, x);
            parts_.pop_back();
        }
    }

    void record(std::uint64_t e2)
    {
        std::vector<BigNat> products;
        products.reserve(parts_.size() * (parts_.size() - 1) / 2);
        for (std::size_t i = 0; i < parts_.size(); ++i)
            for (std::size_t j = i + 1; j < parts_.size(); ++j)
                products.emplace_back(parts_[i] * parts_[j]);
        Partition image = make_partition(std::move(products));
        ImageKey key(image);
        out_.offer(e2, std::move(key), from_words(parts_));
    }

    std::uint64_t limit_;
    Buckets& out_;
    std::vector<std::uint64_t> parts_;
};

Buckets search(std::uint64_t limit, unsigned jobs)
{
    Buckets merged(limit);
    std::mutex merge_mutex;
    const std::size_t lanes = std::max(1u, jobs);
    // A first part above `limit` cannot be followed by any part.
    parallel_for(lanes, jobs, [&](std::size_t lane) {
        Buckets local(limit);
        E2Search walker(limit, local);
        for (std::uint64_t first = limit - lane; first >= 1 && first <= limit; first -= lanes)
            walker.run_from_first_part(first);
        std::lock_guard lock(merge_mutex);
        merged.merge(std::move(local));
    });
    return merged;
}

CensusRecord assemble(std::uint64_t n, std::unordered_map<ImageKey, Partition>& found)
{
    CensusRecord record;
    record.n = n;
    std::vector<std::pair<Partition, Partition>> entries;
    entries.reserve(found.size());
    for (auto& [key, preimage] : found)
        entries.emplace_back(decode_image_key(key.bytes()), std::move(preimage));
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [image, preimage] : entries) {
        record.images.push_back(std::move(image));
        record.first_preimages.push_back(std::move(preimage));
    }
    record.exact_count = record.images.size();
    record.lower_bound = pre2_lower_bound(n);
    record.divisor_witnesses = divisor_witnesses(n);
    return record;
}

void check_range(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("census: n must be >= 1");
    if (n > census_n_limit)
        throw std::invalid_argument("census: n must be <= " + std::to_string(census_n_limit));
}

} // namespace

CensusRecord pre2_exact(std::uint64_t n)
{
    check_range(n);
    auto buckets = search(n, 1);
    return assemble(n, buckets.by_weight[n]);
}

CensusSweep pre2_sweep(std::uint64_t n_max, unsigned jobs)
{
    check_range(n_max);
    auto buckets = search(n_max, jobs);
    CensusSweep sweep;
    sweep.records.resize(n_max);
    parallel_for(n_max, jobs, [&](std::size_t i) {
        sweep.records[i] = assemble(i + 1, buckets.by_weight[i + 1]);
    });
    for (const auto& r : sweep.records) {
        if (r.exact_count == 1)
            sweep.singletons.push_back(r.n);
        if (r.exact_count < r.lower_bound)
            sweep.bound_violations.push_back(r.n);
    }
    return sweep;
}

} // namespace prek
