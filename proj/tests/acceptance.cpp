// Acceptance suite: one line per criterion, each with its time limit.

#include "prek/census.hpp"
#include "prek/collision.hpp"
#include "prek/divisors.hpp"
#include "prek/families.hpp"
#include "prek/prek_map.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace prek;
using namespace std::chrono_literals;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    std::chrono::duration<double> limit;
    std::function<Outcome()> run;
};

Outcome failure(std::string detail) { return {false, std::move(detail)}; }

bool contains(const std::vector<Partition>& v, const Partition& p)
{
    return std::find(v.begin(), v.end(), p) != v.end();
}

Outcome worked_example()
{
    const auto image = pre_k(make_partition({7, 4, 4}), 2).image;
    if (image != make_partition({28, 28, 16}))
        return failure("got " + image.to_string());
    return {true, "pre_2(7,4,4) = 28,28,16"};
}

Outcome witness_13()
{
    const auto r = find_collisions(13, 3, 3);
    if (r.classes.size() != 1)
        return failure(std::to_string(r.classes.size()) + " classes");
    const auto& c = r.classes[0];
    if (c.image != make_partition({36}) || c.preimages.size() != 2 || !contains(c.preimages, make_partition({6, 6, 1}))
        || !contains(c.preimages, make_partition({9, 2, 2})))
        return failure("unexpected class " + c.image.to_string());
    return {true, "exactly {(6,6,1),(9,2,2)} -> (36) among 14 partitions"};
}

Outcome families()
{
    std::size_t count = 0;
    auto check = [&](const CounterexamplePair& pair, const BigNat& weight, const BigNat& image) -> bool {
        ++count;
        return validate_pair(pair) && pair.first.weight() == weight && pair.second.weight() == weight
               && pre_k(pair.first, pair.k).image == make_partition(std::vector<BigNat>{image});
    };
    for (std::uint64_t k = 3; k <= 8; ++k)
        if (!check(gen_alpha_beta(k), k + 10, 36))
            return failure("alpha_beta k=" + std::to_string(k));
    for (std::uint64_t m = 1; m <= 50; ++m)
        if (!check(gen_scaled_triple(m), 13 * m, BigNat(36) * m * m * m))
            return failure("scaled m=" + std::to_string(m));
    for (std::uint64_t m = 3; m <= 50; ++m) {
        const auto pair = gen_coprime_triple(m);
        if (!check(pair, 5 * m + 1, BigNat(6) * m * (2 * m - 1)) || parts_gcd(pair.first) != 1
            || parts_gcd(pair.second) != 1)
            return failure("coprime m=" + std::to_string(m));
    }
    for (std::uint64_t p = 3; p <= 13; ++p)
        for (std::uint64_t q = 2; q < p; ++q) {
            if (!is_prime(p) || !is_prime(q))
                continue;
            for (std::uint64_t m = pq_min_m(p, q); m <= 10; ++m)
                for (std::uint64_t k = 3; k <= 6; ++k)
                    if (!check(gen_pq_family({p, q, m, k}), p + q + k + m * (p * q - 1) - 2,
                               BigNat(p * q) * (1 + m * (p - 1)) * (1 + m * (q - 1))))
                        return failure("pq p=" + std::to_string(p) + " q=" + std::to_string(q));
        }
    return {true, std::to_string(count) + " pairs, zero failures"};
}

Outcome duality()
{
    std::size_t cases = 0;
    for (std::uint64_t n = 1; n <= 20; ++n)
        for (std::uint64_t l = 2; l <= 6; ++l) {
            for (std::uint64_t k = 1; k < l; ++k) {
                ++cases;
                if (auto v = duality_check(n, l, k); !v)
                    return failure("n=" + std::to_string(n) + " l=" + std::to_string(l) + " k=" + std::to_string(k));
            }
            for (const auto& p : enumerate_partitions_with_length(n, l))
                for (std::uint64_t k = 1; k < l; ++k)
                    if (complement_image(p, k) != pre_k(p, l - k).image)
                        return failure("complement " + p.to_string());
        }
    return {true, std::to_string(cases) + " (n,l,k) cases"};
}

Outcome theorem4()
{
    std::uint64_t examined = 0;
    for (std::uint64_t n = 1; n <= 60; ++n)
        for (std::uint64_t l : {4, 5, 6}) {
            const auto r = find_collisions(n, 2, l);
            examined += r.partitions_examined;
            if (!r.injective)
                return failure("collision at n=" + std::to_string(n) + " l=" + std::to_string(l));
        }
    return {true, std::to_string(examined) + " partitions, zero classes"};
}

Outcome conjecture12()
{
    std::uint64_t examined = 0;
    for (std::uint64_t n = 1; n <= 28; ++n) {
        const auto r = find_collisions(n, 2);
        examined += r.partitions_examined;
        if (!r.injective)
            return failure("collision at n=" + std::to_string(n));
    }
    return {true, std::to_string(examined) + " partitions, zero classes"};
}

Outcome theorem5()
{
    const auto sweep = pre2_sweep(200);
    if (!sweep.bound_violations.empty())
        return failure("bound violated at n=" + std::to_string(sweep.bound_violations.front()));
    if (pre2_lower_bound(23) != 4 || pre2_lower_bound(35) != 5)
        return failure("spot values");
    const auto& r23 = sweep.records[22];
    for (const auto& p : {make_partition({11, 11, 1}), make_partition({14, 7, 2}), make_partition({15, 5, 3})})
        if (!contains(r23.images, p))
            return failure(p.to_string() + " missing from Pre_2(23)");
    return {true, "n <= 200, pre_2(23) = " + std::to_string(r23.exact_count)};
}

Outcome problem1()
{
    const auto result = sweep(3, 120, 3, 3);
    std::string injective;
    std::vector<std::uint64_t> beyond;
    for (const auto& r : result.reports)
        if (r.injective) {
            injective += (injective.empty() ? "" : ",") + std::to_string(r.n);
            if (r.n > 18)
                beyond.push_back(r.n);
        }
    if (!beyond.empty())
        return failure("FINDING: injective above 18 at n=" + std::to_string(beyond.front()));
    if (injective != "3,4,5,6,7,8,9,10,11,12,15,18")
        return failure("injective set changed: " + injective);
    return {true, "injective n = " + injective};
}

Outcome problem3()
{
    const auto sweep = pre2_sweep(100);
    std::string list;
    for (auto n : sweep.singletons)
        list += (list.empty() ? "" : ",") + std::to_string(n);
    if (sweep.singletons != std::vector<std::uint64_t>{1, 2, 4})
        return failure("singletons " + list);
    return {true, "pre_2(n) = 1 exactly for n = " + list};
}

Outcome property_suites()
{
    for (std::uint64_t n = 0; n <= 20; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            for (std::uint64_t k = 1; k <= 5; ++k)
                if (p.length() >= k && pre_k(p, k).image.length() != binomial(p.length(), k))
                    return failure("part count " + p.to_string());
            if (n <= 16)
                for (std::uint64_t k = 1; k <= p.length(); ++k)
                    if (product_of_parts(pre_k(p, k).image)
                        != boost::multiprecision::pow(product_of_parts(p),
                                                      static_cast<unsigned>(binomial(p.length() - 1, k - 1))))
                        return failure("product " + p.to_string());
            if (n <= 12)
                for (unsigned m = 2; m <= 5; ++m) {
                    std::vector<BigNat> scaled;
                    for (const auto& x : p.parts())
                        scaled.push_back(x * m);
                    const auto sp = make_partition(scaled);
                    for (unsigned k = 1; k <= p.length(); ++k) {
                        const auto base = pre_k(p, k).image;
                        const auto got = pre_k(sp, k).image;
                        for (std::size_t i = 0; i < base.length(); ++i)
                            if (got[i] != base[i] * boost::multiprecision::pow(BigNat(m), k))
                                return failure("scaling " + p.to_string());
                    }
                }
        }
    for (std::uint64_t n = 0; n <= 20; ++n)
        for (std::uint64_t k = 1; k <= 4; ++k)
            if (!cross_length_check(n, k))
                return failure("cross length n=" + std::to_string(n));
    for (std::uint64_t s = 2; s <= 40; ++s)
        for (const auto& p : enumerate_partitions(s))
            if (p.length() >= 2 && e2_sum(p) < s - 1)
                return failure("search bound " + p.to_string());
    return {true, "part count, product, scaling, cross-length, search bound"};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "worked example pre_2(7,4,4)", 1ms, worked_example},
        {2, "unique pre_3 collision among 3-part partitions of 13", 1s, witness_13},
        {3, "counterexample families validate", 30s, families},
        {4, "duality and complement image, n <= 20, l <= 6", 120s, duality},
        {5, "pre_2 injective on 4/5/6 parts, n <= 60", 300s, theorem4},
        {6, "pre_2 injective on P(n), n <= 28", 300s, conjecture12},
        {7, "census lower bound, n <= 200", 120s, theorem5},
        {8, "3-part pre_3 injective only for n <= 18, n in [3,120]", 60s, problem1},
        {9, "census singletons, n <= 100", 120s, problem3},
        {10, "property suites", 180s, property_suites},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = failure(std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        const bool in_time = elapsed <= c.limit;
        const bool pass = outcome.ok && in_time;
        failed += !pass;
        std::printf("[%s] AC%-2d %-55s %10.3f ms (limit %.0f ms)  %s%s\n", pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), elapsed.count() * 1e3, c.limit.count() * 1e3, outcome.detail.c_str(),
                    in_time ? "" : "  [time limit exceeded]");
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed ? 1 : 0;
}
