#include "prek/collision.hpp"
#include "prek/divisors.hpp"
#include "prek/families.hpp"
#include "prek/prek_map.hpp"

#include <doctest.h>

using namespace prek;

TEST_CASE("gen_alpha_beta")
{
    const auto k3 = gen_alpha_beta(3);
    CHECK(k3.first == make_partition({6, 6, 1}));
    CHECK(k3.second == make_partition({9, 2, 2}));
    CHECK(k3.weight == 13);
    CHECK(k3.shared_image == make_partition({36}));

    const auto k4 = gen_alpha_beta(4);
    CHECK(k4.first == make_partition({6, 6, 1, 1}));
    CHECK(k4.second == make_partition({9, 2, 2, 1}));
    CHECK(k4.weight == 14);
    CHECK(pre_k(k4.first, 4).image == make_partition({36}));

    const auto k5 = gen_alpha_beta(5);
    CHECK(k5.weight == 15);
    CHECK(k5.first.length() == 5);
    CHECK(k5.second.length() == 5);

    CHECK_THROWS_AS(gen_alpha_beta(2), std::invalid_argument);
    for (std::uint64_t k = 3; k <= 8; ++k)
        CHECK(validate_pair(gen_alpha_beta(k)));
}

TEST_CASE("gen_scaled_triple")
{
    CHECK(gen_scaled_triple(1).first == make_partition({6, 6, 1}));
    const auto m2 = gen_scaled_triple(2);
    CHECK(m2.first == make_partition({12, 12, 2}));
    CHECK(m2.second == make_partition({18, 4, 4}));
    CHECK(m2.weight == 26);
    CHECK(pre_k(m2.first, 3).image == make_partition({288}));
    const auto m10 = gen_scaled_triple(10);
    CHECK(m10.weight == 130);
    CHECK(pre_k(m10.second, 3).image == make_partition({36000}));
    CHECK_THROWS_AS(gen_scaled_triple(0), std::invalid_argument);

    for (std::uint64_t m = 1; m <= 50; ++m) {
        const auto pair = gen_scaled_triple(m);
        REQUIRE(validate_pair(pair));
        REQUIRE(pre_k(pair.first, 3).image == make_partition({36 * m * m * m}));
    }
}

TEST_CASE("gen_coprime_triple")
{
    const auto m3 = gen_coprime_triple(3);
    CHECK(m3.first == make_partition({9, 5, 2}));
    CHECK(m3.second == make_partition({10, 3, 3}));
    CHECK(m3.weight == 16);
    CHECK(pre_k(m3.first, 3).image == make_partition({90}));
    CHECK(parts_gcd(m3.first) == 1);
    CHECK(parts_gcd(m3.second) == 1);

    const auto m4 = gen_coprime_triple(4);
    CHECK(m4.first == make_partition({12, 7, 2}));
    CHECK(m4.second == make_partition({14, 4, 3}));
    CHECK(m4.weight == 21);
    CHECK(pre_k(m4.second, 3).image == make_partition({168}));
    CHECK_THROWS_AS(gen_coprime_triple(2), std::invalid_argument);

    for (std::uint64_t m = 3; m <= 50; ++m) {
        const auto pair = gen_coprime_triple(m);
        REQUIRE(validate_pair(pair));
        REQUIRE(parts_gcd(pair.first) == 1);
        REQUIRE(parts_gcd(pair.second) == 1);
        REQUIRE(pair.shared_image == make_partition({6 * m * (2 * m - 1)}));
    }
}

TEST_CASE("gen_pq_family")
{
    const auto a = gen_pq_family({3, 2, 3, 3});
    CHECK(a.first == make_partition({14, 4, 3}));
    CHECK(a.second == make_partition({12, 7, 2}));
    CHECK(a.weight == 21);
    CHECK(a.shared_image == make_partition({168}));

    const auto b = gen_pq_family({5, 2, 4, 3});
    CHECK(b.first == make_partition({34, 5, 5}));
    CHECK(b.second == make_partition({25, 17, 2}));
    CHECK(b.weight == 44);
    CHECK(b.shared_image == make_partition({850}));

    const auto c = gen_pq_family({3, 2, 3, 5});
    CHECK(c.first == make_partition({14, 4, 3, 1, 1}));
    CHECK(c.weight == 23);
    CHECK(c.second.length() == 5);
    CHECK(validate_pair(c));

    CHECK_THROWS_AS(gen_pq_family({2, 3, 3, 3}), std::invalid_argument);  // p <= q
    CHECK_THROWS_AS(gen_pq_family({9, 2, 9, 3}), std::invalid_argument);  // 9 not prime
    CHECK_THROWS_AS(gen_pq_family({7, 3, 2, 3}), std::invalid_argument);  // m below ceil(6/2) = 3
    CHECK_THROWS_AS(gen_pq_family({3, 2, 3, 2}), std::invalid_argument);  // k < 3
    CHECK(validate_pair(gen_pq_family({7, 3, 3, 3})));
}

TEST_CASE("pq_min_m is the ceiling")
{
    CHECK(pq_min_m(3, 2) == 2);
    CHECK(pq_min_m(7, 3) == 3);
    CHECK(pq_min_m(11, 7) == 2);
    CHECK(pq_min_m(13, 5) == 3);
}

TEST_CASE("pq grid validates with raw tuples already sorted")
{
    int pairs = 0;
    for (std::uint64_t p = 3; p <= 13; ++p)
        for (std::uint64_t q = 2; q < p; ++q) {
            if (!is_prime(p) || !is_prime(q))
                continue;
            for (std::uint64_t m = pq_min_m(p, q); m <= 10; ++m)
                for (std::uint64_t k = 3; k <= 6; ++k) {
                    const auto pair = gen_pq_family({p, q, m, k});
                    REQUIRE(validate_pair(pair));
                    REQUIRE(is_weakly_decreasing(pair.raw_first));
                    REQUIRE(is_weakly_decreasing(pair.raw_second));
                    const BigNat expected_image = BigNat(p * q) * (1 + m * (p - 1)) * (1 + m * (q - 1));
                    REQUIRE(pair.shared_image == make_partition(std::vector<BigNat>{expected_image}));
                    REQUIRE(pair.first.weight() == p + q + k + m * (p * q - 1) - 2);
                    ++pairs;
                }
        }
    CHECK(pairs == 408);
}

TEST_CASE("validate_pair rejects broken pairs")
{
    auto same = gen_alpha_beta(3);
    same.second = same.first;
    const auto v1 = validate_pair(same);
    CHECK_FALSE(v1);
    CHECK(v1.clause == "not distinct");

    auto lighter = gen_alpha_beta(3);
    lighter.second = make_partition({9, 2, 1});
    lighter.raw_second.clear();
    const auto v2 = validate_pair(lighter);
    CHECK_FALSE(v2);
    CHECK(v2.clause == "weights differ");

    auto wrong_image = gen_alpha_beta(3);
    wrong_image.shared_image = make_partition({37});
    CHECK_FALSE(validate_pair(wrong_image));

    auto unsorted = gen_alpha_beta(3);
    unsorted.raw_first = {1, 6, 6};
    CHECK(validate_pair(unsorted).clause == "raw first tuple is not weakly decreasing");

    CounterexamplePair different_images;
    different_images.first = make_partition({5, 3});
    different_images.second = make_partition({4, 4});
    different_images.weight = 8;
    different_images.k = 2;
    different_images.shared_image = make_partition({15});
    CHECK(validate_pair(different_images).clause == "pre_k images differ");
}

TEST_CASE("three-part pairs are rediscovered by exhaustive search")
{
    auto rediscovered = [](const CounterexamplePair& pair) {
        const auto report = find_collisions(pair.weight.convert_to<std::uint64_t>(), 3, 3);
        for (const auto& c : report.classes)
            if (std::count(c.preimages.begin(), c.preimages.end(), pair.first)
                && std::count(c.preimages.begin(), c.preimages.end(), pair.second))
                return true;
        return false;
    };
    for (std::uint64_t m = 1; m <= 6; ++m)
        CHECK(rediscovered(gen_scaled_triple(m)));
    for (std::uint64_t m = 3; m <= 12; ++m)
        CHECK(rediscovered(gen_coprime_triple(m)));
    CHECK(rediscovered(gen_pq_family({5, 2, 4, 3})));
    CHECK(rediscovered(gen_pq_family({7, 5, 2, 3})));
}
