#include "prek/families.hpp"

#include "prek/divisors.hpp"
#include "prek/prek_map.hpp"


#include <stdexcept>
#include <string>

namespace prek {

namespace {

std::vector<BigNat> with_ones(std::vector<BigNat> head, std::uint64_t ones)
{
    head.insert(head.end(), ones, BigNat(1));
    return head;
}

CounterexamplePair assemble(std::string family, std::vector<std::pair<std::string, std::uint64_t>> params,
                            std::uint64_t k, std::vector<BigNat> raw_first, std::vector<BigNat> raw_second,
                            BigNat weight, BigNat image_value)
{
    CounterexamplePair pair;
    pair.first = make_partition(raw_first);
    pair.second = make_partition(raw_second);
    pair.raw_first = std::move(raw_first);
    pair.raw_second = std::move(raw_second);
    pair.weight = std::move(weight);
    pair.k = k;
    pair.shared_image = make_partition(std::vector<BigNat>{std::move(image_value)});
    pair.family = std::move(family);
    pair.params = std::move(params);
    return pair;
}

} // namespace

std::uint64_t pq_min_m(std::uint64_t p, std::uint64_t q)
{
    if (q < 2 || p <= q)
        throw std::invalid_argument("pq_min_m: requires p > q >= 2");
    return (p - 1 + (q - 1) - 1) / (q - 1);
}

CounterexamplePair gen_alpha_beta(std::uint64_t k)
{
    if (k < 3)
        throw std::invalid_argument("gen_alpha_beta: k must be >= 3");
    return assemble("alpha_beta", {{"k", k}}, k, with_ones({6, 6}, k - 2), with_ones({9, 2, 2}, k - 3),
                    BigNat(k) + 10, 36);
}

CounterexamplePair gen_scaled_triple(std::uint64_t m)
{
    if (m == 0)
        throw std::invalid_argument("gen_scaled_triple: m must be >= 1");
    const BigNat bm = m;
    return assemble("scaled_triple", {{"m", m}}, 3, {6 * bm, 6 * bm, bm}, {9 * bm, 2 * bm, 2 * bm}, 13 * bm,
                    36 * bm * bm * bm);
}

CounterexamplePair gen_coprime_triple(std::uint64_t m)
{
    if (m < 3)
        throw std::invalid_argument("gen_coprime_triple: m must be >= 3");
    const BigNat bm = m;
    return assemble("coprime_triple", {{"m", m}}, 3, {3 * bm, 2 * bm - 1, 2}, {4 * bm - 2, bm, 3}, 5 * bm + 1,
                    6 * bm * (2 * bm - 1));
}

CounterexamplePair gen_pq_family(const PQFamilyParams& params)
{
    const auto [p, q, m, k] = params;
    if (p <= q)
        throw std::invalid_argument("gen_pq_family: requires p > q");
    if (!is_prime(p) || !is_prime(q))
        throw std::invalid_argument("gen_pq_family: p and q must be prime");
    if (k < 3)
        throw std::invalid_argument("gen_pq_family: k must be >= 3");
    if (m < pq_min_m(p, q))
        throw std::invalid_argument("gen_pq_family: m must be >= ceil((p-1)/(q-1)) = "
                                    + std::to_string(pq_min_m(p, q)));
    const BigNat bp = p, bq = q, bm = m;
    const BigNat along_p = 1 + bm * (bp - 1);
    const BigNat along_q = 1 + bm * (bq - 1);
    return assemble("pq", {{"p", p}, {"q", q}, {"m", m}, {"k", k}}, k,
                    with_ones({bq * along_p, along_q, bp}, k - 3), with_ones({bp * along_q, along_p, bq}, k - 3),
                    bp + bq + k + bm * (bp * bq - 1) - 2, bp * bq * along_p * along_q);
}

Verdict validate_pair(const CounterexamplePair& pair)
{
    if (pair.k == 0)
        return Verdict::fail("k must be >= 1");
    const std::vector<Partition> both{pair.first, pair.second};
    if (pair.first == pair.second)
        return Verdict::fail("not distinct", both);
    if (pair.first.weight() != pair.second.weight())
        return Verdict::fail("weights differ", both);
    if (pair.first.weight() != pair.weight)
        return Verdict::fail("weight " + pair.first.weight().str() + " does not match claimed " + pair.weight.str(),
                             both);
    if (pair.first.length() != pair.second.length())
        return Verdict::fail("lengths differ", both);
    const auto image_first = pre_k(pair.first, pair.k).image;
    const auto image_second = pre_k(pair.second, pair.k).image;
    if (image_first != image_second)
        return Verdict::fail("pre_k images differ", both);
    if (image_first != pair.shared_image)
        return Verdict::fail("pre_k image (" + image_first.to_string() + ") does not match claimed ("
                                 + pair.shared_image.to_string() + ")",
                             both);
    if (!pair.raw_first.empty() && !is_weakly_decreasing(pair.raw_first))
        return Verdict::fail("raw first tuple is not weakly decreasing", both);
    if (!pair.raw_second.empty() && !is_weakly_decreasing(pair.raw_second))
        return Verdict::fail("raw second tuple is not weakly decreasing", both);
    return Verdict::ok();
}

BigNat parts_gcd(const Partition& p)
{
    BigNat g = 0;
    for (const auto& part : p.parts())
        g = boost::multiprecision::gcd(g, part);
    return g;
}

} // namespace prek
