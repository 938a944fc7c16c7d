#include "prek/verify.hpp"

#include "prek/census.hpp"
#include "prek/collision.hpp"
#include "prek/divisors.hpp"
#include "prek/families.hpp"
#include "prek/image_key.hpp"
#include "prek/prek_map.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace prek {

namespace {

CheckResult pass(std::string name, std::string detail = {})
{
    return {std::move(name), true, std::move(detail), {}};
}

CheckResult fail(std::string name, std::string detail, std::vector<Partition> witnesses = {})
{
    return {std::move(name), false, std::move(detail), std::move(witnesses)};
}

std::string list_text(const std::vector<std::uint64_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out.empty() ? std::string("none") : out;
}

// Validates every pair from a family grid; stops at the first failure.
template <typename Gen>
CheckResult family_grid(std::string name, Gen&& each)
{
    std::size_t count = 0;
    std::optional<CheckResult> failure;
    each([&](const CounterexamplePair& pair, const std::function<std::optional<std::string>()>& extra) {
        if (failure)
            return;
        ++count;
        if (auto v = validate_pair(pair); !v)
            failure = fail(name, pair.family + ": " + v.clause, v.witnesses);
        else if (auto problem = extra ? extra() : std::nullopt)
            failure = fail(name, pair.family + ": " + *problem, {pair.first, pair.second});
    });
    if (failure)
        return *failure;
    return pass(std::move(name), std::to_string(count) + " pairs validated");
}

const std::vector<std::pair<std::uint64_t, std::uint64_t>>& prime_pairs_up_to_13()
{
    static const auto pairs = [] {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (std::uint64_t p = 3; p <= 13; ++p)
            for (std::uint64_t q = 2; q < p; ++q)
                if (is_prime(p) && is_prime(q))
                    out.emplace_back(p, q);
        return out;
    }();
    return pairs;
}

void suite_thm1(VerifyOutcome& out, const VerifyOptions&)
{
    {
        const auto report = find_collisions(13, 3, 3);
        const bool exact = report.classes.size() == 1 && report.classes[0].image == make_partition({36})
                           && report.classes[0].preimages.size() == 2
                           && std::is_permutation(report.classes[0].preimages.begin(),
                                                  report.classes[0].preimages.end(),
                                                  std::vector{make_partition({6, 6, 1}), make_partition({9, 2, 2})}.begin());
        out.checks.push_back(exact ? pass("thm1.witness_13", "single class (36) <- 9,2,2 | 6,6,1")
                                   : fail("thm1.witness_13", "expected exactly one class {(6,6,1),(9,2,2)}"));
    }

    out.checks.push_back(family_grid("thm1.alpha_beta", [](auto&& visit) {
        for (std::uint64_t k = 3; k <= 8; ++k)
            visit(gen_alpha_beta(k), {});
    }));

    out.checks.push_back(family_grid("thm1.scaled_triple", [](auto&& visit) {
        for (std::uint64_t m = 1; m <= 50; ++m) {
            const auto pair = gen_scaled_triple(m);
            visit(pair, [&]() -> std::optional<std::string> {
                const BigNat bm = m;
                if (pre_k(pair.first, 3).image != make_partition(std::vector<BigNat>{36 * bm * bm * bm}))
                    return "image is not 36m^3 at m=" + std::to_string(m);
                if (pair.first.weight() != 13 * bm)
                    return "weight is not 13m at m=" + std::to_string(m);
                return std::nullopt;
            });
        }
    }));

    out.checks.push_back(family_grid("thm1.coprime_triple", [](auto&& visit) {
        for (std::uint64_t m = 3; m <= 50; ++m) {
            const auto pair = gen_coprime_triple(m);
            visit(pair, [&]() -> std::optional<std::string> {
                if (parts_gcd(pair.first) != 1 || parts_gcd(pair.second) != 1)
                    return "parts not coprime at m=" + std::to_string(m);
                return std::nullopt;
            });
        }
    }));

    out.checks.push_back(family_grid("thm1.pq_family", [](auto&& visit) {
        for (const auto& [p, q] : prime_pairs_up_to_13())
            for (std::uint64_t m = pq_min_m(p, q); m <= 10; ++m)
                for (std::uint64_t k = 3; k <= 6; ++k)
                    visit(gen_pq_family({p, q, m, k}), {});
    }));

    {
        std::vector<std::uint64_t> injective_ks;
        for (std::uint64_t k = 3; k <= 6; ++k)
            if (find_collisions(k + 10, k, k).injective)
                injective_ks.push_back(k);
        out.checks.push_back(injective_ks.empty()
                                 ? pass("thm1.non_injective_at_k_plus_10", "k = 3..6")
                                 : fail("thm1.non_injective_at_k_plus_10", "injective for k = " + list_text(injective_ks)));
    }

    {
        // Three-part pairs of modest weight must show up in an exhaustive search.
        std::vector<CounterexamplePair> pairs;
        for (std::uint64_t m = 1; 13 * m <= 200; ++m)
            pairs.push_back(gen_scaled_triple(m));
        for (std::uint64_t m = 3; 5 * m + 1 <= 200; ++m)
            pairs.push_back(gen_coprime_triple(m));
        for (const auto& [p, q] : prime_pairs_up_to_13())
            for (std::uint64_t m = pq_min_m(p, q); m <= 10; ++m)
                if (auto pair = gen_pq_family({p, q, m, 3}); pair.weight <= 200)
                    pairs.push_back(std::move(pair));
        std::map<std::uint64_t, InjectivityReport> by_weight;
        std::optional<CheckResult> failure;
        for (const auto& pair : pairs) {
            const auto w = pair.weight.convert_to<std::uint64_t>();
            auto it = by_weight.find(w);
            if (it == by_weight.end())
                it = by_weight.emplace(w, find_collisions(w, 3, 3)).first;
            const bool found = std::any_of(it->second.classes.begin(), it->second.classes.end(), [&](const auto& c) {
                auto has = [&](const Partition& p) {
                    return std::find(c.preimages.begin(), c.preimages.end(), p) != c.preimages.end();
                };
                return has(pair.first) && has(pair.second);
            });
            if (!found) {
                failure = fail("thm1.rediscovered", "pair not found at weight " + std::to_string(w),
                               {pair.first, pair.second});
                break;
            }
        }
        out.checks.push_back(failure ? *failure
                                     : pass("thm1.rediscovered", std::to_string(pairs.size())
                                                                     + " three-part pairs found by exhaustive search"));
    }
}

void suite_thm3(VerifyOutcome& out, const VerifyOptions& options)
{
    const auto n_max = options.n_max.value_or(20);
    std::size_t checked = 0;
    std::optional<CheckResult> duality_failure, complement_failure;
    for (std::uint64_t n = 1; n <= n_max && !duality_failure; ++n)
        for (std::uint64_t l = 2; l <= 6 && !duality_failure; ++l)
            for (std::uint64_t k = 1; k < l; ++k) {
                ++checked;
                if (auto v = duality_check(n, l, k); !v) {
                    duality_failure = fail("thm3.duality",
                                           "n=" + std::to_string(n) + " l=" + std::to_string(l) + " k="
                                               + std::to_string(k) + ": " + v.clause,
                                           v.witnesses);
                    break;
                }
            }
    out.checks.push_back(duality_failure ? *duality_failure
                                         : pass("thm3.duality", std::to_string(checked) + " (n, l, k) cases, n <= "
                                                                    + std::to_string(n_max) + ", l <= 6"));

    std::size_t partitions = 0;
    for (std::uint64_t n = 1; n <= n_max && !complement_failure; ++n)
        for (std::uint64_t l = 2; l <= 6 && !complement_failure; ++l)
            for (const auto& lambda : enumerate_partitions_with_length(n, l)) {
                ++partitions;
                for (std::uint64_t k = 1; k < l; ++k)
                    if (complement_image(lambda, k) != pre_k(lambda, l - k).image) {
                        complement_failure = fail("thm3.complement", "k=" + std::to_string(k), {lambda});
                        break;
                    }
                if (complement_failure)
                    break;
            }
    out.checks.push_back(complement_failure ? *complement_failure
                                            : pass("thm3.complement", std::to_string(partitions) + " partitions"));
}

CheckResult injective_over(std::string name, std::uint64_t n_from, std::uint64_t n_max, std::uint64_t k,
                           std::optional<std::uint64_t> length, const VerifyOptions& options)
{
    const auto result = sweep(n_from, n_max, k, length, {options.cache_dir, options.jobs});
    for (const auto& rep : result.reports)
        if (!rep.injective)
            return fail(std::move(name),
                        "collision at n=" + std::to_string(rep.n) + " image " + rep.classes[0].image.to_string(),
                        rep.classes[0].preimages);
    std::uint64_t total = 0;
    for (const auto& rep : result.reports)
        total += rep.partitions_examined;
    return pass(std::move(name), "n = " + std::to_string(n_from) + ".." + std::to_string(n_max) + ", "
                                     + std::to_string(total) + " partitions");
}

void suite_thm4(VerifyOutcome& out, const VerifyOptions& options)
{
    const auto n_max = options.n_max.value_or(60);
    for (std::uint64_t l : {4, 5, 6})
        out.checks.push_back(
            injective_over("thm4.pre2_injective_" + std::to_string(l) + "_parts", 1, n_max, 2, l, options));
}

void suite_conj12(VerifyOutcome& out, const VerifyOptions& options)
{
    out.checks.push_back(
        injective_over("conj12.pre2_injective_all_lengths", 1, options.n_max.value_or(28), 2, std::nullopt, options));
}

void suite_thm5(VerifyOutcome& out, const VerifyOptions& options)
{
    const auto n_max = options.n_max.value_or(200);
    const auto census = pre2_sweep(n_max, options.jobs);
    out.checks.push_back(census.bound_violations.empty()
                             ? pass("thm5.lower_bound_holds", "n = 1.." + std::to_string(n_max))
                             : fail("thm5.lower_bound_holds", "violated at n = " + list_text(census.bound_violations)));

    const bool spots = pre2_lower_bound(23) == 4 && pre2_lower_bound(35) == 5;
    out.checks.push_back(spots ? pass("thm5.bound_values", "bound(23)=4, bound(35)=5")
                               : fail("thm5.bound_values", "bound(23)=" + std::to_string(pre2_lower_bound(23))
                                                               + " bound(35)=" + std::to_string(pre2_lower_bound(35))));

    {
        const auto record = n_max >= 23 ? census.records[22] : pre2_exact(23);
        std::vector<Partition> missing;
        for (const auto& expected : {make_partition({11, 11, 1}), make_partition({14, 7, 2}), make_partition({15, 5, 3})})
            if (std::find(record.images.begin(), record.images.end(), expected) == record.images.end())
                missing.push_back(expected);
        out.checks.push_back(missing.empty()
                                 ? pass("thm5.images_of_23", "pre_2(23) = " + std::to_string(record.exact_count))
                                 : fail("thm5.images_of_23", "listed images missing from Pre_2(23)", missing));
    }

    {
        std::optional<CheckResult> failure;
        for (const auto& record : census.records) {
            for (const auto& [pre, img] : record.divisor_witnesses) {
                const bool sound = pre_k(pre, 2).image == img && img.weight() == record.n;
                const bool contained = std::find(record.images.begin(), record.images.end(), img) != record.images.end();
                if (!sound || !contained) {
                    failure = fail("thm5.witness_containment", "n=" + std::to_string(record.n), {pre, img});
                    break;
                }
            }
            if (failure)
                break;
        }
        out.checks.push_back(failure ? *failure : pass("thm5.witness_containment", "n = 1.." + std::to_string(n_max)));
    }

    {
        std::optional<CheckResult> failure;
        for (std::uint64_t n = 1; n <= 10000 && !failure; ++n) {
            const auto witnesses = divisor_witnesses(n);
            std::unordered_set<ImageKey> seen;
            for (const auto& [pre, img] : witnesses)
                if (!seen.insert(ImageKey(img)).second) {
                    failure = fail("thm5.witness_distinct", "duplicate witness image at n=" + std::to_string(n), {img});
                    break;
                }
        }
        out.checks.push_back(failure ? *failure : pass("thm5.witness_distinct", "n = 1..10000"));
    }
}

void suite_problem1(VerifyOutcome& out, const VerifyOptions& options)
{
    const auto n_max = options.n_max.value_or(120);
    const auto result = sweep(3, std::max<std::uint64_t>(3, n_max), 3, 3, {options.cache_dir, options.jobs});
    std::vector<std::uint64_t> injective_n, beyond;
    for (const auto& rep : result.reports)
        if (rep.injective) {
            injective_n.push_back(rep.n);
            if (rep.n > 18)
                beyond.push_back(rep.n);
        }
    out.findings["injective_n"] = injective_n;
    out.checks.push_back(beyond.empty()
                             ? pass("problem1.no_injective_n_above_18", "injective n: " + list_text(injective_n))
                             : fail("problem1.no_injective_n_above_18",
                                    "FINDING: pre_3 is injective on 3-part partitions of n = " + list_text(beyond)
                                        + ", contradicting the observed-data threshold 18"));
}

void suite_problem3(VerifyOutcome& out, const VerifyOptions& options)
{
    const auto n_max = options.n_max.value_or(100);
    const auto census = pre2_sweep(n_max, options.jobs);
    out.findings["singletons"] = census.singletons;
    out.checks.push_back(pass("problem3.singletons", "pre_2(n) = 1 for n = " + list_text(census.singletons)));
    out.checks.push_back(census.bound_violations.empty()
                             ? pass("problem3.lower_bound_holds")
                             : fail("problem3.lower_bound_holds", "violated at n = " + list_text(census.bound_violations)));
}

void suite_laws(VerifyOutcome& out, const VerifyOptions&)
{
    auto over_partitions = [](std::uint64_t n_max, const std::function<bool(const Partition&)>& holds)
        -> std::optional<Partition> {
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            PartitionStream stream(n);
            while (auto p = stream.next())
                if (!holds(*p))
                    return *p;
        }
        return std::nullopt;
    };
    auto record = [&](std::string name, std::string range, std::optional<Partition> bad) {
        out.checks.push_back(bad ? fail(std::move(name), "violated", {*bad}) : pass(std::move(name), std::move(range)));
    };

    record("laws.part_count", "n <= 20, k <= 5", over_partitions(20, [](const Partition& p) {
               for (std::uint64_t k = 1; k <= 5; ++k)
                   if (p.length() >= k && pre_k(p, k).image.length() != binomial(p.length(), k))
                       return false;
               return true;
           }));

    record("laws.product", "n <= 16, 1 <= k <= l", over_partitions(16, [](const Partition& p) {
               const auto total = product_of_parts(p);
               for (std::uint64_t k = 1; k <= p.length(); ++k) {
                   const auto exponent = binomial(p.length() - 1, k - 1);
                   if (product_of_parts(pre_k(p, k).image) != boost::multiprecision::pow(total, exponent))
                       return false;
               }
               return true;
           }));

    record("laws.scaling", "n <= 12, m <= 5", over_partitions(12, [](const Partition& p) {
               for (std::uint64_t m = 1; m <= 5; ++m) {
                   std::vector<BigNat> scaled;
                   for (const auto& x : p.parts())
                       scaled.push_back(x * m);
                   const auto scaled_partition = make_partition(scaled);
                   for (std::uint64_t k = 1; k <= std::max<std::size_t>(p.length(), 1); ++k) {
                       const auto base = pre_k(p, k).image;
                       std::vector<BigNat> expected;
                       const BigNat factor = boost::multiprecision::pow(BigNat(m), k);
                       for (const auto& x : base.parts())
                           expected.push_back(x * factor);
                       if (pre_k(scaled_partition, k).image.parts() != expected)
                           return false;
                   }
               }
               return true;
           }));

    {
        std::optional<CheckResult> failure;
        for (std::uint64_t n = 0; n <= 20 && !failure; ++n)
            for (std::uint64_t k = 1; k <= 4; ++k)
                if (auto v = cross_length_check(n, k); !v) {
                    failure = fail("laws.cross_length", "n=" + std::to_string(n) + " k=" + std::to_string(k), v.witnesses);
                    break;
                }
        out.checks.push_back(failure ? *failure : pass("laws.cross_length", "n <= 20, k <= 4"));
    }

    {
        std::optional<CheckResult> failure;
        for (std::uint64_t n = 1; n <= 40 && !failure; ++n)
            for (std::uint64_t k = 2; k <= 5; ++k)
                if (auto rep = find_collisions(n, k, k + 1); !rep.injective) {
                    failure = fail("laws.k_plus_one_parts", "n=" + std::to_string(n) + " k=" + std::to_string(k),
                                   rep.classes[0].preimages);
                    break;
                }
        out.checks.push_back(failure ? *failure : pass("laws.k_plus_one_parts", "n <= 40, 2 <= k <= 5"));
    }

    record("laws.e2_weight", "n <= 25", over_partitions(25, [](const Partition& p) {
               return e2_sum(p) == pre_k(p, 2).image.weight();
           }));

    record("laws.search_bound", "weight <= 40", over_partitions(40, [](const Partition& p) {
               return p.length() < 2 || e2_sum(p) >= p.weight() - 1;
           }));
}

using SuiteFn = void (*)(VerifyOutcome&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table()
{
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"thm1", suite_thm1},     {"thm3", suite_thm3},         {"thm4", suite_thm4},
        {"thm5", suite_thm5},     {"conj12", suite_conj12},     {"problem1", suite_problem1},
        {"problem3", suite_problem3}, {"laws", suite_laws},
    };
    return table;
}

} // namespace

bool VerifyOutcome::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& verify_suites()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table())
            out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

std::optional<std::uint64_t> default_n_max(std::string_view suite)
{
    static const std::map<std::string, std::uint64_t, std::less<>> defaults{
        {"thm3", 20}, {"thm4", 60}, {"thm5", 200}, {"conj12", 28}, {"problem1", 120}, {"problem3", 100}};
    if (auto it = defaults.find(suite); it != defaults.end())
        return it->second;
    return std::nullopt;
}

VerifyOutcome run_verify(std::string_view suite, const VerifyOptions& options)
{
    VerifyOutcome outcome;
    outcome.suite = std::string(suite);
    if (suite == "all") {
        // Suite-specific n bounds do not transfer across suites.
        VerifyOptions defaults = options;
        defaults.n_max.reset();
        for (const auto& [name, fn] : suite_table()) {
            VerifyOutcome part;
            fn(part, defaults);
            outcome.checks.insert(outcome.checks.end(), part.checks.begin(), part.checks.end());
            for (auto& [key, value] : part.findings.items())
                outcome.findings[key] = value;
        }
        return outcome;
    }
    for (const auto& [name, fn] : suite_table())
        if (name == suite) {
            fn(outcome, options);
            return outcome;
        }
    throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
}

Rendered render_verify(const VerifyOutcome& outcome)
{
    Rendered r;
    json checks = json::array();
    for (const auto& c : outcome.checks) {
        json witnesses = json::array();
        for (const auto& w : c.witnesses)
            witnesses.push_back(partition_to_json(w));
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"witnesses", std::move(witnesses)}});
    }
    r.document = {{"schema_version", schema_version},
                  {"command", "verify"},
                  {"suite", outcome.suite},
                  {"passed", outcome.passed()},
                  {"checks", std::move(checks)},
                  {"findings", outcome.findings}};

    std::ostringstream t;
    for (const auto& c : outcome.checks) {
        t << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty())
            t << "  " << c.detail;
        t << "\n";
        for (const auto& w : c.witnesses)
            t << "      witness " << table_partition(w) << "\n";
    }
    t << (outcome.passed() ? "verify " + outcome.suite + ": all checks passed\n"
                           : "verify " + outcome.suite + ": PROPERTY VIOLATED\n");
    r.table = t.str();

    std::ostringstream c;
    c << "check,passed,detail\n";
    for (const auto& check : outcome.checks) {
        std::string detail = check.detail;
        std::replace(detail.begin(), detail.end(), ',', ';');
        c << check.name << "," << (check.passed ? "true" : "false") << "," << detail << "\n";
    }
    r.csv = c.str();
    return r;
}

} // namespace prek
