// Exercises the shared library strictly through prek.h.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prek/prek.h"

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

namespace {

struct Ctx {
    prek_context* ctx = nullptr;
    Ctx() { REQUIRE(prek_context_create(&ctx) == PREK_OK); }
    ~Ctx() { prek_context_destroy(ctx); }
};

std::string render(prek_report* r, prek_format f)
{
    const char* text = nullptr;
    size_t len = 0;
    REQUIRE(prek_report_render(r, f, &text, &len) == PREK_OK);
    return std::string(text, len);
}

} // namespace

TEST_CASE("map")
{
    Ctx c;
    prek_report* r = nullptr;
    REQUIRE(prek_map(c.ctx, "7,4,4", 2, &r) == PREK_OK);
    CHECK(prek_report_verdict(r) == PREK_VERDICT_NONE);
    CHECK(render(r, PREK_FORMAT_JSON).find("\"image\": [\n    28,\n    28,\n    16\n  ]") != std::string::npos);
    CHECK(render(r, PREK_FORMAT_TABLE).find("28,28,16") != std::string::npos);
    prek_report_destroy(r);

    REQUIRE(prek_map(c.ctx, "5", 2, &r) == PREK_OK);
    CHECK(render(r, PREK_FORMAT_TABLE).find("degenerate") != std::string::npos);
    prek_report_destroy(r);
}

TEST_CASE("error codes and messages")
{
    Ctx c;
    prek_report* r = nullptr;
    CHECK(prek_map(c.ctx, "7,0,4", 2, &r) == PREK_ERR_INVALID_ARGUMENT);
    CHECK(std::string(prek_context_last_error(c.ctx)).find("positive") != std::string::npos);
    CHECK(prek_map(c.ctx, "7,a", 2, &r) == PREK_ERR_INVALID_ARGUMENT);
    CHECK(prek_map(c.ctx, "7,4", 0, &r) == PREK_ERR_INVALID_ARGUMENT);
    CHECK(prek_map(c.ctx, "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1", 20, &r)
          == PREK_ERR_LIMIT);
    CHECK(prek_map(nullptr, "7", 1, &r) == PREK_ERR_NULL_POINTER);
    CHECK(prek_map(c.ctx, nullptr, 1, &r) == PREK_ERR_NULL_POINTER);
    CHECK(prek_map(c.ctx, "7", 1, nullptr) == PREK_ERR_NULL_POINTER);
    CHECK(prek_sweep(c.ctx, 5, 4, 3, 3, &r) == PREK_ERR_INVALID_ARGUMENT);
    CHECK(prek_verify(c.ctx, "nope", 0, &r) == PREK_ERR_INVALID_ARGUMENT);
    CHECK(prek_census(c.ctx, 0, &r) == PREK_ERR_INVALID_ARGUMENT);
    CHECK(prek_context_set_jobs(c.ctx, 0) == PREK_ERR_INVALID_ARGUMENT);
    CHECK(prek_report_render(nullptr, PREK_FORMAT_JSON, nullptr, nullptr) == PREK_ERR_NULL_POINTER);

    prek_family_params bad{PREK_FAMILY_PQ, 9, 2, 9, 3};
    CHECK(prek_family(c.ctx, &bad, &r) == PREK_ERR_INVALID_ARGUMENT);
    CHECK(std::string(prek_context_last_error(c.ctx)).find("prime") != std::string::npos);

    CHECK(std::string(prek_status_string(PREK_ERR_IO)) == "i/o error");
    prek_report_destroy(nullptr);
    prek_context_destroy(nullptr);
}

TEST_CASE("collide and family")
{
    Ctx c;
    prek_report* r = nullptr;
    REQUIRE(prek_collide(c.ctx, 13, 3, 3, &r) == PREK_OK);
    const auto json = render(r, PREK_FORMAT_JSON);
    CHECK(json.find("\"injective\": false") != std::string::npos);
    CHECK(render(r, PREK_FORMAT_CSV) == "n,k,length_filter,partitions_examined,degenerate_count,injective,class_count,images\n"
                                        "13,3,3,14,0,false,1,36\n");
    prek_report_destroy(r);

    REQUIRE(prek_collide(c.ctx, 23, 2, PREK_ALL_LENGTHS, &r) == PREK_OK);
    CHECK(render(r, PREK_FORMAT_JSON).find("\"length_filter\": \"all\"") != std::string::npos);
    prek_report_destroy(r);

    prek_family_params params{PREK_FAMILY_PQ, 5, 2, 4, 3};
    REQUIRE(prek_family(c.ctx, &params, &r) == PREK_OK);
    CHECK(prek_report_verdict(r) == PREK_VERDICT_HOLDS);
    CHECK(render(r, PREK_FORMAT_CSV).find("34 5 5,25 17 2,850,true") != std::string::npos);
    prek_report_destroy(r);

    for (auto kind : {PREK_FAMILY_ALPHA_BETA, PREK_FAMILY_SCALED_TRIPLE, PREK_FAMILY_COPRIME_TRIPLE}) {
        prek_family_params p{kind, 0, 0, 3, 3};
        REQUIRE(prek_family(c.ctx, &p, &r) == PREK_OK);
        CHECK(prek_report_verdict(r) == PREK_VERDICT_HOLDS);
        prek_report_destroy(r);
    }
}

TEST_CASE("sweep uses the configured cache and stays identical when warm")
{
    Ctx c;
    std::random_device rd;
    const auto dir = std::filesystem::temp_directory_path() / ("prek-capi-" + std::to_string(rd()));
    REQUIRE(prek_context_set_cache_dir(c.ctx, dir.string().c_str()) == PREK_OK);
    CHECK(std::string(prek_context_cache_dir(c.ctx)) == dir.string());
    REQUIRE(prek_context_set_jobs(c.ctx, 2) == PREK_OK);

    prek_report* cold = nullptr;
    prek_report* warm = nullptr;
    REQUIRE(prek_sweep(c.ctx, 3, 30, 3, 3, &cold) == PREK_OK);
    REQUIRE(prek_sweep(c.ctx, 3, 30, 3, 3, &warm) == PREK_OK);
    CHECK(std::filesystem::exists(dir / "collisions.jsonl"));
    for (auto f : {PREK_FORMAT_TABLE, PREK_FORMAT_JSON, PREK_FORMAT_CSV})
        CHECK(render(cold, f) == render(warm, f));
    CHECK(std::string(prek_context_last_warnings(c.ctx)).empty());
    prek_report_destroy(cold);
    prek_report_destroy(warm);
    std::filesystem::remove_all(dir);

    setenv("PREK_CACHE_DIR", "/tmp/prek-env-cache", 1);
    REQUIRE(prek_context_set_cache_dir(c.ctx, nullptr) == PREK_OK);
    CHECK(std::string(prek_context_cache_dir(c.ctx)) == "/tmp/prek-env-cache");
    unsetenv("PREK_CACHE_DIR");
}

TEST_CASE("census, verify and scalar queries")
{
    Ctx c;
    prek_report* r = nullptr;
    REQUIRE(prek_census(c.ctx, 30, &r) == PREK_OK);
    CHECK(prek_report_verdict(r) == PREK_VERDICT_HOLDS);
    CHECK(render(r, PREK_FORMAT_CSV).find("23,5,4,1\n") != std::string::npos);
    prek_report_destroy(r);

    std::random_device rd;
    const auto dir = std::filesystem::temp_directory_path() / ("prek-capi-" + std::to_string(rd()));
    REQUIRE(prek_context_set_cache_dir(c.ctx, dir.string().c_str()) == PREK_OK);
    REQUIRE(prek_verify(c.ctx, "thm4", 20, &r) == PREK_OK);
    CHECK(prek_report_verdict(r) == PREK_VERDICT_HOLDS);
    CHECK(render(r, PREK_FORMAT_TABLE).find("all checks passed") != std::string::npos);
    prek_report_destroy(r);
    std::filesystem::remove_all(dir);

    uint64_t v = 0;
    CHECK(prek_tau(24, &v) == PREK_OK);
    CHECK(v == 8);
    CHECK(prek_tau(0, &v) == PREK_ERR_INVALID_ARGUMENT);
    CHECK(prek_pre2_lower_bound(35, &v) == PREK_OK);
    CHECK(v == 5);
    CHECK(prek_pre2_lower_bound(0, &v) == PREK_ERR_INVALID_ARGUMENT);
    CHECK(std::string(prek_version()) == "0.1.0");
}
