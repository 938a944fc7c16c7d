#include "prek/prek.h"

#include "prek/census.hpp"
#include "prek/collision.hpp"
#include "prek/divisors.hpp"
#include "prek/families.hpp"
#include "prek/prek_map.hpp"
#include "prek/report.hpp"
#include "prek/sweep_cache.hpp"
#include "prek/verify.hpp"

#include <array>
#include <filesystem>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

struct prek_context {
    std::optional<std::filesystem::path> cache_dir_flag;
    std::string resolved_cache_dir;
    unsigned jobs = 1;
    std::string last_error;
    std::string last_warnings;
};

struct prek_report {
    prek::Rendered rendered;
    prek_verdict verdict = PREK_VERDICT_NONE;
    std::array<std::optional<std::string>, 3> text;
};

namespace {

std::optional<std::uint64_t> as_filter(std::uint64_t length_filter)
{
    if (length_filter == PREK_ALL_LENGTHS)
        return std::nullopt;
    return length_filter;
}

// Runs `body`, translating exceptions into status codes and the context's
// error message.
template <typename Body>
prek_status guarded(prek_context* ctx, Body&& body)
{
    if (!ctx)
        return PREK_ERR_NULL_POINTER;
    ctx->last_error.clear();
    try {
        body();
        return PREK_OK;
    } catch (const std::invalid_argument& e) {
        ctx->last_error = e.what();
        return PREK_ERR_INVALID_ARGUMENT;
    } catch (const std::length_error& e) {
        ctx->last_error = e.what();
        return PREK_ERR_LIMIT;
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
        return PREK_ERR_LIMIT;
    } catch (const std::filesystem::filesystem_error& e) {
        ctx->last_error = e.what();
        return PREK_ERR_IO;
    } catch (const std::runtime_error& e) {
        ctx->last_error = e.what();
        return PREK_ERR_IO;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return PREK_ERR_INTERNAL;
    } catch (...) {
        ctx->last_error = "unknown error";
        return PREK_ERR_INTERNAL;
    }
}

prek_status emit(prek_context* ctx, prek_report** out, prek::Rendered rendered, prek_verdict verdict)
{
    auto* report = new (std::nothrow) prek_report{std::move(rendered), verdict, {}};
    if (!report) {
        ctx->last_error = "out of memory";
        return PREK_ERR_LIMIT;
    }
    *out = report;
    return PREK_OK;
}

std::filesystem::path cache_dir(const prek_context* ctx)
{
    return prek::resolve_cache_dir(ctx->cache_dir_flag);
}

} // namespace

extern "C" {

const char* prek_version(void) { return "0.1.0"; }

const char* prek_status_string(prek_status status)
{
    switch (status) {
    case PREK_OK: return "ok";
    case PREK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PREK_ERR_NULL_POINTER: return "null pointer";
    case PREK_ERR_IO: return "i/o error";
    case PREK_ERR_LIMIT: return "size limit exceeded";
    case PREK_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

prek_status prek_context_create(prek_context** out)
{
    if (!out)
        return PREK_ERR_NULL_POINTER;
    *out = new (std::nothrow) prek_context{};
    return *out ? PREK_OK : PREK_ERR_LIMIT;
}

void prek_context_destroy(prek_context* ctx) { delete ctx; }

prek_status prek_context_set_cache_dir(prek_context* ctx, const char* dir)
{
    return guarded(ctx, [&] {
        if (dir && *dir)
            ctx->cache_dir_flag = std::filesystem::path(dir);
        else
            ctx->cache_dir_flag.reset();
    });
}

const char* prek_context_cache_dir(prek_context* ctx)
{
    if (!ctx)
        return "";
    ctx->resolved_cache_dir = cache_dir(ctx).string();
    return ctx->resolved_cache_dir.c_str();
}

prek_status prek_context_set_jobs(prek_context* ctx, unsigned jobs)
{
    return guarded(ctx, [&] {
        if (jobs == 0)
            throw std::invalid_argument("jobs must be >= 1");
        ctx->jobs = jobs;
    });
}

const char* prek_context_last_error(const prek_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* prek_context_last_warnings(const prek_context* ctx) { return ctx ? ctx->last_warnings.c_str() : ""; }

prek_status prek_map(prek_context* ctx, const char* parts, uint64_t k, prek_report** out)
{
    if (!parts || !out)
        return PREK_ERR_NULL_POINTER;
    prek_status status = PREK_OK;
    const auto rc = guarded(ctx, [&] {
        const auto source = prek::parse_partition(parts);
        const auto result = prek::pre_k(source, k);
        status = emit(ctx, out, prek::render_map(source, result), PREK_VERDICT_NONE);
    });
    return rc != PREK_OK ? rc : status;
}

prek_status prek_collide(prek_context* ctx, uint64_t n, uint64_t k, uint64_t length_filter, prek_report** out)
{
    if (!out)
        return PREK_ERR_NULL_POINTER;
    prek_status status = PREK_OK;
    const auto rc = guarded(ctx, [&] {
        const auto report = prek::find_collisions(n, k, as_filter(length_filter));
        status = emit(ctx, out, prek::render_collisions({report}, true), PREK_VERDICT_NONE);
    });
    return rc != PREK_OK ? rc : status;
}

prek_status prek_sweep(prek_context* ctx, uint64_t n_from, uint64_t n_to, uint64_t k, uint64_t length_filter,
                       prek_report** out)
{
    if (!out)
        return PREK_ERR_NULL_POINTER;
    prek_status status = PREK_OK;
    const auto rc = guarded(ctx, [&] {
        ctx->last_warnings.clear();
        const auto result = prek::sweep(n_from, n_to, k, as_filter(length_filter), {cache_dir(ctx), ctx->jobs});
        for (const auto& w : result.cache_warnings)
            ctx->last_warnings += w + "\n";
        status = emit(ctx, out, prek::render_collisions(result.reports, false), PREK_VERDICT_NONE);
    });
    return rc != PREK_OK ? rc : status;
}

prek_status prek_family(prek_context* ctx, const prek_family_params* params, prek_report** out)
{
    if (!params || !out)
        return PREK_ERR_NULL_POINTER;
    prek_status status = PREK_OK;
    const auto rc = guarded(ctx, [&] {
        prek::CounterexamplePair pair;
        switch (params->kind) {
        case PREK_FAMILY_ALPHA_BETA: pair = prek::gen_alpha_beta(params->k); break;
        case PREK_FAMILY_SCALED_TRIPLE: pair = prek::gen_scaled_triple(params->m); break;
        case PREK_FAMILY_COPRIME_TRIPLE: pair = prek::gen_coprime_triple(params->m); break;
        case PREK_FAMILY_PQ: pair = prek::gen_pq_family({params->p, params->q, params->m, params->k}); break;
        default: throw std::invalid_argument("unknown family kind");
        }
        const bool valid = prek::validate_pair(pair).pass;
        status = emit(ctx, out, prek::render_family({pair}), valid ? PREK_VERDICT_HOLDS : PREK_VERDICT_VIOLATED);
    });
    return rc != PREK_OK ? rc : status;
}

prek_status prek_census(prek_context* ctx, uint64_t n_max, prek_report** out)
{
    if (!out)
        return PREK_ERR_NULL_POINTER;
    prek_status status = PREK_OK;
    const auto rc = guarded(ctx, [&] {
        const auto sweep = prek::pre2_sweep(n_max, ctx->jobs);
        status = emit(ctx, out, prek::render_census(sweep),
                      sweep.bound_violations.empty() ? PREK_VERDICT_HOLDS : PREK_VERDICT_VIOLATED);
    });
    return rc != PREK_OK ? rc : status;
}

prek_status prek_verify(prek_context* ctx, const char* suite, uint64_t n_max, prek_report** out)
{
    if (!suite || !out)
        return PREK_ERR_NULL_POINTER;
    prek_status status = PREK_OK;
    const auto rc = guarded(ctx, [&] {
        prek::VerifyOptions options;
        if (n_max)
            options.n_max = n_max;
        options.jobs = ctx->jobs;
        options.cache_dir = cache_dir(ctx);
        const auto outcome = prek::run_verify(suite, options);
        status = emit(ctx, out, prek::render_verify(outcome),
                      outcome.passed() ? PREK_VERDICT_HOLDS : PREK_VERDICT_VIOLATED);
    });
    return rc != PREK_OK ? rc : status;
}

prek_status prek_tau(uint64_t n, uint64_t* out)
{
    if (!out)
        return PREK_ERR_NULL_POINTER;
    if (n == 0)
        return PREK_ERR_INVALID_ARGUMENT;
    *out = prek::tau(n);
    return PREK_OK;
}

prek_status prek_pre2_lower_bound(uint64_t n, uint64_t* out)
{
    if (!out)
        return PREK_ERR_NULL_POINTER;
    if (n == 0 || n == UINT64_MAX)
        return PREK_ERR_INVALID_ARGUMENT;
    *out = prek::pre2_lower_bound(n);
    return PREK_OK;
}

prek_verdict prek_report_verdict(const prek_report* report)
{
    return report ? report->verdict : PREK_VERDICT_NONE;
}

prek_status prek_report_render(prek_report* report, prek_format format, const char** text, size_t* length)
{
    if (!report || !text)
        return PREK_ERR_NULL_POINTER;
    prek::OutputFormat f;
    switch (format) {
    case PREK_FORMAT_TABLE: f = prek::OutputFormat::table; break;
    case PREK_FORMAT_JSON: f = prek::OutputFormat::json; break;
    case PREK_FORMAT_CSV: f = prek::OutputFormat::csv; break;
    default: return PREK_ERR_INVALID_ARGUMENT;
    }
    auto& slot = report->text[static_cast<std::size_t>(format)];
    try {
        if (!slot)
            slot = report->rendered.text(f);
    } catch (...) {
        return PREK_ERR_INTERNAL;
    }
    *text = slot->c_str();
    if (length)
        *length = slot->size();
    return PREK_OK;
}

void prek_report_destroy(prek_report* report) { delete report; }

} // extern "C"
