// prek: command-line front end over the prek C API.
//
// Exit codes: 0 success, 1 operational error, 2 a checked property was
// violated (the report carries the witnesses).

#include "prek/prek.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_violated = 2;

struct ContextDeleter {
    void operator()(prek_context* ctx) const { prek_context_destroy(ctx); }
};
struct ReportDeleter {
    void operator()(prek_report* r) const { prek_report_destroy(r); }
};
using ContextPtr = std::unique_ptr<prek_context, ContextDeleter>;
using ReportPtr = std::unique_ptr<prek_report, ReportDeleter>;

struct GlobalOptions {
    std::string format = "table";
    std::string output;
    std::string cache_dir;
    unsigned jobs = 1;
};

int fail(prek_context* ctx, prek_status status)
{
    std::cerr << "prek: " << prek_status_string(status);
    if (ctx && *prek_context_last_error(ctx))
        std::cerr << ": " << prek_context_last_error(ctx);
    std::cerr << "\n";
    return exit_error;
}

int emit(prek_context* ctx, prek_status status, prek_report* raw, const GlobalOptions& opts)
{
    if (status != PREK_OK)
        return fail(ctx, status);
    ReportPtr report(raw);
    if (const char* warnings = prek_context_last_warnings(ctx); warnings && *warnings)
        std::cerr << warnings;

    static const std::map<std::string, prek_format> formats{
        {"table", PREK_FORMAT_TABLE}, {"json", PREK_FORMAT_JSON}, {"csv", PREK_FORMAT_CSV}};
    const char* text = nullptr;
    std::size_t length = 0;
    if (auto rc = prek_report_render(report.get(), formats.at(opts.format), &text, &length); rc != PREK_OK)
        return fail(ctx, rc);

    if (opts.output.empty()) {
        std::cout.write(text, static_cast<std::streamsize>(length));
        std::cout.flush();
    } else {
        std::ofstream out(opts.output, std::ios::binary);
        out.write(text, static_cast<std::streamsize>(length));
        if (!out) {
            std::cerr << "prek: cannot write " << opts.output << "\n";
            return exit_error;
        }
    }
    return prek_report_verdict(report.get()) == PREK_VERDICT_VIOLATED ? exit_violated : exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"prek: elementary symmetric maps on integer partitions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(prek_version()));

    GlobalOptions opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output,-o", opts.output, "Write the report to a file instead of stdout");
    app.add_option("--cache-dir", opts.cache_dir, "Sweep cache directory (default: $PREK_CACHE_DIR, $XDG_CACHE_HOME/prek, ~/.cache/prek)");
    app.add_option("--jobs,-j", opts.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    std::string parts;
    std::uint64_t map_k = 1;
    auto* map_cmd = app.add_subcommand("map", "Apply pre_k to one partition");
    map_cmd->add_option("--parts", parts, "Comma-separated parts, e.g. 7,4,4")->required();
    map_cmd->add_option("--k", map_k, "Index k >= 1")->required()->check(CLI::PositiveNumber);

    std::uint64_t n = 0, k = 1, length = PREK_ALL_LENGTHS;
    auto* collide_cmd = app.add_subcommand("collide", "Exhaustive collision search for one n");
    collide_cmd->add_option("--n", n, "Weight n")->required();
    collide_cmd->add_option("--k", k, "Index k >= 1")->required()->check(CLI::PositiveNumber);
    collide_cmd->add_option("--length", length, "Only partitions with exactly this many parts")
        ->check(CLI::PositiveNumber);

    std::uint64_t n_from = 0, n_to = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Cached collision search over a range of n");
    sweep_cmd->add_option("--from", n_from, "First n")->required();
    sweep_cmd->add_option("--to", n_to, "Last n")->required();
    sweep_cmd->add_option("--k", k, "Index k >= 1")->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--length", length, "Only partitions with exactly this many parts")
        ->check(CLI::PositiveNumber);

    std::string family_kind;
    prek_family_params family{PREK_FAMILY_ALPHA_BETA, 3, 2, 3, 3};
    auto* family_cmd = app.add_subcommand("family", "Generate and validate a counterexample pair");
    family_cmd->add_option("kind", family_kind, "alpha-beta | scaled | coprime | pq")
        ->required()
        ->check(CLI::IsMember({"alpha-beta", "scaled", "coprime", "pq"}));
    family_cmd->add_option("--p", family.p, "Larger prime (pq)")->capture_default_str();
    family_cmd->add_option("--q", family.q, "Smaller prime (pq)")->capture_default_str();
    family_cmd->add_option("--m", family.m, "Scale parameter")->capture_default_str();
    family_cmd->add_option("--k", family.k, "Number of parts (alpha-beta, pq)")->capture_default_str();

    std::uint64_t n_max = 0;
    auto* census_cmd = app.add_subcommand("census", "Exact pre_2(n) with divisor lower bounds");
    census_cmd->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);

    std::string suite;
    std::uint64_t verify_n_max = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd
        ->add_option("suite", suite, "thm1 | thm3 | thm4 | thm5 | conj12 | problem1 | problem3 | laws | all")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm3", "thm4", "thm5", "conj12", "problem1", "problem3", "laws", "all"}));
    verify_cmd->add_option("--n-max", verify_n_max, "Override the suite's default upper bound on n")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_error;
    }

    prek_context* raw_ctx = nullptr;
    if (prek_context_create(&raw_ctx) != PREK_OK) {
        std::cerr << "prek: cannot create context\n";
        return exit_error;
    }
    ContextPtr ctx(raw_ctx);
    if (auto rc = prek_context_set_jobs(ctx.get(), opts.jobs); rc != PREK_OK)
        return fail(ctx.get(), rc);
    if (auto rc = prek_context_set_cache_dir(ctx.get(), opts.cache_dir.c_str()); rc != PREK_OK)
        return fail(ctx.get(), rc);

    prek_report* report = nullptr;
    prek_status status = PREK_OK;
    if (*map_cmd) {
        status = prek_map(ctx.get(), parts.c_str(), map_k, &report);
    } else if (*collide_cmd) {
        status = prek_collide(ctx.get(), n, k, length, &report);
    } else if (*sweep_cmd) {
        status = prek_sweep(ctx.get(), n_from, n_to, k, length, &report);
    } else if (*family_cmd) {
        static const std::map<std::string, prek_family_kind> kinds{{"alpha-beta", PREK_FAMILY_ALPHA_BETA},
                                                                   {"scaled", PREK_FAMILY_SCALED_TRIPLE},
                                                                   {"coprime", PREK_FAMILY_COPRIME_TRIPLE},
                                                                   {"pq", PREK_FAMILY_PQ}};
        family.kind = kinds.at(family_kind);
        status = prek_family(ctx.get(), &family, &report);
    } else if (*census_cmd) {
        status = prek_census(ctx.get(), n_max, &report);
    } else if (*verify_cmd) {
        status = prek_verify(ctx.get(), suite.c_str(), verify_n_max, &report);
    }
    return emit(ctx.get(), status, report, opts);
}
