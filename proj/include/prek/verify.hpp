#pragma once

#include "prek/report.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prek {

struct VerifyOptions {
    /// Overrides the suite's default upper bound on n, where it has one.
    std::optional<std::uint64_t> n_max;
    unsigned jobs = 1;
    std::optional<std::filesystem::path> cache_dir;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    std::vector<Partition> witnesses;
};

struct VerifyOutcome {
    std::string suite;
    std::vector<CheckResult> checks;
    /// Suite-specific observations, e.g. the injective n values of a sweep.
    json findings = json::object();

    bool passed() const;
};

/// thm1, thm3, thm4, thm5, conj12, problem1, problem3, laws, all.
const std::vector<std::string>& verify_suites();

/// Default n bound for a suite, or nullopt when it takes none.
std::optional<std::uint64_t> default_n_max(std::string_view suite);

/// Throws std::invalid_argument for an unknown suite name.
VerifyOutcome run_verify(std::string_view suite, const VerifyOptions& options = {});

Rendered render_verify(const VerifyOutcome& outcome);

} // namespace prek
