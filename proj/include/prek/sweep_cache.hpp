#pragma once

#include "prek/collision.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace prek {

/// Append-only, line-delimited JSON store of injectivity reports.
///
/// One record per line, keyed by (n, k, length filter, schema version).
/// Lines that fail to parse or carry another schema version are skipped
/// with a warning; the affected n values are simply recomputed.
class CollisionCache {
public:
    explicit CollisionCache(std::filesystem::path dir);

    std::optional<InjectivityReport> lookup(std::uint64_t n, std::uint64_t k,
                                            std::optional<std::uint64_t> length_filter) const;
    void append(const InjectivityReport& report);

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    const std::filesystem::path& file() const noexcept { return file_; }

    static constexpr const char* file_name = "collisions.jsonl";

private:
    using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>; // n, k, length (0 = all)

    std::filesystem::path file_;
    std::map<Key, InjectivityReport> records_;
    std::vector<std::string> warnings_;
};

/// --cache-dir value if given, else $PREK_CACHE_DIR, else $XDG_CACHE_HOME/prek,
/// else $HOME/.cache/prek, else ./.prek-cache.
std::filesystem::path resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

} // namespace prek
