#include "prek/sweep_cache.hpp"

#include "prek/report.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace prek {

namespace fs = std::filesystem;

CollisionCache::CollisionCache(fs::path dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error("cannot create cache directory " + dir.string() + ": " + ec.message());
    file_ = dir / file_name;

    std::ifstream in(file_);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        try {
            const auto record = json::parse(line);
            if (record.at("schema_version").get<int>() != schema_version) {
                warnings_.push_back(file_.string() + ":" + std::to_string(line_no)
                                    + ": schema version mismatch, ignored");
                continue;
            }
            auto report = injectivity_report_from_json(record);
            const Key key{report.n, report.k, report.length_filter.value_or(0)};
            records_.insert_or_assign(key, std::move(report));
        } catch (const std::exception& e) {
            warnings_.push_back(file_.string() + ":" + std::to_string(line_no) + ": corrupt record ("
                                + e.what() + "), will recompute");
        }
    }
}

std::optional<InjectivityReport> CollisionCache::lookup(std::uint64_t n, std::uint64_t k,
                                                        std::optional<std::uint64_t> length_filter) const
{
    const auto it = records_.find(Key{n, k, length_filter.value_or(0)});
    if (it == records_.end())
        return std::nullopt;
    return it->second;
}

void CollisionCache::append(const InjectivityReport& report)
{
    std::ofstream out(file_, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot append to cache file " + file_.string());
    out << to_json(report, std::nullopt).dump() << '\n';
    out.flush();
    if (!out)
        throw std::runtime_error("write failed on cache file " + file_.string());
    records_.insert_or_assign(Key{report.n, report.k, report.length_filter.value_or(0)}, report);
}

fs::path resolve_cache_dir(const std::optional<fs::path>& flag)
{
    if (flag && !flag->empty())
        return *flag;
    if (const char* env = std::getenv("PREK_CACHE_DIR"); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "prek";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "prek";
    return ".prek-cache";
}

} // namespace prek
