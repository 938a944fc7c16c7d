#include "prek/report.hpp"

#include "prek/families.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace prek {

namespace {

json bignat_to_json(const BigNat& v)
{
    if (v <= std::numeric_limits<std::uint64_t>::max())
        return v.convert_to<std::uint64_t>();
    return v.str();
}

BigNat bignat_from_json(const json& j)
{
    if (j.is_number_unsigned())
        return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return j.get<std::int64_t>();
    if (j.is_string())
        return parse_bignat(j.get<std::string>());
    throw std::invalid_argument("expected a natural number");
}

json length_filter_json(const std::optional<std::uint64_t>& filter)
{
    return filter ? json(*filter) : json("all");
}

std::string length_filter_text(const std::optional<std::uint64_t>& filter)
{
    return filter ? std::to_string(*filter) : std::string("all");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name)
{
    if (name == "table")
        return OutputFormat::table;
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    return std::nullopt;
}

json partition_to_json(const Partition& p)
{
    json out = json::array();
    for (const auto& part : p.parts())
        out.push_back(bignat_to_json(part));
    return out;
}

Partition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("partition must be a JSON array");
    std::vector<BigNat> parts;
    for (const auto& v : j)
        parts.push_back(bignat_from_json(v));
    if (!is_weakly_decreasing(parts))
        throw std::invalid_argument("partition parts are not weakly decreasing");
    return make_partition(std::move(parts));
}

json to_json(const InjectivityReport& report, std::optional<std::size_t> cap)
{
    json classes = json::array();
    for (const auto& c : report.classes) {
        json preimages = json::array();
        const std::size_t shown = cap ? std::min(*cap, c.preimages.size()) : c.preimages.size();
        for (std::size_t i = 0; i < shown; ++i)
            preimages.push_back(partition_to_json(c.preimages[i]));
        classes.push_back({{"image", partition_to_json(c.image)},
                           {"preimage_count", c.preimages.size()},
                           {"preimages", std::move(preimages)}});
    }
    return {{"schema_version", schema_version},
            {"n", report.n},
            {"k", report.k},
            {"length_filter", length_filter_json(report.length_filter)},
            {"partitions_examined", report.partitions_examined},
            {"degenerate_count", report.degenerate_count},
            {"injective", report.injective},
            {"classes", std::move(classes)}};
}

InjectivityReport injectivity_report_from_json(const json& j)
{
    try {
        InjectivityReport r;
        if (j.at("schema_version").get<int>() != schema_version)
            throw std::invalid_argument("unsupported schema version");
        r.n = j.at("n").get<std::uint64_t>();
        r.k = j.at("k").get<std::uint64_t>();
        const auto& filter = j.at("length_filter");
        if (filter.is_string()) {
            if (filter.get<std::string>() != "all")
                throw std::invalid_argument("length_filter must be a number or \"all\"");
        } else {
            r.length_filter = filter.get<std::uint64_t>();
        }
        r.partitions_examined = j.at("partitions_examined").get<std::uint64_t>();
        r.degenerate_count = j.at("degenerate_count").get<std::uint64_t>();
        r.injective = j.at("injective").get<bool>();
        for (const auto& c : j.at("classes")) {
            CollisionClass cls;
            cls.image = partition_from_json(c.at("image"));
            for (const auto& p : c.at("preimages"))
                cls.preimages.push_back(partition_from_json(p));
            if (c.at("preimage_count").get<std::size_t>() != cls.preimages.size())
                throw std::invalid_argument("truncated preimage list");
            if (cls.preimages.size() < 2)
                throw std::invalid_argument("collision class with fewer than two preimages");
            r.classes.push_back(std::move(cls));
        }
        if (r.k == 0 || (r.length_filter && *r.length_filter == 0))
            throw std::invalid_argument("k and length filter must be positive");
        if (r.injective != r.classes.empty())
            throw std::invalid_argument("injective flag disagrees with classes");
        if (r.degenerate_count > r.partitions_examined)
            throw std::invalid_argument("degenerate count exceeds partitions examined");
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(e.what());
    }
}

json to_json(const PrekResult& result, const Partition& source)
{
    const bool degenerate = result.source_length < result.k;
    BigNat product = 1;
    for (const auto& part : result.image.parts())
        product *= part;
    return {{"schema_version", schema_version},
            {"command", "map"},
            {"source", partition_to_json(source)},
            {"k", result.k},
            {"source_length", result.source_length},
            {"degenerate", degenerate},
            {"image", partition_to_json(result.image)},
            {"image_parts", result.image.length()},
            {"image_weight", bignat_to_json(result.image.weight())},
            {"image_product", degenerate ? json(nullptr) : bignat_to_json(product)}};
}

json to_json(const CounterexamplePair& pair)
{
    json params = json::object();
    for (const auto& [name, value] : pair.params)
        params[name] = value;
    const auto verdict = validate_pair(pair);
    return {{"family", pair.family},
            {"params", std::move(params)},
            {"k", pair.k},
            {"weight", bignat_to_json(pair.weight)},
            {"first", partition_to_json(pair.first)},
            {"second", partition_to_json(pair.second)},
            {"shared_image", partition_to_json(pair.shared_image)},
            {"valid", verdict.pass},
            {"violation", verdict.pass ? json(nullptr) : json(verdict.clause)}};
}

json to_json(const CensusRecord& record)
{
    json images = json::array();
    json preimages = json::array();
    for (std::size_t i = 0; i < record.images.size(); ++i) {
        images.push_back(partition_to_json(record.images[i]));
        preimages.push_back(partition_to_json(record.first_preimages[i]));
    }
    json witnesses = json::array();
    for (const auto& [pre, img] : record.divisor_witnesses)
        witnesses.push_back({{"preimage", partition_to_json(pre)}, {"image", partition_to_json(img)}});
    return {{"n", record.n},
            {"exact_count", record.exact_count},
            {"lower_bound", record.lower_bound},
            {"gap", static_cast<std::int64_t>(record.exact_count) - static_cast<std::int64_t>(record.lower_bound)},
            {"images", std::move(images)},
            {"preimages", std::move(preimages)},
            {"divisor_witnesses", std::move(witnesses)}};
}

std::string table_partition(const Partition& p)
{
    if (p.empty())
        return "()";
    if (p.length() <= table_part_limit)
        return p.to_string();
    std::string out;
    for (std::size_t i = 0; i < table_part_limit; ++i)
        out += p[i].str() + ",";
    out += "... (" + std::to_string(p.length()) + " parts)";
    return out;
}

std::string csv_partition(const Partition& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            out += ' ';
        out += p[i].str();
    }
    return out;
}

std::string Rendered::text(OutputFormat format) const
{
    switch (format) {
    case OutputFormat::json:
        return document.dump(2) + "\n";
    case OutputFormat::csv:
        return csv;
    case OutputFormat::table:
        break;
    }
    return table;
}

Rendered render_map(const Partition& source, const PrekResult& result)
{
    Rendered r;
    r.document = to_json(result, source);
    const bool degenerate = result.source_length < result.k;
    std::ostringstream t;
    t << "source        " << table_partition(source) << "\n"
      << "k             " << result.k << "\n";
    if (degenerate) {
        t << "image         () degenerate: source has " << result.source_length << " parts, fewer than k\n";
    } else {
        t << "image         " << table_partition(result.image) << "\n"
          << "image parts   " << result.image.length() << " = C(" << result.source_length << "," << result.k
          << ")\n"
          << "image weight  " << result.image.weight() << "\n"
          << "image product " << r.document["image_product"].dump() << "\n";
    }
    r.table = t.str();
    std::ostringstream c;
    c << "source,k,source_length,degenerate,image,image_parts,image_weight,image_product\n"
      << csv_partition(source) << "," << result.k << "," << result.source_length << "," << degenerate << ","
      << csv_partition(result.image) << "," << result.image.length() << "," << result.image.weight() << ",";
    if (!degenerate) {
        const auto& product = r.document["image_product"];
        c << (product.is_string() ? product.get<std::string>() : product.dump());
    }
    c << "\n";
    r.csv = c.str();
    return r;
}

Rendered render_collisions(const std::vector<InjectivityReport>& reports, bool single)
{
    Rendered r;
    if (single && reports.size() == 1) {
        r.document = to_json(reports.front());
    } else {
        json list = json::array();
        json injective_n = json::array();
        for (const auto& rep : reports) {
            list.push_back(to_json(rep));
            if (rep.injective)
                injective_n.push_back(rep.n);
        }
        r.document = {{"schema_version", schema_version},
                      {"command", "sweep"},
                      {"injective_n", std::move(injective_n)},
                      {"reports", std::move(list)}};
    }

    std::ostringstream t;
    t << std::left << std::setw(8) << "n" << std::setw(4) << "k" << std::setw(8) << "length" << std::setw(10)
      << "examined" << std::setw(12) << "degenerate" << std::setw(11) << "injective"
      << "classes\n";
    for (const auto& rep : reports) {
        t << std::left << std::setw(8) << rep.n << std::setw(4) << rep.k << std::setw(8)
          << length_filter_text(rep.length_filter) << std::setw(10) << rep.partitions_examined << std::setw(12)
          << rep.degenerate_count << std::setw(11) << yes_no(rep.injective) << rep.classes.size() << "\n";
        for (const auto& c : rep.classes) {
            t << "    image " << table_partition(c.image) << " <-";
            const std::size_t shown = std::min(witness_cap, c.preimages.size());
            for (std::size_t i = 0; i < shown; ++i)
                t << (i ? " | " : " ") << table_partition(c.preimages[i]);
            if (shown < c.preimages.size())
                t << " | ... (" << c.preimages.size() << " preimages)";
            t << "\n";
        }
    }
    r.table = t.str();

    std::ostringstream c;
    c << "n,k,length_filter,partitions_examined,degenerate_count,injective,class_count,images\n";
    for (const auto& rep : reports) {
        c << rep.n << "," << rep.k << "," << length_filter_text(rep.length_filter) << "," << rep.partitions_examined
          << "," << rep.degenerate_count << "," << (rep.injective ? "true" : "false") << "," << rep.classes.size()
          << ",";
        for (std::size_t i = 0; i < rep.classes.size(); ++i)
            c << (i ? ";" : "") << csv_partition(rep.classes[i].image);
        c << "\n";
    }
    r.csv = c.str();
    return r;
}

Rendered render_family(const std::vector<CounterexamplePair>& pairs)
{
    Rendered r;
    json list = json::array();
    for (const auto& p : pairs)
        list.push_back(to_json(p));
    r.document = {{"schema_version", schema_version}, {"command", "family"}, {"pairs", std::move(list)}};

    auto params_text = [](const CounterexamplePair& p, const char* sep) {
        std::string out;
        for (std::size_t i = 0; i < p.params.size(); ++i)
            out += (i ? sep : "") + p.params[i].first + "=" + std::to_string(p.params[i].second);
        return out;
    };
    std::ostringstream t;
    for (const auto& p : pairs) {
        const auto verdict = validate_pair(p);
        t << p.family << " (" << params_text(p, ", ") << ")\n"
          << "  first   " << table_partition(p.first) << "\n"
          << "  second  " << table_partition(p.second) << "\n"
          << "  weight  " << p.weight << "\n"
          << "  pre_" << p.k << "   " << table_partition(p.shared_image) << "\n"
          << "  valid   " << (verdict.pass ? std::string("yes") : "no: " + verdict.clause) << "\n";
    }
    r.table = t.str();

    std::ostringstream c;
    c << "family,params,k,weight,first,second,shared_image,valid\n";
    for (const auto& p : pairs)
        c << p.family << "," << params_text(p, ";") << "," << p.k << "," << p.weight << "," << csv_partition(p.first)
          << "," << csv_partition(p.second) << "," << csv_partition(p.shared_image) << ","
          << (validate_pair(p).pass ? "true" : "false") << "\n";
    r.csv = c.str();
    return r;
}

Rendered render_census(const CensusSweep& sweep)
{
    Rendered r;
    json records = json::array();
    for (const auto& rec : sweep.records)
        records.push_back(to_json(rec));
    r.document = {{"schema_version", schema_version},
                  {"command", "census"},
                  {"records", std::move(records)},
                  {"summary",
                   {{"singletons", sweep.singletons}, {"bound_violations", sweep.bound_violations}}}};

    std::ostringstream t;
    t << std::left << std::setw(8) << "n" << std::setw(8) << "exact" << std::setw(13) << "lower_bound"
      << "gap\n";
    for (const auto& rec : sweep.records)
        t << std::left << std::setw(8) << rec.n << std::setw(8) << rec.exact_count << std::setw(13)
          << rec.lower_bound << static_cast<std::int64_t>(rec.exact_count) - static_cast<std::int64_t>(rec.lower_bound)
          << "\n";
    auto list = [](const std::vector<std::uint64_t>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? ", " : "") + std::to_string(v[i]);
        return out.empty() ? std::string("none") : out;
    };
    t << "n with exactly one image: " << list(sweep.singletons) << "\n"
      << "lower bound violations:   " << list(sweep.bound_violations) << "\n";
    r.table = t.str();

    std::ostringstream c;
    c << "n,exact,lower_bound,gap\n";
    for (const auto& rec : sweep.records)
        c << rec.n << "," << rec.exact_count << "," << rec.lower_bound << ","
          << static_cast<std::int64_t>(rec.exact_count) - static_cast<std::int64_t>(rec.lower_bound) << "\n";
    r.csv = c.str();
    return r;
}

} // namespace prek
