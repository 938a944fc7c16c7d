#pragma once

#include "prek/partition.hpp"

#include <string>
#include <vector>

namespace prek {

/// Outcome of a property check. On failure `clause` names the violated
/// condition and `witnesses` holds the partitions that exhibit it.
struct Verdict {
    bool pass = true;
    std::string clause;
    std::vector<Partition> witnesses;

    static Verdict ok() { return {}; }
    static Verdict fail(std::string clause, std::vector<Partition> witnesses = {})
    {
        return {false, std::move(clause), std::move(witnesses)};
    }
    explicit operator bool() const noexcept { return pass; }
};

} // namespace prek
