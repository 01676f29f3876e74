#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace stircalc {

// One exact comparison. lhs/rhs are filled (as "p/q" or decimal strings)
// only on mismatch.
struct CheckEntry {
    std::string item;
    std::size_t n = 0;
    bool ok = true;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string suite;
    std::size_t n_max = 0;
    std::vector<std::string> labels;
    std::vector<CheckEntry> entries;

    bool all_ok() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }
    std::size_t failed_count() const {
        std::size_t c = 0;
        for (const auto& e : entries)
            if (!e.ok) ++c;
        return c;
    }
};

// Concatenates entries (and labels) of several reports under one suite name.
VerificationReport merge_reports(std::string suite, const std::vector<VerificationReport>& parts);

} // namespace stircalc
