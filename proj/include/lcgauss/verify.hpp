#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcgauss {

enum class Suite { Odes, ClosedForms, Families, Theorems, All };

const char* to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

enum class Bound { AtMost, AtLeast };

struct Check {
    std::string suite;
    std::string name;
    std::string anchor;  // the statement being checked
    std::string detail;  // constants or the error that aborted the check
    double measured = 0.0;
    double tolerance = 0.0;
    Bound bound = Bound::AtMost;

    bool passed() const;
};

struct VerifyReport {
    Suite suite = Suite::All;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool passed() const;
    std::size_t failures() const;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

VerifyReport run_verify(Suite suite, std::uint64_t seed = kDefaultSeed);

/// Fixed-width table preceded by a header naming suite and seed. Contains no
/// timings, so equal inputs give byte-identical text.
std::string format_report(const VerifyReport& report);

}  // namespace lcgauss
