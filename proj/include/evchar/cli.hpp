#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "evchar/partition.hpp"

namespace evchar {

/// Global run settings shared by every subcommand.
struct RunConfig {
    int max_n = 16;          // size guard: partitions lambda of n <= max_n
    int workers = 1;         // worker threads for character sums
    std::string cache_path;  // empty = no persistence (default from EVCHAR_CACHE)
    std::string output = "json";  // json | csv | text
};

/// Exit codes: 0 = computed (a failing identity is still a successful
/// computation), 2 = usage error, 3 = size guard tripped.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

/// Runs one CLI invocation; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses the CLI partition syntax: "5,2,1" or exponent shorthand
/// "3^2,2^3,1", expanded immediately to the canonical form.
Partition parse_cli_partition(const std::string& text);

}  // namespace evchar
