// Acceptance driver: runs every verification criterion at full scale and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <cstring>
#include <iostream>
#include <thread>

#include "evchar/acceptance.hpp"
#include "evchar/characters.hpp"

int main(int argc, char** argv) {
    evchar::SuiteLevel level = evchar::SuiteLevel::kFull;
    int workers = static_cast<int>(std::min(4u, std::thread::hardware_concurrency()));
    if (workers < 1) workers = 1;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) level = evchar::SuiteLevel::kQuick;
        else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc)
            workers = std::atoi(argv[++i]);
    }

    evchar::CharEngine engine;
    bool all_passed = true;
    auto results = evchar::run_acceptance(engine, level, workers,
                                          [&](const evchar::CriterionResult& r) {
                                              std::cout << evchar::format_result_line(r)
                                                        << std::endl;
                                              all_passed = all_passed && r.passed;
                                          });
    std::cout << (all_passed ? "acceptance: all criteria passed"
                             : "acceptance: some criteria FAILED")
              << std::endl;
    return all_passed ? 0 : 1;
}
