// End-to-end acceptance runner: executes the nine verification criteria and
// prints one pass/fail line per criterion with supporting detail.  The exit
// code is the number of failed criteria.

#include <chrono>
#include <cstdio>

#include "ramify/verification.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    int failures = 0;
    auto t0 = clock::now();
    auto results = ramify::run_verification(256);
    for (const auto& c : results) {
        std::printf("[%s] criterion %d: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str());
        for (const auto& line : c.lines) std::printf("%s\n", line.c_str());
        if (!c.pass) ++failures;
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("%d/9 criteria passed in %.1f s\n", 9 - failures, secs);
    return failures;
}
