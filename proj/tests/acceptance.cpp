// Acceptance suite: one criterion per invocation (1..12), or "all".
// Prints one PASS/FAIL line per criterion check; exits nonzero on failure.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "spot/verify.hpp"

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    std::vector<spot::CheckResult> checks;
    try {
        checks = spot::run_acceptance(which);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance %s: error: %s\n", which.c_str(), e.what());
        return 2;
    }
    bool all_pass = true;
    for (const auto& c : checks) {
        std::printf("%-4s %-58s expected %-14.8g got %-14.8g tol %-10.4g\n",
                    c.pass ? "PASS" : "FAIL", c.check.c_str(), c.expected, c.got, c.tol);
        all_pass = all_pass && c.pass;
    }
    if (checks.empty()) {
        std::fprintf(stderr, "no checks selected by '%s'\n", which.c_str());
        return 2;
    }
    return all_pass ? 0 : 1;
}
