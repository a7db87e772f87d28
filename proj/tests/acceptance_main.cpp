// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <cstdio>
#include <cstring>

#include "springer/acceptance.hpp"

int main(int argc, char** argv) {
    bool allow_large = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--allow-large") == 0) allow_large = true;

    auto results = springer::run_acceptance(allow_large);
    bool all = true;
    int idx = 1;
    for (const auto& r : results) {
        std::printf("[%s] %d. %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", idx++,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: FAILURES PRESENT");
    return all ? 0 : 1;
}
