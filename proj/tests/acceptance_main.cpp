// Acceptance runner: one pass/fail line per criterion.  With no argument it
// runs everything; a suite name or a single check id narrows the run.
#include <cstdio>
#include <string>

#include "waring_eig/verify.hpp"

int main(int argc, char** argv) {
    std::string selector = argc > 1 ? argv[1] : "all";
    std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 42;
    auto results = waring_eig::run_verify(selector, seed);
    if (results.empty()) {
        std::fprintf(stderr, "no checks match selector '%s'\n", selector.c_str());
        return 2;
    }
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("%s  %s [%s] %.3fs  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.suite.c_str(), r.seconds, r.evidence.c_str());
    }
    return all ? 0 : 1;
}
