// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include "speccert/fixtures.hpp"

#include <cstdio>

int main() {
    bool all = true;
    for (const auto& r : speccert::run_fixtures()) {
        std::printf("criterion %d (%s): %s%s%s\n", r.number, r.name.c_str(),
                    r.pass ? "pass" : "FAIL", r.pass ? "" : " — ",
                    r.pass ? "" : r.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
