#ifndef SPECCERT_FIXTURES_HPP
#define SPECCERT_FIXTURES_HPP

// Embedded end-to-end fixture suite: the worked examples the library is
// built around, runnable from the CLI (selftest) and from the test suite.

#include <string>
#include <vector>

namespace speccert {

struct FixtureResult {
    int number;        // 1..10
    std::string name;  // stable id for --filter substring matching
    bool pass;
    std::string detail;  // first failed expectation, empty on pass
};

// Runs fixtures whose name contains `filter` (all when empty), in order.
std::vector<FixtureResult> run_fixtures(const std::string& filter = "");

}  // namespace speccert

#endif
