// speccert: decide injectivity of elliptic-curve specialization maps at
// rational parameters and emit replayable v1 certificates.

#include "CLI11.hpp"
#include "speccert/fixtures.hpp"
#include "speccert/jobfile.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"injectivity certificates for elliptic-curve specialization maps"};
    std::string job_path, out_path, filter, replay_path;
    app.add_option("--job", job_path, "job file to run");
    app.add_option("--out", out_path, "write the certificate document here");
    app.add_option("--filter", filter, "substring filter on fixture names (selftest)");
    app.add_option("--replay", replay_path, "re-run an emitted certificate document");
    CLI::App* selftest = app.add_subcommand("selftest", "run the embedded fixture suite");
    selftest->add_option("--filter", filter, "substring filter on fixture names");
    CLI11_PARSE(app, argc, argv);

    // Cap on worker parallelism; evaluation is sequential, so any valid
    // value is honored. Invalid values are a usage error.
    if (const char* tv = std::getenv("SPECCERT_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(tv, &end, 10);
        if (end == tv || *end != '\0' || n < 1) {
            std::cerr << "error: SPECCERT_THREADS must be a positive integer\n";
            return 1;
        }
    }

    try {
        if (selftest->parsed()) {
            std::ostringstream out;
            bool all = true;
            auto results = speccert::run_fixtures(filter);
            if (results.empty()) {
                std::cerr << "error: no fixture matches filter '" << filter << "'\n";
                return 1;
            }
            for (const auto& r : results) {
                out << "fixture " << r.number << " " << r.name << ": "
                    << (r.pass ? "pass" : "FAIL");
                if (!r.pass) out << " — " << r.detail;
                out << "\n";
                all = all && r.pass;
            }
            out << (all ? "selftest: all fixtures pass\n" : "selftest: FAILURES\n");
            std::cout << out.str();
            return all ? 0 : 1;
        }

        if (!replay_path.empty()) {
            std::string why;
            if (speccert::replay_certificate(read_file(replay_path), &why)) {
                std::cout << "replay: reproduced byte-for-byte\n";
                return 0;
            }
            std::cerr << "replay failed: " << why << "\n";
            return 1;
        }

        if (job_path.empty()) {
            std::cerr << "error: --job FILE (or selftest / --replay) required\n";
            return 1;
        }
        speccert::JobFile job = speccert::parse_jobfile(read_file(job_path));
        speccert::RunResult rr = speccert::run_job(job);
        if (out_path.empty()) {
            std::cout << rr.output;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + out_path);
            out << rr.output;
        }
        return rr.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
