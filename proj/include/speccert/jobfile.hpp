#ifndef SPECCERT_JOBFILE_HPP
#define SPECCERT_JOBFILE_HPP

// INI-like job documents driving the CLI: [curve], optional [points],
// [parametrization], [generators], and [job] sections with quoted
// expression strings. See README.md for the grammar.

#include "speccert/extend.hpp"

#include <map>
#include <string>
#include <vector>

namespace speccert {

struct job_error : std::runtime_error {
    int line;  // 1-based, 0 when not tied to a line
    job_error(const std::string& what, int line_no)
        : std::runtime_error(line_no > 0
                                 ? what + " (line " + std::to_string(line_no) + ")"
                                 : what),
          line(line_no) {}
};

struct JobFile {
    // [curve]
    std::string field;  // "Q(t)" or "Q(alpha)"
    std::string var;    // "t" or "alpha"
    CurveModel model = CurveModel::Short;
    std::string coeff_a, coeff_b;

    // [points]: name -> point expression over var
    std::vector<std::pair<std::string, std::string>> points;

    // [parametrization]
    bool has_parametrization = false;
    std::string u_text, v_text;
    std::string target_text;   // "two-torsion" or an explicit phi expression
    std::string halving_text;  // R' point expression over alpha (prop7)

    // [generators]
    std::vector<std::string> generator_names;
    bool independence_asserted = false;

    // [job]
    std::string route;
    std::string base_point;          // prop7: name of P
    std::string factor_expr;         // route = factor
    std::vector<Rat> values;         // t0 or alpha0 list, input order
    bool values_are_alpha0 = false;

    std::string canonical_text;  // deterministic re-serialization
};

JobFile parse_jobfile(const std::string& text);

struct RunResult {
    std::string output;  // full certificate document
    int exit_code;       // 0 all injective, 2 any indeterminate, 1 usage error
};

// Executes the job; never throws for per-value Indeterminate outcomes,
// throws job_error for structural problems.
RunResult run_job(const JobFile& job);

// Re-executes the job embedded in a certificate document and compares
// byte-for-byte. Returns true on exact reproduction.
bool replay_certificate(const std::string& certificate_text, std::string* diff_reason);

}  // namespace speccert

#endif
