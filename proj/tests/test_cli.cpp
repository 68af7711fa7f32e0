#include "doctest.h"
#include "speccert/certificate.hpp"
#include "speccert/jobfile.hpp"

using namespace speccert;

namespace {

const char* kProp5Job =
    "[curve]\n"
    "field = Q(t)\n"
    "model = short\n"
    "A = \"-t^2\"\n"
    "B = \"t^2\"\n"
    "\n"
    "[parametrization]\n"
    "u = \"1/(alpha-alpha^3)\"\n"
    "v = \"1/(1-alpha^2)\"\n"
    "target = two-torsion\n"
    "\n"
    "[job]\n"
    "route = prop5\n"
    "alpha0 = -3/2, -2\n";

}  // namespace

TEST_CASE("job parsing and canonicalization is a fixed point") {
    JobFile j = parse_jobfile(kProp5Job);
    CHECK(j.route == "prop5");
    CHECK(j.values == std::vector<Rat>({Rat(-3, 2), Rat(-2)}));
    CHECK(j.values_are_alpha0);
    JobFile again = parse_jobfile(j.canonical_text);
    CHECK(again.canonical_text == j.canonical_text);
}

TEST_CASE("job validation errors") {
    CHECK_THROWS_AS(parse_jobfile("[job]\nroute = prop5\n"), job_error);
    CHECK_THROWS_AS(parse_jobfile("[curve]\nfield = Q(t)\nmodel = short\n"
                                  "A = \"1\"\nB = \"1\"\n[job]\nroute = warp\nt0 = 1\n"),
                    job_error);
    CHECK_THROWS_AS(parse_jobfile("[curve]\nfield = Q(t)\nmodel = short\n"
                                  "A = \"1\"\nB = \"1\"\n[job]\nroute = descent2\n"
                                  "t0 = 1\nalpha0 = 2\n"),
                    job_error);
    CHECK_THROWS_AS(parse_jobfile("[curve]\nbogus = 1\n[job]\nroute = factor\n"
                                  "expr = \"t\"\n"),
                    job_error);
    try {
        parse_jobfile("[curve]\nfield = Q(t)\nmodel\n");
    } catch (const job_error& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("run exit codes and determinism") {
    JobFile j = parse_jobfile(kProp5Job);
    RunResult a = run_job(j);
    CHECK(a.exit_code == 2);  // one Injective, one Indeterminate
    RunResult b = run_job(j);
    CHECK(a.output == b.output);
    CHECK(a.output.find("verdict: Injective") != std::string::npos);
    CHECK(a.output.find("verdict: Indeterminate") != std::string::npos);
    CHECK(a.output.find("t0: 8/15") != std::string::npos);
    CHECK(a.output.find("t0: 1/6") != std::string::npos);

    JobFile ok = parse_jobfile(
        "[curve]\nfield = Q(t)\nmodel = short\nA = \"-t^2\"\nB = \"0\"\n"
        "[job]\nroute = descent2\nt0 = 3\n");
    CHECK(run_job(ok).exit_code == 0);
}

TEST_CASE("certificates replay and detect tampering") {
    RunResult rr = run_job(parse_jobfile(kProp5Job));
    std::string why;
    CHECK(replay_certificate(rr.output, &why));
    std::string tampered = rr.output;
    size_t pos = tampered.find("verdict: Injective");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 18, "verdict: Injectivq");
    CHECK_FALSE(replay_certificate(tampered, &why));
    CHECK_FALSE(why.empty());
    CHECK_FALSE(replay_certificate("not a certificate", &why));
}

TEST_CASE("embedded job extraction") {
    RunResult rr = run_job(parse_jobfile(kProp5Job));
    std::string job_text;
    REQUIRE(extract_embedded_job(rr.output, &job_text));
    CHECK(job_text == parse_jobfile(kProp5Job).canonical_text);
    CHECK(rr.output.find(hex64(fnv1a64(job_text))) != std::string::npos);
}

TEST_CASE("hash primitives") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") != fnv1a64("b"));
    CHECK(hex64(0) == "0000000000000000");
    CHECK(hex64(0xdeadbeefULL) == "00000000deadbeef");
}
