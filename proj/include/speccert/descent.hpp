#ifndef SPECCERT_DESCENT_HPP
#define SPECCERT_DESCENT_HPP

// Square-class factor bases and the 2-descent / 2-isogeny sufficient
// criteria: "every nonempty subset product of the base is a nonsquare at
// t0". The pair formulation of the 2-descent criterion reduces to this
// single-base test; the equivalence is exercised against brute-force pair
// enumeration in the test suite.

#include "speccert/curve.hpp"
#include "speccert/factorize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace speccert {

struct Generator {
    enum class Kind { MinusOne, Prime, Polynomial };
    Kind kind;
    Int prime;        // Kind::Prime
    Poly poly;        // Kind::Polynomial, primitive irreducible, positive lc
    std::string provenance;

    Rat eval(const Rat& t0) const;
    std::string render() const;
    bool same_class(const Generator& o) const;
};

struct FactorBase {
    std::vector<Generator> gens;

    // Appends unless an equal square class is already present.
    void add(Generator g);
    size_t size() const { return gens.size(); }
    std::string render() const;
};

enum class Verdict { Holds, Fails, Indeterminate };

struct ProductCheck {
    uint64_t mask;  // bit i selects gens[i]
    Rat value;
    bool square;
};

struct BaseCheck {
    Verdict verdict = Verdict::Holds;
    std::vector<std::string> gen_names;   // rendered generators, base order
    std::vector<Rat> gen_values;          // their values at t0 (empty on vanish)
    std::vector<ProductCheck> checks;  // every product examined, mask ascending
    uint64_t witness_mask = 0;         // Fails: least failing mask
    Rat witness_value;
    std::string reason;                // Indeterminate
};

struct CriterionReport {
    Verdict verdict = Verdict::Holds;
    // one side for the 2-descent criterion, two (G_phi, G_phihat) for 2-isogeny
    std::vector<std::pair<std::string, BaseCheck>> sides;
};

// -1 plus the deduplicated irreducible factors (content primes included)
// of e1-e2, e2-e3, e1-e3. Throws on a repeated root (singular curve).
FactorBase build_base_2descent(const Poly& e1, const Poly& e2, const Poly& e3);

// Bases for descent by 2-isogeny from b and a^2-4b. Throws
// criterion_inapplicable when a^2-4b is a square in Q(t) (use the
// 2-descent criterion instead).
struct criterion_inapplicable : std::domain_error {
    explicit criterion_inapplicable(const std::string& what)
        : std::domain_error(what) {}
};
std::pair<FactorBase, FactorBase> build_base_2isogeny(const Poly& a, const Poly& b);

// Factor base from Delta/16 of an integral model (the Prop-9-style
// packaging: valid generators for both isogeny-side groups).
FactorBase base_from_discriminant(const CurveT& e);

// Single-base engine: every nonempty subset product nonsquare at t0.
BaseCheck check_base(const FactorBase& base, const Rat& t0);

CriterionReport check_criterion_2descent(const FactorBase& base, const Rat& t0);
CriterionReport check_criterion_2isogeny(const FactorBase& g_phi,
                                         const FactorBase& g_phihat,
                                         const Rat& t0);

}  // namespace speccert

#endif
