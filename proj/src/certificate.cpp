#include "speccert/certificate.hpp"

#include <sstream>

namespace speccert {

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::string render_document_header(const std::string& canonical_job_text) {
    std::ostringstream out;
    out << "speccert certificate v1\n";
    out << "input-hash: fnv1a64:" << hex64(fnv1a64(canonical_job_text)) << "\n";
    out << "input-begin\n";
    out << canonical_job_text;
    if (canonical_job_text.empty() || canonical_job_text.back() != '\n') out << "\n";
    out << "input-end\n";
    return out.str();
}

namespace {

const char* route_name(Route r) {
    switch (r) {
        case Route::Descent2: return "descent2";
        case Route::Isogeny2: return "isogeny2";
        case Route::Prop5: return "prop5";
        case Route::Prop7: return "prop7";
        case Route::Prop2Check: return "prop2check";
    }
    return "?";
}

std::string pt_str(const PtQ& p) {
    if (p.inf) return "O";
    return "(" + rat_to_string(p.x) + ", " + rat_to_string(p.y) + ")";
}

std::string mask_names(uint64_t mask, const std::vector<std::string>& names) {
    std::string s;
    for (size_t i = 0; i < names.size(); ++i) {
        if (!(mask & (uint64_t{1} << i))) continue;
        if (!s.empty()) s += " * ";
        s += names[i];
    }
    return s;
}

void render_base_check(std::ostringstream& out, const std::string& side,
                       const BaseCheck& bc) {
    out << "evidence: " << side << " base {";
    for (size_t i = 0; i < bc.gen_names.size(); ++i) {
        if (i) out << ", ";
        out << bc.gen_names[i];
    }
    out << "}\n";
    for (size_t i = 0; i < bc.gen_values.size(); ++i) {
        out << "evidence: " << side << " value " << bc.gen_names[i] << " = "
            << rat_to_string(bc.gen_values[i]) << "\n";
    }
    for (const ProductCheck& c : bc.checks) {
        out << "evidence: " << side << " product " << mask_names(c.mask, bc.gen_names)
            << " = " << rat_to_string(c.value) << (c.square ? " SQUARE" : " nonsquare")
            << "\n";
    }
    switch (bc.verdict) {
        case Verdict::Holds:
            out << "evidence: " << side << " all " << bc.checks.size()
                << " products nonsquare\n";
            break;
        case Verdict::Fails:
            out << "evidence: " << side << " square witness "
                << mask_names(bc.witness_mask, bc.gen_names) << " = "
                << rat_to_string(bc.witness_value) << "\n";
            break;
        case Verdict::Indeterminate:
            out << "evidence: " << side << " indeterminate: " << bc.reason << "\n";
            break;
    }
}

void render_prop2(std::ostringstream& out, const Prop2Transcript& tr) {
    for (const Prop2SubsetCheck& c : tr.cond2) {
        out << "evidence: cond2 subset " << c.subset_name << " -> " << pt_str(c.specialized)
            << " halves [";
        for (size_t i = 0; i < c.halves.size(); ++i) {
            if (i) out << ", ";
            out << pt_str(c.halves[i]);
        }
        out << "]" << (c.ok ? " ok" : " FAIL") << "\n";
    }
    out << "evidence: cond2 " << (tr.cond2_ok ? "holds" : "fails") << "\n";
    out << "evidence: cond3 generic 2-torsion x-roots [";
    for (size_t i = 0; i < tr.generic_two_torsion.size(); ++i) {
        if (i) out << ", ";
        out << tr.generic_two_torsion[i].render();
    }
    out << "]\n";
    out << "evidence: cond3 specialized 2-torsion x-roots [";
    for (size_t i = 0; i < tr.special_two_torsion.size(); ++i) {
        if (i) out << ", ";
        out << rat_to_string(tr.special_two_torsion[i]);
    }
    out << "]\n";
    out << "evidence: cond3 " << (tr.cond3_ok ? "holds" : "fails") << "\n";
    out << "note: conditions 1 and 4 hold automatically for n = 2\n";
}

}  // namespace

std::string render_certificate(const InjectivityCertificate& cert, size_t index) {
    std::ostringstream out;
    out << "certificate " << index << "\n";
    out << "route: " << route_name(cert.route) << "\n";
    if (cert.has_alpha0) out << "alpha0: " << rat_to_string(cert.alpha0) << "\n";
    out << "t0: " << rat_to_string(cert.t0) << "\n";
    out << "verdict: " << (cert.injective ? "Injective" : "Indeterminate") << "\n";
    if (!cert.injective && !cert.indeterminate_reason.empty())
        out << "reason: " << cert.indeterminate_reason << "\n";
    for (const std::string& a : cert.assumptions) out << "assumption: " << a << "\n";
    for (const std::string& n : cert.notes) out << "note: " << n << "\n";
    for (const auto& [name, side] : cert.criterion.sides) render_base_check(out, name, side);
    if (cert.route == Route::Prop7 || cert.route == Route::Prop2Check)
        render_prop2(out, cert.prop2);
    out << "timing: suppressed\n";
    out << "end\n";
    return out.str();
}

bool extract_embedded_job(const std::string& document, std::string* job_text) {
    const std::string begin = "input-begin\n";
    const std::string end = "\ninput-end\n";
    if (document.rfind("speccert certificate v1\n", 0) != 0) return false;
    size_t b = document.find(begin);
    if (b == std::string::npos) return false;
    b += begin.size();
    size_t e = document.find(end, b - 1);
    if (e == std::string::npos || e < b) return false;
    *job_text = document.substr(b, e + 1 - b);
    return true;
}

}  // namespace speccert
