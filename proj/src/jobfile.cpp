#include "speccert/jobfile.hpp"

#include "speccert/certificate.hpp"
#include "speccert/parser.hpp"

#include <algorithm>
#include <sstream>

namespace speccert {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s, int line) {
    if (s.size() >= 2 && s.front() == '"') {
        if (s.back() != '"') throw job_error("unterminated quoted value", line);
        return s.substr(1, s.size() - 2);
    }
    return s;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    cur = trim(cur);
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Deterministic re-serialization: fixed section and key order, one value
// per line shape, expressions quoted.
std::string canonicalize(const JobFile& j) {
    std::ostringstream out;
    out << "[curve]\n";
    out << "field = " << j.field << "\n";
    out << "model = " << (j.model == CurveModel::Short ? "short" : "isogeny") << "\n";
    if (j.model == CurveModel::Short) {
        out << "A = " << quoted(j.coeff_a) << "\n";
        out << "B = " << quoted(j.coeff_b) << "\n";
    } else {
        out << "a = " << quoted(j.coeff_a) << "\n";
        out << "b = " << quoted(j.coeff_b) << "\n";
    }
    if (!j.points.empty()) {
        out << "\n[points]\n";
        for (const auto& [name, expr] : j.points)
            out << name << " = " << quoted(expr) << "\n";
    }
    if (j.has_parametrization) {
        out << "\n[parametrization]\n";
        out << "u = " << quoted(j.u_text) << "\n";
        out << "v = " << quoted(j.v_text) << "\n";
        if (j.target_text == "two-torsion")
            out << "target = two-torsion\n";
        else
            out << "target = " << quoted(j.target_text) << "\n";
        if (!j.halving_text.empty()) out << "R = " << quoted(j.halving_text) << "\n";
    }
    if (!j.generator_names.empty()) {
        out << "\n[generators]\n";
        out << "points = ";
        for (size_t i = 0; i < j.generator_names.size(); ++i) {
            if (i) out << ", ";
            out << j.generator_names[i];
        }
        out << "\n";
        out << "independence-asserted = " << (j.independence_asserted ? "true" : "false")
            << "\n";
    }
    out << "\n[job]\n";
    out << "route = " << j.route << "\n";
    if (!j.base_point.empty()) out << "point = " << j.base_point << "\n";
    if (!j.factor_expr.empty()) out << "expr = " << quoted(j.factor_expr) << "\n";
    if (!j.values.empty()) {
        out << (j.values_are_alpha0 ? "alpha0 = " : "t0 = ");
        for (size_t i = 0; i < j.values.size(); ++i) {
            if (i) out << ", ";
            out << rat_to_string(j.values[i]);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace

JobFile parse_jobfile(const std::string& text) {
    JobFile j;
    std::string section;
    bool saw_curve = false, saw_job = false;
    bool saw_t0 = false, saw_alpha0 = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        // comments start with # or ; outside quotes
        bool in_quote = false;
        for (size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (c == '"') in_quote = !in_quote;
            if (!in_quote && (c == '#' || c == ';')) {
                line = line.substr(0, i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw job_error("malformed section header", line_no);
            section = line.substr(1, line.size() - 2);
            if (section != "curve" && section != "points" && section != "parametrization" &&
                section != "generators" && section != "job")
                throw job_error("unknown section [" + section + "]", line_no);
            if (section == "curve") saw_curve = true;
            if (section == "job") saw_job = true;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw job_error("expected key = value", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string val = unquote(trim(line.substr(eq + 1)), line_no);
        if (key.empty()) throw job_error("empty key", line_no);
        if (section.empty()) throw job_error("key outside any section", line_no);

        if (section == "curve") {
            if (key == "field") {
                if (val != "Q(t)" && val != "Q(alpha)")
                    throw job_error("field must be Q(t) or Q(alpha)", line_no);
                j.field = val;
                j.var = (val == "Q(t)") ? "t" : "alpha";
            } else if (key == "model") {
                if (val == "short")
                    j.model = CurveModel::Short;
                else if (val == "isogeny")
                    j.model = CurveModel::Isogeny;
                else
                    throw job_error("model must be short or isogeny", line_no);
            } else if (key == "A" || key == "a") {
                j.coeff_a = val;
            } else if (key == "B" || key == "b") {
                j.coeff_b = val;
            } else {
                throw job_error("unknown [curve] key " + key, line_no);
            }
        } else if (section == "points") {
            for (const auto& [name, expr] : j.points) {
                (void)expr;
                if (name == key) throw job_error("duplicate point " + key, line_no);
            }
            j.points.emplace_back(key, val);
        } else if (section == "parametrization") {
            j.has_parametrization = true;
            if (key == "u")
                j.u_text = val;
            else if (key == "v")
                j.v_text = val;
            else if (key == "target")
                j.target_text = val;
            else if (key == "R")
                j.halving_text = val;
            else
                throw job_error("unknown [parametrization] key " + key, line_no);
        } else if (section == "generators") {
            if (key == "points") {
                for (const std::string& name : split_csv(val)) {
                    if (name.empty()) throw job_error("empty generator name", line_no);
                    j.generator_names.push_back(name);
                }
            } else if (key == "independence-asserted") {
                if (val == "true")
                    j.independence_asserted = true;
                else if (val == "false")
                    j.independence_asserted = false;
                else
                    throw job_error("independence-asserted must be true or false", line_no);
            } else {
                throw job_error("unknown [generators] key " + key, line_no);
            }
        } else {  // job
            if (key == "route") {
                static const char* routes[] = {"descent2",   "isogeny2",  "prop5", "prop7",
                                               "prop2check", "specialize", "factor"};
                if (std::find_if(std::begin(routes), std::end(routes),
                                 [&](const char* r) { return val == r; }) == std::end(routes))
                    throw job_error("unknown route " + val, line_no);
                j.route = val;
            } else if (key == "t0" || key == "alpha0") {
                (key == "t0" ? saw_t0 : saw_alpha0) = true;
                j.values_are_alpha0 = (key == "alpha0");
                for (const std::string& s : split_csv(val)) {
                    try {
                        j.values.push_back(parse_rat(s));
                    } catch (const std::exception& e) {
                        throw job_error(std::string("bad ") + key + " value: " + e.what(),
                                        line_no);
                    }
                }
            } else if (key == "point") {
                j.base_point = val;
            } else if (key == "expr") {
                j.factor_expr = val;
            } else {
                throw job_error("unknown [job] key " + key, line_no);
            }
        }
    }

    if (!saw_curve) throw job_error("missing [curve] section", 0);
    if (!saw_job) throw job_error("missing [job] section", 0);
    if (j.field.empty()) throw job_error("missing curve field", 0);
    if (j.coeff_a.empty() || j.coeff_b.empty())
        throw job_error("missing curve coefficients", 0);
    if (j.route.empty()) throw job_error("missing route", 0);
    if (saw_t0 && saw_alpha0) throw job_error("give t0 or alpha0, not both", 0);

    bool wants_alpha0 = (j.route == "prop5" || j.route == "prop7");
    bool wants_t0 = (j.route == "descent2" || j.route == "isogeny2" ||
                     j.route == "prop2check" || j.route == "specialize");
    if (wants_alpha0 && !saw_alpha0)
        throw job_error("route " + j.route + " needs alpha0 values", 0);
    if (wants_t0 && !saw_t0) throw job_error("route " + j.route + " needs t0 values", 0);
    if (j.route == "factor" && j.factor_expr.empty())
        throw job_error("route factor needs expr", 0);
    if ((j.route == "prop5" || j.route == "prop7") && !j.has_parametrization)
        throw job_error("route " + j.route + " needs a [parametrization] section", 0);
    if (j.route == "prop7" && j.halving_text.empty())
        throw job_error("route prop7 needs R in [parametrization]", 0);
    if (j.route == "prop2check" && j.generator_names.empty())
        throw job_error("route prop2check needs [generators]", 0);
    if (j.has_parametrization) {
        if (j.u_text.empty() || j.v_text.empty() || j.target_text.empty())
            throw job_error("[parametrization] needs u, v and target", 0);
    }

    j.canonical_text = canonicalize(j);
    return j;
}

namespace {

PtT make_pt(const ParsedPoint& p) {
    if (p.infinity) return PtT::infinity();
    return PtT::affine(p.x, p.y);
}

PtT lookup_point(const JobFile& job, const std::string& name) {
    for (const auto& [n, expr] : job.points) {
        if (n == name) return make_pt(parse_point(expr, job.var));
    }
    throw job_error("point " + name + " not defined in [points]", 0);
}

std::string term(const Rat& c, const std::string& sym) {
    if (sgn(c) == 0) return "";
    std::string s = rat_to_string(c);
    if (sym.empty()) return (s[0] == '-' ? s : "+" + s);
    if (c == 1) return "+" + sym;
    if (c == -1) return "-" + sym;
    return (s[0] == '-' ? s : "+" + s) + "*" + sym;
}

std::string curve_str(const CurveQ& e) {
    if (e.model == CurveModel::Short)
        return "y^2 = x^3" + term(e.p1, "x") + term(e.p2, "");
    return "y^2 = x^3" + term(e.p1, "x^2") + term(e.p2, "x");
}

void route_specialize(const JobFile& job, const CurveT& e, std::ostringstream& out) {
    size_t index = 1;
    for (const Rat& t0 : job.values) {
        CurveQ eq = specialize(e, t0);
        out << "certificate " << index++ << "\n";
        out << "route: specialize\n";
        out << "t0: " << rat_to_string(t0) << "\n";
        out << "curve: " << curve_str(eq) << "\n";
        for (const auto& [name, expr] : job.points) {
            PtT p = make_pt(parse_point(expr, job.var));
            if (!on_curve(e, p))
                throw job_error("point " + name + " is not on the curve", 0);
            try {
                PtQ pq = specialize_pt(p, t0);
                out << "point: " << name << " -> "
                    << (pq.inf ? std::string("O")
                               : "(" + rat_to_string(pq.x) + ", " + rat_to_string(pq.y) + ")")
                    << "\n";
            } catch (const pole_error&) {
                out << "point: " << name << " -> undefined (pole)\n";
            }
        }
        out << "timing: suppressed\nend\n";
    }
}

void route_factor(const JobFile& job, std::ostringstream& out) {
    RatFn f = parse_expr(job.factor_expr, job.var);
    if (!f.is_polynomial())
        throw job_error("route factor expects a polynomial expression", 0);
    PolyFactorization pf = factor_z(f.num());
    out << "certificate 1\n";
    out << "route: factor\n";
    out << "input: " << f.num().render() << "\n";
    out << "unit: " << (pf.unit < 0 ? "-1" : "1") << "\n";
    for (const auto& [p, e] : pf.content_primes)
        out << "content: " << p.get_str() << "^" << e << "\n";
    for (const auto& [g, e] : pf.factors)
        out << "factor: " << g.render() << " ^ " << e << "\n";
    out << "timing: suppressed\nend\n";
}

}  // namespace

RunResult run_job(const JobFile& job) {
    std::ostringstream out;
    out << render_document_header(job.canonical_text);

    RatFn ca = parse_expr(job.coeff_a, job.var);
    RatFn cb = parse_expr(job.coeff_b, job.var);
    CurveT e = (job.model == CurveModel::Short) ? CurveT::short_model(ca, cb)
                                                : CurveT::isogeny_model(ca, cb);
    if (discriminant(e).is_zero()) throw job_error("curve is singular", 0);

    int exit_code = 0;
    auto emit = [&](const InjectivityCertificate& cert, size_t index) {
        out << render_certificate(cert, index);
        if (!cert.injective) exit_code = 2;
    };

    if (job.route == "specialize") {
        route_specialize(job, e, out);
    } else if (job.route == "factor") {
        route_factor(job, out);
    } else if (job.route == "descent2") {
        auto [ec, lambda] = integral_model(e);
        (void)lambda;
        std::vector<RatFn> roots = two_torsion_qt(ec);
        if (roots.size() != 3)
            throw job_error("descent2 requires full 2-torsion over the function field", 0);
        FactorBase base =
            build_base_2descent(roots[0].num(), roots[1].num(), roots[2].num());
        size_t index = 1;
        for (const Rat& t0 : job.values) {
            InjectivityCertificate cert;
            cert.route = Route::Descent2;
            cert.t0 = t0;
            cert.criterion = check_criterion_2descent(base, t0);
            cert.injective = (cert.criterion.verdict == Verdict::Holds);
            if (cert.criterion.verdict == Verdict::Fails)
                cert.indeterminate_reason = "a subset product is a square at t0";
            else if (cert.criterion.verdict == Verdict::Indeterminate)
                cert.indeterminate_reason = cert.criterion.sides[0].second.reason;
            cert.notes.push_back("factor base " + base.render());
            emit(cert, index++);
        }
    } else if (job.route == "isogeny2") {
        if (e.model != CurveModel::Isogeny)
            throw job_error("route isogeny2 needs model = isogeny", 0);
        auto [ec, lambda] = integral_model(e);
        (void)lambda;
        auto [g_phi, g_phihat] = build_base_2isogeny(ec.p1.num(), ec.p2.num());
        size_t index = 1;
        for (const Rat& t0 : job.values) {
            InjectivityCertificate cert;
            cert.route = Route::Isogeny2;
            cert.t0 = t0;
            cert.criterion = check_criterion_2isogeny(g_phi, g_phihat, t0);
            cert.injective = (cert.criterion.verdict == Verdict::Holds);
            if (cert.criterion.verdict == Verdict::Fails)
                cert.indeterminate_reason = "a subset product is a square at t0";
            else if (cert.criterion.verdict == Verdict::Indeterminate)
                cert.indeterminate_reason =
                    cert.criterion.sides[0].second.verdict == Verdict::Indeterminate
                        ? cert.criterion.sides[0].second.reason
                        : cert.criterion.sides[1].second.reason;
            cert.notes.push_back("G_phi " + g_phi.render());
            cert.notes.push_back("G_phihat " + g_phihat.render());
            emit(cert, index++);
        }
    } else if (job.route == "prop5") {
        if (job.target_text != "two-torsion")
            throw job_error("route prop5 needs target = two-torsion", 0);
        RatFn u = parse_expr(job.u_text, "alpha");
        RatFn v = parse_expr(job.v_text, "alpha");
        Parametrization par = Parametrization::for_two_torsion(e, u, v);
        size_t index = 1;
        for (const Rat& a0 : job.values) emit(pipeline_prop5(e, par, a0), index++);
    } else if (job.route == "prop7") {
        std::string base_name = job.base_point.empty() ? "P" : job.base_point;
        PtT p = lookup_point(job, base_name);
        if (job.target_text == "two-torsion")
            throw job_error("route prop7 needs an explicit target expression", 0);
        BiPoly phi = parse_bipoly(job.target_text, job.var, "a");
        RatFn u = parse_expr(job.u_text, "alpha");
        RatFn v = parse_expr(job.v_text, "alpha");
        Parametrization par = Parametrization::for_division_curve(phi, u, v);
        PtT r = make_pt(parse_point(job.halving_text, "alpha"));
        std::vector<std::pair<std::string, PtT>> extra;
        for (const std::string& name : job.generator_names) {
            if (name == base_name) continue;
            extra.emplace_back(name, lookup_point(job, name));
        }
        size_t index = 1;
        for (const Rat& a0 : job.values)
            emit(pipeline_prop7(e, p, phi, par, r, extra, a0), index++);
    } else if (job.route == "prop2check") {
        SubgroupGens gens;
        gens.independence_asserted = job.independence_asserted;
        for (const std::string& name : job.generator_names)
            gens.points.emplace_back(name, lookup_point(job, name));
        size_t index = 1;
        for (const Rat& t0 : job.values) {
            Prop2Transcript tr = check_prop2_conditions(e, gens, t0);
            InjectivityCertificate cert;
            cert.route = Route::Prop2Check;
            cert.t0 = t0;
            cert.prop2 = tr;
            cert.injective = tr.injective;
            cert.indeterminate_reason = tr.failure;
            if (job.independence_asserted)
                cert.assumptions.push_back("generator independence asserted by input");
            emit(cert, index++);
        }
    } else {
        throw job_error("unknown route " + job.route, 0);
    }

    return {out.str(), exit_code};
}

bool replay_certificate(const std::string& certificate_text, std::string* diff_reason) {
    std::string job_text;
    if (!extract_embedded_job(certificate_text, &job_text)) {
        if (diff_reason) *diff_reason = "not a v1 certificate document";
        return false;
    }
    JobFile job = parse_jobfile(job_text);
    RunResult rr = run_job(job);
    if (rr.output != certificate_text) {
        if (diff_reason) *diff_reason = "re-run output differs from document";
        return false;
    }
    if (diff_reason) diff_reason->clear();
    return true;
}

}  // namespace speccert
