// Command-line front end: parses a session file (or inline text) and
// dispatches to the library.  Exit codes: 0 success, 1 verification
// failure (a negative membership answer or a failing suite), 2 usage,
// parse, or domain error, 3 stabilization cap exceeded.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "lfd/derivation.hpp"
#include "lfd/errors.hpp"
#include "lfd/expmap.hpp"
#include "lfd/isotropy.hpp"
#include "lfd/printing.hpp"
#include "lfd/session.hpp"
#include "lfd/verify.hpp"

namespace {

using namespace lfd;

int env_cap() {
    if (const char* env = std::getenv("LFD_CAP")) {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 64;
}

struct SessionArgs {
    std::string file;
    std::string eval_text;
    int cap = 64;
};

void add_session_opts(CLI::App* cmd, SessionArgs& a) {
    cmd->add_option("-f,--file", a.file,
                    "session file ('-' reads standard input)");
    cmd->add_option("-e,--eval", a.eval_text, "inline session text");
    cmd->add_option("--cap", a.cap,
                    "stabilization cap (default: LFD_CAP or 64)");
}

Session load_session(const SessionArgs& a) {
    std::string text;
    if (!a.eval_text.empty()) {
        text = a.eval_text;
    } else if (a.file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (!a.file.empty()) {
        std::ifstream in(a.file);
        if (!in)
            throw Error("cannot open session file: " + a.file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        throw Error("no session given: pass a file or use --eval");
    }
    return parse_session(text);
}

// A map argument may be bound as a substitution or as a word.
PolyMap as_map(const Session& s, const std::string& name) {
    const Binding& b = s.require_binding(name);
    if (const auto* m = std::get_if<PolyMap>(&b))
        return *m;
    if (const auto* w = std::get_if<AutWord>(&b))
        return flatten(*w);
    throw UnknownSymbol("'" + name + "' is not bound to a map or word");
}

std::string domain_name(SlotSpec::Domain d) {
    switch (d) {
    case SlotSpec::Domain::Scalar: return "scalar";
    case SlotSpec::Domain::NonzeroScalar: return "nonzero scalar";
    case SlotSpec::Domain::PolyInX: return "polynomial in X";
    case SlotSpec::Domain::PolyInY: return "polynomial in Y";
    }
    return "?";
}

std::string family_name(FamilyForm f) {
    switch (f) {
    case FamilyForm::TriangularGeneral: return "triangular";
    case FamilyForm::TranslationScale: return "translation-scale";
    case FamilyForm::PureTranslation: return "pure-translation";
    case FamilyForm::ResonantScale: return "resonant-scale";
    case FamilyForm::LinearScalar: return "scalar";
    case FamilyForm::LinearDiagonal: return "diagonal";
    case FamilyForm::LinearDiagonalResonant: return "diagonal-resonant";
    case FamilyForm::LinearJordan: return "jordan";
    }
    return "?";
}

std::string family_shape(const FamilySpec& spec) {
    const bool has = [&](const std::string& n) {
        for (const auto& s : spec.slots)
            if (s.name == n)
                return true;
        return false;
    }("delta");
    switch (spec.form) {
    case FamilyForm::TriangularGeneral:
        return "(alpha*X + beta, gamma*Y + p(X))";
    case FamilyForm::TranslationScale:
        if (has)
            return "(X + alpha, gamma*Y + delta)";
        for (const auto& s : spec.slots)
            if (s.name == "alpha")
                return "(X + alpha, gamma*Y)";
        return "(X + beta, gamma*Y)";
    case FamilyForm::PureTranslation:
        return "(X + r(Y), alpha*Y + beta)";
    case FamilyForm::ResonantScale:
        return "(c*X, c^m*Y + beta*X^m)";
    case FamilyForm::LinearScalar:
        return "(a11*X + a12*Y, a21*X + a22*Y) with det != 0";
    case FamilyForm::LinearDiagonal:
        return "(alpha*X, beta*Y)";
    case FamilyForm::LinearDiagonalResonant:
        return "(alpha*X, delta*Y + gamma*X^k)";
    case FamilyForm::LinearJordan:
        return "(alpha*X + beta*Y, alpha*Y)";
    }
    return "?";
}

void print_constraint(std::ostream& os, const SymmetryConstraint& sc,
                      const SymbolTable& t) {
    if (sc.degree == 0) {
        os << "constraint: gamma = 1; alpha (nonzero) and beta free\n";
        return;
    }
    os << "constraint: beta = c*(1 - alpha), gamma = alpha^" << sc.degree
       << " with c = " << to_string(sc.center, t);
    if (sc.exponent != 0)
        os << "; alpha^" << sc.exponent << " = 1";
    else
        os << "; alpha free (nonzero)";
    os << "\n";
}

void print_solutions(std::ostream& os, const WeightSolutions& w) {
    if (w.finite) {
        os << "{";
        for (std::size_t i = 0; i < w.points.size(); ++i) {
            if (i)
                os << ", ";
            os << "(" << w.points[i].first << ", " << w.points[i].second
               << ")";
        }
        os << "}";
        if (w.points.empty())
            os << " (empty)";
    } else {
        os << "ray (" << w.points[0].first << ", " << w.points[0].second
           << ") + k*(" << w.direction->first << ", " << w.direction->second
           << "), k >= 0";
    }
    os << "\n";
}

Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("not a rational number: " + s);
    }
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int cmd_check_lf(const SessionArgs& a, const std::string& name) {
    Session s = load_session(a);
    const Derivation& d = s.require_derivation(name);
    const LFReport r = classify_lf(d, a.cap);
    if (r.is_lf) {
        std::cout << "locally finite: yes\n"
                  << "minimal polynomial: " << to_string(r.min_poly, s.table)
                  << "\n"
                  << "locally nilpotent: " << (r.is_lnd ? "yes" : "no") << "\n"
                  << "semisimple: " << (r.is_semisimple ? "yes" : "no") << "\n"
                  << "orbit dimension: " << r.cap_used << "\n";
    } else {
        std::cout << "locally finite: no (did not stabilize within cap "
                  << a.cap << ")\n"
                  << "degree trace:";
        for (int deg : r.degree_trace)
            std::cout << " " << deg;
        std::cout << "\n";
    }
    return 0;
}

int cmd_classify(const SessionArgs& a, const std::string& name) {
    Session s = load_session(a);
    const Derivation& d = s.require_derivation(name);
    const NormalForm nf = recognize_normal_form(d);
    switch (nf.tag) {
    case NormalForm::Tag::Triangular:
        std::cout << "normal form: triangular f(X) dY with f = "
                  << to_string(nf.f, s.table) << "\n";
        break;
    case NormalForm::Tag::TranslationScale:
        std::cout << "normal form: dX + b*Y dY with b = "
                  << to_string(nf.b, s.table) << "\n";
        break;
    case NormalForm::Tag::ResonantScale:
        std::cout << "normal form: a*X dX + (a*m*Y + X^m) dY with a = "
                  << to_string(nf.a, s.table) << ", m = " << nf.m << "\n";
        break;
    case NormalForm::Tag::Linear:
        std::cout << "normal form: linear with matrix "
                  << to_string(nf.mat, s.table) << "\n";
        break;
    case NormalForm::Tag::Unrecognized:
        std::cout << "normal form: unrecognized (not in canonical shape)\n";
        break;
    }
    return 0;
}

int cmd_jordan(const SessionArgs& a, const std::string& name) {
    Session s = load_session(a);
    const Derivation& d = s.require_derivation(name);
    const auto [ds, dn] = jordan(d, a.cap);
    std::cout << "semisimple part: " << to_string(ds, s.table) << "\n"
              << "nilpotent part: " << to_string(dn, s.table) << "\n";
    return 0;
}

int cmd_exp(const SessionArgs& a, const std::string& name) {
    Session s = load_session(a);
    const Derivation& d = s.require_derivation(name);
    const std::string text = to_string(exp_lfd(d, a.cap, s.table), s.table);
    std::cout << "exp(" << name << ") = " << text << "\n";
    return 0;
}

int cmd_flow(const SessionArgs& a, const std::string& name,
             const std::string& tname) {
    Session s = load_session(a);
    const Derivation& d = s.require_derivation(name);
    GenId t;
    if (auto g = s.table.find(tname)) {
        if (!s.table.is_param(*g))
            throw Error("flow parameter must be a declared parameter: " +
                        tname);
        t = *g;
    } else {
        t = s.table.add_param(tname);
    }
    const std::string text = to_string(flow(d, t, a.cap, s.table), s.table);
    std::cout << "flow(" << name << ", " << tname << ") = " << text << "\n";
    return 0;
}

int cmd_bracket(const SessionArgs& a, const std::string& n1,
                const std::string& n2) {
    Session s = load_session(a);
    const Derivation b = bracket(s.require_derivation(n1),
                                 s.require_derivation(n2));
    std::cout << "[" << n1 << ", " << n2 << "] = " << to_string(b, s.table)
              << "\n";
    return 0;
}

int cmd_conjugate(const SessionArgs& a, const std::string& wname,
                  const std::string& dname) {
    Session s = load_session(a);
    const Derivation c =
        conjugate(s.require_word(wname), s.require_derivation(dname));
    std::cout << to_string(c, s.table) << "\n";
    return 0;
}

int cmd_isotropy_check(const SessionArgs& a, const std::string& dname,
                       const std::string& mname, bool against_exp) {
    Session s = load_session(a);
    const Derivation& d = s.require_derivation(dname);
    const PolyMap m = as_map(s, mname);
    bool member;
    if (against_exp)
        member = commutes_with_automorphism(m, exp_lfd(d, a.cap, s.table));
    else
        member = commutes_with_derivation(m, d);
    std::cout << "member: " << (member ? "yes" : "no") << "\n";
    return member ? 0 : 1;
}

int cmd_isotropy_family(const SessionArgs& a, const std::string& dname,
                        const std::string& form) {
    Session s = load_session(a);
    const Derivation& d = s.require_derivation(dname);
    FamilySpec spec;
    if (form == "exp")
        spec = family_spec_exp(d, s.table);
    else if (form == "derivation")
        spec = family_spec(d);
    else
        throw Error("--form must be 'derivation' or 'exp'");
    std::cout << "family: " << family_name(spec.form) << " "
              << family_shape(spec) << "\n"
              << "slots:\n";
    for (const auto& slot : spec.slots)
        std::cout << "  " << slot.name << ": " << domain_name(slot.domain)
                  << "\n";
    if (spec.constraint)
        print_constraint(std::cout, *spec.constraint, s.table);
    return 0;
}

int cmd_affine_symmetries(const SessionArgs& a, const std::string& name) {
    Session s = load_session(a);
    const SymmetryConstraint sc = affine_symmetries(s.require_poly(name));
    std::cout << "symmetries of the triangular derivation with f = " << name
              << ": maps (alpha*X + beta, gamma*Y + p(X))\n";
    print_constraint(std::cout, sc, s.table);
    return 0;
}

int cmd_diag_resonances(const std::string& astr, const std::string& bstr) {
    const DiagResonances dr = diag_resonances(parse_rat(astr), parse_rat(bstr));
    std::cout << "X-component exponents (m, n) with m*a + n*b = a: ";
    print_solutions(std::cout, dr.x_monomials);
    std::cout << "Y-component exponents (m, n) with m*a + n*b = b: ";
    print_solutions(std::cout, dr.y_monomials);
    std::cout << "enlargement beyond (alpha*X, beta*Y): "
              << (dr.trivial() ? "none" : "present") << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int samples,
               bool json, int cap) {
    std::vector<SuiteReport> reports;
    if (suite == "all")
        reports = run_all_suites(seed, samples, cap);
    else
        reports.push_back(run_suite(suite, seed, samples, cap));
    bool ok = true;
    if (json) {
        std::cout << "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i)
                std::cout << ",";
            std::cout << "\n" << report_json(reports[i]);
        }
        std::cout << "\n]\n";
    } else {
        for (const auto& r : reports)
            std::cout << report_text(r);
    }
    for (const auto& r : reports)
        ok = ok && r.passed();
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with locally finite derivations of the "
                 "polynomial plane: classification, Jordan splitting, "
                 "exponentials, flows, and symmetry-group families."};
    app.require_subcommand(1);
    const int cap0 = env_cap();

    std::function<int()> action;

    // check-lf
    SessionArgs a_lf;   a_lf.cap = cap0;
    std::string n_lf;
    auto* c_lf = app.add_subcommand("check-lf",
                                    "Local finiteness report for a bound "
                                    "derivation");
    add_session_opts(c_lf, a_lf);
    c_lf->add_option("name", n_lf, "derivation binding")->required();
    c_lf->callback([&] { action = [&] { return cmd_check_lf(a_lf, n_lf); }; });

    // classify
    SessionArgs a_cl;   a_cl.cap = cap0;
    std::string n_cl;
    auto* c_cl = app.add_subcommand("classify",
                                    "Match a derivation against the "
                                    "canonical shapes");
    add_session_opts(c_cl, a_cl);
    c_cl->add_option("name", n_cl, "derivation binding")->required();
    c_cl->callback([&] { action = [&] { return cmd_classify(a_cl, n_cl); }; });

    // jordan
    SessionArgs a_jd;   a_jd.cap = cap0;
    std::string n_jd;
    auto* c_jd = app.add_subcommand("jordan",
                                    "Semisimple + nilpotent splitting");
    add_session_opts(c_jd, a_jd);
    c_jd->add_option("name", n_jd, "derivation binding")->required();
    c_jd->callback([&] { action = [&] { return cmd_jordan(a_jd, n_jd); }; });

    // exp
    SessionArgs a_ex;   a_ex.cap = cap0;
    std::string n_ex;
    auto* c_ex = app.add_subcommand("exp", "Exponential automorphism");
    add_session_opts(c_ex, a_ex);
    c_ex->add_option("name", n_ex, "derivation binding")->required();
    c_ex->callback([&] { action = [&] { return cmd_exp(a_ex, n_ex); }; });

    // flow
    SessionArgs a_fl;   a_fl.cap = cap0;
    std::string n_fl, t_fl = "t";
    auto* c_fl = app.add_subcommand("flow", "One-parameter flow exp(t*D)");
    add_session_opts(c_fl, a_fl);
    c_fl->add_option("name", n_fl, "derivation binding")->required();
    c_fl->add_option("-t,--param", t_fl,
                     "flow parameter name (declared on demand)");
    c_fl->callback([&] { action = [&] { return cmd_flow(a_fl, n_fl, t_fl); }; });

    // bracket
    SessionArgs a_br;   a_br.cap = cap0;
    std::string n_br1, n_br2;
    auto* c_br = app.add_subcommand("bracket", "Lie bracket of two "
                                               "derivations");
    add_session_opts(c_br, a_br);
    c_br->add_option("first", n_br1, "derivation binding")->required();
    c_br->add_option("second", n_br2, "derivation binding")->required();
    c_br->callback(
        [&] { action = [&] { return cmd_bracket(a_br, n_br1, n_br2); }; });

    // conjugate
    SessionArgs a_cj;   a_cj.cap = cap0;
    std::string n_cjw, n_cjd;
    auto* c_cj = app.add_subcommand("conjugate",
                                    "Transport a derivation along a word");
    add_session_opts(c_cj, a_cj);
    c_cj->add_option("word", n_cjw, "word binding")->required();
    c_cj->add_option("derivation", n_cjd, "derivation binding")->required();
    c_cj->callback(
        [&] { action = [&] { return cmd_conjugate(a_cj, n_cjw, n_cjd); }; });

    // isotropy-check
    SessionArgs a_ic;   a_ic.cap = cap0;
    std::string n_icd, n_icm;
    bool ic_exp = false;
    auto* c_ic = app.add_subcommand("isotropy-check",
                                    "Does a map commute with D (or with "
                                    "exp(D))?");
    add_session_opts(c_ic, a_ic);
    c_ic->add_option("derivation", n_icd, "derivation binding")->required();
    c_ic->add_option("map", n_icm, "map or word binding")->required();
    c_ic->add_flag("--exp", ic_exp, "test against exp(D) instead of D");
    c_ic->callback([&] {
        action = [&] { return cmd_isotropy_check(a_ic, n_icd, n_icm, ic_exp); };
    });

    // isotropy-family
    SessionArgs a_if;   a_if.cap = cap0;
    std::string n_if, form_if = "derivation";
    auto* c_if = app.add_subcommand("isotropy-family",
                                    "Describe the parametrized symmetry "
                                    "family of D");
    add_session_opts(c_if, a_if);
    c_if->add_option("name", n_if, "derivation binding")->required();
    c_if->add_option("--form", form_if, "'derivation' or 'exp'")
        ->check(CLI::IsMember({"derivation", "exp"}));
    c_if->callback([&] {
        action = [&] { return cmd_isotropy_family(a_if, n_if, form_if); };
    });

    // affine-symmetries
    SessionArgs a_as;   a_as.cap = cap0;
    std::string n_as;
    auto* c_as = app.add_subcommand("affine-symmetries",
                                    "Affine symmetry rules of a bound "
                                    "univariate polynomial");
    add_session_opts(c_as, a_as);
    c_as->add_option("name", n_as, "polynomial binding")->required();
    c_as->callback(
        [&] { action = [&] { return cmd_affine_symmetries(a_as, n_as); }; });

    // diag-resonances
    std::string dr_a, dr_b;
    auto* c_dr = app.add_subcommand("diag-resonances",
                                    "Eligible monomials for maps commuting "
                                    "with diagonal weights (a, b)");
    c_dr->add_option("a", dr_a, "rational weight of X")->required();
    c_dr->add_option("b", dr_b, "rational weight of Y")->required();
    c_dr->callback(
        [&] { action = [&] { return cmd_diag_resonances(dr_a, dr_b); }; });

    // verify
    std::string v_suite;
    std::uint64_t v_seed = 1;
    int v_samples = 100, v_cap = cap0;
    bool v_json = false;
    auto* c_v = app.add_subcommand("verify",
                                   "Run a named reproducible property "
                                   "suite");
    c_v->add_option("--suite", v_suite, "suite name, or 'all'")->required();
    c_v->add_option("--seed", v_seed, "random seed");
    c_v->add_option("--samples", v_samples, "sample count");
    c_v->add_option("--cap", v_cap, "stabilization cap");
    c_v->add_flag("--json", v_json, "emit the JSON report");
    c_v->callback([&] {
        action = [&] {
            return cmd_verify(v_suite, v_seed, v_samples, v_json, v_cap);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const NotStabilizedWithinCap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotLocallyNilpotent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
