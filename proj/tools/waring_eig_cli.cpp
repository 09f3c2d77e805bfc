// waring-eig: exact analysis of Waring ranks, eigenschemes, and their
// interaction for binary (and small n-ary) forms.  Every subcommand is
// reproducible from (verb, options, seed); JSON payloads are deterministic
// apart from the timing block.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "waring_eig/critvar.hpp"
#include "waring_eig/dynamics.hpp"
#include "waring_eig/locus.hpp"
#include "waring_eig/parse.hpp"
#include "waring_eig/serialize.hpp"
#include "waring_eig/verify.hpp"

using json = nlohmann::ordered_json;
using namespace waring_eig;

namespace {

std::string locus_kind_str(LocusKind k) {
    switch (k) {
        case LocusKind::Finite: return "finite";
        case LocusKind::CofiniteMinus: return "cofinite-minus";
        case LocusKind::Balanced: return "balanced";
        case LocusKind::MonomialComplement: return "monomial-complement";
    }
    return "?";
}

std::string cfloat_str(const CFloat& z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

json sv_json(const SingularValue& sv) {
    json j;
    switch (sv.kind) {
        case SVKind::Exact:
            j["kind"] = "exact";
            j["value"] = gauss_str(sv.value);
            break;
        case SVKind::Numeric:
            j["kind"] = "numeric";
            j["re"] = sv.nvalue.real();
            j["im"] = sv.nvalue.imag();
            break;
        case SVKind::Indeterminate:
            j["kind"] = "indeterminate";
            break;
        case SVKind::UndefinedIsotropic:
            j["kind"] = "undefined-isotropic";
            break;
    }
    return j;
}

json eigpoint_json(const EigPoint& ep) {
    json j;
    j["exact"] = ep.exact;
    if (ep.exact)
        j["point"] = ep.pt.str();
    else {
        json c = json::array();
        for (const auto& z : ep.npt.coords) c.push_back(json{{"re", z.real()}, {"im", z.imag()}});
        j["point_numeric"] = c;
    }
    j["multiplicity"] = ep.multiplicity;
    j["singular_value"] = sv_json(ep.sv);
    return j;
}

json locus_json(const LocusDesc& ld) {
    json j;
    j["kind"] = locus_kind_str(ld.kind);
    j["g1"] = ld.ann.g1.str();
    j["g2"] = ld.ann.g2.str();
    if (ld.kind == LocusKind::Balanced) j["forbidden_form"] = ld.forbidden_form.str();
    if (ld.kind == LocusKind::MonomialComplement) j["monomial_m"] = ld.monomial_m;
    return j;
}

json intersect_json(const IntersectionReport& rep) {
    json j;
    j["nonempty"] = rep.nonempty;
    j["method"] = rep.method;
    j["locus_kind"] = locus_kind_str(rep.kind);
    if (!rep.certificate.is_zero()) j["certificate"] = rep.certificate.str();
    json w = json::array();
    for (const auto& ep : rep.witnesses) w.push_back(eigpoint_json(ep));
    j["witnesses"] = w;
    return j;
}

json pencil_json(const RankPencilProfile& prof) {
    json j;
    j["base_rank"] = prof.base_rank;
    j["generic_rank"] = prof.generic_rank;
    j["exact"] = prof.exact;
    json ex = json::array();
    for (const auto& e : prof.exceptional) {
        json t;
        t["exact"] = e.exact;
        if (e.exact)
            t["lambda"] = gauss_str(e.lambda);
        else {
            t["lambda_re"] = e.nlambda.real();
            t["lambda_im"] = e.nlambda.imag();
        }
        t["rank"] = e.rank;
        ex.push_back(std::move(t));
    }
    j["exceptional"] = ex;
    return j;
}

// rank of the first catalecticant: number of essential variables
unsigned essential_vars(const NForm& f) {
    if (f.is_zero() || f.degree() == 0) return 0;
    std::vector<NForm> partials;
    for (unsigned i = 0; i < f.nvars(); ++i) partials.push_back(f.derivative(i));
    auto expos = all_exponents(f.nvars(), f.degree() - 1);
    ExactMatrix m(f.nvars(), expos.size());
    for (unsigned i = 0; i < f.nvars(); ++i)
        for (std::size_t c = 0; c < expos.size(); ++c) m(i, c) = partials[i].coeff(expos[c]);
    return static_cast<unsigned>(rank_exact(m));
}

struct Emitter {
    std::string verb;
    json options = json::object();
    bool want_json = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    int emit(const json& results, const json& certificates, const std::string& text,
             int exit_code = 0) const {
        if (want_json) {
            json rep;
            rep["schema_version"] = "1.0";
            rep["command"] = json{{"verb", verb}, {"options", options}};
            rep["results"] = results;
            rep["certificates"] = certificates;
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            rep["timing"] = json{{"seconds", secs}};
            std::cout << rep.dump(2) << "\n";
        } else {
            std::cout << text;
        }
        return exit_code;
    }
};

std::string sv_text(const SingularValue& sv) {
    switch (sv.kind) {
        case SVKind::Exact: return gauss_str(sv.value);
        case SVKind::Numeric: return cfloat_str(sv.nvalue);
        case SVKind::Indeterminate: return "indeterminate";
        case SVKind::UndefinedIsotropic: return "undefined (isotropic)";
    }
    return "?";
}

std::string eigpoint_text(const EigPoint& ep) {
    std::string s = ep.exact ? ep.pt.str()
                             : "[" + cfloat_str(ep.npt.coords[0]) + " : " +
                                   cfloat_str(ep.npt.coords[1]) + "] (numeric)";
    s += "  mult " + std::to_string(ep.multiplicity) + "  sv " + sv_text(ep.sv);
    return s;
}

int cmd_analyze(Emitter& em, const std::string& expr, double tol) {
    NForm f = parse_form(expr);
    json res;
    std::string text;
    res["form"] = f.str();
    res["degree"] = f.degree();
    res["nvars"] = f.nvars();
    unsigned ess = essential_vars(f);
    res["essential_vars"] = ess;
    text += "form: " + f.str() + "\n";
    text += "degree " + std::to_string(f.degree()) + ", " + std::to_string(f.nvars()) +
            " variables (" + std::to_string(ess) + " essential)\n";
    json certs = json::array();
    if (f.nvars() == 2) {
        BForm b = to_bform(f);
        if (b.is_zero() || b.degree() < 2) {
            res["note"] = "rank analysis needs degree >= 2";
            return em.emit(res, certs, text + "rank analysis needs degree >= 2\n");
        }
        unsigned rank = waring_rank_binary(b);
        LocusDesc ld = waring_locus_binary(b);
        BForm D = eigen_poly_binary(b);
        res["waring_rank"] = rank;
        res["annihilator"] = json{{"g1", ld.ann.g1.str()}, {"g2", ld.ann.g2.str()}};
        res["eigenpolynomial"] = D.str();
        res["locus"] = locus_json(ld);
        json sup = json::array();
        text += "Waring rank " + std::to_string(rank) + "\n";
        text += "annihilator: g1 = " + ld.ann.g1.str() + ", g2 = " + ld.ann.g2.str() + "\n";
        text += "eigenpolynomial D = " + D.str() + "\n";
        text += "locus: " + locus_kind_str(ld.kind) + "\n";
        if (!D.is_zero()) {
            for (const auto& ep : eigen_support_binary(b, tol)) {
                sup.push_back(eigpoint_json(ep));
                text += "  eigenpoint " + eigpoint_text(ep) + "\n";
            }
            res["eigen_support"] = sup;
            IntersectionReport rep = intersect_waring_eigen_binary(b, tol);
            res["intersection"] = intersect_json(rep);
            certs.push_back(json{{"claim", "W(F) and Eig(F) " +
                                               std::string(rep.nonempty ? "meet" : "are disjoint")},
                                 {"method", rep.method},
                                 {"certificate", rep.certificate.str()}});
            text += std::string("W(F) \xe2\x88\xa9 Eig(F): ") +
                    (rep.nonempty ? "nonempty" : "empty") + " (" + rep.method + ")\n";
            for (const auto& ep : rep.witnesses) text += "  witness " + eigpoint_text(ep) + "\n";
        } else {
            res["note"] = "degenerate eigenpolynomial (D = 0)";
            text += "degenerate eigenpolynomial (D = 0)\n";
        }
    } else {
        res["waring_rank"] = nullptr;
        res["note"] = "rank queries are unsupported for non-binary forms";
        auto gens = eigen_ideal(f);
        res["eigen_ideal_generators"] = gens.size();
        text += "rank queries are unsupported for non-binary forms\n";
        text += "eigen ideal: " + std::to_string(gens.size()) + " generating 2x2 minors\n";
    }
    return em.emit(res, certs, text);
}

int cmd_eigen(Emitter& em, const std::string& expr, double tol) {
    NForm f = parse_form(expr);
    json res;
    std::string text;
    res["form"] = f.str();
    if (f.nvars() == 2) {
        BForm b = to_bform(f);
        BForm D = eigen_poly_binary(b);
        res["eigenpolynomial"] = D.str();
        text += "D = " + D.str() + "\n";
        if (!D.is_zero()) {
            json sup = json::array();
            for (const auto& ep : eigen_support_binary(b, tol)) {
                sup.push_back(eigpoint_json(ep));
                text += "eigenpoint " + eigpoint_text(ep) + "\n";
            }
            res["eigen_support"] = sup;
        } else {
            text += "every point is an eigenpoint (D = 0)\n";
        }
    } else {
        json gens = json::array();
        for (const auto& g : eigen_ideal(f)) {
            gens.push_back(json{{"i", g.i}, {"j", g.j}, {"minor", g.minor.str()}});
            text += "minor (" + std::to_string(g.i) + "," + std::to_string(g.j) +
                    "): " + g.minor.str() + "\n";
        }
        res["eigen_ideal"] = gens;
    }
    return em.emit(res, json::array(), text);
}

int cmd_locus(Emitter& em, const std::string& expr) {
    BForm b = parse_bform(expr);
    LocusDesc ld = waring_locus_binary(b);
    json res = locus_json(ld);
    res["form"] = b.str();
    std::string text = "locus kind: " + locus_kind_str(ld.kind) + "\n";
    text += "g1 = " + ld.ann.g1.str() + "\ng2 = " + ld.ann.g2.str() + "\n";
    switch (ld.kind) {
        case LocusKind::Finite:
            text += "W(F) = roots of g1; F(F) is its complement\n";
            break;
        case LocusKind::CofiniteMinus:
            text += "F(F) = roots of g1; W(F) is its complement\n";
            break;
        case LocusKind::Balanced:
            text += "pencil regime; F(F) inside V(R), R = " + ld.forbidden_form.str() + "\n";
            break;
        case LocusKind::MonomialComplement:
            text += "monomial regime\n";
            break;
    }
    return em.emit(res, json::array(), text);
}

int cmd_intersect(Emitter& em, const std::string& expr, double tol) {
    BForm b = parse_bform(expr);
    IntersectionReport rep = intersect_waring_eigen_binary(b, tol);
    json res = intersect_json(rep);
    res["form"] = b.str();
    std::string text = std::string("W(F) \xe2\x88\xa9 Eig(F): ") +
                       (rep.nonempty ? "nonempty" : "empty") + " (" + rep.method + ")\n";
    if (!rep.certificate.is_zero()) text += "certificate: " + rep.certificate.str() + "\n";
    for (const auto& ep : rep.witnesses) text += "witness " + eigpoint_text(ep) + "\n";
    json certs = json::array();
    certs.push_back(json{{"claim", rep.nonempty ? "intersection nonempty" : "intersection empty"},
                         {"method", rep.method},
                         {"certificate", rep.certificate.str()}});
    return em.emit(res, certs, text);
}

int cmd_perturb(Emitter& em, const std::string& expr, const std::string& dir, double tol) {
    BForm b = parse_bform(expr);
    LinForm l = parse_linform(dir);
    if (l.coords.size() != 2) throw std::runtime_error("perturb: direction must be binary");
    RankPencilProfile prof = rank_pencil(b, l, tol);
    json res = pencil_json(prof);
    res["form"] = b.str();
    res["direction"] = ProjPoint(l.coords).str();
    std::string text = "pencil F + lambda L^d, L = " + dir + "\n";
    text += "rank at lambda=0: " + std::to_string(prof.base_rank) + "\n";
    text += "generic rank: " + std::to_string(prof.generic_rank) +
            (prof.exact ? "" : " (some lambdas numeric)") + "\n";
    for (const auto& e : prof.exceptional) {
        text += "  lambda = " + (e.exact ? gauss_str(e.lambda) : cfloat_str(e.nlambda)) +
                "  rank " + std::to_string(e.rank) + "\n";
    }
    if (prof.exceptional.empty()) text += "  no exceptional lambda\n";
    return em.emit(res, json::array(), text);
}

int cmd_we_sample(Emitter& em, unsigned n, unsigned r, unsigned d, std::uint64_t seed) {
    WESample s = sample_X_x0(n, r, d, seed);
    json res;
    res["n"] = n;
    res["r"] = r;
    res["d"] = d;
    res["seed"] = seed;
    json alpha = json::array();
    for (const auto& row : s.params.alpha) {
        json jr = json::array();
        for (const auto& c : row) jr.push_back(gauss_str(c));
        alpha.push_back(std::move(jr));
    }
    res["alpha"] = alpha;
    NForm f = s.params.expand();
    res["form"] = f.str();
    res["rank_certified"] = s.rank_certified;
    if (s.rank_certified) res["rank"] = s.rank;
    std::string text = "sample on the x0-eigenvector locus, n=" + std::to_string(n) +
                       " r=" + std::to_string(r) + " d=" + std::to_string(d) + "\n";
    text += "F = " + f.str() + "\n";
    if (s.rank_certified)
        text += "rank certified: " + std::to_string(s.rank) + "\n";
    else
        text += "rank not certified at these sizes\n";
    return em.emit(res, json::array(), text);
}

int cmd_we_check(Emitter& em, const std::string& expr, std::optional<unsigned> n,
                 std::optional<unsigned> r, std::optional<unsigned> d, std::uint64_t seed) {
    json res;
    std::string text;
    json certs = json::array();
    int code = 0;
    if (!expr.empty()) {
        BForm b = parse_bform(expr);
        WEMembership m = we_membership_binary(b);
        res["form"] = b.str();
        res["member"] = m.member;
        res["certificate"] = m.certificate.str();
        certs.push_back(json{{"claim", m.member ? "some eigenpoint lies in W(F)"
                                                : "no eigenpoint lies in W(F)"},
                             {"method", "exact-gcd"},
                             {"certificate", m.certificate.str()}});
        text += std::string("critical-Waring membership: ") + (m.member ? "yes" : "no") + "\n";
        text += "gcd(g1, D) = " + m.certificate.str() + "\n";
        code = m.member ? 0 : 1;
    } else {
        if (!n || !r || !d)
            throw std::runtime_error("we-check: give a form expression, or all of -n, -r, -d");
        WESample s = sample_X_x0(*n, *r, *d, seed);
        WEEquations eqs = we_equations(*n, *r, *d);
        auto pt = s.params.flat();
        std::size_t jr = jacobian_rank_at(eqs, pt, false);
        std::size_t jr1 = jacobian_rank_at(eqs, pt, true);
        bool pass = jr == *n && jr1 == *n + 1;
        res["n"] = *n;
        res["r"] = *r;
        res["d"] = *d;
        res["seed"] = seed;
        res["jacobian_rank"] = jr;
        res["jacobian_rank_with_sv"] = jr1;
        res["expected"] = json{{"jacobian_rank", *n}, {"jacobian_rank_with_sv", *n + 1}};
        res["pass"] = pass;
        text += "jacobian rank at sample: " + std::to_string(jr) + " (expected " +
                std::to_string(*n) + ")\n";
        text += "with singular-value equation: " + std::to_string(jr1) + " (expected " +
                std::to_string(*n + 1) + ")\n";
        text += pass ? "PASS\n" : "FAIL\n";
        code = pass ? 0 : 1;
    }
    return em.emit(res, certs, text, code);
}

int cmd_verify(Emitter& em, const std::string& suite, std::uint64_t seed) {
    auto results = run_verify(suite, seed);
    json res = json::array();
    std::string text;
    bool all = true;
    for (const auto& c : results) {
        all = all && c.pass;
        res.push_back(json{{"id", c.id},
                           {"suite", c.suite},
                           {"pass", c.pass},
                           {"evidence", c.evidence},
                           {"seconds", c.seconds}});
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3fs", c.seconds);
        text += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.id + " [" + c.suite + "] " + buf +
                "  " + c.evidence + "\n";
    }
    text += all ? "all checks passed\n" : "some checks FAILED\n";
    return em.emit(res, json::array(), text, all ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Waring rank / eigenscheme analysis for symmetric tensors"};
    app.require_subcommand(1);

    std::string expr, dir, mode = "exact", output = "text", suite = "all";
    double tol = 1e-9;
    std::uint64_t seed = 42;
    unsigned opt_n = 0, opt_r = 0, opt_d = 0;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--mode", mode, "exact|numeric")->check(CLI::IsMember({"exact", "numeric"}));
        c->add_option("--tol", tol, "numeric tolerance")->check(CLI::PositiveNumber);
        c->add_option("--output", output, "json|text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* analyze = app.add_subcommand("analyze", "full workup of a form");
    analyze->add_option("expr", expr, "form expression, e.g. \"x^3+y^3+(x+y)^3\"")->required();
    add_common(analyze);

    auto* eigen = app.add_subcommand("eigen", "eigenpolynomial / eigen ideal and support");
    eigen->add_option("expr", expr)->required();
    add_common(eigen);

    auto* locus = app.add_subcommand("locus", "Waring and forbidden locus of a binary form");
    locus->add_option("expr", expr)->required();
    add_common(locus);

    auto* intersect = app.add_subcommand("intersect", "decide W(F) meets Eig(F)");
    intersect->add_option("expr", expr)->required();
    add_common(intersect);

    auto* perturb = app.add_subcommand("perturb", "rank profile of F + lambda L^d");
    perturb->add_option("expr", expr)->required();
    perturb->add_option("--direction", dir, "linear form L, e.g. \"x+y\"")->required();
    add_common(perturb);

    auto* wesample = app.add_subcommand("we-sample", "rational point of the critical locus");
    wesample->add_option("-n", opt_n, "ambient dimension parameter")->required();
    wesample->add_option("-r", opt_r, "number of summands")->required();
    wesample->add_option("-d", opt_d, "degree")->required();
    wesample->add_option("--seed", seed, "rng seed");
    add_common(wesample);

    auto* wecheck = app.add_subcommand(
        "we-check", "membership of a binary form, or Jacobian certificates at a sample");
    wecheck->add_option("expr", expr, "binary form (membership mode)");
    wecheck->add_option("-n", opt_n);
    wecheck->add_option("-r", opt_r);
    wecheck->add_option("-d", opt_d);
    wecheck->add_option("--seed", seed, "rng seed");
    add_common(wecheck);

    auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
    verify->add_option("--suite", suite, "all|bw|sylvester|eig|monomial|locus|critvar|dynamics")
        ->check(CLI::IsMember(
            {"all", "bw", "sylvester", "eig", "monomial", "locus", "critvar", "dynamics"}));
    verify->add_option("--seed", seed, "rng seed");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    Emitter em;
    em.want_json = output == "json";
    em.options = json{{"mode", mode}, {"tol", tol}, {"seed", seed}};
    if (!expr.empty()) em.options["expr"] = expr;
    if (!dir.empty()) em.options["direction"] = dir;
    double use_tol = mode == "numeric" ? tol : 1e-9;

    try {
        if (*analyze) {
            em.verb = "analyze";
            return cmd_analyze(em, expr, use_tol);
        }
        if (*eigen) {
            em.verb = "eigen";
            return cmd_eigen(em, expr, use_tol);
        }
        if (*locus) {
            em.verb = "locus";
            return cmd_locus(em, expr);
        }
        if (*intersect) {
            em.verb = "intersect";
            return cmd_intersect(em, expr, use_tol);
        }
        if (*perturb) {
            em.verb = "perturb";
            return cmd_perturb(em, expr, dir, use_tol);
        }
        if (*wesample) {
            em.verb = "we-sample";
            em.options["n"] = opt_n;
            em.options["r"] = opt_r;
            em.options["d"] = opt_d;
            return cmd_we_sample(em, opt_n, opt_r, opt_d, seed);
        }
        if (*wecheck) {
            em.verb = "we-check";
            std::optional<unsigned> n, r, d;
            if (wecheck->count("-n")) n = opt_n;
            if (wecheck->count("-r")) r = opt_r;
            if (wecheck->count("-d")) d = opt_d;
            return cmd_we_check(em, expr, n, r, d, seed);
        }
        if (*verify) {
            em.verb = "verify-paper";
            em.options["suite"] = suite;
            return cmd_verify(em, suite, seed);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
