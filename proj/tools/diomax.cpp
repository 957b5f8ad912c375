// Command-line front end: point counts, L-polynomials, bounds, classification,
// Weil tests, the genus-2 Jacobian decision procedure, scans and searches.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diomax/bounds.hpp"
#include "diomax/classify.hpp"
#include "diomax/corpus.hpp"
#include "diomax/curves.hpp"
#include "diomax/errors.hpp"
#include "diomax/ff.hpp"
#include "diomax/intpoly.hpp"
#include "diomax/search.hpp"
#include "diomax/zeta.hpp"

namespace {

using diomax::poly::Int;
using diomax::poly::IntPoly;
using diomax::poly::Rat;
using json = nlohmann::json;

std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

Int parse_big(const std::string& s, const std::string& flag) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(flag, "not an integer: " + s);
    }
}

json lpoly_json(const IntPoly& L) {
    json a = json::array();
    for (unsigned i = 0; i <= L.degree(); ++i) a.push_back(L.coeff(i).get_str());
    return a;
}

std::string lpoly_str(const IntPoly& L) {
    std::string s = "[";
    for (unsigned i = 0; i <= L.degree(); ++i) {
        if (i) s += ",";
        s += L.coeff(i).get_str();
    }
    return s + "]";
}

diomax::corpus::Entry load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw diomax::domain_error("io_error", "cannot open curve file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return diomax::corpus::parse_entry_text(ss.str());
}

struct Ctx {
    bool as_json = false;
    std::uint64_t budget_max = 0; // 0: library default
    diomax::curves::Budget budget() const {
        diomax::curves::Budget b;
        if (budget_max) b.max_field = budget_max;
        return b;
    }
    void emit(const json& doc, const std::string& text) const {
        if (as_json)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text;
    }
};

int cmd_count(const Ctx& ctx, const std::string& file, unsigned ext) {
    auto e = load_curve_file(file);
    if (!e.model)
        throw diomax::invalid_model("entry '" + e.name + "' has declared data only");
    diomax::ff::Field F(e.p, e.n, e.modulus);
    Int n = diomax::curves::count_points(*e.model, F, ext, ctx.budget());
    json doc{{"name", e.name}, {"ext", ext}, {"count", n.get_str()}};
    ctx.emit(doc, "N_" + std::to_string(ext) + " = " + n.get_str() + "\n");
    return 0;
}

int cmd_lpoly(const Ctx& ctx, const std::string& file) {
    auto e = load_curve_file(file);
    if (!e.model)
        throw diomax::invalid_model("entry '" + e.name + "' has declared data only");
    diomax::ff::Field F(e.p, e.n, e.modulus);
    unsigned g = e.declared_genus;
    auto counts = diomax::curves::count_profile(*e.model, F, g, ctx.budget());
    Int q = 1;
    for (unsigned i = 0; i < e.n; ++i) q *= static_cast<unsigned long>(e.p);
    auto L = diomax::zeta::lpoly_from_counts(q, g, counts);
    json jc = json::array();
    for (auto& c : counts) jc.push_back(c.get_str());
    json doc{{"name", e.name},
             {"genus", g},
             {"counts", jc},
             {"lpoly", lpoly_json(L.L)},
             {"jacobian_order", diomax::zeta::jacobian_order(L).get_str()},
             {"trace_tau", diomax::zeta::trace_tau(L).get_str()}};
    std::string text = "L = " + lpoly_str(L.L) + "\n#J = " +
                       diomax::zeta::jacobian_order(L).get_str() + "\ntau = " +
                       diomax::zeta::trace_tau(L).get_str() + "\n";
    ctx.emit(doc, text);
    return 0;
}

int cmd_bounds(const Ctx& ctx, const std::string& qs, unsigned g,
               const std::string& n1s, const std::string& n2s) {
    Int q = parse_big(qs, "--q");
    auto [lo, hi] = diomax::bounds::weil_interval(q, g);
    auto ib = diomax::bounds::ihara_bound(q, g);
    json doc{{"q", q.get_str()},
             {"g", g},
             {"weil_interval", {lo.get_str(), hi.get_str()}},
             {"ihara",
              {{"D", ib.D.get_str()},
               {"floor_bound", ib.floor_bound.get_str()},
               {"exact", ib.exact_root.has_value()}}}};
    std::ostringstream text;
    text << "Weil interval: [" << lo.get_str() << ", " << hi.get_str() << "]\n";
    text << "Ihara bound: " << ib.floor_bound.get_str() << " (D = " << ib.D.get_str()
         << (ib.exact_root ? ", square" : "") << ")\n";
    if (!n1s.empty()) {
        Int n1 = parse_big(n1s, "--n1");
        Rat up = diomax::bounds::dm_upper_N2(q, g, n1);
        doc["n2_upper"] = rat_str(up);
        text << "N_2 upper: " << rat_str(up) << "\n";
        if (g >= 2) {
            auto low = diomax::bounds::dm_lower_N2(q, g, n1);
            doc["n2_lower"] = rat_str(low.value);
            doc["n2_lower_case"] = low.even_case ? "even" : "odd";
            text << "N_2 lower (" << (low.even_case ? "even" : "odd")
                 << " genus): " << rat_str(low.value) << "\n";
        }
        Rat ahl = diomax::bounds::ahl_bound(q, g, n1 - q - 1);
        doc["ahl_bound"] = rat_str(ahl);
        text << "Jacobian ceiling: " << rat_str(ahl) << "\n";
        if (!n2s.empty()) {
            Int n2 = parse_big(n2s, "--n2");
            auto d = diomax::bounds::dm_defect(q, g, n1, n2);
            doc["delta"] = d.delta.get_str();
            doc["delta_in_range"] = d.in_range;
            text << "delta = " << d.delta.get_str()
                 << (d.in_range ? "" : " (out of range)") << "\n";
        }
    }
    ctx.emit(doc, text.str());
    return 0;
}

int cmd_classify(const Ctx& ctx, const std::string& qs, unsigned g,
                 const std::string& n1s, const std::string& n2s) {
    Int q = parse_big(qs, "--q");
    Int n1 = parse_big(n1s, "--n1");
    Int n2 = parse_big(n2s, "--n2");
    auto v = diomax::classify::classify_counts(q, g, n1, n2);
    json doc{{"dm", v.is_dm},         {"ds", v.is_ds},
             {"ihara_max", v.is_ihara_max}, {"weil_max", v.is_weil_max},
             {"weil_min", v.is_weil_min},   {"notes", v.notes}};
    if (v.dm_two_alpha) doc["dm_two_alpha"] = v.dm_two_alpha->get_str();
    if (v.dm_lpoly) doc["dm_lpoly"] = lpoly_json(v.dm_lpoly->L);
    std::ostringstream text;
    text << "dm=" << (v.is_dm ? "true" : "false")
         << " ds=" << (v.is_ds ? "true" : "false")
         << " ihara_max=" << (v.is_ihara_max ? "true" : "false")
         << " weil_max=" << (v.is_weil_max ? "true" : "false")
         << " weil_min=" << (v.is_weil_min ? "true" : "false") << "\n";
    if (v.dm_two_alpha)
        text << "2alpha = " << v.dm_two_alpha->get_str()
             << ", L = " << lpoly_str(v.dm_lpoly->L) << "\n";
    for (auto& n : v.notes) text << "note: " << n << "\n";
    ctx.emit(doc, text.str());
    return 0;
}

int cmd_weilcheck(const Ctx& ctx, const std::string& polys, const std::string& qs) {
    Int q = parse_big(qs, "--q");
    std::vector<Int> coeffs;
    std::stringstream ss(polys);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(parse_big(item, "--poly"));
    IntPoly f(coeffs);
    // contract: monic, even degree, f(0) = q^g
    if (f.degree() == 0 || f.degree() % 2 != 0) {
        std::cerr << "usage error: polynomial degree must be even and positive\n";
        return 2;
    }
    if (f.coeff(f.degree()) != 1) {
        std::cerr << "usage error: polynomial must be monic\n";
        return 2;
    }
    unsigned g = f.degree() / 2;
    Int qg = 1;
    for (unsigned i = 0; i < g; ++i) qg *= q;
    if (f.coeff(0) != qg) {
        std::cerr << "usage error: constant term must equal q^g\n";
        return 2;
    }
    auto cert = diomax::poly::is_q_weil(f, q);
    json doc{{"weil", cert.weil},
             {"functional_equation", cert.functional_equation},
             {"h_squarefree_degree", cert.h_squarefree_degree},
             {"real_root_count", cert.real_root_count},
             {"e_squarefree_degree", cert.e_squarefree_degree},
             {"e_root_count_in_range", cert.e_root_count_in_range},
             {"reason", cert.reason}};
    std::ostringstream text;
    text << "weil = " << (cert.weil ? "true" : "false") << "\n";
    if (!cert.weil && !cert.reason.empty()) text << "reason: " << cert.reason << "\n";
    ctx.emit(doc, text.str());
    return 0;
}

int cmd_genus2(const Ctx& ctx, std::uint64_t p, unsigned n, const std::string& as) {
    Int a = parse_big(as, "--a");
    auto c = diomax::classify::genus2_jacobian_classify(p, n, a);
    json doc{{"verdict", c.verdict},
             {"cases", c.matched_cases},
             {"structure", c.structure}};
    std::ostringstream text;
    text << "verdict=" << (c.verdict ? "true" : "false") << " cases=[";
    for (std::size_t i = 0; i < c.matched_cases.size(); ++i)
        text << (i ? "," : "") << c.matched_cases[i];
    text << "]\n";
    for (std::size_t i = 0; i < c.matched_cases.size(); ++i)
        text << "  " << c.matched_cases[i] << ": " << c.structure[i] << "\n";
    ctx.emit(doc, text.str());
    return 0;
}

int cmd_scan(const Ctx& ctx, unsigned g_max, std::uint64_t q_max) {
    auto qs = diomax::search::prime_powers_upto(q_max);
    auto rows = diomax::search::ihara_candidate_scan(g_max, qs);
    if (ctx.as_json) {
        json arr = json::array();
        for (auto& r : rows)
            arr.push_back({{"g", r.g},
                           {"q", r.q.get_str()},
                           {"D", r.D.get_str()},
                           {"sqrtD", r.sqrtD.get_str()},
                           {"N_star", r.N_star.get_str()},
                           {"status", r.status}});
        std::cout << json{{"candidates", arr}}.dump(2) << "\n";
    } else {
        std::cout << "g,q,D,sqrtD,N_star,status\n";
        for (auto& r : rows)
            std::cout << r.g << "," << r.q.get_str() << "," << r.D.get_str() << ","
                      << r.sqrtD.get_str() << "," << r.N_star.get_str() << ","
                      << r.status << "\n";
    }
    return 0;
}

int cmd_search(const Ctx& ctx, std::uint64_t p, unsigned n) {
    diomax::ff::Field F(p, n);
    auto hits = diomax::search::genus2_dm_search(F, ctx.budget());
    if (ctx.as_json) {
        json arr = json::array();
        for (auto& h : hits)
            arr.push_back({{"model", h.model_str},
                           {"N1", h.N1.get_str()},
                           {"N2", h.N2.get_str()},
                           {"two_alpha", h.two_alpha.get_str()}});
        std::cout << json{{"hits", arr}}.dump(2) << "\n";
    } else {
        std::cout << hits.size() << " hit(s)\n";
        for (auto& h : hits)
            std::cout << h.model_str << "  N1=" << h.N1.get_str()
                      << " N2=" << h.N2.get_str() << "\n";
    }
    return 0;
}

int cmd_verify(const Ctx& ctx, const std::string& path) {
    auto entries = diomax::corpus::load_corpus(path);
    auto results = diomax::corpus::verify(entries, ctx.budget());
    bool all = true;
    json arr = json::array();
    std::ostringstream text;
    for (auto& r : results) {
        all = all && r.pass;
        arr.push_back({{"name", r.name},
                       {"pass", r.pass},
                       {"diffs", r.diffs},
                       {"skipped", r.skipped},
                       {"checks", r.checks}});
        text << r.name << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
        for (auto& d : r.diffs) text << "  diff: " << d << "\n";
        for (auto& s : r.skipped) text << "  skip: " << s << "\n";
    }
    ctx.emit(json{{"pass", all}, {"entries", arr}}, text.str());
    if (!all) {
        std::cerr << "error CorpusMismatch: declared data disagrees with recomputation\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact point counts, zeta data, bounds and classification "
                 "for curves over small finite fields"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_flag("--json", ctx.as_json, "emit machine-readable JSON");
    app.add_option("--budget", ctx.budget_max,
                   "override the enumeration budget (max field size)");

    std::string curve_file, corpus_file, q_str, n1_str, n2_str, a_str, poly_str;
    unsigned ext = 1, genus = 1, g_max = 18;
    std::uint64_t p = 2, q_max = 49;
    unsigned n = 1;

    auto* count = app.add_subcommand("count", "count rational points on a curve");
    count->add_option("--curve", curve_file, "curve file (corpus entry schema)")
        ->required();
    count->add_option("--ext", ext, "extension degree k (counts over F_{q^k})");

    auto* lpoly = app.add_subcommand("lpoly", "recover the L-polynomial of a curve");
    lpoly->add_option("--curve", curve_file, "curve file (corpus entry schema)")
        ->required();

    auto* bounds = app.add_subcommand("bounds", "Weil / Ihara / defect bounds");
    bounds->add_option("--q", q_str, "field size")->required();
    bounds->add_option("--g", genus, "genus")->required();
    bounds->add_option("--n1", n1_str, "known N_1");
    bounds->add_option("--n2", n2_str, "known N_2");

    auto* classify = app.add_subcommand("classify", "classify a count pair");
    classify->add_option("--q", q_str, "field size")->required();
    classify->add_option("--g", genus, "genus")->required();
    classify->add_option("--n1", n1_str, "N_1")->required();
    classify->add_option("--n2", n2_str, "N_2")->required();

    auto* weilcheck = app.add_subcommand("weilcheck", "test a q-Weil polynomial");
    weilcheck->add_option("--poly", poly_str, "coefficients c0,c1,... (monic, even degree)")
        ->required();
    weilcheck->add_option("--q", q_str, "field size")->required();

    auto* genus2 = app.add_subcommand(
        "genus2", "decide (T^2+aT+q)^2 as a genus-2 Jacobian charpoly");
    genus2->add_option("--p", p, "characteristic")->required();
    genus2->add_option("--n", n, "extension degree")->required();
    genus2->add_option("--a", a_str, "linear coefficient a")->required();

    auto* scan = app.add_subcommand("scan", "scan (g,q) couples for exact Ihara bound");
    scan->add_option("--gmax", g_max, "max genus");
    scan->add_option("--qmax", q_max, "max field size");

    auto* search = app.add_subcommand("search", "exhaustive genus-2 equal-alpha search");
    search->add_option("--p", p, "characteristic")->required();
    search->add_option("--n", n, "extension degree");

    auto* verify = app.add_subcommand("verify", "verify a curve corpus");
    verify->add_option("--corpus", corpus_file, "corpus JSON file")->required();

    // let the global flags (--json, --budget) appear after the subcommand too
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) return cmd_count(ctx, curve_file, ext);
        if (lpoly->parsed()) return cmd_lpoly(ctx, curve_file);
        if (bounds->parsed()) return cmd_bounds(ctx, q_str, genus, n1_str, n2_str);
        if (classify->parsed()) return cmd_classify(ctx, q_str, genus, n1_str, n2_str);
        if (weilcheck->parsed()) return cmd_weilcheck(ctx, poly_str, q_str);
        if (genus2->parsed()) return cmd_genus2(ctx, p, n, a_str);
        if (scan->parsed()) return cmd_scan(ctx, g_max, q_max);
        if (search->parsed()) return cmd_search(ctx, p, n);
        if (verify->parsed()) return cmd_verify(ctx, corpus_file);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const diomax::domain_error& e) {
        if (ctx.as_json)
            std::cout << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump(2)
                      << "\n";
        else
            std::cerr << "error " << e.code() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}
