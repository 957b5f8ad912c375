#include "diomax/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "diomax/bounds.hpp"
#include "diomax/classify.hpp"
#include "diomax/zeta.hpp"

namespace diomax::corpus {

namespace {

using nlohmann::json;

Int parse_int(const json& v) {
    if (v.is_number_integer()) return Int(v.get<long>());
    return Int(v.get<std::string>());
}

curves::CurveModel parse_model(const json& j, const json& entry) {
    curves::CurveModel M;
    M.declared_genus = entry.at("declared_genus").get<unsigned>();
    const std::string type = j.at("type").get<std::string>();
    if (type == "hyperelliptic") {
        curves::Hyperelliptic he;
        for (const auto& c : j.value("h", json::array()))
            he.h.push_back(c.get<ff::elem_t>());
        for (const auto& c : j.at("f"))
            he.f.push_back(c.get<ff::elem_t>());
        M.model = std::move(he);
    } else if (type == "smooth_plane") {
        curves::SmoothPlane pl;
        pl.degree = j.at("degree").get<unsigned>();
        for (const auto& t : j.at("terms"))
            pl.terms.push_back({t.at(0).get<unsigned>(), t.at(1).get<unsigned>(),
                                t.at(2).get<ff::elem_t>()});
        M.model = std::move(pl);
    } else if (type == "artin_schreier") {
        curves::ArtinSchreierLike as;
        as.lhs_exponent = j.at("lhs_exponent").get<unsigned>();
        for (const auto& t : j.at("rhs"))
            as.rhs.push_back({t.at(0).get<unsigned>(), t.at(1).get<ff::elem_t>()});
        if (entry.contains("infinity")) {
            for (const auto& [k, v] : entry.at("infinity").items())
                as.infinity[static_cast<unsigned>(std::stoul(k))] = parse_int(v);
        }
        M.model = std::move(as);
    } else {
        throw invalid_model("unknown model type: " + type);
    }
    return M;
}

Entry parse_entry(const json& j) {
    Entry e;
    e.name = j.at("name").get<std::string>();
    const auto& field = j.at("field");
    e.p = field.at("p").get<std::uint64_t>();
    e.n = field.value("n", 1u);
    if (field.contains("modulus"))
        for (const auto& c : field.at("modulus"))
            e.modulus.push_back(c.get<ff::coeff_t>());
    e.declared_genus = j.at("declared_genus").get<unsigned>();
    for (const auto& [k, v] : j.at("declared_counts").items())
        e.declared_counts[static_cast<unsigned>(std::stoul(k))] = parse_int(v);
    if (j.contains("declared_lpoly")) {
        std::vector<Int> c;
        for (const auto& v : j.at("declared_lpoly")) c.push_back(parse_int(v));
        e.declared_lpoly = IntPoly(std::move(c));
    }
    if (j.contains("model") && j.at("model").at("type") != "declared") {
        e.model = parse_model(j.at("model"), j);
        e.model->name = e.name;
    }
    e.note = j.value("note", "");
    return e;
}

} // namespace

std::vector<Entry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("io_error", "cannot open corpus file: " + path);
    json doc = json::parse(in);
    std::vector<Entry> out;
    for (const auto& j : doc.at("curves")) out.push_back(parse_entry(j));
    return out;
}

Entry parse_entry_text(const std::string& json_text) {
    return parse_entry(json::parse(json_text));
}

std::vector<VerifyResult> verify(const std::vector<Entry>& entries,
                                 const curves::Budget& budget) {
    std::vector<VerifyResult> results;
    for (const auto& e : entries) {
        VerifyResult r;
        r.name = e.name;
        try {
            Int q = 1;
            for (unsigned i = 0; i < e.n; ++i) q *= static_cast<unsigned long>(e.p);
            std::map<unsigned, Int> counts = e.declared_counts;
            if (e.model) {
                ff::Field F(e.p, e.n, e.modulus);
                for (const auto& [k, declared] : e.declared_counts) {
                    Int qk = 1;
                    bool fits = true;
                    for (unsigned i = 0; i < k && fits; ++i) {
                        qk *= q;
                        if (qk > static_cast<unsigned long>(budget.max_field)) fits = false;
                    }
                    if (!fits) {
                        r.skipped.push_back("N_" + std::to_string(k) + ": budget");
                        continue;
                    }
                    Int got = curves::count_points(*e.model, F, k, budget);
                    if (got != declared) {
                        r.diffs.push_back("N_" + std::to_string(k) + ": counted " +
                                          got.get_str() + ", declared " +
                                          declared.get_str());
                    } else {
                        r.checks.push_back("N_" + std::to_string(k) + " = " +
                                           got.get_str());
                    }
                }
            } else {
                r.skipped.push_back("declared-only entry: counts taken as given");
            }
            // defect + classification from N_1, N_2 when both declared
            auto it1 = counts.find(1), it2 = counts.find(2);
            if (it1 != counts.end() && it2 != counts.end()) {
                auto defect =
                    bounds::dm_defect(q, e.declared_genus, it1->second, it2->second);
                if (!defect.in_range)
                    r.diffs.push_back("delta out of range: " + defect.delta.get_str());
                else
                    r.checks.push_back("delta = " + defect.delta.get_str());
                auto verdict = classify::classify_counts(q, e.declared_genus,
                                                         it1->second, it2->second);
                r.checks.push_back(std::string("dm = ") +
                                   (verdict.is_dm ? "true" : "false"));
            }
            // declared L: check it reproduces every declared count
            if (e.declared_lpoly) {
                zeta::LPolynomial L{*e.declared_lpoly, q, e.declared_genus};
                for (const auto& [k, declared] : counts) {
                    Int nk = poly::lpoly_to_counts(L.L, q, k);
                    if (nk != declared)
                        r.diffs.push_back("L-derived N_" + std::to_string(k) +
                                          " = " + nk.get_str() + ", declared " +
                                          declared.get_str());
                    else
                        r.checks.push_back("L reproduces N_" + std::to_string(k));
                }
                // full recovery from recomputed counts when budget allows
                if (e.model) {
                    bool fits = true;
                    Int qk = 1;
                    for (unsigned i = 0; i < e.declared_genus && fits; ++i) {
                        qk *= q;
                        if (qk > static_cast<unsigned long>(budget.max_field)) fits = false;
                    }
                    if (fits) {
                        ff::Field F(e.p, e.n, e.modulus);
                        auto profile = curves::count_profile(*e.model, F,
                                                             e.declared_genus, budget);
                        auto L2 = zeta::lpoly_from_counts(q, e.declared_genus, profile);
                        if (!(L2.L == *e.declared_lpoly))
                            r.diffs.push_back("recovered L differs from declared L");
                        else
                            r.checks.push_back("L recovered from counts");
                    } else {
                        r.skipped.push_back("full L recovery: budget");
                    }
                }
            }
        } catch (const domain_error& err) {
            r.diffs.push_back(std::string(err.code()) + ": " + err.what());
        }
        r.pass = r.diffs.empty();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace diomax::corpus
