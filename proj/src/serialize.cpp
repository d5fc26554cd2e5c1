#include "foata/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace foata {

using json = nlohmann::json;

namespace {

json set_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

}  // namespace

json to_json(const Perm& p) { return json{{"images", p.images()}}; }

json to_json(const SCanonical& p) {
    json factors = json::array();
    for (const SFactor& f : p.factors) {
        json obj{{"j", f.j}};
        if (f.is_identity()) {
            obj["kind"] = "identity";
        } else {
            obj["kind"] = "run";
            obj["ell"] = f.ell;
        }
        factors.push_back(std::move(obj));
    }
    return json{{"group", "s"}, {"n", p.n}, {"factors", std::move(factors)},
                {"gen_count", p.gen_count()}, {"text", p.str()}};
}

json to_json(const ACanonical& p) {
    json factors = json::array();
    for (const AFactor& f : p.factors) {
        json obj{{"j", f.j}};
        switch (f.kind) {
            case AKind::identity: obj["kind"] = "identity"; break;
            case AKind::run:
                obj["kind"] = "run";
                obj["ell"] = f.ell;
                break;
            case AKind::tail:
                obj["kind"] = "tail";
                obj["sign"] = f.sign;
                break;
        }
        factors.push_back(std::move(obj));
    }
    return json{{"group", "a"}, {"n", p.n}, {"degree", p.degree()},
                {"factors", std::move(factors)}, {"gen_count", p.gen_count()},
                {"text", p.str()}};
}

json to_json(const SStatRecord& r) {
    return json{{"group", "s"},       {"n", r.n},
                {"des", set_json(r.des)},    {"maj", r.maj},
                {"rmaj", r.rmaj},     {"ell", r.ell},
                {"del", set_json(r.del_set)}, {"del_count", r.del_count},
                {"ltrm", set_json(r.ltrm)}};
}

json to_json(const AStatRecord& r) {
    return json{{"group", "a"},       {"n", r.n},
                {"des", set_json(r.des)},    {"maj", r.maj},
                {"rmaj", r.rmaj},     {"ell", r.ell},
                {"del", set_json(r.del_set)}, {"del_count", r.del_count},
                {"ltram", set_json(r.ltram)}};
}

json to_json(const QStatRecord& r) {
    return json{{"group", "q"},         {"q", r.q},
                {"m", r.m},             {"ell_q", r.ell_q},
                {"del_q", set_json(r.del_q)}, {"des_q", set_json(r.des_q)},
                {"rmaj_q", r.rmaj_q},   {"ltrm_q", set_json(r.ltrm_q)}};
}

json to_json(const FoataTrace& t) {
    json rows = json::array();
    for (const TraceRow& row : t.rows)
        rows.push_back(json{{"letters", row.letters}, {"cuts", row.cuts},
                            {"text", trace_row_text(row, t.cuts_before)}});
    return json{{"cuts_before", t.cuts_before}, {"rows", std::move(rows)}};
}

json to_json(const PsiTrace& t) {
    json obj{{"q", t.q},
             {"input", to_json(t.input)},
             {"f_image", to_json(t.f_image)},
             {"rtl_phi_image", to_json(t.rtl_phi_image)},
             {"image_presentation", to_json(t.image_s_pres)},
             {"output", to_json(t.output)}};
    if (t.input_a_pres) obj["input_presentation"] = to_json(*t.input_a_pres);
    if (t.input_s_pres) obj["input_presentation"] = to_json(*t.input_s_pres);
    if (t.lifted_a_pres) obj["lifted_presentation"] = to_json(*t.lifted_a_pres);
    if (t.lifted_s_pres) obj["lifted_presentation"] = to_json(*t.lifted_s_pres);
    return obj;
}

json to_json(const DistributionPoly& p) {
    json coeffs = json::object();
    for (auto& [v, c] : p.coeffs) coeffs[std::to_string(v)] = c;
    return json{{"coeffs", std::move(coeffs)}, {"total", p.total()}};
}

json to_json(const VerifyReport& r) {
    json obj{{"theorem", r.theorem},
             {"params", r.params},
             {"status", r.pass ? "pass" : "fail"},
             {"counterexample", r.counterexample ? *r.counterexample : json(nullptr)},
             {"population", r.population},
             {"elapsed_ms", r.elapsed_ms}};
    if (!r.notes.empty()) obj["notes"] = r.notes;
    return obj;
}

std::string trace_row_text(const TraceRow& row, bool cuts_before) {
    std::ostringstream os;
    for (size_t i = 0; i < row.letters.size(); ++i) {
        const bool cut =
            std::find(row.cuts.begin(), row.cuts.end(), static_cast<int>(i)) !=
            row.cuts.end();
        if (i > 0) os << ' ';
        if (cuts_before && cut) os << "| ";
        os << row.letters[i];
        if (!cuts_before && cut) os << " |";
    }
    return os.str();
}

}  // namespace foata
