// Command-line front end; talks to the engine exclusively through the C
// API in foata/capi.h.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foata/capi.h"

using json = nlohmann::json;

namespace {

struct PermHandle {
    foata_perm* p = nullptr;
    PermHandle() = default;
    PermHandle(const PermHandle&) = delete;
    PermHandle& operator=(const PermHandle&) = delete;
    ~PermHandle() { foata_perm_free(p); }
};

struct CStr {
    char* s = nullptr;
    CStr() = default;
    CStr(const CStr&) = delete;
    CStr& operator=(const CStr&) = delete;
    ~CStr() { foata_string_free(s); }
};

[[noreturn]] void die(foata_status status) {
    std::cerr << "error: " << foata_status_message(status);
    const char* detail = foata_last_error();
    if (detail && *detail) std::cerr << ": " << detail;
    std::cerr << "\n";
    std::exit(2);
}

void require_ok(foata_status status) {
    if (status != FOATA_OK) die(status);
}

void parse_perm(const std::string& text, PermHandle& h) {
    require_ok(foata_perm_parse(text.c_str(), &h.p));
}

std::string format(const foata_perm* p) {
    CStr text;
    require_ok(foata_perm_format(p, 0, &text.s));
    return text.s;
}

std::string perm_json_to_text(const json& perm_obj) {
    std::string out;
    for (const auto& v : perm_obj.at("images")) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v.get<int>());
    }
    return out;
}

void print_foata_rows(const json& trace) {
    for (const auto& row : trace.at("rows"))
        std::cout << "  " << row.at("text").get<std::string>() << "\n";
}

void print_psi_trace_text(const json& t) {
    auto pres_text = [&](const char* key) {
        return t.at(key).at("text").get<std::string>();
    };
    std::cout << "input:               " << perm_json_to_text(t.at("input")) << "\n"
              << "input presentation:  " << pres_text("input_presentation") << "\n"
              << "f image:             " << perm_json_to_text(t.at("f_image")) << "\n"
              << "rtl-phi image:       " << perm_json_to_text(t.at("rtl_phi_image"))
              << "\n"
              << "image presentation:  " << pres_text("image_presentation") << "\n"
              << "lifted presentation: " << pres_text("lifted_presentation") << "\n"
              << "output:              " << perm_json_to_text(t.at("output")) << "\n";
}

// phi / phi-inverse / rtl-phi / rtl-phi-inverse
void run_foata_verb(const std::string& input, bool rtl, bool inverse, bool trace,
                    bool as_json) {
    PermHandle in;
    parse_perm(input, in);
    PermHandle out;
    foata_status status;
    if (!rtl)
        status = inverse ? foata_phi_inverse(in.p, &out.p) : foata_phi(in.p, &out.p);
    else
        status =
            inverse ? foata_rtl_phi_inverse(in.p, &out.p) : foata_rtl_phi(in.p, &out.p);
    require_ok(status);

    json trace_obj;
    if (trace) {
        // for the inverse verbs the forward tableau of the result
        // reproduces the input as its last row
        CStr text;
        require_ok(foata_phi_trace_json(inverse ? out.p : in.p, rtl ? 1 : 0, &text.s));
        trace_obj = json::parse(text.s);
    }

    if (as_json) {
        json obj{{"input", input}, {"result", format(out.p)}};
        if (trace) obj["trace"] = trace_obj;
        std::cout << obj.dump(2) << "\n";
        return;
    }
    if (trace) print_foata_rows(trace_obj);
    std::cout << format(out.p) << "\n";
}

int run_verify(const json& request, bool as_json) {
    CStr text;
    require_ok(foata_verify_json(request.dump().c_str(), &text.s));
    const json response = json::parse(text.s);
    if (as_json) {
        std::cout << response.dump(2) << "\n";
    } else {
        for (const auto& report : response.at("reports")) {
            std::cout << (report.at("status") == "pass" ? "PASS" : "FAIL") << "  "
                      << report.at("theorem").get<std::string>() << "  params="
                      << report.at("params").dump() << "  population="
                      << report.at("population").get<long long>() << "  ("
                      << report.at("elapsed_ms").get<double>() << " ms)\n";
            if (report.at("status") != "pass")
                std::cout << "      counterexample: " << report.at("counterexample").dump()
                          << "\n";
        }
    }
    return response.at("status") == "pass" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation statistics, canonical presentations and the extended "
                 "Foata bijections"};
    app.require_subcommand(1);

    std::string input, word_text, group = "s", stat, filter, format_name = "csv";
    std::string theorem;
    int q = 1, degree = 0, n = 0, enumerate_m = 0;
    bool inverse = false, trace = false, as_json = false, slow = false;
    bool cover_a = false;
    std::vector<int> d1, d2;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "JSON output"); };

    // --- foata verbs ---
    for (auto [name, rtl, inv] : {std::tuple{"phi", false, false},
                                  std::tuple{"phi-inverse", false, true},
                                  std::tuple{"rtl-phi", true, false},
                                  std::tuple{"rtl-phi-inverse", true, true}}) {
        auto* sub = app.add_subcommand(name, "apply the transformation to a one-line "
                                             "permutation");
        sub->add_option("perm", input, "one-line permutation")->required();
        sub->add_flag("--trace", trace, "print the tableau rows");
        add_json(sub);
        bool is_rtl = rtl, is_inv = inv;
        sub->callback([&, is_rtl, is_inv] {
            run_foata_verb(input, is_rtl, is_inv, trace, as_json);
        });
    }

    // --- psi ---
    auto* psi_cmd = app.add_subcommand("psi", "extended bijection on A_{n+1}");
    psi_cmd->add_option("perm", input)->required();
    psi_cmd->add_flag("--inverse", inverse);
    psi_cmd->add_flag("--trace", trace, "print the staged record");
    add_json(psi_cmd);
    psi_cmd->callback([&] {
        PermHandle in;
        parse_perm(input, in);
        PermHandle out;
        require_ok(inverse ? foata_psi_inverse(in.p, &out.p) : foata_psi(in.p, &out.p));
        json trace_obj;
        if (trace) {
            CStr text;
            require_ok(foata_psi_trace_json(inverse ? out.p : in.p, &text.s));
            trace_obj = json::parse(text.s);
        }
        if (as_json) {
            json obj{{"result", format(out.p)}};
            if (trace) obj["trace"] = trace_obj;
            std::cout << obj.dump(2) << "\n";
            return;
        }
        if (trace) print_psi_trace_text(trace_obj);
        std::cout << format(out.p) << "\n";
    });

    // --- psiq ---
    auto* psiq_cmd = app.add_subcommand("psiq", "extended bijection on S_{n+q-1}");
    psiq_cmd->add_option("--q", q, "family parameter")->required();
    psiq_cmd->add_option("perm", input)->required();
    psiq_cmd->add_flag("--inverse", inverse);
    psiq_cmd->add_flag("--trace", trace);
    add_json(psiq_cmd);
    psiq_cmd->callback([&] {
        PermHandle in;
        parse_perm(input, in);
        PermHandle out;
        require_ok(inverse ? foata_psi_q_inverse(q, in.p, &out.p)
                           : foata_psi_q(q, in.p, &out.p));
        json trace_obj;
        if (trace) {
            CStr text;
            require_ok(foata_psi_q_trace_json(q, inverse ? out.p : in.p, &text.s));
            trace_obj = json::parse(text.s);
        }
        if (as_json) {
            json obj{{"result", format(out.p)}};
            if (trace) obj["trace"] = trace_obj;
            std::cout << obj.dump(2) << "\n";
            return;
        }
        if (trace) print_psi_trace_text(trace_obj);
        std::cout << format(out.p) << "\n";
    });

    // --- cover ---
    auto* cover_cmd = app.add_subcommand("cover", "covering maps f and f_q");
    cover_cmd->add_flag("--a", cover_a, "f : A_{n+1} -> S_n");
    auto* cover_q_opt = cover_cmd->add_option("--q", q, "f_q : S_{n+q-1} -> S_n");
    cover_cmd->add_option("perm", input)->required();
    add_json(cover_cmd);
    cover_cmd->callback([&] {
        PermHandle in;
        parse_perm(input, in);
        PermHandle out;
        if (cover_a == (cover_q_opt->count() > 0)) {
            std::cerr << "error: cover needs exactly one of --a / --q\n";
            std::exit(2);
        }
        require_ok(cover_a ? foata_cover_f(in.p, &out.p)
                           : foata_cover_f_q(q, in.p, &out.p));
        if (as_json)
            std::cout << json{{"result", format(out.p)}}.dump(2) << "\n";
        else
            std::cout << format(out.p) << "\n";
    });

    // --- avoid ---
    auto* avoid_cmd = app.add_subcommand("avoid", "dashed pattern family Pat(q)");
    avoid_cmd->add_option("--q", q)->required();
    auto* enum_opt = avoid_cmd->add_option("--enumerate", enumerate_m,
                                           "list all avoiders in S_m");
    avoid_cmd->add_option("perm", input);
    add_json(avoid_cmd);
    avoid_cmd->callback([&] {
        if (enum_opt->count() > 0) {
            CStr text;
            require_ok(foata_enumerate_avoiders_json(q, enumerate_m, &text.s));
            const json arr = json::parse(text.s);
            if (as_json) {
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& line : arr) std::cout << line.get<std::string>() << "\n";
            }
            return;
        }
        if (input.empty()) {
            std::cerr << "error: avoid needs a permutation or --enumerate\n";
            std::exit(2);
        }
        PermHandle in;
        parse_perm(input, in);
        int avoids = 0;
        CStr witness;
        require_ok(foata_avoids_pat_q(q, in.p, &avoids, &witness.s));
        if (as_json) {
            json obj{{"avoids", avoids == 1}, {"witness", json::parse(witness.s)}};
            std::cout << obj.dump(2) << "\n";
        } else {
            std::cout << (avoids ? "avoids" : "contains") << "\n";
            const json w = json::parse(witness.s);
            if (!w.is_null())
                std::cout << "witness: " << w.at("pattern").get<std::string>()
                          << " at positions " << w.at("positions").dump() << "\n";
        }
    });

    // --- stats ---
    auto* stats_cmd = app.add_subcommand("stats", "statistic record of one permutation");
    stats_cmd->add_option("--group", group, "s, a or q")->required();
    stats_cmd->add_option("--q", q);
    stats_cmd->add_option("perm", input)->required();
    add_json(stats_cmd);
    stats_cmd->callback([&] {
        PermHandle in;
        parse_perm(input, in);
        CStr text;
        require_ok(foata_stats_json(in.p, group.empty() ? 's' : group[0], q, &text.s));
        const json obj = json::parse(text.s);
        if (as_json) {
            std::cout << obj.dump(2) << "\n";
            return;
        }
        for (const auto& [key, value] : obj.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>()
                                                           : value.dump())
                      << "\n";
    });

    // --- canon ---
    auto* canon_cmd = app.add_subcommand("canon", "canonical presentation");
    canon_cmd->add_option("--group", group, "s or a")->required();
    canon_cmd->add_option("perm", input)->required();
    add_json(canon_cmd);
    canon_cmd->callback([&] {
        PermHandle in;
        parse_perm(input, in);
        if (as_json) {
            CStr text;
            require_ok(foata_canonical_json(in.p, group[0], &text.s));
            std::cout << json::parse(text.s).dump(2) << "\n";
        } else {
            CStr text;
            require_ok(foata_canonical_text(in.p, group[0], &text.s));
            std::cout << text.s << "\n";
        }
    });

    // --- word ---
    auto* word_cmd = app.add_subcommand("word", "expand a generator word");
    word_cmd->add_option("--degree", degree)->required();
    word_cmd->add_option("word", word_text, "e.g. \"s1 s2 s1\" or \"a2 a1^-1\"")
        ->required();
    add_json(word_cmd);
    word_cmd->callback([&] {
        PermHandle out;
        require_ok(foata_word_to_perm(word_text.c_str(), degree, &out.p));
        if (as_json)
            std::cout << json{{"result", format(out.p)}}.dump(2) << "\n";
        else
            std::cout << format(out.p) << "\n";
    });

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "run a theorem checker");
    verify_cmd
        ->add_option("--theorem", theorem,
                     "a-eq|psi|psi-q|qst1|qst2|foata|lemmas|macmahon")
        ->required();
    verify_cmd->add_option("--n", n);
    auto* q_opt = verify_cmd->add_option("--q", q);
    auto* d1_opt = verify_cmd->add_option("--d1", d1, "subset filter (space separated)");
    auto* d2_opt = verify_cmd->add_option("--d2", d2, "subset filter");
    verify_cmd->add_flag("--slow", slow, "raise the population cap to degree 9");
    add_json(verify_cmd);
    int verify_rc = 0;
    verify_cmd->callback([&] {
        json request{{"theorem", theorem}, {"slow", slow}};
        if (n > 0) request["n"] = n;
        if (q_opt->count() > 0) request["q"] = q;
        if (d1_opt->count() > 0) request["d1"] = d1;
        if (d2_opt->count() > 0) request["d2"] = d2;
        verify_rc = run_verify(request, as_json);
    });

    // --- table ---
    auto* table_cmd = app.add_subcommand("table", "distribution of one statistic");
    table_cmd->add_option("--group", group, "s or a")->required();
    table_cmd->add_option("--stat", stat, "ell|maj|rmaj|del|des")->required();
    table_cmd->add_option("--n", n)->required();
    table_cmd->add_option("--filter", filter, "avoid-q=<k> or inv-avoid-q=<k>");
    table_cmd->add_option("--format", format_name, "csv or json");
    table_cmd->callback([&] {
        json request{{"group", group}, {"stat", stat}, {"n", n}, {"filter", filter}};
        CStr text;
        require_ok(foata_table_json(request.dump().c_str(), &text.s));
        const json obj = json::parse(text.s);
        if (format_name == "json") {
            std::cout << obj.dump(2) << "\n";
            return;
        }
        if (format_name != "csv") {
            std::cerr << "error: unknown format '" << format_name << "'\n";
            std::exit(2);
        }
        std::vector<std::pair<int, long long>> rows;
        for (const auto& [key, value] : obj.at("coeffs").items())
            rows.emplace_back(std::stoi(key), value.get<long long>());
        std::sort(rows.begin(), rows.end());
        std::cout << "value,count\n";
        for (auto [v, c] : rows) std::cout << v << "," << c << "\n";
    });

    CLI11_PARSE(app, argc, argv);
    return verify_rc;
}
