#include "foata/capi.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "foata/bijections.hpp"
#include "foata/canonical.hpp"
#include "foata/covering.hpp"
#include "foata/foata.hpp"
#include "foata/harness.hpp"
#include "foata/patterns.hpp"
#include "foata/serialize.hpp"
#include "foata/stats.hpp"

using json = nlohmann::json;

struct foata_perm {
    foata::Perm value;
};

namespace {

thread_local std::string t_last_error;

char* copy_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs the body, mapping exceptions onto status codes and recording the
// message for foata_last_error.
template <typename F>
foata_status guarded(F&& body, foata_status parse_failure = FOATA_ERR_DOMAIN) {
    try {
        body();
        t_last_error.clear();
        return FOATA_OK;
    } catch (const std::invalid_argument& e) {
        t_last_error = e.what();
        return parse_failure;
    } catch (const nlohmann::json::exception& e) {
        t_last_error = e.what();
        return parse_failure;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return FOATA_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return FOATA_ERR_INTERNAL;
    }
}

foata_status null_argument() {
    t_last_error = "null argument";
    return FOATA_ERR_NULL_ARGUMENT;
}

foata_status make_perm(foata_perm** out, foata::Perm p) {
    *out = new foata_perm{std::move(p)};
    return FOATA_OK;
}

template <typename F>
foata_status unary_map(const foata_perm* p, foata_perm** out, F&& fn) {
    if (!p || !out) return null_argument();
    return guarded([&] { make_perm(out, fn(p->value)); });
}

foata_status emit_json(char** out_json, const json& value) {
    *out_json = copy_string(value.dump());
    return *out_json ? FOATA_OK : FOATA_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* foata_status_message(foata_status status) {
    switch (status) {
        case FOATA_OK: return "ok";
        case FOATA_ERR_NULL_ARGUMENT: return "null argument";
        case FOATA_ERR_PARSE: return "parse error";
        case FOATA_ERR_DOMAIN: return "argument outside the operation's domain";
        case FOATA_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* foata_last_error(void) { return t_last_error.c_str(); }

foata_status foata_perm_parse(const char* text, foata_perm** out) {
    if (!text || !out) return null_argument();
    return guarded([&] { make_perm(out, foata::Perm::parse(text)); }, FOATA_ERR_PARSE);
}

foata_status foata_perm_from_images(const int* images, int degree, foata_perm** out) {
    if (!images || !out) return null_argument();
    return guarded(
        [&] {
            make_perm(out, foata::Perm(std::vector<int>(
                               images, images + (degree > 0 ? degree : 0))));
        },
        FOATA_ERR_PARSE);
}

foata_status foata_perm_identity(int degree, foata_perm** out) {
    if (!out) return null_argument();
    return guarded([&] { make_perm(out, foata::Perm::identity(degree)); });
}

foata_status foata_perm_clone(const foata_perm* p, foata_perm** out) {
    if (!p || !out) return null_argument();
    return guarded([&] { make_perm(out, p->value); });
}

void foata_perm_free(foata_perm* p) { delete p; }

int foata_perm_degree(const foata_perm* p) { return p ? p->value.degree() : -1; }

foata_status foata_perm_images(const foata_perm* p, int* buffer, int buffer_len) {
    if (!p || !buffer) return null_argument();
    if (buffer_len < p->value.degree()) {
        t_last_error = "buffer too small";
        return FOATA_ERR_DOMAIN;
    }
    const auto& img = p->value.images();
    std::memcpy(buffer, img.data(), img.size() * sizeof(int));
    return FOATA_OK;
}

foata_status foata_perm_format(const foata_perm* p, int bracketed, char** out_text) {
    if (!p || !out_text) return null_argument();
    *out_text = copy_string(p->value.str(bracketed != 0));
    return *out_text ? FOATA_OK : FOATA_ERR_INTERNAL;
}

int foata_perm_is_even(const foata_perm* p) {
    return p ? (p->value.is_even() ? 1 : 0) : -1;
}

long long foata_perm_inversions(const foata_perm* p) {
    return p ? p->value.inversions() : -1;
}

int foata_perm_equal(const foata_perm* a, const foata_perm* b) {
    if (!a || !b) return -1;
    return a->value == b->value ? 1 : 0;
}

foata_status foata_perm_compose(const foata_perm* a, const foata_perm* b,
                                foata_perm** out) {
    if (!a || !b || !out) return null_argument();
    return guarded([&] { make_perm(out, foata::compose(a->value, b->value)); });
}

foata_status foata_perm_inverse(const foata_perm* p, foata_perm** out) {
    return unary_map(p, out, [](const foata::Perm& x) { return x.inverse(); });
}

foata_status foata_perm_reverse(const foata_perm* p, foata_perm** out) {
    return unary_map(p, out, [](const foata::Perm& x) { return x.reversed(); });
}

foata_status foata_perm_complement(const foata_perm* p, foata_perm** out) {
    return unary_map(p, out, [](const foata::Perm& x) { return x.complemented(); });
}

foata_status foata_word_to_perm(const char* word, int degree, foata_perm** out) {
    if (!word || !out) return null_argument();
    return guarded(
        [&] { make_perm(out, foata::word_to_perm(foata::parse_word(word), degree)); },
        FOATA_ERR_PARSE);
}

foata_status foata_phi(const foata_perm* p, foata_perm** out) {
    return unary_map(p, out, [](const foata::Perm& x) { return foata::phi(x); });
}

foata_status foata_phi_inverse(const foata_perm* p, foata_perm** out) {
    return unary_map(p, out, [](const foata::Perm& x) { return foata::phi_inverse(x); });
}

foata_status foata_rtl_phi(const foata_perm* p, foata_perm** out) {
    return unary_map(p, out, [](const foata::Perm& x) { return foata::rtl_phi(x); });
}

foata_status foata_rtl_phi_inverse(const foata_perm* p, foata_perm** out) {
    return unary_map(p, out,
                     [](const foata::Perm& x) { return foata::rtl_phi_inverse(x); });
}

foata_status foata_phi_trace_json(const foata_perm* p, int rtl, char** out_json) {
    if (!p || !out_json) return null_argument();
    return guarded([&] {
        const foata::FoataTrace trace =
            rtl ? foata::rtl_phi_trace(p->value) : foata::phi_trace(p->value);
        emit_json(out_json, foata::to_json(trace));
    });
}

foata_status foata_cover_f(const foata_perm* v, foata_perm** out) {
    return unary_map(v, out, [](const foata::Perm& x) { return foata::f(x); });
}

foata_status foata_cover_f_q(int q, const foata_perm* w, foata_perm** out) {
    return unary_map(w, out, [q](const foata::Perm& x) { return foata::f_q(q, x); });
}

foata_status foata_psi(const foata_perm* v, foata_perm** out) {
    return unary_map(v, out, [](const foata::Perm& x) { return foata::psi(x); });
}

foata_status foata_psi_inverse(const foata_perm* p, foata_perm** out) {
    return unary_map(p, out, [](const foata::Perm& x) { return foata::psi_inverse(x); });
}

foata_status foata_psi_q(int q, const foata_perm* v, foata_perm** out) {
    return unary_map(v, out, [q](const foata::Perm& x) { return foata::psi_q(q, x); });
}

foata_status foata_psi_q_inverse(int q, const foata_perm* p, foata_perm** out) {
    return unary_map(p, out,
                     [q](const foata::Perm& x) { return foata::psi_q_inverse(q, x); });
}

foata_status foata_psi_trace_json(const foata_perm* v, char** out_json) {
    if (!v || !out_json) return null_argument();
    return guarded([&] { emit_json(out_json, foata::to_json(foata::psi_trace(v->value))); });
}

foata_status foata_psi_q_trace_json(int q, const foata_perm* v, char** out_json) {
    if (!v || !out_json) return null_argument();
    return guarded(
        [&] { emit_json(out_json, foata::to_json(foata::psi_q_trace(q, v->value))); });
}

foata_status foata_canonical_json(const foata_perm* p, char flavor, char** out_json) {
    if (!p || !out_json) return null_argument();
    return guarded([&] {
        if (flavor == 's')
            emit_json(out_json, foata::to_json(foata::s_canonical(p->value)));
        else if (flavor == 'a')
            emit_json(out_json, foata::to_json(foata::a_canonical(p->value)));
        else
            throw std::invalid_argument("flavor must be 's' or 'a'");
    });
}

foata_status foata_canonical_text(const foata_perm* p, char flavor, char** out_text) {
    if (!p || !out_text) return null_argument();
    return guarded([&] {
        std::string text;
        if (flavor == 's')
            text = foata::s_canonical(p->value).str();
        else if (flavor == 'a')
            text = foata::a_canonical(p->value).str();
        else
            throw std::invalid_argument("flavor must be 's' or 'a'");
        *out_text = copy_string(text);
        if (!*out_text) throw std::bad_alloc();
    });
}

foata_status foata_stats_json(const foata_perm* p, char flavor, int q, char** out_json) {
    if (!p || !out_json) return null_argument();
    return guarded([&] {
        if (flavor == 's')
            emit_json(out_json, foata::to_json(foata::s_stats(p->value)));
        else if (flavor == 'a')
            emit_json(out_json, foata::to_json(foata::a_stats(p->value)));
        else if (flavor == 'q')
            emit_json(out_json, foata::to_json(foata::q_stats(q, p->value)));
        else
            throw std::invalid_argument("flavor must be 's', 'a' or 'q'");
    });
}

foata_status foata_avoids_pat_q(int q, const foata_perm* p, int* out_avoids,
                                char** out_witness_json) {
    if (!p || !out_avoids) return null_argument();
    return guarded([&] {
        const bool avoids = foata::avoids_pat_q(q, p->value);
        *out_avoids = avoids ? 1 : 0;
        if (!out_witness_json) return;
        json witness = nullptr;
        if (!avoids) {
            for (const foata::DashedPattern& pattern : foata::pat(q)) {
                if (auto occ = foata::find_occurrence(pattern, p->value)) {
                    witness = json{{"pattern", pattern.str()}, {"positions", *occ}};
                    break;
                }
            }
        }
        emit_json(out_witness_json, witness);
    });
}

foata_status foata_enumerate_avoiders_json(int q, int degree, char** out_json) {
    if (!out_json) return null_argument();
    return guarded([&] {
        json out = json::array();
        for (const foata::Perm& p : foata::enumerate_avoiders(q, degree))
            out.push_back(p.str());
        emit_json(out_json, out);
    });
}

foata_status foata_verify_json(const char* request_json, char** out_json) {
    if (!request_json || !out_json) return null_argument();
    return guarded(
        [&] {
            const json req = json::parse(request_json);
            const std::string theorem = req.at("theorem").get<std::string>();
            const bool slow = req.value("slow", false);
            const int cap = slow ? 9 : 8;
            auto get_set = [&](const char* key) -> std::optional<std::set<int>> {
                if (!req.contains(key) || req[key].is_null()) return std::nullopt;
                const auto vec = req[key].get<std::vector<int>>();
                return std::set<int>(vec.begin(), vec.end());
            };

            std::vector<foata::VerifyReport> reports;
            if (theorem == "a-eq") {
                const int n = req.at("n").get<int>();
                const auto d1 = get_set("d1");
                const auto d2 = get_set("d2");
                if (d1 || d2) {
                    std::set<int> full;
                    for (int i = 1; i <= n - 1; ++i) full.insert(i);
                    reports.push_back(foata::check_a_eq(n, d1 ? *d1 : full,
                                                        d2 ? *d2 : full));
                } else {
                    reports = foata::check_a_eq_all(n);
                }
            } else if (theorem == "psi") {
                reports.push_back(foata::check_psi_theorem(req.at("n").get<int>(), cap));
            } else if (theorem == "psi-q") {
                reports.push_back(foata::check_psi_q_theorem(
                    req.at("n").get<int>(), req.at("q").get<int>(), cap));
            } else if (theorem == "qst1") {
                const int n = req.at("n").get<int>();
                const int q = req.at("q").get<int>();
                const auto b1 = get_set("d1");
                const auto b2 = get_set("d2");
                if (b1 && b2)
                    reports.push_back(foata::check_qst1(n, q, *b1, *b2));
                else
                    reports.push_back(foata::check_qst1_all(n, q));
            } else if (theorem == "qst2") {
                const int n = req.at("n").get<int>();
                const int q = req.at("q").get<int>();
                const auto b = get_set("d1");
                if (b)
                    reports.push_back(foata::check_qst2(n, q, *b));
                else
                    reports.push_back(foata::check_qst2_all(n, q));
            } else if (theorem == "foata") {
                reports.push_back(foata::check_foata_theorem(req.at("n").get<int>(), cap));
            } else if (theorem == "macmahon") {
                reports.push_back(foata::check_macmahon(req.at("n").get<int>()));
            } else if (theorem == "lemmas") {
                reports = foata::check_lemma_suite(req.value("n", 6),
                                                   req.value("q", 3));
            } else {
                throw std::invalid_argument("unknown theorem '" + theorem + "'");
            }

            bool all_pass = true;
            json arr = json::array();
            for (const auto& report : reports) {
                all_pass = all_pass && report.pass;
                arr.push_back(foata::to_json(report));
            }
            emit_json(out_json, json{{"status", all_pass ? "pass" : "fail"},
                                     {"reports", std::move(arr)}});
        },
        FOATA_ERR_PARSE);
}

foata_status foata_table_json(const char* request_json, char** out_json) {
    if (!request_json || !out_json) return null_argument();
    return guarded(
        [&] {
            const json req = json::parse(request_json);
            const std::string group = req.at("group").get<std::string>();
            const std::string stat = req.at("stat").get<std::string>();
            const int n = req.at("n").get<int>();
            const std::string filter = req.value("filter", "");
            if (group != "s" && group != "a")
                throw std::invalid_argument("group must be 's' or 'a'");
            const foata::DistributionPoly poly = foata::distribution(
                n, group == "a", foata::stat_by_name(group[0], stat),
                foata::filter_by_name(filter));
            json obj = foata::to_json(poly);
            obj["group"] = group;
            obj["stat"] = stat;
            obj["n"] = n;
            obj["filter"] = filter;
            obj["population"] = poly.total();
            emit_json(out_json, obj);
        },
        FOATA_ERR_PARSE);
}

void foata_string_free(char* text) { delete[] text; }

}  // extern "C"
