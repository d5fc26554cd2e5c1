#include "foata/harness.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "foata/bijections.hpp"
#include "foata/canonical.hpp"
#include "foata/covering.hpp"
#include "foata/foata.hpp"
#include "foata/patterns.hpp"
#include "foata/stats.hpp"

namespace foata {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

uint32_t mask_of(const std::set<int>& s) {
    uint32_t m = 0;
    for (int v : s) m |= 1u << v;
    return m;
}

bool subset(uint32_t x, uint32_t of) { return (x & ~of) == 0; }

std::vector<int> set_to_vec(const std::set<int>& s) { return {s.begin(), s.end()}; }

std::set<int> mask_to_set(uint32_t m) {
    std::set<int> s;
    for (int v = 0; v < 32; ++v)
        if (m & (1u << v)) s.insert(v);
    return s;
}

json perm_json(const Perm& p) { return p.str(); }

json element_counterexample(const std::string& check, const Perm& p, json detail = {}) {
    json ce{{"check", check}, {"perm", perm_json(p)}};
    if (!detail.is_null()) ce["detail"] = detail;
    return ce;
}

void require_cap(int degree, int cap) {
    if (degree > cap)
        throw std::invalid_argument("population degree " + std::to_string(degree) +
                                    " exceeds cap " + std::to_string(cap));
}

void check_poly_pair(VerifyReport& report, const DistributionPoly& lhs,
                     const DistributionPoly& rhs, const std::string& lhs_name,
                     const std::string& rhs_name, json context) {
    if (lhs == rhs) return;
    std::set<int> values;
    for (auto& [v, c] : lhs.coeffs) values.insert(v);
    for (auto& [v, c] : rhs.coeffs) values.insert(v);
    for (int v : values) {
        long long cl = lhs.coeffs.count(v) ? lhs.coeffs.at(v) : 0;
        long long cr = rhs.coeffs.count(v) ? rhs.coeffs.at(v) : 0;
        if (cl != cr) {
            report.pass = false;
            report.counterexample = json{{"stat_value", v},
                                         {"lhs_name", lhs_name},
                                         {"lhs_count", cl},
                                         {"rhs_name", rhs_name},
                                         {"rhs_count", cr},
                                         {"context", std::move(context)}};
            return;
        }
    }
}

// Per-element data shared by the a_eq checkers.
struct AEqElem {
    Perm v = Perm::identity(1);
    uint32_t des_inv = 0;
    uint32_t del_inv = 0;
    int rmaj = 0;
    long long ell = 0;
    long long psi_rank = 0;
    long long psi_ell = 0;
    uint32_t psi_des_inv = 0;
    uint32_t psi_del_inv = 0;
};

std::vector<AEqElem> a_eq_population(int n) {
    std::vector<AEqElem> pop;
    for_each_even_permutation(n + 1, [&](const Perm& v) {
        AEqElem e;
        e.v = v;
        const Perm vi = v.inverse();
        e.des_inv = mask_of(des_a(vi));
        e.del_inv = mask_of(del_a(vi));
        const AStatRecord rec = a_stats(v);
        e.rmaj = rec.rmaj;
        e.ell = rec.ell;
        const Perm u = psi(v);
        e.psi_rank = u.lex_rank();
        e.psi_ell = ell_a(u);
        const Perm ui = u.inverse();
        e.psi_des_inv = mask_of(des_a(ui));
        e.psi_del_inv = mask_of(del_a(ui));
        pop.push_back(std::move(e));
    });
    return pop;
}

// Polynomial equality plus the bijective route for one (D1, D2) pair.
bool a_eq_pair(VerifyReport& report, const std::vector<AEqElem>& pop, uint32_t d1,
               uint32_t d2, json context) {
    DistributionPoly lhs, rhs;
    std::set<long long> image;
    long long filtered = 0;
    for (const AEqElem& e : pop) {
        if (!subset(e.des_inv, d1) || !subset(e.del_inv, d2)) continue;
        ++filtered;
        lhs.add(e.rmaj);
        rhs.add(static_cast<int>(e.ell));
        // Psi must keep the element inside the filtered set and carry
        // rmaj to ell_A
        if (!subset(e.psi_des_inv, d1) || !subset(e.psi_del_inv, d2) ||
            e.psi_ell != e.rmaj) {
            report.pass = false;
            report.counterexample =
                element_counterexample("psi restriction", e.v, context);
            return false;
        }
        image.insert(e.psi_rank);
    }
    if (static_cast<long long>(image.size()) != filtered) {
        report.pass = false;
        report.counterexample = json{{"check", "psi not injective on filtered set"},
                                     {"context", std::move(context)}};
        return false;
    }
    check_poly_pair(report, lhs, rhs, "rmaj_A", "ell_A", std::move(context));
    return report.pass;
}

}  // namespace

long long DistributionPoly::total() const {
    long long t = 0;
    for (auto& [v, c] : coeffs) t += c;
    return t;
}

std::string DistributionPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [v, c] : coeffs) {
        if (!first) os << " + ";
        os << c << "*q^" << v;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

DistributionPoly distribution(int degree, bool alternating_only, const StatFn& stat,
                              const FilterFn& filter) {
    DistributionPoly poly;
    for_each_permutation(degree, [&](const Perm& p) {
        if (alternating_only && !p.is_even()) return;
        if (filter && !filter(p)) return;
        poly.add(static_cast<int>(stat(p)));
    });
    return poly;
}

VerifyReport compare_statistics(const std::string& name, int degree, bool alternating_only,
                                const std::string& lhs_name, const StatFn& lhs,
                                const std::string& rhs_name, const StatFn& rhs,
                                const FilterFn& filter) {
    const auto start = Clock::now();
    VerifyReport report;
    report.theorem = name;
    report.params = {{"degree", degree}, {"alternating", alternating_only}};
    DistributionPoly pl = distribution(degree, alternating_only, lhs, filter);
    DistributionPoly pr = distribution(degree, alternating_only, rhs, filter);
    report.population = pl.total();
    check_poly_pair(report, pl, pr, lhs_name, rhs_name,
                    json{{"degree", degree}, {"alternating", alternating_only}});
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_a_eq(int n, const std::set<int>& d1, const std::set<int>& d2) {
    if (n < 2) throw std::invalid_argument("check_a_eq: n must be >= 2");
    const auto start = Clock::now();
    VerifyReport report;
    report.theorem = "a-eq";
    report.params = {{"n", n}, {"d1", set_to_vec(d1)}, {"d2", set_to_vec(d2)}};
    const auto pop = a_eq_population(n);
    report.population = static_cast<long long>(pop.size());
    a_eq_pair(report, pop, mask_of(d1), mask_of(d2),
              json{{"d1", set_to_vec(d1)}, {"d2", set_to_vec(d2)}});
    report.elapsed_ms = ms_since(start);
    return report;
}

std::vector<VerifyReport> check_a_eq_all(int n) {
    if (n < 2) throw std::invalid_argument("check_a_eq_all: n must be >= 2");
    const auto pop = a_eq_population(n);
    const uint32_t ground_d1 = mask_of([&] {
        std::set<int> s;
        for (int i = 1; i <= n - 1; ++i) s.insert(i);
        return s;
    }());

    std::vector<VerifyReport> out;
    for (bool extended : {false, true}) {
        const auto start = Clock::now();
        VerifyReport report;
        report.theorem = "a-eq";
        report.params = {{"n", n}, {"regime", extended ? "extended" : "literal"}};
        report.population = static_cast<long long>(pop.size());
        const int d2_top = extended ? n + 1 : n - 1;
        uint32_t ground_d2 = 0;
        for (int i = 1; i <= d2_top; ++i) ground_d2 |= 1u << i;
        long long pairs = 0;
        for (uint32_t d1 = 0;; d1 = (d1 - ground_d1) & ground_d1) {
            for (uint32_t d2 = 0;; d2 = (d2 - ground_d2) & ground_d2) {
                ++pairs;
                if (!a_eq_pair(report, pop, d1, d2,
                               json{{"d1", set_to_vec(mask_to_set(d1))},
                                    {"d2", set_to_vec(mask_to_set(d2))},
                                    {"regime", extended ? "extended" : "literal"}}))
                    break;
                if (d2 == ground_d2) break;
            }
            if (!report.pass || d1 == ground_d1) break;
        }
        report.params["pairs"] = pairs;
        if (extended)
            report.notes.push_back(
                "theorem header bounds D2 by n-1 although Del_A reaches n+1; the "
                "extended regime covers D2 subsets of {1..n+1}");
        report.elapsed_ms = ms_since(start);
        out.push_back(std::move(report));
    }
    return out;
}

VerifyReport check_psi_theorem(int n, int degree_cap) {
    if (n < 2) throw std::invalid_argument("check_psi_theorem: n must be >= 2");
    require_cap(n + 1, degree_cap);
    const auto start = Clock::now();
    VerifyReport report;
    report.theorem = "psi";
    report.params = {{"n", n}, {"degree", n + 1}};
    std::vector<char> seen(static_cast<size_t>(factorial(n + 1)), 0);
    long long count = 0;
    for_each_even_permutation(n + 1, [&](const Perm& v) {
        if (!report.pass) return;
        ++count;
        const Perm u = psi(v);
        const AStatRecord sv = a_stats(v);
        const AStatRecord su = a_stats(u);
        auto fail = [&](const std::string& check, json detail) {
            report.pass = false;
            report.counterexample = element_counterexample(check, v, std::move(detail));
        };
        const auto rank = static_cast<size_t>(u.lex_rank());
        if (seen[rank]) return fail("bijectivity: image repeated", perm_json(u));
        seen[rank] = 1;
        if (sv.rmaj != su.ell)
            return fail("rmaj_A(v) = ell_A(psi(v))",
                        json{{"rmaj", sv.rmaj}, {"ell", su.ell}});
        if (sv.del_count != su.del_count)
            return fail("del_A(v) = del_A(psi(v))",
                        json{{"lhs", sv.del_count}, {"rhs", su.del_count}});
        if (del_a(v.inverse()) != del_a(u.inverse()))
            return fail("Del_A(v^-1) = Del_A(psi(v)^-1)", {});
        if (des_a(v.inverse()) != des_a(u.inverse()))
            return fail("Des_A(v^-1) = Des_A(psi(v)^-1)", {});
        if (psi_inverse(u) != v) return fail("psi_inverse . psi = id", perm_json(u));
    });
    report.population = count;
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_psi_q_theorem(int n, int q, int degree_cap) {
    if (n < 1 || q < 1) throw std::invalid_argument("check_psi_q_theorem: bad n or q");
    const int m = n + q - 1;
    require_cap(m, degree_cap);
    const auto start = Clock::now();
    VerifyReport report;
    report.theorem = "psi-q";
    report.params = {{"n", n}, {"q", q}, {"degree", m}};
    std::vector<char> seen(static_cast<size_t>(factorial(m)), 0);
    long long count = 0;
    for_each_permutation(m, [&](const Perm& v) {
        if (!report.pass) return;
        ++count;
        const Perm u = psi_q(q, v);
        auto fail = [&](const std::string& check, json detail) {
            report.pass = false;
            report.counterexample = element_counterexample(check, v, std::move(detail));
        };
        const auto rank = static_cast<size_t>(u.lex_rank());
        if (seen[rank]) return fail("bijectivity: image repeated", perm_json(u));
        seen[rank] = 1;
        const QStatRecord sv = q_stats(q, v);
        if (sv.rmaj_q != ell_q(q, u))
            return fail("rmaj_q(v) = ell_q(psi_q(v))",
                        json{{"rmaj_q", sv.rmaj_q}, {"ell_q", ell_q(q, u)}});
        if (del_q(q, v.inverse()) != del_q(q, u.inverse()))
            return fail("Del_q(v^-1) = Del_q(psi_q(v)^-1)", {});
        if (des_q(q, v.inverse()) != des_q(q, u.inverse()))
            return fail("Des_q(v^-1) = Des_q(psi_q(v)^-1)", {});
        if (psi_q_inverse(q, u) != v)
            return fail("psi_q_inverse . psi_q = id", perm_json(u));
        if (psi_q(q, psi_q_inverse(q, v)) != v)
            return fail("psi_q . psi_q_inverse = id", {});
        if (q == 1 && u != rtl_phi(v)) return fail("psi_1 = rtl_phi", {});
    });
    report.population = count;
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_qst1(int n, int q, const std::set<int>& b1, const std::set<int>& b2) {
    if (n < 1 || q < 1) throw std::invalid_argument("check_qst1: bad n or q");
    const int m = n + q - 1;
    const auto start = Clock::now();
    VerifyReport report;
    report.theorem = "qst1";
    report.params = {{"n", n}, {"q", q}, {"b1", set_to_vec(b1)}, {"b2", set_to_vec(b2)}};
    DistributionPoly lhs, rhs;
    long long filtered = 0;
    for_each_permutation(m, [&](const Perm& p) {
        const Perm pi = p.inverse();
        if (des_q(q, pi) != b1 || del_q(q, pi) != b2) return;
        ++filtered;
        lhs.add(static_cast<int>(ell_q(q, p)));
        rhs.add(q_stats(q, p).rmaj_q);
    });
    report.population = filtered;
    check_poly_pair(report, lhs, rhs, "ell_q", "rmaj_q",
                    json{{"b1", set_to_vec(b1)}, {"b2", set_to_vec(b2)}});
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_qst1_all(int n, int q) {
    if (n < 1 || q < 1) throw std::invalid_argument("check_qst1_all: bad n or q");
    const int m = n + q - 1;
    const auto start = Clock::now();
    VerifyReport report;
    report.theorem = "qst1";
    report.params = {{"n", n}, {"q", q}, {"pairs", "all"}};
    uint32_t ground = 0;
    for (int i = q; i <= m; ++i) ground |= 1u << i;
    std::map<std::pair<uint32_t, uint32_t>, std::pair<DistributionPoly, DistributionPoly>>
        buckets;
    long long count = 0;
    for_each_permutation(m, [&](const Perm& p) {
        ++count;
        const Perm pi = p.inverse();
        const uint32_t b1 = mask_of(des_q(q, pi));
        const uint32_t b2 = mask_of(del_q(q, pi));
        if (!subset(b1, ground) || !subset(b2, ground)) {
            report.pass = false;
            report.counterexample =
                element_counterexample("q-descent/delent set outside ground set", p, {});
            return;
        }
        auto& [lhs, rhs] = buckets[{b1, b2}];
        lhs.add(static_cast<int>(ell_q(q, p)));
        rhs.add(q_stats(q, p).rmaj_q);
    });
    report.population = count;
    report.params["buckets"] = buckets.size();
    for (auto& [key, polys] : buckets) {
        if (!report.pass) break;
        check_poly_pair(report, polys.first, polys.second, "ell_q", "rmaj_q",
                        json{{"b1", set_to_vec(mask_to_set(key.first))},
                             {"b2", set_to_vec(mask_to_set(key.second))}});
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_qst2(int n, int q, const std::set<int>& b) {
    if (n < 1 || q < 1) throw std::invalid_argument("check_qst2: bad n or q");
    const int m = n + q - 1;
    const auto start = Clock::now();
    VerifyReport report;
    report.theorem = "qst2";
    report.params = {{"n", n}, {"q", q}, {"b", set_to_vec(b)}};
    DistributionPoly lhs, rhs;
    long long filtered = 0;
    for_each_permutation(m, [&](const Perm& p) {
        const Perm pi = p.inverse();
        if (!avoids_pat_q(q, pi) || des_q(q, pi) != b) return;
        ++filtered;
        lhs.add(static_cast<int>(ell_q(q, p)));
        rhs.add(q_stats(q, p).rmaj_q);
    });
    report.population = filtered;
    check_poly_pair(report, lhs, rhs, "ell_q", "rmaj_q", json{{"b", set_to_vec(b)}});
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_qst2_all(int n, int q) {
    if (n < 1 || q < 1) throw std::invalid_argument("check_qst2_all: bad n or q");
    const int m = n + q - 1;
    const auto start = Clock::now();
    VerifyReport report;
    report.theorem = "qst2";
    report.params = {{"n", n}, {"q", q}, {"subsets", "all"}};
    std::map<uint32_t, std::pair<DistributionPoly, DistributionPoly>> buckets;
    long long avoiders = 0;
    for_each_permutation(m, [&](const Perm& p) {
        const Perm pi = p.inverse();
        if (!avoids_pat_q(q, pi)) return;
        ++avoiders;
        auto& [lhs, rhs] = buckets[mask_of(des_q(q, pi))];
        lhs.add(static_cast<int>(ell_q(q, p)));
        rhs.add(q_stats(q, p).rmaj_q);
    });
    report.population = avoiders;
    report.params["buckets"] = buckets.size();
    for (auto& [key, polys] : buckets) {
        if (!report.pass) break;
        check_poly_pair(report, polys.first, polys.second, "ell_q", "rmaj_q",
                        json{{"b", set_to_vec(mask_to_set(key))}});
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_foata_theorem(int n, int degree_cap) {
    if (n < 1) throw std::invalid_argument("check_foata_theorem: n must be >= 1");
    require_cap(n, degree_cap);
    const auto start = Clock::now();
    VerifyReport report;
    report.theorem = "foata";
    report.params = {{"n", n}};
    std::vector<char> seen(static_cast<size_t>(factorial(n)), 0);
    long long count = 0;
    for_each_permutation(n, [&](const Perm& s) {
        if (!report.pass) return;
        ++count;
        const Perm u = phi(s);
        const Perm rtl = rtl_phi(s);
        const SStatRecord rec = s_stats(s);
        auto fail = [&](const std::string& check, json detail) {
            report.pass = false;
            report.counterexample = element_counterexample(check, s, std::move(detail));
        };
        const auto rank = static_cast<size_t>(u.lex_rank());
        if (seen[rank]) return fail("bijectivity: image repeated", perm_json(u));
        seen[rank] = 1;
        if (rec.maj != u.inversions())
            return fail("maj_S = ell_S . phi",
                        json{{"maj", rec.maj}, {"ell", u.inversions()}});
        if (rec.rmaj != rtl.inversions())
            return fail("rmaj_S = ell_S . rtl_phi",
                        json{{"rmaj", rec.rmaj}, {"ell", rtl.inversions()}});
        if (rtlm(s) != rtlm(u)) return fail("rtlm preserved by phi", {});
        if (des_s(s.inverse()) != des_s(u.inverse()))
            return fail("Des_S(s^-1) preserved by phi", {});
        if (phi(s.complemented()) != u.complemented())
            return fail("phi commutes with com", {});
        if (rtl != phi(s.reversed()).reversed())
            return fail("rtl_phi = rev . phi . rev", {});
        if (phi_inverse(u) != s) return fail("phi_inverse . phi = id", {});
        if (rtl_phi_inverse(rtl) != s) return fail("rtl_phi_inverse . rtl_phi = id", {});
    });
    report.population = count;
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_macmahon(int n) {
    VerifyReport report = compare_statistics(
        "macmahon", n, false, "maj_S", [](const Perm& p) { return s_stats(p).maj; },
        "ell_S", [](const Perm& p) { return p.inversions(); });
    report.params = {{"n", n}};
    return report;
}

namespace {

template <typename Body>
VerifyReport run_lemma(const std::string& name, json params, Body&& body) {
    const auto start = Clock::now();
    VerifyReport report;
    report.theorem = name;
    report.params = std::move(params);
    body(report);
    report.elapsed_ms = ms_since(start);
    return report;
}

// Exhaustive loop helper: predicate must hold for every element.
template <typename Pred>
void all_of_sn(VerifyReport& report, int n_lo, int n_hi, bool alternating,
               const std::string& check, Pred&& pred) {
    for (int n = n_lo; n <= n_hi && report.pass; ++n) {
        for_each_permutation(n, [&](const Perm& p) {
            if (!report.pass) return;
            if (alternating && !p.is_even()) return;
            ++report.population;
            if (!pred(p)) {
                report.pass = false;
                report.counterexample = element_counterexample(check, p, json{{"n", n}});
            }
        });
    }
}

}  // namespace

std::vector<VerifyReport> check_lemma_suite(int n_cap, int q_cap) {
    std::vector<VerifyReport> out;
    const json caps{{"n_cap", n_cap}, {"q_cap", q_cap}};

    out.push_back(run_lemma("phi-com-commute", caps, [&](VerifyReport& r) {
        all_of_sn(r, 1, n_cap, false, "phi(com(s)) = com(phi(s))", [](const Perm& s) {
            return phi(s.complemented()) == phi(s).complemented();
        });
    }));

    out.push_back(run_lemma("length-rev-com", caps, [&](VerifyReport& r) {
        all_of_sn(r, 1, n_cap, false, "ell(rev com w) = ell(w)", [](const Perm& w) {
            return w.complemented().reversed().inversions() == w.inversions();
        });
    }));

    out.push_back(run_lemma("maj-rev-com", caps, [&](VerifyReport& r) {
        all_of_sn(r, 1, n_cap, false, "maj(rev com w) = rmaj(w)", [](const Perm& w) {
            return s_stats(w.complemented().reversed()).maj == s_stats(w).rmaj;
        });
    }));

    out.push_back(run_lemma("des-iff-length", caps, [&](VerifyReport& r) {
        all_of_sn(r, 1, n_cap, false, "i in Des_S iff ell(s) > ell(s s_i)",
                  [](const Perm& s) {
                      const auto des = des_s(s);
                      for (int i = 1; i < s.degree(); ++i) {
                          std::vector<int> img = s.images();
                          std::swap(img[static_cast<size_t>(i) - 1],
                                    img[static_cast<size_t>(i)]);
                          const bool longer =
                              s.inversions() > Perm::unchecked(img).inversions();
                          if (longer != (des.count(i) > 0)) return false;
                      }
                      return true;
                  });
    }));

    out.push_back(run_lemma("ltrm-rtlphi", caps, [&](VerifyReport& r) {
        all_of_sn(r, 1, n_cap, false, "ltrm(w) = ltrm(rtl_phi(w))", [](const Perm& w) {
            const Perm t = rtl_phi(w);
            return ltrm(w) == ltrm(t) && del_s(w).size() == del_s(t).size();
        });
    }));

    out.push_back(run_lemma("rtlm-phi", caps, [&](VerifyReport& r) {
        all_of_sn(r, 1, n_cap, false, "rtlm(s) = rtlm(phi(s))",
                  [](const Perm& s) { return rtlm(s) == rtlm(phi(s)); });
    }));

    out.push_back(run_lemma("inv-des-phi", caps, [&](VerifyReport& r) {
        all_of_sn(r, 1, n_cap, false, "Des_S(s^-1) = Des_S(phi(s)^-1)",
                  [](const Perm& s) {
                      return des_s(s.inverse()) == des_s(phi(s).inverse());
                  });
    }));

    out.push_back(run_lemma("factor-preservation", caps, [&](VerifyReport& r) {
        all_of_sn(r, 1, n_cap, false, "full-run slots preserved by rtl_phi",
                  [](const Perm& w) {
                      const auto a = s_canonical(w).factors;
                      const auto b = s_canonical(rtl_phi(w)).factors;
                      for (size_t k = 0; k < a.size(); ++k)
                          if (a[k].is_full() != b[k].is_full()) return false;
                      return true;
                  });
    }));

    out.push_back(run_lemma("rep-ltrm-s", caps, [&](VerifyReport& r) {
        all_of_sn(r, 1, n_cap, false, "j in ltrm(w) iff w_{j-1} = s_{j-1}...s_1",
                  [](const Perm& w) {
                      const auto pres = s_canonical(w);
                      const auto mins = ltrm(w);
                      for (int j = 2; j <= w.degree(); ++j)
                          if (pres.factors[static_cast<size_t>(j) - 2].is_full() !=
                              (mins.count(j) > 0))
                              return false;
                      return true;
                  });
    }));

    out.push_back(run_lemma("rep-ltram-a", caps, [&](VerifyReport& r) {
        all_of_sn(r, 3, n_cap, true, "j in ltram(v) iff v_{j-2} is a tail",
                  [](const Perm& v) {
                      const auto pres = a_canonical(v);
                      const auto mins = ltram(v);
                      for (int j = 3; j <= v.degree(); ++j)
                          if (pres.factors[static_cast<size_t>(j) - 3].is_tail() !=
                              (mins.count(j) > 0))
                              return false;
                      return true;
                  });
    }));

    for (int q = 1; q <= q_cap; ++q) {
        out.push_back(run_lemma("rep-ltrm-q", json{{"n_cap", n_cap}, {"q", q}},
                                [&](VerifyReport& r) {
            all_of_sn(r, q, n_cap, false,
                      "j in ltrm_q(v) iff v_{j-1} = s_{j-1}...s_ell, ell <= q",
                      [q](const Perm& v) {
                          const auto pres = s_canonical(v);
                          const auto mins = ltrm_q(q, v);
                          for (int j = q + 1; j <= v.degree(); ++j) {
                              const SFactor& fac = pres.factors[static_cast<size_t>(j) - 2];
                              const bool reaches =
                                  !fac.is_identity() && fac.ell <= q;
                              if (reaches != (mins.count(j) > 0)) return false;
                          }
                          return true;
                      });
        }));
    }

    out.push_back(run_lemma("dual-ltrm-s", caps, [&](VerifyReport& r) {
        all_of_sn(r, 1, n_cap, false, "ltrm(s) = Del_S(s^-1) u {1}", [](const Perm& s) {
            auto expect = del_s(s.inverse());
            expect.insert(1);
            return ltrm(s) == expect;
        });
    }));

    out.push_back(run_lemma("dual-ltram-a", caps, [&](VerifyReport& r) {
        all_of_sn(r, 2, n_cap, true, "ltram(p) = Del_A(p^-1) u {1,2}", [](const Perm& p) {
            auto expect = del_a(p.inverse());
            expect.insert(1);
            expect.insert(2);
            return ltram(p) == expect;
        });
    }));

    for (int q = 1; q <= q_cap; ++q) {
        out.push_back(run_lemma("dual-ltrm-q", json{{"n_cap", n_cap}, {"q", q}},
                                [&](VerifyReport& r) {
            all_of_sn(r, q, n_cap, false, "ltrm_q(p) = Del_q(p^-1) u {1..q}",
                      [q](const Perm& p) {
                          auto expect = del_q(q, p.inverse());
                          for (int i = 1; i <= q; ++i) expect.insert(i);
                          return ltrm_q(q, p) == expect;
                      });
        }));
    }

    out.push_back(run_lemma("f-pairs", caps, [&](VerifyReport& r) {
        all_of_sn(r, 2, n_cap, true, "(ell, rmaj, del, Des) are f-pairs",
                  [](const Perm& v) {
                      const Perm w = f(v);
                      const AStatRecord av = a_stats(v);
                      const SStatRecord sw = s_stats(w);
                      return av.ell == sw.ell && av.rmaj == sw.rmaj &&
                             av.del_count == sw.del_count && av.des == sw.des;
                  });
    }));

    out.push_back(run_lemma("f-inverse", caps, [&](VerifyReport& r) {
        all_of_sn(r, 2, n_cap, true, "f(v^-1) = f(v)^-1", [](const Perm& v) {
            return f(v.inverse()) == f(v).inverse();
        });
    }));

    out.push_back(run_lemma("f-psi-rtlphi", caps, [&](VerifyReport& r) {
        all_of_sn(r, 2, n_cap, true, "f(psi(v)) = rtl_phi(f(v))", [](const Perm& v) {
            return f(psi(v)) == rtl_phi(f(v));
        });
    }));

    // the bridge forced by the rep-ltrm lemma; the worked example has
    // ltram(v) = {1,2,3,4,6} against ltrm(f(v)) = {1,2,3,5}
    out.push_back(run_lemma("ltram-ltrm-f", caps, [&](VerifyReport& r) {
        all_of_sn(r, 2, n_cap, true, "ltram(v) = (ltrm(f(v)) + 1) u {1}",
                  [](const Perm& v) {
                      std::set<int> expect{1};
                      for (int x : ltrm(f(v))) expect.insert(x + 1);
                      return ltram(v) == expect;
                  });
    }));

    for (int q = 1; q <= q_cap; ++q) {
        out.push_back(run_lemma("fq-pairs", json{{"n_cap", n_cap}, {"q", q}},
                                [&](VerifyReport& r) {
            all_of_sn(r, q, n_cap, false,
                      "ell_q/Del_q/Des_q/rmaj_q transport through f_q",
                      [q](const Perm& p) {
                          const Perm w = f_q(q, p);
                          const QStatRecord qs = q_stats(q, p);
                          const SStatRecord sw = s_stats(w);
                          std::set<int> del_shift, des_shift;
                          for (int x : qs.del_q) del_shift.insert(x - q + 1);
                          for (int x : qs.des_q) des_shift.insert(x - q + 1);
                          return qs.ell_q == sw.ell && del_shift == sw.del_set &&
                                 des_shift == sw.des && qs.rmaj_q == sw.rmaj;
                      });
        }));
        out.push_back(run_lemma("fq-inverse", json{{"n_cap", n_cap}, {"q", q}},
                                [&](VerifyReport& r) {
            all_of_sn(r, q, n_cap, false, "f_q(w^-1) = f_q(w)^-1", [q](const Perm& w) {
                return f_q(q, w.inverse()) == f_q(q, w).inverse();
            });
        }));
        out.push_back(run_lemma("fq-psi-rtlphi", json{{"n_cap", n_cap}, {"q", q}},
                                [&](VerifyReport& r) {
            all_of_sn(r, q, n_cap, false, "f_q(psi_q(v)) = rtl_phi(f_q(v))",
                      [q](const Perm& v) {
                          return f_q(q, psi_q(q, v)) == rtl_phi(f_q(q, v));
                      });
        }));
    }

    return out;
}

StatFn stat_by_name(char group, const std::string& name) {
    if (group == 's') {
        if (name == "ell") return [](const Perm& p) { return p.inversions(); };
        if (name == "maj") return [](const Perm& p) { return s_stats(p).maj; };
        if (name == "rmaj") return [](const Perm& p) { return s_stats(p).rmaj; };
        if (name == "del") return [](const Perm& p) { return del_s(p).size(); };
        if (name == "des") return [](const Perm& p) { return des_s(p).size(); };
    } else if (group == 'a') {
        if (name == "ell") return [](const Perm& p) { return ell_a(p); };
        if (name == "maj") return [](const Perm& p) { return a_stats(p).maj; };
        if (name == "rmaj") return [](const Perm& p) { return a_stats(p).rmaj; };
        if (name == "del") return [](const Perm& p) { return del_a(p).size(); };
        if (name == "des") return [](const Perm& p) { return des_a(p).size(); };
    }
    throw std::invalid_argument("unknown statistic '" + name + "' for group '" +
                                std::string(1, group) + "'");
}

FilterFn filter_by_name(const std::string& name) {
    if (name.empty()) return nullptr;
    auto parse_q = [&](const std::string& prefix) -> int {
        if (name.rfind(prefix, 0) != 0) return 0;
        return std::stoi(name.substr(prefix.size()));
    };
    if (int q = parse_q("avoid-q=")) {
        return [q](const Perm& p) { return avoids_pat_q(q, p); };
    }
    if (int q = parse_q("inv-avoid-q=")) {
        return [q](const Perm& p) { return avoids_pat_q(q, p.inverse()); };
    }
    throw std::invalid_argument("unknown filter '" + name + "'");
}

}  // namespace foata
