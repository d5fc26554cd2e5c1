#include <doctest.h>

#include "foata/foata.hpp"
#include "foata/serialize.hpp"
#include "foata/stats.hpp"
#include "support/oracles.hpp"

using namespace foata;

TEST_CASE("gamma on the worked example") {
    CHECK(gamma(5, {1, 2, 6, 7, 8, 3, 4}) == Word{1, 2, 3, 6, 7, 8, 4});
    // every letter on the case side gives singleton blocks
    CHECK(gamma(9, {1, 2, 3}) == Word{1, 2, 3});
    CHECK(gamma(0, {3, 1, 2}) == Word{3, 1, 2});
    // one block: letters above x with the block closer below
    CHECK(gamma(4, {6, 5, 3}) == Word{3, 6, 5});

    CHECK_THROWS_AS(gamma(5, {}), std::invalid_argument);
    CHECK_THROWS_AS(gamma(3, {1, 3, 2}), std::invalid_argument);
}

TEST_CASE("gamma matches the block-decomposition oracle") {
    for_each_permutation(5, [](const Perm& p) {
        for (int x : {0, 6}) {
            CHECK(gamma(x, p.images()) == oracle::gamma(x, p.images()));
        }
    });
}

TEST_CASE("gamma_inverse inverts gamma") {
    CHECK(gamma_inverse(5, {1, 2, 3, 6, 7, 8, 4}) == Word{1, 2, 6, 7, 8, 3, 4});
    CHECK(gamma_inverse(9, {1, 2, 3}) == Word{1, 2, 3});
    for_each_permutation(5, [](const Perm& p) {
        for (int x : {0, 6}) {
            CHECK(gamma_inverse(x, gamma(x, p.images())) == p.images());
            CHECK(gamma(x, gamma_inverse(x, p.images())) == p.images());
        }
    });
    CHECK_THROWS_AS(gamma_inverse(5, {}), std::invalid_argument);
}

TEST_CASE("phi on the worked example") {
    CHECK(phi(Perm::parse("6 5 3 1 4 2")) == Perm::parse("3 6 5 4 1 2"));
    CHECK(phi_word({7}) == Word{7});
    CHECK(phi(Perm::identity(6)) == Perm::identity(6));
    CHECK_THROWS_AS(phi_word({}), std::invalid_argument);
    CHECK_THROWS_AS(phi_word({2, 2}), std::invalid_argument);
}

TEST_CASE("phi agrees with the recursive definition, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [](const Perm& p) {
            CHECK(phi_word(p.images()) == oracle::recursive_phi(p.images()));
        });
    }
}

TEST_CASE("phi_inverse") {
    CHECK(phi_inverse(Perm::parse("3 6 5 4 1 2")) == Perm::parse("6 5 3 1 4 2"));
    CHECK(phi_word_inverse({7}) == Word{7});
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [](const Perm& p) {
            CHECK(phi_inverse(phi(p)) == p);
            CHECK(phi(phi_inverse(p)) == p);
        });
    }
}

TEST_CASE("rtl_phi on the worked example") {
    const Perm w = Perm::parse("5 3 6 4 2 1");
    const Perm u = rtl_phi(w);
    CHECK(u == Perm::parse("5 6 3 2 1 4"));
    CHECK(u.inversions() == 11);
    CHECK(s_stats(w).rmaj == 11);
    CHECK(rtl_phi(Perm::identity(5)) == Perm::identity(5));
}

TEST_CASE("rtl_phi equals rev . phi . rev, exhaustive n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [](const Perm& p) {
            CHECK(rtl_phi(p) == phi(p.reversed()).reversed());
        });
    }
}

TEST_CASE("rtl_phi_inverse") {
    CHECK(rtl_phi_inverse(Perm::parse("5 6 3 2 1 4")) == Perm::parse("5 3 6 4 2 1"));
    CHECK(rtl_phi_inverse(Perm::identity(4)) == Perm::identity(4));
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [](const Perm& p) {
            CHECK(rtl_phi_inverse(rtl_phi(p)) == p);
            CHECK(rtl_phi(rtl_phi_inverse(p)) == p);
        });
    }
}

TEST_CASE("the theorem statistics, exhaustive") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<char> seen(static_cast<size_t>(factorial(n)), 0);
        for_each_permutation(n, [&](const Perm& s) {
            const Perm u = phi(s);
            const auto rank = static_cast<size_t>(u.lex_rank());
            CHECK(!seen[rank]);
            seen[rank] = 1;
            CHECK(s_stats(s).maj == u.inversions());
            CHECK(s_stats(s).rmaj == rtl_phi(s).inversions());
        });
    }
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [](const Perm& s) {
            const Perm u = phi(s);
            CHECK(rtlm(s) == rtlm(u));
            CHECK(des_s(s.inverse()) == des_s(u.inverse()));
            CHECK(phi(s.complemented()) == u.complemented());
        });
    }
}

TEST_CASE("trace rows reproduce the worked tableaux") {
    const FoataTrace t = phi_trace(Perm::parse("6 5 3 1 4 2"));
    REQUIRE(t.rows.size() == 6);
    CHECK(trace_row_text(t.rows[0], t.cuts_before) == "6 |");
    CHECK(trace_row_text(t.rows[1], t.cuts_before) == "6 | 5 |");
    CHECK(trace_row_text(t.rows[2], t.cuts_before) == "6 | 5 | 3 |");
    CHECK(trace_row_text(t.rows[3], t.cuts_before) == "6 5 3 | 1 |");
    CHECK(trace_row_text(t.rows[4], t.cuts_before) == "3 | 6 | 5 | 1 4 |");
    CHECK(trace_row_text(t.rows[5], t.cuts_before) == "3 6 5 4 1 2");

    const FoataTrace r = rtl_phi_trace(Perm::parse("5 3 6 4 2 1"));
    REQUIRE(r.rows.size() == 6);
    CHECK(trace_row_text(r.rows[0], r.cuts_before) == "| 1");
    CHECK(trace_row_text(r.rows[1], r.cuts_before) == "| 2 | 1");
    CHECK(trace_row_text(r.rows[2], r.cuts_before) == "| 4 | 2 | 1");
    CHECK(trace_row_text(r.rows[3], r.cuts_before) == "| 6 | 4 2 1");
    CHECK(trace_row_text(r.rows[4], r.cuts_before) == "| 3 6 | 2 | 1 | 4");
    CHECK(trace_row_text(r.rows[5], r.cuts_before) == "5 6 3 2 1 4");
}
