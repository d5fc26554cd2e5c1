#include <doctest.h>

#include "foata/bijections.hpp"
#include "foata/foata.hpp"
#include "foata/stats.hpp"

using namespace foata;

TEST_CASE("psi on the worked example") {
    const Perm v = Perm::parse("6 4 3 7 5 2 1");
    const Perm u = psi(v);
    CHECK(u == Perm::parse("4 6 7 3 2 1 5"));
    CHECK(ell_a(u) == 11);
    CHECK(a_stats(v).rmaj == 11);
    CHECK(psi(Perm::identity(7)) == Perm::identity(7));
    CHECK(psi(Perm::identity(1)) == Perm::identity(1));
    CHECK(psi(Perm::identity(2)) == Perm::identity(2));
    CHECK_THROWS_AS(psi(Perm::parse("2 1 3")), std::invalid_argument);
}

TEST_CASE("psi_inverse on the worked example") {
    CHECK(psi_inverse(Perm::parse("4 6 7 3 2 1 5")) == Perm::parse("6 4 3 7 5 2 1"));
    CHECK(psi_inverse(Perm::identity(5)) == Perm::identity(5));
    CHECK_THROWS_AS(psi_inverse(Perm::parse("2 1 3")), std::invalid_argument);
}

TEST_CASE("psi round-trips over all of A_6") {
    for_each_even_permutation(6, [](const Perm& v) {
        CHECK(psi_inverse(psi(v)) == v);
        CHECK(psi(psi_inverse(v)) == v);
    });
}

TEST_CASE("f . psi = rtl_phi . f, exhaustive A_6") {
    for_each_even_permutation(6, [](const Perm& v) {
        CHECK(f(psi(v)) == rtl_phi(f(v)));
    });
}

TEST_CASE("psi_q with q = 1 is rtl_phi, exhaustive S_5") {
    for_each_permutation(5, [](const Perm& w) {
        CHECK(psi_q(1, w) == rtl_phi(w));
        CHECK(psi_q_inverse(1, w) == rtl_phi_inverse(w));
    });
    CHECK(psi_q(3, Perm::identity(6)) == Perm::identity(6));
    CHECK_THROWS_AS(psi_q(7, Perm::identity(6)), std::invalid_argument);
}

TEST_CASE("psi_q round-trips over all of S_5, q <= 3") {
    for (int q = 1; q <= 3; ++q) {
        for_each_permutation(5, [&](const Perm& v) {
            CHECK(psi_q_inverse(q, psi_q(q, v)) == v);
            CHECK(psi_q(q, psi_q_inverse(q, v)) == v);
        });
    }
}

TEST_CASE("psi_q carries rmaj_q to ell_q and preserves inverse data, S_5 q = 2") {
    for_each_permutation(5, [](const Perm& v) {
        const Perm u = psi_q(2, v);
        CHECK(q_stats(2, v).rmaj_q == ell_q(2, u));
        CHECK(del_q(2, v.inverse()) == del_q(2, u.inverse()));
        CHECK(des_q(2, v.inverse()) == des_q(2, u.inverse()));
    });
}

TEST_CASE("psi_trace records the worked pipeline") {
    const PsiTrace t = psi_trace(Perm::parse("6 4 3 7 5 2 1"));
    CHECK(t.f_image == Perm::parse("5 3 6 4 2 1"));
    CHECK(t.rtl_phi_image == Perm::parse("5 6 3 2 1 4"));
    CHECK(t.output == Perm::parse("4 6 7 3 2 1 5"));
    REQUIRE(t.input_a_pres.has_value());
    CHECK(t.input_a_pres->str() ==
          "(a_1)(a_2 a_1^-1)(a_3 a_2)(a_4 a_3 a_2 a_1)(a_5 a_4 a_3)");
    CHECK(t.image_s_pres.str() == "(s_1)(s_2 s_1)(1)(s_4 s_3 s_2 s_1)(s_5 s_4 s_3 s_2)");
    REQUIRE(t.lifted_a_pres.has_value());
    CHECK(t.lifted_a_pres->str() ==
          "(a_1)(a_2 a_1^-1)(1)(a_4 a_3 a_2 a_1)(a_5 a_4 a_3 a_2)");
    CHECK(f(t.output) == t.rtl_phi_image);

    const PsiTrace e = psi_trace(Perm::identity(5));
    CHECK(e.f_image == Perm::identity(4));
    CHECK(e.output == Perm::identity(5));
}

TEST_CASE("psi_q_trace stages are consistent") {
    for_each_permutation(4, [](const Perm& v) {
        for (int q = 1; q <= 3; ++q) {
            const PsiTrace t = psi_q_trace(q, v);
            CHECK(t.f_image == f_q(q, v));
            CHECK(t.rtl_phi_image == rtl_phi(t.f_image));
            CHECK(t.output == psi_q(q, v));
            CHECK(f_q(q, t.output) == t.rtl_phi_image);
        }
    });
}

TEST_CASE("psi output stays even and in the same degree") {
    for_each_even_permutation(5, [](const Perm& v) {
        const Perm u = psi(v);
        CHECK(u.degree() == v.degree());
        CHECK(u.is_even());
    });
}
