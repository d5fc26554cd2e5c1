#include <doctest.h>

#include <map>

#include "foata/stats.hpp"

using namespace foata;

TEST_CASE("s_stats on the worked examples") {
    const SStatRecord r = s_stats(Perm::parse("5 3 6 4 2 1"));
    CHECK(r.des == std::set<int>{1, 3, 4, 5});
    CHECK(r.maj == 13);
    CHECK(r.rmaj == 11);
    CHECK(r.ell == 12);
    CHECK(r.del_count == 3);
    CHECK(r.ltrm == std::set<int>{5, 3, 2, 1});

    const SStatRecord s = s_stats(Perm::parse("5 2 3 1 4"));
    CHECK(s.del_set == std::set<int>{2, 4});
    CHECK(s.ltrm == std::set<int>{5, 2, 1});

    const SStatRecord e = s_stats(Perm::identity(6));
    CHECK(e.des.empty());
    CHECK(e.maj == 0);
    CHECK(e.rmaj == 0);
    CHECK(e.ell == 0);
    CHECK(e.del_set.empty());
    CHECK(e.ltrm == std::set<int>{1});

    // maj/rmaj of the S-procedure example
    const SStatRecord t = s_stats(Perm::parse("5 6 3 2 1 4"));
    CHECK(t.des == std::set<int>{2, 3, 4});
    CHECK(t.maj == 9);
    CHECK(t.rmaj == 9);
    CHECK(t.ell == 11);
}

TEST_CASE("a_stats on the worked examples") {
    const AStatRecord r = a_stats(Perm::parse("6 4 3 7 5 2 1"));
    CHECK(r.ell == 12);
    CHECK(r.des == std::set<int>{1, 3, 4, 5});
    CHECK(r.rmaj == 11);
    CHECK(r.del_set == std::set<int>{3, 6, 7});
    CHECK(r.del_count == 3);

    const AStatRecord s = a_stats(Perm::parse("4 2 6 3 1 5"));
    CHECK(s.del_set == std::set<int>{4, 5});
    CHECK(s.ltram == std::set<int>{4, 2, 3, 1});

    const AStatRecord t = a_stats(Perm::parse("7 6 3 2 5 1 4"));
    CHECK(t.des == std::set<int>{1, 2, 4});
    CHECK(t.del_set == std::set<int>{3, 4, 6});
    CHECK(t.del_count == 3);

    CHECK_THROWS_AS(a_stats(Perm::parse("2 1 3")), std::invalid_argument);
}

TEST_CASE("q_stats on the worked examples") {
    const Perm pi = Perm::parse("3 7 2 5 1 4 6");  // s1 s2 s1 s4 s3 s6 s5 s4 s3 s2
    CHECK(q_stats(3, pi).ell_q == 6);
    CHECK(q_stats(4, pi).ell_q == 4);

    const QStatRecord e = q_stats(2, Perm::identity(6));
    CHECK(e.ell_q == 0);
    CHECK(e.des_q.empty());
    CHECK(e.del_q.empty());

    CHECK_THROWS_AS(q_stats(0, pi), std::invalid_argument);
    CHECK_THROWS_AS(q_stats(8, pi), std::invalid_argument);
}

TEST_CASE("q = 1 degenerates to the S statistics, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [](const Perm& w) {
            const QStatRecord q = q_stats(1, w);
            const SStatRecord s = s_stats(w);
            CHECK(q.ell_q == s.ell);
            CHECK(q.des_q == s.des);
            CHECK(q.del_q == s.del_set);
            CHECK(q.rmaj_q == s.rmaj);
            CHECK(q.ltrm_q == s.ltrm);
        });
    }
}

TEST_CASE("delent/minima duality, exhaustive") {
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [&](const Perm& s) {
            auto expect = del_s(s.inverse());
            expect.insert(1);
            CHECK(ltrm(s) == expect);
        });
    }
    for (int n = 3; n <= 6; ++n) {
        for_each_even_permutation(n, [&](const Perm& p) {
            auto expect = del_a(p.inverse());
            expect.insert(1);
            expect.insert(2);
            CHECK(ltram(p) == expect);
        });
    }
    for (int q = 1; q <= 3; ++q) {
        for (int m = q; m <= 6; ++m) {
            for_each_permutation(m, [&](const Perm& p) {
                auto expect = del_q(q, p.inverse());
                for (int i = 1; i <= q; ++i) expect.insert(i);
                CHECK(ltrm_q(q, p) == expect);
            });
        }
    }
}

TEST_CASE("descents are the length-increasing positions, exhaustive n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for_each_permutation(n, [&](const Perm& s) {
            const auto des = des_s(s);
            for (int i = 1; i < n; ++i) {
                std::vector<int> img = s.images();
                std::swap(img[static_cast<size_t>(i) - 1], img[static_cast<size_t>(i)]);
                CHECK((s.inversions() > Perm::unchecked(img).inversions()) ==
                      (des.count(i) > 0));
            }
        });
    }
}

TEST_CASE("length and rmaj under rev . com, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [](const Perm& w) {
            const Perm rc = w.complemented().reversed();
            CHECK(rc.inversions() == w.inversions());
            CHECK(s_stats(rc).maj == s_stats(w).rmaj);
        });
    }
}

TEST_CASE("MacMahon sanity: maj and ell are equidistributed on S_n") {
    for (int n = 1; n <= 7; ++n) {
        std::map<long long, long long> by_maj, by_ell;
        for_each_permutation(n, [&](const Perm& w) {
            ++by_maj[s_stats(w).maj];
            ++by_ell[w.inversions()];
        });
        CHECK(by_maj == by_ell);
    }
}
