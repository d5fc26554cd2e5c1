#include <doctest.h>

#include <set>

#include "foata/canonical.hpp"
#include "support/oracles.hpp"

using namespace foata;

TEST_CASE("s_canonical on the worked examples") {
    // [5,6,3,2,1,4] = (s_1)(s_2 s_1)(1)(s_4 s_3 s_2 s_1)(s_5 s_4 s_3 s_2)
    const SCanonical p = s_canonical(Perm::parse("5 6 3 2 1 4"));
    REQUIRE(p.factors.size() == 5);
    CHECK(p.factors[0] == SFactor{1, 1});
    CHECK(p.factors[1] == SFactor{2, 1});
    CHECK(p.factors[2] == SFactor{3, 0});
    CHECK(p.factors[3] == SFactor{4, 1});
    CHECK(p.factors[4] == SFactor{5, 2});
    CHECK(p.gen_count() == 11);
    CHECK(p.str() == "(s_1)(s_2 s_1)(1)(s_4 s_3 s_2 s_1)(s_5 s_4 s_3 s_2)");

    const SCanonical q = s_canonical(Perm::parse("5 3 6 4 2 1"));
    CHECK(q.str() == "(s_1)(s_2 s_1)(s_3 s_2)(s_4 s_3 s_2 s_1)(s_5 s_4 s_3)");

    const SCanonical e = s_canonical(Perm::identity(6));
    for (const SFactor& f : e.factors) CHECK(f.is_identity());
    CHECK(e.gen_count() == 0);
}

TEST_CASE("expand_s inverts s_canonical over all of S_6") {
    CHECK(expand_s(s_canonical(Perm::parse("5 3 6 4 2 1"))) ==
          Perm::parse("5 3 6 4 2 1"));
    for_each_permutation(6, [](const Perm& w) {
        const SCanonical p = s_canonical(w);
        CHECK(expand_s(p) == w);
        CHECK(p.gen_count() == w.inversions());
    });
}

TEST_CASE("a_canonical on the worked examples") {
    // [6,4,3,7,5,2,1] = (a_1)(a_2 a_1^-1)(a_3 a_2)(a_4 a_3 a_2 a_1)(a_5 a_4 a_3)
    const ACanonical p = a_canonical(Perm::parse("6 4 3 7 5 2 1"));
    REQUIRE(p.factors.size() == 5);
    CHECK(p.factors[0] == AFactor{1, AKind::tail, 0, 1});
    CHECK(p.factors[1] == AFactor{2, AKind::tail, 0, -1});
    CHECK(p.factors[2] == AFactor{3, AKind::run, 2, 0});
    CHECK(p.factors[3] == AFactor{4, AKind::tail, 0, 1});
    CHECK(p.factors[4] == AFactor{5, AKind::run, 3, 0});
    CHECK(p.gen_count() == 12);
    CHECK(p.str() == "(a_1)(a_2 a_1^-1)(a_3 a_2)(a_4 a_3 a_2 a_1)(a_5 a_4 a_3)");
    CHECK(p.str(true) == "(a_1)(a_2 a_1^-1)(a_3 a_2)(a_4 a_3 a_2 a_1)(a_5 a_4 a_3)");

    // v^{-1} = [7,6,3,2,5,1,4]; the identity factor v_2 is stored even
    // though the printed form may omit it
    const ACanonical pi = a_canonical(Perm::parse("7 6 3 2 5 1 4"));
    CHECK(pi.factors[0] == AFactor{1, AKind::tail, 0, 1});
    CHECK(pi.factors[1] == AFactor{2, AKind::identity, 0, 0});
    CHECK(pi.factors[2] == AFactor{3, AKind::run, 2, 0});
    CHECK(pi.factors[3] == AFactor{4, AKind::tail, 0, -1});
    CHECK(pi.factors[4] == AFactor{5, AKind::tail, 0, -1});
    CHECK(pi.str(true) ==
          "(a_1)(a_3 a_2)(a_4 a_3 a_2 a_1^-1)(a_5 a_4 a_3 a_2 a_1^-1)");

    const ACanonical e = a_canonical(Perm::identity(7));
    for (const AFactor& f : e.factors) CHECK(f.kind == AKind::identity);

    CHECK_THROWS_AS(a_canonical(Perm::parse("2 1 3")), std::invalid_argument);
}

TEST_CASE("expand_a inverts a_canonical over all of A_6") {
    CHECK(expand_a(a_canonical(Perm::parse("6 4 3 7 5 2 1"))) ==
          Perm::parse("6 4 3 7 5 2 1"));
    long long count = 0;
    for_each_even_permutation(6, [&](const Perm& v) {
        ++count;
        CHECK(expand_a(a_canonical(v)) == v);
    });
    CHECK(count == 360);
}

TEST_CASE("a_canonical agrees with the literal three-step procedure") {
    for (int degree = 3; degree <= 6; ++degree) {
        for_each_even_permutation(degree, [&](const Perm& v) {
            CHECK(a_canonical(v) == oracle::three_step_a_canonical(v));
        });
    }
}

TEST_CASE("R^S_j and R^A_j enumerate the staircase sets") {
    CHECK(enumerate_r_s(1).size() == 2);
    CHECK(enumerate_r_s(5).size() == 6);
    const auto ra3 = enumerate_r_a(3);
    REQUIRE(ra3.size() == 5);
    CHECK(ra3[0].kind == AKind::identity);
    CHECK(ra3[1] == AFactor{3, AKind::run, 3, 0});
    CHECK(ra3[2] == AFactor{3, AKind::run, 2, 0});
    CHECK(ra3[3] == AFactor{3, AKind::tail, 0, 1});
    CHECK(ra3[4] == AFactor{3, AKind::tail, 0, -1});
    for (int j = 1; j <= 6; ++j) {
        CHECK(enumerate_r_s(j).size() == static_cast<size_t>(j) + 1);
        CHECK(enumerate_r_a(j).size() == static_cast<size_t>(j) + 2);
    }
}

TEST_CASE("factor tuples biject onto the group") {
    // every choice of factors expands to a distinct element, so the map
    // prod R^S_j -> S_n is a bijection (n = 5 here; acceptance runs 6)
    std::set<Perm> seen;
    const int n = 5;
    std::vector<std::vector<SFactor>> choices;
    for (int j = 1; j <= n - 1; ++j) choices.push_back(enumerate_r_s(j));
    std::vector<size_t> pick(choices.size(), 0);
    while (true) {
        SCanonical p;
        p.n = n;
        for (size_t k = 0; k < choices.size(); ++k) p.factors.push_back(choices[k][pick[k]]);
        CHECK(seen.insert(expand_s(p)).second);
        size_t k = 0;
        for (; k < pick.size(); ++k) {
            if (++pick[k] < choices[k].size()) break;
            pick[k] = 0;
        }
        if (k == pick.size()) break;
    }
    CHECK(seen.size() == 120);
}

TEST_CASE("word parsing and expansion") {
    CHECK(word_to_perm(parse_word("s1 s2 s1 s4 s3 s6 s5 s4 s3 s2"), 7) ==
          Perm::parse("3 7 2 5 1 4 6"));
    CHECK(word_to_perm(parse_word("e"), 4) == Perm::identity(4));
    CHECK(word_to_perm(parse_word("a1"), 3) == Perm::parse("2 3 1"));
    CHECK(word_to_perm(parse_word("a1^-1"), 3) == Perm::parse("3 1 2"));
    CHECK(word_to_perm(parse_word("a_2 a_1^-1"), 4) ==
          word_to_perm(parse_word("a2 a1^-1"), 4));

    CHECK_THROWS_AS(word_to_perm(parse_word("s9"), 5), std::invalid_argument);
    CHECK_THROWS_AS(word_to_perm(parse_word("a4"), 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("s1^-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("s"), std::invalid_argument);
}

TEST_CASE("expansion of a parsed word matches composing the letters") {
    // a_i = s_1 s_{i+1}
    for (int i = 1; i <= 4; ++i) {
        const auto a = parse_word("a" + std::to_string(i));
        const auto s = parse_word("s1 s" + std::to_string(i + 1));
        CHECK(word_to_perm(a, 6) == word_to_perm(s, 6));
    }
}
