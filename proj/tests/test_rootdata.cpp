#include <catch2/catch_amalgamated.hpp>

#include "liegen/rootdata.hpp"

using namespace liegen::roots;

TEST_CASE("root counts match the classical formulas") {
    struct Case { char t; int r; };
    std::vector<Case> cases;
    for (int l = 1; l <= 8; ++l) cases.push_back({'A', l});
    for (int l = 2; l <= 8; ++l) cases.push_back({'B', l});
    for (int l = 2; l <= 8; ++l) cases.push_back({'C', l});
    for (int l = 3; l <= 8; ++l) cases.push_back({'D', l});
    cases.push_back({'E', 6});
    cases.push_back({'E', 7});
    cases.push_back({'E', 8});
    cases.push_back({'F', 4});
    cases.push_back({'G', 2});
    for (auto [t, r] : cases) {
        RootSystem rs(t, r);
        INFO(rs.name());
        CHECK(static_cast<int>(rs.num_roots()) == root_count(t, r));
        CHECK(rs.num_positive() * 2 == rs.num_roots());
        // closed under negation
        for (std::size_t i = 0; i < rs.num_roots(); ++i) {
            Coord neg(rs.rank());
            for (int j = 0; j < rs.rank(); ++j) neg[j] = -rs.root(i)[j];
            CHECK(rs.find_root(neg) == static_cast<long>(rs.negative_of(i)));
        }
    }
}

TEST_CASE("invalid type/rank combinations are rejected") {
    CHECK_THROWS(RootSystem('A', 0));
    CHECK_THROWS(RootSystem('B', 1));
    CHECK_THROWS(RootSystem('D', 2));
    CHECK_THROWS(RootSystem('E', 5));
    CHECK_THROWS(RootSystem('F', 3));
    CHECK_THROWS(RootSystem('G', 3));
    CHECK_THROWS(RootSystem('H', 2));
}

TEST_CASE("A2 has 6 long roots; G2 splits 6/6") {
    RootSystem a2('A', 2);
    CHECK(a2.num_roots() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(a2.is_long(i));

    RootSystem g2('G', 2);
    int longs = 0;
    for (std::size_t i = 0; i < g2.num_roots(); ++i)
        if (g2.is_long(i)) ++longs;
    CHECK(g2.num_roots() == 12);
    CHECK(longs == 6);
}

TEST_CASE("E8 has 240 roots and dimension bookkeeping works") {
    RootSystem e8('E', 8);
    CHECK(e8.num_roots() == 240);
    CHECK(e8.num_roots() + e8.rank() == 248);
}

TEST_CASE("highest root dominates and is long; marks give the Coxeter number") {
    struct Case { char t; int r; int cox; };
    for (auto [t, r, cox] : {Case{'A', 3, 4}, Case{'B', 4, 8}, Case{'C', 3, 6},
                             Case{'D', 5, 8}, Case{'E', 6, 12}, Case{'E', 7, 18},
                             Case{'E', 8, 30}, Case{'F', 4, 12}, Case{'G', 2, 6}}) {
        RootSystem rs(t, r);
        std::size_t th = rs.highest_root();
        INFO(rs.name());
        CHECK(rs.is_long(th));
        for (std::size_t i = 0; i < rs.num_roots(); ++i)
            for (int j = 0; j < rs.rank(); ++j) CHECK(rs.root(i)[j] <= rs.root(th)[j]);
        CHECK(rs.height(th) + 1 == cox);
    }

    RootSystem a3('A', 3);
    Coord want = {1, 1, 1};
    CHECK(a3.root(a3.highest_root()) == want);
}

TEST_CASE("structure constants: antisymmetry, negation rule, chain magnitude") {
    for (auto [t, r] : {std::pair<char,int>{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4},
                        {'F', 4}, {'G', 2}}) {
        RootSystem rs(t, r);
        INFO(rs.name());
        for (std::size_t a = 0; a < rs.num_roots(); ++a)
            for (std::size_t b = 0; b < rs.num_roots(); ++b) {
                if (b == rs.negative_of(a)) continue;
                Coord s(rs.rank());
                for (int j = 0; j < rs.rank(); ++j) s[j] = rs.root(a)[j] + rs.root(b)[j];
                long g = rs.find_root(s);
                long long n = rs.n_constant(a, b);
                if (g < 0) {
                    CHECK(n == 0);
                    continue;
                }
                CHECK(n != 0);
                CHECK(n == -rs.n_constant(b, a));
                CHECK(n == -rs.n_constant(rs.negative_of(a), rs.negative_of(b)));
                long long mag = n < 0 ? -n : n;
                CHECK(mag == rs.chain_down(a, b) + 1);
                CHECK(mag <= 3);
            }
    }
}

TEST_CASE("specific constants: A2 simple pair, C2 short chain") {
    RootSystem a2('A', 2);
    std::size_t s0 = a2.simple_root_index(0), s1 = a2.simple_root_index(1);
    long long n = a2.n_constant(s0, s1);
    CHECK((n == 1 || n == -1));

    RootSystem c2('C', 2);
    // alpha_1 short, gamma = alpha_1 + alpha_2 short, alpha_1 + gamma = highest (long)
    std::size_t a = c2.simple_root_index(0);
    long g = c2.find_root({1, 1});
    REQUIRE(g >= 0);
    long long n2 = c2.n_constant(a, static_cast<std::size_t>(g));
    CHECK((n2 == 2 || n2 == -2));
}

TEST_CASE("root string lengths stay within 4") {
    RootSystem g2('G', 2);
    for (std::size_t a = 0; a < g2.num_roots(); ++a)
        for (std::size_t b = 0; b < g2.num_roots(); ++b) {
            if (a == b || b == g2.negative_of(a)) continue;
            CHECK(g2.chain_down(a, b) <= 3);
        }
}

TEST_CASE("special characteristic table") {
    CHECK(is_special_prime('B', 2, 2));
    CHECK(is_special_prime('B', 8, 2));
    CHECK(is_special_prime('C', 5, 2));
    CHECK(is_special_prime('F', 4, 2));
    CHECK(is_special_prime('G', 2, 3));
    CHECK(!is_special_prime('G', 2, 2));
    CHECK(!is_special_prime('A', 5, 2));
    CHECK(!is_special_prime('D', 6, 2));
    CHECK(!is_special_prime('B', 3, 3));
    CHECK(!is_special_prime('E', 8, 2));
}

TEST_CASE("coroot pairings are integral and match the Cartan matrix on simples") {
    for (auto [t, r] : {std::pair<char,int>{'B', 3}, {'C', 4}, {'G', 2}, {'F', 4}}) {
        RootSystem rs(t, r);
        for (int i = 0; i < rs.rank(); ++i) {
            auto v = rs.coroot_pairings(rs.simple_root_index(i));
            for (int k = 0; k < rs.rank(); ++k)
                CHECK(v[k] == rs.cartan()[i][k]);
        }
    }
}

TEST_CASE("JSON serialization carries the full root datum") {
    RootSystem rs('C', 3);
    auto j = rs.to_json();
    CHECK(j["type"] == "C");
    CHECK(j["rank"] == 3);
    CHECK(j["roots"].size() == rs.num_roots());
    CHECK(j["cartan"].size() == 3);
    CHECK(!j["constants"].empty());
}
