#include <catch2/catch_amalgamated.hpp>

#include "liegen/chevalley.hpp"

using namespace liegen;
using namespace liegen::lie;

namespace {

bool jacobi_holds(const Chevalley& g) {
    std::size_t d = g.dim();
    const ff::PrimeField& f = g.field();
    for (std::size_t i = 0; i < d; ++i) {
        Vec bi = g.basis_vector(i);
        Vec bii = g.bracket(bi, bi);
        if (!std::all_of(bii.begin(), bii.end(), [](uint32_t x) { return x == 0; }))
            return false; // alternating on basis
        for (std::size_t j = i + 1; j < d; ++j) {
            Vec bj = g.basis_vector(j);
            Vec bij = g.bracket(bi, bj);
            Vec bji = g.bracket(bj, bi);
            for (std::size_t k = 0; k < d; ++k)
                if (f.add(bij[k], bji[k]) != 0) return false; // antisymmetry
            for (std::size_t k = j + 1; k < d; ++k) {
                Vec bk = g.basis_vector(k);
                Vec t1 = g.bracket(bij, bk);
                Vec t2 = g.bracket(g.bracket(bj, bk), bi);
                Vec t3 = g.bracket(g.bracket(bk, bi), bj);
                for (std::size_t m = 0; m < d; ++m)
                    if (f.add(f.add(t1[m], t2[m]), t3[m]) != 0) return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("sl2 Chevalley relations at p = 5") {
    Chevalley g('A', 1, 5);
    REQUIRE(g.dim() == 3);
    Vec h = g.basis_vector(0), e = g.root_vector(0), f = g.root_vector(1);
    Vec ef = g.bracket(e, f);
    CHECK(ef == h);
    Vec he = g.bracket(h, e);
    CHECK(he[1] == 2); // [h, e] = 2e
    Vec ee = g.bracket(e, e);
    CHECK(std::all_of(ee.begin(), ee.end(), [](uint32_t x) { return x == 0; }));
}

TEST_CASE("A2 bracket of simple root vectors hits the height-2 root") {
    Chevalley g('A', 2, 7);
    std::size_t s0 = g.roots().simple_root_index(0), s1 = g.roots().simple_root_index(1);
    Vec br = g.bracket(g.root_vector(s0), g.root_vector(s1));
    long sum = g.roots().find_root({1, 1});
    REQUIRE(sum >= 0);
    uint32_t c = br[g.e_index(static_cast<std::size_t>(sum))];
    CHECK((c == 1 || c == g.field().p() - 1));
}

TEST_CASE("Jacobi and alternating bracket on small algebras over several primes") {
    for (auto [t, r] : {std::pair<char,int>{'A', 2}, {'B', 2}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        auto rs = std::make_shared<roots::RootSystem>(t, r);
        for (uint32_t p : {2u, 3u, 5u}) {
            Chevalley g(rs, ff::PrimeField(p));
            INFO(g.descriptor());
            CHECK(jacobi_holds(g));
        }
    }
}

TEST_CASE("Jacobi holds for non-sc variants") {
    auto d4 = std::make_shared<roots::RootSystem>('D', 4);
    CHECK(jacobi_holds(Chevalley(d4, ff::PrimeField(2), IsogenyVariant::so_form())));
    CHECK(jacobi_holds(Chevalley(d4, ff::PrimeField(2), IsogenyVariant::half_spin())));
    CHECK(jacobi_holds(Chevalley(d4, ff::PrimeField(2), IsogenyVariant::adjoint())));
    auto a3 = std::make_shared<roots::RootSystem>('A', 3);
    CHECK(jacobi_holds(Chevalley(a3, ff::PrimeField(2), IsogenyVariant::sl_quotient(2))));
    CHECK(jacobi_holds(Chevalley(a3, ff::PrimeField(2), IsogenyVariant::adjoint())));
}

TEST_CASE("root-group automorphism: t = 0 identity, sl2 action on f, fixes e_alpha") {
    Chevalley g('A', 1, 5);
    Vec e = g.root_vector(0), f = g.root_vector(1);

    CHECK(g.ad_rootgroup(0, 0, f) == f);
    CHECK(g.ad_rootgroup(0, 3, e) == e);

    // exp(ad e) f = f + h - e
    Vec img = g.ad_rootgroup(0, 1, f);
    Vec expect = g.zero();
    expect[0] = 1;                  // +h
    expect[1] = g.field().neg(1);   // -e
    expect[2] = 1;                  // +f
    CHECK(img == expect);
}

TEST_CASE("ad_rootgroup is an automorphism with inverse at -t") {
    for (auto [t, r, p] : {std::tuple<char,int,uint32_t>{'C', 2, 3}, {'G', 2, 5}, {'D', 4, 2}}) {
        Chevalley g(t, r, p);
        INFO(g.descriptor());
        ff::SplitMix64 rng(42);
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t alpha = rng.below(g.roots().num_roots());
            uint32_t tv = rng.field_element(g.field());
            Vec x(g.dim()), y(g.dim());
            for (auto& v : x) v = rng.field_element(g.field());
            for (auto& v : y) v = rng.field_element(g.field());
            // preserves bracket
            Vec lhs = g.ad_rootgroup(alpha, tv, g.bracket(x, y));
            Vec rhs = g.bracket(g.ad_rootgroup(alpha, tv, x), g.ad_rootgroup(alpha, tv, y));
            CHECK(lhs == rhs);
            // invertible
            Vec back = g.ad_rootgroup(alpha, g.field().neg(tv), g.ad_rootgroup(alpha, tv, x));
            CHECK(back == x);
        }
    }
}

TEST_CASE("random conjugates preserve ad-nilpotency degree") {
    Chevalley g('A', 2, 101);
    Vec x = g.root_vector(g.roots().simple_root_index(0));
    ff::SplitMix64 rng(7);
    auto nilindex = [&](const Vec& v) {
        Mat m = g.ad(v);
        Mat acc = m;
        int k = 1;
        while (!acc.is_zero() && k < 20) {
            acc = acc * m;
            ++k;
        }
        return k;
    };
    int base = nilindex(x);
    for (int i = 0; i < 5; ++i) {
        auto [y, w] = g.random_conjugate(x, 12, rng);
        CHECK(nilindex(y) == base);
        CHECK(g.apply_word(w, x) == y);
    }
}

TEST_CASE("derived subalgebra and center across isogeny types") {
    // sl_n with p not dividing n: perfect, centerless
    Chevalley a2('A', 2, 5);
    CHECK(a2.derived_subalgebra().dim() == a2.dim());
    CHECK(a2.center().dim() == 0);

    // sl_n with p | n: center is the scalar line
    Chevalley a2p3('A', 2, 3);
    CHECK(a2p3.center().dim() == 1);
    CHECK(a2p3.derived_subalgebra().dim() == a2p3.dim());

    // so_2n at p = 2 (SO form): derived has codimension 1
    Chevalley d4('D', 4, 2, IsogenyVariant::so_form());
    CHECK(d4.dim() == 28);
    CHECK(d4.derived_subalgebra().dim() == 27);
}

TEST_CASE("derived subalgebra is an ideal") {
    Chevalley g('C', 2, 2);
    ff::Subspace der = g.derived_subalgebra();
    ff::EchelonBasis eb = der.to_echelon();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t r = 0; r < der.dim(); ++r)
            CHECK(eb.contains(g.bracket(g.basis_vector(i), der.basis().row(r))));
}

TEST_CASE("strongly regular detection") {
    Chevalley g('A', 2, 101);
    // diag(1, 10, -11) = 1*h1 + 11*h2 in coroot coordinates
    Vec t = g.zero();
    t[0] = 1;
    t[1] = 11;
    CHECK(g.is_strongly_regular(t));
    CHECK(!g.is_strongly_regular(g.zero()));

    Chevalley sl2('A', 1, 2);
    Vec u = sl2.zero();
    u[0] = 1;
    CHECK(!sl2.is_strongly_regular(u));

    Vec notcartan = g.root_vector(0);
    CHECK_THROWS(g.is_strongly_regular(notcartan));
}

TEST_CASE("quasi-regularity of coordinate subalgebras") {
    Chevalley g('A', 2, 5);
    CHECK(g.is_quasi_regular(ff::Subspace::full(g.field(), g.dim())));

    // span{ e_{alpha1} + h_1 } is not quasi-regular
    Vec v = g.zero();
    v[0] = 1;
    v[g.e_index(g.roots().simple_root_index(0))] = 1;
    ff::Subspace line = ff::Subspace::span(g.field(), {v}, g.dim());
    CHECK(!g.is_quasi_regular(line));

    // Borel: Cartan + positive root spaces
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < g.rank(); ++i) rows.push_back(g.basis_vector(i));
    for (std::size_t r = 0; r < g.roots().num_positive(); ++r) rows.push_back(g.root_vector(r));
    CHECK(g.is_quasi_regular(ff::Subspace::span(g.field(), rows, g.dim())));
}

TEST_CASE("natural modules are homomorphisms and have the right dimension") {
    struct Case { char t; int r; uint32_t p; IsogenyVariant v; std::size_t n; };
    std::vector<Case> cases = {
        {'A', 3, 5, IsogenyVariant::sc(), 4},
        {'C', 3, 5, IsogenyVariant::sc(), 6},
        {'C', 2, 2, IsogenyVariant::sc(), 4},
        {'B', 3, 5, IsogenyVariant::sc(), 7},
        {'B', 2, 7, IsogenyVariant::adjoint(), 5},
        {'D', 4, 2, IsogenyVariant::so_form(), 8},
        {'D', 4, 5, IsogenyVariant::sc(), 8},
    };
    for (const auto& c : cases) {
        Chevalley g(c.t, c.r, c.p, c.v);
        INFO(g.descriptor());
        NaturalModule nat = g.natural();
        REQUIRE(nat.dim_v == c.n);
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = i + 1; j < g.dim(); ++j) {
                Vec br = g.bracket(g.basis_vector(i), g.basis_vector(j));
                Mat lhs = nat.act(br);
                Mat rhs = nat.action[i] * nat.action[j] - nat.action[j] * nat.action[i];
                if (!(lhs == rhs)) {
                    INFO("basis pair " << i << "," << j);
                    REQUIRE(lhs == rhs);
                }
            }
    }
}

TEST_CASE("natural module of so_8 at p = 2 satisfies the quadratic form conditions") {
    Chevalley g('D', 4, 2, IsogenyVariant::so_form());
    NaturalModule nat = g.natural();
    std::size_t n = 4;
    const ff::PrimeField& f = g.field();
    // b has Gram [[0,I],[I,0]]; so(q) = { x : x^T B symmetric, diag(x^T B) = 0 }
    auto check_in_so = [&](const Mat& x) {
        Mat b(f, 8, 8);
        for (std::size_t i = 0; i < n; ++i) {
            b(i, n + i) = 1;
            b(n + i, i) = 1;
        }
        Mat s = x.transpose() * b;
        for (std::size_t i = 0; i < 8; ++i) {
            if (s(i, i) != 0) return false;
            for (std::size_t j = 0; j < 8; ++j)
                if (s(i, j) != s(j, i)) return false;
        }
        return true;
    };
    for (std::size_t bidx = 0; bidx < g.dim(); ++bidx) CHECK(check_in_so(nat.action[bidx]));
}

TEST_CASE("from_matrix inverts the natural realization") {
    Chevalley g('D', 4, 2, IsogenyVariant::so_form());
    NaturalModule nat = g.natural();
    ff::SplitMix64 rng(5);
    Vec x(g.dim());
    for (auto& v : x) v = rng.field_element(g.field());
    Mat m = nat.act(x);
    auto back = g.from_matrix(nat, m);
    REQUIRE(back.has_value());
    CHECK(*back == x);
}

TEST_CASE("natural module rejects unsupported variants") {
    CHECK_THROWS(Chevalley('A', 2, 5, IsogenyVariant::adjoint()).natural());
    CHECK_THROWS(Chevalley('B', 2, 2).natural());
    CHECK_THROWS(Chevalley('G', 2, 5).natural());
}
