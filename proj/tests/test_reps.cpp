#include <catch2/catch_amalgamated.hpp>

#include "liegen/reps.hpp"

using namespace liegen;
using namespace liegen::reps;
using cls::AlgKind;
using cls::ClassLabel;
using cls::MatrixAlgebra;
using cls::Partition;

namespace {

std::function<Vec(std::size_t, std::size_t)> bracket_oracle(const MatrixAlgebra& a) {
    return [&a](std::size_t i, std::size_t j) {
        Vec c;
        if (!a.coordinatize(a.commutator(a.basis[i], a.basis[j]), c))
            throw std::logic_error("bracket left the algebra");
        return c;
    };
}

Vec flatten(const Mat& m) {
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

} // namespace

TEST_CASE("module dimensions for the named constructions") {
    MatrixAlgebra sl4 = cls::realize(AlgKind::SL, 4, 5);
    CHECK(natural_module(sl4).dim_v == 4);
    CHECK(dual_module(natural_module(sl4)).dim_v == 4);
    CHECK(tensor_module(natural_module(sl4), natural_module(sl4)).dim_v == 16);
    CHECK(sym2_module(natural_module(sl4)).dim_v == 10);

    MatrixAlgebra so5 = cls::realize(AlgKind::SO, 5, 3);
    CHECK(sym2_so_factor(so5).dim_v == 14); // 5*6/2 - 1, p does not divide 5

    MatrixAlgebra so5p5 = cls::realize(AlgKind::SO, 5, 5);
    CHECK(sym2_so_factor(so5p5).dim_v == 13); // p | n drops one more

    MatrixAlgebra sl3 = cls::realize(AlgKind::SL, 3, 5);
    CHECK(adjoint_factor(sl3).dim_v == 8);
    MatrixAlgebra sl3p3 = cls::realize(AlgKind::SL, 3, 3);
    CHECK(adjoint_factor(sl3p3).dim_v == 7); // center inside the derived subalgebra

    GModule tw = frobenius_twist(natural_module(sl4));
    for (const Mat& m : tw.action) CHECK(m.is_zero());
}

TEST_CASE("built modules satisfy the homomorphism property") {
    for (auto [kind, n, p] : {std::tuple<AlgKind, std::size_t, uint32_t>{AlgKind::SL, 3, 5},
                              {AlgKind::SP, 4, 3}, {AlgKind::SO, 5, 7}}) {
        MatrixAlgebra a = cls::realize(kind, n, p);
        auto oracle = bracket_oracle(a);
        INFO(a.name() << " p=" << p);
        CHECK(natural_module(a).is_homomorphism(oracle));
        CHECK(dual_module(natural_module(a)).is_homomorphism(oracle));
        CHECK(sym2_module(natural_module(a)).is_homomorphism(oracle));
        CHECK(tensor_module(natural_module(a), dual_module(natural_module(a))).is_homomorphism(oracle));
        CHECK(adjoint_factor(a).is_homomorphism(oracle));
    }
    MatrixAlgebra so7 = cls::realize(AlgKind::SO, 7, 5);
    CHECK(sym2_so_factor(so7).is_homomorphism(bracket_oracle(so7)));
    MatrixAlgebra sl2 = cls::realize(AlgKind::SL, 2, 7);
    CHECK(sl2_weight_module(sl2, 4).is_homomorphism(bracket_oracle(sl2)));
}

TEST_CASE("module descriptor parser") {
    MatrixAlgebra sl3 = cls::realize(AlgKind::SL, 3, 5);
    CHECK(build_module(sl3, "natural").dim_v == 3);
    CHECK(build_module(sl3, "dual:natural").dim_v == 3);
    CHECK(build_module(sl3, "tensor:natural,natural").dim_v == 9);
    CHECK(build_module(sl3, "tensor:natural,natural,dual:natural").dim_v == 27);
    CHECK(build_module(sl3, "sym2:natural").dim_v == 6);
    CHECK(build_module(sl3, "ftwist:natural").dim_v == 3);
    CHECK(build_module(sl3, "adjoint_factor").dim_v == 8);
    CHECK_THROWS(build_module(sl3, "spin"));
    MatrixAlgebra sl2 = cls::realize(AlgKind::SL, 2, 5);
    CHECK(build_module(sl2, "sl2:w=3").dim_v == 4);
    CHECK_THROWS(build_module(sl2, "sl2:w=5")); // weight must be < p
}

TEST_CASE("fixed spaces: zero element, highest weight line, toral values") {
    MatrixAlgebra sl2 = cls::realize(AlgKind::SL, 2, 5);
    GModule l1 = sl2_weight_module(sl2, 1);
    // x = 0 fixes everything
    CHECK(ff::kernel(l1.rep(Vec(3, 0))).dim() == 1 + 1);

    // x = e: fixed space is the highest weight line
    Vec ecoords;
    sl2.coordinatize(cls::nilpotent_rep(ClassLabel::nilpotent(Partition({2})), sl2), ecoords);
    CHECK(ff::kernel(l1.rep(ecoords)).dim() == 1);

    // L(2) at p = 5 with toral diag(1, -1): fixed space dim 1 (even weight)
    GModule l2 = sl2_weight_module(sl2, 2);
    cls::ToralLabel t;
    t.eigen = {{1, 1}, {4, 1}};
    Vec tcoords;
    sl2.coordinatize(cls::toral_rep(ClassLabel::toral_label(t), sl2), tcoords);
    CHECK(ff::kernel(l2.rep(tcoords)).dim() == 1);
    // and on L(1) (odd weight) the fixed space is 0
    CHECK(ff::kernel(l1.rep(tcoords)).dim() == 0);
}

TEST_CASE("stabilizers: zero vector, highest weight vector, adjoint generic") {
    MatrixAlgebra sl2 = cls::realize(AlgKind::SL, 2, 5);
    GModule l1 = sl2_weight_module(sl2, 1);
    CHECK(stabilizer(Vec{0, 0}, l1).dim() == 3);
    // highest weight vector: annihilated exactly by the nilpotent line
    CHECK(stabilizer(Vec{1, 0}, l1).dim() == 1);

    // adjoint factor of sl_n: generic stabilizer is the Cartan subalgebra
    for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
        MatrixAlgebra sln = cls::realize(AlgKind::SL, n, 10007);
        GModule ad = adjoint_factor(sln);
        ff::SplitMix64 rng(5 + n);
        Vec v(ad.dim_v);
        for (auto& c : v) c = rng.field_element(ad.field);
        CHECK(stabilizer(v, ad).dim() == n - 1);
    }
}

TEST_CASE("representation kernel") {
    MatrixAlgebra sl2 = cls::realize(AlgKind::SL, 2, 5);
    CHECK(representation_kernel(sl2_weight_module(sl2, 1)).dim() == 0);
    CHECK(representation_kernel(frobenius_twist(sl2_weight_module(sl2, 1))).dim() == 3);
}

TEST_CASE("mother inequality on sl_2 modules") {
    MatrixAlgebra sl2 = cls::realize(AlgKind::SL, 2, 5);
    Vec ecoords;
    sl2.coordinatize(cls::nilpotent_rep(ClassLabel::nilpotent(Partition({2})), sl2), ecoords);

    // w = p + 1 = 6: two copies of the natural module; equality, so it fails
    GModule l1 = sl2_weight_module(sl2, 1);
    GModule two_nat = direct_sum(l1, l1);
    IneqCheck c6 = check_ineq_mother(2, two_nat.rep(ecoords), two_nat);
    CHECK(!c6.holds);
    CHECK(c6.lhs == c6.dim_v);

    // w = 4 at p = 7: holds
    MatrixAlgebra sl2b = cls::realize(AlgKind::SL, 2, 7);
    Vec e2;
    sl2b.coordinatize(cls::nilpotent_rep(ClassLabel::nilpotent(Partition({2})), sl2b), e2);
    GModule l4 = sl2_weight_module(sl2b, 4);
    CHECK(check_ineq_mother(2, l4.rep(e2), l4).holds);

    // the zero module fails trivially
    GModule z = frobenius_twist(l4);
    CHECK(!check_ineq_mother(2, z.rep(e2), z).holds);
}

TEST_CASE("subquotient shortcut: inequality on a summand implies it on the sum") {
    MatrixAlgebra sl2 = cls::realize(AlgKind::SL, 2, 7);
    Vec e;
    sl2.coordinatize(cls::nilpotent_rep(ClassLabel::nilpotent(Partition({2})), sl2), e);
    GModule l1 = sl2_weight_module(sl2, 1);
    GModule l4 = sl2_weight_module(sl2, 4);
    GModule v = direct_sum(l1, l4);
    IneqCheck on_sub = check_ineq_mother(2, l4.rep(e), l4);
    IneqCheck on_v = check_ineq_mother(2, v.rep(e), v);
    REQUIRE(on_sub.holds);
    CHECK(on_v.holds);
}

TEST_CASE("duality: fixed spaces of a module and its dual have equal dimension") {
    MatrixAlgebra sp4 = cls::realize(AlgKind::SP, 4, 101);
    GModule v = sym2_module(natural_module(sp4));
    GModule vd = dual_module(v);
    ff::SplitMix64 rng(77);
    for (int t = 0; t < 6; ++t) {
        Vec x(sp4.dim());
        for (auto& c : x) c = rng.field_element(sp4.field);
        CHECK(ff::kernel(v.rep(x)).dim() == ff::kernel(vd.rep(x)).dim());
    }
}

TEST_CASE("generic freeness verdicts for the sl_2 examples") {
    MatrixAlgebra sl2 = cls::realize(AlgKind::SL, 2, 5);
    // L(1): never virtually free
    FreenessReport r1 = generic_freeness_sample(sl2_weight_module(sl2, 1), 16, {1, 2, 3});
    CHECK(r1.verdict == Freeness::NotFree);
    // two copies of the natural module (w = p + 1): virtually free
    GModule l1 = sl2_weight_module(sl2, 1);
    FreenessReport r2 = generic_freeness_sample(direct_sum(l1, l1), 16, {1, 2, 3});
    CHECK(r2.verdict == Freeness::VirtuallyFree);
}

TEST_CASE("sym2_so_factor has trivial generic stabilizer") {
    for (auto [n, p] : {std::pair<std::size_t, uint32_t>{5, 10007}, {6, 10007}, {5, 5}}) {
        MatrixAlgebra so = cls::realize(AlgKind::SO, n, p);
        GModule w = sym2_so_factor(so);
        FreenessReport r = generic_freeness_sample(w, 6, {11, 22, 33});
        INFO("so_" << n << " p=" << p);
        CHECK(r.verdict == Freeness::VirtuallyFree);
        CHECK(r.kernel_dim == 0); // the action is faithful, so stabilizers are 0
    }
}

TEST_CASE("subquotient monotonicity of sampled stabilizer dimensions") {
    // sym2(natural) of so_5 at p = 5 has chain 0 < ker(tr) < Sym2;
    // sampled generic stabilizers can only grow on the associated graded
    MatrixAlgebra so5 = cls::realize(AlgKind::SO, 5, 5);
    GModule s2 = sym2_module(natural_module(so5));
    // the invariant trace functional
    Mat phi(so5.field, 1, s2.dim_v);
    {
        const Mat& b = *so5.gram;
        std::size_t c = 0;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i; j < 5; ++j, ++c) phi(0, c) = b(i, j);
    }
    Subspace u = ff::kernel(phi);
    REQUIRE(is_invariant(s2, u));
    GModule sub = submodule(s2, u);
    GModule quot = quotient_module(s2, u);
    GModule graded = direct_sum(sub, quot);
    // generic stabilizer dims: minimum over matched sample streams
    ff::SplitMix64 r2(10);
    std::size_t min_v = 1000, min_g = 1000;
    for (int t = 0; t < 16; ++t) {
        Vec v(s2.dim_v), vg(graded.dim_v);
        for (auto& c : v) c = r2.field_element(s2.field);
        for (auto& c : vg) c = r2.field_element(s2.field);
        min_v = std::min(min_v, stabilizer(v, s2).dim());
        min_g = std::min(min_g, stabilizer(vg, graded).dim());
    }
    CHECK(min_v <= min_g);
}

TEST_CASE("theorem MTp sweep: sl_3 tensor cube, sp_4, and a control") {
    // sl_3 at p = 5 with natural x natural x dual: dim 27 > 20.25
    MatrixAlgebra sl3 = cls::realize(AlgKind::SL, 3, 5);
    GModule v27 = build_module(sl3, "tensor:natural,natural,dual:natural");
    MTpReport rep = check_theorem_mtp('A', 2, 5, sl3, v27);
    CHECK(rep.hypothesis_met);
    CHECK(rep.all_ok);
    CHECK(!rep.records.empty());
    for (const auto& r : rep.records) {
        INFO(r.label);
        CHECK(r.ok);
    }

    // control: the natural module is below the bound; no claims
    MTpReport ctl = check_theorem_mtp('A', 2, 5, sl3, build_module(sl3, "natural"));
    CHECK(!ctl.hypothesis_met);
    CHECK(ctl.records.empty());

    // sp_4 at p = 5 with Sym^2(natural) x natural: dim 40 > 24
    MatrixAlgebra sp4 = cls::realize(AlgKind::SP, 4, 5);
    GModule v40 = build_module(sp4, "tensor:sym2:natural,natural");
    MTpReport rep2 = check_theorem_mtp('C', 2, 5, sp4, v40);
    CHECK(rep2.hypothesis_met);
    CHECK(rep2.all_ok);
}

TEST_CASE("sl2 classification across small primes") {
    for (uint32_t p : {3u, 5u}) {
        auto rows = sl2_classification(p, static_cast<int>(2 * p + 2));
        INFO("p=" << p);
        for (const auto& row : rows) {
            INFO("w=" << row.w);
            CHECK(row.matches);
        }
        // w = p + 1: virtually free but the inequality fails
        const auto& special = rows[p + 1 - 1];
        CHECK(special.w == static_cast<int>(p) + 1);
        CHECK(special.verdict == Freeness::VirtuallyFree);
        CHECK(special.ineq_fails_nilpotent);
    }
}

TEST_CASE("char-2 symmetric matrices: closed, quasi-regular, irreducible, contain alternating") {
    for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
        PrimeField f(2);
        // symmetric matrices inside gl_n as flattened vectors
        std::vector<Vec> sym_gens;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Mat m(f, n, n);
                m(i, j) = 1;
                m(j, i) = 1;
                if (i == j) m(i, i) = 1;
                sym_gens.push_back(flatten(m));
            }
        auto op = [&](const Vec& a, const Vec& b) {
            Mat ma(f, n, n), mb(f, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    ma(i, j) = a[i * n + j];
                    mb(i, j) = b[i * n + j];
                }
            return flatten(ma * mb - mb * ma);
        };
        Subspace s = ff::closure_under(sym_gens, op, f, n * n);
        CHECK(s.dim() == n * (n + 1) / 2); // bracket-closed: closure adds nothing

        // quasi-regular: diagonal piece plus paired off-diagonal coordinates
        std::size_t total = 0;
        {
            // diagonal component
            std::vector<std::size_t> diag;
            for (std::size_t i = 0; i < n; ++i) diag.push_back(i * n + i);
            std::vector<std::vector<std::size_t>> comps = {diag};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    comps.push_back({i * n + j, j * n + i});
            for (const auto& comp : comps) {
                std::vector<bool> in(n * n, false);
                for (std::size_t c : comp) in[c] = true;
                std::vector<std::size_t> outside;
                for (std::size_t c = 0; c < n * n; ++c)
                    if (!in[c]) outside.push_back(c);
                Mat m(f, s.dim(), outside.size());
                for (std::size_t r = 0; r < s.dim(); ++r)
                    for (std::size_t c = 0; c < outside.size(); ++c)
                        m(r, c) = s.basis()(r, outside[c]);
                total += s.dim() - m.rank();
            }
        }
        CHECK(total == s.dim());

        // irreducible on the natural module
        std::vector<Mat> mats;
        for (std::size_t r = 0; r < s.dim(); ++r) {
            Mat m(f, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = s.basis()(r, i * n + j);
            mats.push_back(std::move(m));
        }
        CHECK(gen::acts_irreducibly(mats, n, f));

        // contains the alternating matrices (symmetric, zero diagonal)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Mat m(f, n, n);
                m(i, j) = 1;
                m(j, i) = 1;
                CHECK(s.contains_vector(flatten(m)));
            }
    }
}

TEST_CASE("quasi-regular irreducible subalgebras at odd p contain sl_n") {
    // closure of a strongly regular torus element and a full set of simple
    // root vectors: quasi-regular by construction, irreducible, contains sl_n
    std::size_t n = 4;
    PrimeField f(101);
    auto eij = [&](std::size_t i, std::size_t j, uint32_t c) {
        Mat m(f, n, n);
        m(i, j) = c;
        return m;
    };
    auto op = [&](const Vec& a, const Vec& b) {
        Mat ma(f, n, n), mb(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ma(i, j) = a[i * n + j];
                mb(i, j) = b[i * n + j];
            }
        return flatten(ma * mb - mb * ma);
    };
    Mat t(f, n, n);
    t(0, 0) = 1; t(1, 1) = 5; t(2, 2) = 30; t(3, 3) = f.reduce(-36);
    std::vector<Vec> gens = {flatten(t)};
    for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(flatten(eij(i, i + 1, 1)));
    gens.push_back(flatten(eij(n - 1, 0, 7)));
    Subspace s = ff::closure_under(gens, op, f, n * n);
    std::vector<Mat> mats;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = s.basis()(r, i * n + j);
        mats.push_back(std::move(m));
    }
    REQUIRE(gen::acts_irreducibly(mats, n, f));
    // contains sl_n
    MatrixAlgebra sln = cls::realize(AlgKind::SL, n, 101);
    for (const Mat& b : sln.basis) CHECK(s.contains_vector(flatten(b)));
}

TEST_CASE("subsystem subalgebra of gl(V) acts irreducibly iff it is sl(V)") {
    std::size_t n = 3;
    PrimeField f(7);
    auto make_l0 = [&](const std::vector<std::pair<std::size_t, std::size_t>>& roots) {
        std::vector<Mat> gens;
        for (auto [i, j] : roots) {
            Mat m(f, n, n);
            m(i, j) = 1;
            gens.push_back(m);
        }
        // close under commutators, keeping matrices
        std::vector<Vec> flat;
        for (const Mat& g : gens) flat.push_back(flatten(g));
        auto op = [&](const Vec& a, const Vec& b) {
            Mat ma(f, n, n), mb(f, n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    ma(r, c) = a[r * n + c];
                    mb(r, c) = b[r * n + c];
                }
            return flatten(ma * mb - mb * ma);
        };
        return ff::closure_under(flat, op, f, n * n);
    };
    // full subsystem: all off-diagonal positions -> sl_3, irreducible
    Subspace full = make_l0({{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
    CHECK(full.dim() == 8);
    std::vector<Mat> mats;
    for (std::size_t r = 0; r < full.dim(); ++r) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = full.basis()(r, i * n + j);
        mats.push_back(std::move(m));
    }
    CHECK(gen::acts_irreducibly(mats, n, f));

    // proper subsystem (a Levi block): reducible
    Subspace levi = make_l0({{0, 1}, {1, 0}});
    CHECK(levi.dim() == 3);
    mats.clear();
    for (std::size_t r = 0; r < levi.dim(); ++r) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = levi.basis()(r, i * n + j);
        mats.push_back(std::move(m));
    }
    CHECK(!gen::acts_irreducibly(mats, n, f));
}
