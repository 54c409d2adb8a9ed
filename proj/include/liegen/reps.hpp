#pragma once

#include "liegen/genconj.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace liegen::reps {

using cls::AlgKind;
using cls::ClassLabel;
using cls::MatrixAlgebra;
using ff::Mat;
using ff::PrimeField;
using ff::Subspace;
using ff::Vec;
using gen::Bound;

/// A representation given by one action matrix per algebra basis element.
struct GModule {
    std::string tag;
    std::size_t dim_v = 0;
    PrimeField field;
    std::vector<Mat> action;

    GModule(std::string t, std::size_t nv, PrimeField f) : tag(std::move(t)), dim_v(nv), field(f) {}

    std::size_t alg_dim() const { return action.size(); }

    Mat rep(const Vec& coords) const {
        Mat r(field, dim_v, dim_v);
        for (std::size_t b = 0; b < action.size(); ++b) {
            if (!coords[b]) continue;
            r = r + action[b].scaled(coords[b]);
        }
        return r;
    }

    /// Homomorphism property against a bracket oracle, on all basis pairs.
    bool is_homomorphism(const std::function<Vec(std::size_t, std::size_t)>& bracket_coords) const {
        for (std::size_t i = 0; i < action.size(); ++i)
            for (std::size_t j = i + 1; j < action.size(); ++j) {
                Mat lhs = rep(bracket_coords(i, j));
                Mat rhs = action[i] * action[j] - action[j] * action[i];
                if (!(lhs == rhs)) return false;
            }
        return true;
    }
};

// ---------------------------------------------------------------------------
// Functorial constructions

inline GModule natural_module(const MatrixAlgebra& a) {
    GModule m("natural", a.n, a.field);
    m.action = a.basis;
    return m;
}

inline GModule dual_module(const GModule& v) {
    GModule m("dual:" + v.tag, v.dim_v, v.field);
    for (const Mat& a : v.action) m.action.push_back(a.transpose().scaled(v.field.neg(1)));
    return m;
}

inline GModule tensor_module(const GModule& v, const GModule& w) {
    GModule m("tensor:" + v.tag + "," + w.tag, v.dim_v * w.dim_v, v.field);
    const PrimeField& f = v.field;
    for (std::size_t b = 0; b < v.action.size(); ++b) {
        Mat t(f, m.dim_v, m.dim_v);
        const Mat& A = v.action[b];
        const Mat& B = w.action[b];
        for (std::size_t i = 0; i < v.dim_v; ++i)
            for (std::size_t k = 0; k < v.dim_v; ++k) {
                if (!A(i, k)) continue;
                for (std::size_t j = 0; j < w.dim_v; ++j)
                    t(i * w.dim_v + j, k * w.dim_v + j) =
                        f.add(t(i * w.dim_v + j, k * w.dim_v + j), A(i, k));
            }
        for (std::size_t j = 0; j < w.dim_v; ++j)
            for (std::size_t l = 0; l < w.dim_v; ++l) {
                if (!B(j, l)) continue;
                for (std::size_t i = 0; i < v.dim_v; ++i)
                    t(i * w.dim_v + j, i * w.dim_v + l) =
                        f.add(t(i * w.dim_v + j, i * w.dim_v + l), B(j, l));
            }
        m.action.push_back(std::move(t));
    }
    return m;
}

/// Second symmetric power with basis v_i v_j, i <= j.
inline GModule sym2_module(const GModule& v) {
    const PrimeField& f = v.field;
    std::size_t n = v.dim_v;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            index[{i, j}] = pairs.size();
            pairs.push_back({i, j});
        }
    GModule m("sym2:" + v.tag, pairs.size(), f);
    for (const Mat& A : v.action) {
        Mat t(f, pairs.size(), pairs.size());
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            auto [i, j] = pairs[c];
            // x.(v_i v_j) = (x v_i) v_j + v_i (x v_j)
            for (std::size_t k = 0; k < n; ++k) {
                if (A(k, i)) {
                    auto key = std::minmax(k, j);
                    t(index[{key.first, key.second}], c) =
                        f.add(t(index[{key.first, key.second}], c), A(k, i));
                }
                if (A(k, j)) {
                    auto key = std::minmax(i, k);
                    t(index[{key.first, key.second}], c) =
                        f.add(t(index[{key.first, key.second}], c), A(k, j));
                }
            }
        }
        m.action.push_back(std::move(t));
    }
    return m;
}

inline GModule frobenius_twist(const GModule& v) {
    GModule m("ftwist:" + v.tag, v.dim_v, v.field);
    for (std::size_t b = 0; b < v.action.size(); ++b) m.action.push_back(Mat(v.field, v.dim_v, v.dim_v));
    return m;
}

inline GModule direct_sum(const GModule& v, const GModule& w) {
    GModule m("sum:" + v.tag + "," + w.tag, v.dim_v + w.dim_v, v.field);
    for (std::size_t b = 0; b < v.action.size(); ++b) {
        Mat t(v.field, m.dim_v, m.dim_v);
        for (std::size_t i = 0; i < v.dim_v; ++i)
            for (std::size_t j = 0; j < v.dim_v; ++j) t(i, j) = v.action[b](i, j);
        for (std::size_t i = 0; i < w.dim_v; ++i)
            for (std::size_t j = 0; j < w.dim_v; ++j) t(v.dim_v + i, v.dim_v + j) = w.action[b](i, j);
        m.action.push_back(std::move(t));
    }
    return m;
}

inline bool is_invariant(const GModule& v, const Subspace& u) {
    ff::EchelonBasis eb = u.to_echelon();
    for (const Mat& a : v.action)
        for (std::size_t r = 0; r < u.dim(); ++r)
            if (!eb.contains(a.apply(u.basis().row(r)))) return false;
    return true;
}

inline GModule submodule(const GModule& v, const Subspace& u, const std::string& tag = "") {
    if (!is_invariant(v, u)) throw std::invalid_argument("submodule: subspace is not invariant");
    const PrimeField& f = v.field;
    GModule m(tag.empty() ? "sub:" + v.tag : tag, u.dim(), f);
    // solve for the action in the basis of u
    Mat basis_t(f, v.dim_v, u.dim());
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t c = 0; c < v.dim_v; ++c) basis_t(c, r) = u.basis()(r, c);
    for (const Mat& a : v.action) {
        Mat t(f, u.dim(), u.dim());
        for (std::size_t r = 0; r < u.dim(); ++r) {
            Vec img = a.apply(u.basis().row(r));
            Vec coords;
            if (!ff::solve(basis_t, img, coords))
                throw std::logic_error("submodule: image escaped the subspace");
            for (std::size_t k = 0; k < u.dim(); ++k) t(k, r) = coords[k];
        }
        m.action.push_back(std::move(t));
    }
    return m;
}

inline GModule quotient_module(const GModule& v, const Subspace& u, const std::string& tag = "") {
    if (!is_invariant(v, u)) throw std::invalid_argument("quotient: subspace is not invariant");
    const PrimeField& f = v.field;
    // non-pivot coordinates of u's RREF representing the quotient
    std::vector<bool> pivot(v.dim_v, false);
    for (std::size_t r = 0; r < u.dim(); ++r) {
        std::size_t c = 0;
        while (c < v.dim_v && u.basis()(r, c) == 0) ++c;
        pivot[c] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < v.dim_v; ++c)
        if (!pivot[c]) rest.push_back(c);
    ff::EchelonBasis eb = u.to_echelon();
    GModule m(tag.empty() ? "quot:" + v.tag : tag, rest.size(), f);
    for (const Mat& a : v.action) {
        Mat t(f, rest.size(), rest.size());
        for (std::size_t c = 0; c < rest.size(); ++c) {
            Vec e(v.dim_v, 0);
            e[rest[c]] = 1;
            Vec img = eb.reduce(a.apply(e));
            for (std::size_t r = 0; r < rest.size(); ++r) t(r, c) = img[rest[r]];
        }
        m.action.push_back(std::move(t));
    }
    return m;
}

// ---------------------------------------------------------------------------
// The named test modules

/// Trace-zero part of Sym^2(natural) for so_n, modulo the invariant line when
/// p divides n.  Dimension n(n+1)/2 - 1, or - 2 when p | n.
inline GModule sym2_so_factor(const MatrixAlgebra& a) {
    if (a.kind != AlgKind::SO || a.field.p() == 2)
        throw std::invalid_argument("sym2_so_factor: needs so at p != 2");
    const PrimeField& f = a.field;
    const Mat& b = *a.gram;
    std::size_t n = a.n;
    GModule s2 = sym2_module(natural_module(a));
    // equivariant functional: v w -> B(v, w)
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs.push_back({i, j});
    Mat phi(f, 1, s2.dim_v);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        auto [i, j] = pairs[c];
        phi(0, c) = b(i, j);
    }
    Subspace ker_phi = ff::kernel(phi);
    GModule w = submodule(s2, ker_phi, "sym2_so_factor");
    if (f.reduce(static_cast<long long>(n)) != 0) return w;
    // p | n: quotient by the invariant vector B^{-1}
    Mat aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = b(i, j);
            aug(i, n + j) = i == j ? 1 : 0;
        }
    if (aug.rref_in_place() != n) throw std::logic_error("sym2_so_factor: singular form");
    // B^{-1} as an invariant vector of Sym^2 V: coordinates 2*(B^{-1})_{ij}
    // off the diagonal (v_i v_j collects both tensor positions)
    Vec binv_coords(s2.dim_v, 0);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        auto [i, j] = pairs[c];
        binv_coords[c] = i == j ? aug(i, n + j) : f.reduce(2ll * aug(i, n + j));
    }
    // express B^{-1} inside the submodule coordinates
    Mat basis_t(f, s2.dim_v, w.dim_v);
    for (std::size_t r = 0; r < w.dim_v; ++r)
        for (std::size_t c = 0; c < s2.dim_v; ++c) basis_t(c, r) = ker_phi.basis()(r, c);
    Vec inner;
    if (!ff::solve(basis_t, binv_coords, inner))
        throw std::logic_error("sym2_so_factor: invariant line escaped the trace kernel");
    Subspace line = Subspace::span(f, {inner}, w.dim_v);
    return quotient_module(w, line, "sym2_so_factor");
}

/// Derived subalgebra of the matrix algebra as a subspace of its coordinates.
inline Subspace matrix_algebra_derived(const MatrixAlgebra& a) {
    ff::EchelonBasis eb(a.field, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            Vec c;
            if (!a.coordinatize(a.commutator(a.basis[i], a.basis[j]), c))
                throw std::logic_error("derived: bracket escaped the algebra");
            eb.add(c);
        }
    return Subspace::from_echelon(eb);
}

inline Subspace matrix_algebra_center(const MatrixAlgebra& a) {
    Subspace s = Subspace::full(a.field, a.dim());
    for (std::size_t j = 0; j < a.dim() && s.dim() > 0; ++j) {
        Mat m(a.field, a.dim(), s.dim());
        for (std::size_t c = 0; c < s.dim(); ++c) {
            Vec coords;
            if (!a.coordinatize(a.commutator(a.from_coords(s.basis().row(c)), a.basis[j]), coords))
                throw std::logic_error("center: bracket escaped the algebra");
            for (std::size_t r = 0; r < a.dim(); ++r) m(r, c) = coords[r];
        }
        Subspace knl = ff::kernel(m);
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < knl.dim(); ++r) {
            Vec coeff = knl.basis().row(r), v(a.dim(), 0);
            for (std::size_t c = 0; c < s.dim(); ++c)
                if (coeff[c])
                    for (std::size_t k = 0; k < a.dim(); ++k)
                        v[k] = a.field.add(v[k], a.field.mul(coeff[c], s.basis()(c, k)));
            rows.push_back(std::move(v));
        }
        s = Subspace::span(a.field, rows, a.dim());
    }
    return s;
}

/// Adjoint action on [g,g] / (z(g) cap [g,g]).
inline GModule adjoint_factor(const MatrixAlgebra& a) {
    const PrimeField& f = a.field;
    GModule ad("adjoint", a.dim(), f);
    for (std::size_t b = 0; b < a.dim(); ++b) {
        Mat t(f, a.dim(), a.dim());
        for (std::size_t c = 0; c < a.dim(); ++c) {
            Vec coords;
            if (!a.coordinatize(a.commutator(a.basis[b], a.basis[c]), coords))
                throw std::logic_error("adjoint: bracket escaped the algebra");
            for (std::size_t r = 0; r < a.dim(); ++r) t(r, c) = coords[r];
        }
        ad.action.push_back(std::move(t));
    }
    Subspace derived = matrix_algebra_derived(a);
    Subspace center = matrix_algebra_center(a);
    GModule sub = submodule(ad, derived, "adjoint_factor");
    Subspace zin = ff::subspace_intersect(derived, center);
    if (zin.dim() == 0) {
        sub.tag = "adjoint_factor";
        return sub;
    }
    // carry z cap [g,g] into the submodule coordinates
    Mat basis_t(f, a.dim(), derived.dim());
    for (std::size_t r = 0; r < derived.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) basis_t(c, r) = derived.basis()(r, c);
    std::vector<Vec> zz;
    for (std::size_t r = 0; r < zin.dim(); ++r) {
        Vec coords;
        if (!ff::solve(basis_t, zin.basis().row(r), coords))
            throw std::logic_error("adjoint_factor: center escaped the derived subalgebra");
        zz.push_back(coords);
    }
    return quotient_module(sub, Subspace::span(f, zz, derived.dim()), "adjoint_factor");
}

/// The (w+1)-dimensional highest-weight module of sl_2 (w < p, so it is both
/// simple and a Weyl module).  Basis order of the algebra: e, f, h.
inline GModule sl2_weight_module(const MatrixAlgebra& sl2, int w) {
    if (sl2.kind != AlgKind::SL || sl2.n != 2)
        throw std::invalid_argument("sl2_weight_module: algebra must be sl_2");
    const PrimeField& f = sl2.field;
    if (w < 0 || static_cast<uint32_t>(w) >= f.p())
        throw std::invalid_argument("sl2_weight_module: weight must satisfy 0 <= w < p");
    std::size_t d = static_cast<std::size_t>(w) + 1;
    Mat me(f, d, d), mf(f, d, d), mh(f, d, d);
    for (int i = 0; i <= w; ++i) {
        if (i > 0) me(i - 1, i) = f.reduce(w - i + 1);
        if (i < w) mf(i + 1, i) = f.reduce(i + 1);
        mh(i, i) = f.reduce(w - 2 * i);
    }
    GModule m("sl2:w=" + std::to_string(w), d, f);
    // realize(SL, 2) basis order: E_{01}, E_{10}, diag(1,-1)
    m.action = {me, mf, mh};
    return m;
}

// ---------------------------------------------------------------------------
// Descriptor parsing

inline GModule build_module(const MatrixAlgebra& a, const std::string& desc) {
    auto starts = [&](const char* prefix) { return desc.rfind(prefix, 0) == 0; };
    if (desc == "natural") return natural_module(a);
    if (desc == "sym2_so_factor") return sym2_so_factor(a);
    if (desc == "adjoint_factor") return adjoint_factor(a);
    if (starts("dual:")) return dual_module(build_module(a, desc.substr(5)));
    if (starts("ftwist:")) return frobenius_twist(build_module(a, desc.substr(7)));
    if (starts("sym2:")) return sym2_module(build_module(a, desc.substr(5)));
    if (starts("sl2:w=")) return sl2_weight_module(a, std::stoi(desc.substr(6)));
    if (starts("tensor:")) {
        std::string rest = desc.substr(7);
        // split on top-level commas: components contain no parentheses, but may
        // contain colons (nested prefixes bind to the following single item)
        std::vector<std::string> items;
        std::size_t depth_marker = 0;
        std::string cur;
        for (char c : rest) {
            if (c == ',' && depth_marker == 0) {
                // a comma splits unless the current item is an unfinished tensor
                if (cur.rfind("tensor:", 0) == 0) {
                    cur += c;
                    continue;
                }
                items.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) items.push_back(cur);
        if (items.size() < 2) throw std::invalid_argument("tensor needs at least two factors");
        GModule m = build_module(a, items[0]);
        for (std::size_t i = 1; i < items.size(); ++i) m = tensor_module(m, build_module(a, items[i]));
        return m;
    }
    throw std::invalid_argument("unknown module descriptor: " + desc);
}

// ---------------------------------------------------------------------------
// Fixed spaces, stabilizers, freeness

inline Subspace fixed_space(const Mat& rho_x, const GModule& v) {
    (void)v;
    return ff::kernel(rho_x);
}

/// Stabilizer of a vector inside the algebra: { x : rho(x) v = 0 }.
inline Subspace stabilizer(const Vec& vecv, const GModule& v) {
    Mat m(v.field, v.dim_v, v.alg_dim());
    for (std::size_t b = 0; b < v.alg_dim(); ++b) {
        Vec img = v.action[b].apply(vecv);
        for (std::size_t r = 0; r < v.dim_v; ++r) m(r, b) = img[r];
    }
    return ff::kernel(m);
}

/// Kernel of the representation: { x : rho(x) = 0 }.
inline Subspace representation_kernel(const GModule& v) {
    Subspace s = Subspace::full(v.field, v.alg_dim());
    for (std::size_t basisv = 0; basisv < v.dim_v && s.dim() > 0; ++basisv) {
        Vec e(v.dim_v, 0);
        e[basisv] = 1;
        Mat m(v.field, v.dim_v, s.dim());
        for (std::size_t c = 0; c < s.dim(); ++c) {
            Vec coords = s.basis().row(c);
            Vec img = v.rep(coords).apply(e);
            for (std::size_t r = 0; r < v.dim_v; ++r) m(r, c) = img[r];
        }
        Subspace knl = ff::kernel(m);
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < knl.dim(); ++r) {
            Vec coeff = knl.basis().row(r), out(v.alg_dim(), 0);
            for (std::size_t c = 0; c < s.dim(); ++c)
                if (coeff[c])
                    for (std::size_t k = 0; k < v.alg_dim(); ++k)
                        out[k] = v.field.add(out[k], v.field.mul(coeff[c], s.basis()(c, k)));
            rows.push_back(std::move(out));
        }
        s = Subspace::span(v.field, rows, v.alg_dim());
    }
    return s;
}

struct IneqCheck {
    long long orbit = 0;
    std::size_t fixed = 0;
    long long lhs = 0;
    long long dim_v = 0;
    bool holds = false;
};

/// dim x^G + dim V^x < dim V.
inline IneqCheck check_ineq_mother(long long orbit_dim, const Mat& rho_x, const GModule& v) {
    IneqCheck c;
    c.orbit = orbit_dim;
    c.fixed = ff::kernel(rho_x).dim();
    c.lhs = c.orbit + static_cast<long long>(c.fixed);
    c.dim_v = static_cast<long long>(v.dim_v);
    c.holds = c.lhs < c.dim_v;
    return c;
}

enum class Freeness { VirtuallyFree, NotFree, Inconclusive };

struct FreenessReport {
    Freeness verdict = Freeness::Inconclusive;
    std::size_t kernel_dim = 0;
    std::vector<std::size_t> per_seed_min;   // minimal stabilizer dim per seed
    std::vector<uint64_t> seeds;
    std::size_t trials_per_seed = 0;
};

/// Samples random vectors; a sampled stabilizer of kernel size certifies the
/// generic statement (upper semicontinuity), required per seed for the
/// virtually-free verdict.
inline FreenessReport generic_freeness_sample(const GModule& v, int trials,
                                              const std::vector<uint64_t>& seeds) {
    FreenessReport rep;
    rep.kernel_dim = representation_kernel(v).dim();
    rep.seeds = seeds;
    rep.trials_per_seed = static_cast<std::size_t>(trials);
    bool all_min_is_kernel = true, all_samples_bigger = true;
    for (uint64_t seed : seeds) {
        ff::SplitMix64 rng(seed);
        std::size_t best = v.alg_dim() + 1;
        for (int t = 0; t < trials; ++t) {
            Vec w(v.dim_v);
            for (auto& c : w) c = rng.field_element(v.field);
            std::size_t d = stabilizer(w, v).dim();
            best = std::min(best, d);
            if (d == rep.kernel_dim) all_samples_bigger = false;
        }
        rep.per_seed_min.push_back(best);
        if (best != rep.kernel_dim) all_min_is_kernel = false;
    }
    if (all_min_is_kernel)
        rep.verdict = Freeness::VirtuallyFree;
    else if (all_samples_bigger)
        rep.verdict = Freeness::NotFree;
    else
        rep.verdict = Freeness::Inconclusive;
    return rep;
}

// ---------------------------------------------------------------------------
// Theorem MTp sweeps

struct MTpRecord {
    std::string label;
    long long orbit = 0;
    std::size_t fixed = 0;
    long long lhs = 0;
    bool ok = false;
};

struct MTpReport {
    bool hypothesis_met = false;
    Bound bound;
    long long dim_v = 0;
    std::size_t invariants_dim = 0; // dim V^{[g,g]}
    std::vector<MTpRecord> records;
    bool all_ok = false;
    std::string coverage = "full";
};

/// Verifies the hypothesis (dim V > b(G), V^{[g,g]} = 0), then checks the
/// strict inequality class by class over all noncentral x with x^[p] in {0,x}.
inline MTpReport check_theorem_mtp(char type, int rank, uint32_t p, const MatrixAlgebra& a,
                                   const GModule& v) {
    MTpReport rep;
    rep.bound = gen::bound_b(type, rank, p);
    rep.dim_v = static_cast<long long>(v.dim_v);

    // V^{[g,g]} via the common kernel of the derived subalgebra action
    Subspace derived = matrix_algebra_derived(a);
    Subspace fixed = Subspace::full(v.field, v.dim_v);
    for (std::size_t r = 0; r < derived.dim() && fixed.dim() > 0; ++r) {
        Mat rho = v.rep(derived.basis().row(r));
        fixed = ff::subspace_intersect(fixed, ff::kernel(rho));
    }
    rep.invariants_dim = fixed.dim();
    rep.hypothesis_met = rep.invariants_dim == 0 && !rep.bound.satisfied_by(rep.dim_v);
    if (!rep.hypothesis_met) return rep; // no claims without the hypothesis

    auto [kind, n] = gen::classical_realization(type, rank, p);
    std::vector<ClassLabel> labels =
        cls::enumerate_nilpotent_classes(kind, n, p, static_cast<int>(p));
    for (const ClassLabel& l : cls::enumerate_toral_classes_exact(kind, n, p)) labels.push_back(l);
    rep.all_ok = true;
    for (const ClassLabel& l : labels) {
        Mat x = l.kind == ClassLabel::Nilpotent ? cls::nilpotent_rep(l, a) : cls::toral_rep(l, a);
        Vec coords;
        if (!a.coordinatize(x, coords)) throw std::logic_error("mtp: representative escaped the algebra");
        MTpRecord r;
        r.label = l.to_string();
        r.orbit = cls::orbit_dim(l, kind, n, p);
        r.fixed = ff::kernel(v.rep(coords)).dim();
        r.lhs = r.orbit + static_cast<long long>(r.fixed);
        r.ok = r.lhs < rep.dim_v;
        rep.all_ok = rep.all_ok && r.ok;
        rep.records.push_back(std::move(r));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// SL2 classification

struct Sl2Row {
    int w = 0;
    std::vector<int> digits;
    int copies = 1;       // product of (w_i + 1), i > 0
    long long dim_v = 0;
    Freeness verdict = Freeness::Inconclusive;
    bool expected_not_free = false;
    bool matches = false;
    bool ineq_fails_nilpotent = false; // lhs = dim V for nilpotent x
};

/// Verdicts for the irreducible sl_2 module of highest weight w, for all
/// w <= wmax: not virtually free exactly when w = 1 or (p != 2 and w = 2).
inline std::vector<Sl2Row> sl2_classification(uint32_t p, int wmax, int trials = 24,
                                              const std::vector<uint64_t>& seeds = {1, 2, 3}) {
    MatrixAlgebra sl2 = cls::realize(AlgKind::SL, 2, p);
    std::vector<Sl2Row> rows;
    for (int w = 1; w <= wmax; ++w) {
        Sl2Row row;
        row.w = w;
        int rem = w;
        while (rem > 0) {
            row.digits.push_back(rem % static_cast<int>(p));
            rem /= static_cast<int>(p);
        }
        for (std::size_t i = 1; i < row.digits.size(); ++i) row.copies *= row.digits[i] + 1;
        int w0 = row.digits[0];
        // as an sl_2 module: copies * L(w0), which is zero when p | w
        GModule total = [&]() {
            if (w0 == 0) {
                long long dim = 1;
                for (int d : row.digits) dim *= d + 1;
                GModule z("ftwist", static_cast<std::size_t>(dim), sl2.field);
                for (int b = 0; b < 3; ++b)
                    z.action.push_back(Mat(sl2.field, z.dim_v, z.dim_v));
                return z;
            }
            GModule v = sl2_weight_module(sl2, w0);
            GModule t = v;
            for (int c = 1; c < row.copies; ++c) t = direct_sum(t, v);
            return t;
        }();
        row.dim_v = static_cast<long long>(total.dim_v);
        FreenessReport fr = generic_freeness_sample(total, trials, seeds);
        row.verdict = fr.verdict;
        row.expected_not_free = (w == 1) || (p != 2 && w == 2);
        row.matches = (row.verdict == Freeness::NotFree) == row.expected_not_free &&
                      row.verdict != Freeness::Inconclusive;
        // the mother inequality for nilpotent x: lhs = 2 + copies, dim V = copies*(w0+1)
        Mat e = cls::nilpotent_rep(ClassLabel::nilpotent(cls::Partition({2})), sl2);
        Vec coords;
        sl2.coordinatize(e, coords);
        IneqCheck ic = check_ineq_mother(2, total.rep(coords), total);
        row.ineq_fails_nilpotent = !ic.holds;
        rows.push_back(row);
    }
    return rows;
}

} // namespace liegen::reps
