#pragma once

#include "liegen/fp.hpp"
#include "liegen/matrix.hpp"
#include "liegen/rootdata.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace liegen::lie {

using ff::Mat;
using ff::PrimeField;
using ff::SplitMix64;
using ff::Subspace;
using ff::Vec;
using roots::Coord;
using roots::Frac;
using roots::RootSystem;

/// Selects the cocharacter lattice housing the Cartan subalgebra, i.e. the
/// isogeny type of the group whose Lie algebra is being built.
struct IsogenyVariant {
    enum Kind { SimplyConnected, Adjoint, SLQuotient, SOForm, HalfSpin } kind = SimplyConnected;
    int quotient = 1; // m for SL_n / mu_m

    static IsogenyVariant sc() { return {SimplyConnected, 1}; }
    static IsogenyVariant adjoint() { return {Adjoint, 1}; }
    static IsogenyVariant sl_quotient(int m) { return {SLQuotient, m}; }
    static IsogenyVariant so_form() { return {SOForm, 1}; }
    static IsogenyVariant half_spin() { return {HalfSpin, 1}; }

    std::string label() const {
        switch (kind) {
            case SimplyConnected: return "sc";
            case Adjoint: return "adjoint";
            case SLQuotient: return "sl/mu" + std::to_string(quotient);
            case SOForm: return "so";
            case HalfSpin: return "hspin";
        }
        return "?";
    }
};

/// One root-group automorphism step: Ad(x_alpha(t)).
struct WordStep {
    std::size_t root;
    uint32_t t;
};
using ConjugationWord = std::vector<WordStep>;

namespace detail {

using ZMat = std::vector<std::vector<long long>>;

inline ZMat zmat(std::size_t n) { return ZMat(n, std::vector<long long>(n, 0)); }

inline ZMat zmul(const ZMat& a, const ZMat& b) {
    std::size_t n = a.size();
    ZMat r = zmat(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long long v = a[i][k];
            if (!v) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[k][j]) r[i][j] += v * b[k][j];
        }
    return r;
}

inline ZMat zcomm(const ZMat& a, const ZMat& b) {
    ZMat ab = zmul(a, b), ba = zmul(b, a);
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ab[i][j] -= ba[i][j];
    return ab;
}

inline ZMat zdiv(ZMat m, long long d) {
    for (auto& row : m)
        for (auto& v : row) {
            if (v % d != 0) throw std::logic_error("integral module: inexact division");
            v /= d;
        }
    return m;
}

/// Solve x * A = b over the rationals (A square, invertible).
inline std::vector<Frac> solve_left(const std::vector<std::vector<int>>& a, const std::vector<Frac>& b) {
    std::size_t n = a.size();
    // transpose and run fraction-based elimination on A^T x^T = b^T
    std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Frac(a[j][i]);
        m[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].num == 0) ++piv;
        if (piv == n) throw std::logic_error("solve_left: singular matrix");
        std::swap(m[piv], m[c]);
        Frac inv = Frac(1) / m[c][c];
        for (std::size_t j = c; j <= n; ++j) m[c][j] = m[c][j] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c].num == 0) continue;
            Frac f = m[i][c];
            for (std::size_t j = c; j <= n; ++j)
                m[i][j] = m[i][j] + Frac(-1) * f * m[c][j];
        }
    }
    std::vector<Frac> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

} // namespace detail

/// Faithful matrix realization of the algebra on its natural (vector) module,
/// with exact correspondence to the Chevalley basis.
struct NaturalModule {
    std::size_t dim_v = 0;
    std::vector<Mat> action; // one matrix per basis element

    Mat act(const Vec& x) const {
        Mat r(action.front().field(), dim_v, dim_v);
        const PrimeField& f = r.field();
        for (std::size_t b = 0; b < action.size(); ++b) {
            if (!x[b]) continue;
            for (std::size_t i = 0; i < dim_v; ++i)
                for (std::size_t j = 0; j < dim_v; ++j)
                    if (action[b](i, j))
                        r(i, j) = f.add(r(i, j), f.mul(x[b], action[b](i, j)));
        }
        return r;
    }
};

/// Chevalley Lie algebra over F_p for a given root system and isogeny type.
/// Basis: h_1..h_l (a basis of the chosen cocharacter lattice), then e_alpha
/// for each root in the root system's fixed order.
class Chevalley {
public:
    Chevalley(std::shared_ptr<const RootSystem> rs, PrimeField f,
              IsogenyVariant variant = IsogenyVariant::sc())
        : rs_(std::move(rs)), field_(f), variant_(variant) {
        build_lattice();
        build_coroots();
        build_bracket_table();
        build_aut_tables();
    }
    Chevalley(char type, int rank, uint32_t p, IsogenyVariant variant = IsogenyVariant::sc())
        : Chevalley(std::make_shared<RootSystem>(type, rank), PrimeField(p), variant) {}

    const RootSystem& roots() const { return *rs_; }
    std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
    const PrimeField& field() const { return field_; }
    const IsogenyVariant& variant() const { return variant_; }
    std::size_t rank() const { return rs_->rank(); }
    std::size_t dim() const { return rank() + rs_->num_roots(); }
    std::size_t e_index(std::size_t root) const { return rank() + root; }

    std::string descriptor() const {
        return rs_->name() + " p=" + std::to_string(field_.p()) + " " + variant_.label();
    }

    /// alpha_r(h_i) as an element of F_p.
    uint32_t root_value(std::size_t r, std::size_t i) const { return hval_[i][r]; }

    Vec zero() const { return Vec(dim(), 0); }
    Vec basis_vector(std::size_t i) const {
        Vec v = zero();
        v[i] = 1;
        return v;
    }
    Vec root_vector(std::size_t r) const { return basis_vector(e_index(r)); }

    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim() || y.size() != dim())
            throw std::invalid_argument("bracket: element size does not match algebra");
        Vec r = zero();
        const uint64_t p = field_.p();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!x[i]) continue;
            const uint64_t xi = x[i];
            for (std::size_t j = 0; j < dim(); ++j) {
                if (!y[j]) continue;
                uint64_t c = xi * y[j] % p;
                if (!c) continue;
                for (auto [k, v] : table_entries(i, j))
                    r[k] = static_cast<uint32_t>((r[k] + c * v) % p);
            }
        }
        return r;
    }

    /// ad(x) as a dim x dim matrix: column j is [x, b_j].
    Mat ad(const Vec& x) const {
        Mat m(field_, dim(), dim());
        const uint64_t p = field_.p();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!x[i]) continue;
            const uint64_t xi = x[i];
            for (std::size_t j = 0; j < dim(); ++j)
                for (auto [k, v] : table_entries(i, j))
                    m(k, j) = static_cast<uint32_t>((m(k, j) + xi * v) % p);
        }
        return m;
    }

    /// The Chevalley automorphism Ad(x_alpha(t)) = exp(t ad e_alpha), built
    /// from integral divided powers so it is defined for every p.
    Vec ad_rootgroup(std::size_t alpha, uint32_t t, const Vec& x) const {
        Vec y = zero();
        const uint64_t p = field_.p();
        uint32_t tp[4] = {1, t, field_.mul(t, t), field_.mul(field_.mul(t, t), t)};
        const auto& tab = aut_[alpha];
        for (std::size_t b = 0; b < dim(); ++b) {
            if (!x[b]) continue;
            const uint64_t xb = x[b];
            for (const auto& e : tab[b]) {
                uint64_t c = xb * e.coeff % p;
                c = c * tp[e.power] % p;
                y[e.target] = static_cast<uint32_t>((y[e.target] + c) % p);
            }
        }
        return y;
    }

    Vec apply_word(const ConjugationWord& w, Vec x) const {
        for (const WordStep& s : w) x = ad_rootgroup(s.root, s.t, x);
        return x;
    }

    ConjugationWord random_word(std::size_t length, SplitMix64& rng) const {
        ConjugationWord w;
        w.reserve(length);
        for (std::size_t i = 0; i < length; ++i)
            w.push_back({static_cast<std::size_t>(rng.below(rs_->num_roots())),
                         rng.field_element(field_)});
        return w;
    }

    std::size_t default_word_length() const { return 2 * rs_->num_positive(); }

    std::pair<Vec, ConjugationWord> random_conjugate(const Vec& x, std::size_t word_length,
                                                     SplitMix64& rng) const {
        ConjugationWord w = random_word(word_length, rng);
        return {apply_word(w, x), w};
    }

    /// Span of all basis brackets, saturated once (it is already an ideal).
    Subspace derived_subalgebra() const {
        ff::EchelonBasis eb(field_, dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i + 1; j < dim(); ++j) {
                Vec br = zero();
                bool nz = false;
                for (auto [k, v] : table_entries(i, j)) {
                    br[k] = v;
                    nz = true;
                }
                if (nz) eb.add(br);
            }
        return Subspace::from_echelon(eb);
    }

    /// Kernel of x -> ad x.
    Subspace center() const {
        Subspace s = Subspace::full(field_, dim());
        for (std::size_t j = 0; j < dim() && s.dim() > 0; ++j) {
            // refine: { x in s : [x, b_j] = 0 }
            Mat m(field_, dim(), s.dim());
            for (std::size_t c = 0; c < s.dim(); ++c) {
                Vec br = bracket(s.basis().row(c), basis_vector(j));
                for (std::size_t r = 0; r < dim(); ++r) m(r, c) = br[r];
            }
            Subspace knl = ff::kernel(m);
            std::vector<Vec> rows;
            for (std::size_t r = 0; r < knl.dim(); ++r) {
                Vec coeff = knl.basis().row(r), v = zero();
                for (std::size_t c = 0; c < s.dim(); ++c)
                    if (coeff[c])
                        for (std::size_t k = 0; k < dim(); ++k)
                            v[k] = field_.add(v[k], field_.mul(coeff[c], s.basis()(c, k)));
                rows.push_back(std::move(v));
            }
            s = Subspace::span(field_, rows, dim());
        }
        return s;
    }

    /// Strong regularity of a Cartan element: all values +-alpha(t), alpha
    /// positive or zero, are pairwise distinct.
    bool is_strongly_regular(const Vec& t) const {
        for (std::size_t r = 0; r < rs_->num_roots(); ++r)
            if (t[e_index(r)]) throw std::invalid_argument("is_strongly_regular: not in the Cartan subalgebra");
        std::vector<uint32_t> vals;
        vals.push_back(0);
        for (std::size_t r = 0; r < rs_->num_positive(); ++r) {
            uint64_t v = 0;
            for (std::size_t i = 0; i < rank(); ++i)
                v += static_cast<uint64_t>(t[i]) * hval_[i][r];
            vals.push_back(static_cast<uint32_t>(v % field_.p()));
        }
        for (std::size_t a = 0; a < vals.size(); ++a)
            for (std::size_t b = a + 1; b < vals.size(); ++b)
                if (vals[a] == vals[b] || vals[a] == field_.neg(vals[b])) return false;
        return true;
    }

    /// Quasi-regularity with respect to the standard torus: the subspace is
    /// the direct sum of its intersections with the Cartan subalgebra and the
    /// root spaces (paired +-alpha when p = 2).
    bool is_quasi_regular(const Subspace& l) const {
        std::vector<std::vector<std::size_t>> comps;
        std::vector<std::size_t> cart(rank());
        for (std::size_t i = 0; i < rank(); ++i) cart[i] = i;
        comps.push_back(cart);
        if (field_.p() != 2) {
            for (std::size_t r = 0; r < rs_->num_roots(); ++r) comps.push_back({e_index(r)});
        } else {
            for (std::size_t r = 0; r < rs_->num_positive(); ++r)
                comps.push_back({e_index(r), e_index(rs_->negative_of(r))});
        }
        std::size_t total = 0;
        for (const auto& comp : comps) total += coordinate_intersection_dim(l, comp);
        return total == l.dim();
    }

    std::size_t coordinate_intersection_dim(const Subspace& l, const std::vector<std::size_t>& coords) const {
        std::vector<bool> in(dim(), false);
        for (std::size_t c : coords) in[c] = true;
        std::vector<std::size_t> outside;
        for (std::size_t c = 0; c < dim(); ++c)
            if (!in[c]) outside.push_back(c);
        Mat m(field_, l.dim(), outside.size());
        for (std::size_t i = 0; i < l.dim(); ++i)
            for (std::size_t j = 0; j < outside.size(); ++j) m(i, j) = l.basis()(i, outside[j]);
        return l.dim() - m.rank();
    }

    /// Natural module for the classical types, integrated over Z from the
    /// simple-root generators so that it matches this basis exactly.
    NaturalModule natural() const {
        char t = rs_->type();
        std::size_t l = rank();
        std::size_t n = 0;
        if (t == 'A') {
            if (variant_.kind != IsogenyVariant::SimplyConnected &&
                !(variant_.kind == IsogenyVariant::SLQuotient && variant_.quotient == 1))
                throw std::invalid_argument("natural: type A requires the simply connected form");
            n = l + 1;
        } else if (t == 'C') {
            if (variant_.kind != IsogenyVariant::SimplyConnected)
                throw std::invalid_argument("natural: type C requires the simply connected form");
            n = 2 * l;
        } else if (t == 'D') {
            if (variant_.kind != IsogenyVariant::SimplyConnected && variant_.kind != IsogenyVariant::SOForm)
                throw std::invalid_argument("natural: type D requires the sc or so form");
            n = 2 * l;
        } else if (t == 'B') {
            if (field_.p() == 2)
                throw std::invalid_argument("natural: type B vector module needs p != 2");
            n = 2 * l + 1;
        } else {
            throw std::invalid_argument("natural: no vector module for exceptional types");
        }

        using detail::ZMat;
        std::vector<ZMat> X(l, detail::zmat(n)), Y(l, detail::zmat(n));
        if (t == 'A') {
            for (std::size_t i = 0; i < l; ++i) {
                X[i][i][i + 1] = 1;
                Y[i][i + 1][i] = 1;
            }
        } else if (t == 'C' || t == 'D') {
            std::size_t m = l;
            for (std::size_t i = 0; i + 1 < m; ++i) {
                X[i][i][i + 1] = 1;
                X[i][m + i + 1][m + i] = -1;
                Y[i][i + 1][i] = 1;
                Y[i][m + i][m + i + 1] = -1;
            }
            if (t == 'C') {
                X[m - 1][m - 1][2 * m - 1] = 1;
                Y[m - 1][2 * m - 1][m - 1] = 1;
            } else {
                X[m - 1][m - 2][2 * m - 1] = 1;
                X[m - 1][m - 1][2 * m - 2] = -1;
                Y[m - 1][2 * m - 1][m - 2] = 1;
                Y[m - 1][2 * m - 2][m - 1] = -1;
            }
        } else { // B
            std::size_t m = l, g = 2 * l;
            for (std::size_t i = 0; i + 1 < m; ++i) {
                X[i][i][i + 1] = 1;
                X[i][m + i + 1][m + i] = -1;
                Y[i][i + 1][i] = 1;
                Y[i][m + i][m + i + 1] = -1;
            }
            X[m - 1][m - 1][g] = 2;
            X[m - 1][g][2 * m - 1] = -1;
            Y[m - 1][g][m - 1] = 1;
            Y[m - 1][2 * m - 1][g] = -2;
        }

        // dp(h_i) = sum_j c_ij [X_j, Y_j], where h_i = sum_j c_ij alpha_j^vee.
        std::vector<ZMat> act(dim(), detail::zmat(n));
        std::vector<ZMat> hsimple(l);
        for (std::size_t j = 0; j < l; ++j) hsimple[j] = detail::zcomm(X[j], Y[j]);
        for (std::size_t i = 0; i < l; ++i) {
            std::vector<Frac> rhs(l);
            for (std::size_t k = 0; k < l; ++k) rhs[k] = Frac(lattice_[i][k]);
            // solve c * Cartan = lattice row (h_i in coroot coordinates)
            std::vector<std::vector<int>> cart = rs_->cartan();
            std::vector<Frac> c = detail::solve_left(cart, rhs);
            ZMat acc = detail::zmat(n);
            long long den = 1;
            for (std::size_t j = 0; j < l; ++j) den = std::lcm(den, c[j].den);
            for (std::size_t j = 0; j < l; ++j) {
                long long num = c[j].num * (den / c[j].den);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t cc = 0; cc < n; ++cc) acc[r][cc] += num * hsimple[j][r][cc];
            }
            act[i] = detail::zdiv(acc, den);
        }
        for (std::size_t i = 0; i < l; ++i) {
            act[e_index(rs_->simple_root_index(i))] = X[i];
            act[e_index(rs_->negative_of(rs_->simple_root_index(i)))] = Y[i];
        }
        // integrate up the positive roots in height order
        for (std::size_t r = 0; r < rs_->num_positive(); ++r) {
            if (rs_->height(r) < 2) continue;
            auto [a, b] = rs_->extraspecial(r);
            long long nab = rs_->n_constant(a, b);
            act[e_index(r)] = detail::zdiv(detail::zcomm(act[e_index(a)], act[e_index(b)]), nab);
            std::size_t na = rs_->negative_of(a), nb = rs_->negative_of(b);
            long long nneg = rs_->n_constant(na, nb);
            act[e_index(rs_->negative_of(r))] =
                detail::zdiv(detail::zcomm(act[e_index(na)], act[e_index(nb)]), nneg);
        }

        NaturalModule mod;
        mod.dim_v = n;
        for (std::size_t b = 0; b < dim(); ++b) {
            Mat m(field_, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = field_.reduce(act[b][i][j]);
            mod.action.push_back(std::move(m));
        }
        return mod;
    }

    /// Pull a matrix in the image of the natural module back to coordinates.
    std::optional<Vec> from_matrix(const NaturalModule& mod, const Mat& m) const {
        std::size_t nv = mod.dim_v;
        Mat sys(field_, nv * nv, dim());
        for (std::size_t b = 0; b < dim(); ++b)
            for (std::size_t i = 0; i < nv; ++i)
                for (std::size_t j = 0; j < nv; ++j) sys(i * nv + j, b) = mod.action[b](i, j);
        Vec rhs(nv * nv);
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = 0; j < nv; ++j) rhs[i * nv + j] = m(i, j);
        Vec x;
        if (!ff::solve(sys, rhs, x)) return std::nullopt;
        return x;
    }

private:
    std::shared_ptr<const RootSystem> rs_;
    PrimeField field_;
    IsogenyVariant variant_;

    std::vector<std::vector<long long>> lattice_;     // lattice_[i][j] = <alpha_j, h_i>
    std::vector<std::vector<uint32_t>> hval_;         // hval_[i][r] = alpha_r(h_i) mod p
    std::vector<Vec> coroot_h_;                       // h_alpha coordinates per root

    struct TableEntry { uint32_t target; uint32_t coeff; };
    std::vector<uint32_t> table_off_;
    std::vector<TableEntry> table_dat_;

    struct AutEntry { uint32_t target; uint32_t coeff; uint8_t power; };
    std::vector<std::vector<std::vector<AutEntry>>> aut_; // [root][basis] -> entries

    std::pair<const TableEntry*, const TableEntry*> table_range(std::size_t i, std::size_t j) const {
        std::size_t k = i * dim() + j;
        return {table_dat_.data() + table_off_[k], table_dat_.data() + table_off_[k + 1]};
    }
    struct EntrySpan {
        const TableEntry *b, *e;
        const TableEntry* begin() const { return b; }
        const TableEntry* end() const { return e; }
    };
    EntrySpan table_entries(std::size_t i, std::size_t j) const {
        auto [b, e] = table_range(i, j);
        return {b, e};
    }

    void build_lattice() {
        std::size_t l = rank();
        char t = rs_->type();
        lattice_.assign(l, std::vector<long long>(l, 0));
        switch (variant_.kind) {
            case IsogenyVariant::SimplyConnected:
                for (std::size_t i = 0; i < l; ++i)
                    for (std::size_t j = 0; j < l; ++j) lattice_[i][j] = rs_->cartan()[i][j];
                break;
            case IsogenyVariant::Adjoint:
                for (std::size_t i = 0; i < l; ++i) lattice_[i][i] = 1;
                break;
            case IsogenyVariant::SLQuotient: {
                if (t != 'A') throw std::invalid_argument("SLQuotient variant needs type A");
                long long n = static_cast<long long>(l) + 1;
                if (variant_.quotient <= 0 || n % variant_.quotient != 0)
                    throw std::invalid_argument("SLQuotient: m must divide the matrix size");
                lattice_[0][0] = n / variant_.quotient;
                for (std::size_t i = 1; i < l; ++i)
                    for (std::size_t j = 0; j < l; ++j) lattice_[i][j] = rs_->cartan()[i - 1][j];
                break;
            }
            case IsogenyVariant::SOForm: {
                if (t != 'D') throw std::invalid_argument("SOForm variant needs type D");
                for (std::size_t i = 0; i < l; ++i) {
                    for (std::size_t j = 0; j + 1 < l; ++j)
                        lattice_[i][j] = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
                    lattice_[i][l - 1] = (i == l - 2 ? 1 : 0) + (i == l - 1 ? 1 : 0);
                }
                break;
            }
            case IsogenyVariant::HalfSpin: {
                if (t != 'D' || l % 2 != 0)
                    throw std::invalid_argument("HalfSpin variant needs type D of even rank");
                for (std::size_t i = 0; i + 1 < l; ++i) {
                    for (std::size_t j = 0; j + 1 < l; ++j)
                        lattice_[i][j] = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
                    lattice_[i][l - 1] = (i == l - 2 ? 1 : 0);
                }
                lattice_[l - 1][l - 1] = 1;
                break;
            }
        }
        hval_.assign(l, std::vector<uint32_t>(rs_->num_roots(), 0));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t r = 0; r < rs_->num_roots(); ++r) {
                long long v = 0;
                for (std::size_t j = 0; j < l; ++j) v += lattice_[i][j] * rs_->root(r)[j];
                hval_[i][r] = field_.reduce(v);
            }
    }

    void build_coroots() {
        // h_alpha = alpha^vee expressed in the lattice basis: solve c * L = pairings.
        std::size_t l = rank();
        coroot_h_.assign(rs_->num_roots(), Vec(dim(), 0));
        std::vector<std::vector<int>> lat_int(l, std::vector<int>(l));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) lat_int[i][j] = static_cast<int>(lattice_[i][j]);
        for (std::size_t r = 0; r < rs_->num_roots(); ++r) {
            auto v = rs_->coroot_pairings(r);
            std::vector<Frac> rhs(l);
            for (std::size_t j = 0; j < l; ++j) rhs[j] = Frac(v[j]);
            std::vector<Frac> c = detail::solve_left(lat_int, rhs);
            for (std::size_t i = 0; i < l; ++i) {
                if (!c[i].is_integer())
                    throw std::logic_error("coroot lattice not contained in chosen lattice");
                coroot_h_[r][i] = field_.reduce(c[i].as_integer());
            }
        }
    }

    void build_bracket_table() {
        std::size_t d = dim(), l = rank();
        table_off_.assign(d * d + 1, 0);
        std::vector<std::vector<TableEntry>> tmp(d * d);
        auto at = [&](std::size_t i, std::size_t j) -> std::vector<TableEntry>& {
            return tmp[i * d + j];
        };
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t r = 0; r < rs_->num_roots(); ++r) {
                uint32_t v = hval_[i][r];
                if (!v) continue;
                at(i, e_index(r)).push_back({static_cast<uint32_t>(e_index(r)), v});
                at(e_index(r), i).push_back({static_cast<uint32_t>(e_index(r)), field_.neg(v)});
            }
        for (std::size_t r = 0; r < rs_->num_roots(); ++r)
            for (std::size_t s = 0; s < rs_->num_roots(); ++s) {
                if (s == rs_->negative_of(r)) {
                    for (std::size_t i = 0; i < l; ++i)
                        if (coroot_h_[r][i])
                            at(e_index(r), e_index(s)).push_back({static_cast<uint32_t>(i), coroot_h_[r][i]});
                    continue;
                }
                long long n = rs_->n_constant(r, s);
                if (!n) continue;
                uint32_t c = field_.reduce(n);
                if (!c) continue;
                Coord sum(rs_->rank());
                for (int j = 0; j < rs_->rank(); ++j) sum[j] = rs_->root(r)[j] + rs_->root(s)[j];
                long tgt = rs_->find_root(sum);
                at(e_index(r), e_index(s)).push_back({static_cast<uint32_t>(e_index(tgt)), c});
            }
        std::size_t total = 0;
        for (std::size_t k = 0; k < d * d; ++k) {
            table_off_[k] = static_cast<uint32_t>(total);
            total += tmp[k].size();
        }
        table_off_[d * d] = static_cast<uint32_t>(total);
        table_dat_.reserve(total);
        for (std::size_t k = 0; k < d * d; ++k)
            for (const auto& e : tmp[k]) table_dat_.push_back(e);
    }

    void build_aut_tables() {
        std::size_t nr = rs_->num_roots();
        aut_.assign(nr, {});
        for (std::size_t alpha = 0; alpha < nr; ++alpha) {
            auto& tab = aut_[alpha];
            tab.assign(dim(), {});
            std::size_t nalpha = rs_->negative_of(alpha);
            // Cartan part: h -> h - t * alpha(h) e_alpha
            for (std::size_t i = 0; i < rank(); ++i) {
                tab[i].push_back({static_cast<uint32_t>(i), 1, 0});
                uint32_t v = hval_[i][alpha];
                if (v) tab[i].push_back({static_cast<uint32_t>(e_index(alpha)), field_.neg(v), 1});
            }
            for (std::size_t beta = 0; beta < nr; ++beta) {
                auto& row = tab[e_index(beta)];
                row.push_back({static_cast<uint32_t>(e_index(beta)), 1, 0});
                if (beta == alpha) continue;
                if (beta == nalpha) {
                    // e_{-a} + t h_a - t^2 e_a
                    for (std::size_t i = 0; i < rank(); ++i)
                        if (coroot_h_[alpha][i])
                            row.push_back({static_cast<uint32_t>(i), coroot_h_[alpha][i], 1});
                    row.push_back({static_cast<uint32_t>(e_index(alpha)), field_.neg(1), 2});
                    continue;
                }
                // e_beta -> sum_m t^m M_m e_{beta + m alpha}
                long long numer = 1, denom = 1;
                Coord cur = rs_->root(beta);
                std::size_t prev = beta;
                for (int m = 1; m <= 3; ++m) {
                    for (int j = 0; j < rs_->rank(); ++j) cur[j] += rs_->root(alpha)[j];
                    long tgt = rs_->find_root(cur);
                    if (tgt < 0) break;
                    numer *= rs_->n_constant(alpha, prev);
                    denom *= m;
                    if (numer % denom != 0) throw std::logic_error("divided power coefficient not integral");
                    uint32_t coeff = field_.reduce(numer / denom);
                    if (coeff)
                        row.push_back({static_cast<uint32_t>(e_index(static_cast<std::size_t>(tgt))),
                                       coeff, static_cast<uint8_t>(m)});
                    prev = static_cast<std::size_t>(tgt);
                }
            }
        }
    }
};

/// Replayable witness data: a base element plus conjugation words.
struct ConjugateSet {
    Vec base;
    std::vector<ConjugationWord> words;

    std::vector<Vec> realize(const Chevalley& g) const {
        std::vector<Vec> out;
        out.reserve(words.size());
        for (const auto& w : words) out.push_back(g.apply_word(w, base));
        return out;
    }
};

} // namespace liegen::lie
