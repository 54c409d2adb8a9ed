#pragma once

#include "liegen/fp.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace liegen::ff {

using Vec = std::vector<uint32_t>;

/// Dense row-major matrix over F_p.  Entries always reduced to [0, p).
class Mat {
public:
    Mat(PrimeField f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Mat identity(PrimeField f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat from_rows(PrimeField f, const std::vector<Vec>& rows, std::size_t cols) {
        Mat m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    void set_row(std::size_t i, const Vec& v) { std::copy(v.begin(), v.end(), data_.begin() + i * cols_); }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat transpose() const {
        Mat t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator+(const Mat& o) const {
        Mat r(field_, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(data_[k], o.data_[k]);
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r(field_, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.sub(data_[k], o.data_[k]);
        return r;
    }
    Mat operator*(const Mat& o) const {
        Mat r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                uint64_t a = (*this)(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (!o(k, j)) continue;
                    r(i, j) = static_cast<uint32_t>((r(i, j) + a * o(k, j)) % field_.p());
                }
            }
        return r;
    }
    Mat scaled(uint32_t c) const {
        Mat r(field_, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.mul(data_[k], c);
        return r;
    }

    Vec apply(const Vec& v) const { // matrix * column vector
        Vec r(rows_, 0);
        const uint64_t p = field_.p();
        for (std::size_t i = 0; i < rows_; ++i) {
            uint64_t acc = 0;
            const uint32_t* rp = data_.data() + i * cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                acc += static_cast<uint64_t>(rp[j]) * v[j];
                if (acc >= (1ULL << 62)) acc %= p;
            }
            r[i] = static_cast<uint32_t>(acc % p);
        }
        return r;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](uint32_t x) { return x == 0; });
    }

    std::size_t rank() const {
        Mat c = *this;
        return c.rref_in_place();
    }

    /// Reduces this matrix to reduced row echelon form; returns the rank.
    std::size_t rref_in_place() {
        const PrimeField& f = field_;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
            uint32_t inv = f.inv((*this)(r, c));
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = f.mul((*this)(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                uint32_t m = (*this)(i, c);
                if (!m) continue;
                for (std::size_t j = c; j < cols_; ++j)
                    (*this)(i, j) = f.sub((*this)(i, j), f.mul(m, (*this)(r, j)));
            }
            ++r;
        }
        return r;
    }

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<uint32_t> data_;
};

inline std::pair<Mat, std::size_t> rref(const Mat& m) {
    Mat r = m;
    std::size_t rk = r.rref_in_place();
    return {r, rk};
}

/// Incremental reduced-echelon accumulator.  Rows stay fully reduced against
/// each other, so the final basis is the canonical RREF of the span.
class EchelonBasis {
public:
    EchelonBasis(PrimeField f, std::size_t ambient) : field_(f), ambient_(ambient) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }

    /// Reduces v against the basis; returns the remainder (empty if dependent).
    Vec reduce(Vec v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            uint32_t c = v[pivots_[k]];
            if (!c) continue;
            const Vec& r = rows_[k];
            for (std::size_t j = 0; j < ambient_; ++j)
                if (r[j]) v[j] = field_.sub(v[j], field_.mul(c, r[j]));
        }
        return v;
    }

    /// Inserts v if independent; returns the normalized new row, or empty Vec.
    Vec add(const Vec& v) {
        Vec w = reduce(v);
        std::size_t piv = ambient_;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (w[j]) { piv = j; break; }
        if (piv == ambient_) return {};
        uint32_t inv = field_.inv(w[piv]);
        for (std::size_t j = piv; j < ambient_; ++j) w[j] = field_.mul(w[j], inv);
        // back-eliminate the new pivot from existing rows
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            uint32_t c = rows_[k][piv];
            if (!c) continue;
            for (std::size_t j = piv; j < ambient_; ++j)
                rows_[k][j] = field_.sub(rows_[k][j], field_.mul(c, w[j]));
        }
        std::size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, piv);
        rows_.insert(rows_.begin() + pos, w);
        return w;
    }

    bool contains(const Vec& v) const {
        Vec w = reduce(v);
        return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
    }

    Mat to_matrix() const { return Mat::from_rows(field_, rows_, ambient_); }

private:
    PrimeField field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;     // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

/// A linear subspace of F_p^n in canonical form: the basis matrix is the RREF
/// of any spanning set, so two subspaces are equal iff their bases are.
class Subspace {
public:
    Subspace(PrimeField f, std::size_t ambient) : basis_(f, 0, ambient), ambient_(ambient) {}

    static Subspace span(PrimeField f, const std::vector<Vec>& gens, std::size_t ambient) {
        EchelonBasis eb(f, ambient);
        for (const Vec& g : gens) eb.add(g);
        return from_echelon(eb);
    }
    static Subspace full(PrimeField f, std::size_t ambient) {
        Subspace s(f, ambient);
        s.basis_ = Mat::identity(f, ambient);
        return s;
    }
    static Subspace from_echelon(const EchelonBasis& eb) {
        Subspace s(eb.to_matrix().field(), eb.ambient());
        s.basis_ = eb.to_matrix();
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const PrimeField& field() const { return basis_.field(); }

    bool contains_vector(const Vec& v) const {
        EchelonBasis eb = to_echelon();
        return eb.contains(v);
    }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

    EchelonBasis to_echelon() const {
        EchelonBasis eb(basis_.field(), ambient_);
        for (std::size_t i = 0; i < basis_.rows(); ++i) eb.add(basis_.row(i));
        return eb;
    }

private:
    Mat basis_;
    std::size_t ambient_;
};

/// True iff b is contained in a (same ambient dimension required).
inline bool subspace_contains(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace_contains: ambient dimension mismatch");
    EchelonBasis eb = a.to_echelon();
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (!eb.contains(b.basis().row(i))) return false;
    return true;
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    EchelonBasis eb = a.to_echelon();
    for (std::size_t i = 0; i < b.dim(); ++i) eb.add(b.basis().row(i));
    return Subspace::from_echelon(eb);
}

/// Zassenhaus: row-reduce [A|A ; B|0]; rows with zero left half carry an
/// intersection basis in the right half.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    const std::size_t n = a.ambient_dim();
    const PrimeField f = a.field();
    std::size_t ra = a.dim(), rb = b.dim();
    Mat big(f, ra + rb, 2 * n);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            big(i, j) = a.basis()(i, j);
            big(i, n + j) = a.basis()(i, j);
        }
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < n; ++j) big(ra + i, j) = b.basis()(i, j);
    big.rref_in_place();
    std::vector<Vec> inter;
    for (std::size_t i = 0; i < big.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = big(i, j) == 0;
        if (!left_zero) continue;
        Vec v(n);
        bool nz = false;
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = big(i, n + j);
            nz |= v[j] != 0;
        }
        if (nz) inter.push_back(std::move(v));
    }
    return Subspace::span(f, inter, n);
}

/// Right null space { x : m x = 0 }, canonical basis.
inline Subspace kernel(const Mat& m) {
    const PrimeField f = m.field();
    auto [r, rk] = rref(m);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0; i < rk; ++i) {
        std::size_t c = 0;
        while (c < m.cols() && r(i, c) == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<Vec> gens;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(m.cols(), 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < rk; ++i) v[pivot_col[i]] = f.neg(r(i, fc));
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, gens, m.cols());
}

/// Smallest subspace containing the seed vectors and closed under the given
/// bilinear map.  Saturation is deterministic in the seed order: every new
/// independent vector is paired (both orders) with all vectors found so far.
template <class Op>
Subspace closure_under(const std::vector<Vec>& seed, Op&& op, PrimeField f, std::size_t ambient) {
    EchelonBasis eb(f, ambient);
    std::vector<Vec> gens;
    for (const Vec& s : seed) {
        Vec r = eb.add(s);
        if (!r.empty()) gens.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Vec a = op(gens[i], gens[j]);
            Vec ra = eb.add(a);
            if (!ra.empty()) gens.push_back(std::move(ra));
            if (j != i) {
                Vec b = op(gens[j], gens[i]);
                Vec rb = eb.add(b);
                if (!rb.empty()) gens.push_back(std::move(rb));
            }
        }
    }
    return Subspace::from_echelon(eb);
}

/// Solve m x = rhs; returns one solution if consistent.
inline bool solve(const Mat& m, const Vec& rhs, Vec& out) {
    const PrimeField f = m.field();
    Mat aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    aug.rref_in_place();
    out.assign(m.cols(), 0);
    for (std::size_t i = 0; i < aug.rows(); ++i) {
        std::size_t c = 0;
        while (c < aug.cols() && aug(i, c) == 0) ++c;
        if (c == aug.cols()) continue;
        if (c == m.cols()) return false; // inconsistent row
        out[c] = aug(i, m.cols());
    }
    return true;
}

} // namespace liegen::ff
