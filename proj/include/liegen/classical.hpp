#pragma once

#include "liegen/fp.hpp"
#include "liegen/matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace liegen::cls {

using ff::Mat;
using ff::PrimeField;
using ff::Subspace;
using ff::Vec;

// ---------------------------------------------------------------------------
// Partitions

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        for (int x : parts)
            if (x <= 0) throw std::invalid_argument("partition parts must be positive");
    }

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int count() const { return static_cast<int>(parts.size()); }
    int multiplicity(int v) const {
        return static_cast<int>(std::count(parts.begin(), parts.end(), v));
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; parts.empty() ? false : j <= parts[0]; ++j) {
            int m = 0;
            for (int p : parts)
                if (p >= j) ++m;
            c.push_back(m);
        }
        return Partition(c);
    }

    long long sum_conjugate_squares() const {
        Partition c = conjugate();
        long long s = 0;
        for (int p : c.parts) s += static_cast<long long>(p) * p;
        return s;
    }

    int odd_part_count() const {
        int k = 0;
        for (int p : parts)
            if (p % 2) ++k;
        return k;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            if (!s.empty()) s += ",";
            s += std::to_string(parts[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s.empty() ? "0" : s;
    }

    /// Accepts "3,2,2,1" and exponent form "2^4,1^8" (mixed freely).
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("partition: empty component");
            auto caret = tok.find('^');
            int val, rep = 1;
            if (caret == std::string::npos) {
                val = std::stoi(tok);
            } else {
                val = std::stoi(tok.substr(0, caret));
                rep = std::stoi(tok.substr(caret + 1));
            }
            if (val <= 0 || rep <= 0) throw std::invalid_argument("partition: bad entry " + tok);
            for (int k = 0; k < rep; ++k) parts.push_back(val);
        }
        return Partition(parts);
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
};

/// Dominance: every prefix sum of a is <= the matching prefix sum of b.
inline bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("dominance_leq: partitions of different weights");
    long long sa = 0, sb = 0;
    std::size_t n = std::max(a.parts.size(), b.parts.size());
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.parts.size() ? a.parts[i] : 0;
        sb += i < b.parts.size() ? b.parts[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Algebras and class labels

enum class AlgKind { GL, SL, SP, SO, GO };

inline std::string kind_name(AlgKind k) {
    switch (k) {
        case AlgKind::GL: return "gl";
        case AlgKind::SL: return "sl";
        case AlgKind::SP: return "sp";
        case AlgKind::SO: return "so";
        case AlgKind::GO: return "go";
    }
    return "?";
}

inline AlgKind parse_kind(const std::string& s) {
    if (s == "gl") return AlgKind::GL;
    if (s == "sl") return AlgKind::SL;
    if (s == "sp") return AlgKind::SP;
    if (s == "so") return AlgKind::SO;
    if (s == "go") return AlgKind::GO;
    throw std::invalid_argument("unknown algebra kind: " + s);
}

enum class Char2Refinement { None, Larger, Smaller };

struct ToralLabel {
    // (eigenvalue, multiplicity) with eigenvalues listed explicitly; for the
    // symplectic/orthogonal kinds nonzero eigenvalues must come in +- pairs.
    std::vector<std::pair<uint32_t, int>> eigen;

    int total() const {
        int s = 0;
        for (auto& [e, m] : eigen) s += m;
        return s;
    }
    int max_multiplicity() const {
        int s = 0;
        for (auto& [e, m] : eigen) s = std::max(s, m);
        return s;
    }
    int zero_multiplicity() const {
        for (auto& [e, m] : eigen)
            if (e == 0) return m;
        return 0;
    }
    std::string to_string() const {
        std::string s = "t:";
        for (std::size_t i = 0; i < eigen.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(eigen[i].first) + "^" + std::to_string(eigen[i].second);
        }
        return s;
    }
};

struct ClassLabel {
    enum Kind { Nilpotent, Toral, GoOutside } kind = Nilpotent;
    Partition partition;                 // nilpotent
    Char2Refinement refinement = Char2Refinement::None;
    ToralLabel toral;                    // toral

    static ClassLabel nilpotent(Partition p, Char2Refinement r = Char2Refinement::None) {
        ClassLabel l;
        l.kind = Nilpotent;
        l.partition = std::move(p);
        l.refinement = r;
        return l;
    }
    static ClassLabel toral_label(ToralLabel t) {
        ClassLabel l;
        l.kind = Toral;
        l.toral = std::move(t);
        return l;
    }
    static ClassLabel go_outside() {
        ClassLabel l;
        l.kind = GoOutside;
        return l;
    }

    std::string to_string() const {
        switch (kind) {
            case Nilpotent: {
                std::string s = partition.to_string();
                if (refinement == Char2Refinement::Larger) s += ":larger";
                if (refinement == Char2Refinement::Smaller) s += ":smaller";
                return s;
            }
            case Toral: return toral.to_string();
            case GoOutside: return "go-split";
        }
        return "?";
    }
};

/// Largest eigenspace dimension: block count for nilpotents, max multiplicity
/// for torals.
inline int alpha_of(const ClassLabel& l) {
    switch (l.kind) {
        case ClassLabel::Nilpotent: return l.partition.count();
        case ClassLabel::Toral: return l.toral.max_multiplicity();
        case ClassLabel::GoOutside: throw std::invalid_argument("alpha_of: not defined for go-split");
    }
    return 0;
}

/// Partition parity rules per (kind, characteristic).
inline bool partition_valid(const Partition& pt, AlgKind kind, uint32_t p) {
    if (kind == AlgKind::GL || kind == AlgKind::SL) return true;
    std::map<int, int> mult;
    for (int v : pt.parts) ++mult[v];
    if (kind == AlgKind::SP) {
        if (p == 2) return false; // special characteristic, out of scope
        for (auto& [v, m] : mult)
            if (v % 2 == 1 && m % 2 == 1) return false;
        return true;
    }
    if (kind == AlgKind::SO || kind == AlgKind::GO) {
        if (p == 2) {
            // square-zero classes only: parts in {2,1}, even number of 2s
            for (auto& [v, m] : mult)
                if (v > 2) return false;
            return mult[2] % 2 == 0;
        }
        for (auto& [v, m] : mult)
            if (v % 2 == 0 && m % 2 == 1) return false;
        return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Matrix realizations

/// A matrix Lie algebra: basis plus (for the form kinds) the defining data.
struct MatrixAlgebra {
    AlgKind kind;
    std::size_t n;       // ambient matrix size
    PrimeField field;
    std::vector<Mat> basis;
    std::optional<Mat> gram;  // bilinear form B
    bool has_quadratic = false; // char-2 orthogonal: q(v) = sum v_i v_{i+m}

    std::size_t dim() const { return basis.size(); }
    std::string name() const { return kind_name(kind) + "_" + std::to_string(n); }

    /// Group dimension of the automorphism group attached to this kind.
    long long group_dim() const {
        long long nn = static_cast<long long>(n);
        switch (kind) {
            case AlgKind::GL: return nn * nn;
            case AlgKind::SL: return nn * nn - 1;
            case AlgKind::SP: return nn / 2 * nn + nn / 2; // 2m^2 + m
            case AlgKind::SO: return nn * (nn - 1) / 2;
            case AlgKind::GO: return nn * (nn - 1) / 2 + 1;
        }
        return 0;
    }

    Mat zero() const { return Mat(field, n, n); }

    Mat commutator(const Mat& a, const Mat& b) const { return a * b - b * a; }

    bool contains(const Mat& m) const {
        Vec c;
        return coordinatize(m, c);
    }

    bool coordinatize(const Mat& m, Vec& out) const {
        Mat sys(field, n * n, dim());
        for (std::size_t b = 0; b < dim(); ++b)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) sys(i * n + j, b) = basis[b](i, j);
        Vec rhs(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rhs[i * n + j] = m(i, j);
        if (!ff::solve(sys, rhs, out)) return false;
        Mat back = zero();
        for (std::size_t b = 0; b < dim(); ++b)
            if (out[b]) back = back + basis[b].scaled(out[b]);
        return back == m;
    }

    Mat from_coords(const Vec& c) const {
        Mat m = zero();
        for (std::size_t b = 0; b < dim(); ++b)
            if (c[b]) m = m + basis[b].scaled(c[b]);
        return m;
    }
};

namespace detail {

inline Mat split_symplectic_gram(PrimeField f, std::size_t m) {
    Mat j(f, 2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        j(i, m + i) = 1;
        j(m + i, i) = f.neg(1);
    }
    return j;
}

inline Mat split_orthogonal_gram(PrimeField f, std::size_t n) {
    Mat b(f, n, n);
    std::size_t m = n / 2;
    for (std::size_t i = 0; i < m; ++i) {
        b(i, m + i) = 1;
        b(m + i, i) = 1;
    }
    if (n % 2) b(n - 1, n - 1) = f.reduce(2);
    return b;
}

/// Solve the linear membership conditions and return a basis.
inline std::vector<Mat> condition_kernel_basis(PrimeField f, std::size_t n,
                                               const std::vector<Vec>& condition_rows) {
    Mat sys = Mat::from_rows(f, condition_rows, n * n);
    Subspace k = ff::kernel(sys);
    std::vector<Mat> basis;
    for (std::size_t r = 0; r < k.dim(); ++r) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = k.basis()(r, i * n + j);
        basis.push_back(std::move(m));
    }
    return basis;
}

} // namespace detail

/// Build gl/sl/sp/so/go as explicit matrix algebras over F_p with split forms.
inline MatrixAlgebra realize(AlgKind kind, std::size_t n, uint32_t pval) {
    PrimeField f(pval);
    MatrixAlgebra a{kind, n, f, {}, std::nullopt, false};
    auto eij = [&](std::size_t i, std::size_t j) {
        Mat m(f, n, n);
        m(i, j) = 1;
        return m;
    };
    switch (kind) {
        case AlgKind::GL:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) a.basis.push_back(eij(i, j));
            break;
        case AlgKind::SL:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j) a.basis.push_back(eij(i, j));
            for (std::size_t i = 0; i + 1 < n; ++i) {
                Mat m(f, n, n);
                m(i, i) = 1;
                m(i + 1, i + 1) = f.neg(1);
                a.basis.push_back(m);
            }
            break;
        case AlgKind::SP: {
            if (n % 2) throw std::invalid_argument("sp needs even size");
            Mat j = detail::split_symplectic_gram(f, n / 2);
            a.gram = j;
            // conditions: (x^T J + J x)_{rs} = 0
            std::vector<Vec> rows;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = r; s < n; ++s) {
                    Vec row(n * n, 0);
                    for (std::size_t k = 0; k < n; ++k) {
                        row[k * n + r] = f.add(row[k * n + r], j(k, s));      // x_{kr} J_{ks}... x^T J term
                        row[k * n + s] = f.add(row[k * n + s], j(r, k));      // J x term
                    }
                    rows.push_back(std::move(row));
                }
            a.basis = detail::condition_kernel_basis(f, n, rows);
            break;
        }
        case AlgKind::SO:
        case AlgKind::GO: {
            if (pval == 2) {
                if (n % 2) throw std::invalid_argument("orthogonal at p = 2 needs even size");
                std::size_t m = n / 2;
                Mat b = detail::split_orthogonal_gram(f, n);
                a.gram = b;
                a.has_quadratic = true;
                // s = x^T B must be symmetric with zero diagonal
                std::vector<Vec> rows;
                auto s_entry_row = [&](std::size_t r, std::size_t s_) {
                    // (x^T B)_{rs} = sum_k x_{kr} B_{ks}
                    Vec row(n * n, 0);
                    for (std::size_t k = 0; k < n; ++k)
                        if (b(k, s_)) row[k * n + r] = f.add(row[k * n + r], b(k, s_));
                    return row;
                };
                for (std::size_t r = 0; r < n; ++r) {
                    rows.push_back(s_entry_row(r, r)); // diag zero
                    for (std::size_t s_ = r + 1; s_ < n; ++s_) {
                        Vec d1 = s_entry_row(r, s_), d2 = s_entry_row(s_, r);
                        for (std::size_t k = 0; k < n * n; ++k) d1[k] = f.sub(d1[k], d2[k]);
                        rows.push_back(std::move(d1));
                    }
                }
                a.basis = detail::condition_kernel_basis(f, n, rows);
                if (kind == AlgKind::GO) {
                    // adjoin the projection onto the first m coordinates
                    Mat proj(f, n, n);
                    for (std::size_t i = 0; i < m; ++i) proj(i, i) = 1;
                    a.basis.push_back(proj);
                }
            } else {
                if (kind == AlgKind::GO)
                    throw std::invalid_argument("go is only realized at p = 2");
                Mat b = detail::split_orthogonal_gram(f, n);
                a.gram = b;
                std::vector<Vec> rows;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t s = r; s < n; ++s) {
                        Vec row(n * n, 0);
                        for (std::size_t k = 0; k < n; ++k) {
                            row[k * n + r] = f.add(row[k * n + r], b(k, s));
                            row[k * n + s] = f.add(row[k * n + s], b(r, k));
                        }
                        rows.push_back(std::move(row));
                    }
                a.basis = detail::condition_kernel_basis(f, n, rows);
            }
            break;
        }
    }
    return a;
}

// ---------------------------------------------------------------------------
// Class representatives

namespace detail {

/// gl Jordan matrix for a partition.
inline Mat jordan_matrix(PrimeField f, std::size_t n, const Partition& pt) {
    Mat m(f, n, n);
    std::size_t pos = 0;
    for (int part : pt.parts) {
        for (int k = 0; k + 1 < part; ++k) m(pos + k, pos + k + 1) = 1;
        pos += part;
    }
    return m;
}

/// Embed y in gl_m as [[y, 0], [0, -y^T]] acting on the split pairs.
inline void hyperbolic_embed(Mat& x, const Mat& y, std::size_t m,
                             const std::vector<std::size_t>& slots) {
    const PrimeField& f = x.field();
    for (std::size_t i = 0; i < slots.size(); ++i)
        for (std::size_t j = 0; j < slots.size(); ++j) {
            if (!y(i, j)) continue;
            x(slots[i], slots[j]) = y(i, j);
            x(m + slots[j], m + slots[i]) = f.neg(y(i, j));
        }
}

} // namespace detail

/// Nilpotent representative with the prescribed Jordan type inside the
/// algebra's matrix realization (form compatible by construction).
inline Mat nilpotent_rep(const ClassLabel& label, const MatrixAlgebra& a) {
    if (label.kind != ClassLabel::Nilpotent)
        throw std::invalid_argument("nilpotent_rep: label is not nilpotent");
    const Partition& pt = label.partition;
    const PrimeField& f = a.field;
    const std::size_t n = a.n;
    if (pt.weight() != static_cast<int>(n))
        throw std::invalid_argument("nilpotent_rep: partition weight != matrix size");
    if (!partition_valid(pt, a.kind, f.p()))
        throw std::invalid_argument("nilpotent_rep: partition invalid for " + a.name() +
                                    " at p=" + std::to_string(f.p()));

    if (a.kind == AlgKind::GL || a.kind == AlgKind::SL) {
        if (label.refinement != Char2Refinement::None)
            throw std::invalid_argument("nilpotent_rep: refinement only applies to type D at p = 2");
        return detail::jordan_matrix(f, n, pt);
    }

    const std::size_t m = n / 2;
    Mat x(f, n, n);

    if ((a.kind == AlgKind::SO || a.kind == AlgKind::GO) && f.p() == 2) {
        int two_blocks = pt.multiplicity(2);
        int r = two_blocks / 2; // rank 2r
        if (r == 0) {
            if (label.refinement != Char2Refinement::None)
                throw std::invalid_argument("nilpotent_rep: zero class has no refinement");
            return x;
        }
        if (label.refinement == Char2Refinement::None)
            throw std::invalid_argument("nilpotent_rep: char-2 square-zero class needs larger/smaller refinement");
        // smaller class: r hyperbolic gl rank-1 pairs; larger: swap one for the
        // indecomposable block whose image carries a nonzero quadratic value.
        int hyper = label.refinement == Char2Refinement::Smaller ? r : r - 1;
        std::size_t slot = 0;
        Mat y(f, m, m);
        for (int k = 0; k < hyper; ++k) {
            y(slot, slot + 1) = 1; // rank-1 square-zero
            slot += 2;
        }
        std::vector<std::size_t> all(m);
        for (std::size_t i = 0; i < m; ++i) all[i] = i;
        detail::hyperbolic_embed(x, y, m, all);
        if (label.refinement == Char2Refinement::Larger) {
            // x v = b(v,w) u + b(v,u) w on pairs (s, s+1), u = e_s + f_s, w = e_{s+1} + f_{s+1}
            std::size_t s = slot;
            if (s + 1 >= m) throw std::invalid_argument("nilpotent_rep: not enough room for the larger class");
            x(s + 1, s) = 1;     // e_s -> w
            x(m + s + 1, s) = 1;
            x(s + 1, m + s) = 1; // f_s -> w
            x(m + s + 1, m + s) = 1;
            x(s, s + 1) = 1;     // e_{s+1} -> u
            x(m + s, s + 1) = 1;
            x(s, m + s + 1) = 1; // f_{s+1} -> u
            x(m + s, m + s + 1) = 1;
        }
        return x;
    }

    if (a.kind == AlgKind::SP) {
        // even parts: single self-dual blocks; odd parts: hyperbolic pairs
        std::size_t next = 0;
        auto take = [&](int k) {
            std::vector<std::size_t> s(k);
            for (int i = 0; i < k; ++i) s[i] = next++;
            return s;
        };
        std::map<int, int> mult;
        for (int v : pt.parts) ++mult[v];
        for (auto& [v, cnt] : mult) {
            if (v % 2 == 0) {
                for (int c = 0; c < cnt; ++c) {
                    int k = v / 2;
                    auto slots = take(k);
                    // e-chain down, f-chain up with sign, connector f_k -> (-1)^k e_k
                    for (int i = 1; i < k; ++i) {
                        x(slots[i - 1], slots[i]) = 1;                       // e_i -> e_{i-1}
                        x(m + slots[i], m + slots[i - 1]) = f.neg(1);        // f_i -> -f_{i+1}
                    }
                    uint32_t sgn = (k % 2 == 0) ? 1 : f.neg(1);
                    x(slots[k - 1], m + slots[k - 1]) = sgn;
                }
            } else {
                for (int c = 0; c < cnt; c += 2) {
                    auto slots = take(v);
                    Mat y(f, v, v);
                    for (int i = 0; i + 1 < v; ++i) y(i, i + 1) = 1;
                    Mat big(f, m, m);
                    // embed block into chosen slots of a gl_m square
                    for (int i = 0; i < v; ++i)
                        for (int j = 0; j < v; ++j)
                            if (y(i, j)) big(slots[i], slots[j]) = y(i, j);
                    std::vector<std::size_t> all(m);
                    for (std::size_t i = 0; i < m; ++i) all[i] = i;
                    Mat part(f, n, n);
                    detail::hyperbolic_embed(part, big, m, all);
                    x = x + part;
                }
            }
        }
        return x;
    }

    // so at odd p: odd parts single blocks (with paired middle vectors), even
    // parts in hyperbolic pairs.  The action is specified on a generalized
    // basis W and the matrix recovered as T W^{-1}.
    if (a.kind == AlgKind::SO && f.p() != 2) {
        std::size_t mm = n / 2;
        bool has_true_middle = n % 2 == 1;
        std::size_t next = 0;
        auto take = [&](int k) {
            std::vector<std::size_t> s(k);
            for (int i = 0; i < k; ++i) s[i] = next++;
            return s;
        };
        std::vector<int> odd_parts, even_parts;
        for (int v : pt.parts) (v % 2 ? odd_parts : even_parts).push_back(v);
        std::sort(odd_parts.begin(), odd_parts.end(), std::greater<int>());
        std::sort(even_parts.begin(), even_parts.end(), std::greater<int>());

        std::vector<Vec> wcols, tcols;
        auto unit = [&](std::size_t i) {
            Vec v(n, 0);
            v[i] = 1;
            return v;
        };
        auto add_action = [&](const Vec& src, const Vec& dst) {
            wcols.push_back(src);
            tcols.push_back(dst);
        };
        std::vector<bool> used(n, false);

        // odd block of size 2k+1 whose middle vector g has b(g, g) = gamma
        auto place_odd = [&](int size, const Vec& g, uint32_t gamma) {
            int k = (size - 1) / 2;
            if (k == 0) {
                add_action(g, Vec(n, 0));
                return;
            }
            uint32_t c = f.mul(gamma, (k % 2 == 0) ? f.neg(1) : 1); // gamma = (-1)^{k+1} c
            auto slots = take(k);
            for (std::size_t s : slots) used[s] = used[mm + s] = true;
            add_action(unit(slots[0]), Vec(n, 0)); // e_1 -> 0
            for (int i = 1; i < k; ++i) add_action(unit(slots[i]), unit(slots[i - 1]));
            for (int i = 0; i + 1 < k; ++i) {
                Vec d(n, 0);
                d[mm + slots[i + 1]] = f.neg(1);
                add_action(unit(mm + slots[i]), d); // f_i -> -f_{i+1}
            }
            // f_k -> (-1)^k c^{-1} g,  g -> e_k
            uint32_t coef = f.mul((k % 2 == 0) ? 1 : f.neg(1), f.inv(c));
            Vec gscaled(n, 0);
            for (std::size_t i = 0; i < n; ++i) gscaled[i] = f.mul(g[i], coef);
            add_action(unit(mm + slots[k - 1]), gscaled);
            add_action(g, unit(slots[k - 1]));
        };

        std::size_t oi = 0;
        if (has_true_middle) {
            if (odd_parts.empty()) throw std::logic_error("odd orthogonal space needs an odd part");
            used[n - 1] = true;
            place_odd(odd_parts[oi++], unit(n - 1), f.reduce(2)); // true middle, b(g,g) = 2
        }
        while (oi + 1 < odd_parts.size()) {
            int s1 = odd_parts[oi], s2 = odd_parts[oi + 1];
            oi += 2;
            // reserved pair slot j: g1 = e_j + f_j (gamma 2), g2 = e_j - f_j (gamma -2)
            std::size_t j = next++;
            used[j] = used[mm + j] = true;
            Vec g1 = unit(j), g2 = unit(j);
            g1[mm + j] = 1;
            g2[mm + j] = f.neg(1);
            place_odd(s1, g1, f.reduce(2));
            place_odd(s2, g2, f.neg(f.reduce(2)));
        }
        if (oi != odd_parts.size()) throw std::logic_error("odd parts failed to pair");

        for (std::size_t ei = 0; ei < even_parts.size(); ei += 2) {
            int v = even_parts[ei];
            auto slots = take(v);
            for (std::size_t s : slots) used[s] = used[mm + s] = true;
            add_action(unit(slots[0]), Vec(n, 0));
            for (int i = 1; i < v; ++i) add_action(unit(slots[i]), unit(slots[i - 1])); // e-chain
            for (int i = 0; i + 1 < v; ++i) {
                Vec d(n, 0);
                d[mm + slots[i + 1]] = f.neg(1);
                add_action(unit(mm + slots[i]), d); // f-chain, adjoint sign
            }
            add_action(unit(mm + slots[v - 1]), Vec(n, 0));
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i]) add_action(unit(i), Vec(n, 0));

        // x W = T
        Mat w(f, n, n), tt(f, n, n);
        if (wcols.size() != n) throw std::logic_error("nilpotent_rep: basis bookkeeping error");
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) {
                w(r, c) = wcols[c][r];
                tt(r, c) = tcols[c][r];
            }
        // invert w by solving w * winv = I
        Mat aug(f, n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                aug(i, j) = w(i, j);
                aug(i, n + j) = i == j ? 1 : 0;
            }
        if (aug.rref_in_place() != n) throw std::logic_error("nilpotent_rep: generalized basis singular");
        Mat winv(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) winv(i, j) = aug(i, n + j);
        return tt * winv;
    }

    throw std::invalid_argument("nilpotent_rep: unsupported kind/characteristic");
}

/// Toral (x^[p] = x) representative with the prescribed eigenvalue data.
inline Mat toral_rep(const ClassLabel& label, const MatrixAlgebra& a) {
    const PrimeField& f = a.field;
    const std::size_t n = a.n;
    if (label.kind == ClassLabel::GoOutside) {
        if (a.kind != AlgKind::GO || f.p() != 2)
            throw std::invalid_argument("toral_rep: go-split class requires go at p = 2");
        Mat x(f, n, n);
        for (std::size_t i = 0; i < n / 2; ++i) x(i, i) = 1;
        return x;
    }
    if (label.kind != ClassLabel::Toral)
        throw std::invalid_argument("toral_rep: label is not toral");
    const auto& eigen = label.toral.eigen;
    for (auto& [e, m] : eigen) {
        if (m <= 0) throw std::invalid_argument("toral_rep: nonpositive multiplicity");
        if (f.pow(e, f.p()) != e) throw std::invalid_argument("toral_rep: eigenvalue not in F_p");
    }
    if (label.toral.total() != static_cast<int>(n))
        throw std::invalid_argument("toral_rep: multiplicities must sum to the matrix size");

    if (a.kind == AlgKind::GL || a.kind == AlgKind::SL) {
        Mat x(f, n, n);
        std::size_t pos = 0;
        long long tr = 0;
        for (auto& [e, m] : eigen)
            for (int k = 0; k < m; ++k) {
                x(pos, pos) = e;
                tr += e;
                ++pos;
            }
        if (a.kind == AlgKind::SL && f.reduce(tr) != 0)
            throw std::invalid_argument("toral_rep: trace must vanish in sl");
        return x;
    }

    // form kinds: eigenvalues in +- pairs, zero eigenvalue fills the rest
    std::map<uint32_t, int> mult;
    for (auto& [e, m] : eigen) mult[e] += m;
    if (f.p() == 2) {
        if (a.kind != AlgKind::SO && a.kind != AlgKind::GO)
            throw std::invalid_argument("toral_rep: p = 2 form kind must be so/go");
        int m1 = mult.count(1) ? mult[1] : 0;
        if (m1 % 2)
            throw std::invalid_argument("toral_rep: so at p = 2 needs even rank");
        std::size_t m = n / 2;
        Mat y(f, m, m);
        for (int i = 0; i < m1 / 2; ++i) y(i, i) = 1;
        Mat x(f, n, n);
        std::vector<std::size_t> all(m);
        for (std::size_t i = 0; i < m; ++i) all[i] = i;
        detail::hyperbolic_embed(x, y, m, all);
        return x;
    }
    for (auto& [e, m] : mult) {
        if (e == 0) continue;
        uint32_t ne = f.neg(e);
        if (!mult.count(ne) || mult[ne] != m)
            throw std::invalid_argument("toral_rep: eigenvalues must pair as +-a with equal multiplicity");
    }
    std::size_t m = n / 2;
    Mat x(f, n, n);
    std::size_t slot = 0;
    for (auto& [e, cnt] : mult) {
        if (e == 0 || e > f.p() - e) continue; // place each pair once, via its smaller representative
        for (int k = 0; k < cnt; ++k) {
            x(slot, slot) = e;
            x(m + slot, m + slot) = f.neg(e);
            ++slot;
        }
    }
    return x; // remaining slots (and the odd middle) stay zero
}

// ---------------------------------------------------------------------------
// Centralizers and orbit dimensions

/// Brute-force oracle: dim { m in algebra : [m, x] = 0 }.
inline std::size_t centralizer_dim_lie(const Mat& x, const MatrixAlgebra& a) {
    const std::size_t n = a.n;
    Mat sys(a.field, n * n, a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        Mat c = a.commutator(a.basis[b], x);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sys(i * n + j, b) = c(i, j);
    }
    return ff::kernel(sys).dim();
}

/// Group-orbit dimension dim x^G from the closed-form centralizer formulas.
/// Throws for combinations without a formula.
inline long long orbit_dim(const ClassLabel& label, AlgKind kind, std::size_t n, uint32_t p) {
    long long nn = static_cast<long long>(n);
    if (label.kind == ClassLabel::GoOutside) {
        if (kind != AlgKind::GO || p != 2)
            throw std::invalid_argument("orbit_dim: go-split class requires go at p = 2");
        long long m = nn / 2;
        return (m * m + m - 2) / 2;
    }
    if (label.kind == ClassLabel::Nilpotent) {
        const Partition& pt = label.partition;
        if (pt.weight() != static_cast<int>(n))
            throw std::invalid_argument("orbit_dim: partition weight mismatch");
        if (!partition_valid(pt, kind, p))
            throw std::invalid_argument("orbit_dim: invalid partition for kind/characteristic");
        long long sq = pt.sum_conjugate_squares();
        long long odd = pt.odd_part_count();
        switch (kind) {
            case AlgKind::GL:
            case AlgKind::SL:
                return nn * nn - sq;
            case AlgKind::SP:
                if (p == 2) throw std::invalid_argument("orbit_dim: no formula for sp at p = 2");
                return (nn / 2 * nn + nn / 2) - (sq / 2 + odd / 2);
            case AlgKind::SO:
            case AlgKind::GO: {
                if (p == 2) {
                    long long m = nn / 2;
                    long long r = pt.multiplicity(2) / 2;
                    if (r == 0) return 0;
                    if (label.refinement == Char2Refinement::Larger) return 4 * r * (m - r);
                    if (label.refinement == Char2Refinement::Smaller) return 2 * r * (2 * m - 2 * r - 1);
                    throw std::invalid_argument("orbit_dim: char-2 square-zero class needs a refinement");
                }
                return nn * (nn - 1) / 2 - (sq / 2 - odd / 2);
            }
        }
    }
    // toral
    const ToralLabel& t = label.toral;
    if (t.total() != static_cast<int>(n))
        throw std::invalid_argument("orbit_dim: toral multiplicities must sum to n");
    switch (kind) {
        case AlgKind::GL:
        case AlgKind::SL: {
            long long c = 0;
            for (auto& [e, m] : t.eigen) c += static_cast<long long>(m) * m;
            return nn * nn - c;
        }
        case AlgKind::SP: {
            if (p == 2) throw std::invalid_argument("orbit_dim: no formula for sp at p = 2");
            long long c = 0, m0 = t.zero_multiplicity();
            for (auto& [e, m] : t.eigen)
                if (e != 0 && e <= (p - 1) / 2) c += static_cast<long long>(m) * m;
            c += m0 * (m0 + 1) / 2;
            return (nn / 2 * nn + nn / 2) - c;
        }
        case AlgKind::SO:
        case AlgKind::GO: {
            if (p == 2) {
                long long m = nn / 2;
                long long r = 0;
                for (auto& [e, mm] : t.eigen)
                    if (e == 1) r = mm / 2;
                return (2 * m * m - m) - (2 * r * r - r) - (2 * (m - r) * (m - r) - (m - r));
            }
            long long c = 0, m0 = t.zero_multiplicity();
            for (auto& [e, m] : t.eigen)
                if (e != 0 && e <= (p - 1) / 2) c += static_cast<long long>(m) * m;
            c += m0 * (m0 - 1) / 2;
            return nn * (nn - 1) / 2 - c;
        }
    }
    throw std::invalid_argument("orbit_dim: unsupported combination");
}

// ---------------------------------------------------------------------------
// Deformation of semisimple elements

struct DeformCertificate {
    long long orbit_dim_x = -1, orbit_dim_y = -1;
    bool orbit_dims_equal = false;
    bool power_profile_ok = false;   // y^{r-1} != 0 and y^r = 0
    bool rank_ok = false;            // rank y = codim of largest eigenspace
    bool degeneration_ok = false;    // x + t y conjugate to x for sampled t
    int distinct_eigenvalues = 0;
    std::size_t rank_y = 0;
    bool ok() const { return orbit_dims_equal && power_profile_ok && rank_ok && degeneration_ok; }
};

struct DeformResult {
    Mat y;
    DeformCertificate cert;
    DeformResult(Mat yy) : y(std::move(yy)) {}
};

/// Lemma-style deformation: block superdiagonal nilpotent attached to the
/// eigenvalue blocks of a diagonal semisimple x in gl_n / sl_n.
inline DeformResult deform_semisimple(const Mat& x, AlgKind kind, const std::vector<uint32_t>& sample_ts = {1, 2}) {
    if (kind != AlgKind::GL && kind != AlgKind::SL)
        throw std::invalid_argument("deform_semisimple: direct construction covers gl/sl only");
    const PrimeField& f = x.field();
    const std::size_t n = x.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && x(i, j) != 0)
                throw std::invalid_argument("deform_semisimple: x must be diagonal");

    // group coordinates by eigenvalue, multiplicities descending
    std::map<uint32_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[x(i, i)].push_back(i);
    std::vector<std::pair<uint32_t, std::vector<std::size_t>>> blocks(groups.begin(), groups.end());
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        return a.second.size() > b.second.size();
    });
    const int r = static_cast<int>(blocks.size());

    DeformResult res{Mat(f, n, n)};
    for (int i = 0; i + 1 < r; ++i) {
        const auto& cur = blocks[i].second;
        const auto& nxt = blocks[i + 1].second;
        for (std::size_t k = 0; k < nxt.size(); ++k) res.y(cur[k], nxt[k]) = 1;
    }

    DeformCertificate& c = res.cert;
    c.distinct_eigenvalues = r;
    c.rank_y = res.y.rank();

    // (a) orbit dimensions via the centralizer formulas
    ToralLabel tl;
    for (auto& [e, idxs] : blocks) tl.eigen.push_back({e, static_cast<int>(idxs.size())});
    std::vector<int> mults;
    for (auto& [e, idxs] : blocks) mults.push_back(static_cast<int>(idxs.size()));
    Partition ypart = Partition(mults).conjugate();
    c.orbit_dim_x = orbit_dim(ClassLabel::toral_label(tl), AlgKind::GL, n, f.p());
    c.orbit_dim_y = orbit_dim(ClassLabel::nilpotent(ypart), AlgKind::GL, n, f.p());
    c.orbit_dims_equal = c.orbit_dim_x == c.orbit_dim_y;

    // (b) y^{r-1} != 0, y^r = 0
    Mat pw = Mat::identity(f, n);
    for (int k = 0; k < r - 1; ++k) pw = pw * res.y;
    bool prev_nonzero = !pw.is_zero();
    pw = pw * res.y;
    c.power_profile_ok = prev_nonzero && pw.is_zero();

    // (c) rank y = n - largest multiplicity
    c.rank_ok = c.rank_y == n - blocks.front().second.size();

    // (d) x + t y has the same eigenspace dimensions as x for each sample t
    c.degeneration_ok = true;
    for (uint32_t t : sample_ts) {
        if (f.reduce(t) == 0) continue;
        Mat a = x + res.y.scaled(f.reduce(t));
        for (auto& [e, idxs] : blocks) {
            Mat shifted = a - Mat::identity(f, n).scaled(e);
            if (ff::kernel(shifted).dim() != idxs.size()) c.degeneration_ok = false;
        }
    }
    return res;
}

struct SplitDeformCertificate {
    bool in_algebra = false;
    bool nilpotent = false;
    bool degeneration_ok = false; // x + t y conjugate to x for sampled t
    std::size_t rank_y = 0;
    bool ok() const { return in_algebra && nilpotent && degeneration_ok; }
};

/// Nilpotent degeneration of a split-diagonal semisimple element of sp/so,
/// assembled from root vectors joining eigenvalue slots (each summand is
/// removable by a single root-group conjugation, so x + t y stays in x^G).
inline std::pair<Mat, SplitDeformCertificate> deform_semisimple_split(const Mat& x,
                                                                      const MatrixAlgebra& a,
                                                                      const std::vector<uint32_t>& sample_ts = {1}) {
    if (a.kind != AlgKind::SP && a.kind != AlgKind::SO)
        throw std::invalid_argument("deform_semisimple_split: sp/so only");
    const PrimeField& f = a.field;
    const std::size_t n = a.n, m = n / 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && x(i, j)) throw std::invalid_argument("deform_semisimple_split: x must be diagonal");
    for (std::size_t i = 0; i < m; ++i)
        if (f.add(x(i, i), x(m + i, m + i)) != 0)
            throw std::invalid_argument("deform_semisimple_split: diagonal must pair as (d, -d)");

    std::vector<std::size_t> zero_slots, nz_slots;
    for (std::size_t i = 0; i < m; ++i) (x(i, i) == 0 ? zero_slots : nz_slots).push_back(i);

    Mat y(f, n, n);
    std::size_t zi = 0, ni = 0;
    // zero <-> nonzero: hyperbolic rank-1 pair (a gl_m root vector)
    while (zi < zero_slots.size() && ni < nz_slots.size()) {
        std::size_t i = zero_slots[zi++], j = nz_slots[ni++];
        y(i, j) = 1;
        y(m + j, m + i) = f.neg(1);
    }
    // leftover nonzero slots
    std::vector<std::size_t> left(nz_slots.begin() + ni, nz_slots.end());
    if (a.kind == AlgKind::SP) {
        for (std::size_t j : left) y(j, m + j) = 1; // root 2 eps_j
    } else {
        std::size_t k = 0;
        while (k + 1 < left.size()) {
            std::size_t i = left[k], j = left[k + 1];
            k += 2;
            if (x(i, i) != x(j, j)) {
                y(i, j) = 1;
                y(m + j, m + i) = f.neg(1); // eps_i - eps_j
            } else {
                y(i, m + j) = 1;
                y(j, m + i) = f.neg(1); // eps_i + eps_j
            }
        }
        if (k < left.size() && n % 2 == 1) {
            std::size_t j = left[k]; // short root eps_j through the middle slot
            y(j, n - 1) = f.reduce(2);
            y(n - 1, m + j) = f.neg(1);
        }
    }

    SplitDeformCertificate cert;
    cert.in_algebra = a.contains(y);
    Mat pw = y;
    for (std::size_t k = 1; k < n && !pw.is_zero(); ++k) pw = pw * y;
    cert.nilpotent = pw.is_zero();
    cert.rank_y = y.rank();
    cert.degeneration_ok = true;
    std::map<uint32_t, std::size_t> mult;
    for (std::size_t i = 0; i < n; ++i) ++mult[x(i, i)];
    for (uint32_t t : sample_ts) {
        if (f.reduce(t) == 0) continue;
        Mat b = x + y.scaled(f.reduce(t));
        for (auto& [e, cnt] : mult) {
            Mat shifted = b - Mat::identity(f, n).scaled(e);
            if (ff::kernel(shifted).dim() != cnt) cert.degeneration_ok = false;
        }
    }
    return {y, cert};
}

// ---------------------------------------------------------------------------
// Partition specializations from the generation proofs

enum class SpecializeRule {
    CEvenTail,    // (2s+2, 1, 1) -> (s+1, s+1, 2), s >= 2
    COddPairs,    // (2s+1, 2s+1, 1, 1) -> (2s, 2s, 2, 2), s >= 2
    CHalve,       // (2s) -> (s, s), s >= 3
    CSplit,       // (s, s) -> (s-1, s-1, 1, 1), s >= 4
    CFourTwo,     // (4, 2) -> (3, 3)
    BDOddOne,     // (2s+1, 1) -> (s+1, s+1), s >= 1
    BDPairDrop,   // (s, s, 1, 1) -> (s-1, s-1, 2, 2), s >= 4
    BDEvenPair,   // (2s, 2s) -> (s, s, s, s), s >= 2
    BDOddMinus4,  // (s) -> (s-4, 2, 2), odd s >= 7
};

inline Partition specialize(const Partition& pt, SpecializeRule rule) {
    auto remove_parts = [](std::vector<int> parts, const std::vector<int>& rm) {
        for (int v : rm) {
            auto it = std::find(parts.begin(), parts.end(), v);
            if (it == parts.end()) return std::optional<std::vector<int>>{};
            parts.erase(it);
        }
        return std::optional<std::vector<int>>{parts};
    };
    auto apply = [&](const std::vector<int>& rm, const std::vector<int>& add) -> std::optional<Partition> {
        auto rest = remove_parts(pt.parts, rm);
        if (!rest) return std::nullopt;
        std::vector<int> out = *rest;
        out.insert(out.end(), add.begin(), add.end());
        return Partition(out);
    };
    std::optional<Partition> out;
    switch (rule) {
        case SpecializeRule::CEvenTail:
            for (int s = (pt.parts.empty() ? 0 : pt.parts[0]) / 2; s >= 2 && !out; --s)
                out = apply({2 * s + 2, 1, 1}, {s + 1, s + 1, 2});
            break;
        case SpecializeRule::COddPairs:
            for (int s = pt.parts.empty() ? 0 : pt.parts[0] / 2; s >= 2 && !out; --s)
                out = apply({2 * s + 1, 2 * s + 1, 1, 1}, {2 * s, 2 * s, 2, 2});
            break;
        case SpecializeRule::CHalve:
            for (int s = (pt.parts.empty() ? 0 : pt.parts[0]) / 2; s >= 3 && !out; --s)
                out = apply({2 * s}, {s, s});
            break;
        case SpecializeRule::CSplit:
            for (int s = pt.parts.empty() ? 0 : pt.parts[0]; s >= 4 && !out; --s)
                out = apply({s, s}, {s - 1, s - 1, 1, 1});
            break;
        case SpecializeRule::CFourTwo:
            out = apply({4, 2}, {3, 3});
            break;
        case SpecializeRule::BDOddOne:
            for (int s = pt.parts.empty() ? 0 : pt.parts[0] / 2; s >= 1 && !out; --s)
                out = apply({2 * s + 1, 1}, {s + 1, s + 1});
            break;
        case SpecializeRule::BDPairDrop:
            for (int s = pt.parts.empty() ? 0 : pt.parts[0]; s >= 4 && !out; --s)
                out = apply({s, s, 1, 1}, {s - 1, s - 1, 2, 2});
            break;
        case SpecializeRule::BDEvenPair:
            for (int s = (pt.parts.empty() ? 0 : pt.parts[0]) / 2; s >= 2 && !out; --s)
                out = apply({2 * s, 2 * s}, {s, s, s, s});
            break;
        case SpecializeRule::BDOddMinus4:
            for (int s = pt.parts.empty() ? 0 : pt.parts[0]; s >= 7 && !out; --s)
                if (s % 2 == 1) out = apply({s}, {s - 4, 2, 2});
            break;
    }
    if (!out) throw std::invalid_argument("specialize: rule not applicable to " + pt.to_string());
    if (!dominance_leq(*out, pt)) throw std::logic_error("specialize: rewrite is not a degeneration");
    return *out;
}

// ---------------------------------------------------------------------------
// Class enumeration (desk scale)

inline void partitions_rec(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Partition> all_partitions(int n, int maxpart = 0) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, maxpart == 0 ? n : maxpart, cur, out);
    return out;
}

/// Noncentral nilpotent classes for the given kind with x^[p]-compatible parts
/// when restricted (max_part = p for the "x^[p] = 0" regime, 0 for all).
inline std::vector<ClassLabel> enumerate_nilpotent_classes(AlgKind kind, std::size_t n, uint32_t p,
                                                           int max_part = 0) {
    std::vector<ClassLabel> out;
    for (const Partition& pt : all_partitions(static_cast<int>(n), max_part)) {
        if (pt.parts[0] == 1) continue; // zero element
        if (!partition_valid(pt, kind, p)) continue;
        if ((kind == AlgKind::SO || kind == AlgKind::GO) && p == 2) {
            out.push_back(ClassLabel::nilpotent(pt, Char2Refinement::Larger));
            out.push_back(ClassLabel::nilpotent(pt, Char2Refinement::Smaller));
        } else {
            out.push_back(ClassLabel::nilpotent(pt));
        }
    }
    return out;
}

/// Noncentral toral classes: multiplicity data over eigenvalue sets of size
/// <= min(p, n), with the form pairing constraints.
inline std::vector<ClassLabel> enumerate_toral_classes(AlgKind kind, std::size_t n, uint32_t p) {
    std::vector<ClassLabel> out;
    if (kind == AlgKind::GL || kind == AlgKind::SL) {
        // distinct eigenvalues realized as 0, 1, 2, ...; orbit data depends only
        // on the multiplicity multiset
        int maxk = std::min<int>(p, static_cast<int>(n));
        for (int k = 2; k <= maxk; ++k) {
            std::vector<Partition> mults;
            std::vector<int> cur;
            partitions_rec(static_cast<int>(n), static_cast<int>(n), cur, mults);
            for (const Partition& m : mults) {
                if (m.count() != k) continue;
                ToralLabel t;
                for (int i = 0; i < k; ++i) t.eigen.push_back({static_cast<uint32_t>(i), m.parts[i]});
                out.push_back(ClassLabel::toral_label(t));
            }
        }
        return out;
    }
    if ((kind == AlgKind::SO || kind == AlgKind::GO) && p == 2) {
        std::size_t m = n / 2;
        for (std::size_t r = 1; r < m; ++r) { // r = m is the central identity
            ToralLabel t;
            t.eigen.push_back({1, static_cast<int>(2 * r)});
            t.eigen.push_back({0, static_cast<int>(n - 2 * r)});
            out.push_back(ClassLabel::toral_label(t));
        }
        if (kind == AlgKind::GO) out.push_back(ClassLabel::go_outside());
        return out;
    }
    if (p == 2) return out; // sp at p = 2: special characteristic
    // sp/so, p odd: nonzero eigenvalues in +- pairs plus a zero block
    int max_pairs = std::min<int>((p - 1) / 2, static_cast<int>(n / 2));
    for (int k = 1; k <= max_pairs; ++k) {
        // choose pair multiplicities m_1 >= ... >= m_k >= 1 with 2*sum <= n
        std::vector<Partition> mults = all_partitions(static_cast<int>(n / 2));
        for (const Partition& mseq : mults) {
            if (mseq.count() != k) continue;
            int pairs_total = 2 * mseq.weight();
            int m0 = static_cast<int>(n) - pairs_total;
            if (m0 < 0) continue;
            if (kind == AlgKind::SP && m0 % 2) continue;
            ToralLabel t;
            for (int i = 0; i < k; ++i) {
                uint32_t e = static_cast<uint32_t>(i + 1);
                t.eigen.push_back({e, mseq.parts[i]});
                t.eigen.push_back({p - e, mseq.parts[i]});
            }
            if (m0 > 0) t.eigen.push_back({0, m0});
            out.push_back(ClassLabel::toral_label(t));
        }
    }
    return out;
}

/// All noncentral toral classes with explicit eigenvalues, for fixed-space
/// sweeps where the eigenvalues (not just their multiplicities) matter.
/// sl additionally requires vanishing trace.
inline std::vector<ClassLabel> enumerate_toral_classes_exact(AlgKind kind, std::size_t n, uint32_t p) {
    std::vector<ClassLabel> out;
    if (kind == AlgKind::GL || kind == AlgKind::SL) {
        // multisets of eigenvalues: distinct values ascending with multiplicities
        std::vector<std::pair<uint32_t, int>> cur;
        std::function<void(uint32_t, int)> rec = [&](uint32_t minval, int rem) {
            if (rem == 0) {
                if (cur.size() < 2) return; // central
                if (kind == AlgKind::SL) {
                    long long tr = 0;
                    for (auto& [e, m] : cur) tr += static_cast<long long>(e) * m;
                    if (tr % p != 0) return;
                }
                ToralLabel t;
                t.eigen = cur;
                out.push_back(ClassLabel::toral_label(t));
                return;
            }
            for (uint32_t v = minval; v < p; ++v)
                for (int m = 1; m <= rem; ++m) {
                    cur.push_back({v, m});
                    rec(v + 1, rem - m);
                    cur.pop_back();
                }
        };
        rec(0, static_cast<int>(n));
        return out;
    }
    if ((kind == AlgKind::SO || kind == AlgKind::GO) && p == 2)
        return enumerate_toral_classes(kind, n, p);
    if (p == 2) return out;
    // sp/so, p odd: choose distinct pair values and multiplicities
    int maxval = (static_cast<int>(p) - 1) / 2;
    std::vector<std::pair<uint32_t, int>> cur;
    std::function<void(int, int)> rec = [&](int minval, int used) {
        if (!cur.empty()) {
            int m0 = static_cast<int>(n) - 2 * used;
            if (m0 >= 0 && (kind != AlgKind::SP || m0 % 2 == 0)) {
                ToralLabel t;
                for (auto& [e, m] : cur) {
                    t.eigen.push_back({e, m});
                    t.eigen.push_back({p - e, m});
                }
                if (m0 > 0) t.eigen.push_back({0, m0});
                out.push_back(ClassLabel::toral_label(t));
            }
        }
        for (int v = minval; v <= maxval; ++v)
            for (int m = 1; 2 * (used + m) <= static_cast<int>(n); ++m) {
                cur.push_back({static_cast<uint32_t>(v), m});
                rec(v + 1, used + m);
                cur.pop_back();
            }
    };
    rec(1, 0);
    return out;
}

} // namespace liegen::cls
