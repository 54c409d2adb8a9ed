#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace liegen::roots {

using Coord = std::vector<int>; // root in simple-root coordinates

/// Exact rational scalar for structure-constant derivations.
struct Frac {
    long long num = 0, den = 1;
    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) { normalize(); }
    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }
    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
    bool is_integer() const { return den == 1; }
    long long as_integer() const {
        if (den != 1) throw std::logic_error("Frac: expected integer value");
        return num;
    }
};

inline bool is_special_prime(char type, int rank, uint32_t p) {
    switch (type) {
        case 'B': return p == 2 && rank >= 2;
        case 'C': return p == 2 && rank >= 2;
        case 'F': return p == 2;
        case 'G': return p == 3;
        default: return false;
    }
}

/// Root system of a simple type, generated by reflection closure from the
/// Cartan matrix.  Roots are kept in simple-root integer coordinates;
/// positive roots come first, ordered by (height, lex), and the negative of
/// root i is root i + n_positive.
class RootSystem {
public:
    RootSystem(char type, int rank) : type_(type), rank_(rank) {
        init_cartan();
        generate_roots();
        index_roots();
        compute_structure_constants();
    }

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

    std::size_t num_roots() const { return roots_.size(); }
    std::size_t num_positive() const { return n_pos_; }
    const Coord& root(std::size_t i) const { return roots_[i]; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    bool is_positive(std::size_t i) const { return i < n_pos_; }
    std::size_t negative_of(std::size_t i) const { return i < n_pos_ ? i + n_pos_ : i - n_pos_; }
    std::size_t simple_root_index(int i) const { return simple_idx_[i]; }

    int height(std::size_t i) const {
        const Coord& c = roots_[i];
        return std::accumulate(c.begin(), c.end(), 0);
    }

    /// Index of a root given its coordinates; -1 if not a root.
    long find_root(const Coord& c) const {
        auto it = root_index_.find(c);
        return it == root_index_.end() ? -1 : static_cast<long>(it->second);
    }

    /// <beta, alpha_i^vee> for arbitrary integer vector beta.
    int pairing_with_simple_coroot(const Coord& beta, int i) const {
        int s = 0;
        for (int j = 0; j < rank_; ++j) s += beta[j] * cartan_[i][j];
        return s;
    }

    /// Twice-normalized inner product (long roots of simply-laced types get 2).
    long long ip(const Coord& a, const Coord& b) const {
        long long s = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) s += static_cast<long long>(a[i]) * b[j] * gram_[i][j];
        return s;
    }
    long long len2(std::size_t i) const { return ip(roots_[i], roots_[i]); }
    bool is_long(std::size_t i) const { return len2(i) == max_len2_; }

    std::size_t highest_root() const { return highest_; }

    /// <alpha_k, beta^vee> for all simple alpha_k; integer coefficients of the
    /// coroot of beta in evaluation form.
    std::vector<long long> coroot_pairings(std::size_t beta) const {
        std::vector<long long> v(rank_);
        long long l2 = len2(beta);
        for (int k = 0; k < rank_; ++k) {
            Coord ek(rank_, 0);
            ek[k] = 1;
            long long t = 2 * ip(ek, roots_[beta]);
            if (t % l2 != 0) throw std::logic_error("coroot_pairings: non-integral");
            v[k] = t / l2;
        }
        return v;
    }

    /// Chevalley structure constant N(a, b) with [e_a, e_b] = N e_{a+b};
    /// defined only when a+b is a root (0 otherwise).
    long long n_constant(std::size_t a, std::size_t b) const {
        auto it = nconst_.find({a, b});
        return it == nconst_.end() ? 0 : it->second;
    }

    /// Largest r with b - r*a a root (the a-chain below b).
    int chain_down(std::size_t a, std::size_t b) const {
        int r = 0;
        Coord c = roots_[b];
        while (true) {
            for (int j = 0; j < rank_; ++j) c[j] -= roots_[a][j];
            if (find_root(c) < 0) break;
            ++r;
        }
        return r;
    }

    /// Extraspecial pair of a non-simple positive root: the special pair
    /// (a, b), a+b = gamma, with a minimal in the (height, lex) root order.
    std::pair<std::size_t, std::size_t> extraspecial(std::size_t gamma) const {
        for (std::size_t a = 0; a < n_pos_; ++a) {
            Coord rest(rank_);
            for (int j = 0; j < rank_; ++j) rest[j] = roots_[gamma][j] - roots_[a][j];
            long b = find_root(rest);
            if (b >= 0 && static_cast<std::size_t>(b) < n_pos_ && a < static_cast<std::size_t>(b))
                return {a, static_cast<std::size_t>(b)};
        }
        throw std::logic_error("no special pair for positive root");
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["type"] = std::string(1, type_);
        j["rank"] = rank_;
        j["cartan"] = cartan_;
        j["roots"] = roots_;
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& [key, val] : nconst_)
            cs.push_back({key.first, key.second, val});
        j["constants"] = cs;
        return j;
    }

private:
    char type_;
    int rank_;
    std::vector<std::vector<int>> cartan_; // cartan_[i][j] = <alpha_j, alpha_i^vee>
    std::vector<long long> dprime_;        // half the normalized square length of alpha_i
    std::vector<std::vector<long long>> gram_;
    std::vector<Coord> roots_;
    std::map<Coord, std::size_t> root_index_;
    std::vector<std::size_t> simple_idx_;
    std::size_t n_pos_ = 0;
    std::size_t highest_ = 0;
    long long max_len2_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, long long> nconst_;

    void init_cartan() {
        const int l = rank_;
        auto bad = [&]() { throw std::invalid_argument("invalid type/rank: " + name()); };
        switch (type_) {
            case 'A': if (l < 1) bad(); break;
            case 'B': if (l < 2) bad(); break;
            case 'C': if (l < 2) bad(); break;
            case 'D': if (l < 3) bad(); break;
            case 'E': if (l < 6 || l > 8) bad(); break;
            case 'F': if (l != 4) bad(); break;
            case 'G': if (l != 2) bad(); break;
            default: bad();
        }
        cartan_.assign(l, std::vector<int>(l, 0));
        dprime_.assign(l, 1);
        for (int i = 0; i < l; ++i) cartan_[i][i] = 2;
        auto bond = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
        switch (type_) {
            case 'A':
                for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
                break;
            case 'B':
                for (int i = 0; i + 2 < l; ++i) bond(i, i + 1);
                cartan_[l - 2][l - 1] = -1;
                cartan_[l - 1][l - 2] = -2;
                for (int i = 0; i + 1 < l; ++i) dprime_[i] = 2;
                dprime_[l - 1] = 1;
                break;
            case 'C':
                for (int i = 0; i + 2 < l; ++i) bond(i, i + 1);
                cartan_[l - 2][l - 1] = -2;
                cartan_[l - 1][l - 2] = -1;
                for (int i = 0; i + 1 < l; ++i) dprime_[i] = 1;
                dprime_[l - 1] = 2;
                break;
            case 'D':
                for (int i = 0; i + 3 < l; ++i) bond(i, i + 1);
                bond(l - 3, l - 2);
                bond(l - 3, l - 1);
                break;
            case 'E':
                // Bourbaki numbering, zero-based: chain 1-3-4-5-6(-7-8), 2 at 4.
                bond(0, 2);
                bond(2, 3);
                bond(3, 4);
                bond(4, 5);
                if (l >= 7) bond(5, 6);
                if (l >= 8) bond(6, 7);
                bond(1, 3);
                break;
            case 'F':
                bond(0, 1);
                cartan_[1][2] = -1;
                cartan_[2][1] = -2;
                bond(2, 3);
                dprime_ = {2, 2, 1, 1};
                break;
            case 'G':
                cartan_[0][1] = -3;
                cartan_[1][0] = -1;
                dprime_ = {1, 3};
                break;
        }
        gram_.assign(l, std::vector<long long>(l, 0));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) gram_[i][j] = dprime_[i] * cartan_[i][j];
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                if (gram_[i][j] != gram_[j][i]) throw std::logic_error("Cartan data not symmetrizable");
    }

    void generate_roots() {
        std::set<Coord> seen;
        std::vector<Coord> queue;
        for (int i = 0; i < rank_; ++i) {
            Coord a(rank_, 0);
            a[i] = 1;
            seen.insert(a);
            queue.push_back(a);
        }
        while (!queue.empty()) {
            Coord b = queue.back();
            queue.pop_back();
            for (int i = 0; i < rank_; ++i) {
                int c = 0;
                for (int j = 0; j < rank_; ++j) c += b[j] * cartan_[i][j];
                Coord r = b;
                r[i] -= c;
                if (seen.insert(r).second) queue.push_back(r);
            }
        }
        roots_.assign(seen.begin(), seen.end());
    }

    void index_roots() {
        std::vector<Coord> pos;
        for (const Coord& r : roots_) {
            int h = std::accumulate(r.begin(), r.end(), 0);
            if (h > 0) pos.push_back(r);
        }
        std::sort(pos.begin(), pos.end(), [](const Coord& a, const Coord& b) {
            int ha = std::accumulate(a.begin(), a.end(), 0);
            int hb = std::accumulate(b.begin(), b.end(), 0);
            if (ha != hb) return ha < hb;
            return a < b;
        });
        n_pos_ = pos.size();
        roots_.clear();
        roots_ = pos;
        for (const Coord& r : pos) {
            Coord n(rank_);
            for (int j = 0; j < rank_; ++j) n[j] = -r[j];
            roots_.push_back(n);
        }
        for (std::size_t i = 0; i < roots_.size(); ++i) root_index_[roots_[i]] = i;
        simple_idx_.assign(rank_, 0);
        for (int i = 0; i < rank_; ++i) {
            Coord a(rank_, 0);
            a[i] = 1;
            simple_idx_[i] = root_index_.at(a);
        }
        max_len2_ = 0;
        for (std::size_t i = 0; i < roots_.size(); ++i) max_len2_ = std::max(max_len2_, len2(i));
        highest_ = n_pos_ - 1; // maximal in (height, lex) order
        for (std::size_t i = 0; i < n_pos_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (roots_[i][j] > roots_[highest_][j])
                    throw std::logic_error("highest root is not a coordinate maximum");
    }

    // --- structure constants (extraspecial pair convention) ---

    Coord sum_coords(std::size_t a, std::size_t b) const {
        Coord c(rank_);
        for (int j = 0; j < rank_; ++j) c[j] = roots_[a][j] + roots_[b][j];
        return c;
    }

    long long n_eval(std::size_t a, std::size_t b,
                     std::map<std::pair<std::size_t, std::size_t>, long long>& memo) const {
        Coord sc = sum_coords(a, b);
        long g = find_root(sc);
        if (g < 0) return 0;
        auto key = std::make_pair(a, b);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        long long val;
        bool pa = is_positive(a), pb = is_positive(b);
        if (pa && pb) {
            if (a > b) {
                val = -n_eval(b, a, memo);
            } else {
                auto [a1, b1] = extraspecial(static_cast<std::size_t>(g));
                if (a1 == a && b1 == b) {
                    val = chain_down(a, b) + 1;
                } else {
                    // Jacobi on (b1, -a, a1), all pairwise sums nonzero.
                    long long t1 = 0, t2 = 0;
                    if (find_root(sum_coords(b1, negative_of(a))) >= 0) {
                        std::size_t d = static_cast<std::size_t>(find_root(sum_coords(b1, negative_of(a))));
                        t1 = n_eval(b1, negative_of(a), memo) * n_eval(d, a1, memo);
                    }
                    if (find_root(sum_coords(negative_of(a), a1)) >= 0) {
                        std::size_t d = static_cast<std::size_t>(find_root(sum_coords(negative_of(a), a1)));
                        t2 = n_eval(negative_of(a), a1, memo) * n_eval(d, b1, memo);
                    }
                    Frac res = Frac(ip(roots_[g], roots_[g]), ip(roots_[b], roots_[b])) *
                               Frac(t1 + t2) / Frac(n_eval(a1, b1, memo));
                    val = res.as_integer();
                }
            }
        } else if (!pa && !pb) {
            val = -n_eval(negative_of(a), negative_of(b), memo);
        } else if (!pa) {
            val = -n_eval(b, a, memo);
        } else {
            // a positive, b negative
            if (is_positive(static_cast<std::size_t>(g))) {
                // N(a,b) = -(c,c)/(a,a) * N(-b, c)
                Frac res = Frac(ip(sc, sc), ip(roots_[a], roots_[a])) *
                           Frac(-n_eval(negative_of(b), static_cast<std::size_t>(g), memo));
                val = res.as_integer();
            } else {
                val = -n_eval(negative_of(a), negative_of(b), memo);
            }
        }
        memo[key] = val;
        return val;
    }

    void compute_structure_constants() {
        std::map<std::pair<std::size_t, std::size_t>, long long> memo;
        for (std::size_t a = 0; a < roots_.size(); ++a)
            for (std::size_t b = 0; b < roots_.size(); ++b) {
                if (b == negative_of(a)) continue;
                if (find_root(sum_coords(a, b)) < 0) continue;
                nconst_[{a, b}] = n_eval(a, b, memo);
            }
    }
};

inline int root_count(char type, int rank) {
    switch (type) {
        case 'A': return rank * (rank + 1);
        case 'B':
        case 'C': return 2 * rank * rank;
        case 'D': return 2 * rank * (rank - 1);
        case 'G': return 12;
        case 'F': return 48;
        case 'E': return rank == 6 ? 72 : (rank == 7 ? 126 : 240);
        default: throw std::invalid_argument("root_count: bad type");
    }
}

} // namespace liegen::roots
