#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth from modular representations of Z/pZ.
 *
 * A Z/pZ-module over F_p is a unipotent operator u; its isomorphism type is
 * the multiset of Jordan block sizes (each <= p). Tensor, symmetric and
 * exterior powers are built as explicit matrices over F_p and their Jordan
 * types recovered from ranks of powers of u - 1. Passing to Ver_p deletes
 * the blocks of size p. Nothing here uses the closed formulas of the other
 * modules.
 */

#include "numeric.hpp"
#include "verlinde_ring.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace verlinde::oracle {

using Fp = std::uint32_t;
using VectorFp = std::vector<Fp>;

/// Default cap on the dimension of matrices the oracle agrees to build.
inline constexpr std::int64_t default_max_dim = 3000;

namespace detail {

inline Fp add(Fp a, Fp b, Fp p) {
    const std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Fp>(s >= p ? s - p : s);
}
inline Fp sub(Fp a, Fp b, Fp p) { return a >= b ? a - b : static_cast<Fp>(std::uint64_t(a) + p - b); }
inline Fp mul(Fp a, Fp b, Fp p) { return static_cast<Fp>((std::uint64_t(a) * b) % p); }

inline Fp inverse(Fp a, Fp p) {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Fp>(result);
}

inline Fp reduce(std::int64_t x, Fp p) { return static_cast<Fp>(mod_floor(x, p)); }

inline void check_budget(std::int64_t dim, std::int64_t max_dim, const char* what) {
    if (dim > max_dim)
        throw invalid_input(std::string(what) + ": module of dimension " + std::to_string(dim) +
                            " exceeds the oracle budget " + std::to_string(max_dim));
}

}  // namespace detail

/// Dense matrix over F_p.
class MatrixFp {
public:
    MatrixFp(std::int64_t p, std::size_t rows, std::size_t cols)
        : p_(static_cast<Fp>(p)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
        require_prime(p);
        if (p > std::numeric_limits<Fp>::max()) throw invalid_input("MatrixFp: prime too large");
    }

    static MatrixFp identity(std::int64_t p, std::size_t n) {
        MatrixFp out(p, n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
        return out;
    }

    /// Single unipotent Jordan block of size n: e_k -> e_k + e_{k+1}.
    static MatrixFp jordan_block(std::int64_t p, std::size_t n) {
        MatrixFp out = identity(p, n);
        for (std::size_t k = 0; k + 1 < n; ++k) out(k + 1, k) = 1;
        return out;
    }

    std::int64_t p() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Sets an entry from any integer, reducing mod p.
    void set(std::size_t r, std::size_t c, std::int64_t v) { (*this)(r, c) = detail::reduce(v, p_); }

    friend MatrixFp operator*(const MatrixFp& a, const MatrixFp& b) {
        if (a.cols_ != b.rows_ || a.p_ != b.p_) throw invalid_input("MatrixFp: incompatible product");
        MatrixFp out(a.p_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Fp x = a(i, k);
                if (!x) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) = detail::add(out(i, j), detail::mul(x, b(k, j), a.p_), a.p_);
            }
        return out;
    }

    friend MatrixFp operator-(const MatrixFp& a, const MatrixFp& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p_ != b.p_)
            throw invalid_input("MatrixFp: incompatible difference");
        MatrixFp out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = detail::sub(a.data_[k], b.data_[k], a.p_);
        return out;
    }

    /// Kronecker product; the index of e_i (x) f_j is i * b.cols() + j.
    friend MatrixFp kronecker(const MatrixFp& a, const MatrixFp& b) {
        if (a.p_ != b.p_) throw invalid_input("MatrixFp: mismatched primes");
        MatrixFp out(a.p_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const Fp x = a(i, j);
                if (!x) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        out(i * b.rows_ + k, j * b.cols_ + l) = detail::mul(x, b(k, l), a.p_);
            }
        return out;
    }

    /// Column-vector product M v.
    VectorFp apply(const VectorFp& v) const {
        VectorFp out(rows_, 0);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!v[j]) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const Fp x = (*this)(i, j);
                if (x) out[i] = detail::add(out[i], detail::mul(x, v[j], p_), p_);
            }
        }
        return out;
    }

    friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

private:
    Fp p_;
    std::size_t rows_, cols_;
    std::vector<Fp> data_;
};

/// Reduces `rows` to a basis of their span (row echelon form); returns the rank.
inline std::size_t row_reduce(std::vector<VectorFp>& rows, Fp p) {
    if (rows.empty()) return 0;
    const std::size_t n = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Fp inv = detail::inverse(rows[rank][col], p);
        for (auto& x : rows[rank]) x = detail::mul(x, inv, p);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const Fp f = rows[r][col];
            if (!f) continue;
            for (std::size_t c = col; c < n; ++c)
                if (rows[rank][c]) rows[r][c] = detail::sub(rows[r][c], detail::mul(f, rows[rank][c], p), p);
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

inline std::size_t rank(const MatrixFp& m) {
    std::vector<VectorFp> rows(m.rows(), VectorFp(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return row_reduce(rows, static_cast<Fp>(m.p()));
}

/// Multiset of Jordan block sizes of a Z/pZ-module, sorted ascending.
class JordanType {
public:
    JordanType(std::int64_t p, std::vector<std::int64_t> blocks) : p_(p), blocks_(std::move(blocks)) {
        require_prime(p);
        for (auto b : blocks_)
            if (b < 1 || b > p)
                throw invalid_input("JordanType: block size " + std::to_string(b) + " outside 1.." +
                                    std::to_string(p));
        std::sort(blocks_.begin(), blocks_.end());
    }

    std::int64_t p() const noexcept { return p_; }
    const std::vector<std::int64_t>& blocks() const noexcept { return blocks_; }

    std::int64_t dimension() const { return std::accumulate(blocks_.begin(), blocks_.end(), std::int64_t{0}); }
    std::int64_t count(std::int64_t size) const { return std::count(blocks_.begin(), blocks_.end(), size); }

    /// Multiset union (direct sum of modules).
    friend JordanType operator+(const JordanType& a, const JordanType& b) {
        if (a.p_ != b.p_) throw invalid_input("JordanType: mismatched primes");
        auto blocks = a.blocks_;
        blocks.insert(blocks.end(), b.blocks_.begin(), b.blocks_.end());
        return JordanType(a.p_, std::move(blocks));
    }

    friend bool operator==(const JordanType&, const JordanType&) = default;

private:
    std::int64_t p_;
    std::vector<std::int64_t> blocks_;
};

/// Linear map on F_p^n given as a function on vectors.
using LinearOperator = std::function<VectorFp(const VectorFp&)>;

/**
 * Jordan type of a nilpotent N restricted to the N-stable subspace spanned by
 * `basis`, read off from r_k = dim N^k W: #blocks of size >= k is r_{k-1} - r_k.
 * Blocks of the corresponding unipotent 1 + N; throws if N^p W != 0.
 */
inline JordanType jordan_type_of_nilpotent(std::int64_t p, const LinearOperator& nilpotent,
                                           std::vector<VectorFp> basis) {
    const auto fp = static_cast<Fp>(p);
    std::vector<std::int64_t> ranks{static_cast<std::int64_t>(row_reduce(basis, fp))};
    while (ranks.back() > 0) {
        if (static_cast<std::int64_t>(ranks.size()) > p)
            throw invalid_input("jordan_type_of: operator is not unipotent of order p ((u-1)^p != 0)");
        for (auto& v : basis) v = nilpotent(v);
        ranks.push_back(static_cast<std::int64_t>(row_reduce(basis, fp)));
    }
    ranks.push_back(0);
    std::vector<std::int64_t> blocks;
    for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
        const auto at_least_k = ranks[k - 1] - ranks[k];
        const auto at_least_k1 = ranks[k] - ranks[k + 1];
        for (std::int64_t c = 0; c < at_least_k - at_least_k1; ++c) blocks.push_back(static_cast<std::int64_t>(k));
    }
    return JordanType(p, std::move(blocks));
}

inline std::vector<VectorFp> standard_basis(std::size_t n) {
    std::vector<VectorFp> out(n, VectorFp(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

/// Jordan type of a unipotent square matrix.
inline JordanType jordan_type_of(const MatrixFp& u) {
    if (u.rows() != u.cols()) throw invalid_input("jordan_type_of: matrix is not square");
    const auto fp = static_cast<Fp>(u.p());
    const std::size_t dim = u.rows();
    // u - 1 by columns, keeping only nonzero entries
    std::vector<std::vector<std::pair<std::size_t, Fp>>> columns(dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            const Fp x = i == j ? detail::sub(u(i, j), 1, fp) : u(i, j);
            if (x) columns[j].emplace_back(i, x);
        }
    auto nilpotent = [&columns, fp, dim](const VectorFp& v) {
        VectorFp out(dim, 0);
        for (std::size_t j = 0; j < dim; ++j) {
            if (!v[j]) continue;
            for (const auto& [i, x] : columns[j]) out[i] = detail::add(out[i], detail::mul(x, v[j], fp), fp);
        }
        return out;
    };
    return jordan_type_of_nilpotent(u.p(), nilpotent, standard_basis(dim));
}

inline void check_block_size(std::int64_t r, std::int64_t p, const char* what) {
    if (r < 1 || r > p)
        throw invalid_input(std::string(what) + ": block size " + std::to_string(r) + " outside 1.." +
                            std::to_string(p));
}

/// J_r (x) J_s.
inline JordanType jordan_tensor(std::int64_t r, std::int64_t s, std::int64_t p) {
    require_prime(p);
    check_block_size(r, p, "jordan_tensor");
    check_block_size(s, p, "jordan_tensor");
    return jordan_type_of(kronecker(MatrixFp::jordan_block(p, static_cast<std::size_t>(r)),
                                    MatrixFp::jordan_block(p, static_cast<std::size_t>(s))));
}

namespace detail {

/// Exponent vectors of the degree-i monomials in m variables.
inline void compositions(std::int64_t i, std::int64_t m, std::vector<std::int64_t>& cur,
                         std::vector<std::vector<std::int64_t>>& out) {
    if (static_cast<std::int64_t>(cur.size()) == m - 1) {
        cur.push_back(i);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::int64_t a = i; a >= 0; --a) {
        cur.push_back(a);
        compositions(i - a, m, cur, out);
        cur.pop_back();
    }
}

inline void subsets(std::int64_t start, std::int64_t i, std::int64_t m, std::vector<std::int64_t>& cur,
                    std::vector<std::vector<std::int64_t>>& out) {
    if (static_cast<std::int64_t>(cur.size()) == i) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t k = start; k < m; ++k) {
        cur.push_back(k);
        subsets(k + 1, i, m, cur, out);
        cur.pop_back();
    }
}

inline std::int64_t binomial_i64(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

/// Binomial coefficients mod p for rows 0..n.
inline std::vector<std::vector<Fp>> pascal_mod(std::int64_t n, Fp p) {
    std::vector<std::vector<Fp>> c(static_cast<std::size_t>(n + 1));
    for (std::int64_t a = 0; a <= n; ++a) {
        c[a].assign(static_cast<std::size_t>(a + 1), 1);
        for (std::int64_t b = 1; b < a; ++b) c[a][b] = add(c[a - 1][b - 1], c[a - 1][b], p);
    }
    return c;
}

}  // namespace detail

/**
 * Matrix of J_m acting on degree-i polynomials in x_0..x_{m-1} via
 * x_k -> x_k + x_{k+1} (x_{m-1} fixed), in the monomial basis.
 */
inline MatrixFp sym_power_matrix(std::int64_t i, std::int64_t m, std::int64_t p,
                                 std::int64_t max_dim = default_max_dim) {
    const auto fp = static_cast<Fp>(p);
    std::vector<std::vector<std::int64_t>> monos;
    std::vector<std::int64_t> cur;
    detail::compositions(i, m, cur, monos);
    detail::check_budget(static_cast<std::int64_t>(monos.size()), max_dim, "sym_power_matrix");
    std::map<std::vector<std::int64_t>, std::size_t> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;
    const auto binom = detail::pascal_mod(i, fp);

    MatrixFp u(p, monos.size(), monos.size());
    for (std::size_t col = 0; col < monos.size(); ++col) {
        const auto& a = monos[col];
        // choose t_k of the a_k factors (x_k + x_{k+1}) to contribute x_{k+1}
        std::vector<std::int64_t> image(static_cast<std::size_t>(m), 0);
        std::function<void(std::int64_t, Fp)> expand = [&](std::int64_t k, Fp coeff) {
            if (k == m - 1) {
                image[k] += a[k];
                u(index.at(image), col) = detail::add(u(index.at(image), col), coeff, fp);
                image[k] -= a[k];
                return;
            }
            for (std::int64_t t = 0; t <= a[k]; ++t) {
                const Fp c = binom[a[k]][t];
                if (!c) continue;
                image[k] += a[k] - t;
                image[k + 1] += t;
                expand(k + 1, detail::mul(coeff, c, fp));
                image[k] -= a[k] - t;
                image[k + 1] -= t;
            }
        };
        expand(0, 1);
    }
    return u;
}

/// Matrix of J_m acting on the i-th exterior power, basis e_S for increasing S.
inline MatrixFp ext_power_matrix(std::int64_t i, std::int64_t m, std::int64_t p,
                                 std::int64_t max_dim = default_max_dim) {
    const auto fp = static_cast<Fp>(p);
    std::vector<std::vector<std::int64_t>> sets;
    std::vector<std::int64_t> cur;
    detail::subsets(0, i, m, cur, sets);
    detail::check_budget(static_cast<std::int64_t>(sets.size()), max_dim, "ext_power_matrix");
    std::map<std::vector<std::int64_t>, std::size_t> index;
    for (std::size_t k = 0; k < sets.size(); ++k) index[sets[k]] = k;

    MatrixFp u(p, sets.size(), sets.size());
    for (std::size_t col = 0; col < sets.size(); ++col) {
        const auto& s = sets[col];
        // Each e_k goes to e_k or e_{k+1}; the chosen indices stay weakly
        // increasing, so no reordering sign appears and repeats vanish.
        const auto n = s.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::int64_t> image(n);
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) {
                image[j] = s[j] + ((mask >> j) & 1);
                if (image[j] >= m || (j > 0 && image[j] == image[j - 1])) ok = false;
            }
            if (ok) u(index.at(image), col) = detail::add(u(index.at(image), col), 1, fp);
        }
    }
    return u;
}

/// Jordan type of S^i J_m; needs i < p so the symmetric power is a summand of the tensor power.
inline JordanType jordan_sym(std::int64_t i, std::int64_t m, std::int64_t p,
                             std::int64_t max_dim = default_max_dim) {
    require_prime(p);
    check_block_size(m, p, "jordan_sym");
    if (i < 0 || i >= p)
        throw invalid_input("jordan_sym: need 0 <= i < p (symmetrizer requires i! invertible), got i = " +
                            std::to_string(i));
    return jordan_type_of(sym_power_matrix(i, m, p, max_dim));
}

/// Jordan type of Wedge^i J_m, 0 <= i <= m.
inline JordanType jordan_ext(std::int64_t i, std::int64_t m, std::int64_t p,
                             std::int64_t max_dim = default_max_dim) {
    require_prime(p);
    check_block_size(m, p, "jordan_ext");
    if (i < 0 || i > m)
        throw invalid_input("jordan_ext: need 0 <= i <= m, got i = " + std::to_string(i));
    return jordan_type_of(ext_power_matrix(i, m, p, max_dim));
}

/**
 * Second-level oracle: J_m^{(x) i} on the full tensor power (dimension m^i),
 * restricted to the image of the symmetrizer (or antisymmetrizer when
 * `alternating`). Slow; used to cross-check jordan_sym / jordan_ext.
 */
inline JordanType jordan_tensor_power_symmetrized(std::int64_t i, std::int64_t m, std::int64_t p,
                                                  bool alternating,
                                                  std::int64_t max_dim = default_max_dim) {
    require_prime(p);
    check_block_size(m, p, "jordan_tensor_power_symmetrized");
    if (i < 0 || i >= p)
        throw invalid_input("jordan_tensor_power_symmetrized: need 0 <= i < p");
    const auto fp = static_cast<Fp>(p);
    std::int64_t dim = 1;
    for (std::int64_t k = 0; k < i; ++k) {
        dim *= m;
        detail::check_budget(dim, max_dim, "jordan_tensor_power_symmetrized");
    }
    const auto n = static_cast<std::size_t>(dim);
    auto flat = [m](const std::vector<std::int64_t>& idx) {
        std::size_t f = 0;
        for (auto k : idx) f = f * static_cast<std::size_t>(m) + static_cast<std::size_t>(k);
        return f;
    };

    // Image of the (anti)symmetrizer applied to one representative per orbit.
    std::vector<VectorFp> basis;
    std::vector<std::vector<std::int64_t>> reps;
    std::vector<std::int64_t> cur;
    if (alternating) {
        detail::subsets(0, i, m, cur, reps);
    } else {
        std::vector<std::vector<std::int64_t>> comps;
        detail::compositions(i, m, cur, comps);
        for (const auto& a : comps) {
            std::vector<std::int64_t> idx;
            for (std::int64_t k = 0; k < m; ++k) idx.insert(idx.end(), static_cast<std::size_t>(a[k]), k);
            reps.push_back(idx);
        }
    }
    for (const auto& rep : reps) {
        VectorFp v(n, 0);
        std::vector<std::int64_t> perm(static_cast<std::size_t>(i));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int sign = 1;
            if (alternating)
                for (std::size_t a = 0; a < perm.size(); ++a)
                    for (std::size_t b = a + 1; b < perm.size(); ++b)
                        if (perm[a] > perm[b]) sign = -sign;
            std::vector<std::int64_t> idx(perm.size());
            for (std::size_t k = 0; k < perm.size(); ++k) idx[k] = rep[static_cast<std::size_t>(perm[k])];
            auto& x = v[flat(idx)];
            x = sign > 0 ? detail::add(x, 1, fp) : detail::sub(x, 1, fp);
        } while (std::next_permutation(perm.begin(), perm.end()));
        basis.push_back(std::move(v));
    }

    // (J_m^{(x) i} - 1) v, applying J_m slot by slot.
    const MatrixFp block = MatrixFp::jordan_block(p, static_cast<std::size_t>(m));
    auto nilpotent = [&](const VectorFp& v) {
        VectorFp w = v;
        std::size_t stride = 1;
        for (std::int64_t slot = 0; slot < i; ++slot) {
            VectorFp next(n, 0);
            for (std::size_t f = 0; f < n; ++f) {
                if (!w[f]) continue;
                const auto digit = (f / stride) % static_cast<std::size_t>(m);
                for (std::size_t row = 0; row < static_cast<std::size_t>(m); ++row) {
                    const Fp c = block(row, digit);
                    if (!c) continue;
                    const auto g = f - digit * stride + row * stride;
                    next[g] = detail::add(next[g], detail::mul(c, w[f], fp), fp);
                }
            }
            w = std::move(next);
            stride *= static_cast<std::size_t>(m);
        }
        for (std::size_t f = 0; f < n; ++f) w[f] = detail::sub(w[f], v[f], fp);
        return w;
    };
    return jordan_type_of_nilpotent(p, nilpotent, std::move(basis));
}

/// Image in Ver_p: blocks of size p are negligible, a block of size r < p becomes L_r.
inline VerObj negligible_quotient(const JordanType& t) {
    VerObj out(t.p());
    for (auto b : t.blocks())
        if (b < t.p()) out[b] = checked_add(out[b], 1);
    return out;
}

}  // namespace verlinde::oracle
