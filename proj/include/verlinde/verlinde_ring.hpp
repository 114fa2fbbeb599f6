#pragma once

/**
 * @file verlinde_ring.hpp
 * @brief The Grothendieck ring of the Verlinde category Ver_p.
 *
 * Objects are integer multiplicity vectors over the simples L_1..L_{p-1}
 * (L_1 is the unit). Negative multiplicities are allowed; they describe
 * virtual classes. Functions that need actual objects say so and check.
 */

#include "cyclotomic.hpp"
#include "laurent.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace verlinde {

class VerObj {
public:
    /// Zero object of Ver_p.
    explicit VerObj(std::int64_t p) : p_(p) {
        require_prime(p);
        mults_.assign(static_cast<std::size_t>(p - 1), 0);
    }

    VerObj(std::int64_t p, std::vector<std::int64_t> mults) : p_(p), mults_(std::move(mults)) {
        require_prime(p);
        if (mults_.size() != static_cast<std::size_t>(p - 1))
            throw invalid_input("VerObj: expected " + std::to_string(p - 1) +
                                " multiplicities for p = " + std::to_string(p) + ", got " +
                                std::to_string(mults_.size()));
    }

    /// The simple object L_r, 1 <= r <= p-1.
    static VerObj simple(std::int64_t p, std::int64_t r) {
        VerObj out(p);
        out.check_index(r);
        out.mults_[static_cast<std::size_t>(r - 1)] = 1;
        return out;
    }

    static VerObj unit(std::int64_t p) { return simple(p, 1); }

    std::int64_t p() const noexcept { return p_; }
    const std::vector<std::int64_t>& mults() const noexcept { return mults_; }

    /// Multiplicity of L_r.
    std::int64_t operator[](std::int64_t r) const {
        check_index(r);
        return mults_[static_cast<std::size_t>(r - 1)];
    }
    std::int64_t& operator[](std::int64_t r) {
        check_index(r);
        return mults_[static_cast<std::size_t>(r - 1)];
    }

    bool is_zero() const {
        return std::all_of(mults_.begin(), mults_.end(), [](auto a) { return a == 0; });
    }

    /// All multiplicities nonnegative.
    bool is_effective() const {
        return std::all_of(mults_.begin(), mults_.end(), [](auto a) { return a >= 0; });
    }

    /// Number of simple summands, sum of a_r.
    std::int64_t length() const {
        std::int64_t s = 0;
        for (auto a : mults_) s = checked_add(s, a);
        return s;
    }

    VerObj& operator+=(const VerObj& o) {
        check_same(o);
        for (std::size_t i = 0; i < mults_.size(); ++i) mults_[i] = checked_add(mults_[i], o.mults_[i]);
        return *this;
    }
    VerObj& operator-=(const VerObj& o) {
        check_same(o);
        for (std::size_t i = 0; i < mults_.size(); ++i)
            mults_[i] = checked_add(mults_[i], checked_mul(-1, o.mults_[i]));
        return *this;
    }
    VerObj& operator*=(std::int64_t s) {
        for (auto& a : mults_) a = checked_mul(a, s);
        return *this;
    }

    friend VerObj operator+(VerObj a, const VerObj& b) { return a += b; }
    friend VerObj operator-(VerObj a, const VerObj& b) { return a -= b; }
    friend VerObj operator*(std::int64_t s, VerObj a) { return a *= s; }

    friend bool operator==(const VerObj&, const VerObj&) = default;

    void check_same(const VerObj& o) const {
        if (p_ != o.p_)
            throw invalid_input("VerObj: mismatched primes " + std::to_string(p_) + " and " +
                                std::to_string(o.p_));
    }

private:
    void check_index(std::int64_t r) const {
        if (r < 1 || r > p_ - 1)
            throw invalid_input("simple index " + std::to_string(r) + " outside 1.." +
                                std::to_string(p_ - 1));
    }

    std::int64_t p_;
    std::vector<std::int64_t> mults_;
};

inline void require_effective(const VerObj& x, const char* what) {
    if (!x.is_effective())
        throw invalid_input(std::string(what) + " requires an actual object (nonnegative multiplicities)");
}

/// Even part (odd indices, Ver_p^+) and odd part (even indices, Ver_p^-).
struct ParitySplit {
    VerObj plus;
    VerObj minus;
};

inline ParitySplit parity_split(const VerObj& x) {
    ParitySplit out{VerObj(x.p()), VerObj(x.p())};
    for (std::int64_t r = 1; r <= x.p() - 1; ++r) (r % 2 ? out.plus : out.minus)[r] = x[r];
    return out;
}

/// L_r (x) L_s = sum_{i=1}^{min(r, s, p-r, p-s)} L_{|r-s|+2i-1}, extended bilinearly.
inline VerObj fuse(const VerObj& x, const VerObj& y) {
    x.check_same(y);
    const auto p = x.p();
    VerObj out(p);
    for (std::int64_t r = 1; r < p; ++r) {
        if (x[r] == 0) continue;
        for (std::int64_t s = 1; s < p; ++s) {
            if (y[s] == 0) continue;
            const auto c = checked_mul(x[r], y[s]);
            const auto terms = std::min({r, s, p - r, p - s});
            const auto base = r > s ? r - s : s - r;
            for (std::int64_t i = 1; i <= terms; ++i) out[base + 2 * i - 1] = checked_add(out[base + 2 * i - 1], c);
        }
    }
    return out;
}

/// Tensor power x^{(x) n}, n >= 0.
inline VerObj fuse_power(const VerObj& x, std::int64_t n) {
    VerObj out = VerObj::unit(x.p());
    for (std::int64_t k = 0; k < n; ++k) out = fuse(out, x);
    return out;
}

/// chi_j(x) = sum_r a_r [r]_{q^j}, 1 <= j <= p-1. For p = 2 only j = 1 exists.
inline Cyclotomic char_chi(std::int64_t j, const VerObj& x) {
    const auto p = x.p();
    if (j < 1 || j > p - 1)
        throw invalid_input("char_chi: character index " + std::to_string(j) + " outside 1.." +
                            std::to_string(p - 1));
    if (p == 2) return Cyclotomic::constant(2, Integer(x[1]));
    Cyclotomic out(p);
    for (std::int64_t r = 1; r < p; ++r) {
        if (x[r] == 0) continue;
        // [r]_{q^j} = sum_{k=0}^{r-1} q^{j(r-1-2k)}
        for (std::int64_t k = 0; k < r; ++k) out.add_q_power(j * (r - 1 - 2 * k), Integer(x[r]));
    }
    return out;
}

/// sum_r a_r [r]_z
inline LaurentPoly fpdim_rep(const VerObj& x) {
    LaurentPoly out;
    for (std::int64_t r = 1; r < x.p(); ++r)
        if (x[r] != 0) out += quantum_int(r) * Rational(x[r]);
    return out;
}

/// sum_r (-1)^{r-1} a_r [r]_z
inline LaurentPoly sfpdim_rep(const VerObj& x) {
    LaurentPoly out;
    for (std::int64_t r = 1; r < x.p(); ++r)
        if (x[r] != 0) out += quantum_int(r) * Rational(r % 2 ? x[r] : -x[r]);
    return out;
}

/// Frobenius-Perron dimension, the character chi_1.
inline Cyclotomic fpdim(const VerObj& x) { return char_chi(1, x); }

/// Super Frobenius-Perron dimension d_+ - d_-, the character chi_{p-1}.
/// In characteristic 2 it coincides with fpdim.
inline Cyclotomic sfpdim(const VerObj& x) {
    if (x.p() == 2) return fpdim(x);
    return char_chi(x.p() - 1, x);
}

/// Categorical dimension in F_p: sum_r r a_r mod p, in 0..p-1.
inline std::int64_t dim_modp(const VerObj& x) {
    const auto p = x.p();
    std::int64_t s = 0;
    for (std::int64_t r = 1; r < p; ++r) s = mod_floor(s + mod_floor(x[r], p) * r, p);
    return s;
}

}  // namespace verlinde
