#pragma once

/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials in one variable z with rational
 *        coefficients, quantum integers, symmetrized Gauss binomials and the
 *        trace functional tau.
 *
 * A LaurentPoly is a finitely supported map j -> b_j meaning sum b_j z^j.
 * Zero coefficients are never stored, so structural equality is equality of
 * polynomials.
 */

#include "numeric.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace verlinde {

class LaurentPoly {
public:
    using exponent_type = std::int64_t;
    using storage_type = std::map<exponent_type, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::int64_t c) { set(0, Rational(c)); }
    explicit LaurentPoly(const Rational& c) { set(0, c); }

    static LaurentPoly monomial(exponent_type j, const Rational& c = Rational(1)) {
        LaurentPoly out;
        out.set(j, c);
        return out;
    }

    /// sum_k coeffs[k] z^(offset + k)
    static LaurentPoly from_dense(exponent_type offset, const std::vector<Rational>& coeffs) {
        LaurentPoly out;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            out.set(offset + static_cast<exponent_type>(k), coeffs[k]);
        return out;
    }

    static LaurentPoly from_dense(exponent_type offset, std::initializer_list<std::int64_t> coeffs) {
        LaurentPoly out;
        exponent_type j = offset;
        for (auto c : coeffs) out.set(j++, Rational(c));
        return out;
    }

    const storage_type& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coeff(exponent_type j) const {
        auto it = terms_.find(j);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set(exponent_type j, const Rational& c) {
        if (c == 0)
            terms_.erase(j);
        else
            terms_[j] = c;
    }

    void add_to(exponent_type j, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(j, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Smallest / largest exponent with a nonzero coefficient. Undefined on zero.
    exponent_type min_exponent() const { return terms_.begin()->first; }
    exponent_type max_exponent() const { return terms_.rbegin()->first; }

    bool is_integral() const {
        for (const auto& [j, c] : terms_)
            if (!is_integer(c)) return false;
        return true;
    }

    bool is_symmetric() const {
        for (const auto& [j, c] : terms_)
            if (coeff(-j) != c) return false;
        return true;
    }

    /// Value at z = 1.
    Rational at_one() const {
        Rational s = 0;
        for (const auto& [j, c] : terms_) s += c;
        return s;
    }

    /// Value at z = -1.
    Rational at_minus_one() const {
        Rational s = 0;
        for (const auto& [j, c] : terms_) s += (j % 2 == 0) ? c : Rational(-c);
        return s;
    }

    /// f(z) -> f(z^k).
    LaurentPoly substitute_power(exponent_type k) const {
        if (k == 0) return LaurentPoly(at_one());
        LaurentPoly out;
        for (const auto& [j, c] : terms_) out.add_to(j * k, c);
        return out;
    }

    /// f(z) -> z^k f(z).
    LaurentPoly shifted(exponent_type k) const {
        LaurentPoly out;
        for (const auto& [j, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), j + k, c);
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [j, c] : o.terms_) add_to(j, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [j, c] : o.terms_) add_to(j, -c);
        return *this;
    }
    LaurentPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [j, c] : terms_) c *= s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [i, x] : a.terms_)
            for (const auto& [j, y] : b.terms_) out.add_to(i + j, x * y);
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Non-negative integer power.
    LaurentPoly pow(std::int64_t n) const {
        if (n < 0) throw invalid_input("LaurentPoly::pow: negative exponent of a non-monomial");
        LaurentPoly result(1), base = *this;
        while (n > 0) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return result;
    }

private:
    storage_type terms_;
};

/// Exact quotient num / den; throws integrality_error on a nonzero remainder.
inline LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw invalid_input("divide_exact: division by zero polynomial");
    if (num.is_zero()) return {};
    // Shift both to ordinary polynomials and run long division from the top.
    const auto den_lo = den.min_exponent();
    const auto den_hi = den.max_exponent();
    const auto lowest_shift = num.min_exponent() - den_lo;
    const Rational lead = den.coeff(den_hi);
    LaurentPoly rem = num;
    LaurentPoly quot;
    while (!rem.is_zero() && rem.max_exponent() - rem.min_exponent() >= den_hi - den_lo) {
        const auto top = rem.max_exponent();
        const auto shift = top - den_hi;
        if (shift < lowest_shift) break;
        const Rational c = rem.coeff(top) / lead;
        quot.add_to(shift, c);
        for (const auto& [j, d] : den.terms()) rem.add_to(j + shift, -c * d);
    }
    if (!rem.is_zero()) throw integrality_error("divide_exact: nonzero remainder");
    return quot;
}

/// [r]_z = (z^r - z^-r) / (z - z^-1); zero for r = 0 and odd in r.
inline LaurentPoly quantum_int(std::int64_t r) {
    if (r < 0) return -quantum_int(-r);
    LaurentPoly out;
    for (std::int64_t k = 0; k < r; ++k) out.set(r - 1 - 2 * k, Rational(1));
    return out;
}

/// Symmetrized Gauss polynomial, by exact division of the defining products.
inline LaurentPoly gauss_binom(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0 || m > n)
        throw invalid_input("gauss_binom: need 0 <= m <= n, got n = " + std::to_string(n) +
                            ", m = " + std::to_string(m));
    LaurentPoly num(1), den(1);
    for (std::int64_t j = 1; j <= m; ++j) {
        const auto a = n - j + 1;
        num *= LaurentPoly::monomial(a) - LaurentPoly::monomial(-a);
        den *= LaurentPoly::monomial(j) - LaurentPoly::monomial(-j);
    }
    LaurentPoly out = divide_exact(num, den);
    if (!out.is_integral()) throw integrality_error("gauss_binom: non-integral quotient");
    return out;
}

/**
 * tau(f) = p * sum_j (-1)^j b_{pj} - f(-1), which equals twice the trace
 * K -> Q of f(q) for symmetric f, q = exp(i pi / p).
 */
inline Rational tau(const LaurentPoly& f, std::int64_t p) {
    require_odd_prime(p, "tau");
    if (!f.is_symmetric()) throw invalid_input("tau: polynomial is not symmetric under z -> 1/z");
    Rational s = 0;
    for (const auto& [j, c] : f.terms()) {
        if (j % p != 0) continue;
        const auto k = j / p;
        s += (k % 2 == 0) ? c : Rational(-c);
    }
    return Rational(p) * s - f.at_minus_one();
}

}  // namespace verlinde
