#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Canonical elements of Z[q] with q a primitive 2p-th root of unity,
 *        p an odd prime.
 *
 * Elements are stored as coordinates c_0..c_{p-2} in the basis 1, q, ..., q^{p-2}
 * of Z[q] / Phi_{2p}(q), where Phi_{2p}(x) = sum_{k=0}^{p-1} (-x)^k. Equality of
 * field elements is equality of coordinate vectors.
 *
 * For p = 2 only rational constants can be built (Cyclotomic::constant); the
 * ring operations work on them but to_cyclotomic and galois reject p = 2.
 */

#include "laurent.hpp"
#include "numeric.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace verlinde {

class Cyclotomic {
public:
    /// Zero of Z[q] for the given prime.
    explicit Cyclotomic(std::int64_t p) : p_(p) {
        require_prime(p);
        coords_.assign(static_cast<std::size_t>(p == 2 ? 1 : p - 1), Integer(0));
    }

    static Cyclotomic constant(std::int64_t p, const Integer& c) {
        Cyclotomic out(p);
        out.coords_[0] = c;
        return out;
    }

    /// q^e for any integer e.
    static Cyclotomic q_power(std::int64_t p, std::int64_t e) {
        require_odd_prime(p, "Cyclotomic::q_power");
        Cyclotomic out(p);
        out.add_q_power(e, Integer(1));
        return out;
    }

    /// Builds from raw coordinates (length p-1).
    static Cyclotomic from_coords(std::int64_t p, std::vector<Integer> coords) {
        Cyclotomic out(p);
        if (coords.size() != out.coords_.size())
            throw invalid_input("Cyclotomic::from_coords: expected " +
                                std::to_string(out.coords_.size()) + " coordinates");
        out.coords_ = std::move(coords);
        return out;
    }

    std::int64_t p() const noexcept { return p_; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    /// True when the element lies in Z, i.e. only c_0 may be nonzero.
    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }

    /// Adds c * q^e, reducing with q^p = -1 and Phi_{2p}(q) = 0.
    void add_q_power(std::int64_t e, const Integer& c) {
        if (c == 0) return;
        if (p_ == 2) throw invalid_input("Cyclotomic: powers of q are not available for p = 2");
        e = mod_floor(e, 2 * p_);
        Integer v = c;
        if (e >= p_) {
            e -= p_;
            v = -v;
        }
        if (e < p_ - 1) {
            coords_[static_cast<std::size_t>(e)] += v;
            return;
        }
        // q^{p-1} = -sum_{k=0}^{p-2} (-1)^k q^k
        for (std::int64_t k = 0; k <= p_ - 2; ++k) {
            if (k % 2 == 0)
                coords_[static_cast<std::size_t>(k)] -= v;
            else
                coords_[static_cast<std::size_t>(k)] += v;
        }
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Cyclotomic& operator*=(const Integer& s) {
        for (auto& c : coords_) c *= s;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator-(Cyclotomic a) { return a *= Integer(-1); }
    friend Cyclotomic operator*(Cyclotomic a, const Integer& s) { return a *= s; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check_same(b);
        if (a.p_ == 2) return constant(2, a.coords_[0] * b.coords_[0]);
        Cyclotomic out(a.p_);
        const auto n = static_cast<std::int64_t>(a.coords_.size());
        std::vector<Integer> raw(static_cast<std::size_t>(2 * n - 1), Integer(0));
        for (std::int64_t i = 0; i < n; ++i) {
            if (a.coords_[i] == 0) continue;
            for (std::int64_t j = 0; j < n; ++j) raw[i + j] += a.coords_[i] * b.coords_[j];
        }
        for (std::int64_t e = 0; e < static_cast<std::int64_t>(raw.size()); ++e)
            out.add_q_power(e, raw[e]);
        return out;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

private:
    void check_same(const Cyclotomic& o) const {
        if (p_ != o.p_)
            throw invalid_input("Cyclotomic: mismatched primes " + std::to_string(p_) + " and " +
                                std::to_string(o.p_));
    }

    std::int64_t p_;
    std::vector<Integer> coords_;
};

/// Image of an integral Laurent polynomial under z -> q.
inline Cyclotomic to_cyclotomic(const LaurentPoly& f, std::int64_t p) {
    require_odd_prime(p, "to_cyclotomic");
    if (!f.is_integral()) throw invalid_input("to_cyclotomic: polynomial has non-integer coefficients");
    Cyclotomic out(p);
    for (const auto& [j, c] : f.terms()) out.add_q_power(j, boost::multiprecision::numerator(c));
    return out;
}

/// Ring automorphism q -> q^k; k must be coprime to 2p.
inline Cyclotomic galois(const Cyclotomic& x, std::int64_t k) {
    const auto p = x.p();
    require_odd_prime(p, "galois");
    if (std::gcd(mod_floor(k, 2 * p), 2 * p) != 1)
        throw invalid_input("galois: exponent " + std::to_string(k) + " is not coprime to 2p = " +
                            std::to_string(2 * p));
    Cyclotomic out(p);
    const auto& c = x.coords();
    for (std::size_t i = 0; i < c.size(); ++i)
        out.add_q_power(static_cast<std::int64_t>(i) * mod_floor(k, 2 * p), c[i]);
    return out;
}

/// Fixed by complex conjugation q -> q^{-1}, i.e. an element of the real subfield.
inline bool is_real(const Cyclotomic& x) {
    if (x.p() == 2) return true;
    return galois(x, -1) == x;
}

/**
 * Trace from the real subfield to Q: sum over s of g_s(x), g_s : q -> q^{2s+1},
 * s = 0..(p-3)/2. Returns an element of Z (as a Cyclotomic with only c_0 set).
 */
inline Cyclotomic real_trace(const Cyclotomic& x) {
    const auto p = x.p();
    require_odd_prime(p, "real_trace");
    if (!is_real(x)) throw invalid_input("real_trace: element is not in the real subfield");
    Cyclotomic out(p);
    for (std::int64_t s = 0; s <= (p - 3) / 2; ++s) out += galois(x, 2 * s + 1);
    return out;
}

}  // namespace verlinde
