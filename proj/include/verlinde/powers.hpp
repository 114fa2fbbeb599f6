#pragma once

/**
 * @file powers.hpp
 * @brief Decomposition of objects of Ver_p from their FP and super FP
 *        dimensions, symmetric and exterior powers, the second Adams
 *        operation, invariant counts, transcendence degrees and p-adic
 *        dimensions.
 *
 * Decomposition. Given symmetric representatives P_fp(z), P_sfp(z) of
 * FPdim(X) and SFPdim(X), the multiplicity of L_r is
 *
 *     a_r = tau(h_r) / p,   h_r = 1/4 (z^-r - z^r)(z - z^-1)(P_fp - (-1)^r P_sfp),
 *
 * i.e. a_r = sum_j (-1)^j [z^{pj}] h_r, since h_r(-1) = 0.
 */

#include "cyclotomic.hpp"
#include "laurent.hpp"
#include "numeric.hpp"
#include "verlinde_ring.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace verlinde {

namespace detail {

inline LaurentPoly decomposition_kernel(std::int64_t r, const LaurentPoly& fp, const LaurentPoly& sfp) {
    const LaurentPoly ar = LaurentPoly::monomial(-r) - LaurentPoly::monomial(r);
    const LaurentPoly a1 = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    const LaurentPoly d = (r % 2 == 0) ? fp - sfp : fp + sfp;
    return ar * a1 * d * Rational(1, 4);
}

inline void check_simple_range(std::int64_t m, std::int64_t p, const char* what) {
    if (m < 1 || m > p - 1)
        throw invalid_input(std::string(what) + ": simple index " + std::to_string(m) + " outside 1.." +
                            std::to_string(p - 1));
}

inline void check_degree(std::int64_t i, const char* what) {
    if (i < 0) throw invalid_input(std::string(what) + ": negative degree " + std::to_string(i));
}

}  // namespace detail

/// One term of the decomposition formula, kept for --explain style output.
struct DecompositionTerm {
    std::int64_t r;
    LaurentPoly kernel;   ///< h_r
    Rational tau_value;   ///< tau(h_r)
    Rational multiplicity;
};

/// Per-r breakdown of decompose_from_dims; does not check integrality.
inline std::vector<DecompositionTerm> decomposition_terms(const LaurentPoly& fp, const LaurentPoly& sfp,
                                                          std::int64_t p) {
    require_odd_prime(p, "decompose_from_dims");
    if (!fp.is_symmetric() || !sfp.is_symmetric())
        throw invalid_input("decompose_from_dims: dimension representatives must be symmetric");
    std::vector<DecompositionTerm> out;
    out.reserve(static_cast<std::size_t>(p - 1));
    for (std::int64_t r = 1; r < p; ++r) {
        LaurentPoly h = detail::decomposition_kernel(r, fp, sfp);
        Rational t = tau(h, p);
        Rational a = t / Rational(p);
        out.push_back({r, std::move(h), std::move(t), std::move(a)});
    }
    return out;
}

/**
 * Recovers the multiplicity vector of an object from representatives of its
 * FPdim and SFPdim. With `effective` set, every a_r must come out
 * nonnegative; otherwise a virtual class is returned. Throws
 * integrality_error if some a_r is not an integer.
 */
inline VerObj decompose_from_dims(const LaurentPoly& fp, const LaurentPoly& sfp, std::int64_t p,
                                  bool effective = false) {
    VerObj out(p);
    for (const auto& term : decomposition_terms(fp, sfp, p)) {
        if (!is_integer(term.multiplicity))
            throw integrality_error("decompose_from_dims: multiplicity of L" + std::to_string(term.r) +
                                    " is " + term.multiplicity.str() +
                                    "; the representatives are not dimensions of an object");
        out[term.r] = to_int64(term.multiplicity, "decompose_from_dims");
        if (effective && out[term.r] < 0)
            throw integrality_error("decompose_from_dims: negative multiplicity of L" +
                                    std::to_string(term.r) + " for input flagged as effective");
    }
    return out;
}

/// S^i L_m.
inline VerObj sym_power_simple(std::int64_t i, std::int64_t m, std::int64_t p) {
    require_odd_prime(p, "sym_power_simple");
    detail::check_simple_range(m, p, "sym_power_simple");
    detail::check_degree(i, "sym_power_simple");
    if (m == 1) return VerObj::unit(p);
    if (i > p - m) return VerObj(p);
    const LaurentPoly g = gauss_binom(i + m - 1, m - 1);
    const bool odd = (i * (m - 1)) % 2 != 0;
    return decompose_from_dims(g, odd ? -g : g, p, true);
}

/// Wedge^i L_r = L_{p-1}^{(x) i} (x) S^i L_{p-r}.
inline VerObj ext_power_simple(std::int64_t i, std::int64_t r, std::int64_t p) {
    require_odd_prime(p, "ext_power_simple");
    detail::check_simple_range(r, p, "ext_power_simple");
    detail::check_degree(i, "ext_power_simple");
    if (r == 1) return i <= 1 ? VerObj::unit(p) : VerObj(p);
    if (r == p - 1) return i % 2 ? VerObj::simple(p, p - 1) : VerObj::unit(p);
    const VerObj s = sym_power_simple(i, p - r, p);
    return i % 2 ? fuse(VerObj::simple(p, p - 1), s) : s;
}

namespace detail {

/// Graded objects sum_k x_k t^k truncated above degree n.
using GradedSeries = std::vector<VerObj>;

inline GradedSeries series_product(const GradedSeries& a, const GradedSeries& b, std::int64_t p) {
    const auto n = a.size();
    GradedSeries out(n, VerObj(p));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += fuse(a[i], b[j]);
        }
    }
    return out;
}

inline GradedSeries series_power(GradedSeries base, std::int64_t e, std::int64_t p) {
    GradedSeries result(base.size(), VerObj(p));
    result[0] = VerObj::unit(p);
    while (e > 0) {
        if (e & 1) result = series_product(result, base, p);
        e >>= 1;
        if (e) base = series_product(base, base, p);
    }
    return result;
}

/// Degree-n part of prod_r F(L_r)^{a_r}, where F is a series of simples.
template <typename SimpleSeries>
VerObj graded_power(std::int64_t n, const VerObj& x, SimpleSeries&& simple_term) {
    const auto p = x.p();
    const auto len = static_cast<std::size_t>(n + 1);
    GradedSeries total(len, VerObj(p));
    total[0] = VerObj::unit(p);
    for (std::int64_t r = 1; r < p; ++r) {
        if (x[r] == 0) continue;
        GradedSeries s;
        s.reserve(len);
        for (std::int64_t k = 0; k <= n; ++k) s.push_back(simple_term(k, r));
        total = series_product(total, series_power(std::move(s), x[r], p), p);
    }
    return total[static_cast<std::size_t>(n)];
}

}  // namespace detail

/// S^i x for an actual object x, via S(X + Y) = S(X) (x) S(Y).
inline VerObj sym_power(std::int64_t i, const VerObj& x) {
    require_odd_prime(x.p(), "sym_power");
    detail::check_degree(i, "sym_power");
    require_effective(x, "sym_power");
    const auto p = x.p();
    return detail::graded_power(i, x, [p](std::int64_t k, std::int64_t r) { return sym_power_simple(k, r, p); });
}

/// Wedge^i x for an actual object x.
inline VerObj ext_power(std::int64_t i, const VerObj& x) {
    require_odd_prime(x.p(), "ext_power");
    detail::check_degree(i, "ext_power");
    require_effective(x, "ext_power");
    const auto p = x.p();
    return detail::graded_power(i, x, [p](std::int64_t k, std::int64_t r) { return ext_power_simple(k, r, p); });
}

/// Psi^2(x) = S^2 x - Wedge^2 x, a virtual class.
inline VerObj adams2(const VerObj& x) {
    require_odd_prime(x.p(), "adams2");
    require_effective(x, "adams2");
    return sym_power(2, x) - ext_power(2, x);
}

/// Exponent k with q^{2k} = -q, the automorphism sending q^2 to -q.
inline std::int64_t adams_galois_exponent(std::int64_t p) {
    require_odd_prime(p, "adams_galois_exponent");
    const auto k = (p + 1) / 2;
    return k % 2 ? k : k + p;
}

/// SFPdim recomputed as g(FPdim(Psi^2 x)) with g : q^2 -> -q.
inline Cyclotomic sfpdim_via_adams(const VerObj& x) {
    return galois(fpdim(adams2(x)), adams_galois_exponent(x.p()));
}

/// Dimension of invariants of S^i L_m, i.e. the multiplicity of L_1 in it.
inline std::int64_t invariant_dim(std::int64_t i, std::int64_t m, std::int64_t p) {
    require_odd_prime(p, "invariant_dim");
    if (m < 2 || m > p - 1)
        throw invalid_input("invariant_dim: need 2 <= m <= p-1, got m = " + std::to_string(m));
    if (i < 0 || i > p - m)
        throw invalid_input("invariant_dim: need 0 <= i <= p-m, got i = " + std::to_string(i));
    // S^i L_m is odd when i(m-1) is odd and then has no unit summand.
    if ((i * (m - 1)) % 2 != 0) return 0;
    const LaurentPoly w = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    const LaurentPoly b = w * w * gauss_binom(i + m - 1, m - 1) * Rational(-1, 2);
    Rational s = 0;
    for (const auto& [j, c] : b.terms()) {
        if (j % p != 0) continue;
        s += ((j / p) % 2 == 0) ? c : Rational(-c);
    }
    return to_int64(s, "invariant_dim");
}

/// Number of degree-i invariants of SL_2 acting on a d-dimensional irreducible
/// (binary forms of degree d-1): the constant term of -1/2 (z - z^-1)^2 binom(i+d-1, d-1)_z.
inline std::int64_t classical_invariant_count(std::int64_t i, std::int64_t d) {
    if (i < 0 || d < 0) throw invalid_input("classical_invariant_count: negative argument");
    if (d == 0) return i == 0 ? 1 : 0;
    const LaurentPoly w = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    const LaurentPoly b = w * w * gauss_binom(i + d - 1, d - 1) * Rational(-1, 2);
    return to_int64(b.coeff(0), "classical_invariant_count");
}

/// Transcendence degrees (Trd_+, Trd_-) = (a_1, a_{p-1}).
struct TranscendenceDegrees {
    std::int64_t plus;
    std::int64_t minus;
    friend bool operator==(const TranscendenceDegrees&, const TranscendenceDegrees&) = default;
};

inline TranscendenceDegrees trd(const VerObj& x) {
    require_odd_prime(x.p(), "trd");
    require_effective(x, "trd");
    return {x[1], x[x.p() - 1]};
}

/// Symmetric and exterior p-adic dimensions. Integral for actual objects.
struct PadicDims {
    std::int64_t plus;
    std::int64_t minus;
    friend bool operator==(const PadicDims&, const PadicDims&) = default;
};

inline PadicDims padic_dims(const VerObj& x) {
    const auto p = x.p();
    require_odd_prime(p, "padic_dims");
    require_effective(x, "padic_dims");
    PadicDims d{x[1], -x[p - 1]};
    for (std::int64_t r = 2; r < p; ++r) d.plus = checked_add(d.plus, checked_mul(r - p, x[r]));
    for (std::int64_t r = 1; r < p - 1; ++r) d.minus = checked_add(d.minus, checked_mul(r, x[r]));
    return d;
}

/// length = Trd_+ + Trd_- + (Dim_- - Dim_+) / p.
inline bool length_identity_check(const VerObj& x) {
    const auto t = trd(x);
    const auto d = padic_dims(x);
    const auto diff = d.minus - d.plus;
    if (diff % x.p() != 0) return false;
    return x.length() == t.plus + t.minus + diff / x.p();
}

}  // namespace verlinde
