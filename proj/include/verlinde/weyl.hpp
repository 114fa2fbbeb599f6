#pragma once

/**
 * @file weyl.hpp
 * @brief Type A: simples V_lambda of Ver_p(SL_m) and their images in Ver_p.
 *
 * Positive roots of SL_m are e_i - e_j (i < j), so with lambda_m = 0
 *   (lambda + rho, e_i - e_j) = lambda_i - lambda_j + j - i,
 *   (rho, e_i - e_j)          = j - i,
 * and the alcove condition (lambda + rho, theta) < p reads lambda_1 + m - 1 < p.
 */

#include "laurent.hpp"
#include "numeric.hpp"
#include "powers.hpp"
#include "verlinde_ring.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace verlinde {

/// Dominant weight of SL_m as a partition lambda_1 >= ... >= lambda_{m-1} >= 0.
class WeightA {
public:
    /// Missing trailing parts are zero.
    WeightA(std::int64_t m, std::vector<std::int64_t> parts) : m_(m), parts_(std::move(parts)) {
        if (m < 2) throw invalid_input("WeightA: need m >= 2, got " + std::to_string(m));
        if (parts_.size() > static_cast<std::size_t>(m - 1))
            throw invalid_input("WeightA: at most m-1 = " + std::to_string(m - 1) + " parts allowed");
        parts_.resize(static_cast<std::size_t>(m - 1), 0);
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 0) throw invalid_input("WeightA: parts must be nonnegative");
            if (k > 0 && parts_[k] > parts_[k - 1]) throw invalid_input("WeightA: parts must be weakly decreasing");
        }
    }

    /// i * omega_1.
    static WeightA symmetric(std::int64_t m, std::int64_t i) { return WeightA(m, {i}); }

    std::int64_t m() const noexcept { return m_; }
    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }

    /// lambda_k for 1 <= k <= m, with lambda_m = 0.
    std::int64_t part(std::int64_t k) const {
        return k == m_ ? 0 : parts_[static_cast<std::size_t>(k - 1)];
    }

    friend bool operator==(const WeightA&, const WeightA&) = default;

private:
    std::int64_t m_;
    std::vector<std::int64_t> parts_;
};

inline bool alcove_check(const WeightA& w, std::int64_t p) { return w.part(1) + w.m() - 1 < p; }

/// q-deformed Weyl dimension prod_{i<j} [lambda_i - lambda_j + j - i]_z / [j - i]_z.
inline LaurentPoly qweyl_dim(const WeightA& w) {
    LaurentPoly num(1), den(1);
    for (std::int64_t i = 1; i <= w.m(); ++i)
        for (std::int64_t j = i + 1; j <= w.m(); ++j) {
            num *= quantum_int(w.part(i) - w.part(j) + j - i);
            den *= quantum_int(j - i);
        }
    return divide_exact(num, den);
}

/// (-1)^{sum_{i<j} (lambda_i - lambda_j)}: sign of SFPdim relative to FPdim.
inline int super_sign(const WeightA& w) {
    std::int64_t s = 0;
    for (std::int64_t i = 1; i <= w.m(); ++i)
        for (std::int64_t j = i + 1; j <= w.m(); ++j) s += w.part(i) - w.part(j);
    return s % 2 == 0 ? 1 : -1;
}

/// Image of V_lambda under the fiber functor to Ver_p.
inline VerObj decompose_weyl(const WeightA& w, std::int64_t p) {
    require_odd_prime(p, "decompose_weyl");
    if (!alcove_check(w, p))
        throw invalid_input("decompose_weyl: weight is outside the fundamental alcove (lambda_1 + m - 1 = " +
                            std::to_string(w.part(1) + w.m() - 1) + " >= p = " + std::to_string(p) + ")");
    const LaurentPoly d = qweyl_dim(w);
    return decompose_from_dims(d, super_sign(w) > 0 ? d : -d, p, true);
}

}  // namespace verlinde
