// Symmetric powers of L_m in Ver_p, checked against Jordan types of the
// symmetric powers of a single Jordan block over F_p.
//
//   symmetric_powers_demo [p] [m]      (defaults: p = 7, m = 3)

#include <verlinde/verlinde.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

using namespace verlinde;

int main(int argc, char** argv) {
    const std::int64_t p = argc > 1 ? std::atoll(argv[1]) : 7;
    const std::int64_t m = argc > 2 ? std::atoll(argv[2]) : 3;
    try {
        require_odd_prime(p, "demo");
        if (m < 1 || m >= p) throw invalid_input("need 1 <= m < p");

        std::cout << "S^i L_" << m << " in Ver_" << p << "\n\n";
        for (std::int64_t i = 0; i <= p - m + 1 && i < p; ++i) {
            const VerObj s = sym_power_simple(i, m, p);
            const auto blocks = oracle::jordan_sym(i, m, p);
            const VerObj seen = oracle::negligible_quotient(blocks);
            std::cout << "i=" << i << "  " << to_string(s) << "\n"
                      << "     FPdim  = " << to_string(fpdim_rep(s)) << "\n"
                      << "     Jordan = " << to_string(blocks) << (seen == s ? "  (agrees)" : "  (DISAGREES)") << "\n";
        }

        const VerObj x = VerObj::simple(p, m) + VerObj::simple(p, 1);
        std::cout << "\nS^2(" << to_string(x) << ") = " << to_string(sym_power(2, x)) << "\n";
        std::cout << "Psi^2(L_" << m << ") = " << to_string(adams2(VerObj::simple(p, m))) << "\n";
        const auto d = padic_dims(VerObj::simple(p, m));
        std::cout << "Dim+(L_" << m << ") = " << d.plus << ", Dim-(L_" << m << ") = " << d.minus << "\n";
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
