#pragma once

/**
 * @file verify.hpp
 * @brief Verification sweep: closed formulas against the Jordan-block oracle
 *        and against each other, cell by cell.
 *
 * Each cell is an independent (check, p, parameters) unit; cells run on a
 * small thread pool and the report lists them in a fixed order regardless of
 * scheduling.
 */

#include "cyclotomic.hpp"
#include "json_io.hpp"
#include "oracle.hpp"
#include "powers.hpp"
#include "text.hpp"
#include "verlinde_ring.hpp"
#include "weyl.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace verlinde {

struct VerifyOptions {
    std::vector<std::int64_t> primes{3, 5, 7, 11};
    std::int64_t max_dim = oracle::default_max_dim;
    std::int64_t random_objects = 200;
    std::uint64_t seed = 20240521;
    unsigned threads = 1;
};

struct VerifyCell {
    std::string check;
    std::int64_t p;
    json params;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCell> cells;

    bool passed() const {
        return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.pass; }));
    }

    json to_json() const {
        json arr = json::array();
        for (const auto& c : cells)
            arr.push_back({{"check", c.check}, {"p", c.p}, {"params", c.params}, {"pass", c.pass}, {"detail", c.detail}});
        return {{"cells", arr}, {"failures", failures()}, {"pass", passed()}};
    }
};

/// Random actual object with multiplicities in 0..max_mult.
inline VerObj random_object(std::int64_t p, std::mt19937_64& rng, std::int64_t max_mult = 3) {
    std::uniform_int_distribution<std::int64_t> dist(0, max_mult);
    VerObj x(p);
    for (std::int64_t r = 1; r < p; ++r) x[r] = dist(rng);
    return x;
}

namespace detail {

using CellTask = std::function<std::vector<VerifyCell>()>;

inline VerifyCell make_cell(std::string check, std::int64_t p, json params, bool pass, std::string detail = {}) {
    return {std::move(check), p, std::move(params), pass, std::move(detail)};
}

/// Runs `body`, turning an exception into a failed cell.
template <typename F>
VerifyCell guarded(const std::string& check, std::int64_t p, const json& params, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return make_cell(check, p, params, false, std::string("exception: ") + e.what());
    }
}

inline std::vector<CellTask> verify_tasks(std::int64_t p, const VerifyOptions& opt) {
    std::vector<CellTask> tasks;

    tasks.push_back([p] {
        std::vector<VerifyCell> out;
        for (std::int64_t r = 1; r < p; ++r)
            for (std::int64_t s = 1; s < p; ++s) {
                const json params{{"r", r}, {"s", s}};
                out.push_back(guarded("fusion-oracle", p, params, [&] {
                    const auto expected = fuse(VerObj::simple(p, r), VerObj::simple(p, s));
                    const auto got = oracle::negligible_quotient(oracle::jordan_tensor(r, s, p));
                    return make_cell("fusion-oracle", p, params, got == expected,
                                     "formula " + to_string(expected) + ", oracle " + to_string(got));
                }));
            }
        return out;
    });

    tasks.push_back([p] {
        std::vector<VerifyCell> out;
        const json params = json::object();
        out.push_back(guarded("fusion-ring-axioms", p, params, [&] {
            for (std::int64_t a = 1; a < p; ++a)
                for (std::int64_t b = 1; b < p; ++b) {
                    const auto la = VerObj::simple(p, a), lb = VerObj::simple(p, b);
                    if (fuse(la, lb) != fuse(lb, la)) return make_cell("fusion-ring-axioms", p, params, false, "not commutative");
                    for (std::int64_t c = 1; c < p; ++c) {
                        const auto lc = VerObj::simple(p, c);
                        if (fuse(fuse(la, lb), lc) != fuse(la, fuse(lb, lc)))
                            return make_cell("fusion-ring-axioms", p, params, false, "not associative");
                    }
                }
            return make_cell("fusion-ring-axioms", p, params, true);
        }));
        return out;
    });

    for (std::int64_t m = 2; m <= p - 1; ++m)
        for (std::int64_t i = 0; i < p; ++i)
            tasks.push_back([p, m, i, max_dim = opt.max_dim] {
                const json params{{"m", m}, {"i", i}};
                const auto dim = oracle::detail::binomial_i64(m + i - 1, i);
                if (i > p - m && dim > max_dim)
                    return std::vector<VerifyCell>{};
                return std::vector<VerifyCell>{guarded("sym-oracle", p, params, [&] {
                    const auto formula = sym_power_simple(i, m, p);
                    const auto t = oracle::jordan_sym(i, m, p, max_dim);
                    const auto got = oracle::negligible_quotient(t);
                    return make_cell("sym-oracle", p, params, got == formula,
                                     "formula " + to_string(formula) + ", oracle " + to_string(t));
                })};
            });

    for (std::int64_t r = 1; r <= p - 1; ++r)
        for (std::int64_t i = 0; i <= std::min(r, p - 1); ++i)
            tasks.push_back([p, r, i, max_dim = opt.max_dim] {
                const json params{{"r", r}, {"i", i}};
                return std::vector<VerifyCell>{guarded("ext-oracle", p, params, [&] {
                    const auto formula = ext_power_simple(i, r, p);
                    const auto t = oracle::jordan_ext(i, r, p, max_dim);
                    const auto got = oracle::negligible_quotient(t);
                    return make_cell("ext-oracle", p, params, got == formula,
                                     "formula " + to_string(formula) + ", oracle " + to_string(t));
                })};
            });

    tasks.push_back([p] {
        const json params = json::object();
        return std::vector<VerifyCell>{guarded("characters", p, params, [&] {
            for (std::int64_t j = 1; j < p; ++j)
                for (std::int64_t a = 1; a < p; ++a)
                    for (std::int64_t b = 1; b < p; ++b) {
                        const auto la = VerObj::simple(p, a), lb = VerObj::simple(p, b);
                        if (char_chi(j, fuse(la, lb)) != char_chi(j, la) * char_chi(j, lb))
                            return make_cell("characters", p, params, false,
                                             "chi_" + std::to_string(j) + " not multiplicative");
                    }
            for (std::int64_t s = 0; 2 * s + 1 <= p - 2; ++s)
                for (std::int64_t r = 1; r < p; ++r) {
                    const auto lr = VerObj::simple(p, r);
                    if (char_chi(2 * s + 1, lr) != galois(char_chi(1, lr), 2 * s + 1) ||
                        char_chi(p - 2 * s - 1, lr) != galois(char_chi(p - 1, lr), 2 * s + 1))
                        return make_cell("characters", p, params, false, "Galois relation fails");
                }
            return make_cell("characters", p, params, true);
        })};
    });

    tasks.push_back([p, n = opt.random_objects, seed = opt.seed] {
        const json params{{"objects", n}};
        return std::vector<VerifyCell>{guarded("round-trip", p, params, [&] {
            std::mt19937_64 rng(seed + static_cast<std::uint64_t>(p));
            for (std::int64_t k = 0; k < n; ++k) {
                const auto x = random_object(p, rng);
                const auto back = decompose_from_dims(fpdim_rep(x), sfpdim_rep(x), p, true);
                if (back != x)
                    return make_cell("round-trip", p, params, false, to_string(x) + " -> " + to_string(back));
                if (!length_identity_check(x))
                    return make_cell("round-trip", p, params, false, "length identity fails on " + to_string(x));
            }
            return make_cell("round-trip", p, params, true);
        })};
    });

    tasks.push_back([p, n = opt.random_objects, seed = opt.seed] {
        const json params{{"objects", n}};
        return std::vector<VerifyCell>{guarded("adams-sfpdim", p, params, [&] {
            std::mt19937_64 rng(seed * 31 + static_cast<std::uint64_t>(p));
            std::vector<VerObj> xs;
            for (std::int64_t r = 1; r < p; ++r) xs.push_back(VerObj::simple(p, r));
            for (std::int64_t k = 0; k < n; ++k) xs.push_back(random_object(p, rng, 2));
            for (const auto& x : xs)
                if (sfpdim_via_adams(x) != sfpdim(x))
                    return make_cell("adams-sfpdim", p, params, false, "fails on " + to_string(x));
            return make_cell("adams-sfpdim", p, params, true);
        })};
    });

    tasks.push_back([p] {
        std::vector<VerifyCell> out;
        for (std::int64_t m = 2; m <= std::min<std::int64_t>(4, p - 1); ++m)
            for (std::int64_t i = 0; i + m - 1 < p; ++i) {
                const json params{{"m", m}, {"i", i}};
                out.push_back(guarded("weyl-sym", p, params, [&] {
                    const auto w = decompose_weyl(WeightA::symmetric(m, i), p);
                    const auto s = sym_power_simple(i, m, p);
                    return make_cell("weyl-sym", p, params, w == s, "weyl " + to_string(w) + ", sym " + to_string(s));
                }));
            }
        return out;
    });

    tasks.push_back([p] {
        std::vector<VerifyCell> out;
        for (std::int64_t m = 2; m <= p - 1; ++m)
            for (std::int64_t i = 0; i <= p - m; ++i) {
                const json params{{"m", m}, {"i", i}};
                out.push_back(guarded("invariants", p, params, [&] {
                    const auto a1 = sym_power_simple(i, m, p)[1];
                    const auto inv = invariant_dim(i, m, p);
                    return make_cell("invariants", p, params, a1 == inv,
                                     "a_1 " + std::to_string(a1) + ", invariant_dim " + std::to_string(inv));
                }));
            }
        return out;
    });

    return tasks;
}

}  // namespace detail

/// Runs the full sweep for every prime in `opt.primes`.
inline VerifyReport run_verification(const VerifyOptions& opt) {
    std::vector<detail::CellTask> tasks;
    for (auto p : opt.primes) {
        require_odd_prime(p, "verify");
        auto more = detail::verify_tasks(p, opt);
        tasks.insert(tasks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
    std::vector<std::vector<VerifyCell>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = tasks[k]();
    };
    const unsigned n = std::max(1u, opt.threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    VerifyReport report;
    for (auto& r : results) report.cells.insert(report.cells.end(), r.begin(), r.end());
    return report;
}

}  // namespace verlinde
