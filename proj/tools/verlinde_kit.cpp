// verlinde-kit: command-line front end for the Ver_p Grothendieck ring library.
//
// Exit codes: 0 success, 1 unexpected error, 2 bad input,
// 3 integrality assertion, 4 verification failure.

#include <verlinde/verlinde.hpp>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using namespace verlinde;

namespace {

enum class Format { text, csv, json };

struct Globals {
    std::optional<std::int64_t> p;
    Format format = Format::text;
    bool explain = false;
    std::int64_t max_dim = oracle::default_max_dim;
};

constexpr int exit_bad_input = 2;
constexpr int exit_integrality = 3;
constexpr int exit_verification = 4;

std::int64_t need_p(const Globals& g) {
    if (!g.p) throw invalid_input("this command needs --p");
    return *g.p;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

/// Left-aligned text table.
void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::cout << std::left << std::setw(static_cast<int>(width[c])) << row[c];
            if (c + 1 < row.size()) std::cout << "  ";
        }
        std::cout << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
}

void print_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    auto line = [](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "," : "") << row[c];
        std::cout << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
}

void print_rows(const Globals& g, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    if (g.format == Format::csv)
        print_csv(header, rows);
    else
        print_table(header, rows);
}

void cmd_fusion_table(const Globals& g) {
    const auto p = need_p(g);
    require_prime(p);
    if (g.format == Format::json) {
        json entries = json::array();
        for (std::int64_t r = 1; r < p; ++r)
            for (std::int64_t s = 1; s < p; ++s)
                entries.push_back({{"r", r}, {"s", s}, {"mults", fuse(VerObj::simple(p, r), VerObj::simple(p, s)).mults()}});
        print_json({{"p", p}, {"entries", entries}});
        return;
    }
    std::vector<std::string> header{"x"};
    for (std::int64_t s = 1; s < p; ++s) header.push_back("L" + std::to_string(s));
    std::vector<std::vector<std::string>> rows;
    for (std::int64_t r = 1; r < p; ++r) {
        std::vector<std::string> row{"L" + std::to_string(r)};
        for (std::int64_t s = 1; s < p; ++s) row.push_back(to_string(fuse(VerObj::simple(p, r), VerObj::simple(p, s))));
        rows.push_back(std::move(row));
    }
    print_rows(g, header, rows);
}

std::vector<std::int64_t> degree_range(std::optional<std::int64_t> only, std::int64_t last) {
    if (only) return {*only};
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i <= last; ++i) out.push_back(i);
    return out;
}

void cmd_power(const Globals& g, bool exterior, std::int64_t index, std::optional<std::int64_t> only) {
    const auto p = need_p(g);
    require_odd_prime(p, exterior ? "extpow" : "sympow");
    if (index < 1 || index > p - 1)
        throw invalid_input(std::string(exterior ? "--r" : "--m") + " must lie in 1.." + std::to_string(p - 1));
    const auto last = exterior ? index : p - index;
    std::vector<PowerRow> table;
    for (auto i : degree_range(only, last))
        table.push_back({i, exterior ? ext_power_simple(i, index, p) : sym_power_simple(i, index, p)});

    auto invariants = [&](std::int64_t i, const VerObj& x) -> std::int64_t {
        if (!exterior && index >= 2 && i <= p - index) return invariant_dim(i, index, p);
        return x[1];
    };

    if (g.format == Format::json) {
        json j = power_table_to_json(p, exterior ? "r" : "m", index, table);
        for (std::size_t k = 0; k < table.size(); ++k) {
            auto& row = j["rows"][k];
            row["fpdim"] = to_json(fpdim_rep(table[k].object));
            row["sfpdim"] = to_json(sfpdim_rep(table[k].object));
            row["invariants"] = invariants(table[k].i, table[k].object);
        }
        print_json(j);
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [i, x] : table)
        rows.push_back({std::to_string(i), to_string(x), to_string(fpdim_rep(x)), to_string(sfpdim_rep(x)),
                        std::to_string(invariants(i, x))});
    print_rows(g, {"i", "decomposition", "fpdim", "sfpdim", "invariants"}, rows);
}

void cmd_decompose(const Globals& g, const std::string& fp_text, const std::string& sfp_text, bool effective) {
    const auto p = need_p(g);
    const LaurentPoly fp = parse_laurent(fp_text);
    const LaurentPoly sfp = parse_laurent(sfp_text);
    const auto terms = decomposition_terms(fp, sfp, p);
    const VerObj x = decompose_from_dims(fp, sfp, p, effective);
    if (g.format == Format::json) {
        json j = to_json(x);
        if (g.explain) {
            json arr = json::array();
            for (const auto& t : terms)
                arr.push_back({{"r", t.r}, {"kernel", to_json(t.kernel)}, {"tau", t.tau_value.str()},
                               {"multiplicity", t.multiplicity.str()}});
            j["terms"] = arr;
        }
        print_json(j);
        return;
    }
    if (g.format == Format::csv) {
        std::vector<std::vector<std::string>> rows;
        for (std::int64_t r = 1; r < p; ++r) rows.push_back({std::to_string(r), std::to_string(x[r])});
        print_csv({"r", "multiplicity"}, rows);
        return;
    }
    if (g.explain) {
        for (const auto& t : terms)
            std::cout << "r=" << t.r << "  h_r=" << to_string(t.kernel) << "  tau=" << t.tau_value.str()
                      << "  a_r=tau/p=" << t.multiplicity.str() << '\n';
    }
    std::cout << to_string(x) << '\n';
}

void cmd_weyl(const Globals& g, std::int64_t m, const std::string& parts_text) {
    const auto p = need_p(g);
    const WeightA w(m, parts_text.empty() ? std::vector<std::int64_t>{} : parse_int_list(parts_text));
    const VerObj x = decompose_weyl(w, p);
    if (g.format == Format::json) {
        print_json({{"weight", to_json(w)}, {"p", p}, {"object", to_json(x)}, {"qdim", to_json(qweyl_dim(w))},
                    {"sign", super_sign(w)}});
        return;
    }
    if (g.format == Format::csv) {
        std::vector<std::vector<std::string>> rows;
        for (std::int64_t r = 1; r < p; ++r) rows.push_back({std::to_string(r), std::to_string(x[r])});
        print_csv({"r", "multiplicity"}, rows);
        return;
    }
    if (g.explain)
        std::cout << "qdim=" << to_string(qweyl_dim(w)) << "  sign=" << (super_sign(w) > 0 ? "+1" : "-1") << '\n';
    std::cout << to_string(x) << '\n';
}

void cmd_padic(const Globals& g, const std::string& mults) {
    const auto p = need_p(g);
    const VerObj x = parse_verobj(p, mults);
    const auto d = padic_dims(x);
    const auto t = trd(x);
    const bool length_ok = length_identity_check(x);
    if (g.format == Format::json) {
        print_json({{"p", p}, {"mults", x.mults()}, {"dim_plus", d.plus}, {"dim_minus", d.minus},
                    {"trd_plus", t.plus}, {"trd_minus", t.minus}, {"length", x.length()},
                    {"length_identity", length_ok}});
        return;
    }
    if (g.format == Format::csv) {
        print_csv({"dim_plus", "dim_minus", "trd_plus", "trd_minus", "length"},
                  {{std::to_string(d.plus), std::to_string(d.minus), std::to_string(t.plus),
                    std::to_string(t.minus), std::to_string(x.length())}});
        return;
    }
    std::cout << "Dim+=" << d.plus << " Dim-=" << d.minus << '\n';
    if (g.explain)
        std::cout << "Trd+=" << t.plus << " Trd-=" << t.minus << " length=" << x.length()
                  << " dim mod p=" << dim_modp(x) << " length identity " << (length_ok ? "holds" : "FAILS") << '\n';
}

void cmd_invariants(const Globals& g, std::int64_t m, std::optional<std::int64_t> only) {
    const auto p = need_p(g);
    require_odd_prime(p, "invariants");
    if (m < 2 || m > p - 1) throw invalid_input("--m must lie in 2.." + std::to_string(p - 1));
    std::vector<std::vector<std::string>> rows;
    json arr = json::array();
    for (auto i : degree_range(only, p - m)) {
        const auto inv = invariant_dim(i, m, p);
        const auto classical = classical_invariant_count(i, m);
        rows.push_back({std::to_string(i), std::to_string(inv), std::to_string(classical)});
        arr.push_back({{"i", i}, {"invariants", inv}, {"classical", classical}});
    }
    if (g.format == Format::json)
        print_json({{"p", p}, {"m", m}, {"rows", arr}});
    else
        print_rows(g, {"i", "invariants", "classical"}, rows);
}

unsigned thread_budget() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("VERLINDE_KIT_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
            throw invalid_input(std::string("VERLINDE_KIT_THREADS is not a number: ") + env);
        }
    }
    return n;
}

int cmd_verify(const Globals& g, const std::string& primes, std::int64_t objects, std::uint64_t seed) {
    VerifyOptions opt;
    if (!primes.empty())
        opt.primes = parse_int_list(primes);
    else if (g.p)
        opt.primes = {*g.p};
    opt.max_dim = g.max_dim;
    opt.random_objects = objects;
    opt.seed = seed;
    opt.threads = thread_budget();
    const VerifyReport report = run_verification(opt);

    if (g.format == Format::json) {
        print_json(report.to_json());
        return report.passed() ? 0 : exit_verification;
    }
    // one summary row per (check, p)
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < report.cells.size();) {
        const auto& first = report.cells[k];
        std::size_t total = 0, failed = 0;
        for (; k < report.cells.size() && report.cells[k].check == first.check && report.cells[k].p == first.p; ++k) {
            ++total;
            if (!report.cells[k].pass) ++failed;
        }
        rows.push_back({first.check, std::to_string(first.p), std::to_string(total), std::to_string(failed)});
    }
    for (const auto& c : report.cells)
        if (!c.pass) std::cerr << "FAIL " << c.check << " p=" << c.p << ' ' << c.params.dump() << ' ' << c.detail << '\n';
    if (g.format == Format::csv) {
        print_csv({"check", "p", "cells", "failed"}, rows);
    } else {
        if (g.explain) print_table({"check", "p", "cells", "failed"}, rows);
        std::cout << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? 0 : exit_verification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verlinde-kit: exact computations in the Grothendieck ring of Ver_p"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::int64_t p_value = 0;
    auto* p_opt = app.add_option("--p", p_value, "Characteristic p (a prime)");
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_flag("--explain", g.explain, "Show intermediate terms");
    app.add_option("--max-dim", g.max_dim, "Largest module dimension the oracle will build")->check(CLI::PositiveNumber);

    auto* fusion = app.add_subcommand("fusion-table", "Fusion product of every pair of simples");

    std::int64_t m = 0, r = 0;
    std::optional<std::int64_t> degree;
    auto* sympow = app.add_subcommand("sympow", "Symmetric powers S^i L_m");
    sympow->add_option("--m", m, "Simple index m")->required();
    sympow->add_option("--i", degree, "Single degree i (default: all nonzero degrees)");

    auto* extpow = app.add_subcommand("extpow", "Exterior powers of L_r");
    extpow->add_option("--r", r, "Simple index r")->required();
    extpow->add_option("--i", degree, "Single degree i (default: 0..r)");

    std::string fp_text, sfp_text;
    bool effective = false;
    auto* decompose = app.add_subcommand("decompose", "Decompose an object from FPdim and SFPdim representatives");
    decompose->add_option("fpdim", fp_text, "FPdim as a Laurent polynomial in z, e.g. \"[3]_z\"")->required();
    decompose->add_option("sfpdim", sfp_text, "SFPdim as a Laurent polynomial in z")->required();
    decompose->add_flag("--effective", effective, "Require nonnegative multiplicities");

    std::string parts;
    auto* weyl = app.add_subcommand("weyl", "Image of the SL_m simple V_lambda in Ver_p");
    weyl->add_option("--m", m, "Rank parameter m of SL_m")->required();
    weyl->add_option("parts", parts, "Partition lambda_1,...,lambda_{m-1}, e.g. \"1,0\"");

    std::string mults;
    auto* padic = app.add_subcommand("padic", "p-adic dimensions and transcendence degrees");
    padic->add_option("mults", mults, "Multiplicities a1,...,a_{p-1}")->required();

    auto* invariants = app.add_subcommand("invariants", "Invariants of S^i L_m against the classical count");
    invariants->add_option("--m", m, "Simple index m (2..p-1)")->required();
    invariants->add_option("--i", degree, "Single degree i");

    std::string primes;
    std::int64_t objects = 200;
    std::uint64_t seed = 20240521;
    auto* verify = app.add_subcommand("verify", "Run the oracle and consistency sweep");
    verify->add_option("primes", primes, "Comma-separated odd primes (default 3,5,7,11)");
    verify->add_option("--objects", objects, "Random objects per prime")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "Random seed");

    // There are no short options besides -h, so "-[2]_z" or "-z" is a value, not a flag.
    std::vector<std::string> args;
    for (int k = argc - 1; k >= 1; --k) {
        std::string a = argv[k];
        if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(0, " ");
        args.push_back(std::move(a));
    }

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_bad_input;
    }
    if (*p_opt) g.p = p_value;
    g.format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::text;

    try {
        if (*fusion) cmd_fusion_table(g);
        if (*sympow) cmd_power(g, false, m, degree);
        if (*extpow) cmd_power(g, true, r, degree);
        if (*decompose) cmd_decompose(g, fp_text, sfp_text, effective);
        if (*weyl) cmd_weyl(g, m, parts);
        if (*padic) cmd_padic(g, mults);
        if (*invariants) cmd_invariants(g, m, degree);
        if (*verify) return cmd_verify(g, primes, objects, seed);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const integrality_error& e) {
        std::cerr << "integrality error: " << e.what() << '\n';
        return exit_integrality;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
