// sierpcert: build and check Sierpinski certificates over Lucas sequences.

#include <sierp/sierp.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

using namespace sierp;

namespace {

Covering load_covering(const std::string& spec) {
    if (spec.rfind("asset:", 0) == 0) return builtin_asset(spec.substr(6));
    return covering_from_json(parse_json_text(read_text_file(spec)));
}

void emit_certificate(const SierpinskiCertificate& cert, const std::string& out_path) {
    std::string text = dump(to_json(cert));
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

int run_covering_verify(const std::string& file) {
    Covering c = load_covering(file);
    auto witness = verify_cover(c);
    if (witness) {
        std::cout << "uncovered witness=" << *witness << "\n";
        return 1;
    }
    std::cout << "covered\n";
    return 0;
}

std::string format_row(const FactorRow& row) {
    std::string s = "n=" + std::to_string(row.n) + " witness=" + to_string(row.bold_prime) +
                    ": " + (row.sign < 0 ? "-" : "+");
    for (const auto& [p, e] : row.known_factors) {
        s += " " + to_string(p);
        if (e > 1) s += "^" + std::to_string(e);
        s += " *";
    }
    if (row.cofactor != 1) {
        s += " " + (digits10(row.cofactor) <= 40 ? to_string(row.cofactor)
                                                 : "C" + std::to_string(digits10(row.cofactor)));
    } else if (!row.known_factors.empty()) {
        s.pop_back();
        s.pop_back();
    }
    return s;
}

int run_certify(const std::string& file, std::int64_t nmax, std::int64_t rows,
                std::uint32_t small_bound) {
    SierpinskiCertificate cert = certificate_from_json(parse_json_text(read_text_file(file)));
    validate(cert);
    std::cout << "kind=" << to_string(cert.kind) << " exponent=" << cert.exponent
              << " classes=" << cert.covering.classes.size() << " k_digits=" << digits10(cert.k)
              << "\n";
    VerificationReport report = verify_certificate(cert, nmax);
    if (report.passed()) {
        std::cout << "verify [1," << nmax << "]: pass checked=" << report.checked << "\n";
    } else {
        const auto& f = report.failures.front();
        std::cout << "verify [1," << nmax << "]: fail failures=" << report.failures.size()
                  << " first: n=" << f.n << " " << f.reason << "\n";
    }
    if (rows > 0)
        for (const auto& row : factor_rows(cert, rows, small_bound))
            std::cout << format_row(row) << "\n";
    return report.passed() ? 0 : 1;
}

int run_primdiv(const Int& alpha, std::int64_t m, int effort) {
    FactorBudget budget;
    budget.rho_iterations *= static_cast<std::uint64_t>(effort);
    LucasParams lp(alpha + 1, alpha);
    PrimitiveDivisors pd = primitive_divisors(lp, static_cast<std::uint64_t>(m), budget);
    std::cout << "U_" << m << "(" << to_string(alpha) << ",1) = " << to_string(pd.u) << "\n";
    for (const auto& [q, e] : pd.factorization.factors)
        std::cout << to_string(q) << (e > 1 ? "^" + std::to_string(e) : "") << ": "
                  << to_string(classify_divisor(lp, q, static_cast<std::uint64_t>(m))) << "\n";
    if (!pd.complete)
        std::cout << "unfactored cofactor: C" << digits10(pd.factorization.cofactor) << "\n";
    std::cout << "primitive:";
    for (const Int& q : pd.primitive) std::cout << " " << to_string(q);
    if (pd.primitive.empty())
        std::cout << (zsigmondy_exception(lp, static_cast<std::uint64_t>(m))
                          ? " none (zsigmondy exception)"
                          : " none");
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sierpinski certificates from Lucas sequences"};
    app.require_subcommand(1);

    auto* covering = app.add_subcommand("covering", "covering operations");
    covering->require_subcommand(1);
    auto* cov_verify = covering->add_subcommand("verify", "exhaustively verify a covering");
    std::string cov_file;
    cov_verify->add_option("file", cov_file, "covering JSON file or asset:NAME")->required();

    auto* generate = app.add_subcommand("generate", "construct a certificate");
    generate->require_subcommand(1);
    generate->fallthrough();
    std::string out_path;
    generate->add_option("--out", out_path, "write certificate to this file instead of stdout");
    auto* gen_main = generate->add_subcommand("main", "rational construction for a given alpha");
    std::string alpha_str = "2";
    int effort = 1;
    gen_main->add_option("--alpha", alpha_str, "alpha >= 2, decimal")->required();
    gen_main->add_option("--effort", effort, "factorization effort multiplier")
        ->check(CLI::PositiveNumber);
    auto* gen_general = generate->add_subcommand("general", "menu construction over a covering");
    std::string gen_cov, variant_str = "standard";
    gen_general->add_option("--covering", gen_cov, "covering JSON file or asset:NAME")->required();
    gen_general->add_option("--variant", variant_str,
                            "standard|rational|nonreal|sierpinski-capture");
    auto* gen_fib = generate->add_subcommand("fibonacci", "Fibonacci construction over the covering-C asset");
    auto* gen_nonlinear = generate->add_subcommand("nonlinear", "squared-multiplier construction over the table-5 asset");

    auto* certify = app.add_subcommand("certify", "verify a certificate file");
    std::string cert_file;
    std::int64_t nmax = 1000, rows = 0;
    std::uint32_t small_bound = 1'000'000;
    certify->add_option("file", cert_file, "certificate JSON file")->required();
    certify->add_option("--nmax", nmax, "check terms n = 1..nmax")->check(CLI::PositiveNumber);
    certify->add_option("--rows", rows, "print this many factored rows")
        ->check(CLI::NonNegativeNumber);
    certify->add_option("--small-bound", small_bound, "trial division bound for rows");

    auto* lucas = app.add_subcommand("lucas", "Lucas sequence utilities");
    lucas->require_subcommand(1);
    std::string p_str = "1", q_str = "-1", mod_str = "2";
    std::int64_t n_idx = 0, cap = 0;
    std::uint32_t bound = 100;
    auto add_pq = [&](CLI::App* cmd) {
        cmd->add_option("--P", p_str, "P = alpha + beta, decimal")->required();
        cmd->add_option("--Q", q_str, "Q = alpha * beta, decimal")->required();
    };
    auto* lucas_eval = lucas->add_subcommand("eval", "exact U_n");
    add_pq(lucas_eval);
    lucas_eval->add_option("--n", n_idx, "index")->required()->check(CLI::NonNegativeNumber);
    auto* lucas_period = lucas->add_subcommand("period", "full period of U mod a prime");
    add_pq(lucas_period);
    lucas_period->add_option("--p", mod_str, "prime modulus, decimal")->required();
    lucas_period->add_option("--cap", cap, "iteration cap (default 6p)");
    auto* lucas_rank = lucas->add_subcommand("rank", "rank of apparition mod a prime");
    add_pq(lucas_rank);
    lucas_rank->add_option("--p", mod_str, "prime modulus, decimal")->required();
    lucas_rank->add_option("--cap", cap, "iteration cap (default 6p)");
    auto* lucas_scan = lucas->add_subcommand("scan", "periods for all primes below a bound");
    add_pq(lucas_scan);
    lucas_scan->add_option("--bound", bound, "prime bound")->required();
    lucas_scan->add_option("--cap", cap, "iteration cap (default 6p)");

    auto* primdiv = app.add_subcommand("primdiv", "primitive divisors of U_m(alpha, 1)");
    std::string pd_alpha = "2";
    std::int64_t pd_m = 2;
    int pd_effort = 1;
    primdiv->add_option("--alpha", pd_alpha, "alpha >= 2, decimal")->required();
    primdiv->add_option("--m", pd_m, "index m >= 1")->required()->check(CLI::PositiveNumber);
    primdiv->add_option("--effort", pd_effort, "factorization effort multiplier")
        ->check(CLI::PositiveNumber);

    auto* asset = app.add_subcommand("asset", "built-in coverings");
    asset->require_subcommand(1);
    auto* asset_list = asset->add_subcommand("list", "list asset names");
    auto* asset_show = asset->add_subcommand("show", "print an asset as covering JSON");
    std::string asset_name;
    asset_show->add_option("name", asset_name, "asset name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cov_verify->parsed()) return run_covering_verify(cov_file);
        if (gen_main->parsed()) {
            FactorBudget budget;
            budget.rho_iterations *= static_cast<std::uint64_t>(effort);
            emit_certificate(generate_main(parse_decimal(alpha_str), budget), out_path);
            return 0;
        }
        if (gen_general->parsed()) {
            auto variant = general_variant_from(variant_str);
            if (!variant) {
                std::cerr << "unknown variant: " << variant_str << "\n";
                return 2;
            }
            emit_certificate(generate_general(load_covering(gen_cov), *variant), out_path);
            return 0;
        }
        if (gen_fib->parsed()) {
            SierpinskiCertificate cert = generate_fibonacci();
            std::cerr << "k: " << digits10(cert.k) << " digits\n";
            emit_certificate(cert, out_path);
            return 0;
        }
        if (gen_nonlinear->parsed()) {
            emit_certificate(generate_nonlinear(), out_path);
            return 0;
        }
        if (certify->parsed()) return run_certify(cert_file, nmax, rows, small_bound);
        if (lucas_eval->parsed()) {
            LucasParams lp(parse_decimal(p_str), parse_decimal(q_str));
            std::cout << to_string(u_exact(lp, static_cast<std::uint64_t>(n_idx))) << "\n";
            return 0;
        }
        if (lucas_period->parsed() || lucas_rank->parsed()) {
            LucasParams lp(parse_decimal(p_str), parse_decimal(q_str));
            PeriodInfo info = period_mod(lp, parse_decimal(mod_str), cap);
            std::cout << (lucas_rank->parsed() ? info.rank : info.period) << "\n";
            return 0;
        }
        if (lucas_scan->parsed()) {
            LucasParams lp(parse_decimal(p_str), parse_decimal(q_str));
            for (const auto& [period, primes] : period_scan(lp, bound, cap)) {
                std::cout << "period " << period << ":";
                for (const Int& p : primes) std::cout << " " << to_string(p);
                std::cout << "\n";
            }
            return 0;
        }
        if (primdiv->parsed())
            return run_primdiv(parse_decimal(pd_alpha), pd_m, pd_effort);
        if (asset_list->parsed()) {
            for (const auto& name : asset_names()) std::cout << name << "\n";
            return 0;
        }
        if (asset_show->parsed()) {
            std::cout << dump(to_json(builtin_asset(asset_name)));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
