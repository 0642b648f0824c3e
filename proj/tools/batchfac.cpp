// Command-line front end: batch root finding and batch factorisation of a
// monic integer polynomial modulo every prime below a bound, plus the
// global Galois data dump, an oracle-backed verifier, and a benchmark.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "batchfac/batchroots.hpp"
#include "batchfac/galoisdata.hpp"
#include "batchfac/galoisfactor.hpp"
#include "batchfac/generalfactor.hpp"
#include "batchfac/numfield.hpp"
#include "batchfac/oracle.hpp"
#include "batchfac/sieve.hpp"

namespace {

using namespace batchfac;

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
        stream = &file;
    }
};

std::string factor_record_json(const FactorRecord& rec) {
    std::ostringstream os;
    os << "{\"p\":" << rec.p << ",\"factors\":[";
    bool first = true;
    for (const auto& [g, m] : rec.factorization.factors) {
        if (!first) os << ",";
        first = false;
        os << "{\"c\":[";
        for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
            if (i) os << ",";
            os << "\"" << g.coeff(i) << "\"";
        }
        os << "],\"m\":" << m << "}";
    }
    os << "]}";
    return os.str();
}

std::string factorization_text(const ModFactorization& fac) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, m] : fac.factors) {
        if (!first) os << " * ";
        first = false;
        os << "(" << g.to_string() << ")";
        if (m > 1) os << "^" << m;
    }
    if (first) os << "1";
    return os.str();
}

int run_roots(const std::string& coeffs, std::uint64_t limit,
              std::size_t block_size, unsigned workers,
              const std::string& out_path) {
    const IntPoly h = IntPoly::parse(coeffs);
    BatchOptions opts;
    opts.block_size = block_size;
    opts.workers = workers;
    const RootsTable table = batch_roots(h, limit, opts);
    OutputTarget out;
    out.open(out_path);
    for (const RootsEntry& e : table.entries) {
        if (e.all) {
            *out.stream << "{\"p\":" << e.p << ",\"all\":true}\n";
            continue;
        }
        *out.stream << "{\"p\":" << e.p << ",\"roots\":[";
        for (std::size_t i = 0; i < e.roots.size(); ++i) {
            if (i) *out.stream << ",";
            *out.stream << e.roots[i];
        }
        *out.stream << "]}\n";
    }
    return 0;
}

std::vector<FactorRecord> run_pipeline(const IntPoly& f, std::uint64_t limit,
                                       bool galois, const BatchOptions& opts) {
    if (galois) return galois_factor_batch(f, limit, opts);
    return factor_entry(f, limit, opts);
}

int run_factor(const std::string& coeffs, std::uint64_t limit, bool galois,
               std::size_t block_size, unsigned workers,
               const std::string& out_path) {
    const IntPoly f = IntPoly::parse(coeffs);
    if (!f.is_monic())
        throw CLI::ValidationError("--coeffs", "polynomial must be monic");
    BatchOptions opts;
    opts.block_size = block_size;
    opts.workers = workers;
    const auto records = run_pipeline(f, limit, galois, opts);
    OutputTarget out;
    out.open(out_path);
    for (const FactorRecord& rec : records)
        *out.stream << factor_record_json(rec) << "\n";
    return 0;
}

int run_galois_data(const std::string& coeffs, unsigned workers,
                    const std::string& out_path) {
    const IntPoly f = IntPoly::parse(coeffs);
    if (!f.is_monic())
        throw CLI::ValidationError("--coeffs", "polynomial must be monic");
    const GaloisData data = compute_global_data(f, workers);
    OutputTarget out;
    out.open(out_path);
    *out.stream << galois_data_json(data) << "\n";
    return 0;
}

int run_verify(const std::string& coeffs, std::uint64_t limit, bool galois,
               std::size_t block_size, unsigned workers) {
    const IntPoly f = IntPoly::parse(coeffs);
    if (!f.is_monic())
        throw CLI::ValidationError("--coeffs", "polynomial must be monic");
    BatchOptions opts;
    opts.block_size = block_size;
    opts.workers = workers;
    const auto records = run_pipeline(f, limit, galois, opts);
    for (const FactorRecord& rec : records) {
        const ModFactorization expected =
            oracle::factor_oracle(reduce_mod_p(f, rec.p));
        const bool match = rec.factorization.factors == expected.factors &&
                           rec.factorization.unit == expected.unit;
        if (!match) {
            std::cout << "mismatch at p=" << rec.p << "\n"
                      << "  pipeline: " << factorization_text(rec.factorization)
                      << "\n"
                      << "  oracle:   " << factorization_text(expected) << "\n";
            return 1;
        }
    }
    std::cout << "verified " << records.size() << " primes below " << limit
              << "\n";
    return 0;
}

int run_bench(const std::string& coeffs, const std::string& limits, bool galois,
              std::size_t block_size, unsigned workers) {
    const IntPoly f = IntPoly::parse(coeffs);
    if (!f.is_monic())
        throw CLI::ValidationError("--coeffs", "polynomial must be monic");
    BatchOptions opts;
    opts.block_size = block_size;
    opts.workers = workers;
    std::istringstream is(limits);
    std::string tok;
    std::cout << "limit\tprimes\twall_s\tper_prime_s\n";
    while (std::getline(is, tok, ',')) {
        const std::uint64_t limit = std::stoull(tok);
        if (limit < 2) throw CLI::ValidationError("--limits", "limit must be >= 2");
        const auto start = std::chrono::steady_clock::now();
        const auto records = run_pipeline(f, limit, galois, opts);
        const std::chrono::duration<double> wall =
            std::chrono::steady_clock::now() - start;
        const double per_prime =
            records.empty() ? 0.0 : wall.count() / double(records.size());
        std::cout << limit << "\t" << records.size() << "\t" << wall.count()
                  << "\t" << per_prime << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"batch factorisation of integer polynomials modulo all "
                 "primes below a bound"};
    app.require_subcommand(1);

    std::string coeffs, out_path, limits;
    std::uint64_t limit = 2;
    std::size_t block_size = std::size_t{1} << 20;
    unsigned workers = 1;
    bool galois = false;

    auto add_common = [&](CLI::App* cmd, bool with_limit) {
        cmd->add_option("--coeffs", coeffs,
                        "comma-separated ascending coefficients, e.g. -2,0,1")
            ->required();
        if (with_limit)
            cmd->add_option("--limit", limit, "bound on the primes")
                ->required()
                ->check(CLI::Range(std::uint64_t{2},
                                   std::uint64_t{1} << 40));
        cmd->add_option("--block-size", block_size,
                        "evaluation block size for batch root finding")
            ->check(CLI::Range(std::size_t{1} << 10, std::size_t{1} << 28));
        cmd->add_option("--workers", workers, "worker thread count")
            ->check(CLI::Range(1u, 256u));
    };

    CLI::App* roots = app.add_subcommand("roots",
                                         "roots of the polynomial modulo "
                                         "every prime below the limit");
    add_common(roots, true);
    roots->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* factor = app.add_subcommand("factor",
                                          "factor modulo every prime below "
                                          "the limit");
    add_common(factor, true);
    factor->add_flag("--galois", galois,
                     "use the Galois pipeline (input must be Galois)");
    factor->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* gdata = app.add_subcommand("galois-data",
                                         "global Galois data as JSON");
    add_common(gdata, false);
    gdata->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify",
                                          "cross-check factorisations "
                                          "against the brute-force oracle");
    add_common(verify, true);
    verify->add_flag("--galois", galois,
                     "use the Galois pipeline (input must be Galois)");

    CLI::App* bench = app.add_subcommand("bench", "timing per prime");
    bench->add_option("--coeffs", coeffs, "polynomial coefficients")->required();
    bench->add_option("--limits", limits, "comma-separated prime bounds")
        ->required();
    bench->add_flag("--galois", galois, "use the Galois pipeline");
    bench->add_option("--block-size", block_size, "evaluation block size")
        ->check(CLI::Range(std::size_t{1} << 10, std::size_t{1} << 28));
    bench->add_option("--workers", workers, "worker thread count")
        ->check(CLI::Range(1u, 256u));

    try {
        app.parse(argc, argv);
        if (roots->parsed())
            return run_roots(coeffs, limit, block_size, workers, out_path);
        if (factor->parsed())
            return run_factor(coeffs, limit, galois, block_size, workers,
                              out_path);
        if (gdata->parsed()) return run_galois_data(coeffs, workers, out_path);
        if (verify->parsed())
            return run_verify(coeffs, limit, galois, block_size, workers);
        if (bench->parsed())
            return run_bench(coeffs, limits, galois, block_size, workers);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
