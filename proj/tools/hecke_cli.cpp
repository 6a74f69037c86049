// Command-line surface: compute the Hecke generating function and its
// coefficient table, verify it against the q-expansion oracle, and
// inspect the underlying matrices and q-series. Output is deterministic
// JSON (or human-oriented text); expensive results are cached on disk.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"

#include "hecke/json_io.hpp"
#include "hecke/series.hpp"

namespace fs = std::filesystem;
using hecke::BasisKind;
using hecke::CoefficientTable;
using hecke::Rat;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupportedExact = 3;

struct CommonOpts {
    std::string format = "json";
    std::string output;
    std::string cache_dir;
};

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<fs::path> cache_root(const CommonOpts& opts) {
    if (!opts.cache_dir.empty()) return fs::path(opts.cache_dir);
    if (const char* env = std::getenv("HECKE_CACHE"); env && *env) return fs::path(env);
    return std::nullopt;
}

std::optional<std::string> cache_load(const CommonOpts& opts, const std::string& key) {
    auto root = cache_root(opts);
    if (!root) return std::nullopt;
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json",
                  static_cast<unsigned long long>(fnv1a64(key)));
    fs::path file = *root / name;
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void cache_store(const CommonOpts& opts, const std::string& key, const std::string& payload) {
    auto root = cache_root(opts);
    if (!root) return;
    std::error_code ec;
    fs::create_directories(*root, ec);
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json",
                  static_cast<unsigned long long>(fnv1a64(key)));
    fs::path file = *root / name;
    fs::path tmp = file;
    tmp += ".tmp." + std::to_string(static_cast<unsigned long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary);
        out << payload;
    }
    fs::rename(tmp, file, ec);  // atomic publish
    if (ec) fs::remove(tmp, ec);
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(opts.output, std::ios::binary);
        out << text;
    }
}

BasisKind parse_basis(unsigned level, const std::string& name) {
    if (name == "symmetric") {
        if (level != 5) throw CLI::ValidationError("--basis symmetric requires --N 5");
        return BasisKind::symmetric_five;
    }
    if (name == "power") return BasisKind::power;
    if (name.empty()) return hecke::default_basis(level);
    throw CLI::ValidationError("unknown basis: " + name);
}

std::string basis_name(unsigned level, BasisKind basis) {
    if (level == 2) return "cubic";
    return basis == BasisKind::symmetric_five ? "symmetric" : "power";
}

json envelope(json job, json payload) {
    return json{{"version", hecke::kArtifactVersion},
                {"job", std::move(job)},
                {"payload", std::move(payload)}};
}

std::string table_cache_key(unsigned level, BasisKind basis, int max_weight) {
    std::ostringstream key;
    key << hecke::kArtifactVersion << "|genfun|" << level << "|" << basis_name(level, basis)
        << "|series|" << max_weight << "|0";
    return key.str();
}

// coefficient table via the trace route, read through the cache when one
// is configured
json table_payload(const CommonOpts& opts, unsigned level, BasisKind basis, int max_weight) {
    std::string key = table_cache_key(level, basis, max_weight);
    if (auto cached = cache_load(opts, key)) return json::parse(*cached);
    CoefficientTable t = hecke::coefficient_table(level, basis, max_weight);
    json payload = hecke::table_to_json(t);
    cache_store(opts, key, payload.dump(2));
    return payload;
}

int run_genfun(const CommonOpts& opts, unsigned level, const std::string& basis_flag,
               const std::string& mode, int max_weight) {
    BasisKind basis = parse_basis(level, basis_flag);
    json job{{"command", "genfun"},
             {"N", level},
             {"basis", basis_name(level, basis)},
             {"mode", mode},
             {"max_weight", max_weight}};
    if (mode == "exact") {
        if (hecke::rep_dimension(level, basis) > hecke::kMaxExactDimension) {
            std::cerr << "exact mode unsupported at dimension "
                      << hecke::rep_dimension(level, basis) << "; use --mode series\n";
            return kExitUnsupportedExact;
        }
        hecke::GeneratingFunction f = hecke::generating_function(level, basis);
        json payload{{"normalization", hecke::rat_to_json(f.normalization)},
                     {"value", hecke::ratfunc_to_json(f.value)}};
        if (opts.format == "text") {
            emit(opts, "F_" + std::to_string(level) + " = " + f.value.str());
        } else {
            emit(opts, envelope(job, payload).dump(2));
        }
        return kExitOk;
    }
    if (mode != "series") {
        std::cerr << "unknown mode: " << mode << "\n";
        return kExitUsage;
    }
    json payload = table_payload(opts, level, basis, max_weight);
    if (opts.format == "text") {
        emit(opts, hecke::render_table_text(hecke::table_from_json(payload, level, max_weight)));
    } else {
        emit(opts, envelope(job, payload).dump(2));
    }
    return kExitOk;
}

int run_verify(const CommonOpts& opts, unsigned level, const std::string& basis_flag,
               int max_weight) {
    BasisKind basis = parse_basis(level, basis_flag);
    json payload = table_payload(opts, level, basis, max_weight);
    CoefficientTable computed = hecke::table_from_json(payload, level, max_weight);
    CoefficientTable expected = hecke::oracle_table(level, max_weight);
    for (auto [i, j] : hecke::monomials_up_to_weight(max_weight)) {
        std::map<std::pair<int, int>, Rat> empty;
        const auto* lhs = &empty;
        const auto* rhs = &empty;
        if (auto it = computed.entries.find({i, j}); it != computed.entries.end())
            lhs = &it->second;
        if (auto it = expected.entries.find({i, j}); it != expected.entries.end())
            rhs = &it->second;
        if (*lhs != *rhs) {
            for (auto [k, l] : hecke::monomials_of_weight(4 * i + 6 * j)) {
                Rat cv(0), ov(0);
                if (auto it = lhs->find({k, l}); it != lhs->end()) cv = it->second;
                if (auto it = rhs->find({k, l}); it != rhs->end()) ov = it->second;
                if (cv != ov) {
                    std::cout << "mismatch at (i,j,k,l) = (" << i << "," << j << "," << k << ","
                              << l << "): computed " << cv.get_str() << ", oracle "
                              << ov.get_str() << "\n";
                    return kExitMismatch;
                }
            }
            std::cout << "mismatch in entry (" << i << "," << j << ")\n";
            return kExitMismatch;
        }
    }
    std::cout << "verified N=" << level << " up to weight " << max_weight << ": "
              << "all coefficients match the q-expansion oracle\n";
    return kExitOk;
}

int run_matrices(const CommonOpts& opts, unsigned level, const std::string& basis_flag) {
    BasisKind basis = parse_basis(level, basis_flag);
    auto [ra, rb] = hecke::rep_matrices(level, basis);
    json job{{"command", "matrices"}, {"N", level}, {"basis", basis_name(level, basis)}};
    if (opts.format == "text") {
        emit(opts, "rho(a'):\n" + hecke::render_matrix_text(ra) + "rho(b'):\n" +
                       hecke::render_matrix_text(rb));
    } else {
        json payload{{"rho_a_prime", hecke::matrix_to_json(ra)},
                     {"rho_b_prime", hecke::matrix_to_json(rb)}};
        emit(opts, envelope(job, payload).dump(2));
    }
    return kExitOk;
}

int run_qexp(const CommonOpts& opts, const std::string& form, int count) {
    int terms = count - 1;  // truncation order for `count` coefficients
    hecke::QSeries s;
    if (form == "a") {
        s = hecke::eisenstein_series(hecke::EisensteinKind::a, terms);
    } else if (form == "b") {
        s = hecke::eisenstein_series(hecke::EisensteinKind::b, terms);
    } else if (form == "e") {
        s = hecke::eisenstein_series(hecke::EisensteinKind::e, terms);
    } else if (form == "delta") {
        s = hecke::delta_series(terms);
    } else {
        std::cerr << "unknown form: " << form << "\n";
        return kExitUsage;
    }
    json job{{"command", "qexp"}, {"form", form}, {"terms", count}};
    if (opts.format == "text") {
        std::ostringstream os;
        for (std::size_t n = 0; n < s.c.size(); ++n) {
            os << (n ? ", " : "") << s.c[n].get_str();
        }
        emit(opts, os.str());
    } else {
        emit(opts, envelope(job, hecke::qseries_to_json(s)).dump(2));
    }
    return kExitOk;
}

int run_trace(const CommonOpts& opts, unsigned level, int weight) {
    Rat t = hecke::trace_on_weight(level, weight);
    json job{{"command", "trace"}, {"N", level}, {"weight", weight}};
    if (opts.format == "text") {
        emit(opts, t.get_str());
    } else {
        json payload{{"trace", hecke::rat_to_json(t)}};
        emit(opts, envelope(job, payload).dump(2));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke operator generating functions on the ring of modular forms"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--format", opts.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", opts.output, "write the result to this file");
    app.add_option("--cache-dir", opts.cache_dir,
                   "cache directory (default: HECKE_CACHE env var, if set)");

    unsigned level = 2;
    std::string basis_flag;
    std::string mode = "exact";
    int max_weight = 24;
    int weight = 12;
    int terms = 10;
    std::string form = "a";

    auto add_level = [&](CLI::App* cmd) {
        cmd->fallthrough();  // global flags may follow the subcommand
        cmd->add_option("--N", level, "level (2, 3, 5, or 7)")
            ->check(CLI::IsMember({2u, 3u, 5u, 7u}));
    };

    CLI::App* genfun = app.add_subcommand("genfun", "compute F_N or its coefficient table");
    add_level(genfun);
    genfun->add_option("--basis", basis_flag, "power or symmetric (N=5)");
    genfun->add_option("--mode", mode, "exact or series")
        ->check(CLI::IsMember({"exact", "series"}));
    genfun->add_option("--max-weight", max_weight, "weight bound for series mode")
        ->check(CLI::NonNegativeNumber);

    CLI::App* verify = app.add_subcommand("verify", "compare the table with the q-expansion oracle");
    add_level(verify);
    verify->add_option("--basis", basis_flag, "power or symmetric (N=5)");
    verify->add_option("--max-weight", max_weight, "weight bound")->check(CLI::NonNegativeNumber);

    CLI::App* matrices = app.add_subcommand("matrices", "print rho(a') and rho(b')");
    add_level(matrices);
    matrices->add_option("--basis", basis_flag, "power or symmetric (N=5)");

    CLI::App* qexp = app.add_subcommand("qexp", "print a q-expansion");
    qexp->fallthrough();
    qexp->add_option("--form", form, "a, b, e, or delta");
    qexp->add_option("--terms", terms, "number of coefficients, starting at q^0")
        ->check(CLI::PositiveNumber);

    CLI::App* trace = app.add_subcommand("trace", "trace of T_N on a weight-k space");
    add_level(trace);
    trace->add_option("--weight", weight, "even weight")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (genfun->parsed()) return run_genfun(opts, level, basis_flag, mode, max_weight);
        if (verify->parsed()) return run_verify(opts, level, basis_flag, max_weight);
        if (matrices->parsed()) return run_matrices(opts, level, basis_flag);
        if (qexp->parsed()) return run_qexp(opts, form, terms);
        if (trace->parsed()) return run_trace(opts, level, weight);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUnsupportedExact;
    }
    return kExitUsage;
}
