// hilbzeta command line: zeta numerators and their functional equation,
// compactified-Jacobian strata, the finite-field counting oracle, Macdonald
// rank tables, perverse bookkeeping, and nodal weight series.
//
// Exit codes: 0 success / all checks pass, 2 usage error, 3 identity check
// failed, 4 oracle fit failure.  All results go to stdout, diagnostics to
// stderr.

#include <hilbzeta.h>

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;

struct RegistryHandle {
    hz_registry* ptr = nullptr;
    ~RegistryHandle() { hz_registry_free(ptr); }
};

int format_of(const std::string& name) {
    if (name == "json") return HZ_FORMAT_JSON;
    if (name == "csv") return HZ_FORMAT_CSV;
    return HZ_FORMAT_TABLE;
}

int print_report(hz_report* report, int format) {
    char* text = nullptr;
    if (hz_report_render(report, format, &text) != HZ_OK) {
        std::fprintf(stderr, "error: %s\n", hz_last_error());
        hz_report_free(report);
        return kExitUsage;
    }
    std::fputs(text, stdout);
    hz_string_free(text);
    int status = hz_report_status(report);
    hz_report_free(report);
    return status;
}

// --germ label[:count] flags expand to a flat label list
bool expand_germs(const std::vector<std::string>& specs, std::vector<std::string>& labels) {
    for (const std::string& spec : specs) {
        std::string label = spec;
        long count = 1;
        size_t colon = spec.find(':');
        if (colon != std::string::npos) {
            label = spec.substr(0, colon);
            try {
                count = std::stol(spec.substr(colon + 1));
            } catch (...) {
                count = -1;
            }
            if (count < 1) {
                std::fprintf(stderr, "error: bad germ multiplicity in '%s'\n", spec.c_str());
                return false;
            }
        }
        for (long i = 0; i < count; ++i) labels.push_back(label);
    }
    return true;
}

std::vector<const char*> c_labels(const std::vector<std::string>& labels) {
    std::vector<const char*> out;
    out.reserve(labels.size());
    for (const std::string& l : labels) out.push_back(l.c_str());
    return out;
}

int status_to_exit(hz_status status) {
    switch (status) {
        case HZ_OK: return 0;
        case HZ_ERR_NOT_POLYNOMIAL: return 4;
        default: return kExitUsage;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating functions for Hilbert schemes of points on plane curves"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand name

    std::string format = "table";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
    std::string registry_path;
    app.add_option("--registry", registry_path, "germ registry JSON file to load");
    std::string save_registry_path;
    app.add_option("--save-registry", save_registry_path,
                   "write the registry (with any --eq fits) to this JSON file");

    // zeta
    auto* cmd_zeta = app.add_subcommand("zeta", "zeta numerator and functional equation of a curve");
    int zeta_genus = 0;
    std::vector<std::string> zeta_germs;
    std::string zeta_eq;
    int zeta_branches = 1, zeta_cogenus = 0;
    std::vector<unsigned> zeta_primes = {2, 3, 5, 7};
    cmd_zeta->add_option("--genus", zeta_genus, "normalization genus r")->check(CLI::NonNegativeNumber);
    cmd_zeta->add_option("--germ", zeta_germs, "germ label[:count]; repeatable");
    cmd_zeta->add_option("--eq", zeta_eq, "oracle-backed germ equation f(x,y)");
    cmd_zeta->add_option("--branches", zeta_branches, "branch count for --eq")->check(CLI::PositiveNumber);
    cmd_zeta->add_option("--cogenus", zeta_cogenus, "cogenus for --eq")->check(CLI::NonNegativeNumber);
    cmd_zeta->add_option("--primes", zeta_primes, "primes for --eq oracle runs");

    // strata
    auto* cmd_strata = app.add_subcommand("strata", "admissible Hilbert functions and stratum duality");
    int strata_genus = 1;
    int strata_max = 6;
    cmd_strata->add_option("--genus", strata_genus, "arithmetic genus g")->required()->check(CLI::NonNegativeNumber);
    cmd_strata->add_option("--max-genus", strata_max, "enumeration guard (default 6)");

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "count punctual Hilbert scheme points over finite fields");
    std::string oracle_eq;
    int oracle_n = 3, oracle_branches = 1, oracle_cogenus = 0;
    std::vector<unsigned> oracle_primes = {2, 3, 5, 7};
    cmd_oracle->add_option("--eq", oracle_eq, "germ equation f(x,y)")->required();
    cmd_oracle->add_option("--n", oracle_n, "maximal colength")->check(CLI::NonNegativeNumber);
    cmd_oracle->add_option("--branches", oracle_branches, "branch count b(p)")->check(CLI::PositiveNumber);
    cmd_oracle->add_option("--cogenus", oracle_cogenus, "cogenus delta")->check(CLI::NonNegativeNumber);
    cmd_oracle->add_option("--primes", oracle_primes, "sample primes (last ones are surplus checks)");

    // macdonald
    auto* cmd_macdonald = app.add_subcommand("macdonald", "symmetric-product rank table");
    int mac_g = 1, mac_d = 2;
    cmd_macdonald->add_option("--g", mac_g, "genus")->required()->check(CLI::Range(0, 30));
    cmd_macdonald->add_option("--d", mac_d, "number of points")->required()->check(CLI::Range(0, 64));

    // perverse
    auto* cmd_perverse = app.add_subcommand("perverse", "perverse filtration table from Jacobian ranks");
    int perv_g = 1, perv_d = 2;
    cmd_perverse->add_option("--g", perv_g, "genus")->required()->check(CLI::Range(0, 30));
    cmd_perverse->add_option("--d", perv_d, "number of points")->required()->check(CLI::Range(0, 64));

    // weights
    auto* cmd_weights = app.add_subcommand("weights", "nodal weight series and crosscheck");
    int w_delta = 0, w_r = 0, w_upto = 8;
    bool w_crosscheck = false;
    cmd_weights->add_option("--delta", w_delta, "number of nodes")->check(CLI::Range(0, 16));
    cmd_weights->add_option("--r", w_r, "normalization genus")->check(CLI::Range(0, 16));
    cmd_weights->add_option("--upto", w_upto, "truncation order")->check(CLI::Range(0, 64));
    cmd_weights->add_flag("--crosscheck", w_crosscheck, "verify the two expansion routes agree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::fprintf(stderr, "%s\n", e.what());
        return kExitUsage;
    }

    int fmt = format_of(format);

    RegistryHandle registry;
    if (cmd_zeta->parsed() || !registry_path.empty()) {
        if (hz_registry_new(&registry.ptr) != HZ_OK) {
            std::fprintf(stderr, "error: %s\n", hz_last_error());
            return kExitUsage;
        }
        if (!registry_path.empty() && hz_registry_load(registry.ptr, registry_path.c_str()) != HZ_OK) {
            std::fprintf(stderr, "error: %s\n", hz_last_error());
            return kExitUsage;
        }
    }

    if (cmd_zeta->parsed()) {
        std::vector<std::string> labels;
        if (!expand_germs(zeta_germs, labels)) return kExitUsage;
        if (!zeta_eq.empty()) {
            hz_status rc = hz_registry_fit_germ(registry.ptr, zeta_eq.c_str(), zeta_eq.c_str(),
                                                zeta_branches, zeta_cogenus, zeta_primes.data(),
                                                zeta_primes.size());
            if (rc != HZ_OK) {
                std::fprintf(stderr, "error: %s\n", hz_last_error());
                return status_to_exit(rc);
            }
            labels.push_back(zeta_eq);
        }
        if (!save_registry_path.empty() &&
            hz_registry_save(registry.ptr, save_registry_path.c_str()) != HZ_OK) {
            std::fprintf(stderr, "error: %s\n", hz_last_error());
            return kExitUsage;
        }
        std::vector<const char*> ptrs = c_labels(labels);
        hz_report* report = nullptr;
        hz_status rc = hz_zeta_report(registry.ptr, zeta_genus, ptrs.data(), ptrs.size(), &report);
        if (rc != HZ_OK) {
            std::fprintf(stderr, "error: %s\n", hz_last_error());
            return rc == HZ_ERR_UNKNOWN_GERM ? kExitUsage : status_to_exit(rc);
        }
        return print_report(report, fmt);
    }

    if (cmd_strata->parsed()) {
        if (strata_genus > strata_max) {
            std::fprintf(stderr, "error: genus %d exceeds the enumeration guard %d (override with --max-genus)\n",
                         strata_genus, strata_max);
            return kExitUsage;
        }
        hz_report* report = nullptr;
        if (hz_strata_report(strata_genus, &report) != HZ_OK) {
            std::fprintf(stderr, "error: %s\n", hz_last_error());
            return kExitUsage;
        }
        return print_report(report, fmt);
    }

    if (cmd_oracle->parsed()) {
        hz_report* report = nullptr;
        hz_status rc = hz_oracle_report(oracle_eq.c_str(), oracle_branches, oracle_cogenus, oracle_n,
                                        oracle_primes.data(), oracle_primes.size(), &report);
        if (rc != HZ_OK) {
            std::fprintf(stderr, "error: %s\n", hz_last_error());
            return rc == HZ_ERR_PARSE ? kExitUsage : status_to_exit(rc);
        }
        return print_report(report, fmt);
    }

    if (cmd_macdonald->parsed()) {
        hz_report* report = nullptr;
        if (hz_macdonald_report(mac_g, mac_d, &report) != HZ_OK) {
            std::fprintf(stderr, "error: %s\n", hz_last_error());
            return kExitUsage;
        }
        return print_report(report, fmt);
    }

    if (cmd_perverse->parsed()) {
        hz_report* report = nullptr;
        if (hz_perverse_report(perv_g, perv_d, &report) != HZ_OK) {
            std::fprintf(stderr, "error: %s\n", hz_last_error());
            return kExitUsage;
        }
        return print_report(report, fmt);
    }

    if (cmd_weights->parsed()) {
        hz_report* report = nullptr;
        if (hz_weights_report(w_delta, w_r, w_upto, w_crosscheck ? 1 : 0, &report) != HZ_OK) {
            std::fprintf(stderr, "error: %s\n", hz_last_error());
            return kExitUsage;
        }
        return print_report(report, fmt);
    }

    return kExitUsage;
}
