#include "hilbzeta.h"

#include "hilbzeta/error.hpp"
#include "hilbzeta/germ.hpp"
#include "hilbzeta/monodromy.hpp"
#include "hilbzeta/oracle.hpp"
#include "hilbzeta/report.hpp"
#include "hilbzeta/zeta.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

using namespace hilbzeta;

struct hz_registry {
    GermRegistry impl;
};
struct hz_poly {
    QPoly impl;
};
struct hz_series {
    QSeries impl;
};
struct hz_report {
    Report impl;
};

namespace {

thread_local std::string g_last_error;

hz_status code_of(const Error& e) {
    switch (e.kind()) {
        case Error::Kind::argument: return HZ_ERR_ARGUMENT;
        case Error::Kind::ring_mismatch: return HZ_ERR_RING;
        case Error::Kind::truncation: return HZ_ERR_ARGUMENT;
        case Error::Kind::degree: return HZ_ERR_DEGREE;
        case Error::Kind::unknown_germ: return HZ_ERR_UNKNOWN_GERM;
        case Error::Kind::parse: return HZ_ERR_PARSE;
        case Error::Kind::not_polynomial: return HZ_ERR_NOT_POLYNOMIAL;
        case Error::Kind::io: return HZ_ERR_IO;
    }
    return HZ_ERR_INTERNAL;
}

template <typename Fn>
hz_status guarded(Fn&& fn) {
    try {
        fn();
        return HZ_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return code_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HZ_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::string> label_vector(const char* const* labels, size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (!labels[i]) fail(Error::Kind::argument, "null germ label");
        out.emplace_back(labels[i]);
    }
    return out;
}

std::vector<uint32_t> prime_vector(const unsigned* primes, size_t n) {
    if (!primes && n) fail(Error::Kind::argument, "null prime list");
    return std::vector<uint32_t>(primes, primes + n);
}

Ring ring_of(int ring) {
    if (ring == HZ_RING_LEFSCHETZ) return Ring::lefschetz;
    if (ring == HZ_RING_WEIGHT) return Ring::weight;
    fail(Error::Kind::argument, "unknown ring tag " + std::to_string(ring));
}

} // namespace

extern "C" {

const char* hz_version(void) { return "0.1.0"; }

const char* hz_last_error(void) { return g_last_error.c_str(); }

void hz_string_free(char* text) { std::free(text); }

hz_status hz_registry_new(hz_registry** out) {
    return guarded([&] {
        if (!out) fail(Error::Kind::argument, "null out pointer");
        *out = new hz_registry{};
    });
}

hz_status hz_registry_load(hz_registry* registry, const char* json_path) {
    return guarded([&] {
        if (!registry || !json_path) fail(Error::Kind::argument, "null argument");
        registry->impl.load_json_file(json_path);
    });
}

hz_status hz_registry_save(const hz_registry* registry, const char* json_path) {
    return guarded([&] {
        if (!registry || !json_path) fail(Error::Kind::argument, "null argument");
        registry->impl.save_json_file(json_path);
    });
}

hz_status hz_registry_fit_germ(hz_registry* registry, const char* label, const char* equation,
                               int branches, int cogenus, const unsigned* primes, size_t n_primes) {
    return guarded([&] {
        if (!registry || !label || !equation) fail(Error::Kind::argument, "null argument");
        GermEq germ = make_germ_eq(label, equation, branches, cogenus);
        OracleRun run = oracle_fit(germ, 2 * cogenus, prime_vector(primes, n_primes));
        for (const OracleFit& fit : run.fits)
            if (!fit.surplus_checked)
                fail(Error::Kind::argument,
                     "registry fits require a surplus prime beyond the interpolation degree; "
                     "supply at least " + std::to_string(std::max(2 * cogenus, 1) + 1) + " primes");
        if (!run.all_fitted) {
            std::string why;
            for (const OracleFit& fit : run.fits)
                if (!fit.cls) { why = fit.diagnostic; break; }
            fail(Error::Kind::not_polynomial, "oracle fit failed for '" + std::string(label) + "': " + why);
        }
        auto factor = run.completed_factor();
        if (!factor)
            fail(Error::Kind::not_polynomial,
                 "oracle run too shallow to determine the degree-2*cogenus factor");
        registry->impl.add(make_germ_spec(label, equation, branches, cogenus, std::move(*factor),
                                          run.primes));
    });
}

void hz_registry_free(hz_registry* registry) { delete registry; }

hz_status hz_curve_numerator(const hz_registry* registry, const char* const* germ_labels,
                             size_t n_germs, hz_poly** out) {
    return guarded([&] {
        if (!registry || !out || (n_germs && !germ_labels)) fail(Error::Kind::argument, "null argument");
        CurveSpec curve;
        for (const std::string& label : label_vector(germ_labels, n_germs))
            curve.germs.push_back(registry->impl.require(label));
        *out = new hz_poly{zeta_numerator(curve)};
    });
}

hz_status hz_functional_equation(const hz_poly* numerator, int delta, int* verdict_out) {
    return guarded([&] {
        if (!numerator || !verdict_out) fail(Error::Kind::argument, "null argument");
        FunctionalEqReport fe = check_functional_equation(numerator->impl, delta);
        *verdict_out = fe.pass ? 1 : 0;
    });
}

hz_status hz_curve_series(const hz_registry* registry, int genus, const char* const* germ_labels,
                          size_t n_germs, int ring, int truncation, hz_series** out) {
    return guarded([&] {
        if (!registry || !out || (n_germs && !germ_labels)) fail(Error::Kind::argument, "null argument");
        CurveSpec curve;
        curve.normalization_genus = genus;
        for (const std::string& label : label_vector(germ_labels, n_germs))
            curve.germs.push_back(registry->impl.require(label));
        *out = new hz_series{curve_series(curve, ring_of(ring), truncation)};
    });
}

hz_status hz_nodal_weight_series(int delta, int r, int truncation, hz_series** out) {
    return guarded([&] {
        if (!out) fail(Error::Kind::argument, "null out pointer");
        *out = new hz_series{nodal_weight_series(delta, r, truncation)};
    });
}

hz_status hz_monodromy_weight_polynomial(int delta, int r, int d, char** out_text) {
    return guarded([&] {
        if (!out_text) fail(Error::Kind::argument, "null out pointer");
        *out_text = copy_string(nodal_weight_polynomial(delta, r, d).to_string("t"));
    });
}

hz_status hz_zeta_report(const hz_registry* registry, int genus, const char* const* germ_labels,
                         size_t n_germs, hz_report** out) {
    return guarded([&] {
        if (!registry || !out || (n_germs && !germ_labels)) fail(Error::Kind::argument, "null argument");
        *out = new hz_report{zeta_report(registry->impl, genus, label_vector(germ_labels, n_germs))};
    });
}

hz_status hz_strata_report(int genus, hz_report** out) {
    return guarded([&] {
        if (!out) fail(Error::Kind::argument, "null out pointer");
        *out = new hz_report{strata_report(genus)};
    });
}

hz_status hz_oracle_report(const char* equation, int branches, int cogenus, int n_max,
                           const unsigned* primes, size_t n_primes, hz_report** out) {
    return guarded([&] {
        if (!equation || !out) fail(Error::Kind::argument, "null argument");
        GermEq germ = make_germ_eq(equation, equation, branches, cogenus);
        *out = new hz_report{oracle_report(germ, n_max, prime_vector(primes, n_primes))};
    });
}

hz_status hz_macdonald_report(int g, int d, hz_report** out) {
    return guarded([&] {
        if (!out) fail(Error::Kind::argument, "null out pointer");
        *out = new hz_report{macdonald_report(g, d)};
    });
}

hz_status hz_perverse_report(int g, int d, hz_report** out) {
    return guarded([&] {
        if (!out) fail(Error::Kind::argument, "null out pointer");
        *out = new hz_report{perverse_report(g, d)};
    });
}

hz_status hz_weights_report(int delta, int r, int upto, int crosscheck, hz_report** out) {
    return guarded([&] {
        if (!out) fail(Error::Kind::argument, "null out pointer");
        *out = new hz_report{weights_report(delta, r, upto, crosscheck != 0)};
    });
}

int hz_report_status(const hz_report* report) { return report ? report->impl.status : HZ_ERR_ARGUMENT; }

int hz_report_passed(const hz_report* report) { return report && report->impl.passed ? 1 : 0; }

hz_status hz_report_render(const hz_report* report, int format, char** out_text) {
    return guarded([&] {
        if (!report || !out_text) fail(Error::Kind::argument, "null argument");
        ReportFormat f = ReportFormat::table;
        if (format == HZ_FORMAT_JSON) f = ReportFormat::json;
        else if (format == HZ_FORMAT_CSV) f = ReportFormat::csv;
        else if (format != HZ_FORMAT_TABLE) fail(Error::Kind::argument, "unknown report format");
        *out_text = copy_string(report->impl.render(f));
    });
}

void hz_report_free(hz_report* report) { delete report; }

int hz_poly_degree(const hz_poly* poly) { return poly ? poly->impl.degree() : -1; }

hz_status hz_poly_render(const hz_poly* poly, char** out_text) {
    return guarded([&] {
        if (!poly || !out_text) fail(Error::Kind::argument, "null argument");
        *out_text = copy_string(poly->impl.to_string());
    });
}

hz_status hz_poly_render_json(const hz_poly* poly, char** out_text) {
    return guarded([&] {
        if (!poly || !out_text) fail(Error::Kind::argument, "null argument");
        nlohmann::ordered_json j;
        j["ring"] = ring_variable(poly->impl.ring());
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (int d = 0; d <= poly->impl.degree(); ++d) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            IntPoly c = poly->impl.coeff(d);
            for (int k = 0; k <= c.degree(); ++k) {
                BigInt v = c.coeff(k);
                if (v.fits_int64()) row.push_back(v.to_int64());
                else row.push_back(v.to_string());
            }
            coeffs.push_back(std::move(row));
        }
        j["coeffs"] = std::move(coeffs);
        *out_text = copy_string(j.dump(2) + "\n");
    });
}

void hz_poly_free(hz_poly* poly) { delete poly; }

int hz_series_truncation(const hz_series* series) { return series ? series->impl.truncation() : -1; }

hz_status hz_series_render(const hz_series* series, char** out_text) {
    return guarded([&] {
        if (!series || !out_text) fail(Error::Kind::argument, "null argument");
        *out_text = copy_string(series->impl.to_string());
    });
}

void hz_series_free(hz_series* series) { delete series; }

} // extern "C"
