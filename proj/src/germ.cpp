#include "hilbzeta/germ.hpp"
#include "hilbzeta/error.hpp"
#include "hilbzeta/zeta.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hilbzeta {

using nlohmann::ordered_json;

GermSpec make_germ_spec(std::string label, std::string equation, int branches, int cogenus,
                        std::optional<QPoly> local_factor, std::vector<uint32_t> primes_used) {
    if (label.empty()) fail(Error::Kind::argument, "germ label must be non-empty");
    if (branches < 1) fail(Error::Kind::argument, "germ '" + label + "': branch count must be positive");
    if (cogenus < 0) fail(Error::Kind::argument, "germ '" + label + "': cogenus must be non-negative");
    if (local_factor) {
        const QPoly& f = *local_factor;
        if (f.ring() != Ring::lefschetz)
            fail(Error::Kind::ring_mismatch, "germ '" + label + "': local factor must live in the Lefschetz ring");
        if (!f.coeff(0).is_one())
            fail(Error::Kind::argument, "germ '" + label + "': local factor must have constant term 1");
        if (f.degree() != 2 * cogenus)
            fail(Error::Kind::degree, "germ '" + label + "': local factor degree " +
                                          std::to_string(f.degree()) + " != 2*cogenus = " +
                                          std::to_string(2 * cogenus));
        FunctionalEqReport fe = check_functional_equation(f, cogenus);
        if (!fe.pass)
            fail(Error::Kind::degree,
                 "germ '" + label + "': local factor violates the functional equation: " + fe.detail);
    }
    GermSpec spec;
    spec.label = std::move(label);
    spec.equation = std::move(equation);
    spec.branches = branches;
    spec.cogenus = cogenus;
    spec.local_factor = std::move(local_factor);
    spec.primes_used = std::move(primes_used);
    return spec;
}

namespace {

QPoly lef_poly(std::vector<IntPoly> coeffs) {
    return QPoly(Ring::lefschetz, std::move(coeffs));
}

std::vector<GermSpec> make_builtins() {
    const IntPoly one(1), minus_one(-1);
    const IntPoly L = IntPoly::monomial(1);
    const IntPoly L2 = IntPoly::monomial(2);
    const IntPoly L3 = IntPoly::monomial(3);
    std::vector<GermSpec> out;
    // node: 1 - q + q^2 L
    out.push_back(make_germ_spec("node", "x*y", 2, 1, lef_poly({one, minus_one, L})));
    // cusp: 1 + q^2 L
    out.push_back(make_germ_spec("cusp", "y^2 - x^3", 1, 1, lef_poly({one, IntPoly(), L})));
    // tacnode: 1 - q + q^2 L - q^3 L + q^4 L^2
    out.push_back(make_germ_spec("tacnode", "y^2 - x^4", 2, 2, lef_poly({one, minus_one, L, -L, L2})));
    // ramphoid: 1 + q^2 L + q^3 L^2 + q^4 L^2 + q^6 L^3
    out.push_back(make_germ_spec("ramphoid", "y^3 - x^4", 1, 3,
                                 lef_poly({one, IntPoly(), L, L2, L2, IntPoly(), L3})));
    return out;
}

ordered_json json_bigint(const BigInt& value) {
    if (value.fits_int64()) return ordered_json(value.to_int64());
    return ordered_json(value.to_string());
}

BigInt bigint_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    fail(Error::Kind::parse, "expected an integer or decimal string in registry JSON");
}

ordered_json factor_to_json(const QPoly& factor) {
    ordered_json out = ordered_json::array();
    for (int d = 0; d <= factor.degree(); ++d) {
        IntPoly c = factor.coeff(d);
        if (c.is_zero()) continue;
        ordered_json coeffs = ordered_json::array();
        for (int k = 0; k <= c.degree(); ++k) coeffs.push_back(json_bigint(c.coeff(k)));
        out.push_back(ordered_json::array({d, coeffs}));
    }
    return out;
}

QPoly factor_from_json(const ordered_json& j) {
    if (!j.is_array()) fail(Error::Kind::parse, "registry factor must be an array of [q-degree, coeffs] pairs");
    QPoly out(Ring::lefschetz);
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer())
            fail(Error::Kind::parse, "registry factor entries must be [q-degree, coeffs]");
        int d = entry[0].get<int>();
        std::vector<BigInt> coeffs;
        for (const auto& c : entry[1]) coeffs.push_back(bigint_from_json(c));
        out += QPoly::q_monomial(Ring::lefschetz, d, IntPoly::from_coeffs(std::move(coeffs)));
    }
    return out;
}

} // namespace

GermRegistry::GermRegistry() {
    for (GermSpec& spec : make_builtins()) add(std::move(spec));
}

const std::vector<std::string>& GermRegistry::builtin_labels() {
    static const std::vector<std::string> labels = {"node", "cusp", "tacnode", "ramphoid"};
    return labels;
}

const GermSpec* GermRegistry::find(const std::string& label) const {
    auto it = germs_.find(label);
    return it == germs_.end() ? nullptr : &it->second;
}

const GermSpec& GermRegistry::require(const std::string& label) const {
    const GermSpec* spec = find(label);
    if (!spec)
        fail(Error::Kind::unknown_germ,
             "unknown germ '" + label + "'; register it via the oracle (--eq) or a registry file");
    return *spec;
}

void GermRegistry::add(GermSpec spec) {
    // revalidate invariants regardless of origin
    GermSpec checked = make_germ_spec(spec.label, spec.equation, spec.branches, spec.cogenus,
                                      spec.local_factor, spec.primes_used);
    auto it = germs_.find(checked.label);
    if (it == germs_.end()) order_.push_back(checked.label);
    germs_[checked.label] = std::move(checked);
}

std::vector<const GermSpec*> GermRegistry::all() const {
    std::vector<const GermSpec*> out;
    out.reserve(order_.size());
    for (const std::string& label : order_) out.push_back(&germs_.at(label));
    return out;
}

std::string GermRegistry::to_json_text() const {
    ordered_json out = ordered_json::array();
    for (const GermSpec* spec : all()) {
        ordered_json record;
        record["label"] = spec->label;
        record["equation"] = spec->equation;
        record["branches"] = spec->branches;
        record["cogenus"] = spec->cogenus;
        if (spec->local_factor) record["factor"] = factor_to_json(*spec->local_factor);
        ordered_json primes = ordered_json::array();
        for (uint32_t p : spec->primes_used) primes.push_back(p);
        record["primes"] = primes;
        out.push_back(std::move(record));
    }
    return out.dump(2) + "\n";
}

void GermRegistry::load_json_text(const std::string& text) {
    ordered_json parsed;
    try {
        parsed = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(Error::Kind::parse, std::string("registry JSON parse error: ") + e.what());
    }
    if (!parsed.is_array()) fail(Error::Kind::parse, "registry JSON must be a list of germ records");
    for (const auto& record : parsed) {
        std::optional<QPoly> factor;
        if (record.contains("factor")) factor = factor_from_json(record.at("factor"));
        std::vector<uint32_t> primes;
        if (record.contains("primes"))
            for (const auto& p : record.at("primes")) primes.push_back(p.get<uint32_t>());
        add(make_germ_spec(record.at("label").get<std::string>(),
                           record.value("equation", std::string()),
                           record.value("branches", 1), record.value("cogenus", 0),
                           std::move(factor), std::move(primes)));
    }
}

void GermRegistry::load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Error::Kind::io, "cannot open registry file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    load_json_text(buffer.str());
}

void GermRegistry::save_json_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) fail(Error::Kind::io, "cannot write registry file: " + path);
    out << to_json_text();
}

} // namespace hilbzeta
