#pragma once

#include "hilbzeta/qseries.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilbzeta {

// A plane-curve singularity germ: label, optional defining equation,
// branch count b, cogenus delta, and (when known) the local factor
// (1-q)^b * sum_n q^n [(C,p)^[n]], a Lefschetz polynomial of degree
// 2*delta with constant term 1 satisfying the functional equation.
struct GermSpec {
    std::string label;
    std::string equation; // empty when only a factor is stored
    int branches = 1;
    int cogenus = 0;
    std::optional<QPoly> local_factor;
    std::vector<uint32_t> primes_used; // provenance when oracle-fitted

    int factor_degree() const { return 2 * cogenus; }
};

// Validates the stored-factor invariants (degree 2*delta, constant term 1,
// functional equation with exponent delta); throws Error on violation.
GermSpec make_germ_spec(std::string label, std::string equation, int branches, int cogenus,
                        std::optional<QPoly> local_factor,
                        std::vector<uint32_t> primes_used = {});

// Registry of germs keyed by label.  Ships with the built-ins (node, cusp,
// tacnode, ramphoid); user entries can be loaded from and saved to the JSON
// registry file format.
class GermRegistry {
public:
    GermRegistry(); // built-ins preloaded

    static const std::vector<std::string>& builtin_labels();

    const GermSpec* find(const std::string& label) const;
    const GermSpec& require(const std::string& label) const; // throws unknown_germ
    void add(GermSpec spec);                                 // validates, replaces
    std::vector<const GermSpec*> all() const;                // insertion order

    void load_json_file(const std::string& path);
    void save_json_file(const std::string& path) const;
    void load_json_text(const std::string& text);
    std::string to_json_text() const;

private:
    std::vector<std::string> order_;
    std::map<std::string, GermSpec> germs_;
};

} // namespace hilbzeta
