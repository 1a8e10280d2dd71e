#pragma once

#include "hilbzeta/germ.hpp"
#include "hilbzeta/oracle.hpp"

#include <string>
#include <vector>

namespace hilbzeta {

enum class ReportFormat { table, json, csv };

// Rendered outcome of one CLI-level computation.  All three renderings are
// deterministic; the JSON rendering is canonical (fixed key order, 2-space
// indent, integers only) and reparses to itself.
struct Report {
    int status = 0; // 0 all-pass, 3 identity failure, 4 oracle fit failure
    bool passed = true;
    std::string text;
    std::string json;
    std::string csv;

    const std::string& render(ReportFormat format) const {
        switch (format) {
            case ReportFormat::json: return json;
            case ReportFormat::csv: return csv;
            default: return text;
        }
    }
};

Report zeta_report(const GermRegistry& registry, int genus,
                   const std::vector<std::string>& germ_labels);
Report strata_report(int genus);
Report oracle_report(const GermEq& germ, int n_max, const std::vector<uint32_t>& primes);
Report macdonald_report(int g, int d);
Report perverse_report(int g, int d);
Report weights_report(int delta, int r, int upto, bool crosscheck);

} // namespace hilbzeta
