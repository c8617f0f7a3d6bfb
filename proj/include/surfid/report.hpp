#pragma once

// Machine-readable encodings. JSON numbers use the shortest round-trip form;
// CSV numbers use 17 significant digits.

#include <string>
#include <utility>
#include <vector>

#include "surfid/identities.hpp"
#include "surfid/scc_enum.hpp"

namespace surfid {

using ParameterList = std::vector<std::pair<std::string, double>>;

std::string csv_number(double v);

std::string report_to_json(const IdentityReport& report);
std::string report_to_csv(const IdentityReport& report);

std::string spectrum_to_json(const ParameterList& parameters, double cutoff,
                             const std::vector<GeodesicRecord>& records);
std::string spectrum_to_csv(const std::vector<GeodesicRecord>& records);

std::string terms_to_json(const IdentityReport& report, const std::vector<GeodesicRecord>& records,
                          const std::vector<double>& terms);
std::string terms_to_csv(const std::vector<GeodesicRecord>& records, const std::vector<double>& terms);

struct SweepRow {
    std::string param_name;
    double param_value = 0;
    double cutoff = 0;
    std::size_t term_count = 0;
    double partial_sum = 0;
    double defect = 0;
    double tail_estimate = 0;
};

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace surfid
