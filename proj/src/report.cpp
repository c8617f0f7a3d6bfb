#include "surfid/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace surfid {

namespace {

using Json = nlohmann::ordered_json;

Json parameters_json(const ParameterList& parameters) {
    Json out = Json::object();
    for (const auto& [name, value] : parameters) out[name] = value;
    return out;
}

Json report_json(const IdentityReport& r) {
    Json j;
    j["identity"] = std::string(to_string(r.kind));
    j["parameters"] = parameters_json(r.parameters);
    j["cutoff"] = r.cutoff;
    j["term_count"] = r.term_count;
    j["partial_sum"] = r.partial_sum;
    j["target"] = r.target;
    j["defect"] = r.defect;
    j["tail_estimate"] = r.tail_estimate;
    return j;
}

}  // namespace

std::string csv_number(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string report_to_json(const IdentityReport& report) { return report_json(report).dump(2) + "\n"; }

std::string report_to_csv(const IdentityReport& r) {
    std::ostringstream os;
    os << "identity";
    for (const auto& p : r.parameters) os << ',' << p.first;
    os << ",cutoff,term_count,partial_sum,target,defect,tail_estimate\n";
    os << to_string(r.kind);
    for (const auto& p : r.parameters) os << ',' << csv_number(p.second);
    os << ',' << csv_number(r.cutoff) << ',' << r.term_count << ',' << csv_number(r.partial_sum) << ','
       << csv_number(r.target) << ',' << csv_number(r.defect) << ',' << csv_number(r.tail_estimate)
       << '\n';
    return os.str();
}

std::string spectrum_to_json(const ParameterList& parameters, double cutoff,
                             const std::vector<GeodesicRecord>& records) {
    Json j;
    j["parameters"] = parameters_json(parameters);
    j["cutoff"] = cutoff;
    j["count"] = records.size();
    Json rows = Json::array();
    for (const auto& r : records) {
        rows.push_back({{"p", r.slope.p}, {"q", r.slope.q}, {"trace", r.trace}, {"length", r.length}});
    }
    j["records"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string spectrum_to_csv(const std::vector<GeodesicRecord>& records) {
    std::ostringstream os;
    os << "p,q,trace,length\n";
    for (const auto& r : records) {
        os << r.slope.p << ',' << r.slope.q << ',' << csv_number(r.trace) << ',' << csv_number(r.length)
           << '\n';
    }
    return os.str();
}

std::string terms_to_json(const IdentityReport& report, const std::vector<GeodesicRecord>& records,
                          const std::vector<double>& terms) {
    Json j = report_json(report);
    Json rows = Json::array();
    CompensatedSum sum;
    for (std::size_t i = 0; i < records.size(); ++i) {
        sum.add(terms[i]);
        rows.push_back({{"p", records[i].slope.p},
                        {"q", records[i].slope.q},
                        {"length", records[i].length},
                        {"term", terms[i]},
                        {"partial_sum", sum.value()}});
    }
    j["terms"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string terms_to_csv(const std::vector<GeodesicRecord>& records, const std::vector<double>& terms) {
    std::ostringstream os;
    os << "p,q,length,term,partial_sum\n";
    CompensatedSum sum;
    for (std::size_t i = 0; i < records.size(); ++i) {
        sum.add(terms[i]);
        os << records[i].slope.p << ',' << records[i].slope.q << ',' << csv_number(records[i].length)
           << ',' << csv_number(terms[i]) << ',' << csv_number(sum.value()) << '\n';
    }
    return os.str();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "param_name,param_value,cutoff,term_count,partial_sum,defect,tail_estimate\n";
    for (const auto& r : rows) {
        os << r.param_name << ',' << csv_number(r.param_value) << ',' << csv_number(r.cutoff) << ','
           << r.term_count << ',' << csv_number(r.partial_sum) << ',' << csv_number(r.defect) << ','
           << csv_number(r.tail_estimate) << '\n';
    }
    return os.str();
}

}  // namespace surfid
