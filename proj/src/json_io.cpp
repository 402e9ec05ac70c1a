#include "ddhooks/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ddhooks {

std::string real_string(Real v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15Lg", v);
    return buf;
}

Json poly_json(const XPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(rational_string(c));
    return a;
}

Json distribution_json(const DistributionTable& d) {
    Json rows = Json::array();
    for (const auto& [v, k] : d.counts)
        rows.push_back({{"value", v}, {"count", k.get_str()}, {"probability", rational_string(d.mass.at(v))}});
    const auto m = exact_mean_variance(d);
    return {{"size", d.n},
            {"class", to_string(d.cls)},
            {"stat", to_string(d.stat)},
            {"total_count", d.total_count.get_str()},
            {"source", d.source},
            {"mean", rational_string(m.mean)},
            {"variance", rational_string(m.variance)},
            {"mass", rows}};
}

std::string distribution_csv(const DistributionTable& d) {
    std::ostringstream os;
    os << "value,count,probability\n";
    for (const auto& [v, k] : d.counts) os << v << ',' << k.get_str() << ',' << rational_string(d.mass.at(v)) << '\n';
    return os.str();
}

Json comparison_json(const std::vector<ComparisonRow>& rows) {
    Json a = Json::array();
    for (const auto& r : rows)
        a.push_back({{"t", r.t},
                     {"n", r.n},
                     {"x", r.x},
                     {"exact", real_string(std::exp(r.log_exact))},
                     {"estimate", real_string(std::exp(r.log_estimate))},
                     {"log_ratio", real_string(r.log_ratio())}});
    return a;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
    std::ostringstream os;
    os << "t,n,x,exact,estimate,log_ratio\n";
    for (const auto& r : rows)
        os << r.t << ',' << r.n << ',' << csv_field(r.x) << ',' << real_string(std::exp(r.log_exact)) << ','
           << real_string(std::exp(r.log_estimate)) << ',' << real_string(r.log_ratio()) << '\n';
    return os.str();
}

Json check_results_json(const std::vector<CheckResult>& results) {
    Json a = Json::array();
    for (const auto& r : results)
        a.push_back({{"name", r.name},
                     {"t", r.t},
                     {"cases", r.cases},
                     {"failures", r.failures},
                     {"first_failure", r.first_failure},
                     {"passed", r.passed()}});
    return a;
}

std::string check_results_csv(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    os << "name,t,cases,failures,first_failure\n";
    for (const auto& r : results)
        os << r.name << ',' << r.t << ',' << r.cases << ',' << r.failures << ',' << csv_field(r.first_failure)
           << '\n';
    return os.str();
}

Json error_json(const Error& e) { return error_json(e.code(), e.what(), e.context()); }

Json error_json(const std::string& code, const std::string& message, const std::string& context) {
    return {{"code", code}, {"message", message}, {"context", context}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace ddhooks
