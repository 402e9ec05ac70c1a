#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ddhooks/asymptotics.hpp"
#include "ddhooks/error.hpp"
#include "ddhooks/poly.hpp"
#include "ddhooks/stats.hpp"
#include "ddhooks/verify.hpp"

namespace ddhooks {

using Json = nlohmann::ordered_json;

/* Decimal string with 15 significant digits; "inf"/"nan" pass through. */
std::string real_string(Real v);

/* Coefficients as "p/q" strings, lowest degree first. */
Json poly_json(const XPolynomial& p);

Json distribution_json(const DistributionTable& d);
/* Columns value,count,probability. */
std::string distribution_csv(const DistributionTable& d);

/* Comparison of an exact quantity with its asymptotic estimate, both in log space. */
struct ComparisonRow {
    int t = 0;
    int n = 0;
    std::string x;  // "p/q", or the quantity name for moment tables
    Real log_exact = 0;
    Real log_estimate = 0;

    Real log_ratio() const { return log_exact - log_estimate; }
};
Json comparison_json(const std::vector<ComparisonRow>& rows);
/* Columns t,n,x,exact,estimate,log_ratio. */
std::string comparison_csv(const std::vector<ComparisonRow>& rows);

Json check_results_json(const std::vector<CheckResult>& results);
/* Columns name,t,cases,failures,first_failure. */
std::string check_results_csv(const std::vector<CheckResult>& results);

/* {code, message, context} */
Json error_json(const Error& e);
Json error_json(const std::string& code, const std::string& message, const std::string& context = {});

/* Quotes a CSV field when it contains a separator, quote or newline. */
std::string csv_field(const std::string& s);

}  // namespace ddhooks
