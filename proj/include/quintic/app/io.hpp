#pragma once

// Request and report types for the command-line surface, with their JSON and
// text encodings.
//
// Complex numbers in text are RE, RE+IMi, RE-IMi or IMi (no spaces,
// scientific notation allowed). In JSON they are {"re": .., "im": ..}.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quintic/complex_branch.hpp"

namespace quintic::app {

using Json = nlohmann::ordered_json;

/// Malformed input or an invalid request; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Form { BringJerrard, Form1, Form2, Form3 };
enum class Method { Radical, Trig, Both };
enum class OutputFormat { Json, Text, Csv };

std::string_view to_string(Form f);
std::string_view to_string(Method m);
Form parse_form(std::string_view s);
Method parse_method(std::string_view s);
OutputFormat parse_format(std::string_view s);

Complex parse_complex(std::string_view text);
std::string format_complex(Complex z, int decimals = 10);

struct SolveRequest {
    Form form = Form::Form1;
    Complex d1{};
    Complex d0{};
    Complex a{};
    Complex lambda{};
    double xi = 0.0;
    double theta = 0.0;
    Method method = Method::Both;
    double tol = 1e-12;
    int max_iter = 25;
    bool verify = false;

    bool operator==(const SolveRequest&) const = default;
};

/// Throws UsageError when the request violates its invariants.
void validate(const SolveRequest& req);

struct RootReport {
    Complex value;
    double residual = 0.0;
    std::string method;
    std::optional<int> k;
    std::optional<int> iterations;
    std::optional<double> certified_bound;

    bool operator==(const RootReport&) const = default;
};

struct FormulaReport {
    Complex value;
    double abs_err = 0.0;
    double rel_err = 0.0;

    bool operator==(const FormulaReport&) const = default;
};

struct OracleReport {
    bool matched = false;
    double max_distance = 0.0;

    bool operator==(const OracleReport&) const = default;
};

struct TraceRow {
    Complex value;
    double abs_err = 0.0;
    double rel_err = 0.0;

    bool operator==(const TraceRow&) const = default;
};

/// Iterates of the radical algorithm in the requested variable and in the
/// Form-3 variable y, with errors against the converged root.
struct TraceReport {
    std::string variable;
    std::vector<TraceRow> rows;
    std::vector<TraceRow> form3_rows;

    bool operator==(const TraceReport&) const = default;
};

struct Form3Report {
    double xi = 0.0;
    double theta = 0.0;
    bool conjugated = false;
    /// Form-3 roots y_k (k = -2..2) when the trigonometric solver ran.
    std::vector<Complex> roots;

    bool operator==(const Form3Report&) const = default;
};

struct SolveReport {
    SolveRequest request;
    std::string status = "ok";
    std::optional<std::string> error;
    std::string variable;
    std::optional<Form3Report> form3;
    std::vector<RootReport> roots;
    std::optional<FormulaReport> formula_root;
    std::optional<TraceReport> trace;
    std::optional<OracleReport> oracle;
    double timing_ms = 0.0;

    bool operator==(const SolveReport&) const = default;
};

Json to_json(Complex z);
Json to_json(const SolveRequest& req);
Json to_json(const SolveReport& report);

/// Accepts a number, a complex string or an {"re", "im"} object.
Complex complex_from_json(const Json& j);

/// Missing optional fields take their values from `defaults`.
SolveRequest request_from_json(const Json& j, const SolveRequest& defaults = {});
SolveReport report_from_json(const Json& j);

std::string render_text(const SolveReport& report);
std::string render_csv(const SolveReport& report);

}  // namespace quintic::app
