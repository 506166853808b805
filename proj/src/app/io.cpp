#include "quintic/app/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <iterator>
#include <numbers>

#include <fmt/format.h>

namespace quintic::app {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw UsageError("invalid complex number '" + std::string(whole) + "'");
    }
    return value;
}

// Coefficient of i in "+", "-", "+2.5", "-1e-3", ...
double parse_imag(std::string_view s, std::string_view whole) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, whole);
}

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json to_json(const TraceRow& row) {
    Json j = app::to_json(row.value);
    j["abs_err"] = row.abs_err;
    j["rel_err"] = row.rel_err;
    return j;
}

TraceRow trace_row_from_json(const Json& j) {
    return {complex_from_json(j), j.at("abs_err").get<double>(), j.at("rel_err").get<double>()};
}

std::vector<TraceRow> rows_from_json(const Json& j) {
    std::vector<TraceRow> rows;
    for (const auto& item : j) rows.push_back(trace_row_from_json(item));
    return rows;
}

template <typename T>
std::optional<T> optional_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

const char* variable_label(Form f) {
    switch (f) {
    case Form::BringJerrard: return "v";
    case Form::Form1: return "x";
    case Form::Form2: return "z";
    case Form::Form3: return "y";
    }
    return "x";
}

}  // namespace

std::string_view to_string(Form f) {
    switch (f) {
    case Form::BringJerrard: return "bring-jerrard";
    case Form::Form1: return "form1";
    case Form::Form2: return "form2";
    case Form::Form3: return "form3";
    }
    return "form1";
}

std::string_view to_string(Method m) {
    switch (m) {
    case Method::Radical: return "radical";
    case Method::Trig: return "trig";
    case Method::Both: return "both";
    }
    return "both";
}

Form parse_form(std::string_view s) {
    if (s == "bring-jerrard") return Form::BringJerrard;
    if (s == "form1") return Form::Form1;
    if (s == "form2") return Form::Form2;
    if (s == "form3") return Form::Form3;
    throw UsageError("unknown form '" + std::string(s) + "'");
}

Method parse_method(std::string_view s) {
    if (s == "radical") return Method::Radical;
    if (s == "trig") return Method::Trig;
    if (s == "both") return Method::Both;
    throw UsageError("unknown method '" + std::string(s) + "'");
}

OutputFormat parse_format(std::string_view s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "text") return OutputFormat::Text;
    if (s == "csv") return OutputFormat::Csv;
    throw UsageError("unknown format '" + std::string(s) + "'");
}

Complex parse_complex(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw UsageError("empty complex number");
    if (text.back() != 'i') return {parse_real(text, whole), 0.0};

    text.remove_suffix(1);
    // The real/imaginary split is the last sign that is not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t pos = 1; pos < text.size(); ++pos) {
        const char c = text[pos];
        const char prev = text[pos - 1];
        if ((c == '+' || c == '-') && prev != 'e' && prev != 'E') split = pos;
    }
    if (split == std::string_view::npos) return {0.0, parse_imag(text, whole)};
    return {parse_real(text.substr(0, split), whole), parse_imag(text.substr(split), whole)};
}

std::string format_complex(Complex z, int decimals) {
    return fmt::format("{:.{}f}{:+.{}f}i", z.real(), decimals, z.imag(), decimals);
}

void validate(const SolveRequest& req) {
    if (!(req.tol >= 1e-15)) throw UsageError("tol must be at least 1e-15");
    if (req.max_iter < 1) throw UsageError("max_iter must be positive");
    switch (req.form) {
    case Form::BringJerrard: break;
    case Form::Form1:
        if (req.a == Complex{}) throw UsageError("a must be nonzero");
        break;
    case Form::Form2:
        if (req.lambda == Complex{}) throw UsageError("lambda must be nonzero");
        break;
    case Form::Form3:
        if (!(req.xi > 0.0)) throw UsageError("xi must be positive");
        if (!(req.theta >= 0.0 && req.theta <= std::numbers::pi / 5.0)) {
            throw UsageError("theta must lie in [0, pi/5]");
        }
        break;
    }
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const SolveRequest& req) {
    Json j;
    j["form"] = to_string(req.form);
    switch (req.form) {
    case Form::BringJerrard:
        j["d1"] = to_json(req.d1);
        j["d0"] = to_json(req.d0);
        break;
    case Form::Form1: j["a"] = to_json(req.a); break;
    case Form::Form2: j["lambda"] = to_json(req.lambda); break;
    case Form::Form3:
        j["xi"] = req.xi;
        j["theta"] = req.theta;
        break;
    }
    j["method"] = to_string(req.method);
    j["tol"] = req.tol;
    j["max_iter"] = req.max_iter;
    j["verify"] = req.verify;
    return j;
}

Json to_json(const SolveReport& report) {
    Json j;
    j["request"] = to_json(report.request);
    j["status"] = report.status;
    j["error"] = report.error ? Json(*report.error) : Json(nullptr);
    j["variable"] = report.variable;
    if (report.form3) {
        Json roots = Json::array();
        for (const Complex& y : report.form3->roots) roots.push_back(to_json(y));
        j["form3"] = {{"xi", report.form3->xi},
                      {"theta", report.form3->theta},
                      {"conjugated", report.form3->conjugated},
                      {"roots", roots}};
    } else {
        j["form3"] = nullptr;
    }
    Json roots = Json::array();
    for (const auto& r : report.roots) {
        Json item = to_json(r.value);
        item["residual"] = r.residual;
        item["method"] = r.method;
        item["k"] = optional_json(r.k);
        item["iterations"] = optional_json(r.iterations);
        item["certified_bound"] = optional_json(r.certified_bound);
        roots.push_back(item);
    }
    j["roots"] = roots;
    if (report.formula_root) {
        Json f = to_json(report.formula_root->value);
        f["abs_err"] = report.formula_root->abs_err;
        f["rel_err"] = report.formula_root->rel_err;
        j["formula_root"] = f;
    } else {
        j["formula_root"] = nullptr;
    }
    if (report.trace) {
        Json rows = Json::array();
        Json rows3 = Json::array();
        for (const auto& row : report.trace->rows) rows.push_back(to_json(row));
        for (const auto& row : report.trace->form3_rows) rows3.push_back(to_json(row));
        j["trace"] = {{"variable", report.trace->variable}, {"iterates", rows}, {"form3_iterates", rows3}};
    } else {
        j["trace"] = nullptr;
    }
    j["oracle"] = report.oracle ? Json{{"matched", report.oracle->matched},
                                       {"max_distance", report.oracle->max_distance}}
                                : Json(nullptr);
    j["timing_ms"] = report.timing_ms;
    return j;
}

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (j.is_object() && j.contains("re")) {
        return {j.at("re").get<double>(), j.contains("im") ? j.at("im").get<double>() : 0.0};
    }
    throw UsageError("expected a complex number, got " + j.dump());
}

SolveRequest request_from_json(const Json& j, const SolveRequest& defaults) {
    if (!j.is_object()) throw UsageError("request must be a JSON object");
    if (!j.contains("form")) throw UsageError("request is missing 'form'");
    SolveRequest req = defaults;
    req.form = parse_form(j.at("form").get<std::string>());
    const auto need = [&](const char* key) -> const Json& {
        if (!j.contains(key)) {
            throw UsageError(std::string("request for ") + std::string(to_string(req.form)) +
                             " is missing '" + key + "'");
        }
        return j.at(key);
    };
    try {
        switch (req.form) {
        case Form::BringJerrard:
            req.d1 = complex_from_json(need("d1"));
            req.d0 = complex_from_json(need("d0"));
            break;
        case Form::Form1: req.a = complex_from_json(need("a")); break;
        case Form::Form2: req.lambda = complex_from_json(need("lambda")); break;
        case Form::Form3:
            req.xi = need("xi").get<double>();
            req.theta = need("theta").get<double>();
            break;
        }
        if (j.contains("method")) req.method = parse_method(j.at("method").get<std::string>());
        if (j.contains("tol")) req.tol = j.at("tol").get<double>();
        if (j.contains("max_iter")) req.max_iter = j.at("max_iter").get<int>();
        if (j.contains("verify")) req.verify = j.at("verify").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed request field: ") + e.what());
    }
    validate(req);
    return req;
}

SolveReport report_from_json(const Json& j) {
    SolveReport report;
    report.request = request_from_json(j.at("request"));
    report.status = j.at("status").get<std::string>();
    report.error = optional_from_json<std::string>(j, "error");
    report.variable = j.at("variable").get<std::string>();
    if (!j.at("form3").is_null()) {
        const Json& f = j.at("form3");
        Form3Report f3{f.at("xi").get<double>(), f.at("theta").get<double>(),
                       f.at("conjugated").get<bool>(), {}};
        for (const auto& y : f.at("roots")) f3.roots.push_back(complex_from_json(y));
        report.form3 = f3;
    }
    for (const auto& item : j.at("roots")) {
        report.roots.push_back({complex_from_json(item), item.at("residual").get<double>(),
                                item.at("method").get<std::string>(),
                                optional_from_json<int>(item, "k"),
                                optional_from_json<int>(item, "iterations"),
                                optional_from_json<double>(item, "certified_bound")});
    }
    if (!j.at("formula_root").is_null()) {
        const Json& f = j.at("formula_root");
        report.formula_root = FormulaReport{complex_from_json(f), f.at("abs_err").get<double>(),
                                            f.at("rel_err").get<double>()};
    }
    if (!j.at("trace").is_null()) {
        const Json& t = j.at("trace");
        report.trace = TraceReport{t.at("variable").get<std::string>(),
                                   rows_from_json(t.at("iterates")),
                                   rows_from_json(t.at("form3_iterates"))};
    }
    if (!j.at("oracle").is_null()) {
        report.oracle = OracleReport{j.at("oracle").at("matched").get<bool>(),
                                     j.at("oracle").at("max_distance").get<double>()};
    }
    report.timing_ms = j.at("timing_ms").get<double>();
    return report;
}

std::string render_text(const SolveReport& report) {
    fmt::memory_buffer out;
    auto it = std::back_inserter(out);
    const SolveRequest& req = report.request;
    const std::string var = report.variable.empty() ? variable_label(req.form) : report.variable;
    switch (req.form) {
    case Form::BringJerrard:
        fmt::format_to(it, "Equation: v^5 + d1 v + d0 = 0   d1 = {}   d0 = {}\n",
                       format_complex(req.d1), format_complex(req.d0));
        break;
    case Form::Form1:
        fmt::format_to(it, "Equation: x^5 + x + a = 0   a = {}\n", format_complex(req.a));
        break;
    case Form::Form2:
        fmt::format_to(it, "Equation: (z^5 + z^4)/2 = lambda   lambda = {}\n",
                       format_complex(req.lambda));
        break;
    case Form::Form3:
        fmt::format_to(it, "Equation: (y^5 + u y^4)/2 = xi   xi = {:.10f}   theta = {:.10f}\n",
                       req.xi, req.theta);
        break;
    }
    if (report.form3) {
        fmt::format_to(it, "Form 3: xi = {:.10f}   theta = {:.10f}{}\n", report.form3->xi,
                       report.form3->theta, report.form3->conjugated ? "   (conjugate frame)" : "");
    }
    if (report.error) fmt::format_to(it, "Error: {}\n", *report.error);

    std::vector<const RootReport*> trig;
    for (const auto& r : report.roots) {
        if (r.method == "trig" || r.method == "direct") trig.push_back(&r);
    }
    if (!trig.empty()) {
        const bool with_y = report.form3 && report.form3->roots.size() == trig.size() && var != "y";
        fmt::format_to(it, "\n{}\n", trig.front()->method == "direct" ? "Closed-form roots"
                                                                      : "Trigonometric algorithm");
        if (with_y) {
            fmt::format_to(it, "{:>3}  {:<30}{:<30}{:>10}\n", "k", "y*_k", var + "*_k", "residual");
        } else {
            fmt::format_to(it, "{:>3}  {:<30}{:>10}\n", "k", var + "*_k", "residual");
        }
        for (std::size_t i = 0; i < trig.size(); ++i) {
            const auto& r = *trig[i];
            const std::string k = r.k ? std::to_string(*r.k) : "-";
            if (with_y) {
                fmt::format_to(it, "{:>3}  {:<30}{:<30}{:>10.2e}\n", k,
                               format_complex(report.form3->roots[i]), format_complex(r.value),
                               r.residual);
            } else {
                fmt::format_to(it, "{:>3}  {:<30}{:>10.2e}\n", k, format_complex(r.value), r.residual);
            }
        }
    }

    if (report.trace) {
        const auto table = [&](const std::string& name, const std::vector<TraceRow>& rows) {
            fmt::format_to(it, "{:>9}  {:<30}{:>12}{:>14}\n", "Iteration", name + "_n",
                           "|" + name + "_n-" + name + "*|", "|" + name + "_n/" + name + "*-1|");
            for (std::size_t n = 1; n < rows.size(); ++n) {
                fmt::format_to(it, "{:>9}  {:<30}{:>12.2e}{:>14.2e}\n", n,
                               format_complex(rows[n].value), rows[n].abs_err, rows[n].rel_err);
            }
        };
        fmt::format_to(it, "\nIteration of radicals\n");
        if (!report.trace->form3_rows.empty() && report.trace->variable != "y") {
            table("y", report.trace->form3_rows);
            fmt::format_to(it, "\n");
        }
        table(report.trace->variable, report.trace->rows);
        for (const auto& r : report.roots) {
            if (r.method != "radical") continue;
            fmt::format_to(it, "Converged {}* = {}   residual {:.2e}   certified bound {:.2e}\n",
                           report.trace->variable, format_complex(r.value), r.residual,
                           r.certified_bound.value_or(0.0));
        }
    }
    if (report.formula_root) {
        fmt::format_to(it, "Radical formula {}1 = {}   |{}1-{}*| = {:.2e}   |{}1/{}*-1| = {:.2e}\n",
                       var, format_complex(report.formula_root->value), var, var,
                       report.formula_root->abs_err, var, var, report.formula_root->rel_err);
    }
    if (report.oracle) {
        fmt::format_to(it, "Oracle: {} (max distance {:.2e})\n",
                       report.oracle->matched ? "matched" : "MISMATCH", report.oracle->max_distance);
    }
    return fmt::to_string(out);
}

std::string render_csv(const SolveReport& report) {
    fmt::memory_buffer out;
    auto it = std::back_inserter(out);
    fmt::format_to(it, "method,k,iterations,re,im,residual,certified_bound\n");
    for (const auto& r : report.roots) {
        fmt::format_to(it, "{},{},{},{:.17g},{:.17g},{:.17g},{}\n", r.method,
                       r.k ? std::to_string(*r.k) : "", r.iterations ? std::to_string(*r.iterations) : "",
                       r.value.real(), r.value.imag(), r.residual,
                       r.certified_bound ? fmt::format("{:.17g}", *r.certified_bound) : "");
    }
    return fmt::to_string(out);
}

}  // namespace quintic::app
