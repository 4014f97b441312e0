// Command-line front end: computes equivariant Poincare series of moduli of
// real/quaternionic (and complex) bundles by recursion, closed formula or
// classifying-space product formula, compares methods, runs the verification
// suite and emits maximality tables. All output is exact; no floating point.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kps/engine.hpp"
#include "kps/verify.hpp"

using json = nlohmann::ordered_json;
using namespace kps;

namespace {

struct RequestFlags {
    std::string tau = "complex";
    long genus = 2;
    long n = 0;
    long a = 1;
    long rank = 1;
    long degree = 0;
    std::string method = "closed";
    long order = kDefaultOrder;
};

void add_request_flags(CLI::App* cmd, RequestFlags& rf, bool with_method) {
    cmd->add_option("--tau", rf.tau, "series family: complex, real or quat")
        ->check(CLI::IsMember({"complex", "real", "quat"}))
        ->required();
    cmd->add_option("--genus", rf.genus, "genus g >= 2")->required();
    cmd->add_option("--n", rf.n, "number of real circles (ignored for complex)");
    cmd->add_option("--a", rf.a, "orientability index of the quotient, 0 or 1");
    cmd->add_option("--rank", rf.rank, "rank r >= 1")->required();
    cmd->add_option("--degree", rf.degree, "degree d");
    if (with_method)
        cmd->add_option("--method", rf.method, "recursion, closed, or product (stack series)")
            ->check(CLI::IsMember({"recursion", "closed", "product"}));
    cmd->add_option("--order", rf.order, "truncation order in t-degrees");
}

SeriesRequest to_request(const RequestFlags& rf) {
    SeriesRequest req;
    req.family = rf.tau == "complex" ? SeriesCase::Complex
                 : rf.tau == "real"  ? SeriesCase::RealTau
                                     : SeriesCase::QuatTau;
    req.kt = {rf.genus, rf.n, rf.a};
    req.rank = rf.rank;
    req.degree = rf.degree;
    req.method = rf.method == "recursion" ? Method::Recursion
                 : rf.method == "closed"  ? Method::Closed
                                          : Method::ProductFormula;
    req.order = rf.order;
    return req;
}

json request_json(const RequestFlags& rf, bool with_method) {
    json req;
    req["tau"] = rf.tau;
    req["genus"] = rf.genus;
    req["n"] = rf.n;
    req["a"] = rf.a;
    req["rank"] = rf.rank;
    req["degree"] = rf.degree;
    if (with_method) req["method"] = rf.method;
    req["order"] = rf.order;
    return req;
}

json coeff_strings(const ScaledSeries& s) {
    json arr = json::array();
    for (long k = 0; k <= s.order() * s.scale(); ++k) arr.push_back(s.coeff_u(k).str());
    return arr;
}

json poly_strings(const Poly& p) {
    json arr = json::array();
    for (long k = 0; k <= std::max<long>(p.degree(), 0); ++k) arr.push_back(p.coeff(k).str());
    return arr;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int run_series(const RequestFlags& rf, const std::string& format, const std::string& out_path) {
    const SeriesRequest req = to_request(rf);
    const std::string why = request_violation(req);
    if (!why.empty()) {
        std::cerr << "error: " << why << "\n";
        return 2;
    }
    const auto t0 = std::chrono::steady_clock::now();
    SeriesResult c = compute_series(req);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();

    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    if (format == "csv") {
        os << "degree,coefficient\n";
        for (long k = 0; k <= c.series.order(); ++k)
            os << k << "," << c.series.coeff_t(k).str() << "\n";
        return 0;
    }
    json rec;
    rec["request"] = request_json(rf, true);
    rec["scale"] = c.series.scale();
    rec["runtime_ms"] = ms;
    rec["coefficients"] = coeff_strings(c.series);
    if (c.closed_form) {
        json rfj;
        rfj["numerator"] = poly_strings(c.closed_form->num());
        rfj["denominator"] = poly_strings(c.closed_form->den());
        rec["rational_fn"] = rfj;
    }
    os << rec.dump() << "\n";
    return 0;
}

int run_compare(const RequestFlags& rf, const std::string& out_path) {
    SeriesRequest req = to_request(rf);
    const std::string why = request_violation(req);
    if (!why.empty()) {
        std::cerr << "error: " << why << "\n";
        return 2;
    }
    req.method = Method::Recursion;
    const ScaledSeries recursive = compute_series(req).series;
    req.method = Method::Closed;
    const ScaledSeries expanded = compute_series(req).series;

    json rec;
    rec["request"] = request_json(rf, false);
    const long mismatch = recursive.first_mismatch(expanded);
    rec["match"] = mismatch < 0;
    if (mismatch >= 0) {
        json w;
        w["degree"] = mismatch;
        w["recursion"] = recursive.coeff_u(mismatch).str();
        w["closed"] = expanded.coeff_u(mismatch).str();
        rec["first_mismatch"] = w;
    }
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    os << rec.dump() << "\n";
    return mismatch < 0 ? 0 : 1;
}

int run_verify(const std::string& filter, const std::string& out_path) {
    const auto reports = default_suite(filter);
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    write_jsonl(os, reports);
    long fails = 0;
    for (const auto& r : reports)
        if (!r.pass) ++fails;
    std::cerr << reports.size() << " checks, " << fails << " failed\n";
    return fails == 0 ? 0 : 1;
}

int run_table(long gmin, long gmax, long rmin, long rmax, const std::string& format,
              const std::string& out_path) {
    if (gmin < 2 || gmax < gmin || rmin < 2 || rmax < rmin) {
        std::cerr << "error: need 2 <= gmin <= gmax and 2 <= rmin <= rmax\n";
        return 2;
    }
    struct Row {
        long g, r, d;
        BigRat complex_total, real_total;
        bool maximal;
    };
    std::vector<Row> rows;
    for (long g = gmin; g <= gmax; ++g)
        for (long r = rmin; r <= rmax; ++r)
            for (long d = 1; d < r; ++d) {
                if (std::gcd(r, d) != 1) continue;
                Row row;
                row.g = g;
                row.r = r;
                row.d = d;
                row.complex_total = total_betti_complex_moduli(g, r, d);
                RationalFn f = rf_mul(RationalFn(Poly({1, -1}, Var::t), Poly({1}, Var::t), 1),
                                      p_tau_closed({g, g + 1, 0}, BundleKind::Real, r, d));
                row.real_total = pow2(static_cast<unsigned long>(g)) * limit_at_one(f);
                row.maximal = row.complex_total == row.real_total;
                rows.push_back(std::move(row));
            }

    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    if (format == "json") {
        for (const auto& row : rows) {
            json j;
            j["g"] = row.g;
            j["r"] = row.r;
            j["d"] = row.d;
            j["complex_total"] = row.complex_total.str();
            j["real_total_x2g"] = row.real_total.str();
            j["maximal"] = row.maximal;
            os << j.dump() << "\n";
        }
    } else {
        os << "g,r,d,complex_total,real_total_x2g,maximal\n";
        for (const auto& row : rows)
            os << row.g << "," << row.r << "," << row.d << "," << row.complex_total.str() << ","
               << row.real_total.str() << "," << (row.maximal ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant Poincare series of moduli of vector bundles over Klein surfaces"};
    app.require_subcommand(1);

    RequestFlags series_rf;
    std::string series_format = "json", series_out;
    auto* series_cmd = app.add_subcommand("series", "compute one series / rational function");
    add_request_flags(series_cmd, series_rf, true);
    series_cmd->add_option("--format", series_format)->check(CLI::IsMember({"json", "csv"}));
    series_cmd->add_option("--out", series_out, "write to file instead of stdout");

    RequestFlags compare_rf;
    std::string compare_out;
    auto* compare_cmd =
        app.add_subcommand("compare", "recursion vs closed formula, coefficient by coefficient");
    add_request_flags(compare_cmd, compare_rf, false);
    compare_cmd->add_option("--out", compare_out);

    std::string verify_filter, verify_out;
    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite, JSONL report");
    verify_cmd->add_option("--filter", verify_filter, "keep checks whose id contains this");
    verify_cmd->add_option("--out", verify_out);

    long gmin = 2, gmax = 3, rmin = 2, rmax = 4;
    std::string table_format = "csv", table_out;
    auto* table_cmd = app.add_subcommand("table", "maximality table over coprime (g, r, d)");
    table_cmd->add_option("--gmin", gmin);
    table_cmd->add_option("--gmax", gmax);
    table_cmd->add_option("--rmin", rmin);
    table_cmd->add_option("--rmax", rmax);
    table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));
    table_cmd->add_option("--out", table_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (series_cmd->parsed()) return run_series(series_rf, series_format, series_out);
        if (compare_cmd->parsed()) return run_compare(compare_rf, compare_out);
        if (verify_cmd->parsed()) return run_verify(verify_filter, verify_out);
        if (table_cmd->parsed())
            return run_table(gmin, gmax, rmin, rmax, table_format, table_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
