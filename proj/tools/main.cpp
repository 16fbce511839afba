// Command line surface for the djkm library: reduce differentials, emit psi
// and P-family tables, expand the generating-function series, and run the
// bracket verification sweeps.  Output is deterministic: fixed key order in
// JSON, ascending row order in CSV and LaTeX.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "djkm/extension.hpp"
#include "djkm/pfamilies.hpp"

using json = nlohmann::ordered_json;
using namespace djkm;

namespace {

constexpr const char* kPsiIndexing =
    "psi(s) = reduce(t^(s-2)*u dt) with s = i+j; the window s in {1,0,-1,-2} "
    "yields the basis class omega_(s-2), not omega_s";

struct Options {
    std::string format = "json";
    std::string c_text;

    std::optional<Rational> c0;

    void resolve() {
        if (c_text.empty()) return;
        Rational v = Rational::parse(c_text);
        if (v == Rational(1) || v == Rational(-1))
            throw std::domain_error("c must not be 1 or -1 (degenerate curve)");
        c0 = v;
    }

    std::string show(const RatFuncC& f, bool latex) const {
        if (c0) return f.eval(*c0).str();
        return latex ? f.tex() : f.str();
    }
};

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "latex"}))
        ->capture_default_str();
    sub->add_option("--c", opt.c_text, "Specialize c to a rational value (not 1 or -1)");
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

const char* const kOmegaNames[5] = {"omega0", "omega_m1", "omega_m2", "omega_m3", "omega_m4"};
const char* const kOmegaTex[5] = {"\\omega_0", "\\omega_{-1}", "\\omega_{-2}", "\\omega_{-3}",
                                  "\\omega_{-4}"};

json omega_to_json(const OmegaClass& w, const Options& opt) {
    json obj = json::object();
    for (int i = 0; i < 5; ++i) obj[kOmegaNames[i]] = opt.show(w.coords()[i], false);
    return obj;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void latex_table(std::ostream& os, const std::string& colspec,
                 const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    os << "\\begin{tabular}{" << colspec << "}\n";
    for (size_t i = 0; i < header.size(); ++i) os << (i ? " & " : "") << header[i];
    os << " \\\\\n\\hline\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? " & " : "") << row[i];
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
}

int run_reduce(const std::string& expr, const std::string& dexpr, const Options& opt) {
    CurveSpec spec = CurveSpec::djkm();
    RingElem f = RingElem::parse(expr);
    RingElem g = RingElem::parse(dexpr);
    OmegaClass w = cocycle(f, g, spec);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "reduce";
        doc["expr"] = f.str();
        doc["d"] = g.str();
        if (opt.c0) doc["c"] = opt.c0->str();
        doc["result"] = omega_to_json(w, opt);
        emit(doc);
    } else if (opt.format == "csv") {
        for (int i = 0; i < 5; ++i) std::cout << (i ? "," : "") << opt.show(w.coords()[i], false);
        std::cout << "\n";
    } else {
        std::vector<std::string> header = {"expression"};
        for (const char* name : kOmegaTex) header.push_back(std::string("$") + name + "$");
        std::vector<std::string> row = {"$" + expr + "\\,d(" + dexpr + ")$"};
        for (int i = 0; i < 5; ++i) row.push_back("$" + opt.show(w.coords()[i], true) + "$");
        latex_table(std::cout, "l|ccccc", header, {row});
    }
    return 0;
}

int run_psi(int smin, int smax, const Options& opt) {
    if (smin > smax) throw std::invalid_argument("smin must not exceed smax");
    std::vector<PsiValue> values;
    for (int s = smin; s <= smax; ++s) values.push_back(psi(s));
    if (opt.format == "json") {
        json doc;
        doc["command"] = "psi";
        doc["smin"] = smin;
        doc["smax"] = smax;
        if (opt.c0) doc["c"] = opt.c0->str();
        doc["rows"] = json::array();
        for (const PsiValue& v : values) {
            json row;
            row["s"] = v.s;
            for (int i = 0; i < 5; ++i) row[kOmegaNames[i]] = opt.show(v.value.coords()[i], false);
            doc["rows"].push_back(row);
        }
        doc["metadata"] = {{"psi_indexing", kPsiIndexing}};
        emit(doc);
    } else if (opt.format == "csv") {
        for (const PsiValue& v : values) {
            std::cout << v.s;
            for (int i = 0; i < 5; ++i) std::cout << "," << opt.show(v.value.coords()[i], false);
            std::cout << "\n";
        }
    } else {
        std::vector<std::string> header = {"$s$"};
        for (const char* name : kOmegaTex) header.push_back(std::string("$") + name + "$");
        std::vector<std::vector<std::string>> rows;
        for (const PsiValue& v : values) {
            std::vector<std::string> row = {std::to_string(v.s)};
            for (int i = 0; i < 5; ++i) row.push_back("$" + opt.show(v.value.coords()[i], true) + "$");
            rows.push_back(row);
        }
        latex_table(std::cout, "r|ccccc", header, rows);
    }
    return 0;
}

int run_pfamily(int family, int kmax, const Options& opt) {
    PFamilyTable table = pfamily_recursion(family, kmax);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "pfamily";
        doc["family"] = family;
        doc["kmax"] = kmax;
        if (opt.c0) doc["c"] = opt.c0->str();
        doc["rows"] = json::array();
        for (const auto& [k, value] : table.entries)
            doc["rows"].push_back({{"k", k}, {"value", opt.show(value, false)}});
        emit(doc);
    } else if (opt.format == "csv") {
        for (const auto& [k, value] : table.entries)
            std::cout << family << "," << k << "," << opt.show(value, false) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, value] : table.entries)
            rows.push_back({std::to_string(k), "$" + opt.show(value, true) + "$"});
        latex_table(std::cout, "r|l",
                    {"$k$", "$P_{" + std::to_string(family) + ",k}(c)$"}, rows);
    }
    return 0;
}

int run_gegenbauer(const std::string& lambda_text, int nmax, const Options& opt) {
    Rational lambda = Rational::parse(lambda_text);
    GegenbauerTable table = gegenbauer(lambda, nmax);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "gegenbauer";
        doc["lambda"] = lambda.str();
        doc["nmax"] = nmax;
        if (opt.c0) doc["c"] = opt.c0->str();
        doc["rows"] = json::array();
        for (int n = 0; n <= nmax; ++n)
            doc["rows"].push_back({{"n", n}, {"value", opt.show(RatFuncC(table.entries[n]), false)}});
        emit(doc);
    } else if (opt.format == "csv") {
        for (int n = 0; n <= nmax; ++n)
            std::cout << n << "," << opt.show(RatFuncC(table.entries[n]), false) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (int n = 0; n <= nmax; ++n)
            rows.push_back({std::to_string(n), "$" + opt.show(RatFuncC(table.entries[n]), true) + "$"});
        latex_table(std::cout, "r|l", {"$n$", "$Q_n(c)$"}, rows);
    }
    return 0;
}

int run_series(int family, int N, const Options& opt) {
    PowerSeriesZ s = pfamily_series(family, N);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "series";
        doc["family"] = family;
        doc["N"] = N;
        if (opt.c0) doc["c"] = opt.c0->str();
        doc["terms"] = json::array();
        for (const auto& [k, coeff] : s.terms())
            doc["terms"].push_back({{"k", k}, {"coeff", opt.show(coeff, false)}});
        emit(doc);
    } else if (opt.format == "csv") {
        for (const auto& [k, coeff] : s.terms())
            std::cout << k << "," << opt.show(coeff, false) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, coeff] : s.terms())
            rows.push_back({std::to_string(k), "$" + opt.show(coeff, true) + "$"});
        latex_table(std::cout, "r|l", {"$k$", "coefficient"}, rows);
    }
    return 0;
}

int run_verify(int window, const std::string& checks_text, const std::string& algebra,
               const Options& opt) {
    std::vector<std::string> checks;
    if (checks_text == "all") {
        checks = {"antisymmetry", "jacobi", "agreement", "sigma", "grading"};
    } else {
        std::istringstream in(checks_text);
        std::string item;
        while (std::getline(in, item, ','))
            if (!item.empty()) checks.push_back(item);
        if (checks.empty()) throw std::invalid_argument("no checks requested");
    }
    SimpleLieAlgebra L = SimpleLieAlgebra::sl2();
    if (algebra != "sl2") {
        std::ifstream file(algebra);
        if (!file) throw std::invalid_argument("cannot open algebra file: " + algebra);
        std::stringstream buffer;
        buffer << file.rdbuf();
        L = SimpleLieAlgebra::from_text(buffer.str());
    }
    CurveSpec spec = CurveSpec::djkm();
    VerifyReport report = verify(L, window, checks, spec);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "verify";
        doc["algebra"] = algebra;
        doc["window"] = window;
        doc["ok"] = report.ok;
        doc["checks"] = json::array();
        for (const CheckResult& c : report.checks)
            doc["checks"].push_back({{"name", c.name},
                                     {"cases", c.cases},
                                     {"failures", c.failures},
                                     {"firstCounterexample", c.first_counterexample}});
        doc["metadata"] = {{"form", L.custom_form() ? "custom" : "killing"},
                           {"psi_indexing", kPsiIndexing}};
        emit(doc);
    } else if (opt.format == "csv") {
        for (const CheckResult& c : report.checks)
            std::cout << c.name << "," << c.cases << "," << c.failures << ","
                      << csv_quote(c.first_counterexample) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const CheckResult& c : report.checks)
            rows.push_back({c.name, std::to_string(c.cases), std::to_string(c.failures),
                            c.first_counterexample});
        latex_table(std::cout, "l|rrl", {"check", "cases", "failures", "counterexample"}, rows);
    }
    return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the DJKM current algebra and its universal central extension"};
    app.require_subcommand(1);
    Options opt;

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce f d(g) to the omega basis");
    std::string expr, dexpr = "t";
    reduce_cmd->add_option("--expr", expr, "Ring element f, e.g. \"t^4*u\"")->required();
    reduce_cmd->add_option("--d", dexpr, "Ring element g of d(g)")->capture_default_str();
    add_common(reduce_cmd, opt);

    auto* psi_cmd = app.add_subcommand("psi", "Central psi values for s = smin..smax");
    int smin = -6, smax = 6;
    psi_cmd->add_option("--smin", smin, "Lowest s")->capture_default_str();
    psi_cmd->add_option("--smax", smax, "Highest s")->capture_default_str();
    add_common(psi_cmd, opt);

    auto* pfamily_cmd = app.add_subcommand("pfamily", "P-family table by recursion");
    int family = -4, kmax = 10;
    pfamily_cmd->add_option("--family", family, "Family index: -1, -2, -3, or -4")->required();
    pfamily_cmd->add_option("--kmax", kmax, "Highest k")->capture_default_str();
    add_common(pfamily_cmd, opt);

    auto* geg_cmd = app.add_subcommand("gegenbauer", "Gegenbauer polynomial table");
    std::string lambda = "-1/2";
    int nmax = 8;
    geg_cmd->add_option("--lambda", lambda, "Rational parameter")->capture_default_str();
    geg_cmd->add_option("--nmax", nmax, "Highest n")->capture_default_str();
    add_common(geg_cmd, opt);

    auto* series_cmd = app.add_subcommand("series", "P-family generating function by series");
    int sfamily = -4, N = 16;
    series_cmd->add_option("--family", sfamily, "Family index: -1, -2, -3, or -4")->required();
    series_cmd->add_option("--N", N, "Truncation order")
        ->envname("DJKM_TRUNCATION")
        ->capture_default_str();
    add_common(series_cmd, opt);

    auto* verify_cmd = app.add_subcommand("verify", "Bracket verification sweeps");
    int window = 4;
    std::string checks = "all", algebra = "sl2";
    verify_cmd->add_option("--window", window, "Loop exponent window [-w, w]")
        ->capture_default_str();
    verify_cmd->add_option("--checks", checks,
                           "Comma list of antisymmetry,jacobi,agreement,sigma,grading or all")
        ->capture_default_str();
    verify_cmd->add_option("--algebra", algebra, "sl2 or a structure-constant file path")
        ->capture_default_str();
    add_common(verify_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        opt.resolve();
        if (app.got_subcommand(reduce_cmd)) return run_reduce(expr, dexpr, opt);
        if (app.got_subcommand(psi_cmd)) return run_psi(smin, smax, opt);
        if (app.got_subcommand(pfamily_cmd)) return run_pfamily(family, kmax, opt);
        if (app.got_subcommand(geg_cmd)) return run_gegenbauer(lambda, nmax, opt);
        if (app.got_subcommand(series_cmd)) return run_series(sfamily, N, opt);
        if (app.got_subcommand(verify_cmd)) return run_verify(window, checks, algebra, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
