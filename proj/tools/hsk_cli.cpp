#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hsk/exactcore.hpp"
#include "hsk/multiplier.hpp"
#include "hsk/norms.hpp"
#include "hsk/schwarzian.hpp"
#include "hsk/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

// All floats render through one formatter so identical invocations give
// byte-identical output across formats.
std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fmt(const std::complex<double> &z)
{
    const double re = z.real() == 0.0 ? 0.0 : z.real();
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    return fmt(re) + (im < 0 ? "" : "+") + fmt(im) + "i";
}

json exact_value(const hsk::Rational &r)
{
    return json{{"kind", "exact"}, {"value", hsk::rational_to_string(r)}};
}

json float_value(double x, double tol)
{
    return json{{"kind", "float"}, {"value", fmt(x)}, {"tol", fmt(tol)}};
}

json float_value(double x) { return float_value(x, 0.0); }

struct Output {
    std::string path;

    void emit(const std::string &text) const
    {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open output path: " + path);
        }
        out << text;
    }
};

std::vector<hsk::Rational> parse_alpha_list(const std::string &text)
{
    std::vector<hsk::Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(hsk::parse_rational(item));
    }
    if (out.empty()) {
        throw std::invalid_argument("--alphas: empty list");
    }
    return out;
}

std::vector<std::pair<int, int>> parse_pq_list(const std::string &text)
{
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("--pq: expected p:q pairs, got '" + item + "'");
        }
        const int p = std::stoi(item.substr(0, colon));
        const int q = std::stoi(item.substr(colon + 1));
        if (p < 1 || q < 1) {
            throw std::invalid_argument("--pq: p and q must be >= 1");
        }
        out.emplace_back(p, q);
    }
    if (out.empty()) {
        throw std::invalid_argument("--pq: empty list");
    }
    return out;
}

int run_verify(const std::vector<std::string> &suites, int order_override,
               const std::string &format, const Output &out)
{
    std::vector<std::string> names;
    for (const auto &s : suites) {
        if (s == "all") {
            names = hsk::verify_suite_names();
            break;
        }
        names.push_back(s);
    }
    if (names.empty()) {
        names = hsk::verify_suite_names();
    }

    std::vector<hsk::VerifyReport> reports;
    for (const auto &n : names) {
        reports.push_back(hsk::run_verify_suite(n, order_override));
    }

    bool all_ok = true;
    if (format == "json") {
        json doc = json::array();
        for (const auto &rep : reports) {
            json checks = json::array();
            int passed = 0;
            for (const auto &c : rep.checks) {
                checks.push_back({{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
                passed += c.passed ? 1 : 0;
            }
            all_ok = all_ok && rep.all_passed();
            doc.push_back({{"suite", rep.suite},
                           {"passed", passed},
                           {"total", static_cast<int>(rep.checks.size())},
                           {"seconds", fmt(rep.seconds)},
                           {"checks", checks}});
        }
        out.emit(doc.dump(2) + "\n");
    } else {
        std::ostringstream txt;
        for (const auto &rep : reports) {
            int passed = 0;
            for (const auto &c : rep.checks) {
                txt << (c.passed ? "PASS" : "FAIL") << "  " << c.id;
                if (!c.detail.empty()) {
                    txt << "  (" << c.detail << ")";
                }
                txt << "\n";
                passed += c.passed ? 1 : 0;
            }
            all_ok = all_ok && rep.all_passed();
            txt << "suite " << rep.suite << ": " << passed << "/" << rep.checks.size()
                << " checks passed in " << fmt(rep.seconds) << " s\n";
        }
        out.emit(txt.str());
    }
    return all_ok ? 0 : 1;
}

int run_koebe(int p, int q, const std::string &eval_at, int series_order,
              const std::string &format, const Output &out)
{
    const auto cf = hsk::koebe_closed_form(p, q);
    json doc;
    doc["p"] = cf.p;
    doc["q"] = cf.q;
    doc["prefactor"] = exact_value(hsk::Rational(cf.prefactor));
    doc["monomial_power"] = cf.monomial_power;
    doc["pole_order"] = cf.pole_order;
    json cds = json::array();
    for (const auto &c : cf.cd) {
        cds.push_back(exact_value(c));
    }
    doc["C"] = cds;

    std::ostringstream txt;
    txt << "S^[" << p << "," << q << "] = " << cf.prefactor.get_str() << " z^"
        << cf.monomial_power << " (1-z^2)^-" << cf.pole_order << " * sum C_d z^(2d)\n";
    txt << "C =";
    for (const auto &c : cf.cd) {
        txt << " " << hsk::rational_to_string(c);
    }
    txt << "\n";

    if (!eval_at.empty()) {
        const auto comma = eval_at.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("--eval: expected re,im");
        }
        const std::complex<double> z(std::stod(eval_at.substr(0, comma)),
                                     std::stod(eval_at.substr(comma + 1)));
        if (std::abs(z) >= 1.0) {
            throw hsk::DomainError("koebe --eval: point must satisfy |z| < 1");
        }
        const auto v = cf.evaluate(z);
        doc["eval"] = {{"z", fmt(z)}, {"value", float_value(v.real(), 1e-14)},
                       {"value_imag", float_value(v.imag(), 1e-14)}};
        txt << "value at " << fmt(z) << " = " << fmt(v) << "\n";
    }
    if (series_order >= 0) {
        const auto s = cf.to_series(series_order);
        json coeffs = json::array();
        txt << "series:";
        for (int n = 0; n <= series_order; ++n) {
            coeffs.push_back(exact_value(s.at(n)));
            txt << " " << hsk::rational_to_string(s.at(n));
        }
        txt << "\n";
        doc["series"] = coeffs;
    }

    if (format == "json") {
        out.emit(doc.dump(2) + "\n");
    } else {
        out.emit(txt.str());
    }
    return 0;
}

int run_table(const std::string &alphas_text, const std::string &pq_text,
              const std::string &format, const Output &out)
{
    const auto alphas = parse_alpha_list(alphas_text);
    const auto pqs = parse_pq_list(pq_text);

    struct Row {
        hsk::Rational alpha;
        int p, q;
        hsk::Rational n_exact;
        double sqrt_n;
        hsk::Rational donaire_sq;
        hsk::Integer growth;
        double bloch;
    };
    std::vector<Row> rows;
    for (const auto &al : alphas) {
        for (const auto &[p, q] : pqs) {
            Row r;
            r.alpha = al;
            r.p = p;
            r.q = q;
            r.n_exact = hsk::sharp_constant(al, p, q);
            r.sqrt_n = std::sqrt(r.n_exact.get_d());
            const auto cb = hsk::classical_bounds(al, p, q);
            r.donaire_sq = cb.donaire_sq;
            r.growth = hsk::factorial(static_cast<unsigned long>(p + q - 1));
            r.bloch = std::sqrt(hsk::Rational(cb.bloch_sq).get_d());
            rows.push_back(std::move(r));
        }
    }

    if (format == "csv") {
        std::ostringstream csv;
        csv << "alpha,p,q,N_exact,sqrtN,donaire_sq,growth,bloch\n";
        for (const auto &r : rows) {
            csv << hsk::rational_to_string(r.alpha) << ',' << r.p << ',' << r.q << ','
                << hsk::rational_to_string(r.n_exact) << ',' << fmt(r.sqrt_n) << ','
                << hsk::rational_to_string(r.donaire_sq) << ',' << r.growth.get_str()
                << ',' << fmt(r.bloch) << "\n";
        }
        out.emit(csv.str());
    } else if (format == "json") {
        json doc = json::array();
        for (const auto &r : rows) {
            doc.push_back({{"alpha", exact_value(r.alpha)},
                           {"p", r.p},
                           {"q", r.q},
                           {"N_exact", exact_value(r.n_exact)},
                           {"sqrtN", float_value(r.sqrt_n, 1e-12)},
                           {"donaire_sq", exact_value(r.donaire_sq)},
                           {"growth", exact_value(hsk::Rational(r.growth))},
                           {"bloch", float_value(r.bloch, 1e-12)}});
        }
        out.emit(doc.dump(2) + "\n");
    } else {
        std::ostringstream txt;
        txt << "alpha      p q  N_exact          sqrtN           donaire_sq       growth  bloch\n";
        for (const auto &r : rows) {
            txt << hsk::rational_to_string(r.alpha) << "  " << r.p << " " << r.q << "  "
                << hsk::rational_to_string(r.n_exact) << "  " << fmt(r.sqrt_n) << "  "
                << hsk::rational_to_string(r.donaire_sq) << "  " << r.growth.get_str()
                << "  " << fmt(r.bloch) << "\n";
        }
        out.emit(txt.str());
    }
    return 0;
}

int run_schwarzian(const std::string &function_name, const std::string &coeffs_path,
                   int p, int q, int order, int grunsky_order,
                   const std::string &format, const Output &out)
{
    hsk::FunctionSpec f;
    if (!coeffs_path.empty()) {
        std::ifstream in(coeffs_path);
        if (!in) {
            throw std::invalid_argument("cannot read coefficient file: " + coeffs_path);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        f = hsk::function_from_json(buf.str());
    } else {
        f = hsk::catalog_function(function_name);
    }

    json doc;
    doc["function"] = f.label;
    doc["backend"] = f.float_backend ? "float" : "exact";
    std::ostringstream txt;
    txt << "function: " << f.label << "\n";

    json coeffs = json::array();
    txt << "S^[" << p << "," << q << "] coefficients to order " << order << ":\n";
    if (f.float_backend) {
        const auto s = hsk::higher_schwarzian_float(f, p, q, order);
        for (int n = 0; n <= order; ++n) {
            coeffs.push_back(float_value(s.at(n).real(), 1e-12));
            txt << fmt(s.at(n)) << "\n";
        }
    } else {
        const auto s = hsk::higher_schwarzian(f, p, q, order);
        for (int n = 0; n <= order; ++n) {
            coeffs.push_back(exact_value(s.at(n)));
            txt << hsk::rational_to_string(s.at(n)) << "\n";
        }
    }
    doc["coefficients"] = coeffs;

    if (grunsky_order > 0) {
        json table = json::array();
        txt << "grunsky table to order " << grunsky_order << ":\n";
        if (f.float_backend) {
            const auto g = hsk::grunsky_float(f, grunsky_order);
            for (int n = 1; n <= grunsky_order; ++n) {
                json row = json::array();
                for (int k = 1; k <= grunsky_order; ++k) {
                    row.push_back(float_value(g.at(n, k).real(), 1e-12));
                    txt << fmt(g.at(n, k)) << (k < grunsky_order ? " " : "\n");
                }
                table.push_back(row);
            }
        } else {
            const auto g = hsk::grunsky(f, grunsky_order);
            for (int n = 1; n <= grunsky_order; ++n) {
                json row = json::array();
                for (int k = 1; k <= grunsky_order; ++k) {
                    row.push_back(exact_value(g.at(n, k)));
                    txt << hsk::rational_to_string(g.at(n, k))
                        << (k < grunsky_order ? " " : "\n");
                }
                table.push_back(row);
            }
        }
        doc["grunsky"] = table;
    }

    if (format == "json") {
        out.emit(doc.dump(2) + "\n");
    } else {
        out.emit(txt.str());
    }
    return 0;
}

int run_bound(int p, int q, const std::string &alpha_text, double budget,
              const std::string &format, const Output &out)
{
    const auto alpha = hsk::parse_rational(alpha_text);
    if (alpha <= -1) {
        throw hsk::DomainError("bound: requires alpha > -1");
    }
    const auto problem = hsk::koebe_problem(alpha, p, q);
    const auto rep = hsk::sandwich(problem, budget);

    if (format == "json") {
        json trace = json::array();
        for (const auto &pt : rep.trace) {
            trace.push_back({{"r", fmt(pt.r)},
                             {"degree", pt.degree},
                             {"truncation", pt.truncation},
                             {"lambda", fmt(pt.lambda)},
                             {"value", float_value(pt.value, pt.slack)},
                             {"slack", fmt(pt.slack)},
                             {"seconds", fmt(pt.seconds)},
                             {"converged", pt.converged}});
        }
        json doc{{"alpha", exact_value(alpha)},
                 {"p", p},
                 {"q", q},
                 {"target_sq", exact_value(rep.target_sq)},
                 {"target", float_value(rep.target, 1e-12)},
                 {"upper", float_value(rep.upper, 1e-12)},
                 {"lower", float_value(rep.lower, 0.0)},
                 {"gap", fmt(rep.gap)},
                 {"budget_exhausted", rep.budget_exhausted},
                 {"trace", trace}};
        out.emit(doc.dump(2) + "\n");
    } else {
        std::ostringstream txt;
        txt << "target^2 = " << hsk::rational_to_string(rep.target_sq)
            << "  target = " << fmt(rep.target) << "\n";
        txt << "upper = " << fmt(rep.upper) << " (exact bound, float display)\n";
        txt << "lower = " << fmt(rep.lower) << " (certified)\n";
        txt << "gap = " << fmt(rep.gap) << "\n";
        if (rep.budget_exhausted) {
            txt << "warning: budget exhausted, reporting best bound so far\n";
        }
        for (const auto &pt : rep.trace) {
            txt << "  r=" << fmt(pt.r) << " N=" << pt.degree << " K=" << pt.truncation;
            if (pt.lambda != 0.0) {
                txt << " lambda=" << fmt(pt.lambda);
            }
            txt << " value=" << fmt(pt.value) << " slack=" << fmt(pt.slack)
                << " t=" << fmt(pt.seconds) << "s\n";
        }
        out.emit(txt.str());
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Higher-order Schwarzian multiplier-norm toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "human";
    std::string out_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to a file instead of stdout");

    auto *verify = app.add_subcommand("verify", "Run invariant suites");
    std::vector<std::string> suites;
    int order_override = 0;
    verify->add_option("suites", suites, "Suites: exact series schwarzian norms multiplier all")
        ->check(CLI::IsMember({"exact", "series", "schwarzian", "norms", "multiplier", "all"}));
    verify->add_option("--order", order_override, "Series-order override for the schwarzian suite");

    auto *koebe = app.add_subcommand("koebe", "Closed form of the Koebe higher Schwarzian");
    int kp = 1, kq = 1, series_order = -1;
    std::string eval_at;
    koebe->add_option("--p", kp)->required()->check(CLI::PositiveNumber);
    koebe->add_option("--q", kq)->required()->check(CLI::PositiveNumber);
    koebe->add_option("--eval", eval_at, "Evaluate at re,im");
    koebe->add_option("--series", series_order, "Also print the Taylor series to this order");

    auto *table = app.add_subcommand("table", "Sharp-constant table");
    std::string alphas_text = "0", pq_text = "1:1";
    table->add_option("--alphas", alphas_text, "Comma-separated rational alphas")
        ->capture_default_str();
    table->add_option("--pq", pq_text, "Comma-separated p:q pairs")->capture_default_str();

    auto *schwarzian = app.add_subcommand("schwarzian", "Series dump of S_f^[p,q]");
    std::string function_name = "koebe", coeffs_path;
    int sp = 1, sq = 1, sorder = 20, grunsky_order = 0;
    schwarzian->add_option("--function", function_name, "Catalog function name")
        ->capture_default_str();
    schwarzian->add_option("--coeffs", coeffs_path, "JSON coefficient file");
    schwarzian->add_option("--p", sp)->check(CLI::PositiveNumber);
    schwarzian->add_option("--q", sq)->check(CLI::PositiveNumber);
    schwarzian->add_option("--order", sorder)->check(CLI::NonNegativeNumber);
    schwarzian->add_option("--grunsky", grunsky_order, "Also print the Grunsky table");

    auto *bound = app.add_subcommand("bound", "Two-sided multiplier-norm certification");
    int bp = 1, bq = 1;
    std::string alpha_text = "0";
    double budget = 60.0;
    bound->add_option("--p", bp)->required()->check(CLI::PositiveNumber);
    bound->add_option("--q", bq)->required()->check(CLI::PositiveNumber);
    bound->add_option("--alpha", alpha_text)->capture_default_str();
    bound->add_option("--budget", budget, "Wall-clock budget in seconds")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out{out_path};
    try {
        if (verify->parsed()) {
            return run_verify(suites, order_override, format, out);
        }
        if (koebe->parsed()) {
            return run_koebe(kp, kq, eval_at, series_order, format, out);
        }
        if (table->parsed()) {
            return run_table(alphas_text, pq_text, format, out);
        }
        if (schwarzian->parsed()) {
            return run_schwarzian(function_name, coeffs_path, sp, sq, sorder,
                                  grunsky_order, format, out);
        }
        if (bound->parsed()) {
            return run_bound(bp, bq, alpha_text, budget, format, out);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
