// Command-line surface: regenerate the source tables, run series operations
// on user inputs, and execute the verification suite.
//
// Exit codes: 0 success, 2 usage error, 3 precondition violation,
// 4 verification failure.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratcomb/bernoulli.hpp"
#include "ratcomb/catalog.hpp"
#include "ratcomb/compositional.hpp"
#include "ratcomb/error.hpp"
#include "ratcomb/serialize.hpp"
#include "ratcomb/verify.hpp"

namespace {

using namespace ratcomb;

constexpr std::size_t kDefaultOrder = 16;

// A series spec is a catalog name or a path to a series file.
EgfSeries resolve_series(const std::string& spec, std::size_t order) {
    try {
        return builtin_series(SeriesName::parse(spec), order);
    } catch (const ParseError&) {
        if (!std::filesystem::exists(spec)) throw;
        return load_series_file(spec);
    }
}

std::vector<Rational> table_values(const std::string& kind, const EgfSeries& f,
                                   unsigned n_shift, unsigned max_n,
                                   std::string* first_index) {
    if (kind == "bernoulli") {
        *first_index = "0";
        return bernoulli_numbers(f, n_shift, max_n).values;
    }
    if (kind == "comp") {
        *first_index = "1";
        const CompBernoulliRow row = comp_bernoulli_numbers(f, n_shift, max_n);
        return {row.values.begin() + 1, row.values.end()};
    }
    throw ParseError("unknown table kind \"" + kind +
                     "\" (expected bernoulli or comp)");
}

void print_table(const std::string& kind, const std::string& series,
                 unsigned n_shift, unsigned max_n, const std::string& format,
                 std::size_t order_flag) {
    const std::size_t need = n_shift + max_n + (kind == "comp" ? 0 : 1);
    std::size_t order = std::max<std::size_t>(order_flag, need);
    EgfSeries f = resolve_series(series, order);
    std::string first_index;
    const std::vector<Rational> values =
        table_values(kind, f, n_shift, max_n, &first_index);
    const unsigned base = first_index == "0" ? 0 : 1;

    if (format.empty()) {  // plain: the values joined on one line
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0) out += ",";
            out += values[i].str();
        }
        std::cout << out << "\n";
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << base + i << "," << values[i].str() << "\n";
    } else if (format == "md") {
        std::cout << "| n |";
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << " " << base + i << " |";
        std::cout << "\n|---|";
        for (std::size_t i = 0; i < values.size(); ++i) std::cout << "---|";
        std::cout << "\n| value |";
        for (const Rational& v : values) std::cout << " " << v.str() << " |";
        std::cout << "\n";
    } else if (format == "json") {
        nlohmann::json j;
        j["kind"] = kind;
        j["series"] = series;
        j["N"] = n_shift;
        j["first_n"] = base;
        std::vector<std::string> vals;
        for (const Rational& v : values) vals.push_back(v.str());
        j["values"] = vals;
        std::cout << j.dump() << "\n";
    } else {
        throw ParseError("unknown format \"" + format +
                         "\" (expected csv, md, json)");
    }
}

void print_polys(const std::string& kind, const std::string& series,
                 unsigned n_shift, unsigned max_n, const std::string& format,
                 std::size_t order_flag) {
    const std::size_t need = n_shift + max_n + 1;
    EgfSeries f = resolve_series(series, std::max<std::size_t>(order_flag, need));
    std::vector<std::pair<unsigned, QPolynomial>> polys;
    if (kind == "bernoulli") {
        for (unsigned m = 0; m <= max_n; ++m)
            polys.emplace_back(m, bernoulli_polynomial(f, n_shift, m));
    } else if (kind == "comp") {
        for (unsigned m = 1; m <= max_n; ++m)
            polys.emplace_back(m, comp_bernoulli_polynomial(f, n_shift, m));
    } else {
        throw ParseError("unknown polynomial kind \"" + kind +
                         "\" (expected bernoulli or comp)");
    }

    if (format.empty()) {
        for (const auto& [m, p] : polys) std::cout << p.str() << "\n";
    } else if (format == "csv") {
        std::cout << "n,polynomial\n";
        for (const auto& [m, p] : polys)
            std::cout << m << ",\"" << p.str() << "\"\n";
    } else if (format == "md") {
        std::cout << "| n | polynomial |\n|---|---|\n";
        for (const auto& [m, p] : polys)
            std::cout << "| " << m << " | " << p.str() << " |\n";
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [m, p] : polys) {
            nlohmann::json j;
            j["n"] = m;
            j["poly"] = p.str();
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump() << "\n";
    } else {
        throw ParseError("unknown format \"" + format +
                         "\" (expected csv, md, json)");
    }
}

int run_series_op(const std::string& op, const std::string& in,
                  const std::string& with, const std::string& p,
                  const std::string& q, const std::string& r,
                  std::size_t order) {
    EgfSeries result = EgfSeries::zero(0);
    if (op == "hypergeom") {
        if (p.empty() || q.empty() || r.empty())
            throw ParseError("hypergeom needs --p, --q and --r");
        result = hypergeom_series(SignedRatio::parse(p), SignedRatio::parse(q),
                                  SignedRatio::parse(r), order);
    } else if (op == "reciprocal" || op == "invert") {
        if (in.empty()) throw ParseError(op + " needs --in");
        const EgfSeries f = resolve_series(in, order);
        result = op == "reciprocal" ? reciprocal(truncate(f, std::min(order, f.order())))
                                    : comp_inverse(truncate(f, std::min(order, f.order())));
    } else if (op == "mul" || op == "add" || op == "compose") {
        if (in.empty() || with.empty())
            throw ParseError(op + " needs --in and --with");
        const EgfSeries f = resolve_series(in, order);
        const EgfSeries g = resolve_series(with, order);
        if (op == "mul") result = series_mul(f, g);
        else if (op == "add") result = series_add(f, g);
        else result = compose(f, g);
    } else {
        throw ParseError("unknown series op \"" + op +
                         "\" (expected reciprocal, compose, invert, mul, add, "
                         "hypergeom)");
    }
    std::cout << render_series_file(to_series_file(result));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational EGF engine: generalized and compositional "
                 "Bernoulli numbers, their combinatorial oracles, and the "
                 "verification suite"};
    app.require_subcommand(1);

    std::string kind = "bernoulli", series, format, suite = "all";
    std::string in, with, p, q, r;
    unsigned n_shift = 1, max_n = 10;
    std::optional<unsigned> verify_max_n;
    std::size_t order = kDefaultOrder;
    std::string op;

    CLI::App* table = app.add_subcommand("table", "Print a row of B_{N,n}^f or C_{N,n}^f");
    table->add_option("--kind", kind, "bernoulli or comp");
    table->add_option("--series", series, "catalog name or series-file path")->required();
    table->add_option("--N", n_shift, "the shift N");
    table->add_option("--max-n", max_n, "largest index to print");
    table->add_option("--format", format, "csv, md or json (default: bare values)");
    table->add_option("-T,--order", order, "truncation order for file inputs");

    CLI::App* poly = app.add_subcommand("poly", "Print B_{N,m}^f(x) or C_{N,m}^f(x) for m <= n");
    poly->add_option("--kind", kind, "bernoulli or comp");
    poly->add_option("--series", series, "catalog name or series-file path")->required();
    poly->add_option("--N", n_shift, "the shift N");
    poly->add_option("--max-n", max_n, "largest polynomial index");
    poly->add_option("--format", format, "csv, md or json (default: one per line)");
    poly->add_option("-T,--order", order, "truncation order for file inputs");

    CLI::App* series_op = app.add_subcommand("series-op", "Apply a series operation; result on stdout as a series file");
    series_op->add_option("op", op, "reciprocal, compose, invert, mul, add, hypergeom")->required();
    series_op->add_option("--in", in, "input series (catalog name or path)");
    series_op->add_option("--with", with, "second input for mul/add/compose");
    series_op->add_option("--p", p, "first hypergeometric parameter, e.g. -1/2");
    series_op->add_option("--q", q, "second hypergeometric parameter");
    series_op->add_option("--r", r, "third hypergeometric parameter");
    series_op->add_option("-T,--order", order, "truncation order");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--suite", suite, "tables, oracles, properties or all");
    verify->add_option("--max-n", verify_max_n, "clamp table/oracle index ranges");
    verify->add_option("--format", format, "text (default) or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) {
            print_table(kind, series, n_shift, max_n, format, order);
        } else if (poly->parsed()) {
            print_polys(kind, series, n_shift, max_n, format, order);
        } else if (series_op->parsed()) {
            return run_series_op(op, in, with, p, q, r, order);
        } else if (verify->parsed()) {
            const VerifyReport report = run_verify(parse_suite(suite), verify_max_n);
            if (format == "json") {
                std::cout << render_report_json(report);
            } else if (format.empty() || format == "text") {
                std::cout << render_report_text(report);
            } else {
                throw ParseError("unknown format \"" + format +
                                 "\" (expected text or json)");
            }
            return report.ok() ? 0 : 4;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
