// gf2coh: exact Lie-algebra cohomology over GF(2) for the m0/m2 families.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gf2coh/cohomology.hpp"
#include "gf2coh/combinatorics.hpp"
#include "gf2coh/exterior.hpp"
#include "gf2coh/lie_algebra.hpp"
#include "gf2coh/maxclass.hpp"
#include "gf2coh/parallel.hpp"
#include "gf2coh/report.hpp"
#include "gf2coh/verify.hpp"

namespace {

using gf2coh::Form;
using gf2coh::LieAlgebra;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string format = "markdown";
    std::string out_path;
};

void emit(const OutputOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw UsageError("cannot open output file: " + opts.out_path);
    out << payload;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw UsageError("empty range: " + text);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse range: " + text);
    } catch (const std::out_of_range&) {
        throw UsageError("cannot parse range: " + text);
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stoi(item));
        } catch (...) {
            throw UsageError("cannot parse integer list: " + text);
        }
    }
    if (values.empty()) throw UsageError("empty integer list: " + text);
    return values;
}

LieAlgebra resolve_algebra(const std::string& spec, std::optional<int> n, bool strict) {
    if (spec == "m0" || spec == "m2") {
        if (!n) throw UsageError("--n is required for the built-in families");
        return spec == "m0" ? LieAlgebra::m0(*n) : LieAlgebra::m2(*n);
    }
    std::ifstream in(spec);
    if (!in) throw UsageError("cannot open algebra file: " + spec);
    auto [g, report] = gf2coh::load_algebra(in, spec);
    if (strict && !report.ok())
        throw UsageError("algebra file fails validation (" + std::to_string(report.grading.size()) +
                         " grading, " + std::to_string(report.jacobi.size()) + " Jacobi violations); see 'check'");
    for (const auto& v : report.grading)
        std::cerr << "# warning: grading violation [e" << v.i << ",e" << v.j << "] -> e" << v.k << "\n";
    for (const auto& v : report.jacobi)
        std::cerr << "# warning: Jacobi violation at (" << v.i << "," << v.j << "," << v.l << ")\n";
    return g;
}

std::string render_forms(const OutputOptions& opts, const std::string& algebra, const std::string& command,
                         const std::vector<Form>& forms, const nlohmann::ordered_json& parameters) {
    std::ostringstream os;
    if (opts.format == "json") {
        auto payload = gf2coh::report_shell(algebra, command);
        payload["parameters"] = parameters;
        auto list = nlohmann::ordered_json::array();
        for (const auto& f : forms) {
            nlohmann::ordered_json rep;
            rep["text"] = gf2coh::to_string(f);
            rep["monomials"] = gf2coh::form_to_json(f);
            list.push_back(std::move(rep));
        }
        payload["count"] = forms.size();
        payload["forms"] = std::move(list);
        os << payload.dump(2) << "\n";
    } else {
        std::string params;
        for (const auto& [key, value] : parameters.items())
            params += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
        if (opts.format == "csv") {
            os << "#" << params << "\n";
            os << "index,form\n";
            for (std::size_t i = 0; i < forms.size(); ++i)
                os << i + 1 << ",\"" << gf2coh::to_string(forms[i]) << "\"\n";
        } else {
            os << "# " << command << " for " << algebra << " (" << forms.size() << " elements;" << params
               << ")\n";
            for (std::size_t i = 0; i < forms.size(); ++i)
                os << i + 1 << ". " << gf2coh::to_string(forms[i]) << "\n";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- betti ---

int cmd_betti(const std::string& algebra_spec, std::optional<int> n, int q, std::optional<int> degree,
              bool representatives, bool strict, const OutputOptions& opts) {
    const LieAlgebra g = resolve_algebra(algebra_spec, n, strict);
    const gf2coh::BettiReport report = degree ? gf2coh::betti_graded(g, q, *degree, representatives)
                                              : gf2coh::betti(g, q, representatives);
    std::ostringstream os;
    if (opts.format == "json") {
        auto payload = gf2coh::report_shell(g.name(), "betti");
        payload["result"] = gf2coh::betti_report_to_json(report);
        os << payload.dump(2) << "\n";
    } else if (opts.format == "csv") {
        os << "algebra,q,degree,dim_ker,dim_im_prev,betti\n";
        os << g.name() << "," << report.q << "," << (report.degree ? std::to_string(*report.degree) : "")
           << "," << report.dim_ker << "," << report.dim_im_prev << "," << report.betti << "\n";
    } else {
        os << "| algebra | q | degree | dim_ker | dim_im_prev | betti |\n";
        os << "|---|---|---|---|---|---|\n";
        os << "| " << g.name() << " | " << report.q << " | "
           << (report.degree ? std::to_string(*report.degree) : "-") << " | " << report.dim_ker << " | "
           << report.dim_im_prev << " | " << report.betti << " |\n";
    }
    if (representatives && report.representatives && opts.format != "json") {
        os << "\nrepresentatives:\n";
        for (const auto& f : *report.representatives) os << "  " << gf2coh::to_string(f) << "\n";
    }
    emit(opts, os.str());
    return 0;
}

// ---------------------------------------------------------------- table ---

int cmd_table(const std::string& family, const std::string& n_range, const std::string& q_list,
              bool check_closed_form, const OutputOptions& opts) {
    if (family != "m0" && family != "m2") throw UsageError("--family must be m0 or m2");
    const auto [n_lo, n_hi] = parse_range(n_range);
    const std::vector<int> qs = parse_int_list(q_list);
    const int n_min = family == "m0" ? 3 : 5;
    if (n_lo < n_min)
        throw UsageError("family " + family + " needs n >= " + std::to_string(n_min));
    for (int q : qs)
        if (q < 1) throw UsageError("q must be positive");
    if (check_closed_form)
        for (int q : qs)
            if (q > 3) throw UsageError("--check-closed-form supports q <= 3 only");

    const std::size_t n_count = static_cast<std::size_t>(n_hi - n_lo + 1);
    std::vector<std::vector<long long>> values(qs.size(), std::vector<long long>(n_count, 0));
    gf2coh::parallel_for(n_count * qs.size(), gf2coh::thread_count_from_env(), [&](std::size_t item) {
        const std::size_t qi = item / n_count;
        const std::size_t ni = item % n_count;
        const int n = n_lo + static_cast<int>(ni);
        const LieAlgebra g = family == "m0" ? LieAlgebra::m0(n) : LieAlgebra::m2(n);
        values[qi][ni] = static_cast<long long>(gf2coh::betti(g, qs[qi]).betti);
    });

    std::ostringstream os;
    if (opts.format == "json") {
        auto payload = gf2coh::report_shell(family, "table");
        payload["n"] = nlohmann::ordered_json::array();
        for (std::size_t ni = 0; ni < n_count; ++ni) payload["n"].push_back(n_lo + static_cast<int>(ni));
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t qi = 0; qi < qs.size(); ++qi) {
            nlohmann::ordered_json row;
            row["q"] = qs[qi];
            row["betti"] = values[qi];
            rows.push_back(std::move(row));
        }
        payload["rows"] = std::move(rows);
        os << payload.dump(2) << "\n";
    } else if (opts.format == "csv") {
        os << "q/n";
        for (std::size_t ni = 0; ni < n_count; ++ni) os << "," << n_lo + static_cast<int>(ni);
        os << "\n";
        for (std::size_t qi = 0; qi < qs.size(); ++qi) {
            os << qs[qi];
            for (const auto v : values[qi]) os << "," << v;
            os << "\n";
        }
    } else {
        os << "| q\\n |";
        for (std::size_t ni = 0; ni < n_count; ++ni) os << " " << n_lo + static_cast<int>(ni) << " |";
        os << "\n|---|";
        for (std::size_t ni = 0; ni < n_count; ++ni) os << "---|";
        os << "\n";
        for (std::size_t qi = 0; qi < qs.size(); ++qi) {
            os << "| " << qs[qi] << " |";
            for (const auto v : values[qi]) os << " " << v << " |";
            os << "\n";
        }
    }
    emit(opts, os.str());

    if (check_closed_form) {
        std::vector<std::string> mismatches;
        for (std::size_t qi = 0; qi < qs.size(); ++qi)
            for (std::size_t ni = 0; ni < n_count; ++ni) {
                const int n = n_lo + static_cast<int>(ni);
                const long long closed = gf2coh::closed_form_betti(n, qs[qi]);
                if (values[qi][ni] != closed)
                    mismatches.push_back("n=" + std::to_string(n) + " q=" + std::to_string(qs[qi]) +
                                         ": brute " + std::to_string(values[qi][ni]) + " != closed " +
                                         std::to_string(closed));
            }
        if (!mismatches.empty()) {
            for (const auto& m : mismatches) std::cerr << "mismatch: " << m << "\n";
            return 1;
        }
        std::cerr << "# closed-form check passed\n";
    }
    return 0;
}

// ---------------------------------------------------------------- basis ---

bool verify_finite_basis(const LieAlgebra& g, int q, const std::vector<Form>& forms) {
    bool ok = true;
    std::map<int, std::vector<const Form*>> by_degree;
    for (const auto& f : forms) {
        if (!gf2coh::is_cocycle(g, f)) {
            std::cerr << "not a cocycle: " << gf2coh::to_string(f) << "\n";
            ok = false;
            continue;
        }
        const auto deg = f.uniform_degree();
        if (!deg) {
            std::cerr << "not homogeneous: " << gf2coh::to_string(f) << "\n";
            ok = false;
            continue;
        }
        by_degree[*deg].push_back(&f);
    }
    if (!ok) return false;
    for (const auto& [k, elements] : by_degree) {
        const auto domain = gf2coh::enumerate_basis(q, k, 1, g.dim());
        gf2coh::RowSpace space(domain.size());
        const auto prev = gf2coh::block(g, q - 1, k);
        for (std::size_t c = 0; c < prev.matrix.cols(); ++c) {
            gf2coh::BooleanVector image(domain.size());
            for (std::size_t r = 0; r < domain.size(); ++r)
                if (prev.matrix.get(r, c)) image.set(r, true);
            space.insert(std::move(image));
        }
        for (const Form* f : elements)
            if (!space.insert(gf2coh::to_coords(*f, domain))) {
                std::cerr << "dependent modulo coboundaries: " << gf2coh::to_string(*f) << "\n";
                ok = false;
            }
    }
    const auto expected = gf2coh::betti(g, q).betti;
    if (forms.size() != expected) {
        std::cerr << "count " << forms.size() << " != betti " << expected << "\n";
        ok = false;
    }
    return ok;
}

bool verify_infinite_basis(int q, int max_degree, const std::vector<Form>& forms) {
    bool ok = true;
    std::map<int, long long> count_by_degree;
    for (const auto& f : forms) {
        const auto deg = f.uniform_degree();
        if (!deg) {
            std::cerr << "not homogeneous: " << gf2coh::to_string(f) << "\n";
            return false;
        }
        count_by_degree[*deg] += 1;
        const LieAlgebra g0 = gf2coh::truncation(gf2coh::Family::m0, std::max(*deg, q));
        const LieAlgebra g2 = gf2coh::truncation(gf2coh::Family::m2, std::max(*deg, q));
        for (const LieAlgebra* g : {&g0, &g2})
            if (!gf2coh::is_cocycle(*g, f) || gf2coh::is_coboundary(*g, f)) {
                std::cerr << "not a nontrivial class in " << g->name() << ": " << gf2coh::to_string(f)
                          << "\n";
                ok = false;
            }
    }
    if (q >= 2) {
        const int offset = q * (q + 1) / 2;
        for (int k = 1; k <= max_degree; ++k) {
            const long long count = count_by_degree.count(k) ? count_by_degree[k] : 0;
            const long long expected =
                gf2coh::partitions_exact(k - offset, q) - gf2coh::partitions_exact(k - offset - 1, q);
            if (count != expected) {
                std::cerr << "degree " << k << ": " << count << " elements, partition count " << expected
                          << "\n";
                ok = false;
            }
        }
    }
    return ok;
}

int cmd_basis(const std::string& algebra_spec, std::optional<int> n, int q, const std::string& source,
              int max_degree, bool verify_flag, bool strict, const OutputOptions& opts) {
    if (source != "generic" && source != "paper") throw UsageError("--source must be generic or paper");

    const bool infinite = algebra_spec == "m0-infinite" || algebra_spec == "m2-infinite";
    std::vector<Form> forms;
    std::string algebra_name;
    nlohmann::ordered_json parameters;
    parameters["q"] = q;
    parameters["source"] = source;

    if (infinite) {
        if (source != "paper")
            throw UsageError("infinite families are served by the explicit basis; use --source paper");
        if (q < 1) throw UsageError("q must be positive");
        const auto family = algebra_spec == "m0-infinite" ? gf2coh::Family::m0 : gf2coh::Family::m2;
        forms = gf2coh::infinite_cohomology_basis(family, q, max_degree);
        algebra_name = algebra_spec;
        parameters["max_degree"] = max_degree;
    } else {
        const LieAlgebra g = resolve_algebra(algebra_spec, n, strict);
        algebra_name = g.name();
        if (source == "generic") {
            forms = gf2coh::cohomology_basis(g, q);
        } else {
            const bool family_m0 = algebra_spec == "m0";
            const bool family_m2 = algebra_spec == "m2";
            if (!family_m0 && !family_m2)
                throw UsageError("--source paper needs a built-in family (m0, m2) and q <= 3");
            if (q == 1)
                forms = {Form::unit(1), Form::unit(2)};
            else if (q == 2)
                forms = family_m0 ? gf2coh::h2_basis_m0(*n) : gf2coh::h2_basis_m2(*n);
            else if (q == 3)
                forms = family_m0 ? gf2coh::h3_basis_m0(*n) : gf2coh::h3_basis_m2(*n);
            else
                throw UsageError("--source paper covers q <= 3 for the finite families");
        }
    }

    emit(opts, render_forms(opts, algebra_name, "basis", forms, parameters));

    if (verify_flag) {
        bool ok = false;
        if (infinite) {
            ok = verify_infinite_basis(q, max_degree, forms);
        } else {
            const LieAlgebra g = resolve_algebra(algebra_spec, n, strict);
            ok = verify_finite_basis(g, q, forms);
        }
        if (!ok) return 1;
        std::cerr << "# basis verification passed\n";
    }
    return 0;
}

// --------------------------------------------------------------- verify ---

int cmd_verify(const std::string& suite) {
    if (!gf2coh::verify::is_suite(suite)) {
        std::ostringstream os;
        os << "unknown suite '" << suite << "'; available:";
        for (const auto& s : gf2coh::verify::suite_names()) os << " " << s;
        throw UsageError(os.str());
    }
    const auto results = gf2coh::verify::run_suite(suite);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- check ---

int cmd_check(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open algebra file: " + path);
    auto [g, report] = gf2coh::load_algebra(in, path);
    std::cout << "algebra " << path << ": dim " << g.dim() << "\n";
    for (const auto& v : report.grading)
        std::cout << "grading violation: [e" << v.i << ",e" << v.j << "] -> e" << v.k << " (expected e"
                  << v.i + v.j << ")\n";
    for (const auto& v : report.jacobi) {
        std::cout << "Jacobi violation at (e" << v.i << ",e" << v.j << ",e" << v.l << "), residual:";
        for (int m : v.residual) std::cout << " e" << m;
        std::cout << "\n";
    }
    if (report.ok()) {
        std::cout << "valid\n";
        return 0;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chevalley-Eilenberg cohomology over GF(2) for graded Lie algebras"};
    app.require_subcommand(1);

    OutputOptions opts;

    std::string algebra = "m0";
    std::optional<int> n;
    int q = 1;
    std::optional<int> degree;
    bool representatives = false;
    bool strict = false;

    auto* betti_cmd = app.add_subcommand("betti", "Betti number of one algebra");
    betti_cmd->add_option("--algebra", algebra, "m0, m2, or an algebra file path");
    betti_cmd->add_option("--n", n, "dimension for the built-in families");
    betti_cmd->add_option("--q", q, "cohomology rank")->required();
    betti_cmd->add_option("--degree", degree, "restrict to one homogeneous degree");
    betti_cmd->add_flag("--representatives", representatives, "include canonical class representatives");
    betti_cmd->add_flag("--strict", strict, "reject algebra files with validation findings");

    std::string family = "m0", n_range, q_list = "1";
    bool check_closed_form = false;
    auto* table_cmd = app.add_subcommand("table", "Betti table over a range of dimensions");
    table_cmd->add_option("--family", family, "m0 or m2");
    table_cmd->add_option("--n", n_range, "dimension range, e.g. 3..20")->required();
    table_cmd->add_option("--q", q_list, "comma-separated ranks, e.g. 1,2,3")->required();
    table_cmd->add_flag("--check-closed-form", check_closed_form,
                        "compare against the closed forms; nonzero exit on mismatch");

    std::string basis_algebra = "m0", source = "generic";
    std::optional<int> basis_n;
    int basis_q = 1, max_degree = 30;
    bool verify_basis = false;
    auto* basis_cmd = app.add_subcommand("basis", "cohomology basis representatives");
    basis_cmd->add_option("--algebra", basis_algebra, "m0, m2, m0-infinite, m2-infinite, or a file path");
    basis_cmd->add_option("--n", basis_n, "dimension for the finite families");
    basis_cmd->add_option("--q", basis_q, "cohomology rank")->required();
    basis_cmd->add_option("--source", source, "generic (echelon completion) or paper (explicit cocycles)");
    basis_cmd->add_option("--max-degree", max_degree, "degree cap for the infinite families");
    basis_cmd->add_flag("--verify", verify_basis, "check cocycle/independence/count properties");
    basis_cmd->add_flag("--strict", strict, "reject algebra files with validation findings");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "paper-table, closed-forms, interweaving, kernels, partitions, gf2-oracle, all")
        ->required();

    std::string check_path;
    auto* check_cmd = app.add_subcommand("check", "validate an algebra file (grading + Jacobi)");
    check_cmd->add_option("file", check_path, "algebra file path")->required();

    for (auto* cmd : {betti_cmd, table_cmd, basis_cmd}) {
        cmd->add_option("--format", opts.format, "markdown, csv, or json")
            ->check(CLI::IsMember({"markdown", "csv", "json"}));
        cmd->add_option("--out", opts.out_path, "write the payload to a file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    int status = 2;
    try {
        if (betti_cmd->parsed())
            status = cmd_betti(algebra, n, q, degree, representatives, strict, opts);
        else if (table_cmd->parsed())
            status = cmd_table(family, n_range, q_list, check_closed_form, opts);
        else if (basis_cmd->parsed())
            status = cmd_basis(basis_algebra, basis_n, basis_q, source, max_degree, verify_basis, strict, opts);
        else if (verify_cmd->parsed())
            status = cmd_verify(suite);
        else if (check_cmd->parsed())
            status = cmd_check(check_path);
    } catch (const gf2coh::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    std::cerr << "# elapsed_ms=" << elapsed.count() << "\n";
    return status;
}
