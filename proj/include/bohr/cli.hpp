#pragma once

// Command-line front end: solve single radius problems, regenerate the
// reference tables (optionally diffing against the embedded values), and
// run the verification suites. Output in markdown, CSV, or JSON; data on
// stdout (or --out FILE), diagnostics on stderr.
//
// Exit codes: 0 success, 1 verification violation or table mismatch,
// 2 usage error, 3 numerical failure.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <bohr/radius.hpp>
#include <bohr/tables.hpp>
#include <bohr/verify.hpp>

namespace bohr::cli {

inline std::string kind_to_string(RadiusKind kind) {
    switch (kind) {
    case RadiusKind::PaulsenRk: return "paulsen-rk";
    case RadiusKind::RefinedRk: return "refined-rk";
    case RadiusKind::RefinedSk: return "refined-sk";
    case RadiusKind::RefinedRho: return "refined-rho";
    }
    return "?";
}

inline const std::map<std::string, RadiusKind>& kind_names() {
    static const std::map<std::string, RadiusKind> m{
        {"paulsen-rk", RadiusKind::PaulsenRk},
        {"refined-rk", RadiusKind::RefinedRk},
        {"refined-sk", RadiusKind::RefinedSk},
        {"refined-rho", RadiusKind::RefinedRho}};
    return m;
}

inline const std::map<std::string, TableId>& table_names() {
    static const std::map<std::string, TableId> m{
        {"t1", TableId::T1},   {"t2", TableId::T2},   {"t3", TableId::T3},
        {"t4a", TableId::T4A}, {"t4b", TableId::T4B}, {"t4c", TableId::T4C},
        {"t4d", TableId::T4D}};
    return m;
}

inline std::string theorem_to_string(Theorem t) {
    switch (t) {
    case Theorem::Th1: return "th1";
    case Theorem::Th2: return "th2";
    case Theorem::Th3: return "th3";
    case Theorem::ThB: return "thb";
    case Theorem::Classical: return "classical";
    case Theorem::Cor1: return "cor1";
    }
    return "?";
}

inline const std::map<std::string, Theorem>& theorem_names() {
    static const std::map<std::string, Theorem> m{
        {"th1", Theorem::Th1},   {"th2", Theorem::Th2},
        {"th3", Theorem::Th3},   {"thb", Theorem::ThB},
        {"classical", Theorem::Classical}, {"cor1", Theorem::Cor1}};
    return m;
}

/// Accepts a decimal ("0.666666666667") or a rational "p/q" ("2/3").
inline double parse_a_value(const std::string& s) {
    const auto bad = [&] {
        return std::invalid_argument("cannot parse a value: '" + s + "'");
    };
    try {
        const auto slash = s.find('/');
        std::size_t pos = 0;
        if (slash == std::string::npos) {
            const double v = std::stod(s, &pos);
            if (pos != s.size()) throw bad();
            return v;
        }
        const double p = std::stod(s.substr(0, slash), &pos);
        if (pos != slash) throw bad();
        const std::string den = s.substr(slash + 1);
        const double q = std::stod(den, &pos);
        if (pos != den.size() || q == 0.0) throw bad();
        return p / q;
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
}

namespace detail {

inline std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

inline std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Row {
    RadiusKind kind{};
    int k = 0;
    std::optional<double> a;
    RadiusResult res;
    std::string reference; // empty unless diffing
    double tolerance = 0.0;
    bool match = true;
};

inline Row make_row(const RadiusProblem& p, bool diff, TableId id = TableId::T1) {
    Row row;
    row.kind = p.kind;
    row.k = p.k;
    row.a = p.a;
    row.res = solve(p);
    if (diff) {
        const DiffEntry e = diff_row(id, p.k);
        row.reference = e.printed;
        row.tolerance = e.tolerance;
        row.match = e.match;
        row.res.root = e.computed; // same solve; keep values consistent
    }
    return row;
}

inline void render_markdown(const std::vector<Row>& rows, std::string_view label,
                            int precision, bool diff, std::ostream& os) {
    if (diff) {
        os << "| k | computed | reference | match |\n";
        os << "| --- | --- | --- | --- |\n";
        int matched = 0;
        for (const Row& r : rows) {
            os << "| " << r.k << " | " << fixed(r.res.root, precision) << " | "
               << r.reference << " | " << (r.match ? "yes" : "NO") << " |\n";
            matched += r.match ? 1 : 0;
        }
        os << matched << "/" << rows.size() << " match\n";
        return;
    }
    os << "| k | " << label << " |\n";
    os << "| --- | --- |\n";
    for (const Row& r : rows)
        os << "| " << r.k << " | " << fixed(r.res.root, precision) << " |\n";
}

inline void render_csv(const std::vector<Row>& rows, bool diff, std::ostream& os) {
    os << "kind,k,a,root,residual,bracket_width";
    if (diff) os << ",reference,match";
    os << "\n";
    for (const Row& r : rows) {
        os << kind_to_string(r.kind) << "," << r.k << ","
           << (r.a ? full(*r.a) : "") << "," << full(r.res.root) << ","
           << full(r.res.residual) << "," << full(r.res.bracket_width);
        if (diff) os << "," << r.reference << "," << (r.match ? "yes" : "no");
        os << "\n";
    }
}

inline void render_json(const std::vector<Row>& rows, bool diff, std::ostream& os) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Row& r : rows) {
        nlohmann::json obj{{"kind", kind_to_string(r.kind)},
                           {"k", r.k},
                           {"root", r.res.root},
                           {"residual", r.res.residual},
                           {"bracket_width", r.res.bracket_width}};
        if (r.a) obj["a"] = *r.a;
        if (diff) {
            obj["reference"] = r.reference;
            obj["tolerance"] = r.tolerance;
            obj["match"] = r.match;
        }
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
}

inline void render_rows(const std::vector<Row>& rows, std::string_view label,
                        const std::string& format, int precision, bool diff,
                        std::ostream& os) {
    if (format == "csv")
        render_csv(rows, diff, os);
    else if (format == "json")
        render_json(rows, diff, os);
    else
        render_markdown(rows, label, precision, diff, os);
}

inline void describe_radius(const Row& r, int precision, std::ostream& os) {
    os << "root: " << fixed(r.res.root, precision) << "\n";
    os << "kind: " << kind_to_string(r.kind) << "\n";
    os << "k: " << r.k << "\n";
    if (r.a) os << "a: " << full(*r.a) << "\n";
    os << "residual: " << full(r.res.residual) << "\n";
    os << "bracket_width: " << full(r.res.bracket_width) << "\n";
    os << "monotonicity_certified: " << (r.res.monotonicity_certified ? "yes" : "no")
       << "\n";
    if (r.kind == RadiusKind::PaulsenRk)
        os << "scan_sign_changes: " << r.res.scan_sign_changes << "\n";
    if (r.res.outside_theorem_range)
        os << "note: k = 1 lies outside the range the bounds are stated for\n";
}

inline void write_data(const std::string& data, const std::string& out_path,
                       std::ostream& out) {
    if (out_path.empty()) {
        out << data;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << data;
    f.flush();
    if (!f) throw std::runtime_error("failed writing output file: " + out_path);
}

} // namespace detail

/// Parses and executes one invocation (args exclude the program name).
/// Data goes to `out` unless --out redirects it to a file; errors and
/// diagnostics go to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"critical radii and majorant inequalities for disk self-maps"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"markdown", "csv", "json"};

    std::string rad_kind, rad_a, rad_format = "markdown", rad_out;
    int rad_k = 2, rad_precision = 6;
    CLI::App* rad = app.add_subcommand("radius", "solve one radius equation");
    rad->add_option("--kind", rad_kind, "equation family")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>{
            "paulsen-rk", "refined-rk", "refined-sk", "refined-rho"}));
    rad->add_option("--k", rad_k, "zero order at the origin")->required();
    rad->add_option("--a", rad_a, "leading modulus (decimal or p/q)");
    rad->add_option("--format", rad_format)->check(CLI::IsMember(formats));
    rad->add_option("--precision", rad_precision)->check(CLI::Range(1, 17));
    rad->add_option("--out", rad_out, "write data to this file");

    std::string tab_which, tab_format = "markdown", tab_out;
    std::vector<int> tab_ks;
    bool tab_diff = false;
    int tab_precision = 6;
    CLI::App* tab = app.add_subcommand("table", "emit a radius table");
    tab->add_option("--which", tab_which, "table id")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>{"t1", "t2", "t3", "t4a",
                                                        "t4b", "t4c", "t4d"}));
    tab->add_option("--k", tab_ks, "k values (default: the reference rows)");
    tab->add_flag("--diff", tab_diff, "compare against the embedded reference");
    tab->add_option("--format", tab_format)->check(CLI::IsMember(formats));
    tab->add_option("--precision", tab_precision)->check(CLI::Range(1, 17));
    tab->add_option("--out", tab_out, "write data to this file");

    std::string ver_theorem, ver_a, ver_format = "markdown", ver_out;
    int ver_k = 2, ver_count = 100, ver_max_degree = 6, ver_precision = 6;
    double ver_zero_cap = 0.95;
    std::uint64_t ver_seed = 0;
    CLI::App* ver = app.add_subcommand("verify", "run an inequality check suite");
    ver->add_option("--theorem", ver_theorem, "which check to run")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>{"th1", "th2", "th3", "thb",
                                                        "classical", "cor1"}));
    ver->add_option("--k", ver_k, "zero order (ignored by classical)");
    ver->add_option("--a", ver_a, "leading modulus for th3 (decimal or p/q)");
    ver->add_option("--count", ver_count, "number of samples")->check(CLI::Range(1, 10000000));
    ver->add_option("--seed", ver_seed, "sampling seed");
    ver->add_option("--max-degree", ver_max_degree)->check(CLI::Range(0, 64));
    ver->add_option("--zero-cap", ver_zero_cap, "zero modulus cap");
    ver->add_option("--format", ver_format)->check(CLI::IsMember(formats));
    ver->add_option("--precision", ver_precision)->check(CLI::Range(1, 17));
    ver->add_option("--out", ver_out, "write data to this file");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ostringstream data;
        int exit_code = 0;

        if (app.got_subcommand(rad)) {
            std::optional<double> a;
            if (!rad_a.empty()) a = parse_a_value(rad_a);
            const RadiusProblem p(kind_names().at(rad_kind), rad_k, a);
            const detail::Row row = detail::make_row(p, false);
            if (rad_format == "markdown")
                detail::describe_radius(row, rad_precision, data);
            else
                detail::render_rows({row}, "root", rad_format, rad_precision, false,
                                    data);
            detail::write_data(data.str(), rad_out, out);
            return 0;
        }

        if (app.got_subcommand(tab)) {
            const TableId id = table_names().at(tab_which);
            const std::vector<int>& ks = tab_ks.empty() ? reference_k_values() : tab_ks;
            std::vector<detail::Row> rows;
            rows.reserve(ks.size());
            for (int k : ks) {
                if (k < 2)
                    throw std::invalid_argument("table rows require k >= 2");
                rows.push_back(detail::make_row(table_problem(id, k), tab_diff, id));
            }
            detail::render_rows(rows, column_label(id), tab_format, tab_precision,
                                tab_diff, data);
            if (tab_diff)
                for (const detail::Row& r : rows)
                    if (!r.match) exit_code = 1;
            detail::write_data(data.str(), tab_out, out);
            return exit_code;
        }

        // verify
        const Theorem t = theorem_names().at(ver_theorem);
        std::optional<double> a;
        if (!ver_a.empty()) a = parse_a_value(ver_a);
        if (t == Theorem::Th3 && !a)
            throw std::invalid_argument("this check requires --a");
        if (t != Theorem::Th3 && a)
            throw std::invalid_argument("--a is only meaningful with the fixed-leading check");

        const SamplePlan plan{ver_k, ver_count, ver_max_degree, ver_zero_cap, ver_seed};
        VerificationReport report{};
        switch (t) {
        case Theorem::Th1: report = check_theorem1(plan); break;
        case Theorem::Th2: report = check_theorem2(plan); break;
        case Theorem::Th3: report = check_theorem3(ver_k, *a, plan); break;
        case Theorem::ThB: report = check_theoremB(plan); break;
        case Theorem::Classical: report = check_classical(plan); break;
        case Theorem::Cor1: report = check_corollary1(plan); break;
        }

        std::optional<EqualityWitness> witness;
        if (t == Theorem::Th1 || t == Theorem::Th2 || t == Theorem::Th3)
            witness = equality_witness(t, ver_k, a);

        if (ver_format == "json") {
            nlohmann::json obj{{"theorem", theorem_to_string(t)},
                               {"k", t == Theorem::Classical ? 0 : ver_k},
                               {"radius", report.radius_used},
                               {"samples_checked", report.samples_checked},
                               {"max_lhs", report.max_lhs},
                               {"violations", report.violations}};
            if (a) obj["a"] = *a;
            if (witness)
                obj["witness"] = {{"radius", witness->radius},
                                  {"a", witness->a},
                                  {"lhs", witness->lhs}};
            data << obj.dump(2) << "\n";
        } else if (ver_format == "csv") {
            data << "theorem,k,a,radius,samples_checked,max_lhs,violations\n";
            data << theorem_to_string(t) << ","
                 << (t == Theorem::Classical ? 0 : ver_k) << ","
                 << (a ? detail::full(*a) : "") << ","
                 << detail::full(report.radius_used) << "," << report.samples_checked
                 << "," << detail::full(report.max_lhs) << "," << report.violations
                 << "\n";
        } else {
            data << "theorem: " << theorem_to_string(t) << "\n";
            if (t != Theorem::Classical) data << "k: " << ver_k << "\n";
            if (a) data << "a: " << detail::full(*a) << "\n";
            data << "radius: " << detail::fixed(report.radius_used, ver_precision)
                 << "\n";
            data << "samples_checked: " << report.samples_checked << "\n";
            data << "max_lhs: " << detail::full(report.max_lhs) << "\n";
            data << "violations: " << report.violations << "\n";
            if (witness)
                data << "equality witness: lhs = " << detail::full(witness->lhs)
                     << " at r = " << detail::fixed(witness->radius, ver_precision)
                     << " (a = " << detail::full(witness->a) << ")\n";
            data << "status: " << (report.violations == 0 ? "PASS" : "FAIL") << "\n";
        }
        detail::write_data(data.str(), ver_out, out);
        return report.violations == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace bohr::cli
