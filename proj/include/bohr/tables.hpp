#pragma once

// Reference tables for the four radius families and diffing of computed
// roots against them. Reference entries are kept as printed strings so the
// comparison tolerance is exactly half a unit in the last printed decimal
// (entries vary between 5 and 6 decimals).

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include <bohr/radius.hpp>

namespace bohr {

enum class TableId { T1, T2, T3, T4A, T4B, T4C, T4D };

/// The 20 k values every reference table tabulates.
inline const std::vector<int>& reference_k_values() {
    static const std::vector<int> ks{2, 3, 4,  5,  6,  7,  8,  9,  10, 11,
                                     15, 20, 25, 30, 35, 40, 50, 60, 70, 100};
    return ks;
}

namespace detail {

inline const std::array<std::string_view, 20>& reference_strings(TableId id) {
    static const std::array<std::string_view, 20> t1{
        "0.786151", "0.826031", "0.851171", "0.868837", "0.882094",
        "0.892493", "0.900917", "0.90791",  "0.913827", "0.918911",
        "0.933783", "0.94546",  "0.953256", "0.958885", "0.963169",
        "0.966553", "0.97159",  "0.975183", "0.977892", "0.98315"};
    static const std::array<std::string_view, 20> t2{
        "0.674837", "0.720449", "0.752379", "0.776409", "0.795346",
        "0.81076",  "0.823614", "0.834537", "0.84396",  "0.852191",
        "0.876981", "0.897193", "0.911051", "0.921238", "0.92909",
        "0.935354", "0.944776", "0.951569", "0.956728", "0.966834"};
    static const std::array<std::string_view, 20> t3{
        "0.585786", "0.66152",  "0.709616", "0.743563", "0.769115",
        "0.789207", "0.805514", "0.819071", "0.830558", "0.840442",
        "0.869417", "0.892242", "0.907521", "0.918574", "0.926998",
        "0.933662", "0.943594", "0.950691", "0.956047", "0.966459"};
    static const std::array<std::string_view, 20> t4a{
        "0.604242", "0.673433", "0.718134", "0.750042", "0.774255",
        "0.79341",  "0.80903",  "0.822067", "0.833149", "0.842709",
        "0.870869", "0.89319",  "0.908196", "0.919083", "0.927398",
        "0.933985", "0.943819", "0.950858", "0.956177", "0.966531"};
    static const std::array<std::string_view, 20> t4b{
        "0.613378", "0.679324", "0.722344", "0.753244", "0.776794",
        "0.795485", "0.810767", "0.823546", "0.834427", "0.843827",
        "0.871585", "0.893657", "0.908528", "0.919334", "0.927594",
        "0.934144", "0.94393",  "0.950941", "0.956241", "0.966566"};
    static const std::array<std::string_view, 20> t4c{
        "0.622387", "0.685138", "0.726502", "0.756407", "0.779302",
        "0.797536", "0.812481", "0.825007", "0.835689", "0.844932",
        "0.872292", "0.894118", "0.908856", "0.919581", "0.927788",
        "0.934301", "0.944039", "0.951022", "0.956304", "0.966601"};
    static const std::array<std::string_view, 20> t4d{
        "0.639802", "0.696418", "0.734582", "0.762559", "0.784184",
        "0.801527", "0.815821", "0.827851", "0.838148", "0.847082",
        "0.873668", "0.895014", "0.909493", "0.92006",  "0.928164",
        "0.934605", "0.944251", "0.951179", "0.956426", "0.966668"};
    switch (id) {
    case TableId::T1: return t1;
    case TableId::T2: return t2;
    case TableId::T3: return t3;
    case TableId::T4A: return t4a;
    case TableId::T4B: return t4b;
    case TableId::T4C: return t4c;
    case TableId::T4D: return t4d;
    }
    throw std::invalid_argument("reference_strings: unknown table");
}

inline std::size_t reference_index(int k) {
    const auto& ks = reference_k_values();
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (ks[i] == k) return i;
    throw std::invalid_argument("no reference row for k = " + std::to_string(k));
}

} // namespace detail

/// The solver problem a table's column tabulates.
inline RadiusProblem table_problem(TableId id, int k) {
    switch (id) {
    case TableId::T1: return RadiusProblem(RadiusKind::PaulsenRk, k);
    case TableId::T2: return RadiusProblem(RadiusKind::RefinedRk, k);
    case TableId::T3: return RadiusProblem(RadiusKind::RefinedSk, k);
    case TableId::T4A: return RadiusProblem(RadiusKind::RefinedRho, k, 5.0 / 6.0);
    case TableId::T4B: return RadiusProblem(RadiusKind::RefinedRho, k, 3.0 / 4.0);
    case TableId::T4C: return RadiusProblem(RadiusKind::RefinedRho, k, 2.0 / 3.0);
    case TableId::T4D: return RadiusProblem(RadiusKind::RefinedRho, k, 1.0 / 2.0);
    }
    throw std::invalid_argument("table_problem: unknown table");
}

/// Column label used when rendering the table.
inline std::string_view column_label(TableId id) {
    switch (id) {
    case TableId::T1: return "r_k";
    case TableId::T2: return "R_k";
    case TableId::T3: return "S_k";
    case TableId::T4A: return "rho_k(5/6)";
    case TableId::T4B: return "rho_k(3/4)";
    case TableId::T4C: return "rho_k(2/3)";
    case TableId::T4D: return "rho_k(1/2)";
    }
    throw std::invalid_argument("column_label: unknown table");
}

/// Printed reference entry for row k; throws when the table has no such row.
inline std::string_view reference_value(TableId id, int k) {
    return detail::reference_strings(id)[detail::reference_index(k)];
}

struct DiffEntry {
    int k = 0;
    double computed = 0.0;
    std::string printed;
    double tolerance = 0.0; // half a unit in the last printed decimal
    bool match = false;
};

/// Solves the table's problem at k and compares against the printed entry.
inline DiffEntry diff_row(TableId id, int k) {
    DiffEntry e;
    e.k = k;
    e.printed = std::string(reference_value(id, k));
    e.computed = solve(table_problem(id, k)).root;
    const auto dot = e.printed.find('.');
    const int decimals = dot == std::string::npos
                             ? 0
                             : static_cast<int>(e.printed.size() - dot - 1);
    e.tolerance = 0.5 * std::pow(10.0, -decimals);
    e.match = std::abs(e.computed - std::strtod(e.printed.c_str(), nullptr)) <= e.tolerance;
    return e;
}

} // namespace bohr
