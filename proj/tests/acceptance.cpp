// Acceptance gate: runs every release criterion at its stated tolerance and
// prints one [PASS]/[FAIL] line per criterion. Exit code is the number of
// failed criteria.

#include <bohr/cli.hpp>
#include <bohr/radius.hpp>
#include <bohr/series.hpp>
#include <bohr/tables.hpp>
#include <bohr/verify.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cplx = std::complex<double>;
using clock_type = std::chrono::steady_clock;

struct Gate {
    int failures = 0;

    void report(int criterion, bool pass, const std::string& detail,
                double seconds = -1.0) {
        std::printf("[%s] criterion %d: %s", pass ? "PASS" : "FAIL", criterion,
                    detail.c_str());
        if (seconds >= 0.0) std::printf(" (%.2fs)", seconds);
        std::printf("\n");
        if (!pass) ++failures;
    }
};

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

// Independent expansion: each factor (alpha - z)/(1 - conj(alpha) z) as
// (alpha - z) sum_m conj(alpha)^m z^m, then naive polynomial products.
std::vector<cplx> brute_force_coefficients(const bohr::BlaschkeSample& s, int order) {
    const std::size_t len = static_cast<std::size_t>(order) + 1;
    std::vector<cplx> poly(len, 0.0);
    poly[static_cast<std::size_t>(s.k)] = std::polar(1.0, s.rotation);
    for (const auto& alpha : s.zeros) {
        std::vector<cplx> factor(len, 0.0);
        factor[0] = alpha;
        const cplx ca = std::conj(alpha);
        cplx ca_pow = 1.0;
        for (std::size_t m = 1; m < len; ++m) {
            factor[m] = (alpha * ca - 1.0) * ca_pow;
            ca_pow *= ca;
        }
        std::vector<cplx> out(len, 0.0);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j)
                out[i + j] += poly[i] * factor[j];
        poly = std::move(out);
    }
    return poly;
}

bohr::BlaschkeSample random_sample(Rng& rng, int max_k, int max_degree,
                                   double cap = 0.95) {
    const int k = std::min(max_k, static_cast<int>(rng.uniform() * (max_k + 1)));
    const int degree =
        std::min(max_degree, static_cast<int>(rng.uniform() * (max_degree + 1)));
    std::vector<cplx> zeros;
    for (int i = 0; i < degree; ++i)
        zeros.push_back(std::polar(cap * std::sqrt(rng.uniform()),
                                   2.0 * M_PI * rng.uniform()));
    return bohr::BlaschkeSample(k, std::move(zeros), 2.0 * M_PI * rng.uniform());
}

double solve_root(bohr::RadiusKind kind, int k,
                  std::optional<double> a = std::nullopt) {
    return bohr::solve(bohr::RadiusProblem(kind, k, a)).root;
}

// 1. Every reference table row reproduced through the CLI diff path.
void criterion_tables(Gate& gate) {
    const auto start = clock_type::now();
    bool pass = true;
    std::string detail = "table diff";
    for (const char* which : {"t1", "t2", "t3", "t4a", "t4b", "t4c", "t4d"}) {
        std::ostringstream out, err;
        const int code =
            bohr::cli::run({"table", "--which", which, "--diff"}, out, err);
        const bool ok =
            code == 0 && out.str().find("20/20 match") != std::string::npos;
        if (!ok) {
            pass = false;
            detail += std::string(" ") + which + "=MISMATCH";
        }
    }
    const double elapsed = seconds_since(start);
    if (pass) detail = "140/140 reference table entries match";
    if (elapsed >= 2.0) {
        pass = false;
        detail += " [exceeded 2s budget]";
    }
    gate.report(1, pass, detail, elapsed);
}

// 2. Exact algebraic identities to 1e-12.
void criterion_identities(Gate& gate) {
    using bohr::RadiusKind;
    bool pass = true;
    std::string detail;

    const double s2 = solve_root(RadiusKind::RefinedSk, 2);
    if (std::abs(s2 - (2.0 - std::sqrt(2.0))) > 1e-12) {
        pass = false;
        detail += " S_2!=2-sqrt2";
    }
    const double rho = solve_root(RadiusKind::RefinedRho, 2, 1.0 / std::sqrt(2.0));
    if (std::abs(rho - (std::sqrt(5.0) - 1.0) / 2.0) > 1e-12) {
        pass = false;
        detail += " rho_2(1/sqrt2)!=(sqrt5-1)/2";
    }
    const double r2 = solve_root(RadiusKind::PaulsenRk, 2);
    if (std::abs(r2 - std::sqrt((std::sqrt(5.0) - 1.0) / 2.0)) > 1e-12) {
        pass = false;
        detail += " r_2!=sqrt((sqrt5-1)/2)";
    }
    for (int k = 2; k <= 100; ++k) {
        const double a1 = solve_root(RadiusKind::RefinedRho, k, 1.0);
        const double sk = solve_root(RadiusKind::RefinedSk, k);
        if (std::abs(a1 - sk) > 1e-12) {
            pass = false;
            detail += " rho_k(1)!=S_k@k=" + std::to_string(k);
            break;
        }
    }
    gate.report(2, pass,
                pass ? "exact identities hold to 1e-12" : "identities broken:" + detail);
}

// 3. Strict ordering S_k < R_k < r_k for k in 2..100.
void criterion_ordering(Gate& gate) {
    using bohr::RadiusKind;
    bool pass = true;
    std::string detail = "S_k < R_k < r_k strict for k in 2..100";
    for (int k = 2; k <= 100; ++k) {
        const double sk = solve_root(RadiusKind::RefinedSk, k);
        const double rk = solve_root(RadiusKind::RefinedRk, k);
        const double pk = solve_root(RadiusKind::PaulsenRk, k);
        if (!(sk < rk && rk < pk)) {
            pass = false;
            detail = "ordering fails at k = " + std::to_string(k);
            break;
        }
    }
    gate.report(3, pass, detail);
}

// 4. Equality witnesses at the critical radii, 1e-10.
void criterion_witnesses(Gate& gate) {
    bool pass = true;
    std::string detail;
    for (int k : {2, 5, 10}) {
        const auto w1 = bohr::equality_witness(bohr::Theorem::Th1, k);
        if (std::abs(w1.lhs - 1.0) > 1e-10) {
            pass = false;
            detail += " th1@k=" + std::to_string(k);
        }
        const auto w2 = bohr::equality_witness(bohr::Theorem::Th2, k);
        if (std::abs(w2.lhs - 1.0) > 1e-10) {
            pass = false;
            detail += " th2@k=" + std::to_string(k);
        }
    }
    const std::pair<int, double> rho_cases[] = {{2, 0.5}, {3, 2.0 / 3.0}, {10, 5.0 / 6.0}};
    for (const auto& [k, a] : rho_cases) {
        const auto w3 = bohr::equality_witness(bohr::Theorem::Th3, k, a);
        if (std::abs(w3.lhs - 1.0) > 1e-10) {
            pass = false;
            detail += " th3@k=" + std::to_string(k);
        }
    }
    gate.report(4, pass,
                pass ? "all equality witnesses give 1 within 1e-10"
                     : "witnesses off:" + detail);
}

// 5. Extremal exact LHS exceeds 1 at radius + eps for three eps scales.
void criterion_sharpness(Gate& gate) {
    const std::vector<double> eps{1e-3, 1e-2, 1e-1};
    bool pass = true;
    std::string detail = "extremal LHS > 1 at radius + eps for all three scales";
    try {
        for (const auto& sweep :
             {bohr::sharpness_sweep(bohr::Theorem::Th1, 2, std::nullopt, eps),
              bohr::sharpness_sweep(bohr::Theorem::Th2, 2, std::nullopt, eps),
              bohr::sharpness_sweep(bohr::Theorem::Th3, 2, 0.5, eps)}) {
            for (const auto& [r, lhs] : sweep)
                if (!(lhs > 1.0)) pass = false;
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("sweep failed: ") + e.what();
    }
    gate.report(5, pass, detail);
}

// 6. Seeded property suites with zero violations.
void criterion_property_suites(Gate& gate) {
    const auto start = clock_type::now();
    bool pass = true;
    std::string detail;
    int total = 0;

    auto tally = [&](const bohr::VerificationReport& rep, const std::string& name) {
        total += rep.samples_checked;
        if (rep.violations != 0) {
            pass = false;
            detail += " " + name + ":" + std::to_string(rep.violations);
        }
    };

    for (int k : {2, 3, 5, 10}) {
        // The named seeds pin down the documented runs; the rest vary by k.
        const std::uint64_t th1_seed = (k == 2) ? 42 : 100 + k;
        const std::uint64_t th2_seed = (k == 3) ? 7 : 200 + k;
        const std::uint64_t thb_seed = (k == 2) ? 1 : 300 + k;
        const std::uint64_t cor_seed = (k == 2) ? 3 : 400 + k;
        tally(bohr::check_theorem1({k, 500, 6, 0.95, th1_seed}),
              "th1@k=" + std::to_string(k));
        tally(bohr::check_theorem2({k, 500, 6, 0.95, th2_seed}),
              "th2@k=" + std::to_string(k));
        tally(bohr::check_theoremB({k, 500, 6, 0.95, thb_seed}),
              "thb@k=" + std::to_string(k));
        tally(bohr::check_corollary1({k, 500, 6, 0.95, cor_seed}),
              "cor1@k=" + std::to_string(k));
    }
    tally(bohr::check_classical({0, 500, 6, 0.95, 11}), "classical");

    const double elapsed = seconds_since(start);
    if (elapsed >= 30.0) {
        pass = false;
        detail += " [exceeded 30s budget]";
    }
    gate.report(6, pass,
                pass ? std::to_string(total) + " samples, zero violations"
                     : "violations:" + detail,
                elapsed);
}

// 7. Coefficient oracle equivalence and closed-form vs truncated agreement.
void criterion_oracles(Gate& gate) {
    bool pass = true;
    std::string detail;

    Rng rng(987654321);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_sample(rng, 4, 6);
        const int order = std::min(50, s.k + 44);
        const auto cs = bohr::blaschke_coefficients(s, order);
        const auto ref = brute_force_coefficients(s, order);
        for (int n = s.k; n <= order; ++n) {
            const double diff = std::abs(cs.moduli()[static_cast<std::size_t>(n - s.k)] -
                                         std::abs(ref[static_cast<std::size_t>(n)]));
            if (diff > 1e-12) {
                pass = false;
                detail += " blaschke-trial" + std::to_string(trial);
                break;
            }
        }
    }

    Rng rng2(123456789);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 1 + static_cast<int>(rng2.uniform() * 6);
        const double a = rng2.uniform();
        const double r = 0.05 + 0.90 * rng2.uniform();
        const bohr::ExtremalFunction ef(k, a);
        const auto cs = bohr::extremal_coefficients(
            ef, bohr::certified_truncation_order(k, r));

        const double exact_plain = bohr::extremal_bohr_sum_exact(ef, r);
        const auto plain = bohr::bohr_sum(cs, r);
        bool ok = plain.value <= exact_plain * (1.0 + 1e-13) + 1e-14 &&
                  exact_plain <= plain.upper() * (1.0 + 1e-13) + 1e-14;
        for (int start : {k, k + 1}) {
            const double exact = bohr::refined_lhs_extremal_exact(ef, r, start);
            const auto fv = bohr::refined_lhs(cs, r, start);
            ok = ok && fv.value <= exact * (1.0 + 1e-13) + 1e-14 &&
                 exact <= fv.upper() * (1.0 + 1e-13) + 1e-14;
        }
        if (!ok) {
            pass = false;
            detail += " closed-form-trial" + std::to_string(trial);
        }
    }

    gate.report(7, pass,
                pass ? "100 coefficient cases and 50 closed-form cases agree"
                     : "oracle mismatches:" + detail);
}

// 8. Coefficient bound |b_n| <= 1 - |b_0|^2 for n >= 1 on sampled inner
// functions.
void criterion_rogosinski(Gate& gate) {
    bool pass = true;
    std::string detail = "|b_n| <= 1 - |b_0|^2 + 1e-12 on 200 inner samples";
    Rng rng(5551212);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = random_sample(rng, 0, 6);
        const auto cs = bohr::blaschke_coefficients(s, 60);
        const double cap = 1.0 - cs.moduli()[0] * cs.moduli()[0];
        for (std::size_t n = 1; n < cs.moduli().size(); ++n) {
            if (cs.moduli()[n] > cap + 1e-12) {
                pass = false;
                detail = "bound violated at trial " + std::to_string(trial) +
                         ", n = " + std::to_string(n);
                break;
            }
        }
        if (!pass) break;
    }
    gate.report(8, pass, detail);
}

} // namespace

int main() {
    Gate gate;
    criterion_tables(gate);
    criterion_identities(gate);
    criterion_ordering(gate);
    criterion_witnesses(gate);
    criterion_sharpness(gate);
    criterion_property_suites(gate);
    criterion_oracles(gate);
    criterion_rogosinski(gate);
    if (gate.failures == 0)
        std::printf("all 8 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", gate.failures);
    return gate.failures;
}
