#pragma once

// Property-check harness: samples disk self-maps with the required zero
// structure, evaluates the inequality left-hand sides at the computed
// critical radii with tail-inflated (one-sided) truncation, probes
// sharpness just beyond each radius through the extremal closed forms, and
// reports violations. All sampling is deterministic from the plan's seed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <bohr/radius.hpp>
#include <bohr/series.hpp>

namespace bohr {

enum class Theorem { Th1, Th2, Th3, ThB, Classical, Cor1 };

/// Accepted overshoot above 1 for the non-strict checks. The sample
/// families deliberately contain equality attainers (z^k at S_k, the
/// extremal family at rho), so exact-zero tolerance is not achievable in
/// floating point; strictness claims are tested separately.
inline constexpr double kOneSidedSlack = 1e-10;

/// Certified tail size the truncation order is chosen for.
inline constexpr double kTailTarget = 1e-13;

struct SamplePlan {
    int k = 2;
    int count = 100;
    int max_blaschke_degree = 6;
    double zero_modulus_cap = 0.95;
    std::uint64_t seed = 0;
};

struct VerificationReport {
    Theorem theorem{};
    double radius_used = 0.0;
    int samples_checked = 0;
    double max_lhs = 0.0; // largest tail-inflated left-hand side observed
    int violations = 0;
};

/// Smallest truncation order whose geometric tail r^{N+1}/(1-r) is at most
/// kTailTarget, floored at k + 200.
inline int certified_truncation_order(int k, double r) {
    detail::require_r_in_01(r);
    int n = k + 200;
    if (r > 0.0) {
        const double need = std::log(kTailTarget * (1.0 - r)) / std::log(r);
        if (need > static_cast<double>(n)) n = static_cast<int>(std::ceil(need));
    }
    return n;
}

namespace detail {

inline void validate(const SamplePlan& p) {
    if (p.k < 0) throw std::invalid_argument("SamplePlan: k must be >= 0");
    if (p.count < 1) throw std::invalid_argument("SamplePlan: count must be >= 1");
    if (p.max_blaschke_degree < 0)
        throw std::invalid_argument("SamplePlan: max_blaschke_degree must be >= 0");
    if (!(p.zero_modulus_cap > 0.0 && p.zero_modulus_cap < 1.0))
        throw std::invalid_argument("SamplePlan: zero_modulus_cap must lie in (0, 1)");
}

class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : eng_(seed) {}
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

struct Fold {
    double max_lhs = 0.0;
    int violations = 0;

    void one_sided(double lhs) {
        max_lhs = std::max(max_lhs, lhs);
        if (lhs > 1.0 + kOneSidedSlack) ++violations;
    }
    void strict(double lhs) {
        max_lhs = std::max(max_lhs, lhs);
        if (lhs >= 1.0) ++violations;
    }
};

} // namespace detail

/// Deterministic sample sequence: degree uniform on 0..max, zeros
/// area-uniform on the disk of radius zero_modulus_cap, phases uniform.
inline std::vector<BlaschkeSample> make_samples(const SamplePlan& plan) {
    detail::validate(plan);
    detail::SampleRng rng(plan.seed);
    std::vector<BlaschkeSample> out;
    out.reserve(static_cast<std::size_t>(plan.count));
    for (int i = 0; i < plan.count; ++i) {
        const int degree = std::min(
            plan.max_blaschke_degree,
            static_cast<int>(rng.uniform() * (plan.max_blaschke_degree + 1)));
        std::vector<std::complex<double>> zeros;
        zeros.reserve(static_cast<std::size_t>(degree));
        for (int j = 0; j < degree; ++j) {
            const double rad = plan.zero_modulus_cap * std::sqrt(rng.uniform());
            zeros.push_back(std::polar(rad, 2.0 * M_PI * rng.uniform()));
        }
        out.emplace_back(plan.k, std::move(zeros), 2.0 * M_PI * rng.uniform());
    }
    return out;
}

/// Samples whose leading modulus |a_k| equals a by construction: rotated
/// single-zero products z^k e^{i theta} (alpha - z)/(1 - conj(alpha) z)
/// with |alpha| = a, mixed with the plain extremal family member.
inline std::vector<BlaschkeSample> make_fixed_leading_samples(const SamplePlan& plan,
                                                              double a) {
    detail::validate(plan);
    if (!(a > 0.0 && a <= 1.0))
        throw std::invalid_argument("make_fixed_leading_samples: a must lie in (0, 1]");
    detail::SampleRng rng(plan.seed);
    std::vector<BlaschkeSample> out;
    out.reserve(static_cast<std::size_t>(plan.count));
    for (int i = 0; i < plan.count; ++i) {
        const bool rotated = rng.uniform() < 0.5;
        const double psi = 2.0 * M_PI * rng.uniform();
        const double theta = 2.0 * M_PI * rng.uniform();
        // a = 1 puts the factor's zero on the boundary; that degenerate
        // member is the constant-modulus monomial z^k itself.
        if (a == 1.0) {
            out.emplace_back(plan.k, std::vector<std::complex<double>>{}, theta);
            continue;
        }
        if (rotated)
            out.emplace_back(plan.k,
                             std::vector<std::complex<double>>{std::polar(a, psi)},
                             theta);
        else
            out.emplace_back(plan.k,
                             std::vector<std::complex<double>>{std::complex<double>(a, 0.0)},
                             0.0);
    }
    return out;
}

/// Refined check with the quadratic sum starting at k+1, at radius R_k.
inline VerificationReport check_theorem1(const SamplePlan& plan) {
    if (plan.k < 1) throw std::invalid_argument("check_theorem1: k must be >= 1");
    const double R = solve(RadiusProblem(RadiusKind::RefinedRk, plan.k)).root;
    const int order = certified_truncation_order(plan.k, R);
    detail::Fold fold;
    const auto samples = make_samples(plan);
    for (const auto& s : samples) {
        const CoefficientSeries cs = blaschke_coefficients(s, order);
        fold.one_sided(refined_lhs(cs, R, plan.k + 1).upper());
    }
    return {Theorem::Th1, R, static_cast<int>(samples.size()), fold.max_lhs,
            fold.violations};
}

/// Refined check with the quadratic sum starting at k, at radius S_k.
inline VerificationReport check_theorem2(const SamplePlan& plan) {
    if (plan.k < 1) throw std::invalid_argument("check_theorem2: k must be >= 1");
    const double S = solve(RadiusProblem(RadiusKind::RefinedSk, plan.k)).root;
    const int order = certified_truncation_order(plan.k, S);
    detail::Fold fold;
    const auto samples = make_samples(plan);
    for (const auto& s : samples) {
        const CoefficientSeries cs = blaschke_coefficients(s, order);
        fold.one_sided(refined_lhs(cs, S, plan.k).upper());
    }
    return {Theorem::Th2, S, static_cast<int>(samples.size()), fold.max_lhs,
            fold.violations};
}

/// Refined check at rho_k(a) over samples with |a_k| = a exactly. k
/// overrides plan.k so the (k, a) pair stays in one place.
inline VerificationReport check_theorem3(int k, double a, SamplePlan plan) {
    if (k < 1) throw std::invalid_argument("check_theorem3: k must be >= 1");
    plan.k = k;
    const double rho = solve(RadiusProblem(RadiusKind::RefinedRho, k, a)).root;
    const int order = certified_truncation_order(k, rho);
    detail::Fold fold;
    const auto samples = make_fixed_leading_samples(plan, a);
    for (const auto& s : samples) {
        const CoefficientSeries cs = blaschke_coefficients(s, order);
        if (std::abs(cs.leading_modulus() - a) > 1e-9)
            throw std::runtime_error("check_theorem3: sampler broke the |a_k| = a precondition");
        fold.one_sided(refined_lhs(cs, rho, k).upper());
    }
    return {Theorem::Th3, rho, static_cast<int>(samples.size()), fold.max_lhs,
            fold.violations};
}

/// Plain majorant check at r_k, plus the route through the quadratic-mean
/// bound: the majorant must also stay below r^k/sqrt(1-r^2).
inline VerificationReport check_theoremB(const SamplePlan& plan) {
    if (plan.k < 1) throw std::invalid_argument("check_theoremB: k must be >= 1");
    const double r = solve(RadiusProblem(RadiusKind::PaulsenRk, plan.k)).root;
    const int order = certified_truncation_order(plan.k, r);
    const double cs_bound = cauchy_schwarz_bound(plan.k, r);
    detail::Fold fold;
    const auto samples = make_samples(plan);
    for (const auto& s : samples) {
        const CoefficientSeries cs = blaschke_coefficients(s, order);
        const double lhs = bohr_sum(cs, r).upper();
        fold.one_sided(lhs);
        if (lhs > cs_bound + kOneSidedSlack) ++fold.violations;
    }
    return {Theorem::ThB, r, static_cast<int>(samples.size()), fold.max_lhs,
            fold.violations};
}

/// Majorant of phi_a(z) = (a - z)/(1 - a z): a + (1 - a^2) r/(1 - a r).
inline double phi_bohr_sum(double a, double r) {
    if (!(a >= 0.0 && a <= 1.0))
        throw std::invalid_argument("phi_bohr_sum: a must lie in [0, 1]");
    detail::require_r_in_01(r);
    return a + (1.0 - a * a) * r / (1.0 - a * r);
}

/// Classical check at r = 1/3 on unrestricted samples (k = 0):
/// |a_0| + sum_{n>=1} |a_n| r^n stays <= 1. The tail uses the coefficient
/// bound |a_n| <= 1 - |a_0|^2 (n >= 1), which keeps constants exact.
inline VerificationReport check_classical(SamplePlan plan) {
    plan.k = 0;
    const double r = 1.0 / 3.0;
    const int order = certified_truncation_order(0, r);
    detail::Fold fold;
    const auto samples = make_samples(plan);
    for (const auto& s : samples) {
        const CoefficientSeries cs = blaschke_coefficients(s, order);
        const double a0 = cs.leading_modulus();
        long double sum = 0.0L;
        long double rn = r;
        const auto& m = cs.moduli();
        for (std::size_t n = 1; n < m.size(); ++n) {
            sum += m[n] * rn;
            rn *= r;
        }
        const double tail =
            (1.0 - a0 * a0) * static_cast<double>(rn / (1.0L - r));
        fold.one_sided(a0 + static_cast<double>(sum) + tail);
    }
    return {Theorem::Classical, r, static_cast<int>(samples.size()), fold.max_lhs,
            fold.violations};
}

/// Strict majorant check at R_k/2 and R_k (no slack: the quadratic-mean
/// cap keeps every admissible sum well below 1), plus the single-term
/// bound |a_k| R_k^k < 1.
inline VerificationReport check_corollary1(const SamplePlan& plan) {
    if (plan.k < 1) throw std::invalid_argument("check_corollary1: k must be >= 1");
    const double R = solve(RadiusProblem(RadiusKind::RefinedRk, plan.k)).root;
    const int order = certified_truncation_order(plan.k, R);
    detail::Fold fold;
    const auto samples = make_samples(plan);
    for (const auto& s : samples) {
        const CoefficientSeries cs = blaschke_coefficients(s, order);
        for (double r : {0.5 * R, R})
            fold.strict(bohr_sum(cs, r).upper());
        if (!(cs.leading_modulus() * std::pow(R, plan.k) < 1.0)) ++fold.violations;
    }
    return {Theorem::Cor1, R, static_cast<int>(samples.size()), fold.max_lhs,
            fold.violations};
}

struct EqualityWitness {
    double radius = 0.0;
    double a = 0.0;   // extremal parameter attaining equality
    double lhs = 0.0; // exact closed-form left-hand side at the radius
};

/// Exact equality attainment at the critical radius, through the closed
/// forms (no truncation). Only the three refined bounds have attainers.
inline EqualityWitness equality_witness(Theorem t, int k,
                                        std::optional<double> a = std::nullopt) {
    if (k < 1) throw std::invalid_argument("equality_witness: k must be >= 1");
    switch (t) {
    case Theorem::Th1: {
        const double R = solve(RadiusProblem(RadiusKind::RefinedRk, k)).root;
        const double astar = std::clamp((1.0 - R) / (2.0 * R), 0.0, 1.0);
        return {R, astar,
                refined_lhs_extremal_exact(ExtremalFunction(k, astar), R, k + 1)};
    }
    case Theorem::Th2: {
        const double S = solve(RadiusProblem(RadiusKind::RefinedSk, k)).root;
        // witness z^k: refined value S^k (3 - S)/(2(1 - S))
        return {S, 1.0, std::pow(S, k) * (3.0 - S) / (2.0 * (1.0 - S))};
    }
    case Theorem::Th3: {
        if (!a) throw std::invalid_argument("equality_witness: this bound requires a");
        const double rho = solve(RadiusProblem(RadiusKind::RefinedRho, k, *a)).root;
        return {rho, *a, refined_lhs_extremal_exact(ExtremalFunction(k, *a), rho, k)};
    }
    default:
        throw std::invalid_argument("equality_witness: no equality attainer for this check");
    }
}

/// Evaluates the relevant extremal exact LHS at radius + epsilon for each
/// epsilon and insists it exceeds 1; returns the (r, lhs) pairs. The first
/// bound re-optimizes the extremal parameter at each radius.
inline std::vector<std::pair<double, double>>
sharpness_sweep(Theorem t, int k, std::optional<double> a,
                const std::vector<double>& epsilons) {
    if (k < 1) throw std::invalid_argument("sharpness_sweep: k must be >= 1");
    double base = 0.0;
    switch (t) {
    case Theorem::Th1:
        base = solve(RadiusProblem(RadiusKind::RefinedRk, k)).root;
        break;
    case Theorem::Th2:
        base = solve(RadiusProblem(RadiusKind::RefinedSk, k)).root;
        break;
    case Theorem::Th3:
        if (!a) throw std::invalid_argument("sharpness_sweep: this bound requires a");
        base = solve(RadiusProblem(RadiusKind::RefinedRho, k, *a)).root;
        break;
    default:
        throw std::invalid_argument("sharpness_sweep: only the three refined bounds are sharp");
    }

    std::vector<std::pair<double, double>> out;
    out.reserve(epsilons.size());
    for (double eps : epsilons) {
        if (!(eps > 0.0))
            throw std::invalid_argument("sharpness_sweep: epsilons must be positive");
        const double r = base + eps;
        if (r >= 1.0)
            throw std::invalid_argument("sharpness_sweep: radius + epsilon reaches 1");
        double lhs = 0.0;
        switch (t) {
        case Theorem::Th1: {
            const double astar = std::clamp((1.0 - r) / (2.0 * r), 0.0, 1.0);
            lhs = refined_lhs_extremal_exact(ExtremalFunction(k, astar), r, k + 1);
            break;
        }
        case Theorem::Th2:
            lhs = std::pow(r, k) * (3.0 - r) / (2.0 * (1.0 - r));
            break;
        case Theorem::Th3:
            lhs = refined_lhs_extremal_exact(ExtremalFunction(k, *a), r, k);
            break;
        default:
            break;
        }
        if (!(lhs > 1.0))
            throw std::runtime_error("sharpness_sweep: extremal value failed to exceed 1");
        out.emplace_back(r, lhs);
    }
    return out;
}

} // namespace bohr
