#pragma once

// Coefficient-modulus series for self-maps of the unit disk with a zero of
// order k at the origin, plus the majorant ("Bohr") functionals built on
// them. Truncated evaluations carry a certified geometric tail bound so
// callers can do one-sided comparisons against a threshold.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bohr {

// Computed moduli may overshoot an exact unit bound by rounding noise; this
// is the largest overshoot accepted before construction fails.
inline constexpr double kUnitBoundSlack = 1e-9;

/// Truncated functional value together with a rigorous bound on the
/// discarded tail. The true value lies in [value, value + tail_bound]
/// whenever `certified` is set; otherwise tail_bound is meaningless.
struct FunctionalValue {
    double value = 0.0;
    double tail_bound = 0.0;
    bool certified = true;

    double upper() const { return value + tail_bound; }
};

/// Finite prefix |a_k|, ..., |a_N| of the coefficient-modulus sequence of a
/// power series starting at z^k. `unit_bound_certified` asserts |a_n| <= 1
/// for ALL n (tracked and untracked), which is what justifies the geometric
/// tail bounds downstream.
class CoefficientSeries {
public:
    CoefficientSeries(int zero_order, std::vector<double> moduli,
                      bool unit_bound_certified)
        : k_(zero_order), moduli_(std::move(moduli)),
          certified_(unit_bound_certified) {
        if (k_ < 0)
            throw std::invalid_argument("CoefficientSeries: zero order must be >= 0");
        if (moduli_.empty())
            throw std::invalid_argument("CoefficientSeries: moduli must be nonempty");
        for (double& m : moduli_) {
            if (!(m >= 0.0) || !std::isfinite(m))
                throw std::invalid_argument("CoefficientSeries: moduli must be finite and >= 0");
            if (certified_) {
                if (m > 1.0 + kUnitBoundSlack)
                    throw std::invalid_argument(
                        "CoefficientSeries: modulus exceeds certified unit bound");
                m = std::min(m, 1.0);
            }
        }
    }

    int zero_order() const { return k_; }
    int truncation_order() const { return k_ + static_cast<int>(moduli_.size()) - 1; }
    const std::vector<double>& moduli() const { return moduli_; }
    bool unit_bound_certified() const { return certified_; }

    /// |a_k|, the first tracked modulus.
    double leading_modulus() const { return moduli_.front(); }

private:
    int k_;
    std::vector<double> moduli_;
    bool certified_;
};

/// The one-parameter family z^k (a - z)/(1 - a z), a in [0, 1]. Attains
/// equality in the refined inequalities at their critical radii.
struct ExtremalFunction {
    int k;
    double a;

    ExtremalFunction(int zero_order, double parameter) : k(zero_order), a(parameter) {
        if (k < 1)
            throw std::invalid_argument("ExtremalFunction: k must be >= 1");
        if (!(a >= 0.0 && a <= 1.0))
            throw std::invalid_argument("ExtremalFunction: a must lie in [0, 1]");
    }
};

/// z^k e^{i rot} prod_j (alpha_j - z)/(1 - conj(alpha_j) z): a finite
/// Blaschke product times a monomial. Maps the disk into the closed disk,
/// so its coefficient moduli are certified <= 1. k = 0 gives a plain inner
/// function (used for the classical Bohr checks).
struct BlaschkeSample {
    int k = 0;
    std::vector<std::complex<double>> zeros;
    double rotation = 0.0;

    BlaschkeSample(int zero_order, std::vector<std::complex<double>> zs, double rot)
        : k(zero_order), zeros(std::move(zs)), rotation(rot) {
        if (k < 0)
            throw std::invalid_argument("BlaschkeSample: k must be >= 0");
        for (const auto& z : zeros)
            if (!(std::abs(z) < 1.0))
                throw std::invalid_argument("BlaschkeSample: zeros must lie inside the unit disk");
        rotation = std::fmod(rotation, 2.0 * M_PI);
        if (rotation < 0.0) rotation += 2.0 * M_PI;
    }
};

/// Point evaluation of the analytic function a BlaschkeSample denotes.
inline std::complex<double> evaluate(const BlaschkeSample& s, std::complex<double> z) {
    std::complex<double> w = std::polar(1.0, s.rotation);
    for (int i = 0; i < s.k; ++i) w *= z;
    for (const auto& alpha : s.zeros)
        w *= (alpha - z) / (1.0 - std::conj(alpha) * z);
    return w;
}

namespace detail {

inline void require_r_in_01(double r, bool exclude_zero = false) {
    if (!(r >= 0.0 && r < 1.0) || (exclude_zero && r == 0.0))
        throw std::invalid_argument(exclude_zero ? "r must lie in (0, 1)"
                                                 : "r must lie in [0, 1)");
}

inline void require_start(const CoefficientSeries& cs, int start) {
    if (start != cs.zero_order() && start != cs.zero_order() + 1)
        throw std::invalid_argument("start must be k or k+1");
}

} // namespace detail

/// Coefficient moduli of the extremal function up to `order`:
/// |a_k| = a and |a_{k+n}| = (1 - a^2) a^{n-1} for n >= 1.
inline CoefficientSeries extremal_coefficients(const ExtremalFunction& ef, int order) {
    if (order < ef.k)
        throw std::invalid_argument("extremal_coefficients: order must be >= k");
    std::vector<double> moduli(static_cast<std::size_t>(order - ef.k) + 1);
    moduli[0] = ef.a;
    double coef = 1.0 - ef.a * ef.a; // (1 - a^2) a^{n-1}, built multiplicatively
    for (std::size_t n = 1; n < moduli.size(); ++n) {
        moduli[n] = coef;
        coef *= ef.a;
    }
    return CoefficientSeries(ef.k, std::move(moduli), true);
}

/// Coefficient moduli of a BlaschkeSample up to `order`. The numerator
/// polynomial is multiplied by the reciprocal series of the denominator
/// polynomial, the reciprocal coming from the standard convolution
/// recurrence c_n = -sum_{j>=1} d_j c_{n-j} (d_0 = 1).
inline CoefficientSeries blaschke_coefficients(const BlaschkeSample& s, int order) {
    if (order < s.k)
        throw std::invalid_argument("blaschke_coefficients: order must be >= k");

    const std::size_t inner_len = static_cast<std::size_t>(order - s.k) + 1;
    using cplx = std::complex<double>;

    // numerator e^{i rot} prod (alpha_j - z) and denominator prod (1 - conj(alpha_j) z)
    std::vector<cplx> num{std::polar(1.0, s.rotation)};
    std::vector<cplx> den{1.0};
    for (const auto& alpha : s.zeros) {
        num.resize(num.size() + 1, 0.0);
        for (std::size_t i = num.size() - 1; i > 0; --i)
            num[i] = alpha * num[i] - num[i - 1];
        num[0] *= alpha;

        den.resize(den.size() + 1, 0.0);
        for (std::size_t i = den.size() - 1; i > 0; --i)
            den[i] = den[i] - std::conj(alpha) * den[i - 1];
    }

    std::vector<cplx> rec(inner_len, 0.0);
    rec[0] = 1.0;
    for (std::size_t n = 1; n < inner_len; ++n) {
        cplx acc = 0.0;
        for (std::size_t j = 1; j < den.size() && j <= n; ++j)
            acc += den[j] * rec[n - j];
        rec[n] = -acc;
    }

    std::vector<double> moduli(inner_len);
    for (std::size_t n = 0; n < inner_len; ++n) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < num.size() && j <= n; ++j)
            acc += num[j] * rec[n - j];
        moduli[n] = std::abs(acc);
    }
    return CoefficientSeries(s.k, std::move(moduli), true);
}

/// Majorant sum sum_{n=k}^{N} |a_n| r^n with tail bound r^{N+1}/(1-r).
inline FunctionalValue bohr_sum(const CoefficientSeries& cs, double r) {
    detail::require_r_in_01(r);
    long double acc = 0.0L;
    long double rn = std::pow(static_cast<long double>(r), cs.zero_order());
    for (double m : cs.moduli()) {
        acc += m * rn;
        rn *= r;
    }
    FunctionalValue fv;
    fv.value = static_cast<double>(acc);
    if (cs.unit_bound_certified()) {
        // rn is now r^{N+1}
        fv.tail_bound = static_cast<double>(rn / (1.0L - r));
        fv.certified = true;
    } else {
        fv.tail_bound = 0.0;
        fv.certified = false;
    }
    return fv;
}

/// Closed form of bohr_sum for the extremal family (no truncation):
/// a r^k + (1 - a^2) r^{k+1}/(1 - a r).
inline double extremal_bohr_sum_exact(const ExtremalFunction& ef, double r) {
    detail::require_r_in_01(r);
    const double rk = std::pow(r, ef.k);
    return ef.a * rk + (1.0 - ef.a * ef.a) * rk * r / (1.0 - ef.a * r);
}

/// Quadratic sum sum_{n=start}^{N} |a_n|^2 r^{2n}, start in {k, k+1}, with
/// tail bound r^{2(N+1)}/(1-r^2).
inline FunctionalValue quadratic_sum(const CoefficientSeries& cs, double r, int start) {
    detail::require_r_in_01(r);
    detail::require_start(cs, start);
    const double r2 = r * r;
    long double acc = 0.0L;
    long double r2n = std::pow(static_cast<long double>(r2), start);
    const auto& m = cs.moduli();
    for (std::size_t i = static_cast<std::size_t>(start - cs.zero_order()); i < m.size(); ++i) {
        acc += static_cast<long double>(m[i]) * m[i] * r2n;
        r2n *= r2;
    }
    FunctionalValue fv;
    fv.value = static_cast<double>(acc);
    if (cs.unit_bound_certified()) {
        long double tail = std::pow(static_cast<long double>(r2), cs.truncation_order() + 1);
        fv.tail_bound = static_cast<double>(tail / (1.0L - r2));
        fv.certified = true;
    } else {
        fv.tail_bound = 0.0;
        fv.certified = false;
    }
    return fv;
}

/// Weight multiplying the quadratic sum in the refined functionals:
/// r^{-k}/(1 + |a_k|) + r^{1-k}/(1 - r).
inline double refined_weight(int k, double leading_modulus, double r) {
    detail::require_r_in_01(r, /*exclude_zero=*/true);
    return std::pow(r, -k) / (1.0 + leading_modulus) +
           std::pow(r, 1 - k) / (1.0 - r);
}

/// Refined functional: bohr_sum plus the weighted quadratic sum. The weight
/// is applied to the quadratic tail as well, so the result stays a one-sided
/// upper-bound certificate.
inline FunctionalValue refined_lhs(const CoefficientSeries& cs, double r, int start) {
    detail::require_r_in_01(r, /*exclude_zero=*/true);
    detail::require_start(cs, start);
    const double w = refined_weight(cs.zero_order(), cs.leading_modulus(), r);
    const FunctionalValue b = bohr_sum(cs, r);
    const FunctionalValue q = quadratic_sum(cs, r, start);
    FunctionalValue fv;
    fv.value = b.value + w * q.value;
    fv.tail_bound = b.tail_bound + w * q.tail_bound;
    fv.certified = b.certified && q.certified;
    return fv;
}

/// Closed form of refined_lhs on the extremal family. start = k gives
/// r^k [2a^2 + a + r(1 - 2a^2)] / ((1+a)(1-r)); start = k+1 gives
/// a r^k + (1 - a^2) r^{k+1}/(1 - r).
inline double refined_lhs_extremal_exact(const ExtremalFunction& ef, double r, int start) {
    detail::require_r_in_01(r, /*exclude_zero=*/true);
    if (start != ef.k && start != ef.k + 1)
        throw std::invalid_argument("start must be k or k+1");
    const double a = ef.a;
    const double rk = std::pow(r, ef.k);
    if (start == ef.k)
        return rk * (2.0 * a * a + a + r * (1.0 - 2.0 * a * a)) /
               ((1.0 + a) * (1.0 - r));
    return a * rk + (1.0 - a * a) * rk * r / (1.0 - r);
}

/// Cauchy-Schwarz majorant bound r^k / sqrt(1 - r^2) for series starting at z^k.
inline double cauchy_schwarz_bound(int k, double r) {
    if (k < 1)
        throw std::invalid_argument("cauchy_schwarz_bound: k must be >= 1");
    detail::require_r_in_01(r);
    return std::pow(r, k) / std::sqrt(1.0 - r * r);
}

} // namespace bohr
