#pragma once

/**
 * @file wrc.hpp
 * @brief Water retention curve models over a fractal pore space, and
 *        estimation of the fractal dimension from retention data.
 *
 * Evaluated models (E = 3, h in [h_min, h_max]):
 *
 *   PSF  theta(h) = (theta_s - A) + A * (h/h_min)^(D_f - 3)
 *   TW   theta(h) = theta_s * (h/h_min)^(D_f - 3)            (PSF with A = theta_s)
 *   RS   theta(h) = theta_s - 1 + (h/h_min)^(D_f - 3)        (PSF with A = 1)
 *
 * The log-log transform x = log10(h_min/h), y = log10((theta + A - theta_s)/A)
 * maps model data onto the line y = (3 - D_f) x; ordinary least squares on the
 * transformed points estimates D_f. Real soils show two scaling regimes, so
 * the bi-modal fit searches every interior split (each side >= 3 points) and
 * keeps the split with minimal total squared residual, ties going to the
 * split nearest the median x.
 *
 * Scalar evaluation is binary double precision; the fits are deterministic
 * because the breakpoint search is exhaustive.
 */

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gporo/errors.hpp>

namespace gporo {

enum class WrcModel { PSF, TW, RS };

inline const char* to_string(WrcModel m) {
    switch (m) {
        case WrcModel::PSF: return "psf";
        case WrcModel::TW: return "tw";
        case WrcModel::RS: return "rs";
    }
    return "?";
}

struct WrcParams {
    WrcModel model = WrcModel::PSF;
    double theta_s = 0.5;  // saturated water content (equals total porosity)
    // Pore fraction weight p/(p+s); PSF only. The Bird et al. range is
    // theta_s <= A <= 1, but published parameter sets (including the curves
    // reproduced by the CLI) sit below it, so only 0 < A <= 1 is enforced.
    std::optional<double> A;
    std::optional<double> p, s;  // per-scale pore and solid fractions
    double h_min = 1.0;          // air-entry pressure head, cm
    double h_max = std::numeric_limits<double>::infinity();
    double d_f = 2.5;            // fractal dimension, in (0, 3)
    double alpha = 1.0;          // capillarity length, cm (pore size l = alpha/h)
    std::optional<double> phi_max;  // saturated porosity (RS); defaults to theta_s

    static constexpr double euclidean_dim = 3.0;

    /// The A actually used: the reductions pin it for TW and RS.
    double effective_A() const {
        if (model == WrcModel::TW) return theta_s;
        if (model == WrcModel::RS) return 1.0;
        if (A) return *A;
        if (p && s) {
            if (*p + *s <= 0) throw domain_error("p + s must be positive");
            return *p / (*p + *s);
        }
        throw domain_error("PSF parameters need A (or both p and s)");
    }

    double effective_phi_max() const { return phi_max ? *phi_max : theta_s; }
    double l_max() const { return alpha / h_min; }

    void validate() const {
        if (!(theta_s > 0.0) || theta_s > 1.0)
            throw domain_error("theta_s must lie in (0, 1]");
        if (!(h_min > 0.0)) throw domain_error("h_min must be positive");
        if (!(h_max > h_min)) throw domain_error("h_max must exceed h_min");
        if (!(d_f > 0.0) || !(d_f < euclidean_dim))
            throw domain_error("fractal dimension must lie in (0, 3)");
        if (!(alpha > 0.0)) throw domain_error("capillarity length must be positive");
        if (model == WrcModel::PSF) {
            double a = effective_A();
            if (!(a > 0.0) || a > 1.0) throw domain_error("PSF requires 0 < A <= 1");
            if (A && p && s && *A != *p / (*p + *s))
                throw domain_error("A is inconsistent with p/(p+s)");
        }
    }
};

struct RetentionPoint {
    double h;      // pressure head, cm
    double theta;  // volumetric water content
};

struct ThetaResult {
    double value;
    bool clamped;  // formula went negative and was clamped to zero (RS can)
};

inline ThetaResult theta(const WrcParams& params, double h) {
    params.validate();
    if (!(h >= params.h_min) || !(h <= params.h_max))
        throw domain_error("head " + std::to_string(h) + " outside [h_min, h_max]");
    double scale = std::pow(h / params.h_min, params.d_f - WrcParams::euclidean_dim);
    double value = 0.0;
    switch (params.model) {
        case WrcModel::PSF: {
            double a = params.effective_A();
            value = (params.theta_s - a) + a * scale;
            break;
        }
        case WrcModel::TW: value = params.theta_s * scale; break;
        case WrcModel::RS: value = params.theta_s - 1.0 + scale; break;
    }
    if (value < 0.0) return {0.0, true};
    return {value, false};
}

/// Partial porosity [phi <= l] contributed by pores up to size l
/// (l_max = alpha/h_min). Defined by the TW and RS pore-size distributions;
/// by the Laplace law it equals the head-side expression at h = alpha/l.
inline double partial_porosity(const WrcParams& params, double l) {
    params.validate();
    if (params.model == WrcModel::PSF)
        throw domain_error("partial porosity is defined for the tw and rs models");
    if (!(l > 0.0) || l > params.l_max())
        throw domain_error("pore size " + std::to_string(l) + " outside (0, l_max]");
    double scale = std::pow(l / params.l_max(), WrcParams::euclidean_dim - params.d_f);
    if (params.model == WrcModel::TW) return params.theta_s * scale;
    return params.effective_phi_max() - 1.0 + scale;
}

enum class ReducedForm { TylerWheatcraft, RieuSposito, General };

inline const char* to_string(ReducedForm f) {
    switch (f) {
        case ReducedForm::TylerWheatcraft: return "tw";
        case ReducedForm::RieuSposito: return "rs";
        case ReducedForm::General: return "general";
    }
    return "?";
}

/// Which special case a PSF parameter set collapses to: A = theta_s gives the
/// TW curve pointwise, A = 1 the RS curve.
inline ReducedForm model_reduction(const WrcParams& params) {
    if (params.model != WrcModel::PSF)
        throw domain_error("model reduction classifies PSF parameter sets");
    params.validate();
    double a = params.effective_A();
    if (a == params.theta_s) return ReducedForm::TylerWheatcraft;
    if (a == 1.0) return ReducedForm::RieuSposito;
    return ReducedForm::General;
}

/// x = log10(h_min/h), y = log10((theta + A - theta_s)/A). Model data lands
/// on y = (3 - D_f) x. Points whose log argument is nonpositive are reported
/// together in a transform_error.
inline std::vector<std::pair<double, double>> loglog_transform(
    const WrcParams& params, const std::vector<RetentionPoint>& points) {
    params.validate();
    double a = params.effective_A();
    std::vector<std::pair<double, double>> out;
    out.reserve(points.size());
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        if (!(pt.h >= params.h_min) || !(pt.h <= params.h_max))
            throw domain_error("point " + std::to_string(i) + " has head outside [h_min, h_max]");
        double arg = (pt.theta + a - params.theta_s) / a;
        if (!(arg > 0.0)) {
            bad.push_back(i);
            continue;
        }
        out.emplace_back(std::log10(params.h_min / pt.h), std::log10(arg));
    }
    if (!bad.empty()) {
        std::string what = "log-log transform undefined (theta + A - theta_s <= 0) at point(s)";
        for (std::size_t i : bad) what += " " + std::to_string(i);
        throw transform_error(what, bad);
    }
    return out;
}

struct RegimeFit {
    double d_f_hat;
    double intercept;
    double h_low, h_high;  // heads covered by this regime
};

struct FitResult {
    std::vector<RegimeFit> regimes;        // ascending h
    std::optional<double> breakpoint_h;    // lowest head of the second regime
    double sse = 0.0;                      // total squared residual in log space
};

namespace detail {

struct FitSample {
    double x, y, h;
};

inline std::vector<FitSample> usable_samples(const WrcParams& params,
                                             const std::vector<RetentionPoint>& points) {
    params.validate();
    double a = params.effective_A();
    std::vector<FitSample> out;
    out.reserve(points.size());
    for (const auto& pt : points) {
        if (!(pt.h >= params.h_min) || !(pt.h <= params.h_max)) continue;
        double arg = (pt.theta + a - params.theta_s) / a;
        if (!(arg > 0.0)) continue;
        out.push_back({std::log10(params.h_min / pt.h), std::log10(arg), pt.h});
    }
    std::sort(out.begin(), out.end(),
              [](const FitSample& l, const FitSample& r) { return l.h < r.h; });
    return out;
}

struct Line {
    double slope, intercept, sse;
};

inline Line ols(const std::vector<FitSample>& s, std::size_t lo, std::size_t hi) {
    std::size_t n = hi - lo;
    double mx = 0, my = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        mx += s[i].x;
        my += s[i].y;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        sxx += (s[i].x - mx) * (s[i].x - mx);
        sxy += (s[i].x - mx) * (s[i].y - my);
    }
    if (sxx == 0.0) throw fit_error("degenerate fit: no spread in transformed heads");
    double slope = sxy / sxx;
    double intercept = my - slope * mx;
    double sse = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        double r = s[i].y - (intercept + slope * s[i].x);
        sse += r * r;
    }
    return {slope, intercept, sse};
}

inline RegimeFit to_regime(const Line& line, const std::vector<FitSample>& s, std::size_t lo,
                           std::size_t hi) {
    return {WrcParams::euclidean_dim - line.slope, line.intercept, s[lo].h, s[hi - 1].h};
}

}  // namespace detail

/// Single-regime least squares; needs >= 3 usable points.
inline FitResult fit_single(const std::vector<RetentionPoint>& points, const WrcParams& params) {
    auto samples = detail::usable_samples(params, points);
    if (samples.size() < 3)
        throw fit_error("single-regime fit needs at least 3 usable points, got " +
                        std::to_string(samples.size()));
    auto line = detail::ols(samples, 0, samples.size());
    return {{detail::to_regime(line, samples, 0, samples.size())}, std::nullopt, line.sse};
}

/// Two-regime fit by exhaustive breakpoint search; needs >= 6 usable points.
inline FitResult fit_bimodal(const std::vector<RetentionPoint>& points, const WrcParams& params) {
    auto samples = detail::usable_samples(params, points);
    std::size_t n = samples.size();
    if (n < 6)
        throw fit_error("bi-modal fit needs at least 6 usable points, got " + std::to_string(n));

    std::vector<double> xs;
    xs.reserve(n);
    for (const auto& s : samples) xs.push_back(s.x);
    std::sort(xs.begin(), xs.end());
    double median_x = (n % 2) ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);

    bool found = false;
    std::size_t best_split = 0;
    double best_sse = 0, best_dist = 0;
    detail::Line best_low{}, best_high{};
    for (std::size_t split = 3; split + 3 <= n; ++split) {
        auto low = detail::ols(samples, 0, split);
        auto high = detail::ols(samples, split, n);
        double sse = low.sse + high.sse;
        double dist = std::abs(0.5 * (samples[split - 1].x + samples[split].x) - median_x);
        if (!found || sse < best_sse || (sse == best_sse && dist < best_dist)) {
            found = true;
            best_split = split;
            best_sse = sse;
            best_dist = dist;
            best_low = low;
            best_high = high;
        }
    }
    return {{detail::to_regime(best_low, samples, 0, best_split),
             detail::to_regime(best_high, samples, best_split, n)},
            samples[best_split].h,
            best_sse};
}

/// Reads retention data: header "h,theta", one point per row, h in cm.
/// All malformed or non-finite rows are rejected together, by row number.
inline std::vector<RetentionPoint> load_retention_csv(std::istream& in) {
    std::string line;
    std::size_t row = 0;
    bool header_seen = false;
    std::vector<RetentionPoint> out;
    std::vector<std::size_t> bad;
    auto trim = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
        std::size_t i = 0;
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        return s.substr(i);
    };
    auto parse_field = [](const std::string& f, double& v) {
        char* end = nullptr;
        v = std::strtod(f.c_str(), &end);
        return end == f.c_str() + f.size() && !f.empty() && std::isfinite(v);
    };
    while (std::getline(in, line)) {
        ++row;
        if (row == 1 && line.size() >= 3 && line.compare(0, 3, "\xef\xbb\xbf") == 0)
            line.erase(0, 3);  // UTF-8 BOM
        std::string t = trim(line);
        if (t.empty()) continue;
        if (!header_seen) {
            if (t != "h,theta")
                throw data_error("expected header 'h,theta', got '" + t + "'", {row});
            header_seen = true;
            continue;
        }
        auto comma = t.find(',');
        double h = 0, th = 0;
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos ||
            !parse_field(trim(t.substr(0, comma)), h) ||
            !parse_field(trim(t.substr(comma + 1)), th) || !(h > 0.0) || th < 0.0 || th > 1.0) {
            bad.push_back(row);
            continue;
        }
        out.push_back({h, th});
    }
    if (!header_seen) throw data_error("empty input: missing 'h,theta' header");
    if (!bad.empty()) {
        std::string what = "rejected row(s) with missing, non-finite, or out-of-range values:";
        for (std::size_t r : bad) what += " " + std::to_string(r);
        throw data_error(what, bad);
    }
    return out;
}

inline std::vector<RetentionPoint> load_retention_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open retention data file: " + path);
    return load_retention_csv(in);
}

}  // namespace gporo
