// Copyright 2026 The qbounds developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbounds/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace qbounds {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_eval(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    return std::isfinite(v) ? v : kNegInf;
}

// Golden-section maximization on [a, b]; assumes a single local maximum in
// the bracket but degrades gracefully otherwise.
MaximizeResult golden_section_max(const std::function<double(double)>& f, double a, double b,
                                  double tol) {
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = safe_eval(f, x1);
    double f2 = safe_eval(f, x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = safe_eval(f, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = safe_eval(f, x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return MaximizeResult{xm, safe_eval(f, xm)};
}

struct SimpsonContext {
    const std::function<double(double)>& f;
    std::int64_t budget;
    bool exhausted = false;

    double eval(double x) {
        --budget;
        if (budget < 0) exhausted = true;
        return f(x);
    }
};

double adaptive_simpson(SimpsonContext& ctx, double a, double fa, double m, double fm, double b,
                        double fb, double whole, double tol, int depth, double& err_acc) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = ctx.eval(lm);
    const double frm = ctx.eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || ctx.exhausted || std::abs(delta) <= 15.0 * tol) {
        if (depth <= 0 || ctx.exhausted) ctx.exhausted = true;
        err_acc += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(ctx, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1, err_acc) +
           adaptive_simpson(ctx, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1, err_acc);
}

}  // namespace

MaximizeResult maximize_1d(const std::function<double(double)>& f, const ScanSpec& spec) {
    if (!(spec.lower < spec.upper)) {
        throw ValidationError("maximize_1d: lower must be < upper");
    }
    const int n = std::max(spec.coarse_points, 16);
    const double span = spec.upper - spec.lower;
    const double tol = spec.refine_tol > 0.0 ? spec.refine_tol : 1e-10 * span;

    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n) + spec.seeds.size());
    for (int i = 0; i < n; ++i) {
        xs.push_back(spec.lower + span * static_cast<double>(i) / (n - 1));
    }
    for (double s : spec.seeds) {
        if (s >= spec.lower && s <= spec.upper) xs.push_back(s);
    }
    std::sort(xs.begin(), xs.end());

    std::size_t best = 0;
    double best_val = kNegInf;
    std::vector<double> vals(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        vals[i] = safe_eval(f, xs[i]);
        if (vals[i] > best_val) {
            best_val = vals[i];
            best = i;
        }
    }
    if (best_val == kNegInf) {
        throw EmptyScanError("maximize_1d: objective non-finite over the whole scan domain");
    }

    const double lo = best > 0 ? xs[best - 1] : xs[best];
    const double hi = best + 1 < xs.size() ? xs[best + 1] : xs[best];
    MaximizeResult result{xs[best], best_val};
    if (hi > lo) {
        const MaximizeResult refined = golden_section_max(f, lo, hi, tol);
        if (refined.max > result.max) result = refined;
    }
    return result;
}

IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            double rel_tol) {
    if (a == b) return IntegrationResult{0.0, 0.0, true};

    // Composite pilot pass fixes the absolute tolerance scale and seeds the
    // panels so that narrow features are not skipped by a single top-level
    // Simpson estimate.
    constexpr int kPanels = 64;
    const double hpanel = (b - a) / kPanels;
    std::vector<double> nodes(2 * kPanels + 1);
    std::vector<double> fvals(2 * kPanels + 1);
    SimpsonContext ctx{f, static_cast<std::int64_t>(1) << 23};
    for (int i = 0; i <= 2 * kPanels; ++i) {
        nodes[i] = a + 0.5 * hpanel * i;
        fvals[i] = ctx.eval(nodes[i]);
    }
    double pilot = 0.0;
    std::vector<double> panel_estimates(kPanels);
    for (int p = 0; p < kPanels; ++p) {
        panel_estimates[p] = hpanel / 6.0 *
                             (fvals[2 * p] + 4.0 * fvals[2 * p + 1] + fvals[2 * p + 2]);
        pilot += panel_estimates[p];
    }
    const double abs_tol = std::max(rel_tol * std::abs(pilot), 1e-15);

    double total = 0.0;
    double err = 0.0;
    for (int p = 0; p < kPanels; ++p) {
        total += adaptive_simpson(ctx, nodes[2 * p], fvals[2 * p], nodes[2 * p + 1],
                                  fvals[2 * p + 1], nodes[2 * p + 2], fvals[2 * p + 2],
                                  panel_estimates[p], abs_tol / kPanels, 48, err);
    }
    return IntegrationResult{total, err, !ctx.exhausted};
}

double solve_root(const std::function<double(double)>& f, double lo, double hi, double abs_tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo * fhi < 0.0)) {
        throw BracketError("solve_root: no sign change over the bracket");
    }
    for (int iter = 0; iter < 200 && hi - lo > abs_tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace qbounds
