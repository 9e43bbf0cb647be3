#include "flyqubit/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace fq {

namespace {

RealVector project(const RealVector& x, const RealVector& lo, const RealVector& hi)
{
    return x.cwiseMax(lo).cwiseMin(hi);
}

/// Zero gradient components that push a saturated coordinate further out.
RealVector projected_gradient(const RealVector& x, const RealVector& g,
                              const RealVector& lo, const RealVector& hi)
{
    RealVector pg = g;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if ((x(i) <= lo(i) && g(i) > 0.0) || (x(i) >= hi(i) && g(i) < 0.0)) {
            pg(i) = 0.0;
        }
    }
    return pg;
}

struct Pair {
    RealVector s;
    RealVector y;
    double rho;
};

RealVector two_loop_direction(const std::deque<Pair>& pairs, const RealVector& g)
{
    RealVector q = g;
    std::vector<double> alpha(pairs.size());
    for (std::size_t i = pairs.size(); i-- > 0;) {
        alpha[i] = pairs[i].rho * pairs[i].s.dot(q);
        q -= alpha[i] * pairs[i].y;
    }
    if (!pairs.empty()) {
        const Pair& last = pairs.back();
        q *= last.s.dot(last.y) / last.y.squaredNorm();
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double beta = pairs[i].rho * pairs[i].y.dot(q);
        q += (alpha[i] - beta) * pairs[i].s;
    }
    return -q;
}

struct LineSearchResult {
    bool ok = false;
    double alpha = 0.0;
    double f = 0.0;
    RealVector x;
    RealVector g;
    int evals = 0;
};

/// Strong Wolfe search on phi(alpha) = f(project(x + alpha d)).
LineSearchResult strong_wolfe(const ObjectiveFn& fg, const RealVector& x0, double f0,
                              const RealVector& g0, const RealVector& d,
                              const RealVector& lo, const RealVector& hi,
                              const OptimizerConfig& cfg)
{
    LineSearchResult res;
    res.g.resize(x0.size());
    const double dphi0 = g0.dot(d);
    if (!(dphi0 < 0.0)) {
        return res;
    }

    auto eval = [&](double alpha, double& f, RealVector& g, RealVector& x) {
        x = project(x0 + alpha * d, lo, hi);
        f = fg(x, g);
        ++res.evals;
    };

    double alpha_prev = 0.0;
    double f_prev = f0;
    double alpha = 1.0;
    double alpha_max = 1e4;
    RealVector x_trial(x0.size());
    RealVector g_trial(x0.size());

    double alpha_lo = 0.0, alpha_hi = 0.0;
    double f_lo = f0;
    bool bracketed = false;

    for (int it = 0; it < cfg.max_line_search && !bracketed; ++it) {
        double f_trial;
        eval(alpha, f_trial, g_trial, x_trial);
        if (f_trial > f0 + cfg.wolfe_c1 * alpha * dphi0 || (it > 0 && f_trial >= f_prev)) {
            alpha_lo = alpha_prev;
            f_lo = f_prev;
            alpha_hi = alpha;
            bracketed = true;
            break;
        }
        const double dphi = g_trial.dot(d);
        if (std::abs(dphi) <= -cfg.wolfe_c2 * dphi0) {
            res.ok = true;
            res.alpha = alpha;
            res.f = f_trial;
            res.x = x_trial;
            res.g = g_trial;
            return res;
        }
        if (dphi >= 0.0) {
            alpha_lo = alpha;
            f_lo = f_trial;
            alpha_hi = alpha_prev;
            bracketed = true;
            break;
        }
        alpha_prev = alpha;
        f_prev = f_trial;
        alpha = std::min(2.0 * alpha, alpha_max);
        if (alpha >= alpha_max) {
            break;
        }
    }
    if (!bracketed) {
        return res;
    }

    // Zoom by bisection; accept the first strong-Wolfe point.
    for (int it = res.evals; it < cfg.max_line_search; ++it) {
        const double a = 0.5 * (alpha_lo + alpha_hi);
        double f_trial;
        eval(a, f_trial, g_trial, x_trial);
        if (f_trial > f0 + cfg.wolfe_c1 * a * dphi0 || f_trial >= f_lo) {
            alpha_hi = a;
            continue;
        }
        const double dphi = g_trial.dot(d);
        if (std::abs(dphi) <= -cfg.wolfe_c2 * dphi0) {
            res.ok = true;
            res.alpha = a;
            res.f = f_trial;
            res.x = x_trial;
            res.g = g_trial;
            return res;
        }
        if (dphi * (alpha_hi - alpha_lo) >= 0.0) {
            alpha_hi = alpha_lo;
        }
        alpha_lo = a;
        f_lo = f_trial;
    }

    // No curvature point within budget; fall back to the best sufficient-
    // decrease point found so far so the trace stays monotone.
    if (alpha_lo > 0.0 && f_lo < f0) {
        double f_trial;
        eval(alpha_lo, f_trial, g_trial, x_trial);
        res.ok = true;
        res.alpha = alpha_lo;
        res.f = f_trial;
        res.x = x_trial;
        res.g = g_trial;
    }
    return res;
}

} // namespace

std::string to_string(TerminationReason reason)
{
    switch (reason) {
    case TerminationReason::GradTol: return "grad_tol";
    case TerminationReason::ObjectiveTol: return "objective_tol";
    case TerminationReason::MaxIters: return "max_iters";
    case TerminationReason::LineSearchFailure: return "line_search_failure";
    }
    return "unknown";
}

OptimizationResult minimize(const ObjectiveFn& fg, const RealVector& x0,
                            const RealVector& lower, const RealVector& upper,
                            const OptimizerConfig& config)
{
    if (lower.size() != x0.size() || upper.size() != x0.size()) {
        throw std::invalid_argument("minimize: bound size mismatch");
    }
    if (!(config.wolfe_c1 > 0.0 && config.wolfe_c1 < config.wolfe_c2 && config.wolfe_c2 < 1.0)) {
        throw std::invalid_argument("minimize: need 0 < c1 < c2 < 1");
    }
    const auto t_start = std::chrono::steady_clock::now();

    OptimizationResult out;
    RealVector x = project(x0, lower, upper);
    RealVector g(x.size());
    double f = fg(x, g);
    out.trace.push_back(f);

    std::deque<Pair> pairs;
    out.reason = TerminationReason::MaxIters;
    int iter = 0;
    for (; iter < config.max_iters; ++iter) {
        const RealVector pg = projected_gradient(x, g, lower, upper);
        if (pg.lpNorm<Eigen::Infinity>() <= config.grad_tol) {
            out.reason = TerminationReason::GradTol;
            break;
        }
        RealVector d = two_loop_direction(pairs, pg);
        if (!(d.dot(pg) < 0.0)) {
            pairs.clear();
            d = -pg;
        }
        const LineSearchResult ls = strong_wolfe(fg, x, f, pg, d, lower, upper, config);
        if (!ls.ok) {
            out.reason = TerminationReason::LineSearchFailure;
            break;
        }
        const RealVector s = ls.x - x;
        const RealVector y = ls.g - g;
        const double f_prev = f;
        x = ls.x;
        g = ls.g;
        f = ls.f;
        out.trace.push_back(f);
        const double ys = y.dot(s);
        if (ys > 1e-12) {
            pairs.push_back({s, y, 1.0 / ys});
            if (static_cast<int>(pairs.size()) > config.memory) {
                pairs.pop_front();
            }
        }
        if (f_prev - f <= config.objective_tol * std::max(1.0, std::abs(f_prev))) {
            out.reason = TerminationReason::ObjectiveTol;
            ++iter;
            break;
        }
    }
    out.x = x;
    out.value = f;
    out.iterations = iter;
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return out;
}

OptimizationResult minimize(const ObjectiveFn& fg, const RealVector& x0,
                            const OptimizerConfig& config)
{
    const double inf = std::numeric_limits<double>::infinity();
    return minimize(fg, x0, RealVector::Constant(x0.size(), -inf),
                    RealVector::Constant(x0.size(), inf), config);
}

RealVector finite_difference_gradient(const std::function<double(const RealVector&)>& f,
                                      const RealVector& x, double h)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("finite_difference_gradient: h must be positive");
    }
    RealVector g(x.size());
    RealVector xp = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double xi = x(i);
        xp(i) = xi + h;
        const double fp = f(xp);
        xp(i) = xi - h;
        const double fm = f(xp);
        xp(i) = xi;
        g(i) = (fp - fm) / (2.0 * h);
    }
    return g;
}

} // namespace fq
