#include "stardens/density.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace stardens {

namespace {

double ipow(double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

void require_profile(const WeightProfile& w) {
    if (!w.valid()) throw std::invalid_argument("weight profile invalid: need nonincreasing, nonnegative weights with mass <= 1");
}

}  // namespace

double WeightProfile::mass() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

bool WeightProfile::valid(double tol) const {
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < -tol) return false;
        if (i + 1 < weights.size() && weights[i + 1] > weights[i] + tol) return false;
    }
    return mass() <= 1.0 + tol;
}

double eval_fm(const WeightProfile& w, int k) {
    if (k < 3) throw std::invalid_argument("eval_fm: k must be >= 3");
    require_profile(w);
    double suffix = 0.0;
    double total = 0.0;
    for (std::size_t i = w.weights.size(); i-- > 0;) {
        total += ipow(w.weights[i], k - 1) * suffix;
        suffix += w.weights[i];
    }
    return k * total;
}

double eval_kst_profile(const WeightProfile& w, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("eval_kst_profile: s and t must be >= 1");
    require_profile(w);
    double suffix_pow_s = 0.0;
    double total = 0.0;
    for (std::size_t i = w.weights.size(); i-- > 0;) {
        total += ipow(w.weights[i], t) * suffix_pow_s;
        suffix_pow_s += ipow(w.weights[i], s);
    }
    return big_binomial(static_cast<unsigned>(s + t), static_cast<unsigned>(s))
               .convert_to<double>() *
           total;
}

UnivariateMax maximize_on_interval(const std::function<double(double)>& f, double lo, double hi,
                                   int grid_points, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("maximize_on_interval: need lo < hi");
    if (grid_points < 2) throw std::invalid_argument("maximize_on_interval: need >= 2 grid points");
    if (!(tol > 0)) throw std::invalid_argument("maximize_on_interval: need tol > 0");

    UnivariateMax best;
    best.value = -HUGE_VAL;
    auto consider = [&](double x) {
        const double v = f(x);
        ++best.evaluations;
        if (v > best.value) {
            best.value = v;
            best.x = x;
        }
        return v;
    };

    const double step = (hi - lo) / grid_points;
    int best_idx = 0;
    double best_grid = -HUGE_VAL;
    for (int i = 0; i <= grid_points; ++i) {
        const double x = i == grid_points ? hi : lo + step * i;
        const double v = consider(x);
        if (v > best_grid) {
            best_grid = v;
            best_idx = i;
        }
    }

    double a = lo + step * (best_idx > 0 ? best_idx - 1 : 0);
    double b = best_idx < grid_points ? lo + step * (best_idx + 1) : hi;
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = consider(c);
    double fd = consider(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = consider(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = consider(d);
        }
    }
    return best;
}

RecursionTrace fm_recursion_trace(int k, int m, double tol) {
    if (k < 3) throw std::invalid_argument("fm_recursion: k must be >= 3");
    if (m < 1) throw std::invalid_argument("fm_recursion: m must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("fm_recursion: tol must be > 0");
    RecursionTrace trace;
    trace.values.push_back(0.0);
    trace.maximizers.push_back(0.0);
    for (int level = 2; level <= m; ++level) {
        const double prev = trace.values.back();
        auto objective = [&](double w) {
            return k * ipow(w, k - 1) * (1.0 - w) + ipow(1.0 - w, k) * prev;
        };
        // the grid contains w = 0, where the objective equals F_{m-1}(1), so
        // each level is numerically >= the previous one; the grid must be
        // dense enough that its value error at the peak stays below the
        // remaining gap to the fixed point, or the argmax falls into the
        // w = 0 cell and the recursion stalls early
        const UnivariateMax opt = maximize_on_interval(objective, 0.0, 1.0, 65536, tol);
        trace.values.push_back(opt.value);
        trace.maximizers.push_back(opt.x);
    }
    return trace;
}

double fm_recursion(int k, int m, double tol) { return fm_recursion_trace(k, m, tol).value(); }

OptResult solve_alpha(int k, double tol) {
    if (k < 3) throw std::invalid_argument("solve_alpha: k must be >= 3");
    if (!(tol > 0) || tol > 1e-4)
        throw std::invalid_argument("solve_alpha: tol must be in (0, 1e-4]");

    auto g = [k](double x) { return k * x * ipow(1.0 - x, k - 1) / (1.0 - ipow(x, k)); };
    const double eps = 1e-9;
    UnivariateMax best = maximize_on_interval(g, eps, 1.0 - eps, 150000, tol);

    // Newton polish on the log-derivative
    //   phi(x) = 1/x - (k-1)/(1-x) + k x^{k-1}/(1-x^k)
    auto phi = [k](double x) {
        return 1.0 / x - (k - 1) / (1.0 - x) + k * ipow(x, k - 1) / (1.0 - ipow(x, k));
    };
    auto dphi = [k](double x) {
        const double den = 1.0 - ipow(x, k);
        return -1.0 / (x * x) - (k - 1) / ((1.0 - x) * (1.0 - x)) +
               k * ((k - 1) * ipow(x, k - 2) + ipow(x, 2 * k - 2)) / (den * den);
    };
    long evals = best.evaluations;
    double x = best.x;
    for (int it = 0; it < 60; ++it) {
        const double d = dphi(x);
        if (d == 0.0) break;
        const double step = phi(x) / d;
        const double xn = x - step;
        ++evals;
        if (!(xn > 0.0) || !(xn < 1.0)) break;
        x = xn;
        if (std::fabs(step) < 1e-16) break;
    }
    double gx = g(x);
    ++evals;
    // near the flat top the grid's luckiest rounding can exceed g at the true
    // critical point by a few ulps; revert only on a material drop
    if (gx < best.value - 1e-12) {
        x = best.x;
        gx = best.value;
    }

    OptResult r;
    r.k = k;
    r.tolerance = tol;
    r.x_star = x;
    r.alpha = gx;
    r.evaluations = evals;
    r.fixed_point_residual =
        std::fabs(r.alpha - (k * x * ipow(1.0 - x, k - 1) + ipow(x, k) * r.alpha));

    // mirrored maximand k y^{k-1} (1-y) / (1 - (1-y)^k) at y = 1 - x
    const double y = 1.0 - x;
    const double mirrored = k * ipow(y, k - 1) * (1.0 - y) / (1.0 - ipow(1.0 - y, k));
    if (std::fabs(mirrored - r.alpha) > tol)
        throw std::logic_error("solve_alpha: maximand forms disagree at the solution");
    return r;
}

WeightProfile geometric_weights(int k, int m) {
    if (m < 1) throw std::invalid_argument("geometric_weights: m must be >= 1");
    const double x = solve_alpha(k).x_star;
    WeightProfile w;
    w.weights.reserve(m);
    double lead = 1.0 - x;
    for (int i = 0; i < m; ++i) {
        w.weights.push_back(lead);
        lead *= x;
    }
    return w;
}

double kst_inducibility(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("kst_inducibility: s and t must be >= 1");
    if (s == 1 && t == 1)
        throw std::invalid_argument("kst_inducibility: (1,1) is a single arc, outside the contract");
    if (s > t) std::swap(s, t);
    if (s == 1) return solve_alpha(t + 1).alpha;
    return kst_inducibility_exact(s, t).to_double();
}

Rational kst_inducibility_exact(int s, int t) {
    if (s < 2 || t < 2)
        throw std::invalid_argument("kst_inducibility_exact: requires min(s,t) >= 2");
    const int n = s + t;
    BigInt num = big_binomial(static_cast<unsigned>(n), static_cast<unsigned>(s));
    for (int i = 0; i < s; ++i) num *= s;
    for (int i = 0; i < t; ++i) num *= t;
    BigInt den = 1;
    for (int i = 0; i < n; ++i) den *= n;
    return Rational(num, den);
}

WeightProfile best_two_class_profile(int s, int t) {
    if (s < 2 || t < 2)
        throw std::invalid_argument("best_two_class_profile: requires min(s,t) >= 2");
    if (s > t) std::swap(s, t);
    WeightProfile w;
    w.weights = {static_cast<double>(t) / (s + t), static_cast<double>(s) / (s + t)};
    return w;
}

}  // namespace stardens
