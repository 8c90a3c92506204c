// Weighted-density objectives, the F_m recursion, and the alpha_k solver.
#pragma once

#include "stardens/rational.hpp"

#include <functional>
#include <vector>

namespace stardens {

// Nonincreasing nonnegative class weights with total mass <= 1.
struct WeightProfile {
    std::vector<double> weights;

    double mass() const;
    bool valid(double tol = 1e-12) const;
};

// k * sum_{i<j} w_i^{k-1} w_j, via suffix sums. k >= 3.
double eval_fm(const WeightProfile& w, int k);

// C(s+t,s) * sum_{i<j} w_i^t w_j^s (the K_{s,t} profile objective).
double eval_kst_profile(const WeightProfile& w, int s, int t);

struct RecursionTrace {
    std::vector<double> values;      // values[m-1] = F_m(1)
    std::vector<double> maximizers;  // inner maximizer per level; maximizers[0] = 0 for F_1
    double value() const { return values.back(); }
};

// F_1(1) = 0; F_m(1) = max_{w in [0,1]} k w^{k-1} (1-w) + (1-w)^k F_{m-1}(1),
// each level solved by grid seed + golden-section refinement to width tol.
RecursionTrace fm_recursion_trace(int k, int m, double tol);
double fm_recursion(int k, int m, double tol);

struct OptResult {
    double alpha = 0.0;
    double x_star = 0.0;
    int k = 0;
    double tolerance = 0.0;
    long evaluations = 0;
    double fixed_point_residual = 0.0;  // |alpha - (k x(1-x)^{k-1} + x^k alpha)|
};

// Maximizes k x (1-x)^{k-1} / (1 - x^k) on (0,1): dense grid (>= 1e5 points),
// golden section to width tol, Newton polish on the log-derivative. Verifies
// the mirrored maximand k x^{k-1}(1-x) / (1 - (1-x)^k) agrees under x -> 1-x.
// k >= 3; tol in (0, 1e-4].
OptResult solve_alpha(int k, double tol = 1e-12);

// Truncated optimal sequence w_i = x_k^{i-1} (1 - x_k), i = 1..m.
WeightProfile geometric_weights(int k, int m);

// C(s+t,s) (s/(s+t))^s (t/(s+t))^t for min(s,t) >= 2; min(s,t) = 1 delegates
// to solve_alpha(max(s,t)+1). Symmetric in (s,t).
double kst_inducibility(int s, int t);

// Closed form as an exact fraction; requires min(s,t) >= 2.
Rational kst_inducibility_exact(int s, int t);

// (t/(s+t), s/(s+t)) after symmetrizing to s <= t; requires min(s,t) >= 2.
WeightProfile best_two_class_profile(int s, int t);

struct UnivariateMax {
    double x = 0.0;
    double value = 0.0;
    long evaluations = 0;
};

// Grid scan keeping the best point seen, then golden section inside the
// bracketing grid cell. Returns the best point encountered anywhere.
UnivariateMax maximize_on_interval(const std::function<double(double)>& f, double lo, double hi,
                                   int grid_points, double tol);

}  // namespace stardens
