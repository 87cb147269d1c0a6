// The two finite degree LPs (f4, f5), their grid curves, and the combined
// pairwise-degree bound. Everything is normalized to omega = 1.
#pragma once

#include <string>
#include <vector>

namespace udgc {

// max x1 + x2 + 2*x3  s.t.  x2 + x3 <= 5,
//   (2 - sqrt(d^2/4 + (1 - sqrt(1 - d^2/4))^2))*x1 + x2
//     + (3 - sqrt(1 + d^2 - d*sqrt(3)))*x3 <= 6,  x >= 0.
double solve_f5(double delta);

// max x1 + x2 + 2*x3 + 2*x4  s.t.  x2 + x3 + x4 <= 4,  x1 + 2*x3 <= 2,
//   (2 - sqrt(d^2/4 + (sqrt(3)/2 - sqrt(1 - (1+d)^2/4))^2))*x1 + x2
//     + (3 - sqrt(1 + d^2 - d))*x3 + (3 - sqrt(1 - d))*x4 <= 6,  x >= 0.
double solve_f4(double delta);

struct LPCurve {
    std::vector<double> delta;  // 0.5 to 1.0 step 0.005, inclusive
    std::vector<double> value;
};

LPCurve curve_f4();
LPCurve curve_f5();

struct PairwiseBound {
    double value = 0.0;        // max over the grid of min(f4, f5)
    double argmax_delta = 0.0;
};
PairwiseBound pairwise_degree_bound();

// Writes <prefix>lp4.dat and <prefix>lp5.dat: a "delta fN" header plus 101
// rows "d value" with 3/4 decimals. Throws std::runtime_error on I/O failure.
void emit_curves(const std::string& path_prefix);

}  // namespace udgc
