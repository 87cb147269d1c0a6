#include "udgc/lpbounds.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <vector>

namespace udgc {
namespace {

constexpr double kFeasTol = 1e-9;

// max c.x subject to A x <= b, x >= 0, by enumerating basic solutions: every
// n-subset of {A rows} union {x_i = 0 planes} taken as equalities. Sizes here
// are tiny (<= C(7,4) subsets), so this is exact and instant.
double solve_enum(const std::vector<std::vector<double>>& A,
                  const std::vector<double>& b, const std::vector<double>& c) {
    const int n = static_cast<int>(c.size());
    const int m = static_cast<int>(A.size());
    const int total = m + n;

    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> pick(n);

    auto row_of = [&](int r, std::vector<double>& out, double& rhs) {
        if (r < m) {
            out = A[r];
            rhs = b[r];
        } else {
            out.assign(n, 0.0);
            out[r - m] = 1.0;
            rhs = 0.0;
        }
    };

    // iterate over all n-subsets of [0, total)
    for (int i = 0; i < n; ++i) pick[i] = i;
    while (true) {
        // solve the picked square system by Gaussian elimination
        std::vector<std::vector<double>> M(n, std::vector<double>(n + 1));
        for (int i = 0; i < n; ++i) {
            std::vector<double> row;
            double rhs;
            row_of(pick[i], row, rhs);
            for (int j = 0; j < n; ++j) M[i][j] = row[j];
            M[i][n] = rhs;
        }
        bool singular = false;
        for (int col = 0; col < n && !singular; ++col) {
            int piv = col;
            for (int r = col + 1; r < n; ++r) {
                if (std::fabs(M[r][col]) > std::fabs(M[piv][col])) piv = r;
            }
            if (std::fabs(M[piv][col]) < 1e-12) {
                singular = true;
                break;
            }
            std::swap(M[col], M[piv]);
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                const double f = M[r][col] / M[col][col];
                for (int j = col; j <= n; ++j) M[r][j] -= f * M[col][j];
            }
        }
        if (!singular) {
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
            bool feasible = true;
            for (int i = 0; i < n && feasible; ++i) feasible = x[i] >= -kFeasTol;
            for (int r = 0; r < m && feasible; ++r) {
                double lhs = 0.0;
                for (int j = 0; j < n; ++j) lhs += A[r][j] * x[j];
                feasible = lhs <= b[r] + kFeasTol;
            }
            if (feasible) {
                double obj = 0.0;
                for (int j = 0; j < n; ++j) obj += c[j] * x[j];
                best = std::max(best, obj);
            }
        }

        // next combination
        int i = n - 1;
        while (i >= 0 && pick[i] == total - n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!std::isfinite(best)) throw std::logic_error("LP enumeration found no vertex");
    return best;
}

void check_delta(double delta) {
    if (!(delta >= 0.5 && delta <= 1.0)) {
        throw std::domain_error("delta outside [1/2, 1]");
    }
}

}  // namespace

double solve_f5(double delta) {
    check_delta(delta);
    const double d = delta;
    const double a = 2.0 - std::sqrt(d * d / 4.0 +
                                     std::pow(1.0 - std::sqrt(1.0 - d * d / 4.0), 2));
    const double c3 = 3.0 - std::sqrt(1.0 + d * d - d * std::sqrt(3.0));
    return solve_enum({{0.0, 1.0, 1.0}, {a, 1.0, c3}}, {5.0, 6.0}, {1.0, 1.0, 2.0});
}

double solve_f4(double delta) {
    check_delta(delta);
    const double d = delta;
    const double a = 2.0 - std::sqrt(d * d / 4.0 +
                                     std::pow(std::sqrt(3.0) / 2.0 -
                                                  std::sqrt(1.0 - (1.0 + d) * (1.0 + d) / 4.0),
                                              2));
    const double c3 = 3.0 - std::sqrt(1.0 + d * d - d);
    const double c4 = 3.0 - std::sqrt(1.0 - d);
    return solve_enum(
        {{0.0, 1.0, 1.0, 1.0}, {1.0, 0.0, 2.0, 0.0}, {a, 1.0, c3, c4}},
        {4.0, 2.0, 6.0}, {1.0, 1.0, 2.0, 2.0});
}

namespace {

std::vector<double> grid_deltas() {
    std::vector<double> g;
    for (int i = 0; i <= 100; ++i) g.push_back(0.5 + 0.005 * i);
    return g;
}

}  // namespace

LPCurve curve_f4() {
    LPCurve c;
    c.delta = grid_deltas();
    for (double d : c.delta) c.value.push_back(solve_f4(d));
    return c;
}

LPCurve curve_f5() {
    LPCurve c;
    c.delta = grid_deltas();
    for (double d : c.delta) c.value.push_back(solve_f5(d));
    return c;
}

PairwiseBound pairwise_degree_bound() {
    PairwiseBound out;
    out.value = -std::numeric_limits<double>::infinity();
    for (double d : grid_deltas()) {
        const double v = std::min(solve_f4(d), solve_f5(d));
        if (v > out.value) {
            out.value = v;
            out.argmax_delta = d;
        }
    }
    return out;
}

namespace {

void write_curve(const std::string& path, const char* header, const LPCurve& curve) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << header << '\n';
    char line[64];
    for (size_t i = 0; i < curve.delta.size(); ++i) {
        std::snprintf(line, sizeof line, "%.3f %.4f", curve.delta[i], curve.value[i]);
        f << line << '\n';
    }
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void emit_curves(const std::string& path_prefix) {
    write_curve(path_prefix + "lp4.dat", "delta f4", curve_f4());
    write_curve(path_prefix + "lp5.dat", "delta f5", curve_f5());
}

}  // namespace udgc
