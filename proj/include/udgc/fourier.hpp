// Bessel J1 numerics and the sinusoidal grid construction whose average
// degree outruns 4*omega_D.
#pragma once

#include <cstdint>

#include "udgc/udg.hpp"

namespace udgc {

// Power series sum_k (-1)^k / (k! (k+1)!) (x/2)^(2k+1), long-double
// accumulation (the terms reach ~7.6e6 at x = 20; double accumulation alone
// would exceed the 1e-12 budget). Domain [0, 20], else std::domain_error.
double bessel_j1(double x);

// Smallest positive zero of J1, by bisection on [3, 4] to 1e-12.
double first_bessel_zero();

struct FourierConfig {
    int k_periods = 16;        // N = k_periods * pi / B
    int grid_resolution = 512;  // M; step delta = N / M
    double weight_scale = 50.0;  // multiplicity ceil(weight_scale * g(x))
    bool uniform = false;       // zero the sin term (control experiment)

    double big_n() const;   // N
    double delta() const;   // N / M
    void validate() const;  // k >= 2, delta <= 0.1, weight budget <= 1e9
};

// Grid (M+1)^2 over [0,N]^2; the point at (i*delta, j*delta) carries
// multiplicity ceil(weight_scale * (1 + sin(2*B*i*delta))); zero-multiplicity
// entries are omitted. Rejects configs whose total weight exceeds 1e9.
WeightedPointSet build_construction(const FourierConfig& cfg);

// sup over interior grid sample points (margin 1 from the boundary) of the
// discretized integral of g over the radius-1/2 disk: sum of g at covered
// grid points times delta^2. Constant pi/4 in theory (B kills the
// oscillation).
double sup_convolution_half(const FourierConfig& cfg);

struct FourierReport {
    double b = 0.0;             // first Bessel zero
    double sup_conv_half = 0.0;
    double avg_degree = 0.0;    // multiplicity-weighted, interior margin 1
    int64_t omega_d = 0;
    double ratio = 0.0;         // avg_degree / omega_d
    int64_t total_weight = 0;
};

// Builds the construction implicitly (column arithmetic; no vertex
// expansion), measures the interior average degree and the exact omega_D,
// and returns the ratio.
FourierReport measure_ratio(const FourierConfig& cfg);

}  // namespace udgc
