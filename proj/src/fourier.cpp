#include "udgc/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace udgc {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDiskEps = 1e-9;  // same slack as the udg candidate counter

}  // namespace

double bessel_j1(double x) {
    if (!(x >= 0.0 && x <= 20.0)) {
        throw std::domain_error("bessel_j1: x outside [0, 20]");
    }
    // terms peak near 8e6 at x = 20; long double keeps the cancellation
    // error below 1e-12
    const long double half = static_cast<long double>(x) / 2.0L;
    long double term = half;
    long double sum = 0.0L;
    for (int k = 1; k <= 200; ++k) {
        sum += term;
        term *= -(half * half) / (static_cast<long double>(k) * (k + 1));
        if (std::fabs(static_cast<double>(term)) < 1e-15) break;
    }
    return static_cast<double>(sum);
}

double first_bessel_zero() {
    double lo = 3.0, hi = 4.0;  // J1(3) > 0 > J1(4)
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (bessel_j1(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

double cached_b() {
    static const double b = first_bessel_zero();
    return b;
}

// column multiplicities: the weight depends on x only
std::vector<int64_t> column_mults(const FourierConfig& cfg) {
    const double d = cfg.delta();
    const double b = cached_b();
    std::vector<int64_t> m(cfg.grid_resolution + 1);
    for (int i = 0; i <= cfg.grid_resolution; ++i) {
        const double g = cfg.uniform ? 1.0 : 1.0 + std::sin(2.0 * b * i * d);
        m[i] = static_cast<int64_t>(std::ceil(cfg.weight_scale * g));
        if (m[i] < 0) m[i] = 0;  // ceil of a tiny negative rounding residue
    }
    return m;
}

}  // namespace

double FourierConfig::big_n() const { return k_periods * kPi / cached_b(); }

double FourierConfig::delta() const { return big_n() / grid_resolution; }

void FourierConfig::validate() const {
    if (k_periods < 2) throw std::invalid_argument("k_periods < 2");
    if (grid_resolution < 1) throw std::invalid_argument("grid_resolution < 1");
    if (!(weight_scale > 0.0)) throw std::invalid_argument("weight_scale <= 0");
    if (delta() > 0.1) throw std::invalid_argument("delta > 0.1: grid too coarse");
    const std::vector<int64_t> m = column_mults(*this);
    int64_t total = 0;
    for (int64_t v : m) total += v;
    total *= grid_resolution + 1;
    if (total > 1'000'000'000LL) throw std::invalid_argument("weight budget exceeded");
}

WeightedPointSet build_construction(const FourierConfig& cfg) {
    cfg.validate();
    const double d = cfg.delta();
    const int M = cfg.grid_resolution;
    const std::vector<int64_t> m = column_mults(cfg);
    WeightedPointSet out;
    int id = 0;
    for (int i = 0; i <= M; ++i) {
        if (m[i] == 0) continue;
        for (int j = 0; j <= M; ++j) {
            out.points.push_back({id++, {i * d, j * d}, m[i]});
        }
    }
    return out;
}

double sup_convolution_half(const FourierConfig& cfg) {
    cfg.validate();
    const double d = cfg.delta();
    const double b = cached_b();
    const int M = cfg.grid_resolution;
    const double n = cfg.big_n();
    const int span = static_cast<int>(std::floor(0.5 / d)) + 1;

    std::vector<double> g(M + 1);
    for (int i = 0; i <= M; ++i) {
        g[i] = cfg.uniform ? 1.0 : 1.0 + std::sin(2.0 * b * i * d);
    }

    double sup = 0.0;
    for (int i = 0; i <= M; ++i) {
        const double x = i * d;
        if (x < 1.0 || x > n - 1.0) continue;  // interior margin 1
        long double acc = 0.0L;
        for (int di = -span; di <= span; ++di) {
            const int ic = i + di;
            if (ic < 0 || ic > M) continue;
            const double dx = di * d;
            const double h2 = 0.25 - dx * dx;
            if (h2 < 0.0) continue;
            const int64_t rows = 2 * static_cast<int64_t>(std::floor(std::sqrt(h2) / d)) + 1;
            acc += static_cast<long double>(g[ic]) * rows;
        }
        sup = std::max(sup, static_cast<double>(acc) * d * d);
    }
    return sup;
}

namespace {

// Max total multiplicity inside a radius-1/2 disk, via the candidate-center
// method on the column-structured grid. Centers come from single points and
// from circle pairs; row counts are closed-form. When the column weights are
// exactly periodic and the box is wide enough, centers can be confined to one
// mid-grid period (plus disk-width padding); otherwise every column is tried.
int64_t grid_disk_clique(const std::vector<int64_t>& m, double d, int M,
                         int k_periods, double big_n) {
    const int span = static_cast<int>(std::floor(1.0 / d)) + 1;
    const int j0 = M / 2;  // representative row: counts are y-periodic

    auto disk_weight = [&](double cx, double cy) {
        int64_t total = 0;
        const int ilo = std::max(0, static_cast<int>(std::floor((cx - 0.5) / d)) - 1);
        const int ihi = std::min(M, static_cast<int>(std::ceil((cx + 0.5) / d)) + 1);
        for (int i = ilo; i <= ihi; ++i) {
            if (m[i] == 0) continue;
            const double dx = i * d - cx;
            const double h2 = 0.25 + kDiskEps - dx * dx;
            if (h2 < 0.0) continue;
            const double h = std::sqrt(h2);
            const int64_t lo = std::max<int64_t>(0, static_cast<int64_t>(std::ceil((cy - h) / d)));
            const int64_t hi = std::min<int64_t>(M, static_cast<int64_t>(std::floor((cy + h) / d)));
            if (hi >= lo) total += m[i] * (hi - lo + 1);
        }
        return total;
    };

    int i1_lo = 0, i1_hi = M;
    if (k_periods > 0 && M % k_periods == 0 && big_n >= 4.0) {
        const int period = M / k_periods;
        bool periodic = true;
        for (int i = 0; i + period <= M && periodic; ++i) periodic = m[i] == m[i + period];
        if (periodic) {
            // any disk translates by whole periods into the middle; its
            // generating points then sit within half a disk of that window
            const int mid = (M - period) / 2;
            i1_lo = std::max(0, mid - span / 2 - 1);
            i1_hi = std::min(M, mid + period + span / 2 + 1);
        }
    }

    int64_t best = 0;
    for (int i1 = i1_lo; i1 <= i1_hi; ++i1) {
        if (m[i1] == 0) continue;
        const Point p{i1 * d, j0 * d};
        best = std::max(best, disk_weight(p.x, p.y));
        for (int i2 = std::max(0, i1 - span); i2 <= std::min(M, i1 + span); ++i2) {
            if (m[i2] == 0) continue;
            for (int j2 = std::max(0, j0 - span); j2 <= std::min(M, j0 + span); ++j2) {
                const Point q{i2 * d, j2 * d};
                const double d2 = dist2(p, q);
                if (d2 == 0.0 || d2 > 1.0) continue;
                const double mx = 0.5 * (p.x + q.x), my = 0.5 * (p.y + q.y);
                const double t2 = 0.25 / d2 - 0.25;
                const double t = t2 > 0.0 ? std::sqrt(t2) : 0.0;
                const double px = -(q.y - p.y) * t, py = (q.x - p.x) * t;
                best = std::max(best, disk_weight(mx + px, my + py));
                best = std::max(best, disk_weight(mx - px, my - py));
            }
        }
    }
    return best;
}

}  // namespace

FourierReport measure_ratio(const FourierConfig& cfg) {
    cfg.validate();
    const double d = cfg.delta();
    const int M = cfg.grid_resolution;
    const double n = cfg.big_n();
    const std::vector<int64_t> m = column_mults(cfg);

    FourierReport rep;
    rep.b = cached_b();
    rep.sup_conv_half = sup_convolution_half(cfg);
    for (int64_t v : m) rep.total_weight += v;
    rep.total_weight *= M + 1;

    // degree of an interior point depends on its column only: every row at
    // column offset di contributes rows(di) co-disk rows
    const int span = static_cast<int>(std::floor(1.0 / d)) + 1;
    std::vector<int64_t> rows(span + 1, 0);
    for (int di = 0; di <= span; ++di) {
        const double h2 = 1.0 - di * d * di * d;
        if (h2 >= 0.0) rows[di] = 2 * static_cast<int64_t>(std::floor(std::sqrt(h2) / d)) + 1;
    }
    long double deg_sum = 0.0L, weight_sum = 0.0L;
    for (int i = 0; i <= M; ++i) {
        const double x = i * d;
        if (m[i] == 0 || x < 1.0 || x > n - 1.0) continue;
        int64_t within = 0;
        for (int di = -span; di <= span; ++di) {
            const int ic = i + di;
            if (ic < 0 || ic > M) continue;
            within += m[ic] * rows[std::abs(di)];
        }
        deg_sum += static_cast<long double>(m[i]) * (within - 1);
        weight_sum += static_cast<long double>(m[i]);
    }
    if (weight_sum == 0.0L) throw std::logic_error("no interior weight");
    rep.avg_degree = static_cast<double>(deg_sum / weight_sum);

    rep.omega_d = grid_disk_clique(m, d, M, cfg.k_periods, n);
    if (rep.omega_d < 1) throw std::logic_error("omega_D < 1");
    rep.ratio = rep.avg_degree / static_cast<double>(rep.omega_d);
    return rep;
}

}  // namespace udgc
