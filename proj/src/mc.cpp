#include "seljac/mc.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace seljac {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double log_interaction(const std::vector<double>& x, size_t i, double xi) {
    double s = 0.0;
    for (size_t j = 0; j < x.size(); ++j) {
        if (j == i) continue;
        s += std::log(std::fabs(xi - x[j]));
    }
    return 2.0 * s;
}

} // namespace

McResult mc_sample_pk(long k, long n, double a, double b, const ChainConfig& cfg) {
    if (k < 1) throw DomainError("mc_sample_pk: need k >= 1");
    if (n < 1) throw DomainError("mc_sample_pk: need n >= 1");
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("mc_sample_pk: need a > 0 and b > 0");
    if (cfg.burn_in < 1 || cfg.thinning < 1 || cfg.samples < 1)
        throw DomainError("mc_sample_pk: burn_in, thinning and samples must be >= 1");
    if (!(cfg.step_width > 0.0) || !(cfg.step_width < 1.0))
        throw DomainError("mc_sample_pk: step_width must lie in (0, 1)");

    std::mt19937_64 rng(cfg.seed);
    std::vector<double> x(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        x[static_cast<size_t>(i)] = static_cast<double>(i + 1) / static_cast<double>(n + 1);

    uint64_t proposed = 0, accepted = 0;
    auto sweep = [&] {
        for (size_t i = 0; i < x.size(); ++i) {
            double delta = (2.0 * uniform01(rng) - 1.0) * cfg.step_width;
            double xn = x[i] + delta;
            if (xn < 0.0) xn = -xn;
            if (xn > 1.0) xn = 2.0 - xn;
            ++proposed;
            if (xn <= 0.0 || xn >= 1.0) continue;  // boundary has zero density
            double dlog = log_interaction(x, i, xn) - log_interaction(x, i, x[i]);
            if (a != 1.0) dlog += (a - 1.0) * (std::log(xn) - std::log(x[i]));
            if (b != 1.0) dlog += (b - 1.0) * (std::log(1.0 - xn) - std::log(1.0 - x[i]));
            if (dlog >= 0.0 || std::log(uniform01(rng)) < dlog) {
                x[i] = xn;
                ++accepted;
            }
        }
    };

    auto pk = [&] {
        double s = 0.0;
        for (double xi : x) {
            double p = xi;
            for (long t = 1; t < k; ++t) p *= xi;
            s += p;
        }
        return s;
    };

    for (long s = 0; s < cfg.burn_in; ++s) sweep();

    std::vector<double> kept;
    kept.reserve(static_cast<size_t>(cfg.samples));
    for (long s = 0; s < cfg.samples; ++s) {
        for (long t = 0; t < cfg.thinning; ++t) sweep();
        kept.push_back(pk());
    }

    double mean = 0.0;
    for (double v : kept) mean += v;
    mean /= static_cast<double>(kept.size());

    // batch means over a prefix of B*m samples; B ~ sqrt(samples)
    long B = static_cast<long>(std::sqrt(static_cast<double>(cfg.samples)));
    if (B < 2) B = 2;
    if (B > 1000) B = 1000;
    if (B > cfg.samples) B = cfg.samples;
    long m = cfg.samples / B;
    double grand = 0.0;
    std::vector<double> batch(static_cast<size_t>(B), 0.0);
    for (long bi = 0; bi < B; ++bi) {
        double s = 0.0;
        for (long t = 0; t < m; ++t) s += kept[static_cast<size_t>(bi * m + t)];
        batch[static_cast<size_t>(bi)] = s / static_cast<double>(m);
        grand += batch[static_cast<size_t>(bi)];
    }
    grand /= static_cast<double>(B);
    double var = 0.0;
    for (double bm : batch) var += (bm - grand) * (bm - grand);
    double se = B > 1 ? std::sqrt(var / (static_cast<double>(B) * static_cast<double>(B - 1))) : 0.0;

    McResult r;
    r.mean = mean;
    r.std_error = se;
    r.acceptance_rate = proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0.0;
    r.acceptance_warning = r.acceptance_rate < 0.05 || r.acceptance_rate > 0.95;
    r.kept_samples = static_cast<long>(kept.size());
    return r;
}

} // namespace seljac
