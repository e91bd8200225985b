#pragma once

#include <cstdint>

#include "seljac/errors.hpp"

namespace seljac {

/// Metropolis chain configuration.  One sweep updates every coordinate once;
/// burn_in sweeps are discarded, then one sample is kept every `thinning`
/// sweeps until `samples` values of p_k have been collected.
struct ChainConfig {
    uint64_t seed = 1;
    long burn_in = 1000;
    long thinning = 2;
    double step_width = 0.1;  // half-width of the uniform proposal window
    long samples = 100000;
};

struct McResult {
    double mean;             // sample mean of p_k = sum_i x_i^k
    double std_error;        // batch-means standard error of the mean
    double acceptance_rate;  // accepted moves / proposed moves
    bool acceptance_warning; // rate outside [0.05, 0.95]
    long kept_samples;
};

/// Seeded Metropolis sampler of the Jacobi joint density
///   prod_{i<j} (x_i-x_j)^2 prod_i x_i^(a-1) (1-x_i)^(b-1)  on [0,1]^n,
/// estimating p_k.  Single-coordinate uniform-window proposals, reflected at
/// the boundary.  The generator is std::mt19937_64 with the configured seed
/// and a fixed 53-bit uniform mapping, so a given seed and config always
/// reproduce the same estimates on a given build.  This is the one corner of
/// the library that uses floating point.
McResult mc_sample_pk(long k, long n, double a, double b, const ChainConfig& cfg);

} // namespace seljac
