#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "seljac/mc.hpp"
#include "seljac/schur_moments.hpp"

using namespace seljac;

TEST_CASE("metropolis sampler is deterministic per seed") {
    ChainConfig cfg;
    cfg.seed = 7;
    cfg.burn_in = 50;
    cfg.thinning = 1;
    cfg.samples = 2000;

    McResult r1 = mc_sample_pk(1, 4, 1.0, 1.0, cfg);
    McResult r2 = mc_sample_pk(1, 4, 1.0, 1.0, cfg);
    CHECK(r1.mean == r2.mean);
    CHECK(r1.std_error == r2.std_error);
    CHECK(r1.acceptance_rate == r2.acceptance_rate);
    CHECK(r1.kept_samples == 2000);

    cfg.seed = 8;
    McResult r3 = mc_sample_pk(1, 4, 1.0, 1.0, cfg);
    CHECK(r1.mean != r3.mean);
}

TEST_CASE("metropolis estimates track the exact values") {
    ChainConfig cfg;
    cfg.seed = 12345;
    cfg.burn_in = 500;
    cfg.thinning = 2;
    cfg.samples = 20000;

    for (long k : {1L, 2L}) {
        McResult r = mc_sample_pk(k, 5, 1.0, 1.0, cfg);
        double exact = ik_closed(k, Rational(1), Rational(1), 5).to_double();
        CHECK(r.std_error > 0.0);
        CHECK(std::fabs(r.mean - exact) < 5.0 * r.std_error);
        CHECK(r.acceptance_rate > 0.05);
        CHECK(r.acceptance_rate < 0.95);
        CHECK_FALSE(r.acceptance_warning);
    }
}

TEST_CASE("metropolis parameter validation") {
    ChainConfig cfg;
    CHECK_THROWS_AS(mc_sample_pk(0, 4, 1.0, 1.0, cfg), DomainError);
    CHECK_THROWS_AS(mc_sample_pk(1, 0, 1.0, 1.0, cfg), DomainError);
    CHECK_THROWS_AS(mc_sample_pk(1, 4, 0.0, 1.0, cfg), DomainError);
    CHECK_THROWS_AS(mc_sample_pk(1, 4, 1.0, -2.0, cfg), DomainError);

    ChainConfig bad = cfg;
    bad.step_width = 1.5;
    CHECK_THROWS_AS(mc_sample_pk(1, 4, 1.0, 1.0, bad), DomainError);
    bad = cfg;
    bad.samples = 0;
    CHECK_THROWS_AS(mc_sample_pk(1, 4, 1.0, 1.0, bad), DomainError);
}

TEST_CASE("nonuniform weights shift the mean the right way") {
    ChainConfig cfg;
    cfg.seed = 99;
    cfg.burn_in = 500;
    cfg.thinning = 2;
    cfg.samples = 20000;

    // larger a pushes mass toward 1, larger b toward 0
    McResult heavy_right = mc_sample_pk(1, 4, 4.0, 1.0, cfg);
    McResult heavy_left = mc_sample_pk(1, 4, 1.0, 4.0, cfg);
    CHECK(heavy_right.mean > heavy_left.mean);

    double exact = ik_closed(1, Rational(4), Rational(1), 4).to_double();
    CHECK(std::fabs(heavy_right.mean - exact) < 5.0 * heavy_right.std_error);
}
