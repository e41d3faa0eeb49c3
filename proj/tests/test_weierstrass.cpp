#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "mtor/weierstrass.hpp"

using namespace mtor;

TEST_CASE("TorusPoint wraps into [0,1)^2 and centers correctly") {
    TorusPoint p(1.25, -0.25);
    CHECK(p.re == doctest::Approx(0.25));
    CHECK(p.im == doctest::Approx(0.75));
    CHECK(p.centered().real() == doctest::Approx(0.25));
    CHECK(p.centered().imag() == doctest::Approx(-0.25));
    CHECK(std::abs(TorusPoint(0.0, 0.0).centered()) == 0.0);
}

TEST_CASE("wp at distinguished points") {
    SUBCASE("lattice points are poles") {
        CHECK(wp(TorusPoint(0.0, 0.0), 20).infinite);
        CHECK(wp(TorusPoint(1.0 - 1e-9, 0.0), 20).infinite);
    }
    SUBCASE("the half-period (1/2)(1+i) is the zero") {
        SpherePoint v = wp(TorusPoint(0.5, 0.5), 60);
        REQUIRE_FALSE(v.infinite);
        CHECK(std::abs(v.value) < 1e-3);
    }
    SUBCASE("near zero the pole term dominates") {
        SpherePoint v = wp(TorusPoint(0.01, 0.0), 60);
        REQUIRE_FALSE(v.infinite);
        CHECK(v.value.real() == doctest::Approx(1e4).epsilon(0.01));
        CHECK(std::abs(v.value.imag()) < 1.0);
    }
}

TEST_CASE("parity and double periodicity of the evaluator") {
    CHECK(check_parity_periodicity(0, 60, 1e-12));  // vacuous
    CHECK(check_parity_periodicity(100, 60, 1e-4));

    SUBCASE("forged asymmetric function fails") {
        WpFn forged = [](std::complex<double> z) { return 1.0 / (z * z) + z; };
        CHECK_FALSE(check_parity_periodicity(100, 1e-4, forged));
    }
}

TEST_CASE("half values") {
    HalfValueReport r = check_half_values(60, 1e-3);
    CHECK(r.ok);
    CHECK(r.e_m > 0.0);
    CHECK(r.e_m == doctest::Approx(6.8752).epsilon(1e-3));
    CHECK(std::abs(r.e_m + r.e_n) < 1e-3);
    CHECK(r.e_p_abs < 1e-3);
    CHECK(r.cross_error < 1e-3);  // shell sum at R vs brute force at 2R
    // sum of the three roots of the cubic vanishes
    CHECK(std::abs(r.e_m + r.e_n) + r.e_p_abs < 1e-3);
}

TEST_CASE("truncation error decays like 1/R^2") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int done = 0;
    while (done < 20) {
        TorusPoint p(uni(rng), uni(rng));
        if (std::abs(p.centered()) < 0.1) continue;
        ++done;
        std::complex<double> a = wp_shell_sum(p.centered(), 15);
        std::complex<double> b = wp_shell_sum(p.centered(), 30);
        std::complex<double> c = wp_shell_sum(p.centered(), 60);
        double d1 = std::abs(a - b), d2 = std::abs(b - c);
        REQUIRE(d2 > 0.0);
        CHECK(d1 / d2 >= 3.0);  // doubling R shrinks the defect ~4x
    }
}

TEST_CASE("shell sum agrees with the brute-force double loop") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> uni(-0.5, 0.5);
    for (int k = 0; k < 10; ++k) {
        std::complex<double> z(uni(rng), uni(rng));
        if (std::abs(z) < 0.1) continue;
        CHECK(std::abs(wp_shell_sum(z, 25) - wp_brute_sum(z, 25)) < 1e-12);
    }
}

TEST_CASE("axis images land on the four half-axes") {
    AxisImageReport r = check_axis_images(24, 60, 1e-3);
    CHECK(r.ok);
    CHECK(r.max_axis_error < 1e-3);

    SUBCASE("spot values confirm the half-axis assignment") {
        // t: wp(1/2) = e_m is the minimum of the real branch
        double e_m = wp_shell_sum({0.5, 0.0}, 60).real();
        std::complex<double> vt = wp_shell_sum({0.3, 0.0}, 60);
        CHECK(vt.imag() == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(vt.real() > e_m);
        // u: value below e_n = -e_m
        std::complex<double> vu = wp_shell_sum({0.0, 0.75}, 60);
        CHECK(vu.real() < -e_m + 1e-6);
        // diagonal (1+i)s: negative imaginary half-axis (1/z^2 ~ -i/(2s^2))
        std::complex<double> vp = wp_shell_sum({0.25, 0.25}, 60);
        CHECK(vp.real() == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(vp.imag() < 0.0);
        // diagonal (1-i)s: positive imaginary half-axis
        std::complex<double> vm = wp_shell_sum({0.25, -0.25}, 60);
        CHECK(vm.imag() > 0.0);
        CHECK(std::abs(vp + vm) < 1e-9);
    }
}

TEST_CASE("torus_apply uses the column action") {
    TorusPoint p = torus_apply(mat_A(), TorusPoint(0.0, 0.5));  // A (0, 1/2) = (-1/2, 1/2)
    CHECK(p.re == doctest::Approx(0.5));
    CHECK(p.im == doctest::Approx(0.5));
    TorusPoint q = torus_apply(mat_B(), TorusPoint(0.5, 0.0));  // B (1/2, 0) = (1/2, 1/2)
    CHECK(q.re == doctest::Approx(0.5));
    CHECK(q.im == doctest::Approx(0.5));
}

TEST_CASE("half turns") {
    HalfTurnReport r = check_half_turns(1e-3);
    CHECK(r.a_ok);
    CHECK(r.b_ok);
    CHECK(r.max_error_a < 1e-3);
    CHECK(r.max_error_b < 1e-3);

    SUBCASE("the identity fixes all four axis images") {
        for (Axis axis : {Axis::t, Axis::u, Axis::diag_plus, Axis::diag_minus})
            CHECK(axis_map_error(mat_identity(), axis, axis_image(axis), 60, 16) < 1e-6);
    }
    SUBCASE("a wrong target is detected") {
        CHECK(axis_map_error(mat_identity(), Axis::t, HalfAxis::v_plus, 60, 16) > 1.0);
    }
}

TEST_CASE("wp_full_report aggregates everything") {
    WpReport r = wp_full_report(60, 1e-3);
    CHECK(r.ok);
    CHECK(r.half_values.ok);
    CHECK(r.axis_images.ok);
    CHECK(r.half_turns.a_ok);
    CHECK(r.half_turns.b_ok);
    CHECK(r.parity_periodicity);
}
