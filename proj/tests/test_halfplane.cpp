#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mtor/halfplane.hpp"
#include "mtor/io.hpp"
#include "test_util.hpp"

using namespace mtor;
using testutil::random_word;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("HPoint rejects the lower half-plane") {
    CHECK_NOTHROW(HPoint(0.0, 1e-9));
    CHECK_THROWS_AS(HPoint(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(HPoint(1.0, -2.0), std::domain_error);
}

TEST_CASE("mobius_apply") {
    HPoint i(0.0, 1.0);
    SUBCASE("identity fixes i") {
        HPoint w = mobius_apply(mat_identity(), i);
        CHECK(w.re == doctest::Approx(0.0));
        CHECK(w.im == doctest::Approx(1.0));
    }
    SUBCASE("A translates by -1") {
        HPoint w = mobius_apply(mat_A(), i);
        CHECK(w.re == doctest::Approx(-1.0));
        CHECK(w.im == doctest::Approx(1.0));
    }
    SUBCASE("X fixes i and acts as -1/z") {
        HPoint w = mobius_apply(mat_X(), i);
        CHECK(std::abs(w.z() - i.z()) < 1e-15);
        HPoint v = mobius_apply(mat_X(), HPoint(2.0, 1.0));
        CHECK(std::abs(v.z() - (-1.0 / std::complex<double>(2.0, 1.0))) < 1e-15);
    }
    SUBCASE("image stays in the half-plane and -m acts like m") {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> reu(-5.0, 5.0), imu(0.01, 5.0);
        for (int k = 0; k < 100; ++k) {
            Mat2Z m = eval_word(random_word<Alphabet::gen_AB>(rng, 12));
            HPoint z(reu(rng), imu(rng));
            HPoint w = mobius_apply(m, z);
            CHECK(w.im > 0.0);
            HPoint w2 = mobius_apply(negate(m), z);
            CHECK(std::abs(w.z() - w2.z()) < 1e-12);
        }
    }
    SUBCASE("action is multiplicative within 1e-9 for small entries") {
        std::mt19937 rng(12);
        std::uniform_real_distribution<double> reu(-3.0, 3.0), imu(0.05, 3.0);
        int done = 0;
        while (done < 100) {
            Mat2Z m = eval_word(random_word<Alphabet::gen_AB>(rng, 10));
            Mat2Z n = eval_word(random_word<Alphabet::gen_AB>(rng, 10));
            if (abs(m.a) > 1000 || abs(m.b) > 1000 || abs(m.c) > 1000 || abs(m.d) > 1000)
                continue;
            if (abs(n.a) > 1000 || abs(n.b) > 1000 || abs(n.c) > 1000 || abs(n.d) > 1000)
                continue;
            ++done;
            HPoint z(reu(rng), imu(rng));
            std::complex<double> lhs = mobius_apply(m * n, z).z();
            std::complex<double> rhs = mobius_apply(m, mobius_apply(n, z)).z();
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
    SUBCASE("boundary action, 0 and infinity swap under X") {
        BoundaryPoint w = mobius_apply(mat_X(), BoundaryPoint::at(0.0));
        CHECK(w.infinite);
        BoundaryPoint v = mobius_apply(mat_X(), BoundaryPoint::inf());
        CHECK_FALSE(v.infinite);
        CHECK(v.t == doctest::Approx(0.0));
        BoundaryPoint u = mobius_apply(mat_A(), BoundaryPoint::at(2.5));
        CHECK(u.t == doctest::Approx(1.5));
    }
}

TEST_CASE("in_standard_domain") {
    CHECK(in_standard_domain(HPoint(0.0, 1.0)));
    CHECK_FALSE(in_standard_domain(HPoint(5.0, 2.0)));
    CHECK(in_standard_domain(HPoint(0.5, std::sqrt(3.0) / 2.0)));  // boundary vertex
    CHECK_FALSE(in_standard_domain(HPoint(0.0, 0.5)));
    CHECK(in_standard_domain(HPoint(0.5 + 1e-12, 2.0)));  // within tolerance
}

TEST_CASE("reduce_point") {
    SUBCASE("fixed point of the domain") {
        auto [z, w] = reduce_point(HPoint(0.0, 1.0));
        CHECK(w.empty());
        CHECK(z.re == doctest::Approx(0.0));
    }
    SUBCASE("pure translation") {
        auto [z, w] = reduce_point(HPoint(5.0, 1.0));
        CHECK(std::abs(z.z() - std::complex<double>(0.0, 1.0)) < 1e-12);
        CHECK(format_gen_word(w) == "A^5");
    }
    SUBCASE("deep point reduces and round-trips") {
        auto [z, w] = reduce_point(HPoint(0.1, 0.1));
        CHECK(in_standard_domain(z));
        std::complex<double> back = mobius_apply(eval_word(w), HPoint(0.1, 0.1)).z();
        CHECK(std::abs(back - z.z()) < 1e-9);
    }
    SUBCASE("random points round-trip") {
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> reu(-1000.0, 1000.0);
        std::uniform_real_distribution<double> logim(-3.0, 3.0);
        for (int k = 0; k < 300; ++k) {
            HPoint z0(reu(rng), std::pow(10.0, logim(rng)));
            auto [z, w] = reduce_point(z0);
            CHECK(in_standard_domain(z));
            CHECK(std::abs(mobius_apply(eval_word(w), z0).z() - z.z()) < 1e-6);
        }
    }
}

TEST_CASE("domain tiles") {
    DomainSpec b0 = domain_tile(0);
    CHECK(b0.left_foot() == -0.5);
    CHECK(b0.right_foot() == 0.5);
    CHECK(std::abs(b0.vertex_left() - std::exp(std::complex<double>(0, 2 * M_PI / 3))) < 1e-15);
    CHECK(std::abs(b0.vertex_right() - std::exp(std::complex<double>(0, M_PI / 3))) < 1e-15);
    CHECK(b0.contains(HPoint(0.0, 1.0)));
    CHECK_FALSE(b0.contains(HPoint(1.0, 1.0)));

    DomainSpec b1 = domain_tile(1);
    CHECK(b1.left_foot() == 0.5);
    CHECK(b1.right_foot() == 1.5);
    CHECK(b1.arc_foot_left() == 0.0);
    CHECK(b1.arc_foot_right() == 2.0);

    DomainSpec bm3 = domain_tile(-3);
    CHECK(bm3.left_foot() == -3.5);
    CHECK(bm3.right_foot() == -2.5);

    auto tiles = hexagon();
    REQUIRE(tiles.size() == 6);
    for (long k = 0; k < 6; ++k) CHECK(tiles[k].n == k);
    CHECK(tiles.front().left_foot() == -0.5);
    CHECK(tiles.back().right_foot() == 5.5);
}

TEST_CASE("side pairings carry arc sides of B_n onto B_{n+3}") {
    CHECK(side_pairing(-2) == Mat2Z(1, 1, 1, 2));
    CHECK(side_pairing(-1) == Mat2Z(2, 1, 1, 1));
    CHECK(side_pairing(0) == f_matrix(-1) * inverse(f_matrix(-2)));
    for (long n = -10; n <= 10; ++n) {
        CHECK(verify_pairing(n));
        CHECK(derived_member(side_pairing(n)));
    }
}

TEST_CASE("A^-6 X^2 translates by 6 projectively") {
    const Mat2Z t6 = mat_A_pow(-6) * mat_X() * mat_X();
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> reu(-10.0, 10.0), imu(0.05, 10.0);
    for (int k = 0; k < 100; ++k) {
        std::complex<double> z(reu(rng), imu(rng));
        std::complex<double> w = mobius_apply(t6, z);
        CHECK(std::abs(w - (z + 6.0)) < 1e-9);
    }
}

TEST_CASE("cusp commutator") {
    const Mat2Z c = cusp_commutator();
    CHECK(c == Mat2Z(-1, 0, 6, -1));
    CHECK(abs(trace(c)) == 2);
    CHECK(c != mat_identity());
    CHECK(c != mat_minus_identity());

    SUBCASE("traces and the Fricke identity") {
        const Mat2Z& u = free_gen_matrix(0);  // f_-2
        const Mat2Z& v = free_gen_matrix(1);  // f_-1
        CHECK(trace(u) == 3);
        CHECK(trace(v) == 3);
        CHECK(trace(u * v) == 6);
        // 3^2 + 3^2 + 6^2 = 3*3*6 = 54
        CHECK(9 + 9 + 36 == 54);
        mpz_class fricke = trace(u) * trace(u) + trace(v) * trace(v) +
                           trace(u * v) * trace(u * v) -
                           trace(u) * trace(v) * trace(u * v) - 2;
        Mat2Z comm = u * v * inverse(u) * inverse(v);
        CHECK(trace(comm) == fricke);
        CHECK(fricke == -2);
    }
}

TEST_CASE("emit_tiling_svg") {
    SUBCASE("six tiles at depth 0") {
        std::ostringstream out;
        emit_tiling_svg(0, 5, 0, out);
        std::string svg = out.str();
        CHECK(count_occurrences(svg, "<path") == 6);
        for (int n = 0; n < 6; ++n)
            CHECK(svg.find("id=\"B" + std::to_string(n) + "\"") != std::string::npos);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("transform=\"matrix(") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
    }
    SUBCASE("empty range is a valid SVG with no tiles") {
        std::ostringstream out;
        emit_tiling_svg(1, 0, 0, out);
        std::string svg = out.str();
        CHECK(count_occurrences(svg, "<path") == 0);
        CHECK(svg.find("</svg>") != std::string::npos);
    }
    SUBCASE("depth 1 adds the four one-letter images per tile") {
        std::ostringstream out;
        emit_tiling_svg(0, 5, 1, out);
        CHECK(count_occurrences(out.str(), "<path") == 6 + 6 * 4);
    }
    SUBCASE("negative range indices work") {
        std::ostringstream out;
        emit_tiling_svg(-3, -1, 0, out);
        std::string svg = out.str();
        CHECK(count_occurrences(svg, "<path") == 3);
        CHECK(svg.find("id=\"B-2\"") != std::string::npos);
    }
}
