#pragma once

#include <complex>
#include <iosfwd>
#include <utility>
#include <vector>

#include "mtor/mat2z.hpp"
#include "mtor/sl2z.hpp"
#include "mtor/words.hpp"

namespace mtor {

// Point of the Poincare half-plane; construction rejects im <= 0.
struct HPoint {
    double re = 0.0;
    double im = 1.0;

    HPoint() = default;
    HPoint(double re_, double im_) : re(re_), im(im_) {
        if (!(im > 0.0)) throw std::domain_error("HPoint: imaginary part must be positive");
    }

    std::complex<double> z() const { return {re, im}; }
};

// Point of the boundary circle R u {inf}.
struct BoundaryPoint {
    bool infinite = false;
    double t = 0.0;

    static BoundaryPoint inf() { return BoundaryPoint{true, 0.0}; }
    static BoundaryPoint at(double t) { return BoundaryPoint{false, t}; }
};

// (a z + b) / (c z + d).  The pole c z + d = 0 cannot occur for im z > 0
// with real entries unless c = d = 0, which det 1 forbids; m and -m act
// identically.
HPoint mobius_apply(const Mat2Z& m, const HPoint& z);
std::complex<double> mobius_apply(const Mat2Z& m, std::complex<double> z);
BoundaryPoint mobius_apply(const Mat2Z& m, const BoundaryPoint& p);

// Closed standard fundamental domain -1/2 <= re <= 1/2, |z| >= 1,
// membership within absolute tolerance tol.
bool in_standard_domain(const HPoint& z, double tol = 1e-9);

// Reduce z into the standard domain.  Returns the reduced point z' and a
// word w in A, B with mobius_apply(eval_word(w), z) ~ z' within tol.
// Points already within tol of the closed domain are returned as-is.
// Throws std::runtime_error if the iteration budget is exhausted
// (tolerance too tight for floating precision).
std::pair<HPoint, GenWord> reduce_point(const HPoint& z, double tol = 1e-9);

// Tile B_n: the standard domain translated by +n.  Sides are geodesics
// named by their ideal endpoints; the arc side lies on |z - n| = 1.
struct DomainSpec {
    long n = 0;

    double left_foot() const { return static_cast<double>(n) - 0.5; }
    double right_foot() const { return static_cast<double>(n) + 0.5; }
    double arc_foot_left() const { return static_cast<double>(n) - 1.0; }
    double arc_foot_right() const { return static_cast<double>(n) + 1.0; }

    // Finite vertices n + e^{2 pi i/3} and n + e^{pi i/3}.
    std::complex<double> vertex_left() const;
    std::complex<double> vertex_right() const;

    bool contains(const HPoint& z, double tol = 1e-9) const;
};

DomainSpec domain_tile(long n);

// The six tiles B_0..B_5, a fundamental strip for <A^-6 X^2> acting on
// the union of all B_n (projectively, z -> z + 6).
std::vector<DomainSpec> hexagon();

// Side pairing of the strip: f_matrix(n).
Mat2Z side_pairing(const mpz_class& n);

// Checks that f_n carries the arc side of B_n onto the arc side of
// B_{n+3}: the finite arc endpoints map onto each other as a set, and so
// do the ideal feet {n-1, n+1} -> {n+2, n+4}.
bool verify_pairing(long n, double tol = 1e-9);

// The parabolic fixing the cusp of the quotient torus:
// [f_-1^-1, f_-2] = f_-1^-1 f_-2 f_-1 f_-2^-1.
Mat2Z cusp_commutator();

// Draws tiles B_n for n in [n_lo, n_hi] (empty when n_lo > n_hi) and, for
// depth >= 1, their images under all reduced words of length <= depth in
// g1, g2.  One <path> per tile, base tiles carrying id "B{n}"; half-plane
// coordinates are mapped to the viewport by an affine transform declared
// on the enclosing <g>.
void emit_tiling_svg(long n_lo, long n_hi, int depth, std::ostream& out);

}  // namespace mtor
