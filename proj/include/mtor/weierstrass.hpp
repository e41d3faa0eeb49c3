#pragma once

#include <complex>
#include <functional>

#include "mtor/mat2z.hpp"

namespace mtor {

// Point of the square torus C / (Z + iZ), stored with coordinates in [0,1).
struct TorusPoint {
    double re = 0.0;
    double im = 0.0;

    TorusPoint() = default;
    TorusPoint(double re_, double im_) : re(wrap(re_)), im(wrap(im_)) {}

    static double wrap(double x) {
        double r = x - std::floor(x);
        if (r >= 1.0) r = 0.0;  // guard against floor rounding at integers
        return r;
    }

    // Representative nearest the origin, coordinates in [-1/2, 1/2].
    std::complex<double> centered() const {
        return {re - std::round(re), im - std::round(im)};
    }
};

// Value on the Riemann sphere C u {inf}.
struct SpherePoint {
    bool infinite = false;
    std::complex<double> value;

    static SpherePoint inf() { return SpherePoint{true, {}}; }
    static SpherePoint at(std::complex<double> v) { return SpherePoint{false, v}; }
};

// Weierstrass p-function of the Gaussian lattice Z + iZ:
//   p(z) = 1/z^2 + sum_{g != 0} [ 1/(z-g)^2 - 1/g^2 ]
// truncated to Chebyshev shells max(|re g|,|im g|) <= radius.  Summing
// whole shells keeps the finite sum exactly even in z, and evaluating at
// the centered representative of z makes it exactly doubly periodic, so
// the truncation error only enters through the value itself (it decays
// like 1/radius^2).
std::complex<double> wp_shell_sum(std::complex<double> z, int radius);

// Independent second route: plain double loop over the square
// |re g|,|im g| <= radius in lattice order.  Used to cross-check the
// shell evaluator at a different radius.
std::complex<double> wp_brute_sum(std::complex<double> z, int radius);

// Evaluation on the torus; inputs within 1e-6 of a lattice point map to
// the pole at infinity.
SpherePoint wp(const TorusPoint& z, int radius);

// Evaluator used by the symmetry checks below; defaults to the shell sum
// at the centered representative.  Tests substitute a forged function as
// a negative control.
using WpFn = std::function<std::complex<double>(std::complex<double>)>;
WpFn wp_evaluator(int radius);

// For `samples` seeded random z (skipping points within 0.05 of the
// lattice): |f(z) - f(-z)|, |f(z) - f(z+1)| and |f(z) - f(z+i)| all stay
// below tol.
bool check_parity_periodicity(int samples, int radius, double tol);
bool check_parity_periodicity(int samples, double tol, const WpFn& f, unsigned seed = 0);

// Values at the three half-periods m = 1/2, n = i/2, p = (1+i)/2.
struct HalfValueReport {
    double e_m = 0.0;        // real part of wp(1/2); positive
    double e_n = 0.0;        // real part of wp(i/2); equals -e_m
    double e_p_abs = 0.0;    // |wp((1+i)/2)|; the true value is 0
    double cross_error = 0.0;  // |shell(m; R) - brute(m; 2R)|
    bool ok = false;
};
HalfValueReport check_half_values(int radius, double tol);

// The four subgroup circles of the torus and the half-axes of the sphere
// they map onto:
//   t  = R/Z            -> H+ = [e_m, +inf)
//   u  = iR/iZ          -> H- = (-inf, e_n]
//   D+ = R(1+i)/Z(1+i)  -> V- = (-inf, 0] i
//   D- = R(1-i)/Z(1-i)  -> V+ = [0, +inf) i
// (near 0 the images follow 1/z^2: positive reals on t, negative reals
// on u, -i/(2s^2) on D+, +i/(2s^2) on D-).
enum class Axis { t, u, diag_plus, diag_minus };
enum class HalfAxis { h_plus, h_minus, v_plus, v_minus };

HalfAxis axis_image(Axis axis);

struct AxisImageReport {
    double max_axis_error = 0.0;  // worst distance to the stated half-axis
    bool ok = false;
};
AxisImageReport check_axis_images(int samples, int radius, double tol);

// Torus automorphism z -> M z (column action on (re, im)), reduced mod 1.
TorusPoint torus_apply(const Mat2Z& m, const TorusPoint& z);

// Verifies, sampling along each axis and pushing through wp, that a
// matrix permutes the four half-axis images as stated.  A fixes the
// t-image pointwise and sends the u-image to V+ and the D+-image to H-;
// B fixes the u-image and sends the t-image to V- and the D--image to H+.
struct HalfTurnReport {
    bool a_ok = false;
    bool b_ok = false;
    double max_error_a = 0.0;
    double max_error_b = 0.0;
};
HalfTurnReport check_half_turns(double tol, int radius = 60, int samples = 16);

// Worst half-axis distance over sampled points of `axis` mapped by m and
// pushed through wp; building block of check_half_turns and of the
// identity-map sanity check.
double axis_map_error(const Mat2Z& m, Axis axis, HalfAxis target, int radius, int samples);

// Aggregate of all the checks above, as surfaced by the CLI.
struct WpReport {
    HalfValueReport half_values;
    AxisImageReport axis_images;
    HalfTurnReport half_turns;
    bool parity_periodicity = false;
    bool ok = false;
};
WpReport wp_full_report(int radius, double tol);

}  // namespace mtor
