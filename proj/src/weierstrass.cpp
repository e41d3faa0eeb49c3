#include "mtor/weierstrass.hpp"

#include <cmath>
#include <random>

namespace mtor {

namespace {

std::complex<double> center_rep(std::complex<double> z) {
    return {z.real() - std::round(z.real()), z.imag() - std::round(z.imag())};
}

inline std::complex<double> inv_sq(std::complex<double> w) {
    return 1.0 / (w * w);
}

constexpr double kLatticeCutoff = 1e-6;

}  // namespace

std::complex<double> wp_shell_sum(std::complex<double> z, int radius) {
    std::complex<double> s = inv_sq(z);
    for (int k = 1; k <= radius; ++k) {
        std::complex<double> shell = 0.0;
        auto term = [&](int x, int y) {
            std::complex<double> g(static_cast<double>(x), static_cast<double>(y));
            shell += inv_sq(z - g) - inv_sq(g);
        };
        for (int y = -k; y <= k; ++y) {
            term(k, y);
            term(-k, y);
        }
        for (int x = -k + 1; x <= k - 1; ++x) {
            term(x, k);
            term(x, -k);
        }
        s += shell;
    }
    return s;
}

std::complex<double> wp_brute_sum(std::complex<double> z, int radius) {
    std::complex<double> s = inv_sq(z);
    for (int x = -radius; x <= radius; ++x)
        for (int y = -radius; y <= radius; ++y) {
            if (x == 0 && y == 0) continue;
            std::complex<double> g(static_cast<double>(x), static_cast<double>(y));
            s += inv_sq(z - g) - inv_sq(g);
        }
    return s;
}

SpherePoint wp(const TorusPoint& z, int radius) {
    std::complex<double> c = z.centered();
    if (std::abs(c) < kLatticeCutoff) return SpherePoint::inf();
    return SpherePoint::at(wp_shell_sum(c, radius));
}

WpFn wp_evaluator(int radius) {
    return [radius](std::complex<double> z) { return wp_shell_sum(center_rep(z), radius); };
}

bool check_parity_periodicity(int samples, double tol, const WpFn& f, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const std::complex<double> one(1.0, 0.0), eye(0.0, 1.0);
    int done = 0;
    while (done < samples) {
        std::complex<double> z(uni(rng), uni(rng));
        if (std::abs(center_rep(z)) < 0.05) continue;
        ++done;
        std::complex<double> v = f(z);
        if (std::abs(v - f(-z)) >= tol) return false;
        if (std::abs(v - f(z + one)) >= tol) return false;
        if (std::abs(v - f(z + eye)) >= tol) return false;
    }
    return true;
}

bool check_parity_periodicity(int samples, int radius, double tol) {
    return check_parity_periodicity(samples, tol, wp_evaluator(radius));
}

HalfValueReport check_half_values(int radius, double tol) {
    HalfValueReport r;
    std::complex<double> vm = wp_shell_sum(TorusPoint(0.5, 0.0).centered(), radius);
    std::complex<double> vn = wp_shell_sum(TorusPoint(0.0, 0.5).centered(), radius);
    std::complex<double> vp = wp_shell_sum(TorusPoint(0.5, 0.5).centered(), radius);
    r.e_m = vm.real();
    r.e_n = vn.real();
    r.e_p_abs = std::abs(vp);
    r.cross_error = std::abs(vm - wp_brute_sum(TorusPoint(0.5, 0.0).centered(), 2 * radius));
    r.ok = r.e_m > 0.0 && std::abs(vm.imag()) < tol && std::abs(vn.imag()) < tol &&
           std::abs(r.e_m + r.e_n) < tol && r.e_p_abs < tol && r.cross_error < tol;
    return r;
}

namespace {

TorusPoint axis_point(Axis axis, double s) {
    switch (axis) {
        case Axis::t: return TorusPoint(s, 0.0);
        case Axis::u: return TorusPoint(0.0, s);
        case Axis::diag_plus: return TorusPoint(s, s);
        case Axis::diag_minus: return TorusPoint(s, -s);
    }
    return TorusPoint();
}

double half_axis_distance(std::complex<double> v, HalfAxis h, double e_m, double e_n) {
    switch (h) {
        case HalfAxis::h_plus:
            return std::hypot(v.imag(), std::max(0.0, e_m - v.real()));
        case HalfAxis::h_minus:
            return std::hypot(v.imag(), std::max(0.0, v.real() - e_n));
        case HalfAxis::v_plus:
            return std::hypot(v.real(), std::max(0.0, -v.imag()));
        case HalfAxis::v_minus:
            return std::hypot(v.real(), std::max(0.0, v.imag()));
    }
    return 0.0;
}

}  // namespace

HalfAxis axis_image(Axis axis) {
    switch (axis) {
        case Axis::t: return HalfAxis::h_plus;
        case Axis::u: return HalfAxis::h_minus;
        case Axis::diag_plus: return HalfAxis::v_minus;
        case Axis::diag_minus: return HalfAxis::v_plus;
    }
    return HalfAxis::h_plus;
}

AxisImageReport check_axis_images(int samples, int radius, double tol) {
    AxisImageReport r;
    const double e_m = wp_shell_sum(TorusPoint(0.5, 0.0).centered(), radius).real();
    const double e_n = -e_m;
    for (Axis axis : {Axis::t, Axis::u, Axis::diag_plus, Axis::diag_minus}) {
        for (int j = 0; j < samples; ++j) {
            double s = (j + 0.5) / samples;
            TorusPoint p = axis_point(axis, s);
            if (std::abs(p.centered()) < 0.05) continue;
            std::complex<double> v = wp_shell_sum(p.centered(), radius);
            r.max_axis_error =
                std::max(r.max_axis_error, half_axis_distance(v, axis_image(axis), e_m, e_n));
        }
    }
    r.ok = r.max_axis_error < tol;
    return r;
}

TorusPoint torus_apply(const Mat2Z& m, const TorusPoint& z) {
    double a = m.a.get_d(), b = m.b.get_d(), c = m.c.get_d(), d = m.d.get_d();
    return TorusPoint(a * z.re + b * z.im, c * z.re + d * z.im);
}

double axis_map_error(const Mat2Z& m, Axis axis, HalfAxis target, int radius, int samples) {
    const double e_m = wp_shell_sum(TorusPoint(0.5, 0.0).centered(), radius).real();
    const double e_n = -e_m;
    double worst = 0.0;
    for (int j = 0; j < samples; ++j) {
        double s = (j + 0.5) / samples;
        TorusPoint p = axis_point(axis, s);
        if (std::abs(p.centered()) < 0.05) continue;
        TorusPoint q = torus_apply(m, p);
        if (std::abs(q.centered()) < 0.05) continue;  // pole lies on every half-axis
        std::complex<double> v = wp_shell_sum(q.centered(), radius);
        worst = std::max(worst, half_axis_distance(v, target, e_m, e_n));
    }
    return worst;
}

HalfTurnReport check_half_turns(double tol, int radius, int samples) {
    HalfTurnReport r;
    const Mat2Z& A = mat_A();
    const Mat2Z& B = mat_B();
    // A: (x,y) -> (x-y, y) sends t -> t, u -> D-, D+ -> u
    r.max_error_a = std::max({axis_map_error(A, Axis::t, HalfAxis::h_plus, radius, samples),
                              axis_map_error(A, Axis::u, HalfAxis::v_plus, radius, samples),
                              axis_map_error(A, Axis::diag_plus, HalfAxis::h_minus, radius, samples)});
    // B: (x,y) -> (x, x+y) sends u -> u, t -> D+, D- -> t
    r.max_error_b = std::max({axis_map_error(B, Axis::u, HalfAxis::h_minus, radius, samples),
                              axis_map_error(B, Axis::t, HalfAxis::v_minus, radius, samples),
                              axis_map_error(B, Axis::diag_minus, HalfAxis::h_plus, radius, samples)});
    r.a_ok = r.max_error_a < tol;
    r.b_ok = r.max_error_b < tol;
    return r;
}

WpReport wp_full_report(int radius, double tol) {
    WpReport r;
    r.half_values = check_half_values(radius, tol);
    r.axis_images = check_axis_images(24, radius, tol);
    r.half_turns = check_half_turns(tol, radius, 16);
    r.parity_periodicity = check_parity_periodicity(100, radius, tol);
    r.ok = r.half_values.ok && r.axis_images.ok && r.half_turns.a_ok && r.half_turns.b_ok &&
           r.parity_periodicity;
    return r;
}

}  // namespace mtor
