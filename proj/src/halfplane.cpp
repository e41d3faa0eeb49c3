#include "mtor/halfplane.hpp"

#include <cmath>
#include <stdexcept>

namespace mtor {

namespace {

struct MatD {
    double a, b, c, d;
    explicit MatD(const Mat2Z& m)
        : a(m.a.get_d()), b(m.b.get_d()), c(m.c.get_d()), d(m.d.get_d()) {}
};

}  // namespace

std::complex<double> mobius_apply(const Mat2Z& m, std::complex<double> z) {
    MatD f(m);
    return (f.a * z + f.b) / (f.c * z + f.d);
}

HPoint mobius_apply(const Mat2Z& m, const HPoint& z) {
    std::complex<double> w = mobius_apply(m, z.z());
    return HPoint(w.real(), w.imag());
}

BoundaryPoint mobius_apply(const Mat2Z& m, const BoundaryPoint& p) {
    MatD f(m);
    if (p.infinite) {
        if (f.c == 0.0) return BoundaryPoint::inf();
        return BoundaryPoint::at(f.a / f.c);
    }
    double denom = f.c * p.t + f.d;
    if (denom == 0.0) return BoundaryPoint::inf();
    return BoundaryPoint::at((f.a * p.t + f.b) / denom);
}

bool in_standard_domain(const HPoint& z, double tol) {
    return std::abs(z.re) <= 0.5 + tol && std::norm(z.z()) >= 1.0 - tol;
}

std::pair<HPoint, GenWord> reduce_point(const HPoint& z0, double tol) {
    // Alternate unit translations (A^t: z -> z - t) with the inversion
    // X = ABA (z -> -1/z).  The current point is always recomputed from
    // the exact accumulated matrix, so drift cannot compound.
    Mat2Z acc;
    std::vector<std::pair<int, long>> ops;  // 0: A^t, 1: X; application order
    HPoint z = z0;

    const int budget = 20000;
    for (int iter = 0; iter < budget; ++iter) {
        if (in_standard_domain(z, tol)) {
            GenWord w;
            for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
                if (it->first == 0) {
                    w.push(0, it->second);
                } else {
                    w.push(0, 1);
                    w.push(1, 1);
                    w.push(0, 1);
                }
            }
            return {z, w};
        }
        double t = std::round(z.re);
        if (t != 0.0) {
            acc = mat_A_pow(static_cast<long>(t)) * acc;
            ops.emplace_back(0, static_cast<long>(t));
        } else {
            acc = mat_X() * acc;
            ops.emplace_back(1, 0);
        }
        z = mobius_apply(acc, z0);
    }
    throw std::runtime_error("reduce_point: iteration budget exceeded (tolerance too tight)");
}

std::complex<double> DomainSpec::vertex_left() const {
    return {static_cast<double>(n) - 0.5, std::sqrt(3.0) / 2.0};
}

std::complex<double> DomainSpec::vertex_right() const {
    return {static_cast<double>(n) + 0.5, std::sqrt(3.0) / 2.0};
}

bool DomainSpec::contains(const HPoint& z, double tol) const {
    return z.re >= left_foot() - tol && z.re <= right_foot() + tol &&
           std::norm(z.z() - std::complex<double>(static_cast<double>(n), 0.0)) >= 1.0 - tol;
}

DomainSpec domain_tile(long n) { return DomainSpec{n}; }

std::vector<DomainSpec> hexagon() {
    std::vector<DomainSpec> tiles;
    tiles.reserve(6);
    for (long n = 0; n < 6; ++n) tiles.push_back(domain_tile(n));
    return tiles;
}

Mat2Z side_pairing(const mpz_class& n) { return f_matrix(n); }

bool verify_pairing(long n, double tol) {
    const Mat2Z f = side_pairing(n);
    const DomainSpec src = domain_tile(n);
    const DomainSpec dst = domain_tile(n + 3);

    auto near = [tol](std::complex<double> p, std::complex<double> q) {
        return std::abs(p - q) < tol;
    };
    std::complex<double> img_l = mobius_apply(f, src.vertex_left());
    std::complex<double> img_r = mobius_apply(f, src.vertex_right());
    bool vertices_ok =
        (near(img_l, dst.vertex_left()) && near(img_r, dst.vertex_right())) ||
        (near(img_l, dst.vertex_right()) && near(img_r, dst.vertex_left()));

    auto near_b = [tol](const BoundaryPoint& p, double t) {
        return !p.infinite && std::abs(p.t - t) < tol;
    };
    BoundaryPoint foot_l = mobius_apply(f, BoundaryPoint::at(src.arc_foot_left()));
    BoundaryPoint foot_r = mobius_apply(f, BoundaryPoint::at(src.arc_foot_right()));
    bool feet_ok =
        (near_b(foot_l, dst.arc_foot_left()) && near_b(foot_r, dst.arc_foot_right())) ||
        (near_b(foot_l, dst.arc_foot_right()) && near_b(foot_r, dst.arc_foot_left()));

    return vertices_ok && feet_ok;
}

Mat2Z cusp_commutator() {
    const Mat2Z& g1 = free_gen_matrix(0);  // f_-2
    const Mat2Z& g2 = free_gen_matrix(1);  // f_-1
    return inverse(g2) * g1 * g2 * inverse(g1);
}

}  // namespace mtor
