#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "mtor/halfplane.hpp"

namespace mtor {

namespace {

// Point of the closure of the half-plane: finite (im >= 0) or infinity.
struct ClosurePt {
    bool inf = false;
    std::complex<double> z;
};

ClosurePt apply(const Mat2Z& m, const ClosurePt& p) {
    if (p.inf) {
        BoundaryPoint b = mobius_apply(m, BoundaryPoint::inf());
        if (b.infinite) return {true, {}};
        return {false, {b.t, 0.0}};
    }
    if (p.z.imag() == 0.0) {
        BoundaryPoint b = mobius_apply(m, BoundaryPoint::at(p.z.real()));
        if (b.infinite) return {true, {}};
        return {false, {b.t, 0.0}};
    }
    return {false, mobius_apply(m, p.z)};
}

std::string num(double x) {
    if (x == 0.0) x = 0.0;  // flush -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Appends the geodesic segment from `from` to `to` to a path already
// positioned at `from`.  Ideal endpoints are clipped at y_top.
void append_segment(std::string& d, const ClosurePt& from, const ClosurePt& to, double y_top) {
    if (to.inf) {
        d += " L" + num(from.z.real()) + "," + num(y_top);
        return;
    }
    if (from.inf) {
        d += " L" + num(to.z.real()) + "," + num(y_top);
        d += " L" + num(to.z.real()) + "," + num(to.z.imag());
        return;
    }
    const std::complex<double> p = from.z, q = to.z;
    if (std::abs(p.real() - q.real()) < 1e-12) {
        d += " L" + num(q.real()) + "," + num(q.imag());
        return;
    }
    double x0 = (std::norm(p) - std::norm(q)) / (2.0 * (p.real() - q.real()));
    double r = std::abs(p - x0);
    // the local frame has y up, so sweep 1 runs counterclockwise
    int sweep = std::atan2(p.imag(), p.real() - x0) < std::atan2(q.imag(), q.real() - x0) ? 1 : 0;
    d += " A" + num(r) + "," + num(r) + " 0 0," + std::to_string(sweep) + " " +
         num(q.real()) + "," + num(q.imag());
}

std::string tile_path(const Mat2Z& g, const DomainSpec& tile, const std::string& id,
                      double y_top) {
    ClosurePt vl = apply(g, {false, tile.vertex_left()});
    ClosurePt vr = apply(g, {false, tile.vertex_right()});
    ClosurePt vi = apply(g, {true, {}});

    std::string d = "M" + num(vl.z.real()) + "," + num(vl.z.imag());
    append_segment(d, vl, vr, y_top);  // image of the arc side
    append_segment(d, vr, vi, y_top);  // image of the right side
    append_segment(d, vi, vl, y_top);  // image of the left side
    d += " Z";
    return "  <path id=\"" + id + "\" d=\"" + d + "\"/>\n";
}

struct GroupWord {
    Mat2Z m;
    std::string name;  // g1 g2 for generators, G1 G2 for inverses
};

// Reduced words of length <= depth over g1, g2 and inverses, identity first.
std::vector<GroupWord> enumerate_words(int depth) {
    std::vector<GroupWord> out{{Mat2Z(), ""}};
    struct Gen {
        Mat2Z m;
        std::string name;
        int back;  // index of the cancelling generator
    };
    const std::vector<Gen> gens = {
        {free_gen_matrix(0), "g1", 1},
        {inverse(free_gen_matrix(0)), "G1", 0},
        {free_gen_matrix(1), "g2", 3},
        {inverse(free_gen_matrix(1)), "G2", 2},
    };
    struct Node {
        Mat2Z m;
        std::string name;
        int last;
    };
    std::vector<Node> frontier;
    for (int i = 0; i < 4; ++i) {
        if (depth < 1) break;
        frontier.push_back({gens[i].m, gens[i].name, i});
        out.push_back({gens[i].m, gens[i].name});
    }
    for (int len = 2; len <= depth; ++len) {
        std::vector<Node> next;
        for (const Node& node : frontier)
            for (int i = 0; i < 4; ++i) {
                if (gens[node.last].back == i) continue;
                Node child{node.m * gens[i].m, node.name + gens[i].name, i};
                out.push_back({child.m, child.name});
                next.push_back(std::move(child));
            }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

void emit_tiling_svg(long n_lo, long n_hi, int depth, std::ostream& out) {
    const double y_top = 2.2;
    const double scale = 140.0;
    double x_min, x_max;
    if (n_lo > n_hi) {
        x_min = -2.0;
        x_max = 2.0;
    } else {
        x_min = static_cast<double>(n_lo) - 1.7;
        x_max = static_cast<double>(n_hi) + 1.7;
    }
    const double w = scale * (x_max - x_min);
    const double h = scale * y_top;

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\""
        << num(h) << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n"
        << "<g transform=\"matrix(" << num(scale) << " 0 0 " << num(-scale) << " "
        << num(-scale * x_min) << " " << num(scale * y_top) << ")\" fill=\"#dce6f2\" "
        << "fill-opacity=\"0.5\" stroke=\"#1f3a5f\" stroke-width=\"0.012\">\n"
        << "  <line x1=\"" << num(x_min) << "\" y1=\"0\" x2=\"" << num(x_max)
        << "\" y2=\"0\" stroke=\"#888888\"/>\n";

    if (n_lo <= n_hi) {
        const std::vector<GroupWord> words = enumerate_words(depth);
        for (long n = n_lo; n <= n_hi; ++n) {
            const DomainSpec tile = domain_tile(n);
            for (const GroupWord& gw : words) {
                std::string id = "B" + std::to_string(n);
                if (!gw.name.empty()) id += "_" + gw.name;
                out << tile_path(gw.m, tile, id, y_top);
            }
        }
    }
    out << "</g>\n</svg>\n";
    if (!out) throw std::runtime_error("emit_tiling_svg: write failed");
}

}  // namespace mtor
