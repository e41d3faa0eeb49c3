#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mtor {

// Exact 2x2 integer matrix [[a,b],[c,d]] of determinant +1, i.e. an
// element of SL(2,Z).  Entries are arbitrary-precision; the determinant
// is checked at construction, so every Mat2Z in existence is unimodular.
struct Mat2Z {
    mpz_class a, b, c, d;

    Mat2Z() : a(1), b(0), c(0), d(1) {}

    Mat2Z(mpz_class a_, mpz_class b_, mpz_class c_, mpz_class d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a * d - b * c != 1)
            throw std::domain_error("Mat2Z: determinant must be 1");
    }

    friend Mat2Z operator*(const Mat2Z& m, const Mat2Z& n) {
        Mat2Z r;
        r.a = m.a * n.a + m.b * n.c;
        r.b = m.a * n.b + m.b * n.d;
        r.c = m.c * n.a + m.d * n.c;
        r.d = m.c * n.b + m.d * n.d;
        return r;
    }

    Mat2Z& operator*=(const Mat2Z& n) { return *this = *this * n; }

    friend bool operator==(const Mat2Z& m, const Mat2Z& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    friend bool operator!=(const Mat2Z& m, const Mat2Z& n) { return !(m == n); }

    // Total order on entries, for use as a map key.
    friend bool operator<(const Mat2Z& m, const Mat2Z& n) {
        if (m.a != n.a) return m.a < n.a;
        if (m.b != n.b) return m.b < n.b;
        if (m.c != n.c) return m.c < n.c;
        return m.d < n.d;
    }

    std::string str() const {
        return a.get_str() + " " + b.get_str() + " " + c.get_str() + " " + d.get_str();
    }
};

// Inverse by the adjugate; determinant 1 makes it integral.
inline Mat2Z inverse(const Mat2Z& m) {
    Mat2Z r;
    r.a = m.d;
    r.b = -m.b;
    r.c = -m.c;
    r.d = m.a;
    return r;
}

inline mpz_class trace(const Mat2Z& m) { return m.a + m.d; }

inline Mat2Z negate(const Mat2Z& m) {
    Mat2Z r;
    r.a = -m.a;
    r.b = -m.b;
    r.c = -m.c;
    r.d = -m.d;
    return r;
}

// The named matrices of the presentation.
inline const Mat2Z& mat_identity() {
    static const Mat2Z I;
    return I;
}
inline const Mat2Z& mat_A() {
    static const Mat2Z A(1, -1, 0, 1);
    return A;
}
inline const Mat2Z& mat_B() {
    static const Mat2Z B(1, 0, 1, 1);
    return B;
}
inline const Mat2Z& mat_X() {
    static const Mat2Z X(0, -1, 1, 0);
    return X;
}
inline const Mat2Z& mat_minus_identity() {
    static const Mat2Z mI = negate(mat_identity());
    return mI;
}

// A^k = [[1,-k],[0,1]], closed form.
inline Mat2Z mat_A_pow(const mpz_class& k) {
    Mat2Z r;
    r.b = -k;
    return r;
}

// B^k = [[1,0],[k,1]].
inline Mat2Z mat_B_pow(const mpz_class& k) {
    Mat2Z r;
    r.c = k;
    return r;
}

// Element of PSL(2,Z): a Mat2Z up to global sign.  The stored
// representative is the one whose first nonzero entry in reading order
// (a, b, c, d) is positive, so equality and ordering are plain
// comparisons of representatives.
struct ProjMat {
    Mat2Z rep;

    ProjMat() = default;
    explicit ProjMat(const Mat2Z& m) : rep(canonical(m)) {}

    static Mat2Z canonical(const Mat2Z& m) {
        const mpz_class* entries[4] = {&m.a, &m.b, &m.c, &m.d};
        for (const mpz_class* e : entries) {
            if (*e != 0) return (*e > 0) ? m : negate(m);
        }
        throw std::domain_error("ProjMat: zero matrix cannot occur");
    }

    friend ProjMat operator*(const ProjMat& m, const ProjMat& n) {
        return ProjMat(m.rep * n.rep);
    }
    friend bool operator==(const ProjMat& m, const ProjMat& n) { return m.rep == n.rep; }
    friend bool operator!=(const ProjMat& m, const ProjMat& n) { return !(m == n); }
    friend bool operator<(const ProjMat& m, const ProjMat& n) { return m.rep < n.rep; }
};

}  // namespace mtor
