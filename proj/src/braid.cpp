#include "mtor/braid.hpp"

#include "mtor/sl2z.hpp"

namespace mtor {

Mat2Z sigma(const BraidWord& w) {
    Mat2Z m;
    for (const auto& l : w.letters)
        m *= (l.gen == 0) ? mat_A_pow(l.exp) : mat_B_pow(l.exp);
    return m;
}

mpz_class exp_sum(const BraidWord& w) { return w.exponent_sum(); }

bool braid_equal(const BraidWord& u, const BraidWord& v) {
    return exp_sum(u) == exp_sum(v) && sigma(u) == sigma(v);
}

BraidWord central_word(const mpz_class& k) {
    BraidWord w;
    if (k >= 0) {
        for (mpz_class i = 0; i < k; ++i)
            for (int j = 0; j < 3; ++j) {
                w.push(0, 1);
                w.push(1, 1);
            }
    } else {
        for (mpz_class i = 0; i > k; --i)
            for (int j = 0; j < 3; ++j) {
                w.push(1, -1);
                w.push(0, -1);
            }
    }
    return w;
}

std::optional<mpz_class> is_central_power(const BraidWord& w) {
    mpz_class s = exp_sum(w);
    if (s % 6 != 0) return std::nullopt;
    mpz_class k = s / 6;
    // sigma((ababab)^k) = (X^2)^k = (-I)^k
    const Mat2Z target = (k % 2 == 0) ? mat_identity() : mat_minus_identity();
    if (sigma(w) == target) return k;
    return std::nullopt;
}

BraidWord braid_from_matrix(const Mat2Z& m) {
    BraidWord w;
    for (const auto& l : word_of_matrix(m).letters) w.push(l.gen, l.exp);
    // word_of_matrix is exact in SL(2,Z); the sign branch mirrors the
    // case split M = sigma(mu) or M = sigma(x^2 mu) and stays as a guard.
    if (sigma(w) != m) w *= central_word(1);
    return w;
}

}  // namespace mtor
