#include "mtor/sl2z.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace mtor {

namespace {

// Quotient q minimizing |a - q*c| (ties toward the floor quotient).
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& c) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    // floor remainder has the sign of c, so rounding up is always q+1
    if (2 * abs(r) > abs(c)) q += 1;
    return q;
}

}  // namespace

Mat2Z eval_word(const GenWord& w) {
    Mat2Z m;
    for (const auto& l : w.letters)
        m *= (l.gen == 0) ? mat_A_pow(l.exp) : mat_B_pow(l.exp);
    return m;
}

GenWord word_of_matrix(const Mat2Z& m) {
    // Reduce the first column by left multiplications until c = 0.
    //   A^k on the left:  a <- a - k c   (b follows)
    //   B^j on the left:  c <- c + j a   (d follows)
    // gcd(a,c) = 1, so nearest-quotient steps land on a = +-1, c = 0.
    mpz_class a = m.a, b = m.b, c = m.c, d = m.d;
    std::vector<std::pair<int, mpz_class>> mults;  // applied left factors, in order

    while (c != 0) {
        if (a == 0) {
            // det = -bc = 1 forces c = +-1; one A step makes a = c^2 = 1
            mpz_class k = -c;
            a -= k * c;
            b -= k * d;
            mults.emplace_back(0, std::move(k));
        } else if (abs(a) > abs(c)) {
            mpz_class k = nearest_quotient(a, c);
            a -= k * c;
            b -= k * d;
            mults.emplace_back(0, std::move(k));
        } else {
            mpz_class q = nearest_quotient(c, a);
            c -= q * a;
            d -= q * b;
            mults.emplace_back(1, -q);
        }
    }

    // Now [[a,b],[0,d]] with a = d = +-1.  m = L1^-1 ... Lt^-1 * tail.
    GenWord w;
    for (const auto& [gen, exp] : mults) w.push(gen, -exp);
    if (a == 1) {
        // tail = [[1,b],[0,1]] = A^-b
        w.push(0, -b);
    } else {
        // tail = -A^b; -I = (AB)^3
        for (int i = 0; i < 3; ++i) {
            w.push(0, 1);
            w.push(1, 1);
        }
        w.push(0, b);
    }
    return w;
}

AbClass abelianize(const Mat2Z& m) {
    mpz_class s = word_of_matrix(m).exponent_sum();
    mpz_class r = s % 12;
    if (r < 0) r += 12;
    return AbClass{static_cast<int>(r.get_si()), AbClass::Group::sl};
}

AbClass abelianize(const ProjMat& m) { return abelianize(m.rep).to_psl(); }

Mat2Z f_matrix(const mpz_class& n) {
    return mat_A_pow(-(n + 3)) * mat_X() * mat_A_pow(n);
}

const Mat2Z& free_gen_matrix(int gen) {
    static const Mat2Z g1 = f_matrix(-2);  // [[1,1],[1,2]] = B A^-1
    static const Mat2Z g2 = f_matrix(-1);  // [[2,1],[1,1]] = A^-1 B
    return gen == 0 ? g1 : g2;
}

FreeWord f_in_free_gens(long n) {
    static std::mutex mu;
    static std::map<long, FreeWord> memo;
    std::lock_guard<std::mutex> lock(mu);

    if (memo.empty()) {
        FreeWord g1, g2;
        g1.push(0, 1);
        g2.push(1, 1);
        memo[-2] = g1;
        memo[-1] = g2;
    }
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    // f_{n+1} = f_n f_{n-1}^-1 upward, f_{n-1} = f_{n+1}^-1 f_n downward
    for (long k = memo.rbegin()->first; k < n; ++k)
        memo[k + 1] = memo[k] * inverse(memo[k - 1]);
    for (long k = memo.begin()->first; k > n; --k)
        memo[k - 1] = inverse(memo[k + 1]) * memo[k];
    return memo[n];
}

bool derived_member(const Mat2Z& m) { return abelianize(m).value == 0; }

Mat2Z eval_free(const FreeWord& w) {
    Mat2Z m;
    for (const auto& l : w.letters) {
        const Mat2Z& g = free_gen_matrix(l.gen);
        const Mat2Z base = (l.exp > 0) ? g : inverse(g);
        for (mpz_class i = 0; i < abs(l.exp); ++i) m *= base;
    }
    return m;
}

namespace {

// Schreier rewriting table for the derived subgroup against the
// transversal {A^k : k = 0..11}.  Walking a word in A, B and tracking
// the exponent sum k of the prefix mod 12, each letter l contributes
// A^k l A^-k', k' = (k + exp l) mod 12.  A letters contribute A^+-12
// exactly at the wraparound; B letters contribute conjugates
// A^(k+1) f_-1 A^-(k+1) = f_-(k+2), which the recurrence already knows.
struct SchreierTable {
    FreeWord a12;          // word for A^12 = ((f_0 f_-3)^2)^-1
    FreeWord b_fwd[12];    // A^k B A^-((k+1) mod 12)
    FreeWord b_inv[12];    // A^k B^-1 A^-((k-1) mod 12)

    SchreierTable() {
        FreeWord a12_inv = f_in_free_gens(0) * f_in_free_gens(-3);
        a12_inv *= a12_inv;  // A^-6 X^2 = f_n f_{n-3}; squaring kills the sign
        a12 = inverse(a12_inv);
        for (int k = 0; k < 12; ++k) {
            b_fwd[k] = (k <= 10) ? f_in_free_gens(-(k + 2))
                                 : a12 * f_in_free_gens(-1);
            b_inv[k] = (k >= 1) ? inverse(f_in_free_gens(-(k + 1)))
                                : inverse(f_in_free_gens(-1)) * inverse(a12);
        }
    }
};

const SchreierTable& schreier_table() {
    static const SchreierTable t;
    return t;
}

// Guard against pathological inputs whose reduced factorization is too
// large to materialize (letter count grows linearly in the entries).
constexpr unsigned long kMaxFactorLetters = 1u << 24;

}  // namespace

FreeWord factor_derived(const Mat2Z& m) {
    if (!derived_member(m))
        throw std::domain_error(
            "factor_derived: matrix is not in the derived subgroup "
            "(abelianization " +
            std::to_string(abelianize(m).value) + " != 0 mod 12)");

    const SchreierTable& tab = schreier_table();
    const GenWord w = word_of_matrix(m);

    FreeWord out;
    unsigned long budget = 0;
    long k = 0;  // coset: exponent sum of the processed prefix, mod 12
    for (const auto& l : w.letters) {
        if (l.gen == 0) {
            // A^exp: emit A^+-12 once per wraparound, in one block
            mpz_class crossings;
            if (l.exp > 0)
                crossings = (k + l.exp) / 12;
            else {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), mpz_class(k + l.exp).get_mpz_t(),
                           mpz_class(12).get_mpz_t());
                crossings = -q;
            }
            const FreeWord& block = (l.exp > 0) ? tab.a12 : inverse(tab.a12);
            for (mpz_class i = 0; i < crossings; ++i) {
                out *= block;
                if ((budget += 8) > kMaxFactorLetters)
                    throw std::length_error("factor_derived: word too large");
            }
            mpz_class kk = (k + l.exp) % 12;
            if (kk < 0) kk += 12;
            k = kk.get_si();
        } else {
            // B^exp: one table entry per unit step
            const int step = (l.exp > 0) ? 1 : -1;
            for (mpz_class i = 0; i < abs(l.exp); ++i) {
                const FreeWord& gamma = (step > 0) ? tab.b_fwd[k] : tab.b_inv[k];
                out *= gamma;
                if ((budget += static_cast<unsigned long>(gamma.size())) > kMaxFactorLetters)
                    throw std::length_error("factor_derived: word too large");
                k = (k + step + 12) % 12;
            }
        }
    }
    // derived_member guarantees the walk closes up at the trivial coset
    if (k != 0) throw std::logic_error("factor_derived: coset walk did not close");
    return out;
}

}  // namespace mtor
