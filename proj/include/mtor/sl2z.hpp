#pragma once

#include "mtor/mat2z.hpp"
#include "mtor/words.hpp"

namespace mtor {

// Abelianized image of an SL(2,Z) or PSL(2,Z) element.  The two
// abelianizations are cyclic of order 12 and 6; both generators A and B
// map to 1.
struct AbClass {
    enum class Group { sl, psl };

    int value = 0;  // 0 <= value < modulus()
    Group group = Group::sl;

    int modulus() const { return group == Group::sl ? 12 : 6; }

    AbClass to_psl() const { return AbClass{value % 6, Group::psl}; }

    friend AbClass operator+(const AbClass& x, const AbClass& y) {
        if (x.group != y.group)
            throw std::domain_error("AbClass: mixed SL/PSL classes");
        return AbClass{(x.value + y.value) % x.modulus(), x.group};
    }
    friend bool operator==(const AbClass& x, const AbClass& y) {
        return x.group == y.group && x.value == y.value;
    }
    friend bool operator!=(const AbClass& x, const AbClass& y) { return !(x == y); }
};

// Product of the generator powers of w, left to right.
Mat2Z eval_word(const GenWord& w);

// Some word in A, B evaluating to m exactly in SL(2,Z) (not merely up to
// sign).  Euclidean reduction on the first column; see sl2z.cpp.  The
// output is round-trip correct but not canonical.
GenWord word_of_matrix(const Mat2Z& m);

// Exponent sum of any word for m, mod 12.  Well defined because both
// relators have exponent sum 0 mod 12.
AbClass abelianize(const Mat2Z& m);
AbClass abelianize(const ProjMat& m);

// The side-pairing family f_n = A^-(n+3) X A^n.
Mat2Z f_matrix(const mpz_class& n);

// f_n written in the free generators g1 = f_-2, g2 = f_-1, via the
// recurrence f_{n+1} = f_n f_{n-1}^-1 upward and f_{n-1} = f_{n+1}^-1 f_n
// downward from the two base cases.  Memoized; iterative.
FreeWord f_in_free_gens(long n);

// Membership in the derived subgroup SL(2,Z)' = ker(abelianize).
bool derived_member(const Mat2Z& m);

// Evaluate a word over g1, g2 back to a matrix.
Mat2Z eval_free(const FreeWord& w);

// The unique reduced word over g1, g2 evaluating to m.  Throws
// std::domain_error unless derived_member(m).
FreeWord factor_derived(const Mat2Z& m);

// Generator matrices g1 = f_-2 = [[1,1],[1,2]], g2 = f_-1 = [[2,1],[1,1]].
const Mat2Z& free_gen_matrix(int gen);

}  // namespace mtor
