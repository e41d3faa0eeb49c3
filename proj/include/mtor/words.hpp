#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace mtor {

// Run-length word over a two-letter alphabet with integer exponents.
// The normal form keeps adjacent letters on distinct generators and all
// exponents nonzero; the empty word is the identity.  The same machinery
// backs words in {A,B} (SL(2,Z) generators), {a,b} (braid generators)
// and {g1,g2} (free generators of the derived subgroup); the alphabet
// tag keeps them from mixing.
enum class Alphabet { gen_AB, braid_ab, free_g };

template <Alphabet Tag>
struct Word {
    // generator index 0 or 1, nonzero exponent
    struct Letter {
        int gen;
        mpz_class exp;
        friend bool operator==(const Letter& x, const Letter& y) {
            return x.gen == y.gen && x.exp == y.exp;
        }
    };

    std::vector<Letter> letters;

    Word() = default;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    // Letter count with multiplicity (sum of |exponents|); the length of
    // the word written out in single letters.
    mpz_class expanded_length() const {
        mpz_class n = 0;
        for (const Letter& l : letters) n += abs(l.exp);
        return n;
    }

    mpz_class exponent_sum() const {
        mpz_class n = 0;
        for (const Letter& l : letters) n += l.exp;
        return n;
    }

    // Append one run, merging with the tail and dropping cancellations.
    // Keeping this the only mutator maintains the normal form.
    void push(int gen, mpz_class exp) {
        if (exp == 0) return;
        if (!letters.empty() && letters.back().gen == gen) {
            letters.back().exp += exp;
            if (letters.back().exp == 0) letters.pop_back();
            return;
        }
        letters.push_back(Letter{gen, std::move(exp)});
    }

    Word& operator*=(const Word& w) {
        letters.reserve(letters.size() + w.letters.size());
        for (const Letter& l : w.letters) push(l.gen, l.exp);
        return *this;
    }

    friend Word operator*(Word u, const Word& v) {
        u *= v;
        return u;
    }

    friend Word inverse(const Word& w) {
        Word r;
        r.letters.reserve(w.letters.size());
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            r.letters.push_back(Letter{it->gen, -it->exp});
        return r;
    }

    friend bool operator==(const Word& u, const Word& v) { return u.letters == v.letters; }
    friend bool operator!=(const Word& u, const Word& v) { return !(u == v); }
};

using GenWord = Word<Alphabet::gen_AB>;    // letters A, B
using BraidWord = Word<Alphabet::braid_ab>;  // letters a, b
using FreeWord = Word<Alphabet::free_g>;   // letters g1, g2

}  // namespace mtor
