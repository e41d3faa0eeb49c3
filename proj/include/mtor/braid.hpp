#pragma once

#include <optional>

#include "mtor/mat2z.hpp"
#include "mtor/words.hpp"

namespace mtor {

// The homomorphism sigma : B3 -> SL(2,Z), a |-> A, b |-> B.
Mat2Z sigma(const BraidWord& w);

// Exponent sum (abelianization of B3).
mpz_class exp_sum(const BraidWord& w);

// Word problem for B3.  u = v in B3 iff sigma(u) = sigma(v) and
// exp_sum(u) = exp_sum(v): ker sigma is the central subgroup <x^4>,
// x = aba, whose generator has exponent sum 12, so the pair separates it.
bool braid_equal(const BraidWord& u, const BraidWord& v);

// Returns k if w = (ababab)^k in B3 (ababab = x^2 generates the center),
// nothing otherwise.
std::optional<mpz_class> is_central_power(const BraidWord& w);

// A braid word with sigma-image exactly m: transliterate word_of_matrix
// (A -> a, B -> b) and, were the image off by sign, append x^2.
BraidWord braid_from_matrix(const Mat2Z& m);

// (ababab)^k, handy for tests and the centrality checks.
BraidWord central_word(const mpz_class& k);

}  // namespace mtor
