#pragma once

#include <random>

#include "mtor/mat2z.hpp"
#include "mtor/words.hpp"

namespace mtor::testutil {

// Random word of up to max_letters single letters with exponent +-1;
// run-length merging can shorten it.
template <Alphabet Tag>
Word<Tag> random_word(std::mt19937& rng, int max_letters) {
    std::uniform_int_distribution<int> len(0, max_letters);
    std::uniform_int_distribution<int> pick(0, 3);
    Word<Tag> w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        int p = pick(rng);
        w.push(p & 1, (p & 2) ? 1 : -1);
    }
    return w;
}

// Random freely-reduced word of exactly `letters` single letters.
template <Alphabet Tag>
Word<Tag> random_reduced_word(std::mt19937& rng, int letters) {
    std::uniform_int_distribution<int> pick(0, 3);
    Word<Tag> w;
    while (w.expanded_length() < letters) {
        int p = pick(rng);
        auto before = w.expanded_length();
        Word<Tag> step;
        step.push(p & 1, (p & 2) ? 1 : -1);
        if ((w * step).expanded_length() > before) w *= step;
    }
    return w;
}

}  // namespace mtor::testutil
