#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "mtor/mat2z.hpp"
#include "mtor/sl2z.hpp"
#include "mtor/words.hpp"

namespace mtor {

// Parse failure carrying the offending token and its position (0-based
// token index within the input).
struct parse_error : std::runtime_error {
    std::size_t position;
    std::string token;

    parse_error(std::string what, std::size_t pos, std::string tok)
        : std::runtime_error(std::move(what)), position(pos), token(std::move(tok)) {}
};

// Text forms.  Words are whitespace-separated tokens, each a generator
// name with an optional ^ and signed decimal exponent ("A^-3 B A^2");
// matrices are four space-separated integers "a b c d" in row-major
// order.
std::string format_matrix(const Mat2Z& m);
Mat2Z parse_matrix(const std::string& text);

std::string format_gen_word(const GenWord& w);
GenWord parse_gen_word(const std::string& text);

std::string format_braid_word(const BraidWord& w);
BraidWord parse_braid_word(const std::string& text);

std::string format_free_word(const FreeWord& w);
FreeWord parse_free_word(const std::string& text);

std::string format_ab_class(const AbClass& c);   // "3 (mod 12)"
AbClass parse_ab_class(const std::string& text);

// JSON forms: {"m":[a,b,c,d]} and {"word":[["A",-3],["B",1]]} with braid
// and free words using their own generator names.  Entries that do not
// fit a 64-bit integer are carried as decimal strings.
std::string json_of_matrix(const Mat2Z& m);
Mat2Z matrix_of_json(const std::string& text);

std::string json_of_gen_word(const GenWord& w);
GenWord gen_word_of_json(const std::string& text);

std::string json_of_braid_word(const BraidWord& w);
BraidWord braid_word_of_json(const std::string& text);

std::string json_of_free_word(const FreeWord& w);
FreeWord free_word_of_json(const std::string& text);

}  // namespace mtor
