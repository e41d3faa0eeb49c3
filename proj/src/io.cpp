#include "mtor/io.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace mtor {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

bool parse_int(const std::string& s, mpz_class& out) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    out = mpz_class(s[0] == '+' ? s.substr(1) : s);
    return true;
}

struct GenNames {
    std::array<const char*, 2> name;
};

template <Alphabet Tag>
std::string format_word(const Word<Tag>& w, const GenNames& names) {
    std::string out;
    for (const auto& l : w.letters) {
        if (!out.empty()) out += ' ';
        out += names.name[l.gen];
        if (l.exp != 1) out += "^" + l.exp.get_str();
    }
    return out;
}

template <Alphabet Tag>
Word<Tag> parse_word(const std::string& text, const GenNames& names) {
    Word<Tag> w;
    const auto toks = tokenize(text);
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        std::size_t caret = t.find('^');
        std::string head = t.substr(0, caret);
        int gen;
        if (head == names.name[0])
            gen = 0;
        else if (head == names.name[1])
            gen = 1;
        else
            throw parse_error("unknown generator '" + head + "' at token " + std::to_string(i),
                              i, t);
        mpz_class exp = 1;
        if (caret != std::string::npos) {
            if (!parse_int(t.substr(caret + 1), exp))
                throw parse_error("bad exponent in '" + t + "' at token " + std::to_string(i), i,
                                  t);
        }
        w.push(gen, exp);
    }
    return w;
}

const GenNames kGenAB{{"A", "B"}};
const GenNames kBraidAB{{"a", "b"}};
const GenNames kFreeG{{"g1", "g2"}};

using nlohmann::json;

json json_int(const mpz_class& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

mpz_class int_of_json(const json& j, const char* what) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class v;
        if (parse_int(j.get<std::string>(), v)) return v;
    }
    throw parse_error(std::string("expected integer for ") + what, 0, j.dump());
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON", 0, text);
    return j;
}

template <Alphabet Tag>
std::string word_to_json(const Word<Tag>& w, const GenNames& names) {
    json arr = json::array();
    for (const auto& l : w.letters) arr.push_back({names.name[l.gen], json_int(l.exp)});
    return json{{"word", arr}}.dump();
}

template <Alphabet Tag>
Word<Tag> word_from_json(const std::string& text, const GenNames& names) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("word") || !j["word"].is_array())
        throw parse_error("expected {\"word\": [[gen, exp], ...]}", 0, text);
    Word<Tag> w;
    std::size_t i = 0;
    for (const auto& item : j["word"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string())
            throw parse_error("bad word letter at index " + std::to_string(i), i, item.dump());
        std::string g = item[0].get<std::string>();
        int gen;
        if (g == names.name[0])
            gen = 0;
        else if (g == names.name[1])
            gen = 1;
        else
            throw parse_error("unknown generator '" + g + "' at index " + std::to_string(i), i,
                              g);
        w.push(gen, int_of_json(item[1], "exponent"));
        ++i;
    }
    return w;
}

}  // namespace

std::string format_matrix(const Mat2Z& m) { return m.str(); }

Mat2Z parse_matrix(const std::string& text) {
    const auto toks = tokenize(text);
    if (toks.size() != 4)
        throw parse_error("matrix needs 4 integers, got " + std::to_string(toks.size()),
                          toks.size(), text);
    mpz_class v[4];
    for (std::size_t i = 0; i < 4; ++i)
        if (!parse_int(toks[i], v[i]))
            throw parse_error("bad integer '" + toks[i] + "' at token " + std::to_string(i), i,
                              toks[i]);
    return Mat2Z(v[0], v[1], v[2], v[3]);
}

std::string format_gen_word(const GenWord& w) { return format_word(w, kGenAB); }
GenWord parse_gen_word(const std::string& text) { return parse_word<Alphabet::gen_AB>(text, kGenAB); }

std::string format_braid_word(const BraidWord& w) { return format_word(w, kBraidAB); }
BraidWord parse_braid_word(const std::string& text) {
    return parse_word<Alphabet::braid_ab>(text, kBraidAB);
}

std::string format_free_word(const FreeWord& w) { return format_word(w, kFreeG); }
FreeWord parse_free_word(const std::string& text) {
    return parse_word<Alphabet::free_g>(text, kFreeG);
}

std::string format_ab_class(const AbClass& c) {
    return std::to_string(c.value) + " (mod " + std::to_string(c.modulus()) + ")";
}

AbClass parse_ab_class(const std::string& text) {
    auto toks = tokenize(text);
    if (toks.size() != 3 || toks[1] != "(mod" || toks[2].empty() || toks[2].back() != ')')
        throw parse_error("expected 'k (mod m)'", 0, text);
    mpz_class v, m;
    if (!parse_int(toks[0], v) || !parse_int(toks[2].substr(0, toks[2].size() - 1), m))
        throw parse_error("bad numbers in '" + text + "'", 0, text);
    if (m != 12 && m != 6) throw parse_error("modulus must be 12 or 6", 2, toks[2]);
    AbClass c;
    c.group = (m == 12) ? AbClass::Group::sl : AbClass::Group::psl;
    mpz_class r = v % m.get_si();
    if (r < 0) r += m;
    c.value = static_cast<int>(r.get_si());
    return c;
}

std::string json_of_matrix(const Mat2Z& m) {
    return json{{"m", {json_int(m.a), json_int(m.b), json_int(m.c), json_int(m.d)}}}.dump();
}

Mat2Z matrix_of_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("m") || !j["m"].is_array() || j["m"].size() != 4)
        throw parse_error("expected {\"m\": [a,b,c,d]}", 0, text);
    return Mat2Z(int_of_json(j["m"][0], "a"), int_of_json(j["m"][1], "b"),
                 int_of_json(j["m"][2], "c"), int_of_json(j["m"][3], "d"));
}

std::string json_of_gen_word(const GenWord& w) { return word_to_json(w, kGenAB); }
GenWord gen_word_of_json(const std::string& text) {
    return word_from_json<Alphabet::gen_AB>(text, kGenAB);
}

std::string json_of_braid_word(const BraidWord& w) { return word_to_json(w, kBraidAB); }
BraidWord braid_word_of_json(const std::string& text) {
    return word_from_json<Alphabet::braid_ab>(text, kBraidAB);
}

std::string json_of_free_word(const FreeWord& w) { return word_to_json(w, kFreeG); }
FreeWord free_word_of_json(const std::string& text) {
    return word_from_json<Alphabet::free_g>(text, kFreeG);
}

}  // namespace mtor
