#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtor/braid.hpp"
#include "mtor/halfplane.hpp"
#include "mtor/io.hpp"
#include "mtor/sl2z.hpp"
#include "mtor/weierstrass.hpp"

namespace {

using namespace mtor;
using nlohmann::json;

mpz_class parse_integer_arg(const std::string& s) {
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw parse_error("bad integer '" + s + "'", 0, s);
    }
}

double parse_real_arg(const std::string& s) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error("bad number '" + s + "'", 0, s);
    }
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// Random words for the seeded presentation checks: up to max_letters
// single letters with exponent +-1, pushed through the run-length
// normal form.
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

// u r u^-1 spliced into w at a random letter boundary, r the Artin
// relator aba(bab)^-1.
BraidWord insert_relator(std::mt19937& rng, const BraidWord& w) {
    BraidWord relator;
    for (int g : {0, 1, 0}) relator.push(g, 1);
    for (int g : {1, 0, 1}) relator.push(g, -1);
    BraidWord conj = random_word<Alphabet::braid_ab>(rng, 4);
    BraidWord inserted = conj * relator * inverse(conj);

    // expand w to single letters, split anywhere
    std::vector<std::pair<int, int>> flat;
    for (const auto& l : w.letters) {
        int step = l.exp > 0 ? 1 : -1;
        for (mpz_class i = 0; i < abs(l.exp); ++i) flat.emplace_back(l.gen, step);
    }
    std::uniform_int_distribution<std::size_t> cut(0, flat.size());
    std::size_t at = cut(rng);
    BraidWord out;
    for (std::size_t i = 0; i < at; ++i) out.push(flat[i].first, flat[i].second);
    out *= inserted;
    for (std::size_t i = at; i < flat.size(); ++i) out.push(flat[i].first, flat[i].second);
    return out;
}

int run_verify_presentation(int samples, unsigned seed) {
    std::mt19937 rng(seed);
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        all_ok &= ok;
    };

    const Mat2Z aba = mat_A() * mat_B() * mat_A();
    const Mat2Z bab = mat_B() * mat_A() * mat_B();
    const Mat2Z x2 = mat_X() * mat_X();
    report("ABA = X = BAB", aba == mat_X() && bab == mat_X());
    report("X^2 = -I, X^4 = I", x2 == mat_minus_identity() && x2 * x2 == mat_identity());
    report("(ABABAB)^2 = I and ABABAB = I in PSL",
           x2 * x2 == mat_identity() &&
               ProjMat(eval_word(parse_gen_word("A B A B A B"))) == ProjMat(mat_identity()));

    bool relator_ok = true;
    for (int i = 0; i < samples; ++i) {
        BraidWord u = random_word<Alphabet::braid_ab>(rng, 20);
        relator_ok &= braid_equal(u, insert_relator(rng, u));
    }
    report("braid_equal under relator insertion (" + std::to_string(samples) + " samples)",
           relator_ok);

    bool surj_ok = true;
    for (int i = 0; i < samples; ++i) {
        Mat2Z m = eval_word(random_word<Alphabet::gen_AB>(rng, 30));
        surj_ok &= sigma(braid_from_matrix(m)) == m;
    }
    report("sigma surjectivity round trip (" + std::to_string(samples) + " samples)", surj_ok);

    bool ab_ok = abelianize(mat_A()).value == 1 && abelianize(mat_B()).value == 1;
    for (int i = 0; i < samples; ++i) {
        Mat2Z m = eval_word(random_word<Alphabet::gen_AB>(rng, 15));
        Mat2Z n = eval_word(random_word<Alphabet::gen_AB>(rng, 15));
        ab_ok &= abelianize(m * n) == abelianize(m) + abelianize(n);
    }
    report("abelianization is a homomorphism mod 12 (" + std::to_string(samples) + " samples)",
           ab_ok);

    bool f_ok = true;
    for (long n = -20; n <= 20; ++n) {
        f_ok &= f_matrix(n + 1) * f_matrix(n - 1) == f_matrix(n);
        f_ok &= eval_free(f_in_free_gens(n)) == f_matrix(n);
    }
    report("f recurrence and free-generator expansion, n in [-20,20]", f_ok);

    std::cout << (all_ok ? "all checks passed\n" : "checks FAILED\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mtor: exact arithmetic in SL(2,Z), three-strand braid words, and the "
        "modular torus"};
    app.require_subcommand(1);
    bool use_json = false;
    app.add_flag("--json", use_json, "read and write the JSON forms");

    std::string arg1, arg2, out_path, range_str = "0..5";
    int depth = 0, samples = 1000, radius = 60;
    double tol = 1e-9, wp_tol = 1e-3;
    bool psl = false;
    long long seed_flag = -1;

    std::string result;  // printed on success
    int exit_code = 0;

    auto* c_mow = app.add_subcommand("matrix-of-word", "evaluate a word in A, B to a matrix");
    c_mow->add_option("word", arg1, "word, e.g. \"A B A\"")->required();
    c_mow->callback([&] {
        GenWord w = use_json ? gen_word_of_json(arg1) : parse_gen_word(arg1);
        Mat2Z m = eval_word(w);
        result = use_json ? json_of_matrix(m) : format_matrix(m);
    });

    auto* c_wom = app.add_subcommand("word-of-matrix", "write a matrix as a word in A, B");
    c_wom->add_option("matrix", arg1, "matrix \"a b c d\"")->required();
    c_wom->callback([&] {
        Mat2Z m = use_json ? matrix_of_json(arg1) : parse_matrix(arg1);
        GenWord w = word_of_matrix(m);
        result = use_json ? json_of_gen_word(w) : format_gen_word(w);
    });

    auto* c_beval = app.add_subcommand("braid-eval", "sigma-image of a braid word");
    c_beval->add_option("word", arg1, "braid word, e.g. \"a b^-1 a^2\"")->required();
    c_beval->callback([&] {
        BraidWord w = use_json ? braid_word_of_json(arg1) : parse_braid_word(arg1);
        Mat2Z m = sigma(w);
        result = use_json ? json_of_matrix(m) : format_matrix(m);
    });

    auto* c_beq = app.add_subcommand("braid-equal", "decide equality of two braid words in B3");
    c_beq->add_option("u", arg1, "first word")->required();
    c_beq->add_option("v", arg2, "second word")->required();
    c_beq->callback([&] {
        BraidWord u = use_json ? braid_word_of_json(arg1) : parse_braid_word(arg1);
        BraidWord v = use_json ? braid_word_of_json(arg2) : parse_braid_word(arg2);
        bool eq = braid_equal(u, v);
        result = use_json ? json{{"equal", eq}}.dump() : bool_str(eq);
    });

    auto* c_ab = app.add_subcommand("abelianize", "abelianized class of a matrix");
    c_ab->add_option("matrix", arg1)->required();
    c_ab->add_flag("--psl", psl, "class mod 6 instead of mod 12");
    c_ab->callback([&] {
        Mat2Z m = use_json ? matrix_of_json(arg1) : parse_matrix(arg1);
        AbClass c = abelianize(m);
        if (psl) c = c.to_psl();
        result = use_json ? json{{"value", c.value}, {"modulus", c.modulus()}}.dump()
                          : format_ab_class(c);
    });

    auto* c_fmat = app.add_subcommand("f-matrix", "side-pairing matrix f_n");
    c_fmat->add_option("n", arg1)->required();
    c_fmat->callback([&] {
        Mat2Z m = f_matrix(parse_integer_arg(arg1));
        result = use_json ? json_of_matrix(m) : format_matrix(m);
    });

    auto* c_ffree = app.add_subcommand("f-free", "f_n as a word in g1 = f_-2, g2 = f_-1");
    c_ffree->add_option("n", arg1)->required();
    c_ffree->callback([&] {
        mpz_class n = parse_integer_arg(arg1);
        if (!n.fits_slong_p()) throw std::domain_error("f-free: n out of range");
        FreeWord w = f_in_free_gens(n.get_si());
        result = use_json ? json_of_free_word(w) : format_free_word(w);
    });

    auto* c_dmem = app.add_subcommand("derived-member", "membership in the derived subgroup");
    c_dmem->add_option("matrix", arg1)->required();
    c_dmem->callback([&] {
        Mat2Z m = use_json ? matrix_of_json(arg1) : parse_matrix(arg1);
        bool mem = derived_member(m);
        result = use_json ? json{{"member", mem}}.dump() : bool_str(mem);
    });

    auto* c_dfac = app.add_subcommand("derived-factor",
                                      "factor a derived-subgroup matrix over g1, g2");
    c_dfac->add_option("matrix", arg1)->required();
    c_dfac->callback([&] {
        Mat2Z m = use_json ? matrix_of_json(arg1) : parse_matrix(arg1);
        FreeWord w = factor_derived(m);
        result = use_json ? json_of_free_word(w) : format_free_word(w);
    });

    auto* c_red = app.add_subcommand("reduce-point",
                                     "reduce a half-plane point into the standard domain");
    c_red->add_option("re", arg1)->required();
    c_red->add_option("im", arg2)->required();
    c_red->add_option("--tol", tol, "tolerance")->capture_default_str();
    c_red->callback([&] {
        HPoint z(parse_real_arg(arg1), parse_real_arg(arg2));
        auto [zr, w] = reduce_point(z, tol);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g %.12g", zr.re, zr.im);
        if (use_json) {
            json jw = json::parse(json_of_gen_word(w));
            result = json{{"z", {zr.re, zr.im}}, {"word", jw["word"]}}.dump();
        } else {
            result = std::string(buf) + "\n" + format_gen_word(w);
        }
    });

    auto* c_ver = app.add_subcommand("verify-presentation",
                                     "seeded randomized relation and isomorphism checks");
    c_ver->add_option("--samples", samples, "sample count")->capture_default_str();
    c_ver->add_option("--seed", seed_flag, "RNG seed (default 0 or MODULAR_BRAID_SEED)");
    c_ver->callback([&] {
        unsigned seed = 0;
        if (const char* env = std::getenv("MODULAR_BRAID_SEED"))
            seed = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        if (seed_flag >= 0) seed = static_cast<unsigned>(seed_flag);
        exit_code = run_verify_presentation(samples, seed);
    });

    auto* c_svg = app.add_subcommand("hexagon-svg", "draw the tiles B_n as an SVG file");
    c_svg->add_option("--range", range_str, "tile range a..b")->capture_default_str();
    c_svg->add_option("--depth", depth, "also draw images under words in g1, g2 up to this length")
        ->capture_default_str();
    c_svg->add_option("out", out_path, "output file")->required();
    c_svg->callback([&] {
        auto dots = range_str.find("..");
        if (dots == std::string::npos)
            throw parse_error("range must look like 0..5", 0, range_str);
        mpz_class lo = parse_integer_arg(range_str.substr(0, dots));
        mpz_class hi = parse_integer_arg(range_str.substr(dots + 2));
        if (!lo.fits_slong_p() || !hi.fits_slong_p())
            throw std::domain_error("hexagon-svg: range out of range");
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        emit_tiling_svg(lo.get_si(), hi.get_si(), depth, out);
        out.close();
        if (!out) throw std::runtime_error("write failed: " + out_path);
        result = "wrote " + out_path;
    });

    auto* c_wpe = app.add_subcommand("wp-eval", "Weierstrass p at a torus point");
    c_wpe->add_option("re", arg1)->required();
    c_wpe->add_option("im", arg2)->required();
    c_wpe->add_option("--radius", radius, "lattice truncation radius")->capture_default_str();
    c_wpe->callback([&] {
        TorusPoint z(parse_real_arg(arg1), parse_real_arg(arg2));
        SpherePoint v = wp(z, radius);
        if (use_json) {
            result = v.infinite
                         ? json{{"wp", "inf"}}.dump()
                         : json{{"wp", {v.value.real(), v.value.imag()}}}.dump();
        } else if (v.infinite) {
            result = "inf";
        } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g %.12g", v.value.real(), v.value.imag());
            result = buf;
        }
    });

    auto* c_wpr = app.add_subcommand("wp-report", "half-value, axis and half-turn checks");
    c_wpr->add_option("--radius", radius, "lattice truncation radius")->capture_default_str();
    c_wpr->add_option("--tol", wp_tol, "tolerance")->capture_default_str();
    c_wpr->callback([&] {
        WpReport r = wp_full_report(radius, wp_tol);
        json j{{"e_m", r.half_values.e_m},
               {"e_n", r.half_values.e_n},
               {"e_p", r.half_values.e_p_abs},
               {"max_axis_error", r.axis_images.max_axis_error},
               {"half_turn_ok", {{"A", r.half_turns.a_ok}, {"B", r.half_turns.b_ok}}}};
        result = j.dump();
        if (!r.ok) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const mtor::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (!result.empty()) std::cout << result << "\n";
    return exit_code;
}
