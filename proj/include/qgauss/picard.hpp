#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "qgauss/moebius.hpp"

namespace qgauss {

/**
 * GenWord: a word in the generators T, S, U, L with integer exponents.
 * Normalized form has no zero exponents and no adjacent equal names;
 * the leftmost letter is the outermost (last-applied) operator,
 * matching matrix product order.
 */
class GenWord {
public:
    struct Letter {
        char name;  // one of 'T', 'S', 'U', 'L'
        long exp;
    };

    GenWord() = default;
    explicit GenWord(std::vector<Letter> letters) : letters_(std::move(letters)) { normalize(); }

    /// Parses words like "T^2 U^-1 S" (whitespace-separated letters).
    static GenWord parse(const std::string& text) {
        std::istringstream in(text);
        std::vector<Letter> letters;
        std::string token;
        while (in >> token) {
            auto caret = token.find('^');
            std::string name = token.substr(0, caret);
            long exp = 1;
            if (caret != std::string::npos) {
                try {
                    exp = std::stol(token.substr(caret + 1));
                } catch (const std::exception&) {
                    throw std::invalid_argument("GenWord: bad exponent in '" + token + "'");
                }
            }
            if (name.size() != 1 || std::string("TSUL").find(name[0]) == std::string::npos)
                throw std::invalid_argument("GenWord: unknown generator '" + name + "'");
            letters.push_back({name[0], exp});
        }
        return GenWord(std::move(letters));
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    std::string to_string() const {
        std::string out;
        for (const auto& [name, exp] : letters_) {
            if (!out.empty()) out += ' ';
            out += name;
            if (exp != 1) out += "^" + std::to_string(exp);
        }
        return out.empty() ? "(empty)" : out;
    }

    GenWord inverse() const {
        std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
        for (auto& l : rev) l.exp = -l.exp;
        return GenWord(std::move(rev));
    }

    friend GenWord operator*(const GenWord& a, const GenWord& b) {
        std::vector<Letter> cat = a.letters_;
        cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
        return GenWord(std::move(cat));
    }

private:
    void normalize() {
        std::vector<Letter> out;
        for (const auto& l : letters_) {
            if (l.exp == 0) continue;
            if (!out.empty() && out.back().name == l.name) {
                out.back().exp += l.exp;
                if (out.back().exp == 0) out.pop_back();
            } else {
                out.push_back(l);
            }
        }
        letters_ = std::move(out);
    }

    std::vector<Letter> letters_;
};

/// Evaluates a word as an operator, deformed or classical (s = 1).
inline MoebiusOp word_eval(const GenWord& w, bool deformed) {
    auto gen = [deformed](char name) {
        Generator g = generator_from_string(std::string(1, name));
        return deformed ? generator(g) : classical_generator(g);
    };
    MoebiusOp acc = MoebiusOp::identity();
    for (const auto& [name, exp] : w.letters()) acc = acc * gen(name).pow(exp);
    return acc;
}

// ---------------------------------------------------------------------------
// The relation suite
// ---------------------------------------------------------------------------

struct RelationResult {
    std::string relation;   // the word checked against the identity
    bool deformed;
    bool holds;             // whether the word evaluates to the identity
    bool expected_to_hold;  // classical: always; deformed: all but (USL)^3
};

/**
 * Checks the defining relations of the Picard group: commutation of the
 * two translations, the five involutions, and the two order-3 words.
 * (USL)^3 holds classically but has no deformed analog, so its deformed
 * expectation is failure.
 */
inline std::vector<RelationResult> relation_suite(bool deformed) {
    const std::vector<std::string> relations = {
        "T U T^-1 U^-1", "S^2", "L^2", "T L T L", "S L S L", "U L U L",
        "T S T S T S", "U S L U S L U S L",
    };
    std::vector<RelationResult> out;
    out.reserve(relations.size());
    for (const auto& rel : relations) {
        bool holds = word_eval(GenWord::parse(rel), deformed).is_identity();
        bool expected = !(deformed && rel == "U S L U S L U S L");
        out.push_back({rel, deformed, holds, expected});
    }
    return out;
}

// ---------------------------------------------------------------------------
// The normal subgroup of unit-deviation operators
// ---------------------------------------------------------------------------

/**
 * Membership in the normal subgroup N of the extension: true iff the
 * operator keeps its argument at q (flip +1) and, after clearing entry
 * denominators and dividing out the common polynomial content, the
 * matrix specializes at s = 1 to a nonzero scalar multiple of the
 * identity — equivalently, some scalar normalization has the shape
 * Id + (q-1)·A with A regular at q = 1.
 */
inline bool n_membership(const MoebiusOp& A) {
    if (A.flip() != +1) return false;
    // common denominator
    SPoly lcm(1);
    for (const SPoly* d : {&A.a().den(), &A.b().den(), &A.c().den(), &A.d().den()}) {
        SPoly g = detail::poly_gcd(lcm, *d);
        lcm = detail::poly_div_exact(lcm * (*d), g);
    }
    std::array<SPoly, 4> entries;
    const std::array<const RatFunc*, 4> rf{&A.a(), &A.b(), &A.c(), &A.d()};
    for (int k = 0; k < 4; ++k)
        entries[k] = rf[k]->num() * detail::poly_div_exact(lcm, rf[k]->den());
    // divide out the common content (including the common power of s)
    long shift = 0;
    bool first = true;
    SPoly content;
    for (const SPoly& e : entries) {
        if (e.is_zero()) continue;
        shift = first ? e.lowest_exp() : std::min(shift, e.lowest_exp());
        SPoly ordinary = e.shifted(-e.lowest_exp());
        content = first ? ordinary : detail::poly_gcd(content, ordinary);
        first = false;
    }
    if (first) return false;  // zero matrix cannot occur for an operator
    for (SPoly& e : entries) {
        if (e.is_zero()) continue;
        long own = e.lowest_exp();
        e = detail::poly_div_exact(e.shifted(-own), content).shifted(own - shift);
    }
    GaussRat a1 = entries[0].eval_at_one();
    GaussRat b1 = entries[1].eval_at_one();
    GaussRat c1 = entries[2].eval_at_one();
    GaussRat d1 = entries[3].eval_at_one();
    return b1.is_zero() && c1.is_zero() && a1 == d1 && !a1.is_zero();
}

/**
 * The unit-deviation form of the cubed word USL: checks that the
 * deformed word and its inverse match their closed forms
 *   U_qS_qL_q   = [[-1, i·s⁻¹], [i·s, i·s⁻¹ - i·s]],
 *   (U_qS_qL_q)⁻¹ = [[i·s - i·s⁻¹, i·s⁻¹], [i·s, 1]],
 * that the cube equals Id + (q-1)·[[0, -q⁻¹], [-1, 1 - q⁻¹ + i·s⁻¹]]
 * exactly, and that cube and inverse cube lie in N.
 */
inline bool usl_cubed_check() {
    const RatFunc q = RatFunc::q();
    const RatFunc s = RatFunc::s();
    const RatFunc i = RatFunc::i();

    MoebiusOp usl = word_eval(GenWord::parse("U S L"), true);
    MoebiusOp usl_closed(-1, i / s, i * s, i / s - i * s, +1);
    if (!usl.proj_equal(usl_closed)) return false;

    MoebiusOp usl_inv_closed(i * s - i / s, i / s, i * s, 1, +1);
    if (!usl.inverse().proj_equal(usl_inv_closed)) return false;

    MoebiusOp cube = usl.pow(3);
    RatFunc dev = q - RatFunc(1);
    MoebiusOp cube_closed(RatFunc(1), dev * (-q.inv()), dev * RatFunc(-1),
                          RatFunc(1) + dev * (RatFunc(1) - q.inv() + i / s), +1);
    if (!cube.proj_equal(cube_closed)) return false;

    return n_membership(cube) && n_membership(usl.pow(-3));
}

// ---------------------------------------------------------------------------
// Random search for unexpected deformed relations
// ---------------------------------------------------------------------------

namespace detail {

/// Letters for the rewriting engine: inverses of T and U are lowercase.
inline std::string expand_word(const GenWord& w) {
    std::string out;
    for (const auto& [name, exp] : w.letters()) {
        char c = name;
        char inv = (name == 'T') ? 't' : (name == 'U') ? 'u' : name;  // S, L are involutions
        long count = exp < 0 ? -exp : exp;
        char use = exp < 0 ? inv : c;
        for (long k = 0; k < count; ++k) out += use;
    }
    return out;
}

/**
 * Tries to reduce an expanded word to the empty word using only the
 * defining deformed relations, by breadth-first search over rewriting
 * moves (cancellations, the commutations they imply, and the order-3
 * braid shrinks).  A bounded search: "false" means "not reduced within
 * the budget", not a proof of irreducibility.
 */
inline bool reduces_to_identity(const std::string& start, std::size_t state_budget = 60000) {
    struct Rule {
        const char* from;
        const char* to;
    };
    // shrinking rules (from the involutions, T·t = U·u = Id, and (TS)^3 = Id)
    static const Rule shrink[] = {
        {"Tt", ""},    {"tT", ""},    {"Uu", ""},    {"uU", ""},    {"SS", ""},  {"LL", ""},
        {"TSTST", "S"}, {"STSTS", "t"}, {"tStSt", "S"}, {"StStS", "T"},
    };
    // length-preserving moves (commutation TU = UT, SL = LS, and the
    // conjugations L·X·L = X⁻¹ for X in {T, U} folded to LX ↔ X⁻¹L)
    static const Rule swap[] = {
        {"TU", "UT"}, {"UT", "TU"}, {"Tu", "uT"}, {"uT", "Tu"},
        {"tU", "Ut"}, {"Ut", "tU"}, {"tu", "ut"}, {"ut", "tu"},
        {"SL", "LS"}, {"LS", "SL"},
        {"LT", "tL"}, {"tL", "LT"}, {"Lt", "TL"}, {"TL", "Lt"},
        {"LU", "uL"}, {"uL", "LU"}, {"Lu", "UL"}, {"UL", "Lu"},
        {"TST", "StS"}, {"StS", "TST"}, {"tSt", "STS"}, {"STS", "tSt"},
    };
    std::deque<std::string> queue{start};
    std::unordered_set<std::string> seen{start};
    const std::size_t max_len = start.size() + 2;
    while (!queue.empty() && seen.size() < state_budget) {
        std::string word = std::move(queue.front());
        queue.pop_front();
        if (word.empty()) return true;
        auto push = [&](std::string next) {
            if (next.size() > max_len) return;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        };
        for (const auto& [from, to] : shrink) {
            std::size_t flen = std::char_traits<char>::length(from);
            for (std::size_t at = 0; at + flen <= word.size(); ++at)
                if (word.compare(at, flen, from) == 0)
                    push(word.substr(0, at) + to + word.substr(at + flen));
        }
        for (const auto& [from, to] : swap) {
            std::size_t flen = std::char_traits<char>::length(from);
            for (std::size_t at = 0; at + flen <= word.size(); ++at)
                if (word.compare(at, flen, from) == 0)
                    push(word.substr(0, at) + to + word.substr(at + flen));
        }
    }
    return false;
}

}  // namespace detail

struct RelationSearchHit {
    GenWord word;
    bool reducible;  // rewrites to the empty word by the known relations
};

/**
 * Samples random reduced words, keeps those that act as the identity
 * when deformed, and reports for each whether it rewrites to the empty
 * word using only the known relations.  Deterministic for a fixed seed;
 * an irreducible hit would be a counterexample candidate to the
 * conjecture that the known relations present the whole group.
 */
inline std::vector<RelationSearchHit> random_relation_search(int max_len, int trials,
                                                             std::uint64_t seed) {
    if (max_len > 20) throw std::invalid_argument("random_relation_search: max_len above desk scale");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(2, max_len);
    std::uniform_int_distribution<int> name_dist(0, 3);
    std::uniform_int_distribution<int> exp_dist(0, 3);
    const char names[] = {'T', 'S', 'U', 'L'};
    const long exps[] = {-2, -1, 1, 2};

    std::vector<RelationSearchHit> hits;
    for (int t = 0; t < trials; ++t) {
        int len = len_dist(rng);
        std::vector<GenWord::Letter> letters;
        letters.reserve(static_cast<std::size_t>(len));
        char prev = 0;
        for (int k = 0; k < len; ++k) {
            char name = names[name_dist(rng)];
            while (name == prev) name = names[name_dist(rng)];
            prev = name;
            long exp = exps[exp_dist(rng)];
            if (name == 'S' || name == 'L') exp = 1;  // involutions: higher powers are redundant
            letters.push_back({name, exp});
        }
        GenWord w(std::move(letters));
        if (w.empty()) continue;
        if (!word_eval(w, true).is_identity()) continue;
        hits.push_back({w, detail::reduces_to_identity(detail::expand_word(w))});
    }
    return hits;
}

}  // namespace qgauss
