#pragma once

#include <random>

#include "qgauss/moebius.hpp"
#include "qgauss/picard.hpp"

// Deterministic generators for property-style tests.
namespace qgauss::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline GaussRat random_gauss(Rng& rng) { return {random_rational(rng), random_rational(rng)}; }

inline SPoly random_spoly(Rng& rng, int max_terms = 4, long exp_range = 4) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<long> exp(-exp_range, exp_range);
    SPoly p;
    int count = terms(rng);
    for (int k = 0; k < count; ++k) p.add_to_coeff(exp(rng), random_gauss(rng));
    return p;
}

inline SPoly random_nonzero_spoly(Rng& rng, int max_terms = 4, long exp_range = 4) {
    for (;;) {
        SPoly p = random_spoly(rng, max_terms, exp_range);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc random_rat_func(Rng& rng) {
    return RatFunc(random_spoly(rng), random_nonzero_spoly(rng));
}

inline RatFunc random_nonzero_rat_func(Rng& rng) {
    for (;;) {
        RatFunc f = random_rat_func(rng);
        if (!f.is_zero()) return f;
    }
}

inline MoebiusOp random_moebius(Rng& rng) {
    std::uniform_int_distribution<int> flip_dist(0, 1);
    for (;;) {
        SPoly a = random_spoly(rng, 2, 2), b = random_spoly(rng, 2, 2);
        SPoly c = random_spoly(rng, 2, 2), d = random_spoly(rng, 2, 2);
        int flip = flip_dist(rng) ? +1 : -1;
        try {
            return MoebiusOp(RatFunc(a), RatFunc(b), RatFunc(c), RatFunc(d), flip);
        } catch (const std::invalid_argument&) {
            // singular draw, retry
        }
    }
}

inline GenWord random_word(Rng& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> name_dist(0, 3);
    std::uniform_int_distribution<int> exp_dist(0, 3);
    const char names[] = {'T', 'S', 'U', 'L'};
    const long exps[] = {-2, -1, 1, 2};
    std::vector<GenWord::Letter> letters;
    int len = len_dist(rng);
    char prev = 0;
    for (int k = 0; k < len; ++k) {
        char name = names[name_dist(rng)];
        while (name == prev) name = names[name_dist(rng)];
        prev = name;
        letters.push_back({name, exps[exp_dist(rng)]});
    }
    return GenWord(std::move(letters));
}

}  // namespace qgauss::testing
