#pragma once

// Seeded generators of small random automata for differential testing.

#include <cstddef>
#include <random>

#include "dualmin/alternating.hpp"
#include "dualmin/automaton.hpp"
#include "dualmin/dkm.hpp"
#include "dualmin/linalg.hpp"
#include "dualmin/weighted.hpp"

namespace dualmin {

using Rng = std::mt19937_64;

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi);

Alphabet letters(std::size_t count);

/// 1..max_n states, 1..max_sigma letters, 1..max_outputs output values.
MooreAutomaton random_moore(Rng& rng, std::size_t max_n, std::size_t max_sigma, std::size_t max_outputs);

MooreAutomaton random_dfa(Rng& rng, std::size_t max_n, std::size_t max_sigma);

AlternatingAutomaton random_afa(Rng& rng, std::size_t max_n, std::size_t max_sigma);

Dkm random_dkm(Rng& rng, std::size_t max_n, std::size_t max_obs, std::size_t max_sigma);

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);

Integer random_weight(IntegerSemiring, Rng& rng, long bound);
/// Values p/q in [-bound, bound] with q in {1, 2}.
Rational random_weight(RationalSemiring, Rng& rng, long bound);

/// Dimension in [1, max_n], entries in [-bound, bound].
template <Semiring S>
WeightedAutomaton<S> random_weighted(Rng& rng, std::size_t max_n, std::size_t max_sigma, long bound) {
    WeightedAutomaton<S> w;
    w.n = uniform_size(rng, 1, max_n);
    w.alphabet = letters(uniform_size(rng, 1, max_sigma));
    for (Symbol a = 0; a < w.alphabet.size(); ++a) {
        Matrix<S> t(w.n, w.n);
        for (std::size_t r = 0; r < w.n; ++r)
            for (std::size_t c = 0; c < w.n; ++c) t(r, c) = random_weight(S{}, rng, bound);
        w.trans.push_back(std::move(t));
    }
    for (std::size_t k = 0; k < w.n; ++k) {
        w.initial.push_back(random_weight(S{}, rng, bound));
        w.final_weights.push_back(random_weight(S{}, rng, bound));
    }
    return w;
}

}  // namespace dualmin
