#include "dualmin/random.hpp"

#include <algorithm>
#include <string>

namespace dualmin {

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Alphabet letters(std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < count; ++k) names.emplace_back(1, static_cast<char>('a' + k));
    return Alphabet(std::move(names));
}

namespace {

std::vector<std::vector<State>> random_transitions(Rng& rng, std::size_t n, std::size_t sigma) {
    std::vector<std::vector<State>> trans(sigma, std::vector<State>(n));
    for (auto& row : trans)
        for (auto& target : row) target = uniform_size(rng, 0, n - 1);
    return trans;
}

}  // namespace

// Every state is reachable from state 0: state k > 0 gets an arc from some
// earlier state, the rest of the table is uniform. At least two outputs are
// used whenever `max_outputs` allows it.
MooreAutomaton random_moore(Rng& rng, std::size_t max_n, std::size_t max_sigma, std::size_t max_outputs) {
    MooreAutomaton m;
    const std::size_t n = uniform_size(rng, 1, max_n);
    const std::size_t outputs = uniform_size(rng, std::min<std::size_t>(2, max_outputs), max_outputs);
    m.alphabet = letters(uniform_size(rng, 1, max_sigma));
    for (std::size_t k = 0; k < outputs; ++k) m.outputs.push_back("o" + std::to_string(k));
    m.trans = random_transitions(rng, n, m.alphabet.size());
    for (State x = 1; x < n; ++x) m.trans[uniform_size(rng, 0, m.alphabet.size() - 1)][uniform_size(rng, 0, x - 1)] = x;
    m.init = 0;
    for (State x = 0; x < n; ++x) m.out.push_back(uniform_size(rng, 0, outputs - 1));
    return m;
}

MooreAutomaton random_dfa(Rng& rng, std::size_t max_n, std::size_t max_sigma) {
    MooreAutomaton m = random_moore(rng, max_n, max_sigma, 2);
    m.outputs = dfa_outputs();
    return m;
}

AlternatingAutomaton random_afa(Rng& rng, std::size_t max_n, std::size_t max_sigma) {
    AlternatingAutomaton a;
    a.n = uniform_size(rng, 1, max_n);
    a.alphabet = letters(uniform_size(rng, 1, max_sigma));
    const Mask subsets = Mask{1} << a.n;
    auto random_fun = [&] {
        BoolFun f(a.n);
        for (Mask m = 0; m < subsets; ++m) f.set(m, uniform_size(rng, 0, 1) == 1);
        return f;
    };
    for (Symbol l = 0; l < a.alphabet.size(); ++l) {
        a.delta.emplace_back();
        for (State s = 0; s < a.n; ++s) a.delta.back().push_back(random_fun());
    }
    // a constant acceptance condition makes the language trivial
    do {
        a.iota = random_fun();
    } while (a.iota == BoolFun::constant(a.n, false) || a.iota == BoolFun::constant(a.n, true));
    a.finals = uniform_size(rng, 0, subsets - 1);
    return a;
}

Dkm random_dkm(Rng& rng, std::size_t max_n, std::size_t max_obs, std::size_t max_sigma) {
    Dkm k;
    const std::size_t n = uniform_size(rng, 1, max_n);
    const std::size_t obs = uniform_size(rng, 1, max_obs);
    k.alphabet = letters(uniform_size(rng, 1, max_sigma));
    for (std::size_t o = 0; o < obs; ++o) k.obs.push_back("p" + std::to_string(o));
    for (State s = 0; s < n; ++s) {
        StateSet g;
        for (std::size_t o = 0; o < obs; ++o)
            if (uniform_size(rng, 0, 1) == 1) g.push_back(o);
        k.gamma.push_back(std::move(g));
    }
    k.delta = random_transitions(rng, n, k.alphabet.size());
    return k;
}

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    std::uniform_int_distribution<long> dist(lo, hi);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

Integer random_weight(IntegerSemiring, Rng& rng, long bound) {
    return Integer(std::uniform_int_distribution<long>(-bound, bound)(rng));
}

Rational random_weight(RationalSemiring, Rng& rng, long bound) {
    const long den = std::uniform_int_distribution<long>(1, 2)(rng);
    Rational q(std::uniform_int_distribution<long>(-bound * den, bound * den)(rng), den);
    q.canonicalize();
    return q;
}

}  // namespace dualmin
