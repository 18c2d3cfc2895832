#include "dualmin/weighted.hpp"

#include <utility>

namespace dualmin {

Rational to_rational(const Integer& v) { return Rational(v); }

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

Nfa to_nfa(const WeightedAutomaton<BooleanSemiring>& w) {
    w.validate();
    Nfa n;
    n.alphabet = w.alphabet;
    n.n = w.n;
    n.state_names = w.state_names;
    n.trans.assign(w.alphabet.size(), std::vector<StateSet>(w.n));
    for (Symbol a = 0; a < w.alphabet.size(); ++a)
        for (State x = 0; x < w.n; ++x)
            for (State y = 0; y < w.n; ++y)
                if (w.trans[a](y, x)) n.trans[a][x].push_back(y);
    for (State x = 0; x < w.n; ++x) {
        if (w.initial[x]) n.inits.push_back(x);
        if (w.final_weights[x]) n.finals.push_back(x);
    }
    return n;
}

}  // namespace dualmin
