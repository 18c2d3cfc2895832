#pragma once

// Brute-force reference implementations. Deliberately naive and independent of
// the library algorithms they are compared against; only the data types are shared.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "dualmin/alternating.hpp"
#include "dualmin/automaton.hpp"
#include "dualmin/dkm.hpp"
#include "dualmin/linalg.hpp"

namespace oracle {

using namespace dualmin;

// Path enumeration: some initial state has a run ending in a final state.
inline bool nfa_accepts(const Nfa& n, const Word& w, std::size_t pos, State x) {
    if (pos == w.size()) return std::find(n.finals.begin(), n.finals.end(), x) != n.finals.end();
    for (State y : n.trans[w[pos]][x])
        if (nfa_accepts(n, w, pos + 1, y)) return true;
    return false;
}

inline bool nfa_accepts(const Nfa& n, const Word& w) {
    for (State x : n.inits)
        if (nfa_accepts(n, w, 0, x)) return true;
    return false;
}

// Leibniz formula over all permutations.
inline Integer determinant(const IntMatrix& m) {
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline State walk(const MooreAutomaton& m, State x, const Word& w) {
    for (Symbol a : w) x = m.trans[a][x];
    return x;
}

// Behaviour of each reachable state on every word of length <= n (enough to
// separate inequivalent states of an n-state automaton).
inline std::size_t minimal_size(const MooreAutomaton& m) {
    const auto words = words_up_to(m.alphabet.size(), m.size());
    std::set<State> reachable;
    for (const Word& w : words) reachable.insert(walk(m, m.init, w));
    std::set<std::vector<std::string>> behaviours;
    for (State x : reachable) {
        std::vector<std::string> sig;
        for (const Word& w : words) sig.push_back(m.output_label(walk(m, x, w)));
        behaviours.insert(sig);
    }
    return behaviours.size();
}

// Definition-level recursion: s accepts aw iff delta_a(s)({t | t accepts w}).
inline Mask accepting_states(const AlternatingAutomaton& a, const Word& w, std::size_t pos) {
    if (pos == w.size()) return a.finals;
    const Mask later = accepting_states(a, w, pos + 1);
    Mask now = 0;
    for (State s = 0; s < a.n; ++s)
        if (a.delta[w[pos]][s](later)) now |= Mask{1} << s;
    return now;
}

inline bool afa_accepts(const AlternatingAutomaton& a, const Word& w) { return a.iota(accepting_states(a, w, 0)); }

// Forward DFA for L(A) whose states are Boolean functions g : 2^X -> 2 (truth
// tables). Start at iota; reading a maps g to A |-> g({s | delta_a(s)(A)});
// accept g(F).
inline MooreAutomaton afa_function_dfa(const AlternatingAutomaton& a) {
    const std::size_t subsets = std::size_t{1} << a.n;
    using Table = std::vector<bool>;
    auto successor_set = [&](Symbol l, Mask A) {
        Mask out = 0;
        for (State s = 0; s < a.n; ++s)
            if (a.delta[l][s](A)) out |= Mask{1} << s;
        return out;
    };
    Table start(subsets);
    for (Mask A = 0; A < subsets; ++A) start[A] = a.iota(A);
    std::map<Table, State> ids{{start, 0}};
    std::vector<Table> tables{start};
    std::vector<std::vector<State>> trans(a.alphabet.size());
    for (std::size_t k = 0; k < tables.size(); ++k) {
        for (Symbol l = 0; l < a.alphabet.size(); ++l) {
            Table next(subsets);
            for (Mask A = 0; A < subsets; ++A) next[A] = tables[k][successor_set(l, A)];
            auto [it, inserted] = ids.try_emplace(next, tables.size());
            if (inserted) tables.push_back(next);
            trans[l].push_back(it->second);
        }
    }
    StateSet accepting;
    for (State k = 0; k < tables.size(); ++k)
        if (tables[k][a.finals]) accepting.push_back(k);
    return MooreAutomaton::dfa(a.alphabet, trans, 0, accepting);
}

// Deterministic models: bisimilar iff the observation sequences along every
// word agree. Words of length < n suffice.
inline Partition trace_equivalence(const Dkm& k) {
    const auto words = words_up_to(k.alphabet.size(), k.size());
    std::map<std::vector<StateSet>, std::size_t> ids;
    std::vector<std::size_t> labels;
    for (State s = 0; s < k.size(); ++s) {
        std::vector<StateSet> sig;
        for (const Word& w : words) {
            State x = s;
            for (Symbol a : w) x = k.delta[a][x];
            sig.push_back(k.gamma[x]);
        }
        labels.push_back(ids.try_emplace(sig, ids.size()).first->second);
    }
    return Partition::from_labels(labels);
}

// Every trace formula, via the whole transition monoid: each reachable map
// x |-> delta_w(x) contributes the sets {x | omega observed at delta_w(x)}.
inline std::set<StateSet> trace_definable(const Dkm& k) {
    std::vector<State> identity(k.size());
    std::iota(identity.begin(), identity.end(), 0);
    std::set<std::vector<State>> seen{identity};
    std::vector<std::vector<State>> work{identity};
    std::set<StateSet> out;
    while (!work.empty()) {
        const auto f = work.back();
        work.pop_back();
        for (std::size_t omega = 0; omega < k.obs.size(); ++omega) {
            StateSet s;
            for (State x = 0; x < k.size(); ++x)
                if (std::binary_search(k.gamma[f[x]].begin(), k.gamma[f[x]].end(), omega)) s.push_back(x);
            out.insert(s);
        }
        for (Symbol a = 0; a < k.alphabet.size(); ++a) {
            std::vector<State> g(k.size());
            for (State x = 0; x < k.size(); ++x) g[x] = k.delta[a][f[x]];
            if (seen.insert(g).second) work.push_back(g);
        }
    }
    return out;
}

}  // namespace oracle
