#pragma once

// Dual automata of Moore automata over a finite output set B and the
// double-reversal minimisation built from them.
//
// A dual state is a predicate X -> B, stored as the vector of its values.
// The dual automaton starts at the output map f, moves from φ to φ ∘ t_a on
// letter a and outputs φ(i). It recognises the reversed language, is
// reachable by construction and is observable, so applying it twice yields
// the minimal automaton.

#include <cstddef>
#include <set>
#include <vector>

#include "dualmin/automaton.hpp"

namespace dualmin {

/// Element of B^X: values[x] indexes the output set.
struct DualState {
    std::vector<std::size_t> values;

    friend bool operator==(const DualState&, const DualState&) = default;
};

struct DualAutomaton {
    MooreAutomaton automaton;
    std::vector<DualState> states;  ///< states[q] is the predicate of state q
};

/// Dual automaton together with the predicate carried by each state.
DualAutomaton dual_automaton_with_states(const MooreAutomaton& m, std::size_t max_states = kDefaultMaxStates);

MooreAutomaton dual_automaton(const MooreAutomaton& m, std::size_t max_states = kDefaultMaxStates);

/// dual_automaton applied twice; the result is minimal and equivalent to m.
MooreAutomaton brzozowski_minimise(const MooreAutomaton& m, std::size_t max_states = kDefaultMaxStates);

/// States of dual_automaton(m) decoded as subsets of m's states (DFA only).
std::set<StateSet> dual_state_sets(const MooreAutomaton& m, std::size_t max_states = kDefaultMaxStates);

}  // namespace dualmin
