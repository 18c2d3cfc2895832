#pragma once

#include <string>

#include "dualmin/automaton.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(DUALMIN_FIXTURE_DIR) + "/" + name; }

// Three-state DFA for (a+b)*a: x initial, y and z accepting.
inline dualmin::MooreAutomaton appendix_a() {
    using dualmin::Alphabet;
    // states: x=0, y=1, z=2
    return dualmin::MooreAutomaton::dfa(Alphabet({"a", "b"}), {{2, 1, 1}, {0, 0, 0}}, 0, {1, 2}, {"x", "y", "z"});
}

// The two-state result: q0 initial, a leads to the accepting q1, b back to q0.
inline dualmin::MooreAutomaton appendix_a_minimal() {
    using dualmin::Alphabet;
    return dualmin::MooreAutomaton::dfa(Alphabet({"a", "b"}), {{1, 1}, {0, 0}}, 0, {1}, {"q0", "q1"});
}

}  // namespace fixtures
