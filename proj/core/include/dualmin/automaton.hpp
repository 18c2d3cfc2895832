#pragma once

// Deterministic Moore automata (a DFA is the two-output case), NFAs for the
// classical reversal, and the independent oracles used to cross-check the
// duality-based constructions: subset construction, partition refinement and
// exact product-based equivalence.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualmin/error.hpp"

namespace dualmin {

using State = std::size_t;
using Symbol = std::size_t;
using Word = std::vector<Symbol>;
/// Sorted, duplicate-free list of states.
using StateSet = std::vector<State>;

inline constexpr std::size_t kDefaultMaxStates = 1'000'000;

/// Ordered list of distinct letter names.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& name(Symbol a) const { return symbols_.at(a); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    std::optional<Symbol> find(std::string_view name) const;
    Symbol index_of(std::string_view name) const;

    /// "aba" reads one letter per character; "a,b,a" splits on commas.
    Word parse_word(std::string_view text) const;
    std::string format_word(const Word& w) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> symbols_;
};

/// Output set {reject, accept} used by DFAs.
const std::vector<std::string>& dfa_outputs();

struct MooreAutomaton {
    Alphabet alphabet;
    std::vector<std::string> outputs;        ///< the finite output set B
    std::vector<std::vector<State>> trans;   ///< trans[a][x]
    State init = 0;
    std::vector<std::size_t> out;            ///< out[x] indexes `outputs`
    std::vector<std::string> state_names;    ///< serialization metadata only

    std::size_t size() const noexcept { return out.size(); }
    State step(State x, Symbol a) const { return trans[a][x]; }
    const std::string& output_label(State x) const { return outputs[out[x]]; }
    bool is_dfa() const { return outputs == dfa_outputs(); }
    bool accepting(State x) const { return out[x] == 1; }
    std::string state_name(State x) const;

    /// Throws DimensionError when the structural invariants fail.
    void validate() const;

    /// Builds a DFA from per-letter successor tables and an accepting set.
    static MooreAutomaton dfa(Alphabet alphabet, std::vector<std::vector<State>> trans, State init,
                              const StateSet& accepting, std::vector<std::string> names = {});

    friend bool operator==(const MooreAutomaton&, const MooreAutomaton&) = default;
};

struct Nfa {
    Alphabet alphabet;
    std::size_t n = 0;
    std::vector<std::vector<StateSet>> trans;  ///< trans[a][x]
    StateSet inits;
    StateSet finals;
    std::vector<std::string> state_names;

    std::string state_name(State x) const;
    void validate() const;

    friend bool operator==(const Nfa&, const Nfa&) = default;
};

/// Map state -> block id with ids numbered by first occurrence.
struct Partition {
    std::vector<std::size_t> block_of;
    std::size_t block_count = 0;

    /// Renumbers blocks by first occurrence; the result is canonical.
    static Partition from_labels(const std::vector<std::size_t>& labels);
    static Partition discrete(std::size_t n);
    std::vector<StateSet> blocks() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Output after reading w from the initial state.
std::size_t run(const MooreAutomaton& m, const Word& w);

/// Flip arcs, initial states := accepting states, finals := {init}.
Nfa reverse(const MooreAutomaton& m);

/// Flip arcs and swap initial with final states.
Nfa reverse(const Nfa& n);

/// Subset construction restricted to subsets reachable from the initial set.
MooreAutomaton determinise(const Nfa& n, std::size_t max_states = kDefaultMaxStates);

/// Full powerset automaton over all 2^n subsets (subset index = bitmask).
MooreAutomaton powerset_automaton(const Nfa& n, std::size_t max_states = kDefaultMaxStates);

/// NFA acceptance by direct simulation.
bool nfa_accepts(const Nfa& n, const Word& w);

/// Reachable part with states renumbered in BFS order.
MooreAutomaton reach(const MooreAutomaton& m);

/// Moore partition refinement on reach(m), followed by BFS renumbering.
MooreAutomaton partition_refinement_minimise(const MooreAutomaton& m);

/// Coarsest stable partition of all states of m (not only reachable ones).
Partition moore_equivalence(const MooreAutomaton& m);

/// Structural comparison of BFS canonical forms. Output values are compared by label.
bool iso_check(const MooreAutomaton& a, const MooreAutomaton& b);

/// Language equality via BFS over the reachable product.
bool equiv_exact(const MooreAutomaton& a, const MooreAutomaton& b);

/// Same automaton with a different initial state.
MooreAutomaton rerooted(const MooreAutomaton& m, State init);

/// Reversed copy of w.
Word reversed(const Word& w);

/// All words of length <= max_len in length-lexicographic order.
std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_len);

/// "{x,y}" rendering of a subset using the given state names.
std::string subset_name(const StateSet& s, const std::vector<std::string>& names);

}  // namespace dualmin
