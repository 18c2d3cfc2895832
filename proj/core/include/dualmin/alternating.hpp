#pragma once

// Alternating finite automata with Boolean functions stored extensionally.
//
// A Boolean function 2^X -> 2 is kept as its truth table over all subsets of
// X (bit `mask` of the table is the value on the subset `mask`). This is the
// set-of-satisfying-subsets representation and is its own normal form.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dualmin/automaton.hpp"

namespace dualmin {

/// Subset of the AFA's states as a bitmask.
using Mask = std::uint64_t;

inline constexpr std::size_t kDefaultMaxAfaStates = 20;
inline constexpr std::size_t kHardMaxAfaStates = 30;

class BoolFun {
public:
    BoolFun() = default;
    /// Constant-false function over n variables.
    explicit BoolFun(std::size_t n);

    static BoolFun constant(std::size_t n, bool value);
    static BoolFun from_subsets(std::size_t n, const std::vector<Mask>& satisfying);
    /// A ↦ (x ∈ A).
    static BoolFun variable(std::size_t n, State x);

    std::size_t arity() const noexcept { return n_; }
    bool operator()(Mask subset) const { return table_[subset]; }
    void set(Mask subset, bool value) { table_[subset] = value; }

    /// Satisfying subsets in increasing mask order.
    std::vector<Mask> subsets() const;

    friend bool operator==(const BoolFun&, const BoolFun&) = default;

private:
    std::size_t n_ = 0;
    std::vector<bool> table_;
};

struct AlternatingAutomaton {
    Alphabet alphabet;
    std::size_t n = 0;
    std::vector<std::vector<BoolFun>> delta;  ///< delta[a][s]
    BoolFun iota;                             ///< acceptance condition
    Mask finals = 0;
    std::vector<std::string> state_names;

    std::string state_name(State x) const;
    void validate() const;

    friend bool operator==(const AlternatingAutomaton&, const AlternatingAutomaton&) = default;
};

Mask to_mask(const StateSet& s);
StateSet to_state_set(Mask m, std::size_t n);

/// Compiles a formula over state names: `and`/`&`, `or`/`|`, `not`/`!`,
/// `true`/`false`/`1`/`0`, parentheses. Throws ParseError with the offset.
BoolFun compile_formula(std::string_view formula, const std::vector<std::string>& state_names);

/// ι(δ'_w(F)) with δ'_ε(A) = A and δ'_{aw}(A)(s) = δ_a(s)(δ'_w(A)).
bool afa_accepts(const AlternatingAutomaton& a, const Word& w);

/// DFA on all 2^n subsets: start F, A ↦ {s | δ_a(s)(A)}, accept iff ι(A).
/// Accepts exactly the reversals of the words accepted by `a`.
MooreAutomaton reverse_dfa(const AlternatingAutomaton& a, std::size_t max_n = kDefaultMaxAfaStates);

/// Minimal DFA for L(a), obtained through the dual-automaton construction.
MooreAutomaton minimal_dfa_for_afa(const AlternatingAutomaton& a, std::size_t max_n = kDefaultMaxAfaStates);

/// DFA as an AFA: δ_a(s) = {A | t_a(s) ∈ A}, ι = {A | init ∈ A}, F = accepting.
AlternatingAutomaton embed_dfa(const MooreAutomaton& m);

}  // namespace dualmin
