#pragma once

// Deterministic Kripke models: trace formulas, the trace-definable subset
// family, and the bisimulation quotient obtained from the atoms of the
// Boolean algebra that family generates.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dualmin/automaton.hpp"

namespace dualmin {

struct Dkm {
    Alphabet alphabet;
    std::vector<std::string> obs;          ///< observation names
    std::vector<StateSet> gamma;           ///< gamma[s]: sorted observation indices
    std::vector<std::vector<State>> delta; ///< delta[a][s]
    std::optional<State> initial;
    std::vector<std::string> state_names;

    std::size_t size() const noexcept { return gamma.size(); }
    std::string state_name(State x) const;
    void validate() const;

    friend bool operator==(const Dkm&, const Dkm&) = default;
};

/// ⟨a1⟩...⟨ak⟩ω.
struct TraceFormula {
    Word modalities;
    std::size_t observation = 0;
};

using SubsetFamily = std::set<StateSet>;

/// Parses "<a><b>p" (modalities then one observation name).
TraceFormula parse_trace_formula(const Dkm& k, std::string_view text);

/// ⟦ω⟧ = {s | ω ∈ γ(s)}, ⟦⟨a⟩φ⟧ = δ_a⁻¹(⟦φ⟧).
StateSet eval_trace(const Dkm& k, const TraceFormula& phi);

/// Least family containing every ⟦ω⟧ and closed under all δ_a⁻¹.
SubsetFamily definable_closure(const Dkm& k);

/// States grouped by their membership signature across the family.
Partition boolean_atoms(const SubsetFamily& family, std::size_t n);

/// Thrown by quotient_dkm when the partition is not a congruence.
class CongruenceError : public Error {
public:
    CongruenceError(State a, State b, const std::string& reason)
        : Error("partition is not a congruence: " + reason), witness_{a, b} {}

    std::pair<State, State> witness() const noexcept { return witness_; }

private:
    std::pair<State, State> witness_;
};

Dkm quotient_dkm(const Dkm& k, const Partition& p);

/// quotient_dkm(k, boolean_atoms(definable_closure(k), n)).
Dkm minimise_dkm(const Dkm& k);

/// Coarsest γ-respecting partition stable under every δ_a.
Partition bisimulation_oracle(const Dkm& k);

/// Bijection preserving γ (by observation name), δ and the initial state.
bool dkm_isomorphic(const Dkm& a, const Dkm& b);

/// DFA as a model with the single observation `p` true at accepting states.
Dkm dkm_from_dfa(const MooreAutomaton& m, std::string observation = "p");

/// Moore automaton as a model with one observation per output value.
Dkm dkm_from_moore(const MooreAutomaton& m);

/// Back to a Moore automaton; needs an initial state and a single observation per state.
MooreAutomaton moore_from_dkm(const Dkm& k, const std::vector<std::string>& outputs);

}  // namespace dualmin
