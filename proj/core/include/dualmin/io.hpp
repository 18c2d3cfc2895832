#pragma once

// JSON automaton files.
//
// Every document carries "type" (dfa, moore, nfa, weighted, afa, dkm) and
// "alphabet". States are listed under "states" in index order; maps keyed by
// state or letter name are emitted with sorted keys. Rationals are written as
// "p/q" strings, integers as numbers while they fit in 53 bits.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "dualmin/alternating.hpp"
#include "dualmin/automaton.hpp"
#include "dualmin/dkm.hpp"
#include "dualmin/weighted.hpp"

namespace dualmin {

using AnyWeighted = std::variant<WeightedAutomaton<BooleanSemiring>, WeightedAutomaton<IntegerSemiring>,
                                 WeightedAutomaton<RationalSemiring>, WeightedAutomaton<TropicalSemiring>>;

using AutomatonDoc = std::variant<MooreAutomaton, Nfa, AnyWeighted, AlternatingAutomaton, Dkm>;

/// Parses a document. `semiring` overrides the "semiring" field of weighted files.
AutomatonDoc parse_automaton(std::string_view text, const std::optional<std::string>& semiring = std::nullopt);

AutomatonDoc load_automaton(const std::string& path, const std::optional<std::string>& semiring = std::nullopt);

/// Canonical JSON (two-space indent, trailing newline).
std::string emit_automaton(const AutomatonDoc& doc);

/// "dfa", "moore", "nfa", "weighted", "afa" or "dkm".
std::string type_name(const AutomatonDoc& doc);

std::string semiring_name(const AnyWeighted& w);

}  // namespace dualmin
