#include "dualmin/brzozowski.hpp"

#include <unordered_map>

namespace dualmin {

namespace {

struct DualStateHash {
    std::size_t operator()(const DualState& s) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (std::size_t v : s.values) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::string predicate_name(const MooreAutomaton& m, const DualState& s) {
    if (m.is_dfa()) {
        StateSet members;
        for (State x = 0; x < s.values.size(); ++x)
            if (s.values[x] == 1) members.push_back(x);
        return subset_name(members, m.state_names);
    }
    std::string out = "[";
    for (State x = 0; x < s.values.size(); ++x) {
        if (x > 0) out += ',';
        out += m.state_name(x) + ":" + m.outputs[s.values[x]];
    }
    return out + "]";
}

}  // namespace

DualAutomaton dual_automaton_with_states(const MooreAutomaton& m, std::size_t max_states) {
    m.validate();
    DualAutomaton result;
    MooreAutomaton& d = result.automaton;
    d.alphabet = m.alphabet;
    d.outputs = m.outputs;
    d.trans.assign(m.alphabet.size(), {});
    d.init = 0;

    std::unordered_map<DualState, State, DualStateHash> index;
    auto intern = [&](DualState s) {
        auto [it, inserted] = index.try_emplace(s, result.states.size());
        if (inserted) {
            if (result.states.size() >= max_states)
                throw StateBoundError("dual automaton exceeds the state bound", max_states);
            result.states.push_back(std::move(s));
        }
        return it->second;
    };

    intern(DualState{m.out});
    // Breadth-first: state q is expanded after all states discovered before it,
    // so the numbering is already the BFS canonical one.
    for (State q = 0; q < result.states.size(); ++q) {
        for (Symbol a = 0; a < m.alphabet.size(); ++a) {
            DualState next;
            next.values.reserve(m.size());
            const auto& phi = result.states[q].values;
            for (State x = 0; x < m.size(); ++x) next.values.push_back(phi[m.step(x, a)]);
            const State target = intern(std::move(next));
            d.trans[a].push_back(target);
        }
    }
    for (const auto& s : result.states) {
        d.out.push_back(s.values[m.init]);
        d.state_names.push_back(predicate_name(m, s));
    }
    return result;
}

MooreAutomaton dual_automaton(const MooreAutomaton& m, std::size_t max_states) {
    return dual_automaton_with_states(m, max_states).automaton;
}

MooreAutomaton brzozowski_minimise(const MooreAutomaton& m, std::size_t max_states) {
    return dual_automaton(dual_automaton(m, max_states), max_states);
}

std::set<StateSet> dual_state_sets(const MooreAutomaton& m, std::size_t max_states) {
    if (!m.is_dfa()) throw UnsupportedError("dual_state_sets requires a DFA (output set {reject, accept})");
    std::set<StateSet> family;
    for (const auto& s : dual_automaton_with_states(m, max_states).states) {
        StateSet members;
        for (State x = 0; x < s.values.size(); ++x)
            if (s.values[x] == 1) members.push_back(x);
        family.insert(std::move(members));
    }
    return family;
}

}  // namespace dualmin
