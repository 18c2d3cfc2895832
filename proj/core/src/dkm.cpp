#include "dualmin/dkm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace dualmin {

std::string Dkm::state_name(State x) const {
    return x < state_names.size() ? state_names[x] : "s" + std::to_string(x);
}

void Dkm::validate() const {
    const std::size_t n = size();
    if (n == 0) throw DimensionError("model has no states");
    if (delta.size() != alphabet.size()) throw DimensionError("model transition count differs from alphabet size");
    for (Symbol a = 0; a < delta.size(); ++a) {
        if (delta[a].size() != n) throw DimensionError("transition map for '" + alphabet.name(a) + "' is not total");
        for (State t : delta[a])
            if (t >= n) throw DimensionError("transition target out of range");
    }
    for (const auto& g : gamma)
        for (std::size_t o : g)
            if (o >= obs.size()) throw DimensionError("observation index out of range");
    if (initial && *initial >= n) throw DimensionError("initial state out of range");
    if (!state_names.empty() && state_names.size() != n) throw DimensionError("state name count differs from size");
}

TraceFormula parse_trace_formula(const Dkm& k, std::string_view text) {
    TraceFormula phi;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip();
    while (pos < text.size() && text[pos] == '<') {
        const std::size_t close = text.find('>', pos);
        if (close == std::string_view::npos) throw ParseError("", "trace formula: unterminated modality");
        phi.modalities.push_back(k.alphabet.index_of(text.substr(pos + 1, close - pos - 1)));
        pos = close + 1;
        skip();
    }
    std::string_view name = text.substr(pos);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    const auto it = std::find(k.obs.begin(), k.obs.end(), name);
    if (it == k.obs.end()) throw UnknownSymbolError("unknown observation '" + std::string(name) + "'");
    phi.observation = static_cast<std::size_t>(it - k.obs.begin());
    return phi;
}

namespace {

StateSet preimage(const Dkm& k, Symbol a, const StateSet& target) {
    std::vector<bool> in(k.size(), false);
    for (State t : target) in[t] = true;
    StateSet out;
    for (State s = 0; s < k.size(); ++s)
        if (in[k.delta[a][s]]) out.push_back(s);
    return out;
}

StateSet observed(const Dkm& k, std::size_t omega) {
    StateSet out;
    for (State s = 0; s < k.size(); ++s)
        if (std::binary_search(k.gamma[s].begin(), k.gamma[s].end(), omega)) out.push_back(s);
    return out;
}

std::set<std::string> observation_names(const Dkm& k, State s) {
    std::set<std::string> out;
    for (std::size_t o : k.gamma[s]) out.insert(k.obs[o]);
    return out;
}

}  // namespace

StateSet eval_trace(const Dkm& k, const TraceFormula& phi) {
    if (phi.observation >= k.obs.size()) throw UnknownSymbolError("observation index out of range");
    StateSet current = observed(k, phi.observation);
    for (auto it = phi.modalities.rbegin(); it != phi.modalities.rend(); ++it) {
        if (*it >= k.alphabet.size()) throw UnknownSymbolError("letter index " + std::to_string(*it) + " out of range");
        current = preimage(k, *it, current);
    }
    return current;
}

SubsetFamily definable_closure(const Dkm& k) {
    k.validate();
    SubsetFamily family;
    std::deque<StateSet> work;
    auto add = [&](StateSet s) {
        if (family.insert(s).second) work.push_back(std::move(s));
    };
    for (std::size_t omega = 0; omega < k.obs.size(); ++omega) add(observed(k, omega));
    while (!work.empty()) {
        const StateSet s = std::move(work.front());
        work.pop_front();
        for (Symbol a = 0; a < k.alphabet.size(); ++a) add(preimage(k, a, s));
    }
    return family;
}

Partition boolean_atoms(const SubsetFamily& family, std::size_t n) {
    std::vector<std::vector<bool>> signature(n, std::vector<bool>(family.size(), false));
    std::size_t idx = 0;
    for (const auto& s : family) {
        for (State x : s) {
            if (x >= n) throw DimensionError("subset mentions a state outside the model");
            signature[x][idx] = true;
        }
        ++idx;
    }
    std::map<std::vector<bool>, std::size_t> ids;
    std::vector<std::size_t> labels;
    for (const auto& sig : signature) labels.push_back(ids.try_emplace(sig, ids.size()).first->second);
    return Partition::from_labels(labels);
}

Dkm quotient_dkm(const Dkm& k, const Partition& p) {
    k.validate();
    if (p.block_of.size() != k.size()) throw DimensionError("partition size differs from model size");
    const auto blocks = p.blocks();
    for (const auto& block : blocks) {
        if (block.empty()) throw DimensionError("partition has an empty block");
        const State rep = block.front();
        for (State s : block) {
            if (k.gamma[s] != k.gamma[rep])
                throw CongruenceError(rep, s, k.state_name(rep) + " and " + k.state_name(s) + " observe differently");
            for (Symbol a = 0; a < k.alphabet.size(); ++a)
                if (p.block_of[k.delta[a][s]] != p.block_of[k.delta[a][rep]])
                    throw CongruenceError(rep, s,
                                          k.state_name(rep) + " and " + k.state_name(s) +
                                              " have successors in different blocks on '" + k.alphabet.name(a) + "'");
        }
    }
    Dkm q;
    q.alphabet = k.alphabet;
    q.obs = k.obs;
    q.delta.assign(k.alphabet.size(), std::vector<State>(p.block_count));
    for (std::size_t b = 0; b < p.block_count; ++b) {
        const State rep = blocks[b].front();
        q.gamma.push_back(k.gamma[rep]);
        for (Symbol a = 0; a < k.alphabet.size(); ++a) q.delta[a][b] = p.block_of[k.delta[a][rep]];
        q.state_names.push_back(blocks[b].size() == 1 ? k.state_name(rep) : subset_name(blocks[b], k.state_names));
    }
    if (k.initial) q.initial = p.block_of[*k.initial];
    return q;
}

Dkm minimise_dkm(const Dkm& k) { return quotient_dkm(k, boolean_atoms(definable_closure(k), k.size())); }

Partition bisimulation_oracle(const Dkm& k) {
    k.validate();
    std::map<StateSet, std::size_t> initial_ids;
    std::vector<std::size_t> labels;
    for (const auto& g : k.gamma) labels.push_back(initial_ids.try_emplace(g, initial_ids.size()).first->second);
    Partition p = Partition::from_labels(labels);
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next;
        for (State s = 0; s < k.size(); ++s) {
            std::vector<std::size_t> sig{p.block_of[s]};
            for (Symbol a = 0; a < k.alphabet.size(); ++a) sig.push_back(p.block_of[k.delta[a][s]]);
            next.push_back(ids.try_emplace(std::move(sig), ids.size()).first->second);
        }
        Partition refined = Partition::from_labels(next);
        if (refined.block_count == p.block_count) return refined;
        p = std::move(refined);
    }
}

namespace {

using Mapping = std::vector<std::optional<State>>;

// Extends the mapping with x -> y and everything it forces; false on conflict.
bool propagate(const Dkm& a, const Dkm& b, Mapping& fwd, Mapping& bwd, State x, State y) {
    std::deque<std::pair<State, State>> work{{x, y}};
    while (!work.empty()) {
        auto [s, t] = work.front();
        work.pop_front();
        if (fwd[s]) {
            if (*fwd[s] != t) return false;
            continue;
        }
        if (bwd[t]) return false;
        if (observation_names(a, s) != observation_names(b, t)) return false;
        fwd[s] = t;
        bwd[t] = s;
        for (Symbol l = 0; l < a.alphabet.size(); ++l) work.emplace_back(a.delta[l][s], b.delta[l][t]);
    }
    return true;
}

bool extend(const Dkm& a, const Dkm& b, Mapping fwd, Mapping bwd) {
    State x = 0;
    while (x < a.size() && fwd[x]) ++x;
    if (x == a.size()) return true;
    for (State y = 0; y < b.size(); ++y) {
        if (bwd[y]) continue;
        Mapping f = fwd, g = bwd;
        if (propagate(a, b, f, g, x, y) && extend(a, b, std::move(f), std::move(g))) return true;
    }
    return false;
}

}  // namespace

bool dkm_isomorphic(const Dkm& a, const Dkm& b) {
    if (a.size() != b.size() || a.alphabet.size() != b.alphabet.size()) return false;
    if (a.initial.has_value() != b.initial.has_value()) return false;
    Mapping fwd(a.size()), bwd(b.size());
    if (a.initial && !propagate(a, b, fwd, bwd, *a.initial, *b.initial)) return false;
    return extend(a, b, std::move(fwd), std::move(bwd));
}

Dkm dkm_from_dfa(const MooreAutomaton& m, std::string observation) {
    if (!m.is_dfa()) throw UnsupportedError("dkm_from_dfa requires a DFA");
    Dkm k;
    k.alphabet = m.alphabet;
    k.obs = {std::move(observation)};
    for (State x = 0; x < m.size(); ++x) k.gamma.push_back(m.accepting(x) ? StateSet{0} : StateSet{});
    k.delta = m.trans;
    k.initial = m.init;
    k.state_names = m.state_names;
    return k;
}

Dkm dkm_from_moore(const MooreAutomaton& m) {
    Dkm k;
    k.alphabet = m.alphabet;
    k.obs = m.outputs;
    for (State x = 0; x < m.size(); ++x) k.gamma.push_back({m.out[x]});
    k.delta = m.trans;
    k.initial = m.init;
    k.state_names = m.state_names;
    return k;
}

MooreAutomaton moore_from_dkm(const Dkm& k, const std::vector<std::string>& outputs) {
    if (!k.initial) throw UnsupportedError("model has no initial state");
    const bool single_observation_dfa = outputs == dfa_outputs() && k.obs.size() == 1;
    MooreAutomaton m;
    m.alphabet = k.alphabet;
    m.outputs = outputs;
    m.trans = k.delta;
    m.init = *k.initial;
    m.state_names = k.state_names;
    for (State s = 0; s < k.size(); ++s) {
        if (single_observation_dfa) {
            m.out.push_back(k.gamma[s].empty() ? 0 : 1);
            continue;
        }
        if (k.gamma[s].size() != 1) throw UnsupportedError("state " + k.state_name(s) + " has no unique observation");
        const auto it = std::find(outputs.begin(), outputs.end(), k.obs[k.gamma[s].front()]);
        if (it == outputs.end()) throw UnsupportedError("observation is not an output value");
        m.out.push_back(static_cast<std::size_t>(it - outputs.begin()));
    }
    return m;
}

}  // namespace dualmin
