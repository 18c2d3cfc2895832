#include "dualmin/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace dualmin {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty()) throw DimensionError("alphabet contains an empty letter name");
        if (!seen.insert(s).second) throw DimensionError("alphabet repeats letter '" + s + "'");
    }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    for (Symbol a = 0; a < symbols_.size(); ++a)
        if (symbols_[a] == name) return a;
    return std::nullopt;
}

Symbol Alphabet::index_of(std::string_view name) const {
    if (auto a = find(name)) return *a;
    throw UnknownSymbolError("unknown letter '" + std::string(name) + "'");
}

Word Alphabet::parse_word(std::string_view text) const {
    Word w;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t end = std::min(text.find(',', start), text.size());
            const auto piece = text.substr(start, end - start);
            if (!piece.empty()) w.push_back(index_of(piece));
            start = end + 1;
        }
        return w;
    }
    for (char c : text) w.push_back(index_of(std::string_view(&c, 1)));
    return w;
}

std::string Alphabet::format_word(const Word& w) const {
    bool single = std::all_of(symbols_.begin(), symbols_.end(), [](const auto& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!single && k > 0) out += ',';
        out += name(w[k]);
    }
    return out;
}

const std::vector<std::string>& dfa_outputs() {
    static const std::vector<std::string> outputs{"reject", "accept"};
    return outputs;
}

std::string subset_name(const StateSet& s, const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0) out += ',';
        out += s[k] < names.size() ? names[s[k]] : std::to_string(s[k]);
    }
    return out + "}";
}

std::string MooreAutomaton::state_name(State x) const {
    return x < state_names.size() ? state_names[x] : "q" + std::to_string(x);
}

void MooreAutomaton::validate() const {
    const std::size_t n = size();
    if (n == 0) throw DimensionError("automaton has no states");
    if (init >= n) throw DimensionError("initial state out of range");
    if (outputs.empty()) throw DimensionError("empty output set");
    if (trans.size() != alphabet.size()) throw DimensionError("transition table count differs from alphabet size");
    for (Symbol a = 0; a < trans.size(); ++a) {
        if (trans[a].size() != n)
            throw DimensionError("transition table for '" + alphabet.name(a) + "' is not total");
        for (State y : trans[a])
            if (y >= n) throw DimensionError("transition target out of range on '" + alphabet.name(a) + "'");
    }
    for (std::size_t o : out)
        if (o >= outputs.size()) throw DimensionError("output index out of range");
    if (!state_names.empty() && state_names.size() != n) throw DimensionError("state name count differs from size");
}

MooreAutomaton MooreAutomaton::dfa(Alphabet alphabet, std::vector<std::vector<State>> trans, State init,
                                   const StateSet& accepting, std::vector<std::string> names) {
    MooreAutomaton m;
    const std::size_t n = trans.empty() ? names.size() : trans.front().size();
    m.alphabet = std::move(alphabet);
    m.outputs = dfa_outputs();
    m.trans = std::move(trans);
    m.init = init;
    m.out.assign(n, 0);
    for (State x : accepting) m.out.at(x) = 1;
    m.state_names = std::move(names);
    m.validate();
    return m;
}

std::string Nfa::state_name(State x) const {
    return x < state_names.size() ? state_names[x] : "q" + std::to_string(x);
}

void Nfa::validate() const {
    if (trans.size() != alphabet.size()) throw DimensionError("transition table count differs from alphabet size");
    auto check = [&](const StateSet& s) {
        for (State x : s)
            if (x >= n) throw DimensionError("NFA references state out of range");
    };
    for (const auto& per_letter : trans) {
        if (per_letter.size() != n) throw DimensionError("NFA transition table has wrong size");
        for (const auto& s : per_letter) check(s);
    }
    check(inits);
    check(finals);
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
    Partition p;
    std::unordered_map<std::size_t, std::size_t> renumber;
    p.block_of.reserve(labels.size());
    for (std::size_t l : labels) {
        auto [it, inserted] = renumber.try_emplace(l, renumber.size());
        p.block_of.push_back(it->second);
    }
    p.block_count = renumber.size();
    return p;
}

Partition Partition::discrete(std::size_t n) {
    Partition p;
    for (std::size_t x = 0; x < n; ++x) p.block_of.push_back(x);
    p.block_count = n;
    return p;
}

std::vector<StateSet> Partition::blocks() const {
    std::vector<StateSet> out(block_count);
    for (State x = 0; x < block_of.size(); ++x) out[block_of[x]].push_back(x);
    return out;
}

std::size_t run(const MooreAutomaton& m, const Word& w) {
    State x = m.init;
    for (Symbol a : w) {
        if (a >= m.alphabet.size()) throw UnknownSymbolError("letter index " + std::to_string(a) + " out of range");
        x = m.step(x, a);
    }
    return m.out[x];
}

Nfa reverse(const MooreAutomaton& m) {
    if (!m.is_dfa()) throw UnsupportedError("reverse requires a DFA (output set {reject, accept})");
    Nfa n;
    n.alphabet = m.alphabet;
    n.n = m.size();
    n.state_names = m.state_names;
    n.trans.assign(m.alphabet.size(), std::vector<StateSet>(m.size()));
    for (Symbol a = 0; a < m.alphabet.size(); ++a)
        for (State x = 0; x < m.size(); ++x) n.trans[a][m.step(x, a)].push_back(x);
    for (State x = 0; x < m.size(); ++x)
        if (m.accepting(x)) n.inits.push_back(x);
    n.finals = {m.init};
    return n;
}

Nfa reverse(const Nfa& n) {
    n.validate();
    Nfa r;
    r.alphabet = n.alphabet;
    r.n = n.n;
    r.state_names = n.state_names;
    r.trans.assign(n.alphabet.size(), std::vector<StateSet>(n.n));
    for (Symbol a = 0; a < n.alphabet.size(); ++a)
        for (State x = 0; x < n.n; ++x)
            for (State y : n.trans[a][x]) r.trans[a][y].push_back(x);
    r.inits = n.finals;
    r.finals = n.inits;
    return r;
}

namespace {

StateSet successors(const Nfa& n, const StateSet& s, Symbol a) {
    std::vector<bool> hit(n.n, false);
    for (State x : s)
        for (State y : n.trans[a][x]) hit[y] = true;
    StateSet out;
    for (State y = 0; y < n.n; ++y)
        if (hit[y]) out.push_back(y);
    return out;
}

bool intersects(const StateSet& a, const StateSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        a[i] < b[j] ? ++i : ++j;
    }
    return false;
}

StateSet normalised(StateSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

MooreAutomaton determinise(const Nfa& n, std::size_t max_states) {
    MooreAutomaton m;
    m.alphabet = n.alphabet;
    m.outputs = dfa_outputs();
    m.trans.assign(n.alphabet.size(), {});
    std::map<StateSet, State> index;
    std::vector<StateSet> subsets;
    auto intern = [&](StateSet s) {
        auto [it, inserted] = index.try_emplace(s, subsets.size());
        if (inserted) {
            if (subsets.size() >= max_states) throw StateBoundError("determinise: too many subsets", max_states);
            subsets.push_back(std::move(s));
        }
        return it->second;
    };
    m.init = intern(normalised(n.inits));
    for (State q = 0; q < subsets.size(); ++q) {
        for (Symbol a = 0; a < n.alphabet.size(); ++a) {
            State target = intern(successors(n, subsets[q], a));
            m.trans[a].push_back(target);
        }
    }
    for (const auto& s : subsets) {
        m.out.push_back(intersects(s, normalised(n.finals)) ? 1 : 0);
        m.state_names.push_back(subset_name(s, n.state_names));
    }
    return m;
}

MooreAutomaton powerset_automaton(const Nfa& n, std::size_t max_states) {
    if (n.n >= 63 || (std::size_t{1} << n.n) > max_states)
        throw StateBoundError("powerset_automaton: 2^" + std::to_string(n.n) + " subsets", max_states);
    const std::size_t count = std::size_t{1} << n.n;
    auto to_mask = [](const StateSet& s) {
        std::size_t mask = 0;
        for (State x : s) mask |= std::size_t{1} << x;
        return mask;
    };
    auto to_set = [&](std::size_t mask) {
        StateSet s;
        for (State x = 0; x < n.n; ++x)
            if (mask >> x & 1U) s.push_back(x);
        return s;
    };
    MooreAutomaton m;
    m.alphabet = n.alphabet;
    m.outputs = dfa_outputs();
    m.trans.assign(n.alphabet.size(), std::vector<State>(count));
    m.init = to_mask(n.inits);
    const std::size_t finals = to_mask(n.finals);
    for (std::size_t mask = 0; mask < count; ++mask) {
        const StateSet s = to_set(mask);
        for (Symbol a = 0; a < n.alphabet.size(); ++a) m.trans[a][mask] = to_mask(successors(n, s, a));
        m.out.push_back((mask & finals) != 0 ? 1 : 0);
        m.state_names.push_back(subset_name(s, n.state_names));
    }
    return m;
}

bool nfa_accepts(const Nfa& n, const Word& w) {
    StateSet current = normalised(n.inits);
    for (Symbol a : w) {
        if (a >= n.alphabet.size()) throw UnknownSymbolError("letter index " + std::to_string(a) + " out of range");
        current = successors(n, current, a);
    }
    return intersects(current, normalised(n.finals));
}

MooreAutomaton reach(const MooreAutomaton& m) {
    std::vector<State> order;
    std::vector<State> renum(m.size(), m.size());
    std::deque<State> queue{m.init};
    renum[m.init] = 0;
    order.push_back(m.init);
    while (!queue.empty()) {
        const State x = queue.front();
        queue.pop_front();
        for (Symbol a = 0; a < m.alphabet.size(); ++a) {
            const State y = m.step(x, a);
            if (renum[y] != m.size()) continue;
            renum[y] = order.size();
            order.push_back(y);
            queue.push_back(y);
        }
    }
    MooreAutomaton r;
    r.alphabet = m.alphabet;
    r.outputs = m.outputs;
    r.init = 0;
    r.trans.assign(m.alphabet.size(), std::vector<State>(order.size()));
    for (State q = 0; q < order.size(); ++q) {
        for (Symbol a = 0; a < m.alphabet.size(); ++a) r.trans[a][q] = renum[m.step(order[q], a)];
        r.out.push_back(m.out[order[q]]);
        if (!m.state_names.empty()) r.state_names.push_back(m.state_names[order[q]]);
    }
    return r;
}

Partition moore_equivalence(const MooreAutomaton& m) {
    Partition p = Partition::from_labels(m.out);
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> signatures;
        std::vector<std::size_t> labels;
        labels.reserve(m.size());
        for (State x = 0; x < m.size(); ++x) {
            std::vector<std::size_t> sig{p.block_of[x]};
            for (Symbol a = 0; a < m.alphabet.size(); ++a) sig.push_back(p.block_of[m.step(x, a)]);
            auto [it, inserted] = signatures.try_emplace(std::move(sig), signatures.size());
            labels.push_back(it->second);
        }
        Partition next = Partition::from_labels(labels);
        // Refinement only splits blocks, so an unchanged count means stable.
        if (next.block_count == p.block_count) return next;
        p = std::move(next);
    }
}

MooreAutomaton partition_refinement_minimise(const MooreAutomaton& m) {
    const MooreAutomaton r = reach(m);
    const Partition p = moore_equivalence(r);
    MooreAutomaton q;
    q.alphabet = r.alphabet;
    q.outputs = r.outputs;
    q.init = p.block_of[r.init];
    q.trans.assign(r.alphabet.size(), std::vector<State>(p.block_count));
    q.out.assign(p.block_count, 0);
    const auto blocks = p.blocks();
    for (std::size_t b = 0; b < p.block_count; ++b) {
        const State rep = blocks[b].front();
        for (Symbol a = 0; a < r.alphabet.size(); ++a) q.trans[a][b] = p.block_of[r.step(rep, a)];
        q.out[b] = r.out[rep];
        std::vector<std::string> names;
        for (State x : blocks[b]) names.push_back(r.state_name(x));
        std::string name = names.size() == 1 ? names.front() : "{";
        if (names.size() > 1) {
            for (std::size_t k = 0; k < names.size(); ++k) name += (k ? "," : "") + names[k];
            name += "}";
        }
        q.state_names.push_back(std::move(name));
    }
    return reach(q);
}

bool iso_check(const MooreAutomaton& a, const MooreAutomaton& b) {
    if (a.alphabet.size() != b.alphabet.size()) return false;
    const MooreAutomaton ca = reach(a);
    const MooreAutomaton cb = reach(b);
    if (ca.size() != cb.size()) return false;
    if (ca.trans != cb.trans) return false;
    for (State x = 0; x < ca.size(); ++x)
        if (ca.output_label(x) != cb.output_label(x)) return false;
    return true;
}

bool equiv_exact(const MooreAutomaton& a, const MooreAutomaton& b) {
    if (a.alphabet != b.alphabet) throw UnsupportedError("equiv_exact: alphabets differ");
    if (std::set<std::string>(a.outputs.begin(), a.outputs.end()) !=
        std::set<std::string>(b.outputs.begin(), b.outputs.end()))
        throw UnsupportedError("equiv_exact: output sets differ");
    std::set<std::pair<State, State>> seen{{a.init, b.init}};
    std::deque<std::pair<State, State>> queue{{a.init, b.init}};
    while (!queue.empty()) {
        const auto [x, y] = queue.front();
        queue.pop_front();
        if (a.output_label(x) != b.output_label(y)) return false;
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            std::pair<State, State> next{a.step(x, s), b.step(y, s)};
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return true;
}

MooreAutomaton rerooted(const MooreAutomaton& m, State init) {
    if (init >= m.size()) throw DimensionError("rerooted: state out of range");
    MooreAutomaton r = m;
    r.init = init;
    return r;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_len) {
    std::vector<Word> words{Word{}};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_len && alphabet_size > 0; ++len) {
        const std::size_t layer_end = words.size();
        for (std::size_t k = layer_begin; k < layer_end; ++k)
            for (Symbol a = 0; a < alphabet_size; ++a) {
                Word w = words[k];
                w.push_back(a);
                words.push_back(std::move(w));
            }
        layer_begin = layer_end;
    }
    return words;
}

}  // namespace dualmin
