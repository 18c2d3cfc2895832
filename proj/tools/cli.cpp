#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualmin/alternating.hpp"
#include "dualmin/brzozowski.hpp"
#include "dualmin/dkm.hpp"
#include "dualmin/io.hpp"
#include "dualmin/selftest.hpp"
#include "dualmin/weighted.hpp"

namespace dualmin::cli {

namespace {

using json = nlohmann::json;

/// Verb/type combination that the tool does not support.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::vector<std::string> files;
    std::string word;
    std::string method;
    std::string formula;
    std::size_t max_len = 6;
    std::size_t hankel_len = 0;
    std::uint64_t seed = 1;
    std::size_t cases = 100;
    std::size_t max_states = kDefaultMaxStates;
    std::size_t max_afa_n = kDefaultMaxAfaStates;
    std::optional<std::string> semiring;
};

// Visits the weighted variant, restricted to ℤ and ℚ.
template <class F>
auto with_ring(const AnyWeighted& w, const char* verb, F&& f) {
    if (const auto* z = std::get_if<WeightedAutomaton<IntegerSemiring>>(&w)) return f(*z);
    if (const auto* q = std::get_if<WeightedAutomaton<RationalSemiring>>(&w)) return f(*q);
    throw UsageError(std::string(verb) + " on weighted automata needs semiring int or rational, got " +
                     semiring_name(w));
}

AutomatonDoc load(const Options& o, std::size_t k = 0) { return load_automaton(o.files.at(k), o.semiring); }

void print(std::ostream& out, const AutomatonDoc& doc) { out << emit_automaton(doc); }

json subset_json(const StateSet& s, const std::vector<std::string>& names) {
    json out = json::array();
    for (State x : s) out.push_back(x < names.size() ? names[x] : std::to_string(x));
    return out;
}

std::string observation_label(const Dkm& k, State s) {
    std::string label = "{";
    for (std::size_t i = 0; i < k.gamma[s].size(); ++i) label += (i ? "," : "") + k.obs[k.gamma[s][i]];
    return label + "}";
}

// Model with initial state as a Moore automaton whose outputs are observation sets.
MooreAutomaton observation_automaton(const Dkm& k) {
    if (!k.initial) throw UsageError("model has no initial state");
    MooreAutomaton m;
    m.alphabet = k.alphabet;
    m.trans = k.delta;
    m.init = *k.initial;
    m.state_names = k.state_names;
    std::map<std::string, std::size_t> ids;
    for (State s = 0; s < k.size(); ++s) {
        const auto label = observation_label(k, s);
        auto [it, inserted] = ids.try_emplace(label, m.outputs.size());
        if (inserted) m.outputs.push_back(label);
        m.out.push_back(it->second);
    }
    return m;
}

Dkm as_dkm(const AutomatonDoc& doc, const char* verb) {
    if (const auto* k = std::get_if<Dkm>(&doc)) return *k;
    if (const auto* m = std::get_if<MooreAutomaton>(&doc)) return m->is_dfa() ? dkm_from_dfa(*m) : dkm_from_moore(*m);
    throw UsageError(std::string(verb) + " expects a dkm, dfa or moore file");
}

// Any Boolean-language description as a DFA.
std::optional<MooreAutomaton> as_language_dfa(const AutomatonDoc& doc, const Options& o) {
    if (const auto* m = std::get_if<MooreAutomaton>(&doc)) return *m;
    if (const auto* n = std::get_if<Nfa>(&doc)) return determinise(*n, o.max_states);
    if (const auto* a = std::get_if<AlternatingAutomaton>(&doc)) return minimal_dfa_for_afa(*a, o.max_afa_n);
    if (const auto* k = std::get_if<Dkm>(&doc)) return observation_automaton(*k);
    if (const auto* w = std::get_if<AnyWeighted>(&doc))
        if (const auto* b = std::get_if<WeightedAutomaton<BooleanSemiring>>(w)) return determinise(to_nfa(*b), o.max_states);
    return std::nullopt;
}

// Shortest word on which the two automata give different outputs.
std::optional<Word> distinguishing_word(const MooreAutomaton& a, const MooreAutomaton& b) {
    std::map<std::pair<State, State>, std::pair<std::pair<State, State>, Symbol>> parent;
    std::deque<std::pair<State, State>> queue{{a.init, b.init}};
    parent[{a.init, b.init}] = {{a.init, b.init}, 0};
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        if (a.output_label(cur.first) != b.output_label(cur.second)) {
            Word w;
            for (auto p = cur; p != std::make_pair(a.init, b.init); p = parent[p].first) w.push_back(parent[p].second);
            return reversed(w);
        }
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            const std::pair<State, State> next{a.step(cur.first, s), b.step(cur.second, s)};
            if (parent.try_emplace(next, std::make_pair(cur, s)).second) queue.push_back(next);
        }
    }
    return std::nullopt;
}

int cmd_run(const Options& o, std::ostream& out) {
    const AutomatonDoc doc = load(o);
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, MooreAutomaton>) {
                out << a.outputs[run(a, a.alphabet.parse_word(o.word))] << "\n";
            } else if constexpr (std::is_same_v<T, Nfa>) {
                out << (nfa_accepts(a, a.alphabet.parse_word(o.word)) ? "accept" : "reject") << "\n";
            } else if constexpr (std::is_same_v<T, AnyWeighted>) {
                std::visit([&](const auto& w) { out << to_string(eval_series(w, w.alphabet.parse_word(o.word))) << "\n"; },
                           a);
            } else if constexpr (std::is_same_v<T, AlternatingAutomaton>) {
                out << (afa_accepts(a, a.alphabet.parse_word(o.word)) ? "accept" : "reject") << "\n";
            } else {
                if (!a.initial) throw UsageError("run on a dkm needs an \"initial\" state");
                State s = *a.initial;
                for (Symbol l : a.alphabet.parse_word(o.word)) s = a.delta[l][s];
                out << subset_json(a.gamma[s], a.obs).dump() << "\n";
            }
        },
        doc);
    return kExitOk;
}

int cmd_reverse(const Options& o, std::ostream& out) {
    const AutomatonDoc doc = load(o);
    if (const auto* m = std::get_if<MooreAutomaton>(&doc)) {
        if (m->is_dfa())
            print(out, reverse(*m));
        else
            print(out, dual_automaton(*m, o.max_states));
    } else if (const auto* n = std::get_if<Nfa>(&doc)) {
        print(out, reverse(*n));
    } else if (const auto* w = std::get_if<AnyWeighted>(&doc)) {
        with_ring(*w, "reverse", [&](const auto& r) { print(out, AnyWeighted(dual_wa(r))); });
    } else if (const auto* a = std::get_if<AlternatingAutomaton>(&doc)) {
        print(out, reverse_dfa(*a, o.max_afa_n));
    } else {
        throw UsageError("reverse is not defined for dkm files");
    }
    return kExitOk;
}

int cmd_determinize(const Options& o, std::ostream& out) {
    const AutomatonDoc doc = load(o);
    if (const auto* n = std::get_if<Nfa>(&doc)) {
        print(out, determinise(*n, o.max_states));
    } else if (const auto* w = std::get_if<AnyWeighted>(&doc);
               w && std::holds_alternative<WeightedAutomaton<BooleanSemiring>>(*w)) {
        print(out, determinise(to_nfa(std::get<WeightedAutomaton<BooleanSemiring>>(*w)), o.max_states));
    } else if (const auto* m = std::get_if<MooreAutomaton>(&doc)) {
        print(out, *m);
    } else {
        throw UsageError("determinize expects an nfa, dfa/moore or Boolean weighted file");
    }
    return kExitOk;
}

int cmd_reach(const Options& o, std::ostream& out) {
    const AutomatonDoc doc = load(o);
    if (const auto* m = std::get_if<MooreAutomaton>(&doc)) {
        print(out, reach(*m));
    } else if (const auto* w = std::get_if<AnyWeighted>(&doc)) {
        with_ring(*w, "reach", [&](const auto& r) { print(out, AnyWeighted(reach_restrict(r).automaton)); });
    } else if (const auto* a = std::get_if<AlternatingAutomaton>(&doc)) {
        print(out, reach(reverse_dfa(*a, o.max_afa_n)));
    } else {
        throw UsageError("reach expects a dfa, moore, weighted or afa file");
    }
    return kExitOk;
}

MooreAutomaton minimise_moore(const MooreAutomaton& m, const std::string& method, std::size_t max_states) {
    if (method == "brzozowski") return brzozowski_minimise(m, max_states);
    if (method == "refine") return partition_refinement_minimise(m);
    // duality: quotient of the model by the atoms of its definable subsets.
    const Dkm k = m.is_dfa() ? dkm_from_dfa(m) : dkm_from_moore(m);
    return reach(moore_from_dkm(minimise_dkm(k), m.outputs));
}

int cmd_minimize(const Options& o, std::ostream& out) {
    const AutomatonDoc doc = load(o);
    const std::string& method = o.method;
    if (const auto* m = std::get_if<MooreAutomaton>(&doc)) {
        print(out, minimise_moore(*m, method.empty() ? "brzozowski" : method, o.max_states));
    } else if (const auto* n = std::get_if<Nfa>(&doc)) {
        print(out, minimise_moore(determinise(*n, o.max_states), method.empty() ? "brzozowski" : method, o.max_states));
    } else if (const auto* w = std::get_if<AnyWeighted>(&doc)) {
        if (method == "refine") throw UsageError("--method refine is not available for weighted automata");
        if (const auto* b = std::get_if<WeightedAutomaton<BooleanSemiring>>(w)) {
            print(out, brzozowski_minimise(determinise(to_nfa(*b), o.max_states), o.max_states));
        } else {
            with_ring(*w, "minimize", [&](const auto& r) { print(out, AnyWeighted(minimise_wa(r).automaton)); });
        }
    } else if (const auto* a = std::get_if<AlternatingAutomaton>(&doc)) {
        const MooreAutomaton dfa = minimal_dfa_for_afa(*a, o.max_afa_n);
        print(out, method == "refine" ? partition_refinement_minimise(dfa) : dfa);
    } else {
        const Dkm& k = std::get<Dkm>(doc);
        if (method == "refine") {
            print(out, quotient_dkm(k, bisimulation_oracle(k)));
        } else if (method.empty() || method == "duality") {
            print(out, minimise_dkm(k));
        } else {
            throw UsageError("dkm files support --method duality or refine");
        }
    }
    return kExitOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
    const AutomatonDoc doc = load(o);
    if (const auto* m = std::get_if<MooreAutomaton>(&doc)) {
        print(out, dual_automaton(*m, o.max_states));
    } else if (const auto* w = std::get_if<AnyWeighted>(&doc)) {
        with_ring(*w, "dual", [&](const auto& r) { print(out, AnyWeighted(dual_wa(r))); });
    } else {
        throw UsageError("dual expects a dfa, moore or weighted file");
    }
    return kExitOk;
}

template <Semiring S>
std::optional<Word> bounded_difference(const WeightedAutomaton<S>& a, const WeightedAutomaton<S>& b, std::size_t len) {
    if (a.alphabet != b.alphabet) throw UsageError("automata have different alphabets");
    for (const Word& w : words_up_to(a.alphabet.size(), len))
        if (!S::eq(eval_series(a, w), eval_series(b, w))) return w;
    return std::nullopt;
}

int cmd_equiv(const Options& o, std::ostream& out) {
    const AutomatonDoc first = load(o, 0);
    const AutomatonDoc second = load(o, 1);
    std::optional<Word> witness;
    Alphabet alphabet;

    const auto* w1 = std::get_if<AnyWeighted>(&first);
    const auto* w2 = std::get_if<AnyWeighted>(&second);
    const bool bool_weighted1 = w1 && std::holds_alternative<WeightedAutomaton<BooleanSemiring>>(*w1);
    const bool bool_weighted2 = w2 && std::holds_alternative<WeightedAutomaton<BooleanSemiring>>(*w2);
    if ((w1 && !bool_weighted1) || (w2 && !bool_weighted2)) {
        if (!w1 || !w2 || w1->index() != w2->index())
            throw UsageError("equiv compares weighted automata only over the same semiring");
        std::visit(
            [&](const auto& a) {
                using W = std::decay_t<decltype(a)>;
                const auto& b = std::get<W>(*w2);
                witness = bounded_difference(a, b, o.max_len);
                alphabet = a.alphabet;
            },
            *w1);
        out << (witness ? "not equivalent" : "equivalent") << " (words up to length " << o.max_len << ")";
    } else {
        const auto a = as_language_dfa(first, o);
        const auto b = as_language_dfa(second, o);
        if (!a || !b) throw UsageError("equiv: unsupported file types");
        if (a->alphabet != b->alphabet) throw UsageError("automata have different alphabets");
        const bool same = equiv_exact(*a, *b);
        if (!same) witness = distinguishing_word(*a, *b);
        alphabet = a->alphabet;
        out << (same ? "equivalent" : "not equivalent");
        if (!same && !witness) witness = Word{};
    }
    if (witness) out << "; counterexample: \"" << alphabet.format_word(*witness) << "\"";
    out << "\n";
    return witness ? kExitNegative : kExitOk;
}

int cmd_trace_eval(const Options& o, std::ostream& out) {
    const Dkm k = as_dkm(load(o), "trace-eval");
    out << subset_json(eval_trace(k, parse_trace_formula(k, o.formula)), k.state_names).dump() << "\n";
    return kExitOk;
}

int cmd_closure(const Options& o, std::ostream& out) {
    const Dkm k = as_dkm(load(o), "closure");
    json family = json::array();
    for (const auto& s : definable_closure(k)) family.push_back(subset_json(s, k.state_names));
    out << family.dump() << "\n";
    return kExitOk;
}

int cmd_hankel(const Options& o, std::ostream& out) {
    const AutomatonDoc doc = load(o);
    const auto* w = std::get_if<AnyWeighted>(&doc);
    if (!w) throw UsageError("hankel expects a weighted file");
    out << with_ring(*w, "hankel", [&](const auto& r) { return hankel_rank_oracle(r, o.hankel_len); }) << "\n";
    return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
    const AutomatonDoc doc = load(o);
    out << "type: " << type_name(doc) << "\n";
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, AnyWeighted>)
                std::visit([&](const auto& w) { out << "alphabet: " << w.alphabet.size() << "\n"; }, a);
            else
                out << "alphabet: " << a.alphabet.size() << "\n";
            if constexpr (std::is_same_v<T, MooreAutomaton>) {
                out << "states: " << a.size() << "\n";
                out << "outputs: " << a.outputs.size() << "\n";
                out << "reachable: " << reach(a).size() << "\n";
                out << "minimal: " << partition_refinement_minimise(a).size() << "\n";
            } else if constexpr (std::is_same_v<T, Nfa>) {
                std::size_t arcs = 0;
                for (const auto& row : a.trans)
                    for (const auto& s : row) arcs += s.size();
                out << "states: " << a.n << "\narcs: " << arcs << "\n";
            } else if constexpr (std::is_same_v<T, AnyWeighted>) {
                out << "semiring: " << semiring_name(a) << "\n";
                std::visit([&](const auto& w) { out << "states: " << w.n << "\n"; }, a);
            } else if constexpr (std::is_same_v<T, AlternatingAutomaton>) {
                out << "states: " << a.n << "\n";
            } else {
                out << "states: " << a.size() << "\nobservations: " << a.obs.size() << "\n";
                out << "bisimulation classes: " << bisimulation_oracle(a).block_count << "\n";
            }
        },
        doc);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Duality-based minimisation of Moore, weighted, alternating automata and Kripke models", "dualmin"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-states", o.max_states, "Bound on materialised states")->envname("DUALMIN_MAX_STATES");
    app.add_option("--max-afa-states", o.max_afa_n, "Largest AFA whose 2^n subsets may be materialised");
    app.add_option("--semiring", o.semiring, "Override the semiring of weighted files")
        ->check(CLI::IsMember({"bool", "int", "rational", "tropical"}));
    app.add_option("--seed", o.seed, "Random seed for selftest");

    std::map<std::string, int (*)(const Options&, std::ostream&)> handlers;
    auto verb = [&](const char* name, const char* help, std::size_t files, int (*handler)(const Options&, std::ostream&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("files", o.files, files == 1 ? "Automaton file" : "Automaton files")
            ->required()
            ->expected(static_cast<int>(files));
        handlers[name] = handler;
        return sub;
    };

    verb("run", "Output / weight / verdict on a word", 1, cmd_run)->add_option("-w,--word", o.word, "Word")->required();
    verb("reverse", "Reverse the automaton", 1, cmd_reverse);
    verb("determinize", "Subset construction", 1, cmd_determinize);
    verb("reach", "Reachable part", 1, cmd_reach);
    verb("minimize", "Minimise", 1, cmd_minimize)
        ->add_option("--method", o.method, "brzozowski, refine or duality")
        ->check(CLI::IsMember({"brzozowski", "refine", "duality"}));
    verb("dual", "Dual automaton (reversed language)", 1, cmd_dual);
    verb("equiv", "Language / series equivalence", 2, cmd_equiv)
        ->add_option("--max-len", o.max_len, "Word length bound for weighted comparisons");
    verb("trace-eval", "Evaluate a trace formula such as <a><b>p", 1, cmd_trace_eval)
        ->add_option("-f,--formula", o.formula, "Trace formula")
        ->required();
    verb("closure", "Trace-definable subsets", 1, cmd_closure);
    verb("hankel", "Rank of the Hankel block", 1, cmd_hankel)->add_option("-L", o.hankel_len, "Word length")->required();
    verb("stats", "Summary", 1, cmd_stats);
    CLI::App* selftest = app.add_subcommand("selftest", "Run the differential property suites");
    selftest->add_option("--cases", o.cases, "Cases per suite");

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "dualmin: " << e.what() << "\n";
        if (e.get_exit_code() == 0) return kExitOk;
        return kExitUsage;
    }

    try {
        if (selftest->parsed()) return run_selftest(o.seed, o.cases, out) ? kExitOk : kExitNegative;
        for (const auto& [name, handler] : handlers)
            if (app.got_subcommand(name)) return handler(o, out);
    } catch (const StateBoundError& e) {
        err << "dualmin: state bound exceeded: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "dualmin: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace dualmin::cli
