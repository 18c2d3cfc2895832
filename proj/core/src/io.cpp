#include "dualmin/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dualmin {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) { throw ParseError(path, message); }

const json& field(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path + "/" + key, "required field is missing");
    return *it;
}

std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_string(j[k], path + "/" + std::to_string(k)));
    return out;
}

Alphabet parse_alphabet(const json& doc) {
    try {
        return Alphabet(string_list(field(doc, "", "alphabet"), "/alphabet"));
    } catch (const DimensionError& e) {
        fail("/alphabet", e.what());
    }
}

// Name -> index lookup for states (or observations) declared in a list.
class NameTable {
public:
    NameTable(std::vector<std::string> names, const std::string& path, const char* what) : names_(std::move(names)) {
        for (std::size_t k = 0; k < names_.size(); ++k)
            if (!index_.emplace(names_[k], k).second) fail(path, std::string("duplicate ") + what + " '" + names_[k] + "'");
        what_ = what;
    }

    std::size_t operator()(const json& j, const std::string& path) const {
        const std::string name = as_string(j, path);
        auto it = index_.find(name);
        if (it == index_.end()) fail(path, "undeclared " + what_ + " '" + name + "'");
        return it->second;
    }

    StateSet set(const json& j, const std::string& path) const {
        if (!j.is_array()) fail(path, "expected an array of names");
        StateSet out;
        for (std::size_t k = 0; k < j.size(); ++k) out.push_back((*this)(j[k], path + "/" + std::to_string(k)));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
    std::string what_;
};

NameTable parse_states(const json& doc) {
    auto names = string_list(field(doc, "", "states"), "/states");
    if (names.empty()) fail("/states", "at least one state is required");
    return NameTable(std::move(names), "/states", "state");
}

// transitions: {letter: {state: target}} with a total map per letter.
std::vector<std::vector<State>> parse_functional(const json& doc, const Alphabet& alphabet, const NameTable& states) {
    const json& t = field(doc, "", "transitions");
    if (!t.is_object()) fail("/transitions", "expected an object keyed by letter");
    std::vector<std::vector<State>> out(alphabet.size(), std::vector<State>(states.size(), states.size()));
    for (auto it = t.begin(); it != t.end(); ++it) {
        const std::string path = "/transitions/" + it.key();
        const auto letter = alphabet.find(it.key());
        if (!letter) fail(path, "letter not in alphabet");
        if (!it->is_object()) fail(path, "expected an object keyed by state");
        for (auto arc = it->begin(); arc != it->end(); ++arc) {
            const std::string arc_path = path + "/" + arc.key();
            const State src = states(json(arc.key()), arc_path);
            out[*letter][src] = states(*arc, arc_path);
        }
    }
    for (Symbol a = 0; a < alphabet.size(); ++a)
        for (State x = 0; x < states.size(); ++x)
            if (out[a][x] == states.size())
                fail("/transitions/" + alphabet.name(a), "no successor for state '" + states.names()[x] + "'");
    return out;
}

MooreAutomaton parse_moore(const json& doc, bool dfa) {
    MooreAutomaton m;
    m.alphabet = parse_alphabet(doc);
    const NameTable states = parse_states(doc);
    m.state_names = states.names();
    m.init = states(field(doc, "", "initial"), "/initial");
    m.trans = parse_functional(doc, m.alphabet, states);
    if (dfa) {
        m.outputs = dfa_outputs();
        m.out.assign(states.size(), 0);
        for (State x : states.set(field(doc, "", "finals"), "/finals")) m.out[x] = 1;
    } else {
        const NameTable outputs(string_list(field(doc, "", "outputs"), "/outputs"), "/outputs", "output");
        if (outputs.size() == 0) fail("/outputs", "output set is empty");
        m.outputs = outputs.names();
        const json& o = field(doc, "", "output");
        if (!o.is_object()) fail("/output", "expected an object keyed by state");
        m.out.assign(states.size(), outputs.size());
        for (auto it = o.begin(); it != o.end(); ++it) {
            const std::string path = "/output/" + it.key();
            m.out[states(json(it.key()), path)] = outputs(*it, path);
        }
        for (State x = 0; x < states.size(); ++x)
            if (m.out[x] == outputs.size()) fail("/output", "no output for state '" + states.names()[x] + "'");
    }
    m.validate();
    return m;
}

Nfa parse_nfa(const json& doc) {
    Nfa n;
    n.alphabet = parse_alphabet(doc);
    const NameTable states = parse_states(doc);
    n.n = states.size();
    n.state_names = states.names();
    n.inits = states.set(field(doc, "", "initial"), "/initial");
    n.finals = states.set(field(doc, "", "finals"), "/finals");
    n.trans.assign(n.alphabet.size(), std::vector<StateSet>(n.n));
    const json& t = field(doc, "", "transitions");
    if (!t.is_object()) fail("/transitions", "expected an object keyed by letter");
    for (auto it = t.begin(); it != t.end(); ++it) {
        const std::string path = "/transitions/" + it.key();
        const auto letter = n.alphabet.find(it.key());
        if (!letter) fail(path, "letter not in alphabet");
        if (!it->is_object()) fail(path, "expected an object keyed by state");
        for (auto arc = it->begin(); arc != it->end(); ++arc) {
            const std::string arc_path = path + "/" + arc.key();
            n.trans[*letter][states(json(arc.key()), arc_path)] = states.set(*arc, arc_path);
        }
    }
    n.validate();
    return n;
}

// Scalar parsing per semiring.
Integer parse_integer(const json& j, const std::string& path) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                                             : Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) fail(path, "malformed integer '" + j.get<std::string>() + "'");
        return v;
    }
    fail(path, "expected an integer");
}

Boolean parse_scalar(BooleanSemiring, const json& j, const std::string& path) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v == 0 || v == 1) return v == 1;
    }
    fail(path, "expected a Boolean (true/false/0/1)");
}

Integer parse_scalar(IntegerSemiring, const json& j, const std::string& path) { return parse_integer(j, path); }

Rational parse_scalar(RationalSemiring, const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(parse_integer(j, path));
    if (!j.is_string()) fail(path, "expected a rational \"p/q\" string or an integer");
    const std::string text = j.get<std::string>();
    const auto slash = text.find('/');
    Integer num, den = 1;
    if (num.set_str(text.substr(0, slash), 10) != 0) fail(path, "malformed rational '" + text + "'");
    if (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0)
        fail(path, "malformed rational '" + text + "'");
    if (den == 0) fail(path, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Tropical parse_scalar(TropicalSemiring, const json& j, const std::string& path) {
    if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "∞")) return Tropical::inf();
    Integer v = parse_integer(j, path);
    if (v < 0) fail(path, "tropical weights are natural numbers or \"inf\"");
    return Tropical::of(std::move(v));
}

json emit_scalar(Boolean v) { return v.value ? 1 : 0; }

json emit_scalar(const Integer& v) {
    static const Integer limit = Integer(1) << 53;
    if (abs(v) < limit) return json(v.get_si());
    return v.get_str();
}

json emit_scalar(const Rational& v) { return to_string(v); }

json emit_scalar(const Tropical& v) { return v.infinite ? json("inf") : emit_scalar(v.value); }

template <Semiring S>
Vector<S> parse_vector(const json& j, const std::string& path, std::size_t n) {
    if (!j.is_array()) fail(path, "expected an array");
    if (j.size() != n)
        fail(path, "vector has length " + std::to_string(j.size()) + ", expected " + std::to_string(n));
    Vector<S> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(parse_scalar(S{}, j[k], path + "/" + std::to_string(k)));
    return v;
}

template <Semiring S>
WeightedAutomaton<S> parse_weighted_as(const json& doc) {
    WeightedAutomaton<S> w;
    w.alphabet = parse_alphabet(doc);
    if (doc.contains("states")) {
        const NameTable states = parse_states(doc);
        w.n = states.size();
        w.state_names = states.names();
    } else {
        const json& d = field(doc, "", "dimension");
        if (!d.is_number_unsigned()) fail("/dimension", "expected a natural number");
        w.n = d.get<std::size_t>();
    }
    w.initial = parse_vector<S>(field(doc, "", "initial"), "/initial", w.n);
    w.final_weights = parse_vector<S>(field(doc, "", "final"), "/final", w.n);
    const json& t = field(doc, "", "transitions");
    if (!t.is_object()) fail("/transitions", "expected an object keyed by letter");
    w.trans.assign(w.alphabet.size(), Matrix<S>(w.n, w.n));
    std::vector<bool> seen(w.alphabet.size(), false);
    for (auto it = t.begin(); it != t.end(); ++it) {
        const std::string path = "/transitions/" + it.key();
        const auto letter = w.alphabet.find(it.key());
        if (!letter) fail(path, "letter not in alphabet");
        if (!it->is_array()) fail(path, "expected a matrix (array of rows)");
        const std::size_t rows = it->size();
        for (std::size_t r = 0; r < rows; ++r) {
            if (!(*it)[r].is_array()) fail(path + "/" + std::to_string(r), "expected a row array");
            const std::size_t cols = (*it)[r].size();
            if (rows != w.n || cols != w.n)
                fail(path, "matrix for letter '" + it.key() + "' is " + std::to_string(rows) + "x" +
                               std::to_string(cols) + ", expected " + std::to_string(w.n) + "x" +
                               std::to_string(w.n));
        }
        if (rows != w.n)
            fail(path, "matrix for letter '" + it.key() + "' has " + std::to_string(rows) + " rows, expected " +
                           std::to_string(w.n));
        for (std::size_t r = 0; r < w.n; ++r)
            for (std::size_t c = 0; c < w.n; ++c)
                w.trans[*letter](r, c) =
                    parse_scalar(S{}, (*it)[r][c], path + "/" + std::to_string(r) + "/" + std::to_string(c));
        seen[*letter] = true;
    }
    for (Symbol a = 0; a < w.alphabet.size(); ++a)
        if (!seen[a]) fail("/transitions", "no matrix for letter '" + w.alphabet.name(a) + "'");
    w.validate();
    return w;
}

AnyWeighted parse_weighted(const json& doc, const std::optional<std::string>& override_name) {
    const std::string name = override_name ? *override_name : as_string(field(doc, "", "semiring"), "/semiring");
    if (name == BooleanSemiring::name) return parse_weighted_as<BooleanSemiring>(doc);
    if (name == IntegerSemiring::name) return parse_weighted_as<IntegerSemiring>(doc);
    if (name == RationalSemiring::name) return parse_weighted_as<RationalSemiring>(doc);
    if (name == TropicalSemiring::name) return parse_weighted_as<TropicalSemiring>(doc);
    fail("/semiring", "unknown semiring '" + name + "' (expected bool, int, rational or tropical)");
}

BoolFun parse_condition(const json& j, const std::string& path, const NameTable& states) {
    if (j.is_string()) {
        try {
            return compile_formula(j.get<std::string>(), states.names());
        } catch (const ParseError& e) {
            fail(path, e.what());
        }
    }
    if (!j.is_array()) fail(path, "expected a formula string or a list of state subsets");
    std::vector<Mask> subsets;
    for (std::size_t k = 0; k < j.size(); ++k)
        subsets.push_back(to_mask(states.set(j[k], path + "/" + std::to_string(k))));
    return BoolFun::from_subsets(states.size(), subsets);
}

AlternatingAutomaton parse_afa(const json& doc) {
    AlternatingAutomaton a;
    a.alphabet = parse_alphabet(doc);
    const NameTable states = parse_states(doc);
    if (states.size() > kHardMaxAfaStates) fail("/states", "alternating automata are limited to 30 states");
    a.n = states.size();
    a.state_names = states.names();
    a.finals = to_mask(states.set(field(doc, "", "finals"), "/finals"));
    a.iota = parse_condition(field(doc, "", "acceptance"), "/acceptance", states);
    a.delta.assign(a.alphabet.size(), std::vector<BoolFun>(a.n, BoolFun::constant(a.n, false)));
    const json& t = field(doc, "", "transitions");
    if (!t.is_object()) fail("/transitions", "expected an object keyed by letter");
    for (auto it = t.begin(); it != t.end(); ++it) {
        const std::string path = "/transitions/" + it.key();
        const auto letter = a.alphabet.find(it.key());
        if (!letter) fail(path, "letter not in alphabet");
        if (!it->is_object()) fail(path, "expected an object keyed by state");
        for (auto c = it->begin(); c != it->end(); ++c) {
            const std::string cpath = path + "/" + c.key();
            a.delta[*letter][states(json(c.key()), cpath)] = parse_condition(*c, cpath, states);
        }
    }
    a.validate();
    return a;
}

Dkm parse_dkm(const json& doc) {
    Dkm k;
    k.alphabet = parse_alphabet(doc);
    const NameTable states = parse_states(doc);
    k.state_names = states.names();
    const NameTable obs(string_list(field(doc, "", "obs"), "/obs"), "/obs", "observation");
    k.obs = obs.names();
    k.gamma.assign(states.size(), {});
    const json& g = field(doc, "", "gamma");
    if (!g.is_object()) fail("/gamma", "expected an object keyed by state");
    for (auto it = g.begin(); it != g.end(); ++it) {
        const std::string path = "/gamma/" + it.key();
        k.gamma[states(json(it.key()), path)] = obs.set(*it, path);
    }
    k.delta = parse_functional(doc, k.alphabet, states);
    if (doc.contains("initial") && !doc["initial"].is_null()) k.initial = states(doc["initial"], "/initial");
    k.validate();
    return k;
}

std::vector<std::string> names_or_default(const std::vector<std::string>& names, std::size_t n, const char* prefix) {
    if (names.size() == n) return names;
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
    return out;
}

json names_of(const StateSet& s, const std::vector<std::string>& names) {
    json out = json::array();
    for (State x : s) out.push_back(names[x]);
    return out;
}

json emit(const MooreAutomaton& m) {
    const auto names = names_or_default(m.state_names, m.size(), "q");
    json doc;
    doc["type"] = m.is_dfa() ? "dfa" : "moore";
    doc["alphabet"] = m.alphabet.symbols();
    doc["states"] = names;
    doc["initial"] = names[m.init];
    json t = json::object();
    for (Symbol a = 0; a < m.alphabet.size(); ++a) {
        json row = json::object();
        for (State x = 0; x < m.size(); ++x) row[names[x]] = names[m.step(x, a)];
        t[m.alphabet.name(a)] = row;
    }
    doc["transitions"] = t;
    if (m.is_dfa()) {
        StateSet finals;
        for (State x = 0; x < m.size(); ++x)
            if (m.accepting(x)) finals.push_back(x);
        doc["finals"] = names_of(finals, names);
    } else {
        doc["outputs"] = m.outputs;
        json o = json::object();
        for (State x = 0; x < m.size(); ++x) o[names[x]] = m.output_label(x);
        doc["output"] = o;
    }
    return doc;
}

json emit(const Nfa& n) {
    const auto names = names_or_default(n.state_names, n.n, "q");
    json doc;
    doc["type"] = "nfa";
    doc["alphabet"] = n.alphabet.symbols();
    doc["states"] = names;
    doc["initial"] = names_of(n.inits, names);
    doc["finals"] = names_of(n.finals, names);
    json t = json::object();
    for (Symbol a = 0; a < n.alphabet.size(); ++a) {
        json row = json::object();
        for (State x = 0; x < n.n; ++x)
            if (!n.trans[a][x].empty()) row[names[x]] = names_of(n.trans[a][x], names);
        t[n.alphabet.name(a)] = row;
    }
    doc["transitions"] = t;
    return doc;
}

template <Semiring S>
json emit(const WeightedAutomaton<S>& w) {
    json doc;
    doc["type"] = "weighted";
    doc["semiring"] = std::string(S::name);
    doc["alphabet"] = w.alphabet.symbols();
    doc["states"] = names_or_default(w.state_names, w.n, "q");
    auto vec = [](const Vector<S>& v) {
        json out = json::array();
        for (const auto& x : v) out.push_back(emit_scalar(x));
        return out;
    };
    doc["initial"] = vec(w.initial);
    doc["final"] = vec(w.final_weights);
    json t = json::object();
    for (Symbol a = 0; a < w.alphabet.size(); ++a) {
        json rows = json::array();
        for (std::size_t r = 0; r < w.n; ++r) rows.push_back(vec(w.trans[a].row(r)));
        t[w.alphabet.name(a)] = rows;
    }
    doc["transitions"] = t;
    return doc;
}

// Formula by Shannon expansion on the highest free variable; `base` fixes the
// variables above `k`. Cofactors that agree drop the variable.
std::string render_condition(const BoolFun& f, std::size_t k, Mask base, const std::vector<std::string>& names) {
    const Mask span = Mask{1} << k;
    bool any = false, all = true;
    for (Mask low = 0; low < span; ++low) {
        const bool v = f(base | low);
        any = any || v;
        all = all && v;
    }
    if (!any) return "false";
    if (all) return "true";
    const Mask bit = Mask{1} << (k - 1);
    bool same = true;
    for (Mask low = 0; low < bit && same; ++low) same = f(base | low) == f(base | bit | low);
    if (same) return render_condition(f, k - 1, base, names);
    const std::string x = names[k - 1];
    const std::string hi = render_condition(f, k - 1, base | bit, names);
    const std::string lo = render_condition(f, k - 1, base, names);
    auto wrap = [](const std::string& t) { return t.find(' ') == std::string::npos ? t : "(" + t + ")"; };
    if (hi == "true" && lo == "false") return x;
    if (hi == "false" && lo == "true") return "!" + x;
    if (hi == "true") return x + " | " + wrap(lo);
    if (lo == "false") return x + " & " + wrap(hi);
    if (hi == "false") return "!" + x + " & " + wrap(lo);
    if (lo == "true") return "!" + x + " | " + wrap(hi);
    return "(" + x + " & " + wrap(hi) + ") | (!" + x + " & " + wrap(lo) + ")";
}

bool formula_safe(const std::vector<std::string>& names) {
    static const std::set<std::string> reserved{"and", "or", "not", "true", "false"};
    for (const auto& n : names) {
        if (n.empty() || reserved.count(n)) return false;
        for (unsigned char c : n)
            if (!std::isalnum(c) && c != '_' && c != '.') return false;
    }
    return true;
}

// Conditions are written as formulas when the state names allow it, otherwise
// as the explicit list of satisfying subsets.
json emit_condition(const BoolFun& f, const std::vector<std::string>& names) {
    if (formula_safe(names)) return render_condition(f, f.arity(), 0, names);
    json out = json::array();
    for (Mask m : f.subsets()) out.push_back(names_of(to_state_set(m, f.arity()), names));
    return out;
}

json emit(const AlternatingAutomaton& a) {
    const auto names = names_or_default(a.state_names, a.n, "q");
    json doc;
    doc["type"] = "afa";
    doc["alphabet"] = a.alphabet.symbols();
    doc["states"] = names;
    doc["finals"] = names_of(to_state_set(a.finals, a.n), names);
    doc["acceptance"] = emit_condition(a.iota, names);
    json t = json::object();
    for (Symbol l = 0; l < a.alphabet.size(); ++l) {
        json row = json::object();
        for (State s = 0; s < a.n; ++s) row[names[s]] = emit_condition(a.delta[l][s], names);
        t[a.alphabet.name(l)] = row;
    }
    doc["transitions"] = t;
    return doc;
}

json emit(const Dkm& k) {
    const auto names = names_or_default(k.state_names, k.size(), "s");
    json doc;
    doc["type"] = "dkm";
    doc["alphabet"] = k.alphabet.symbols();
    doc["states"] = names;
    doc["obs"] = k.obs;
    json g = json::object();
    for (State s = 0; s < k.size(); ++s) g[names[s]] = names_of(k.gamma[s], k.obs);
    doc["gamma"] = g;
    json t = json::object();
    for (Symbol a = 0; a < k.alphabet.size(); ++a) {
        json row = json::object();
        for (State s = 0; s < k.size(); ++s) row[names[s]] = names[k.delta[a][s]];
        t[k.alphabet.name(a)] = row;
    }
    doc["transitions"] = t;
    if (k.initial) doc["initial"] = names[*k.initial];
    return doc;
}

}  // namespace

AutomatonDoc parse_automaton(std::string_view text, const std::optional<std::string>& semiring) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("", std::string("invalid JSON: ") + e.what());
    }
    const std::string type = as_string(field(doc, "", "type"), "/type");
    try {
        if (type == "dfa") return parse_moore(doc, true);
        if (type == "moore") return parse_moore(doc, false);
        if (type == "nfa") return parse_nfa(doc);
        if (type == "weighted") return parse_weighted(doc, semiring);
        if (type == "afa") return parse_afa(doc);
        if (type == "dkm") return parse_dkm(doc);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail("", e.what());
    }
    fail("/type", "unknown automaton type '" + type + "'");
}

AutomatonDoc load_automaton(const std::string& path, const std::optional<std::string>& semiring) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_automaton(buf.str(), semiring);
}

std::string emit_automaton(const AutomatonDoc& doc) {
    const json j = std::visit(
        [](const auto& a) -> json {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, AnyWeighted>)
                return std::visit([](const auto& w) { return emit(w); }, a);
            else
                return emit(a);
        },
        doc);
    return j.dump(2) + "\n";
}

std::string type_name(const AutomatonDoc& doc) {
    return std::visit(
        [](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, MooreAutomaton>)
                return a.is_dfa() ? "dfa" : "moore";
            else if constexpr (std::is_same_v<T, Nfa>)
                return "nfa";
            else if constexpr (std::is_same_v<T, AnyWeighted>)
                return "weighted";
            else if constexpr (std::is_same_v<T, AlternatingAutomaton>)
                return "afa";
            else
                return "dkm";
        },
        doc);
}

std::string semiring_name(const AnyWeighted& w) {
    return std::visit(
        [](const auto& a) {
            using S = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<S, WeightedAutomaton<BooleanSemiring>>)
                return std::string(BooleanSemiring::name);
            else if constexpr (std::is_same_v<S, WeightedAutomaton<IntegerSemiring>>)
                return std::string(IntegerSemiring::name);
            else if constexpr (std::is_same_v<S, WeightedAutomaton<RationalSemiring>>)
                return std::string(RationalSemiring::name);
            else
                return std::string(TropicalSemiring::name);
        },
        w);
}

}  // namespace dualmin
