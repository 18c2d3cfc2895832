#include "dualmin/alternating.hpp"

#include <cctype>

#include "dualmin/brzozowski.hpp"

namespace dualmin {

BoolFun::BoolFun(std::size_t n) : n_(n) {
    if (n > kHardMaxAfaStates) throw StateBoundError("BoolFun over too many variables", kHardMaxAfaStates);
    table_.assign(std::size_t{1} << n, false);
}

BoolFun BoolFun::constant(std::size_t n, bool value) {
    BoolFun f(n);
    if (value) f.table_.assign(f.table_.size(), true);
    return f;
}

BoolFun BoolFun::from_subsets(std::size_t n, const std::vector<Mask>& satisfying) {
    BoolFun f(n);
    for (Mask m : satisfying) {
        if (m >= f.table_.size()) throw DimensionError("subset mentions a state outside the automaton");
        f.table_[m] = true;
    }
    return f;
}

BoolFun BoolFun::variable(std::size_t n, State x) {
    if (x >= n) throw DimensionError("variable out of range");
    BoolFun f(n);
    for (Mask m = 0; m < f.table_.size(); ++m) f.table_[m] = (m >> x & 1U) != 0;
    return f;
}

std::vector<Mask> BoolFun::subsets() const {
    std::vector<Mask> out;
    for (Mask m = 0; m < table_.size(); ++m)
        if (table_[m]) out.push_back(m);
    return out;
}

std::string AlternatingAutomaton::state_name(State x) const {
    return x < state_names.size() ? state_names[x] : "q" + std::to_string(x);
}

void AlternatingAutomaton::validate() const {
    if (n > kHardMaxAfaStates) throw StateBoundError("AFA has too many states", kHardMaxAfaStates);
    if (delta.size() != alphabet.size()) throw DimensionError("AFA transition count differs from alphabet size");
    for (const auto& per_letter : delta) {
        if (per_letter.size() != n) throw DimensionError("AFA transition table has wrong size");
        for (const auto& f : per_letter)
            if (f.arity() != n) throw DimensionError("AFA transition condition has wrong arity");
    }
    if (iota.arity() != n) throw DimensionError("AFA acceptance condition has wrong arity");
    if (n < 64 && (finals >> n) != 0) throw DimensionError("AFA final set mentions unknown states");
    if (!state_names.empty() && state_names.size() != n) throw DimensionError("state name count differs from size");
}

Mask to_mask(const StateSet& s) {
    Mask m = 0;
    for (State x : s) m |= Mask{1} << x;
    return m;
}

StateSet to_state_set(Mask m, std::size_t n) {
    StateSet s;
    for (State x = 0; x < n; ++x)
        if (m >> x & 1U) s.push_back(x);
    return s;
}

namespace {

class FormulaParser {
public:
    FormulaParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

    BoolFun parse() {
        BoolFun f = parse_or();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    BoolFun parse_or() {
        BoolFun f = parse_and();
        while (accept_operator("|", "or")) combine(f, parse_and(), false);
        return f;
    }

    BoolFun parse_and() {
        BoolFun f = parse_not();
        while (accept_operator("&", "and")) combine(f, parse_not(), true);
        return f;
    }

    BoolFun parse_not() {
        if (accept_operator("!", "not")) {
            BoolFun f = parse_not();
            for (Mask m = 0; m < Mask{1} << names_.size(); ++m) f.set(m, !f(m));
            return f;
        }
        return parse_atom();
    }

    BoolFun parse_atom() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            BoolFun f = parse_or();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return f;
        }
        const std::size_t start = pos_;
        const std::string word = identifier();
        if (word.empty()) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                                   : "unexpected end of formula");
        for (State x = 0; x < names_.size(); ++x)
            if (names_[x] == word) return BoolFun::variable(names_.size(), x);
        if (word == "true" || word == "1") return BoolFun::constant(names_.size(), true);
        if (word == "false" || word == "0") return BoolFun::constant(names_.size(), false);
        pos_ = start;
        fail("unknown state '" + word + "'");
    }

    void combine(BoolFun& f, const BoolFun& g, bool conj) {
        for (Mask m = 0; m < Mask{1} << names_.size(); ++m) f.set(m, conj ? (f(m) && g(m)) : (f(m) || g(m)));
    }

    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '.';
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool accept_operator(std::string_view symbol, std::string_view keyword) {
        skip_space();
        if (text_.substr(pos_, symbol.size()) == symbol) {
            pos_ += symbol.size();
            return true;
        }
        const std::size_t save = pos_;
        if (identifier() == keyword) return true;
        pos_ = save;
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("", "formula '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                                 message);
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

Mask transpose_step(const AlternatingAutomaton& a, Symbol letter, Mask subset) {
    Mask next = 0;
    for (State s = 0; s < a.n; ++s)
        if (a.delta[letter][s](subset)) next |= Mask{1} << s;
    return next;
}

}  // namespace

BoolFun compile_formula(std::string_view formula, const std::vector<std::string>& state_names) {
    return FormulaParser(formula, state_names).parse();
}

bool afa_accepts(const AlternatingAutomaton& a, const Word& w) {
    Mask current = a.finals;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it >= a.alphabet.size()) throw UnknownSymbolError("letter index " + std::to_string(*it) + " out of range");
        current = transpose_step(a, *it, current);
    }
    return a.iota(current);
}

MooreAutomaton reverse_dfa(const AlternatingAutomaton& a, std::size_t max_n) {
    a.validate();
    if (a.n > max_n || a.n > kHardMaxAfaStates)
        throw StateBoundError("reverse_dfa: 2^" + std::to_string(a.n) + " subsets requested", max_n);
    const std::size_t count = std::size_t{1} << a.n;
    MooreAutomaton m;
    m.alphabet = a.alphabet;
    m.outputs = dfa_outputs();
    m.init = a.finals;
    m.trans.assign(a.alphabet.size(), std::vector<State>(count));
    m.out.resize(count);
    std::vector<std::string> names;
    for (State x = 0; x < a.n; ++x) names.push_back(a.state_name(x));
    for (Mask subset = 0; subset < count; ++subset) {
        for (Symbol l = 0; l < a.alphabet.size(); ++l) m.trans[l][subset] = transpose_step(a, l, subset);
        m.out[subset] = a.iota(subset) ? 1 : 0;
        m.state_names.push_back(subset_name(to_state_set(subset, a.n), names));
    }
    return m;
}

MooreAutomaton minimal_dfa_for_afa(const AlternatingAutomaton& a, std::size_t max_n) {
    // The reverse DFA recognises the reversed language; the dual of its
    // reachable part is reachable and observable, hence minimal for L(a).
    return dual_automaton(reach(reverse_dfa(a, max_n)));
}

AlternatingAutomaton embed_dfa(const MooreAutomaton& m) {
    if (!m.is_dfa()) throw UnsupportedError("embed_dfa requires a DFA");
    if (m.size() > kHardMaxAfaStates) throw StateBoundError("embed_dfa: too many states", kHardMaxAfaStates);
    AlternatingAutomaton a;
    a.alphabet = m.alphabet;
    a.n = m.size();
    a.state_names = m.state_names;
    a.delta.assign(m.alphabet.size(), {});
    for (Symbol l = 0; l < m.alphabet.size(); ++l)
        for (State s = 0; s < m.size(); ++s) a.delta[l].push_back(BoolFun::variable(a.n, m.step(s, l)));
    a.iota = BoolFun::variable(a.n, m.init);
    for (State s = 0; s < m.size(); ++s)
        if (m.accepting(s)) a.finals |= Mask{1} << s;
    return a;
}

}  // namespace dualmin
