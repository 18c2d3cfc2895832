#include <doctest.h>

#include "dualmin/automaton.hpp"
#include "dualmin/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dualmin;

namespace {

bool has_arc(const Nfa& n, const std::string& letter, State from, State to) {
    const auto& s = n.trans[n.alphabet.index_of(letter)][from];
    return std::find(s.begin(), s.end(), to) != s.end();
}

// Every DFA over {a,b} with at most `n` states and initial state 0.
std::vector<MooreAutomaton> all_dfas(std::size_t n) {
    std::vector<MooreAutomaton> out;
    const Alphabet ab({"a", "b"});
    std::size_t tables = 1;
    for (std::size_t k = 0; k < 2 * n; ++k) tables *= n;
    for (std::size_t t = 0; t < tables; ++t)
        for (std::size_t finals = 0; finals < (std::size_t{1} << n); ++finals) {
            std::vector<std::vector<State>> trans(2, std::vector<State>(n));
            std::size_t code = t;
            for (Symbol a = 0; a < 2; ++a)
                for (State x = 0; x < n; ++x) {
                    trans[a][x] = code % n;
                    code /= n;
                }
            StateSet acc;
            for (State x = 0; x < n; ++x)
                if (finals >> x & 1) acc.push_back(x);
            out.push_back(MooreAutomaton::dfa(ab, trans, 0, acc));
        }
    return out;
}

Nfa random_nfa(Rng& rng, std::size_t n) {
    Nfa out;
    out.alphabet = Alphabet({"a", "b"});
    out.n = n;
    out.trans.assign(2, std::vector<StateSet>(n));
    std::bernoulli_distribution coin(0.3);
    for (auto& row : out.trans)
        for (auto& targets : row)
            for (State y = 0; y < n; ++y)
                if (coin(rng)) targets.push_back(y);
    for (State x = 0; x < n; ++x) {
        if (coin(rng)) out.inits.push_back(x);
        if (coin(rng)) out.finals.push_back(x);
    }
    return out;
}

}  // namespace

TEST_SUITE("automata-core") {

TEST_CASE("words on the appendix automaton") {
    const MooreAutomaton m = fixtures::appendix_a();
    CHECK(run(m, m.alphabet.parse_word("a")) == 1);
    CHECK(run(m, m.alphabet.parse_word("")) == 0);
    CHECK(run(m, m.alphabet.parse_word("ab")) == 0);
    CHECK(run(m, m.alphabet.parse_word("bba")) == 1);
    CHECK_THROWS_AS(m.alphabet.parse_word("ac"), UnknownSymbolError);
}

TEST_CASE("alphabet word syntax") {
    const Alphabet multi({"go", "stop"});
    CHECK(multi.parse_word("go,stop,go") == Word{0, 1, 0});
    CHECK(multi.format_word({0, 1}) == "go,stop");
    const Alphabet single({"a", "b"});
    CHECK(single.parse_word("abba") == Word{0, 1, 1, 0});
    CHECK(single.parse_word("a,b") == Word{0, 1});
    CHECK(single.format_word({1, 0}) == "ba");
}

TEST_CASE("reversal of the appendix automaton") {
    const Nfa r = reverse(fixtures::appendix_a());
    const State x = 0, y = 1, z = 2;
    CHECK(r.inits == StateSet{y, z});
    CHECK(r.finals == StateSet{x});
    CHECK(has_arc(r, "a", z, x));
    CHECK(has_arc(r, "a", y, z));
    CHECK(has_arc(r, "a", y, y));
    CHECK(r.trans[0][x].empty());
    CHECK(r.trans[1][x] == StateSet{x, y, z});
    CHECK(r.trans[1][y].empty());
}

TEST_CASE("reversal edge cases") {
    const Alphabet ab({"a", "b"});
    const Nfa loop = reverse(MooreAutomaton::dfa(ab, {{0}, {0}}, 0, {0}));
    CHECK(loop.inits == StateSet{0});
    CHECK(loop.finals == StateSet{0});
    CHECK(loop.trans[0][0] == StateSet{0});
    const Nfa none = reverse(MooreAutomaton::dfa(ab, {{0}, {0}}, 0, {}));
    CHECK(none.inits.empty());
}

TEST_CASE("determinising the reversed appendix automaton") {
    const Nfa r = reverse(fixtures::appendix_a());
    CHECK(powerset_automaton(r).size() == 8);
    const MooreAutomaton d = reach(determinise(r));
    CHECK(d.size() == 3);
    std::set<std::string> names(d.state_names.begin(), d.state_names.end());
    CHECK(names == std::set<std::string>{"{y,z}", "{x,y,z}", "{}"});
    CHECK(d.state_name(d.init) == "{y,z}");
}

TEST_CASE("determinisation edge cases") {
    const MooreAutomaton m = fixtures::appendix_a();
    Nfa n;
    n.alphabet = m.alphabet;
    n.n = m.size();
    n.trans.assign(2, std::vector<StateSet>(n.n));
    for (Symbol a = 0; a < 2; ++a)
        for (State q = 0; q < n.n; ++q) n.trans[a][q] = {m.trans[a][q]};
    n.inits = {m.init};
    n.finals = {1, 2};
    CHECK(iso_check(determinise(n), m));

    n.inits.clear();
    const MooreAutomaton empty = determinise(n);
    CHECK(empty.size() == 1);
    CHECK_FALSE(empty.accepting(empty.init));
    CHECK_THROWS_AS(determinise(reverse(m), 2), StateBoundError);
}

TEST_CASE("subset construction agrees with path enumeration") {
    Rng rng(11);
    for (int k = 0; k < 40; ++k) {
        const Nfa n = k % 2 ? reverse(random_dfa(rng, 6, 2)) : random_nfa(rng, uniform_size(rng, 1, 5));
        const MooreAutomaton d = determinise(n);
        for (const Word& w : words_up_to(n.alphabet.size(), 6)) {
            CHECK(nfa_accepts(n, w) == oracle::nfa_accepts(n, w));
            CHECK(d.accepting(oracle::walk(d, d.init, w)) == oracle::nfa_accepts(n, w));
        }
    }
}

TEST_CASE("reach removes unreachable states") {
    const MooreAutomaton m = fixtures::appendix_a();
    CHECK(iso_check(reach(m), m));
    CHECK(reach(m).size() == 3);
    // add an unreachable sink
    MooreAutomaton sink = m;
    sink.out.push_back(0);
    sink.state_names.push_back("sink");
    for (auto& row : sink.trans) row.push_back(3);
    CHECK(reach(sink).size() == 3);
}

TEST_CASE("partition refinement") {
    const MooreAutomaton m = fixtures::appendix_a();
    const MooreAutomaton min = partition_refinement_minimise(m);
    CHECK(min.size() == 2);
    CHECK(iso_check(min, fixtures::appendix_a_minimal()));
    CHECK(iso_check(partition_refinement_minimise(min), min));
    const Partition p = moore_equivalence(m);
    CHECK(p.block_count == 2);
    CHECK(p.block_of[1] == p.block_of[2]);
    CHECK(p.block_of[0] != p.block_of[1]);
}

TEST_CASE("minimal sizes match exhaustive search over small DFAs") {
    // For each language recognised by a DFA with <= 3 states, the smallest
    // DFA found by enumeration has the size partition refinement reports.
    std::map<std::vector<bool>, std::size_t> smallest;
    const auto words = words_up_to(2, 5);
    std::vector<MooreAutomaton> all;
    for (std::size_t n = 1; n <= 3; ++n)
        for (auto& m : all_dfas(n)) all.push_back(std::move(m));
    for (const auto& m : all) {
        std::vector<bool> lang;
        for (const Word& w : words) lang.push_back(run(m, w) == 1);
        auto it = smallest.find(lang);
        if (it == smallest.end() || m.size() < it->second) smallest[lang] = m.size();
    }
    for (const auto& m : all) {
        std::vector<bool> lang;
        for (const Word& w : words) lang.push_back(run(m, w) == 1);
        const std::size_t size = partition_refinement_minimise(m).size();
        CHECK(size == smallest[lang]);
        CHECK(size == oracle::minimal_size(m));
    }
}

TEST_CASE("isomorphism and equivalence") {
    const MooreAutomaton m = fixtures::appendix_a();
    CHECK(iso_check(m, m));
    CHECK_FALSE(iso_check(m, fixtures::appendix_a_minimal()));
    CHECK(equiv_exact(m, m));
    CHECK(equiv_exact(m, fixtures::appendix_a_minimal()));
    const Alphabet ab({"a", "b"});
    const auto all = MooreAutomaton::dfa(ab, {{0}, {0}}, 0, {0});
    const auto none = MooreAutomaton::dfa(ab, {{0}, {0}}, 0, {});
    CHECK_FALSE(equiv_exact(all, none));
    CHECK_FALSE(iso_check(all, none));
    CHECK_THROWS_AS(equiv_exact(all, MooreAutomaton::dfa(Alphabet({"a"}), {{0}}, 0, {0})), Error);
}

TEST_CASE("validation") {
    MooreAutomaton m = fixtures::appendix_a();
    m.trans[0][0] = 7;
    CHECK_THROWS_AS(m.validate(), Error);
    CHECK(Partition::from_labels({5, 3, 5}) == Partition{{0, 1, 0}, 2});
    CHECK(Partition::discrete(2).block_count == 2);
}

TEST_CASE("word enumeration") {
    CHECK(words_up_to(2, 3).size() == 15);
    CHECK(words_up_to(1, 4).size() == 5);
    CHECK(words_up_to(3, 0) == std::vector<Word>{Word{}});
    CHECK(reversed({0, 1, 1}) == Word{1, 1, 0});
}

}
