// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (0 = all pass).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "dualmin/alternating.hpp"
#include "dualmin/brzozowski.hpp"
#include "dualmin/dkm.hpp"
#include "dualmin/io.hpp"
#include "dualmin/linalg.hpp"
#include "dualmin/random.hpp"
#include "dualmin/weighted.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dualmin;

namespace {

constexpr std::uint64_t kSeed = 0x5eed'd0a1;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(std::string why) {
        if (ok) detail = std::move(why);
        ok = false;
    }
};

struct Criterion {
    int id;
    std::string title;
    std::optional<double> time_limit_s;  // wall-clock bound, where one is required
    std::function<Outcome()> body;
};

std::string word_text(const Alphabet& a, const Word& w) { return "\"" + a.format_word(w) + "\""; }

// The shared sample for the Moore criteria.
std::vector<MooreAutomaton> moore_sample() {
    Rng rng(kSeed);
    std::vector<MooreAutomaton> out;
    for (int k = 0; k < 500; ++k) out.push_back(random_moore(rng, 8, 3, 3));
    return out;
}

Outcome appendix_golden() {
    Outcome o;
    const auto doc = load_automaton(fixtures::path("appendixA.json"));
    const auto* m = std::get_if<MooreAutomaton>(&doc);
    if (!m || !m->is_dfa() || m->size() != 3) {
        o.fail("fixture did not parse to a 3-state DFA");
        return o;
    }
    const DualAutomaton dual = dual_automaton_with_states(*m);
    std::set<StateSet> decoded;
    for (const auto& s : dual.states) {
        StateSet set;
        for (State x = 0; x < s.values.size(); ++x)
            if (s.values[x] == 1) set.push_back(x);
        decoded.insert(set);
    }
    const State x = 0, y = 1, z = 2;
    if (dual.automaton.size() != 3) o.fail("dual has " + std::to_string(dual.automaton.size()) + " states");
    if (decoded != std::set<StateSet>{{y, z}, {x, y, z}, {}}) o.fail("dual states are not {y,z}, {x,y,z}, {}");
    const MooreAutomaton min = brzozowski_minimise(*m);
    if (min.size() != 2) o.fail("result has " + std::to_string(min.size()) + " states");
    if (!iso_check(min, fixtures::appendix_a_minimal())) o.fail("result is not the appendix automaton");
    if (o.ok) o.detail = "dual {y,z} {x,y,z} {}, result 2 states";
    return o;
}

Outcome moore_differential() {
    Outcome o;
    std::size_t k = 0;
    for (const auto& m : moore_sample()) {
        const MooreAutomaton b = brzozowski_minimise(m);
        if (!iso_check(b, partition_refinement_minimise(m))) o.fail("case " + std::to_string(k) + ": not isomorphic");
        if (!equiv_exact(b, m)) o.fail("case " + std::to_string(k) + ": not equivalent");
        ++k;
    }
    if (o.ok) o.detail = std::to_string(k) + " automata";
    return o;
}

Outcome language_reversal() {
    Outcome o;
    std::size_t words = 0;
    std::size_t k = 0;
    for (const auto& m : moore_sample()) {
        const MooreAutomaton d = dual_automaton(m);
        for (const Word& w : words_up_to(m.alphabet.size(), 8)) {
            ++words;
            if (d.outputs[run(d, w)] != m.outputs[run(m, reversed(w))])
                o.fail("case " + std::to_string(k) + " word " + word_text(m.alphabet, w));
        }
        ++k;
    }
    if (o.ok) o.detail = std::to_string(words) + " word checks";
    return o;
}

template <Semiring S>
std::optional<Word> series_difference(const WeightedAutomaton<S>& a, const WeightedAutomaton<S>& b, std::size_t len) {
    for (const Word& w : words_up_to(a.alphabet.size(), len))
        if (!S::eq(eval_series(a, w), eval_series(b, w))) return w;
    return std::nullopt;
}

Outcome weighted_rational() {
    Outcome o;
    Rng rng(kSeed + 4);
    for (int k = 0; k < 200; ++k) {
        const auto w = random_weighted<RationalSemiring>(rng, 4, 2, 2);
        const auto m = minimise_wa(w);
        const std::size_t hankel = hankel_rank_oracle(w, 4);
        if (m.dimension() != hankel)
            o.fail("case " + std::to_string(k) + ": dimension " + std::to_string(m.dimension()) + " vs Hankel rank " +
                   std::to_string(hankel));
        if (auto d = series_difference(m.automaton, w, 6))
            o.fail("case " + std::to_string(k) + ": series differs on " + word_text(w.alphabet, *d));
    }
    if (o.ok) o.detail = "200 automata";
    return o;
}

Outcome weighted_integer() {
    Outcome o;
    Rng rng(kSeed + 5);
    std::size_t strictly_smaller = 0;
    for (int k = 0; k < 200; ++k) {
        const auto w = random_weighted<IntegerSemiring>(rng, 4, 2, 2);
        const auto m = minimise_wa(w);
        const std::string tag = "case " + std::to_string(k) + ": ";
        if (m.dimension() > w.n) o.fail(tag + "dimension grew");
        strictly_smaller += m.dimension() < w.n;
        if (auto d = series_difference(m.automaton, w, 6)) o.fail(tag + "series differs on " + word_text(w.alphabet, *d));
        if (minimise_wa(m.automaton).dimension() != m.dimension()) o.fail(tag + "not idempotent");
        if (hankel_rank_oracle(w, 4) > m.dimension()) o.fail(tag + "Hankel rank exceeds dimension");
    }
    if (o.ok) o.detail = "200 automata, " + std::to_string(strictly_smaller) + " strictly reduced";
    return o;
}

Outcome hnf_suite() {
    Outcome o;
    Rng rng(kSeed + 6);
    for (int k = 0; k < 1000; ++k) {
        const IntMatrix a = random_int_matrix(rng, 4, 4, -9, 9);
        const HnfResult r = hnf(a);
        const std::string tag = "case " + std::to_string(k) + ": ";
        if (!(mat_mul(r.u, a) == r.h)) o.fail(tag + "U*A != H");
        if (abs(oracle::determinant(r.u)) != 1) o.fail(tag + "|det U| != 1");
        if (!is_hnf(r.h)) o.fail(tag + "H not in normal form");
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < 4; ++i) rows.push_back(r.h.row(i));
        const IntegerBasis lattice = IntegerBasis::from_generators(4, rows);
        for (std::size_t i = 0; i < 4; ++i)
            if (!lattice.contains(a.row(i))) o.fail(tag + "row outside the lattice of H");
    }
    if (o.ok) o.detail = "1000 matrices";
    return o;
}

Outcome alternating_reversal() {
    Outcome o;
    Rng rng(kSeed + 7);
    for (int k = 0; k < 200; ++k) {
        const AlternatingAutomaton a = random_afa(rng, 3, 2);
        const MooreAutomaton rev = reverse_dfa(a);
        const std::string tag = "case " + std::to_string(k) + ": ";
        for (const Word& w : words_up_to(a.alphabet.size(), 6))
            if ((run(rev, w) == 1) != afa_accepts(a, reversed(w)))
                o.fail(tag + "reverse DFA disagrees on " + word_text(a.alphabet, w));
        const MooreAutomaton independent = partition_refinement_minimise(oracle::afa_function_dfa(a));
        if (!iso_check(minimal_dfa_for_afa(a), independent)) o.fail(tag + "minimal DFA differs from the oracle");
    }
    if (o.ok) o.detail = "200 automata";
    return o;
}

Outcome dkm_quotient() {
    Outcome o;
    Rng rng(kSeed + 8);
    for (int k = 0; k < 200; ++k) {
        const Dkm m = random_dkm(rng, 6, 2, 2);
        const std::string tag = "case " + std::to_string(k) + ": ";
        if (!(boolean_atoms(definable_closure(m), m.size()) == bisimulation_oracle(m)))
            o.fail(tag + "atoms differ from the bisimulation partition");
        const Dkm once = minimise_dkm(m);
        if (!dkm_isomorphic(minimise_dkm(once), once)) o.fail(tag + "minimisation not idempotent");
    }
    if (o.ok) o.detail = "200 models";
    return o;
}

Outcome closure_coherence() {
    Outcome o;
    Rng rng(kSeed + 9);
    for (int k = 0; k < 100; ++k) {
        const MooreAutomaton m = random_dfa(rng, 8, 3);
        if (definable_closure(dkm_from_dfa(m)) != dual_state_sets(m))
            o.fail("case " + std::to_string(k) + ": closure differs from the dual states");
    }
    if (o.ok) o.detail = "100 automata";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "appendix golden: 3-state dual, 2-state result", 1.0, appendix_golden},
        {2, "Moore differential: brzozowski vs refinement (500)", 30.0, moore_differential},
        {3, "language reversal, |w| <= 8", std::nullopt, language_reversal},
        {4, "weighted over Q: dimension = Hankel rank (200)", 60.0, weighted_rational},
        {5, "weighted over Z: dimension, series, idempotence (200)", std::nullopt, weighted_integer},
        {6, "Hermite normal form properties (1000)", 10.0, hnf_suite},
        {7, "alternating reversal and minimal DFA (200)", std::nullopt, alternating_reversal},
        {8, "Kripke quotient: atoms = bisimulation (200)", std::nullopt, dkm_quotient},
        {9, "definable closure = dual state sets (100)", std::nullopt, closure_coherence},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s && secs > *c.time_limit_s)
            o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(*c.time_limit_s) + " s");
        failures += !o.ok;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " -- " << o.detail << " ("
                  << timing << ")" << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures;
}
