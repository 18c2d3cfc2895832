#include "dualmin/selftest.hpp"

#include <functional>
#include <future>
#include <map>

#include "dualmin/alternating.hpp"
#include "dualmin/brzozowski.hpp"
#include "dualmin/dkm.hpp"
#include "dualmin/linalg.hpp"
#include "dualmin/random.hpp"
#include "dualmin/weighted.hpp"

namespace dualmin {

namespace {

// Returns an empty string on success, a description otherwise.
using CaseCheck = std::function<std::string(Rng&, std::size_t)>;

std::string check_moore_minimise(Rng& rng, std::size_t) {
    const MooreAutomaton m = random_moore(rng, 8, 3, 3);
    const MooreAutomaton b = brzozowski_minimise(m);
    const MooreAutomaton r = partition_refinement_minimise(m);
    if (!iso_check(b, r)) return "brzozowski and partition refinement results are not isomorphic";
    if (!equiv_exact(b, m)) return "brzozowski result not equivalent to input";
    return {};
}

std::string check_reversal(Rng& rng, std::size_t) {
    const MooreAutomaton m = random_moore(rng, 8, 3, 3);
    const MooreAutomaton d = dual_automaton(m);
    for (const Word& w : words_up_to(m.alphabet.size(), 8))
        if (d.outputs[run(d, w)] != m.outputs[run(m, reversed(w))])
            return "dual automaton disagrees with the reversed word " + m.alphabet.format_word(w);
    return {};
}

std::string check_weighted_rational(Rng& rng, std::size_t) {
    const auto w = random_weighted<RationalSemiring>(rng, 4, 2, 2);
    const auto min = minimise_wa(w);
    const std::size_t hankel = hankel_rank_oracle(w, 4);
    if (min.dimension() != hankel)
        return "dimension " + std::to_string(min.dimension()) + " differs from Hankel rank " + std::to_string(hankel);
    for (const Word& u : words_up_to(w.alphabet.size(), 6))
        if (eval_series(min.automaton, u) != eval_series(w, u)) return "series differs on " + w.alphabet.format_word(u);
    return {};
}

std::string check_weighted_integer(Rng& rng, std::size_t) {
    const auto w = random_weighted<IntegerSemiring>(rng, 4, 2, 2);
    const auto min = minimise_wa(w);
    if (min.dimension() > w.n) return "dimension grew";
    for (const Word& u : words_up_to(w.alphabet.size(), 6))
        if (eval_series(min.automaton, u) != eval_series(w, u)) return "series differs on " + w.alphabet.format_word(u);
    if (minimise_wa(min.automaton).dimension() != min.dimension()) return "minimisation not idempotent in dimension";
    if (hankel_rank_oracle(w, w.n) > min.dimension()) return "Hankel rank exceeds integer dimension";
    return {};
}

// Determinant by fraction-free elimination over ℚ.
Rational determinant(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Rational(m(r, c));
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

std::string check_hnf(Rng& rng, std::size_t) {
    const IntMatrix a = random_int_matrix(rng, 4, 4, -9, 9);
    const HnfResult r = hnf(a);
    if (!(mat_mul(r.u, a) == r.h)) return "U*A != H";
    if (abs(determinant(r.u)) != 1) return "U is not unimodular";
    if (!is_hnf(r.h)) return "H is not in Hermite normal form";
    std::vector<IntVector> rows;
    for (std::size_t k = 0; k < r.h.rows(); ++k) rows.push_back(r.h.row(k));
    const IntegerBasis basis = IntegerBasis::from_generators(4, rows);
    for (std::size_t k = 0; k < a.rows(); ++k)
        if (!basis.contains(a.row(k))) return "row of A outside the lattice of H";
    return {};
}

std::string check_afa(Rng& rng, std::size_t) {
    const AlternatingAutomaton a = random_afa(rng, 3, 2);
    const MooreAutomaton rev = reverse_dfa(a);
    for (const Word& w : words_up_to(a.alphabet.size(), 6))
        if ((run(rev, w) == 1) != afa_accepts(a, reversed(w)))
            return "reverse DFA disagrees with AFA on " + a.alphabet.format_word(w);
    const MooreAutomaton min = minimal_dfa_for_afa(a);
    const MooreAutomaton oracle = partition_refinement_minimise(determinise(reverse(rev)));
    if (!iso_check(min, oracle)) return "minimal DFA differs from the subset-construction route";
    return {};
}

std::string check_dkm(Rng& rng, std::size_t) {
    const Dkm k = random_dkm(rng, 6, 2, 2);
    if (!(boolean_atoms(definable_closure(k), k.size()) == bisimulation_oracle(k)))
        return "definable atoms differ from the coarsest bisimulation";
    const Dkm once = minimise_dkm(k);
    if (!dkm_isomorphic(minimise_dkm(once), once)) return "minimise_dkm not idempotent";
    return {};
}

std::string check_coherence(Rng& rng, std::size_t) {
    const MooreAutomaton m = random_dfa(rng, 8, 3);
    if (definable_closure(dkm_from_dfa(m)) != dual_state_sets(m))
        return "definable closure differs from the dual state sets";
    return {};
}

std::string check_semiring(Rng& rng, std::size_t) {
    const std::uint64_t seed = rng();
    for (const char* name : {"bool", "int", "rational", "tropical"}) {
        const LawReport report = check_semiring_laws(name, 20, seed);
        if (!report.ok()) return report.failures.front();
    }
    return {};
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

const std::map<std::string, CaseCheck>& suites() {
    static const std::map<std::string, CaseCheck> table{
        {"moore-minimise", check_moore_minimise},   {"language-reversal", check_reversal},
        {"weighted-rational", check_weighted_rational}, {"weighted-integer", check_weighted_integer},
        {"hnf", check_hnf},                         {"afa-reversal", check_afa},
        {"dkm-quotient", check_dkm},                {"closure-coherence", check_coherence},
        {"semiring-laws", check_semiring},
    };
    return table;
}

}  // namespace

std::vector<std::string> selftest_suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, check] : suites()) names.push_back(name);
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases) {
    const auto it = suites().find(name);
    if (it == suites().end()) throw UnsupportedError("unknown selftest suite '" + name + "'");
    SuiteResult result{name, cases, 0, {}};
    Rng rng(seed ^ fnv1a(name));
    for (std::size_t k = 0; k < cases; ++k) {
        std::string failure;
        try {
            failure = it->second(rng, k);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure.empty()) continue;
        if (result.failures++ == 0) result.first_failure = "case " + std::to_string(k) + ": " + failure;
    }
    return result;
}

bool run_selftest(std::uint64_t seed, std::size_t cases, std::ostream& out) {
    std::vector<std::future<SuiteResult>> pending;
    for (const auto& name : selftest_suite_names())
        pending.push_back(std::async(std::launch::async, [name, seed, cases] { return run_suite(name, seed, cases); }));
    bool all = true;
    for (auto& f : pending) {
        const SuiteResult r = f.get();
        all = all && r.ok();
        if (r.ok())
            out << "PASS " << r.name << " (" << r.cases << " cases)\n";
        else
            out << "FAIL " << r.name << " (" << r.failures << "/" << r.cases << " cases): " << r.first_failure << "\n";
    }
    return all;
}

}  // namespace dualmin
