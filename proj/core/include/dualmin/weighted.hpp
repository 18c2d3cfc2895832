#pragma once

// Weighted automata over exact semirings.
//
// Convention: t_a acts on column vectors of state weights, so t_a(y, x) is
// the weight of the arc x -> y on a. A word a1...ak has weight
// f · t_ak · ... · t_a1 · i.
//
// Over ℚ and ℤ the reachable submodule of a linear automaton has a canonical
// basis (echelon form / Hermite normal form), which gives the reachability
// step of double-reversal minimisation. Transposition is the self-duality.

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "dualmin/automaton.hpp"
#include "dualmin/linalg.hpp"
#include "dualmin/semiring.hpp"

namespace dualmin {

template <Semiring S>
struct WeightedAutomaton {
    using value_type = typename S::value_type;

    Alphabet alphabet;
    std::size_t n = 0;
    std::vector<Matrix<S>> trans;  ///< one n x n matrix per letter
    Vector<S> initial;             ///< column vector i
    Vector<S> final_weights;       ///< row vector f
    std::vector<std::string> state_names;

    std::string state_name(State x) const {
        return x < state_names.size() ? state_names[x] : "q" + std::to_string(x);
    }

    void validate() const {
        if (trans.size() != alphabet.size())
            throw DimensionError("weighted automaton: matrix count differs from alphabet size");
        for (Symbol a = 0; a < trans.size(); ++a)
            if (trans[a].rows() != n || trans[a].cols() != n)
                throw DimensionError("weighted automaton: matrix for letter '" + alphabet.name(a) + "' is " +
                                     std::to_string(trans[a].rows()) + "x" + std::to_string(trans[a].cols()) +
                                     ", expected " + std::to_string(n) + "x" + std::to_string(n));
        if (initial.size() != n) throw DimensionError("weighted automaton: initial vector has wrong length");
        if (final_weights.size() != n) throw DimensionError("weighted automaton: final vector has wrong length");
        if (!state_names.empty() && state_names.size() != n)
            throw DimensionError("weighted automaton: state name count differs from dimension");
    }

    friend bool operator==(const WeightedAutomaton& a, const WeightedAutomaton& b) {
        return a.alphabet == b.alphabet && a.n == b.n && a.trans == b.trans &&
               vec_eq<S>(a.initial, b.initial) && vec_eq<S>(a.final_weights, b.final_weights);
    }
};

/// A weighted automaton living in a submodule of another automaton's space.
///
/// Without `projection`, a state vector c of `automaton` stands for the
/// vector c·basis of the source automaton. With `projection` (the result of
/// two-pass minimisation), the source vector x corresponds to
/// projection·x = basisᵀ·c.
template <Semiring S>
struct RestrictedWA {
    WeightedAutomaton<S> automaton;
    Matrix<S> basis;
    std::optional<Matrix<S>> projection;

    std::size_t dimension() const noexcept { return automaton.n; }
};

template <Semiring S>
Vector<S> state_after(const WeightedAutomaton<S>& w, const Word& word) {
    Vector<S> v = w.initial;
    for (Symbol a : word) {
        if (a >= w.alphabet.size()) throw UnknownSymbolError("letter index " + std::to_string(a) + " out of range");
        v = mat_vec(w.trans[a], v);
    }
    return v;
}

/// Value of the recognised series at `word`; ε gives f·i.
template <Semiring S>
typename S::value_type eval_series(const WeightedAutomaton<S>& w, const Word& word) {
    return dot<S>(w.final_weights, state_after(w, word));
}

/// Transposed automaton; recognises the reversed series.
template <Semiring S>
    requires Ring<S>
WeightedAutomaton<S> dual_wa(const WeightedAutomaton<S>& w) {
    WeightedAutomaton<S> d;
    d.alphabet = w.alphabet;
    d.n = w.n;
    for (const auto& t : w.trans) d.trans.push_back(t.transposed());
    d.initial = w.final_weights;
    d.final_weights = w.initial;
    d.state_names = w.state_names;
    return d;
}

/// Canonical basis of the submodule generated by i under all t_a.
template <Semiring S>
BasisFor_t<S> reachable_basis(const WeightedAutomaton<S>& w) {
    using Basis = BasisFor_t<S>;
    Basis basis(w.n);
    std::deque<Vector<S>> work{w.initial};
    while (!work.empty()) {
        Vector<S> v = std::move(work.front());
        work.pop_front();
        auto inserted = basis_insert(basis, v);
        if (!inserted.changed) continue;
        basis = std::move(inserted.basis);
        for (const auto& t : w.trans) work.push_back(mat_vec(t, v));
    }
    return basis;
}

/// Restriction of w to its reachable submodule, in the coordinates of its canonical basis.
template <Semiring S>
RestrictedWA<S> reach_restrict(const WeightedAutomaton<S>& w) {
    w.validate();
    const auto basis = reachable_basis(w);
    const std::size_t k = basis.rank();
    const auto& rows = basis.rows();

    auto coords = [&](const Vector<S>& v) {
        auto c = basis.coordinates(v);
        if (!c) throw Error("reach_restrict: vector escaped the reachable submodule");
        return *c;
    };

    WeightedAutomaton<S> r;
    r.alphabet = w.alphabet;
    r.n = k;
    for (const auto& t : w.trans) {
        Matrix<S> tk(k, k);
        for (std::size_t j = 0; j < k; ++j) {
            const Vector<S> c = coords(mat_vec(t, rows[j]));
            for (std::size_t i = 0; i < k; ++i) tk(i, j) = c[i];
        }
        r.trans.push_back(std::move(tk));
    }
    r.initial = coords(w.initial);
    for (std::size_t j = 0; j < k; ++j) r.final_weights.push_back(dot<S>(w.final_weights, rows[j]));
    for (std::size_t j = 0; j < k; ++j) r.state_names.push_back("b" + std::to_string(j));
    return RestrictedWA<S>{std::move(r), basis.as_matrix(), std::nullopt};
}

/// Two-pass minimisation: reach ∘ dual ∘ reach ∘ dual.
template <Semiring S>
RestrictedWA<S> minimise_wa(const WeightedAutomaton<S>& w) {
    const RestrictedWA<S> observable = reach_restrict(dual_wa(w));
    RestrictedWA<S> result = reach_restrict(dual_wa(observable.automaton));
    result.projection = observable.basis;
    return result;
}

Rational to_rational(const Integer& v);
inline Rational to_rational(const Rational& v) { return v; }

/// Rank over ℚ of a rational matrix, by plain Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// Rank over ℚ of the Hankel block H[u][v] = series(u·v), |u|, |v| <= max_len.
template <Semiring S>
    requires(std::same_as<S, IntegerSemiring> || std::same_as<S, RationalSemiring>)
std::size_t hankel_rank_oracle(const WeightedAutomaton<S>& w, std::size_t max_len) {
    w.validate();
    const auto words = words_up_to(w.alphabet.size(), max_len);
    // Prefix part t_u·i and suffix part f·t_vk·...·t_v1, both over ℚ.
    std::vector<std::vector<Rational>> prefix;
    std::vector<std::vector<Rational>> suffix;
    for (const auto& u : words) {
        Vector<S> v = w.initial;
        for (Symbol a : u) v = mat_vec(w.trans[a], v);
        std::vector<Rational> q;
        for (const auto& x : v) q.push_back(to_rational(x));
        prefix.push_back(std::move(q));

        Vector<S> r = w.final_weights;
        for (auto it = u.rbegin(); it != u.rend(); ++it) r = vec_mat(r, w.trans[*it]);
        std::vector<Rational> s;
        for (const auto& x : r) s.push_back(to_rational(x));
        suffix.push_back(std::move(s));
    }
    std::vector<std::vector<Rational>> block(words.size(), std::vector<Rational>(words.size()));
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < w.n; ++k) acc += suffix[j][k] * prefix[i][k];
            block[i][j] = acc;
        }
    return rational_rank(std::move(block));
}

/// Arc x -> y on a iff t_a(y, x) is true.
Nfa to_nfa(const WeightedAutomaton<BooleanSemiring>& w);

}  // namespace dualmin
