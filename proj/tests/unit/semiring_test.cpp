#include <doctest.h>

#include "dualmin/semiring.hpp"

using namespace dualmin;

namespace {

// Every tropical value in {0..5, inf}.
std::vector<Tropical> tropical_grid() {
    std::vector<Tropical> out{Tropical::inf()};
    for (int v = 0; v <= 5; ++v) out.push_back(Tropical::of(v));
    return out;
}

// min-plus by cases, written without the library's add/mul.
Tropical min_plus(const Tropical& a, const Tropical& b, bool multiply) {
    if (multiply) return a.infinite || b.infinite ? Tropical::inf() : Tropical::of(a.value + b.value);
    if (a.infinite) return b;
    if (b.infinite) return a;
    return Tropical::of(a.value < b.value ? a.value : b.value);
}

}  // namespace

TEST_SUITE("semiring") {

TEST_CASE("matrix product over the Boolean semiring") {
    using M = Matrix<BooleanSemiring>;
    const M row = M::from_rows({{false, true}});
    const M col = M::from_rows({{false}, {true}});
    CHECK(mat_mul(M::from_rows({{true, true}}), col) == M::from_rows({{true}}));
    CHECK(mat_mul(row, col) == M::from_rows({{true}}));
}

TEST_CASE("matrix product over the tropical semiring is min-plus") {
    using M = Matrix<TropicalSemiring>;
    const M a = M::from_rows({{Tropical::of(3), Tropical::of(5)}});
    const M b = M::from_rows({{Tropical::of(2)}, {Tropical::of(4)}});
    CHECK(mat_mul(a, b) == M::from_rows({{Tropical::of(5)}}));
}

TEST_CASE("identity is neutral") {
    using M = Matrix<IntegerSemiring>;
    const M m = M::from_rows({{1, -2, 3}, {0, 4, 5}});
    CHECK(mat_mul(M::identity(2), m) == m);
    CHECK(mat_mul(m, M::identity(3)) == m);
}

TEST_CASE("matrix-vector products over the integers") {
    using M = Matrix<IntegerSemiring>;
    const M swap = M::from_rows({{0, 1}, {1, 0}});
    CHECK(vec_eq<IntegerSemiring>(mat_vec(swap, Vector<IntegerSemiring>{1, 0}), {0, 1}));
    CHECK(vec_eq<IntegerSemiring>(vec_mat(Vector<IntegerSemiring>{1, 1}, swap), {1, 1}));
    CHECK(is_zero<IntegerSemiring>(mat_vec(M(3, 2), Vector<IntegerSemiring>{7, -7})));
}

TEST_CASE("shape mismatch throws") {
    using M = Matrix<RationalSemiring>;
    CHECK_THROWS_AS(mat_mul(M(2, 3), M(2, 3)), DimensionError);
    CHECK_THROWS_AS(mat_vec(M(2, 3), Vector<RationalSemiring>(2)), DimensionError);
    CHECK_THROWS_AS(M::from_rows({{1, 2}, {3}}), DimensionError);
}

TEST_CASE("sampled laws hold for all four semirings") {
    for (const char* name : {"bool", "int", "rational", "tropical"}) {
        const LawReport r = check_semiring_laws(name, 100, 42);
        INFO(name);
        CHECK(r.ok());
        CHECK(r.samples == 100);
    }
    CHECK_THROWS_AS(check_semiring_laws("complex", 1, 1), UnsupportedError);
}

TEST_CASE("tropical operations agree with an exhaustive min-plus table") {
    const auto grid = tropical_grid();
    for (const auto& a : grid)
        for (const auto& b : grid) {
            CHECK(TropicalSemiring::add(a, b) == min_plus(a, b, false));
            CHECK(TropicalSemiring::mul(a, b) == min_plus(a, b, true));
            for (const auto& c : grid) {
                const auto lhs = TropicalSemiring::mul(a, TropicalSemiring::add(b, c));
                const auto rhs = TropicalSemiring::add(TropicalSemiring::mul(a, b), TropicalSemiring::mul(a, c));
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("Boolean semiring laws, exhaustively") {
    for (bool a : {false, true})
        for (bool b : {false, true})
            for (bool c : {false, true}) {
                using B = BooleanSemiring;
                CHECK(B::mul(a, B::add(b, c)) == B::add(B::mul(a, b), B::mul(a, c)));
                CHECK(B::add(a, B::zero()) == Boolean(a));
                CHECK(B::mul(a, B::one()) == Boolean(a));
            }
}

TEST_CASE("scalar rendering") {
    CHECK(to_string(Tropical::inf()) == "inf");
    CHECK(to_string(Rational(6) / Rational(4)) == "3/2");
    CHECK(to_string(Rational(8) / Rational(4)) == "2");
    CHECK(to_string(Integer(-4)) == "-4");
    CHECK(to_string(Boolean(true)) == "1");
}

}
