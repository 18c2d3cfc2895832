#pragma once

// Semirings with exact arithmetic and dense matrices over them.
//
// A semiring is a stateless struct exposing its carrier as `value_type` and
// the operations as static members; see the `Semiring` concept. Matrices are
// typed by their semiring, so entries from different semirings never mix.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dualmin/error.hpp"

namespace dualmin {

using Integer = mpz_class;
using Rational = mpq_class;

template <class S>
concept Semiring = requires(const typename S::value_type& a, const typename S::value_type& b) {
    typename S::value_type;
    { S::name } -> std::convertible_to<std::string_view>;
    { S::is_ring } -> std::convertible_to<bool>;
    { S::is_field } -> std::convertible_to<bool>;
    { S::is_pid } -> std::convertible_to<bool>;
    { S::zero() } -> std::same_as<typename S::value_type>;
    { S::one() } -> std::same_as<typename S::value_type>;
    { S::add(a, b) } -> std::same_as<typename S::value_type>;
    { S::mul(a, b) } -> std::same_as<typename S::value_type>;
    { S::eq(a, b) } -> std::same_as<bool>;
};

/// Semirings with additive inverses (ℤ, ℚ).
template <class S>
concept Ring = Semiring<S> && S::is_ring && requires(const typename S::value_type& a) {
    { S::neg(a) } -> std::same_as<typename S::value_type>;
};

/// Element of {0,1}. A wrapper rather than bool so that containers of it are
/// ordinary vectors with addressable elements.
struct Boolean {
    bool value = false;

    constexpr Boolean() = default;
    constexpr Boolean(bool v) : value(v) {}  // NOLINT(google-explicit-constructor)
    constexpr operator bool() const { return value; }  // NOLINT(google-explicit-constructor)

    friend constexpr bool operator==(Boolean a, Boolean b) { return a.value == b.value; }
};

struct BooleanSemiring {
    using value_type = Boolean;
    static constexpr std::string_view name = "bool";
    static constexpr bool is_ring = false;
    static constexpr bool is_field = false;
    static constexpr bool is_pid = false;

    static Boolean zero() { return false; }
    static Boolean one() { return true; }
    static Boolean add(Boolean a, Boolean b) { return a.value || b.value; }
    static Boolean mul(Boolean a, Boolean b) { return a.value && b.value; }
    static bool eq(Boolean a, Boolean b) { return a == b; }
};

struct IntegerSemiring {
    using value_type = Integer;
    static constexpr std::string_view name = "int";
    static constexpr bool is_ring = true;
    static constexpr bool is_field = false;
    static constexpr bool is_pid = true;

    static Integer zero() { return Integer(0); }
    static Integer one() { return Integer(1); }
    static Integer add(const Integer& a, const Integer& b) { return a + b; }
    static Integer mul(const Integer& a, const Integer& b) { return a * b; }
    static Integer neg(const Integer& a) { return -a; }
    static bool eq(const Integer& a, const Integer& b) { return a == b; }
};

struct RationalSemiring {
    using value_type = Rational;
    static constexpr std::string_view name = "rational";
    static constexpr bool is_ring = true;
    static constexpr bool is_field = true;
    static constexpr bool is_pid = true;

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational neg(const Rational& a) { return -a; }
    static bool eq(const Rational& a, const Rational& b) { return a == b; }
};

/// Element of ℕ ∪ {∞}. ∞ is the additive identity of the tropical semiring.
struct Tropical {
    bool infinite = true;
    Integer value = 0;

    static Tropical inf() { return Tropical{}; }
    static Tropical of(Integer v) { return Tropical{false, std::move(v)}; }

    friend bool operator==(const Tropical& a, const Tropical& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

/// (ℕ ∪ {∞}, min, +, ∞, 0).
struct TropicalSemiring {
    using value_type = Tropical;
    static constexpr std::string_view name = "tropical";
    static constexpr bool is_ring = false;
    static constexpr bool is_field = false;
    static constexpr bool is_pid = false;

    static Tropical zero() { return Tropical::inf(); }
    static Tropical one() { return Tropical::of(0); }
    static Tropical add(const Tropical& a, const Tropical& b) {
        if (a.infinite) return b;
        if (b.infinite) return a;
        return a.value <= b.value ? a : b;
    }
    static Tropical mul(const Tropical& a, const Tropical& b) {
        if (a.infinite || b.infinite) return Tropical::inf();
        return Tropical::of(a.value + b.value);
    }
    static bool eq(const Tropical& a, const Tropical& b) { return a == b; }
};

template <Semiring S>
using Vector = std::vector<typename S::value_type>;

/// Dense row-major matrix over S.
template <Semiring S>
class Matrix {
public:
    using value_type = typename S::value_type;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, S::zero()) {}

    /// Builds from nested rows; every row must have the same length.
    static Matrix from_rows(const std::vector<std::vector<value_type>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector<S> row(std::size_t r) const {
        return Vector<S>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    Vector<S> col(std::size_t c) const {
        Vector<S> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!S::eq(a.data_[k], b.data_[k])) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

template <Semiring S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows())
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix<S> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto acc = S::zero();
            for (std::size_t k = 0; k < a.cols(); ++k) acc = S::add(acc, S::mul(a(i, k), b(k, j)));
            out(i, j) = std::move(acc);
        }
    return out;
}

/// Column action A·v.
template <Semiring S>
Vector<S> mat_vec(const Matrix<S>& a, const Vector<S>& v) {
    if (a.cols() != v.size())
        throw DimensionError("mat_vec: matrix has " + std::to_string(a.cols()) + " columns, vector length " +
                             std::to_string(v.size()));
    Vector<S> out(a.rows(), S::zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out[i] = S::add(out[i], S::mul(a(i, k), v[k]));
    return out;
}

/// Row action v·A.
template <Semiring S>
Vector<S> vec_mat(const Vector<S>& v, const Matrix<S>& a) {
    if (a.rows() != v.size())
        throw DimensionError("vec_mat: matrix has " + std::to_string(a.rows()) + " rows, vector length " +
                             std::to_string(v.size()));
    Vector<S> out(a.cols(), S::zero());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t k = 0; k < a.rows(); ++k) out[j] = S::add(out[j], S::mul(v[k], a(k, j)));
    return out;
}

template <Semiring S>
typename S::value_type dot(const Vector<S>& u, const Vector<S>& v) {
    if (u.size() != v.size()) throw DimensionError("dot: length mismatch");
    auto acc = S::zero();
    for (std::size_t k = 0; k < u.size(); ++k) acc = S::add(acc, S::mul(u[k], v[k]));
    return acc;
}

template <Semiring S>
bool vec_eq(const Vector<S>& u, const Vector<S>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!S::eq(u[k], v[k])) return false;
    return true;
}

template <Semiring S>
bool is_zero(const Vector<S>& v) {
    for (const auto& x : v)
        if (!S::eq(x, S::zero())) return false;
    return true;
}

// Textual form of single values, used by serialization and diagnostics.
std::string to_string(Boolean v);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
std::string to_string(const Tropical& v);

// Random sample values for law checks and property tests. Integers and
// rationals are drawn from small ranges so that collisions (a = b) occur.
Boolean sample_value(BooleanSemiring, std::mt19937_64& rng);
Integer sample_value(IntegerSemiring, std::mt19937_64& rng);
Rational sample_value(RationalSemiring, std::mt19937_64& rng);
Tropical sample_value(TropicalSemiring, std::mt19937_64& rng);

struct LawReport {
    std::string semiring;
    std::size_t samples = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Randomised check of the semiring axioms: commutative additive monoid,
/// multiplicative monoid, two-sided distributivity and annihilation by zero.
template <Semiring S>
LawReport check_semiring_laws(std::size_t samples, std::uint64_t seed) {
    LawReport report{std::string(S::name), samples, {}};
    std::mt19937_64 rng(seed);
    const auto zero = S::zero();
    const auto one = S::one();
    auto fail = [&](std::string law, const auto& a, const auto& b, const auto& c) {
        report.failures.push_back(std::move(law) + " fails at a=" + to_string(a) + " b=" + to_string(b) +
                                  " c=" + to_string(c));
    };
    for (std::size_t k = 0; k < samples; ++k) {
        const auto a = sample_value(S{}, rng);
        const auto b = sample_value(S{}, rng);
        const auto c = sample_value(S{}, rng);
        if (!S::eq(S::add(S::add(a, b), c), S::add(a, S::add(b, c)))) fail("add associativity", a, b, c);
        if (!S::eq(S::add(a, b), S::add(b, a))) fail("add commutativity", a, b, c);
        if (!S::eq(S::add(a, zero), a)) fail("add identity", a, b, c);
        if (!S::eq(S::mul(S::mul(a, b), c), S::mul(a, S::mul(b, c)))) fail("mul associativity", a, b, c);
        if (!S::eq(S::mul(a, one), a) || !S::eq(S::mul(one, a), a)) fail("mul identity", a, b, c);
        if (!S::eq(S::mul(a, S::add(b, c)), S::add(S::mul(a, b), S::mul(a, c)))) fail("left distributivity", a, b, c);
        if (!S::eq(S::mul(S::add(a, b), c), S::add(S::mul(a, c), S::mul(b, c)))) fail("right distributivity", a, b, c);
        if (!S::eq(S::mul(a, zero), zero) || !S::eq(S::mul(zero, a), zero)) fail("zero annihilation", a, b, c);
    }
    return report;
}

/// Runtime dispatch by semiring name ("bool", "int", "rational", "tropical").
LawReport check_semiring_laws(std::string_view semiring, std::size_t samples, std::uint64_t seed);

}  // namespace dualmin
