#include "dualmin/semiring.hpp"

namespace dualmin {

std::string to_string(Boolean v) { return v.value ? "1" : "0"; }

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_string(const Tropical& v) { return v.infinite ? "inf" : v.value.get_str(); }

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

Boolean sample_value(BooleanSemiring, std::mt19937_64& rng) { return uniform(rng, 0, 1) == 1; }

Integer sample_value(IntegerSemiring, std::mt19937_64& rng) { return Integer(uniform(rng, -5, 5)); }

Rational sample_value(RationalSemiring, std::mt19937_64& rng) {
    Rational q(uniform(rng, -4, 4), uniform(rng, 1, 3));
    q.canonicalize();
    return q;
}

Tropical sample_value(TropicalSemiring, std::mt19937_64& rng) {
    if (uniform(rng, 0, 4) == 0) return Tropical::inf();
    return Tropical::of(Integer(uniform(rng, 0, 6)));
}

LawReport check_semiring_laws(std::string_view semiring, std::size_t samples, std::uint64_t seed) {
    if (semiring == BooleanSemiring::name) return check_semiring_laws<BooleanSemiring>(samples, seed);
    if (semiring == IntegerSemiring::name) return check_semiring_laws<IntegerSemiring>(samples, seed);
    if (semiring == RationalSemiring::name) return check_semiring_laws<RationalSemiring>(samples, seed);
    if (semiring == TropicalSemiring::name) return check_semiring_laws<TropicalSemiring>(samples, seed);
    throw UnsupportedError("unknown semiring '" + std::string(semiring) + "'");
}

}  // namespace dualmin
