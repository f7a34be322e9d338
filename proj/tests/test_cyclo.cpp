#include "sl3cat/cyclo.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

using namespace sl3cat;

namespace {

Cyclo random_value(std::mt19937& rng, long conductor) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> coeffs(euler_phi(conductor));
    for (auto& c : coeffs) c = Rational(coeff(rng), den(rng));
    return Cyclo::from_coeffs(conductor, std::move(coeffs));
}

} // namespace

TEST_SUITE("cyclo") {

TEST_CASE("roots_of_unity_basic_identities") {
    CHECK(Cyclo::root_of_unity(1, 0) == Cyclo(Rational(1)));
    CHECK(Cyclo::root_of_unity(3, 1) + Cyclo::root_of_unity(3, 2) == Cyclo(Rational(-1)));
    auto i = Cyclo::root_of_unity(4, 1).to_complex();
    CHECK(std::abs(i.real()) < 1e-12);
    CHECK(std::abs(i.imag() - 1.0) < 1e-12);
    // negative exponents reduce mod N
    CHECK(Cyclo::root_of_unity(7, -2) == Cyclo::root_of_unity(7, 5));
}

TEST_CASE("nth_power_of_primitive_root_is_one") {
    for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 12L, 16L, 18L, 24L, 30L, 45L, 54L, 60L,
                   90L, 105L, 128L, 162L, 199L, 200L}) {
        CHECK(Cyclo::root_of_unity(n, 1).pow(n) == Cyclo(Rational(1)));
    }
}

TEST_CASE("vanishing_sum_of_all_nth_roots") {
    for (long n = 2; n <= 200; ++n) {
        Cyclo sum = Cyclo::zero(n);
        for (long j = 0; j < n; ++j) sum += Cyclo::root_of_unity(n, j);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("conjugation_is_an_involution_with_unit_modulus_on_roots") {
    Cyclo z8 = Cyclo::root_of_unity(8, 1);
    CHECK(z8.conjugate() * z8 == Cyclo(Rational(1)));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        long n = 1 + rng() % 60;
        Cyclo a = random_value(rng, n);
        CHECK(a.conjugate().conjugate() == a);
    }
}

TEST_CASE("embedding_preserves_value") {
    CHECK(Cyclo::root_of_unity(3, 1).embedded(6) == Cyclo::root_of_unity(6, 2));
    CHECK(Cyclo::root_of_unity(5, 2).embedded(20) == Cyclo::root_of_unity(20, 8));
    CHECK_THROWS_WITH_AS(Cyclo::root_of_unity(4, 1).embedded(6), "incompatible conductor",
                         std::invalid_argument);
}

TEST_CASE("inversion_by_extended_euclid") {
    // 1 + (sum of all fifth roots) = 1, so the inverse is 1
    Cyclo v = Cyclo(Rational(1));
    for (long j = 0; j < 5; ++j) v += Cyclo::root_of_unity(5, j);
    v += Cyclo(Rational(0));
    CHECK(v.inverse() == Cyclo(Rational(1)));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        long n = 1 + rng() % 40;
        Cyclo a = random_value(rng, n);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == Cyclo(Rational(1)));
    }
    CHECK_THROWS_WITH_AS(Cyclo::zero(6).inverse(), "division by zero", std::domain_error);
}

TEST_CASE("complex_embedding_is_multiplicative") {
    CHECK(std::abs(Cyclo::root_of_unity(3, 1).to_complex().real() + 0.5) < 1e-12);
    CHECK(std::abs(Cyclo::root_of_unity(3, 1).to_complex().imag() - std::sqrt(3.0) / 2) < 1e-12);
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> cond(1, 200);
    for (int trial = 0; trial < 40; ++trial) {
        long n = cond(rng);
        Cyclo a = random_value(rng, n), b = random_value(rng, n);
        auto lhs = (a * b).to_complex();
        auto rhs = a.to_complex() * b.to_complex();
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("canonical_form_gives_exact_equality_across_conductors") {
    // zeta_6^2 = zeta_3 even though conductors differ
    CHECK(Cyclo::root_of_unity(6, 2) == Cyclo::root_of_unity(3, 1));
    CHECK(Cyclo::root_of_unity(6, 3) == Cyclo(Rational(-1)));
    CHECK(Cyclo::root_of_unity(12, 0) == Cyclo(Rational(1)));
    CHECK(Cyclo::root_of_unity(5, 1) != Cyclo::root_of_unity(7, 1));
}

TEST_CASE("coefficient_vector_length_is_validated") {
    CHECK_THROWS_AS(Cyclo::from_coeffs(5, {Rational(1)}), std::invalid_argument);
    CHECK_NOTHROW(Cyclo::from_coeffs(5, {Rational(1), Rational(0), Rational(0), Rational(0)}));
}

TEST_CASE("precision_argument_is_validated") {
    CHECK_THROWS_AS(Cyclo(Rational(1)).to_complex(0), std::invalid_argument);
    CHECK_THROWS_AS(Cyclo(Rational(1)).to_complex(16), std::invalid_argument);
    CHECK_NOTHROW(Cyclo(Rational(1)).to_complex(15));
}

} // TEST_SUITE
