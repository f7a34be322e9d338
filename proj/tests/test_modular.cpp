#include "sl3cat/modular.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <map>

using namespace sl3cat;

namespace {

const ModularData& data_at(int k) {
    static std::map<int, ModularData> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, modular_data(k)).first;
    return it->second;
}

using CMat = std::vector<std::vector<std::complex<double>>>;

CMat normalized_s(const ModularData& d) {
    const std::size_t n = d.labels.size();
    double root = std::sqrt(d.global_dim.to_complex().real());
    CMat s(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = d.smatrix[i][j].to_complex() / root;
    return s;
}

CMat mul(const CMat& a, const CMat& b) {
    const std::size_t n = a.size();
    CMat out(n, std::vector<std::complex<double>>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
    return out;
}

} // namespace

TEST_SUITE("modular") {

TEST_CASE("twist_values") {
    CHECK(twist({0, 0}, 5) == Cyclo(Rational(1)));
    CHECK(twist({1, 1}, 3) == Cyclo(Rational(-1)));
    for (int k = 1; k <= 24; ++k) {
        Cyclo expected = Cyclo::root_of_unity(3, k);
        CHECK(twist({0, k}, k) == expected);
        CHECK(twist({k, 0}, k) == expected);
    }
}

TEST_CASE("twists_are_unit_roots_of_bounded_order") {
    for (int k = 1; k <= 8; ++k) {
        for (Weight w : alcove_weights(k).weights) {
            Cyclo t = twist(w, k);
            CHECK(t * t.conjugate() == Cyclo(Rational(1)));
            CHECK(t.pow(twist_conductor(k)) == Cyclo(Rational(1)));
        }
    }
}

TEST_CASE("quantum_dimensions") {
    CHECK(qdim({0, 0}, 4) == Cyclo(Rational(1)));
    CHECK(qdim({1, 1}, 3) == Cyclo(Rational(3)));
    for (int k = 1; k <= 12; ++k) {
        CHECK(qdim({k, 0}, k) == Cyclo(Rational(1)));
        CHECK(qdim({0, k}, k) == Cyclo(Rational(1)));
    }
    for (int k = 1; k <= 6; ++k) {
        for (Weight w : alcove_weights(k).weights) {
            Cyclo d = qdim(w, k);
            CHECK(d.conjugate() == d); // real
            auto z = d.to_complex();
            CHECK(std::abs(z.imag()) < 1e-12);
            CHECK(z.real() >= 1.0 - 1e-9);
            CHECK(std::abs(z.real() - qdim_numeric(w, k)) < 1e-12);
        }
    }
}

TEST_CASE("global_dimension_at_level_three_is_thirty_six") {
    CHECK(data_at(3).global_dim == Cyclo(Rational(36)));
}

TEST_CASE("smatrix_unit_row_symmetry_and_duality") {
    for (int k = 1; k <= 6; ++k) {
        const ModularData& d = data_at(k);
        const std::size_t n = d.labels.size();
        AlcoveSet alcove = alcove_weights(k);
        for (std::size_t j = 0; j < n; ++j) CHECK(d.smatrix[0][j] == d.dims[j]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                CHECK(d.smatrix[i][j] == d.smatrix[j][i]);
                std::size_t jd = alcove.index_of(dual(alcove.weights[j]));
                CHECK(d.smatrix[i][j] == d.smatrix[i][jd].conjugate());
            }
    }
}

TEST_CASE("balancing_entries_recompute_transposed") {
    // recompute a few entries from the raw formula with the roles swapped
    for (int k : {2, 3}) {
        const ModularData& d = data_at(k);
        FusionTable table(k);
        const AlcoveSet& alcove = table.index();
        const long cond = data_conductor(k);
        for (std::size_t a = 0; a < alcove.size(); ++a)
            for (std::size_t b = 0; b < alcove.size(); ++b) {
                Cyclo acc = Cyclo::zero(cond);
                for (std::size_t c = 0; c < alcove.size(); ++c) {
                    long n = table.coeff_by_index(b, a, c);
                    if (n != 0) acc += Rational(n) * (d.twists[c] * d.dims[c]);
                }
                Cyclo entry = d.twists[a].conjugate() * d.twists[b].conjugate() * acc;
                CHECK(entry == d.smatrix[a][b]);
            }
    }
}

TEST_CASE("normalized_s_is_unitary_and_satisfies_the_modular_relation") {
    for (int k = 1; k <= 8; ++k) {
        const ModularData& d = data_at(k);
        const std::size_t n = d.labels.size();
        CMat s = normalized_s(d);
        // unitarity
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::complex<double> acc = 0;
                for (std::size_t l = 0; l < n; ++l) acc += s[i][l] * std::conj(s[j][l]);
                CHECK(std::abs(acc - (i == j ? 1.0 : 0.0)) < 1e-9);
            }
        if (k > 6) continue; // the relation checks stay at desk size
        CMat st(n, std::vector<std::complex<double>>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) st[i][j] = s[i][j] * d.twists[j].to_complex();
        CMat lhs = mul(mul(st, st), st);
        CMat s2 = mul(s, s);
        std::complex<double> xi = d.charge.to_complex();
        AlcoveSet alcove = alcove_weights(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(std::abs(lhs[i][j] - xi * s2[i][j]) < 1e-9);
                // S^2 is the duality permutation
                double expect = (alcove.index_of(dual(alcove.weights[i])) == j) ? 1.0 : 0.0;
                CHECK(std::abs(s2[i][j] - expect) < 1e-9);
            }
    }
}

TEST_CASE("corner_row_detects_the_root_lattice") {
    for (int k = 1; k <= 6; ++k) {
        const ModularData& d = data_at(k);
        AlcoveSet alcove = alcove_weights(k);
        std::size_t corner = alcove.index_of({0, k});
        for (std::size_t j = 0; j < alcove.size(); ++j) {
            Weight w = alcove.weights[j];
            bool in_r0 = (w.m1 - w.m2) % 3 == 0;
            CHECK((d.smatrix[corner][j] == d.dims[j]) == in_r0);
        }
    }
}

TEST_CASE("verlinde_check_passes_and_rejects_degenerate_input") {
    for (int k = 1; k <= 3; ++k) {
        FusionTable table(k);
        VerlindeReport rep = verlinde_check(data_at(k), table);
        CHECK(rep.pass);
        CHECK(rep.max_deviation < 1e-9);
    }
    ModularData bogus = data_at(1);
    for (auto& row : bogus.smatrix)
        for (auto& e : row) e = Cyclo(Rational(1));
    FusionTable t1(1);
    CHECK_THROWS_WITH_AS(verlinde_check(bogus, t1), "degenerate S-matrix", std::domain_error);
}

TEST_CASE("closed_form_charges") {
    CHECK(central_charge_closed_form(8, 3, 2) == Cyclo::root_of_unity(5, 2));   // exp(4*pi*i/5)
    CHECK(central_charge_closed_form(78, 12, 1) == Cyclo::root_of_unity(4, 3)); // -i
    CHECK(central_charge_closed_form(3, 2, 1) == Cyclo::root_of_unity(8, 1));   // (1+i)/sqrt(2)
    CHECK(central_charge_closed_form(133, 18, 1) == Cyclo::root_of_unity(8, 7));
}

TEST_CASE("gauss_sum_charges_match_the_closed_form") {
    for (int k = 1; k <= 10; ++k) {
        Rational exponent;
        AlcoveSet alcove = alcove_weights(k);
        std::vector<Cyclo> dims, twists;
        for (Weight w : alcove.weights) {
            dims.push_back(qdim(w, k));
            twists.push_back(twist(w, k));
        }
        Cyclo charge = gauss_sum_charge(dims, twists, &exponent);
        CHECK(charge == Cyclo::root_of_unity(k + 3, k));
        CHECK(charge == central_charge_closed_form(8, 3, k));
        CHECK(exponent == mod2(Rational(2 * k, k + 3)));
    }
    CHECK(data_at(1).charge == Cyclo::root_of_unity(4, 1));  // i
    CHECK(data_at(2).charge == Cyclo::root_of_unity(5, 2));  // exp(4*pi*i/5)
    CHECK(data_at(3).charge == Cyclo(Rational(-1)));
    CHECK_THROWS_WITH_AS(
        gauss_sum_charge({Cyclo(Rational(1)), Cyclo(Rational(1))},
                         {Cyclo(Rational(1)), Cyclo(Rational(-1))}),
        "degenerate Gauss sum", std::domain_error);
}

TEST_CASE("centralizer_computations") {
    for (int k = 2; k <= 5; ++k) {
        const ModularData& d = data_at(k);
        AlcoveSet alcove = alcove_weights(k);
        const std::size_t n = alcove.size();
        std::vector<std::size_t> everything(n);
        for (std::size_t i = 0; i < n; ++i) {
            everything[i] = i;
            CHECK(centralizes(0, i, d)); // unit centralizes all
        }
        CHECK(centralizer(everything, d) == std::vector<std::size_t>{0}); // nondegeneracy
        CHECK(centralizer({0}, d) == everything);

        std::vector<std::size_t> corners{alcove.index_of({0, 0}), alcove.index_of({k, 0}),
                                         alcove.index_of({0, k})};
        std::vector<Weight> cent;
        for (std::size_t i : centralizer(corners, d)) cent.push_back(alcove.weights[i]);
        CHECK(cent == root_lattice_weights(k));
    }
    // at levels divisible by 3 the corners centralize one another
    const ModularData& d6 = data_at(6);
    AlcoveSet a6 = alcove_weights(6);
    for (Weight a : {Weight{0, 0}, Weight{6, 0}, Weight{0, 6}})
        for (Weight b : {Weight{0, 0}, Weight{6, 0}, Weight{0, 6}})
            CHECK(centralizes(a6.index_of(a), a6.index_of(b), d6));
}

TEST_CASE("prime_decomposition_reports") {
    MugerReport r2 = muger_decompose(2);
    CHECK(r2.pointed.size() == 3);
    CHECK(r2.centralizer.size() == 2);
    CHECK(r2.corner_twist == Cyclo::root_of_unity(3, 2)); // omega^2
    CHECK(r2.centralizer_exponent == Rational(13, 10));   // exp(13*pi*i/10)
    CHECK(r2.factorizable);
    CHECK(r2.pointed_is_prime);

    MugerReport r4 = muger_decompose(4);
    CHECK(r4.corner_twist == Cyclo::root_of_unity(3, 1));
    CHECK(r4.centralizer_exponent == Rational(9, 14));
    CHECK(r4.centralizer.size() == root_lattice_weights(4).size());

    MugerReport r6 = muger_decompose(6);
    CHECK_FALSE(r6.factorizable);
    CHECK(r6.corner_twist == Cyclo(Rational(1)));

    MugerReport r1 = muger_decompose(1);
    CHECK(r1.pointed.size() == 3); // the whole level-1 category is pointed
    CHECK(r1.centralizer.size() == 1);
}

} // TEST_SUITE
