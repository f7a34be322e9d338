#include "sl3cat/fusion.hpp"
#include "sl3cat/modular.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <set>

using namespace sl3cat;

TEST_SUITE("fusion") {

TEST_CASE("level_one_is_the_order_three_group_law") {
    auto row = tensor_decompose({1, 0}, {1, 0}, 1);
    REQUIRE(row.size() == 1);
    CHECK(row[0].first == Weight{0, 1});
    CHECK(row[0].second == 1);
    CHECK(fusion_coeff({1, 0}, {0, 1}, {0, 0}, 1) == 1);
    FusionRing ring = as_ring(FusionTable(1));
    CHECK(ring.commutative());
    CHECK(ring.associative());
    CHECK(ring.unital_with_duals());
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            long total = 0;
            for (std::size_t c = 0; c < 3; ++c) total += ring.coeff(a, b, c);
            CHECK(total == 1); // invertible simples
        }
}

TEST_CASE("central_weight_self_coefficient") {
    CHECK(fusion_coeff({1, 1}, {1, 1}, {1, 1}, 3) == 2);
    CHECK(fusion_coeff({2, 2}, {2, 2}, {2, 2}, 6) == 3);
}

TEST_CASE("small_products") {
    auto row = tensor_decompose({1, 0}, {0, 1}, 2);
    REQUIRE(row.size() == 2);
    CHECK(row[0] == std::pair<Weight, long>{{0, 0}, 1});
    CHECK(row[1] == std::pair<Weight, long>{{1, 1}, 1});
    CHECK_THROWS_WITH_AS(fusion_coeff({3, 0}, {0, 0}, {0, 0}, 2), "weight outside alcove",
                         std::domain_error);
}

TEST_CASE("corner_products_close_form") {
    CHECK(corner_tensor({0, 6}, {2, 2}, 6) == Weight{2, 2});
    for (int k = 1; k <= 6; ++k) {
        CHECK(corner_tensor({k, 0}, {0, 0}, k) == Weight{k, 0});
        CHECK(corner_tensor({k, 0}, {0, k}, k) == Weight{0, 0});
        // agrees with the folding path, single summand of multiplicity 1
        for (Weight w : alcove_weights(k).weights) {
            auto row = tensor_decompose({0, k}, w, k);
            REQUIRE(row.size() == 1);
            CHECK(row[0].first == corner_tensor({0, k}, w, k));
            CHECK(row[0].second == 1);
        }
    }
    CHECK_THROWS_WITH_AS(corner_tensor({1, 1}, {0, 0}, 3), "not a corner weight",
                         std::invalid_argument);
}

TEST_CASE("duality") {
    CHECK(dual({0, 0}) == Weight{0, 0});
    CHECK(dual({2, 5}) == Weight{5, 2});
    for (Weight w : alcove_weights(6).weights) CHECK(dual(dual(w)) == w);
}

TEST_CASE("ring_axioms_hold_exhaustively_at_low_levels") {
    for (int k = 1; k <= 4; ++k) {
        FusionRing ring = as_ring(FusionTable(k));
        CHECK(ring.commutative());
        CHECK(ring.associative());
        CHECK(ring.unital_with_duals());
    }
}

TEST_CASE("linkage_summands_have_multiplicity_one") {
    for (int k = 1; k <= 5; ++k) {
        AlcoveSet alcove = alcove_weights(k);
        for (Weight lam : alcove.weights)
            for (Weight gam : alcove.weights)
                for (const auto& [sigma, sign] : classical_weyl_group()) {
                    (void)sign;
                    Weight target = lam + sigma(gam);
                    if (!dominant_at(target, k)) continue;
                    CHECK(fusion_coeff(lam, gam, target, k) == 1);
                }
    }
}

TEST_CASE("noncorner_self_products_contain_the_adjoint") {
    for (int k = 2; k <= 6; ++k) {
        for (Weight lam : alcove_weights(k).weights) {
            bool corner = lam == Weight{0, 0} || lam == Weight{k, 0} || lam == Weight{0, k};
            if (corner) continue;
            CHECK(fusion_coeff(lam, dual(lam), kTheta, k) > 0);
        }
    }
}

TEST_CASE("quantum_dimension_is_conserved_in_products") {
    for (int k = 1; k <= 5; ++k) {
        AlcoveSet alcove = alcove_weights(k);
        std::vector<Cyclo> dims;
        for (Weight w : alcove.weights) dims.push_back(qdim(w, k));
        for (std::size_t a = 0; a < alcove.size(); ++a)
            for (std::size_t b = a; b < alcove.size(); ++b) {
                Cyclo total;
                for (const auto& [c, n] : tensor_decompose(alcove.weights[a], alcove.weights[b], k))
                    total += Rational(n) * dims[alcove.index_of(c)];
                CHECK(total == dims[a] * dims[b]);
            }
    }
}

TEST_CASE("frobenius_perron_eigenvalue_matches_quantum_dimension") {
    for (int k : {2, 4, 6}) {
        FusionTable table(k);
        const AlcoveSet& alcove = table.index();
        const std::size_t n = alcove.size();
        for (std::size_t a = 0; a < n; ++a) {
            // power iteration on N_a + I; the shift removes periodicity
            auto apply = [&](const std::vector<double>& in) {
                std::vector<double> out(in);
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        out[c] += static_cast<double>(table.coeff_by_index(a, b, c)) * in[b];
                return out;
            };
            std::vector<double> v(n, 1.0);
            double eig = 0;
            for (int iter = 0; iter < 5000; ++iter) {
                std::vector<double> w = apply(v);
                double norm = 0;
                for (double x : w) norm += x * x;
                norm = std::sqrt(norm);
                for (double& x : w) x /= norm;
                std::vector<double> aw = apply(w);
                double rayleigh = 0;
                for (std::size_t b = 0; b < n; ++b) rayleigh += w[b] * aw[b];
                bool settled = iter > 10 && std::abs(rayleigh - eig) < 1e-13;
                eig = rayleigh;
                v = std::move(w);
                if (settled) break;
            }
            CHECK(std::abs((eig - 1.0) - qdim_numeric(alcove.weights[a], k)) < 1e-9);
        }
    }
}

TEST_CASE("subcategory_closures") {
    for (int k = 2; k <= 6; ++k) {
        std::vector<Weight> corners{{0, 0}, {0, k}, {k, 0}};
        CHECK(subcategory_closure({{0, k}}, k) == corners);
        CHECK(subcategory_closure({kTheta}, k) == root_lattice_weights(k));
    }
    CHECK(subcategory_closure({}, 4) == std::vector<Weight>{{0, 0}});
    CHECK(subcategory_closure({{1, 1}}, 3) == root_lattice_weights(3));
}

TEST_CASE("subcategory_lattice_counts") {
    CHECK(enumerate_fusion_subcategories(1).size() == 2);
    for (int k = 2; k <= 4; ++k) CHECK(enumerate_fusion_subcategories(k).size() == 4);
}

TEST_CASE("simplicity_of_the_level_rings") {
    CHECK(is_simple_category(level_oracle(1)));
    CHECK_FALSE(is_simple_category(level_oracle(3)));
    CHECK_FALSE(is_simple_category(as_ring(FusionTable(4))));
}

} // TEST_SUITE
