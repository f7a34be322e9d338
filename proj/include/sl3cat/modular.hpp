#pragma once

// Modular data of the level-k sl3 categories: twists, quantum dimensions,
// the unnormalized S-matrix via the balancing formula, Gauss-sum and
// closed-form central charges, centralizers and the prime decomposition.
//
// Exact values live in the single conductor 6(k+3), which contains
// q = zeta_{2(k+3)}, all twists (order dividing 3(k+3)) and the cube roots
// of unity.  Floating point appears only in renderings and in explicitly
// numerical checks (Verlinde, unitarity).
//
// Pinned convention: with S = s~/sqrt(dim C) and T = diag(theta), the
// modular relation asserted numerically is (S T)^3 = xi * S^2, and S^2 is
// the duality permutation.

#include "sl3cat/cyclo.hpp"
#include "sl3cat/fusion.hpp"

#include <optional>
#include <string>

namespace sl3cat {

inline long twist_conductor(int k) { return 3L * (k + 3); }
inline long data_conductor(int k) { return 6L * (k + 3); }

// Exponent E with theta = zeta_{3(k+3)}^E.
long twist_exponent(Weight w, int k);
Cyclo twist(Weight w, int k);

// Quantum integer [n] = (q^n - q^-n)/(q - q^-1) in conductor 6(k+3).
Cyclo quantum_integer(long n, int k);
// [m1+1][m2+1][m1+m2+2]/[2], exact and real.
Cyclo qdim(Weight w, int k);
// Evaluation of the sine product formula, for numerical cross-checks.
double qdim_numeric(Weight w, int k);

struct ModularData {
    int level = 0;
    std::vector<std::string> labels;
    std::vector<Weight> weights; // empty for non-alcove (condensed) data
    std::vector<Cyclo> twists;
    std::vector<Cyclo> dims;
    std::vector<std::vector<Cyclo>> smatrix; // unnormalized s~
    Cyclo global_dim;
    Cyclo charge;             // root of unity xi
    Rational charge_exponent; // xi = exp(pi*i*t), t in [0,2)
};

// s~ from the balancing formula
//   s~_{ab} = theta_a^-1 theta_b^-1 sum_c N_{ab}^c theta_c dim(c).
std::vector<std::vector<Cyclo>> smatrix_balancing(const FusionRing& ring,
                                                  const std::vector<Cyclo>& twists,
                                                  const std::vector<Cyclo>& dims,
                                                  long conductor);

// Complete modular data at level k (builds the fusion table; desk scale).
ModularData modular_data(int k);

struct VerlindeReport {
    bool pass = false;
    double max_deviation = 0.0;
};

// Recompute every fusion coefficient from the normalized S-matrix, round to
// the nearest integer and compare with the table.  Throws
// std::domain_error("degenerate S-matrix") if S is numerically singular.
VerlindeReport verlinde_check(const ModularData& data, const FusionTable& table);

// Exact Verlinde: N_{ab}^c = (1/dim C) sum_s s~_as s~_bs conj(s~_cs)/s~_1s,
// feasible for small ranks.  Returns the recomputed ring coefficients.
std::vector<int64_t> verlinde_exact(const ModularData& data);

// exp(2*pi*i/8 * k*dim_g/(k+h_dual)) as an exact root of unity.
Cyclo central_charge_closed_form(long dim_g, long h_dual, long k);
Rational central_charge_exponent(long dim_g, long h_dual, long k); // multiple of pi*i, in [0,2)

// Normalized Gauss sum tau+/|tau+| as an exact root of unity, located by a
// float scan and certified by the exact identity (tau+)^2 = xi^2 * dim.
// Throws std::domain_error("degenerate Gauss sum") if tau+ = 0.
Cyclo gauss_sum_charge(const std::vector<Cyclo>& dims, const std::vector<Cyclo>& twists,
                       Rational* exponent = nullptr);
Cyclo gauss_sum_charge(const ModularData& data, Rational* exponent = nullptr);

// s~_{ab} = dim(a) dim(b), exactly.
bool centralizes(std::size_t a, std::size_t b, const ModularData& data);
std::vector<std::size_t> centralizer(const std::vector<std::size_t>& subset, const ModularData& data);

struct MugerReport {
    int level = 0;
    std::vector<Weight> pointed;     // simples of dimension exactly 1
    std::vector<Weight> centralizer; // centralizer of the pointed part
    Cyclo corner_twist;
    Rational full_exponent;
    Rational pointed_exponent;
    Rational centralizer_exponent; // full - pointed, mod 2
    bool factorizable = false;     // false when 3 | k (corners transparent)
    bool pointed_is_prime = false;
    std::string centralizer_note;
};

// Prime decomposition of level k through the pointed part and its
// centralizer; when 3 | k the corners are transparent and the category does
// not factor this way.
MugerReport muger_decompose(int k);

} // namespace sl3cat
