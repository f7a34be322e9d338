#pragma once

// Weight combinatorics of sl3 at level k: the level alcove, its root-lattice
// subset, affine (rho-shifted) folding into the alcove, and classical weight
// multiplicities via Freudenthal's recursion (Kostant's formula serves as an
// independent oracle in the tests).
//
// Weights are written in the fundamental-weight basis (eps1, eps2); the
// simple roots are alpha1 = 2*eps1 - eps2 and alpha2 = -eps1 + 2*eps2, the
// highest root is theta = eps1 + eps2, and rho = (1, 1).

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace sl3cat {

struct Weight {
    int m1 = 0;
    int m2 = 0;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline Weight operator+(Weight a, Weight b) { return {a.m1 + b.m1, a.m2 + b.m2}; }
inline Weight operator-(Weight a, Weight b) { return {a.m1 - b.m1, a.m2 - b.m2}; }

constexpr Weight kRho{1, 1};
constexpr Weight kTheta{1, 1}; // highest root, = alpha1 + alpha2

// 3 * <x, y> for the invariant form normalized with <alpha_i, alpha_i> = 2.
inline long dot3(Weight x, Weight y) {
    return 2L * x.m1 * y.m1 + x.m1 * y.m2 + x.m2 * y.m1 + 2L * x.m2 * y.m2;
}

inline bool dominant(Weight w) { return w.m1 >= 0 && w.m2 >= 0; }
inline bool dominant_at(Weight w, int k) { return dominant(w) && w.m1 + w.m2 <= k; }

// Classical (non-quantum) dimension (m1+1)(m2+1)(m1+m2+2)/2.
inline long classical_dim(Weight w) {
    return static_cast<long>(w.m1 + 1) * (w.m2 + 1) * (w.m1 + w.m2 + 2) / 2;
}

struct AlcoveSet {
    int level = 0;
    std::vector<Weight> weights; // lexicographic by (m1, m2)

    std::size_t size() const { return weights.size(); }
    // Position of w in the lexicographic order; requires dominant_at(w, level).
    std::size_t index_of(Weight w) const;
    bool contains(Weight w) const { return dominant_at(w, level); }
};

// Throws std::invalid_argument("invalid level") if k < 1.
AlcoveSet alcove_weights(int k);

// The subset R0 with m1 = m2 (mod 3): alcove weights in the root lattice.
std::vector<Weight> root_lattice_weights(int k);

struct FoldResult {
    std::optional<Weight> target; // nullopt: x is conjugate to a wall point
    int sign = 1;                 // (-1)^(number of reflections applied)
};

// Fold x into the level-k alcove with the rho-shifted reflections tau1, tau2
// (walls <x+rho, alpha_i> = 0) and tau3 (wall <x, theta> = k+1).  If `word`
// is non-null the applied reflection indices (1, 2, 3) are appended to it.
FoldResult affine_fold(Weight x, int k, std::vector<int>* word = nullptr);

// Weight diagram of the irreducible classical representation with highest
// weight `top`: multiplicities on the grid mu = top - a*alpha1 - b*alpha2.
struct WeightDiagram {
    Weight top;
    int span = 0;            // a, b range over [0, span]
    std::vector<long> mult;  // (span+1)^2 entries, index a*(span+1)+b

    long at(int a, int b) const {
        if (a < 0 || b < 0 || a > span || b > span) return 0;
        return mult[static_cast<std::size_t>(a) * (span + 1) + b];
    }
    long total() const;
    // Multiplicity of an arbitrary weight mu (0 outside the diagram).
    long lookup(Weight mu) const;
};

// Cached per highest weight; thread-safe.
const WeightDiagram& weight_diagram(Weight gamma);

// m_gamma(mu), the classical weight-space dimension (Freudenthal).
long weight_multiplicity(Weight gamma, Weight mu);

// Kostant partition count for mu = c1*alpha1 + c2*alpha2.
long kostant_partition(long c1, long c2);

// m_gamma(mu) via Kostant's alternating formula over the 6-element Weyl
// group; independent of the Freudenthal path.
long kostant_multiplicity(Weight gamma, Weight mu);

// The six classical Weyl group elements acting on eps-coordinates, paired
// with their signs (-1)^length.
std::vector<std::pair<Weight (*)(Weight), int>> classical_weyl_group();

} // namespace sl3cat
