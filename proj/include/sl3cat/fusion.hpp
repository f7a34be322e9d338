#pragma once

// Fusion coefficients of the level-k sl3 categories via the quantum Racah
// formula (Kac-Walton folding), full tables, duality, and the lattice of
// fusion subcategories.  Subcategory machinery is written against a small
// tensor-oracle interface so it also applies to condensed fusion rings.

#include "sl3cat/alcove.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sl3cat {

// N_{a,b}^c at level k, folding the weight diagram of b around a.
// Throws std::domain_error("weight outside alcove") on non-alcove input.
long fusion_coeff(Weight a, Weight b, Weight c, int k);

// Full decomposition of a (x) b as (weight, multiplicity) pairs, sorted.
std::vector<std::pair<Weight, long>> tensor_decompose(Weight a, Weight b, int k);

// (m1, m2)* = (m2, m1).
inline Weight dual(Weight w) { return {w.m2, w.m1}; }

// Closed-form product with a corner weight (k,0) or (0,k).
// Throws std::invalid_argument("not a corner weight") otherwise.
Weight corner_tensor(Weight corner, Weight w, int k);

class FusionTable {
  public:
    explicit FusionTable(int k);

    int level() const { return level_; }
    const AlcoveSet& index() const { return index_; }
    long coeff(Weight a, Weight b, Weight c) const;
    long coeff_by_index(std::size_t a, std::size_t b, std::size_t c) const;

  private:
    int level_;
    AlcoveSet index_;
    bool dense_;
    std::vector<int64_t> dense_coeffs_;                  // rank^3, k <= 12
    std::unordered_map<uint64_t, int64_t> sparse_coeffs_; // above desk scale
};

// Abstract fusion data: integer labels 0..rank-1, unit, duality involution
// and nonnegative structure constants.
struct FusionRing {
    std::size_t rank = 0;
    std::size_t unit = 0;
    std::vector<std::size_t> duals;
    std::vector<int64_t> coeffs; // rank^3 dense, index (a*rank+b)*rank+c
    std::vector<std::string> labels;

    int64_t coeff(std::size_t a, std::size_t b, std::size_t c) const {
        return coeffs[(a * rank + b) * rank + c];
    }
    int64_t& coeff(std::size_t a, std::size_t b, std::size_t c) {
        return coeffs[(a * rank + b) * rank + c];
    }
    bool commutative() const;
    bool associative() const;
    // Unit and duality axioms: N_{a,1}^c = delta, N_{a,b}^1 = delta_{b,a*}.
    bool unital_with_duals() const;
};

// Lazily evaluated tensor structure, for rings too large to materialize.
struct TensorOracle {
    std::size_t rank = 0;
    std::size_t unit = 0;
    std::function<std::size_t(std::size_t)> dual;
    // Appends (c, N_{a,b}^c) pairs with N > 0.
    std::function<void(std::size_t, std::size_t, std::vector<std::pair<std::size_t, long>>&)> tensor;
};

TensorOracle oracle_of(const FusionRing& ring);
// Oracle over the level-k alcove, products computed by folding on demand.
TensorOracle level_oracle(int k);
FusionRing as_ring(const FusionTable& table);

// Smallest subset containing `seed` and the unit, closed under duals and
// under taking all simple summands of pairwise products.  Indices refer to
// the oracle's label set; the result is sorted.
std::vector<std::size_t> subcategory_closure(const TensorOracle& oracle,
                                             const std::vector<std::size_t>& seed);

// Weight-level wrapper over the alcove oracle.
std::vector<Weight> subcategory_closure(const std::vector<Weight>& seed, int k);

// The complete lattice of fusion subcategories, as sorted index sets in
// increasing size order (trivial first, full last).
std::vector<std::vector<std::size_t>> enumerate_fusion_subcategories(const TensorOracle& oracle);
std::vector<std::vector<Weight>> enumerate_fusion_subcategories(int k);

// True iff the subcategory lattice is {trivial, full}.
bool is_simple_category(const TensorOracle& oracle);
bool is_simple_category(const FusionRing& ring);

} // namespace sl3cat
