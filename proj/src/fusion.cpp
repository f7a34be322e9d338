#include "sl3cat/fusion.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

namespace sl3cat {

std::vector<std::pair<Weight, long>> tensor_decompose(Weight a, Weight b, int k) {
    if (!dominant_at(a, k) || !dominant_at(b, k)) throw std::domain_error("weight outside alcove");
    const WeightDiagram& diagram = weight_diagram(b);
    std::map<Weight, long> acc;
    const int n = diagram.span + 1;
    for (int ai = 0; ai < n; ++ai) {
        for (int bi = 0; bi < n; ++bi) {
            long m = diagram.at(ai, bi);
            if (m == 0) continue;
            Weight mu{b.m1 - 2 * ai + bi, b.m2 + ai - 2 * bi};
            FoldResult f = affine_fold(a + mu, k);
            if (!f.target) continue;
            acc[*f.target] += f.sign * m;
        }
    }
    std::vector<std::pair<Weight, long>> out;
    for (const auto& [w, n_w] : acc) {
        if (n_w == 0) continue;
        if (n_w < 0) throw std::logic_error("negative fusion coefficient");
        out.emplace_back(w, n_w);
    }
    return out;
}

long fusion_coeff(Weight a, Weight b, Weight c, int k) {
    if (!dominant_at(c, k)) throw std::domain_error("weight outside alcove");
    for (const auto& [w, n] : tensor_decompose(a, b, k))
        if (w == c) return n;
    return 0;
}

Weight corner_tensor(Weight corner, Weight w, int k) {
    if (!dominant_at(w, k)) throw std::domain_error("weight outside alcove");
    if (corner == Weight{k, 0}) return {k - w.m1 - w.m2, w.m1};
    if (corner == Weight{0, k}) return {w.m2, k - w.m1 - w.m2};
    if (corner == Weight{0, 0}) return w;
    throw std::invalid_argument("not a corner weight");
}

FusionTable::FusionTable(int k) : level_(k), index_(alcove_weights(k)) {
    const std::size_t n = index_.size();
    dense_ = k <= 12;
    if (dense_) dense_coeffs_.assign(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Weight a = index_.weights[i], b = index_.weights[j];
            // fold the smaller diagram; the result is symmetric in (a, b)
            auto row = (a.m1 + a.m2 <= b.m1 + b.m2) ? tensor_decompose(b, a, k)
                                                    : tensor_decompose(a, b, k);
            for (const auto& [c, n_c] : row) {
                std::size_t l = index_.index_of(c);
                if (dense_) {
                    dense_coeffs_[(i * n + j) * n + l] = n_c;
                    dense_coeffs_[(j * n + i) * n + l] = n_c;
                } else {
                    sparse_coeffs_[(static_cast<uint64_t>(i) * n + j) * n + l] = n_c;
                    sparse_coeffs_[(static_cast<uint64_t>(j) * n + i) * n + l] = n_c;
                }
            }
        }
    }
}

long FusionTable::coeff_by_index(std::size_t a, std::size_t b, std::size_t c) const {
    const std::size_t n = index_.size();
    if (dense_) return dense_coeffs_[(a * n + b) * n + c];
    auto it = sparse_coeffs_.find((static_cast<uint64_t>(a) * n + b) * n + c);
    return it == sparse_coeffs_.end() ? 0 : it->second;
}

long FusionTable::coeff(Weight a, Weight b, Weight c) const {
    return coeff_by_index(index_.index_of(a), index_.index_of(b), index_.index_of(c));
}

bool FusionRing::commutative() const {
    for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = a + 1; b < rank; ++b)
            for (std::size_t c = 0; c < rank; ++c)
                if (coeff(a, b, c) != coeff(b, a, c)) return false;
    return true;
}

bool FusionRing::associative() const {
    for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = 0; b < rank; ++b)
            for (std::size_t c = 0; c < rank; ++c)
                for (std::size_t d = 0; d < rank; ++d) {
                    int64_t lhs = 0, rhs = 0;
                    for (std::size_t s = 0; s < rank; ++s) {
                        lhs += coeff(a, b, s) * coeff(s, c, d);
                        rhs += coeff(b, c, s) * coeff(a, s, d);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

bool FusionRing::unital_with_duals() const {
    for (std::size_t a = 0; a < rank; ++a) {
        for (std::size_t c = 0; c < rank; ++c) {
            if (coeff(a, unit, c) != (a == c ? 1 : 0)) return false;
            if (coeff(unit, a, c) != (a == c ? 1 : 0)) return false;
            if (coeff(a, c, unit) != (c == duals[a] ? 1 : 0)) return false;
        }
    }
    return true;
}

FusionRing as_ring(const FusionTable& table) {
    FusionRing r;
    const auto& idx = table.index();
    r.rank = idx.size();
    r.unit = idx.index_of({0, 0});
    r.duals.resize(r.rank);
    r.labels.resize(r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) {
        Weight w = idx.weights[i];
        r.duals[i] = idx.index_of(dual(w));
        r.labels[i] = "(" + std::to_string(w.m1) + "," + std::to_string(w.m2) + ")";
    }
    r.coeffs.resize(r.rank * r.rank * r.rank);
    for (std::size_t a = 0; a < r.rank; ++a)
        for (std::size_t b = 0; b < r.rank; ++b)
            for (std::size_t c = 0; c < r.rank; ++c)
                r.coeff(a, b, c) = table.coeff_by_index(a, b, c);
    return r;
}

TensorOracle oracle_of(const FusionRing& ring) {
    TensorOracle o;
    o.rank = ring.rank;
    o.unit = ring.unit;
    o.dual = [&ring](std::size_t a) { return ring.duals[a]; };
    o.tensor = [&ring](std::size_t a, std::size_t b, std::vector<std::pair<std::size_t, long>>& out) {
        for (std::size_t c = 0; c < ring.rank; ++c) {
            int64_t n = ring.coeff(a, b, c);
            if (n > 0) out.emplace_back(c, static_cast<long>(n));
        }
    };
    return o;
}

TensorOracle level_oracle(int k) {
    auto alcove = std::make_shared<AlcoveSet>(alcove_weights(k));
    TensorOracle o;
    o.rank = alcove->size();
    o.unit = 0;
    o.dual = [alcove](std::size_t a) { return alcove->index_of(dual(alcove->weights[a])); };
    o.tensor = [alcove, k](std::size_t a, std::size_t b, std::vector<std::pair<std::size_t, long>>& out) {
        Weight wa = alcove->weights[a], wb = alcove->weights[b];
        auto row = (wa.m1 + wa.m2 <= wb.m1 + wb.m2) ? tensor_decompose(wb, wa, k)
                                                    : tensor_decompose(wa, wb, k);
        for (const auto& [c, n] : row) out.emplace_back(alcove->index_of(c), n);
    };
    return o;
}

std::vector<std::size_t> subcategory_closure(const TensorOracle& oracle,
                                             const std::vector<std::size_t>& seed) {
    // Generators: the seed and its duals.  Every object of the generated
    // subcategory is a summand of a word in the generators, and iterated
    // left multiplication by generators reaches exactly those summands.
    std::set<std::size_t> gens;
    for (std::size_t s : seed) {
        gens.insert(s);
        gens.insert(oracle.dual(s));
    }
    std::set<std::size_t> members{oracle.unit};
    members.insert(gens.begin(), gens.end());
    std::vector<std::size_t> frontier(members.begin(), members.end());
    std::vector<std::pair<std::size_t, long>> row;
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t t : frontier) {
            for (std::size_t g : gens) {
                row.clear();
                oracle.tensor(g, t, row);
                for (const auto& [c, n] : row) {
                    (void)n;
                    if (members.insert(c).second) next.push_back(c);
                }
            }
        }
        frontier = std::move(next);
    }
    return {members.begin(), members.end()};
}

std::vector<Weight> subcategory_closure(const std::vector<Weight>& seed, int k) {
    AlcoveSet alcove = alcove_weights(k);
    std::vector<std::size_t> s;
    for (Weight w : seed) s.push_back(alcove.index_of(w));
    std::vector<Weight> out;
    for (std::size_t i : subcategory_closure(level_oracle(k), s)) out.push_back(alcove.weights[i]);
    return out;
}

std::vector<std::vector<std::size_t>> enumerate_fusion_subcategories(const TensorOracle& oracle) {
    std::set<std::vector<std::size_t>> subs;
    subs.insert(subcategory_closure(oracle, {}));
    for (std::size_t i = 0; i < oracle.rank; ++i) subs.insert(subcategory_closure(oracle, {i}));
    // Every fusion subcategory is a join of singly generated ones; close
    // under pairwise joins.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::size_t>> current(subs.begin(), subs.end());
        for (std::size_t i = 0; i < current.size() && !grew; ++i) {
            for (std::size_t j = i + 1; j < current.size() && !grew; ++j) {
                std::vector<std::size_t> joined = current[i];
                joined.insert(joined.end(), current[j].begin(), current[j].end());
                auto closure = subcategory_closure(oracle, joined);
                if (subs.insert(closure).second) grew = true;
            }
        }
    }
    std::vector<std::vector<std::size_t>> out(subs.begin(), subs.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<std::vector<Weight>> enumerate_fusion_subcategories(int k) {
    AlcoveSet alcove = alcove_weights(k);
    std::vector<std::vector<Weight>> out;
    for (const auto& sub : enumerate_fusion_subcategories(level_oracle(k))) {
        std::vector<Weight> s;
        for (std::size_t i : sub) s.push_back(alcove.weights[i]);
        out.push_back(std::move(s));
    }
    return out;
}

bool is_simple_category(const TensorOracle& oracle) {
    auto subs = enumerate_fusion_subcategories(oracle);
    for (const auto& s : subs)
        if (s.size() != 1 && s.size() != oracle.rank) return false;
    return true;
}

bool is_simple_category(const FusionRing& ring) { return is_simple_category(oracle_of(ring)); }

} // namespace sl3cat
