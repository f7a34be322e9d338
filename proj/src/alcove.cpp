#include "sl3cat/alcove.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace sl3cat {

std::size_t AlcoveSet::index_of(Weight w) const {
    if (!dominant_at(w, level)) throw std::domain_error("weight outside alcove");
    // Preceding m1-rows have (level+1-i) entries each.
    long idx = static_cast<long>(w.m1) * (level + 1) - static_cast<long>(w.m1) * (w.m1 - 1) / 2 + w.m2;
    return static_cast<std::size_t>(idx);
}

AlcoveSet alcove_weights(int k) {
    if (k < 1) throw std::invalid_argument("invalid level");
    AlcoveSet a;
    a.level = k;
    a.weights.reserve(static_cast<std::size_t>(k + 1) * (k + 2) / 2);
    for (int m1 = 0; m1 <= k; ++m1)
        for (int m2 = 0; m2 + m1 <= k; ++m2) a.weights.push_back({m1, m2});
    return a;
}

std::vector<Weight> root_lattice_weights(int k) {
    std::vector<Weight> out;
    for (Weight w : alcove_weights(k).weights)
        if ((w.m1 - w.m2) % 3 == 0) out.push_back(w);
    return out;
}

FoldResult affine_fold(Weight x, int k, std::vector<int>* word) {
    // Work with the shifted point y = x + rho.  Walls: y1 = 0, y2 = 0,
    // y1 + y2 = k + 3; the shifted alcove interior is y1, y2 >= 1 and
    // y1 + y2 <= k + 2.
    long y1 = x.m1 + 1, y2 = x.m2 + 1;
    const long bound = k + 3;
    int sign = 1;
    int guard = 0;
    for (;;) {
        if (y1 == 0 || y2 == 0 || y1 + y2 == bound) return {std::nullopt, sign};
        if (y1 > 0 && y2 > 0 && y1 + y2 < bound) break;
        if (++guard > 16 * (std::abs(x.m1) + std::abs(x.m2) + k + 8))
            throw std::logic_error("affine fold did not terminate");
        if (y1 < 0) {
            long t = y1;
            y1 = -t;
            y2 = y2 + t;
            sign = -sign;
            if (word) word->push_back(1);
        } else if (y2 < 0) {
            long t = y2;
            y1 = y1 + t;
            y2 = -t;
            sign = -sign;
            if (word) word->push_back(2);
        } else {
            long t = y1 + y2 - bound;
            y1 -= t;
            y2 -= t;
            sign = -sign;
            if (word) word->push_back(3);
        }
    }
    return {Weight{static_cast<int>(y1 - 1), static_cast<int>(y2 - 1)}, sign};
}

long WeightDiagram::total() const {
    long t = 0;
    for (long m : mult) t += m;
    return t;
}

long WeightDiagram::lookup(Weight mu) const {
    // Solve top - mu = a*alpha1 + b*alpha2 in eps-coordinates.
    long d1 = top.m1 - mu.m1, d2 = top.m2 - mu.m2;
    long a3 = 2 * d1 + d2, b3 = d1 + 2 * d2;
    if (a3 % 3 != 0 || b3 % 3 != 0) return 0;
    long a = a3 / 3, b = b3 / 3;
    if (a < 0 || b < 0 || a > span || b > span) return 0;
    return at(static_cast<int>(a), static_cast<int>(b));
}

namespace {

Weight dominant_conjugate(Weight w) {
    while (!dominant(w)) {
        if (w.m1 < 0)
            w = {-w.m1, w.m1 + w.m2};
        else
            w = {w.m1 + w.m2, -w.m2};
    }
    return w;
}

WeightDiagram compute_diagram(Weight gamma) {
    WeightDiagram d;
    d.top = gamma;
    d.span = gamma.m1 + gamma.m2;
    const int n = d.span + 1;
    d.mult.assign(static_cast<std::size_t>(n) * n, 0);
    if (d.span == 0) {
        d.mult[0] = 1;
        return d;
    }
    const long top_norm3 = dot3(gamma + kRho, gamma + kRho);
    auto mu_of = [&](int a, int b) {
        return Weight{gamma.m1 - 2 * a + b, gamma.m2 + a - 2 * b};
    };
    auto set = [&](int a, int b, long v) { d.mult[static_cast<std::size_t>(a) * n + b] = v; };

    set(0, 0, 1);
    for (int h = 1; h <= 2 * d.span; ++h) {
        for (int a = std::max(0, h - d.span); a <= std::min(h, d.span); ++a) {
            int b = h - a;
            Weight mu = mu_of(a, b);
            // Saturation: mu is a weight iff its dominant conjugate is below
            // gamma in the dominance order.
            Weight dc = dominant_conjugate(mu);
            long e1 = 2L * (gamma.m1 - dc.m1) + (gamma.m2 - dc.m2);
            long e2 = (gamma.m1 - dc.m1) + 2L * (gamma.m2 - dc.m2);
            if (e1 % 3 != 0 || e2 % 3 != 0 || e1 < 0 || e2 < 0) continue;

            long rhs = 0; // sum over positive-root strings above mu
            for (int j = 1; j <= a; ++j) {
                Weight up = mu + Weight{2 * j, -j};
                rhs += d.at(a - j, b) * (up.m1); // <up, alpha1>
            }
            for (int j = 1; j <= b; ++j) {
                Weight up = mu + Weight{-j, 2 * j};
                rhs += d.at(a, b - j) * (up.m2); // <up, alpha2>
            }
            for (int j = 1; j <= std::min(a, b); ++j) {
                Weight up = mu + Weight{j, j};
                rhs += d.at(a - j, b - j) * (up.m1 + up.m2); // <up, theta>
            }
            long denom3 = top_norm3 - dot3(mu + kRho, mu + kRho);
            if (denom3 <= 0) throw std::logic_error("Freudenthal denominator not positive");
            long num = 6 * rhs;
            if (num % denom3 != 0) throw std::logic_error("Freudenthal division not exact");
            set(a, b, num / denom3);
        }
    }
    return d;
}

} // namespace

const WeightDiagram& weight_diagram(Weight gamma) {
    if (!dominant(gamma)) throw std::invalid_argument("highest weight must be dominant");
    static std::mutex mu;
    static std::map<Weight, WeightDiagram> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(gamma);
    if (it == cache.end()) it = cache.emplace(gamma, compute_diagram(gamma)).first;
    return it->second;
}

long weight_multiplicity(Weight gamma, Weight mu) { return weight_diagram(gamma).lookup(mu); }

long kostant_partition(long c1, long c2) {
    if (c1 < 0 || c2 < 0) return 0;
    return std::min(c1, c2) + 1;
}

std::vector<std::pair<Weight (*)(Weight), int>> classical_weyl_group() {
    return {
        {+[](Weight w) { return w; }, +1},
        {+[](Weight w) { return Weight{-w.m1, w.m1 + w.m2}; }, -1},          // s1
        {+[](Weight w) { return Weight{w.m1 + w.m2, -w.m2}; }, -1},          // s2
        {+[](Weight w) { return Weight{-w.m1 - w.m2, w.m1}; }, +1},          // s1 s2
        {+[](Weight w) { return Weight{w.m2, -w.m1 - w.m2}; }, +1},          // s2 s1
        {+[](Weight w) { return Weight{-w.m2, -w.m1}; }, -1},                // longest element
    };
}

long kostant_multiplicity(Weight gamma, Weight mu) {
    if (!dominant(gamma)) throw std::invalid_argument("highest weight must be dominant");
    long total = 0;
    Weight shifted_mu = mu + kRho;
    for (const auto& [sigma, sign] : classical_weyl_group()) {
        Weight v = sigma(gamma + kRho) - shifted_mu;
        long a3 = 2L * v.m1 + v.m2, b3 = v.m1 + 2L * v.m2;
        if (a3 % 3 != 0 || b3 % 3 != 0) continue;
        total += sign * kostant_partition(a3 / 3, b3 / 3);
    }
    return total;
}

} // namespace sl3cat
