#include "sl3cat/condense.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace sl3cat {

std::vector<Weight> rotation_orbit(Weight w, int k) {
    if (!dominant_at(w, k)) throw std::domain_error("weight outside alcove");
    std::set<Weight> orbit{w};
    Weight x = w;
    for (int i = 0; i < 2; ++i) {
        x = Weight{k - x.m1 - x.m2, x.m1};
        orbit.insert(x);
    }
    return {orbit.begin(), orbit.end()};
}

Cyclo CondensedData::global_dim() const {
    Cyclo acc;
    for (const Cyclo& d : dims) acc += d * d;
    return acc;
}

CondensedData condensed_simples(int k) {
    if (k < 3 || k % 3 != 0) throw std::domain_error("no Type-D algebra at this level");
    CondensedData cd;
    cd.level = k;
    cd.m = k / 3;
    const Weight center{cd.m, cd.m};

    // Etale prerequisite: the corner twists are trivial when 3 | k.
    if (twist({0, k}, k) != Cyclo(Rational(1)))
        throw std::logic_error("corner twist is not trivial at a multiple-of-3 level");

    std::set<Weight> seen;
    for (Weight w : root_lattice_weights(k)) {
        if (w == center || seen.count(w)) continue;
        std::vector<Weight> orbit = rotation_orbit(w, k);
        if (orbit.size() != 3) throw std::logic_error("free rotation orbit of unexpected size");
        for (Weight o : orbit) {
            if ((o.m1 - o.m2) % 3 != 0) throw std::logic_error("rotation orbit left the root lattice");
            seen.insert(o);
        }
        CondensedSimple s;
        s.stationary = false;
        s.orbit = orbit;
        s.label = "F(" + std::to_string(orbit.front().m1) + "," + std::to_string(orbit.front().m2) + ")";
        cd.simples.push_back(std::move(s));
    }
    for (int i = 1; i <= 3; ++i) {
        CondensedSimple s;
        s.stationary = true;
        s.orbit = {center};
        s.stationary_index = i;
        s.label = "X" + std::to_string(i);
        cd.simples.push_back(std::move(s));
    }

    const Cyclo stat_dim = stationary_dim(cd.m);
    const Cyclo stat_twist = twist(center, k);
    for (const CondensedSimple& s : cd.simples) {
        if (s.stationary) {
            cd.dims.push_back(stat_dim);
            cd.twists.push_back(stat_twist);
        } else {
            Weight rep = s.representative();
            Cyclo t = twist(rep, k);
            for (Weight o : s.orbit)
                if (twist(o, k) != t) throw std::logic_error("twist not constant on a rotation orbit");
            cd.dims.push_back(qdim(rep, k));
            cd.twists.push_back(t);
        }
    }

    const AlcoveSet alcove = alcove_weights(k);
    cd.branching.assign(alcove.size(), std::vector<int>(cd.simples.size(), 0));
    for (std::size_t col = 0; col < cd.simples.size(); ++col)
        for (Weight w : cd.simples[col].orbit) cd.branching[alcove.index_of(w)][col] = 1;
    return cd;
}

Cyclo stationary_dim(int m) {
    if (m < 1) throw std::invalid_argument("invalid level");
    return Rational(1, 3) * qdim({m, m}, 3 * m);
}

double stationary_dim_closed_form(int m) {
    double a = M_PI / (3.0 * (m + 1));
    return std::sqrt(3.0) / (8.0 * std::sin(2 * a) * std::sin(a) * std::sin(a));
}

AggregateFusion free_fusion(const CondensedData& data, std::size_t a, std::size_t b) {
    const std::size_t nf = data.free_count();
    if (a > nf || b > nf) throw std::invalid_argument("free_fusion expects free or aggregate slots");
    const Weight center{data.m, data.m};
    auto rep = [&](std::size_t i) { return i == nf ? center : data.simples[i].representative(); };

    std::map<Weight, std::size_t> orbit_of;
    for (std::size_t i = 0; i < nf; ++i)
        for (Weight w : data.simples[i].orbit) orbit_of[w] = i;

    AggregateFusion out;
    for (const auto& [w, n] : tensor_decompose(rep(a), rep(b), data.level)) {
        if ((w.m1 - w.m2) % 3 != 0)
            throw std::logic_error("non-root-lattice summand in a condensed product");
        if (w == center) {
            out.stationary += n;
        } else {
            out.free[orbit_of.at(w)] += n;
        }
    }
    return out;
}

namespace {

// Multisets over {0,1,2} as count triples.
using Counts = std::array<long, 3>;

std::vector<Counts> multisets_of_size(long r) {
    std::vector<Counts> out;
    for (long c0 = 0; c0 <= r; ++c0)
        for (long c1 = 0; c0 + c1 <= r; ++c1) out.push_back({c0, c1, r - c0 - c1});
    return out;
}

Counts shifted(const Counts& c, int s) {
    Counts out{};
    for (int i = 0; i < 3; ++i) out[(i + s) % 3] = c[i];
    return out;
}

// Solve rem = r * unit_dim for a nonnegative integer r (exactly); nullopt if
// no such r exists.
std::optional<long> exact_ratio(const Cyclo& rem, const Cyclo& unit_dim) {
    double guess = rem.to_complex().real() / unit_dim.to_complex().real();
    long r = std::lround(guess);
    if (r < 0 || std::abs(guess - r) > 1e-6) return std::nullopt;
    if (rem != Rational(r) * unit_dim) return std::nullopt;
    return r;
}

} // namespace

FusionRing resolved_fusion_table(int k) {
    if (k != 3 && k != 6)
        throw std::domain_error("no resolved fusion table at this level (only levels 3 and 6 are determined)");
    const CondensedData cd = condensed_simples(k);
    const std::size_t nf = cd.free_count();
    const std::size_t rank = nf + 3;
    const Cyclo eps = cd.dims[nf]; // stationary dimension

    // Free-only products and aggregates against the central free image.
    std::vector<std::vector<AggregateFusion>> ff(nf, std::vector<AggregateFusion>(nf));
    for (std::size_t a = 0; a < nf; ++a)
        for (std::size_t b = 0; b < nf; ++b) ff[a][b] = free_fusion(cd, a, b);
    std::vector<AggregateFusion> fx(nf);
    for (std::size_t a = 0; a < nf; ++a) fx[a] = free_fusion(cd, a, nf);
    AggregateFusion xx = free_fusion(cd, nf, nf);

    std::vector<std::size_t> dual_free(nf);
    for (std::size_t a = 0; a < nf; ++a) {
        Weight d = dual(cd.simples[a].representative());
        dual_free[a] = nf; // poison
        for (std::size_t b = 0; b < nf; ++b)
            if (std::count(cd.simples[b].orbit.begin(), cd.simples[b].orbit.end(), d))
                dual_free[a] = b;
        if (dual_free[a] == nf) throw std::logic_error("dual of a free orbit is not free");
    }

    // yx_free[a][b] = N(Ya, X_s, Yb), independent of s by the cyclic corner
    // action: it equals the stationary multiplicity in dual(Ya) (x) Yb.
    std::vector<std::vector<long>> yx_free(nf, std::vector<long>(nf, 0));
    for (std::size_t a = 0; a < nf; ++a)
        for (std::size_t b = 0; b < nf; ++b) yx_free[a][b] = free_fusion(cd, dual_free[a], b).stationary;

    // Stationary multiplicity count in Ya (x) X_s, from exact dimensions.
    std::vector<long> r_count(nf);
    for (std::size_t a = 0; a < nf; ++a) {
        Cyclo rem = cd.dims[a] * eps;
        for (std::size_t b = 0; b < nf; ++b) rem = rem - Rational(yx_free[a][b]) * cd.dims[b];
        auto r = exact_ratio(rem, eps);
        if (!r) throw std::logic_error("free-stationary dimension count is not integral");
        r_count[a] = *r;
    }
    if (r_count[0] != 1) throw std::logic_error("unit row of the condensed table is inconsistent");

    // Search the undetermined stationary summands.  M[a] is the stationary
    // multiset of Ya (x) X1; rows for X2, X3 follow by the cyclic symmetry.
    // T_d, T_o are the stationary multisets of X1 (x) X1 and X1 (x) X2.
    std::vector<std::vector<Counts>> m_choices(nf);
    m_choices[0] = {Counts{1, 0, 0}}; // unit axiom: 1 (x) X_s = X_s
    for (std::size_t a = 1; a < nf; ++a) m_choices[a] = multisets_of_size(r_count[a]);

    std::vector<FusionRing> solutions;
    std::vector<std::size_t> choice(nf, 0);
    auto build_and_check = [&](const std::vector<Counts>& m_sel) {
        // N(X_s, X_t, Yb) = multiplicity of (s - t mod 3) in M[b].
        auto nxx_free = [&](int s, int t, std::size_t b) {
            return m_sel[b][((s - t) % 3 + 3) % 3];
        };
        // Stationary remainder of X_s (x) X_t depends only on s - t mod 3.
        Cyclo rem_same = eps * eps, rem_mixed = eps * eps;
        for (std::size_t b = 0; b < nf; ++b) {
            rem_same = rem_same - Rational(nxx_free(0, 0, b)) * cd.dims[b];
            rem_mixed = rem_mixed - Rational(nxx_free(1, 0, b)) * cd.dims[b];
        }
        auto s_d = exact_ratio(rem_same, eps);
        auto s_o = exact_ratio(rem_mixed, eps);
        if (!s_d || !s_o) return;

        for (const Counts& t_d : multisets_of_size(*s_d)) {
            for (const Counts& t_o : multisets_of_size(*s_o)) {
                FusionRing ring;
                ring.rank = rank;
                ring.unit = 0;
                ring.coeffs.assign(rank * rank * rank, 0);
                ring.labels.resize(rank);
                for (std::size_t i = 0; i < rank; ++i) ring.labels[i] = cd.simples[i].label;

                for (std::size_t a = 0; a < nf; ++a)
                    for (std::size_t b = 0; b < nf; ++b) {
                        for (const auto& [c, n] : ff[a][b].free) ring.coeff(a, b, c) = n;
                        for (int t = 0; t < 3; ++t) ring.coeff(a, b, nf + t) = ff[a][b].stationary;
                    }
                for (std::size_t a = 0; a < nf; ++a)
                    for (int s = 0; s < 3; ++s) {
                        for (std::size_t b = 0; b < nf; ++b) {
                            ring.coeff(a, nf + s, b) = yx_free[a][b];
                            ring.coeff(nf + s, a, b) = yx_free[a][b];
                        }
                        Counts row = shifted(m_sel[a], s);
                        for (int t = 0; t < 3; ++t) {
                            ring.coeff(a, nf + s, nf + t) = row[t];
                            ring.coeff(nf + s, a, nf + t) = row[t];
                        }
                    }
                for (int s = 0; s < 3; ++s)
                    for (int t = 0; t < 3; ++t) {
                        for (std::size_t b = 0; b < nf; ++b)
                            ring.coeff(nf + s, nf + t, b) = nxx_free(s, t, b);
                        Counts stat = (s == t) ? shifted(t_d, s)
                                               : ((t - s) % 3 + 3) % 3 == 1 ? shifted(t_o, s)
                                                                            : shifted(t_o, t);
                        for (int u = 0; u < 3; ++u) ring.coeff(nf + s, nf + t, nf + u) = stat[u];
                    }

                // Duality from the unit column; bail out if ill-formed.
                ring.duals.assign(rank, rank);
                bool ok = true;
                for (std::size_t a = 0; a < rank && ok; ++a) {
                    std::size_t d = rank;
                    for (std::size_t b = 0; b < rank; ++b) {
                        if (ring.coeff(a, b, ring.unit) == 1) {
                            if (d != rank) ok = false;
                            d = b;
                        } else if (ring.coeff(a, b, ring.unit) != 0) {
                            ok = false;
                        }
                    }
                    if (d == rank) ok = false;
                    ring.duals[a] = d;
                }
                if (!ok || !ring.unital_with_duals() || !ring.commutative()) continue;

                // Aggregate consistency with the ambient category.
                for (std::size_t b = 0; b < nf && ok; ++b) {
                    long acc = 0;
                    for (int s = 0; s < 3; ++s)
                        for (int t = 0; t < 3; ++t) acc += ring.coeff(nf + s, nf + t, b);
                    auto it = xx.free.find(b);
                    if (acc != (it == xx.free.end() ? 0 : it->second)) ok = false;
                }
                for (int u = 0; u < 3 && ok; ++u) {
                    long acc = 0;
                    for (int s = 0; s < 3; ++s)
                        for (int t = 0; t < 3; ++t) acc += ring.coeff(nf + s, nf + t, nf + u);
                    if (acc != 3 * xx.stationary) ok = false;
                }
                for (std::size_t a = 0; a < nf && ok; ++a) {
                    for (std::size_t b = 0; b < nf && ok; ++b) {
                        long acc = 0;
                        for (int s = 0; s < 3; ++s) acc += ring.coeff(a, nf + s, b);
                        auto it = fx[a].free.find(b);
                        if (acc != (it == fx[a].free.end() ? 0 : it->second)) ok = false;
                    }
                    for (int u = 0; u < 3 && ok; ++u) {
                        long acc = 0;
                        for (int s = 0; s < 3; ++s) acc += ring.coeff(a, nf + s, nf + u);
                        if (acc != fx[a].stationary) ok = false;
                    }
                }
                if (ok && ring.associative()) solutions.push_back(std::move(ring));
            }
        }
    };

    // Enumerate the M choices for the non-unit free simples.
    std::vector<Counts> m_sel(nf);
    m_sel[0] = m_choices[0][0];
    auto recurse = [&](auto&& self, std::size_t a) -> void {
        if (a == nf) {
            build_and_check(m_sel);
            return;
        }
        for (const Counts& c : m_choices[a]) {
            m_sel[a] = c;
            self(self, a + 1);
        }
    };
    recurse(recurse, 1);

    if (solutions.empty()) throw std::logic_error("no consistent resolved fusion table found");

    // Uniqueness up to relabeling the stationary simples.
    auto canonical = [&](const FusionRing& ring) {
        std::vector<int64_t> best;
        std::array<int, 3> perm{0, 1, 2};
        std::sort(perm.begin(), perm.end());
        do {
            auto img = [&](std::size_t i) {
                return i < nf ? i : nf + static_cast<std::size_t>(perm[i - nf]);
            };
            std::vector<int64_t> coeffs(rank * rank * rank);
            for (std::size_t a = 0; a < rank; ++a)
                for (std::size_t b = 0; b < rank; ++b)
                    for (std::size_t c = 0; c < rank; ++c)
                        coeffs[(img(a) * rank + img(b)) * rank + img(c)] = ring.coeff(a, b, c);
            if (best.empty() || coeffs < best) best = std::move(coeffs);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };
    std::set<std::vector<int64_t>> classes;
    for (const auto& sol : solutions) classes.insert(canonical(sol));
    if (classes.size() != 1)
        throw std::logic_error("resolved fusion table is not unique up to stationary relabeling");

    FusionRing out = solutions.front();
    out.coeffs = *classes.begin();
    out.duals.assign(rank, rank);
    for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = 0; b < rank; ++b)
            if (out.coeff(a, b, out.unit) == 1) out.duals[a] = b;
    return out;
}

ModularData condensed_modular(int k) {
    const CondensedData cd = condensed_simples(k);
    const FusionRing ring = resolved_fusion_table(k);
    const long cond = data_conductor(k);

    ModularData d;
    d.level = k;
    d.labels = ring.labels;
    d.twists = cd.twists;
    d.dims = cd.dims;
    d.global_dim = cd.global_dim();
    d.smatrix = smatrix_balancing(ring, d.twists, d.dims, cond);
    d.charge = gauss_sum_charge(d.dims, d.twists, &d.charge_exponent);
    return d;
}

CertificateReport simplicity_certificate(int m) {
    if (m < 1) throw std::invalid_argument("invalid level");
    const int k = 3 * m;
    const Weight nu{m, m};
    CertificateReport rep;
    rep.m = m;
    rep.level = k;

    rep.central_self_coefficient = fusion_coeff(nu, nu, nu, k);
    rep.central_coefficient_ok = (rep.central_self_coefficient == m + 1);

    rep.stationary_dim_value = stationary_dim(m).to_complex().real();
    rep.dim_threshold = m + 3;
    rep.dim_margin = rep.stationary_dim_value - rep.dim_threshold;
    rep.cubic_lower_bound =
        27.0 * std::sqrt(3.0) * std::pow(m + 1.0, 3) / (16.0 * std::pow(M_PI, 3));
    if (m == 1) {
        rep.dim_check = "pointed Klein-four category; not simple";
        rep.dim_check_passed = false;
    } else if (m == 2) {
        rep.dim_check = "resolved table has no proper nontrivial subcategory";
        rep.dim_check_passed = is_simple_category(resolved_fusion_table(6));
    } else {
        rep.dim_check = "stationary dimension exceeds m+3, excluding a stationary-only subcategory";
        rep.dim_check_passed = rep.stationary_dim_value > rep.dim_threshold;
    }

    const CondensedData cd = condensed_simples(k);
    rep.dual_tensor_adjoint_ok = true;
    for (std::size_t a = 0; a < cd.free_count(); ++a) {
        Weight lam = cd.simples[a].representative();
        if (lam == Weight{0, 0}) continue;
        if (fusion_coeff(lam, dual(lam), kTheta, k) <= 0) rep.dual_tensor_adjoint_ok = false;
    }

    std::vector<Weight> closure = subcategory_closure({kTheta}, k);
    rep.adjoint_generates_root_lattice = (closure == root_lattice_weights(k));

    if (m == 1) {
        rep.verdict = "not simple";
    } else if (rep.dim_check_passed && rep.dual_tensor_adjoint_ok && rep.adjoint_generates_root_lattice) {
        rep.verdict = (m == 2) ? "simple" : "certified simple";
    } else {
        rep.verdict = "checks failed";
    }
    return rep;
}

std::vector<std::vector<int>> branching_matrix(int k) { return condensed_simples(k).branching; }

InvariantReport modular_invariant(int k) {
    const CondensedData cd = condensed_simples(k);
    const ModularData md = modular_data(k);
    const std::size_t n = md.labels.size();
    const std::size_t s = cd.simples.size();

    InvariantReport rep;
    rep.z.assign(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < s; ++c)
                rep.z[i][j] += static_cast<long>(cd.branching[i][c]) * cd.branching[j][c];

    rep.unit_entry_is_one = (rep.z[0][0] == 1);
    rep.entries_nonnegative = true;
    for (const auto& row : rep.z)
        for (long v : row)
            if (v < 0) rep.entries_nonnegative = false;

    // T-commutation: Z_{ab} != 0 forces equal twists.
    rep.commutes_with_t = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (rep.z[a][b] != 0 && md.twists[a] != md.twists[b]) rep.commutes_with_t = false;

    // S-commutation, exact; Z is supported on root-lattice rows/columns.
    rep.commutes_with_s = true;
    const Cyclo zero = Cyclo::zero(data_conductor(k));
    for (std::size_t a = 0; a < n && rep.commutes_with_s; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            Cyclo zs = zero, sz = zero;
            for (std::size_t x = 0; x < n; ++x) {
                if (rep.z[a][x] != 0) zs += Rational(rep.z[a][x]) * md.smatrix[x][b];
                if (rep.z[x][b] != 0) sz += Rational(rep.z[x][b]) * md.smatrix[a][x];
            }
            if (zs != sz) {
                rep.commutes_with_s = false;
                break;
            }
        }
    }
    return rep;
}

} // namespace sl3cat
