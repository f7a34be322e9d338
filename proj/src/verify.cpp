#include "sl3cat/verify.hpp"

#include "sl3cat/condense.hpp"
#include "sl3cat/witt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace sl3cat::verify {

namespace {

const ModularData& cached_modular(int k) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ModularData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, std::make_unique<ModularData>(modular_data(k))).first;
    return *it->second;
}

const FusionTable& cached_table(int k) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FusionTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, std::make_unique<FusionTable>(k)).first;
    return *it->second;
}

// Largest real root of x^3 + a2 x^2 + a1 x + a0 inside [lo, hi], by bisection.
double cubic_root(double a2, double a1, double a0, double lo, double hi) {
    auto f = [&](double x) { return ((x + a2) * x + a1) * x + a0; };
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if ((f(lo) <= 0) == (f(mid) <= 0))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

CriterionResult criterion_1() {
    CriterionResult r{1, "fusion tables at k=1 (Z/3 group law) and k=2 (ring axioms)", true, ""};
    FusionRing ring1 = as_ring(cached_table(1));
    // (0,0) -> 0, (1,0) -> 1, (0,1) -> 2 realizes addition mod 3.
    AlcoveSet a1 = alcove_weights(1);
    std::vector<int> cls(3);
    for (std::size_t i = 0; i < 3; ++i) {
        Weight w = a1.weights[i];
        cls[i] = (w == Weight{0, 0}) ? 0 : (w == Weight{1, 0}) ? 1 : 2;
    }
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c) {
                long expected = ((cls[a] + cls[b]) % 3 == cls[c]) ? 1 : 0;
                if (ring1.coeff(a, b, c) != expected) r.pass = false;
            }
    FusionRing ring2 = as_ring(cached_table(2));
    if (ring2.rank != 6 || !ring2.commutative() || !ring2.associative() || !ring2.unital_with_duals())
        r.pass = false;
    r.detail = "k=1 matches the order-3 group ring; k=2 has 6 simples and passes all ring axioms";
    return r;
}

CriterionResult criterion_2(const Options& opts) {
    int hi = std::max(8, opts.max_m);
    CriterionResult r{2, "central self-coefficient N_{(m,m),(m,m)}^{(m,m)} = m+1, m = 1.." +
                             std::to_string(hi),
                      true, ""};
    for (int m = 1; m <= hi; ++m) {
        Weight nu{m, m};
        long n = fusion_coeff(nu, nu, nu, 3 * m);
        if (n != m + 1) {
            r.pass = false;
            r.detail += "m=" + std::to_string(m) + " gave " + std::to_string(n) + "; ";
        }
    }
    if (r.pass) r.detail = "exact integer match at every m";
    return r;
}

CriterionResult criterion_3(const Options& opts) {
    int hi = std::max(24, opts.max_level);
    CriterionResult r{3, "corner twists equal exp(2*pi*i*k/3) exactly, k = 1.." + std::to_string(hi),
                      true, ""};
    for (int k = 1; k <= hi; ++k) {
        Cyclo expected = Cyclo::root_of_unity(3, k);
        if (twist({0, k}, k) != expected || twist({k, 0}, k) != expected) {
            r.pass = false;
            r.detail += "k=" + std::to_string(k) + " mismatched; ";
        }
    }
    if (r.pass) r.detail = "exact cyclotomic equality at every level";
    return r;
}

CriterionResult criterion_4(const Options& opts) {
    int hi = std::max(8, opts.max_level);
    CriterionResult r{4, "centralizer of the corners equals the root-lattice weights, k = 2.." +
                             std::to_string(hi),
                      true, ""};
    for (int k = 2; k <= hi; ++k) {
        const ModularData& md = cached_modular(k);
        AlcoveSet alcove = alcove_weights(k);
        std::vector<std::size_t> corners = {alcove.index_of({0, 0}), alcove.index_of({k, 0}),
                                            alcove.index_of({0, k})};
        std::vector<std::size_t> cent = centralizer(corners, md);
        std::vector<Weight> got;
        for (std::size_t i : cent) got.push_back(alcove.weights[i]);
        if (got != root_lattice_weights(k)) {
            r.pass = false;
            r.detail += "k=" + std::to_string(k) + " mismatched; ";
        }
    }
    if (r.pass) r.detail = "exact equality with the m1 = m2 (mod 3) subset at every level";
    return r;
}

CriterionResult criterion_5(const Options& opts) {
    int hi = std::max(6, opts.max_level);
    CriterionResult r{5, "fusion subcategory lattice sizes (2 at k=1, 4 for k = 2.." +
                             std::to_string(hi) + ")",
                      true, ""};
    if (enumerate_fusion_subcategories(1).size() != 2) {
        r.pass = false;
        r.detail += "k=1 lattice wrong; ";
    }
    for (int k = 2; k <= hi; ++k) {
        auto subs = enumerate_fusion_subcategories(k);
        std::vector<std::vector<Weight>> expected = {
            {{0, 0}},
            {{0, 0}, {0, k}, {k, 0}},
            root_lattice_weights(k),
            alcove_weights(k).weights,
        };
        std::sort(subs.begin(), subs.end());
        std::sort(expected.begin(), expected.end());
        if (subs != expected) {
            r.pass = false;
            r.detail += "k=" + std::to_string(k) + " lattice wrong; ";
        }
    }
    if (r.pass) r.detail = "exhaustive closure enumeration matches at every level";
    return r;
}

CriterionResult criterion_6(const Options& opts) {
    CriterionResult r{6, "central charges: Gauss sums, corner quotients, family exponents", true, ""};
    int hi = std::max(12, opts.max_level);
    for (int k = 1; k <= hi; ++k) {
        AlcoveSet alcove = alcove_weights(k);
        std::vector<Cyclo> dims, twists;
        for (Weight w : alcove.weights) {
            dims.push_back(qdim(w, k));
            twists.push_back(twist(w, k));
        }
        if (gauss_sum_charge(dims, twists) != Cyclo::root_of_unity(k + 3, k)) {
            r.pass = false;
            r.detail += "gauss sum mismatch at k=" + std::to_string(k) + "; ";
        }
    }
    // the level-2 value, exp(4*pi*i/5)
    if (central_charge_closed_form(8, 3, 2) != Cyclo::root_of_unity(5, 2)) {
        r.pass = false;
        r.detail += "k=2 closed form is not exp(4*pi*i/5); ";
    }
    int mhi = std::max(8, opts.max_m);
    for (int m = 1; m <= mhi; ++m) {
        MugerReport a = muger_decompose(3 * m + 1);
        if (a.centralizer_exponent != mod2(Rational(9 * m, 6 * m + 8))) {
            r.pass = false;
            r.detail += "family-1 quotient mismatch at m=" + std::to_string(m) + "; ";
        }
        MugerReport b = muger_decompose(3 * m + 2);
        if (b.centralizer_exponent != mod2(Rational(3 * m - 7, 6 * m + 10))) {
            r.pass = false;
            r.detail += "family-2 quotient mismatch at m=" + std::to_string(m) + "; ";
        }
    }
    bool table_ok = lambda_invariant(1, 1) == Rational(9, 14) &&
                    lambda_invariant(1, 2) == Rational(9, 10) &&
                    lambda_invariant(2, 0) == Rational(-7, 10) &&
                    lambda_invariant(2, 2) == Rational(-1, 22) &&
                    lambda_invariant(3, 2) == Rational(4, 3);
    if (!table_ok) {
        r.pass = false;
        r.detail += "lambda table values wrong; ";
    }
    if (r.pass)
        r.detail = "Gauss sums equal exp(2*pi*i*k/(k+3)) exactly; quotient exponents and the "
                   "lambda table reproduce exactly";
    return r;
}

CriterionResult criterion_7() {
    CriterionResult r{7, "condensation at k=3: Klein-four pointed category", true, ""};
    CondensedData cd = condensed_simples(3);
    if (cd.simples.size() != 4) r.pass = false;
    const Cyclo one{Rational(1)}, minus_one{Rational(-1)};
    for (const Cyclo& d : cd.dims)
        if (d != one) r.pass = false;
    if (cd.twists[0] != one || cd.twists[1] != minus_one || cd.twists[2] != minus_one ||
        cd.twists[3] != minus_one)
        r.pass = false;
    FusionRing ring = resolved_fusion_table(3);
    for (std::size_t a = 0; a < 4; ++a) {
        if (ring.coeff(a, a, ring.unit) != 1) r.pass = false; // every object an involution
        for (std::size_t b = 0; b < 4; ++b) {
            long total = 0;
            for (std::size_t c = 0; c < 4; ++c) total += ring.coeff(a, b, c);
            if (total != 1) r.pass = false; // group law
        }
    }
    // X1 X2 = X3 and cyclic
    if (ring.coeff(1, 2, 3) != 1 || ring.coeff(2, 3, 1) != 1 || ring.coeff(1, 3, 2) != 1)
        r.pass = false;
    if (cached_modular(3).global_dim != Cyclo(Rational(36))) r.pass = false;
    if (cd.global_dim() != Cyclo(Rational(4))) r.pass = false;
    r.detail = r.pass ? "4 invertible simples, twists (1,-1,-1,-1), Klein-four law, global dim 36/9 = 4"
                      : "condensed data at k=3 does not match";
    return r;
}

CriterionResult criterion_8() {
    CriterionResult r{8, "condensation at k=6: resolved table, S-matrix, T up to conjugation, Verlinde",
                      true, ""};
    std::ostringstream detail;
    FusionRing ring = resolved_fusion_table(6);
    // our order: 0 = F(0,0), 1 = F(0,3) (dim zeta), 2 = F(1,1) (dim zeta+1), 3..5 = X
    const std::size_t u = 0, y3 = 1, y2 = 2;
    auto X = [](int i) { return static_cast<std::size_t>(3 + i); };
    bool table_ok = true;
    // free block
    table_ok &= ring.coeff(y2, y2, u) == 1 && ring.coeff(y2, y2, y2) == 2 &&
                ring.coeff(y2, y2, y3) == 2 && ring.coeff(y2, y2, X(0)) == 1 &&
                ring.coeff(y2, y2, X(1)) == 1 && ring.coeff(y2, y2, X(2)) == 1;
    table_ok &= ring.coeff(y2, y3, u) == 0 && ring.coeff(y2, y3, y2) == 2 &&
                ring.coeff(y2, y3, y3) == 1 && ring.coeff(y2, y3, X(0)) == 1;
    table_ok &= ring.coeff(y3, y3, u) == 1 && ring.coeff(y3, y3, y2) == 1 &&
                ring.coeff(y3, y3, y3) == 1 && ring.coeff(y3, y3, X(0)) == 1;
    for (int i = 0; i < 3 && table_ok; ++i) {
        // Y2 (x) Xi = Y2 + Y3 + Xj + Xk (j, k the other two)
        table_ok &= ring.coeff(y2, X(i), y2) == 1 && ring.coeff(y2, X(i), y3) == 1 &&
                    ring.coeff(y2, X(i), u) == 0 && ring.coeff(y2, X(i), X(i)) == 0;
        // Y3 (x) Xi = Y2 + Y3 + Xi
        table_ok &= ring.coeff(y3, X(i), y2) == 1 && ring.coeff(y3, X(i), y3) == 1 &&
                    ring.coeff(y3, X(i), X(i)) == 1;
        // Xi (x) Xi = Y1 + Y3 + Xi
        table_ok &= ring.coeff(X(i), X(i), u) == 1 && ring.coeff(X(i), X(i), y3) == 1 &&
                    ring.coeff(X(i), X(i), y2) == 0 && ring.coeff(X(i), X(i), X(i)) == 1;
        for (int j = 0; j < 3 && table_ok; ++j) {
            if (i == j) continue;
            int k3 = 3 - i - j;
            // Xi (x) Xj = Y2 + Xk
            table_ok &= ring.coeff(X(i), X(j), u) == 0 && ring.coeff(X(i), X(j), y2) == 1 &&
                        ring.coeff(X(i), X(j), y3) == 0 && ring.coeff(X(i), X(j), X(k3)) == 1 &&
                        ring.coeff(X(i), X(j), X(i)) == 0 && ring.coeff(X(i), X(j), X(j)) == 0;
        }
    }
    if (!table_ok) {
        r.pass = false;
        detail << "resolved table pattern mismatch; ";
    }

    ModularData md = condensed_modular(6);
    const double zeta = cubic_root(-3, -6, -1, 4.0, 5.0);  // positive root of x^3-3x^2-6x-1
    const double eps = cubic_root(-3, 0, 1, 2.5, 3.0);     // greatest root of x^3-3x^2+1
    // reference display order (Y1, Y2, Y3, X1, X2, X3)
    const double ref[6][6] = {
        {1, zeta + 1, zeta, eps, eps, eps},
        {zeta + 1, zeta, -1, -eps, -eps, -eps},
        {zeta, -1, -(zeta + 1), eps, eps, eps},
        {eps, -eps, eps, 2 * eps, -eps, -eps},
        {eps, -eps, eps, -eps, 2 * eps, -eps},
        {eps, -eps, eps, -eps, -eps, 2 * eps},
    };
    const std::size_t perm[6] = {u, y2, y3, X(0), X(1), X(2)};
    double max_dev = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            auto z = md.smatrix[perm[i]][perm[j]].to_complex();
            max_dev = std::max(max_dev, std::abs(std::complex<double>(z) -
                                                 std::complex<double>(ref[i][j])));
        }
    if (max_dev > 1e-9) {
        r.pass = false;
        detail << "S-matrix deviation " << max_dev << " exceeds 1e-9; ";
    } else {
        detail << "S matches the 6x6 reference within " << max_dev << "; ";
    }

    // T comparison: displayed twists (1, w, w^2, eta, eta, eta) with
    // eta = exp(2*pi*i/9).  Entrywise each computed twist must equal the
    // displayed value or its conjugate; the one global convention in which
    // everything matches does not exist, which is flagged.
    const Cyclo disp[6] = {Cyclo(Rational(1)),       Cyclo::root_of_unity(3, 1),
                           Cyclo::root_of_unity(3, 2), Cyclo::root_of_unity(9, 1),
                           Cyclo::root_of_unity(9, 1), Cyclo::root_of_unity(9, 1)};
    bool entrywise = true;
    std::vector<int> identity_mismatch, conjugate_mismatch;
    for (int i = 0; i < 6; ++i) {
        const Cyclo& got = md.twists[perm[i]];
        bool direct = (got == disp[i]);
        bool conj = (got == disp[i].conjugate());
        if (!direct && !conj) entrywise = false;
        if (!direct) identity_mismatch.push_back(i);
        if (!conj) conjugate_mismatch.push_back(i);
    }
    bool flag_ok = entrywise && identity_mismatch == std::vector<int>{3, 4, 5} &&
                   conjugate_mismatch == std::vector<int>{1, 2};
    if (!flag_ok) {
        r.pass = false;
        detail << "T comparison pattern unexpected; ";
    } else {
        detail << "T matches entrywise up to conjugation (flag: stationary twist is the conjugate "
                  "exp(-2*pi*i/9) of the displayed value); ";
    }

    if (verlinde_exact(md) != ring.coeffs) {
        r.pass = false;
        detail << "exact Verlinde does not reproduce the resolved table; ";
    } else {
        detail << "exact Verlinde reproduces the resolved table";
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_9(const Options& opts) {
    int hi = std::max(20, opts.max_m);
    CriterionResult r{9, "simplicity certificates for m = 1.." + std::to_string(hi), true, ""};
    CertificateReport c1 = simplicity_certificate(1);
    if (c1.verdict != "not simple") {
        r.pass = false;
        r.detail += "m=1 verdict wrong; ";
    }
    CertificateReport c2 = simplicity_certificate(2);
    if (c2.verdict != "simple") {
        r.pass = false;
        r.detail += "m=2 verdict wrong; ";
    }
    for (int m = 3; m <= hi; ++m) {
        CertificateReport c = simplicity_certificate(m);
        if (c.verdict != "certified simple" || !c.central_coefficient_ok || c.dim_margin <= 0) {
            r.pass = false;
            r.detail += "m=" + std::to_string(m) + " failed; ";
        }
    }
    if (r.pass)
        r.detail = "m=1 not simple; m=2 simple via the resolved table; every larger m certified "
                   "with a strict dimension margin";
    return r;
}

CriterionResult criterion_10(const Options& opts) {
    int hi = std::max(12, opts.max_level);
    CriterionResult r{10, "modular invariant Z = b b^T commutes with S and T (3 | k <= " +
                              std::to_string(hi) + ")",
                      true, ""};
    for (int k = 3; k <= hi; k += 3) {
        InvariantReport rep = modular_invariant(k);
        if (!rep.all_passed()) {
            r.pass = false;
            r.detail += "k=" + std::to_string(k) + " failed; ";
        }
        if (k == 3 && rep.z[alcove_weights(3).index_of({1, 1})][alcove_weights(3).index_of({1, 1})] != 3)
            r.pass = false;
    }
    if (r.pass) r.detail = "exact commutation, Z_00 = 1 and nonnegativity at every level";
    return r;
}

CriterionResult criterion_11() {
    CriterionResult r{11, "Verlinde recomputation agrees with the folding tables for k <= 6", true, ""};
    double worst = 0;
    for (int k = 1; k <= 6; ++k) {
        VerlindeReport rep = verlinde_check(cached_modular(k), cached_table(k));
        worst = std::max(worst, rep.max_deviation);
        if (!rep.pass || rep.max_deviation >= 1e-6) {
            r.pass = false;
            r.detail += "k=" + std::to_string(k) + " failed; ";
        }
    }
    if (r.pass) {
        std::ostringstream s;
        s << "all triples agree; worst pre-rounding deviation " << worst;
        r.detail = s.str();
    }
    return r;
}

CriterionResult criterion_12() {
    CriterionResult r{12, "Witt ledger verdict pattern (two FLAGGED relations)", true, ""};
    LedgerReport rep = run_full_ledger();
    if (!rep.matches_expected) r.pass = false;
    for (const RelationVerdict& v : rep.verdicts) {
        if (v.name == "Thm2(c)" && v.residue != Rational(1, 2)) r.pass = false;
        if (v.name == "eq(24)" && v.residue != Rational(1)) r.pass = false;
    }
    r.detail = r.pass ? "ten consistent relations; Thm2(c) FLAGGED with residue 1/2 and eq(24) "
                        "FLAGGED with residue 1, as shipped"
                      : "verdict pattern deviates from the shipped expectation";
    return r;
}

CriterionResult criterion_13() {
    CriterionResult r{13, "central-charge band inequalities for r, s, t in 3..50", true, ""};
    ChainReport rep = check_inequality_chain(3, 50);
    r.pass = rep.holds;
    r.detail = rep.holds ? "2 > lambda3 >= 3/2 > lambda1 > 1 > 1/2 > lambda2 > 0 holds exactly"
                         : "violations: " + std::to_string(rep.violations.size());
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const Options& opts) {
    std::vector<CriterionResult> results;
    results.push_back(criterion_1());
    results.push_back(criterion_2(opts));
    results.push_back(criterion_3(opts));
    results.push_back(criterion_4(opts));
    results.push_back(criterion_5(opts));
    results.push_back(criterion_6(opts));
    results.push_back(criterion_7());
    results.push_back(criterion_8());
    results.push_back(criterion_9(opts));
    results.push_back(criterion_10(opts));
    results.push_back(criterion_11());
    results.push_back(criterion_12());
    results.push_back(criterion_13());
    return results;
}

} // namespace sl3cat::verify
