#include "sl3cat/modular.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace sl3cat {

long twist_exponent(Weight w, int k) {
    long m1 = w.m1, m2 = w.m2;
    long e = m1 * m1 + 3 * m1 + m1 * m2 + 3 * m2 + m2 * m2;
    return e % twist_conductor(k);
}

Cyclo twist(Weight w, int k) {
    if (!dominant_at(w, k)) throw std::domain_error("weight outside alcove");
    return Cyclo::root_of_unity(data_conductor(k), 2 * twist_exponent(w, k));
}

Cyclo quantum_integer(long n, int k) {
    // q = zeta_{2(k+3)} = zeta_{6(k+3)}^3; [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)
    const long cond = data_conductor(k);
    Cyclo acc = Cyclo::zero(cond);
    for (long i = 0; i < n; ++i) acc += Cyclo::root_of_unity(cond, 3 * (n - 1 - 2 * i));
    return acc;
}

namespace {

const Cyclo& inv_q2(int k) {
    static std::mutex mu;
    static std::map<int, Cyclo> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, quantum_integer(2, k).inverse()).first;
    return it->second;
}

} // namespace

Cyclo qdim(Weight w, int k) {
    if (!dominant_at(w, k)) throw std::domain_error("weight outside alcove");
    return quantum_integer(w.m1 + 1, k) * quantum_integer(w.m2 + 1, k) *
           quantum_integer(w.m1 + w.m2 + 2, k) * inv_q2(k);
}

double qdim_numeric(Weight w, int k) {
    const double p = M_PI / (k + 3);
    return std::sin((w.m1 + 1) * p) * std::sin((w.m2 + 1) * p) * std::sin((w.m1 + w.m2 + 2) * p) /
           (std::sin(2 * p) * std::sin(p) * std::sin(p));
}

std::vector<std::vector<Cyclo>> smatrix_balancing(const FusionRing& ring,
                                                  const std::vector<Cyclo>& twists,
                                                  const std::vector<Cyclo>& dims, long conductor) {
    const std::size_t n = ring.rank;
    std::vector<Cyclo> weighted(n);
    for (std::size_t c = 0; c < n; ++c) weighted[c] = twists[c].embedded(conductor) * dims[c];
    std::vector<Cyclo> inv_twist(n);
    for (std::size_t a = 0; a < n; ++a) inv_twist[a] = twists[a].conjugate().embedded(conductor);

    std::vector<std::vector<Cyclo>> s(n, std::vector<Cyclo>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            Cyclo acc = Cyclo::zero(conductor);
            for (std::size_t c = 0; c < n; ++c) {
                int64_t m = ring.coeff(a, b, c);
                if (m != 0) acc += Rational(m) * weighted[c];
            }
            Cyclo entry = inv_twist[a] * inv_twist[b] * acc;
            s[a][b] = entry;
            s[b][a] = std::move(entry);
        }
    }
    return s;
}

ModularData modular_data(int k) {
    FusionTable table(k);
    const AlcoveSet& alcove = table.index();
    const std::size_t n = alcove.size();
    const long cond = data_conductor(k);

    ModularData d;
    d.level = k;
    d.weights = alcove.weights;
    d.labels.reserve(n);
    d.twists.reserve(n);
    d.dims.reserve(n);
    for (Weight w : alcove.weights) {
        d.labels.push_back("(" + std::to_string(w.m1) + "," + std::to_string(w.m2) + ")");
        d.twists.push_back(twist(w, k));
        d.dims.push_back(qdim(w, k));
    }
    d.global_dim = Cyclo::zero(cond);
    for (const Cyclo& dim : d.dims) d.global_dim += dim * dim;
    d.smatrix = smatrix_balancing(as_ring(table), d.twists, d.dims, cond);
    d.charge = gauss_sum_charge(d.dims, d.twists, &d.charge_exponent);
    return d;
}

namespace {

std::vector<std::vector<std::complex<double>>> normalized_smatrix(const ModularData& data) {
    const std::size_t n = data.labels.size();
    double root = std::sqrt(data.global_dim.to_complex().real());
    std::vector<std::vector<std::complex<double>>> s(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = data.smatrix[i][j].to_complex() / root;
    return s;
}

double abs_det(std::vector<std::vector<std::complex<double>>> m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-12) return 0.0;
        std::swap(m[col], m[piv]);
        det *= std::abs(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            auto f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

} // namespace

VerlindeReport verlinde_check(const ModularData& data, const FusionTable& table) {
    const std::size_t n = data.labels.size();
    auto s = normalized_smatrix(data);
    if (abs_det(s) == 0.0) throw std::domain_error("degenerate S-matrix");
    VerlindeReport report;
    report.pass = true;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                std::complex<double> acc = 0;
                for (std::size_t x = 0; x < n; ++x)
                    acc += s[a][x] * s[b][x] * std::conj(s[c][x]) / s[0][x];
                long rounded = std::lround(acc.real());
                double dev = std::abs(acc - std::complex<double>(static_cast<double>(rounded)));
                report.max_deviation = std::max(report.max_deviation, dev);
                if (rounded != table.coeff_by_index(a, b, c)) report.pass = false;
            }
        }
    }
    return report;
}

std::vector<int64_t> verlinde_exact(const ModularData& data) {
    const std::size_t n = data.labels.size();
    const Cyclo inv_global = data.global_dim.inverse();
    std::vector<Cyclo> inv_unit_row(n);
    for (std::size_t x = 0; x < n; ++x) inv_unit_row[x] = data.smatrix[0][x].inverse();
    std::vector<int64_t> out(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                Cyclo acc;
                for (std::size_t x = 0; x < n; ++x)
                    acc += data.smatrix[a][x] * data.smatrix[b][x] *
                           data.smatrix[c][x].conjugate() * inv_unit_row[x];
                Cyclo value = acc * inv_global;
                if (!value.is_rational()) throw std::logic_error("Verlinde value not rational");
                Rational r = value.rational_value();
                if (r.get_den() != 1) throw std::logic_error("Verlinde value not integral");
                out[(a * n + b) * n + c] = static_cast<int64_t>(r.get_num().get_si());
            }
        }
    }
    return out;
}

Rational central_charge_exponent(long dim_g, long h_dual, long k) {
    if (dim_g < 1 || h_dual < 1 || k < 1) throw std::invalid_argument("inputs must be positive");
    return mod2(Rational(2 * k * dim_g, 8 * (k + h_dual)));
}

Cyclo central_charge_closed_form(long dim_g, long h_dual, long k) {
    Rational t = central_charge_exponent(dim_g, h_dual, k); // xi = exp(pi*i*t)
    // exp(pi*i*p/q) = zeta_{2q}^p
    long p = t.get_num().get_si();
    long q = t.get_den().get_si();
    return Cyclo::root_of_unity(2 * q, p);
}

Cyclo gauss_sum_charge(const std::vector<Cyclo>& dims, const std::vector<Cyclo>& twists,
                       Rational* exponent) {
    if (dims.size() != twists.size() || dims.empty())
        throw std::invalid_argument("dims and twists must be aligned and nonempty");
    Cyclo tau, global;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        Cyclo d2 = dims[i] * dims[i];
        tau += d2 * twists[i];
        global += d2;
    }
    if (tau.is_zero()) throw std::domain_error("degenerate Gauss sum");

    // xi^2 = tau^2 / dim lies in Q(zeta_N), so xi is a 2N-th root of unity.
    const long n = tau.conductor();
    const long m = 2 * n;
    std::complex<double> xi_f = tau.to_complex() / std::sqrt(global.to_complex().real());
    long best = 0;
    double best_dist = 1e300;
    for (long j = 0; j < m; ++j) {
        double arg = 2 * M_PI * j / m;
        std::complex<double> cand(std::cos(arg), std::sin(arg));
        double dist = std::abs(cand - xi_f);
        if (dist < best_dist) {
            best_dist = dist;
            best = j;
        }
    }
    if (best_dist > 1e-6) throw std::logic_error("Gauss sum is not proportional to a root of unity");
    // Certify exactly: tau^2 = zeta_{2N}^(2*best) * dim(C).
    Cyclo xi_sq = Cyclo::root_of_unity(n, best); // zeta_{2N}^(2j) = zeta_N^j
    if (tau * tau != xi_sq * global)
        throw std::logic_error("Gauss sum charge failed exact certification");
    if (exponent) *exponent = mod2(Rational(best, n));
    return Cyclo::root_of_unity(m, best);
}

Cyclo gauss_sum_charge(const ModularData& data, Rational* exponent) {
    return gauss_sum_charge(data.dims, data.twists, exponent);
}

bool centralizes(std::size_t a, std::size_t b, const ModularData& data) {
    return data.smatrix[a][b] == data.dims[a] * data.dims[b];
}

std::vector<std::size_t> centralizer(const std::vector<std::size_t>& subset, const ModularData& data) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < data.labels.size(); ++b) {
        bool all = true;
        for (std::size_t a : subset)
            if (!centralizes(a, b, data)) {
                all = false;
                break;
            }
        if (all) out.push_back(b);
    }
    return out;
}

MugerReport muger_decompose(int k) {
    const AlcoveSet alcove = alcove_weights(k);
    const long cond = data_conductor(k);
    const Cyclo one(Rational(1));

    MugerReport report;
    report.level = k;

    std::vector<Cyclo> dims(alcove.size());
    for (std::size_t i = 0; i < alcove.size(); ++i) dims[i] = qdim(alcove.weights[i], k);
    for (std::size_t i = 0; i < alcove.size(); ++i)
        if (dims[i] == one) report.pointed.push_back(alcove.weights[i]);

    // All invertibles are corner weights, whose products have one summand;
    // s~_{c,x} = theta_c^-1 theta_x^-1 theta_{cx} dim(cx) needs no table.
    auto corner_srow_entry = [&](Weight c, Weight x) {
        Weight cx = corner_tensor(c, x, k);
        long e = twist_exponent(cx, k) - twist_exponent(c, k) - twist_exponent(x, k);
        return Cyclo::root_of_unity(cond, 2 * e) * qdim(cx, k);
    };
    for (std::size_t i = 0; i < alcove.size(); ++i) {
        Weight x = alcove.weights[i];
        bool central = true;
        for (Weight c : report.pointed) {
            if (corner_srow_entry(c, x) != dims[i]) { // dim(c) = 1
                central = false;
                break;
            }
        }
        if (central) report.centralizer.push_back(x);
    }

    report.corner_twist = twist({0, k}, k);
    report.full_exponent = central_charge_exponent(8, 3, k);

    std::vector<Cyclo> pt_dims(report.pointed.size(), one), pt_twists;
    for (Weight w : report.pointed) pt_twists.push_back(twist(w, k));
    gauss_sum_charge(pt_dims, pt_twists, &report.pointed_exponent);
    report.centralizer_exponent = mod2(report.full_exponent - report.pointed_exponent);

    report.factorizable = (k % 3 != 0);
    if (!report.factorizable) {
        report.centralizer_note =
            "corners are transparent (they lie in the root-lattice subcategory); "
            "the category does not factor through its pointed part at this level";
    } else {
        report.centralizer_note =
            "centralizer is the root-lattice subcategory; simple (hence prime) since the "
            "subcategory lattice is {trivial, corners, root lattice, full} and the corners "
            "are outside the root lattice at this level";
    }

    // Restricted pointed fusion: products of corners stay corners.
    {
        const auto& pts = report.pointed;
        FusionRing ring;
        ring.rank = pts.size();
        ring.labels.resize(ring.rank);
        ring.duals.resize(ring.rank);
        ring.coeffs.assign(ring.rank * ring.rank * ring.rank, 0);
        auto index_of = [&](Weight w) {
            return static_cast<std::size_t>(std::find(pts.begin(), pts.end(), w) - pts.begin());
        };
        ring.unit = index_of({0, 0});
        for (std::size_t i = 0; i < ring.rank; ++i) {
            ring.duals[i] = index_of(dual(pts[i]));
            ring.labels[i] = "(" + std::to_string(pts[i].m1) + "," + std::to_string(pts[i].m2) + ")";
            for (std::size_t j = 0; j < ring.rank; ++j) {
                Weight prod = corner_tensor(pts[i], pts[j], k);
                ring.coeff(i, j, index_of(prod)) = 1;
            }
        }
        report.pointed_is_prime = is_simple_category(ring);
    }
    return report;
}

} // namespace sl3cat
