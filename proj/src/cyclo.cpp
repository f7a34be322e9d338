#include "sl3cat/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace sl3cat {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<BigInt>; // dense, index = degree

// Quotient of exact division a / b for monic-leading b (used for
// x^n - 1 = prod Phi_d; all divisions are exact over Z).
Poly exact_div(Poly a, const Poly& b) {
    Poly q(a.size() - b.size() + 1);
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        BigInt c = a[i + b.size() - 1] / b.back();
        q[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    return q;
}

Poly cyclotomic_poly(long n, std::map<long, Poly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) {
            Poly phi_d = cyclotomic_poly(d, cache);
            num = exact_div(std::move(num), phi_d);
        }
    }
    cache[n] = num;
    return num;
}

// Per-conductor context: Phi_N and the reductions x^e mod Phi_N for
// e in [0, 2N), enough for products of two reduced elements and for
// conjugation/embedding exponent images.
struct ConductorCtx {
    long n = 1;
    long phi = 1;
    Poly phi_poly;
    std::vector<std::vector<BigInt>> xpow; // xpow[e], length phi each
};

const ConductorCtx& conductor_ctx(long n) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<ConductorCtx>> ctxs;
    static std::map<long, Poly> phi_cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = ctxs.find(n);
    if (it != ctxs.end()) return *it->second;

    auto ctx = std::make_unique<ConductorCtx>();
    ctx->n = n;
    ctx->phi = euler_phi(n);
    ctx->phi_poly = cyclotomic_poly(n, phi_cache);
    const long phi = ctx->phi;
    ctx->xpow.resize(2 * n);
    for (long e = 0; e < 2 * n; ++e) {
        std::vector<BigInt> row(phi);
        if (e < phi) {
            row[e] = 1;
        } else {
            // x * x^(e-1), then cancel the degree-phi overflow against Phi_N
            // (monic), which keeps the degree below phi.
            const auto& prev = ctx->xpow[e - 1];
            BigInt carry = prev[phi - 1];
            for (long i = phi - 1; i >= 1; --i) row[i] = prev[i - 1];
            row[0] = 0;
            if (carry != 0)
                for (long i = 0; i < phi; ++i) row[i] -= carry * ctx->phi_poly[i];
        }
        ctx->xpow[e] = std::move(row);
    }
    auto* raw = ctx.get();
    ctxs[n] = std::move(ctx);
    return *raw;
}

std::vector<Rational> reduce_poly(const std::vector<Rational>& raw, const ConductorCtx& ctx) {
    std::vector<Rational> out(ctx.phi, Rational(0));
    for (std::size_t e = 0; e < raw.size(); ++e) {
        if (raw[e] == 0) continue;
        if (static_cast<long>(e) < ctx.phi) {
            out[e] += raw[e];
        } else {
            const auto& red = ctx.xpow[e];
            for (long i = 0; i < ctx.phi; ++i)
                if (red[i] != 0) out[i] += raw[e] * Rational(red[i]);
        }
    }
    return out;
}

} // namespace

Cyclo Cyclo::zero(long conductor) {
    const ConductorCtx& ctx = conductor_ctx(conductor);
    Cyclo c;
    c.conductor_ = conductor;
    c.coeffs_.assign(ctx.phi, Rational(0));
    return c;
}

Cyclo Cyclo::from_coeffs(long conductor, std::vector<Rational> coeffs) {
    const ConductorCtx& ctx = conductor_ctx(conductor);
    if (static_cast<long>(coeffs.size()) != ctx.phi)
        throw std::invalid_argument("coefficient vector length must equal phi(conductor)");
    for (Rational& r : coeffs) r.canonicalize(); // GMP comparisons assume canonical form
    Cyclo c;
    c.conductor_ = conductor;
    c.coeffs_ = std::move(coeffs);
    return c;
}

Cyclo Cyclo::root_of_unity(long n, long j) {
    if (n < 1) throw std::invalid_argument("invalid conductor");
    j %= n;
    if (j < 0) j += n;
    const ConductorCtx& ctx = conductor_ctx(n);
    Cyclo c = Cyclo::zero(n);
    if (j < ctx.phi) {
        c.coeffs_[j] = 1;
    } else {
        const auto& red = ctx.xpow[j];
        for (long i = 0; i < ctx.phi; ++i) c.coeffs_[i] = Rational(red[i]);
    }
    return c;
}

bool Cyclo::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    return coeffs_[0];
}

Cyclo Cyclo::embedded(long m) const {
    if (m % conductor_ != 0) throw std::invalid_argument("incompatible conductor");
    if (m == conductor_) return *this;
    const long stride = m / conductor_;
    const ConductorCtx& ctx = conductor_ctx(m);
    std::vector<Rational> raw((coeffs_.size() - 1) * stride + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * stride] = coeffs_[i];
    Cyclo out;
    out.conductor_ = m;
    out.coeffs_ = reduce_poly(raw, ctx);
    return out;
}

Cyclo Cyclo::conjugate() const {
    const ConductorCtx& ctx = conductor_ctx(conductor_);
    std::vector<Rational> raw(conductor_ == 1 ? 1 : conductor_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        long e = (static_cast<long>(i) * (conductor_ - 1)) % conductor_;
        raw[e] += coeffs_[i];
    }
    Cyclo out;
    out.conductor_ = conductor_;
    out.coeffs_ = reduce_poly(raw, ctx);
    return out;
}

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

std::pair<Cyclo, Cyclo> unify(const Cyclo& a, const Cyclo& b) {
    long m = lcm_long(a.conductor(), b.conductor());
    return {a.embedded(m), b.embedded(m)};
}

} // namespace

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = unify(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = unify(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

Cyclo operator-(const Cyclo& a) {
    Cyclo out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclo operator*(const Rational& a, const Cyclo& b) {
    Cyclo out = b;
    for (auto& c : out.coeffs_) c *= a;
    return out;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = unify(a, b);
    const ConductorCtx& ctx = conductor_ctx(x.conductor());
    std::vector<Rational> raw(2 * ctx.phi - 1, Rational(0));
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs().size(); ++j) {
            if (y.coeffs()[j] == 0) continue;
            raw[i + j] += x.coeffs()[i] * y.coeffs()[j];
        }
    }
    Cyclo out;
    out.conductor_ = x.conductor();
    out.coeffs_ = reduce_poly(raw, ctx);
    return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& b) {
    *this = *this + b;
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& b) {
    *this = *this * b;
    return *this;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_rem(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        trim(a);
    }
    return a;
}

// (quotient, remainder) of a / b over Q.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
    trim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        trim(a);
    }
    return {q, a};
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

} // namespace

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) {
        Cyclo out = *this;
        out.coeffs_[0] = 1 / coeffs_[0];
        return out;
    }
    const ConductorCtx& ctx = conductor_ctx(conductor_);
    QPoly a = coeffs_;
    trim(a);
    QPoly m(ctx.phi_poly.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = Rational(ctx.phi_poly[i]);

    // Extended Euclid: maintain r = s*a (mod m); Phi_N is irreducible over Q
    // so the gcd is a nonzero constant.
    QPoly r0 = m, r1 = a;
    QPoly s0 = {}, s1 = {Rational(1)};
    while (!(r1.size() == 1)) {
        if (r1.empty()) throw std::domain_error("division by zero");
        auto [q, r2] = poly_divmod(r0, r1);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational g = r1[0];
    QPoly inv = poly_rem(std::move(s1), m);
    std::vector<Rational> coeffs(ctx.phi, Rational(0));
    for (std::size_t i = 0; i < inv.size(); ++i) coeffs[i] = inv[i] / g;
    Cyclo out;
    out.conductor_ = conductor_;
    out.coeffs_ = std::move(coeffs);
    return out;
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result(Rational(1));
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = unify(a, b);
    return x.coeffs() == y.coeffs();
}

std::complex<double> Cyclo::to_complex(int digits) const {
    if (digits < 1 || digits > 15)
        throw std::invalid_argument("supported precision is 1..15 decimal digits");
    const long double two_pi = 6.283185307179586476925286766559L;
    std::complex<long double> acc(0.0L, 0.0L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long double c = static_cast<long double>(coeffs_[i].get_d());
        // get_d loses precision for huge numerators; refine via num/den.
        if (std::abs(c) > 1e15L) c = static_cast<long double>(coeffs_[i].get_num().get_d()) /
                                     static_cast<long double>(coeffs_[i].get_den().get_d());
        long double arg = two_pi * static_cast<long double>(i) / static_cast<long double>(conductor_);
        acc += c * std::complex<long double>(std::cos(arg), std::sin(arg));
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

} // namespace sl3cat
