#include "prank/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace prank {
namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

using PolyFp = std::vector<std::uint64_t>;  // ascending coefficients

void trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const PolyFp& a) { return static_cast<int>(a.size()) - 1; }

PolyFp poly_mul_fp(const PolyFp& a, const PolyFp& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyFp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

// remainder of a mod b, b nonzero
PolyFp poly_rem_fp(PolyFp a, const PolyFp& b, std::uint64_t p) {
    trim(a);
    std::uint64_t lead_inv = powmod_u64(b.back(), p - 2, p);
    while (deg(a) >= deg(b)) {
        std::uint64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
        trim(a);
    }
    return a;
}

PolyFp poly_gcd_fp(PolyFp a, PolyFp b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyFp r = poly_rem_fp(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^e) mod f, by repeated p-th powering
PolyFp x_pow_pe_mod(const PolyFp& f, std::uint64_t p, unsigned e) {
    PolyFp x = {0, 1};
    PolyFp cur = poly_rem_fp(x, f, p);
    for (unsigned i = 0; i < e; ++i) {
        // cur^p mod f via square-and-multiply on the exponent p
        PolyFp acc = {1};
        PolyFp base = cur;
        std::uint64_t ex = p;
        while (ex) {
            if (ex & 1) acc = poly_rem_fp(poly_mul_fp(acc, base, p), f, p);
            base = poly_rem_fp(poly_mul_fp(base, base, p), f, p);
            ex >>= 1;
        }
        cur = std::move(acc);
    }
    return cur;
}

// Rabin: f of degree k is irreducible iff x^(p^k) = x mod f and
// gcd(x^(p^(k/q)) - x, f) = 1 for every prime divisor q of k.
bool irreducible_rabin(const PolyFp& f, std::uint64_t p) {
    int k = deg(f);
    if (k < 1) return false;
    PolyFp x = {0, 1};
    PolyFp top = x_pow_pe_mod(f, p, static_cast<unsigned>(k));
    PolyFp diff = top;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (int q = 2; q <= k; ++q) {
        if (k % q != 0 || !is_prime_u64(static_cast<std::uint64_t>(q))) continue;
        PolyFp sub = x_pow_pe_mod(f, p, static_cast<unsigned>(k / q));
        sub.resize(std::max<std::size_t>(sub.size(), 2), 0);
        sub[1] = (sub[1] + p - 1) % p;
        trim(sub);
        PolyFp g = poly_gcd_fp(sub, f, p);
        if (deg(g) != 0) return false;
    }
    return true;
}

bool irreducible_trial_division(const PolyFp& f, std::uint64_t p) {
    int k = deg(f);
    // all monic divisors of degree 1..k/2, coefficients enumerated in
    // base p
    for (int d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            PolyFp g(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t v = m;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = v % p;
                v /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_rem_fp(f, g, p).empty()) return false;
        }
    }
    return true;
}

bool is_irreducible(const PolyFp& f, std::uint64_t p) {
    int k = deg(f);
    if (k == 1) return true;
    long double divisors = 0;
    for (int d = 1; 2 * d <= k; ++d) {
        long double c = 1;
        for (int i = 0; i < d; ++i) c *= static_cast<long double>(p);
        divisors += c;
    }
    if (divisors <= 1e6L) return irreducible_trial_division(f, p);
    return irreducible_rabin(f, p);
}

PolyFp default_modulus(std::uint64_t p, unsigned k) {
    if (k == 1) return {0, 1};  // t itself; never used for reduction beyond mod p
    // smallest in digit order: low coefficients are the base-p digits of m
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (count > (1ull << 40) / p) throw spec_error("default modulus search space too large; supply one");
        count *= p;
    }
    for (std::uint64_t m = 0; m < count; ++m) {
        PolyFp f(k + 1, 0);
        std::uint64_t v = m;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw internal_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

FieldCtx::FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    if (!is_prime_u64(p) || p > (1ull << 31))
        throw spec_error("p must be prime with 2 <= p <= 2^31");
    if (k < 1) throw spec_error("extension degree k must be >= 1");
    if (modulus_.empty()) {
        modulus_ = default_modulus(p, k);
    } else {
        if (modulus_.size() != static_cast<std::size_t>(k) + 1)
            throw spec_error("modulus must have k+1 coefficients");
        for (auto& c : modulus_) c %= p;
        if (modulus_.back() != 1) throw spec_error("modulus must be monic");
        if (k > 1 && !is_irreducible(modulus_, p))
            throw spec_error("modulus is reducible over F_p");
    }
    // Frobenius images of the power basis: g^(i*p) mod modulus
    frob_.resize(k_);
    for (unsigned i = 0; i < k_; ++i) {
        PolyFp gi(i + 1, 0);
        gi[i] = 1;
        PolyFp acc = {1};
        PolyFp base = (k_ == 1) ? PolyFp{0} : poly_rem_fp(gi, modulus_, p_);
        if (k_ == 1) {
            frob_[i] = {1};
            continue;
        }
        std::uint64_t e = p_;
        while (e) {
            if (e & 1) acc = poly_rem_fp(poly_mul_fp(acc, base, p_), modulus_, p_);
            base = poly_rem_fp(poly_mul_fp(base, base, p_), modulus_, p_);
            e >>= 1;
        }
        acc.resize(k_, 0);
        frob_[i] = std::move(acc);
    }
}

long double FieldCtx::order_approx() const {
    long double q = 1;
    for (unsigned i = 0; i < k_; ++i) q *= static_cast<long double>(p_);
    return q;
}

std::uint64_t FieldCtx::order_u64() const {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k_; ++i) {
        if (q > UINT64_MAX / p_) throw spec_error("field too large to enumerate");
        q *= p_;
    }
    return q;
}

std::uint64_t FieldCtx::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw internal_error("division by zero in F_p");
    return powmod_u64(a, p_ - 2, p_);
}

std::vector<std::uint64_t> FieldCtx::reduce(std::vector<std::uint64_t> c) const {
    if (k_ == 1) {
        c.resize(1);
        return c;
    }
    c = poly_rem_fp(c, modulus_, p_);
    c.resize(k_, 0);
    return c;
}

FieldCtxPtr field_make(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
    return std::make_shared<const FieldCtx>(p, k, std::move(modulus));
}

Fq::Fq(const FieldCtx* ctx, std::uint64_t c0) : ctx_(ctx), c_(ctx->k(), 0) {
    c_[0] = c0 % ctx->p();
}

Fq::Fq(const FieldCtx* ctx, std::vector<std::uint64_t> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
    if (c_.size() != ctx_->k()) throw internal_error("element coefficient length != k");
    for (auto& c : c_) c %= ctx_->p();
}

bool Fq::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint64_t v) { return v == 0; });
}

bool Fq::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint64_t v) { return v == 0; });
}

Fq Fq::operator+(const Fq& o) const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->add(c_[i], o.c_[i]);
    return Fq(ctx_, std::move(r));
}

Fq Fq::operator-(const Fq& o) const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->sub(c_[i], o.c_[i]);
    return Fq(ctx_, std::move(r));
}

Fq Fq::operator-() const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->sub(0, c_[i]);
    return Fq(ctx_, std::move(r));
}

Fq Fq::operator*(const Fq& o) const {
    const std::uint64_t p = ctx_->p();
    if (ctx_->k() == 1) return Fq(ctx_, {c_[0] * o.c_[0] % p});
    PolyFp prod = poly_mul_fp(c_, o.c_, p);
    prod = poly_rem_fp(prod, ctx_->modulus(), p);
    prod.resize(ctx_->k(), 0);
    return Fq(ctx_, std::move(prod));
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inverse(); }

bool Fq::operator==(const Fq& o) const { return c_ == o.c_; }

Fq Fq::inverse() const {
    if (is_zero()) throw internal_error("inverse of zero");
    const std::uint64_t p = ctx_->p();
    if (ctx_->k() == 1) return Fq(ctx_, {ctx_->inv(c_[0])});
    // extended Euclid in F_p[t] against the modulus
    PolyFp r0 = ctx_->modulus(), r1 = c_;
    trim(r1);
    PolyFp s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // r0 = q*r1 + r2, track s
        PolyFp q;
        PolyFp rem = r0;
        std::uint64_t lead_inv = powmod_u64(r1.back(), p - 2, p);
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
        while (deg(rem) >= deg(r1)) {
            std::uint64_t c = rem.back() * lead_inv % p;
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = (rem[shift + i] + p - c * r1[i] % p) % p;
            trim(rem);
        }
        PolyFp s2 = s0;  // s2 = s0 - q*s1
        PolyFp qs = poly_mul_fp(q, s1, p);
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + p - qs[i]) % p;
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd, a nonzero constant since the modulus is irreducible
    if (deg(r0) != 0) throw internal_error("modulus not irreducible (gcd degree > 0)");
    std::uint64_t scale = powmod_u64(r0[0], p - 2, p);
    for (auto& v : s0) v = v * scale % p;
    s0.resize(ctx_->k(), 0);
    return Fq(ctx_, std::move(s0));
}

Fq Fq::pow(std::uint64_t e) const {
    Fq r = fq_one(ctx_);
    Fq b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Fq Fq::pow_p(long e) const {
    const unsigned k = ctx_->k();
    long steps = ((e % static_cast<long>(k)) + static_cast<long>(k)) % static_cast<long>(k);
    Fq r = *this;
    for (long s = 0; s < steps; ++s) {
        std::vector<std::uint64_t> out(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            if (r.c_[i] == 0) continue;
            const auto& img = ctx_->frob_image(i);
            for (unsigned j = 0; j < k; ++j)
                out[j] = (out[j] + r.c_[i] * img[j]) % ctx_->p();
        }
        r = Fq(ctx_, std::move(out));
    }
    return r;
}

std::string Fq::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        if (i == 0) {
            os << c_[i];
        } else {
            if (c_[i] != 1) os << c_[i] << "*";
            os << "g";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::uint64_t Fq::index() const {
    std::uint64_t idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * ctx_->p() + c_[i];
    return idx;
}

Fq fq_zero(const FieldCtx* ctx) { return Fq(ctx, static_cast<std::uint64_t>(0)); }
Fq fq_one(const FieldCtx* ctx) { return Fq(ctx, static_cast<std::uint64_t>(1)); }

Fq element_by_index(const FieldCtx* ctx, std::uint64_t i) {
    std::vector<std::uint64_t> c(ctx->k(), 0);
    for (unsigned d = 0; d < ctx->k(); ++d) {
        c[d] = i % ctx->p();
        i /= ctx->p();
    }
    return Fq(ctx, std::move(c));
}

Fq parse_coeff(const FieldCtx* ctx, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw spec_error("empty coefficient string");
    Fq result = fq_zero(ctx);
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    while (pos <= s.size()) {
        if (pos == s.size()) throw spec_error("dangling sign in coefficient: " + text);
        // term: [int][*][g[^e]]
        std::uint64_t coeff = 1;
        bool saw_int = false;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos > start) {
            coeff = std::stoull(s.substr(start, pos - start)) % ctx->p();
            saw_int = true;
        }
        if (pos < s.size() && s[pos] == '*') ++pos;
        unsigned gexp = 0;
        if (pos < s.size() && s[pos] == 'g') {
            ++pos;
            gexp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == start) throw spec_error("missing exponent after g^ in: " + text);
                gexp = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
            }
        } else if (!saw_int) {
            throw spec_error("cannot parse coefficient: " + text);
        }
        // build coeff * g^gexp
        Fq term(ctx, coeff);
        if (gexp > 0) {
            if (ctx->k() == 1)
                throw spec_error("generator g used over a prime field: " + text);
            std::vector<std::uint64_t> gv(ctx->k(), 0);
            gv[1] = 1;
            term = term * Fq(ctx, std::move(gv)).pow(gexp);
        }
        result = neg ? result - term : result + term;
        if (pos == s.size()) break;
        if (s[pos] == '+' || s[pos] == '-') {
            neg = s[pos] == '-';
            ++pos;
        } else {
            throw spec_error("unexpected character in coefficient: " + text);
        }
    }
    return result;
}

}  // namespace prank
