#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace prank {

// Input/validation problem: bad curve file, reducible modulus, grading
// mismatch. Maps to CLI exit code 2.
struct spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal assumption (e.g. a Frobenius image escaping the kernel
// span). Maps to CLI exit code 1.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// F_{p^k} presented as F_p[t]/(modulus), elements in the power basis of
/// the residue class g of t. Immutable after construction; contexts are
/// shared by pointer and must outlive every element built on them.
class FieldCtx {
public:
    // modulus: ascending coefficients, length k+1, monic, irreducible.
    // Empty modulus selects the default (smallest irreducible of degree k).
    FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus = {});

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    // p^k as long double (element count; may exceed 2^64 for large p,k).
    long double order_approx() const;
    // p^k when it fits in 64 bits, throws otherwise. Used by enumeration.
    std::uint64_t order_u64() const;

    // F_p helpers
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b % p_) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a % p_) * (b % p_) % p_; }
    std::uint64_t inv(std::uint64_t a) const;

    // image of basis vector g^i under x -> x^p, row i of the Frobenius matrix
    const std::vector<std::uint64_t>& frob_image(unsigned i) const { return frob_[i]; }

    bool same(const FieldCtx& o) const { return this == &o; }

private:
    std::uint64_t p_;
    unsigned k_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::vector<std::uint64_t>> frob_;  // k rows of length k

    void check_irreducible() const;
    std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> c) const;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// field_make per the spec: validates p, picks or checks the modulus.
FieldCtxPtr field_make(std::uint64_t p, unsigned k,
                       std::vector<std::uint64_t> modulus = {});

/// Element of F_{p^k}. Value type; carries a non-owning context pointer.
class Fq {
public:
    Fq() : ctx_(nullptr) {}
    Fq(const FieldCtx* ctx, std::uint64_t c0);  // embed F_p scalar
    Fq(const FieldCtx* ctx, std::vector<std::uint64_t> coeffs);

    const FieldCtx* ctx() const { return ctx_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator-() const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }
    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    Fq inverse() const;
    Fq pow(std::uint64_t e) const;

    // x^(p^e); negative e takes p-th roots (the field is perfect).
    Fq pow_p(long e) const;

    // canonical "c0+c1*g+..." form, minimal (omits zero terms, unit factors)
    std::string str() const;

    // index in the enumeration order used by element_by_index
    std::uint64_t index() const;

private:
    const FieldCtx* ctx_;
    std::vector<std::uint64_t> c_;  // length k, reduced mod p
};

Fq fq_zero(const FieldCtx* ctx);
Fq fq_one(const FieldCtx* ctx);

// i-th element in digit order: coeffs are the base-p digits of i,
// constant term least significant. Deterministic enumeration for sweeps
// and point counting.
Fq element_by_index(const FieldCtx* ctx, std::uint64_t i);

/// Parses the coefficient grammar `c0 + c1*g + c2*g^2 + ...` (whitespace
/// ignored, integers reduced mod p). Also accepts bare "g", "2g" style
/// products and `-` signs between terms.
Fq parse_coeff(const FieldCtx* ctx, const std::string& text);

}  // namespace prank
