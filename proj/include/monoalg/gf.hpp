#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace monoalg {

using Residue = std::uint64_t;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(Residue n);

// The prime field F_p, p a machine-word prime (p < 2^62).
class PrimeField {
public:
    explicit PrimeField(Residue p);

    Residue p() const noexcept { return p_; }
    Residue reduce(Residue v) const noexcept { return v % p_; }
    Residue add(Residue a, Residue b) const noexcept;
    Residue sub(Residue a, Residue b) const noexcept;
    Residue neg(Residue a) const noexcept;
    Residue mul(Residue a, Residue b) const noexcept;
    Residue inv(Residue a) const;  // throws std::domain_error on zero
    Residue pow(Residue a, std::uint64_t e) const noexcept;

    bool operator==(const PrimeField& o) const noexcept = default;

private:
    Residue p_;
};

class ExtensionField;
class FieldElement;
using FieldPtr = std::shared_ptr<const ExtensionField>;

// F_{p^d} represented as F_p[Y]/(m(Y)) where m is the canonical modulus:
// the lexicographically smallest monic irreducible degree-d polynomial over
// F_p, coefficients compared from the constant term up. Instances are
// interned per (p, d), so equal fields share one object.
//
// Besides the FieldElement value interface, the class exposes "slice"
// kernels that operate on raw blocks of d residues. Polynomial arithmetic
// stores coefficients flat and runs on these to avoid per-coefficient
// allocation.
class ExtensionField : public std::enable_shared_from_this<ExtensionField> {
public:
    const PrimeField& base() const noexcept { return base_; }
    Residue p() const noexcept { return base_.p(); }
    std::uint32_t degree() const noexcept { return d_; }
    const std::vector<Residue>& modulus() const noexcept { return modulus_; }

    // p^d; throws std::overflow_error when it does not fit in 64 bits.
    std::uint64_t size() const;
    bool size_fits() const noexcept;

    bool operator==(const ExtensionField& o) const noexcept {
        return base_ == o.base_ && d_ == o.d_;
    }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;  // the class of Y (0 when d = 1)
    FieldElement from_int(Residue v) const;
    FieldElement element(std::vector<Residue> coeffs) const;  // size <= d, reduced mod p

    // Elements in lexicographic order of their coefficient vectors,
    // constant coordinate most significant. element_at(0) is zero.
    FieldElement element_at(std::uint64_t k) const;
    std::uint64_t index_of(const FieldElement& x) const;

    // Multiplicative generator of the unit group, found by exhaustive
    // order check; capped at |F| <= 2^20.
    FieldElement primitive_element() const;

    // ---- slice kernels: each slice is a block of d residues ----
    void sl_zero(Residue* o) const noexcept;
    void sl_one(Residue* o) const noexcept;
    void sl_copy(Residue* o, const Residue* a) const noexcept;
    bool sl_is_zero(const Residue* a) const noexcept;
    bool sl_eq(const Residue* a, const Residue* b) const noexcept;
    void sl_add(Residue* o, const Residue* a, const Residue* b) const noexcept;
    void sl_sub(Residue* o, const Residue* a, const Residue* b) const noexcept;
    void sl_neg(Residue* o, const Residue* a) const noexcept;
    void sl_scal(Residue* o, const Residue* a, Residue c) const noexcept;  // o = c*a, c in F_p
    void sl_mul(Residue* o, const Residue* a, const Residue* b) const;     // o must not alias a, b
    void sl_addmul(Residue* o, const Residue* a, const Residue* b) const;  // o += a*b
    void sl_submul(Residue* o, const Residue* a, const Residue* b) const;  // o -= a*b
    void sl_inv(Residue* o, const Residue* a) const;  // throws std::domain_error on zero

private:
    ExtensionField(PrimeField base, std::uint32_t d, std::vector<Residue> modulus);

    PrimeField base_;
    std::uint32_t d_;
    std::vector<Residue> modulus_;  // length d+1, monic

    friend FieldPtr ext_field(const PrimeField& k, std::uint32_t d);
};

// Canonical-modulus field factory, interned per (p, d).
FieldPtr ext_field(const PrimeField& k, std::uint32_t d);
FieldPtr ext_field(Residue p, std::uint32_t d);

// An element of F_{p^d}: d residues in the basis 1, Y, ..., Y^{d-1}.
class FieldElement {
public:
    FieldElement() = default;  // null placeholder, only assignment is valid

    FieldElement(FieldPtr field, std::vector<Residue> coeffs);

    const FieldPtr& field_ptr() const noexcept { return field_; }
    const ExtensionField& field() const { return *field_; }
    const std::vector<Residue>& coeffs() const noexcept { return c_; }
    Residue coeff(std::uint32_t i) const { return c_[i]; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    FieldElement operator-() const;
    FieldElement inverse() const;  // throws std::domain_error on zero
    FieldElement pow(std::uint64_t e) const;
    FieldElement frobenius(std::uint32_t k) const;  // x^(p^k), k taken mod d

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FieldPtr field_;
    std::vector<Residue> c_;
};

FieldElement frobenius(const FieldElement& x, std::uint32_t k);

// Galois group labels of F over F_p: {0, ..., d-1}, label k meaning
// x -> x^(p^k).
std::vector<std::uint32_t> automorphism_labels(const ExtensionField& f);

// ---- dense linear algebra mod p ----

using FpMatrix = std::vector<std::vector<Residue>>;  // row-major, entries in [0, p)

std::size_t fp_rank(FpMatrix m, const PrimeField& k);
bool fp_invertible(const FpMatrix& m, const PrimeField& k);

}  // namespace monoalg
