#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "monoalg/gf.hpp"

namespace monoalg {

// One class of local factors: n copies of F_{p^d}[Y]/(Y^j).
struct FormPart {
    std::uint32_t d;  // residue field degree over F_p
    std::uint32_t j;  // nilpotency length
    std::uint32_t n;  // multiplicity

    friend bool operator==(const FormPart&, const FormPart&) = default;
};

// Isomorphism type of a finite quotient F_p[X]/(P): the multiset of local
// factors, keyed by (d, j) with multiplicities. A distinguished tag value
// stands for the full polynomial algebra F_p[X] itself.
class CanonicalForm {
public:
    CanonicalForm(const PrimeField& k, std::vector<FormPart> parts);
    static CanonicalForm free_algebra(const PrimeField& k);

    const PrimeField& base() const noexcept { return base_; }
    Residue p() const noexcept { return base_.p(); }
    bool is_free() const noexcept { return free_; }
    const std::vector<FormPart>& parts() const;  // sorted by (d, j), keys unique

    std::uint64_t dimension() const;   // sum of n*d*j; throws on the free tag
    std::uint32_t slot_count() const;  // sum of n

    // slots are indexed linearly in part order, copies consecutive
    std::uint32_t slot_part(std::uint32_t slot) const;
    std::uint32_t slot_degree(std::uint32_t slot) const;
    std::uint32_t slot_length(std::uint32_t slot) const;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b);

private:
    CanonicalForm(const PrimeField& k, bool free, std::vector<FormPart> parts);

    PrimeField base_;
    bool free_;
    std::vector<FormPart> parts_;
    std::vector<std::uint32_t> slot_to_part_;
};

// Truncated polynomial over L: length-j coefficient vector, index = power
// of the nilpotent Y. The value type of one slot of the product carrier.
using TruncPoly = std::vector<FieldElement>;

TruncPoly trunc_zero(const FieldPtr& L, std::uint32_t j);
TruncPoly trunc_one(const FieldPtr& L, std::uint32_t j);
TruncPoly trunc_add(const TruncPoly& a, const TruncPoly& b);
TruncPoly trunc_mul(const TruncPoly& a, const TruncPoly& b);  // truncated at the length
bool trunc_is_zero(const TruncPoly& a);
bool trunc_is_one(const TruncPoly& a);

class AlgebraElement;

// Concrete carrier of a non-free CanonicalForm: the product of its local
// factors with componentwise arithmetic.
class ProductAlgebra : public std::enable_shared_from_this<ProductAlgebra> {
public:
    static std::shared_ptr<const ProductAlgebra> make(CanonicalForm form);

    const CanonicalForm& form() const noexcept { return form_; }
    std::uint32_t slots() const noexcept { return static_cast<std::uint32_t>(slot_fields_.size()); }
    const FieldPtr& slot_field(std::uint32_t s) const { return slot_fields_.at(s); }
    std::uint32_t slot_length(std::uint32_t s) const { return form_.slot_length(s); }
    std::uint64_t dimension() const { return form_.dimension(); }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement basis_idempotent(std::uint32_t slot) const;
    AlgebraElement element(std::vector<TruncPoly> comps) const;

    // exhaustive element enumeration for desk-scale oracles
    std::uint64_t element_count() const;  // throws std::overflow_error beyond 64 bits
    AlgebraElement element_at(std::uint64_t k) const;

    // F_p coordinates: slot-major, then Y-power, then the basis of L
    std::vector<Residue> flatten(const AlgebraElement& x) const;

private:
    explicit ProductAlgebra(CanonicalForm form);

    CanonicalForm form_;
    std::vector<FieldPtr> slot_fields_;
};

using AlgebraPtr = std::shared_ptr<const ProductAlgebra>;

class AlgebraElement {
public:
    AlgebraElement() = default;

    AlgebraElement(AlgebraPtr alg, std::vector<TruncPoly> comps);

    const AlgebraPtr& algebra() const noexcept { return alg_; }
    const CanonicalForm& form() const { return alg_->form(); }
    const std::vector<TruncPoly>& components() const noexcept { return comps_; }
    const TruncPoly& component(std::uint32_t s) const { return comps_.at(s); }

    bool is_zero() const;
    bool is_one() const;

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement scaled(Residue c) const;  // scalar action of F_p
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    AlgebraPtr alg_;
    std::vector<TruncPoly> comps_;
};

bool is_idempotent(const AlgebraElement& a);

// All 2^N idempotents (N = slot count): sums of basis idempotents over
// subsets of slots, in subset-mask order. Throws CapExceededError when the
// slot count exceeds the cap.
std::vector<AlgebraElement> idempotents(const AlgebraPtr& alg, std::uint32_t slot_cap = 20);

// The unit eigenspace E_1(a) = {x : ax = x} of an idempotent a: the slots
// a selects, together with the isomorphism type of the selected product.
struct Eigenring {
    std::vector<std::uint32_t> slots;
    CanonicalForm type;
};

Eigenring eigenspace_one(const AlgebraElement& a);

}  // namespace monoalg
