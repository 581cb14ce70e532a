#pragma once

#include <cstdint>
#include <vector>

#include "monoalg/algebra.hpp"

namespace monoalg {

// An L-algebra automorphism of L[Y]/(Y^n), stored as the image
// lambda_1 Y + ... + lambda_{n-1} Y^{n-1} of Y (lambda_1 invertible).
// Composition matches multiplication of the transition matrices, with the
// right-hand operand applied first.
class TruncAut {
public:
    TruncAut(FieldPtr field, std::uint32_t length, std::vector<FieldElement> lambdas);
    static TruncAut identity(FieldPtr field, std::uint32_t length);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint32_t length() const noexcept { return n_; }
    const std::vector<FieldElement>& lambdas() const noexcept { return lambdas_; }

    TruncPoly image() const;  // [0, lambda_1, ..., lambda_{n-1}]
    bool is_identity() const;

    TruncPoly operator()(const TruncPoly& v) const;  // act on a slot value

    friend bool operator==(const TruncAut& a, const TruncAut& b);

private:
    FieldPtr field_;
    std::uint32_t n_;
    std::vector<FieldElement> lambdas_;  // size n-1
};

// Matrix of the automorphism on the basis Y, Y^2, ..., Y^{n-1}: entry (i, j)
// is the Y^i coefficient of image^j (1-indexed; returned 0-indexed). Lower
// triangular with diagonal lambda_1^j.
std::vector<std::vector<FieldElement>> aut_matrix(const TruncAut& a);

TruncAut compose(const TruncAut& a, const TruncAut& b);  // apply b, then a
TruncAut inverse(const TruncAut& a);

// |Aut_L(L[Y]/(Y^n))| = (q-1) q^(n-2) for n >= 2, 1 for n = 1.
std::uint64_t trunc_aut_count(std::uint64_t q, std::uint32_t n);

// All length-n substitution automorphisms over L, lambda vectors in
// lexicographic order.
std::vector<TruncAut> enumerate_trunc_auts(const FieldPtr& field, std::uint32_t length,
                                           std::uint64_t cap = 1'000'000);

// A K-algebra automorphism of L[Y]/(Y^n): Frobenius power on coefficients
// followed by a substitution.
struct LocalAut {
    TruncAut subst;
    std::uint32_t frob;  // in [0, d)

    TruncPoly operator()(const TruncPoly& v) const;

    friend bool operator==(const LocalAut& a, const LocalAut& b);
};

LocalAut local_identity(FieldPtr field, std::uint32_t length);
LocalAut compose(const LocalAut& a, const LocalAut& b);  // apply b, then a
LocalAut inverse(const LocalAut& a);

// An automorphism of (L[Y]/(Y^j))^n: permute the copies, then act on each
// by a LocalAut. perm holds forward images; the tuple action is
// out[i] = locals[i](in[perm^{-1}(i)]).
struct WreathElement {
    std::uint32_t d, j;
    std::vector<std::uint32_t> perm;
    std::vector<LocalAut> locals;

    std::vector<TruncPoly> operator()(const std::vector<TruncPoly>& comps) const;

    friend bool operator==(const WreathElement& a, const WreathElement& b);
};

WreathElement wreath_identity(const FieldPtr& field, std::uint32_t j, std::uint32_t n);
WreathElement compose(const WreathElement& a, const WreathElement& b);  // apply b, then a
WreathElement inverse(const WreathElement& a);

// A full automorphism of the product carrier: one wreath element per
// (d, j) class of the form.
class ProductAut {
public:
    ProductAut(CanonicalForm form, std::vector<WreathElement> blocks);
    static ProductAut identity(const CanonicalForm& form);

    const CanonicalForm& form() const noexcept { return form_; }
    const std::vector<WreathElement>& blocks() const noexcept { return blocks_; }

    friend bool operator==(const ProductAut& a, const ProductAut& b);

private:
    CanonicalForm form_;
    std::vector<WreathElement> blocks_;
};

ProductAut compose(const ProductAut& a, const ProductAut& b);  // apply b, then a
ProductAut inverse(const ProductAut& a);
AlgebraElement apply(const ProductAut& g, const AlgebraElement& x);

// Group order: product over parts of (d * trunc_aut_count(p^d, j))^n * n!.
std::uint64_t aut_group_order(const CanonicalForm& form);

// A generating set: adjacent slot transpositions per class, and in the
// first slot of each class a Frobenius generator, a diagonal substitution
// by a primitive element, and elementary unipotent substitutions.
std::vector<ProductAut> aut_generators(const CanonicalForm& form);

// Index-addressable enumeration of the whole automorphism group.
class AutEnumerator {
public:
    explicit AutEnumerator(CanonicalForm form, std::uint64_t cap = 1'000'000);

    std::uint64_t size() const noexcept { return size_; }
    ProductAut at(std::uint64_t index) const;

private:
    CanonicalForm form_;
    std::vector<FieldPtr> part_fields_;
    std::vector<std::uint64_t> radix_;  // per-digit radix, blocks in part order
    std::uint64_t size_;
};

}  // namespace monoalg
