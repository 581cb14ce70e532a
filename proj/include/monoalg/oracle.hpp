#pragma once

#include <cstdint>
#include <vector>

#include "monoalg/poly.hpp"

namespace monoalg {

// A quotient F_p[X]/(P) in raw residue representation. This is the
// brute-force reference model: everything here works from definitions on
// residues and deliberately shares nothing with the canonical-form or
// automorphism-group code paths.
class QuotientAlgebra {
public:
    explicit QuotientAlgebra(Polynomial modulus);  // nonconstant, prime-field coefficients

    const Polynomial& modulus() const noexcept { return modulus_; }
    const FieldPtr& field() const noexcept { return modulus_.field(); }
    std::uint32_t dimension() const { return static_cast<std::uint32_t>(modulus_.degree()); }

    std::uint64_t element_count() const;  // p^deg, throws std::overflow_error beyond 64 bits
    Polynomial element_at(std::uint64_t k) const;  // residues in lexicographic order

    Polynomial reduce(const Polynomial& g) const;
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;
    // substitute t for X in g, reduced mod P
    Polynomial substitute(const Polynomial& g, const Polynomial& t) const;

private:
    Polynomial modulus_;
};

inline constexpr std::uint64_t kOracleCap = std::uint64_t{1} << 22;

// All residues t with P(t) = 0 mod P; each determines the endomorphism
// X -> t. Throws CapExceededError when p^deg exceeds the cap.
std::vector<Polynomial> brute_endomorphisms(const QuotientAlgebra& a, std::uint64_t cap = kOracleCap);

// The endomorphisms whose substitution matrix is invertible over F_p.
std::vector<Polynomial> brute_automorphisms(const QuotientAlgebra& a, std::uint64_t cap = kOracleCap);

// All residues with a^2 = a mod P.
std::vector<Polynomial> brute_idempotents(const QuotientAlgebra& a, std::uint64_t cap = kOracleCap);

// Whether some t in B satisfies P_A(t) = 0 mod P_B with invertible induced
// linear map; checks dimension equality first.
bool brute_isomorphic(const QuotientAlgebra& a, const QuotientAlgebra& b, std::uint64_t cap = kOracleCap);

}  // namespace monoalg
