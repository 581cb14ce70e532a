#pragma once

#include <cstdint>
#include <vector>

#include "monoalg/algebra.hpp"
#include "monoalg/poly.hpp"

namespace monoalg {

// Canonical form of F_p[X]/(P): factor P and record, per residue-field
// degree d and multiplicity j, how many local factors F_{p^d}[Y]/(Y^j)
// appear. P must be nonconstant with prime-field coefficients.
CanonicalForm classify(const Polynomial& p);

// Whether F_p[X]/(P) and F_p[X]/(Q) are isomorphic as F_p-algebras, by
// comparison of canonical forms. Throws when the ground fields differ.
bool isomorphic(const Polynomial& p, const Polynomial& q);

// Whether the form is the type of some quotient of F_p[X]: for every degree
// d, the number of local factors with that residue degree may not exceed
// the number of available irreducible polynomials.
bool is_monogenic(const CanonicalForm& form);

// A generator polynomial: monic Q with classify(Q) = form, built from the
// lexicographically first irreducible polynomials of each degree, lower
// multiplicities consuming earlier ones. Throws InfeasibleError when the
// form is not monogenic, naming the violating degree.
Polynomial realize(const CanonicalForm& form);

// Constructive isomorphism F_p[X]/(Q^e) = L[Y]/(Y^e) with L = F_p[X]/(Q):
// the image t = a + Y of X (a the smallest root of Q in L) together with
// the change-of-basis matrix of its powers, certified full rank.
struct LocalIsoWitness {
    Polynomial q;
    std::uint32_t mult;
    FieldPtr ext;            // L, canonical field of degree deg q
    TruncPoly image_of_x;    // t, length mult
    FpMatrix change_of_basis;  // row i = F_p coordinates of t^i, (de) x (de)
};

LocalIsoWitness local_iso_witness(const Polynomial& q, std::uint32_t mult);

// The factor list of P with residue projections: P = prod q_i^{e_i}, and
// projections g -> g mod q_i^{e_i} realize the splitting of F_p[X]/(P)
// into its local pieces.
struct CrtComponent {
    Polynomial q;
    std::uint32_t mult;
    Polynomial modulus;  // q^mult
};

std::vector<CrtComponent> crt_split(const Polynomial& p);
std::vector<Polynomial> crt_project(const std::vector<CrtComponent>& components, const Polynomial& g);

// The full explicit isomorphism F_p[X]/(P) -> carrier of classify(P):
// CRT projections composed with the local witnesses. Bijectivity is
// certified by a rank check at construction.
class QuotientIso {
public:
    explicit QuotientIso(Polynomial p);

    const Polynomial& modulus() const noexcept { return modulus_; }
    const AlgebraPtr& carrier() const noexcept { return carrier_; }
    const std::vector<CrtComponent>& components() const noexcept { return components_; }

    AlgebraElement map(const Polynomial& g) const;

private:
    Polynomial modulus_;
    AlgebraPtr carrier_;
    std::vector<CrtComponent> components_;       // one per factor of P
    std::vector<std::uint32_t> slot_component_;  // slot -> index into components_
    std::vector<LocalIsoWitness> witnesses_;     // parallel to components_
};

// The image of X in the carrier of the form: an element whose powers span
// the whole algebra over F_p (verified by a rank check).
AlgebraElement generator_element(const CanonicalForm& form);

// All canonical forms over F_p with 1 <= dimension <= max_dim, in a fixed
// deterministic order; optionally only the monogenic ones.
std::vector<CanonicalForm> enumerate_forms(const PrimeField& k, std::uint64_t max_dim, bool monogenic_only);

}  // namespace monoalg
