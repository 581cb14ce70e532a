#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monoalg/gf.hpp"

namespace monoalg {

// Dense univariate polynomial over F_{p^d}. Coefficients are stored flat,
// d residues per coefficient, trailing zero coefficients stripped.
class Polynomial {
public:
    Polynomial() = default;  // null placeholder

    static Polynomial zero(FieldPtr f);
    static Polynomial one(FieldPtr f);
    static Polynomial x(FieldPtr f);
    static Polynomial constant(FieldElement c);
    static Polynomial from_coeffs(FieldPtr f, const std::vector<FieldElement>& cs);
    static Polynomial from_residues(FieldPtr f, const std::vector<Residue>& cs);

    const FieldPtr& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept;  // -1 for the zero polynomial
    FieldElement coeff(std::uint32_t i) const;
    FieldElement leading() const;
    bool is_monic() const;
    Polynomial monic() const;

    const std::vector<Residue>& raw() const noexcept { return c_; }

    FieldElement operator()(const FieldElement& x) const;  // Horner evaluation

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const FieldElement& s);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    Polynomial(FieldPtr f, std::vector<Residue> flat);
    void normalize();

    FieldPtr field_;
    std::vector<Residue> c_;  // flat, stride = field_->degree()

    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    friend Polynomial derivative(const Polynomial& a);
};

// quotient and remainder, deg(rem) < deg(b); throws std::domain_error when b = 0
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic
Polynomial derivative(const Polynomial& a);
Polynomial pow(const Polynomial& base, std::uint64_t e);
Polynomial pow_mod(Polynomial base, unsigned __int128 e, const Polynomial& mod);

// Total order: degree first, then coefficients compared from the constant
// term up (each coefficient by its residue vector).
int compare(const Polynomial& a, const Polynomial& b);
bool poly_less(const Polynomial& a, const Polynomial& b);

// Evaluate f at x, where f either lives in x's field or has prime-field
// coefficients that embed into it.
FieldElement evaluate(const Polynomial& f, const FieldElement& x);

// Squarefree parts: pairwise coprime monic S_e with input = lc * prod S_e^e,
// sorted by multiplicity. Handles derivative = 0 by p-th root extraction.
std::vector<std::pair<Polynomial, std::uint32_t>> squarefree_decomposition(const Polynomial& f);

struct Factorization {
    FieldElement unit;
    std::vector<std::pair<Polynomial, std::uint32_t>> factors;  // monic irreducible, sorted

    Polynomial product() const;
};

// Complete factorization into monic irreducibles. Deterministic: the
// equal-degree splitter draws from a fixed-seed stream and the factor list
// is sorted by (degree, coefficients).
Factorization factor(const Polynomial& f);

bool is_irreducible(const Polynomial& f);

// Number of monic irreducible degree-d polynomials over F_p (necklace
// count); saturates at UINT64_MAX instead of overflowing.
std::uint64_t count_irreducibles(const PrimeField& k, std::uint32_t d);

// First `count` monic irreducible degree-d polynomials over F_p in
// lexicographic order; throws InfeasibleError when count exceeds the
// total available.
std::vector<Polynomial> enumerate_irreducibles(const PrimeField& k, std::uint32_t d, std::uint64_t count);

// Smallest root of q in L (lexicographic element order); q irreducible over
// F_p with deg q = [L : F_p].
FieldElement find_root(const Polynomial& q, const FieldPtr& L);

}  // namespace monoalg
