#include "monoalg/oracle.hpp"

#include <stdexcept>
#include <string>

#include "monoalg/errors.hpp"

namespace monoalg {

QuotientAlgebra::QuotientAlgebra(Polynomial modulus) : modulus_(std::move(modulus)) {
    if (modulus_.field()->degree() != 1)
        throw std::invalid_argument("quotient algebras are taken over a prime field");
    if (modulus_.degree() < 1) throw std::invalid_argument("quotient modulus must be nonconstant");
    modulus_ = modulus_.monic();
}

std::uint64_t QuotientAlgebra::element_count() const {
    unsigned __int128 total = 1;
    for (std::uint32_t i = 0; i < dimension(); ++i) {
        total *= field()->p();
        if (total > UINT64_MAX) throw std::overflow_error("quotient too large to enumerate");
    }
    return static_cast<std::uint64_t>(total);
}

Polynomial QuotientAlgebra::element_at(std::uint64_t k) const {
    // digits (c_0, ..., c_{deg-1}), constant coordinate most significant
    std::vector<Residue> cs(dimension(), 0);
    for (std::uint32_t i = dimension(); i-- > 0;) {
        cs[i] = k % field()->p();
        k /= field()->p();
    }
    return Polynomial::from_residues(field(), cs);
}

Polynomial QuotientAlgebra::reduce(const Polynomial& g) const { return g % modulus_; }

Polynomial QuotientAlgebra::mul(const Polynomial& a, const Polynomial& b) const {
    return (a * b) % modulus_;
}

Polynomial QuotientAlgebra::substitute(const Polynomial& g, const Polynomial& t) const {
    Polynomial acc = Polynomial::zero(field());
    for (int i = g.degree(); i >= 0; --i) {
        acc = mul(acc, t) + Polynomial::constant(g.coeff(static_cast<std::uint32_t>(i)));
    }
    return reduce(acc);
}

namespace {

std::uint64_t checked_count(const QuotientAlgebra& a, std::uint64_t cap, const char* what) {
    std::uint64_t n;
    try {
        n = a.element_count();
    } catch (const std::overflow_error&) {
        throw CapExceededError(std::string(what) + ": quotient size exceeds the cap");
    }
    if (n > cap)
        throw CapExceededError(std::string(what) + ": " + std::to_string(n) +
                               " residues exceed the cap of " + std::to_string(cap));
    return n;
}

// columns are the coordinate vectors of 1, t, t^2, ..., t^(dim-1) mod P
bool substitution_invertible(const QuotientAlgebra& a, const Polynomial& t) {
    const std::uint32_t dim = a.dimension();
    FpMatrix m(dim, std::vector<Residue>(dim, 0));
    Polynomial power = Polynomial::one(a.field());
    for (std::uint32_t col = 0; col < dim; ++col) {
        for (int i = 0; i <= power.degree(); ++i)
            m[static_cast<std::uint32_t>(i)][col] = power.coeff(static_cast<std::uint32_t>(i)).coeff(0);
        power = a.mul(power, t);
    }
    return fp_invertible(m, a.field()->base());
}

}  // namespace

std::vector<Polynomial> brute_endomorphisms(const QuotientAlgebra& a, std::uint64_t cap) {
    const std::uint64_t n = checked_count(a, cap, "brute_endomorphisms");
    std::vector<Polynomial> out;
    for (std::uint64_t k = 0; k < n; ++k) {
        Polynomial t = a.element_at(k);
        if (a.substitute(a.modulus(), t).is_zero()) out.push_back(std::move(t));
    }
    return out;
}

std::vector<Polynomial> brute_automorphisms(const QuotientAlgebra& a, std::uint64_t cap) {
    std::vector<Polynomial> out;
    for (auto& t : brute_endomorphisms(a, cap))
        if (substitution_invertible(a, t)) out.push_back(std::move(t));
    return out;
}

std::vector<Polynomial> brute_idempotents(const QuotientAlgebra& a, std::uint64_t cap) {
    const std::uint64_t n = checked_count(a, cap, "brute_idempotents");
    std::vector<Polynomial> out;
    for (std::uint64_t k = 0; k < n; ++k) {
        Polynomial t = a.element_at(k);
        if (a.mul(t, t) == t) out.push_back(std::move(t));
    }
    return out;
}

bool brute_isomorphic(const QuotientAlgebra& a, const QuotientAlgebra& b, std::uint64_t cap) {
    if (a.field()->p() != b.field()->p())
        throw std::invalid_argument("cannot compare quotients over different prime fields");
    if (a.dimension() != b.dimension()) return false;
    const std::uint64_t n = checked_count(b, cap, "brute_isomorphic");
    for (std::uint64_t k = 0; k < n; ++k) {
        Polynomial t = b.element_at(k);
        if (!b.substitute(a.modulus(), t).is_zero()) continue;
        if (substitution_invertible(b, t)) return true;
    }
    return false;
}

}  // namespace monoalg
