#include "monoalg/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "monoalg/errors.hpp"

namespace monoalg {

namespace {

void require_prime_field_input(const Polynomial& p, const char* what) {
    if (p.field()->degree() != 1)
        throw std::invalid_argument(std::string(what) + " expects prime-field coefficients");
    if (p.degree() < 1)
        throw std::invalid_argument(std::string(what) + " expects a nonconstant polynomial");
}

CanonicalForm form_of_factors(const PrimeField& k,
                              const std::vector<std::pair<Polynomial, std::uint32_t>>& factors) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> counts;
    for (const auto& [q, e] : factors) counts[{static_cast<std::uint32_t>(q.degree()), e}]++;
    std::vector<FormPart> parts;
    for (const auto& [key, n] : counts) parts.push_back({key.first, key.second, n});
    return CanonicalForm(k, std::move(parts));
}

}  // namespace

CanonicalForm classify(const Polynomial& p) {
    require_prime_field_input(p, "classify");
    Factorization f = factor(p);
    CanonicalForm form = form_of_factors(p.field()->base(), f.factors);
    if (form.dimension() != static_cast<std::uint64_t>(p.degree()))
        throw std::logic_error("classification lost dimension");
    return form;
}

bool isomorphic(const Polynomial& p, const Polynomial& q) {
    require_prime_field_input(p, "isomorphic");
    require_prime_field_input(q, "isomorphic");
    if (p.field()->p() != q.field()->p())
        throw std::invalid_argument("polynomials over different prime fields are not comparable");
    return classify(p) == classify(q);
}

bool is_monogenic(const CanonicalForm& form) {
    if (form.is_free()) return true;
    std::map<std::uint32_t, std::uint64_t> per_degree;
    for (const auto& pt : form.parts()) per_degree[pt.d] += pt.n;
    for (const auto& [d, total] : per_degree)
        if (total > count_irreducibles(form.base(), d)) return false;
    return true;
}

Polynomial realize(const CanonicalForm& form) {
    if (form.is_free())
        throw std::invalid_argument("the free algebra is not a quotient; no generator polynomial exists");
    const PrimeField& k = form.base();
    FieldPtr fp = ext_field(k, 1);

    // group parts by residue degree; parts are sorted, so multiplicities of
    // a fixed degree arrive in increasing j and consume the lexicographic
    // irreducibles in that order
    Polynomial result = Polynomial::one(fp);
    std::size_t i = 0;
    const auto& parts = form.parts();
    while (i < parts.size()) {
        const std::uint32_t d = parts[i].d;
        std::size_t end = i;
        std::uint64_t needed = 0;
        while (end < parts.size() && parts[end].d == d) {
            needed += parts[end].n;
            ++end;
        }
        std::vector<Polynomial> irr = enumerate_irreducibles(k, d, needed);
        std::size_t next = 0;
        for (std::size_t t = i; t < end; ++t) {
            for (std::uint32_t c = 0; c < parts[t].n; ++c)
                result = result * pow(irr[next++], parts[t].j);
        }
        i = end;
    }
    return result;
}

// ---------------------------------------------------------------------------
// the local witness and the explicit isomorphism
// ---------------------------------------------------------------------------

namespace {

// Horner evaluation of a prime-field polynomial at a truncated polynomial
// over L.
TruncPoly eval_trunc(const Polynomial& g, const TruncPoly& t, const FieldPtr& L) {
    const std::uint32_t j = static_cast<std::uint32_t>(t.size());
    TruncPoly acc = trunc_zero(L, j);
    for (int i = g.degree(); i >= 0; --i) {
        acc = trunc_mul(acc, t);
        acc[0] = acc[0] + L->from_int(g.coeff(static_cast<std::uint32_t>(i)).coeff(0));
    }
    return acc;
}

std::vector<Residue> flatten_trunc(const TruncPoly& t) {
    std::vector<Residue> out;
    for (const FieldElement& c : t) out.insert(out.end(), c.coeffs().begin(), c.coeffs().end());
    return out;
}

}  // namespace

LocalIsoWitness local_iso_witness(const Polynomial& q, std::uint32_t mult) {
    require_prime_field_input(q, "local_iso_witness");
    if (mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
    if (!is_irreducible(q)) throw std::invalid_argument("local_iso_witness expects an irreducible polynomial");

    const std::uint32_t d = static_cast<std::uint32_t>(q.degree());
    FieldPtr L = ext_field(q.field()->base(), d);
    FieldElement a = find_root(q, L);

    TruncPoly t = trunc_zero(L, mult);
    t[0] = a;
    if (mult >= 2) t[1] = L->one();

    // q(t) must lie in the nilpotent ideal (Y); its constant term is q(a) = 0
    TruncPoly qt = eval_trunc(q.monic(), t, L);
    if (!qt[0].is_zero()) throw std::logic_error("witness image fails q(t) in (Y)");

    const std::uint32_t dim = d * mult;
    FpMatrix rows;
    TruncPoly power = trunc_one(L, mult);
    for (std::uint32_t i = 0; i < dim; ++i) {
        rows.push_back(flatten_trunc(power));
        power = trunc_mul(power, t);
    }
    if (fp_rank(rows, q.field()->base()) != dim)
        throw std::logic_error("witness change of basis is singular");
    return LocalIsoWitness{q.monic(), mult, std::move(L), std::move(t), std::move(rows)};
}

std::vector<CrtComponent> crt_split(const Polynomial& p) {
    require_prime_field_input(p, "crt_split");
    std::vector<CrtComponent> out;
    for (const auto& [q, e] : factor(p).factors) out.push_back({q, e, pow(q, e)});
    return out;
}

std::vector<Polynomial> crt_project(const std::vector<CrtComponent>& components, const Polynomial& g) {
    std::vector<Polynomial> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(g % c.modulus);
    return out;
}

QuotientIso::QuotientIso(Polynomial p) {
    require_prime_field_input(p, "QuotientIso");
    modulus_ = p.monic();
    components_ = crt_split(modulus_);
    carrier_ = ProductAlgebra::make(form_of_factors(p.field()->base(), [&] {
        std::vector<std::pair<Polynomial, std::uint32_t>> fs;
        for (const auto& c : components_) fs.emplace_back(c.q, c.mult);
        return fs;
    }()));

    for (const auto& c : components_) witnesses_.push_back(local_iso_witness(c.q, c.mult));

    // slots go through parts in (d, j) order with copies consecutive; the
    // factor list is sorted, so the copies of a class appear in factor order
    const CanonicalForm& form = carrier_->form();
    std::vector<bool> used(components_.size(), false);
    for (std::uint32_t s = 0; s < form.slot_count(); ++s) {
        const std::uint32_t d = form.slot_degree(s), j = form.slot_length(s);
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (used[i]) continue;
            if (static_cast<std::uint32_t>(components_[i].q.degree()) == d && components_[i].mult == j) {
                slot_component_.push_back(static_cast<std::uint32_t>(i));
                used[i] = true;
                break;
            }
        }
    }
    if (slot_component_.size() != components_.size())
        throw std::logic_error("slot assignment failed");

    // certify bijectivity end to end: images of the residue basis must span
    const std::uint64_t dim = carrier_->dimension();
    FpMatrix rows;
    Polynomial power = Polynomial::one(p.field());
    for (std::uint64_t i = 0; i < dim; ++i) {
        rows.push_back(carrier_->flatten(map(power)));
        power = (power * Polynomial::x(p.field())) % modulus_;
    }
    if (fp_rank(rows, p.field()->base()) != dim)
        throw std::logic_error("explicit isomorphism is singular");
}

AlgebraElement QuotientIso::map(const Polynomial& g) const {
    if (g.field() != modulus_.field() && !(*g.field() == *modulus_.field()))
        throw std::invalid_argument("element from a different polynomial ring");
    std::vector<TruncPoly> comps;
    comps.reserve(slot_component_.size());
    for (std::uint32_t s = 0; s < carrier_->slots(); ++s) {
        const auto& c = components_[slot_component_[s]];
        const auto& w = witnesses_[slot_component_[s]];
        Polynomial r = g % c.modulus;
        comps.push_back(eval_trunc(r, w.image_of_x, w.ext));
    }
    return carrier_->element(std::move(comps));
}

AlgebraElement generator_element(const CanonicalForm& form) {
    QuotientIso iso(realize(form));
    AlgebraElement g = iso.map(Polynomial::x(ext_field(form.base(), 1)));

    // the powers of g must span the carrier over F_p
    const std::uint64_t dim = iso.carrier()->dimension();
    FpMatrix rows;
    AlgebraElement power = iso.carrier()->one();
    for (std::uint64_t i = 0; i < dim; ++i) {
        rows.push_back(iso.carrier()->flatten(power));
        power = power * g;
    }
    if (fp_rank(rows, form.base()) != dim)
        throw std::logic_error("generator element does not span");
    return g;
}

// ---------------------------------------------------------------------------
// form enumeration
// ---------------------------------------------------------------------------

std::vector<CanonicalForm> enumerate_forms(const PrimeField& k, std::uint64_t max_dim, bool monogenic_only) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> keys;
    for (std::uint32_t d = 1; d <= max_dim; ++d)
        for (std::uint32_t j = 1; static_cast<std::uint64_t>(d) * j <= max_dim; ++j) keys.emplace_back(d, j);

    std::map<std::uint32_t, std::uint64_t> phi;
    if (monogenic_only)
        for (std::uint32_t d = 1; d <= max_dim; ++d) phi[d] = count_irreducibles(k, d);

    std::vector<CanonicalForm> out;
    std::vector<FormPart> current;
    std::map<std::uint32_t, std::uint64_t> used;

    auto rec = [&](auto&& self, std::size_t idx, std::uint64_t remaining) -> void {
        if (idx == keys.size()) {
            if (!current.empty()) out.emplace_back(k, current);
            return;
        }
        const auto [d, j] = keys[idx];
        const std::uint64_t cost = static_cast<std::uint64_t>(d) * j;
        for (std::uint32_t n = 0;; ++n) {
            if (static_cast<std::uint64_t>(n) * cost > remaining) break;
            if (n > 0 && monogenic_only && used[d] + n > phi[d]) break;
            if (n > 0) {
                current.push_back({d, j, n});
                used[d] += n;
            }
            self(self, idx + 1, remaining - n * cost);
            if (n > 0) {
                used[d] -= n;
                current.pop_back();
            }
        }
    };
    rec(rec, 0, max_dim);
    return out;
}

}  // namespace monoalg
