#include "monoalg/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "monoalg/errors.hpp"

namespace monoalg {

CanonicalForm::CanonicalForm(const PrimeField& k, bool free, std::vector<FormPart> parts)
    : base_(k), free_(free), parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), [](const FormPart& a, const FormPart& b) {
        return std::make_pair(a.d, a.j) < std::make_pair(b.d, b.j);
    });
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const auto& pt = parts_[i];
        if (pt.d < 1 || pt.j < 1 || pt.n < 1)
            throw std::invalid_argument("form part entries must be >= 1");
        if (i > 0 && parts_[i - 1].d == pt.d && parts_[i - 1].j == pt.j)
            throw std::invalid_argument("duplicate (d, j) key in canonical form");
        for (std::uint32_t c = 0; c < pt.n; ++c) slot_to_part_.push_back(static_cast<std::uint32_t>(i));
    }
}

CanonicalForm::CanonicalForm(const PrimeField& k, std::vector<FormPart> parts)
    : CanonicalForm(k, false, std::move(parts)) {}

CanonicalForm CanonicalForm::free_algebra(const PrimeField& k) { return CanonicalForm(k, true, {}); }

const std::vector<FormPart>& CanonicalForm::parts() const {
    if (free_) throw std::logic_error("the free algebra has no part decomposition");
    return parts_;
}

std::uint64_t CanonicalForm::dimension() const {
    if (free_) throw std::logic_error("the free algebra is infinite dimensional");
    std::uint64_t dim = 0;
    for (const auto& pt : parts_) dim += static_cast<std::uint64_t>(pt.n) * pt.d * pt.j;
    return dim;
}

std::uint32_t CanonicalForm::slot_count() const {
    if (free_) throw std::logic_error("the free algebra has no slots");
    return static_cast<std::uint32_t>(slot_to_part_.size());
}

std::uint32_t CanonicalForm::slot_part(std::uint32_t slot) const { return slot_to_part_.at(slot); }
std::uint32_t CanonicalForm::slot_degree(std::uint32_t slot) const { return parts_[slot_to_part_.at(slot)].d; }
std::uint32_t CanonicalForm::slot_length(std::uint32_t slot) const { return parts_[slot_to_part_.at(slot)].j; }

bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.base_ == b.base_ && a.free_ == b.free_ && a.parts_ == b.parts_;
}

// ---------------------------------------------------------------------------
// truncated polynomials
// ---------------------------------------------------------------------------

TruncPoly trunc_zero(const FieldPtr& L, std::uint32_t j) { return TruncPoly(j, L->zero()); }

TruncPoly trunc_one(const FieldPtr& L, std::uint32_t j) {
    TruncPoly t(j, L->zero());
    t[0] = L->one();
    return t;
}

TruncPoly trunc_add(const TruncPoly& a, const TruncPoly& b) {
    if (a.size() != b.size()) throw std::invalid_argument("truncated polynomial length mismatch");
    TruncPoly r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

TruncPoly trunc_mul(const TruncPoly& a, const TruncPoly& b) {
    if (a.size() != b.size()) throw std::invalid_argument("truncated polynomial length mismatch");
    const std::size_t j = a.size();
    TruncPoly r(j, a.empty() ? FieldElement() : a[0].field_ptr()->zero());
    for (std::size_t s = 0; s < j; ++s) {
        if (a[s].is_zero()) continue;
        for (std::size_t t = 0; s + t < j; ++t) r[s + t] = r[s + t] + a[s] * b[t];
    }
    return r;
}

bool trunc_is_zero(const TruncPoly& a) {
    return std::all_of(a.begin(), a.end(), [](const FieldElement& c) { return c.is_zero(); });
}

bool trunc_is_one(const TruncPoly& a) {
    if (a.empty() || !a[0].is_one()) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (!a[i].is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// ProductAlgebra
// ---------------------------------------------------------------------------

ProductAlgebra::ProductAlgebra(CanonicalForm form) : form_(std::move(form)) {
    if (form_.is_free()) throw std::invalid_argument("the free algebra has no finite carrier");
    for (std::uint32_t s = 0; s < form_.slot_count(); ++s)
        slot_fields_.push_back(ext_field(form_.base(), form_.slot_degree(s)));
}

AlgebraPtr ProductAlgebra::make(CanonicalForm form) {
    return AlgebraPtr(new ProductAlgebra(std::move(form)));
}

AlgebraElement ProductAlgebra::zero() const {
    std::vector<TruncPoly> comps;
    for (std::uint32_t s = 0; s < slots(); ++s) comps.push_back(trunc_zero(slot_fields_[s], slot_length(s)));
    return AlgebraElement(shared_from_this(), std::move(comps));
}

AlgebraElement ProductAlgebra::one() const {
    std::vector<TruncPoly> comps;
    for (std::uint32_t s = 0; s < slots(); ++s) comps.push_back(trunc_one(slot_fields_[s], slot_length(s)));
    return AlgebraElement(shared_from_this(), std::move(comps));
}

AlgebraElement ProductAlgebra::basis_idempotent(std::uint32_t slot) const {
    if (slot >= slots()) throw std::out_of_range("slot index out of range");
    std::vector<TruncPoly> comps;
    for (std::uint32_t s = 0; s < slots(); ++s) {
        comps.push_back(s == slot ? trunc_one(slot_fields_[s], slot_length(s))
                                  : trunc_zero(slot_fields_[s], slot_length(s)));
    }
    return AlgebraElement(shared_from_this(), std::move(comps));
}

AlgebraElement ProductAlgebra::element(std::vector<TruncPoly> comps) const {
    return AlgebraElement(shared_from_this(), std::move(comps));
}

std::uint64_t ProductAlgebra::element_count() const {
    unsigned __int128 total = 1;
    for (std::uint32_t s = 0; s < slots(); ++s) {
        const std::uint64_t q = slot_fields_[s]->size();
        for (std::uint32_t i = 0; i < slot_length(s); ++i) {
            total *= q;
            if (total > UINT64_MAX) throw std::overflow_error("carrier too large to enumerate");
        }
    }
    return static_cast<std::uint64_t>(total);
}

AlgebraElement ProductAlgebra::element_at(std::uint64_t k) const {
    if (k >= element_count()) throw std::out_of_range("element index out of range");
    std::vector<TruncPoly> comps(slots());
    // digits taken slot by slot from the back, field coordinate fastest
    for (std::uint32_t s = slots(); s-- > 0;) {
        const std::uint64_t q = slot_fields_[s]->size();
        TruncPoly t(slot_length(s), slot_fields_[s]->zero());
        for (std::uint32_t i = 0; i < slot_length(s); ++i) {
            t[i] = slot_fields_[s]->element_at(k % q);
            k /= q;
        }
        comps[s] = std::move(t);
    }
    return AlgebraElement(shared_from_this(), std::move(comps));
}

std::vector<Residue> ProductAlgebra::flatten(const AlgebraElement& x) const {
    if (!(x.form() == form_)) throw std::invalid_argument("element of a different algebra");
    std::vector<Residue> out;
    out.reserve(dimension());
    for (std::uint32_t s = 0; s < slots(); ++s) {
        for (const FieldElement& c : x.component(s))
            out.insert(out.end(), c.coeffs().begin(), c.coeffs().end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// AlgebraElement
// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<TruncPoly> comps)
    : alg_(std::move(alg)), comps_(std::move(comps)) {
    if (comps_.size() != alg_->slots()) throw std::invalid_argument("component count != slot count");
    for (std::uint32_t s = 0; s < alg_->slots(); ++s) {
        if (comps_[s].size() != alg_->slot_length(s))
            throw std::invalid_argument("component " + std::to_string(s) + " has the wrong length");
        for (const FieldElement& c : comps_[s])
            if (!(c.field() == *alg_->slot_field(s)))
                throw std::invalid_argument("component coefficient from the wrong field");
    }
}

namespace {

const AlgebraPtr& common_algebra(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra() != b.algebra() && !(a.form() == b.form()))
        throw std::invalid_argument("elements of different product algebras");
    return a.algebra();
}

}  // namespace

bool AlgebraElement::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), trunc_is_zero);
}

bool AlgebraElement::is_one() const {
    return std::all_of(comps_.begin(), comps_.end(), trunc_is_one);
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    common_algebra(a, b);
    std::vector<TruncPoly> comps;
    for (std::size_t s = 0; s < a.components().size(); ++s)
        comps.push_back(trunc_add(a.components()[s], b.components()[s]));
    return AlgebraElement(a.algebra(), std::move(comps));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    common_algebra(a, b);
    std::vector<TruncPoly> comps;
    for (std::size_t s = 0; s < a.components().size(); ++s) {
        TruncPoly t = a.components()[s];
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = t[i] - b.components()[s][i];
        comps.push_back(std::move(t));
    }
    return AlgebraElement(a.algebra(), std::move(comps));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    common_algebra(a, b);
    std::vector<TruncPoly> comps;
    for (std::size_t s = 0; s < a.components().size(); ++s)
        comps.push_back(trunc_mul(a.components()[s], b.components()[s]));
    return AlgebraElement(a.algebra(), std::move(comps));
}

AlgebraElement AlgebraElement::scaled(Residue c) const {
    std::vector<TruncPoly> comps(comps_);
    for (std::uint32_t s = 0; s < alg_->slots(); ++s) {
        FieldElement sc = alg_->slot_field(s)->from_int(c);
        for (auto& coeff : comps[s]) coeff = coeff * sc;
    }
    return AlgebraElement(alg_, std::move(comps));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    common_algebra(a, b);
    return a.components() == b.components();
}

bool is_idempotent(const AlgebraElement& a) { return a * a == a; }

std::vector<AlgebraElement> idempotents(const AlgebraPtr& alg, std::uint32_t slot_cap) {
    const std::uint32_t n = alg->slots();
    if (n > slot_cap)
        throw CapExceededError("idempotent enumeration over " + std::to_string(n) +
                               " slots exceeds the cap of " + std::to_string(slot_cap));
    std::vector<AlgebraElement> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        AlgebraElement e = alg->zero();
        for (std::uint32_t s = 0; s < n; ++s)
            if (mask & (std::uint64_t{1} << s)) e = e + alg->basis_idempotent(s);
        out.push_back(std::move(e));
    }
    return out;
}

Eigenring eigenspace_one(const AlgebraElement& a) {
    if (!is_idempotent(a)) throw std::invalid_argument("eigenspace_one requires an idempotent");
    const auto& alg = *a.algebra();
    std::vector<std::uint32_t> slots;
    std::vector<FormPart> parts;
    for (std::uint32_t s = 0; s < alg.slots(); ++s) {
        if (!trunc_is_one(a.component(s))) continue;
        slots.push_back(s);
        const std::uint32_t d = alg.form().slot_degree(s), j = alg.form().slot_length(s);
        auto it = std::find_if(parts.begin(), parts.end(),
                               [&](const FormPart& pt) { return pt.d == d && pt.j == j; });
        if (it == parts.end())
            parts.push_back({d, j, 1});
        else
            ++it->n;
    }
    return Eigenring{std::move(slots), CanonicalForm(alg.form().base(), std::move(parts))};
}

}  // namespace monoalg
