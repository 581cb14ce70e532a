#include "monoalg/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "monoalg/errors.hpp"

namespace monoalg {

namespace {

using u128 = unsigned __int128;

// Horner: sum of coeffs[i] * at^i, truncated
TruncPoly trunc_eval(const TruncPoly& coeffs, const TruncPoly& at, const FieldPtr& field) {
    TruncPoly acc = trunc_zero(field, static_cast<std::uint32_t>(at.size()));
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = trunc_mul(acc, at);
        acc[0] = acc[0] + coeffs[i];
    }
    return acc;
}

std::vector<std::uint32_t> inverse_perm(const std::vector<std::uint32_t>& perm) {
    std::vector<std::uint32_t> inv(perm.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

}  // namespace

// ---------------------------------------------------------------------------
// TruncAut
// ---------------------------------------------------------------------------

TruncAut::TruncAut(FieldPtr field, std::uint32_t length, std::vector<FieldElement> lambdas)
    : field_(std::move(field)), n_(length), lambdas_(std::move(lambdas)) {
    if (n_ < 1) throw std::invalid_argument("truncation length must be >= 1");
    if (lambdas_.size() + 1 != n_) throw std::invalid_argument("need exactly n-1 substitution coefficients");
    for (const auto& l : lambdas_)
        if (!(l.field() == *field_)) throw std::invalid_argument("substitution coefficient from the wrong field");
    if (n_ >= 2 && lambdas_[0].is_zero())
        throw std::invalid_argument("leading substitution coefficient must be invertible");
}

TruncAut TruncAut::identity(FieldPtr field, std::uint32_t length) {
    std::vector<FieldElement> l;
    if (length >= 2) {
        l.push_back(field->one());
        for (std::uint32_t i = 2; i < length; ++i) l.push_back(field->zero());
    }
    return TruncAut(std::move(field), length, std::move(l));
}

TruncPoly TruncAut::image() const {
    TruncPoly t(n_, field_->zero());
    for (std::uint32_t i = 1; i < n_; ++i) t[i] = lambdas_[i - 1];
    return t;
}

bool TruncAut::is_identity() const {
    if (n_ == 1) return true;
    if (!lambdas_[0].is_one()) return false;
    for (std::size_t i = 1; i < lambdas_.size(); ++i)
        if (!lambdas_[i].is_zero()) return false;
    return true;
}

bool operator==(const TruncAut& a, const TruncAut& b) {
    return *a.field_ == *b.field_ && a.n_ == b.n_ && a.lambdas_ == b.lambdas_;
}

std::vector<std::vector<FieldElement>> aut_matrix(const TruncAut& a) {
    const std::uint32_t m = a.length() - 1;
    std::vector<std::vector<FieldElement>> mat(m, std::vector<FieldElement>(m, a.field()->zero()));
    TruncPoly power = a.image();
    const TruncPoly img = a.image();
    for (std::uint32_t col = 0; col < m; ++col) {
        for (std::uint32_t row = 0; row < m; ++row) mat[row][col] = power[row + 1];
        if (col + 1 < m) power = trunc_mul(power, img);
    }
    return mat;
}

TruncAut compose(const TruncAut& a, const TruncAut& b) {
    if (!(*a.field() == *b.field()) || a.length() != b.length())
        throw std::invalid_argument("cannot compose substitutions of different shapes");
    // (a o b)(Y) = sum_i b_i * a.image^i: push b's image polynomial through a
    TruncPoly img = trunc_eval(b.image(), a.image(), a.field());
    std::vector<FieldElement> lambdas(img.begin() + 1, img.end());
    return TruncAut(a.field(), a.length(), std::move(lambdas));
}

TruncAut inverse(const TruncAut& a) {
    const std::uint32_t n = a.length();
    if (n == 1) return a;
    auto mat = aut_matrix(a);
    const FieldElement l1_inv = a.lambdas()[0].inverse();
    std::vector<FieldElement> mu;
    mu.push_back(l1_inv);
    FieldElement diag_inv = l1_inv;  // lambda_1^{-k} at step k
    for (std::uint32_t k = 2; k < n; ++k) {
        diag_inv = diag_inv * l1_inv;
        FieldElement s = a.field()->zero();
        for (std::uint32_t i = 1; i < k; ++i) s = s + mat[k - 1][i - 1] * mu[i - 1];
        mu.push_back((-s) * diag_inv);
    }
    return TruncAut(a.field(), n, std::move(mu));
}

TruncPoly TruncAut::operator()(const TruncPoly& v) const {
    if (v.size() != n_) throw std::invalid_argument("value length mismatch");
    return trunc_eval(v, image(), field_);
}

std::uint64_t trunc_aut_count(std::uint64_t q, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("truncation length must be >= 1");
    if (n == 1) return 1;
    u128 r = q - 1;
    for (std::uint32_t i = 0; i < n - 2; ++i) {
        r *= q;
        if (r > UINT64_MAX) throw std::overflow_error("substitution group order exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<TruncAut> enumerate_trunc_auts(const FieldPtr& field, std::uint32_t length, std::uint64_t cap) {
    const std::uint64_t q = field->size();
    const std::uint64_t total = trunc_aut_count(q, length);
    if (total > cap)
        throw CapExceededError("substitution enumeration of " + std::to_string(total) +
                               " elements exceeds the cap of " + std::to_string(cap));
    std::vector<TruncAut> out;
    out.reserve(total);
    if (length == 1) {
        out.push_back(TruncAut::identity(field, 1));
        return out;
    }
    std::vector<std::uint64_t> idx(length - 1, 0);
    idx[0] = 1;  // lambda_1 ranges over nonzero elements
    for (;;) {
        std::vector<FieldElement> lambdas;
        lambdas.reserve(length - 1);
        for (std::uint32_t i = 0; i < length - 1; ++i) lambdas.push_back(field->element_at(idx[i]));
        out.push_back(TruncAut(field, length, std::move(lambdas)));
        std::uint32_t i = length - 1;
        while (i-- > 0) {
            if (++idx[i] < q) break;
            idx[i] = i == 0 ? 1 : 0;
            if (i == 0) return out;
        }
    }
}

// ---------------------------------------------------------------------------
// LocalAut
// ---------------------------------------------------------------------------

bool operator==(const LocalAut& a, const LocalAut& b) {
    return a.frob == b.frob && a.subst == b.subst;
}

LocalAut local_identity(FieldPtr field, std::uint32_t length) {
    return LocalAut{TruncAut::identity(std::move(field), length), 0};
}

namespace {

TruncAut frob_twist(const TruncAut& a, std::uint32_t k) {
    if (k == 0) return a;
    std::vector<FieldElement> lambdas;
    lambdas.reserve(a.lambdas().size());
    for (const auto& l : a.lambdas()) lambdas.push_back(l.frobenius(k));
    return TruncAut(a.field(), a.length(), std::move(lambdas));
}

}  // namespace

LocalAut compose(const LocalAut& a, const LocalAut& b) {
    const std::uint32_t d = a.subst.field()->degree();
    // (M, s)(M', s') = (M o s(M'), s + s')
    return LocalAut{compose(a.subst, frob_twist(b.subst, a.frob)), (a.frob + b.frob) % d};
}

LocalAut inverse(const LocalAut& a) {
    const std::uint32_t d = a.subst.field()->degree();
    const std::uint32_t fr = (d - a.frob % d) % d;
    return LocalAut{frob_twist(inverse(a.subst), fr), fr};
}

TruncPoly LocalAut::operator()(const TruncPoly& v) const {
    TruncPoly w;
    w.reserve(v.size());
    for (const auto& c : v) w.push_back(c.frobenius(frob));
    return subst(w);
}

// ---------------------------------------------------------------------------
// WreathElement
// ---------------------------------------------------------------------------

bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.d == b.d && a.j == b.j && a.perm == b.perm && a.locals == b.locals;
}

WreathElement wreath_identity(const FieldPtr& field, std::uint32_t j, std::uint32_t n) {
    WreathElement w;
    w.d = field->degree();
    w.j = j;
    w.perm.resize(n);
    std::iota(w.perm.begin(), w.perm.end(), 0u);
    w.locals.assign(n, local_identity(field, j));
    return w;
}

namespace {

void check_same_class(const WreathElement& a, const WreathElement& b) {
    if (a.d != b.d || a.j != b.j || a.perm.size() != b.perm.size())
        throw std::invalid_argument("wreath elements from different classes");
}

}  // namespace

WreathElement compose(const WreathElement& a, const WreathElement& b) {
    check_same_class(a, b);
    const auto inv_a = inverse_perm(a.perm);
    WreathElement r;
    r.d = a.d;
    r.j = a.j;
    r.perm.resize(a.perm.size());
    for (std::uint32_t i = 0; i < a.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
    r.locals.reserve(a.locals.size());
    for (std::uint32_t i = 0; i < a.locals.size(); ++i)
        r.locals.push_back(compose(a.locals[i], b.locals[inv_a[i]]));
    return r;
}

WreathElement inverse(const WreathElement& a) {
    WreathElement r;
    r.d = a.d;
    r.j = a.j;
    r.perm = inverse_perm(a.perm);
    r.locals.reserve(a.locals.size());
    for (std::uint32_t k = 0; k < a.locals.size(); ++k) r.locals.push_back(inverse(a.locals[a.perm[k]]));
    return r;
}

std::vector<TruncPoly> WreathElement::operator()(const std::vector<TruncPoly>& comps) const {
    if (comps.size() != perm.size()) throw std::invalid_argument("component count mismatch");
    const auto inv = inverse_perm(perm);
    std::vector<TruncPoly> out;
    out.reserve(comps.size());
    for (std::uint32_t i = 0; i < comps.size(); ++i) out.push_back(locals[i](comps[inv[i]]));
    return out;
}

// ---------------------------------------------------------------------------
// ProductAut
// ---------------------------------------------------------------------------

ProductAut::ProductAut(CanonicalForm form, std::vector<WreathElement> blocks)
    : form_(std::move(form)), blocks_(std::move(blocks)) {
    if (form_.is_free()) throw std::invalid_argument("the free algebra is out of scope for automorphisms");
    const auto& parts = form_.parts();
    if (blocks_.size() != parts.size()) throw std::invalid_argument("one block per form part required");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& bl = blocks_[i];
        const auto& pt = parts[i];
        if (bl.d != pt.d || bl.j != pt.j) throw std::invalid_argument("block key does not match the form");
        if (bl.perm.size() != pt.n || bl.locals.size() != pt.n)
            throw std::invalid_argument("block size does not match the multiplicity");
        std::vector<bool> seen(pt.n, false);
        for (auto v : bl.perm) {
            if (v >= pt.n || seen[v]) throw std::invalid_argument("block permutation is not a bijection");
            seen[v] = true;
        }
        for (const auto& loc : bl.locals) {
            if (loc.subst.field()->degree() != pt.d || loc.subst.length() != pt.j || loc.frob >= pt.d)
                throw std::invalid_argument("local automorphism has the wrong shape");
        }
    }
}

ProductAut ProductAut::identity(const CanonicalForm& form) {
    std::vector<WreathElement> blocks;
    for (const auto& pt : form.parts())
        blocks.push_back(wreath_identity(ext_field(form.base(), pt.d), pt.j, pt.n));
    return ProductAut(form, std::move(blocks));
}

bool operator==(const ProductAut& a, const ProductAut& b) {
    return a.form_ == b.form_ && a.blocks_ == b.blocks_;
}

ProductAut compose(const ProductAut& a, const ProductAut& b) {
    if (!(a.form() == b.form())) throw std::invalid_argument("automorphisms of different algebras");
    std::vector<WreathElement> blocks;
    blocks.reserve(a.blocks().size());
    for (std::size_t i = 0; i < a.blocks().size(); ++i)
        blocks.push_back(compose(a.blocks()[i], b.blocks()[i]));
    return ProductAut(a.form(), std::move(blocks));
}

ProductAut inverse(const ProductAut& a) {
    std::vector<WreathElement> blocks;
    blocks.reserve(a.blocks().size());
    for (const auto& bl : a.blocks()) blocks.push_back(inverse(bl));
    return ProductAut(a.form(), std::move(blocks));
}

AlgebraElement apply(const ProductAut& g, const AlgebraElement& x) {
    if (!(g.form() == x.form())) throw std::invalid_argument("automorphism of a different algebra");
    std::vector<TruncPoly> out(x.components().size());
    std::uint32_t base = 0;
    for (std::size_t pi = 0; pi < g.blocks().size(); ++pi) {
        const auto& bl = g.blocks()[pi];
        const std::uint32_t n = static_cast<std::uint32_t>(bl.perm.size());
        std::vector<TruncPoly> local(x.components().begin() + base, x.components().begin() + base + n);
        auto mapped = bl(local);
        for (std::uint32_t i = 0; i < n; ++i) out[base + i] = std::move(mapped[i]);
        base += n;
    }
    return x.algebra()->element(std::move(out));
}

// ---------------------------------------------------------------------------
// order, generators, enumeration
// ---------------------------------------------------------------------------

std::uint64_t aut_group_order(const CanonicalForm& form) {
    if (form.is_free()) throw std::invalid_argument("the free algebra is out of scope for automorphisms");
    u128 total = 1;
    for (const auto& pt : form.parts()) {
        const std::uint64_t q = ext_field(form.base(), pt.d)->size();
        u128 local = static_cast<u128>(pt.d) * trunc_aut_count(q, pt.j);
        for (std::uint32_t c = 0; c < pt.n; ++c) {
            total *= local;
            if (total > UINT64_MAX) throw std::overflow_error("automorphism group order exceeds 64 bits");
        }
        for (std::uint32_t c = 2; c <= pt.n; ++c) {
            total *= c;
            if (total > UINT64_MAX) throw std::overflow_error("automorphism group order exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(total);
}

std::vector<ProductAut> aut_generators(const CanonicalForm& form) {
    if (form.is_free()) throw std::invalid_argument("the free algebra is out of scope for automorphisms");
    std::vector<ProductAut> out;
    const ProductAut id = ProductAut::identity(form);
    const auto& parts = form.parts();
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& pt = parts[pi];
        const FieldPtr L = ext_field(form.base(), pt.d);
        auto emit = [&](WreathElement block) {
            auto blocks = id.blocks();
            blocks[pi] = std::move(block);
            out.push_back(ProductAut(form, std::move(blocks)));
        };

        for (std::uint32_t t = 0; t + 1 < pt.n; ++t) {
            WreathElement w = wreath_identity(L, pt.j, pt.n);
            std::swap(w.perm[t], w.perm[t + 1]);
            emit(std::move(w));
        }
        if (pt.d > 1) {
            WreathElement w = wreath_identity(L, pt.j, pt.n);
            w.locals[0].frob = 1;
            emit(std::move(w));
        }
        if (pt.j >= 2 && L->size() > 2) {
            WreathElement w = wreath_identity(L, pt.j, pt.n);
            std::vector<FieldElement> lambdas(pt.j - 1, L->zero());
            lambdas[0] = L->primitive_element();
            w.locals[0].subst = TruncAut(L, pt.j, std::move(lambdas));
            emit(std::move(w));
        }
        for (std::uint32_t k = 2; k < pt.j; ++k) {
            // elementary unipotent substitution Y -> Y + Y^k
            WreathElement w = wreath_identity(L, pt.j, pt.n);
            std::vector<FieldElement> lambdas(pt.j - 1, L->zero());
            lambdas[0] = L->one();
            lambdas[k - 1] = L->one();
            w.locals[0].subst = TruncAut(L, pt.j, std::move(lambdas));
            emit(std::move(w));
        }
    }
    return out;
}

namespace {

std::vector<std::uint32_t> unrank_permutation(std::uint64_t rank, std::uint32_t n) {
    std::vector<std::uint64_t> fact(n, 1);
    for (std::uint32_t i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
    std::vector<std::uint32_t> avail(n);
    std::iota(avail.begin(), avail.end(), 0u);
    std::vector<std::uint32_t> perm;
    perm.reserve(n);
    for (std::uint32_t i = n; i-- > 0;) {
        const std::uint64_t f = fact[i];
        const std::size_t pick = static_cast<std::size_t>(rank / f);
        rank %= f;
        perm.push_back(avail[pick]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return perm;
}

}  // namespace

AutEnumerator::AutEnumerator(CanonicalForm form, std::uint64_t cap) : form_(std::move(form)) {
    if (form_.is_free()) throw std::invalid_argument("the free algebra is out of scope for automorphisms");
    u128 total = 1;
    for (const auto& pt : form_.parts()) {
        const FieldPtr L = ext_field(form_.base(), pt.d);
        part_fields_.push_back(L);
        const std::uint64_t q = L->size();
        std::uint64_t fact = 1;
        for (std::uint32_t c = 2; c <= pt.n; ++c) fact *= c;
        radix_.push_back(fact);
        for (std::uint32_t slot = 0; slot < pt.n; ++slot) {
            radix_.push_back(pt.d);
            if (pt.j >= 2) {
                radix_.push_back(q - 1);
                for (std::uint32_t kk = 2; kk < pt.j; ++kk) radix_.push_back(q);
            }
        }
    }
    for (std::uint64_t r : radix_) {
        total *= r;
        if (total > cap)
            throw CapExceededError("automorphism enumeration exceeds the cap of " + std::to_string(cap));
    }
    size_ = static_cast<std::uint64_t>(total);
}

ProductAut AutEnumerator::at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("automorphism index out of range");
    std::vector<std::uint64_t> digits(radix_.size(), 0);
    for (std::size_t i = radix_.size(); i-- > 0;) {
        digits[i] = index % radix_[i];
        index /= radix_[i];
    }
    std::vector<WreathElement> blocks;
    std::size_t pos = 0;
    const auto& parts = form_.parts();
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& pt = parts[pi];
        const FieldPtr& L = part_fields_[pi];
        WreathElement w;
        w.d = pt.d;
        w.j = pt.j;
        w.perm = unrank_permutation(digits[pos++], pt.n);
        for (std::uint32_t slot = 0; slot < pt.n; ++slot) {
            const std::uint32_t fr = static_cast<std::uint32_t>(digits[pos++]);
            std::vector<FieldElement> lambdas;
            if (pt.j >= 2) {
                lambdas.push_back(L->element_at(digits[pos++] + 1));
                for (std::uint32_t kk = 2; kk < pt.j; ++kk) lambdas.push_back(L->element_at(digits[pos++]));
            }
            w.locals.push_back(LocalAut{TruncAut(L, pt.j, std::move(lambdas)), fr});
        }
        blocks.push_back(std::move(w));
    }
    return ProductAut(form_, std::move(blocks));
}

}  // namespace monoalg
