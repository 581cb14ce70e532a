#include "monoalg/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "monoalg/errors.hpp"

namespace monoalg {

namespace {

using u128 = unsigned __int128;

Residue mulmod_u64(Residue a, Residue b, Residue m) noexcept {
    return static_cast<Residue>(static_cast<u128>(a) * b % m);
}

Residue powmod_u64(Residue a, Residue e, Residue m) noexcept {
    Residue r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(Residue n) {
    if (n < 2) return false;
    for (Residue q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    Residue d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this witness set is deterministic for all n < 2^64
    for (Residue a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        Residue x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(Residue p) : p_(p) {
    if (p >= (Residue{1} << 62)) throw std::invalid_argument("characteristic too large (need p < 2^62)");
    if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
}

Residue PrimeField::add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
}

Residue PrimeField::sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
}

Residue PrimeField::neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }

Residue PrimeField::mul(Residue a, Residue b) const noexcept { return mulmod_u64(a, b, p_); }

Residue PrimeField::inv(Residue a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    __int128 t = 0, nt = 1;
    __int128 r = static_cast<__int128>(p_), nr = static_cast<__int128>(a % p_);
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt; nt = tmp;
        tmp = r - q * nr;
        r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<__int128>(p_);
    return static_cast<Residue>(t);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept { return powmod_u64(a % p_, e, p_); }

// ---------------------------------------------------------------------------
// Internal dense polynomials over F_p, used only to construct canonical
// moduli. The general-purpose polynomial layer lives above this module.
// ---------------------------------------------------------------------------

namespace {

using FpVec = std::vector<Residue>;  // coefficient i of Y^i, trailing zeros stripped

void fv_normalize(FpVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fv_deg(const FpVec& a) { return static_cast<int>(a.size()) - 1; }

FpVec fv_mul(const PrimeField& k, const FpVec& a, const FpVec& b) {
    if (a.empty() || b.empty()) return {};
    FpVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    fv_normalize(r);
    return r;
}

// a mod m, m monic nonconstant
void fv_mod(const PrimeField& k, FpVec& a, const FpVec& m) {
    fv_normalize(a);
    int dm = fv_deg(m);
    while (fv_deg(a) >= dm) {
        Residue c = a.back();
        std::size_t shift = a.size() - m.size();
        if (c != 0) {
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = k.sub(a[shift + i], k.mul(c, m[i]));
        }
        a.pop_back();
        fv_normalize(a);
    }
}

FpVec fv_powmod(const PrimeField& k, FpVec base, u128 e, const FpVec& m) {
    FpVec r{1};
    fv_mod(k, base, m);
    while (e) {
        if (e & 1) { r = fv_mul(k, r, base); fv_mod(k, r, m); }
        base = fv_mul(k, base, base);
        fv_mod(k, base, m);
        e >>= 1;
    }
    return r;
}

void fv_make_monic(const PrimeField& k, FpVec& a) {
    if (a.empty() || a.back() == 1) return;
    Residue li = k.inv(a.back());
    for (auto& c : a) c = k.mul(c, li);
}

FpVec fv_gcd(const PrimeField& k, FpVec a, FpVec b) {
    fv_normalize(a);
    fv_normalize(b);
    while (!b.empty()) {
        fv_make_monic(k, b);
        fv_mod(k, a, b);
        std::swap(a, b);
    }
    fv_make_monic(k, a);
    return a;
}

// Rabin irreducibility test for monic f of degree n >= 1 over F_p:
// X^(p^n) = X mod f, and gcd(X^(p^(n/r)) - X, f) = 1 for each prime r | n.
bool fv_is_irreducible(const PrimeField& k, const FpVec& f) {
    int n = fv_deg(f);
    if (n < 1) return false;
    if (n == 1) return true;

    std::vector<int> prime_divs;
    int m = n;
    for (int q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            prime_divs.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) prime_divs.push_back(m);

    // h_k = X^(p^k) mod f, by iterated p-th powering
    FpVec h{0, 1};
    std::vector<FpVec> checkpoints(static_cast<std::size_t>(n) + 1);
    checkpoints[0] = h;
    for (int i = 1; i <= n; ++i) {
        h = fv_powmod(k, h, k.p(), f);
        checkpoints[static_cast<std::size_t>(i)] = h;
    }
    if (checkpoints[static_cast<std::size_t>(n)] != FpVec{0, 1}) return false;
    for (int r : prime_divs) {
        FpVec diff = checkpoints[static_cast<std::size_t>(n / r)];
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = k.sub(diff[1], 1);
        fv_normalize(diff);
        if (diff.empty()) return false;  // X^(p^(n/r)) = X: f splits over a subfield
        if (fv_deg(fv_gcd(k, f, diff)) != 0) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree d, coefficients
// compared from the constant term up.
std::vector<Residue> canonical_modulus(const PrimeField& k, std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("extension degree must be >= 1");
    if (d == 1) return {0, 1};  // Y
    // digits (c_0, ..., c_{d-1}), c_0 most significant; c_0 = 0 gives a
    // multiple of Y, never irreducible for d >= 2, so start at c_0 = 1.
    std::vector<Residue> digits(d, 0);
    digits[0] = 1;
    for (;;) {
        FpVec f(digits.begin(), digits.end());
        f.push_back(1);
        if (fv_is_irreducible(k, f)) return f;
        // odometer step, last digit fastest
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++digits[i] < k.p()) break;
            digits[i] = 0;
            if (i == 0)
                throw std::logic_error("no irreducible polynomial found (impossible)");
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtensionField
// ---------------------------------------------------------------------------

ExtensionField::ExtensionField(PrimeField base, std::uint32_t d, std::vector<Residue> modulus)
    : base_(base), d_(d), modulus_(std::move(modulus)) {}

FieldPtr ext_field(const PrimeField& k, std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("extension degree must be >= 1");
    static std::mutex mu;
    static std::map<std::pair<Residue, std::uint32_t>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(k.p(), d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = FieldPtr(new ExtensionField(k, d, canonical_modulus(k, d)));
    cache.emplace(key, f);
    return f;
}

FieldPtr ext_field(Residue p, std::uint32_t d) { return ext_field(PrimeField(p), d); }

bool ExtensionField::size_fits() const noexcept {
    u128 s = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        s *= base_.p();
        if (s > UINT64_MAX) return false;
    }
    return true;
}

std::uint64_t ExtensionField::size() const {
    if (!size_fits()) throw std::overflow_error("field size exceeds 64 bits");
    std::uint64_t s = 1;
    for (std::uint32_t i = 0; i < d_; ++i) s *= base_.p();
    return s;
}

FieldElement ExtensionField::zero() const {
    return FieldElement(shared_from_this(), std::vector<Residue>(d_, 0));
}

FieldElement ExtensionField::one() const {
    std::vector<Residue> c(d_, 0);
    c[0] = 1 % base_.p();
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement ExtensionField::gen() const {
    std::vector<Residue> c(d_, 0);
    if (d_ >= 2) {
        c[1] = 1;
    }
    // d = 1: the class of Y is 0 since the canonical modulus is Y itself
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement ExtensionField::from_int(Residue v) const {
    std::vector<Residue> c(d_, 0);
    c[0] = v % base_.p();
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement ExtensionField::element(std::vector<Residue> coeffs) const {
    if (coeffs.size() > d_) throw std::invalid_argument("coefficient vector longer than extension degree");
    coeffs.resize(d_, 0);
    for (auto& c : coeffs) c %= base_.p();
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement ExtensionField::element_at(std::uint64_t k) const {
    std::uint64_t q = size();
    if (k >= q) throw std::out_of_range("element index out of range");
    std::vector<Residue> c(d_, 0);
    for (std::uint32_t i = d_; i-- > 0;) {
        c[i] = k % base_.p();
        k /= base_.p();
    }
    return FieldElement(shared_from_this(), std::move(c));
}

std::uint64_t ExtensionField::index_of(const FieldElement& x) const {
    if (!(x.field() == *this)) throw std::invalid_argument("element of a different field");
    (void)size();  // range check
    std::uint64_t k = 0;
    for (std::uint32_t i = 0; i < d_; ++i) k = k * base_.p() + x.coeff(i);
    return k;
}

FieldElement ExtensionField::primitive_element() const {
    std::uint64_t q = size();
    if (q > (1ull << 20)) throw CapExceededError("primitive element search capped at field size 2^20");
    for (std::uint64_t k = 1; k < q; ++k) {
        FieldElement a = element_at(k);
        FieldElement acc = a;
        std::uint64_t order = 1;
        while (!acc.is_one()) {
            acc = acc * a;
            ++order;
        }
        if (order == q - 1) return a;
    }
    throw std::logic_error("no primitive element found (impossible)");
}

// ---- slice kernels ----

void ExtensionField::sl_zero(Residue* o) const noexcept {
    std::fill(o, o + d_, Residue{0});
}

void ExtensionField::sl_one(Residue* o) const noexcept {
    std::fill(o, o + d_, Residue{0});
    o[0] = 1 % base_.p();
}

void ExtensionField::sl_copy(Residue* o, const Residue* a) const noexcept {
    std::copy(a, a + d_, o);
}

bool ExtensionField::sl_is_zero(const Residue* a) const noexcept {
    for (std::uint32_t i = 0; i < d_; ++i)
        if (a[i] != 0) return false;
    return true;
}

bool ExtensionField::sl_eq(const Residue* a, const Residue* b) const noexcept {
    return std::equal(a, a + d_, b);
}

void ExtensionField::sl_add(Residue* o, const Residue* a, const Residue* b) const noexcept {
    for (std::uint32_t i = 0; i < d_; ++i) o[i] = base_.add(a[i], b[i]);
}

void ExtensionField::sl_sub(Residue* o, const Residue* a, const Residue* b) const noexcept {
    for (std::uint32_t i = 0; i < d_; ++i) o[i] = base_.sub(a[i], b[i]);
}

void ExtensionField::sl_neg(Residue* o, const Residue* a) const noexcept {
    for (std::uint32_t i = 0; i < d_; ++i) o[i] = base_.neg(a[i]);
}

void ExtensionField::sl_scal(Residue* o, const Residue* a, Residue c) const noexcept {
    for (std::uint32_t i = 0; i < d_; ++i) o[i] = base_.mul(a[i], c);
}

void ExtensionField::sl_mul(Residue* o, const Residue* a, const Residue* b) const {
    if (d_ == 1) {
        o[0] = base_.mul(a[0], b[0]);
        return;
    }
    constexpr std::uint32_t kInline = 16;
    Residue buf[2 * kInline - 1];
    std::vector<Residue> heap;
    Residue* t;
    std::uint32_t tn = 2 * d_ - 1;
    if (d_ <= kInline) {
        t = buf;
    } else {
        heap.assign(tn, 0);
        t = heap.data();
    }
    std::fill(t, t + tn, Residue{0});
    for (std::uint32_t i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < d_; ++j)
            t[i + j] = base_.add(t[i + j], base_.mul(a[i], b[j]));
    }
    // reduce by the monic modulus
    for (std::uint32_t i = tn; i-- > d_;) {
        Residue c = t[i];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < d_; ++j)
            t[i - d_ + j] = base_.sub(t[i - d_ + j], base_.mul(c, modulus_[j]));
    }
    std::copy(t, t + d_, o);
}

void ExtensionField::sl_addmul(Residue* o, const Residue* a, const Residue* b) const {
    if (d_ == 1) {
        o[0] = base_.add(o[0], base_.mul(a[0], b[0]));
        return;
    }
    constexpr std::uint32_t kInline = 16;
    Residue buf[kInline];
    std::vector<Residue> heap;
    Residue* t = d_ <= kInline ? buf : (heap.resize(d_), heap.data());
    sl_mul(t, a, b);
    sl_add(o, o, t);
}

void ExtensionField::sl_submul(Residue* o, const Residue* a, const Residue* b) const {
    if (d_ == 1) {
        o[0] = base_.sub(o[0], base_.mul(a[0], b[0]));
        return;
    }
    constexpr std::uint32_t kInline = 16;
    Residue buf[kInline];
    std::vector<Residue> heap;
    Residue* t = d_ <= kInline ? buf : (heap.resize(d_), heap.data());
    sl_mul(t, a, b);
    sl_sub(o, o, t);
}

void ExtensionField::sl_inv(Residue* o, const Residue* a) const {
    if (sl_is_zero(a)) throw std::domain_error("division by zero in extension field");
    if (d_ == 1) {
        o[0] = base_.inv(a[0]);
        return;
    }
    // extended Euclid in F_p[Y] against the modulus
    FpVec r0(modulus_);
    FpVec r1(a, a + d_);
    fv_normalize(r1);
    FpVec t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        FpVec q;
        FpVec rem = r0;
        Residue li = base_.inv(r1.back());
        int dr1 = fv_deg(r1);
        while (fv_deg(rem) >= dr1) {
            int shift = fv_deg(rem) - dr1;
            Residue c = base_.mul(rem.back(), li);
            if (static_cast<int>(q.size()) <= shift) q.resize(static_cast<std::size_t>(shift) + 1, 0);
            q[static_cast<std::size_t>(shift)] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                std::size_t idx = static_cast<std::size_t>(shift) + i;
                rem[idx] = base_.sub(rem[idx], base_.mul(c, r1[i]));
            }
            fv_normalize(rem);
        }
        FpVec nt = fv_mul(base_, q, t1);
        // t0 - q*t1
        if (nt.size() < t0.size()) nt.resize(t0.size(), 0);
        for (std::size_t i = 0; i < nt.size(); ++i) {
            Residue v = i < t0.size() ? t0[i] : 0;
            nt[i] = base_.sub(v, nt[i]);
        }
        fv_normalize(nt);
        t0 = std::move(t1);
        t1 = std::move(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    // r0 = gcd = nonzero constant (modulus irreducible); scale t0 by its inverse
    Residue gi = base_.inv(r0[0]);
    std::fill(o, o + d_, Residue{0});
    for (std::size_t i = 0; i < t0.size(); ++i) o[i] = base_.mul(t0[i], gi);
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<Residue> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("null field");
    if (c_.size() != field_->degree()) throw std::invalid_argument("coefficient count != extension degree");
    for (auto& v : c_) v %= field_->p();
}

bool FieldElement::is_zero() const noexcept { return field_->sl_is_zero(c_.data()); }

bool FieldElement::is_one() const noexcept {
    if (c_[0] != 1 % field_->p()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

namespace {

const ExtensionField& common_field(const FieldElement& a, const FieldElement& b) {
    if (a.field_ptr() != b.field_ptr() && !(a.field() == b.field()))
        throw std::invalid_argument("elements of different fields do not interoperate");
    return a.field();
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    std::vector<Residue> c(f.degree());
    f.sl_add(c.data(), a.coeffs().data(), b.coeffs().data());
    return FieldElement(a.field_ptr(), std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    std::vector<Residue> c(f.degree());
    f.sl_sub(c.data(), a.coeffs().data(), b.coeffs().data());
    return FieldElement(a.field_ptr(), std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    std::vector<Residue> c(f.degree());
    f.sl_mul(c.data(), a.coeffs().data(), b.coeffs().data());
    return FieldElement(a.field_ptr(), std::move(c));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    common_field(a, b);
    return a.coeffs() == b.coeffs();
}

FieldElement FieldElement::operator-() const {
    std::vector<Residue> c(field_->degree());
    field_->sl_neg(c.data(), c_.data());
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
    std::vector<Residue> c(field_->degree());
    field_->sl_inv(c.data(), c_.data());
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement r = field_->one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius(std::uint32_t k) const {
    k %= field_->degree();
    FieldElement r = *this;
    for (std::uint32_t i = 0; i < k; ++i) r = r.pow(field_->p());
    return r;
}

FieldElement frobenius(const FieldElement& x, std::uint32_t k) { return x.frobenius(k); }

std::vector<std::uint32_t> automorphism_labels(const ExtensionField& f) {
    std::vector<std::uint32_t> labels(f.degree());
    for (std::uint32_t i = 0; i < f.degree(); ++i) labels[i] = i;
    return labels;
}

// ---------------------------------------------------------------------------
// linear algebra mod p
// ---------------------------------------------------------------------------

std::size_t fp_rank(FpMatrix m, const PrimeField& k) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] % k.p() == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Residue inv = k.inv(m[rank][col] % k.p());
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = k.mul(m[rank][j] % k.p(), inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Residue f = m[r][col] % k.p();
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[r][j] = k.sub(m[r][j] % k.p(), k.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

bool fp_invertible(const FpMatrix& m, const PrimeField& k) {
    if (m.empty()) return true;
    if (m.size() != m[0].size()) return false;
    return fp_rank(m, k) == m.size();
}

}  // namespace monoalg
