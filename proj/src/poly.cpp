#include "monoalg/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "monoalg/errors.hpp"

namespace monoalg {

namespace {

using u128 = unsigned __int128;

// p^d as a 128-bit value; fields too large to exponentiate are a hard error.
u128 field_size_128(const ExtensionField& f) {
    u128 q = 1;
    for (std::uint32_t i = 0; i < f.degree(); ++i) {
        if (q > (u128{1} << 120) / f.p())
            throw CapExceededError("field size exceeds the factorization exponent range");
        q *= f.p();
    }
    return q;
}

void check_same_field(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field() && !(*a.field() == *b.field()))
        throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Polynomial::Polynomial(FieldPtr f, std::vector<Residue> flat) : field_(std::move(f)), c_(std::move(flat)) {
    normalize();
}

void Polynomial::normalize() {
    const std::uint32_t d = field_->degree();
    while (!c_.empty() && field_->sl_is_zero(c_.data() + c_.size() - d)) c_.resize(c_.size() - d);
}

Polynomial Polynomial::zero(FieldPtr f) { return Polynomial(std::move(f), {}); }

Polynomial Polynomial::one(FieldPtr f) {
    std::vector<Residue> c(f->degree(), 0);
    f->sl_one(c.data());
    return Polynomial(std::move(f), std::move(c));
}

Polynomial Polynomial::x(FieldPtr f) {
    const std::uint32_t d = f->degree();
    std::vector<Residue> c(2 * d, 0);
    f->sl_one(c.data() + d);
    return Polynomial(std::move(f), std::move(c));
}

Polynomial Polynomial::constant(FieldElement c) {
    FieldPtr f = c.field_ptr();
    return Polynomial(std::move(f), c.coeffs());
}

Polynomial Polynomial::from_coeffs(FieldPtr f, const std::vector<FieldElement>& cs) {
    const std::uint32_t d = f->degree();
    std::vector<Residue> flat(cs.size() * d, 0);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!(cs[i].field() == *f)) throw std::invalid_argument("coefficient from a different field");
        f->sl_copy(flat.data() + i * d, cs[i].coeffs().data());
    }
    return Polynomial(std::move(f), std::move(flat));
}

Polynomial Polynomial::from_residues(FieldPtr f, const std::vector<Residue>& cs) {
    const std::uint32_t d = f->degree();
    std::vector<Residue> flat(cs.size() * d, 0);
    for (std::size_t i = 0; i < cs.size(); ++i) flat[i * d] = cs[i] % f->p();
    return Polynomial(std::move(f), std::move(flat));
}

int Polynomial::degree() const noexcept {
    if (c_.empty()) return -1;
    return static_cast<int>(c_.size() / field_->degree()) - 1;
}

FieldElement Polynomial::coeff(std::uint32_t i) const {
    const std::uint32_t d = field_->degree();
    if (i >= c_.size() / d) return field_->zero();
    return FieldElement(field_, std::vector<Residue>(c_.begin() + i * d, c_.begin() + (i + 1) * d));
}

FieldElement Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeff(static_cast<std::uint32_t>(degree()));
}

bool Polynomial::is_monic() const { return !is_zero() && leading().is_one(); }

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    return *this * leading().inverse();
}

FieldElement Polynomial::operator()(const FieldElement& x) const { return evaluate(*this, x); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    const auto& f = *a.field();
    const std::uint32_t d = f.degree();
    std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
    std::copy(a.c_.begin(), a.c_.end(), c.begin());
    for (std::size_t i = 0; i * d < b.c_.size(); ++i)
        f.sl_add(c.data() + i * d, c.data() + i * d, b.c_.data() + i * d);
    return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    const auto& f = *a.field();
    const std::uint32_t d = f.degree();
    std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
    std::copy(a.c_.begin(), a.c_.end(), c.begin());
    for (std::size_t i = 0; i * d < b.c_.size(); ++i)
        f.sl_sub(c.data() + i * d, c.data() + i * d, b.c_.data() + i * d);
    return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field_);
    const auto& f = *a.field();
    const std::uint32_t d = f.degree();
    const std::size_t na = a.c_.size() / d, nb = b.c_.size() / d;
    std::vector<Residue> c((na + nb - 1) * d, 0);
    for (std::size_t i = 0; i < na; ++i) {
        if (f.sl_is_zero(a.c_.data() + i * d)) continue;
        for (std::size_t j = 0; j < nb; ++j)
            f.sl_addmul(c.data() + (i + j) * d, a.c_.data() + i * d, b.c_.data() + j * d);
    }
    return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const FieldElement& s) {
    if (!(s.field() == *a.field())) throw std::invalid_argument("scalar from a different field");
    const auto& f = *a.field();
    const std::uint32_t d = f.degree();
    std::vector<Residue> c(a.c_.size(), 0);
    for (std::size_t i = 0; i * d < a.c_.size(); ++i)
        f.sl_mul(c.data() + i * d, a.c_.data() + i * d, s.coeffs().data());
    return Polynomial(a.field_, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    return a.c_ == b.c_;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& f = *a.field();
    const std::uint32_t d = f.degree();
    const int da = a.degree(), db = b.degree();
    if (da < db) return {Polynomial::zero(a.field()), a};

    std::vector<Residue> linv(d);
    f.sl_inv(linv.data(), b.raw().data() + static_cast<std::size_t>(db) * d);

    std::vector<Residue> rem = a.raw();
    std::vector<Residue> quot((static_cast<std::size_t>(da - db) + 1) * d, 0);
    std::vector<Residue> t(d);
    for (int k = da - db; k >= 0; --k) {
        const Residue* top = rem.data() + (static_cast<std::size_t>(k + db)) * d;
        if (f.sl_is_zero(top)) continue;
        f.sl_mul(t.data(), top, linv.data());
        f.sl_copy(quot.data() + static_cast<std::size_t>(k) * d, t.data());
        for (int i = 0; i <= db; ++i)
            f.sl_submul(rem.data() + (static_cast<std::size_t>(k + i)) * d, t.data(),
                        b.raw().data() + static_cast<std::size_t>(i) * d);
    }
    return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

Polynomial derivative(const Polynomial& a) {
    if (a.degree() <= 0) return Polynomial::zero(a.field());
    const auto& f = *a.field();
    const std::uint32_t d = f.degree();
    const std::size_t n = a.raw().size() / d;
    std::vector<Residue> c((n - 1) * d, 0);
    for (std::size_t i = 1; i < n; ++i)
        f.sl_scal(c.data() + (i - 1) * d, a.raw().data() + i * d, i % f.p());
    return Polynomial(a.field(), std::move(c));
}

Polynomial pow(const Polynomial& base, std::uint64_t e) {
    Polynomial r = Polynomial::one(base.field());
    Polynomial b = base;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Polynomial pow_mod(Polynomial base, unsigned __int128 e, const Polynomial& mod) {
    check_same_field(base, mod);
    if (mod.degree() < 1) throw std::domain_error("pow_mod modulus must be nonconstant");
    Polynomial r = Polynomial::one(base.field()) % mod;
    base = base % mod;
    while (e) {
        if (e & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

int compare(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const auto& ar = a.raw();
    const auto& br = b.raw();
    for (std::size_t i = 0; i < ar.size(); ++i) {
        if (ar[i] != br[i]) return ar[i] < br[i] ? -1 : 1;
    }
    return 0;
}

bool poly_less(const Polynomial& a, const Polynomial& b) { return compare(a, b) < 0; }

FieldElement evaluate(const Polynomial& f, const FieldElement& x) {
    const auto& pf = *f.field();
    const auto& xf = x.field();
    const bool same = pf == xf;
    if (!same && !(pf.degree() == 1 && pf.p() == xf.p()))
        throw std::invalid_argument("cannot evaluate: incompatible coefficient field");
    FieldElement acc = xf.zero();
    for (int i = f.degree(); i >= 0; --i) {
        FieldElement c = f.coeff(static_cast<std::uint32_t>(i));
        FieldElement lifted = same ? c : xf.from_int(c.coeff(0));
        acc = acc * x + lifted;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// squarefree decomposition
// ---------------------------------------------------------------------------

namespace {

// p-th root of f when f'(X) = 0, i.e. f = g(X^p): pull out every p-th
// coefficient and take p-th roots (the inverse Frobenius; F_q is perfect).
Polynomial pth_root(const Polynomial& f) {
    const auto& fld = *f.field();
    const std::uint32_t d = fld.degree(), p32 = static_cast<std::uint32_t>(fld.p());
    std::vector<FieldElement> cs;
    for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(f.degree()); i += p32)
        cs.push_back(f.coeff(i).frobenius(d - 1));
    return Polynomial::from_coeffs(f.field(), cs);
}

void sfd_rec(const Polynomial& f, std::uint32_t mult_scale,
             std::vector<std::pair<Polynomial, std::uint32_t>>& out) {
    Polynomial fp = derivative(f);
    if (fp.is_zero()) {
        sfd_rec(pth_root(f), mult_scale * static_cast<std::uint32_t>(f.field()->p()), out);
        return;
    }
    Polynomial c = gcd(f, fp);
    Polynomial w = f / c;
    std::uint32_t i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i * mult_scale);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) sfd_rec(pth_root(c), mult_scale * static_cast<std::uint32_t>(f.field()->p()), out);
}

}  // namespace

std::vector<std::pair<Polynomial, std::uint32_t>> squarefree_decomposition(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<Polynomial, std::uint32_t>> out;
    if (f.degree() == 0) return out;
    sfd_rec(f.monic(), 1, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    return out;
}

// ---------------------------------------------------------------------------
// factorization: distinct-degree then equal-degree splitting
// ---------------------------------------------------------------------------

namespace {

// product of the irreducible factors of each degree, for squarefree monic f
std::vector<std::pair<Polynomial, std::uint32_t>> distinct_degree(const Polynomial& f) {
    const u128 q = field_size_128(*f.field());
    std::vector<std::pair<Polynomial, std::uint32_t>> res;
    Polynomial g = f;
    Polynomial h = Polynomial::x(f.field()) % g;
    std::uint32_t e = 0;
    while (g.degree() >= 1) {
        ++e;
        if (2 * e > static_cast<std::uint32_t>(g.degree())) {
            res.emplace_back(g, static_cast<std::uint32_t>(g.degree()));
            break;
        }
        h = pow_mod(h, q, g);
        Polynomial t = gcd(h - Polynomial::x(f.field()), g);
        if (t.degree() >= 1) {
            res.emplace_back(t, e);
            g = g / t;
            h = h % g;
        }
    }
    return res;
}

Polynomial random_poly(const FieldPtr& f, int max_deg, std::mt19937_64& rng) {
    const std::uint32_t d = f->degree();
    std::vector<FieldElement> cs;
    cs.reserve(static_cast<std::size_t>(max_deg) + 1);
    for (int i = 0; i <= max_deg; ++i) {
        std::vector<Residue> c(d);
        for (auto& v : c) v = rng() % f->p();
        cs.push_back(f->element(std::move(c)));
    }
    return Polynomial::from_coeffs(f, cs);
}

// split g (a product of r >= 1 distinct irreducibles, all of degree e) into
// its irreducible factors
void equal_degree(const Polynomial& g, std::uint32_t e, std::mt19937_64& rng,
                  std::vector<Polynomial>& out) {
    if (static_cast<std::uint32_t>(g.degree()) == e) {
        out.push_back(g.monic());
        return;
    }
    const FieldPtr& f = g.field();
    const u128 q = field_size_128(*f);
    for (;;) {
        Polynomial u = random_poly(f, g.degree() - 1, rng);
        if (u.degree() < 1) continue;
        Polynomial s = gcd(u, g);
        if (s.degree() >= 1 && s.degree() < g.degree()) {
            equal_degree(s, e, rng, out);
            equal_degree(g / s, e, rng, out);
            return;
        }
        Polynomial w;
        if (f->p() == 2) {
            // trace map over F_2: u + u^2 + u^4 + ... (d*e terms)
            const std::uint64_t rounds = static_cast<std::uint64_t>(f->degree()) * e;
            Polynomial acc = u % g;
            Polynomial sq = acc;
            for (std::uint64_t i = 1; i < rounds; ++i) {
                sq = (sq * sq) % g;
                acc = acc + sq;
            }
            w = acc;
        } else {
            u128 exp = 1;
            for (std::uint32_t i = 0; i < e; ++i) {
                if (exp > (u128{1} << 124) / q)
                    throw CapExceededError("equal-degree exponent exceeds range");
                exp *= q;
            }
            w = pow_mod(u, (exp - 1) / 2, g) - Polynomial::one(f);
        }
        s = gcd(w, g);
        if (s.degree() >= 1 && s.degree() < g.degree()) {
            equal_degree(s, e, rng, out);
            equal_degree(g / s, e, rng, out);
            return;
        }
    }
}

constexpr std::uint64_t kFactorSeed = 0x1f2e3d4c5b6a7988ull;

}  // namespace

Polynomial Factorization::product() const {
    Polynomial r = Polynomial::constant(unit);
    for (const auto& [f, m] : factors) r = r * pow(f, m);
    return r;
}

Factorization factor(const Polynomial& f) {
    if (f.degree() < 1) throw std::domain_error("factorization requires a nonconstant polynomial");
    Factorization out{f.leading(), {}};
    std::mt19937_64 rng(kFactorSeed);
    for (const auto& [sf, mult] : squarefree_decomposition(f)) {
        for (const auto& [dd, e] : distinct_degree(sf)) {
            std::vector<Polynomial> irr;
            equal_degree(dd, e, rng, irr);
            for (auto& h : irr) out.factors.emplace_back(std::move(h), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) throw std::domain_error("irreducibility requires a nonconstant polynomial");
    const std::uint32_t n = static_cast<std::uint32_t>(f.degree());
    if (n == 1) return true;
    Polynomial g = f.monic();
    const u128 q = field_size_128(*f.field());

    std::vector<std::uint32_t> prime_divs;
    std::uint32_t m = n;
    for (std::uint32_t r = 2; r * r <= m; ++r) {
        if (m % r == 0) {
            prime_divs.push_back(r);
            while (m % r == 0) m /= r;
        }
    }
    if (m > 1) prime_divs.push_back(m);

    const Polynomial xp = Polynomial::x(f.field());
    Polynomial h = xp % g;
    std::vector<Polynomial> checkpoints(n + 1);
    checkpoints[0] = h;
    for (std::uint32_t i = 1; i <= n; ++i) {
        h = pow_mod(h, q, g);
        checkpoints[i] = h;
    }
    if (!(checkpoints[n] == xp % g)) return false;
    for (std::uint32_t r : prime_divs) {
        Polynomial diff = checkpoints[n / r] - xp;
        if (diff.is_zero()) return false;
        if (gcd(diff, g).degree() != 0) return false;
    }
    return true;
}

std::uint64_t count_irreducibles(const PrimeField& k, std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("degree must be >= 1");
    // moebius function over the divisors of d
    auto moebius = [](std::uint32_t n) -> int {
        int mu = 1;
        for (std::uint32_t r = 2; r * r <= n; ++r) {
            if (n % r == 0) {
                n /= r;
                if (n % r == 0) return 0;
                mu = -mu;
            }
        }
        if (n > 1) mu = -mu;
        return mu;
    };
    const u128 cap = u128{1} << 100;
    __int128 total = 0;
    for (std::uint32_t e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = moebius(e);
        if (mu == 0) continue;
        u128 term = 1;
        for (std::uint32_t i = 0; i < d / e; ++i) {
            term *= k.p();
            if (term >= cap) return UINT64_MAX;  // saturate: far beyond any multiplicity bound
        }
        total += mu * static_cast<__int128>(term);
    }
    total /= d;
    if (total > static_cast<__int128>(UINT64_MAX)) return UINT64_MAX;
    return static_cast<std::uint64_t>(total);
}

std::vector<Polynomial> enumerate_irreducibles(const PrimeField& k, std::uint32_t d, std::uint64_t count) {
    const std::uint64_t available = count_irreducibles(k, d);
    if (count > available)
        throw InfeasibleError("need " + std::to_string(count) + " distinct irreducible polynomials of degree " +
                              std::to_string(d) + " over F_" + std::to_string(k.p()) + " but only " +
                              std::to_string(available) + " exist");
    std::vector<Polynomial> out;
    if (count == 0) return out;
    FieldPtr f = ext_field(k, 1);
    // odometer over (c_0, ..., c_{d-1}), c_0 most significant; for d >= 2
    // the c_0 = 0 block is divisible by X, skip it
    std::vector<Residue> digits(d, 0);
    if (d >= 2) digits[0] = 1;
    for (;;) {
        std::vector<Residue> cs(digits.begin(), digits.end());
        cs.push_back(1);
        Polynomial cand = Polynomial::from_residues(f, cs);
        if (is_irreducible(cand)) {
            out.push_back(std::move(cand));
            if (out.size() == count) return out;
        }
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++digits[i] < k.p()) break;
            digits[i] = 0;
            if (i == 0) throw std::logic_error("irreducible enumeration exhausted early");
        }
    }
}

FieldElement find_root(const Polynomial& q, const FieldPtr& L) {
    if (q.field()->degree() != 1 || q.field()->p() != L->p())
        throw std::invalid_argument("find_root expects a prime-field polynomial matching L's characteristic");
    if (q.degree() != static_cast<int>(L->degree()))
        throw std::invalid_argument("find_root expects deg q = [L : F_p]");
    const std::uint64_t n = L->size();
    for (std::uint64_t i = 0; i < n; ++i) {
        FieldElement a = L->element_at(i);
        if (evaluate(q, a).is_zero()) return a;
    }
    throw std::logic_error("irreducible polynomial has no root in its splitting field (impossible)");
}

}  // namespace monoalg
