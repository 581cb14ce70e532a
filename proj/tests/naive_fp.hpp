// Test-only reference implementations over F_p, written directly from
// definitions on small integer vectors. These deliberately share no code
// with the library so they can serve as independent oracles.
#pragma once

#include <cstdint>
#include <vector>

namespace naive {

using NPoly = std::vector<long long>;  // coefficient of X^i at index i

inline void ntrim(NPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline NPoly nmul(const NPoly& a, const NPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    NPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ntrim(r);
    return r;
}

// remainder of a by monic b
inline NPoly nmod(NPoly a, const NPoly& b, long long p) {
    ntrim(a);
    while (a.size() >= b.size()) {
        long long c = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        a.pop_back();
        ntrim(a);
    }
    return a;
}

inline long long neval(const NPoly& a, long long x, long long p) {
    long long r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = (r * x + a[i]) % p;
    return r;
}

// all monic polynomials of exact degree d, lexicographic from the constant
// term up
inline std::vector<NPoly> nmonic_of_degree(std::uint32_t d, long long p) {
    std::vector<NPoly> out;
    std::vector<long long> digits(d, 0);
    for (;;) {
        NPoly f(digits.begin(), digits.end());
        f.push_back(1);
        out.push_back(f);
        std::size_t i = d;
        bool done = d == 0;
        while (i > 0) {
            --i;
            if (++digits[i] < p) break;
            digits[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

// irreducibility by trial division against every monic polynomial of
// degree 1 .. deg/2
inline bool nirreducible(const NPoly& f, long long p) {
    if (f.size() < 2) return false;
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size()) - 1;
    if (deg == 1) return true;
    for (std::uint32_t d = 1; 2 * d <= deg; ++d)
        for (const NPoly& g : nmonic_of_degree(d, p))
            if (nmod(f, g, p).empty()) return false;
    return true;
}

}  // namespace naive
