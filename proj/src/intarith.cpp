#include "hk/intarith.hpp"

namespace hk::intarith {

namespace {

// Exhaustive search stays cheap up to here; above it the lifting
// criterion takes over. Both paths agree on the overlap (tested).
constexpr long kSearchThreshold = 4096;

}  // namespace

Factorization factorize(const Int& n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization out;
    Int rest = n;
    auto strip = [&](const Int& p) {
        unsigned long e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    strip(3);
    Int d = 5;
    // 5, 7, 11, 13, ... (wheel over 6k +- 1)
    int step = 2;
    while (d * d <= rest) {
        strip(d);
        d += step;
        step = 6 - step;
    }
    if (rest > 1) out.push_back({rest, 1});
    return out;
}

unsigned long vp(const Int& p, const Int& n) {
    if (!is_prime(p)) throw std::invalid_argument("vp: p must be prime");
    if (n <= 0) throw std::invalid_argument("vp: n must be positive");
    unsigned long e = 0;
    Int rest = n;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    return e;
}

unsigned long rho(const Int& n) {
    return factorize(n).size();
}

unsigned long rho_tilde(const Int& n) {
    if (n <= 0) throw std::invalid_argument("rho_tilde: n must be positive");
    if (n % 2 == 0) return rho(n / 2);
    return rho(n);
}

bool is_square_mod_search(const Int& t, const Int& p, unsigned long e) {
    if (e == 0) throw std::invalid_argument("is_square_mod: e must be positive");
    const Int pe = pow_ui(p, e);
    const Int t0 = mod_floor(t, pe);
    for (Int x = 0; x < pe; ++x) {
        if ((x * x) % pe == t0) return true;
    }
    return false;
}

bool is_square_mod_lift(const Int& t, const Int& p, unsigned long e) {
    if (e == 0) throw std::invalid_argument("is_square_mod: e must be positive");
    const Int pe = pow_ui(p, e);
    Int u = mod_floor(t, pe);
    if (u == 0) return true;
    unsigned long v = 0;
    while (u % p == 0) {
        u /= p;
        ++v;
    }
    // t = p^v * u with p ∤ u and v < e; odd valuation is never a square.
    if (v % 2 == 1) return false;
    const unsigned long j = e - v;
    if (p == 2) {
        if (j == 1) return true;
        if (j == 2) return u % 4 == 1;
        return u % 8 == 1;
    }
    // Euler's criterion; a unit square mod p lifts to every power of p.
    Int euler;
    const Int half = (p - 1) / 2;
    mpz_powm(euler.get_mpz_t(), u.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
    return euler == 1;
}

bool is_square_mod(const Int& t, const Int& p, unsigned long e) {
    if (!is_prime(p)) throw std::invalid_argument("is_square_mod: p must be prime");
    if (e == 0) throw std::invalid_argument("is_square_mod: e must be positive");
    const Int pe = pow_ui(p, e);
    if (pe <= kSearchThreshold) return is_square_mod_search(t, p, e);
    return is_square_mod_lift(t, p, e);
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int mod_floor(const Int& a, const Int& m) {
    if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: not invertible");
    return r;
}

}  // namespace hk::intarith
