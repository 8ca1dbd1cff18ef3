// Exact integer, modular and fixed-precision l-adic arithmetic used by the
// rest of the library.  Word-sized fast paths use unsigned __int128; anything
// that can outgrow 63 bits goes through GMP (mpz_class).
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eccensus {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// small helpers

inline std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (x) { s.push_back(char('0' + int(x % 10))); x /= 10; }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

inline std::string to_string_u128(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x) { s.push_back(char('0' + int(x % 10))); x /= 10; }
    std::reverse(s.begin(), s.end());
    return s;
}

inline mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 x = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mpz_class hi = static_cast<unsigned long>(x >> 64);
    mpz_class lo = static_cast<unsigned long>(x & ~0ull);
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

inline bool mpz_fits_i64(const mpz_class& z) { return z.fits_slong_p(); }

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 powmod_u64(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline u64 addmod_u64(u64 a, u64 b, u64 m) {
    a %= m; b %= m;
    u64 s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
}

inline u64 submod_u64(u64 a, u64 b, u64 m) {
    a %= m; b %= m;
    return a >= b ? a - b : a + (m - b);
}

// mod with result in [0, m)
inline u64 mod_nonneg(i64 a, u64 m) {
    i64 r = a % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

inline u64 mod_nonneg_i128(i128 a, u64 m) {
    i128 r = a % static_cast<i128>(m);
    if (r < 0) r += static_cast<i128>(m);
    return static_cast<u64>(r);
}

// extended gcd: returns g, sets x with a*x == g (mod m); a need not be reduced
inline u64 invmod_u64(u64 a, u64 m) {
    i64 t = 0, newt = 1;
    i64 r = static_cast<i64>(m), newr = static_cast<i64>(a % m);
    while (newr != 0) {
        i64 q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw std::domain_error("invmod_u64: not invertible");
    if (t < 0) t += static_cast<i64>(m);
    return static_cast<u64>(t);
}

inline int valuation_u64(u64& n, u64 p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline int valuation_mpz(const mpz_class& n, const mpz_class& p) {
    if (n == 0) throw std::domain_error("valuation of 0");
    mpz_class m = n, q, r;
    int v = 0;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        m = q;
        ++v;
    }
}

inline mpz_class mpz_pow_ui(const mpz_class& b, unsigned long e) {
    mpz_class r;
    ::mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline u64 pow_u64(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

// ---------------------------------------------------------------------------
// primality

namespace detail {
inline bool miller_rabin_u64(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}
} // namespace detail

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // this base set is deterministic for all n < 3.3e24
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!detail::miller_rabin_u64(n, a)) return false;
    return true;
}

inline bool is_prime_mpz(const mpz_class& n) {
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    // fixed witness set keeps results deterministic run to run
    if (n < 2 || mpz_even_p(n.get_mpz_t())) return n == 2;
    mpz_class d = n - 1, x;
    int s = 0;
    while (mpz_even_p(d.get_mpz_t())) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                  41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull}) {
        mpz_class base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// iterate p = 2, 3, 5, ... without a sieve (6k +- 1 wheel)
inline u64 next_prime_candidate(u64 p) {
    if (p < 2) return 2;
    if (p == 2) return 3;
    if (p == 3) return 5;
    // alternate +2 / +4 starting from p ≡ 5 (mod 6)
    return p % 6 == 5 ? p + 2 : p + 4;
}

// ---------------------------------------------------------------------------
// factorization

struct UnfactoredError : std::runtime_error {
    mpz_class residual;
    explicit UnfactoredError(mpz_class r)
        : std::runtime_error("factor: effort budget exhausted, residual composite " + r.get_str()),
          residual(std::move(r)) {}
};

struct FactorOptions {
    u64 trial_limit = 1'000'000;   // trial division by primes up to this bound
    int rho_iters_log2 = 26;       // per-attempt Brent iteration cap
    int rho_attempts = 24;         // deterministic constants c = 1, 2, ...
};

// sign and strictly increasing prime factors with exponents >= 1
struct FactoredInteger {
    int sign = 1;
    std::vector<std::pair<mpz_class, unsigned>> factors;

    mpz_class value() const {
        mpz_class v = sign;
        for (auto& [p, e] : factors) v *= mpz_pow_ui(p, e);
        return v;
    }
    bool is_squarefree() const {
        for (auto& [p, e] : factors)
            if (e > 1) return false;
        return true;
    }
    unsigned valuation(const mpz_class& p) const {
        for (auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    }
    mpz_class odd_part() const {
        mpz_class v = 1;
        for (auto& [p, e] : factors)
            if (p != 2) v *= mpz_pow_ui(p, e);
        return v;
    }
    int num_odd_prime_factors() const {
        int n = 0;
        for (auto& [p, e] : factors)
            if (p != 2) ++n;
        return n;
    }
    std::vector<mpz_class> primes() const {
        std::vector<mpz_class> ps;
        for (auto& [p, e] : factors) ps.push_back(p);
        return ps;
    }
};

namespace detail {

// Brent's cycle variant of Pollard rho with deterministic constants.
inline mpz_class pollard_rho_mpz(const mpz_class& n, const FactorOptions& opt) {
    for (int c = 1; c <= opt.rho_attempts; ++c) {
        mpz_class x = 2, y = 2, d = 1, diff, saved_x;
        u64 limit = 1ull << opt.rho_iters_log2;
        u64 count = 0;
        int power = 1, lam = 1;
        auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
        while (d == 1 && count < limit) {
            if (power == lam) { x = y; power *= 2; lam = 0; }
            // batch gcds in groups of 64
            mpz_class prod = 1;
            int batch = 0;
            saved_x = y;
            while (batch < 64 && lam < power && d == 1) {
                y = f(y);
                ++lam;
                ++count;
                diff = x - y;
                if (diff == 0) break;
                prod = (prod * diff) % n;
                ++batch;
            }
            d = gcd(prod, n);
            if (d == n) {
                // backtrack one by one
                y = saved_x;
                d = 1;
                for (int i = 0; i < batch && d == 1; ++i) {
                    y = f(y);
                    diff = x - y;
                    d = gcd(mpz_class(abs(diff)), n);
                }
                if (d == n) { d = 1; break; }  // cycle degenerate for this c
            }
        }
        if (d > 1 && d < n) return d;
    }
    throw UnfactoredError(n);
}

inline void factor_into(mpz_class m, const FactorOptions& opt,
                        std::vector<std::pair<mpz_class, unsigned>>& out) {
    if (m == 1) return;
    if (is_prime_mpz(m)) { out.emplace_back(m, 1u); return; }
    mpz_class d = pollard_rho_mpz(m, opt);
    factor_into(d, opt, out);
    factor_into(mpz_class(m / d), opt, out);
}

} // namespace detail

inline FactoredInteger factor(const mpz_class& n, const FactorOptions& opt = {}) {
    if (n == 0) throw std::domain_error("factor(0)");
    FactoredInteger f;
    f.sign = n < 0 ? -1 : 1;
    mpz_class m = abs(n);

    std::vector<std::pair<mpz_class, unsigned>> raw;
    u64 p = 2;
    while (m > 1 && p <= opt.trial_limit) {
        mpz_class pp = p;
        if (pp * pp > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) { m /= p; ++e; }
            raw.emplace_back(mpz_class(p), e);
        }
        p = next_prime_candidate(p);
    }
    if (m > 1) {
        mpz_class pp = p;
        if (pp * pp > m) {
            raw.emplace_back(m, 1u);  // cofactor below trial bound squared is prime
        } else {
            std::vector<std::pair<mpz_class, unsigned>> rest;
            detail::factor_into(m, opt, rest);
            // rho output is unsorted and may repeat primes
            std::sort(rest.begin(), rest.end());
            for (auto& [q, e] : rest) {
                if (!raw.empty() && raw.back().first == q)
                    raw.back().second += e;
                else
                    raw.emplace_back(q, e);
            }
        }
    }
    std::sort(raw.begin(), raw.end());
    f.factors = std::move(raw);
    return f;
}

inline FactoredInteger factor(i64 n, const FactorOptions& opt = {}) {
    return factor(mpz_class(static_cast<long>(n)), opt);
}

// ---------------------------------------------------------------------------
// Kronecker symbol (D | n), fully extended: multiplicative in n, handles
// negatives and zero on either side.

inline int kronecker(i64 D, i64 n) {
    if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
    if (D == 0) return (n == 1 || n == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (D < 0) result = -result;  // (D | -1) = sign(D)
    }
    // (D | 2) factor
    int v2 = 0;
    while ((n & 1) == 0) { n >>= 1; ++v2; }
    if (v2 > 0) {
        if ((D & 1) == 0) return 0;
        u64 Dm8 = mod_nonneg(D, 8);
        if ((v2 & 1) && (Dm8 == 3 || Dm8 == 5)) result = -result;
    }
    // now n odd positive: Jacobi via reciprocity
    i64 a = D % n;
    if (a < 0) a += n;
    // (D | n) with D possibly negative: sign handled by residue reduction except
    // the (-1 | n) factor folded in when D < 0
    if (D < 0 && (n % 4 == 3)) result = -result;
    // standard Jacobi(a, n) for a >= 0, n odd > 0
    while (a != 0) {
        int v = 0;
        while ((a & 1) == 0) { a >>= 1; ++v; }
        if (v & 1) {
            i64 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        if ((a % 4 == 3) && (n % 4 == 3)) result = -result;
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? result : 0;
}

// Legendre symbol for odd prime p (a may be any integer)
inline int legendre(i64 a, u64 p) {
    u64 r = mod_nonneg(a, p);
    if (r == 0) return 0;
    u64 e = powmod_u64(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// residues mod prime powers

struct ResidueElement {
    u64 modulus = 0;  // a prime power l^k
    u64 value = 0;    // in [0, modulus)

    ResidueElement() = default;
    ResidueElement(u64 mod, u64 val) : modulus(mod), value(val % mod) {}
};

namespace detail {
// Tonelli--Shanks square root mod an odd prime.
inline std::optional<u64> sqrt_mod_prime(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (legendre(static_cast<i64>(a), p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    u64 z = 2;
    while (legendre(static_cast<i64>(z), p) != -1) ++z;
    u64 m = s, c = powmod_u64(z, q, p);
    u64 t = powmod_u64(a, q, p), r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) { t2 = mulmod_u64(t2, t2, p); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return r;
}
} // namespace detail

// Square root for an odd prime-power modulus; returns the root with the
// smaller canonical representative, or nullopt when a is not a square.
inline std::optional<ResidueElement> sqrt_mod(const ResidueElement& a) {
    u64 m = a.modulus;
    if (m == 0 || (m & 1) == 0) throw std::domain_error("sqrt_mod: modulus must be an odd prime power");
    u64 ell = m, tmp = m;
    // recover l from l^k: smallest prime divisor
    for (u64 d = 3; d * d <= tmp; d += 2)
        if (tmp % d == 0) { ell = d; break; }
    unsigned k = 0;
    while (tmp > 1) { tmp /= ell; ++k; }

    u64 val = a.value % m;
    if (val == 0) return ResidueElement{m, 0};
    u64 u = val;
    int v = valuation_u64(u, ell);
    if (v & 1) return std::nullopt;
    unsigned ku = k - static_cast<unsigned>(v);  // precision left for the unit part
    u64 mu = pow_u64(ell, ku);
    u64 uu = u % mu;
    auto r0 = detail::sqrt_mod_prime(uu, ell);
    if (!r0) return std::nullopt;
    // Hensel: derivative 2r is a unit
    u64 r = *r0;
    u64 cur = ell;
    while (cur < mu) {
        u64 next = (cur > mu / cur) ? mu : cur * cur;
        u64 f = submod_u64(mulmod_u64(r % next, r % next, next), uu % next, next);
        u64 inv = invmod_u64(mulmod_u64(2, r % next, next), next);
        r = submod_u64(r % next, mulmod_u64(f, inv, next), next);
        cur = next;
    }
    u64 root = mulmod_u64(r % m, pow_u64(ell, static_cast<unsigned>(v) / 2), m);
    u64 other = (m - root) % m;
    u64 best = std::min(root, other);
    // both candidates square to a when v > 0 shifts stay inside precision
    return ResidueElement{m, best};
}

// ---------------------------------------------------------------------------
// l-adic approximations: a value known modulo l^k

struct PadicApprox {
    u64 prime = 0;
    unsigned precision = 0;   // k
    mpz_class value;          // canonical in [0, l^k)
    unsigned valuation = 0;   // min(v_l(value), k); == k means "0 to precision"

    PadicApprox() = default;
    PadicApprox(u64 ell, unsigned k, mpz_class v) : prime(ell), precision(k) {
        mpz_class mod = mpz_pow_ui(mpz_class(static_cast<unsigned long>(ell)), k);
        value = ((v % mod) + mod) % mod;
        if (value == 0) {
            valuation = k;
        } else {
            valuation = static_cast<unsigned>(valuation_mpz(value, mpz_class(static_cast<unsigned long>(ell))));
        }
    }

    mpz_class modulus() const {
        return mpz_pow_ui(mpz_class(static_cast<unsigned long>(prime)), precision);
    }
    bool is_zero_to_precision() const { return valuation >= precision; }
};

// saturating arithmetic; nullopt = precision exhausted
inline std::optional<PadicApprox> padic_add(const PadicApprox& a, const PadicApprox& b) {
    if (a.prime != b.prime) throw std::domain_error("padic_add: prime mismatch");
    unsigned k = std::min(a.precision, b.precision);
    if (k == 0) return std::nullopt;
    return PadicApprox(a.prime, k, a.value + b.value);
}

inline std::optional<PadicApprox> padic_sub(const PadicApprox& a, const PadicApprox& b) {
    if (a.prime != b.prime) throw std::domain_error("padic_sub: prime mismatch");
    unsigned k = std::min(a.precision, b.precision);
    if (k == 0) return std::nullopt;
    return PadicApprox(a.prime, k, a.value - b.value);
}

inline std::optional<PadicApprox> padic_mul(const PadicApprox& a, const PadicApprox& b) {
    if (a.prime != b.prime) throw std::domain_error("padic_mul: prime mismatch");
    unsigned k = std::min({a.precision + b.valuation, b.precision + a.valuation,
                           a.precision + b.precision});
    k = std::min(k, std::max(a.precision, b.precision));
    if (k == 0) return std::nullopt;
    return PadicApprox(a.prime, k, a.value * b.value);
}

// divide by l^j (exact shift); loses j digits of absolute precision
inline std::optional<PadicApprox> padic_shift_down(const PadicApprox& a, unsigned j) {
    if (a.precision <= j) return std::nullopt;
    if (a.valuation < j) throw std::domain_error("padic_shift_down: inexact division");
    mpz_class pj = mpz_pow_ui(mpz_class(static_cast<unsigned long>(a.prime)), j);
    return PadicApprox(a.prime, a.precision - j, mpz_class(a.value / pj));
}

inline std::optional<PadicApprox> padic_invert(const PadicApprox& a) {
    if (a.valuation != 0) return std::nullopt;  // non-units lose all integral precision
    mpz_class mod = a.modulus(), inv;
    if (mpz_invert(inv.get_mpz_t(), a.value.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::domain_error("padic_invert: not invertible");
    return PadicApprox(a.prime, a.precision, inv);
}

// ---------------------------------------------------------------------------
// integer polynomials (dense, mpz coefficients)

struct IntPoly {
    std::vector<mpz_class> c;  // c[i] * x^i

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const mpz_class& leading() const { return c.back(); }

    mpz_class eval(const mpz_class& x) const {
        mpz_class r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }
    mpz_class eval_mod(const mpz_class& x, const mpz_class& m) const {
        mpz_class r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = (r * x + *it) % m;
        if (r < 0) r += m;
        return r;
    }
    IntPoly derivative() const {
        if (c.size() <= 1) return IntPoly{};
        std::vector<mpz_class> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
        return IntPoly(std::move(d));
    }

    static IntPoly monomial(unsigned deg, mpz_class coeff) {
        std::vector<mpz_class> c(deg + 1);
        c[deg] = std::move(coeff);
        return IntPoly(std::move(c));
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c.size()) r[i] += a.c[i];
            if (i < b.c.size()) r[i] += b.c[i];
        }
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c.size()) r[i] += a.c[i];
            if (i < b.c.size()) r[i] -= b.c[i];
        }
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly{};
        std::vector<mpz_class> r(a.c.size() + b.c.size() - 1);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const mpz_class& s) {
        std::vector<mpz_class> r(a.c.size());
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i] * s;
        return IntPoly(std::move(r));
    }
    bool operator==(const IntPoly& o) const { return c == o.c; }
};

// ---------------------------------------------------------------------------
// Hensel lifting of polynomial roots in Z_l

struct HenselRootReport {
    std::vector<PadicApprox> roots;  // certified simple roots, to full precision
    std::vector<u64> unresolved;     // residues mod l whose lift is ambiguous here
};

// Lifts the simple roots of f mod l to precision k.  Residues that are
// multiple roots mod l are reported as unresolved rather than chased; the
// recursive resolver below handles those when callers need them.
inline HenselRootReport hensel_lift_roots(const IntPoly& f, u64 ell, unsigned k) {
    if (f.is_zero()) throw std::domain_error("hensel_lift_roots: zero polynomial");
    mpz_class lz = static_cast<unsigned long>(ell);
    bool nonzero_mod_l = false;
    for (auto& coeff : f.c)
        if (coeff % lz != 0) { nonzero_mod_l = true; break; }
    if (!nonzero_mod_l) throw std::domain_error("hensel_lift_roots: f vanishes mod l");

    HenselRootReport rep;
    IntPoly df = f.derivative();
    mpz_class target = mpz_pow_ui(lz, k);
    for (u64 r = 0; r < ell; ++r) {
        mpz_class x = static_cast<unsigned long>(r);
        if (f.eval_mod(x, lz) != 0) continue;
        if (df.eval_mod(x, lz) == 0) {
            rep.unresolved.push_back(r);
            continue;
        }
        // Newton iteration, doubling precision
        mpz_class cur = lz, root = x;
        while (cur < target) {
            mpz_class next = cur * cur;
            if (next > target) next = target;
            mpz_class fv = f.eval_mod(root, next);
            mpz_class dfv = df.eval_mod(root, next), inv;
            mpz_invert(inv.get_mpz_t(), dfv.get_mpz_t(), next.get_mpz_t());
            root = (root - fv * inv) % next;
            if (root < 0) root += next;
            cur = next;
        }
        rep.roots.emplace_back(ell, k, root);
    }
    return rep;
}

// Full root finder over Z_l: recursive digit branching with Newton
// certification once f(r) is divisible deeper than f'(r)^2.  Classes whose
// resolution exceeds the depth/width budget come back as unresolved.
struct PadicRootSearch {
    std::vector<PadicApprox> roots;
    std::vector<std::pair<mpz_class, unsigned>> unresolved;  // (residue, depth)
    bool budget_exhausted = false;
};

namespace detail {
inline void padic_root_rec(const IntPoly& f, const IntPoly& df, u64 ell, unsigned k,
                           const mpz_class& center, unsigned depth, int& budget,
                           PadicRootSearch& out) {
    if (budget-- <= 0) { out.budget_exhausted = true; out.unresolved.emplace_back(center, depth); return; }
    mpz_class lz = static_cast<unsigned long>(ell);
    mpz_class mod_here = mpz_pow_ui(lz, depth);
    // Newton certification: v(f(c)) > 2 v(f'(c)) with both measured at depth
    mpz_class fv = f.eval(center);
    mpz_class dfv = df.eval(center);
    unsigned vf = (fv == 0) ? k + depth : static_cast<unsigned>(valuation_mpz(fv, lz));
    unsigned vdf = (dfv == 0) ? k + depth : static_cast<unsigned>(valuation_mpz(dfv, lz));
    if (vf > 2 * vdf) {
        // unique root in this residue class; lift it
        mpz_class target = mpz_pow_ui(lz, k + vdf);
        mpz_class root = center % target, cur = mpz_pow_ui(lz, std::max(depth, vdf + 1));
        if (cur > target) cur = target;
        while (true) {
            mpz_class fr = f.eval(root) % cur;
            if (fr != 0) {
                mpz_class dfr = df.eval(root);
                mpz_class shift = mpz_pow_ui(lz, static_cast<unsigned>(valuation_mpz(dfr, lz)));
                mpz_class inv;
                mpz_class unit = dfr / shift;
                mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), cur.get_mpz_t());
                root = (root - (f.eval(root) / shift) * inv) % cur;
                if (root < 0) root += cur;
            }
            if (cur >= target) break;
            cur = cur * cur;
            if (cur > target) cur = target;
        }
        out.roots.emplace_back(ell, k, root);
        return;
    }
    if (depth >= k) { out.unresolved.emplace_back(center, depth); return; }
    mpz_class step = mod_here;
    mpz_class next_mod = mod_here * lz;
    for (u64 t = 0; t < ell; ++t) {
        mpz_class cand = center + step * static_cast<unsigned long>(t);
        mpz_class val = f.eval_mod(cand, next_mod);
        if (val == 0) detail::padic_root_rec(f, df, ell, k, cand, depth + 1, budget, out);
    }
}
} // namespace detail

inline PadicRootSearch padic_integral_roots(const IntPoly& f, u64 ell, unsigned k,
                                            int budget = 20000) {
    PadicRootSearch out;
    if (f.is_zero()) throw std::domain_error("padic_integral_roots: zero polynomial");
    IntPoly df = f.derivative();
    mpz_class lz = static_cast<unsigned long>(ell);
    for (u64 r = 0; r < ell; ++r) {
        mpz_class x = static_cast<unsigned long>(r);
        if (f.eval_mod(x, lz) == 0)
            detail::padic_root_rec(f, df, ell, k, x, 1, budget, out);
    }
    // deduplicate roots that certified at different branches of one class
    std::sort(out.roots.begin(), out.roots.end(),
              [](const PadicApprox& a, const PadicApprox& b) { return a.value < b.value; });
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end(),
                                [](const PadicApprox& a, const PadicApprox& b) {
                                    return a.value == b.value;
                                }),
                    out.roots.end());
    return out;
}

// Is u a square in Z_l (l odd)?  Needs v_l(u) < precision to decide.
enum class SquareClass { square, nonsquare, undecided };

inline SquareClass padic_square_class(const mpz_class& u, u64 ell, unsigned precision) {
    mpz_class lz = static_cast<unsigned long>(ell);
    mpz_class mod = mpz_pow_ui(lz, precision);
    mpz_class v = ((u % mod) + mod) % mod;
    if (v == 0) return SquareClass::undecided;
    unsigned val = static_cast<unsigned>(valuation_mpz(v, lz));
    if (val >= precision) return SquareClass::undecided;
    if (val & 1) return SquareClass::nonsquare;
    mpz_class unit = v / mpz_pow_ui(lz, val);
    u64 um = mpz_class(unit % lz).get_ui();
    return legendre(static_cast<i64>(um), ell) == 1 ? SquareClass::square : SquareClass::nonsquare;
}

} // namespace eccensus
