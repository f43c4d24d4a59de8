#ifndef QSP_FP_HPP
#define QSP_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace qsp {

// Scalar arithmetic in F_p for p <= 2^31, residues stored as uint64_t.
// Products of two reduced residues fit in 64 bits.

inline std::uint64_t fp_reduce(std::int64_t a, std::uint64_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t fp_neg(std::uint64_t a, std::uint64_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;
}

inline std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("fp_inv: zero has no inverse");
    // extended Euclid
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("fp_inv: modulus not prime or element not invertible");
    return fp_reduce(t, p);
}

// Deterministic Miller-Rabin for 64-bit inputs. The witness set
// {2,3,5,7,11,13,17,19,23,29,31,37} is exact below 3.3 * 10^24.
bool is_prime_u64(std::uint64_t n);

} // namespace qsp

#endif
