#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bl3::oracle {

class oracle_error : public std::runtime_error {
public:
    explicit oracle_error(const std::string& what) : std::runtime_error(what) {}
};

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Arithmetic in F_p for a prime p < 2^63. Elements are canonical
/// representatives in [0, p).
class PrimeField {
public:
    explicit PrimeField(u64 p) : p_(p), small_(p < (u64{1} << 32)) {
        if (p >= (u64{1} << 63)) throw oracle_error("prime must be below 2^63");
        if (!is_prime(p)) throw oracle_error("modulus " + std::to_string(p) + " is not prime");
    }

    u64 modulus() const { return p_; }
    bool small() const { return small_; }

    u64 reduce(u64 a) const { return a % p_; }
    u64 from_int(std::int64_t v) const {
        const u64 mag = v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v);
        return v < 0 ? neg(mag % p_) : mag % p_;
    }
    u64 add(u64 a, u64 b) const {
        const u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return small_ ? a * b % p_ : detail::mulmod(a, b, p_); }
    u64 pow(u64 a, u64 e) const { return detail::powmod(a, e, p_); }
    u64 inv(u64 a) const {
        if (a == 0) throw oracle_error("inverse of zero in F_p");
        return pow(a, p_ - 2);
    }

private:
    u64 p_;
    bool small_;
};

}  // namespace bl3::oracle
