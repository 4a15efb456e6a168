#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bl3 {

/// Thrown when a lattice computation would leave the 64-bit range.
class overflow_error : public std::overflow_error {
public:
    explicit overflow_error(const std::string& what) : std::overflow_error(what) {}
};

/// Thrown when an invariant that follows from one of the classification
/// results is violated at run time.
class internal_inconsistency : public std::logic_error {
public:
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

/// Thrown by operations that require a non-empty linear system.
class empty_system : public std::domain_error {
public:
    explicit empty_system(const std::string& what) : std::domain_error(what) {}
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
    return r;
}

/// Binomial coefficient C(n, k) for 0 <= k <= 3 with the polynomial
/// convention: C(n, k) = n(n-1)...(n-k+1)/k!, which is 0 for 0 <= n < k and
/// may be negative for n < 0.
inline std::int64_t binom_small(std::int64_t n, int k) {
    switch (k) {
    case 0: return 1;
    case 1: return n;
    case 2: return mul(n, sub(n, 1)) / 2;
    case 3: return mul(mul(n, sub(n, 1)), sub(n, 2)) / 6;
    default: throw std::invalid_argument("binom_small: k must be in 0..3");
    }
}

}  // namespace checked
}  // namespace bl3
