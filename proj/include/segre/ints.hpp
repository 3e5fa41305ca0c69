#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace segre {

using Int = std::int64_t;

/// Raised when a computation leaves the exactly representable range.
/// Every arithmetic path in the library goes through the checked helpers
/// below, so results are either exact or fail loudly.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation is called outside its mathematical domain
/// (negative degrees where forbidden, ranks out of range, and so on).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Int checked_add(Int a, Int b) {
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// Binomial coefficient C(n, k), exact.  Negative k or k > n gives 0,
/// matching the conventions of the twist formulas.
inline Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;  // always divides exactly
    }
    return r;
}

}  // namespace segre
