#ifndef YSYS_CHECKED_HPP
#define YSYS_CHECKED_HPP

#include <cstdint>

#include "ysys/errors.hpp"

namespace ysys {

// 64-bit integer arithmetic that fails loudly instead of wrapping.

[[noreturn]] inline void overflow(const char* what)
{
    throw ResourceError(std::string("integer overflow in ") + what);
}

inline std::int64_t add_ck(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow("addition");
    return r;
}

inline std::int64_t sub_ck(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
    return r;
}

inline std::int64_t mul_ck(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
    return r;
}

inline std::int64_t pos_part(std::int64_t a) { return a > 0 ? a : 0; }
inline std::int64_t neg_part(std::int64_t a) { return a < 0 ? -a : 0; }

} // namespace ysys

#endif
