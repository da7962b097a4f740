#pragma once

#include <algorithm>
#include <optional>
#include <string>

namespace koszul {

// Regularity-like quantities take integer values or -infinity (zero module).
// Encoded as std::optional<int>; nullopt means -infinity.
using RegValue = std::optional<int>;

inline constexpr RegValue minus_infinity() { return std::nullopt; }

inline RegValue reg_max(RegValue a, RegValue b)
{
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

inline RegValue reg_add(RegValue a, int k)
{
    if (!a) return a;
    return *a + k;
}

// a <= b with -infinity below everything
inline bool reg_le(RegValue a, RegValue b)
{
    if (!a) return true;
    if (!b) return false;
    return *a <= *b;
}

inline std::string reg_str(RegValue a)
{
    return a ? std::to_string(*a) : std::string("-inf");
}

} // namespace koszul
