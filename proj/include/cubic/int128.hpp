#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace cubic {

// All counts in this library are exact. 128-bit integers are wide enough for
// everything we compute (the largest values are Fibonacci numbers up to f_184
// and coloring sums bounded by 2^30 * 3^20).
using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 i128_max() {
    return static_cast<i128>((u128(1) << 127) - 1);
}

inline std::string to_string(i128 value) {
    if (value == 0) return "0";
    bool negative = value < 0;
    u128 mag = negative ? -static_cast<u128>(value) : static_cast<u128>(value);
    char buf[48];
    int pos = 48;
    while (mag > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(mag % 10));
        mag /= 10;
    }
    std::string out;
    if (negative) out.push_back('-');
    out.append(buf + pos, 48 - pos);
    return out;
}

// Exact small-exponent power; the caller is responsible for staying in range.
inline i128 ipow(i128 base, int exponent) {
    i128 result = 1;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

struct I128Printer {
    i128 value;
    friend std::ostream& operator<<(std::ostream& os, const I128Printer& p) {
        return os << to_string(p.value);
    }
};

}  // namespace cubic
