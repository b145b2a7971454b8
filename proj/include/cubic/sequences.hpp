#pragma once

#include <string>
#include <vector>

#include "cubic/error.hpp"
#include "cubic/int128.hpp"

namespace cubic {

/// f_0 = 0, f_1 = 1, f_n = f_{n-1} + f_{n-2}. Exact for 0 <= n <= 184 (the
/// last Fibonacci number that fits a signed 128-bit integer).
inline i128 fibonacci(int n) {
    if (n < 0 || n > 184) fail(ErrorKind::ParameterOutOfRange, "fibonacci supports 0 <= n <= 184");
    i128 a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        i128 c = a + b;
        a = b;
        b = c;
    }
    return a;
}

/// Maximum number of perfect matchings among simple connected cubic graphs on
/// 2n vertices: m_2 = 3, m_3 = 6, m_4 = 9, m_5 = 13, and m_n = 4 f_{n-1} for
/// n >= 6. 4 f_{n-1} stays within 128 bits up to n = 182.
inline i128 m_value(int n) {
    if (n < 2 || n > 182) fail(ErrorKind::ParameterOutOfRange, "m_value supports 2 <= n <= 182");
    switch (n) {
        case 2: return 3;
        case 3: return 6;
        case 4: return 9;
        case 5: return 13;
        default: return 4 * fibonacci(n - 1);
    }
}

struct MViolation {
    std::string clause;  // "i", "ii", "iii", "iv", "v", "vii", "viii" or "ix"
    int a = 0;           // primary index n, or the first factor index for "vii"
    int b = 0;           // second factor index for "vii", unused otherwise
    std::string detail;
};

/// Exhaustively verifies the eight m_n inequalities over their stated ranges
/// up to n_max. Clause names follow the source numbering:
///   i:    3/2 m_{n-1} < m_n            (n >= 6)
///   ii:   2 m_{n-2} < m_n              (n >= 5)
///   iii:  4 m_{n-3} <= m_n, equality only at n = 8   (n >= 8)
///   iv:   6 m_{n-4} < m_n              (n >= 9)
///   v:    m_{2n} < m_n^2               (n >= 3)
///   vii:  m_a m_b < m_{a+b+1}          (a, b >= 3, a + b >= 8)
///   viii: m_n = m_{n-1} + m_{n-2}      (n >= 8)
///   ix:   m_{n+1} < sqrt(3) m_n, checked as m_{n+1}^2 < 3 m_n^2   (n >= 6)
/// An empty result means every clause holds.
inline std::vector<MViolation> check_m_inequalities(int n_max) {
    if (n_max < 9) fail(ErrorKind::ParameterOutOfRange, "check_m_inequalities needs n_max >= 9");
    std::vector<MViolation> violations;
    auto report = [&](const std::string& clause, int a, int b, const std::string& detail) {
        violations.push_back({clause, a, b, detail});
    };
    for (int n = 6; n <= n_max; ++n)
        if (!(3 * m_value(n - 1) < 2 * m_value(n)))
            report("i", n, 0, "3/2 m_" + std::to_string(n - 1) + " >= m_" + std::to_string(n));
    for (int n = 5; n <= n_max; ++n)
        if (!(2 * m_value(n - 2) < m_value(n)))
            report("ii", n, 0, "2 m_" + std::to_string(n - 2) + " >= m_" + std::to_string(n));
    for (int n = 8; n <= n_max; ++n) {
        i128 lhs = 4 * m_value(n - 3), rhs = m_value(n);
        if (lhs > rhs)
            report("iii", n, 0, "4 m_" + std::to_string(n - 3) + " > m_" + std::to_string(n));
        else if (lhs == rhs && n != 8)
            report("iii", n, 0, "unexpected equality at n = " + std::to_string(n));
    }
    for (int n = 9; n <= n_max; ++n)
        if (!(6 * m_value(n - 4) < m_value(n)))
            report("iv", n, 0, "6 m_" + std::to_string(n - 4) + " >= m_" + std::to_string(n));
    for (int n = 3; 2 * n <= n_max; ++n)
        if (!(m_value(2 * n) < m_value(n) * m_value(n)))
            report("v", n, 0, "m_" + std::to_string(2 * n) + " >= m_" + std::to_string(n) + "^2");
    for (int a = 3; a + 4 <= n_max; ++a)
        for (int b = 3; a + b + 1 <= n_max; ++b)
            if (a + b >= 8 && !(m_value(a) * m_value(b) < m_value(a + b + 1)))
                report("vii", a, b,
                       "m_" + std::to_string(a) + " m_" + std::to_string(b) + " >= m_" + std::to_string(a + b + 1));
    for (int n = 8; n <= n_max; ++n)
        if (m_value(n) != m_value(n - 1) + m_value(n - 2))
            report("viii", n, 0, "m_" + std::to_string(n) + " != m_" + std::to_string(n - 1) + " + m_" + std::to_string(n - 2));
    for (int n = 6; n + 1 <= n_max; ++n)
        if (!(m_value(n + 1) * m_value(n + 1) < 3 * m_value(n) * m_value(n)))
            report("ix", n, 0, "m_" + std::to_string(n + 1) + "^2 >= 3 m_" + std::to_string(n) + "^2");
    return violations;
}

/// Exact integer table over a contiguous index range.
struct SequenceTable {
    int first_index = 0;
    std::vector<i128> values;

    i128 at(int index) const { return values.at(static_cast<std::size_t>(index - first_index)); }
    int last_index() const { return first_index + static_cast<int>(values.size()) - 1; }
};

inline SequenceTable fibonacci_table(int n_max) {
    SequenceTable t{0, {}};
    for (int n = 0; n <= n_max; ++n) t.values.push_back(fibonacci(n));
    return t;
}

inline SequenceTable m_table(int n_max) {
    SequenceTable t{2, {}};
    for (int n = 2; n <= n_max; ++n) t.values.push_back(m_value(n));
    return t;
}

/// Closed form for the number of cycles in MC_k:
///   k even: 2^k + (k + 1/2) 2^{k/2} - 3k/2
///   k odd:  2^k + (k + 7/2) 2^{(k-1)/2} - (3k+5)/2
/// Both are integers for the stated parities; evaluated exactly.
inline i128 mc_cycle_formula(int k) {
    if (k < 3 || k > 125) fail(ErrorKind::ParameterOutOfRange, "mc_cycle_formula supports 3 <= k <= 125");
    if (k % 2 == 0) {
        // (k + 1/2) 2^{k/2} = (2k + 1) 2^{k/2 - 1}; k/2 - 1 >= 1 for k >= 4
        i128 value = ipow(2, k) + i128(2 * k + 1) * ipow(2, k / 2 - 1);
        if ((3 * k) % 2 != 0) fail(ErrorKind::NonIntegerResult, "even-k closed form");
        return value - 3 * k / 2;
    }
    // (k + 7/2) 2^{(k-1)/2} = (2k + 7) 2^{(k-3)/2}; (k-3)/2 >= 0 for k >= 3
    i128 value = ipow(2, k) + i128(2 * k + 7) * ipow(2, (k - 3) / 2);
    if ((3 * k + 5) % 2 != 0) fail(ErrorKind::NonIntegerResult, "odd-k closed form");
    return value - (3 * k + 5) / 2;
}

/// Lower bound on the maximum number of cycles over all graphs of cyclomatic
/// number r, realized by MC_{r-1}:
///   r odd:  2^{r-1} + (r - 1/2) 2^{(r-1)/2} - 3(r-1)/2
///   r even: 2^{r-1} + (r + 5/2) 2^{(r-2)/2} - (3r+2)/2
inline i128 psi_lower_bound(int r) {
    if (r < 4 || r > 126) fail(ErrorKind::ParameterOutOfRange, "psi_lower_bound supports 4 <= r <= 126");
    if (r % 2 == 1) {
        i128 value = ipow(2, r - 1) + i128(2 * r - 1) * ipow(2, (r - 3) / 2);
        if ((3 * (r - 1)) % 2 != 0) fail(ErrorKind::NonIntegerResult, "odd-r bound");
        return value - 3 * (r - 1) / 2;
    }
    i128 value = ipow(2, r - 1) + i128(2 * r + 5) * ipow(2, (r - 4) / 2);
    if ((3 * r + 2) % 2 != 0) fail(ErrorKind::NonIntegerResult, "even-r bound");
    return value - (3 * r + 2) / 2;
}

inline SequenceTable psi_table(int r_max) {
    SequenceTable t{4, {}};
    for (int r = 4; r <= r_max; ++r) t.values.push_back(psi_lower_bound(r));
    return t;
}

}  // namespace cubic
