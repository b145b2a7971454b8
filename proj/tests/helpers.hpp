#pragma once

#include "cubic/int128.hpp"
#include "doctest.h"
#include "helpers_acceptance.hpp"

namespace doctest {
template <>
struct StringMaker<cubic::i128> {
    static String convert(cubic::i128 value) { return String(cubic::to_string(value).c_str()); }
};
}  // namespace doctest
