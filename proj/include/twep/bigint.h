#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace twep {

using BigInt = boost::multiprecision::cpp_int;

/// ceil(log2(x)) for x >= 1.
inline long ceil_log2(const BigInt &x) {
    if (x <= 1) {
        return 0;
    }
    BigInt y = x - 1;
    return static_cast<long>(boost::multiprecision::msb(y)) + 1;
}

}  // namespace twep
