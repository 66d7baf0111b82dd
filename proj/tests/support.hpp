#pragma once

#include "qsd/qsd.hpp"

namespace qsd::test {

inline Generator z(int i, int j) { return Generator::z(i, j); }
inline Generator zs(int i, int j) { return Generator::zs(i, j); }
inline Coefficient Q(int k) { return Coefficient::q_power(k); }
inline Coefficient C(const char* text) { return Coefficient::parse(text); }
inline RationalPoint at(const char* q) { return RationalPoint::parse(q); }

}  // namespace qsd::test
