#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace anyonwalk {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with C(m, k) = 0 for k < 0 or k > m.
BigInt binomial(int m, int k);

/// Same, in 64-bit; caller guarantees the value fits.
std::uint64_t binomial_u64(int m, int k);

}  // namespace anyonwalk
