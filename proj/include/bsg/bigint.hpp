#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bsg {

using Int = mpz_class;

Int parse_int(std::string_view text);
std::string to_string(const Int& x);

bool fits_int64(const Int& x);
bool fits_uint64(const Int& x);
std::int64_t to_int64(const Int& x);    // throws Error(Resource) when out of range
std::uint64_t to_uint64(const Int& x);  // same, and rejects negatives
Int from_int64(std::int64_t x);
Int from_uint64(std::uint64_t x);

inline Int abs_int(const Int& x) { return abs(x); }
inline int sign(const Int& x) { return sgn(x); }
inline bool divides(const Int& d, const Int& x) { return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0; }
inline Int gcd_int(const Int& a, const Int& b) { return gcd(a, b); }
Int pow_int(const Int& base, unsigned long exp);
Int powmod(const Int& base, const Int& exp, const Int& modulus);
// Non-negative residue of x modulo m (m > 0).
Int mod_floor(const Int& x, const Int& m);
std::size_t bit_length(const Int& x);

}  // namespace bsg
