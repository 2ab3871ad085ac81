#include "bsg/bigint.hpp"

#include <cctype>

#include "bsg/error.hpp"

static_assert(sizeof(long) == 8, "64-bit long required for GMP si/ui conversions");

namespace bsg {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::NotUnit: return "not a unit";
    case ErrorCode::NotPrime: return "not prime";
    case ErrorCode::Divisibility: return "divisibility";
    case ErrorCode::Parse: return "syntax error";
    case ErrorCode::InvalidQuotient: return "invalid quotient";
    case ErrorCode::RelationViolated: return "relation violated";
    case ErrorCode::Precondition: return "precondition violated";
    case ErrorCode::Resource: return "resource limit";
    case ErrorCode::BoundsExhausted: return "bounds exhausted";
  }
  return "error";
}

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw Error(ErrorCode::InvalidArgument, "expected an integer, got '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw Error(ErrorCode::InvalidArgument, "expected an integer, got '" + std::string(text) + "'");
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return Int(s, 10);
}

std::string to_string(const Int& x) { return x.get_str(10); }

bool fits_int64(const Int& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

bool fits_uint64(const Int& x) { return x >= 0 && mpz_fits_ulong_p(x.get_mpz_t()) != 0; }

std::int64_t to_int64(const Int& x) {
  if (!fits_int64(x)) throw Error(ErrorCode::Resource, "integer " + to_string(x) + " exceeds 64 bits");
  return mpz_get_si(x.get_mpz_t());
}

std::uint64_t to_uint64(const Int& x) {
  if (!fits_uint64(x)) throw Error(ErrorCode::Resource, "integer " + to_string(x) + " is not a 64-bit unsigned value");
  return mpz_get_ui(x.get_mpz_t());
}

Int from_int64(std::int64_t x) {
  Int r;
  mpz_set_si(r.get_mpz_t(), x);
  return r;
}

Int from_uint64(std::uint64_t x) {
  Int r;
  mpz_set_ui(r.get_mpz_t(), x);
  return r;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int powmod(const Int& base, const Int& exp, const Int& modulus) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Int mod_floor(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::size_t bit_length(const Int& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace bsg
