#include "bsg/numtheory.hpp"

#include <algorithm>
#include <map>

#include "bsg/error.hpp"

namespace bsg {

namespace {

constexpr unsigned long kTrialLimit = 1000;
constexpr unsigned long kLinearScanLimit = 4096;

Int brent_rho(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  const unsigned long block = 128;
  for (unsigned long c = 1;; ++c) {
    auto f = [&](const Int& v) { return mod_floor(v * v + c, n); };
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mod_floor(q * abs(x - y), n);
        }
        g = gcd(q, n);
        k += block;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = brent_rho(n);
  split_into(d, out);
  split_into(n / d, out);
}

// n^x = target (mod modulus) with ord = order of n; smallest x in [0, ord).
std::optional<Int> discrete_log(const Int& n, const Int& target, const Int& modulus, const Int& ord) {
  if (ord <= kLinearScanLimit) {
    Int cur = 1;
    for (Int x = 0; x < ord; ++x) {
      if (cur == target) return x;
      cur = mod_floor(cur * n, modulus);
    }
    return std::nullopt;
  }
  Int step = sqrt(ord);
  if (step * step < ord) ++step;
  std::map<Int, Int> baby;  // n^j -> smallest j
  Int cur = 1;
  for (Int j = 0; j < step; ++j) {
    baby.emplace(cur, j);
    cur = mod_floor(cur * n, modulus);
  }
  Int giant;  // n^-step
  Int n_step = powmod(n, step, modulus);
  mpz_invert(giant.get_mpz_t(), n_step.get_mpz_t(), modulus.get_mpz_t());
  Int gamma = target;
  for (Int i = 0; i < step; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) {
      Int x = i * step + it->second;
      if (x < ord) return x;
    }
    gamma = mod_floor(gamma * giant, modulus);
  }
  return std::nullopt;
}

void require_unit(const Int& n, const Int& modulus) {
  if (gcd(n, modulus) != 1)
    throw Error(ErrorCode::NotUnit, to_string(n) + " is not a unit modulo " + to_string(modulus));
}

// Base-n digits of a positive integer, most significant first.
std::vector<Int> digits_of(Int r, const Int& n) {
  std::vector<Int> d;
  while (r > 0) {
    d.push_back(mod_floor(r, n));
    r /= n;
  }
  std::reverse(d.begin(), d.end());
  return d;
}

}  // namespace

PrimeSet::PrimeSet(std::vector<Int> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw Error(ErrorCode::InvalidArgument, "prime set must be non-empty");
  for (const auto& p : primes_)
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, to_string(p) + " is not prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(const Int& p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

Int Factorization::value() const {
  Int v = unit;
  for (const auto& f : factors) v *= pow_int(f.prime, f.exponent);
  return v;
}

bool is_prime(const Int& x) {
  if (x < 2) return false;
  return mpz_probab_prime_p(x.get_mpz_t(), 40) > 0;
}

Factorization factorize(const Int& x) {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "cannot factorize 0");
  Factorization out;
  out.unit = x < 0 ? -1 : 1;
  Int rest = abs(x);
  std::vector<Int> primes;
  for (unsigned long p = 2; p <= kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(p);
      rest /= p;
    }
    if (Int(p) * p > rest) break;
  }
  split_into(rest, primes);
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({p, 1});
  }
  return out;
}

Int euler_phi(const Int& l) {
  if (l < 1) throw Error(ErrorCode::InvalidArgument, "Euler phi needs a positive argument");
  Int phi = 1;
  for (const auto& f : factorize(l).factors) phi *= pow_int(f.prime, f.exponent - 1) * (f.prime - 1);
  return phi;
}

Int multiplicative_order(const Int& n, const Int& modulus) {
  if (modulus < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  require_unit(n, modulus);
  Int base = mod_floor(n, modulus);
  Int ord = euler_phi(modulus);
  for (const auto& f : factorize(ord).factors) {
    for (unsigned e = 0; e < f.exponent; ++e) {
      Int candidate = ord / f.prime;
      if (powmod(base, candidate, modulus) != 1) break;
      ord = candidate;
    }
  }
  return ord;
}

bool is_pi_number(const Int& x, const PrimeSet& pi) {
  if (x < 1) throw Error(ErrorCode::InvalidArgument, "pi-number test needs a positive integer");
  Int rest = x;
  for (const auto& p : pi.primes())
    while (divides(p, rest)) rest /= p;
  return rest == 1;
}

std::optional<Int> solve_exp_congruence(const Int& n, const Int& r, const Int& s, const Int& modulus) {
  if (modulus < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  if (modulus == 1) return Int(0);
  require_unit(n, modulus);
  // gcd(n^x r, M) = gcd(r, M), so s must share exactly that gcd; dividing it out leaves a
  // discrete logarithm n^x = s/g * (r/g)^-1 modulo M/g.
  Int rr = mod_floor(r, modulus);
  Int ss = mod_floor(s, modulus);
  Int g = gcd(rr, modulus);
  if (gcd(ss, modulus) != g) return std::nullopt;
  Int reduced = modulus / g;
  if (reduced == 1) return Int(0);
  Int r_inv;
  Int r_red = rr / g;
  mpz_invert(r_inv.get_mpz_t(), r_red.get_mpz_t(), reduced.get_mpz_t());
  Int target = mod_floor((ss / g) * r_inv, reduced);
  Int base = mod_floor(n, reduced);
  return discrete_log(base, target, reduced, multiplicative_order(base, reduced));
}

Int u_t(const Int& n, unsigned long t) {
  if (abs(n) < 2) throw Error(ErrorCode::InvalidArgument, "u_t needs |n| >= 2");
  if (t == 0) throw Error(ErrorCode::InvalidArgument, "u_t needs t >= 1");
  return abs(pow_int(n, t) - 1);
}

namespace {

void require_separable_pair(const Int& n, const Int& r, const Int& s) {
  if (abs(n) < 2) throw Error(ErrorCode::InvalidArgument, "need |n| >= 2");
  if (r == 0 || s == 0 || r == s || divides(n, r) || divides(n, s))
    throw Error(ErrorCode::Divisibility,
                "need r != s, both nonzero and not divisible by n (n=" + to_string(n) + ", r=" + to_string(r) +
                    ", s=" + to_string(s) + ")");
}

}  // namespace

unsigned long find_unsolvable_modulus(const Int& n, const Int& r, const Int& s, unsigned long max_t) {
  require_separable_pair(n, r, s);
  for (unsigned long t = 1; t <= max_t; ++t) {
    Int modulus = u_t(n, t);
    if (modulus == 1) continue;
    if (!solve_exp_congruence(n, r, s, modulus)) return t;
  }
  throw Error(ErrorCode::Resource, "no unsolvable modulus found for t <= " + std::to_string(max_t));
}

UnsolvabilityBound unsolvability_bound(const Int& n, const Int& r, const Int& s) {
  require_separable_pair(n, r, s);
  if (n < 0) {
    if (s == -r)
      throw Error(ErrorCode::Precondition, "no explicit bound for negative n with s = -r");
    UnsolvabilityBound inner = unsolvability_bound(n * n, r * r, s * s);
    inner.threshold *= 2;
    inner.step = 2;
    return inner;
  }

  Int rp = r > 0 ? r : Int(-r);
  Int sp = r > 0 ? s : Int(-s);
  const auto digits = digits_of(rp, n);
  UnsolvabilityBound bound;
  bound.digits_minus_one = digits.size() - 1;
  const unsigned long k = bound.digits_minus_one;

  if (sp > 0) {
    unsigned long l = 1;
    while (pow_int(n, l) <= sp) ++l;
    bound.shift = l;
  } else {
    // Every rotation R_i of n^l r must stay below u_t + s, t = k + l + 1.
    for (unsigned long l = 1;; ++l) {
      const unsigned long width = k + l + 1;
      Int full = pow_int(n, width);
      Int shifted = pow_int(n, l) * rp;
      Int limit = full - 1 + sp;
      bool ok = true;
      for (unsigned long i = 0; i < width && ok; ++i) {
        Int low_base = pow_int(n, width - i);
        Int rotated = mod_floor(shifted, low_base) * pow_int(n, i) + shifted / low_base;
        ok = rotated < limit;
      }
      if (ok) {
        bound.shift = l;
        break;
      }
    }
  }
  bound.threshold = k + bound.shift + 1;
  return bound;
}

PiNumberSequence::PiNumberSequence(const PrimeSet& pi) : primes_(pi.primes()) { heap_.push({Int(1), 0}); }

Int PiNumberSequence::next() {
  Entry e = heap_.top();
  heap_.pop();
  for (std::size_t j = e.min_index; j < primes_.size(); ++j) heap_.push({e.value * primes_[j], j});
  return e.value;
}

}  // namespace bsg
