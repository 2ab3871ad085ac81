#include "bsg/presentation.hpp"

#include <utility>

#include "bsg/error.hpp"

namespace bsg {

namespace {

Verdict verdict(Truth value, std::string id, std::string citation) {
  Verdict v;
  v.value = value;
  v.reason = {std::move(id), std::move(citation)};
  return v;
}

Truth truth(bool b) { return b ? Truth::True : Truth::False; }

void require_prime(const Int& p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, to_string(p) + " is not prime");
}

bool is_power_of(const Int& x, const Int& p) {
  Int rest = x;
  while (divides(p, rest)) rest /= p;
  return rest == 1;
}

// x = p^v * rest with p not dividing rest.
std::pair<Int, Int> split_valuation(const Int& x, const Int& p) {
  Int v = 0, rest = x;
  while (divides(p, rest)) {
    rest /= p;
    ++v;
  }
  return {v, rest};
}

bool non_residual(const GroupParams& c) { return abs(c.n) > c.m && c.m > 1; }

}  // namespace

GroupParams canonicalize(const GroupParams& g) {
  GroupParams c = GroupParams::make(g.m, g.n);
  if (abs(c.m) > abs(c.n)) std::swap(c.m, c.n);
  if (c.m < 0) {
    c.m = -c.m;
    c.n = -c.n;
  }
  return c;
}

bool is_isomorphic(const GroupParams& g1, const GroupParams& g2) { return canonicalize(g1) == canonicalize(g2); }

const char* truth_name(Truth t) noexcept {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

Word finite_kernel_commutator(const GroupParams& g) {
  GroupParams c = canonicalize(g);
  Int d = gcd(c.m, c.n);
  return commutator(Word::a() * Word::b(d) * Word::a(-1), Word::b());
}

Verdict is_residually_finite(const GroupParams& g) {
  GroupParams c = canonicalize(g);
  if (c.m == 1) return verdict(Truth::True, "rf.m-is-1", "Theorem 1");
  if (abs(c.n) == c.m) return verdict(Truth::True, "rf.n-is-pm-m", "Theorem 1");
  Verdict v = verdict(Truth::False, "rf.non-residual", "Theorem 1");
  v.witness_word = finite_kernel_commutator(c);
  return v;
}

Verdict is_residually_p(const GroupParams& g, const Int& p) {
  require_prime(p);
  GroupParams c = canonicalize(g);
  Verdict v;
  if (c.m == 1 && divides(p, c.n - 1)) {
    v = verdict(Truth::True, "rp.n-is-1-mod-p", "Theorem 2");
  } else if (abs(c.n) == c.m && is_power_of(c.m, p) && (c.n > 0 || p == 2)) {
    v = verdict(Truth::True, "rp.prime-power", "Theorem 2");
  } else {
    v = verdict(Truth::False, "rp.criterion-fails", "Theorem 2");
  }
  v.witness_prime = p;
  return v;
}

Verdict is_residually_pi(const GroupParams& g, const PrimeSet& pi, const Int& search_bound) {
  GroupParams c = canonicalize(g);
  if (non_residual(c)) {
    Verdict v = verdict(Truth::False, "rpi.not-residually-finite", "Theorem 1");
    v.witness_word = finite_kernel_commutator(c);
    return v;
  }
  if (abs(c.n) == c.m) {
    bool ok = is_pi_number(c.m, pi) && (c.n > 0 || pi.contains(2));
    return verdict(truth(ok), "rpi.unimodular", "Theorem 6");
  }

  // m = 1, |n| >= 2
  for (const auto& p : pi.primes()) {
    if (divides(p, c.n - 1)) {
      Verdict v = verdict(Truth::True, "rpi.p-divides-n-minus-1", "Theorem 2");
      v.witness_prime = p;
      return v;
    }
  }
  if (pi.size() == 1) return verdict(Truth::False, "rpi.single-prime", "Theorem 2");
  if (pi.size() == 2) {
    const Int& p = pi.primes()[0];
    const Int& q = pi.primes()[1];
    bool ok = gcd(c.n, q) == 1 && divides(p, q - 1) && is_pi_number(multiplicative_order(c.n, q), PrimeSet({p}));
    Verdict v = verdict(truth(ok), "rpi.two-primes", "Corollary");
    if (ok) v.witness_s = q;
    return v;
  }

  PiNumberSequence seq(pi);
  seq.next();  // 1
  for (Int s = seq.next(); s <= search_bound; s = seq.next()) {
    if (gcd(s, c.n) != 1) continue;
    if (is_pi_number(multiplicative_order(c.n, s), pi)) {
      Verdict v = verdict(Truth::True, "rpi.pi-number-found", "Theorem 5");
      v.witness_s = s;
      return v;
    }
  }
  return verdict(Truth::Unknown, "rpi.search-exhausted", "Theorem 5");
}

Verdict is_virtually_residually_p(const GroupParams& g, const Int& p) {
  require_prime(p);
  GroupParams c = canonicalize(g);
  Verdict v;
  if (non_residual(c))
    v = verdict(Truth::False, "vrp.not-residually-finite", "Theorem 1 (derived)");
  else if (abs(c.n) == c.m)
    v = verdict(Truth::True, "vrp.unimodular", "Theorem 7");
  else
    v = verdict(truth(!divides(p, c.n)), "vrp.p-divides-n", "Theorem 7");
  v.witness_prime = p;
  return v;
}

Verdict is_virtually_residually_pi(const GroupParams& g, const PrimeSet& pi) {
  GroupParams c = canonicalize(g);
  if (non_residual(c)) return verdict(Truth::False, "vrpi.not-residually-finite", "Theorem 1 (derived)");
  for (const auto& p : pi.primes()) {
    if (is_virtually_residually_p(c, p).is_true()) {
      Verdict v = verdict(Truth::True, "vrpi.some-prime", "Theorem 8");
      v.witness_prime = p;
      return v;
    }
  }
  return verdict(Truth::False, "vrpi.no-prime", "Theorem 8");
}

Verdict is_conjugacy_separable(const GroupParams& g) {
  Verdict rf = is_residually_finite(g);
  if (rf.is_true()) return verdict(Truth::True, "cs.residually-finite", "Theorem 9");
  Verdict v = verdict(Truth::False, "cs.not-residually-finite", "Theorem 1");
  v.witness_word = rf.witness_word;
  return v;
}

Verdict is_conjugacy_separable_pi(const GroupParams& g, const PrimeSet& pi, const Int& search_bound) {
  GroupParams c = canonicalize(g);
  if (non_residual(c)) return verdict(Truth::False, "cspi.not-residually-finite", "Theorem 1");
  Verdict rpi = is_residually_pi(c, pi, search_bound);
  if (abs(c.n) == c.m) {
    Verdict v = verdict(rpi.value, "cspi.unimodular", "Theorem 11");
    if (rpi.value == Truth::False) v.reason = {"cspi.not-residual", "Theorem 6"};
    return v;
  }
  if (rpi.value == Truth::False) return verdict(Truth::False, "cspi.not-residual", rpi.reason.citation);
  if (pi.size() == 2) return verdict(Truth::False, "cspi.two-primes", "Theorem 10");
  return verdict(Truth::Unknown, "cspi.open", "Theorems 10, 11 (not covered)");
}

Verdict is_subgroup_separable(const GroupParams& g) {
  GroupParams c = canonicalize(g);
  if (abs(c.n) == c.m) return verdict(Truth::True, "ss.unimodular", "Theorem 12");
  if (c.m == 1) {
    Verdict v = verdict(Truth::False, "ss.b-not-separable", "subgroup <b> is not closed");
    v.witness_word = Word::a() * Word::b() * Word::a(-1);
    return v;
  }
  return verdict(Truth::False, "ss.not-residually-finite", "Theorem 1");
}

Word SigmaDescription::commutator_member(long k) const {
  if (!commutator_exponent) throw Error(ErrorCode::Precondition, "description has no commutator family");
  Int kk = k;
  return commutator(Word::a(kk) * Word::b(*commutator_exponent) * Word::a(-kk), Word::b());
}

SigmaDescription sigma_description(const GroupParams& g) {
  SigmaDescription sd;
  sd.kind = SigmaDescription::Kind::Finite;
  sd.group = canonicalize(g);
  sd.commutator_exponent = gcd(sd.group.m, sd.group.n);
  return sd;
}

SigmaDescription sigma_p_description(const GroupParams& g, const Int& p) {
  require_prime(p);
  SigmaDescription sd;
  sd.kind = SigmaDescription::Kind::FiniteP;
  sd.group = canonicalize(g);
  sd.prime = p;

  SigmaDescription::Params par;
  std::tie(par.r, par.m1) = split_valuation(sd.group.m, p);
  std::tie(par.s, par.n1) = split_valuation(sd.group.n, p);
  par.d = gcd(par.m1, par.n1);
  par.u = par.m1 / par.d;
  par.v = par.n1 / par.d;

  if (par.r != par.s || !divides(p, par.m1 - par.n1)) {
    sd.case_number = 1;
    par.t = std::min(par.r, par.s);
    sd.power_element = pow_int(p, to_uint64(par.t));
  } else {
    sd.case_number = 2;
    Int pr = pow_int(p, to_uint64(par.r));
    sd.commutator_exponent = pr;
    sd.extra_element = Word::a(-1) * Word::b(pr * par.u) * Word::a() * Word::b(-pr * par.v);
  }
  sd.params = par;
  return sd;
}

bool power_commutator_check(bool orders_equal, const Int& x_order, const Int& exponent_n, const Int& exponent_m,
                 bool commutator_is_trivial) {
  (void)exponent_n;
  (void)exponent_m;
  if (!orders_equal || x_order < 1)
    throw Error(ErrorCode::Precondition, "elements must share a finite order");
  return commutator_is_trivial;
}

}  // namespace bsg
