#include "bsg/quotients.hpp"

#include <algorithm>
#include <numeric>

#include "bsg/error.hpp"

namespace bsg {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kPowerTableLimit = 1u << 16;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t modpow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const Int& e, std::uint64_t m) { return to_uint64(mod_floor(e, from_uint64(m))); }

std::uint64_t residue(std::int64_t e, std::uint64_t m) {
  auto r = e % static_cast<__int128>(m);
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

FiniteQuotient FiniteQuotient::make(std::int64_t n, std::uint64_t k, std::uint64_t l) {
  if (k == 0 || l == 0) throw Error(ErrorCode::InvalidQuotient, "k and l must be positive");
  FiniteQuotient h;
  h.n_ = n;
  h.k_ = k;
  h.l_ = l;
  h.n_mod_l_ = residue(n, l);
  if (static_cast<u128>(k) * l > UINT64_MAX) throw Error(ErrorCode::Resource, "quotient order exceeds 64 bits");
  if (modpow(h.n_mod_l_, k, l) != 1 % l)
    throw Error(ErrorCode::InvalidQuotient, "n^k != 1 (mod l) for n=" + std::to_string(n) + ", k=" +
                                                std::to_string(k) + ", l=" + std::to_string(l));
  if (k <= kPowerTableLimit) {
    auto table = std::make_shared<std::vector<std::uint64_t>>(k);
    std::uint64_t x = 1 % l;
    for (std::uint64_t i = 0; i < k; ++i, x = mulmod(x, h.n_mod_l_, l)) (*table)[i] = x;
    h.powers_ = std::move(table);
  }
  return h;
}

FiniteQuotient make_quotient(std::int64_t n, std::uint64_t k, std::uint64_t l) { return FiniteQuotient::make(n, k, l); }

std::uint64_t FiniteQuotient::n_pow(std::uint64_t e) const {
  if (powers_) return (*powers_)[e % k_];
  return modpow(n_mod_l_, e, l_);
}

QuotientElement FiniteQuotient::multiply(const QuotientElement& x, const QuotientElement& y) const {
  return {(x.i + y.i) % k_, (mulmod(x.j, n_pow(y.i), l_) + y.j) % l_};
}

QuotientElement FiniteQuotient::invert(const QuotientElement& x) const {
  std::uint64_t i = (k_ - x.i) % k_;
  std::uint64_t j = mulmod(x.j, n_pow(i), l_);
  return {i, (l_ - j) % l_};
}

namespace {

QuotientElement pow_raw(const FiniteQuotient& h, QuotientElement x, std::uint64_t e) {
  QuotientElement r = h.identity();
  while (e) {
    if (e & 1) r = h.multiply(r, x);
    x = h.multiply(x, x);
    e >>= 1;
  }
  return r;
}

}  // namespace

QuotientElement FiniteQuotient::power(const QuotientElement& x, const Int& e) const {
  QuotientElement base = e < 0 ? invert(x) : x;
  return pow_raw(*this, base, residue(abs(e), element_order(x)));
}

std::uint64_t FiniteQuotient::element_order(const QuotientElement& x) const {
  std::uint64_t oi = k_ / std::gcd(x.i, k_);
  QuotientElement y = pow_raw(*this, x, oi);
  return oi * (l_ / std::gcd(y.j, l_));
}

std::string FiniteQuotient::str() const {
  return "H_" + std::to_string(n_) + "(" + std::to_string(k_) + "," + std::to_string(l_) + ")";
}

QuotientElement evaluate(const FiniteQuotient& h, const Word& w) {
  QuotientElement x = h.identity();
  for (const auto& s : w.syllables()) {
    QuotientElement y = s.gen == Gen::A ? QuotientElement{residue(s.exp, h.k()), 0}
                                        : QuotientElement{0, residue(s.exp, h.l())};
    x = h.multiply(x, y);
  }
  return x;
}

bool relation_holds(const FiniteQuotient& h, const GroupParams& g) {
  // a^-1 b^m a = b^(m n_H) in H.
  return mod_floor(g.m * h.n() - g.n, from_uint64(h.l())) == 0;
}

QuotientElement evaluate(const FiniteQuotient& h, const GroupParams& g, const Word& w) {
  if (!relation_holds(h, g))
    throw Error(ErrorCode::RelationViolated, h.str() + " does not satisfy the relation of G(" + to_string(g.m) + "," +
                                                 to_string(g.n) + ")");
  return evaluate(h, w);
}

bool q_is_conjugate(const FiniteQuotient& h, const QuotientElement& x, const QuotientElement& y) {
  for (std::uint64_t i = 0; i < h.k(); ++i) {
    for (std::uint64_t j = 0; j < h.l(); ++j) {
      QuotientElement c{i, j};
      if (h.multiply(h.multiply(h.invert(c), x), c) == y) return true;
    }
  }
  return false;
}

bool bpowers_conjugate(const FiniteQuotient& h, const Int& r, const Int& s) {
  std::uint64_t rr = residue(r, h.l()), ss = residue(s, h.l());
  for (std::uint64_t x = 0; x < h.k(); ++x)
    if (mulmod(h.n_pow(x), rr, h.l()) == ss) return true;
  return false;
}

FiniteQuotient cyclic_witness(std::uint64_t c) {
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "cyclic quotient needs a positive order");
  return FiniteQuotient::make(1, c, 1);
}

// Permutations.

Perm::Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size());
  for (auto x : img_) {
    if (x >= img_.size() || seen[x]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint16_t>>& cycles) {
  Perm p = identity(degree);
  std::vector<bool> used(degree);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]]) throw Error(ErrorCode::InvalidArgument, "cycles overlap or exceed degree");
      used[c[i]] = true;
      p.img_[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

Perm Perm::parse(std::size_t degree, std::string_view text) {
  std::vector<std::vector<std::uint16_t>> cycles;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError(pos, "expected '('");
    ++pos;
    std::vector<std::uint16_t> cyc;
    skip();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError(pos, "expected a point");
      unsigned long v = std::stoul(std::string(text.substr(start, pos - start)));
      if (v < 1 || v > degree) throw ParseError(start, "point out of range");
      cyc.push_back(static_cast<std::uint16_t>(v - 1));
      skip();
      if (pos < text.size() && text[pos] == ',') ++pos;
      skip();
    }
    if (pos >= text.size()) throw ParseError(pos, "expected ')'");
    ++pos;
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const noexcept {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm p = *this;
  for (std::size_t x = 0; x < img_.size(); ++x) p.img_[img_[x]] = static_cast<std::uint16_t>(x);
  return p;
}

Perm operator*(const Perm& x, const Perm& y) {
  if (x.degree() != y.degree()) throw Error(ErrorCode::InvalidArgument, "permutation degrees differ");
  Perm p = x;
  for (std::size_t i = 0; i < p.img_.size(); ++i) p.img_[i] = y.img_[x.img_[i]];
  return p;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
  return o;
}

Perm Perm::pow(const Int& e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = residue(abs(e), order());
  Perm r = identity(degree());
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::vector<std::vector<std::uint16_t>> Perm::cycles() const {
  std::vector<std::vector<std::uint16_t>> out;
  std::vector<bool> seen(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    std::vector<std::uint16_t> c;
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      c.push_back(static_cast<std::uint16_t>(y));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::str() const {
  std::string out;
  for (const auto& c : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool PermQuotient::relation_holds(const GroupParams& g) const {
  return image_a.inverse() * image_b.pow(g.m) * image_a == image_b.pow(g.n);
}

Perm PermQuotient::evaluate(const Word& w) const {
  Perm r = Perm::identity(degree());
  for (const auto& s : w.syllables()) r = r * (s.gen == Gen::A ? image_a : image_b).pow(s.exp);
  return r;
}

std::string PermQuotient::str() const { return "a: " + image_a.str() + " b: " + image_b.str(); }

namespace {

void partitions(std::size_t rest, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(rest, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(rest - part, part, cur, out);
    cur.pop_back();
  }
}

Perm from_cycle_type(std::size_t degree, const std::vector<std::size_t>& type) {
  std::vector<std::vector<std::uint16_t>> cycles;
  std::uint16_t next = 0;
  for (auto len : type) {
    std::vector<std::uint16_t> c(len);
    std::iota(c.begin(), c.end(), next);
    next = static_cast<std::uint16_t>(next + len);
    cycles.push_back(std::move(c));
  }
  return Perm::from_cycles(degree, cycles);
}

// All alpha with alpha^-1 X alpha = Y, i.e. alpha(X(x)) = Y(alpha(x)), in lexicographic order
// of the image vector.
class ConjugatorSearch {
 public:
  ConjugatorSearch(const Perm& x, const Perm& y, const std::function<bool(const Perm&)>& visit)
      : x_(x), y_(y), visit_(visit), alpha_(x.degree(), kUnset), used_(x.degree()) {
    cycle_len_x_ = cycle_lengths(x_);
    cycle_len_y_ = cycle_lengths(y_);
  }

  bool run() { return extend(0); }

 private:
  static constexpr std::uint16_t kUnset = 0xffff;
  const Perm& x_;
  const Perm& y_;
  const std::function<bool(const Perm&)>& visit_;
  std::vector<std::uint16_t> alpha_;
  std::vector<bool> used_;
  std::vector<std::size_t> cycle_len_x_, cycle_len_y_;

  static std::vector<std::size_t> cycle_lengths(const Perm& p) {
    std::vector<std::size_t> len(p.degree(), 1);
    for (const auto& c : p.cycles())
      for (auto v : c) len[v] = c.size();
    return len;
  }

  bool extend(std::size_t from) {
    std::size_t x = from;
    while (x < alpha_.size() && alpha_[x] != kUnset) ++x;
    if (x == alpha_.size()) return visit_(Perm(alpha_));
    for (std::size_t y = 0; y < alpha_.size(); ++y) {
      if (used_[y] || cycle_len_y_[y] != cycle_len_x_[x]) continue;
      std::size_t len = cycle_len_x_[x];
      std::size_t px = x, py = y;
      for (std::size_t i = 0; i < len; ++i) {
        alpha_[px] = static_cast<std::uint16_t>(py);
        used_[py] = true;
        px = x_[px];
        py = y_[py];
      }
      bool go_on = extend(x + 1);
      for (std::size_t i = 0; i < len; ++i) {
        alpha_[px] = kUnset;
        used_[py] = false;
        px = x_[px];
        py = y_[py];
      }
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

bool enumerate_perm_quotients(const GroupParams& g, std::size_t max_degree,
                              const std::function<bool(const PermQuotient&)>& visit,
                              const PermSearchOptions& opts) {
  if (max_degree > 0xfffe) throw Error(ErrorCode::InvalidArgument, "degree too large");
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<std::vector<std::size_t>> types;
    std::vector<std::size_t> cur;
    partitions(d, d, cur, types);
    struct Candidate {
      std::uint64_t order;
      std::vector<std::size_t> type;
    };
    std::vector<Candidate> candidates;
    for (auto& t : types) {
      std::uint64_t o = 1;
      for (auto len : t) o = std::lcm(o, static_cast<std::uint64_t>(len));
      if (opts.b_order_bound && opts.b_order_bound % o != 0) continue;
      // Ascending parts, so the representative is lexicographically smallest-first.
      std::reverse(t.begin(), t.end());
      candidates.push_back({o, t});
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return a.order != b.order ? a.order < b.order : a.type < b.type;
    });
    for (const auto& cand : candidates) {
      Perm beta = from_cycle_type(d, cand.type);
      Perm x = beta.pow(g.m), y = beta.pow(g.n);
      std::size_t found = 0;
      bool stopped = false;
      std::function<bool(const Perm&)> on_alpha = [&](const Perm& alpha) {
        ++found;
        if (!visit(PermQuotient{alpha, beta})) {
          stopped = true;
          return false;
        }
        return true;
      };
      ConjugatorSearch(x, y, on_alpha).run();
      if (opts.trace)
        opts.trace->push_back("degree " + std::to_string(d) + ", b -> " + beta.str() + " (order " +
                              std::to_string(cand.order) + "): " + std::to_string(found) +
                              (stopped ? " images of a tried, stopped" : " images of a"));
      if (stopped) return false;
    }
  }
  return true;
}

std::optional<PermQuotient> perm_quotient_search(const GroupParams& g, const Word& target, std::size_t max_degree,
                                                 const PermSearchOptions& opts) {
  Int am = abs(g.m), an = abs(g.n);
  if (am != an) throw Error(ErrorCode::Precondition, "permutation search needs |n| = m");
  if (is_trivial(g, target)) throw Error(ErrorCode::Precondition, "target word is trivial in the group");
  std::optional<PermQuotient> hit;
  enumerate_perm_quotients(
      g, max_degree,
      [&](const PermQuotient& q) {
        if (q.evaluate(target).is_identity()) return true;
        hit = q;
        return false;
      },
      opts);
  return hit;
}

}  // namespace bsg
