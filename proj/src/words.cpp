#include "bsg/words.hpp"

#include <cctype>

#include "bsg/error.hpp"

namespace bsg {

GroupParams GroupParams::make(const Int& m, const Int& n) {
  if (m == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "group parameters must be nonzero");
  return {m, n};
}

Word::Word(const std::vector<Syllable>& syllables) {
  for (const auto& s : syllables) append(s.gen, s.exp);
}

Word Word::a(const Int& e) {
  Word w;
  w.append(Gen::A, e);
  return w;
}

Word Word::b(const Int& e) {
  Word w;
  w.append(Gen::B, e);
  return w;
}

void Word::append(Gen g, const Int& e) {
  if (e == 0) return;
  if (!syl_.empty() && syl_.back().gen == g) {
    syl_.back().exp += e;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({g, e});
}

Word Word::inverse() const {
  Word w;
  w.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(long k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

std::string Word::str() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const auto& s : syl_) {
    if (!out.empty()) out += ' ';
    out += s.gen == Gen::A ? 'a' : 'b';
    if (s.exp != 1) out += '^' + to_string(s.exp);
  }
  return out;
}

Word operator*(const Word& x, const Word& y) {
  Word out = x;
  for (const auto& s : y.syl_) out.append(s.gen, s.exp);
  return out;
}

Word commutator(const Word& x, const Word& y) { return x.inverse() * y.inverse() * x * y; }

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = sequence();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }

  bool at_item_start() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == 'a' || c == 'b' || c == 'A' || c == 'B' || c == '(' || c == '[' || c == '1';
  }

  Word sequence() {
    Word w;
    while (at_item_start()) w = w * item();
    return w;
  }

  Int exponent() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    return parse_int(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word item() {
    char c = text_[pos_++];
    Word base;
    switch (c) {
      case 'a': base = Word::a(); break;
      case 'b': base = Word::b(); break;
      case 'A': base = Word::a(-1); break;
      case 'B': base = Word::b(-1); break;
      case '1': break;
      case '(': {
        base = sequence();
        expect(')');
        break;
      }
      case '[': {
        Word x = sequence();
        expect(',');
        Word y = sequence();
        expect(']');
        base = commutator(x, y);
        break;
      }
    }
    Int e = exponent();
    if (base.size() == 1) {
      const auto& s = base.syllables().front();
      return Word({{s.gen, s.exp * e}});
    }
    if (!fits_int64(e) || abs(e) > 1'000'000) fail("group exponent too large");
    return base.pow(to_int64(e));
  }
};

void check_bits(const Int& e, const ReduceOptions& opts) {
  if (bit_length(e) > opts.max_bits)
    throw Error(ErrorCode::Resource,
                "exponent exceeds " + std::to_string(opts.max_bits) + " bits during reduction");
}

// Stack of syllables kept freely reduced and free of pinches; a-letters are pushed one at a
// time so each pinch consumes exactly one letter from each side.
class BrittonStack {
 public:
  BrittonStack(const GroupParams& g, const ReduceOptions& opts)
      : m_(g.m), n_(g.n), unimodular_(abs(g.m) == abs(g.n)), flip_(sgn(g.m) != sgn(g.n)), opts_(opts) {}

  void push_b(const Int& e) {
    if (e == 0) return;
    if (!st_.empty() && st_.back().gen == Gen::B) {
      st_.back().exp += e;
      if (st_.back().exp == 0) st_.pop_back();
      else check_bits(st_.back().exp, opts_);
      return;
    }
    check_bits(e, opts_);
    st_.push_back({Gen::B, e});
  }

  void push_a(const Int& e) {
    const int dir = sgn(e);
    Int remaining = abs(e);
    while (remaining > 0) {
      if (st_.empty()) {
        st_.push_back({Gen::A, dir * remaining});
        return;
      }
      Syllable& top = st_.back();
      if (top.gen == Gen::A) {
        if (sgn(top.exp) == dir) {
          top.exp += dir * remaining;
          return;
        }
        Int c = std::min(Int(abs(top.exp)), remaining);
        top.exp += dir * c;
        remaining -= c;
        if (top.exp == 0) st_.pop_back();
        continue;
      }
      if (st_.size() < 2 || sgn(st_[st_.size() - 2].exp) == dir) {
        st_.push_back({Gen::A, dir * remaining});
        return;
      }
      // a^-dir b^j a^dir
      Syllable& below = st_[st_.size() - 2];
      const Int& from = dir > 0 ? m_ : n_;
      const Int& to = dir > 0 ? n_ : m_;
      if (!divides(from, top.exp)) {
        st_.push_back({Gen::A, dir * remaining});
        return;
      }
      Int count = 1;
      Int j;
      if (unimodular_) {
        count = std::min(Int(abs(below.exp)), remaining);
        j = (flip_ && mpz_odd_p(count.get_mpz_t())) ? Int(-top.exp) : top.exp;
      } else {
        j = top.exp / from * to;
      }
      st_.pop_back();
      Syllable& a_syl = st_.back();
      a_syl.exp += dir * count;
      remaining -= count;
      if (a_syl.exp == 0) st_.pop_back();
      push_b(j);
    }
  }

  Word take() { return Word(st_); }

 private:
  Int m_, n_;
  bool unimodular_;
  bool flip_;
  const ReduceOptions& opts_;
  std::vector<Syllable> st_;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

Word britton_reduce(const GroupParams& g, const Word& w, const ReduceOptions& opts) {
  BrittonStack st(g, opts);
  for (const auto& s : w.syllables()) {
    if (s.gen == Gen::A)
      st.push_a(s.exp);
    else
      st.push_b(s.exp);
  }
  return st.take();
}

bool is_britton_reduced(const GroupParams& g, const Word& w) {
  const auto& syl = w.syllables();
  for (std::size_t i = 1; i + 1 < syl.size(); ++i) {
    if (syl[i].gen != Gen::B) continue;
    int left = sgn(syl[i - 1].exp), right = sgn(syl[i + 1].exp);
    if (left == right) continue;
    const Int& from = left < 0 ? g.m : g.n;
    if (divides(from, syl[i].exp)) return false;
  }
  return true;
}

bool is_trivial(const GroupParams& g, const Word& w, const ReduceOptions& opts) {
  return britton_reduce(g, w, opts).empty();
}

bool are_equal(const GroupParams& g, const Word& x, const Word& y, const ReduceOptions& opts) {
  return is_trivial(g, x * y.inverse(), opts);
}

Int a_exponent_sum(const Word& w) {
  Int sum = 0;
  for (const auto& s : w.syllables())
    if (s.gen == Gen::A) sum += s.exp;
  return sum;
}

std::optional<Int> cyclic_subgroup_membership(const GroupParams& g, const Word& w, const ReduceOptions& opts) {
  Word r = britton_reduce(g, w, opts);
  if (r.empty()) return Int(0);
  if (r.size() == 1 && r.syllables().front().gen == Gen::B) return r.syllables().front().exp;
  return std::nullopt;
}

Word SolvableNormalForm::word() const {
  Word w = Word::a(p);
  w.append(Gen::B, s);
  w.append(Gen::A, -q);
  return w;
}

namespace {

unsigned long small_exponent(const Int& e, const Int& n, const Int& s, const ReduceOptions& opts) {
  // n^e multiplies a nonzero s; refuse before the power itself gets out of hand.
  if (!fits_uint64(e)) throw Error(ErrorCode::Resource, "a-exponent too large for normal form");
  unsigned long k = to_uint64(e);
  if (s != 0 && abs(n) > 1 && bit_length(s) + (bit_length(n) - 1) * k > opts.max_bits)
    throw Error(ErrorCode::Resource, "exponent exceeds " + std::to_string(opts.max_bits) + " bits in normal form");
  return k;
}

void normalize(SolvableNormalForm& f, const Int& n) {
  if (abs(n) == 1) {
    Int c = std::min(f.p, f.q);
    if (n < 0 && mpz_odd_p(c.get_mpz_t())) f.s = -f.s;
    f.p -= c;
    f.q -= c;
  } else {
    while (f.p > 0 && f.q > 0 && f.s != 0 && divides(n, f.s)) {
      f.s /= n;
      --f.p;
      --f.q;
    }
  }
  if (f.s == 0) {
    Int t = f.p - f.q;
    f.p = t > 0 ? t : Int(0);
    f.q = t < 0 ? Int(-t) : Int(0);
  }
}

}  // namespace

SolvableNormalForm solvable_normal_form(const Int& n, const Word& w, const ReduceOptions& opts) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be nonzero");
  SolvableNormalForm f{0, 0, 0};
  for (const auto& syl : w.syllables()) {
    if (syl.gen == Gen::B) {
      // a^-q b^e a^q = b^(e n^q)
      f.s += syl.exp * pow_int(n, small_exponent(f.q, n, syl.exp, opts));
      check_bits(f.s, opts);
    } else if (syl.exp < 0) {
      f.q -= syl.exp;
    } else if (f.q >= syl.exp) {
      f.q -= syl.exp;
    } else {
      // b^s a^c = a^c b^(s n^c)
      Int c = syl.exp - f.q;
      f.q = 0;
      f.s *= pow_int(n, small_exponent(c, n, f.s, opts));
      f.p += c;
    }
    normalize(f, n);
  }
  return f;
}

}  // namespace bsg
