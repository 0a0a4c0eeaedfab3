#pragma once

#include <algorithm>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mldeg/gf.hpp"
#include "mldeg/monomial.hpp"
#include "mldeg/rational.hpp"

namespace mldeg {

template <class K>
struct PolyRing;
template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

/// Coefficient ring context: variable names, monomial order, field exemplar.
/// Polynomials hold a shared pointer; two rings are compatible when they
/// agree structurally (so rings built independently still interoperate).
template <class K>
struct PolyRing {
  std::vector<std::string> vars;
  MonomialOrder order;
  K proto{};  // carries the GF(p) modulus; value ignored

  int nvars() const { return static_cast<int>(vars.size()); }

  K from_int(long long x) const {
    if constexpr (std::is_same_v<K, Fp>) {
      return Fp::make(x, proto.p);
    } else {
      return K(x);
    }
  }

  K from_rational(const Rational& q) const {
    if constexpr (std::is_same_v<K, Fp>) {
      return FpField(proto.p).from(q);
    } else {
      return q;
    }
  }

  bool same_field(const PolyRing& o) const {
    if constexpr (std::is_same_v<K, Fp>) {
      return proto.p == o.proto.p;
    } else {
      return true;
    }
  }

  bool compatible(const PolyRing& o) const {
    return vars == o.vars && order.kind == o.order.kind && order.weights == o.order.weights &&
           order.block_split == o.order.block_split && same_field(o);
  }

  int var_index(std::string_view name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == name) return i;
    return -1;
  }
};

template <class K>
RingPtr<K> make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex(),
                     K proto = K()) {
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw BudgetError("ring exceeds the compile-time variable cap");
  auto r = std::make_shared<PolyRing<K>>();
  r->vars = std::move(vars);
  r->order = std::move(order);
  r->proto = proto;
  return r;
}

inline std::vector<std::string> numbered_vars(std::string_view stem, int count, int from = 1) {
  std::vector<std::string> v;
  v.reserve(count);
  for (int i = 0; i < count; ++i) v.push_back(std::string(stem) + std::to_string(from + i));
  return v;
}

template <class K>
struct Term {
  Monomial m;
  K c;
};

/// Sparse multivariate polynomial; terms sorted descending under the ring's
/// order, no zero coefficients stored.
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr<K> ring) { return Poly(std::move(ring)); }

  static Poly constant(RingPtr<K> ring, K c) {
    Poly p(std::move(ring));
    if (!mldeg::is_zero(c)) p.t_.push_back({Monomial::one(), std::move(c)});
    return p;
  }

  static Poly variable(RingPtr<K> ring, int i, int power = 1) {
    Poly p(ring);
    if (i < 0 || i >= ring->nvars()) throw InputError("variable index out of range");
    if (power == 0) return constant(std::move(ring), ring->from_int(1));
    p.t_.push_back({Monomial::var(i, power), ring->from_int(1)});
    return p;
  }

  static Poly from_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
    const int nv = ring->nvars();
    const auto& ord = ring->order;
    std::sort(terms.begin(), terms.end(),
              [&](const Term<K>& a, const Term<K>& b) { return ord.cmp(a.m, b.m, nv) > 0; });
    std::vector<Term<K>> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().m == t.m)
        out.back().c += t.c;
      else
        out.push_back(std::move(t));
      if (!out.empty() && mldeg::is_zero(out.back().c)) out.pop_back();
    }
    Poly p(std::move(ring));
    p.t_ = std::move(out);
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t nterms() const { return t_.size(); }

  const Term<K>& lt() const {
    if (t_.empty()) throw InputError("leading term of zero polynomial");
    return t_.front();
  }
  const Monomial& lm() const { return lt().m; }
  const K& lc() const { return lt().c; }

  /// Total degree (-1 for the zero polynomial).
  int degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m.deg));
    return d;
  }

  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_rings(a, b);
    Poly r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<Term<K>> prod;
    prod.reserve(a.t_.size() * b.t_.size());
    for (const auto& ta : a.t_)
      for (const auto& tb : b.t_) prod.push_back({ta.m * tb.m, ta.c * tb.c});
    return from_terms(a.ring_, std::move(prod));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Poly& a, const K& c) {
    Poly r(a.ring_);
    if (mldeg::is_zero(c)) return r;
    r.t_ = a.t_;
    for (auto& t : r.t_) t.c *= c;
    return r;
  }

  /// Multiplication by a single term (used heavily by reduction).
  Poly shifted(const Monomial& m, const K& c) const {
    Poly r(ring_);
    if (mldeg::is_zero(c)) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / lc());
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].m == b.t_[i].m) || !(a.t_[i].c == b.t_[i].c)) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Formal partial derivative with respect to variable `var`.
  Poly derivative(int var) const {
    std::vector<Term<K>> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
      if (t.m.e[var] == 0) continue;
      Term<K> d = t;
      d.c = t.c * ring_->from_int(t.m.e[var]);
      d.m.e[var] -= 1;
      d.m.deg -= 1;
      if (!mldeg::is_zero(d.c)) out.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(out));
  }

  K evaluate(const std::vector<K>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
      throw InputError("evaluate: point length != variable count");
    K acc = ring_->from_int(0);
    for (const auto& t : t_) {
      K v = t.c;
      for (int i = 0; i < ring_->nvars(); ++i)
        for (int k = 0; k < t.m.e[i]; ++k) v *= point[i];
      acc += v;
    }
    return acc;
  }

  /// Substitutes field scalars for a subset of the variables, returning a
  /// polynomial in the same ring.
  Poly substitute(const std::vector<std::pair<int, K>>& bindings) const {
    Poly acc(ring_);
    std::vector<Term<K>> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
      Term<K> nt = t;
      for (const auto& [var, val] : bindings) {
        for (int k = 0; k < nt.m.e[var]; ++k) nt.c *= val;
        nt.m.deg -= nt.m.e[var];
        nt.m.e[var] = 0;
      }
      if (!mldeg::is_zero(nt.c)) out.push_back(std::move(nt));
    }
    return from_terms(ring_, std::move(out));
  }

  /// Canonical text rendering: terms in the ring's descending order.
  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
      std::string c = coeff_str(t.c);
      bool neg = !c.empty() && c[0] == '-';
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      if (neg) c = c.substr(1);
      first = false;
      bool unit_coeff = (c == "1");
      if (!unit_coeff || t.m.is_one()) os << c;
      bool printed = !unit_coeff || t.m.is_one();
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (t.m.e[i] == 0) continue;
        if (printed) os << "*";
        os << ring_->vars[i];
        if (t.m.e[i] > 1) os << "^" << int(t.m.e[i]);
        printed = true;
      }
    }
    return os.str();
  }

  static void check_rings(const Poly& a, const Poly& b) {
    if (a.ring_ == b.ring_) return;
    if (!a.ring_ || !b.ring_ || !a.ring_->compatible(*b.ring_))
      throw InputError("polynomial ring mismatch");
  }

 private:
  static std::string coeff_str(const K& c) {
    if constexpr (std::is_same_v<K, Fp>) {
      return std::to_string(c.p ? c.v % c.p : c.v);
    } else {
      return to_string(c);
    }
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    check_rings(a, b);
    const auto ring = a.ring_ ? a.ring_ : b.ring_;
    Poly r(ring);
    r.t_.reserve(a.t_.size() + b.t_.size());
    const int nv = ring->nvars();
    const auto& ord = ring->order;
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
      int c = ord.cmp(a.t_[i].m, b.t_[j].m, nv);
      if (c > 0) {
        r.t_.push_back(a.t_[i++]);
      } else if (c < 0) {
        Term<K> t = b.t_[j++];
        if (subtract) t.c = -t.c;
        r.t_.push_back(std::move(t));
      } else {
        K v = subtract ? K(a.t_[i].c - b.t_[j].c) : K(a.t_[i].c + b.t_[j].c);
        if (!mldeg::is_zero(v)) r.t_.push_back({a.t_[i].m, std::move(v)});
        ++i, ++j;
      }
    }
    for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
    for (; j < b.t_.size(); ++j) {
      Term<K> t = b.t_[j];
      if (subtract) t.c = -t.c;
      r.t_.push_back(std::move(t));
    }
    return r;
  }

  RingPtr<K> ring_;
  std::vector<Term<K>> t_;
};

/// Maps a polynomial into another ring; var_map[i] is the index in `target`
/// of the source ring's i-th variable, or -1 if that variable must not occur.
template <class K>
Poly<K> map_to_ring(const Poly<K>& p, const RingPtr<K>& target, const std::vector<int>& var_map) {
  std::vector<Term<K>> out;
  out.reserve(p.nterms());
  for (const auto& t : p.terms()) {
    Term<K> nt{Monomial::one(), t.c};
    for (int i = 0; i < static_cast<int>(var_map.size()); ++i) {
      if (t.m.e[i] == 0) continue;
      if (var_map[i] < 0) throw InputError("map_to_ring: variable not present in target ring");
      nt.m.e[var_map[i]] = t.m.e[i];
      nt.m.deg += t.m.e[i];
    }
    out.push_back(std::move(nt));
  }
  return Poly<K>::from_terms(target, std::move(out));
}

// ---------------------------------------------------------------------------
// A small expression parser, mainly for tests and golden files.
// Grammar: expr := ['+'|'-'] term (('+'|'-') term)* ;
//          term := factor ('*' factor)* ;  factor := base ('^' uint)? ;
//          base := var | uint ['/' uint] | '(' expr ')'
// ---------------------------------------------------------------------------

namespace detail {

template <class K>
class PolyParser {
 public:
  PolyParser(RingPtr<K> ring, std::string_view s) : ring_(std::move(ring)), s_(s) {}

  Poly<K> parse() {
    Poly<K> r = expr();
    skip();
    if (pos_ != s_.size()) throw InputError("trailing characters in polynomial: '" + std::string(s_) + "'");
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<K> expr() {
    bool neg = false;
    skip();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly<K> acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Poly<K> term() {
    Poly<K> acc = factor();
    for (;;) {
      skip();
      if (eat('*'))
        acc *= factor();
      else
        break;
    }
    return acc;
  }

  Poly<K> factor() {
    Poly<K> b = base();
    skip();
    if (eat('^')) {
      long long e = integer();
      if (e < 0) throw InputError("negative exponent");
      Poly<K> r = Poly<K>::constant(ring_, ring_->from_int(1));
      for (long long i = 0; i < e; ++i) r *= b;
      return r;
    }
    return b;
  }

  Poly<K> base() {
    skip();
    if (pos_ >= s_.size()) throw InputError("unexpected end of polynomial");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<K> r = expr();
      if (!eat(')')) throw InputError("missing ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = integer();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        long long den = integer();
        return Poly<K>::constant(ring_, ring_->from_rational(Rational(num) / Rational(den)));
      }
      return Poly<K>::constant(ring_, ring_->from_int(num));
    }
    // identifier
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw InputError(std::string("unexpected character '") + c + "'");
    std::string name(s_.substr(start, pos_ - start));
    int idx = ring_->var_index(name);
    if (idx < 0) throw InputError("unknown variable '" + name + "'");
    return Poly<K>::variable(ring_, idx);
  }

  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw InputError("expected integer");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  RingPtr<K> ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class K>
Poly<K> parse_poly(const RingPtr<K>& ring, std::string_view s) {
  return detail::PolyParser<K>(ring, s).parse();
}

using PolyQ = Poly<Rational>;
using PolyFp = Poly<Fp>;

}  // namespace mldeg
