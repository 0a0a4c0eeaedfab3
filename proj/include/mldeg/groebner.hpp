#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mldeg/poly.hpp"

namespace mldeg {

template <class K>
struct Ideal {
  RingPtr<K> ring;
  std::vector<Poly<K>> gens;
};

struct GBOptions {
  std::uint64_t pair_budget = 200000;  // S-pair reductions per call
};

template <class K>
struct GroebnerBasis {
  RingPtr<K> ring;
  std::vector<Poly<K>> elems;  // monic; when reduced: pairwise irreducible, sorted by descending lm
  bool reduced = false;
};

namespace detail {

/// Full normal form against a fixed divisor set.  `usable` restricts which
/// elements may be used; sugar, when given, is bumped by reduction steps.
template <class K>
class Reducer {
 public:
  Reducer(const std::vector<Poly<K>>& basis, const RingPtr<K>& ring)
      : basis_(basis), nv_(ring->nvars()), ord_(&ring->order) {}

  void set_sugars(const std::vector<std::uint32_t>* s) { sugars_ = s; }
  void set_skip(std::int64_t idx) { skip_ = idx; }

  Poly<K> reduce(const Poly<K>& f, std::uint32_t* sugar = nullptr) {
    if (f.is_zero()) return f;
    const auto ring = f.ring();
    work_.assign(f.terms().begin(), f.terms().end());
    out_.clear();
    std::size_t cur = 0;
    while (cur < work_.size()) {
      const Term<K>& lead = work_[cur];
      const int d = find_divisor(lead.m);
      if (d < 0) {
        out_.push_back(lead);
        ++cur;
        continue;
      }
      const Poly<K>& g = basis_[d];
      const Monomial q = quotient(lead.m, g.lm());
      const K c = lead.c / g.lc();
      if (sugar && sugars_) *sugar = std::max(*sugar, (*sugars_)[d] + q.deg);
      subtract_shifted(cur, g, q, c);
      cur = 0;
    }
    // leads encountered are strictly decreasing, so out_ is already sorted
    Poly<K> r(ring);
    return Poly<K>::from_terms(ring, std::move(out_));
  }

  std::int64_t last_hit = -1;

 private:
  int find_divisor(const Monomial& m) {
    if (last_hit >= 0 && last_hit != skip_ && last_hit < static_cast<std::int64_t>(basis_.size()) &&
        divides(basis_[last_hit].lm(), m))
      return static_cast<int>(last_hit);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (static_cast<std::int64_t>(i) == skip_) continue;
      if (divides(basis_[i].lm(), m)) {
        last_hit = static_cast<std::int64_t>(i);
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  // work_[cur+1..] - c * x^q * tail(g)  ->  work_
  void subtract_shifted(std::size_t cur, const Poly<K>& g, const Monomial& q, const K& c) {
    next_.clear();
    const auto& gt = g.terms();
    std::size_t i = cur + 1, j = 1;  // g's lead cancels the work lead exactly
    while (i < work_.size() && j < gt.size()) {
      const Monomial gm = gt[j].m * q;
      const int cmp = ord_->cmp(work_[i].m, gm, nv_);
      if (cmp > 0) {
        next_.push_back(work_[i++]);
      } else if (cmp < 0) {
        next_.push_back({gm, -(c * gt[j].c)});
        ++j;
      } else {
        K v = work_[i].c - c * gt[j].c;
        if (!mldeg::is_zero(v)) next_.push_back({work_[i].m, std::move(v)});
        ++i, ++j;
      }
    }
    for (; i < work_.size(); ++i) next_.push_back(work_[i]);
    for (; j < gt.size(); ++j) next_.push_back({gt[j].m * q, -(c * gt[j].c)});
    work_.swap(next_);
  }

  const std::vector<Poly<K>>& basis_;
  int nv_;
  const MonomialOrder* ord_;
  const std::vector<std::uint32_t>* sugars_ = nullptr;
  std::int64_t skip_ = -1;
  std::vector<Term<K>> work_, next_, out_;
};

template <class K>
class BuchbergerEngine {
 public:
  BuchbergerEngine(RingPtr<K> ring, GBOptions opts)
      : ring_(std::move(ring)), nv_(ring_->nvars()), opts_(opts), pairs_(PairCmp{this}) {}

  void add_input(const Poly<K>& f) {
    Reducer<K> red(g_, ring_);
    red.set_sugars(&sugars_);
    Poly<K> r = red.reduce(f);
    if (!r.is_zero()) insert(r.monic(), r.degree());
  }

  void run() {
    while (!pairs_.empty()) {
      if (++used_ > opts_.pair_budget)
        throw BudgetError("buchberger: pair budget exhausted (inconclusive)");
      SPair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Poly<K> s = spair_poly(g_[p.i], g_[p.j]);
      std::uint32_t sugar = p.sugar;
      Reducer<K> red(g_, ring_);
      red.set_sugars(&sugars_);
      Poly<K> r = red.reduce(s, &sugar);
      if (!r.is_zero()) insert(r.monic(), sugar);
    }
  }

  GroebnerBasis<K> reduced_basis() {
    // minimal subset: leading monomials pairwise non-dividing
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(g_.size()); ++i) {
      bool redundant = false;
      for (int j = 0; j < static_cast<int>(g_.size()) && !redundant; ++j) {
        if (i == j) continue;
        if (divides(g_[j].lm(), g_[i].lm())) {
          if (g_[j].lm() == g_[i].lm())
            redundant = j < i;
          else
            redundant = true;
        }
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<Poly<K>> minimal;
    minimal.reserve(keep.size());
    for (int i : keep) minimal.push_back(g_[i]);

    // tail-reduce each element against the others
    std::vector<Poly<K>> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly<K>> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Reducer<K> red(others, ring_);
      Poly<K> lead = Poly<K>::from_terms(ring_, {minimal[i].lt()});
      Poly<K> tail = minimal[i] - lead;
      out.push_back(lead + red.reduce(tail));
    }
    std::sort(out.begin(), out.end(), [&](const Poly<K>& a, const Poly<K>& b) {
      return ring_->order.cmp(a.lm(), b.lm(), nv_) > 0;
    });
    return GroebnerBasis<K>{ring_, std::move(out), true};
  }

 private:
  struct SPair {
    int i, j;
    Monomial l;
    std::uint32_t sugar;
  };
  struct PairCmp {
    const BuchbergerEngine* e;
    bool operator()(const SPair& a, const SPair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      const int c = e->ring_->order.cmp(a.l, b.l, e->nv_);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  Poly<K> spair_poly(const Poly<K>& f, const Poly<K>& g) const {
    const Monomial l = lcm(f.lm(), g.lm());
    return f.shifted(quotient(l, f.lm()), K(1) / f.lc()) -
           g.shifted(quotient(l, g.lm()), K(1) / g.lc());
  }

  // Gebauer-Moeller pair update
  void insert(Poly<K> h, std::uint32_t sugar) {
    const int t = static_cast<int>(g_.size());
    const Monomial& lh = h.lm();

    struct Cand {
      int i;
      Monomial l;
      bool cop;
    };
    std::vector<Cand> cand;
    for (int i = 0; i < t; ++i) {
      if (!pair_active_[i]) continue;
      cand.push_back({i, lcm(g_[i].lm(), lh), coprime(g_[i].lm(), lh)});
    }
    // criterion M: drop candidates whose lcm is properly divisible by another's
    std::vector<bool> dead(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (dead[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || dead[a]) continue;
        if (divides(cand[b].l, cand[a].l) && !(cand[b].l == cand[a].l)) dead[a] = true;
      }
    }
    // criterion F: one pair per lcm value; a coprime member kills the group
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (dead[a]) continue;
      bool group_coprime = cand[a].cop;
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        if (dead[b] || !(cand[b].l == cand[a].l)) continue;
        dead[b] = true;
        group_coprime = group_coprime || cand[b].cop;
      }
      if (group_coprime) dead[a] = true;  // Buchberger's product criterion
    }
    // criterion B on old pairs
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const SPair& p = *it;
      if (divides(lh, p.l) && !(lcm(g_[p.i].lm(), lh) == p.l) && !(lcm(g_[p.j].lm(), lh) == p.l))
        it = pairs_.erase(it);
      else
        ++it;
    }

    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (dead[a]) continue;
      const int i = cand[a].i;
      const Monomial& l = cand[a].l;
      const std::uint32_t s =
          std::max(sugars_[i] + (l.deg - g_[i].lm().deg), sugar + (l.deg - lh.deg));
      pairs_.insert(SPair{i, t, l, s});
    }

    // new lead supersedes old ones for future pair creation
    for (int i = 0; i < t; ++i)
      if (pair_active_[i] && divides(lh, g_[i].lm())) pair_active_[i] = false;

    g_.push_back(std::move(h));
    sugars_.push_back(sugar);
    pair_active_.push_back(true);
  }

  RingPtr<K> ring_;
  int nv_;
  GBOptions opts_;
  std::vector<Poly<K>> g_;
  std::vector<std::uint32_t> sugars_;
  std::vector<bool> pair_active_;
  std::multiset<SPair, PairCmp> pairs_;
  std::uint64_t used_ = 0;
};

}  // namespace detail

/// Full normal form of f modulo a set of polynomials (need not be a GB).
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& basis) {
  if (basis.empty()) return f;
  detail::Reducer<K> red(basis, f.ring());
  return red.reduce(f);
}

/// Reduced Groebner basis of I under the ring's own monomial order.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const GBOptions& opts = {}) {
  detail::BuchbergerEngine<K> eng(I.ring, opts);
  for (const auto& f : I.gens) eng.add_input(f);
  eng.run();
  return eng.reduced_basis();
}

/// Reduced Groebner basis under a different order (re-sorts into a new ring).
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const MonomialOrder& order,
                            const GBOptions& opts = {}) {
  auto ring2 = make_ring<K>(I.ring->vars, order, I.ring->proto);
  std::vector<int> id(I.ring->nvars());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  Ideal<K> J{ring2, {}};
  J.gens.reserve(I.gens.size());
  for (const auto& f : I.gens) J.gens.push_back(map_to_ring(f, ring2, id));
  return buchberger(J, opts);
}

/// S-polynomial for tests and the Buchberger-criterion re-check.
template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
  const Monomial l = lcm(f.lm(), g.lm());
  return f.shifted(quotient(l, f.lm()), K(1) / f.lc()) -
         g.shifted(quotient(l, g.lm()), K(1) / g.lc());
}

/// Vector-space dimension of ring/I from a reduced GB; nullopt == infinite.
template <class K>
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis<K>& gb) {
  const int nv = gb.ring->nvars();
  std::vector<Monomial> lts;
  lts.reserve(gb.elems.size());
  for (const auto& f : gb.elems) {
    if (f.is_zero()) continue;
    if (f.lm().is_one()) return 0;  // unit ideal
    lts.push_back(f.lm());
  }
  // finiteness: every variable needs a pure power among the leading terms
  std::vector<int> bound(nv, -1);
  for (const auto& m : lts) {
    int support = -1;
    bool pure = true;
    for (int v = 0; v < nv; ++v) {
      if (m.e[v] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = v;
    }
    if (pure && support >= 0)
      if (bound[support] < 0 || m.e[support] < bound[support]) bound[support] = m.e[support];
  }
  for (int v = 0; v < nv; ++v)
    if (bound[v] < 0) return std::nullopt;

  // group leading terms by their largest support variable
  std::vector<std::vector<const Monomial*>> by_maxvar(nv);
  for (const auto& m : lts) {
    int mv = -1;
    for (int v = 0; v < nv; ++v)
      if (m.e[v]) mv = v;
    if (mv >= 0) by_maxvar[mv].push_back(&m);
  }

  std::uint64_t count = 0, visited = 0;
  Monomial partial;
  auto dfs = [&](auto&& self, int v) -> void {
    if (++visited > 100000000ull) throw BudgetError("quotient_dimension: staircase too large");
    if (v == nv) {
      ++count;
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      partial.e[v] = static_cast<std::uint8_t>(e);
      bool divisible = false;
      for (const Monomial* m : by_maxvar[v])
        if (divides(*m, partial)) {
          divisible = true;
          break;
        }
      if (divisible) break;  // larger exponents stay divisible
      self(self, v + 1);
    }
    partial.e[v] = 0;
  };
  dfs(dfs, 0);
  return count;
}

/// Rabinowitsch trick: I + <y*f - 1> in a ring with one fresh variable y,
/// placed last so grevlex keeps the original staircase primary.
template <class K>
Ideal<K> saturate_rabinowitsch(const Ideal<K>& I, const Poly<K>& f) {
  if (f.is_zero()) throw InputError("saturate_rabinowitsch: f must be nonzero");
  std::string yname = "y";
  while (I.ring->var_index(yname) >= 0) yname += "_";
  auto vars = I.ring->vars;
  vars.push_back(yname);
  auto ring2 = make_ring<K>(std::move(vars), MonomialOrder::grevlex(), I.ring->proto);
  std::vector<int> id(I.ring->nvars());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  Ideal<K> J{ring2, {}};
  J.gens.reserve(I.gens.size() + 1);
  for (const auto& gen : I.gens) J.gens.push_back(map_to_ring(gen, ring2, id));
  Poly<K> y = Poly<K>::variable(ring2, ring2->nvars() - 1);
  J.gens.push_back(y * map_to_ring(f, ring2, id) -
                   Poly<K>::constant(ring2, ring2->from_int(1)));
  return J;
}

/// Elimination ideal I ∩ k[vars \ block] via a block order GB.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<int>& block, const GBOptions& opts = {}) {
  const int nv = I.ring->nvars();
  std::vector<bool> in_block(nv, false);
  for (int v : block) {
    if (v < 0 || v >= nv) throw InputError("eliminate: variable index out of range");
    in_block[v] = true;
  }
  // permuted ring with the block first
  std::vector<int> to_perm(nv, -1);
  std::vector<std::string> pvars;
  int k = 0;
  for (int v = 0; v < nv; ++v)
    if (in_block[v]) {
      to_perm[v] = k++;
      pvars.push_back(I.ring->vars[v]);
    }
  const int split = k;
  for (int v = 0; v < nv; ++v)
    if (!in_block[v]) {
      to_perm[v] = k++;
      pvars.push_back(I.ring->vars[v]);
    }
  auto elim_ring = make_ring<K>(std::move(pvars), MonomialOrder::block(split), I.ring->proto);
  Ideal<K> J{elim_ring, {}};
  for (const auto& g : I.gens) J.gens.push_back(map_to_ring(g, elim_ring, to_perm));
  GroebnerBasis<K> gb = buchberger(J, opts);

  std::vector<std::string> rest;
  std::vector<int> to_rest(nv, -1);
  int r = 0;
  for (int v = split; v < nv; ++v) {
    rest.push_back(elim_ring->vars[v]);
    to_rest[v] = r++;
  }
  auto out_ring = make_ring<K>(std::move(rest), MonomialOrder::grevlex(), I.ring->proto);
  Ideal<K> out{out_ring, {}};
  for (const auto& g : gb.elems) {
    bool block_free = true;
    for (const auto& t : g.terms())
      for (int v = 0; v < split && block_free; ++v)
        if (t.m.e[v]) block_free = false;
    if (block_free) out.gens.push_back(map_to_ring(g, out_ring, to_rest));
  }
  return out;
}

}  // namespace mldeg
