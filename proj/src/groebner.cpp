#include "homaloidal/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace homaloidal {

namespace {

using WPoly = std::vector<Term>;
using Cof = std::vector<WPoly>;

WPoly to_w(const Poly& p, const MonomialOrder& ord) {
  WPoly w = p.terms();
  std::sort(w.begin(), w.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  return w;
}

// c * x^m * g
WPoly scale_shift(const Field& F, const WPoly& g, const FieldElem& c,
                  const Monomial& m) {
  WPoly out;
  out.reserve(g.size());
  for (const auto& t : g) out.push_back({t.m.mul(m), F.mul(t.c, c)});
  return out;
}

// f[from..] - c * x^m * g, all sorted descending for ord
WPoly sub_scaled(const Field& F, const MonomialOrder& ord, const WPoly& f,
                 std::size_t from, const FieldElem& c, const Monomial& m,
                 const WPoly& g) {
  WPoly out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].m.mul(m);
    int cmp = ord.cmp(f[i].m, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, F.neg(F.mul(c, g[j].c))});
      ++j;
    } else {
      FieldElem s = F.sub(f[i].c, F.mul(c, g[j].c));
      if (!F.is_zero(s)) out.push_back({f[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].m.mul(m), F.neg(F.mul(c, g[j].c))});
  return out;
}

struct Budget {
  std::size_t steps_left;
  void spend() {
    if (steps_left == 0) throw BudgetExceeded("reduction step budget exhausted");
    --steps_left;
  }
};

// full normal form against an arbitrary basis list; when fcof is given the
// subtraction is mirrored onto the cofactor rows, basisC[k] being the
// cofactors of basis[k]
WPoly reduce_full(const Field& F, const MonomialOrder& ord, WPoly f,
                  const std::vector<const WPoly*>& basis, Budget& budget,
                  Cof* fcof = nullptr,
                  const std::vector<const Cof*>* basisC = nullptr) {
  WPoly out;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const WPoly* red = nullptr;
    std::size_t ri = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const WPoly* g = basis[k];
      if (!g->empty() && (*g)[0].m.divides(f[pos].m)) {
        red = g;
        ri = k;
        break;
      }
    }
    if (!red) {
      out.push_back(f[pos++]);
      continue;
    }
    budget.spend();
    FieldElem c = F.div(f[pos].c, (*red)[0].c);
    Monomial m = (*red)[0].m.div_into(f[pos].m);
    f = sub_scaled(F, ord, f, pos, c, m, *red);
    if (fcof) {
      const Cof& gc = *(*basisC)[ri];
      for (std::size_t k = 0; k < fcof->size(); ++k)
        (*fcof)[k] = sub_scaled(F, ord, (*fcof)[k], 0, c, m, gc[k]);
    }
    pos = 0;
  }
  return out;
}

struct Engine {
  const MonomialOrder& ord;
  RingPtr ring;
  const Field& F;
  Budget budget;
  std::size_t max_basis;
  bool traced;
  std::size_t ngens = 0;
  std::vector<WPoly> G;
  std::vector<Cof> C;  // parallel to G when traced

  struct Pair {
    int deg;
    Monomial lcm;
    int i, j;
  };
  struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.deg != b.deg) return a.deg < b.deg;
      int c = ord->cmp(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<Pair, PairLess> pairs;
  std::set<std::pair<int, int>> pending;

  Engine(const MonomialOrder& o, RingPtr r, const GBOptions& opt, bool tr)
      : ord(o),
        ring(std::move(r)),
        F(*ring->field()),
        budget{opt.max_steps},
        max_basis(opt.max_basis),
        traced(tr),
        pairs(PairLess{&o}) {}

  void normalize_elem(WPoly& w, Cof* cof) {
    if (w.empty()) return;
    FieldElem s = Poly::from_terms(ring, w).normalizing_factor();
    if (F.is_one(s)) return;
    for (auto& t : w) t.c = F.mul(t.c, s);
    if (cof)
      for (auto& row : *cof)
        for (auto& t : row) t.c = F.mul(t.c, s);
  }

  void add_pairs(int n) {
    for (int i = 0; i < n; ++i) {
      const Monomial& a = G[std::size_t(i)][0].m;
      const Monomial& b = G[std::size_t(n)][0].m;
      if (a.coprime(b)) continue;  // product criterion
      Monomial l = a.lcm(b);
      pairs.insert({l.degree(), l, i, n});
      pending.insert({i, n});
    }
  }

  void append(WPoly w, Cof cof) {
    if (G.size() >= max_basis)
      throw BudgetExceeded("basis size budget exhausted");
    int n = int(G.size());
    normalize_elem(w, traced ? &cof : nullptr);
    G.push_back(std::move(w));
    if (traced) C.push_back(std::move(cof));
    add_pairs(n);
  }

  bool chain_skip(const Pair& p) const {
    for (int k = 0; k < int(G.size()); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[std::size_t(k)][0].m.divides(p.lcm)) continue;
      auto key = [&](int a, int b) {
        return std::pair<int, int>(std::min(a, b), std::max(a, b));
      };
      if (pending.count(key(p.i, k))) continue;
      if (pending.count(key(p.j, k))) continue;
      return true;
    }
    return false;
  }

  std::vector<const WPoly*> basis_view() const {
    std::vector<const WPoly*> v;
    v.reserve(G.size());
    for (const auto& g : G) v.push_back(&g);
    return v;
  }

  std::vector<const Cof*> cof_view() const {
    std::vector<const Cof*> v;
    v.reserve(C.size());
    for (const auto& c : C) v.push_back(&c);
    return v;
  }

  void run() {
    while (!pairs.empty()) {
      Pair p = *pairs.begin();
      pairs.erase(pairs.begin());
      pending.erase({p.i, p.j});
      if (chain_skip(p)) continue;
      const WPoly& f = G[std::size_t(p.i)];
      const WPoly& g = G[std::size_t(p.j)];
      // s-polynomial: lcm/lt(f)*f/lc(f) - lcm/lt(g)*g/lc(g)
      Monomial mf = f[0].m.div_into(p.lcm);
      FieldElem cf = F.inv(f[0].c);
      Monomial mg = g[0].m.div_into(p.lcm);
      FieldElem cg = F.inv(g[0].c);
      WPoly red = sub_scaled(F, ord, scale_shift(F, f, cf, mf), 0, cg, mg, g);
      Cof cof;
      if (traced) {
        cof.resize(ngens);
        for (std::size_t k = 0; k < ngens; ++k)
          cof[k] = sub_scaled(F, ord,
                              scale_shift(F, C[std::size_t(p.i)][k], cf, mf), 0,
                              cg, mg, C[std::size_t(p.j)][k]);
      }
      auto bc = cof_view();
      WPoly nf = reduce_full(F, ord, std::move(red), basis_view(), budget,
                             traced ? &cof : nullptr, traced ? &bc : nullptr);
      if (!nf.empty()) append(std::move(nf), std::move(cof));
    }
  }

  std::vector<std::size_t> minimalize() const {
    // drop any element whose lead is divisible by another kept lead
    std::vector<char> keep(G.size(), 1);
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (G[i].empty()) {
        keep[i] = 0;
        continue;
      }
      for (std::size_t j = 0; j < G.size(); ++j) {
        if (i == j || !keep[j] || G[j].empty()) continue;
        if (G[j][0].m.divides(G[i][0].m) &&
            (!(G[i][0].m == G[j][0].m) || j < i)) {
          keep[i] = 0;
          break;
        }
      }
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < G.size(); ++i)
      if (keep[i]) kept.push_back(i);
    return kept;
  }

  TracedBasis finish() {
    std::vector<std::size_t> kept = minimalize();
    // reduced: every tail fully reduced against the other leads
    for (std::size_t a = 0; a < kept.size(); ++a) {
      std::vector<const WPoly*> others;
      std::vector<const Cof*> othersC;
      for (std::size_t b = 0; b < kept.size(); ++b) {
        if (b == a) continue;
        others.push_back(&G[kept[b]]);
        if (traced) othersC.push_back(&C[kept[b]]);
      }
      G[kept[a]] =
          reduce_full(F, ord, G[kept[a]], others, budget,
                      traced ? &C[kept[a]] : nullptr, traced ? &othersC : nullptr);
      normalize_elem(G[kept[a]], traced ? &C[kept[a]] : nullptr);
    }
    std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
      return ord.cmp(G[a][0].m, G[b][0].m) < 0;
    });
    TracedBasis out;
    out.basis.reserve(kept.size());
    for (std::size_t i : kept) {
      out.basis.push_back(Poly::from_terms(ring, G[i]));
      if (traced) {
        std::vector<Poly> row;
        row.reserve(ngens);
        for (const auto& w : C[i]) row.push_back(Poly::from_terms(ring, w));
        out.cofactors.push_back(std::move(row));
      }
    }
    return out;
  }
};

TracedBasis run_buchberger(const std::vector<Poly>& gens,
                           const MonomialOrder& ord, const GBOptions& opt,
                           bool traced) {
  RingPtr ring;
  for (const auto& g : gens)
    if (g.ring()) {
      ring = g.ring();
      break;
    }
  if (!ring) return {};
  Engine e(ord, ring, opt, traced);
  e.ngens = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    Cof cof;
    if (traced) {
      cof.resize(e.ngens);
      cof[i] = {Term{Monomial::one(), e.F.one()}};
    }
    auto bc = e.cof_view();
    WPoly w = reduce_full(e.F, ord, to_w(gens[i], ord), e.basis_view(),
                          e.budget, traced ? &cof : nullptr,
                          traced ? &bc : nullptr);
    if (!w.empty()) e.append(std::move(w), std::move(cof));
  }
  e.run();
  return e.finish();
}

}  // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens,
                                 const MonomialOrder& ord,
                                 const GBOptions& opt) {
  return run_buchberger(gens, ord, opt, false).basis;
}

TracedBasis groebner_basis_traced(const std::vector<Poly>& gens,
                                  const MonomialOrder& ord,
                                  const GBOptions& opt) {
  return run_buchberger(gens, ord, opt, true);
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& ord) {
  if (f.is_zero()) return f;
  const Field& F = *f.ring()->field();
  std::vector<WPoly> ws;
  ws.reserve(basis.size());
  for (const auto& b : basis)
    if (!b.is_zero()) ws.push_back(to_w(b, ord));
  std::vector<const WPoly*> view;
  view.reserve(ws.size());
  for (const auto& w : ws) view.push_back(&w);
  Budget budget{GBOptions{}.max_steps};
  WPoly r = reduce_full(F, ord, to_w(f, ord), view, budget);
  return Poly::from_terms(f.ring(), std::move(r));
}

bool in_ideal(const Poly& f, const std::vector<Poly>& gb,
              const MonomialOrder& ord) {
  return normal_form(f, gb, ord).is_zero();
}

}  // namespace homaloidal
