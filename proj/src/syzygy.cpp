#include "homaloidal/syzygy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "homaloidal/groebner.hpp"

namespace homaloidal {

namespace {

// Buchberger over a free module R^k with a position-over-term order:
// component 0 dominates component 1 dominates ... and ties fall back to
// the ring order. Small and criterion-free; the inputs here are at most
// four module generators, so shortcuts would buy nothing.

struct MTerm {
  int comp;
  Monomial m;
  FieldElem c;
};
using MPoly = std::vector<MTerm>;

struct MOrder {
  const MonomialOrder* ord;

  // compare (comp, monomial) keys; lower component wins
  int cmp(int ac, const Monomial& am, int bc, const Monomial& bm) const {
    if (ac != bc) return ac < bc ? 1 : -1;
    return ord->cmp(am, bm);
  }
};

struct MBudget {
  std::size_t steps_left;
  void spend() {
    if (steps_left == 0) throw BudgetExceeded("module reduction budget exhausted");
    --steps_left;
  }
};

// c * x^m * g
MPoly m_scale_shift(const Field& F, const MPoly& g, const FieldElem& c,
                    const Monomial& m) {
  MPoly out;
  out.reserve(g.size());
  for (const auto& t : g) out.push_back({t.comp, t.m.mul(m), F.mul(t.c, c)});
  return out;
}

// f[from..] - c * x^m * g, both sorted descending
MPoly m_sub_scaled(const Field& F, const MOrder& mo, const MPoly& f,
                   std::size_t from, const FieldElem& c, const Monomial& m,
                   const MPoly& g) {
  MPoly out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].m.mul(m);
    int cmp = mo.cmp(f[i].comp, f[i].m, g[j].comp, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({g[j].comp, gm, F.neg(F.mul(c, g[j].c))});
      ++j;
    } else {
      FieldElem s = F.sub(f[i].c, F.mul(c, g[j].c));
      if (!F.is_zero(s)) out.push_back({f[i].comp, f[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j)
    out.push_back({g[j].comp, g[j].m.mul(m), F.neg(F.mul(c, g[j].c))});
  return out;
}

MPoly m_reduce_full(const Field& F, const MOrder& mo, MPoly f,
                    const std::vector<MPoly>& basis, MBudget& budget) {
  MPoly out;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const MPoly* red = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && g[0].comp == f[pos].comp && g[0].m.divides(f[pos].m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      out.push_back(f[pos++]);
      continue;
    }
    budget.spend();
    Monomial q = (*red)[0].m.div_into(f[pos].m);
    FieldElem c = F.div(f[pos].c, (*red)[0].c);
    f = m_sub_scaled(F, mo, f, pos, c, q, *red);
    pos = 0;
  }
  return out;
}

void m_make_monic(const Field& F, MPoly& w) {
  if (w.empty()) return;
  FieldElem inv = F.inv(w[0].c);
  if (F.is_one(inv)) return;
  for (auto& t : w) t.c = F.mul(t.c, inv);
}

// reduced module basis: leads pairwise non-dividing, tails fully reduced,
// leading coefficients one, sorted by lead key ascending
std::vector<MPoly> module_groebner(const Field& F, const MOrder& mo,
                                   std::vector<MPoly> gens,
                                   const GBOptions& opt) {
  MBudget budget{opt.max_steps};
  std::vector<MPoly> G;
  for (auto& g : gens) {
    std::sort(g.begin(), g.end(), [&](const MTerm& a, const MTerm& b) {
      return mo.cmp(a.comp, a.m, b.comp, b.m) > 0;
    });
    MPoly r = m_reduce_full(F, mo, std::move(g), G, budget);
    if (r.empty()) continue;
    m_make_monic(F, r);
    G.push_back(std::move(r));
  }

  struct Pair {
    std::size_t i, j;
    int deg;
    int comp;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (G[i][0].comp != G[j][0].comp) continue;
      Monomial l;
      for (int v = 0; v < kMaxVars; ++v)
        l.e[v] = std::max(G[i][0].m.e[v], G[j][0].m.e[v]);
      pairs.push_back({i, j, l.degree(), G[i][0].comp});
    }
  };
  for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].deg < pairs[best].deg) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + std::ptrdiff_t(best));

    const MPoly& a = G[p.i];
    const MPoly& b = G[p.j];
    Monomial lcm;
    for (int v = 0; v < kMaxVars; ++v)
      lcm.e[v] = std::max(a[0].m.e[v], b[0].m.e[v]);
    Monomial ma = a[0].m.div_into(lcm);
    Monomial mb = b[0].m.div_into(lcm);
    budget.spend();
    MPoly s = m_scale_shift(F, a, F.inv(a[0].c), ma);
    s = m_sub_scaled(F, mo, s, 0, F.inv(b[0].c), mb, b);
    s = m_reduce_full(F, mo, std::move(s), G, budget);
    if (s.empty()) continue;
    m_make_monic(F, s);
    if (G.size() >= opt.max_basis)
      throw BudgetExceeded("module basis size budget exhausted");
    G.push_back(std::move(s));
    push_pairs(G.size() - 1);
  }

  // keep lead-minimal elements, then reduce the survivors' tails
  std::vector<bool> drop(G.size(), false);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || drop[j]) continue;
      if (G[j][0].comp == G[i][0].comp && G[j][0].m.divides(G[i][0].m) &&
          !(j > i && G[j][0].m == G[i][0].m)) {
        drop[i] = true;
        break;
      }
    }
  }
  std::vector<MPoly> kept;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (!drop[i]) kept.push_back(std::move(G[i]));

  std::vector<MPoly> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    MPoly r = m_reduce_full(F, mo, kept[i], others, budget);
    if (!r.empty()) m_make_monic(F, r);
    out.push_back(std::move(r));
  }
  std::vector<MPoly> fin;
  for (auto& w : out)
    if (!w.empty()) fin.push_back(std::move(w));
  std::sort(fin.begin(), fin.end(), [&](const MPoly& x, const MPoly& y) {
    return mo.cmp(x[0].comp, x[0].m, y[0].comp, y[0].m) < 0;
  });
  return fin;
}

MPoly column_to_mpoly(const std::array<Poly, 3>& col, const MOrder& mo) {
  MPoly w;
  for (int r = 0; r < 3; ++r)
    for (const auto& t : col[std::size_t(r)].terms()) w.push_back({r, t.m, t.c});
  std::sort(w.begin(), w.end(), [&](const MTerm& a, const MTerm& b) {
    return mo.cmp(a.comp, a.m, b.comp, b.m) > 0;
  });
  return w;
}

std::array<Poly, 3> mpoly_to_column(const RingPtr& ring, const MPoly& w,
                                    int first_comp) {
  std::array<Poly, 3> col{Poly::zero(ring), Poly::zero(ring), Poly::zero(ring)};
  std::array<std::vector<Term>, 3> parts;
  for (const auto& t : w) {
    int r = t.comp - first_comp;
    if (r < 0 || r > 2) throw InconsistentResult("stray module component");
    parts[std::size_t(r)].push_back({t.m, t.c});
  }
  for (int r = 0; r < 3; ++r)
    col[std::size_t(r)] = Poly::from_terms(ring, std::move(parts[std::size_t(r)]));
  return col;
}

int column_degree(const std::array<Poly, 3>& col) {
  int deg = -1;
  for (const auto& p : col) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous())
      throw InconsistentResult("inhomogeneous relation entry");
    if (deg < 0)
      deg = p.total_degree();
    else if (deg != p.total_degree())
      throw InconsistentResult("relation entries of mixed degrees");
  }
  if (deg < 0) throw InconsistentResult("zero relation column");
  return deg;
}

void scale_column(std::array<Poly, 3>& col) {
  for (const auto& p : col) {
    if (p.is_zero()) continue;
    FieldElem s = p.normalizing_factor();
    for (auto& q : col) q = q.scale(s);
    return;
  }
}

// membership of a column in the module spanned by `span` inside R^3
bool column_in_span(const std::array<Poly, 3>& col,
                    const std::vector<std::array<Poly, 3>>& span,
                    const Field& F, const MOrder& mo, const GBOptions& opt) {
  if (span.empty()) return false;
  std::vector<MPoly> gens;
  gens.reserve(span.size());
  for (const auto& s : span) gens.push_back(column_to_mpoly(s, mo));
  std::vector<MPoly> gb = module_groebner(F, mo, std::move(gens), opt);
  MBudget budget{opt.max_steps};
  MPoly r = m_reduce_full(F, mo, column_to_mpoly(col, mo), gb, budget);
  return r.empty();
}

// normal form of a column against the module generated by `span`
std::array<Poly, 3> column_reduce(const std::array<Poly, 3>& col,
                                  const std::vector<std::array<Poly, 3>>& span,
                                  const RingPtr& ring, const Field& F,
                                  const MOrder& mo, const GBOptions& opt) {
  if (span.empty()) return col;
  std::vector<MPoly> gens;
  gens.reserve(span.size());
  for (const auto& s : span) gens.push_back(column_to_mpoly(s, mo));
  std::vector<MPoly> gb = module_groebner(F, mo, std::move(gens), opt);
  MBudget budget{opt.max_steps};
  MPoly r = m_reduce_full(F, mo, column_to_mpoly(col, mo), gb, budget);
  return mpoly_to_column(ring, r, 0);
}

std::vector<Poly> pair_power_gens(const RingPtr& ring, int u, int v, int k) {
  std::vector<Poly> gens;
  if (k <= 0) {
    gens.push_back(Poly::constant(ring, ring->field()->one()));
    return gens;
  }
  for (int a = k; a >= 0; --a) {
    Monomial m;
    m.e[std::size_t(u)] = std::uint16_t(a);
    m.e[std::size_t(v)] = std::uint16_t(k - a);
    gens.push_back(Poly::monomial(ring, m, ring->field()->one()));
  }
  return gens;
}

}  // namespace

std::vector<std::array<Poly, 3>> syzygies(const std::array<Poly, 3>& g,
                                          const MonomialOrder& ring_order,
                                          const GBOptions& opt) {
  RingPtr ring;
  for (const auto& p : g)
    if (p.ring()) ring = p.ring();
  if (!ring) throw MathError("relations of an empty row");
  for (const auto& p : g)
    if (p.ring() && !Ring::same(*p.ring(), *ring))
      throw MathError("relation generators live in different rings");

  int deg = -1;
  bool any = false;
  for (const auto& p : g) {
    if (p.is_zero()) continue;
    any = true;
    if (!p.is_homogeneous())
      throw MathError("relations need homogeneous generators");
    if (deg < 0)
      deg = p.total_degree();
    else if (deg != p.total_degree())
      throw MathError("relations need generators of one degree");
  }
  if (!any) throw MathError("relations of the zero row");

  const Field& F = *ring->field();
  MOrder mo{&ring_order};

  // tag row: component 0 carries the forms, components 1..3 the standard
  // basis; basis elements free of component 0 are exactly the relations
  std::vector<MPoly> gens;
  for (int i = 0; i < 3; ++i) {
    MPoly w;
    for (const auto& t : g[std::size_t(i)].terms()) w.push_back({0, t.m, t.c});
    w.push_back({i + 1, Monomial::one(), F.one()});
    gens.push_back(std::move(w));
  }
  std::vector<MPoly> gb = module_groebner(F, mo, std::move(gens), opt);

  std::vector<std::array<Poly, 3>> raw;
  for (const auto& w : gb) {
    if (w.empty() || w[0].comp == 0) continue;
    raw.push_back(mpoly_to_column(ring, w, 1));
  }

  std::stable_sort(raw.begin(), raw.end(),
                   [](const std::array<Poly, 3>& a, const std::array<Poly, 3>& b) {
                     return column_degree(a) < column_degree(b);
                   });

  // degree-ascending pruning keeps exactly one minimal generating set
  std::vector<std::array<Poly, 3>> kept;
  for (const auto& cand : raw) {
    if (!column_in_span(cand, kept, F, mo, opt)) kept.push_back(cand);
  }

  // canonical shape: reduce every column by the span of the earlier ones
  for (std::size_t k = 1; k < kept.size(); ++k) {
    std::vector<std::array<Poly, 3>> earlier(kept.begin(),
                                             kept.begin() + std::ptrdiff_t(k));
    kept[k] = column_reduce(kept[k], earlier, ring, F, mo, opt);
  }
  for (auto& col : kept) scale_column(col);

  for (const auto& col : kept) {
    Poly dot = Poly::zero(ring);
    for (int i = 0; i < 3; ++i)
      dot = dot.add(col[std::size_t(i)].mul(g[std::size_t(i)]));
    if (!dot.is_zero())
      throw InconsistentResult("relation column fails its dot product");
  }
  return kept;
}

std::vector<std::array<Poly, 3>> syzygies(const std::array<Poly, 3>& g,
                                          const GBOptions& opt) {
  RingPtr ring;
  for (const auto& p : g)
    if (p.ring()) ring = p.ring();
  if (!ring) throw MathError("relations of an empty row");
  return syzygies(g, MonomialOrder::degrevlex(ring->nvars()), opt);
}

PresentationMatrix minimal_presentation(const std::array<Poly, 3>& g,
                                        const MonomialOrder& ring_order,
                                        const GBOptions& opt) {
  std::vector<std::array<Poly, 3>> cols = syzygies(g, ring_order, opt);
  PresentationMatrix M;
  for (const auto& p : g)
    if (p.ring()) M.ring = p.ring();
  M.source = g;
  M.columns = std::move(cols);
  for (const auto& c : M.columns) M.column_degrees.push_back(column_degree(c));
  return M;
}

PresentationMatrix minimal_presentation(const std::array<Poly, 3>& g,
                                        const GBOptions& opt) {
  RingPtr ring;
  for (const auto& p : g)
    if (p.ring()) ring = p.ring();
  if (!ring) throw MathError("relations of an empty row");
  return minimal_presentation(g, MonomialOrder::degrevlex(ring->nvars()), opt);
}

std::array<Poly, 3> signed_minors(const PresentationMatrix& M) {
  if (M.width() != 2)
    throw NotDeterminantal("signed minors need a two column presentation");
  const auto& a = M.columns[0];
  const auto& b = M.columns[1];
  auto det = [&](int r, int s) {
    return a[std::size_t(r)].mul(b[std::size_t(s)]).sub(
        a[std::size_t(s)].mul(b[std::size_t(r)]));
  };
  return {det(1, 2), det(0, 2).neg(), det(0, 1)};
}

MinorMatch minors_match_source(const PresentationMatrix& M) {
  MinorMatch res;
  res.minors = signed_minors(M);
  const Field& F = *M.ring->field();
  res.scalar = F.one();

  int pick = -1;
  for (int j = 0; j < 3; ++j) {
    if (!M.source[std::size_t(j)].is_zero() &&
        !res.minors[std::size_t(j)].is_zero()) {
      pick = j;
      break;
    }
  }
  if (pick < 0) {
    res.holds = false;
    return res;
  }
  const Poly& s = M.source[std::size_t(pick)];
  const Poly& m = res.minors[std::size_t(pick)];
  if (!(s.terms()[0].m == m.terms()[0].m)) {
    res.holds = false;
    return res;
  }
  FieldElem lambda = F.div(s.terms()[0].c, m.terms()[0].c);
  for (int j = 0; j < 3; ++j) {
    if (!M.source[std::size_t(j)].equal(
            res.minors[std::size_t(j)].scale(lambda))) {
      res.holds = false;
      return res;
    }
  }
  res.holds = true;
  res.scalar = lambda;
  return res;
}

FittingReport fitting_ideal(const PresentationMatrix& M, const GBOptions& opt) {
  if (!M.ring || M.ring->nvars() < 3)
    throw MathError("entry ideal needs a three variable ring");
  std::vector<Poly> entries;
  for (const auto& col : M.columns)
    for (const auto& p : col)
      if (!p.is_zero()) entries.push_back(p);
  if (entries.empty()) throw MathError("presentation with no entries");

  FittingReport rep{Ideal::make(M.ring, entries), {false, false, false, false}, -1};

  const std::array<std::vector<int>, 4> candidates = {
      std::vector<int>{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}};
  MonomialOrder ord = MonomialOrder::degrevlex(M.ring->nvars());
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    std::vector<Poly> vars;
    for (int v : candidates[k]) vars.push_back(Poly::variable(M.ring, v));
    bool inside = true;
    for (const auto& p : entries) {
      if (!in_ideal(p, vars, ord)) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    bool covers = true;
    for (const auto& v : vars) {
      if (!in_radical(v, rep.entries, opt)) {
        covers = false;
        break;
      }
    }
    rep.radical_is[k] = covers;
    if (covers && rep.which < 0) rep.which = int(k);
  }
  return rep;
}

NaiveDegrees naive_degrees(const PresentationMatrix& M) {
  if (M.width() != 2)
    throw NotDeterminantal("section counts need a two column presentation");
  long long a = M.column_degrees[0];
  long long b = M.column_degrees[1];
  return {a * b, a + b, 1};
}

HypothesisReport birationality_hypotheses(const PresentationMatrix& M, int n,
                                          std::optional<std::pair<int, int>> pair,
                                          const GBOptions& opt) {
  if (M.width() != 2)
    throw NotDeterminantal("hypotheses apply to two column presentations");
  if (n < 2) throw MathError("torsion weight parameter below two");
  const RingPtr& ring = M.ring;
  MonomialOrder ord = MonomialOrder::degrevlex(ring->nvars());

  auto evaluate = [&](int u, int v) {
    HypothesisReport rep;
    rep.u = u;
    rep.v = v;
    rep.n = n;

    std::vector<Poly> pair_vars = {Poly::variable(ring, u),
                                   Poly::variable(ring, v)};
    rep.first_column_linear_in_pair = true;
    for (const auto& p : M.columns[0]) {
      if (p.is_zero()) continue;
      if (p.total_degree() != 1 || !in_ideal(p, pair_vars, ord)) {
        rep.first_column_linear_in_pair = false;
        break;
      }
    }

    std::vector<Poly> power = pair_power_gens(ring, u, v, n - 2);
    rep.second_column_in_power = true;
    for (const auto& p : M.columns[1]) {
      if (p.is_zero()) continue;
      if (p.total_degree() != n - 1 || !in_ideal(p, power, ord)) {
        rep.second_column_in_power = false;
        break;
      }
    }

    std::vector<Poly> higher = pair_power_gens(ring, u, v, n - 1);
    rep.second_column_escapes = false;
    for (const auto& p : M.columns[1]) {
      if (!p.is_zero() && !in_ideal(p, higher, ord)) {
        rep.second_column_escapes = true;
        break;
      }
    }

    std::array<Poly, 3> minors = signed_minors(M);
    std::vector<Poly> mg;
    for (const auto& p : minors)
      if (!p.is_zero()) mg.push_back(p);
    if (mg.empty()) {
      rep.minors_height_two = false;
    } else {
      rep.minors_height_two =
          (krull_dimension(Ideal::make(ring, mg), opt) == 1);
    }
    return rep;
  };

  if (pair) return evaluate(pair->first, pair->second);

  const std::array<std::pair<int, int>, 3> tries = {
      std::make_pair(0, 1), std::make_pair(1, 2), std::make_pair(0, 2)};
  HypothesisReport first = evaluate(tries[0].first, tries[0].second);
  if (first.all()) return first;
  for (std::size_t k = 1; k < tries.size(); ++k) {
    HypothesisReport rep = evaluate(tries[k].first, tries[k].second);
    if (rep.all()) return rep;
  }
  return first;
}

std::string pretty(const PresentationMatrix& M) {
  std::vector<std::vector<std::string>> cells(3);
  std::vector<std::size_t> widths(std::size_t(M.width()), 0);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < M.width(); ++c) {
      std::string s = M.columns[std::size_t(c)][std::size_t(r)].str();
      widths[std::size_t(c)] = std::max(widths[std::size_t(c)], s.size());
      cells[std::size_t(r)].push_back(std::move(s));
    }
  }
  std::ostringstream out;
  for (int r = 0; r < 3; ++r) {
    out << "[ ";
    for (int c = 0; c < M.width(); ++c) {
      const std::string& s = cells[std::size_t(r)][std::size_t(c)];
      out << s << std::string(widths[std::size_t(c)] - s.size(), ' ');
      out << (c + 1 < M.width() ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

std::string presentation_json(const PresentationMatrix& M) {
  nlohmann::json j;
  j["field"] = M.ring->field()->name();
  for (const auto& p : M.source) j["source"].push_back(p.str());
  j["columns"] = nlohmann::json::array();
  for (const auto& col : M.columns) {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& p : col) jc.push_back(p.str());
    j["columns"].push_back(std::move(jc));
  }
  j["columnDegrees"] = M.column_degrees;
  j["width"] = M.width();
  if (M.width() == 2) {
    MinorMatch mm = minors_match_source(M);
    j["minorsMatchSource"] = mm.holds;
    if (mm.holds) j["scalar"] = M.ring->field()->to_string(mm.scalar);
  }
  return j.dump(2);
}

}  // namespace homaloidal
