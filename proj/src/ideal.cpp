#include "homaloidal/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <utility>

namespace homaloidal {

namespace {

std::vector<Poly> red_gb(const RingPtr& ring, const std::vector<Poly>& gens,
                         const GBOptions& opt) {
  if (gens.empty()) return {};
  return groebner_basis(gens, MonomialOrder::degrevlex(ring->nvars()), opt);
}

bool poly_lists_equal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].equal(b[i])) return false;
  return true;
}

bool is_unit_basis(const std::vector<Poly>& gb) {
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

std::string aux_name(const Ring& r) {
  std::string name = "s";
  for (int k = 0; r.var_index(name) >= 0; ++k) name = "s" + std::to_string(k);
  return name;
}

// same ring with one ungraded variable prepended; original grading blocks
// keep their meaning
RingPtr ring_with_aux(const RingPtr& r, const std::string& aux) {
  std::vector<std::string> vars;
  vars.reserve(std::size_t(r->nvars()) + 1);
  vars.push_back(aux);
  for (const auto& v : r->var_names()) vars.push_back(v);
  std::vector<std::vector<int>> blocks;
  for (const auto& b : r->grading_blocks()) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int v : b) nb.push_back(v + 1);
    blocks.push_back(std::move(nb));
  }
  return Ring::make(r->field(), std::move(vars), std::move(blocks));
}

// Groebner basis of `gens` in the aux-extended ring for an order
// eliminating the front variable, then the aux-free part transported back
std::vector<Poly> elim_aux(const RingPtr& base, const RingPtr& ext,
                           const std::vector<Poly>& gens,
                           const GBOptions& opt) {
  MonomialOrder ord = MonomialOrder::elim({0}, ext->nvars());
  std::vector<Poly> gb = groebner_basis(gens, ord, opt);
  std::vector<Poly> out;
  for (const auto& g : gb)
    if (g.degree_in({0}) == 0) out.push_back(g.change_ring(base));
  return out;
}

Ideal from_basis(RingPtr ring, std::vector<Poly> gens) {
  return Ideal::make(std::move(ring), std::move(gens));
}

int single_saturating_var(const Poly& g) {
  // a nonzero scalar multiple of a pure power of one variable
  if (g.is_zero() || g.terms().size() != 1) return -1;
  const Monomial& m = g.terms()[0].m;
  int var = -1;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!m.e[std::size_t(v)]) continue;
    if (var >= 0) return -1;
    var = v;
  }
  return var;
}

Ideal saturate_colon(const Ideal& I, const Poly& g, const GBOptions& opt) {
  std::vector<Poly> cur = red_gb(I.ring, I.gens, opt);
  for (int step = 0; step < 512; ++step) {
    std::vector<Poly> nxt =
        ideal_quotient(from_basis(I.ring, cur), g, opt).gens;
    if (poly_lists_equal(cur, nxt)) return from_basis(I.ring, std::move(cur));
    cur = std::move(nxt);
  }
  throw BudgetExceeded("saturation chain failed to stabilize");
}

Ideal saturate_rabinowitsch(const Ideal& I, const Poly& g,
                            const GBOptions& opt) {
  RingPtr ext = ring_with_aux(I.ring, aux_name(*I.ring));
  const Field& F = *I.ring->field();
  Poly s = Poly::variable(ext, 0);
  Poly one = Poly::constant(ext, F.one());
  std::vector<Poly> gens;
  for (const auto& f : I.gens) gens.push_back(f.change_ring(ext));
  gens.push_back(one.sub(s.mul(g.change_ring(ext))));
  return from_basis(I.ring, elim_aux(I.ring, ext, gens, opt));
}

Ideal saturate_variable_fast(const Ideal& I, int var, const GBOptions& opt) {
  // reduced basis for an order ranking `var` cheapest; for a homogeneous
  // ideal dividing out the full power of `var` from each element
  // generates the saturation
  MonomialOrder ord = MonomialOrder::var_last(I.ring->nvars(), var);
  std::vector<Poly> gb = groebner_basis(I.gens, ord, opt);
  std::vector<Poly> out;
  out.reserve(gb.size());
  for (const auto& g : gb) {
    int k = g.min_exponent(var);
    out.push_back(k ? g.shift_down(var, k) : g);
  }
  return from_basis(I.ring, red_gb(I.ring, out, opt));
}

// ---- numerical side: lead-term combinatorics ----------------------------

using KKey = std::array<int, 2>;
using KMap = std::map<KKey, mpz_class>;  // sparse sum of c * T^key

void k_acc(KMap& a, const KKey& k, const mpz_class& v) {
  auto it = a.emplace(k, 0).first;
  it->second += v;
  if (it->second == 0) a.erase(it);
}

KMap k_shift(const KMap& a, const KKey& s, int sign) {
  KMap out;
  for (const auto& [k, v] : a)
    out.emplace(KKey{k[0] + s[0], k[1] + s[1]}, sign < 0 ? -v : v);
  return out;
}

void k_add_into(KMap& a, const KMap& b) {
  for (const auto& [k, v] : b) k_acc(a, k, v);
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> v) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < v.size() && !redundant; ++j) {
      if (i == j) continue;
      if (v[j].divides(v[i]) && (!(v[j] == v[i]) || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(v[i]);
  }
  return out;
}

// numerator of the graded dimension series of R/(monomial ideal), by
// splitting on the most shared variable; weights map a monomial to its
// (bi)degree
KMap k_numerator(std::vector<Monomial> gens,
                 const std::function<KKey(const Monomial&)>& wt) {
  gens = minimal_monomials(std::move(gens));
  KMap out;
  for (const auto& m : gens)
    if (m.is_one()) return out;
  if (gens.empty()) {
    k_acc(out, {0, 0}, 1);
    return out;
  }
  std::array<int, kMaxVars> freq{};
  for (const auto& m : gens)
    for (int v = 0; v < kMaxVars; ++v)
      if (m.e[std::size_t(v)]) ++freq[std::size_t(v)];
  int pivot = 0;
  for (int v = 1; v < kMaxVars; ++v)
    if (freq[std::size_t(v)] > freq[std::size_t(pivot)]) pivot = v;
  if (freq[std::size_t(pivot)] <= 1) {
    // pairwise coprime: product of (1 - T^deg)
    k_acc(out, {0, 0}, 1);
    for (const auto& m : gens) {
      KMap next = out;
      k_add_into(next, k_shift(out, wt(m), -1));
      out = std::move(next);
    }
    return out;
  }
  Monomial xv;
  xv.e[std::size_t(pivot)] = 1;
  std::vector<Monomial> plus;
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) {
    if (!m.e[std::size_t(pivot)]) plus.push_back(m);
    Monomial c = m;
    if (c.e[std::size_t(pivot)]) --c.e[std::size_t(pivot)];
    colon.push_back(c);
  }
  plus.push_back(xv);
  out = k_numerator(std::move(plus), wt);
  k_add_into(out, k_shift(k_numerator(std::move(colon), wt), wt(xv), +1));
  return out;
}

mpz_class binom(long long n, int k) {
  if (k < 0 || n < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// dimension of degree-t part (diagonal degree when two blocks) of R/I
// from the series numerator; s0, s1 are the block sizes (s1 = 0 when the
// grading has a single block)
mpz_class hf_value(const KMap& K, long long t, int s0, int s1) {
  mpz_class acc = 0;
  for (const auto& [k, v] : K) {
    mpz_class f = binom(t - k[0] + s0 - 1, s0 - 1);
    if (s1 > 0) f *= binom(t - k[1] + s1 - 1, s1 - 1);
    acc += v * f;
  }
  return acc;
}

std::vector<Monomial> lead_monomials(const std::vector<Poly>& gb) {
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const auto& g : gb) leads.push_back(g.lead().m);
  return leads;
}

long long to_ll(const mpz_class& v, const char* what) {
  if (!v.fits_slong_p())
    throw MathError(std::string(what) + " does not fit a machine integer");
  return v.get_si();
}

}  // namespace

Ideal Ideal::make(RingPtr ring, std::vector<Poly> gens) {
  Ideal I;
  I.ring = std::move(ring);
  for (auto& g : gens)
    if (!g.is_zero()) I.gens.push_back(std::move(g));
  I.homogeneous = !I.gens.empty();
  for (const auto& g : I.gens)
    if (!g.is_multi_homogeneous()) {
      I.homogeneous = false;
      break;
    }
  return I;
}

bool Ideal::is_unit_trivially() const {
  for (const auto& g : gens)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

GroebnerBasis groebner(const Ideal& I, const MonomialOrder& ord,
                       const GBOptions& opt) {
  return {ord, groebner_basis(I.gens, ord, opt)};
}

bool ideal_equal(const Ideal& A, const Ideal& B, const GBOptions& opt) {
  if (!Ring::same(*A.ring, *B.ring))
    throw MathError("ideal comparison across different rings");
  return poly_lists_equal(red_gb(A.ring, A.gens, opt),
                          red_gb(B.ring, B.gens, opt));
}

bool ideal_contains(const Ideal& A, const Ideal& B, const GBOptions& opt) {
  if (!Ring::same(*A.ring, *B.ring))
    throw MathError("ideal comparison across different rings");
  MonomialOrder ord = MonomialOrder::degrevlex(A.ring->nvars());
  std::vector<Poly> gb = red_gb(A.ring, A.gens, opt);
  for (const auto& g : B.gens)
    if (!in_ideal(g, gb, ord)) return false;
  return true;
}

Ideal intersect(const Ideal& I, const Ideal& J, const GBOptions& opt) {
  if (!Ring::same(*I.ring, *J.ring))
    throw MathError("ideal intersection across different rings");
  if (I.gens.empty() || J.gens.empty()) return from_basis(I.ring, {});
  RingPtr ext = ring_with_aux(I.ring, aux_name(*I.ring));
  const Field& F = *I.ring->field();
  Poly s = Poly::variable(ext, 0);
  Poly one_minus_s = Poly::constant(ext, F.one()).sub(s);
  std::vector<Poly> gens;
  gens.reserve(I.gens.size() + J.gens.size());
  for (const auto& f : I.gens) gens.push_back(s.mul(f.change_ring(ext)));
  for (const auto& g : J.gens)
    gens.push_back(one_minus_s.mul(g.change_ring(ext)));
  return from_basis(I.ring, elim_aux(I.ring, ext, gens, opt));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars,
                const GBOptions& opt) {
  std::vector<int> front;
  front.reserve(vars.size());
  for (const auto& name : vars) {
    int idx = I.ring->var_index(name);
    if (idx < 0) throw MathError("eliminate: unknown variable " + name);
    front.push_back(idx);
  }
  std::vector<std::string> rest;
  for (int v = 0; v < I.ring->nvars(); ++v)
    if (std::find(front.begin(), front.end(), v) == front.end())
      rest.push_back(I.ring->var_name(v));
  if (rest.empty()) throw MathError("eliminate: no variables would remain");
  RingPtr sub = Ring::make(I.ring->field(), rest);
  if (I.gens.empty()) return from_basis(sub, {});
  MonomialOrder ord = MonomialOrder::elim(front, I.ring->nvars());
  std::vector<Poly> gb = groebner_basis(I.gens, ord, opt);
  std::vector<Poly> out;
  for (const auto& g : gb)
    if (g.degree_in(front) == 0) out.push_back(g.change_ring(sub));
  return from_basis(sub, std::move(out));
}

Ideal ideal_quotient(const Ideal& I, const Poly& f, const GBOptions& opt) {
  if (f.is_zero()) {
    // every g satisfies g*0 = 0 in I
    return from_basis(I.ring,
                      {Poly::constant(I.ring, I.ring->field()->one())});
  }
  if (I.gens.empty()) return from_basis(I.ring, {});
  Ideal meet = intersect(I, from_basis(I.ring, {f}), opt);
  std::vector<Poly> out;
  out.reserve(meet.gens.size());
  for (const auto& g : meet.gens) out.push_back(g.exact_div(f));
  return from_basis(I.ring, red_gb(I.ring, out, opt));
}

Ideal saturate(const Ideal& I, const Poly& g, SatMode mode,
               const GBOptions& opt) {
  if (g.is_zero())
    return from_basis(I.ring,
                      {Poly::constant(I.ring, I.ring->field()->one())});
  switch (mode) {
    case SatMode::rabinowitsch:
      return saturate_rabinowitsch(I, g, opt);
    case SatMode::fast: {
      int var = single_saturating_var(g);
      if (var >= 0 && var < I.ring->nvars() && I.homogeneous)
        return saturate_variable_fast(I, var, opt);
      return saturate_colon(I, g, opt);
    }
    case SatMode::colon:
    default:
      return saturate_colon(I, g, opt);
  }
}

Ideal saturate(const Ideal& I, const Ideal& J, SatMode mode,
               const GBOptions& opt) {
  if (!Ring::same(*I.ring, *J.ring))
    throw MathError("saturation across different rings");
  if (J.gens.empty())
    return from_basis(I.ring,
                      {Poly::constant(I.ring, I.ring->field()->one())});
  Ideal acc = saturate(I, J.gens[0], mode, opt);
  for (std::size_t k = 1; k < J.gens.size(); ++k)
    acc = intersect(acc, saturate(I, J.gens[k], mode, opt), opt);
  return from_basis(I.ring, red_gb(I.ring, acc.gens, opt));
}

int krull_dimension(const Ideal& I, const MonomialOrder& ord,
                    const GBOptions& opt) {
  int n = I.ring->nvars();
  if (I.gens.empty()) return n;
  std::vector<Poly> gb = groebner_basis(I.gens, ord, opt);
  std::vector<unsigned> masks;
  masks.reserve(gb.size());
  for (const auto& g : gb) {
    unsigned m = 0;
    for (int v = 0; v < n; ++v)
      if (g.lead().m.e[std::size_t(v)]) m |= 1u << v;
    masks.push_back(m);
  }
  int best = -1;
  for (unsigned S = 0; S < (1u << n); ++S) {
    bool ok = true;
    for (unsigned m : masks)
      if ((m & ~S) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, std::popcount(S));
  }
  return best;
}

int krull_dimension(const Ideal& I, const GBOptions& opt) {
  return krull_dimension(I, MonomialOrder::degrevlex(I.ring->nvars()), opt);
}

bool in_radical(const Poly& f, const Ideal& I, const GBOptions& opt) {
  if (f.is_zero()) return true;
  RingPtr ext = ring_with_aux(I.ring, aux_name(*I.ring));
  const Field& F = *I.ring->field();
  Poly s = Poly::variable(ext, 0);
  std::vector<Poly> gens;
  for (const auto& g : I.gens) gens.push_back(g.change_ring(ext));
  gens.push_back(
      Poly::constant(ext, F.one()).sub(s.mul(f.change_ring(ext))));
  std::vector<Poly> gb =
      groebner_basis(gens, MonomialOrder::degrevlex(ext->nvars()), opt);
  return is_unit_basis(gb);
}

SchemeMeasure degree_zero_dim(const Ideal& I, ZeroDimMode mode,
                              std::uint64_t seed, const GBOptions& opt) {
  const auto& blocks = I.ring->grading_blocks();
  if (blocks.empty() || blocks.size() > 2)
    throw MathError("degree needs one or two grading blocks");
  {
    std::size_t graded = 0;
    for (const auto& b : blocks) graded += b.size();
    if (int(graded) != I.ring->nvars())
      throw MathError("degree needs every variable graded");
  }
  if (!I.homogeneous || I.gens.empty())
    throw MathError("degree needs homogeneous generators");
  int n = I.ring->nvars();
  int s0 = int(blocks[0].size());
  int s1 = blocks.size() == 2 ? int(blocks[1].size()) : 0;

  auto block_weight = [&](const Monomial& m) {
    KKey k{0, 0};
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int v : blocks[b]) k[b] += m.e[std::size_t(v)];
    return k;
  };

  std::vector<Poly> gb =
      groebner_basis(I.gens, MonomialOrder::degrevlex(n), opt);
  if (is_unit_basis(gb)) throw NotZeroDimensional("the scheme is empty");
  KMap K = k_numerator(lead_monomials(gb), block_weight);

  long long kdeg = 0;
  for (const auto& [k, v] : K) kdeg = std::max(kdeg, (long long)(k[0] + k[1]));
  long long total = 0, mx = 0;
  for (const auto& g : I.gens) {
    total += g.total_degree();
    mx = std::max(mx, (long long)g.total_degree());
  }
  int D = (s0 - 1) + (s1 > 0 ? s1 - 1 : 0);
  long long bound = std::max({2 * total, 4 * mx, kdeg + D + 1});

  mpz_class stable = hf_value(K, bound, s0, s1);
  for (long long t = bound - D; t < bound; ++t)
    if (hf_value(K, t, s0, s1) != stable)
      throw NotZeroDimensional("dimension function does not stabilize");
  long long H = to_ll(stable, "scheme degree");
  if (H == 0) throw NotZeroDimensional("the scheme is empty");
  if (mode == ZeroDimMode::hilbert) return {0, H};

  // affine chart count, retried until it meets the graded value
  Rng rng(seed * 0x9E3779B97F4A7C15ull + 0x7C15632BD1F7A92Bull);
  const Field& F = *I.ring->field();
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Poly> cut = I.gens;
    for (const auto& b : blocks) {
      Poly ell = Poly::zero(I.ring);
      bool nonzero = false;
      while (!nonzero) {
        ell = Poly::zero(I.ring);
        for (int v : b) {
          FieldElem c = F.random_elem(rng);
          if (!F.is_zero(c)) nonzero = true;
          ell = ell.add(Poly::variable(I.ring, v).scale(c));
        }
      }
      cut.push_back(ell.sub(Poly::constant(I.ring, F.one())));
    }
    std::vector<Poly> agb =
        groebner_basis(cut, MonomialOrder::degrevlex(n), opt);
    if (is_unit_basis(agb)) continue;  // both charts missed everything
    std::vector<Monomial> leads = lead_monomials(agb);
    std::array<long long, kMaxVars> topdeg;
    topdeg.fill(-1);
    for (const auto& m : leads) {
      int var = -1;
      bool pure = true;
      for (int v = 0; v < n; ++v)
        if (m.e[std::size_t(v)]) {
          if (var >= 0) pure = false;
          var = v;
        }
      if (!pure || var < 0) continue;
      long long e = m.e[std::size_t(var)];
      if (topdeg[std::size_t(var)] < 0 || e < topdeg[std::size_t(var)])
        topdeg[std::size_t(var)] = e;
    }
    bool finite = true;
    long long B = 0;
    for (int v = 0; v < n; ++v) {
      if (topdeg[std::size_t(v)] < 0) finite = false;
      else B += topdeg[std::size_t(v)] - 1;
    }
    if (!finite) continue;
    auto total_weight = [](const Monomial& m) { return KKey{m.degree(), 0}; };
    KMap KA = k_numerator(leads, total_weight);
    mpz_class count = 0;
    for (long long t = 0; t <= B; ++t) count += hf_value(KA, t, n, 0);
    if (count == stable) return {0, H};
  }
  throw InconsistentResult("affine chart count never met the graded count");
}

}  // namespace homaloidal
