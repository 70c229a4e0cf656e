#include "macaulay.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace homaloidal::testsupport {

namespace {

void fill_monomials(int nvars, int var, int left, Monomial& cur,
                    std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.e[std::size_t(var)] = std::uint16_t(left);
    out.push_back(cur);
    cur.e[std::size_t(var)] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.e[std::size_t(var)] = std::uint16_t(e);
    fill_monomials(nvars, var + 1, left - e, cur, out);
  }
  cur.e[std::size_t(var)] = 0;
}

struct Cmp {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_degrevlex(a, b) > 0;
  }
};

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree) {
  std::vector<Monomial> out;
  Monomial cur;
  fill_monomials(ring->nvars(), 0, degree, cur, out);
  return out;
}

bool DegreeSlice::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous() || f.total_degree() != degree) return false;
  const Field& F = *ring->field();
  std::map<Monomial, int, Cmp> index;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    index.emplace(monomials[i], int(i));
  std::vector<FieldElem> v(monomials.size(), F.zero());
  for (const auto& t : f.terms()) v[std::size_t(index.at(t.m))] = t.c;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    FieldElem c = v[std::size_t(pivots[r])];
    if (F.is_zero(c)) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = F.sub(v[j], F.mul(c, rows[r][j]));
  }
  for (const auto& c : v)
    if (!F.is_zero(c)) return false;
  return true;
}

Poly DegreeSlice::row_poly(int i) const {
  std::vector<Term> terms;
  const Field& F = *ring->field();
  for (std::size_t j = 0; j < monomials.size(); ++j)
    if (!F.is_zero(rows[std::size_t(i)][j]))
      terms.push_back({monomials[j], rows[std::size_t(i)][j]});
  return Poly::from_terms(ring, std::move(terms));
}

DegreeSlice degree_slice(const RingPtr& ring, const std::vector<Poly>& gens,
                         int degree) {
  const Field& F = *ring->field();
  DegreeSlice s;
  s.ring = ring;
  s.degree = degree;
  s.monomials = monomials_of_degree(ring, degree);
  std::map<Monomial, int, Cmp> index;
  for (std::size_t i = 0; i < s.monomials.size(); ++i)
    index.emplace(s.monomials[i], int(i));

  std::vector<std::vector<FieldElem>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw std::invalid_argument("degree_slice needs homogeneous input");
    int d = g.total_degree();
    if (d > degree) continue;
    for (const auto& m : monomials_of_degree(ring, degree - d)) {
      std::vector<FieldElem> row(s.monomials.size(), F.zero());
      for (const auto& t : g.terms())
        row[std::size_t(index.at(t.m.mul(m)))] = t.c;
      rows.push_back(std::move(row));
    }
  }

  // exact Gauss-Jordan to reduced row echelon form
  std::size_t ncols = s.monomials.size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t piv = next;
    while (piv < rows.size() && F.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[next], rows[piv]);
    FieldElem inv = F.inv(rows[next][col]);
    for (auto& c : rows[next]) c = F.mul(c, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || F.is_zero(rows[r][col])) continue;
      FieldElem f = rows[r][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[next][j]));
    }
    s.pivots.push_back(int(col));
    ++next;
  }
  rows.resize(next);
  s.rows = std::move(rows);
  return s;
}

namespace {

int rank_of(const Field& F, std::vector<std::vector<FieldElem>> rows) {
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t piv = next;
    while (piv < rows.size() && F.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[next], rows[piv]);
    FieldElem inv = F.inv(rows[next][col]);
    for (auto& c : rows[next]) c = F.mul(c, inv);
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      if (F.is_zero(rows[r][col])) continue;
      FieldElem f = rows[r][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[next][j]));
    }
    ++next;
  }
  return int(next);
}

// Hilbert function of R/(J : f^k) at the given degree: the rank of the
// multiplication-by-f^k map from that degree slice into R/J.
long long colon_hilbert(const RingPtr& ring, const std::vector<Poly>& J,
                        const Poly& fk, int degree) {
  const Field& F = *ring->field();
  DegreeSlice s = degree_slice(ring, J, degree + fk.total_degree());
  std::map<Monomial, int, Cmp> index;
  for (std::size_t i = 0; i < s.monomials.size(); ++i)
    index.emplace(s.monomials[i], int(i));
  std::vector<std::vector<FieldElem>> residuals;
  for (const Monomial& m : monomials_of_degree(ring, degree)) {
    Poly prod = fk.mul_monomial(m);
    std::vector<FieldElem> v(s.monomials.size(), F.zero());
    for (const auto& t : prod.terms())
      v[std::size_t(index.at(t.m))] = t.c;
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
      FieldElem c = v[std::size_t(s.pivots[r])];
      if (F.is_zero(c)) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = F.sub(v[j], F.mul(c, s.rows[r][j]));
    }
    residuals.push_back(std::move(v));
  }
  return rank_of(F, std::move(residuals));
}

}  // namespace

FiberOracleReport oracle_fiber_degree(const std::array<Poly, 3>& g,
                                      std::uint64_t seed) {
  FiberOracleReport rep;
  RingPtr ring = g[0].ring();
  const Field& F = *ring->field();
  int e = g[0].total_degree();
  std::mt19937_64 rng(seed);
  auto combo = [&]() {
    Poly acc = Poly::zero(ring);
    for (int i = 0; i < 3; ++i)
      acc = acc.add(g[i].scale(F.from_int(long(rng() % 95) + 2)));
    return acc;
  };
  Poly h1 = combo();
  Poly h2 = combo();
  Poly f = combo();
  std::vector<Poly> J = {h1, h2};
  rep.log.push_back("two sections and the colon form drawn with seed " +
                    std::to_string(seed) + ", generator degree " +
                    std::to_string(e));

  // grow the colon exponent at a probe degree until the quotient stops
  // shrinking, then scan slice degrees for three equal values in a row,
  // re-verifying the exponent at every step
  int k = 1;
  long long at_probe = colon_hilbert(ring, J, f.pow(k), e);
  rep.log.push_back("probe degree " + std::to_string(e) + ": HF " +
                    std::to_string(at_probe) + " at exponent 1");
  while (k < 8) {
    long long nxt = colon_hilbert(ring, J, f.pow(k + 1), e);
    rep.log.push_back("probe degree " + std::to_string(e) + ": HF " +
                      std::to_string(nxt) + " at exponent " +
                      std::to_string(k + 1));
    if (nxt == at_probe) break;
    at_probe = nxt;
    ++k;
  }
  rep.power = k;

  long long prev = -1;
  int run = 0;
  for (int D = 1; D <= 16; ++D) {
    long long value = colon_hilbert(ring, J, f.pow(k), D);
    long long deeper = colon_hilbert(ring, J, f.pow(k + 1), D);
    rep.log.push_back("degree " + std::to_string(D) + ": HF " +
                      std::to_string(value) + ", exponent check " +
                      std::to_string(deeper));
    if (deeper != value) {  // the probe underestimated the exponent
      ++k;
      rep.power = k;
      prev = -1;
      run = 0;
      continue;
    }
    if (value == prev) {
      if (++run >= 2) {
        rep.degree = value;
        rep.slice_degree = D - 2;
        break;
      }
    } else {
      prev = value;
      run = 0;
    }
  }
  return rep;
}

}  // namespace homaloidal::testsupport
