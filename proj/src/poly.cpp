#include "homaloidal/poly.hpp"

#include <algorithm>

namespace homaloidal {

Poly Poly::constant(RingPtr ring, FieldElem c) {
  Poly r(ring);
  if (!ring->field()->is_zero(c)) r.terms_.push_back({Monomial::one(), std::move(c)});
  return r;
}

Poly Poly::variable(RingPtr ring, int var) {
  if (var < 0 || var >= ring->nvars()) throw MathError("variable index out of range");
  Poly r(ring);
  Term t{Monomial::one(), ring->field()->one()};
  t.m.e[std::size_t(var)] = 1;
  r.terms_.push_back(std::move(t));
  return r;
}

Poly Poly::monomial(RingPtr ring, Monomial m, FieldElem c) {
  Poly r(ring);
  if (!ring->field()->is_zero(c)) r.terms_.push_back({m, std::move(c)});
  return r;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& F = *ring->field();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return cmp_degrevlex(a.m, b.m) > 0;
  });
  Poly r(std::move(ring));
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().m == t.m)
      r.terms_.back().c = F.add(r.terms_.back().c, t.c);
    else
      r.terms_.push_back(std::move(t));
    if (!r.terms_.empty() && F.is_zero(r.terms_.back().c)) r.terms_.pop_back();
  }
  return r;
}

const Term& Poly::lead() const {
  if (terms_.empty()) throw MathError("zero polynomial has no leading term");
  return terms_[0];
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_[0].m.degree();
  for (const auto& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

static int block_degree(const Monomial& m, const std::vector<int>& blk) {
  int d = 0;
  for (int v : blk) d += m.e[std::size_t(v)];
  return d;
}

std::vector<int> Poly::multi_degree() const {
  const auto& blocks = ring_->grading_blocks();
  std::vector<int> out(blocks.size(), -1);
  if (terms_.empty()) return out;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    out[b] = block_degree(terms_[0].m, blocks[b]);
  for (const auto& t : terms_)
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (block_degree(t.m, blocks[b]) != out[b])
        throw MathError("polynomial is not homogeneous for the grading");
  return out;
}

bool Poly::is_multi_homogeneous() const {
  if (terms_.empty()) return true;
  const auto& blocks = ring_->grading_blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    int d = block_degree(terms_[0].m, blocks[b]);
    for (const auto& t : terms_)
      if (block_degree(t.m, blocks[b]) != d) return false;
  }
  return true;
}

int Poly::degree_in(const std::vector<int>& vars) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, block_degree(t.m, vars));
  return d;
}

int Poly::min_exponent(int var) const {
  if (terms_.empty()) return 0;
  int m = 0x7fffffff;
  for (const auto& t : terms_) m = std::min(m, int(t.m.e[std::size_t(var)]));
  return m;
}

Poly Poly::add(const Poly& o) const {
  const Field& F = *ring_->field();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = cmp_degrevlex(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElem s = F.add(terms_[i].c, o.terms_[j].c);
      if (!F.is_zero(s)) r.terms_.push_back({terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::sub(const Poly& o) const { return add(o.neg()); }

Poly Poly::neg() const {
  const Field& F = *ring_->field();
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, F.neg(t.c)});
  return r;
}

Poly Poly::mul(const Poly& o) const {
  const Field& F = *ring_->field();
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prods.push_back({a.m.mul(b.m), F.mul(a.c, b.c)});
  return from_terms(ring_, std::move(prods));
}

Poly Poly::mul_term(const Term& t) const {
  const Field& F = *ring_->field();
  if (F.is_zero(t.c)) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& a : terms_) {
    FieldElem c = F.mul(a.c, t.c);
    if (!F.is_zero(c)) r.terms_.push_back({a.m.mul(t.m), std::move(c)});
  }
  return r;
}

Poly Poly::mul_monomial(const Monomial& m) const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& a : terms_) r.terms_.push_back({a.m.mul(m), a.c});
  return r;
}

Poly Poly::scale(const FieldElem& c) const {
  return mul_term({Monomial::one(), c});
}

Poly Poly::pow(unsigned n) const {
  Poly r = constant(ring_, ring_->field()->one());
  Poly b = *this;
  while (n) {
    if (n & 1) r = r.mul(b);
    n >>= 1;
    if (n) b = b.mul(b);
  }
  return r;
}

Poly Poly::derivative(int var) const {
  const Field& F = *ring_->field();
  Poly r(ring_);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.m.e[std::size_t(var)];
    if (e == 0) continue;
    FieldElem c = F.mul(t.c, F.from_int(e));
    if (F.is_zero(c)) continue;
    Term nt{t.m, std::move(c)};
    nt.m.e[std::size_t(var)] = std::uint16_t(e - 1);
    out.push_back(std::move(nt));
  }
  return from_terms(ring_, std::move(out));
}

Poly Poly::subst(int var, const Poly& value) const {
  const Field& F = *ring_->field();
  int maxe = 0;
  for (const auto& t : terms_) maxe = std::max(maxe, int(t.m.e[std::size_t(var)]));
  std::vector<Poly> powers;
  powers.push_back(constant(ring_, F.one()));
  for (int k = 1; k <= maxe; ++k) powers.push_back(powers.back().mul(value));
  Poly r(ring_);
  for (const auto& t : terms_) {
    Term rest = t;
    int e = rest.m.e[std::size_t(var)];
    rest.m.e[std::size_t(var)] = 0;
    r = r.add(powers[std::size_t(e)].mul_term(rest));
  }
  return r;
}

FieldElem Poly::eval(const std::vector<FieldElem>& point) const {
  const Field& F = *ring_->field();
  if (int(point.size()) != ring_->nvars())
    throw MathError("evaluation point has the wrong length");
  FieldElem acc = F.zero();
  for (const auto& t : terms_) {
    FieldElem v = t.c;
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = t.m.e[std::size_t(i)];
      if (e) v = F.mul(v, F.pow(point[std::size_t(i)], e));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

Poly Poly::exact_div(const Poly& divisor) const {
  const Field& F = *ring_->field();
  if (divisor.is_zero()) throw NotDivisible("division by the zero polynomial");
  Poly q(ring_);
  Poly r = *this;
  const Term& dl = divisor.lead();
  while (!r.is_zero()) {
    const Term& rl = r.lead();
    if (!dl.m.divides(rl.m))
      throw NotDivisible("leading term does not divide the remainder");
    Term t{dl.m.div_into(rl.m), F.div(rl.c, dl.c)};
    q.terms_.push_back(t);
    r = r.sub(divisor.mul_term(t));
  }
  return from_terms(ring_, std::move(q.terms_));
}

Poly Poly::shift_down(int var, int k) const {
  if (k == 0) return *this;
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (int(t.m.e[std::size_t(var)]) < k)
      throw NotDivisible("variable power does not divide every term");
    Term nt = t;
    nt.m.e[std::size_t(var)] = std::uint16_t(nt.m.e[std::size_t(var)] - k);
    r.terms_.push_back(std::move(nt));
  }
  return r;
}

FieldElem Poly::normalizing_factor() const {
  const Field& F = *ring_->field();
  if (terms_.empty()) return F.one();
  if (F.finite()) return F.inv(lead().c);
  // integer content over Q
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            t.c.rat->get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.c.rat->get_den_mpz_t());
  }
  mpq_class s(den_lcm, num_gcd);
  s.canonicalize();
  if (sgn(*lead().c.rat) < 0) s = -s;
  return F.from_mpq(s);
}

Poly Poly::normalized() const {
  if (terms_.empty()) return *this;
  return scale(normalizing_factor());
}

Poly Poly::change_ring(const RingPtr& target) const {
  const Field& SF = *ring_->field();
  const Field& TF = *target->field();
  std::array<int, kMaxVars> map{};
  for (int i = 0; i < ring_->nvars(); ++i) {
    map[std::size_t(i)] = target->var_index(ring_->var_name(i));
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt;
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = t.m.e[std::size_t(i)];
      if (!e) continue;
      int j = map[std::size_t(i)];
      if (j < 0)
        throw MathError("variable " + ring_->var_name(i) +
                        " does not exist in the target ring");
      nt.m.e[std::size_t(j)] = std::uint16_t(e);
    }
    if (TF.kind() == FieldKind::rationals && SF.kind() == FieldKind::rationals)
      nt.c = t.c;
    else if (TF.finite() && SF.kind() == FieldKind::rationals)
      nt.c = TF.from_mpq(*t.c.rat);
    else
      nt.c = TF.lift(SF, t.c);
    out.push_back(std::move(nt));
  }
  return from_terms(target, std::move(out));
}

bool Poly::equal(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  const Field& F = *ring_->field();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].m == o.terms_[i].m)) return false;
    if (!F.equal(terms_[i].c, o.terms_[i].c)) return false;
  }
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  const Field& F = *ring_->field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = F.to_string(t.c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (first) {
      first = false;
      if (negative) {
        out += "-";
        cs = cs.substr(1);
      }
    } else {
      if (negative) {
        out += " - ";
        cs = cs.substr(1);
      } else {
        out += " + ";
      }
    }
    std::string mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = t.m.e[std::size_t(i)];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->var_name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
      out += cs + "*" + mono;
    }
  }
  return out;
}

}  // namespace homaloidal
