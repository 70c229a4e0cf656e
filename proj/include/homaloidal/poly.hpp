#ifndef HOMALOIDAL_POLY_HPP
#define HOMALOIDAL_POLY_HPP

#include <string>
#include <vector>

#include "homaloidal/ring.hpp"

namespace homaloidal {

// Sparse multivariate polynomial. Terms are kept sorted in descending
// canonical order (degrevlex over the natural variable sequence) with
// nonzero coefficients and distinct monomials.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, FieldElem c);
  static Poly variable(RingPtr ring, int var);
  static Poly monomial(RingPtr ring, Monomial m, FieldElem c);
  // sorts, merges duplicates, drops zeros
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }
  const Term& lead() const;  // throws on zero
  int total_degree() const;  // -1 for zero
  bool is_homogeneous() const;
  // degree per grading block of the ring; requires homogeneity per block
  std::vector<int> multi_degree() const;
  bool is_multi_homogeneous() const;
  int degree_in(const std::vector<int>& vars) const;  // max over terms
  int min_exponent(int var) const;                    // 0 for zero poly

  Poly add(const Poly& o) const;
  Poly sub(const Poly& o) const;
  Poly neg() const;
  Poly mul(const Poly& o) const;
  Poly mul_term(const Term& t) const;
  Poly mul_monomial(const Monomial& m) const;
  Poly scale(const FieldElem& c) const;
  Poly pow(unsigned n) const;
  Poly derivative(int var) const;
  Poly subst(int var, const Poly& value) const;
  FieldElem eval(const std::vector<FieldElem>& point) const;
  // exact quotient, throws NotDivisible when there is a remainder
  Poly exact_div(const Poly& divisor) const;
  // divide by var^k (requires min_exponent(var) >= k)
  Poly shift_down(int var, int k) const;
  // monic over a finite field; over Q coprime integer coefficients with a
  // positive leading one
  Poly normalized() const;
  // the scalar s with scale(s) == normalized(); 1 for the zero polynomial
  FieldElem normalizing_factor() const;
  // coefficientwise transport into a ring with the same variable names
  // (possibly among extras) over the same field or an extension of it
  Poly change_ring(const RingPtr& target) const;

  bool equal(const Poly& o) const;
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace homaloidal

#endif
