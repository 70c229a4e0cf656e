#ifndef HOMALOIDAL_GROEBNER_HPP
#define HOMALOIDAL_GROEBNER_HPP

#include <cstddef>
#include <vector>

#include "homaloidal/poly.hpp"

namespace homaloidal {

struct GBOptions {
  // basis growth and reduction step budgets; exceeding either throws
  // BudgetExceeded
  std::size_t max_basis = 4000;
  std::size_t max_steps = 50000000;
};

// Buchberger with the normal selection strategy, the product criterion at
// pair creation, and the chain criterion at pair selection. Returns the
// reduced Groebner basis: pairwise non-dividing leading terms, fully
// reduced tails, normalized coefficients, sorted by leading monomial
// ascending. The result is the unique reduced basis of the ideal for
// `ord`, independent of the input presentation.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens,
                                 const MonomialOrder& ord,
                                 const GBOptions& opt = {});

// groebner_basis plus a membership certificate: cofactors[i][j] is the
// coefficient of gens[j] in an exact expression of basis[i], so
// basis[i] == sum_j cofactors[i][j] * gens[j] holds identically.
struct TracedBasis {
  std::vector<Poly> basis;
  std::vector<std::vector<Poly>> cofactors;
};
TracedBasis groebner_basis_traced(const std::vector<Poly>& gens,
                                  const MonomialOrder& ord,
                                  const GBOptions& opt = {});

// Full normal form of f modulo `basis` (any polynomial list; unique
// remainder when `basis` is a Groebner basis for `ord`).
Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& ord);

// normal_form(f, gb, ord).is_zero(); gb must be a Groebner basis for ord
bool in_ideal(const Poly& f, const std::vector<Poly>& gb,
              const MonomialOrder& ord);

}  // namespace homaloidal

#endif
