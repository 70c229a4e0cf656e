#ifndef HOMALOIDAL_TESTS_MACAULAY_HPP
#define HOMALOIDAL_TESTS_MACAULAY_HPP

#include <vector>

#include "homaloidal/poly.hpp"

namespace homaloidal::testsupport {

// Dense linear-algebra view of one graded slice of an ideal, built without
// any Groebner machinery: rows are monomial multiples of the generators,
// brought to reduced row echelon form by exact Gauss-Jordan elimination.
// Serves as an independent reducer to cross-check basis computations.
struct DegreeSlice {
  RingPtr ring;
  int degree = 0;
  std::vector<Monomial> monomials;  // every monomial of this degree, fixed order
  std::vector<std::vector<FieldElem>> rows;  // rref basis of the slice
  std::vector<int> pivots;                   // pivot column per row

  int rank() const { return int(rows.size()); }
  // membership of a homogeneous polynomial of matching degree (or zero)
  bool contains(const Poly& f) const;
  // the rref basis row as a polynomial
  Poly row_poly(int i) const;
};

DegreeSlice degree_slice(const RingPtr& ring, const std::vector<Poly>& gens,
                         int degree);

// all monomials of the given total degree in the ring's variables
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree);

struct FiberOracleReport {
  long long degree = -1;  // stabilized fiber length; -1 when no plateau found
  int power = 0;          // colon exponent at stabilization
  int slice_degree = 0;   // first slice degree of the final plateau
  std::vector<std::string> log;
};

// Topological degree of the map given by three equal-degree forms, using
// dense linear algebra only: two random sections cut the fiber together
// with the base locus, a colon by a power of a third random combination
// removes the base contribution, and the Hilbert function of the quotient
// is scanned until it plateaus in both the exponent and the slice degree.
// Shares nothing with the production pipeline beyond polynomial arithmetic.
FiberOracleReport oracle_fiber_degree(const std::array<Poly, 3>& g,
                                      std::uint64_t seed);

}  // namespace homaloidal::testsupport

#endif
