#ifndef HOMALOIDAL_IDEAL_HPP
#define HOMALOIDAL_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "homaloidal/groebner.hpp"
#include "homaloidal/poly.hpp"

namespace homaloidal {

// Finitely generated ideal. Generators are kept nonzero; an empty list is
// the zero ideal. `homogeneous` is true when every generator is
// homogeneous for each grading block of the ring.
struct Ideal {
  RingPtr ring;
  std::vector<Poly> gens;
  bool homogeneous = false;

  static Ideal make(RingPtr ring, std::vector<Poly> gens);
  bool is_unit_trivially() const;  // some generator is a nonzero constant
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Poly> elements;
};

GroebnerBasis groebner(const Ideal& I, const MonomialOrder& ord,
                       const GBOptions& opt = {});

// true when the reduced degrevlex bases coincide
bool ideal_equal(const Ideal& A, const Ideal& B, const GBOptions& opt = {});

// every generator of B reduces to zero against a basis of A
bool ideal_contains(const Ideal& A, const Ideal& B, const GBOptions& opt = {});

// I cap J through the auxiliary-variable trick: eliminate s from
// s*I + (1-s)*J
Ideal intersect(const Ideal& I, const Ideal& J, const GBOptions& opt = {});

// generators free of `vars`, living in the subring on the remaining
// variables (single grading block)
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars,
                const GBOptions& opt = {});

// (I : f) = {g : g*f in I}, computed as (1/f)(I cap (f)); the unit ideal
// when f is zero
Ideal ideal_quotient(const Ideal& I, const Poly& f, const GBOptions& opt = {});

enum class SatMode {
  colon,         // iterated quotients until the chain stabilizes
  rabinowitsch,  // adjoin s, add 1 - s*g, eliminate s (cross-check mode)
  fast,          // lead-term division shortcut for a homogeneous ideal and a
                 // single variable; falls back to colon otherwise
};

// (I : g^infinity)
Ideal saturate(const Ideal& I, const Poly& g, SatMode mode = SatMode::colon,
               const GBOptions& opt = {});
// (I : J^infinity) as the intersection over generators g of J of (I : g^inf)
Ideal saturate(const Ideal& I, const Ideal& J, SatMode mode = SatMode::colon,
               const GBOptions& opt = {});

// affine Krull dimension of R/I via the lead-term staircase (largest
// variable subset meeting no lead-term support); -1 for the unit ideal.
// The projective dimension is this minus one.
int krull_dimension(const Ideal& I, const GBOptions& opt = {});
int krull_dimension(const Ideal& I, const MonomialOrder& ord,
                    const GBOptions& opt = {});

// radical membership through the Rabinowitsch trick: f in sqrt(I) iff
// 1 in I + (1 - s*f)
bool in_radical(const Poly& f, const Ideal& I, const GBOptions& opt = {});

struct SchemeMeasure {
  int krull_dimension = 0;  // projective; -1 only for the empty scheme
  long long degree = 0;
};

enum class ZeroDimMode {
  chart,    // random affine chart per grading block, staircase point count
  hilbert,  // stabilized value of the graded dimension function
};

// Degree of a projectively zero-dimensional scheme. Works on the given
// generators without saturating first: irrelevant components never meet
// the charts and never contribute to the stabilized dimension counts.
// Chart mode is cross-checked against the hilbert value and retries with
// fresh charts on mismatch; disagreement after all retries raises
// InconsistentResult. Throws NotZeroDimensional when the dimension
// function fails to stabilize (positive-dimensional) or stabilizes at
// zero (empty scheme).
SchemeMeasure degree_zero_dim(const Ideal& I, ZeroDimMode mode,
                              std::uint64_t seed = 0,
                              const GBOptions& opt = {});

}  // namespace homaloidal

#endif
