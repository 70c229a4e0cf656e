#ifndef HOMALOIDAL_SYZYGY_HPP
#define HOMALOIDAL_SYZYGY_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "homaloidal/ideal.hpp"

namespace homaloidal {

// Minimal generating set of the relation module of three homogeneous forms
// of one common degree (individual entries may be zero, not all of them).
// Every returned column (a0, a1, a2) satisfies a0*g0 + a1*g1 + a2*g2 == 0
// identically; the list is sorted by column degree ascending and pruned so
// that no column lies in the module generated by the earlier ones. The
// ring order steers the internal module basis; any order gives a valid
// answer.
std::vector<std::array<Poly, 3>> syzygies(const std::array<Poly, 3>& g,
                                          const MonomialOrder& ring_order,
                                          const GBOptions& opt = {});
std::vector<std::array<Poly, 3>> syzygies(const std::array<Poly, 3>& g,
                                          const GBOptions& opt = {});

// First syzygy matrix of a row of three forms: columns minimally generate
// the relation module, recorded with their degrees in ascending order.
struct PresentationMatrix {
  RingPtr ring;
  std::array<Poly, 3> source;                // the presented forms, row order fixed
  std::vector<std::array<Poly, 3>> columns;  // columns[k][row]
  std::vector<int> column_degrees;           // ascending, one per column

  int width() const { return static_cast<int>(columns.size()); }
};

PresentationMatrix minimal_presentation(const std::array<Poly, 3>& g,
                                        const MonomialOrder& ring_order,
                                        const GBOptions& opt = {});
PresentationMatrix minimal_presentation(const std::array<Poly, 3>& g,
                                        const GBOptions& opt = {});

// Signed maximal minors of a 3 x 2 presentation: entry j is (-1)^j times
// the 2 x 2 minor obtained by deleting row j. Throws NotDeterminantal when
// the matrix does not have exactly two columns.
std::array<Poly, 3> signed_minors(const PresentationMatrix& M);

// Checks the determinantal reconstruction: source[j] == scalar * minors[j]
// for one common nonzero scalar. For a two-column minimal presentation of
// a height-two ideal this must hold.
struct MinorMatch {
  bool holds = false;
  FieldElem scalar;  // meaningful only when holds
  std::array<Poly, 3> minors;
};
MinorMatch minors_match_source(const PresentationMatrix& M);

// Ideal of all matrix entries, with its radical compared against the four
// coordinate candidates (x0,x1), (x1,x2), (x0,x2), (x0,x1,x2) in that
// order. `which` is the index of the matching candidate, -1 when none.
struct FittingReport {
  Ideal entries;
  std::array<bool, 4> radical_is{false, false, false, false};
  int which = -1;
};
FittingReport fitting_ideal(const PresentationMatrix& M,
                            const GBOptions& opt = {});

// (a*b, a+b, 1) from the column degrees (a, b) of a two-column
// presentation; these are the section counts of the naive graph when the
// presented forms have height two. Throws NotDeterminantal otherwise.
struct NaiveDegrees {
  long long d0 = 0;
  long long d1 = 0;
  long long d2 = 0;
};
NaiveDegrees naive_degrees(const PresentationMatrix& M);

// Hypotheses under which a two-column presentation certifies a birational
// polar map with a weight n-2 torsion over the distinguished point:
//   (a) first column entries are linear forms in the pair (u, v),
//   (b) second column entries lie in (u,v)^(n-2), homogeneous of degree n-1,
//   (c) some second column entry escapes (u,v)^(n-1),
//   (d) the ideal of signed minors has height two.
// When no pair is supplied the three coordinate pairs are tried in the
// order (0,1), (1,2), (0,2) and the first fully passing one is reported;
// if none passes the report for (0,1) is returned.
struct HypothesisReport {
  int u = -1;
  int v = -1;
  int n = 0;
  bool first_column_linear_in_pair = false;
  bool second_column_in_power = false;
  bool second_column_escapes = false;
  bool minors_height_two = false;

  bool all() const {
    return first_column_linear_in_pair && second_column_in_power &&
           second_column_escapes && minors_height_two;
  }
};
HypothesisReport birationality_hypotheses(
    const PresentationMatrix& M, int n,
    std::optional<std::pair<int, int>> pair = std::nullopt,
    const GBOptions& opt = {});

// aligned plain-text form of the matrix, one row per line
std::string pretty(const PresentationMatrix& M);

// JSON object with the source row, entries as polynomial strings in
// column-major order, column degrees, and the minor certificate when the
// matrix has two columns
std::string presentation_json(const PresentationMatrix& M);

}  // namespace homaloidal

#endif
