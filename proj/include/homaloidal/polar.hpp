#ifndef HOMALOIDAL_POLAR_HPP
#define HOMALOIDAL_POLAR_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homaloidal/syzygy.hpp"

namespace homaloidal {

// gradient map of a homogeneous form, P^2 -> P^2
struct PolarMap {
  Poly f;
  std::array<Poly, 3> partials;
  int degree = 0;  // of f

  const RingPtr& ring() const { return f.ring(); }
};

// Throws UndefinedMap when every partial vanishes (p-th power patterns),
// MathError when f is not homogeneous of degree at least two.
PolarMap polar_map(const Poly& f);

// True iff the common zero locus of the partials has projective dimension
// at most zero; a curve component there is exactly a common factor.
bool fixed_component_free(const PolarMap& pm, const GBOptions& opt = {});

// smallest extension of F with at least 2^16 elements (F itself when
// already that large, or infinite)
FieldPtr working_field(const FieldPtr& F, std::uint64_t seed);

// One recorded random draw. Coefficient rows are kept verbatim as strings
// of the working field so a run can be replayed and audited.
struct GenericSection {
  std::uint64_t seed = 0;
  int trial = 0;
  std::string field;
  std::vector<std::vector<std::string>> combo_rows;  // combinations of the partials
  std::vector<std::vector<std::string>> x_rows;      // linear cuts in x
  std::vector<std::vector<std::string>> y_rows;      // linear cuts in y
};

struct FiberTrial {
  GenericSection section;
  bool dominant = false;
  long long saturation_degree = 0;  // 0 when the generic fiber is empty
};

struct TopDegree {
  long long d0 = 0;
  bool dominant = false;
  bool unanimous = true;
  std::vector<FiberTrial> trials;
};

// Degree of the generic fiber: two random combinations of the partials,
// saturated by the base ideal; the modal value over the trials wins.
// Throws DegenerateSection when sections keep collapsing, Inconclusive
// when every trial disagrees.
TopDegree topological_degree(const PolarMap& pm, int trials = 3,
                             std::uint64_t seed = 0, const GBOptions& opt = {});

struct MultiDegree {
  long long d0 = 0;
  long long d1 = 0;
  long long d2 = 0;
  std::array<std::string, 3> provenance;
  int trials = 0;
};

// d0 by fiber saturation, d1 = deg(f) - 1 (no fixed component), d2 from
// dominance.
MultiDegree projective_degrees(const PolarMap& pm, int trials = 3,
                               std::uint64_t seed = 0,
                               const GBOptions& opt = {});

// Multidegrees of the closed image of the section row in P^2 x P^2 cut by
// random linear forms: `naive` sections the unsaturated row ideal, `graph`
// the same ideal saturated by the matrix entries, torsion is their
// componentwise difference.
struct GraphDegrees {
  MultiDegree graph;
  MultiDegree naive;
  std::array<long long, 3> torsion{0, 0, 0};
  bool unanimous = true;
  std::vector<GenericSection> sections;
};

GraphDegrees graph_multidegree_via_sections(const PresentationMatrix& M,
                                            int trials = 3,
                                            std::uint64_t seed = 0,
                                            const GBOptions& opt = {});

enum class Verdict {
  homaloidal,
  not_dominant,
  fixed_component,
  degree_gt_one,
  undefined_map,
};
std::string verdict_name(Verdict v);

struct HomaloidalVerdict {
  Verdict verdict = Verdict::undefined_map;
  Poly f;
  std::array<Poly, 3> partials;
  bool fixed_free = false;
  bool dominant = false;
  MultiDegree multidegree;  // meaningful from the dominance stage on
  TopDegree fiber;
  std::optional<GraphDegrees> graph;        // two-column cross-check
  std::optional<NaiveDegrees> by_columns;   // section counts from column degrees
};

// Full pipeline with the two-route consistency check: a two-column
// presentation triggers the graph-section computation and a d0 mismatch
// against the fiber route is a hard InconsistentResult.
HomaloidalVerdict is_homaloidal(const Poly& f, int trials = 3,
                                std::uint64_t seed = 0,
                                const GBOptions& opt = {});

std::string verdict_json(const HomaloidalVerdict& v);

}  // namespace homaloidal

#endif
