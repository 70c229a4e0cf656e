#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homaloidal/ideal.hpp"
#include "homaloidal/poly.hpp"

namespace homaloidal {

// A finite set of pairwise non-proportional linear forms in three variables.
struct LineArrangement {
  RingPtr ring;
  std::vector<Poly> lines;
  std::vector<std::array<FieldElem, 3>> coeffs;  // one row per line

  int d() const { return static_cast<int>(lines.size()); }
  Poly product() const;
};

// Validates: at least three lines, all degree-one forms over one ring,
// pairwise non-proportional (some 2x2 minor of each coefficient pair
// nonzero). Throws MathError otherwise.
LineArrangement make_arrangement(std::vector<Poly> lines);

// Parses a semicolon-separated list such as "x0; x1; x0+x1; x2".
LineArrangement arrangement_from_string(const RingPtr& ring,
                                        const std::string& text);

struct FoldPoint {
  std::array<FieldElem, 3> z;  // first nonzero coordinate scaled to one
  int r = 0;                   // number of incident lines
  std::string label;           // "(1 : 0 : 2)", also the dedup key
};

struct SingularityProfile {
  int d = 0;
  bool concurrent = false;  // all lines through one point
  std::vector<FoldPoint> points;
  std::map<int, long long> t;  // r -> number of r-fold points

  long long sum_tr() const;
};

// Intersects all pairs of lines, deduplicates projectively, counts the
// exact number of lines through each point. The pair-count identity
// sum_r t_r * r(r-1)/2 = d(d-1)/2 is asserted on every profile.
SingularityProfile singularity_profile(const LineArrangement& arr);

// Multiplicity of an r-fold point in the generic-section scheme:
// (r-1)^2 + (r-2) when p > 0 divides r, else (r-1)^2.
long long multiplicity_mz(int r, std::uint64_t p);

// (d-1)^2 minus the sum of the point multiplicities. Throws
// ConcurrentArrangement when the profile is a single pencil (the polar
// map is not dominant there, so no fiber degree exists). When p divides
// every r >= 3 present in the profile this must equal
// 1 + (sum_r t_r - d); the equality is asserted internally.
long long combinatorial_d0(const SingularityProfile& profile, std::uint64_t p);

struct NearPencilReport {
  bool near_pencil = false;
  long long sum_tr = 0;
  bool sum_equals_d = false;
};

// d-1 concurrent lines plus one transversal: t_{d-1} = 1, t_2 = d-1 and
// nothing else. For d = 3 the two buckets collide and the test degenerates
// to "three general lines" (t_2 = 3). Also reports whether sum t_r = d,
// the equality that characterizes near-pencils among arrangements outside
// finite projective planes.
NearPencilReport near_pencil_test(const SingularityProfile& profile);

enum class ArrClass {
  triangle,
  near_pencil_homaloidal,
  not_homaloidal,
  not_dominant,
};
std::string arr_class_name(ArrClass c);

struct CombinatorialVerdict {
  ArrClass classification = ArrClass::not_homaloidal;
  bool near_pencil = false;
  long long sum_tr = 0;
  std::optional<long long> d0;            // absent when concurrent
  std::optional<long long> algebraic_d0;  // present after a cross-check
  // d0 equals the fiber degree as a theorem: the characteristic does not
  // divide the line count (the Euler identity then traps all base points
  // on the curve) or the verdict is homaloidal. Otherwise the base locus
  // can have off-curve points that the point count cannot see and d0 is
  // only an upper bound for the fiber degree.
  bool degree_formula_exact = true;
  SingularityProfile profile;
};

// Classification over the arrangement's own field: concurrent pencils are
// not dominant; three general lines are homaloidal in every
// characteristic; otherwise only near-pencils of n+1 lines with p | n.
// With cross_check the saturation pipeline recomputes the fiber degree
// over a large extension of the same characteristic; a disagreement in
// the degree_formula_exact regime is a hard InconsistentResult carrying
// both values, outside it both values are reported.
CombinatorialVerdict classify_arrangement(const LineArrangement& arr,
                                          bool cross_check = false,
                                          std::uint64_t seed = 0,
                                          int trials = 2,
                                          const GBOptions& opt = {});

struct SweepRow {
  int d = 0;
  std::vector<int> subset;  // indices into the plane's line list
  std::map<int, long long> t;
  ArrClass cls = ArrClass::not_homaloidal;
  std::optional<long long> d0;
  std::optional<long long> algebraic_d0;  // filled on sampled rows
  bool checked = false;
};

struct SweepReport {
  std::uint64_t p = 0;
  int e = 1;
  long long q = 0;
  int d_lo = 0, d_hi = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> plane_lines;
  std::vector<SweepRow> rows;
  long long homaloidal_count = 0;
  int checked = 0;
  bool checks_agree = true;  // sweep aborts on disagreement, so always true
  std::map<std::string, long long> profile_buckets;  // t-vector -> count
};

// Enumerates every d-subset of the q^2+q+1 lines of the projective plane
// of order q = p^e (q <= 9), classifies each combinatorially, and
// replays a seeded random sample of size sample_algebraic per d through
// the saturation pipeline. Refuses with BudgetExceeded (carrying the
// subset count) when the enumeration would exceed max_subsets rows.
SweepReport sweep_projective_plane(std::uint64_t p, int e, int d_lo, int d_hi,
                                   int sample_algebraic,
                                   std::uint64_t seed = 0,
                                   long long max_subsets = 200000,
                                   const GBOptions& opt = {});

std::string sweep_csv(const SweepReport& rep);
std::string sweep_json(const SweepReport& rep);

}  // namespace homaloidal
