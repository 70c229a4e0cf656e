#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "homaloidal/polar.hpp"
#include "homaloidal/syzygy.hpp"

namespace homaloidal {

// Named curve families. near-pencil and gn take the integer parameter n,
// the three quintic/quartic specimens ignore it.
struct FamilySpec {
  std::string name;  // near-pencil | gn | intro-quintic | q5-quintic | ramphoid
  int n = 0;
  FieldPtr field;
  std::uint64_t slope_seed = 0;   // shifts the near-pencil slope window
  bool allow_extension = true;    // grow the field when it has too few slopes
};

struct FamilyResult {
  Poly f;
  FieldPtr field;  // the field actually used, possibly an extension
  bool extended = false;
  std::string label;
};

// Deterministic generator for every named family. The near-pencil takes
// n >= 2 concurrent lines with slopes read off consecutive powers of the
// multiplicative generator (finite fields) or consecutive integers
// (rationals), both windows shifted by slope_seed; too-small fields are
// extended just far enough when allowed, otherwise FieldTooSmall.
FamilyResult family_make(const FamilySpec& spec);

struct AnalysisReport {
  std::string schema;
  std::string input;  // echo of the polynomial or family that was analyzed
  HomaloidalVerdict verdict;
  std::optional<PresentationMatrix> presentation;
  std::optional<HypothesisReport> hypotheses;
  std::string fitting_radical;  // "(x0, x1)" style, empty when unavailable
  int trials = 0;
  std::uint64_t seed = 0;
  double seconds = 0.0;
};

// Full pipeline on one polynomial: verdict with both degree methods, the
// relation matrix with its certificates, the linearity hypotheses and the
// entry-ideal radical when the matrix has two columns.
AnalysisReport analyze(const Poly& f, int trials = 3, std::uint64_t seed = 0,
                       const std::string& input_echo = "",
                       const GBOptions& opt = {});

// Versioned JSON certificate; timing is the one field golden tests drop.
std::string report_json(const AnalysisReport& rep, bool include_timing = true);

// Terminal-friendly summary of the same content.
std::string report_text(const AnalysisReport& rep);

}  // namespace homaloidal
