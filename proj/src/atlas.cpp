#include "homaloidal/atlas.hpp"

#include <chrono>

#include <json.hpp>

#include "homaloidal/parse.hpp"

namespace homaloidal {

namespace {

RingPtr atlas_ring(const FieldPtr& F) {
  return Ring::make(F, {"x0", "x1", "x2"});
}

Poly near_pencil_poly(const RingPtr& R, int n, std::uint64_t slope_seed) {
  const Field& F = *R->field();
  Poly x0 = Poly::variable(R, 0);
  Poly x1 = Poly::variable(R, 1);
  Poly f = x0.mul(x1);
  if (F.finite()) {
    mpz_class order = F.size() - 1;
    FieldElem gamma = F.multiplicative_generator();
    FieldElem c = F.pow(gamma, mpz_class(slope_seed) % order);
    for (int j = 0; j < n - 2; ++j) {
      f = f.mul(x0.add(x1.scale(c)));
      c = F.mul(c, gamma);
    }
  } else {
    for (int j = 1; j <= n - 2; ++j)
      f = f.mul(x0.add(x1.scale(F.from_int(
          static_cast<long>(slope_seed) + j))));
  }
  return f.mul(Poly::variable(R, 2));
}

}  // namespace

FamilyResult family_make(const FamilySpec& spec) {
  if (!spec.field) throw MathError("family needs a coefficient field");
  FamilyResult out;
  out.field = spec.field;

  if (spec.name == "near-pencil") {
    if (spec.n < 2) throw MathError("near-pencil needs n >= 2");
    const Field& F = *spec.field;
    if (F.finite() && F.size() - 1 < spec.n - 2) {
      // need n-2 distinct nonzero slopes
      if (!spec.allow_extension)
        throw FieldTooSmall(F.name() + " has fewer than " +
                            std::to_string(spec.n - 2) + " nonzero slopes");
      int k = 2;
      mpz_class size = F.size() * F.size();
      while (size - 1 < spec.n - 2) {
        size *= F.size();
        ++k;
      }
      out.field = Field::extension(spec.field, k, 1);
      out.extended = true;
    }
    out.f = near_pencil_poly(atlas_ring(out.field), spec.n, spec.slope_seed);
    out.label = "near-pencil n=" + std::to_string(spec.n) + " over " +
                out.field->name();
    if (out.extended) out.label += " (extended from " + spec.field->name() + ")";
    return out;
  }

  auto R = atlas_ring(out.field);
  if (spec.name == "gn") {
    if (spec.n < 2) throw MathError("gn needs n >= 2");
    Poly x0 = Poly::variable(R, 0);
    Poly x1 = Poly::variable(R, 1);
    Poly x2 = Poly::variable(R, 2);
    out.f = x0.mul(x1).mul(x1.pow(spec.n - 1).add(x0.pow(spec.n - 2).mul(x2)));
    out.label = "gn n=" + std::to_string(spec.n) + " over " + out.field->name();
    return out;
  }
  if (spec.name == "intro-quintic") {
    out.f = parse_poly(R, "x0*(x1^2+x0*x2)*(2*x1^2+x0*x2)");
  } else if (spec.name == "q5-quintic") {
    out.f = parse_poly(R, "x0*(x1^2+x0*x2)*(x1^2+x0*x2+x0^2)");
  } else if (spec.name == "ramphoid") {
    out.f = parse_poly(R, "x2*(x1^4 - 2*x0*x1^2*x2 + x0^2*x2^2 - x1*x2^3)");
  } else {
    throw MathError("unknown family: " + spec.name);
  }
  out.label = spec.name + " over " + out.field->name();
  return out;
}

AnalysisReport analyze(const Poly& f, int trials, std::uint64_t seed,
                       const std::string& input_echo, const GBOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.schema = "curve-report/1";
  rep.input = input_echo.empty() ? f.str() : input_echo;
  rep.trials = trials;
  rep.seed = seed;
  rep.verdict = is_homaloidal(f, trials, seed, opt);

  if (rep.verdict.verdict != Verdict::undefined_map) {
    try {
      rep.presentation = minimal_presentation(rep.verdict.partials, opt);
      if (rep.presentation->width() == 2) {
        auto fit = fitting_ideal(*rep.presentation, opt);
        if (fit.which >= 0) {
          static const char* kPattern[] = {"(x0, x1)", "(x1, x2)", "(x0, x2)",
                                           "(x0, x1, x2)"};
          rep.fitting_radical = kPattern[fit.which];
        }
        try {
          rep.hypotheses = birationality_hypotheses(
              *rep.presentation, f.total_degree() - 1, std::nullopt, opt);
        } catch (const MathError&) {
        }
      }
    } catch (const InconsistentResult&) {
      throw;  // a failed self-check is never a missing-feature situation
    } catch (const MathError&) {
    }
  }
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

std::string report_json(const AnalysisReport& rep, bool include_timing) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = rep.schema;
  j["input"] = rep.input;
  j["analysis"] = nlohmann::ordered_json::parse(verdict_json(rep.verdict));
  if (rep.presentation)
    j["presentation"] =
        nlohmann::ordered_json::parse(presentation_json(*rep.presentation));
  if (rep.hypotheses) {
    const auto& h = *rep.hypotheses;
    j["linearityHypotheses"] = {
        {"pair", {h.u, h.v}},
        {"n", h.n},
        {"firstColumnLinearInPair", h.first_column_linear_in_pair},
        {"secondColumnInPower", h.second_column_in_power},
        {"secondColumnEscapes", h.second_column_escapes},
        {"minorsHeightTwo", h.minors_height_two},
        {"all", h.all()},
    };
  }
  if (!rep.fitting_radical.empty())
    j["entryIdealRadical"] = rep.fitting_radical;
  j["seed"] = rep.seed;
  j["trialsRequested"] = rep.trials;
  if (include_timing) j["timing"] = {{"seconds", rep.seconds}};
  return j.dump(2);
}

std::string report_text(const AnalysisReport& rep) {
  const auto& v = rep.verdict;
  std::string out;
  out += "input:       " + rep.input + "\n";
  out += "field:       " + v.f.ring()->field()->name() + "\n";
  out += "f:           " + v.f.str() + "\n";
  out += "verdict:     " + std::string(verdict_name(v.verdict)) + "\n";
  out += "multidegree: (" + std::to_string(v.multidegree.d0) + ", " +
         std::to_string(v.multidegree.d1) + ", " +
         std::to_string(v.multidegree.d2) + ")\n";
  if (v.graph) {
    const auto& g = *v.graph;
    out += "naive:       (" + std::to_string(g.naive.d0) + ", " +
           std::to_string(g.naive.d1) + ", " + std::to_string(g.naive.d2) +
           ")\n";
    out += "torsion:     (" + std::to_string(g.torsion[0]) + ", " +
           std::to_string(g.torsion[1]) + ", " + std::to_string(g.torsion[2]) +
           ")\n";
  }
  if (rep.presentation) {
    out += "relations:   " + std::to_string(rep.presentation->width()) +
           " columns, degrees";
    for (int d : rep.presentation->column_degrees)
      out += " " + std::to_string(d);
    out += "\n";
  }
  if (rep.hypotheses)
    out += std::string("hypotheses:  ") +
           (rep.hypotheses->all() ? "pass" : "fail") + " on pair (x" +
           std::to_string(rep.hypotheses->u) + ", x" +
           std::to_string(rep.hypotheses->v) + ")\n";
  if (!rep.fitting_radical.empty())
    out += "entry ideal: radical " + rep.fitting_radical + "\n";
  out += "time:        " + std::to_string(rep.seconds) + "s\n";
  return out;
}

}  // namespace homaloidal
