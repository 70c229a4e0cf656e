#include "homaloidal/polar.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "homaloidal/groebner.hpp"

namespace homaloidal {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9E3779B97F4A7C15ull * (b + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

bool is_unit(const Ideal& I, const GBOptions& opt) {
  auto gb = groebner(I, MonomialOrder::degrevlex(I.ring->nvars()), opt);
  return gb.elements.size() == 1 && gb.elements[0].is_constant();
}

std::vector<FieldElem> random_row(const Field& F, int width, Rng& rng) {
  std::vector<FieldElem> row;
  for (;;) {
    row.clear();
    bool nonzero = false;
    for (int i = 0; i < width; ++i) {
      row.push_back(F.random_elem(rng));
      if (!F.is_zero(row.back())) nonzero = true;
    }
    if (nonzero) return row;
  }
}

std::vector<std::string> row_strings(const Field& F,
                                     const std::vector<FieldElem>& row) {
  std::vector<std::string> out;
  for (const auto& c : row) out.push_back(F.to_string(c));
  return out;
}

Poly combine(const std::array<Poly, 3>& g, const std::vector<FieldElem>& row) {
  Poly out = Poly::zero(g[0].ring());
  for (int i = 0; i < 3; ++i)
    out = out.add(g[std::size_t(i)].scale(row[std::size_t(i)]));
  return out;
}

Poly linear_form(const RingPtr& R, const std::vector<int>& vars,
                 const std::vector<FieldElem>& row) {
  Poly out = Poly::zero(R);
  for (std::size_t i = 0; i < vars.size(); ++i)
    out = out.add(Poly::variable(R, vars[i]).scale(row[i]));
  return out;
}

constexpr int kSectionRetries = 8;

}  // namespace

PolarMap polar_map(const Poly& f) {
  if (!f.ring()) throw MathError("polar map of an empty polynomial");
  if (f.is_zero() || !f.is_homogeneous() || f.total_degree() < 2)
    throw MathError("polar map needs a homogeneous form of degree at least two");
  if (f.ring()->nvars() != 3)
    throw MathError("polar map lives on three coordinates");
  PolarMap pm{f, {f.derivative(0), f.derivative(1), f.derivative(2)},
              f.total_degree()};
  bool all_zero = true;
  for (const auto& g : pm.partials)
    if (!g.is_zero()) all_zero = false;
  if (all_zero)
    throw UndefinedMap("every partial derivative vanishes in this characteristic");
  return pm;
}

bool fixed_component_free(const PolarMap& pm, const GBOptions& opt) {
  std::vector<Poly> gens;
  for (const auto& g : pm.partials)
    if (!g.is_zero()) gens.push_back(g);
  return krull_dimension(Ideal::make(pm.f.ring(), gens), opt) <= 1;
}

FieldPtr working_field(const FieldPtr& F, std::uint64_t seed) {
  if (!F->finite()) return F;
  const mpz_class threshold = 65536;
  mpz_class sz = F->size();
  if (sz >= threshold) return F;
  int k = 1;
  mpz_class acc = sz;
  while (acc < threshold) {
    acc *= sz;
    ++k;
  }
  return Field::extension(F, k, mix(seed, 0xF1E7Dull));
}

TopDegree topological_degree(const PolarMap& pm, int trials,
                             std::uint64_t seed, const GBOptions& opt) {
  if (trials < 1) throw MathError("at least one trial");
  const RingPtr& R0 = pm.f.ring();
  FieldPtr Fw = working_field(R0->field(), seed);
  RingPtr R = R0;
  std::array<Poly, 3> g = pm.partials;
  if (Fw != R0->field()) {
    R = Ring::make(Fw, R0->var_names(), R0->grading_blocks());
    for (auto& p : g) p = p.change_ring(R);
  }
  std::vector<Poly> base_gens;
  for (const auto& p : g)
    if (!p.is_zero()) base_gens.push_back(p);
  Ideal base = Ideal::make(R, base_gens);

  TopDegree out;
  for (int t = 0; t < trials; ++t) {
    bool done = false;
    for (int attempt = 0; attempt < kSectionRetries && !done; ++attempt) {
      std::uint64_t sub = mix(seed, std::uint64_t(t) * 64 + std::uint64_t(attempt));
      Rng rng(sub);
      std::vector<FieldElem> r0 = random_row(*Fw, 3, rng);
      std::vector<FieldElem> r1 = random_row(*Fw, 3, rng);
      Poly s0 = combine(g, r0);
      Poly s1 = combine(g, r1);
      if (s0.is_zero() || s1.is_zero()) continue;

      FiberTrial trial;
      trial.section.seed = sub;
      trial.section.trial = t;
      trial.section.field = Fw->name();
      trial.section.combo_rows = {row_strings(*Fw, r0), row_strings(*Fw, r1)};

      Ideal Ig = Ideal::make(R, {s0, s1});
      Ideal S = saturate(Ig, base, SatMode::colon, opt);
      if (is_unit(S, opt)) {
        trial.dominant = false;
        trial.saturation_degree = 0;
        out.trials.push_back(std::move(trial));
        done = true;
        break;
      }
      if (krull_dimension(S, opt) != 1) continue;  // collapsed section
      trial.dominant = true;
      trial.saturation_degree =
          degree_zero_dim(S, ZeroDimMode::hilbert, sub, opt).degree;
      out.trials.push_back(std::move(trial));
      done = true;
    }
    if (!done)
      throw DegenerateSection("generic sections kept collapsing; field too small or map degenerate");
  }

  std::map<long long, int> votes;
  for (const auto& tr : out.trials) ++votes[tr.saturation_degree];
  auto best = votes.begin();
  for (auto it = votes.begin(); it != votes.end(); ++it)
    if (it->second > best->second) best = it;
  if (best->second == 1 && trials > 1)
    throw Inconclusive("every trial returned a different fiber degree");
  out.d0 = best->first;
  out.dominant = out.d0 > 0;
  out.unanimous = best->second == int(out.trials.size());
  return out;
}

MultiDegree projective_degrees(const PolarMap& pm, int trials,
                               std::uint64_t seed, const GBOptions& opt) {
  TopDegree top = topological_degree(pm, trials, seed, opt);
  MultiDegree md;
  md.d0 = top.d0;
  md.d1 = pm.degree - 1;
  md.d2 = top.dominant ? 1 : 0;
  md.provenance = {"fiber-saturation", "degree-minus-one", "dominance"};
  md.trials = trials;
  return md;
}

GraphDegrees graph_multidegree_via_sections(const PresentationMatrix& M,
                                            int trials, std::uint64_t seed,
                                            const GBOptions& opt) {
  if (M.width() != 2)
    throw NotDeterminantal("graph sections need a two column presentation");
  if (trials < 1) throw MathError("at least one trial");
  const RingPtr& R0 = M.ring;
  if (R0->nvars() != 3) throw MathError("graph sections live over three coordinates");

  FieldPtr Fw = working_field(R0->field(), seed);
  std::vector<std::string> names = R0->var_names();
  names.insert(names.end(), {"y0", "y1", "y2"});
  RingPtr S = Ring::make(Fw, names, {{0, 1, 2}, {3, 4, 5}});

  // row ideal: entries of (y0 y1 y2) * M
  std::vector<Poly> row_gens;
  for (const auto& col : M.columns) {
    Poly s = Poly::zero(S);
    for (int i = 0; i < 3; ++i)
      s = s.add(Poly::variable(S, 3 + i).mul(col[std::size_t(i)].change_ring(S)));
    row_gens.push_back(s);
  }
  Ideal naiveI = Ideal::make(S, row_gens);

  // entry ideal, reduced first so variable generators saturate fast
  std::vector<Poly> entries;
  for (const auto& col : M.columns)
    for (const auto& p : col)
      if (!p.is_zero()) entries.push_back(p);
  auto entry_gb =
      groebner(Ideal::make(R0, entries), MonomialOrder::degrevlex(3), opt);
  std::vector<Poly> fitt;
  for (const auto& p : entry_gb.elements) fitt.push_back(p.change_ring(S));

  Ideal graphI = saturate(naiveI, Ideal::make(S, fitt), SatMode::fast, opt);

  const std::vector<int> xv = {0, 1, 2}, yv = {3, 4, 5};
  GraphDegrees out;
  std::map<std::array<long long, 6>, int> votes;
  std::map<std::array<long long, 6>, GenericSection> reps;

  for (int t = 0; t < trials; ++t) {
    bool done = false;
    for (int attempt = 0; attempt < kSectionRetries && !done; ++attempt) {
      std::uint64_t sub = mix(seed ^ 0x9AE16A3B2F90404Full,
                              std::uint64_t(t) * 64 + std::uint64_t(attempt));
      Rng rng(sub);
      std::vector<std::vector<FieldElem>> xr = {random_row(*Fw, 3, rng),
                                                random_row(*Fw, 3, rng)};
      std::vector<std::vector<FieldElem>> yr = {random_row(*Fw, 3, rng),
                                                random_row(*Fw, 3, rng)};
      GenericSection sec;
      sec.seed = sub;
      sec.trial = t;
      sec.field = Fw->name();
      sec.x_rows = {row_strings(*Fw, xr[0]), row_strings(*Fw, xr[1])};
      sec.y_rows = {row_strings(*Fw, yr[0]), row_strings(*Fw, yr[1])};

      std::array<long long, 6> tuple{};
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        std::vector<Poly> cuts;
        for (int k = 0; k < i; ++k) cuts.push_back(linear_form(S, xv, xr[std::size_t(k)]));
        for (int k = 0; k < 2 - i; ++k) cuts.push_back(linear_form(S, yv, yr[std::size_t(k)]));
        try {
          std::vector<Poly> gg = graphI.gens;
          gg.insert(gg.end(), cuts.begin(), cuts.end());
          tuple[std::size_t(i)] =
              degree_zero_dim(Ideal::make(S, gg), ZeroDimMode::hilbert, sub, opt)
                  .degree;
          std::vector<Poly> ng = naiveI.gens;
          ng.insert(ng.end(), cuts.begin(), cuts.end());
          tuple[std::size_t(3 + i)] =
              degree_zero_dim(Ideal::make(S, ng), ZeroDimMode::hilbert, sub, opt)
                  .degree;
        } catch (const NotZeroDimensional&) {
          ok = false;
        }
      }
      if (!ok) continue;
      ++votes[tuple];
      reps.emplace(tuple, sec);
      out.sections.push_back(std::move(sec));
      done = true;
    }
    if (!done)
      throw DegenerateSection("graph sections kept collapsing; field too small or matrix degenerate");
  }

  auto best = votes.begin();
  for (auto it = votes.begin(); it != votes.end(); ++it)
    if (it->second > best->second) best = it;
  if (best->second == 1 && trials > 1)
    throw Inconclusive("every graph trial returned different section counts");

  const auto& tu = best->first;
  out.graph.d0 = tu[0];
  out.graph.d1 = tu[1];
  out.graph.d2 = tu[2];
  out.graph.provenance = {"graph-sections", "graph-sections", "graph-sections"};
  out.graph.trials = trials;
  out.naive.d0 = tu[3];
  out.naive.d1 = tu[4];
  out.naive.d2 = tu[5];
  out.naive.provenance = {"naive-sections", "naive-sections", "naive-sections"};
  out.naive.trials = trials;
  for (int i = 0; i < 3; ++i)
    out.torsion[std::size_t(i)] = tu[std::size_t(3 + i)] - tu[std::size_t(i)];
  out.unanimous = best->second == int(out.sections.size());
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::homaloidal: return "homaloidal";
    case Verdict::not_dominant: return "not-dominant";
    case Verdict::fixed_component: return "fixed-component";
    case Verdict::degree_gt_one: return "degree-gt-one";
    case Verdict::undefined_map: return "undefined-map";
  }
  return "undefined-map";
}

HomaloidalVerdict is_homaloidal(const Poly& f, int trials, std::uint64_t seed,
                                const GBOptions& opt) {
  HomaloidalVerdict out;
  out.f = f;
  out.partials = {Poly::zero(f.ring()), Poly::zero(f.ring()), Poly::zero(f.ring())};

  PolarMap pm;
  try {
    pm = polar_map(f);
  } catch (const UndefinedMap&) {
    out.verdict = Verdict::undefined_map;
    return out;
  }
  out.partials = pm.partials;

  out.fixed_free = fixed_component_free(pm, opt);
  if (!out.fixed_free) {
    out.verdict = Verdict::fixed_component;
    return out;
  }

  out.fiber = topological_degree(pm, trials, seed, opt);
  out.dominant = out.fiber.dominant;
  out.multidegree.d0 = out.fiber.d0;
  out.multidegree.d1 = pm.degree - 1;
  out.multidegree.d2 = out.dominant ? 1 : 0;
  out.multidegree.provenance = {"fiber-saturation", "degree-minus-one",
                                "dominance"};
  out.multidegree.trials = trials;

  if (!out.dominant) {
    out.verdict = Verdict::not_dominant;
    return out;
  }

  try {
    PresentationMatrix M = minimal_presentation(pm.partials, opt);
    if (M.width() == 2) {
      out.by_columns = naive_degrees(M);
      GraphDegrees gd =
          graph_multidegree_via_sections(M, trials, mix(seed, 0x6D5Aull), opt);
      if (gd.graph.d0 != out.fiber.d0)
        throw InconsistentResult(
            "graph sections and fiber saturation disagree on the topological degree");
      out.graph = std::move(gd);
    }
  } catch (const NotDeterminantal&) {
    // more than two relation columns: no determinantal cross-check
  }

  out.verdict = out.fiber.d0 == 1 ? Verdict::homaloidal : Verdict::degree_gt_one;
  return out;
}

std::string verdict_json(const HomaloidalVerdict& v) {
  nlohmann::json j;
  j["field"] = v.f.ring() ? v.f.ring()->field()->name() : "";
  j["f"] = v.f.str();
  j["partials"] = nlohmann::json::array();
  for (const auto& g : v.partials) j["partials"].push_back(g.str());
  j["fixedComponentFree"] = v.fixed_free;
  j["dominant"] = v.dominant;
  j["verdict"] = verdict_name(v.verdict);
  j["multidegree"] = {{"d0", v.multidegree.d0},
                      {"d1", v.multidegree.d1},
                      {"d2", v.multidegree.d2}};
  if (v.graph) {
    j["naive"] = {{"d0", v.graph->naive.d0},
                  {"d1", v.graph->naive.d1},
                  {"d2", v.graph->naive.d2}};
    j["torsion"] = {{"d0", v.graph->torsion[0]},
                    {"d1", v.graph->torsion[1]},
                    {"d2", v.graph->torsion[2]}};
  }
  j["trials"] = nlohmann::json::array();
  for (const auto& tr : v.fiber.trials) {
    nlohmann::json jt;
    jt["seed"] = tr.section.seed;
    jt["sectionCoefficients"] = tr.section.combo_rows;
    jt["saturationDegree"] = tr.saturation_degree;
    j["trials"].push_back(std::move(jt));
  }
  return j.dump(2);
}

}  // namespace homaloidal
