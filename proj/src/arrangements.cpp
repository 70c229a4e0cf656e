#include "homaloidal/arrangements.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "homaloidal/parse.hpp"
#include "homaloidal/polar.hpp"

namespace homaloidal {

namespace {

std::array<FieldElem, 3> line_coeffs(const Poly& l) {
  const auto& R = l.ring();
  const Field& F = *R->field();
  if (R->nvars() != 3) throw MathError("line arrangements live in three variables");
  if (l.is_zero() || l.total_degree() != 1 || !l.is_homogeneous())
    throw MathError("arrangement entry is not a linear form: " + l.str());
  std::array<FieldElem, 3> c = {F.zero(), F.zero(), F.zero()};
  for (const auto& t : l.terms())
    for (int i = 0; i < 3; ++i)
      if (t.m.e[i] == 1) c[i] = t.c;
  return c;
}

std::array<FieldElem, 3> cross(const Field& F, const std::array<FieldElem, 3>& a,
                               const std::array<FieldElem, 3>& b) {
  return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
          F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
          F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

bool all_zero(const Field& F, const std::array<FieldElem, 3>& v) {
  return F.is_zero(v[0]) && F.is_zero(v[1]) && F.is_zero(v[2]);
}

// scale so the first nonzero coordinate is one
void canonicalize(const Field& F, std::array<FieldElem, 3>& v) {
  for (auto& x : v)
    if (!F.is_zero(x)) {
      FieldElem s = F.inv(x);
      for (auto& y : v) y = F.mul(y, s);
      return;
    }
}

std::string point_label(const Field& F, const std::array<FieldElem, 3>& v) {
  return "(" + F.to_string(v[0]) + " : " + F.to_string(v[1]) + " : " +
         F.to_string(v[2]) + ")";
}

FieldElem dot(const Field& F, const std::array<FieldElem, 3>& a,
              const std::array<FieldElem, 3>& b) {
  FieldElem s = F.zero();
  for (int i = 0; i < 3; ++i) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

std::string t_vector_string(const std::map<int, long long>& t) {
  std::string out;
  for (const auto& [r, n] : t) {
    if (!out.empty()) out += "|";
    out += "t" + std::to_string(r) + "=" + std::to_string(n);
  }
  return out;
}

long long binomial_ll(long long n, long long k, long long cap) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (long long i = 1; i <= k; ++i) {
    b = b * (n - k + i) / i;
    if (b > cap) return cap + 1;
  }
  return b;
}

// The point-count formula equals the fiber degree exactly when the
// characteristic does not divide the line count: the Euler identity then
// pins every base point of the polar map onto the curve, where the profile
// sees it. When p | d the identity collapses and the base locus gains
// off-curve points (four general lines in characteristic two already show
// it: the count says 3, the fiber has degree 2), so the two numbers report
// different things and equality is only enforced in the exact regime.
bool formula_is_exact(int d, std::uint64_t p) {
  return p == 0 || d % static_cast<long long>(p) != 0;
}

// cross-check one arrangement against the saturation pipeline; throws
// InconsistentResult on a disagreement whenever equality is a theorem
long long algebraic_fiber_degree(const LineArrangement& arr, bool concurrent,
                                 std::optional<long long> expect, bool enforce,
                                 std::uint64_t seed, int trials,
                                 const GBOptions& opt) {
  auto pm = polar_map(arr.product());
  if (!concurrent && !fixed_component_free(pm, opt))
    throw InconsistentResult(
        "non-concurrent arrangement with a fixed component: " +
        pm.f.str());
  auto top = topological_degree(pm, trials, seed, opt);
  if (concurrent) {
    if (top.dominant)
      throw InconsistentResult(
          "pencil classified not-dominant but the saturation pipeline found "
          "fiber degree " + std::to_string(top.d0) + " for " + pm.f.str());
    return 0;
  }
  if (!top.dominant)
    throw InconsistentResult("combinatorial degree " +
                             std::to_string(expect ? *expect : -1) +
                             " but the polar map of " + pm.f.str() +
                             " is not dominant");
  if (enforce && expect && top.d0 != *expect)
    throw InconsistentResult(
        "degree methods disagree on " + pm.f.str() + ": combinatorial " +
        std::to_string(*expect) + " vs saturation " + std::to_string(top.d0) +
        " (seed " + std::to_string(seed) + ")");
  return top.d0;
}

}  // namespace

Poly LineArrangement::product() const {
  Poly f = Poly::constant(ring, ring->field()->one());
  for (const auto& l : lines) f = f.mul(l);
  return f;
}

LineArrangement make_arrangement(std::vector<Poly> lines) {
  if (lines.size() < 3) throw MathError("an arrangement needs at least three lines");
  const auto& R = lines.front().ring();
  const Field& F = *R->field();
  LineArrangement arr;
  arr.ring = R;
  for (const auto& l : lines) {
    if (l.ring() != R) throw MathError("arrangement lines over different rings");
    arr.coeffs.push_back(line_coeffs(l));
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (all_zero(F, cross(F, arr.coeffs[i], arr.coeffs[j])))
        throw MathError("proportional lines in arrangement: " + lines[i].str() +
                        " and " + lines[j].str());
  arr.lines = std::move(lines);
  return arr;
}

LineArrangement arrangement_from_string(const RingPtr& ring,
                                        const std::string& text) {
  std::vector<Poly> lines;
  std::string piece;
  std::stringstream ss(text);
  while (std::getline(ss, piece, ';')) {
    auto b = piece.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    lines.push_back(parse_poly(ring, piece));
  }
  return make_arrangement(std::move(lines));
}

long long SingularityProfile::sum_tr() const {
  long long s = 0;
  for (const auto& [r, n] : t) s += n;
  return s;
}

SingularityProfile singularity_profile(const LineArrangement& arr) {
  const Field& F = *arr.ring->field();
  SingularityProfile prof;
  prof.d = arr.d();
  std::map<std::string, std::array<FieldElem, 3>> seen;
  for (int i = 0; i < arr.d(); ++i)
    for (int j = i + 1; j < arr.d(); ++j) {
      auto z = cross(F, arr.coeffs[i], arr.coeffs[j]);
      canonicalize(F, z);
      seen.emplace(point_label(F, z), z);
    }
  for (const auto& [label, z] : seen) {
    FoldPoint pt;
    pt.z = z;
    pt.label = label;
    for (const auto& c : arr.coeffs)
      if (F.is_zero(dot(F, c, z))) ++pt.r;
    if (pt.r < 2) throw InconsistentResult("intersection point on fewer than two lines");
    prof.t[pt.r] += 1;
    prof.points.push_back(std::move(pt));
  }
  prof.concurrent = prof.points.size() == 1;
  long long pairs = 0;
  for (const auto& [r, n] : prof.t) pairs += n * (static_cast<long long>(r) * (r - 1) / 2);
  if (pairs != static_cast<long long>(prof.d) * (prof.d - 1) / 2)
    throw InconsistentResult("pair count identity failed for the profile " +
                             t_vector_string(prof.t));
  return prof;
}

long long multiplicity_mz(int r, std::uint64_t p) {
  if (r < 2) throw MathError("fold number below two");
  long long base = static_cast<long long>(r - 1) * (r - 1);
  if (p > 0 && static_cast<std::uint64_t>(r) % p == 0) base += r - 2;
  return base;
}

long long combinatorial_d0(const SingularityProfile& profile, std::uint64_t p) {
  if (profile.concurrent)
    throw ConcurrentArrangement("all lines pass through " +
                                profile.points.front().label);
  const long long d = profile.d;
  long long total = (d - 1) * (d - 1);
  for (const auto& [r, n] : profile.t) total -= n * multiplicity_mz(r, p);
  bool divides_all = true;
  for (const auto& [r, n] : profile.t)
    if (r >= 3 && n > 0 && !(p > 0 && static_cast<std::uint64_t>(r) % p == 0))
      divides_all = false;
  if (divides_all && total != 1 + (profile.sum_tr() - d))
    throw InconsistentResult("degree formula deviates from the pair identity");
  return total;
}

NearPencilReport near_pencil_test(const SingularityProfile& profile) {
  NearPencilReport rep;
  rep.sum_tr = profile.sum_tr();
  rep.sum_equals_d = rep.sum_tr == profile.d;
  if (profile.concurrent) return rep;
  if (profile.d == 3) {
    // the transversal buckets collide with the pencil bucket: three
    // general lines are the near-pencil on two lines
    rep.near_pencil = profile.t.size() == 1 && profile.t.count(2) &&
                      profile.t.at(2) == 3;
    return rep;
  }
  auto t2 = profile.t.count(2) ? profile.t.at(2) : 0;
  auto tbig = profile.t.count(profile.d - 1) ? profile.t.at(profile.d - 1) : 0;
  rep.near_pencil = profile.t.size() == 2 && tbig == 1 && t2 == profile.d - 1;
  return rep;
}

std::string arr_class_name(ArrClass c) {
  switch (c) {
    case ArrClass::triangle: return "triangle";
    case ArrClass::near_pencil_homaloidal: return "near-pencil-homaloidal";
    case ArrClass::not_homaloidal: return "not-homaloidal";
    case ArrClass::not_dominant: return "not-dominant";
  }
  return "?";
}

CombinatorialVerdict classify_arrangement(const LineArrangement& arr,
                                          bool cross_check, std::uint64_t seed,
                                          int trials, const GBOptions& opt) {
  CombinatorialVerdict v;
  v.profile = singularity_profile(arr);
  const std::uint64_t p = arr.ring->field()->characteristic();
  auto npr = near_pencil_test(v.profile);
  v.near_pencil = npr.near_pencil;
  v.sum_tr = npr.sum_tr;
  if (v.profile.concurrent) {
    v.classification = ArrClass::not_dominant;
  } else {
    v.d0 = combinatorial_d0(v.profile, p);
    const int n = arr.d() - 1;  // pencil size of the would-be near-pencil
    if (arr.d() == 3)
      v.classification = ArrClass::triangle;
    else if (v.near_pencil && p > 0 && n % static_cast<long long>(p) == 0)
      v.classification = ArrClass::near_pencil_homaloidal;
    else
      v.classification = ArrClass::not_homaloidal;
    bool flagged = v.classification != ArrClass::not_homaloidal;
    if (flagged != (*v.d0 == 1))
      throw InconsistentResult("classification and degree formula disagree on " +
                               t_vector_string(v.profile.t));
  }
  v.degree_formula_exact = formula_is_exact(arr.d(), p) ||
                           v.classification == ArrClass::triangle ||
                           v.classification == ArrClass::near_pencil_homaloidal;
  if (cross_check)
    v.algebraic_d0 =
        algebraic_fiber_degree(arr, v.profile.concurrent, v.d0,
                               v.degree_formula_exact, seed, trials, opt);
  return v;
}

SweepReport sweep_projective_plane(std::uint64_t p, int e, int d_lo, int d_hi,
                                   int sample_algebraic, std::uint64_t seed,
                                   long long max_subsets,
                                   const GBOptions& opt) {
  if (p == 0) throw MathError("sweeps need a finite plane");
  long long q = 1;
  for (int i = 0; i < e; ++i) q *= static_cast<long long>(p);
  if (e < 1 || q > 9) throw MathError("plane order out of range, need p^e <= 9");
  if (d_lo < 3 || d_hi < d_lo) throw MathError("bad line-count range");

  auto F = Field::make(p, e, 1);
  auto R = Ring::make(F, {"x0", "x1", "x2"});

  // the q^2+q+1 lines of the plane, indexed by normalized coefficient rows
  std::vector<std::array<FieldElem, 3>> rows;
  for (long b = 0; b < q; ++b)
    for (long c = 0; c < q; ++c)
      rows.push_back({F->one(), F->elem_at(b), F->elem_at(c)});
  for (long c = 0; c < q; ++c)
    rows.push_back({F->zero(), F->one(), F->elem_at(c)});
  rows.push_back({F->zero(), F->zero(), F->one()});

  std::vector<Poly> plane;
  SweepReport rep;
  rep.p = p;
  rep.e = e;
  rep.q = q;
  rep.d_lo = d_lo;
  rep.d_hi = d_hi;
  rep.seed = seed;
  for (const auto& r : rows) {
    Poly l = Poly::zero(R);
    for (int i = 0; i < 3; ++i)
      l = l.add(Poly::variable(R, i).scale(r[i]));
    plane.push_back(l);
    rep.plane_lines.push_back(l.str());
  }
  const int L = static_cast<int>(plane.size());

  long long total = 0;
  for (int d = d_lo; d <= d_hi; ++d) {
    if (d > L) throw MathError("more lines requested than the plane holds");
    total += binomial_ll(L, d, max_subsets);
    if (total > max_subsets)
      throw BudgetExceeded("sweep would enumerate more than " +
                           std::to_string(max_subsets) +
                           " subsets; pass a larger budget");
  }

  for (int d = d_lo; d <= d_hi; ++d) {
    std::size_t first_row = rep.rows.size();
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      std::vector<Poly> lines;
      for (int i : idx) lines.push_back(plane[i]);
      auto arr = make_arrangement(std::move(lines));
      auto verdict = classify_arrangement(arr);
      SweepRow row;
      row.d = d;
      row.subset = idx;
      row.t = verdict.profile.t;
      row.cls = verdict.classification;
      row.d0 = verdict.d0;
      if (row.cls == ArrClass::triangle ||
          row.cls == ArrClass::near_pencil_homaloidal)
        ++rep.homaloidal_count;
      rep.profile_buckets[t_vector_string(row.t)] += 1;
      rep.rows.push_back(std::move(row));
      // next d-combination of {0..L-1}
      int i = d - 1;
      while (i >= 0 && idx[i] == L - d + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    // replay a seeded sample through the saturation pipeline
    std::size_t count = rep.rows.size() - first_row;
    if (sample_algebraic > 0 && count > 0) {
      std::mt19937_64 rng(seed ^ (0xA11CEull * d));
      std::vector<std::size_t> pick(count);
      for (std::size_t i = 0; i < count; ++i) pick[i] = first_row + i;
      std::shuffle(pick.begin(), pick.end(), rng);
      pick.resize(std::min<std::size_t>(sample_algebraic, count));
      for (std::size_t ri : pick) {
        auto& row = rep.rows[ri];
        std::vector<Poly> lines;
        for (int i : row.subset) lines.push_back(plane[i]);
        auto arr = make_arrangement(std::move(lines));
        bool enforce = formula_is_exact(d, p) ||
                       row.cls == ArrClass::triangle ||
                       row.cls == ArrClass::near_pencil_homaloidal;
        row.algebraic_d0 = algebraic_fiber_degree(
            arr, row.cls == ArrClass::not_dominant, row.d0, enforce,
            seed ^ (ri * 0x9E3779B97F4A7C15ull), 1, opt);
        row.checked = true;
        ++rep.checked;
      }
    }
  }
  return rep;
}

std::string sweep_csv(const SweepReport& rep) {
  std::string out = "d,subset,profile,classification,d0,algebraicD0,checked\n";
  for (const auto& row : rep.rows) {
    std::string subset;
    for (int i : row.subset) {
      if (!subset.empty()) subset += "|";
      subset += std::to_string(i);
    }
    out += std::to_string(row.d) + "," + subset + "," + t_vector_string(row.t) +
           "," + arr_class_name(row.cls) + ",";
    if (row.d0) out += std::to_string(*row.d0);
    out += ",";
    if (row.algebraic_d0) out += std::to_string(*row.algebraic_d0);
    out += ",";
    out += row.checked ? "1" : "0";
    out += "\n";
  }
  return out;
}

std::string sweep_json(const SweepReport& rep) {
  nlohmann::ordered_json j;
  j["plane"] = {{"p", rep.p}, {"e", rep.e}, {"q", rep.q},
                {"lineCount", rep.plane_lines.size()},
                {"lines", rep.plane_lines}};
  j["dRange"] = {rep.d_lo, rep.d_hi};
  j["seed"] = rep.seed;
  j["subsets"] = rep.rows.size();
  std::map<std::string, long long> by_class;
  for (const auto& row : rep.rows) by_class[arr_class_name(row.cls)] += 1;
  j["byClassification"] = by_class;
  j["byProfile"] = rep.profile_buckets;
  j["homaloidal"] = nlohmann::ordered_json::array();
  for (const auto& row : rep.rows)
    if (row.cls == ArrClass::triangle ||
        row.cls == ArrClass::near_pencil_homaloidal)
      j["homaloidal"].push_back(row.subset);
  j["homaloidalCount"] = rep.homaloidal_count;
  j["algebraicChecked"] = rep.checked;
  j["algebraicAgree"] = rep.checks_agree;
  return j.dump(2);
}

}  // namespace homaloidal
