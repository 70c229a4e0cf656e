#include <doctest.h>

#include <string>
#include <vector>

#include "homaloidal/parse.hpp"
#include "homaloidal/polar.hpp"

using namespace homaloidal;

namespace {

RingPtr ring3(const FieldPtr& F) { return Ring::make(F, {"x0", "x1", "x2"}); }

// n lines through (0:0:1) plus the line at infinity: x0, x1, n-2 slope
// lines, and x2. Slopes are successive powers of the multiplicative
// generator over a finite field, 1, 2, 3, ... over the rationals.
Poly near_pencil(const RingPtr& R, int n) {
  const Field& F = *R->field();
  Poly x0 = Poly::variable(R, 0);
  Poly x1 = Poly::variable(R, 1);
  Poly f = x0.mul(x1);
  if (F.finite()) {
    FieldElem gamma = F.multiplicative_generator();
    FieldElem s = F.one();
    for (int j = 0; j < n - 2; ++j) {
      f = f.mul(x0.add(x1.scale(s)));
      s = F.mul(s, gamma);
    }
  } else {
    for (int j = 1; j <= n - 2; ++j) f = f.mul(x0.add(x1.scale(F.from_int(j))));
  }
  return f.mul(Poly::variable(R, 2));
}

}  // namespace

TEST_CASE("polar map construction and the vanishing degeneracy") {
  auto RQ = ring3(Field::rationals());
  auto pm = polar_map(parse_poly(RQ, "x0^2"));
  CHECK(pm.partials[0].equal(parse_poly(RQ, "2*x0")));
  CHECK(pm.partials[1].is_zero());
  CHECK(pm.partials[2].is_zero());
  CHECK(pm.degree == 2);

  auto R3 = ring3(Field::prime(3));
  CHECK_THROWS_AS(polar_map(parse_poly(R3, "x0^3")), UndefinedMap);

  auto f3 = near_pencil(R3, 3);
  auto pm3 = polar_map(f3);
  for (const auto& g : pm3.partials) CHECK(!g.is_zero());

  CHECK_THROWS_AS(polar_map(parse_poly(RQ, "x0")), MathError);
  CHECK_THROWS_AS(polar_map(parse_poly(RQ, "x0^2 + x1")), MathError);
}

TEST_CASE("fixed component detection") {
  auto RQ = ring3(Field::rationals());
  CHECK(!fixed_component_free(polar_map(parse_poly(RQ, "x0^2*x1"))));
  CHECK(fixed_component_free(polar_map(parse_poly(RQ, "x0*x2 - x1^2"))));
  CHECK(fixed_component_free(polar_map(near_pencil(RQ, 2))));
  CHECK(fixed_component_free(polar_map(near_pencil(RQ, 4))));
  auto R5 = ring3(Field::prime(5));
  CHECK(fixed_component_free(polar_map(near_pencil(R5, 5))));
}

TEST_CASE("fiber degree of the classical examples") {
  auto RQ = ring3(Field::rationals());
  auto top = topological_degree(polar_map(parse_poly(RQ, "x0*x1*x2")), 3, 7);
  CHECK(top.d0 == 1);
  CHECK(top.dominant);
  CHECK(top.unanimous);

  CHECK(topological_degree(polar_map(near_pencil(RQ, 4)), 3, 7).d0 == 3);

  // characteristic two needs four distinct pencil lines, hence GF(4)
  auto R4 = ring3(Field::make(2, 2, 1));
  CHECK(topological_degree(polar_map(near_pencil(R4, 4)), 3, 7).d0 == 1);

  auto R3 = ring3(Field::prime(3));
  Poly quintic = parse_poly(R3, "x0*(x1^2+x0*x2)*(2*x1^2+x0*x2)");
  CHECK(topological_degree(polar_map(quintic), 3, 7).d0 == 1);
}

TEST_CASE("fiber sections are recorded for replay") {
  auto R3 = ring3(Field::prime(3));
  auto top = topological_degree(polar_map(near_pencil(R3, 3)), 2, 99);
  REQUIRE(top.trials.size() == 2);
  for (const auto& tr : top.trials) {
    CHECK(tr.section.field == working_field(Field::prime(3), 99)->name());
    REQUIRE(tr.section.combo_rows.size() == 2);
    CHECK(tr.section.combo_rows[0].size() == 3);
    CHECK(tr.dominant);
  }

  // the working field is genuinely large
  CHECK(working_field(Field::prime(3), 0)->size() >= 65536);
  CHECK(working_field(Field::rationals(), 0) == Field::rationals());
}

TEST_CASE("projective degrees by fiber and by definition") {
  auto RQ = ring3(Field::rationals());
  auto md = projective_degrees(polar_map(near_pencil(RQ, 3)), 3, 5);
  CHECK(md.d0 == 2);
  CHECK(md.d1 == 3);
  CHECK(md.d2 == 1);

  auto R3 = ring3(Field::prime(3));
  auto md3 = projective_degrees(polar_map(near_pencil(R3, 3)), 3, 5);
  CHECK(md3.d0 == 1);
  CHECK(md3.d1 == 3);
  CHECK(md3.d2 == 1);

  auto mdc = projective_degrees(polar_map(parse_poly(RQ, "x0*x2 - x1^2")), 3, 5);
  CHECK(mdc.d0 == 1);
  CHECK(mdc.d1 == 1);
  CHECK(mdc.d2 == 1);
}

TEST_CASE("graph sections split naive counts into graph plus torsion") {
  auto R5 = ring3(Field::prime(5));
  auto pm5 = polar_map(near_pencil(R5, 5));
  auto M5 = minimal_presentation(pm5.partials);
  auto gd5 = graph_multidegree_via_sections(M5, 2, 13);
  CHECK(gd5.graph.d0 == 1);
  CHECK(gd5.graph.d1 == 5);
  CHECK(gd5.graph.d2 == 1);
  CHECK(gd5.torsion == std::array<long long, 3>{3, 0, 0});

  // linear type over the rationals: no torsion at all
  auto RQ = ring3(Field::rationals());
  auto pmq = polar_map(near_pencil(RQ, 4));
  auto Mq = minimal_presentation(pmq.partials);
  auto gdq = graph_multidegree_via_sections(Mq, 2, 13);
  CHECK(gdq.naive.d0 == 3);
  CHECK(gdq.naive.d1 == 4);
  CHECK(gdq.naive.d2 == 1);
  CHECK(gdq.graph.d0 == gdq.naive.d0);
  CHECK(gdq.torsion == std::array<long long, 3>{0, 0, 0});
  CHECK(fitting_ideal(Mq).which == 3);

  auto R3 = ring3(Field::prime(3));
  Poly h = parse_poly(R3, "x2*(x1^4 - 2*x0*x1^2*x2 + x0^2*x2^2 - x1*x2^3)");
  auto Mh = minimal_presentation(polar_map(h).partials);
  auto gdh = graph_multidegree_via_sections(Mh, 2, 13);
  CHECK(gdh.naive.d0 == 3);
  CHECK(gdh.naive.d1 == 4);
  CHECK(gdh.naive.d2 == 1);
  CHECK(gdh.graph.d0 == 1);
  CHECK(gdh.graph.d1 == 4);
  CHECK(gdh.graph.d2 == 1);
  CHECK(gdh.torsion == std::array<long long, 3>{2, 0, 0});

  // section counts agree with the column-degree formula
  auto nd = naive_degrees(Mh);
  CHECK(gdh.naive.d0 == nd.d0);
  CHECK(gdh.naive.d1 == nd.d1);
  CHECK(gdh.naive.d2 == nd.d2);
}

TEST_CASE("verdicts for the headline curves") {
  auto R7 = ring3(Field::prime(7));
  auto v7 = is_homaloidal(near_pencil(R7, 7), 2, 21);
  CHECK(v7.verdict == Verdict::homaloidal);
  CHECK(v7.multidegree.d0 == 1);
  CHECK(v7.multidegree.d1 == 7);
  REQUIRE(v7.graph.has_value());
  CHECK(v7.graph->torsion == std::array<long long, 3>{5, 0, 0});

  auto R11 = ring3(Field::prime(11));
  auto v11 = is_homaloidal(parse_poly(R11, "x0*x1*(x1^3+x0^2*x2)"), 2, 21);
  CHECK(v11.verdict == Verdict::homaloidal);

  auto RQ = ring3(Field::rationals());
  CHECK(is_homaloidal(parse_poly(RQ, "x0^2*x1"), 2, 21).verdict ==
        Verdict::fixed_component);
  CHECK(is_homaloidal(near_pencil(RQ, 4), 2, 21).verdict ==
        Verdict::degree_gt_one);

  auto v_conc = is_homaloidal(parse_poly(ring3(Field::prime(7)),
                                         "x0*x1*(x0+x1)*(x0+2*x1)"),
                              2, 21);
  CHECK(v_conc.verdict == Verdict::not_dominant);
  CHECK(!v_conc.dominant);
  CHECK(v_conc.multidegree.d2 == 0);

  auto R3 = ring3(Field::prime(3));
  CHECK(is_homaloidal(parse_poly(R3, "x0^3"), 2, 21).verdict ==
        Verdict::undefined_map);
}

TEST_CASE("certificates replay bit for bit") {
  auto R3 = ring3(Field::prime(3));
  Poly f = near_pencil(R3, 3);
  std::string a = verdict_json(is_homaloidal(f, 2, 1234));
  std::string b = verdict_json(is_homaloidal(f, 2, 1234));
  CHECK(a == b);
  CHECK(a.find("\"verdict\": \"homaloidal\"") != std::string::npos);
  CHECK(a.find("\"saturationDegree\"") != std::string::npos);
  CHECK(a.find("\"torsion\"") != std::string::npos);

  // a different seed reaches the same verdict through different sections
  std::string c = verdict_json(is_homaloidal(f, 2, 4321));
  CHECK(c != a);
  CHECK(c.find("\"verdict\": \"homaloidal\"") != std::string::npos);
}

TEST_CASE("torsion weight across the divisible pairs") {
  // all (p, n) with p | n, p in {2, 3, 5}, n <= 10
  struct Case {
    int p, n;
  };
  const std::vector<Case> cases = {{2, 2}, {2, 4}, {2, 6}, {2, 8}, {2, 10},
                                   {3, 3}, {3, 6}, {3, 9}, {5, 5}, {5, 10}};
  for (const auto& c : cases) {
    CAPTURE(c.p);
    CAPTURE(c.n);
    // smallest field of characteristic p with n - 2 distinct nonzero slopes
    int e = 1;
    long long q = c.p;
    while (q - 1 < c.n - 2) {
      q *= c.p;
      ++e;
    }
    auto R = ring3(Field::make(std::uint64_t(c.p), e, 1));
    Poly f = near_pencil(R, c.n);
    auto pm = polar_map(f);
    auto M = minimal_presentation(pm.partials);
    auto gd = graph_multidegree_via_sections(M, 1, 777);
    CHECK(gd.graph.d0 == 1);
    CHECK(gd.graph.d1 == c.n);
    CHECK(gd.graph.d2 == 1);
    CHECK(gd.torsion == std::array<long long, 3>{c.n - 2, 0, 0});
  }
}

TEST_CASE("graph sections refuse wide presentations") {
  auto RQ = ring3(Field::rationals());
  // three independent linear forms have a Koszul presentation, width three
  auto pm = polar_map(parse_poly(RQ, "x0*x2 - x1^2"));
  auto M = minimal_presentation(pm.partials);
  REQUIRE(M.width() == 3);
  CHECK_THROWS_AS(graph_multidegree_via_sections(M, 1, 0), NotDeterminantal);
}
