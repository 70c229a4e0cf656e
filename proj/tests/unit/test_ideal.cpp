#include <doctest.h>

#include <vector>

#include "homaloidal/ideal.hpp"
#include "homaloidal/parse.hpp"

using namespace homaloidal;

namespace {

RingPtr ring3(const FieldPtr& F) { return Ring::make(F, {"x0", "x1", "x2"}); }

Ideal ideal_of(const RingPtr& R, const std::vector<std::string>& texts) {
  std::vector<Poly> gens;
  for (const auto& t : texts) gens.push_back(parse_poly(R, t));
  return Ideal::make(R, std::move(gens));
}

MonomialOrder lex_order(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back({i});
  return MonomialOrder::with_blocks(std::move(blocks));
}

Poly rand_homog(const RingPtr& R, int deg, Rng& rng) {
  const Field& F = *R->field();
  std::vector<Term> terms;
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b) {
      Monomial m;
      m.e[0] = std::uint16_t(a);
      m.e[1] = std::uint16_t(b);
      m.e[2] = std::uint16_t(deg - a - b);
      terms.push_back({m, F.random_elem(rng)});
    }
  return Poly::from_terms(R, std::move(terms));
}

}  // namespace

TEST_CASE("elimination matches hand results") {
  auto F = Field::rationals();
  auto R = Ring::make(F, {"t", "x0", "x1"});
  Ideal I = ideal_of(R, {"t*x0 - 1", "x0*x1"});
  Ideal E = eliminate(I, {"t"});
  CHECK(E.ring->nvars() == 2);
  CHECK(E.gens.size() == 1);
  CHECK(E.gens[0].equal(parse_poly(E.ring, "x1")));

  auto S = Ring::make(F, {"x", "y", "z"});
  Ideal C = ideal_of(S, {"y - x^2", "z - x^3"});
  Ideal EC = eliminate(C, {"x"});
  REQUIRE(EC.gens.size() == 1);
  CHECK(EC.gens[0].equal(parse_poly(EC.ring, "y^3 - z^2")));

  // empty variable list keeps the ideal
  Ideal E0 = eliminate(C, {});
  CHECK(ideal_equal(Ideal::make(E0.ring, {parse_poly(E0.ring, "y - x^2"),
                                          parse_poly(E0.ring, "z - x^3")}),
                    E0));
}

TEST_CASE("ideal quotient worked examples") {
  auto R = ring3(Field::rationals());
  auto quot = [&](const std::vector<std::string>& gens, const char* f) {
    return ideal_quotient(ideal_of(R, gens), parse_poly(R, f));
  };
  CHECK(ideal_equal(quot({"x0^2*x1"}, "x0"), ideal_of(R, {"x0*x1"})));
  CHECK(ideal_equal(quot({"x0", "x1"}, "x2"), ideal_of(R, {"x0", "x1"})));
  CHECK(ideal_equal(quot({"x0^2*x1", "x0^2*x2"}, "x0"),
                    ideal_of(R, {"x0*x1", "x0*x2"})));
}

TEST_CASE("quotient generators multiply back into the ideal") {
  auto R = ring3(Field::make(7, 1));
  Rng rng(11);
  MonomialOrder ord = MonomialOrder::degrevlex(3);
  for (int trial = 0; trial < 4; ++trial) {
    Ideal I = Ideal::make(
        R, {rand_homog(R, 2, rng).mul(parse_poly(R, "x0")),
            rand_homog(R, 3, rng)});
    Poly f = rand_homog(R, 1, rng);
    if (f.is_zero()) continue;
    Ideal Q = ideal_quotient(I, f);
    auto gb = groebner_basis(I.gens, ord);
    for (const auto& g : Q.gens) CHECK(in_ideal(g.mul(f), gb, ord));
    // I is always contained in (I : f)
    CHECK(ideal_contains(Q, I));
  }
}

TEST_CASE("saturation worked examples") {
  auto R = ring3(Field::rationals());
  CHECK(ideal_equal(
      saturate(ideal_of(R, {"x0^2*x1", "x0^2*x2"}), parse_poly(R, "x0")),
      ideal_of(R, {"x1", "x2"})));
  CHECK(ideal_equal(saturate(ideal_of(R, {"x0"}), parse_poly(R, "x0")),
                    ideal_of(R, {"1"})));
}

TEST_CASE("residual point of the last pencil generator, n = 5") {
  // saturating (x1, x0^3*(x0+x2)) by the vertex ideal leaves one reduced
  // point on the line x1 = 0
  for (auto F : {Field::rationals(), Field::make(5, 1)}) {
    auto R = ring3(F);
    Ideal I = ideal_of(R, {"x1", "x0^3*(x0+x2)"});
    Ideal vertex = ideal_of(R, {"x0", "x1"});
    Ideal S = saturate(I, vertex);
    CHECK(ideal_equal(S, ideal_of(R, {"x1", "x0+x2"})));
  }
}

TEST_CASE("saturation is idempotent and contains the ideal") {
  auto R = ring3(Field::make(7, 1));
  Rng rng(23);
  for (int trial = 0; trial < 4; ++trial) {
    Ideal I = Ideal::make(
        R, {rand_homog(R, 2, rng).mul(parse_poly(R, "x0 + x1")),
            rand_homog(R, 2, rng).mul(parse_poly(R, "x0"))});
    Ideal J = ideal_of(R, {"x0", "x1"});
    Ideal S = saturate(I, J);
    CHECK(ideal_contains(S, I));
    CHECK(ideal_equal(saturate(S, J), S));
  }
}

TEST_CASE("iterated colon agrees with the adjoined-inverse route") {
  auto R = ring3(Field::make(101, 1));
  Rng rng(37);
  for (int trial = 0; trial < 6; ++trial) {
    Ideal I = Ideal::make(R, {rand_homog(R, 2, rng), rand_homog(R, 3, rng)});
    Poly g = rand_homog(R, 1, rng);
    if (g.is_zero()) continue;
    Ideal a = saturate(I, g, SatMode::colon);
    Ideal b = saturate(I, g, SatMode::rabinowitsch);
    CHECK(ideal_equal(a, b));
  }
}

TEST_CASE("variable saturation shortcut agrees with iterated colon") {
  auto R = ring3(Field::make(7, 1));
  Rng rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    Ideal I = Ideal::make(
        R, {rand_homog(R, 1, rng).mul(parse_poly(R, "x0")),
            rand_homog(R, 2, rng).mul(parse_poly(R, "x0*x1"))});
    if (I.gens.empty()) continue;
    REQUIRE(I.homogeneous);
    Poly g = parse_poly(R, trial % 2 ? "x1" : "x0");
    CHECK(ideal_equal(saturate(I, g, SatMode::fast),
                      saturate(I, g, SatMode::colon)));
  }
  // non-variable element falls back to the colon chain
  Ideal I = ideal_of(R, {"x0^2*x1", "x0^2*x2"});
  Poly g = parse_poly(R, "x0 + x1");
  CHECK(ideal_equal(saturate(I, g, SatMode::fast),
                    saturate(I, g, SatMode::colon)));
}

TEST_CASE("intersection is contained in both sides") {
  auto R = ring3(Field::rationals());
  Ideal A = ideal_of(R, {"x0*x1", "x1^2"});
  Ideal B = ideal_of(R, {"x1*x2", "x0 - x2"});
  Ideal M = intersect(A, B);
  CHECK(ideal_contains(A, M));
  CHECK(ideal_contains(B, M));
  // principal case has a closed form: (f) cap (g) = (lcm)
  Ideal P = intersect(ideal_of(R, {"x0^2*x1"}), ideal_of(R, {"x0*x1^2"}));
  CHECK(ideal_equal(P, ideal_of(R, {"x0^2*x1^2"})));
}

TEST_CASE("affine dimension from the staircase") {
  auto R = ring3(Field::rationals());
  CHECK(krull_dimension(ideal_of(R, {"x0", "x1", "x2"})) == 0);
  CHECK(krull_dimension(ideal_of(R, {"x0", "x1"})) == 1);
  CHECK(krull_dimension(ideal_of(R, {"1"})) == -1);
  CHECK(krull_dimension(Ideal::make(R, {})) == 3);
  // partials of x0^2*x1 share the factor x0: a whole plane survives
  CHECK(krull_dimension(ideal_of(R, {"2*x0*x1", "x0^2"})) == 2);
}

TEST_CASE("dimension does not depend on the order") {
  auto R = ring3(Field::make(7, 1));
  Rng rng(53);
  std::vector<Ideal> cases = {
      ideal_of(R, {"x0", "x1", "x2"}),
      ideal_of(R, {"2*x0*x1", "x0^2"}),
      ideal_of(R, {"x1", "x0^3*(x0+x2)"}),
      ideal_of(R, {"1"}),
  };
  for (int trial = 0; trial < 4; ++trial)
    cases.push_back(
        Ideal::make(R, {rand_homog(R, 2, rng), rand_homog(R, 3, rng)}));
  for (const auto& I : cases) {
    int a = krull_dimension(I);
    int b = krull_dimension(I, lex_order(3));
    CHECK(a == b);
  }
}

TEST_CASE("radical membership via the adjoined inverse") {
  auto R = ring3(Field::rationals());
  Ideal I = ideal_of(R, {"x0^2", "x1^3*x2"});
  CHECK(in_radical(parse_poly(R, "x0"), I));
  CHECK(in_radical(parse_poly(R, "x0*x1 + x0*x2"), I));
  CHECK(in_radical(parse_poly(R, "x1*x2"), I));
  CHECK(!in_radical(parse_poly(R, "x1"), I));
  CHECK(!in_radical(parse_poly(R, "x1 + x2"), I));
  CHECK(in_radical(Poly::zero(R), I));
}

TEST_CASE("degree of one reduced point") {
  auto R = ring3(Field::rationals());
  Ideal I = ideal_of(R, {"x0", "x1"});
  for (auto mode : {ZeroDimMode::hilbert, ZeroDimMode::chart}) {
    SchemeMeasure m = degree_zero_dim(I, mode, 7);
    CHECK(m.krull_dimension == 0);
    CHECK(m.degree == 1);
  }
}

TEST_CASE("fat point plus a reduced point, with primary splitting") {
  // (x1, x0^3*(x0 + a*x2)) cuts out (0:0:1) with multiplicity 3 and the
  // reduced point (-a:0:1)
  for (auto F : {Field::rationals(), Field::make(5, 1)}) {
    auto R = ring3(F);
    Ideal I = ideal_of(R, {"x1", "x0^3*(x0+x2)"});
    for (auto mode : {ZeroDimMode::hilbert, ZeroDimMode::chart})
      CHECK(degree_zero_dim(I, mode, 3).degree == 4);
    Ideal at_vertex = saturate(I, parse_poly(R, "x0+x2"));
    CHECK(degree_zero_dim(at_vertex, ZeroDimMode::hilbert).degree == 3);
    Ideal residual = saturate(I, parse_poly(R, "x0"));
    CHECK(degree_zero_dim(residual, ZeroDimMode::hilbert).degree == 1);
    CHECK(ideal_equal(intersect(at_vertex, residual), I));
  }
}

TEST_CASE("two generic combinations of the triangle partials cut 4 points") {
  // partials of x0*x1*x2; two fixed generic combinations meet in
  // (d-1)^2 = 4 points: the three vertices plus one residual point
  auto R = ring3(Field::rationals());
  Poly p0 = parse_poly(R, "x1*x2");
  Poly p1 = parse_poly(R, "x0*x2");
  Poly p2 = parse_poly(R, "x0*x1");
  Poly g1 = p0.add(p1.scale(R->field()->from_int(2)))
                .add(p2.scale(R->field()->from_int(3)));
  Poly g2 = p0.add(p1.scale(R->field()->from_int(5)))
                .add(p2.scale(R->field()->from_int(7)));
  Ideal I = Ideal::make(R, {g1, g2});
  for (auto mode : {ZeroDimMode::hilbert, ZeroDimMode::chart})
    CHECK(degree_zero_dim(I, mode, 5).degree == 4);
  // the three vertices are among the intersection: I vanishes at each
  CHECK(ideal_contains(ideal_of(R, {"x1", "x2"}), I));
  CHECK(ideal_contains(ideal_of(R, {"x0", "x2"}), I));
  CHECK(ideal_contains(ideal_of(R, {"x0", "x1"}), I));
  // residual after removing all vertices: a single point
  Ideal res = saturate(I, ideal_of(R, {"x1*x2", "x0*x2", "x0*x1"}));
  CHECK(degree_zero_dim(res, ZeroDimMode::hilbert).degree == 1);
}

TEST_CASE("positive dimension and empty schemes are rejected") {
  auto R = ring3(Field::rationals());
  CHECK_THROWS_AS(degree_zero_dim(ideal_of(R, {"x0"}), ZeroDimMode::hilbert),
                  NotZeroDimensional);
  CHECK_THROWS_AS(degree_zero_dim(ideal_of(R, {"1"}), ZeroDimMode::hilbert),
                  NotZeroDimensional);
  CHECK_THROWS_AS(
      degree_zero_dim(ideal_of(R, {"x0", "x1", "x2"}), ZeroDimMode::chart),
      NotZeroDimensional);
}

TEST_CASE("bigraded degree: product of coordinate points") {
  auto F = Field::rationals();
  auto R = Ring::make(F, {"x0", "x1", "x2", "y0", "y1", "y2"},
                      {{0, 1, 2}, {3, 4, 5}});
  Ideal I = ideal_of(R, {"x0", "x1", "y0", "y1"});
  for (auto mode : {ZeroDimMode::hilbert, ZeroDimMode::chart})
    CHECK(degree_zero_dim(I, mode, 9).degree == 1);
  // {(0:1:1), (1:0:1)} on the x side times one point on the y side
  Ideal II = ideal_of(R, {"x0*x1", "x0 + x1 - x2", "y0", "y1"});
  for (auto mode : {ZeroDimMode::hilbert, ZeroDimMode::chart})
    CHECK(degree_zero_dim(II, mode, 13).degree == 2);
}

TEST_CASE("saturating away an irrelevant component leaves the degree alone") {
  auto R = ring3(Field::rationals());
  // one reduced point padded with an irrelevant cube
  Ideal pt = ideal_of(R, {"x0", "x1"});
  Ideal irr = ideal_of(R, {"x0^3", "x1^3", "x2^3", "x0*x1", "x0*x2", "x1*x2"});
  Ideal I = intersect(pt, irr);
  for (auto mode : {ZeroDimMode::hilbert, ZeroDimMode::chart})
    CHECK(degree_zero_dim(I, mode, 17).degree == 1);
  Ideal S = saturate(I, ideal_of(R, {"x0", "x1", "x2"}));
  CHECK(ideal_equal(S, pt));
}
