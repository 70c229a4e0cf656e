#include <doctest.h>

#include <set>
#include <string>

#include "homaloidal/field.hpp"

using namespace homaloidal;

namespace {

void check_axioms(const FieldPtr& F, Rng& rng, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    FieldElem a = F->random_elem(rng);
    FieldElem b = F->random_elem(rng);
    FieldElem c = F->random_elem(rng);
    CHECK(F->equal(F->add(a, b), F->add(b, a)));
    CHECK(F->equal(F->mul(a, b), F->mul(b, a)));
    CHECK(F->equal(F->add(F->add(a, b), c), F->add(a, F->add(b, c))));
    CHECK(F->equal(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c))));
    CHECK(F->equal(F->mul(a, F->add(b, c)),
                   F->add(F->mul(a, b), F->mul(a, c))));
    CHECK(F->equal(F->add(a, F->neg(a)), F->zero()));
    CHECK(F->equal(F->mul(a, F->one()), a));
    CHECK(F->equal(F->sub(a, b), F->add(a, F->neg(b))));
    if (!F->is_zero(a)) {
      CHECK(F->is_one(F->mul(a, F->inv(a))));
      CHECK(F->equal(F->div(F->mul(a, b), a), b));
    }
  }
}

}  // namespace

TEST_CASE("rationals") {
  FieldPtr Q = Field::make(0, 1);
  CHECK(Q->kind() == FieldKind::rationals);
  CHECK(Q->characteristic() == 0);
  CHECK(!Q->finite());
  CHECK(Q->size() == 0);
  CHECK(Q->name() == "QQ");

  Rng rng(7);
  check_axioms(Q, rng, 50);

  FieldElem third = Q->div(Q->one(), Q->from_int(3));
  CHECK(Q->to_string(third) == "1/3");
  CHECK(Q->to_string(Q->from_int(-7)) == "-7");

  // fractions built from raw numerator/denominator come out reduced
  FieldElem h = Q->from_mpq(mpq_class(3, 6));
  CHECK(Q->to_string(h) == "1/2");
  FieldElem m = Q->from_mpq(mpq_class(2, -4));
  CHECK(Q->to_string(m) == "-1/2");

  CHECK(Q->to_string(Q->pow(Q->from_mpq(mpq_class(-2, 3)), 3)) == "-8/27");

  // zigzag enumeration
  CHECK(Q->to_string(Q->elem_at(0)) == "0");
  CHECK(Q->to_string(Q->elem_at(1)) == "1");
  CHECK(Q->to_string(Q->elem_at(2)) == "-1");
  CHECK(Q->to_string(Q->elem_at(5)) == "3");
  CHECK(Q->to_string(Q->elem_at(6)) == "-3");
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(Field::make(0, 2), InvalidField);
  CHECK_THROWS_AS(Field::make(1, 1), InvalidField);
  CHECK_THROWS_AS(Field::make(4, 1), InvalidField);
  CHECK_THROWS_AS(Field::make(6, 1), InvalidField);
  CHECK_THROWS_AS(Field::make(91, 1), InvalidField);  // 7 * 13
  CHECK_THROWS_AS(Field::make(7, 0), InvalidField);
  CHECK_THROWS_AS(Field::prime(u_int64_t(1) << 62), InvalidField);
  CHECK_NOTHROW(Field::make(2, 1));
  CHECK_NOTHROW(Field::make(1000003, 1));
}

TEST_CASE("prime field arithmetic") {
  FieldPtr F = Field::make(7, 1);
  CHECK(F->name() == "GF(7)");
  CHECK(F->size() == 7);
  Rng rng(11);
  check_axioms(F, rng, 100);

  // Fermat
  for (long v = 0; v < 7; ++v)
    CHECK(F->equal(F->pow(F->from_int(v), 7), F->from_int(v)));

  CHECK(F->equal(F->from_int(-3), F->from_int(4)));
  CHECK(F->equal(F->from_mpq(mpq_class(1, 2)), F->from_int(4)));
  CHECK_THROWS_AS(F->from_mpq(mpq_class(1, 7)), NotDivisible);
  CHECK_THROWS_AS(F->inv(F->zero()), MathError);

  // 3 and 5 generate GF(7)^*
  FieldElem g = F->multiplicative_generator();
  std::set<std::string> seen;
  FieldElem x = F->one();
  for (int i = 0; i < 6; ++i) {
    seen.insert(F->to_string(x));
    x = F->mul(x, g);
  }
  CHECK(seen.size() == 6);
  CHECK(F->is_one(x));
}

TEST_CASE("quadratic extension") {
  FieldPtr F = Field::make(3, 2, 1);
  CHECK(F->name() == "GF(3^2)");
  CHECK(F->size() == 9);
  CHECK(F->words() == 2);
  CHECK(F->modulus().size() == 3);

  Rng rng(5);
  check_axioms(F, rng, 100);

  // the modulus is irreducible, so t is not in the prime subfield
  FieldElem t = F->gen();
  CHECK(!F->equal(F->pow(t, 3), t));
  CHECK(F->to_string(t) == "t");

  // Frobenius fixes everything at the q-th power
  std::set<std::string> all;
  for (int i = 0; i < 9; ++i) {
    FieldElem a = F->elem_at(i);
    CHECK(F->equal(F->pow(a, 9), a));
    all.insert(F->to_string(a));
  }
  CHECK(all.size() == 9);

  FieldElem g = F->multiplicative_generator();
  CHECK(F->is_one(F->pow(g, 8)));
  CHECK(!F->is_one(F->pow(g, 4)));
  CHECK(!F->is_one(F->pow(g, 2)));

  // same seed rebuilds the same field
  CHECK(Field::same(*F, *Field::make(3, 2, 1)));
}

TEST_CASE("large binary extension") {
  FieldPtr F = Field::make(2, 16, 0);
  CHECK(F->size() == 65536);
  CHECK(F->words() == 16);
  Rng rng(1);
  check_axioms(F, rng, 30);
  mpz_class q = F->size();
  for (int i = 0; i < 20; ++i) {
    FieldElem a = F->random_elem(rng);
    CHECK(F->equal(F->pow(a, q), a));
  }
  FieldElem g = F->multiplicative_generator();
  CHECK(F->is_one(F->pow(g, q - 1)));
  for (long r : {3, 5, 17, 257}) CHECK(!F->is_one(F->pow(g, (q - 1) / r)));
}

TEST_CASE("tower extension") {
  FieldPtr B = Field::make(3, 2, 1);
  FieldPtr F = Field::extension(B, 3, 9);
  CHECK(F->words() == 6);
  CHECK(F->size() == 729);
  CHECK(F->degree_over_base() == 3);
  CHECK(F->gen_letter() == "u");

  Rng rng(3);
  check_axioms(F, rng, 60);

  // lifting the base is a ring homomorphism
  for (int i = 0; i < 25; ++i) {
    FieldElem a = B->random_elem(rng);
    FieldElem b = B->random_elem(rng);
    CHECK(F->equal(F->lift(*B, B->mul(a, b)),
                   F->mul(F->lift(*B, a), F->lift(*B, b))));
    CHECK(F->equal(F->lift(*B, B->add(a, b)),
                   F->add(F->lift(*B, a), F->lift(*B, b))));
  }
  // and GF(3) lifts through both hops
  FieldPtr P = Field::make(3, 1);
  CHECK(F->equal(F->lift(*P, P->from_int(2)), F->from_int(2)));

  mpz_class q = F->size();
  for (int i = 0; i < 15; ++i) {
    FieldElem a = F->random_elem(rng);
    CHECK(F->equal(F->pow(a, q), a));
  }

  // element printing stays within the grammar: digits, t, u, ^, *, +, parens
  FieldElem a = F->add(F->mul(F->lift(*B, B->gen()), F->pow(F->gen(), 2)),
                       F->from_int(2));
  CHECK(F->to_string(a) == "t*u^2+2");
}

TEST_CASE("uniform_u64 stays in range") {
  Rng rng(42);
  for (u_int64_t b : {1ull, 2ull, 3ull, 7ull, 65537ull}) {
    for (int i = 0; i < 200; ++i) CHECK(uniform_u64(rng, b) < b);
  }
  CHECK_THROWS_AS(uniform_u64(rng, 0), MathError);
}

TEST_CASE("deterministic modulus search") {
  FieldPtr a = Field::make(5, 7, 123);
  FieldPtr b = Field::make(5, 7, 123);
  CHECK(Field::same(*a, *b));
  Rng rng(2);
  check_axioms(a, rng, 30);
  mpz_class q = a->size();
  FieldElem x = a->random_elem(rng);
  CHECK(a->equal(a->pow(x, q), x));
}
