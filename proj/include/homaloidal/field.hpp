#ifndef HOMALOIDAL_FIELD_HPP
#define HOMALOIDAL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <absl/container/inlined_vector.h>
#include <gmpxx.h>

#include "homaloidal/errors.hpp"

namespace homaloidal {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

using Rng = std::mt19937_64;

// Uniform draw from [0, bound) by rejection; identical output on every platform.
std::uint64_t uniform_u64(Rng& rng, std::uint64_t bound);

// One coefficient. The owning Field decides which payload is active:
// `rat` in characteristic 0, `res` (flat GF(p) coordinates) otherwise.
// For extensions the coordinate of t^i over the base occupies the i-th
// block of base->words() words.
class FieldElem {
 public:
  std::optional<mpq_class> rat;
  absl::InlinedVector<std::uint64_t, 4> res;
};

enum class FieldKind { rationals, prime, extension };

// Exact coefficient field: Q, GF(p), or GF(q)[t]/(m) over a smaller finite
// field. All element operations go through the field object.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  // Monic irreducible modulus found by seeded random search (Rabin test).
  static FieldPtr extension(FieldPtr base, int degree, std::uint64_t seed);
  // characteristic 0 -> Q, (p, 1) -> GF(p), (p, e) -> GF(p^e).
  static FieldPtr make(std::uint64_t characteristic, int extension_degree,
                       std::uint64_t seed = 0);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  const FieldPtr& base() const { return base_; }
  int degree_over_base() const { return deg_; }
  // Flat coordinate count over GF(p); 1 for Q by convention.
  int words() const { return words_; }
  bool finite() const { return kind_ != FieldKind::rationals; }
  mpz_class size() const;  // 0 means infinite
  // Modulus coefficients over the base field, monic, length degree+1.
  const std::vector<FieldElem>& modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long v) const;
  FieldElem from_mpz(const mpz_class& v) const;
  FieldElem from_mpq(const mpq_class& v) const;
  // Embeds an element of this field's base (at any depth) into this field.
  FieldElem lift(const Field& from, const FieldElem& a) const;
  // The residue class of the adjoined variable, extensions only.
  FieldElem gen() const;

  bool is_zero(const FieldElem& a) const;
  bool is_one(const FieldElem& a) const;
  bool equal(const FieldElem& a, const FieldElem& b) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;
  FieldElem pow(const FieldElem& a, const mpz_class& e) const;

  // Uniform over a finite field; over Q an integer in [-2^15, 2^15].
  FieldElem random_elem(Rng& rng) const;
  // Element with index i: base-p digits over a finite field, zigzag
  // integers 0, 1, -1, 2, -2, ... over Q.
  FieldElem elem_at(const mpz_class& index) const;
  // A generator of the multiplicative group (finite fields only);
  // deterministic per field.
  FieldElem multiplicative_generator() const;

  std::string to_string(const FieldElem& a) const;
  std::string name() const;  // "QQ", "GF(7)", "GF(7^2)", ...
  // Variable letter used for this extension level: t, u, v, w.
  std::string gen_letter() const;

  static bool same(const Field& a, const Field& b);

 private:
  Field() = default;

  // out = a * b on flat words; out must not alias a or b. Finite fields only.
  void mul_flat(std::uint64_t* out, const std::uint64_t* a,
                const std::uint64_t* b) const;
  int ext_level() const;

  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t p_ = 0;
  FieldPtr base_;
  int deg_ = 1;
  int words_ = 1;
  std::vector<FieldElem> modulus_;       // over base_, monic
  std::vector<std::uint64_t> mod_flat_;  // low deg_ coefficients, flattened
};

}  // namespace homaloidal

#endif
