#ifndef HOMALOIDAL_RING_HPP
#define HOMALOIDAL_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "homaloidal/field.hpp"

namespace homaloidal {

inline constexpr int kMaxVars = 8;

// Exponent vector; entries beyond the ring's variable count stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  static Monomial one() { return {}; }
  bool is_one() const {
    for (auto v : e)
      if (v) return false;
    return true;
  }
  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  Monomial mul(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = std::uint16_t(e[i] + o.e[i]);
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  // o / this, assumes divisibility
  Monomial div_into(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = std::uint16_t(o.e[i] - e[i]);
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
    return r;
  }
  Monomial gcd(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = e[i] < o.e[i] ? e[i] : o.e[i];
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m.e) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Graded reverse lex over the natural variable sequence; the canonical
// term order used for storage, printing, and equality.
int cmp_degrevlex(const Monomial& a, const Monomial& b);

// A block order: compare block by block, each block graded reverse lex
// along its own variable sequence. One block is plain degrevlex, a leading
// block makes an elimination order, and a single block with one variable
// moved to the back ranks that variable cheapest.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex(int nvars);
  static MonomialOrder elim(std::vector<int> front, int nvars);
  static MonomialOrder with_blocks(std::vector<std::vector<int>> blocks);
  static MonomialOrder var_last(int nvars, int var);

  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

 private:
  std::vector<std::vector<int>> blocks_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Polynomial ring: a coefficient field, named variables, and an optional
// grading split of the variables into blocks (multidegrees are taken per
// block; variables outside every block carry no grading).
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr make(FieldPtr field, std::vector<std::string> vars,
                      std::vector<std::vector<int>> grading_blocks = {});

  const FieldPtr& field() const { return field_; }
  int nvars() const { return int(vars_.size()); }
  const std::string& var_name(int i) const { return vars_[std::size_t(i)]; }
  const std::vector<std::string>& var_names() const { return vars_; }
  int var_index(const std::string& name) const;  // -1 when absent
  const std::vector<std::vector<int>>& grading_blocks() const {
    return grading_;
  }

  static bool same(const Ring& a, const Ring& b);

 private:
  Ring() = default;
  FieldPtr field_;
  std::vector<std::string> vars_;
  std::vector<std::vector<int>> grading_;
};

struct Term {
  Monomial m;
  FieldElem c;
};

}  // namespace homaloidal

#endif
