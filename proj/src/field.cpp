#include "homaloidal/field.hpp"

#include <algorithm>
#include <cstring>
#include <utility>

namespace homaloidal {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr int kMaxWords = 64;
constexpr u64 kMaxPrime = u64(1) << 62;

u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : kWitnesses)
    if (n % q == 0) return n == q;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 invmod(u64 a, u64 p) {
  std::int64_t t0 = 0, t1 = 1;
  u64 r0 = p, r1 = a;
  while (r1 != 0) {
    u64 q = r0 / r1;
    std::int64_t t2 = t0 - std::int64_t(q) * t1;
    t0 = t1;
    t1 = t2;
    u64 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
  }
  return t0 < 0 ? u64(t0 + std::int64_t(p)) : u64(t0);
}

void vzero(u64* o, int n) { std::memset(o, 0, std::size_t(n) * sizeof(u64)); }

void vcopy(u64* o, const u64* a, int n) {
  std::memcpy(o, a, std::size_t(n) * sizeof(u64));
}

bool viszero(const u64* a, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i]) return false;
  return true;
}

void vadd(u64* o, const u64* a, const u64* b, int n, u64 p) {
  for (int i = 0; i < n; ++i) o[i] = addmod(a[i], b[i], p);
}

void vsub(u64* o, const u64* a, const u64* b, int n, u64 p) {
  for (int i = 0; i < n; ++i) o[i] = submod(a[i], b[i], p);
}

// dense univariate polynomials over an arbitrary Field, used only while
// searching for extension moduli
using UPoly = std::vector<FieldElem>;

int updeg(const Field& B, const UPoly& f) {
  int d = int(f.size()) - 1;
  while (d >= 0 && B.is_zero(f[d])) --d;
  return d;
}

UPoly upmul(const Field& B, const UPoly& f, const UPoly& g) {
  int df = updeg(B, f), dg = updeg(B, g);
  if (df < 0 || dg < 0) return {};
  UPoly r(std::size_t(df + dg + 1), B.zero());
  for (int i = 0; i <= df; ++i) {
    if (B.is_zero(f[i])) continue;
    for (int j = 0; j <= dg; ++j) {
      if (B.is_zero(g[j])) continue;
      r[i + j] = B.add(r[i + j], B.mul(f[i], g[j]));
    }
  }
  return r;
}

// f mod m, m monic
void upmod(const Field& B, UPoly& f, const UPoly& m) {
  int dm = updeg(B, m);
  for (int df = updeg(B, f); df >= dm; --df) {
    if (B.is_zero(f[df])) continue;
    FieldElem c = f[df];
    for (int l = 0; l < dm; ++l)
      f[df - dm + l] = B.sub(f[df - dm + l], B.mul(c, m[l]));
    f[df] = B.zero();
  }
  while (!f.empty() && B.is_zero(f.back())) f.pop_back();
}

UPoly upsub(const Field& B, const UPoly& f, const UPoly& g) {
  UPoly r(std::max(f.size(), g.size()), B.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    FieldElem a = i < f.size() ? f[i] : B.zero();
    FieldElem b = i < g.size() ? g[i] : B.zero();
    r[i] = B.sub(a, b);
  }
  return r;
}

void upmonic(const Field& B, UPoly& f) {
  int d = updeg(B, f);
  if (d < 0) return;
  f.resize(std::size_t(d + 1));
  if (B.is_one(f[d])) return;
  FieldElem c = B.inv(f[d]);
  for (auto& a : f) a = B.mul(a, c);
}

UPoly upgcd(const Field& B, UPoly f, UPoly g) {
  while (updeg(B, g) >= 0) {
    upmonic(B, g);
    upmod(B, f, g);
    std::swap(f, g);
  }
  upmonic(B, f);
  return f;
}

UPoly uppowmod(const Field& B, UPoly base, const mpz_class& e, const UPoly& m) {
  UPoly r{B.one()};
  if (sgn(e) == 0) return r;
  upmod(B, base, m);
  int bits = int(mpz_sizeinbase(e.get_mpz_t(), 2));
  for (int i = bits - 1; i >= 0; --i) {
    r = upmul(B, r, r);
    upmod(B, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) {
      r = upmul(B, r, base);
      upmod(B, r, m);
    }
  }
  return r;
}

bool up_has_root(const Field& B, const UPoly& m) {
  mpz_class q = B.size();
  int d = updeg(B, m);
  for (mpz_class i = 0; i < q; ++i) {
    FieldElem x = B.elem_at(i);
    FieldElem v = m[std::size_t(d)];
    for (int k = d - 1; k >= 0; --k) v = B.add(B.mul(v, x), m[std::size_t(k)]);
    if (B.is_zero(v)) return true;
  }
  return false;
}

std::vector<int> prime_divisors_int(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin: m (monic, degree e over GF(q)) is irreducible iff x^(q^e) = x mod m
// and gcd(x^(q^(e/r)) - x, m) = 1 for every prime r | e.
bool up_irreducible(const Field& B, const UPoly& m) {
  int e = updeg(B, m);
  mpz_class q = B.size();
  if (e <= 3 && q <= (1 << 20)) return !up_has_root(B, m);
  UPoly x{B.zero(), B.one()};
  mpz_class qe;
  mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), unsigned(e));
  UPoly h = uppowmod(B, x, qe, m);
  if (updeg(B, upsub(B, h, x)) >= 0) return false;
  for (int r : prime_divisors_int(e)) {
    mpz_class qer;
    mpz_pow_ui(qer.get_mpz_t(), q.get_mpz_t(), unsigned(e / r));
    UPoly g = upgcd(B, upsub(B, uppowmod(B, x, qer, m), x), m);
    if (updeg(B, g) != 0) return false;
  }
  return true;
}

mpz_class pollard_rho(const mpz_class& n) {
  for (unsigned c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x > y ? x - y : y - x;
      if (diff == 0) {
        d = n;
        break;
      }
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::vector<mpz_class>& out) {
  if (n <= 1) return;
  for (unsigned long d = 2; d <= 100000; d = (d == 2 ? 3 : d + 2)) {
    if (mpz_class(d) * d > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.emplace_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(), d))
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
    out.push_back(n);
    return;
  }
  mpz_class f = pollard_rho(n);
  factor_into(f, out);
  factor_into(n / f, out);
}

std::vector<mpz_class> distinct_prime_factors(const mpz_class& n) {
  std::vector<mpz_class> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::uint64_t uniform_u64(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw MathError("uniform_u64: empty range");
  u64 threshold = (0 - bound) % bound;  // 2^64 mod bound
  u64 v;
  do {
    v = rng();
  } while (v < threshold);
  return v % bound;
}

FieldPtr Field::rationals() {
  static FieldPtr f = [] {
    std::shared_ptr<Field> r(new Field());
    r->kind_ = FieldKind::rationals;
    r->p_ = 0;
    r->deg_ = 1;
    r->words_ = 1;
    return r;
  }();
  return f;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime) throw InvalidField("characteristic too large");
  if (!is_prime_u64(p))
    throw InvalidField("characteristic must be 0 or a prime, got " +
                       std::to_string(p));
  std::shared_ptr<Field> f(new Field());
  f->kind_ = FieldKind::prime;
  f->p_ = p;
  f->deg_ = 1;
  f->words_ = 1;
  return f;
}

FieldPtr Field::extension(FieldPtr base, int degree, std::uint64_t seed) {
  if (!base || !base->finite())
    throw InvalidField("field extension requires a finite base field");
  if (degree < 2) throw InvalidField("extension degree must be at least 2");
  long w = long(degree) * base->words();
  if (w > kMaxWords) throw InvalidField("extension too large");

  Rng rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL * u64(degree) +
          u64(base->words()));
  const Field& B = *base;
  UPoly m(std::size_t(degree + 1), B.zero());
  m[std::size_t(degree)] = B.one();
  bool found = false;
  for (int attempt = 0; attempt < 20000; ++attempt) {
    do {
      m[0] = B.random_elem(rng);
    } while (B.is_zero(m[0]));
    for (int i = 1; i < degree; ++i) m[std::size_t(i)] = B.random_elem(rng);
    if (up_irreducible(B, m)) {
      found = true;
      break;
    }
  }
  if (!found) throw Inconclusive("no irreducible modulus found");

  std::shared_ptr<Field> f(new Field());
  f->kind_ = FieldKind::extension;
  f->p_ = base->p_;
  f->base_ = std::move(base);
  f->deg_ = degree;
  f->words_ = int(w);
  f->modulus_ = m;
  f->mod_flat_.assign(std::size_t(degree) * f->base_->words(), 0);
  for (int i = 0; i < degree; ++i)
    for (int j = 0; j < f->base_->words(); ++j)
      f->mod_flat_[std::size_t(i) * f->base_->words() + j] =
          m[std::size_t(i)].res[std::size_t(j)];
  return f;
}

FieldPtr Field::make(std::uint64_t characteristic, int extension_degree,
                     std::uint64_t seed) {
  if (characteristic == 0) {
    if (extension_degree > 1)
      throw InvalidField("no finite extensions of the rationals");
    return rationals();
  }
  if (extension_degree < 1)
    throw InvalidField("extension degree must be positive");
  FieldPtr p = prime(characteristic);
  if (extension_degree == 1) return p;
  return extension(std::move(p), extension_degree, seed);
}

mpz_class Field::size() const {
  if (!finite()) return 0;
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_),
                unsigned(words_));
  return r;
}

FieldElem Field::zero() const {
  FieldElem e;
  if (kind_ == FieldKind::rationals)
    e.rat.emplace(0);
  else
    e.res.assign(std::size_t(words_), 0);
  return e;
}

FieldElem Field::one() const {
  FieldElem e = zero();
  if (kind_ == FieldKind::rationals)
    *e.rat = 1;
  else
    e.res[0] = 1;
  return e;
}

FieldElem Field::from_int(long v) const {
  if (kind_ == FieldKind::rationals) {
    FieldElem e;
    e.rat.emplace(v);
    return e;
  }
  FieldElem e = zero();
  long r = v % long(p_);
  if (r < 0) r += long(p_);
  e.res[0] = u64(r);
  return e;
}

FieldElem Field::from_mpz(const mpz_class& v) const {
  if (kind_ == FieldKind::rationals) {
    FieldElem e;
    e.rat.emplace(v);
    return e;
  }
  FieldElem e = zero();
  e.res[0] = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
  return e;
}

FieldElem Field::from_mpq(const mpq_class& v) const {
  if (kind_ == FieldKind::rationals) {
    FieldElem e;
    e.rat.emplace(v);
    e.rat->canonicalize();
    return e;
  }
  u64 num = mpz_fdiv_ui(v.get_num_mpz_t(), static_cast<unsigned long>(p_));
  u64 den = mpz_fdiv_ui(v.get_den_mpz_t(), static_cast<unsigned long>(p_));
  if (den == 0)
    throw NotDivisible("denominator vanishes in characteristic " +
                       std::to_string(p_));
  FieldElem e = zero();
  e.res[0] = mulmod(num, invmod(den, p_), p_);
  return e;
}

FieldElem Field::lift(const Field& from, const FieldElem& a) const {
  if (same(from, *this)) return a;
  if (kind_ == FieldKind::extension) {
    FieldElem b = base_->lift(from, a);
    FieldElem r = zero();
    for (int j = 0; j < base_->words_; ++j) r.res[std::size_t(j)] = b.res[std::size_t(j)];
    return r;
  }
  throw MathError("element does not come from a subfield of this field");
}

FieldElem Field::gen() const {
  if (kind_ != FieldKind::extension)
    throw MathError("only extension fields have a generator element");
  FieldElem r = zero();
  r.res[std::size_t(base_->words_)] = 1;
  return r;
}

bool Field::is_zero(const FieldElem& a) const {
  if (kind_ == FieldKind::rationals) return !a.rat || sgn(*a.rat) == 0;
  for (u64 w : a.res)
    if (w) return false;
  return true;
}

bool Field::is_one(const FieldElem& a) const {
  if (kind_ == FieldKind::rationals) return a.rat && *a.rat == 1;
  if (a.res.empty() || a.res[0] != 1) return false;
  for (std::size_t i = 1; i < a.res.size(); ++i)
    if (a.res[i]) return false;
  return true;
}

bool Field::equal(const FieldElem& a, const FieldElem& b) const {
  if (kind_ == FieldKind::rationals) return *a.rat == *b.rat;
  return a.res == b.res;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r;
  if (kind_ == FieldKind::rationals) {
    r.rat.emplace(*a.rat + *b.rat);
    return r;
  }
  r.res.resize(std::size_t(words_));
  vadd(r.res.data(), a.res.data(), b.res.data(), words_, p_);
  return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r;
  if (kind_ == FieldKind::rationals) {
    r.rat.emplace(*a.rat - *b.rat);
    return r;
  }
  r.res.resize(std::size_t(words_));
  vsub(r.res.data(), a.res.data(), b.res.data(), words_, p_);
  return r;
}

FieldElem Field::neg(const FieldElem& a) const {
  FieldElem r;
  if (kind_ == FieldKind::rationals) {
    r.rat.emplace(-*a.rat);
    return r;
  }
  r.res.resize(std::size_t(words_));
  for (int i = 0; i < words_; ++i)
    r.res[std::size_t(i)] = a.res[std::size_t(i)] == 0 ? 0 : p_ - a.res[std::size_t(i)];
  return r;
}

void Field::mul_flat(u64* out, const u64* a, const u64* b) const {
  if (kind_ == FieldKind::prime) {
    out[0] = mulmod(a[0], b[0], p_);
    return;
  }
  const Field& B = *base_;
  const int wb = B.words_;
  const int d = deg_;
  u64 tmp[2 * kMaxWords];
  u64 prod[kMaxWords];
  vzero(tmp, (2 * d - 1) * wb);
  for (int i = 0; i < d; ++i) {
    if (viszero(a + i * wb, wb)) continue;
    for (int j = 0; j < d; ++j) {
      if (viszero(b + j * wb, wb)) continue;
      B.mul_flat(prod, a + i * wb, b + j * wb);
      vadd(tmp + (i + j) * wb, tmp + (i + j) * wb, prod, wb, p_);
    }
  }
  const u64* mf = mod_flat_.data();
  for (int k = 2 * d - 2; k >= d; --k) {
    u64* c = tmp + k * wb;
    if (viszero(c, wb)) continue;
    for (int l = 0; l < d; ++l) {
      if (viszero(mf + l * wb, wb)) continue;
      B.mul_flat(prod, c, mf + l * wb);
      vsub(tmp + (k - d + l) * wb, tmp + (k - d + l) * wb, prod, wb, p_);
    }
  }
  vcopy(out, tmp, d * wb);
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  FieldElem r;
  if (kind_ == FieldKind::rationals) {
    r.rat.emplace(*a.rat * *b.rat);
    return r;
  }
  r.res.resize(std::size_t(words_));
  mul_flat(r.res.data(), a.res.data(), b.res.data());
  return r;
}

FieldElem Field::inv(const FieldElem& a) const {
  if (is_zero(a)) throw MathError("division by zero");
  if (kind_ == FieldKind::rationals) {
    FieldElem r;
    r.rat.emplace();
    mpq_inv(r.rat->get_mpq_t(), a.rat->get_mpq_t());
    return r;
  }
  if (kind_ == FieldKind::prime) {
    FieldElem r = zero();
    r.res[0] = invmod(a.res[0], p_);
    return r;
  }
  return pow(a, size() - 2);
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const {
  return mul(a, inv(b));
}

FieldElem Field::pow(const FieldElem& a, const mpz_class& e) const {
  if (sgn(e) < 0) return pow(inv(a), -e);
  if (kind_ == FieldKind::rationals) {
    if (!e.fits_ulong_p()) throw MathError("rational exponent too large");
    unsigned long ue = e.get_ui();
    FieldElem r;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), a.rat->get_num_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), a.rat->get_den_mpz_t(), ue);
    r.rat.emplace(mpq_class(num) / mpq_class(den));
    return r;
  }
  if (sgn(e) == 0) return one();
  u64 r[kMaxWords], base[kMaxWords], t[kMaxWords];
  vzero(r, words_);
  r[0] = 1;
  vcopy(base, a.res.data(), words_);
  int bits = int(mpz_sizeinbase(e.get_mpz_t(), 2));
  for (int i = bits - 1; i >= 0; --i) {
    mul_flat(t, r, r);
    vcopy(r, t, words_);
    if (mpz_tstbit(e.get_mpz_t(), i)) {
      mul_flat(t, r, base);
      vcopy(r, t, words_);
    }
  }
  FieldElem out;
  out.res.assign(r, r + words_);
  return out;
}

FieldElem Field::random_elem(Rng& rng) const {
  if (kind_ == FieldKind::rationals) {
    u64 v = uniform_u64(rng, 65537);
    return from_int(long(v) - 32768);
  }
  FieldElem r;
  r.res.resize(std::size_t(words_));
  for (int i = 0; i < words_; ++i) r.res[std::size_t(i)] = uniform_u64(rng, p_);
  return r;
}

FieldElem Field::elem_at(const mpz_class& index) const {
  if (sgn(index) < 0) throw MathError("element index must be nonnegative");
  if (kind_ == FieldKind::rationals) {
    if (index == 0) return zero();
    mpz_class v;
    if (mpz_odd_p(index.get_mpz_t()))
      v = (index + 1) / 2;
    else
      v = -(index / 2);
    return from_mpz(v);
  }
  FieldElem r = zero();
  mpz_class t = index;
  for (int i = 0; i < words_; ++i)
    r.res[std::size_t(i)] = mpz_fdiv_q_ui(t.get_mpz_t(), t.get_mpz_t(),
                                          static_cast<unsigned long>(p_));
  if (t != 0) throw MathError("element index exceeds field size");
  return r;
}

FieldElem Field::multiplicative_generator() const {
  if (!finite())
    throw MathError("multiplicative generator requires a finite field");
  mpz_class m = size() - 1;
  std::vector<mpz_class> primes = distinct_prime_factors(m);
  for (mpz_class k = 1;; ++k) {
    FieldElem a = elem_at(k);
    bool ok = true;
    for (const mpz_class& r : primes) {
      if (is_one(pow(a, m / r))) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
}

int Field::ext_level() const {
  if (kind_ != FieldKind::extension) return 0;
  return base_->ext_level() + 1;
}

std::string Field::gen_letter() const {
  static const char* letters[] = {"t", "u", "v", "w"};
  int lv = ext_level();
  if (lv < 1) throw MathError("only extension fields have a generator letter");
  return letters[std::min(lv - 1, 3)];
}

std::string Field::to_string(const FieldElem& a) const {
  if (kind_ == FieldKind::rationals) return a.rat ? a.rat->get_str() : "0";
  if (kind_ == FieldKind::prime)
    return std::to_string(a.res.empty() ? 0 : a.res[0]);
  const int wb = base_->words_;
  std::string var = gen_letter();
  std::string out;
  for (int i = deg_ - 1; i >= 0; --i) {
    if (viszero(a.res.data() + i * wb, wb)) continue;
    FieldElem c;
    c.res.assign(a.res.data() + i * wb, a.res.data() + (i + 1) * wb);
    std::string cs = base_->to_string(c);
    std::string term;
    if (i == 0) {
      term = cs;
    } else {
      std::string xp = i == 1 ? var : var + "^" + std::to_string(i);
      if (cs == "1") {
        term = xp;
      } else {
        bool paren = cs.find_first_of("+*^") != std::string::npos;
        term = (paren ? "(" + cs + ")" : cs) + "*" + xp;
      }
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string Field::name() const {
  if (kind_ == FieldKind::rationals) return "QQ";
  if (kind_ == FieldKind::prime) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(words_) + ")";
}

bool Field::same(const Field& a, const Field& b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_ || a.p_ != b.p_ || a.deg_ != b.deg_ ||
      a.words_ != b.words_)
    return false;
  if (a.kind_ == FieldKind::extension)
    return same(*a.base_, *b.base_) && a.mod_flat_ == b.mod_flat_;
  return true;
}

}  // namespace homaloidal
