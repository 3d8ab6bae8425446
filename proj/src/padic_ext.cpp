#include "padelin/padic_ext.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "padelin/combinatorics.hpp"

namespace padelin {

namespace {

using ModPoly = std::vector<long>;

long mulmod(long a, long b, long p) { return static_cast<long>((static_cast<__int128>(a) * b) % p); }

long invmod(long a, long p) {
  Integer r;
  Integer az = a, pz = p;
  if (mpz_invert(r.get_mpz_t(), az.get_mpz_t(), pz.get_mpz_t()) == 0) throw std::domain_error("not invertible mod p");
  return r.get_si();
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const ModPoly& a) { return static_cast<long>(a.size()) - 1; }

ModPoly sub(ModPoly a, const ModPoly& b, long p) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

ModPoly add(ModPoly a, const ModPoly& b, long p) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(out);
  return out;
}

std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& d, long p) {
  if (d.empty()) throw std::domain_error("division by zero polynomial mod p");
  if (a.size() < d.size()) return {{}, a};
  long inv = invmod(d.back(), p);
  ModPoly q(a.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    long f = mulmod(a[k + d.size() - 1], inv, p);
    q[k] = f;
    for (std::size_t j = 0; j < d.size(); ++j) a[k + j] = ((a[k + j] - mulmod(f, d[j], p)) % p + p) % p;
  }
  a.resize(d.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly monic(ModPoly a, long p) {
  if (a.empty()) return a;
  long inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, long p) {
  while (!b.empty()) {
    auto r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

ModPoly powmod(ModPoly base, Integer k, const ModPoly& h, long p) {
  ModPoly out{1};
  base = divmod(base, h, p).second;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) out = divmod(mul(out, base, p), h, p).second;
    k >>= 1;
    if (k > 0) base = divmod(mul(base, base, p), h, p).second;
  }
  return out;
}

// s, t with s a + t b = 1 mod p, for coprime a, b.
std::pair<ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b, long p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, sub(s0, mul(q, s1, p), p));
    t0 = std::exchange(t1, sub(t0, mul(q, t1, p), p));
  }
  if (r0.size() != 1) throw std::logic_error("factors are not coprime mod p");
  long inv = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  return {s0, t0};
}

ModPoly candidate(long index, long degree_bound, long p) {
  ModPoly a;
  while (index > 0 && static_cast<long>(a.size()) < degree_bound) {
    a.push_back(index % p);
    index /= p;
  }
  trim(a);
  return a;
}

void equal_degree_split(const ModPoly& h, long f, long p, std::vector<ModPoly>& out) {
  if (deg(h) == f) {
    out.push_back(h);
    return;
  }
  for (long index = p;; ++index) {
    ModPoly a = candidate(index, deg(h), p);
    if (deg(a) < 1) continue;
    ModPoly b;
    if (p == 2) {
      ModPoly term = divmod(a, h, p).second;
      b = term;
      for (long i = 1; i < f; ++i) {
        term = divmod(mul(term, term, p), h, p).second;
        b = add(b, term, p);
      }
    } else {
      Integer k = (prime_power(p, f) - 1) / 2;
      b = sub(powmod(a, k, h, p), ModPoly{1}, p);
    }
    ModPoly g = gcd(h, b, p);
    if (deg(g) >= 1 && deg(g) < deg(h)) {
      equal_degree_split(g, f, p, out);
      equal_degree_split(divmod(h, g, p).first, f, p, out);
      return;
    }
  }
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ModPoly reduce_mod_p(const std::vector<Integer>& a, long p) {
  ModPoly out(a.size());
  Integer r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), a[i].get_mpz_t(), static_cast<unsigned long>(p));
    out[i] = r.get_si();
  }
  trim(out);
  return out;
}

}  // namespace

std::vector<std::vector<long>> cyclotomic_factors_mod_p(long e, long p) {
  if (e % p == 0) throw std::invalid_argument("p must not divide e");
  long f = multiplicative_order(p, e);
  ModPoly phi = reduce_mod_p(cyclotomic_polynomial(e), p);
  std::vector<ModPoly> out;
  equal_degree_split(phi, f, p, out);
  for (auto& g : out) g = monic(g, p);
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const UnramifiedExtension> UnramifiedExtension::make(long e, long p, long precision) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e < 1) throw std::invalid_argument("e must be positive");
  if (e % p == 0) throw std::invalid_argument("p divides e: ramified extensions are not supported");
  if (precision < 1) throw std::invalid_argument("precision must be positive");
  const auto& phi = cyclotomic_polynomial(e);
  auto factors = cyclotomic_factors_mod_p(e, p);
  ModPoly g0 = factors.front();
  ModPoly h0 = divmod(reduce_mod_p(phi, p), g0, p).first;
  auto [s, t] = xgcd(g0, h0, p);

  std::vector<Integer> g(g0.begin(), g0.end()), h(h0.begin(), h0.end());
  if (h.empty()) h = {Integer(1)};
  Integer pk = p;
  for (long k = 1; k < precision; ++k) {
    auto gh = poly_mul(g, h);
    std::vector<Integer> diff(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) diff[i] = phi[i] - (i < gh.size() ? gh[i] : Integer(0));
    for (auto& c : diff) c /= pk;  // exact
    ModPoly c = reduce_mod_p(diff, p);
    auto [q, dg] = divmod(mul(t, c, p), g0, p);
    ModPoly dh = add(mul(c, s, p), mul(q, h0, p), p);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += pk * dg[i];
    for (std::size_t i = 0; i < dh.size(); ++i) {
      if (i >= h.size()) throw std::logic_error("Hensel correction exceeds cofactor degree");
      h[i] += pk * dh[i];
    }
    pk *= p;
  }
  for (auto& c : g) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());

  auto out = std::shared_ptr<UnramifiedExtension>(new UnramifiedExtension());
  out->e_ = e;
  out->p_ = p;
  out->precision_ = precision;
  out->modulus_ = std::move(g);
  return out;
}

PAdicExt::PAdicExt(Field field, std::vector<PAdic> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw std::invalid_argument("missing extension field");
  if (static_cast<long>(coords_.size()) != field_->degree())
    throw std::invalid_argument("coordinate count differs from extension degree");
}

PAdicExt PAdicExt::from_padic(Field field, const PAdic& v) {
  long f = field->degree();
  std::vector<PAdic> c(f, PAdic::zero(v.prime(), field->precision()));
  c[0] = v;
  return PAdicExt(std::move(field), std::move(c));
}

PAdicExt PAdicExt::from_cyclo(Field field, const CycloElement& v, long precision) {
  long p = field->prime();
  long f = field->degree();
  long e = field->order();
  const auto& g = field->modulus();
  std::vector<Rational> acc(f);
  // Running Y^i mod g, with integer coefficients.
  std::vector<Integer> power(f);
  power[0] = 1;
  const Integer modulus = prime_power(p, field->precision());
  CycloElement w = v;
  if (w.order() != 1 && w.order() != e) throw std::domain_error("element lives in a different cyclotomic field");
  long min_val = kInfiniteValuation;
  for (std::size_t i = 0; i < w.coeffs().size(); ++i) {
    const auto& c = w.coeffs()[i];
    if (!c.is_zero()) {
      min_val = std::min(min_val, padelin::valuation(c, p));
      for (long j = 0; j < f; ++j) acc[j] += c * Rational(power[j]);
    }
    Integer top = power[f - 1];
    for (long j = f - 1; j > 0; --j) power[j] = power[j - 1] - top * g[j];
    power[0] = -top * g[0];
    for (auto& c : power) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
  }
  long prec = precision;
  if (min_val != kInfiniteValuation) prec = std::min(prec, min_val + field->precision());
  std::vector<PAdic> coords;
  coords.reserve(f);
  for (long j = 0; j < f; ++j) coords.push_back(PAdic::from_rational(acc[j], p, prec));
  return PAdicExt(std::move(field), std::move(coords));
}

long PAdicExt::valuation() const {
  long v = kInfiniteValuation;
  for (const auto& c : coords_) v = std::min(v, c.valuation());
  return v;
}

long PAdicExt::precision() const {
  long v = kInfiniteValuation;
  for (const auto& c : coords_) v = std::min(v, c.precision());
  return v;
}

bool PAdicExt::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const PAdic& c) { return c.is_zero(); });
}

PAdic PAdicExt::to_padic() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) throw std::domain_error("extension element is not in Q_p");
  return coords_[0].with_precision(precision());
}

PAdicExt PAdicExt::with_precision(long cap) const {
  std::vector<PAdic> c;
  for (const auto& x : coords_) c.push_back(x.with_precision(cap));
  return PAdicExt(field_, std::move(c));
}

bool PAdicExt::agrees_with(const PAdicExt& o, long cap) const {
  PAdicExt d = *this - o;
  long limit = std::min(cap, d.precision());
  return std::all_of(d.coords_.begin(), d.coords_.end(),
                     [limit](const PAdic& c) { return c.with_precision(limit).is_zero(); });
}

namespace {

// The lower-precision field when both realise the same extension.
const PAdicExt::Field& common_field(const PAdicExt& a, const PAdicExt& b) {
  const auto& fa = a.field();
  const auto& fb = b.field();
  if (fa == fb) return fa;
  if (fa->order() != fb->order() || fa->prime() != fb->prime() || fa->degree() != fb->degree())
    throw std::domain_error("mixing different extension fields");
  const auto& low = fa->precision() <= fb->precision() ? fa : fb;
  const Integer mod = prime_power(low->prime(), low->precision());
  for (long i = 0; i <= low->degree(); ++i)
    if ((fa->modulus()[i] - fb->modulus()[i]) % mod != 0) throw std::domain_error("mixing different extension fields");
  return low;
}

}  // namespace

PAdicExt operator+(const PAdicExt& a, const PAdicExt& b) {
  const auto& field = common_field(a, b);
  std::vector<PAdic> c;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) c.push_back(a.coords_[i] + b.coords_[i]);
  return PAdicExt(field, std::move(c));
}

PAdicExt operator-(const PAdicExt& a, const PAdicExt& b) {
  const auto& field = common_field(a, b);
  std::vector<PAdic> c;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) c.push_back(a.coords_[i] - b.coords_[i]);
  return PAdicExt(field, std::move(c));
}

PAdicExt PAdicExt::operator-() const {
  std::vector<PAdic> c;
  for (const auto& x : coords_) c.push_back(-x);
  return PAdicExt(field_, std::move(c));
}

PAdicExt operator*(const PAdicExt& a, const PAdic& s) {
  std::vector<PAdic> c;
  for (const auto& x : a.coords_) c.push_back(x * s);
  return PAdicExt(a.field_, std::move(c));
}

PAdicExt operator*(const PAdicExt& a, const PAdicExt& b) {
  const auto& field = common_field(a, b);
  const long f = field->degree();
  const long p = field->prime();
  const long mprec = field->precision();
  if (f == 1) return PAdicExt(field, {a.coords_[0] * b.coords_[0]});
  std::vector<PAdic> prod;
  for (long k = 0; k < 2 * f - 1; ++k) {
    PAdic acc;
    bool first = true;
    for (long i = std::max(0L, k - f + 1); i <= std::min(k, f - 1); ++i) {
      PAdic term = a.coords_[i] * b.coords_[k - i];
      acc = first ? term : acc + term;
      first = false;
    }
    prod.push_back(acc);
  }
  const auto& g = field->modulus();
  for (long k = 2 * f - 2; k >= f; --k) {
    PAdic top = prod[k];
    for (long j = 0; j < f; ++j) prod[k - f + j] -= top * PAdic::from_integer(g[j], p, mprec);
  }
  prod.resize(f);
  return PAdicExt(field, std::move(prod));
}

std::string PAdicExt::str() const {
  if (coords_.size() == 1) return coords_[0].str();
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i].str();
  os << ")";
  return os.str();
}

}  // namespace padelin
