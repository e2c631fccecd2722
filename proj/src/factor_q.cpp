#include "chnorm/factor_q.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>

#include "chnorm/error.hpp"

namespace chnorm {

namespace {

// ----- integer polynomials ------------------------------------------------

using ZPoly = std::vector<Integer>;  // dense, index = power, trimmed

void z_trim(ZPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

std::size_t z_degree(const ZPoly& f) { return f.empty() ? 0 : f.size() - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division test over Z; returns true and fills q when d | f.
bool z_divides(const ZPoly& f, const ZPoly& d, ZPoly* q_out) {
  if (d.empty()) throw DomainError("division by zero polynomial");
  ZPoly rem = f;
  z_trim(rem);
  ZPoly q(rem.size() > d.size() ? rem.size() - d.size() + 1 : 1, Integer(0));
  while (!rem.empty() && rem.size() >= d.size()) {
    Integer quot, r;
    mpz_tdiv_qr(quot.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(),
                d.back().get_mpz_t());
    if (sgn(r) != 0) return false;
    const std::size_t shift = rem.size() - d.size();
    q[shift] = quot;
    for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= quot * d[i];
    z_trim(rem);
    if (rem.size() > shift + d.size() - 1 && !rem.empty()) {
      return false;
    }
  }
  if (!rem.empty()) return false;
  if (q_out) {
    z_trim(q);
    *q_out = std::move(q);
  }
  return true;
}

Integer z_content(const ZPoly& f) {
  Integer g(0);
  for (const Integer& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

ZPoly z_primitive(const ZPoly& f) {
  Integer c = z_content(f);
  if (sgn(c) == 0) return {};
  if (sgn(f.back()) < 0) c = -c;
  ZPoly out;
  out.reserve(f.size());
  for (const Integer& x : f) out.push_back(x / c);
  return out;
}

// Clear denominators and content: returns the primitive integer polynomial
// with positive leading coefficient proportional to f.
ZPoly z_from_rational(const RatUniPoly& f) {
  Integer lcm(1);
  for (const Rational& c : f.coefficients()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  ZPoly out;
  out.reserve(f.coefficients().size());
  for (const Rational& c : f.coefficients()) {
    out.push_back(Integer(c.get_num() * (lcm / c.get_den())));
  }
  return z_primitive(out);
}

RatUniPoly rational_from_z(const ZPoly& f) {
  std::vector<Rational> out;
  out.reserve(f.size());
  for (const Integer& c : f) out.emplace_back(c);
  return RatUniPoly(std::move(out));
}

// ----- arithmetic mod a small prime ----------------------------------------

using FpPoly = std::vector<std::uint64_t>;

struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    return (a + b) % p;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return (a + p - b) % p;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return a * b % p;
  }
  std::uint64_t pow(std::uint64_t a, Integer e) const {
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    while (sgn(e) > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, Integer(p - 2)); }

  std::uint64_t reduce(const Integer& x) const {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), Integer(p).get_mpz_t());
    return r.get_ui();
  }
};

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::size_t fp_degree(const FpPoly& f) { return f.empty() ? 0 : f.size() - 1; }

FpPoly fp_from_z(const Fp& fp, const ZPoly& f) {
  FpPoly out;
  out.reserve(f.size());
  for (const Integer& c : f) out.push_back(fp.reduce(c));
  fp_trim(out);
  return out;
}

FpPoly fp_mul(const Fp& fp, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = fp.add(out[i + j], fp.mul(a[i], b[j]));
    }
  }
  return out;
}

FpPoly fp_sub(const Fp& fp, const FpPoly& a, const FpPoly& b) {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = fp.sub(out[i], b[i]);
  fp_trim(out);
  return out;
}

FpPoly fp_scale(const Fp& fp, const FpPoly& a, std::uint64_t s) {
  FpPoly out = a;
  for (auto& c : out) c = fp.mul(c, s);
  fp_trim(out);
  return out;
}

// Division with remainder; divisor nonzero.
std::pair<FpPoly, FpPoly> fp_divmod(const Fp& fp, FpPoly a, const FpPoly& b) {
  fp_trim(a);
  if (b.empty()) throw DomainError("mod-p division by zero");
  if (a.size() < b.size()) return {{}, a};
  FpPoly q(a.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = fp.inv(b.back());
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    const std::size_t top = shift + b.size() - 1;
    if (a[top] == 0) continue;
    const std::uint64_t factor = fp.mul(a[top], lead_inv);
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = fp.sub(a[shift + i], fp.mul(factor, b[i]));
    }
  }
  fp_trim(a);
  fp_trim(q);
  return {q, a};
}

FpPoly fp_rem(const Fp& fp, const FpPoly& a, const FpPoly& b) {
  return fp_divmod(fp, a, b).second;
}

FpPoly fp_monic(const Fp& fp, const FpPoly& a) {
  if (a.empty()) return a;
  return fp_scale(fp, a, fp.inv(a.back()));
}

FpPoly fp_gcd(const Fp& fp, FpPoly a, FpPoly b) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(fp, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(fp, a);
}

FpPoly fp_derivative(const Fp& fp, const FpPoly& a) {
  if (a.size() <= 1) return {};
  FpPoly out(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i - 1] = fp.mul(a[i], i % fp.p);
  }
  fp_trim(out);
  return out;
}

FpPoly fp_powmod(const Fp& fp, FpPoly base, Integer e, const FpPoly& mod) {
  FpPoly result = {1};
  base = fp_rem(fp, base, mod);
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) {
      result = fp_rem(fp, fp_mul(fp, result, base), mod);
    }
    base = fp_rem(fp, fp_mul(fp, base, base), mod);
    e >>= 1;
  }
  return result;
}

// Extended Euclid in Fp[x]: s*a + t*b = gcd (monic).
struct FpExtGcd {
  FpPoly g, s, t;
};

FpExtGcd fp_extended_gcd(const Fp& fp, FpPoly a, FpPoly b) {
  FpPoly r0 = std::move(a), r1 = std::move(b);
  FpPoly s0 = {1}, s1 = {};
  FpPoly t0 = {}, t1 = {1};
  fp_trim(r0);
  fp_trim(r1);
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(fp, r0, r1);
    FpPoly s = fp_sub(fp, s0, fp_mul(fp, q, s1));
    FpPoly t = fp_sub(fp, t0, fp_mul(fp, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.empty()) return {r0, s0, t0};
  const std::uint64_t inv = fp.inv(r0.back());
  return {fp_scale(fp, r0, inv), fp_scale(fp, s0, inv), fp_scale(fp, t0, inv)};
}

// ----- factorization mod p --------------------------------------------------

// Distinct-degree split of a monic squarefree polynomial: list of
// (product, d) with every irreducible factor of `product` of degree d.
std::vector<std::pair<FpPoly, std::size_t>> fp_distinct_degree(
    const Fp& fp, const FpPoly& f) {
  std::vector<std::pair<FpPoly, std::size_t>> out;
  FpPoly g = f;
  FpPoly h = {0, 1};  // x
  std::size_t i = 0;
  while (fp_degree(g) >= 2 * (i + 1)) {
    ++i;
    h = fp_powmod(fp, h, Integer(fp.p), f);
    FpPoly hx = fp_sub(fp, h, FpPoly{0, 1});
    FpPoly d = fp_gcd(fp, hx, g);
    if (!d.empty() && fp_degree(d) > 0) {
      out.emplace_back(d, i);
      g = fp_divmod(fp, g, d).first;
    }
  }
  if (fp_degree(g) > 0) out.emplace_back(g, fp_degree(g));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting for odd p.
void fp_equal_degree(const Fp& fp, const FpPoly& f, std::size_t d,
                     std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (fp_degree(f) == d) {
    out.push_back(fp_monic(fp, f));
    return;
  }
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), fp.p, d);
  exponent = (exponent - 1) / 2;
  for (;;) {
    FpPoly a(fp_degree(f), 0);
    for (auto& c : a) c = rng() % fp.p;
    fp_trim(a);
    if (fp_degree(a) == 0) continue;
    FpPoly g = fp_gcd(fp, a, f);
    if (fp_degree(g) > 0 && fp_degree(g) < fp_degree(f)) {
      fp_equal_degree(fp, g, d, rng, out);
      fp_equal_degree(fp, fp_divmod(fp, f, g).first, d, rng, out);
      return;
    }
    FpPoly b = fp_powmod(fp, a, exponent, f);
    b = fp_sub(fp, b, FpPoly{1});
    g = fp_gcd(fp, b, f);
    if (fp_degree(g) > 0 && fp_degree(g) < fp_degree(f)) {
      fp_equal_degree(fp, g, d, rng, out);
      fp_equal_degree(fp, fp_divmod(fp, f, g).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of f mod p; f must be squarefree mod p.
std::vector<FpPoly> fp_factor(const Fp& fp, const FpPoly& f) {
  std::vector<FpPoly> out;
  std::mt19937_64 rng(0x5eedULL ^ fp.p);
  for (const auto& [block, d] : fp_distinct_degree(fp, fp_monic(fp, f))) {
    fp_equal_degree(fp, block, d, rng, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ----- good primes ----------------------------------------------------------

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Odd primes p with p not dividing lc(W) and W squarefree mod p (that is, p
// does not divide the discriminant-resultant witness res(W, W')).
std::vector<std::uint64_t> good_primes(const ZPoly& w, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; out.size() < count; p += 2) {
    if (!is_prime_u64(p)) continue;
    const Fp fp{p};
    if (fp.reduce(w.back()) == 0) continue;
    const FpPoly f = fp_from_z(fp, w);
    const FpPoly d = fp_derivative(fp, f);
    if (d.empty()) continue;
    if (fp_degree(fp_gcd(fp, f, d)) != 0) continue;
    out.push_back(p);
  }
  return out;
}

// ----- Hensel lifting --------------------------------------------------------

Integer z_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly z_mod_poly(const ZPoly& f, const Integer& m) {
  ZPoly out;
  out.reserve(f.size());
  for (const Integer& c : f) out.push_back(z_mod(c, m));
  z_trim(out);
  return out;
}

// Symmetric representative in (-m/2, m/2].
ZPoly z_symmetric(const ZPoly& f, const Integer& m) {
  ZPoly out;
  out.reserve(f.size());
  const Integer half = m / 2;
  for (const Integer& c : f) {
    Integer r = z_mod(c, m);
    if (r > half) r -= m;
    out.push_back(r);
  }
  z_trim(out);
  return out;
}

ZPoly z_from_fp(const FpPoly& f) {
  ZPoly out;
  out.reserve(f.size());
  for (std::uint64_t c : f) out.emplace_back(static_cast<unsigned long>(c));
  z_trim(out);
  return out;
}

// Division with remainder mod m by a monic divisor.
std::pair<ZPoly, ZPoly> zmod_divmod_monic(const ZPoly& a, const ZPoly& b,
                                          const Integer& m) {
  ZPoly rem = z_mod_poly(a, m);
  if (b.empty() || z_mod(b.back(), m) != 1) {
    throw InternalError("modular division requires a monic divisor");
  }
  if (rem.size() < b.size()) return {{}, rem};
  ZPoly q(rem.size() - b.size() + 1, Integer(0));
  for (std::size_t shift = rem.size() - b.size() + 1; shift-- > 0;) {
    const std::size_t top = shift + b.size() - 1;
    if (sgn(rem[top]) == 0) continue;
    const Integer factor = rem[top];
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rem[shift + i] = z_mod(rem[shift + i] - factor * b[i], m);
    }
  }
  z_trim(rem);
  z_trim(q);
  return {q, rem};
}

// One quadratic Hensel step: from f = g*h (mod m) with s*g + t*h = 1
// (mod m) and h monic, produce the same data mod m^2.
struct HenselPair {
  ZPoly g, h, s, t;
};

HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const Integer& m) {
  const Integer m2 = m * m;
  const ZPoly e = z_mod_poly(
      [&] {
        ZPoly diff = f;
        const ZPoly gh = z_mul(in.g, in.h);
        diff.resize(std::max(diff.size(), gh.size()), Integer(0));
        for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
        return diff;
      }(),
      m2);
  auto [q, r] = zmod_divmod_monic(z_mod_poly(z_mul(in.s, e), m2), in.h, m2);
  ZPoly g_star = in.g;
  {
    const ZPoly te = z_mul(in.t, e);
    const ZPoly qg = z_mul(q, in.g);
    g_star.resize(std::max({g_star.size(), te.size(), qg.size()}), Integer(0));
    for (std::size_t i = 0; i < te.size(); ++i) g_star[i] += te[i];
    for (std::size_t i = 0; i < qg.size(); ++i) g_star[i] += qg[i];
    g_star = z_mod_poly(g_star, m2);
  }
  ZPoly h_star = in.h;
  {
    h_star.resize(std::max(h_star.size(), r.size()), Integer(0));
    for (std::size_t i = 0; i < r.size(); ++i) h_star[i] += r[i];
    h_star = z_mod_poly(h_star, m2);
  }

  // Bezout update: b = s g* + t h* - 1 mod m^2.
  ZPoly b;
  {
    const ZPoly sg = z_mul(in.s, g_star);
    const ZPoly th = z_mul(in.t, h_star);
    b.resize(std::max(sg.size(), th.size()), Integer(0));
    for (std::size_t i = 0; i < sg.size(); ++i) b[i] += sg[i];
    for (std::size_t i = 0; i < th.size(); ++i) b[i] += th[i];
    if (b.empty()) b.push_back(Integer(-1));
    else b[0] -= 1;
    b = z_mod_poly(b, m2);
  }
  auto [c, d] = zmod_divmod_monic(z_mod_poly(z_mul(in.s, b), m2), h_star, m2);
  ZPoly s_star = in.s;
  {
    s_star.resize(std::max(s_star.size(), d.size()), Integer(0));
    for (std::size_t i = 0; i < d.size(); ++i) s_star[i] -= d[i];
    s_star = z_mod_poly(s_star, m2);
  }
  ZPoly t_star = in.t;
  {
    const ZPoly tb = z_mul(in.t, b);
    const ZPoly cg = z_mul(c, g_star);
    t_star.resize(std::max({t_star.size(), tb.size(), cg.size()}), Integer(0));
    for (std::size_t i = 0; i < tb.size(); ++i) t_star[i] -= tb[i];
    for (std::size_t i = 0; i < cg.size(); ++i) t_star[i] -= cg[i];
    t_star = z_mod_poly(t_star, m2);
  }
  return {std::move(g_star), std::move(h_star), std::move(s_star),
          std::move(t_star)};
}

// Lifts the mod-p factorization W = lc * prod(factors) to monic factors
// modulo a power of p that exceeds `target`. Returns the factors and the
// final modulus.
std::pair<std::vector<ZPoly>, Integer> hensel_lift_all(
    const ZPoly& w, const Fp& fp, const std::vector<FpPoly>& factors,
    const Integer& target) {
  std::vector<ZPoly> lifted;
  Integer modulus(static_cast<unsigned long>(fp.p));
  if (factors.size() == 1) {
    // W is lc * (monic factor): lift trivially by reducing W mod p^L.
    Integer big = modulus;
    while (big <= target) big *= big;
    const Integer lc_inv = [&] {
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), w.back().get_mpz_t(),
                     big.get_mpz_t()) == 0) {
        throw InternalError("leading coefficient not invertible mod p^L");
      }
      return inv;
    }();
    ZPoly monic;
    monic.reserve(w.size());
    for (const Integer& c : w) monic.push_back(z_mod(c * lc_inv, big));
    z_trim(monic);
    return {{monic}, big};
  }

  // Peel off one monic factor at a time: f = g * h with h = factors[idx]
  // (monic) and g the rest including the leading coefficient.
  ZPoly f = w;
  std::vector<FpPoly> rest(factors.begin(), factors.end());
  Integer final_modulus(static_cast<unsigned long>(fp.p));
  for (std::size_t idx = 0; rest.size() > 1; ++idx) {
    const FpPoly h0 = rest.back();
    rest.pop_back();
    FpPoly g0 = {fp.reduce(f.back())};
    for (const FpPoly& r : rest) g0 = fp_mul(fp, g0, r);
    const FpExtGcd eg = fp_extended_gcd(fp, g0, h0);
    if (fp_degree(eg.g) != 0 || eg.g.empty()) {
      throw InternalError("modular factors are not coprime");
    }
    HenselPair pair{z_from_fp(g0), z_from_fp(h0), z_from_fp(eg.s),
                    z_from_fp(eg.t)};
    Integer m(static_cast<unsigned long>(fp.p));
    while (m <= target) {
      pair = hensel_step(f, pair, m);
      m = m * m;
    }
    final_modulus = m;
    lifted.push_back(pair.h);
    f = pair.g;
  }
  // The last remaining piece carries the leading coefficient; monicize it.
  Integer lc_inv;
  if (mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(),
                 final_modulus.get_mpz_t()) == 0) {
    throw InternalError("leading coefficient not invertible mod p^L");
  }
  ZPoly last;
  last.reserve(f.size());
  for (const Integer& c : f) last.push_back(z_mod(c * lc_inv, final_modulus));
  z_trim(last);
  lifted.push_back(std::move(last));
  return {std::move(lifted), final_modulus};
}

// ----- recombination ---------------------------------------------------------

// Landau-Mignotte style bound on the coefficients of lc(W) * h for any
// monic rational factor h of W.
Integer coefficient_bound(const ZPoly& w) {
  Integer norm_sq(0);
  for (const Integer& c : w) norm_sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  norm += 1;
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2,
                static_cast<unsigned long>(z_degree(w) + 1));
  Integer lc = w.back();
  if (sgn(lc) < 0) lc = -lc;
  return two_n * norm * lc;
}

// Irreducible factors over Z of a primitive squarefree polynomial with
// positive leading coefficient.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& w_in) {
  ZPoly w = w_in;
  if (z_degree(w) <= 1) return {w};

  const std::vector<std::uint64_t> primes = good_primes(w, 1);
  const Fp fp{primes[0]};
  const std::vector<FpPoly> modular = fp_factor(fp, fp_from_z(fp, w));
  if (modular.size() == 1) return {w};

  const Integer target = coefficient_bound(w) * 2;
  auto [lifted, modulus] = hensel_lift_all(w, fp, modular, target);

  std::vector<ZPoly> result;
  std::vector<ZPoly> pool = std::move(lifted);

  // Try subsets of the modular factors by increasing size; a successful
  // candidate is an irreducible true factor because smaller subsets failed.
  bool progress = true;
  while (progress && !pool.empty()) {
    progress = false;
    const std::size_t n = pool.size();
    for (std::size_t size = 1; size <= n / 2 && !progress; ++size) {
      std::vector<std::size_t> idx(size);
      for (std::size_t i = 0; i < size; ++i) idx[i] = i;
      for (;;) {
        ZPoly cand = {w.back()};
        for (std::size_t i : idx) {
          cand = z_mod_poly(z_mul(cand, pool[i]), modulus);
        }
        cand = z_symmetric(cand, modulus);
        const ZPoly prim = z_primitive(cand);
        ZPoly quotient;
        if (!prim.empty() && z_divides(w, prim, &quotient)) {
          result.push_back(prim);
          // Remove the used modular factors and continue on the quotient.
          std::vector<ZPoly> next_pool;
          for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
            if (j < idx.size() && idx[j] == i) {
              ++j;
              continue;
            }
            next_pool.push_back(std::move(pool[i]));
          }
          pool = std::move(next_pool);
          w = z_primitive(quotient);
          progress = true;
          break;
        }
        // Next subset in lexicographic order.
        std::size_t pos = size;
        while (pos-- > 0) {
          if (idx[pos] + 1 <= n - (size - pos)) {
            ++idx[pos];
            for (std::size_t q = pos + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
            break;
          }
          if (pos == 0) {
            pos = static_cast<std::size_t>(-1);
            break;
          }
        }
        if (pos == static_cast<std::size_t>(-1)) break;
      }
    }
  }
  if (z_degree(w) >= 1) result.push_back(w);
  return result;
}

// Degree multiset of the irreducible factors of w modulo p.
std::vector<std::size_t> modular_degree_pattern(const ZPoly& w,
                                                std::uint64_t p) {
  const Fp fp{p};
  std::vector<std::size_t> degrees;
  for (const auto& [block, d] : fp_distinct_degree(fp, fp_monic(fp, fp_from_z(fp, w)))) {
    const std::size_t count = fp_degree(block) / d;
    for (std::size_t i = 0; i < count; ++i) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

// Whether the modular degree pattern can be partitioned into groups summing
// to the claimed rational factor degrees.
bool pattern_refines(std::vector<std::size_t> pattern,
                     std::vector<std::size_t> claimed) {
  std::sort(claimed.rbegin(), claimed.rend());
  // Backtracking over which group each pattern entry joins.
  std::vector<std::size_t> remaining = claimed;
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == pattern.size()) {
      return std::all_of(remaining.begin(), remaining.end(),
                         [](std::size_t r) { return r == 0; });
    }
    for (std::size_t g = 0; g < remaining.size(); ++g) {
      if (remaining[g] >= pattern[i]) {
        remaining[g] -= pattern[i];
        if (place(i + 1)) return true;
        remaining[g] += pattern[i];
      }
      // Skip equal groups to cut duplicate work.
      while (g + 1 < remaining.size() && remaining[g + 1] == remaining[g]) ++g;
    }
    return false;
  };
  std::sort(pattern.rbegin(), pattern.rend());
  return place(0);
}

}  // namespace

Factorization squarefree_decomposition(const RatUniPoly& u) {
  if (u.is_zero()) throw DomainError("cannot decompose the zero polynomial");
  Factorization out;
  out.unit = u.leading();
  if (u.degree() == 0) return out;

  // Yun's algorithm on the monic polynomial.
  const RatUniPoly f = u.monic();
  RatUniPoly a = poly_gcd(f, f.derivative());
  RatUniPoly b = f.divmod(a).first;
  RatUniPoly c = f.derivative().divmod(a).first;
  RatUniPoly d = c - b.derivative();
  std::size_t i = 1;
  while (b.degree() > 0) {
    const RatUniPoly g = poly_gcd(b, d);
    if (g.degree() > 0) out.factors.push_back({g, i});
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
    ++i;
  }

  // Postconditions: factors squarefree and pairwise coprime, product
  // reconstructs the input.
  RatUniPoly check = RatUniPoly::constant(out.unit);
  for (const auto& [factor, mult] : out.factors) {
    if (poly_gcd(factor, factor.derivative()).degree() != 0) {
      throw InternalError("squarefree decomposition emitted a non-squarefree "
                          "factor");
    }
    check = check * factor.pow(mult);
  }
  for (std::size_t p = 0; p < out.factors.size(); ++p) {
    for (std::size_t q = p + 1; q < out.factors.size(); ++q) {
      if (poly_gcd(out.factors[p].factor, out.factors[q].factor).degree() !=
          0) {
        throw InternalError("squarefree factors are not pairwise coprime");
      }
    }
  }
  if (check != u) {
    throw InternalError("squarefree decomposition does not multiply back");
  }
  return out;
}

Factorization factor_rational(const RatUniPoly& u) {
  if (u.is_zero() || u.degree() < 1) {
    throw DomainError("factorization needs a nonzero polynomial of degree "
                      ">= 1");
  }
  const Factorization squarefree = squarefree_decomposition(u);
  Factorization out;
  out.unit = squarefree.unit;
  for (const auto& [part, mult] : squarefree.factors) {
    const ZPoly w = z_from_rational(part);
    const std::vector<ZPoly> irreducible = factor_squarefree_z(w);

    // Cross-check: the claimed degrees must refine the degree pattern of
    // the squarefree part modulo three distinct good primes.
    std::vector<std::size_t> claimed;
    for (const ZPoly& h : irreducible) claimed.push_back(z_degree(h));
    for (std::uint64_t p : good_primes(w, 3)) {
      if (!pattern_refines(modular_degree_pattern(w, p), claimed)) {
        throw InternalError(
            "claimed factor degrees contradict the degree pattern mod " +
            std::to_string(p));
      }
    }

    for (const ZPoly& h : irreducible) {
      out.factors.push_back({rational_from_z(h).monic(), mult});
    }
  }

  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) {
              if (a.factor.degree() != b.factor.degree()) {
                return a.factor.degree() < b.factor.degree();
              }
              return a.factor.to_string() < b.factor.to_string();
            });

  // The product is always verified by multiplication.
  RatUniPoly check = RatUniPoly::constant(out.unit);
  for (const auto& [factor, mult] : out.factors) {
    check = check * factor.pow(mult);
  }
  if (check != u) {
    throw InternalError("factorization does not multiply back");
  }
  return out;
}

}  // namespace chnorm
