#include "pgst/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pgst {
namespace {

using Poly = std::vector<mpz_class>;  // dense, index = degree

// Quotient of a by monic b; the division is exact for the cyclotomic
// factorizations used here (remainder is known to vanish).
Poly exact_div_monic(Poly a, const Poly& b) {
  const size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const mpz_class t = a[i];  // b is monic
    q[i - db] = t;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
  }
  return q;
}

Poly substitute_power(const Poly& p, long s) {
  Poly r((p.size() - 1) * s + 1, 0);
  for (size_t i = 0; i < p.size(); ++i) r[i * s] = p[i];
  return r;
}

Poly negate_argument(const Poly& p) {
  Poly r = p;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return r;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// All divisors of a squarefree number given its prime factors.
std::vector<long> subset_products(const std::vector<long>& ps) {
  std::vector<long> divs{1};
  for (long p : ps) {
    const size_t sz = divs.size();
    for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * p);
  }
  return divs;
}

std::mutex g_phi_mutex;
std::map<long, Poly>& phi_cache() {
  static std::map<long, Poly> cache;
  return cache;
}

Poly compute_cyclotomic(long n);

const Poly& cyclotomic_cached(long n) {
  {
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    auto it = phi_cache().find(n);
    if (it != phi_cache().end()) return it->second;
  }
  Poly p = compute_cyclotomic(n);  // may recurse; lock not held
  std::lock_guard<std::mutex> lk(g_phi_mutex);
  return phi_cache().emplace(n, std::move(p)).first->second;
}

// Phi_u for squarefree odd u: divide x^u - 1 by Phi_d for all proper d | u.
Poly cyclotomic_squarefree_odd(long u) {
  Poly p(u + 1, 0);
  p[0] = -1;
  p[u] = 1;
  for (long d : subset_products(prime_factors(u)))
    if (d != u) p = exact_div_monic(std::move(p), cyclotomic_cached(d));
  return p;
}

Poly compute_cyclotomic(long n) {
  if (n == 1) return {-1, 1};
  if (n == 2) return {1, 1};
  long a = 0, m = n;
  while (m % 2 == 0) {
    m /= 2;
    ++a;
  }
  if (m == 1) {  // n = 2^a: Phi_n = x^(2^(a-1)) + 1
    Poly p(n / 2 + 1, 0);
    p[0] = 1;
    p[n / 2] = 1;
    return p;
  }
  long rad = 1;
  for (long q : prime_factors(m)) rad *= q;
  Poly base = cyclotomic_squarefree_odd(rad);
  long s;
  if (a == 0) {
    s = m / rad;  // Phi_n(x) = Phi_rad(x^(n/rad))
  } else {
    base = negate_argument(base);  // Phi_{2u}(x) = Phi_u(-x), u odd >= 3
    s = n / (2 * rad);
  }
  return s == 1 ? base : substitute_power(base, s);
}

// Per-conductor reduction context: Phi_{2m} plus the reduced forms of the
// monomials x^e for phi(2m) <= e < m (exponents above m are folded first via
// z^m = -1), so canonicalization is table lookups instead of long division.
struct FieldCtx {
  long m = 1;
  long deg = 1;  // phi(2m)
  const Poly* phi = nullptr;
  std::vector<std::vector<mpz_class>> tail;  // tail[i] = x^(deg+i) mod Phi
};

std::mutex g_field_mutex;

std::shared_ptr<const FieldCtx> field_for(long m) {
  static std::list<std::pair<long, std::shared_ptr<const FieldCtx>>> lru;
  constexpr size_t kMaxCached = 4;
  {
    std::lock_guard<std::mutex> lk(g_field_mutex);
    for (auto it = lru.begin(); it != lru.end(); ++it)
      if (it->first == m) {
        lru.splice(lru.begin(), lru, it);
        return lru.front().second;
      }
  }
  auto ctx = std::make_shared<FieldCtx>();
  ctx->m = m;
  ctx->deg = euler_phi(2 * m);
  ctx->phi = &cyclotomic_cached(2 * m);
  const Poly& phi = *ctx->phi;
  const long deg = ctx->deg;
  if (m > deg) {
    ctx->tail.reserve(m - deg);
    std::vector<mpz_class> row(deg);
    for (long j = 0; j < deg; ++j) row[j] = -phi[j];
    ctx->tail.push_back(row);
    for (long e = deg + 1; e < m; ++e) {
      const auto& prev = ctx->tail.back();
      std::vector<mpz_class> next(deg);
      const mpz_class t = prev[deg - 1];
      for (long j = deg - 1; j >= 1; --j) next[j] = prev[j - 1];
      next[0] = 0;
      if (t != 0)
        for (long j = 0; j < deg; ++j) next[j] -= t * phi[j];
      ctx->tail.push_back(std::move(next));
    }
  }
  std::lock_guard<std::mutex> lk(g_field_mutex);
  lru.emplace_front(m, ctx);
  while (lru.size() > kMaxCached) lru.pop_back();
  return ctx;
}

}  // namespace

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r -= r / p;
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
  if (n < 1) throw std::domain_error("cyclotomic_polynomial: n must be >= 1");
  return cyclotomic_cached(n);
}

CycloReal::CycloReal() : m_(1), c_(1, mpq_class(0)) {}

CycloReal::CycloReal(long m, std::vector<mpq_class> coeffs)
    : m_(m), c_(std::move(coeffs)) {}

CycloReal CycloReal::from_terms(
    long m, const std::vector<std::pair<long, mpq_class>>& terms) {
  auto ctx = field_for(m);
  const long n2 = 2 * m;
  std::vector<mpq_class> acc(m, mpq_class(0));
  for (const auto& [e, coef] : terms) {
    long em = ((e % n2) + n2) % n2;
    if (em >= m)
      acc[em - m] -= coef;  // z^m = -1
    else
      acc[em] += coef;
  }
  for (long e = m - 1; e >= ctx->deg; --e) {
    if (acc[e] == 0) continue;
    const auto& row = ctx->tail[e - ctx->deg];
    for (long j = 0; j < ctx->deg; ++j) acc[j] += acc[e] * row[j];
    acc[e] = 0;
  }
  acc.resize(ctx->deg);
  return CycloReal(m, std::move(acc));
}

CycloReal CycloReal::rational(const mpq_class& q) {
  return CycloReal(1, std::vector<mpq_class>{q});
}

CycloReal CycloReal::make_cos(long r, long m) {
  if (m < 2 || r < 1 || r > m - 1)
    throw std::domain_error("make_cos: need 1 <= r <= m-1");
  // 2cos(r*pi/m) = z^r + z^(-r) = z^r - z^(m-r)
  return from_terms(m, {{r, mpq_class(1)}, {m - r, mpq_class(-1)}});
}

CycloReal CycloReal::lift(long m2) const {
  if (m2 < 1 || m2 % m_ != 0)
    throw std::domain_error("lift: target conductor must be a multiple");
  if (m2 == m_) return *this;
  const long f = m2 / m_;
  std::vector<std::pair<long, mpq_class>> terms;
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) terms.emplace_back(static_cast<long>(j) * f, c_[j]);
  return from_terms(m2, terms);
}

CycloReal CycloReal::conjugate() const {
  std::vector<std::pair<long, mpq_class>> terms;
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) terms.emplace_back(-static_cast<long>(j), c_[j]);
  return from_terms(m_, terms);
}

bool CycloReal::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const mpq_class& q) { return q == 0; });
}

std::optional<mpq_class> CycloReal::is_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return std::nullopt;
  return c_[0];
}

double CycloReal::float_value() const {
  const double step = M_PI / static_cast<double>(m_);
  double v = 0;
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) v += c_[j].get_d() * std::cos(step * static_cast<double>(j));
  return v;
}

bool CycloReal::operator==(const CycloReal& other) const {
  if (m_ == other.m_) return c_ == other.c_;
  const long m = std::lcm(m_, other.m_);
  return lift(m).c_ == other.lift(m).c_;
}

CycloReal add(const CycloReal& x, const CycloReal& y) {
  if (x.m_ != y.m_) {
    const long m = std::lcm(x.m_, y.m_);
    return add(x.lift(m), y.lift(m));
  }
  std::vector<mpq_class> c = x.c_;
  for (size_t j = 0; j < c.size(); ++j) c[j] += y.c_[j];
  return CycloReal(x.m_, std::move(c));
}

CycloReal neg(const CycloReal& x) {
  std::vector<mpq_class> c = x.c_;
  for (auto& q : c) q = -q;
  return CycloReal(x.m_, std::move(c));
}

CycloReal sub(const CycloReal& x, const CycloReal& y) { return add(x, neg(y)); }

CycloReal scale(const CycloReal& x, const mpq_class& q) {
  std::vector<mpq_class> c = x.c_;
  for (auto& v : c) v *= q;
  return CycloReal(x.m_, std::move(c));
}

bool verify_alternating_identity(IdentityKind kind, long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::domain_error("verify_alternating_identity: p must be an odd prime");
  CycloReal acc = CycloReal::rational(1);
  for (long j = 1; j <= (p - 1) / 2; ++j) {
    const CycloReal term = kind == IdentityKind::Prime
                               ? CycloReal::make_cos(j, p)
                               : CycloReal::make_cos(2 * j, 2 * p);
    acc = (j % 2 == 1) ? sub(acc, term) : add(acc, term);
  }
  return acc.is_zero();
}

}  // namespace pgst
