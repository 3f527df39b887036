#include "teich/cyclo.hpp"

#include "teich/errors.hpp"
#include "teich/primes.hpp"

#include <algorithm>

namespace teich {

namespace {

using Poly = std::vector<Integer>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Exact division by a monic polynomial; the remainder must vanish.
Poly divide_exact(Poly num, const Poly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {};
  Poly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const Integer c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  trim(num);
  if (!num.empty()) throw DomainError("cyclotomic division left a remainder");
  return quot;
}

// Reduces f modulo the monic modulus in place.
void reduce_mod(Poly& f, const Poly& modulus) {
  const std::size_t dm = modulus.size() - 1;
  for (std::size_t k = f.size(); k-- > dm;) {
    const Integer c = f[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dm; ++i) f[k - dm + i] -= c * modulus[i];
  }
  f.resize(dm, 0);
}

const Poly& phi_2ell(long ell) {
  // Small cache keyed by ell; populated once per process for each ell used.
  static const auto table = [] {
    std::map<long, Poly> t;
    for (long l : primes_in(3, 199)) t.emplace(l, cyclotomic_polynomial(2 * l));
    return t;
  }();
  const auto it = table.find(ell);
  if (it == table.end()) throw DomainError("cyclotomic ring supports odd primes ell < 200");
  return it->second;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long n) {
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  Poly xn(static_cast<std::size_t>(n) + 1, 0);
  xn[0] = -1;
  xn[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) xn = divide_exact(xn, cyclotomic_polynomial(d));
  }
  return xn;
}

CycloElt::CycloElt(long ell) : ell_(ell), c_(static_cast<std::size_t>(ell - 1), 0) {
  require_odd_prime(ell);
}

CycloElt CycloElt::constant(long ell, long c) {
  CycloElt z(ell);
  z.c_[0] = c;
  return z;
}

CycloElt CycloElt::zeta2l_power(long ell, long k) {
  CycloElt z(ell);
  const long order = 2 * ell;
  long e = ((k % order) + order) % order;
  long sign = 1;
  if (e >= ell) {  // zeta_{2 ell}^ell = -1
    e -= ell;
    sign = -1;
  }
  Poly f(static_cast<std::size_t>(e) + 1, 0);
  f[static_cast<std::size_t>(e)] = sign;
  if (f.size() > z.c_.size()) reduce_mod(f, phi_2ell(ell));
  f.resize(z.c_.size(), 0);
  z.c_ = std::move(f);
  return z;
}

bool CycloElt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x == 0; });
}

CycloElt& CycloElt::operator+=(const CycloElt& o) {
  if (o.ell_ != ell_) throw ConfigError("cyclotomic elements over different ell");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElt& CycloElt::operator-=(const CycloElt& o) {
  if (o.ell_ != ell_) throw ConfigError("cyclotomic elements over different ell");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElt CycloElt::operator-() const {
  CycloElt out(ell_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

CycloElt operator*(const CycloElt& a, const CycloElt& b) {
  if (a.ell_ != b.ell_) throw ConfigError("cyclotomic elements over different ell");
  Poly prod(a.c_.size() + b.c_.size(), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  reduce_mod(prod, phi_2ell(a.ell_));
  CycloElt out(a.ell_);
  out.c_ = std::move(prod);
  return out;
}

std::optional<long> QLaurent::lowest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

CycloElt QLaurent::coeff(long e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? CycloElt(ell_) : it->second;
}

QLaurent& QLaurent::add_term(long s_exponent, const CycloElt& c) {
  if (c.ell() != ell_) throw ConfigError("Laurent coefficient over a different ell");
  auto [it, inserted] = terms_.try_emplace(s_exponent, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
  return *this;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QLaurent QLaurent::scaled(int sign, long shift, long zeta_exponent) const {
  const CycloElt factor = CycloElt::zeta_power(ell_, zeta_exponent);
  QLaurent out(ell_);
  for (const auto& [e, c] : terms_) {
    CycloElt v = c * factor;
    if (sign < 0) v = -v;
    out.add_term(e + shift, v);
  }
  return out;
}

QLaurent QLaurent::truncated_below(long bound) const {
  QLaurent out(ell_);
  for (const auto& [e, c] : terms_) {
    if (e < bound) out.terms_.emplace(e, c);
  }
  return out;
}

}  // namespace teich
