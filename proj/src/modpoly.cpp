#include "gapcert/modpoly.hpp"

#include <stdexcept>

namespace gapcert {

ModPolynomial::ModPolynomial(std::uint32_t modulus, std::vector<std::uint32_t> coeffs)
    : q_(modulus), c_(std::move(coeffs)) {
  if (q_ < 2) throw std::invalid_argument("ModPolynomial: modulus must be at least 2");
  for (auto c : c_)
    if (c >= q_) throw std::invalid_argument("ModPolynomial: coefficient out of range");
  modarith::trim(c_);
}

ModPolynomial reduce_mod(const IntPolynomial& p, std::uint32_t q) {
  if (q < 2 || q >= (1u << 31)) throw std::invalid_argument("reduce_mod: modulus out of range");
  std::vector<std::uint32_t> v;
  v.reserve(p.coeffs().size());
  mpz_class r;
  for (const auto& c : p.coeffs()) {
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), q);
    v.push_back(static_cast<std::uint32_t>(r.get_ui()));
  }
  return ModPolynomial(q, std::move(v));
}

namespace modarith {

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs sub(const Coeffs& a, const Coeffs& b, std::uint32_t q) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = static_cast<std::uint32_t>((x + q - y) % q);
  }
  trim(r);
  return r;
}

Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % q;
  Coeffs r(acc.begin(), acc.end());
  trim(r);
  return r;
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t q) {
  // Fermat; q is prime
  std::uint64_t result = 1, base = a % q;
  std::uint64_t e = q - 2;
  while (e) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Coeffs rem(const Coeffs& a, const Coeffs& b, std::uint32_t q) {
  if (b.empty()) throw std::invalid_argument("modarith::rem: zero divisor");
  Coeffs r = a;
  trim(r);
  const std::uint64_t inv = inverse(b.back(), q);
  const std::size_t db = b.size() - 1;
  while (!r.empty() && r.size() - 1 >= db) {
    std::size_t shift = r.size() - 1 - db;
    std::uint64_t f = r.back() * inv % q;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] = static_cast<std::uint32_t>((r[shift + j] + q - f * b[j] % q) % q);
    trim(r);
  }
  return r;
}

Coeffs gcd(Coeffs a, Coeffs b, std::uint32_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = inverse(a.back(), q);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * inv % q);
  }
  return a;
}

}  // namespace modarith

namespace {

using modarith::Coeffs;

// base^e mod f
Coeffs pow_mod(Coeffs base, std::uint64_t e, const Coeffs& f, std::uint32_t q) {
  Coeffs result{1};
  base = modarith::rem(base, f, q);
  while (e) {
    if (e & 1) result = modarith::rem(modarith::mul(result, base, q), f, q);
    base = modarith::rem(modarith::mul(base, base, q), f, q);
    e >>= 1;
  }
  return result;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool irreducible_mod_p(const ModPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("irreducible_mod_p: polynomial must be monic");
  if (p.degree() < 1) throw std::invalid_argument("irreducible_mod_p: degree must be at least 1");
  const std::uint32_t q = p.modulus();
  const Coeffs& f = p.coeffs();
  const long d = p.degree();
  if (d == 1) return true;

  // frob[k] = t^(q^k) mod f
  std::vector<Coeffs> frob{modarith::rem(Coeffs{0, 1}, f, q)};
  for (long k = 1; k <= d; ++k) frob.push_back(pow_mod(frob.back(), q, f, q));

  const Coeffs t = modarith::rem(Coeffs{0, 1}, f, q);
  if (!modarith::sub(frob[static_cast<std::size_t>(d)], t, q).empty()) return false;
  for (long r : prime_divisors(d)) {
    Coeffs diff = modarith::sub(frob[static_cast<std::size_t>(d / r)], t, q);
    if (modarith::gcd(f, diff, q).size() != 1) return false;
  }
  return true;
}

}  // namespace gapcert
