#include "gapcert/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gapcert {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

mpz_class IntPolynomial::height() const {
  mpz_class h = 0;
  for (const auto& c : c_)
    if (abs(c) > h) h = abs(c);
  return h;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::compose_neg() const {
  IntPolynomial r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(k, mpz_class(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(v));
}

std::size_t IntPolynomial::t_valuation() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k == c_.size() ? 0 : k;
}

IntPolynomial IntPolynomial::strip_t_power() const {
  std::size_t k = t_valuation();
  return IntPolynomial(std::vector<mpz_class>(c_.begin() + static_cast<long>(k), c_.end()));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
  return s;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const mpz_class& s, const IntPolynomial& a) {
  std::vector<mpz_class> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.c_[i];
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_text() const {
  std::string s = std::to_string(degree());
  for (const auto& c : c_) {
    s += ' ';
    s += c.get_str();
  }
  return s;
}

IntPolynomial IntPolynomial::from_text(std::string_view line) {
  std::istringstream in{std::string(line)};
  long deg = 0;
  if (!(in >> deg) || deg < -1) throw std::invalid_argument("polynomial text: bad degree");
  std::vector<mpz_class> v;
  std::string tok;
  while (in >> tok) {
    mpz_class c;
    if (c.set_str(tok, 10) != 0) throw std::invalid_argument("polynomial text: bad coefficient '" + tok + "'");
    v.push_back(c);
  }
  // "0 0" is accepted as a spelling of the zero polynomial
  bool zero_spelled_as_constant = deg == 0 && v.size() == 1 && v[0] == 0;
  if (static_cast<long>(v.size()) != deg + 1)
    throw std::invalid_argument("polynomial text: expected " + std::to_string(deg + 1) + " coefficients");
  IntPolynomial p(std::move(v));
  if (p.degree() != deg && !zero_spelled_as_constant)
    throw std::invalid_argument("polynomial text: leading coefficient is zero");
  return p;
}

std::string IntPolynomial::pretty(char var) const {
  if (is_zero()) return "0";
  std::string s;
  for (long i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) s += mag.get_str();
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

int eval_sign_at_rational(const IntPolynomial& p, const mpz_class& num, const mpz_class& den) {
  if (den <= 0) throw std::invalid_argument("eval_sign_at_rational: denominator must be positive");
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  mpz_class s = c.back();
  mpz_class dpow = 1;
  for (long i = p.degree() - 1; i >= 0; --i) {
    dpow *= den;
    s = s * num + c[static_cast<std::size_t>(i)] * dpow;
  }
  return sgn(s);
}

int eval_sign_at(const IntPolynomial& p, const Dyadic& x) {
  mpz_class num, den;
  x.as_fraction(num, den);
  return eval_sign_at_rational(p, num, den);
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const mpz_class& lb = b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  long delta = a.degree() - b.degree() + 1;
  long steps = 0;
  while (!r.empty() && r.size() - 1 >= db) {
    std::size_t dr = r.size() - 1;
    mpz_class lr = r.back();
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[dr - db + j] -= lr * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    ++steps;
  }
  // account for skipped steps so the multiplier is exactly lb^delta
  mpz_class fix = ipow(lb, static_cast<unsigned long>(delta - steps));
  for (auto& x : r) x *= fix;
  return IntPolynomial(std::move(r));
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const mpz_class& lb = b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[k] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * bc[j];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial rational_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("rational_gcd: both arguments are zero");
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPolynomial g = rational_gcd(p, p.derivative());
  auto q = divide_exact(p.primitive_part(), g);
  if (!q) throw std::logic_error("square_free_part: gcd does not divide the polynomial");
  return q->primitive_part();
}

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

IntPolynomial mignotte_poly(unsigned d, const mpz_class& a) {
  if (d < 3) throw std::invalid_argument("mignotte_poly: degree must be at least 3");
  if (a < 1) throw std::invalid_argument("mignotte_poly: a must be positive");
  std::vector<mpz_class> v(d + 1);
  v[d] = 1;
  v[2] = -2 * a * a;
  v[1] = 4 * a;
  v[0] = -2;
  return IntPolynomial(std::move(v));
}

MignotteBound mignotte_gap_bound(unsigned d, const mpz_class& a) {
  if (d % 2 != 0) throw std::invalid_argument("mignotte_gap_bound: d must be even");
  if (a < 1) throw std::invalid_argument("mignotte_gap_bound: a must be positive");
  MignotteBound b;
  b.exact = mpq_class(mpz_class(1), ipow(a, (d + 2) / 2));
  b.exact.canonicalize();
  b.dyadic_is_exact = Dyadic::is_dyadic(b.exact);
  b.dyadic_upper = Dyadic::ceil_of(b.exact, 64);
  return b;
}

bool eisenstein_irreducible(const IntPolynomial& p, const mpz_class& prime) {
  if (p.degree() < 1) return false;
  const auto& c = p.coeffs();
  if (mpz_divisible_p(p.leading().get_mpz_t(), prime.get_mpz_t())) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!mpz_divisible_p(c[i].get_mpz_t(), prime.get_mpz_t())) return false;
  mpz_class p2 = prime * prime;
  return !mpz_divisible_p(c[0].get_mpz_t(), p2.get_mpz_t());
}

}  // namespace gapcert
