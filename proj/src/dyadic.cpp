#include "gapcert/dyadic.hpp"

#include <stdexcept>

namespace gapcert {

Dyadic::Dyadic(mpz_class mantissa, std::int64_t exponent)
    : mant_(std::move(mantissa)), exp_(exponent) {
  if (mant_ == 0) {
    exp_ = 0;
    return;
  }
  mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
    exp_ += static_cast<std::int64_t>(tz);
  }
}

namespace {

mpz_class shl(const mpz_class& x, std::uint64_t k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

std::int64_t bitlen(const mpz_class& x) {
  return x == 0 ? 0 : static_cast<std::int64_t>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

// Scale q by 2^s and round with the given GMP division routine.
template <typename DivFn>
Dyadic round_to(const mpq_class& q, unsigned bits, DivFn div) {
  if (q == 0) return Dyadic();
  if (Dyadic::is_dyadic(q)) {
    auto k = static_cast<std::int64_t>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2)) - 1;
    return Dyadic(q.get_num(), -k);
  }
  std::int64_t s = static_cast<std::int64_t>(bits) + bitlen(q.get_den()) - bitlen(q.get_num()) + 1;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (s >= 0)
    num = shl(num, static_cast<std::uint64_t>(s));
  else
    den = shl(den, static_cast<std::uint64_t>(-s));
  mpz_class m;
  div(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(m, -s);
}

}  // namespace

Dyadic Dyadic::floor_of(const mpq_class& q, unsigned bits) { return round_to(q, bits, mpz_fdiv_q); }

Dyadic Dyadic::ceil_of(const mpq_class& q, unsigned bits) { return round_to(q, bits, mpz_cdiv_q); }

Dyadic Dyadic::pow2_floor(const mpq_class& q) {
  if (q <= 0) throw std::invalid_argument("pow2_floor: non-positive argument");
  // 2^(bn-bd-1) < q < 2^(bn-bd+1)
  std::int64_t e = bitlen(q.get_num()) - bitlen(q.get_den());
  while (compare(pow2(e), q) > 0) --e;
  while (compare(pow2(e + 1), q) <= 0) ++e;
  return pow2(e);
}

bool Dyadic::is_dyadic(const mpq_class& q) {
  const mpz_class& d = q.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

mpq_class Dyadic::to_mpq() const {
  mpz_class num, den;
  as_fraction(num, den);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

void Dyadic::as_fraction(mpz_class& num, mpz_class& den) const {
  if (exp_ >= 0) {
    num = shl(mant_, static_cast<std::uint64_t>(exp_));
    den = 1;
  } else {
    num = mant_;
    den = shl(mpz_class(1), static_cast<std::uint64_t>(-exp_));
  }
}

std::string Dyadic::str() const { return mant_.get_str() + "*2^" + std::to_string(exp_); }

Dyadic Dyadic::parse(std::string_view text) {
  auto star = text.find("*2^");
  if (star == std::string_view::npos) throw std::invalid_argument("dyadic: expected m*2^e, got '" + std::string(text) + "'");
  mpz_class m;
  if (m.set_str(std::string(text.substr(0, star)), 10) != 0)
    throw std::invalid_argument("dyadic: bad mantissa in '" + std::string(text) + "'");
  std::int64_t e = 0;
  try {
    std::size_t used = 0;
    std::string tail(text.substr(star + 3));
    e = std::stoll(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::invalid_argument("dyadic: bad exponent in '" + std::string(text) + "'");
  }
  return Dyadic(m, e);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t e = std::min(a.exp_, b.exp_);
  mpz_class x = shl(a.mant_, static_cast<std::uint64_t>(a.exp_ - e));
  mpz_class y = shl(b.mant_, static_cast<std::uint64_t>(b.exp_ - e));
  return Dyadic(x + y, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int c = sgn((a - b).mant_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int compare(const Dyadic& a, const mpq_class& q) { return cmp(a.to_mpq(), q); }

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace gapcert
