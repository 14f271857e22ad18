#include "fano/scalar.hpp"

#include <ostream>

#include "fano/errors.hpp"

namespace fano {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_odd_prime(std::uint64_t p) noexcept {
  if (p < 3 || p % 2 == 0 || p >= (1ULL << 31)) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (!is_odd_prime(p)) {
    throw FieldError("field characteristic must be an odd prime, got " +
                     std::to_string(p));
  }
}

namespace {

// Validation is cached per thread; elimination loops construct many residues.
void check_prime_cached(std::uint32_t p) {
  thread_local std::uint32_t last_ok = 0;
  if (p == last_ok) return;
  require_odd_prime(p);
  last_ok = p;
}

}  // namespace

Scalar::Scalar(const mpq_class& value) : q_(value) { q_.canonicalize(); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw FieldError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::modp(std::int64_t value, std::uint32_t p) {
  check_prime_cached(p);
  Scalar s;
  s.p_ = p;
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  s.r_ = static_cast<std::uint64_t>(r);
  return s;
}

Scalar Scalar::modp(const mpq_class& value, std::uint32_t p) {
  Scalar s(value);
  s.lift_to(p);
  return s;
}

Scalar Scalar::parse(std::string_view text, std::uint32_t p) {
  std::string s(text);
  // Accept the unicode minus sign as well as '-'.
  const std::string minus = "\xE2\x88\x92";
  if (s.rfind(minus, 0) == 0) s = "-" + s.substr(minus.size());
  if (s.empty()) throw ParseError("empty scalar");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar out(mpq_class(n, d));
  if (p != 0) out.lift_to(p);
  return out;
}

const mpq_class& Scalar::rational_value() const {
  if (p_ != 0) throw FieldError("rational_value() on an F_p element");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw FieldError("residue() on a rational element");
  return r_;
}

Scalar Scalar::in_field(std::uint32_t p) const {
  if (p == p_) return *this;
  if (p == 0) throw FieldError("cannot lift an F_p element to the rationals");
  Scalar out = *this;
  out.lift_to(p);
  return out;
}

void Scalar::lift_to(std::uint32_t p) {
  if (p_ == p) return;
  check_prime_cached(p);
  if (p_ != 0) {
    throw FieldError("mixing F_" + std::to_string(p_) + " with F_" + std::to_string(p));
  }
  const std::uint64_t den = reduce(q_.get_den(), p);
  if (den == 0) {
    throw FieldError("denominator of " + q_.get_str() + " vanishes mod " +
                     std::to_string(p));
  }
  r_ = mul_mod(reduce(q_.get_num(), p), pow_mod(den, p - 2, p), p);
  p_ = p;
  q_ = 0;
}

void Scalar::unify(Scalar& other) {
  if (p_ == other.p_) return;
  if (p_ == 0) {
    lift_to(other.p_);
  } else {
    other.lift_to(p_);
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  Scalar out = *this;
  if (p_ == 0) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = pow_mod(r_, p_ - 2, p_);
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (p_ == 0) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = p_ - r_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (p_ == rhs.p_) {
    if (p_ == 0) {
      q_ += rhs.q_;
    } else {
      r_ = (r_ + rhs.r_) % p_;
    }
    return *this;
  }
  Scalar other = rhs;
  unify(other);
  return *this += other;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (p_ == rhs.p_) {
    if (p_ == 0) {
      q_ *= rhs.q_;
    } else {
      r_ = mul_mod(r_, rhs.r_, p_);
    }
    return *this;
  }
  Scalar other = rhs;
  unify(other);
  return *this *= other;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  Scalar x = a;
  Scalar y = b;
  x.unify(y);
  return x == y;
}

std::strong_ordering order(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) {
    Scalar x = a;
    Scalar y = b;
    x.unify(y);
    return order(x, y);
  }
  if (a.p_ != 0) return a.r_ <=> b.r_;
  const int c = cmp(a.q_, b.q_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::uint32_t common_prime(std::uint32_t a, std::uint32_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw FieldError("mixing F_" + std::to_string(a) + " with F_" + std::to_string(b));
}

std::uint32_t common_prime(const Vector& values) {
  std::uint32_t p = 0;
  for (const auto& v : values) p = common_prime(p, v.prime());
  return p;
}

}  // namespace fano
