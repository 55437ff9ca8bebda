#include "enriques/integer.hpp"

#include "enriques/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace enriques {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::Degenerate: return "Degenerate";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::DependentVectors: return "DependentVectors";
    case Errc::NotIsotropic: return "NotIsotropic";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotEven: return "NotEven";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NonWitt: return "NonWitt";
    case Errc::BadLength: return "BadLength";
    case Errc::UnknownTag: return "UnknownTag";
    case Errc::NotDefinite: return "NotDefinite";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotFound: return "NotFound";
    case Errc::BadShape: return "BadShape";
    case Errc::BadParams: return "BadParams";
    case Errc::GramMismatch: return "GramMismatch";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::DegenerateComplement: return "DegenerateComplement";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::Unsupported: return "Unsupported";
    case Errc::BadPrime: return "BadPrime";
    case Errc::NoUnitVector: return "NoUnitVector";
    case Errc::StarViolated: return "StarViolated";
    case Errc::ExistenceFails: return "ExistenceFails";
    case Errc::EvenIndex: return "EvenIndex";
    case Errc::NotSublattice: return "NotSublattice";
    case Errc::NotFundamental: return "NotFundamental";
    case Errc::NotImaginary: return "NotImaginary";
    case Errc::BadCongruence: return "BadCongruence";
    case Errc::NotEvenGram: return "NotEvenGram";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::NotTwoGroup: return "NotTwoGroup";
    case Errc::DatumInvalid: return "DatumInvalid";
    case Errc::Overflow: return "Overflow";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Integer

void Integer::assign_big(const Big& v) {
  if (v >= kMin && v <= kMax) {
    rep_ = static_cast<std::int64_t>(v);
  } else {
    rep_ = v;
  }
}

Integer Integer::from_string(const std::string& text) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos == text.size()) return Integer(v);
  } catch (const std::out_of_range&) {
    // falls through to arbitrary precision
  } catch (const std::invalid_argument&) {
    fail(Errc::Parse, "not an integer: '" + text + "'");
  }
  try {
    return Integer(Big(text));
  } catch (const std::exception&) {
    fail(Errc::Parse, "not an integer: '" + text + "'");
  }
}

std::int64_t Integer::to_int64() const {
  if (!is_small()) fail(Errc::Overflow, "value " + to_string() + " exceeds int64");
  return small();
}

double Integer::to_double() const {
  return is_small() ? static_cast<double>(small()) : std::get<Big>(rep_).convert_to<double>();
}

std::string Integer::to_string() const {
  return is_small() ? std::to_string(small()) : std::get<Big>(rep_).str();
}

int Integer::sign() const noexcept {
  if (is_small()) return (small() > 0) - (small() < 0);
  return std::get<Big>(rep_).sign();
}

bool Integer::is_odd() const noexcept {
  if (is_small()) return (small() & 1) != 0;
  return boost::multiprecision::bit_test(boost::multiprecision::abs(std::get<Big>(rep_)), 0);
}

Integer Integer::operator-() const {
  if (is_small() && small() != kMin) return Integer(-small());
  return Integer(Big(-big()));
}

Integer operator+(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    std::int64_t r;
    if (!__builtin_add_overflow(a.small(), b.small(), &r)) return Integer(r);
  }
  return Integer(Integer::Big(a.big() + b.big()));
}

Integer operator-(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    std::int64_t r;
    if (!__builtin_sub_overflow(a.small(), b.small(), &r)) return Integer(r);
  }
  return Integer(Integer::Big(a.big() - b.big()));
}

Integer operator*(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    std::int64_t r;
    if (!__builtin_mul_overflow(a.small(), b.small(), &r)) return Integer(r);
  }
  return Integer(Integer::Big(a.big() * b.big()));
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer division by zero");
  if (a.is_small() && b.is_small() && !(a.small() == kMin && b.small() == -1)) {
    return Integer(a.small() / b.small());
  }
  return Integer(Integer::Big(a.big() / b.big()));
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer modulo by zero");
  if (a.is_small() && b.is_small()) {
    if (b.small() == -1) return Integer(0);
    return Integer(a.small() % b.small());
  }
  return Integer(Integer::Big(a.big() % b.big()));
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  // Representations are canonical: a value that fits is always small.
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) return a.small() == b.small();
  return std::get<Integer::Big>(a.rep_) == std::get<Integer::Big>(b.rep_);
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (a.is_small() && b.is_small()) return a.small() <=> b.small();
  const int c = a.big().compare(b.big());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small() != kMin && b.small() != kMin) {
    std::int64_t x = a.small() < 0 ? -a.small() : a.small();
    std::int64_t y = b.small() < 0 ? -b.small() : b.small();
    while (y != 0) {
      const std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  return Integer(Integer::Big(boost::multiprecision::gcd(a.big(), b.big())));
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(a / gcd(a, b) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  const Integer r = a - q * b;
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) q -= Integer(1);
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r.sign() < 0) r += abs(m);
  return r;
}

Integer isqrt(const Integer& v) {
  if (v.sign() < 0) throw std::domain_error("isqrt of negative value");
  return Integer(Integer::Big(boost::multiprecision::sqrt(v.big())));
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer result(1);
  Integer b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

// --------------------------------------------------------------- Rational

Rational::Rational(const Integer& n, const Integer& d) {
  if (d.is_zero()) throw std::domain_error("Rational with zero denominator");
  const Integer g = gcd(n, d);
  num_ = n / g;
  den_ = d / g;
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_string() const {
  return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

Rational mod_rational(const Rational& v, const Rational& m) {
  const Rational q = v / m;
  return v - m * Rational(q.floor());
}

}  // namespace enriques
