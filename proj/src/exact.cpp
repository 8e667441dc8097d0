#include "superwig/exact.hpp"
#include "superwig/errors.hpp"

#include <sstream>

namespace sw {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw DomainError("not a rational: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, int exponent) {
    Rational b = exponent < 0 ? base.inverse() : base;
    Rational r(1);
    for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) r *= b;
    return r;
}

CoefficientValue::CoefficientValue(int sign, Rational radicand)
    : sign_(sign > 0 ? 1 : sign < 0 ? -1 : 0), radicand_(std::move(radicand)) {
    if (sign_ == 0 || radicand_.is_zero()) {
        sign_ = 0;
        radicand_ = Rational(0);
    }
}

CoefficientValue mul(const CoefficientValue& a, const CoefficientValue& b) {
    return {a.sign() * b.sign(), a.radicand() * b.radicand()};
}

Rational square(const CoefficientValue& a) {
    return a.is_zero() ? Rational(0) : a.radicand();
}

std::ostream& operator<<(std::ostream& os, const CoefficientValue& v) {
    return os << "(" << v.sign() << ", " << v.radicand() << ")";
}

std::pair<mpz_class, mpz_class> square_part(const mpz_class& n) {
    mpz_class rest = n, s = 1, f = 1;
    // Once primes up to the cube root are removed, rest is 1, p, p*q or p^2.
    for (mpz_class p = 2; p * p * p <= rest; ++p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) s *= p;
        if (e % 2) f *= p;
    }
    if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
        return {s * r, f};
    }
    return {s, f * rest};
}

void RadicalSum::add(const Rational& c, const Rational& q) {
    if (c.is_zero() || q.is_zero()) return;
    // sqrt(a/b) = sqrt(a*b)/b
    mpz_class a = q.num(), b = q.den();
    mpz_class ab = a * b;
    int sg = sgn(ab);
    mpz_class mag = ab * sg;
    auto [s, f] = square_part(mag);
    mpz_class key = f * sg;
    Rational coeff = c * Rational(mpq_class(s, b));
    auto& slot = terms_[key];
    slot += coeff;
    if (slot.is_zero()) terms_.erase(key);
}

void RadicalSum::add_product(const CoefficientValue& a, const CoefficientValue& b) {
    if (a.is_zero() || b.is_zero()) return;
    int s = a.sign() * b.sign();
    if (a.radicand().sign() < 0 && b.radicand().sign() < 0) s = -s;
    add(Rational(s), a.radicand() * b.radicand());
}

bool RadicalSum::is_zero() const { return terms_.empty(); }

bool RadicalSum::is_rational(const Rational& value) const {
    if (value.is_zero()) return terms_.empty();
    if (terms_.size() != 1) return false;
    auto it = terms_.find(mpz_class(1));
    return it != terms_.end() && it->second == value;
}

std::string RadicalSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [f, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (f != 1) os << "*sqrt(" << f.get_str() << ")";
    }
    return os.str();
}

} // namespace sw
