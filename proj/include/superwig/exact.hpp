#pragma once

#include <gmpxx.h>
#include <Eigen/Core>

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace sw {

// Exact rational in lowest terms, denominator > 0.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Accepts "p", "p/q", "-p/q".
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(v_)); }
    Rational inverse() const;

    // Always "p/q", including "n/1" for integers.
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

Rational pow(const Rational& base, int exponent);

inline Rational abs(const Rational& x) { return x.abs(); }
inline Rational abs2(const Rational& x) { return x * x; }
inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return Rational(0); }

// sign * sqrt(radicand); a negative radicand stands for sign * i * sqrt(|radicand|).
class CoefficientValue {
public:
    CoefficientValue() = default;
    CoefficientValue(int sign, Rational radicand);

    static CoefficientValue zero() { return {}; }
    static CoefficientValue one() { return {1, Rational(1)}; }
    // Value whose square is q, with a chosen sign.
    static CoefficientValue from_square(int sign, const Rational& q) { return {sign, q}; }

    int sign() const { return sign_; }
    const Rational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    CoefficientValue negated() const { return {-sign_, radicand_}; }

    friend bool operator==(const CoefficientValue&, const CoefficientValue&) = default;

private:
    int sign_ = 0;
    Rational radicand_;
};

CoefficientValue mul(const CoefficientValue& a, const CoefficientValue& b);
Rational square(const CoefficientValue& a);
std::ostream& operator<<(std::ostream& os, const CoefficientValue& v);

// Splits a positive integer into s^2 * f with f squarefree.
std::pair<mpz_class, mpz_class> square_part(const mpz_class& n);

// Finite sums of rational multiples of square roots of rationals.
// Terms are kept as coefficient * sqrt(f) with f a squarefree integer (negative f is i*sqrt(|f|)),
// so a sum is zero exactly when every grouped coefficient is zero.
class RadicalSum {
public:
    RadicalSum() = default;

    // Adds c * sqrt(q).
    void add(const Rational& c, const Rational& q);
    // Adds the product of two coefficient values.
    void add_product(const CoefficientValue& a, const CoefficientValue& b);

    bool is_zero() const;
    bool is_rational(const Rational& value) const;
    const std::map<mpz_class, Rational>& terms() const { return terms_; }
    std::string str() const;

private:
    std::map<mpz_class, Rational> terms_;
};

} // namespace sw

namespace Eigen {

template <>
struct NumTraits<sw::Rational> : GenericNumTraits<sw::Rational> {
    typedef sw::Rational Real;
    typedef sw::Rational NonInteger;
    typedef sw::Rational Literal;
    typedef sw::Rational Nested;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace sw {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

} // namespace sw
