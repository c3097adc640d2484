#ifndef HVIR_SCALAR_HPP
#define HVIR_SCALAR_HPP

#include <gmpxx.h>

#include <string>

#include "hvir/errors.hpp"

namespace hvir {

/// Exact element a + b*sqrt(d) of a real quadratic field (d = 1 means pure
/// rational; then b is folded into a). Fractions are kept reduced with
/// positive denominator by mpq_class; equality is componentwise.
class FieldScalar {
  public:
    FieldScalar() : a_(0), b_(0), d_(1) {}
    FieldScalar(long n) : a_(n), b_(0), d_(1) {}          // NOLINT(google-explicit-constructor)
    FieldScalar(mpq_class a) : a_(std::move(a)), b_(0), d_(1) { a_.canonicalize(); }
    FieldScalar(mpq_class a, mpq_class b, long d);

    static FieldScalar sqrt_of(long d) { return FieldScalar(0, 1, d); }
    static FieldScalar fraction(long num, long den) { return FieldScalar(mpq_class(num, den)); }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& radical_part() const { return b_; }
    long radicand() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    /// True when both the rational and the radical component are nonzero
    /// (the printed form then needs parentheses as a coefficient).
    bool is_binomial() const { return a_ != 0 && b_ != 0; }
    /// True when the value is an integer (no radical part, denominator 1).
    bool is_integer() const;
    mpz_class integer_value() const;  // precondition: is_integer()

    /// Exact sign of the real number a + b*sqrt(d): -1, 0 or +1.
    int sign() const;

    FieldScalar operator-() const;
    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const;
    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    FieldScalar inverse() const;

    bool operator==(const FieldScalar& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    /// Order as real numbers (real embedding with sqrt(d) > 0).
    bool operator<(const FieldScalar& o) const { return (*this - o).sign() < 0; }
    bool operator>(const FieldScalar& o) const { return (*this - o).sign() > 0; }

    /// Canonical text form, e.g. "3/2+1/2√2", "-√2", "0", "5".
    std::string str() const;

  private:
    // Resolve the radicand two operands must agree on.
    static long common_radicand(const FieldScalar& x, const FieldScalar& y);

    mpq_class a_, b_;
    long d_;
};

inline FieldScalar operator*(long n, const FieldScalar& s) { return FieldScalar(n) * s; }

} // namespace hvir

#endif
