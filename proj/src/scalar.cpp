#include "hvir/scalar.hpp"

#include <sstream>

namespace hvir {

FieldScalar::FieldScalar(mpq_class a, mpq_class b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 1) throw PreconditionError("radicand must be a positive integer");
    a_.canonicalize();
    b_.canonicalize();
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

bool FieldScalar::is_integer() const {
    return b_ == 0 && a_.get_den() == 1;
}

mpz_class FieldScalar::integer_value() const {
    if (!is_integer()) throw PreconditionError("scalar is not an integer: " + str());
    return a_.get_num();
}

int FieldScalar::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against d*b^2; the larger magnitude wins.
    const mpq_class lhs = a_ * a_;
    const mpq_class rhs = mpq_class(d_) * b_ * b_;
    const int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // impossible for squarefree d > 1, exact for d = 1
    return c > 0 ? sa : sb;
}

long FieldScalar::common_radicand(const FieldScalar& x, const FieldScalar& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    throw ContextError("mixed radicands " + std::to_string(x.d_) + " and " + std::to_string(y.d_));
}

FieldScalar FieldScalar::operator-() const {
    return FieldScalar(-a_, -b_, d_);
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    const long d = common_radicand(*this, o);
    return FieldScalar(a_ + o.a_, b_ + o.b_, d);
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    const long d = common_radicand(*this, o);
    return FieldScalar(a_ - o.a_, b_ - o.b_, d);
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    const long d = common_radicand(*this, o);
    return FieldScalar(a_ * o.a_ + mpq_class(d) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d);
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw PreconditionError("division by zero");
    // 1/(a+b√d) = (a-b√d)/(a²-d·b²); the norm is nonzero for squarefree d.
    const mpq_class norm = a_ * a_ - mpq_class(d_) * b_ * b_;
    return FieldScalar(a_ / norm, -b_ / norm, d_);
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
    return *this * o.inverse();
}

namespace {

void print_fraction(std::ostream& os, const mpq_class& q) {
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
}

} // namespace

std::string FieldScalar::str() const {
    std::ostringstream os;
    if (b_ == 0) {
        print_fraction(os, a_);
        return os.str();
    }
    if (a_ != 0) {
        print_fraction(os, a_);
        if (b_ > 0) os << "+";
    }
    if (b_ == -1) {
        os << "-";
    } else if (b_ != 1) {
        print_fraction(os, b_);
    }
    os << "√" << d_;
    return os.str();
}

} // namespace hvir
