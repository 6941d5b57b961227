#include "hlam/quad.hpp"

#include <sstream>

namespace hlam {

QuadScalar::QuadScalar(CycloScalar a, CycloScalar b, CycloScalar disc)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(disc)) {
    if (!a_.same_ring(b_) || !a_.same_ring(d_)) throw RingMismatch("quadratic components in different base fields");
}

void QuadScalar::check(const QuadScalar& o) const {
    if (!same_ring(o)) throw RingMismatch("quadratic extensions have different discriminants");
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
    check(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
    check(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
    check(o);
    CycloScalar na = a_ * o.a_ + b_ * o.b_ * d_;
    CycloScalar nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

bool operator==(const QuadScalar& x, const QuadScalar& y) {
    if (!x.same_ring(y)) throw RingMismatch("quadratic extensions have different discriminants");
    return x.a_ == y.a_ && x.b_ == y.b_;
}

QuadScalar QuadScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("quadratic scalar is zero");
    CycloScalar n = norm();
    if (n.is_zero()) throw ZeroDivisor("norm vanishes: discriminant is a square in the base field");
    CycloScalar ninv = n.inverse();
    return QuadScalar(a_ * ninv, -(b_ * ninv), d_);
}

QuadScalar QuadScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadScalar acc = one_like();
    QuadScalar base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string QuadScalar::str() const {
    std::ostringstream os;
    if (b_.is_zero()) return a_.str();
    os << "(" << a_.str() << ") + (" << b_.str() << ")*t";
    return os.str();
}

}  // namespace hlam
