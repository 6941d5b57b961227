#pragma once

#include <string>

#include "hlam/cyclo.hpp"

namespace hlam {

// Element a + b*t of the quadratic extension ring Q(w_K)[t]/(t^2 - D).
// When D is not a square in Q(w_K) this is a field; otherwise inversion
// of a nonzero element may raise ZeroDivisor, which callers treat as the
// signal that D should have been resolved inside the base field.
class QuadScalar {
  public:
    QuadScalar() = default;
    QuadScalar(CycloScalar a, CycloScalar b, CycloScalar disc);

    static QuadScalar from_base(const CycloScalar& a, const CycloScalar& disc) {
        return QuadScalar(a, a.zero_like(), disc);
    }
    static QuadScalar generator(const CycloScalar& disc) {
        return QuadScalar(disc.zero_like(), disc.one_like(), disc);
    }

    const CycloScalar& a() const { return a_; }
    const CycloScalar& b() const { return b_; }
    const CycloScalar& disc() const { return d_; }
    long order() const { return d_.order(); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool same_ring(const QuadScalar& o) const { return a_.same_ring(o.a_) && d_ == o.d_; }

    QuadScalar zero_like() const { return QuadScalar(a_.zero_like(), b_.zero_like(), d_); }
    QuadScalar one_like() const { return QuadScalar(a_.one_like(), b_.zero_like(), d_); }

    QuadScalar conj() const { return QuadScalar(a_, -b_, d_); }
    CycloScalar norm() const { return a_ * a_ - b_ * b_ * d_; }

    QuadScalar operator-() const { return QuadScalar(-a_, -b_, d_); }
    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o);
    QuadScalar& operator*=(const QuadScalar& o);
    friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
    friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
    friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
    friend bool operator==(const QuadScalar& x, const QuadScalar& y);
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

    QuadScalar inverse() const;
    QuadScalar pow(long e) const;

    std::string str() const;

  private:
    void check(const QuadScalar& o) const;
    CycloScalar a_, b_, d_;
};

}  // namespace hlam
