#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hlam/errors.hpp"

namespace hlam {

class CycloScalar;
class QuadScalar;

// Shared data for the field Q(w) with w a primitive K-th root of unity:
// the cyclotomic polynomial Phi_K and a power table reducing w^e to the
// power basis 1, w, ..., w^{phi(K)-1}.  Contexts are cached per K so that
// scalars with equal K share one context.
class CycloCtx {
  public:
    static std::shared_ptr<const CycloCtx> get(long K);

    long order() const { return K_; }
    long degree() const { return phi_; }

    // coordinates of w^e (any integer e) in the power basis
    const std::vector<mpq_class>& power(long e) const;

    // Phi_K as integer coefficients, ascending degree, monic
    const std::vector<mpz_class>& minimal_poly() const { return phiK_; }

    std::vector<mpq_class> mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const;
    std::vector<mpq_class> inv(const std::vector<mpq_class>& a) const;

  private:
    explicit CycloCtx(long K);
    long K_;
    long phi_;
    std::vector<mpz_class> phiK_;
    std::vector<std::vector<mpq_class>> pow_;  // w^e for e in [0, max(K, 2*phi-1))
};

// Element of Q(w_K), stored exactly in the power basis modulo Phi_K.
class CycloScalar {
  public:
    CycloScalar() = default;  // null scalar; only assignment is valid
    explicit CycloScalar(std::shared_ptr<const CycloCtx> ctx);
    CycloScalar(std::shared_ptr<const CycloCtx> ctx, std::vector<mpq_class> coeffs);

    static CycloScalar zero(long K) { return CycloScalar(CycloCtx::get(K)); }
    static CycloScalar one(long K) { return from_rational(K, 1); }
    static CycloScalar from_rational(long K, const mpq_class& q);
    // w^{(K/n) * e}; requires n | K
    static CycloScalar root_of_unity(long K, long n, long e);

    const std::shared_ptr<const CycloCtx>& ctx() const { return ctx_; }
    long order() const { return ctx_->order(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<mpq_class> rational_value() const;

    CycloScalar zero_like() const { return CycloScalar(ctx_); }
    CycloScalar one_like() const { return from_rational(ctx_->order(), 1); }
    bool same_ring(const CycloScalar& o) const { return ctx_ && o.ctx_ && ctx_->order() == o.ctx_->order(); }

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend bool operator==(const CycloScalar& a, const CycloScalar& b);
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

    CycloScalar inverse() const;
    CycloScalar pow(long e) const;

    std::string str() const;

  private:
    void check(const CycloScalar& o) const;
    std::shared_ptr<const CycloCtx> ctx_;
    std::vector<mpq_class> c_;
};

// Result of an exact square-root attempt: either a root inside Q(w_K) or
// a generator of the quadratic extension Q(w_K)[t]/(t^2 - x).
struct SqrtResult {
    bool found;
    CycloScalar root;                       // valid when found
    std::shared_ptr<QuadScalar> extension;  // valid when !found: t with t^2 = x
};

SqrtResult sqrt_exact(const CycloScalar& x);

}  // namespace hlam
