#include "hlam/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hlam/quad.hpp"

namespace hlam {

namespace {

// exact division of integer polynomials, ascending coefficients; the
// remainder must vanish
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<mpz_class> d = den;
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) throw DivisionByZero("polynomial division by zero");
    if (num.size() < d.size()) {
        for (const auto& c : num)
            if (c != 0) throw Error("inexact polynomial division");
        return {mpz_class(0)};
    }
    std::vector<mpz_class> q(num.size() - d.size() + 1, mpz_class(0));
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        mpz_class lead = num[k + d.size() - 1];
        if (lead % d.back() != 0) throw Error("inexact polynomial division");
        mpz_class f = lead / d.back();
        q[k] = f;
        if (f != 0)
            for (std::size_t i = 0; i < d.size(); ++i) num[k + i] -= f * d[i];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("inexact polynomial division");
    return q;
}

std::vector<mpz_class> x_pow_minus_one(long n) {
    std::vector<mpz_class> p(n + 1, mpz_class(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Phi_K by exact division of x^K - 1 by the product of all lower-order
// cyclotomic polynomials
std::vector<mpz_class> cyclotomic_poly(long K) {
    std::map<long, std::vector<mpz_class>> phi;
    for (long d = 1; d <= K; ++d) {
        if (K % d != 0) continue;
        std::vector<mpz_class> prod{mpz_class(1)};
        for (auto& [e, pe] : phi)
            if (d % e == 0) prod = poly_mul_z(prod, pe);
        phi[d] = poly_div_exact(x_pow_minus_one(d), prod);
    }
    return phi[K];
}

}  // namespace

CycloCtx::CycloCtx(long K) : K_(K) {
    if (K < 1) throw BadParam("field order must be positive");
    phiK_ = cyclotomic_poly(K);
    phi_ = static_cast<long>(phiK_.size()) - 1;
    long top = std::max(K_, 2 * phi_ - 1);
    pow_.reserve(top);
    for (long e = 0; e < top; ++e) {
        if (e < phi_) {
            std::vector<mpq_class> v(phi_, mpq_class(0));
            v[e] = 1;
            pow_.push_back(std::move(v));
        } else {
            // w^e = w * w^{e-1}, reduced by w^phi = -(lower part of Phi_K)
            const auto& prev = pow_[e - 1];
            std::vector<mpq_class> v(phi_, mpq_class(0));
            for (long i = 1; i < phi_; ++i) v[i] = prev[i - 1];
            mpq_class lead = prev[phi_ - 1];
            if (lead != 0)
                for (long i = 0; i < phi_; ++i) v[i] -= lead * mpq_class(phiK_[i]);
            pow_.push_back(std::move(v));
        }
    }
}

std::shared_ptr<const CycloCtx> CycloCtx::get(long K) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const CycloCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(K);
    if (it != cache.end()) return it->second;
    auto ctx = std::shared_ptr<const CycloCtx>(new CycloCtx(K));
    cache[K] = ctx;
    return ctx;
}

const std::vector<mpq_class>& CycloCtx::power(long e) const {
    long m = e % K_;
    if (m < 0) m += K_;
    return pow_[m];
}

std::vector<mpq_class> CycloCtx::mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const {
    std::vector<mpq_class> conv(2 * phi_ - 1, mpq_class(0));
    for (long i = 0; i < phi_; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < phi_; ++j) {
            if (b[j] == 0) continue;
            conv[i + j] += a[i] * b[j];
        }
    }
    std::vector<mpq_class> r(phi_, mpq_class(0));
    for (long e = 0; e < 2 * phi_ - 1; ++e) {
        if (conv[e] == 0) continue;
        if (e < phi_) {
            r[e] += conv[e];
        } else {
            const auto& p = pow_[e];
            for (long i = 0; i < phi_; ++i) r[i] += conv[e] * p[i];
        }
    }
    for (auto& q : r) q.canonicalize();
    return r;
}

std::vector<mpq_class> CycloCtx::inv(const std::vector<mpq_class>& a) const {
    // solve M y = e0 where column j of M holds a * w^j
    long n = phi_;
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1, mpq_class(0)));
    for (long j = 0; j < n; ++j) {
        std::vector<mpq_class> col = j == 0 ? a : mul(a, pow_[j]);
        for (long i = 0; i < n; ++i) m[i][j] = col[i];
    }
    m[0][n] = 1;
    long row = 0;
    std::vector<long> pivot_col(n, -1);
    for (long col = 0; col < n && row < n; ++col) {
        long p = -1;
        for (long r = row; r < n; ++r)
            if (m[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[row]);
        mpq_class d = m[row][col];
        for (long c = col; c <= n; ++c) m[row][c] /= d;
        for (long r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (long c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col[row] = col;
        ++row;
    }
    if (row < n) throw DivisionByZero("cyclotomic scalar is zero");
    std::vector<mpq_class> y(n, mpq_class(0));
    for (long r = 0; r < n; ++r) y[pivot_col[r]] = m[r][n];
    return y;
}

CycloScalar::CycloScalar(std::shared_ptr<const CycloCtx> ctx) : ctx_(std::move(ctx)), c_(ctx_->degree(), mpq_class(0)) {}

CycloScalar::CycloScalar(std::shared_ptr<const CycloCtx> ctx, std::vector<mpq_class> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) != ctx_->degree()) throw BadParam("coefficient vector has wrong length");
    for (auto& q : c_) q.canonicalize();
}

CycloScalar CycloScalar::from_rational(long K, const mpq_class& q) {
    CycloScalar s(CycloCtx::get(K));
    s.c_[0] = q;
    s.c_[0].canonicalize();
    return s;
}

CycloScalar CycloScalar::root_of_unity(long K, long n, long e) {
    auto ctx = CycloCtx::get(K);
    if (n <= 0 || K % n != 0) throw OrderNotDividing();
    long m = e % n;
    if (m < 0) m += n;
    return CycloScalar(ctx, ctx->power((K / n) * m));
}

bool CycloScalar::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycloScalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<mpq_class> CycloScalar::rational_value() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

void CycloScalar::check(const CycloScalar& o) const {
    if (!same_ring(o)) throw RingMismatch("cyclotomic field orders differ");
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
    check(o);
    c_ = ctx_->mul(c_, o.c_);
    return *this;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (!a.same_ring(b)) throw RingMismatch("cyclotomic field orders differ");
    return a.c_ == b.c_;
}

CycloScalar CycloScalar::inverse() const { return CycloScalar(ctx_, ctx_->inv(c_)); }

CycloScalar CycloScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloScalar acc = one_like();
    CycloScalar base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string CycloScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class q = c_[i];
        if (first) {
            if (q < 0) {
                os << "-";
                q = -q;
            }
        } else {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        first = false;
        if (i == 0) {
            os << q.get_str();
        } else {
            if (q != 1) os << q.get_str() << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

SqrtResult sqrt_exact(const CycloScalar& x) {
    const long K = x.order();
    if (x.is_zero()) return {true, x.zero_like(), nullptr};
    // detect x = q * w^e with q rational: then a square root exists in the
    // field iff e is even and |q| is a square of a rational (the sign of q
    // is absorbed by w^{K/4} when 4 | K)
    for (long e = 0; e < K; ++e) {
        CycloScalar cand = x * CycloScalar::root_of_unity(K, K, -e);
        auto q = cand.rational_value();
        if (!q || *q == 0) continue;
        if (e % 2 != 0) continue;
        if (*q < 0 && K % 4 != 0) continue;  // sqrt(-1) unavailable
        mpq_class a = *q > 0 ? *q : mpq_class(-*q);
        mpz_class num = a.get_num(), den = a.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) continue;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        CycloScalar root = CycloScalar::from_rational(K, mpq_class(rn, rd)) * CycloScalar::root_of_unity(K, K, e / 2);
        if (*q < 0) root *= CycloScalar::root_of_unity(K, 4, 1);
        return {true, root, nullptr};
    }
    auto t = std::make_shared<QuadScalar>(x.zero_like(), x.one_like(), x);
    return {false, x.zero_like(), t};
}

}  // namespace hlam
