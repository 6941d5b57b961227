#include "hlam/params.hpp"

#include <algorithm>
#include <sstream>

namespace hlam {

std::string stratum_name(Stratum s) {
    switch (s) {
        case Stratum::O1: return "O1";
        case Stratum::O2h: return "O2h";
        case Stratum::O2v: return "O2v";
        case Stratum::O4: return "O4";
    }
    return "?";
}

std::string chi_str(const Character& c) {
    std::ostringstream os;
    os << "(" << c.i << "," << c.j << ")";
    return os.str();
}

Params::Params(long N, long M, CycloScalar l1, CycloScalar l2, CycloScalar l3, bool allow_small)
    : N_(N), M_(M), l1_(std::move(l1)), l2_(std::move(l2)), l3_(std::move(l3)) {
    if (N < 1 || M < 1) throw BadParam("N and M must be positive");
    if (!allow_small && (N < 2 || M < 2)) throw BadParam("N, M >= 2 required (pass allow_small to override)");
    K_ = std::lcm(std::lcm(2 * N, 2 * M), 4L);
    if (l1_.order() != K_ || l2_.order() != K_ || l3_.order() != K_)
        throw RingMismatch("lambda scalars must live in Q(w_K), K = lcm(2N, 2M, 4)");
    if (N == 1 && !l1_.is_zero()) throw BadParam("N = 1 forces lambda1 = 0");
    if (M == 1 && !l2_.is_zero()) throw BadParam("M = 1 forces lambda2 = 0");
}

Params Params::rational(long N, long M, const mpq_class& l1, const mpq_class& l2, const mpq_class& l3,
                         bool allow_small) {
    long K = std::lcm(std::lcm(2 * N, 2 * M), 4L);
    return Params(N, M, CycloScalar::from_rational(K, l1), CycloScalar::from_rational(K, l2),
                  CycloScalar::from_rational(K, l3), allow_small);
}

Character Params::orbit_rep(const Character& c) const {
    auto o = orbit(c);
    return *std::min_element(o.begin(), o.end());
}

Character Params::o2h_rep(const Character& c) const { return std::min(canonical(c), bar(c)); }
Character Params::o2v_rep(const Character& c) const { return std::min(canonical(c), neg(c)); }
Character Params::o4_rep(const Character& c) const { return std::min(canonical(c), negbar(c)); }

std::vector<Character> Params::all_characters() const {
    std::vector<Character> v;
    v.reserve(4 * N_ * M_);
    for (long i = 0; i < 2 * N_; ++i)
        for (long j = 0; j < 2 * M_; ++j) v.push_back({i, j});
    return v;
}

std::vector<Character> Params::orbit_reps() const {
    std::vector<Character> v;
    for (const auto& c : all_characters())
        if (orbit_rep(c) == c) v.push_back(c);
    return v;
}

AlphaTriple alpha(const Params& p, const Character& chi) {
    CycloScalar one = p.cone();
    CycloScalar z2 = p.zeta(2 * chi.i);
    CycloScalar x2 = p.xi(2 * chi.j);
    CycloScalar a1 = p.lambda1() * (one - z2);
    CycloScalar a2 = p.lambda2() * (one - x2);
    CycloScalar two = CycloScalar::from_rational(p.K(), 2);
    CycloScalar a3 = p.lambda3() * (one - z2 * x2) - two * p.lambda1() * p.lambda2() * (one + x2) * (one - z2);
    return {a1, a2, a3};
}

Stratum classify_character(const Params& p, const Character& chi) {
    AlphaTriple a = alpha(p, chi);
    bool z1 = a.a1.is_zero(), z2 = a.a2.is_zero(), z3 = a.a3.is_zero();
    if (z1 && z2 && z3) return Stratum::O1;
    if (z3 && !z1 && z2) return Stratum::O2h;
    if (z3 && z1 && !z2) return Stratum::O2v;
    return Stratum::O4;
}

bool s_set_member(const Params& p, const Character& chi) {
    // zeta^{2i} xi^{2j} = 1  <=>  2i*K/2N + 2j*K/2M = 0 mod K
    long e = (2 * chi.i % (2 * p.N())) * (p.K() / (2 * p.N())) + (2 * chi.j % (2 * p.M())) * (p.K() / (2 * p.M()));
    return e % p.K() == 0;
}

CycloScalar discriminant(const Params& p, const Character& chi) {
    AlphaTriple a = alpha(p, chi);
    CycloScalar four = CycloScalar::from_rational(p.K(), 4);
    return a.a3 * a.a3 - four * a.a1 * a.a1 * a.a2 * a.a2;
}

bool needs_extension(const Params& p, const Character& chi) {
    AlphaTriple a = alpha(p, chi);
    if ((a.a1 * a.a1 * a.a2).is_zero()) return false;  // linear case
    return !sqrt_exact(discriminant(p, chi)).found;
}

DimFourRoots solve_d(const Params& p, const Character& chi) {
    if (classify_character(p, chi) != Stratum::O4) throw NotInO4();
    AlphaTriple a = alpha(p, chi);
    DimFourRoots out;
    out.D = discriminant(p, chi);
    CycloScalar lead = a.a1 * a.a1 * a.a2;
    if (lead.is_zero()) {
        // a3 != 0 on this stratum; single linear root d = a2 / a3
        CycloScalar d = a.a2 * a.a3.inverse();
        CycloScalar c = a.a3 - lead * d;
        out.base.emplace_back(d, c);
        return out;
    }
    CycloScalar half = CycloScalar::from_rational(p.K(), mpq_class(1, 2));
    CycloScalar denom_inv = (CycloScalar::from_rational(p.K(), 2) * lead).inverse();
    SqrtResult s = sqrt_exact(out.D);
    if (s.found) {
        CycloScalar dplus = (a.a3 + s.root) * denom_inv;
        CycloScalar dminus = (a.a3 - s.root) * denom_inv;
        out.base.emplace_back(dplus, a.a3 - lead * dplus);
        if (!(dplus == dminus)) out.base.emplace_back(dminus, a.a3 - lead * dminus);
        (void)half;
        return out;
    }
    out.quad = true;
    QuadScalar t = *s.extension;
    QuadScalar a3q = QuadScalar::from_base(a.a3, out.D);
    QuadScalar leadq = QuadScalar::from_base(lead, out.D);
    QuadScalar di = QuadScalar::from_base(denom_inv, out.D);
    QuadScalar dplus = (a3q + t) * di;
    QuadScalar dminus = (a3q - t) * di;
    out.ext.emplace_back(dplus, a3q - leadq * dplus);
    out.ext.emplace_back(dminus, a3q - leadq * dminus);
    return out;
}

ThetaPair theta_pm(const Params& p, const Character& chi) {
    if (classify_character(p, chi) != Stratum::O4) throw NotInO4();
    AlphaTriple a = alpha(p, chi);
    CycloScalar D = discriminant(p, chi);
    CycloScalar half = CycloScalar::from_rational(p.K(), mpq_class(1, 2));
    ThetaPair out;
    SqrtResult s = sqrt_exact(D);
    if (s.found) {
        out.base = {(-a.a3 + s.root) * half, (-a.a3 - s.root) * half};
        return out;
    }
    out.quad = true;
    QuadScalar t = *s.extension;
    QuadScalar a3q = QuadScalar::from_base(a.a3, D);
    QuadScalar hq = QuadScalar::from_base(half, D);
    out.ext = {(-a3q + t) * hq, (-a3q - t) * hq};
    return out;
}

}  // namespace hlam
