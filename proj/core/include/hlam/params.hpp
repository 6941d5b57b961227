#pragma once

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "hlam/cyclo.hpp"
#include "hlam/quad.hpp"

namespace hlam {

// Character of the grading group Z/2N x Z/2M, stored as the exponent
// pair of (g1, g2) eigenvalues (zeta^i, xi^j).  Equality is integer
// equality of the canonical representatives.
struct Character {
    long i = 0;
    long j = 0;
    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;
};

enum class Stratum { O1, O2h, O2v, O4 };

std::string stratum_name(Stratum s);

// Deformation parameters of the algebra: the group orders and the three
// lambda scalars.  K = lcm(2N, 2M, 4) so that sqrt(-1) = w^{K/4} always
// exists in the base field.
class Params {
  public:
    Params(long N, long M, CycloScalar l1, CycloScalar l2, CycloScalar l3, bool allow_small = false);
    static Params rational(long N, long M, const mpq_class& l1, const mpq_class& l2, const mpq_class& l3,
                           bool allow_small = false);

    long N() const { return N_; }
    long M() const { return M_; }
    long K() const { return K_; }
    const CycloScalar& lambda1() const { return l1_; }
    const CycloScalar& lambda2() const { return l2_; }
    const CycloScalar& lambda3() const { return l3_; }

    CycloScalar czero() const { return CycloScalar::zero(K_); }
    CycloScalar cone() const { return CycloScalar::one(K_); }
    // zeta^e and xi^e for the fixed primitive roots zeta, xi of orders 2N, 2M
    CycloScalar zeta(long e) const { return CycloScalar::root_of_unity(K_, 2 * N_, e); }
    CycloScalar xi(long e) const { return CycloScalar::root_of_unity(K_, 2 * M_, e); }
    CycloScalar chi_g1(const Character& c) const { return zeta(c.i); }
    CycloScalar chi_g2(const Character& c) const { return xi(c.j); }

    Character canonical(Character c) const {
        long i = c.i % (2 * N_), j = c.j % (2 * M_);
        if (i < 0) i += 2 * N_;
        if (j < 0) j += 2 * M_;
        return {i, j};
    }
    Character bar(const Character& c) const { return canonical({c.i + N_, c.j}); }
    Character neg(const Character& c) const { return canonical({c.i + N_, c.j + M_}); }
    Character negbar(const Character& c) const { return canonical({c.i, c.j + M_}); }
    Character mul(const Character& a, const Character& b) const { return canonical({a.i + b.i, a.j + b.j}); }
    Character inv(const Character& c) const { return canonical({-c.i, -c.j}); }
    // the orbit Omega(chi) = {chi, bar, -bar, -chi}
    std::array<Character, 4> orbit(const Character& c) const { return {canonical(c), bar(c), negbar(c), neg(c)}; }
    Character orbit_rep(const Character& c) const;          // lex-min over the orbit
    Character o2h_rep(const Character& c) const;            // lex-min of {chi, bar}
    Character o2v_rep(const Character& c) const;            // lex-min of {chi, -chi}
    Character o4_rep(const Character& c) const;             // lex-min of {chi, -bar}
    std::vector<Character> all_characters() const;          // lexicographic
    std::vector<Character> orbit_reps() const;              // canonical reps of all orbits

  private:
    long N_, M_, K_;
    CycloScalar l1_, l2_, l3_;
};

struct AlphaTriple {
    CycloScalar a1, a2, a3;
};

AlphaTriple alpha(const Params& p, const Character& chi);
Stratum classify_character(const Params& p, const Character& chi);
bool s_set_member(const Params& p, const Character& chi);

// discriminant of the dimension-4 quadratic, D = a3^2 - 4 a1^2 a2^2
CycloScalar discriminant(const Params& p, const Character& chi);

// Solutions d (with paired c = a3 - a1^2 a2 d) of the quadratic
//   a1^2 a2 d^2 - a3 d + a2 = 0
// for chi in the dimension-4 stratum.  Roots may require the quadratic
// extension by sqrt(D); `needs_extension` reports that case.
struct DimFourRoots {
    bool quad = false;                                       // true when roots live in the extension
    std::vector<std::pair<CycloScalar, CycloScalar>> base;   // (d, c) pairs when quad == false
    std::vector<std::pair<QuadScalar, QuadScalar>> ext;      // (d, c) pairs when quad == true
    CycloScalar D;
    long count() const { return quad ? static_cast<long>(ext.size()) : static_cast<long>(base.size()); }
};

DimFourRoots solve_d(const Params& p, const Character& chi);
bool needs_extension(const Params& p, const Character& chi);

// theta_{+-} = (-a3 +- sqrt(D)) / 2, in the same ring as the solve_d roots
struct ThetaPair {
    bool quad = false;
    std::pair<CycloScalar, CycloScalar> base;
    std::pair<QuadScalar, QuadScalar> ext;
};
ThetaPair theta_pm(const Params& p, const Character& chi);

std::string chi_str(const Character& c);

}  // namespace hlam
