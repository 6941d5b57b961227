#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "hlam/params.hpp"

namespace hlam {

// Letters of words in the algebra generators.
enum class Letter { A1, A2, G1, G2, G1inv, G2inv };

// Index of a PBW word in the fixed basis
//   { 1, x1, x2, x1x2, x2x1, x1x2x1, x2x1x2, x2x1x2x1 }.
inline constexpr int kPbwCount = 8;

// Element of H_lambda in normal form: a finitely supported map from
// (PBW word, group exponent pair) to scalars.  Group elements sit to the
// right of the a-letters.
class AlgebraElem;

// Rewriting data for one parameter set: the right-multiplication tables
// b * x1 and b * x2 expanded in the basis, with the degree-4 relation
//   x1x2x1x2 -> -x2x1x2x1 + l3 (1 - g1^2 g2^2) - 2 l1 l2 (1 + g2^2)(1 - g1^2)
// folded in.
class AlgebraCtx {
  public:
    explicit AlgebraCtx(const Params& p);

    const Params& params() const { return p_; }

    struct Term {
        int b;
        long r, s;  // group exponent offsets
        CycloScalar coeff;
    };

    const std::vector<Term>& right_x1(int b) const { return x1_[b]; }
    const std::vector<Term>& right_x2(int b) const { return x2_[b]; }
    static int letters_x1(int b);  // number of x1 letters in PBW word b
    static int letters_x2(int b);
    static const std::vector<Letter>& word_letters(int b);

  private:
    Params p_;
    std::array<std::vector<Term>, kPbwCount> x1_, x2_;
};

class AlgebraElem {
  public:
    using Key = std::tuple<int, long, long>;  // (pbw index, r mod 2N, s mod 2M)

    explicit AlgebraElem(std::shared_ptr<const AlgebraCtx> ctx) : ctx_(std::move(ctx)) {}

    static AlgebraElem one(std::shared_ptr<const AlgebraCtx> ctx);
    static AlgebraElem generator(std::shared_ptr<const AlgebraCtx> ctx, Letter l);

    const std::shared_ptr<const AlgebraCtx>& ctx() const { return ctx_; }
    const std::map<Key, CycloScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(int b, long r, long s, const CycloScalar& c);

    AlgebraElem operator-() const;
    AlgebraElem& operator+=(const AlgebraElem& o);
    AlgebraElem& operator-=(const AlgebraElem& o);
    friend AlgebraElem operator+(AlgebraElem a, const AlgebraElem& b) { return a += b; }
    friend AlgebraElem operator-(AlgebraElem a, const AlgebraElem& b) { return a -= b; }
    friend bool operator==(const AlgebraElem& a, const AlgebraElem& b);
    friend bool operator!=(const AlgebraElem& a, const AlgebraElem& b) { return !(a == b); }

    AlgebraElem scaled(const CycloScalar& c) const;
    AlgebraElem right_letter(Letter l) const;     // *this * letter
    friend AlgebraElem operator*(const AlgebraElem& a, const AlgebraElem& b);
    AlgebraElem left_group(long r, long s) const;  // g1^r g2^s * (*this)

    // antipode, S(g) = g^{-1}, S(a_k) = -g_k^{-1} a_k, extended as an
    // anti-homomorphism
    AlgebraElem antipode() const;

  private:
    std::shared_ptr<const AlgebraCtx> ctx_;
    std::map<Key, CycloScalar> t_;
};

// normal form of a scalar multiple of a word in the generators
AlgebraElem normal_form(std::shared_ptr<const AlgebraCtx> ctx, const std::vector<Letter>& word,
                        const CycloScalar& coeff);
AlgebraElem normal_form(std::shared_ptr<const AlgebraCtx> ctx, const std::vector<Letter>& word);

}  // namespace hlam
