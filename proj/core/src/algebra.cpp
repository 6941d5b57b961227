#include "hlam/algebra.hpp"

namespace hlam {

namespace {
const std::vector<Letter> kWords[kPbwCount] = {
    {},
    {Letter::A1},
    {Letter::A2},
    {Letter::A1, Letter::A2},
    {Letter::A2, Letter::A1},
    {Letter::A1, Letter::A2, Letter::A1},
    {Letter::A2, Letter::A1, Letter::A2},
    {Letter::A2, Letter::A1, Letter::A2, Letter::A1},
};
const int kN1[kPbwCount] = {0, 1, 0, 1, 1, 2, 1, 2};
const int kN2[kPbwCount] = {0, 0, 1, 1, 1, 1, 2, 2};
}  // namespace

int AlgebraCtx::letters_x1(int b) { return kN1[b]; }
int AlgebraCtx::letters_x2(int b) { return kN2[b]; }
const std::vector<Letter>& AlgebraCtx::word_letters(int b) { return kWords[b]; }

AlgebraCtx::AlgebraCtx(const Params& p) : p_(p) {
    CycloScalar l1 = p.lambda1(), l2 = p.lambda2(), l3 = p.lambda3();
    CycloScalar one = p.cone();
    CycloScalar two = CycloScalar::from_rational(p.K(), 2);
    CycloScalar m2l1l2 = two * l1 * l2;

    auto sq1 = [&](int target) {  // target * l1 (1 - g1^2)
        return std::vector<Term>{{target, 0, 0, l1}, {target, 2, 0, -l1}};
    };
    auto sq2 = [&](int target) {  // target * l2 (1 - g2^2)
        return std::vector<Term>{{target, 0, 0, l2}, {target, 0, 2, -l2}};
    };

    // b * x1
    x1_[0] = {{1, 0, 0, one}};
    x1_[1] = sq1(0);
    x1_[2] = {{4, 0, 0, one}};
    x1_[3] = {{5, 0, 0, one}};
    x1_[4] = sq1(2);
    x1_[5] = sq1(3);
    x1_[6] = {{7, 0, 0, one}};
    x1_[7] = sq1(6);

    // b * x2
    x2_[0] = {{2, 0, 0, one}};
    x2_[1] = {{3, 0, 0, one}};
    x2_[2] = sq2(0);
    x2_[3] = sq2(1);
    x2_[4] = {{6, 0, 0, one}};
    // x1x2x1 * x2 = x1x2x1x2
    //   = -x2x1x2x1 + l3 (1 - g1^2 g2^2) - 2 l1 l2 (1 - g1^2 + g2^2 - g1^2 g2^2)
    x2_[5] = {{7, 0, 0, -one},      {0, 0, 0, l3},      {0, 2, 2, -l3},
              {0, 0, 0, -m2l1l2},   {0, 2, 0, m2l1l2},  {0, 0, 2, -m2l1l2},
              {0, 2, 2, m2l1l2}};
    x2_[6] = sq2(4);
    // x2x1x2x1 * x2 = -l2 x1x2x1 (1 - g2^2) + l3 x2 (1 - g1^2 g2^2)
    //   - 2 l1 l2 x2 (1 - g1^2 + g2^2 - g1^2 g2^2)
    x2_[7] = {{5, 0, 0, -l2},       {5, 0, 2, l2},      {2, 0, 0, l3},
              {2, 2, 2, -l3},       {2, 0, 0, -m2l1l2}, {2, 2, 0, m2l1l2},
              {2, 0, 2, -m2l1l2},   {2, 2, 2, m2l1l2}};
}

AlgebraElem AlgebraElem::one(std::shared_ptr<const AlgebraCtx> ctx) {
    AlgebraElem e(ctx);
    e.add_term(0, 0, 0, ctx->params().cone());
    return e;
}

AlgebraElem AlgebraElem::generator(std::shared_ptr<const AlgebraCtx> ctx, Letter l) {
    return one(ctx).right_letter(l);
}

void AlgebraElem::add_term(int b, long r, long s, const CycloScalar& c) {
    if (c.is_zero()) return;
    const Params& p = ctx_->params();
    long rr = r % (2 * p.N());
    if (rr < 0) rr += 2 * p.N();
    long ss = s % (2 * p.M());
    if (ss < 0) ss += 2 * p.M();
    Key k{b, rr, ss};
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

AlgebraElem AlgebraElem::operator-() const {
    AlgebraElem r(ctx_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

AlgebraElem& AlgebraElem::operator+=(const AlgebraElem& o) {
    for (const auto& [k, c] : o.t_) add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
    return *this;
}

AlgebraElem& AlgebraElem::operator-=(const AlgebraElem& o) {
    for (const auto& [k, c] : o.t_) add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
    return *this;
}

bool operator==(const AlgebraElem& a, const AlgebraElem& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    auto ib = b.t_.begin();
    for (; ia != a.t_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

AlgebraElem AlgebraElem::scaled(const CycloScalar& c) const {
    AlgebraElem r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_.emplace(k, v * c);
    return r;
}

AlgebraElem AlgebraElem::right_letter(Letter l) const {
    AlgebraElem r(ctx_);
    for (const auto& [k, c] : t_) {
        auto [b, gr, gs] = k;
        switch (l) {
            case Letter::G1: r.add_term(b, gr + 1, gs, c); break;
            case Letter::G1inv: r.add_term(b, gr - 1, gs, c); break;
            case Letter::G2: r.add_term(b, gr, gs + 1, c); break;
            case Letter::G2inv: r.add_term(b, gr, gs - 1, c); break;
            case Letter::A1: {
                // g1^r g2^s a1 = (-1)^r a1 g1^r g2^s
                CycloScalar f = (gr % 2 != 0) ? -c : c;
                for (const auto& t : ctx_->right_x1(b)) r.add_term(t.b, t.r + gr, t.s + gs, f * t.coeff);
                break;
            }
            case Letter::A2: {
                CycloScalar f = ((gr + gs) % 2 != 0) ? -c : c;
                for (const auto& t : ctx_->right_x2(b)) r.add_term(t.b, t.r + gr, t.s + gs, f * t.coeff);
                break;
            }
        }
    }
    return r;
}

AlgebraElem operator*(const AlgebraElem& a, const AlgebraElem& b) {
    AlgebraElem out(a.ctx());
    for (const auto& [kb, cb] : b.t_) {
        auto [wb, rb, sb] = kb;
        // a * (wb;rb,sb): first fold the letters of wb on the right of a,
        // then shift the group exponent
        AlgebraElem cur = a;
        for (Letter l : AlgebraCtx::word_letters(wb)) cur = cur.right_letter(l);
        for (const auto& [k, c] : cur.t_) {
            auto [w, r, s] = k;
            out.add_term(w, r + rb, s + sb, c * cb);
        }
    }
    return out;
}

AlgebraElem AlgebraElem::left_group(long gr, long gs) const {
    AlgebraElem r(ctx_);
    for (const auto& [k, c] : t_) {
        auto [b, r0, s0] = k;
        long flips = gr * AlgebraCtx::letters_x1(b) + (gr + gs) * AlgebraCtx::letters_x2(b);
        CycloScalar f = (flips % 2 != 0) ? -c : c;
        r.add_term(b, r0 + gr, s0 + gs, f);
    }
    return r;
}

AlgebraElem AlgebraElem::antipode() const {
    AlgebraElem out(ctx_);
    for (const auto& [k, c] : t_) {
        auto [b, gr, gs] = k;
        // S(b g1^r g2^s) = g1^{-r} g2^{-s} S(b), with
        // S(b) = S(l_k) ... S(l_1) and S(x_i) = -g_i^{-1} x_i
        AlgebraElem sb = AlgebraElem::one(ctx_);
        const auto& letters = AlgebraCtx::word_letters(b);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            if (*it == Letter::A1)
                sb = (-sb.right_letter(Letter::G1inv)).right_letter(Letter::A1);
            else
                sb = (-sb.right_letter(Letter::G2inv)).right_letter(Letter::A2);
        }
        sb = sb.left_group(-gr, -gs).scaled(c);
        out += sb;
    }
    return out;
}

AlgebraElem normal_form(std::shared_ptr<const AlgebraCtx> ctx, const std::vector<Letter>& word,
                        const CycloScalar& coeff) {
    AlgebraElem e = AlgebraElem::one(ctx).scaled(coeff);
    for (Letter l : word) e = e.right_letter(l);
    return e;
}

AlgebraElem normal_form(std::shared_ptr<const AlgebraCtx> ctx, const std::vector<Letter>& word) {
    return normal_form(ctx, word, ctx->params().cone());
}

}  // namespace hlam
