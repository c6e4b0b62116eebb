#include "dihext/hecke.hpp"

#include <stdexcept>
#include <utility>

namespace dihext {

namespace {

LaurentPolynomial one() { return LaurentPolynomial::monomial(0, 1); }
LaurentPolynomial v_power(int k) { return LaurentPolynomial::monomial(k, 1); }

// v^-1 - v, the coefficient in the quadratic relation.
LaurentPolynomial quadratic_coeff() {
    return LaurentPolynomial::monomial(-1, 1) - LaurentPolynomial::monomial(1, 1);
}

void require_same_group(const HeckeElement& a, const HeckeElement& b) {
    if (a.is_zero() || b.is_zero())
        return;
    if (a.support().begin()->first.m() != b.support().begin()->first.m())
        throw std::invalid_argument("hecke: elements from different groups");
}

}  // namespace

HeckeElement HeckeElement::standard_basis(const DihedralElement& w) {
    HeckeElement h;
    h.c_.emplace(w, one());
    return h;
}

LaurentPolynomial HeckeElement::coeff(const DihedralElement& w) const {
    auto it = c_.find(w);
    return it == c_.end() ? LaurentPolynomial{} : it->second;
}

void HeckeElement::add_term(const DihedralElement& w, const LaurentPolynomial& p) {
    if (p.is_zero())
        return;
    auto [it, inserted] = c_.try_emplace(w, LaurentPolynomial{});
    it->second += p;
    if (it->second.is_zero())
        c_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    for (const auto& [w, p] : o.c_)
        add_term(w, p);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    for (const auto& [w, p] : o.c_)
        add_term(w, -p);
    return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPolynomial& p) {
    if (p.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [w, q] : c_)
        q *= p;
    return *this;
}

HeckeElement h_mult_gen(const HeckeElement& a, Letter g) {
    HeckeElement out;
    for (const auto& [x, p] : a.support()) {
        auto [xg, sign] = mult_gen(Side::right, g, x);
        out.add_term(xg, p);
        if (sign < 0)
            out.add_term(x, p * quadratic_coeff());
    }
    return out;
}

HeckeElement h_mult(const HeckeElement& a, const HeckeElement& b) {
    require_same_group(a, b);
    HeckeElement out;
    for (const auto& [w, p] : b.support()) {
        HeckeElement cur = a;
        for (Letter g : w.reduced_word())
            cur = h_mult_gen(cur, g);
        out += cur *= p;
    }
    return out;
}

HeckeElement bar_hecke(const HeckeElement& a) {
    HeckeElement out;
    for (const auto& [x, p] : a.support()) {
        // bar(H_g) = H_g + (v - v^-1) H_e, multiplied along a reduced word.
        HeckeElement term = HeckeElement::standard_basis(DihedralElement::identity(x.group()));
        for (Letter g : x.reduced_word()) {
            HeckeElement bar_gen = HeckeElement::standard_basis(
                DihedralElement::word(g, 1, x.group()));
            bar_gen.add_term(DihedralElement::identity(x.group()), -quadratic_coeff());
            term = h_mult(term, bar_gen);
        }
        out += term *= bar_invert(p);
    }
    return out;
}

HeckeElement kl_basis(const DihedralElement& w) {
    HeckeElement out;
    for (const auto& y : elements(w.group()))
        if (bruhat_leq(y, w))
            out.add_term(y, v_power(w.length() - y.length()));
    return out;
}

std::map<DihedralElement, LaurentPolynomial> standard_in_kl(const DihedralElement& w) {
    std::map<DihedralElement, LaurentPolynomial> coeffs;
    HeckeElement rest = HeckeElement::standard_basis(w);
    while (!rest.is_zero()) {
        // Largest remaining support element; unitriangularity makes the
        // elimination terminate.
        const DihedralElement y = rest.support().rbegin()->first;
        const LaurentPolynomial c = rest.support().rbegin()->second;
        coeffs.emplace(y, c);
        rest -= kl_basis(y) * c;
    }
    return coeffs;
}

namespace {

using RKey = std::pair<DihedralElement, DihedralElement>;

LaurentPolynomial r_poly_rec(const DihedralElement& x, const DihedralElement& y,
                             std::map<RKey, LaurentPolynomial>& memo) {
    if (x == y)
        return LaurentPolynomial::monomial(0, 1);
    if (!bruhat_leq(x, y))
        return {};
    if (auto it = memo.find({x, y}); it != memo.end())
        return it->second;

    auto step = [&](Letter g) {
        auto gy = mult_gen(Side::left, g, y).element;
        auto [gx, sign] = mult_gen(Side::left, g, x);
        if (sign < 0)
            return r_poly_rec(gx, gy, memo);
        const auto q_minus_1 =
            LaurentPolynomial::monomial(1, 1) - LaurentPolynomial::monomial(0, 1);
        return q_minus_1 * r_poly_rec(x, gy, memo) +
               LaurentPolynomial::monomial(1, 1) * r_poly_rec(gx, gy, memo);
    };

    Letter descent = y.first_letter();
    LaurentPolynomial result = step(descent);
    if (y.is_longest() && step(other(descent)) != result)
        throw std::logic_error("r_polynomial: recursion depends on the descent choice");
    memo.emplace(RKey{x, y}, result);
    return result;
}

}  // namespace

LaurentPolynomial r_polynomial(const DihedralElement& x, const DihedralElement& y) {
    if (x.m() != y.m())
        throw std::invalid_argument("r_polynomial: elements from different groups");
    std::map<RKey, LaurentPolynomial> memo;
    return r_poly_rec(x, y, memo);
}

}  // namespace dihext
