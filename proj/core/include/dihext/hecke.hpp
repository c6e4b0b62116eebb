// The Hecke algebra of I2(m) over Z[v, v^-1], together with R-polynomials.
//
// Normalization: for a generator g the quadratic relation is
//     H_g * H_g = H_e + (v^-1 - v) H_g,
// hence H_g^-1 = H_g + (v - v^-1) H_e.  The bar involution is the ring
// involution with bar(v) = v^-1 and bar(H_g) = H_g^-1.  In this
// normalization the Kazhdan-Lusztig basis of a dihedral group has the
// closed form b_w = sum_{y <= w} v^{l(w)-l(y)} H_y.

#pragma once

#include "dihext/dihedral.hpp"
#include "dihext/laurent.hpp"

#include <map>

namespace dihext {

// Finitely supported mapping DihedralElement -> Z[v, v^-1]; zero polynomials
// are never stored.
class HeckeElement {
  public:
    HeckeElement() = default;

    static HeckeElement zero() { return {}; }
    // H_w
    static HeckeElement standard_basis(const DihedralElement& w);

    bool is_zero() const { return c_.empty(); }
    LaurentPolynomial coeff(const DihedralElement& w) const;
    const std::map<DihedralElement, LaurentPolynomial>& support() const { return c_; }

    void add_term(const DihedralElement& w, const LaurentPolynomial& p);

    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    HeckeElement& operator*=(const LaurentPolynomial& p);

    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(HeckeElement a, const LaurentPolynomial& p) { return a *= p; }

    friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  private:
    std::map<DihedralElement, LaurentPolynomial> c_;
};

// a * H_g (right multiplication by a standard generator).
HeckeElement h_mult_gen(const HeckeElement& a, Letter g);

// Product in the standard basis; b is decomposed along reduced words.
HeckeElement h_mult(const HeckeElement& a, const HeckeElement& b);

// Semilinear bar involution: bar(v) = v^-1, bar(H_w) = H_{w^-1}^-1.
HeckeElement bar_hecke(const HeckeElement& a);

// Kazhdan-Lusztig basis element b_w (dihedral closed form); bar-invariant
// with coefficient 1 at H_w.
HeckeElement kl_basis(const DihedralElement& w);

// Coefficients c_y with H_w = sum_y c_y b_y, by back-substitution over the
// length filtration.
std::map<DihedralElement, LaurentPolynomial> standard_in_kl(const DihedralElement& w);

// R_{x,y} in Z[q] via the descent recursion: R_{x,x} = 1, R_{x,y} = 0 unless
// x <= y, and for a left descent g of y
//     R_{x,y} = R_{gx,gy}                       if gx < x,
//     R_{x,y} = (q-1) R_{x,gy} + q R_{gx,gy}    otherwise.
// When y has two left descents (y = w0) the result is computed with both and
// checked to agree.
LaurentPolynomial r_polynomial(const DihedralElement& x, const DihedralElement& y);

}  // namespace dihext
