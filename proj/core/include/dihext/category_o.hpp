// Character-level model of the graded highest weight category attached to a
// dihedral group: Verma characters via the weight filtration, graded
// projective resolutions of Vermas, Hom dimensions, and graded Ext tables
// computed along two independent routes (resolution vs. closed form).
//
// Grading conventions.  Shifts act by M(n)_i = M_{i+n}; multiplicities obey
// mult_{M(n)}(z, c) = mult_M(z, c - n), and dim gHom(P_z(a), M) = mult_M(z, a).
// With these conventions the weight filtration of the Verma character of y
// has layer i equal to the simples L_x(-i) over l(x) = l(y) + i.

#pragma once

#include "dihext/dihedral.hpp"
#include "dihext/laurent.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dihext {

// Graded multiplicities [M : L_z(d)], finitely supported, zeros omitted.
class GradedCharacter {
  public:
    int multiplicity(const DihedralElement& z, int degree) const;
    void add(const DihedralElement& z, int degree, int count);
    int total() const;

    // z -> (degree -> multiplicity), both levels ascending.
    const std::map<DihedralElement, std::map<int, int>>& entries() const { return c_; }

    friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

  private:
    std::map<DihedralElement, std::map<int, int>> c_;
};

// Character of the Verma of y: multiplicity 1 at (y, 0) and at (x, l(y)-l(x))
// for every x longer than y.  The weight filtration layer of an entry (z, d)
// is -d.
GradedCharacter verma_character(const DihedralElement& y);

// Graded projective resolution of the Verma of x.  Term j is the multiset of
// (z, -j) over z <= x with l(x) - l(z) = j; term 0 is {(x, 0)}.
struct Resolution {
    DihedralElement x;
    std::vector<std::vector<std::pair<DihedralElement, int>>> terms;
};

Resolution proj_resolution(const DihedralElement& x);

// dim gHom(P_z(a), Verma(y)(k)) = mult_{Verma(y)}(z, a - k).
int hom_projective_to_verma(const DihedralElement& z, int a, const DihedralElement& y, int k);

// dim gHom(Verma(x), Verma(y)(k)): 1 iff x >= y and k = l(x) - l(y).
int hom_verma_verma(const DihedralElement& x, const DihedralElement& y, int k);

// (j, i) -> dim gExt^j_i(Verma(x), Verma(y)); zeros omitted.  Nonzero entries
// lie on the line i + 2j = l(x) - l(y), and the table is empty unless x >= y.
struct ExtTable {
    DihedralElement x;
    DihedralElement y;
    std::map<std::pair<int, int>, int> entries;

    friend bool operator==(const ExtTable&, const ExtTable&) = default;
};

// Ext dimensions read off the Hom complex gHom(P^bullet, Verma(y)(i)); all
// differentials of that complex vanish, so entry (j, i) is the sum of
// hom_projective_to_verma(z, -j, y, i) over the summands (z, -j) of term j.
ExtTable ext_via_resolution(const DihedralElement& x, const DihedralElement& y);

// The closed form: for r = l(x) - l(y) >= 0 and x >= y, dimension 1 at
// (0, r) and (r, -r), dimension 2 at (j, r - 2j) for 0 < j < r.
ExtTable ext_closed_form(const DihedralElement& x, const DihedralElement& y);

// e(x,y) = sum of the Ext table as q^j t^i.  Requires x >= y.
BiLaurentPolynomial e_generating_function(const DihedralElement& x, const DihedralElement& y);

// Ungraded Ext dimensions E_{x,y}(q) = sum_j dim Ext^j q^j next to the
// R-polynomial R_{y,x}(q) and their coefficientwise difference.  Purely
// informational; no equality between the two is asserted.
struct GabberJosephReport {
    DihedralElement x;
    DihedralElement y;
    LaurentPolynomial ext_poly;    // E_{x,y}(q)
    LaurentPolynomial r_poly;      // R_{y,x}(q)
    LaurentPolynomial difference;  // ext_poly - r_poly
};

GabberJosephReport gabber_joseph_report(const DihedralElement& x, const DihedralElement& y);

}  // namespace dihext
