#include "dihext/category_o.hpp"

#include "dihext/hecke.hpp"

#include <stdexcept>

namespace dihext {

namespace {

void require_same_group(const DihedralElement& x, const DihedralElement& y, const char* where) {
    if (x.m() != y.m())
        throw std::invalid_argument(std::string(where) + ": elements from different groups");
}

}  // namespace

int GradedCharacter::multiplicity(const DihedralElement& z, int degree) const {
    auto it = c_.find(z);
    if (it == c_.end())
        return 0;
    auto dt = it->second.find(degree);
    return dt == it->second.end() ? 0 : dt->second;
}

void GradedCharacter::add(const DihedralElement& z, int degree, int count) {
    if (count == 0)
        return;
    auto& row = c_[z];
    auto [it, inserted] = row.try_emplace(degree, 0);
    it->second += count;
    if (it->second == 0)
        row.erase(it);
    if (row.empty())
        c_.erase(z);
}

int GradedCharacter::total() const {
    int sum = 0;
    for (const auto& [z, row] : c_)
        for (const auto& [d, count] : row)
            sum += count;
    return sum;
}

GradedCharacter verma_character(const DihedralElement& y) {
    GradedCharacter ch;
    ch.add(y, 0, 1);
    for (const auto& x : elements(y.group()))
        if (x.length() > y.length())
            ch.add(x, y.length() - x.length(), 1);
    return ch;
}

Resolution proj_resolution(const DihedralElement& x) {
    Resolution res{x, {}};
    res.terms.resize(static_cast<size_t>(x.length()) + 1);
    for (const auto& z : elements(x.group()))
        if (bruhat_leq(z, x)) {
            int j = x.length() - z.length();
            res.terms[static_cast<size_t>(j)].emplace_back(z, -j);
        }
    return res;
}

int hom_projective_to_verma(const DihedralElement& z, int a, const DihedralElement& y, int k) {
    require_same_group(z, y, "hom_projective_to_verma");
    return verma_character(y).multiplicity(z, a - k);
}

int hom_verma_verma(const DihedralElement& x, const DihedralElement& y, int k) {
    require_same_group(x, y, "hom_verma_verma");
    return bruhat_leq(y, x) && k == x.length() - y.length() ? 1 : 0;
}

ExtTable ext_via_resolution(const DihedralElement& x, const DihedralElement& y) {
    require_same_group(x, y, "ext_via_resolution");
    ExtTable table{x, y, {}};
    const GradedCharacter ch = verma_character(y);
    const Resolution res = proj_resolution(x);
    for (size_t j = 0; j < res.terms.size(); ++j) {
        for (const auto& [z, shift] : res.terms[j]) {
            auto it = ch.entries().find(z);
            if (it == ch.entries().end())
                continue;
            // dim gHom(P_z(shift), Verma(y)(i)) = mult(z, shift - i), so the
            // entry at degree d contributes at i = shift - d.
            for (const auto& [d, count] : it->second)
                table.entries[{static_cast<int>(j), shift - d}] += count;
        }
    }
    return table;
}

ExtTable ext_closed_form(const DihedralElement& x, const DihedralElement& y) {
    require_same_group(x, y, "ext_closed_form");
    ExtTable table{x, y, {}};
    if (!bruhat_leq(y, x))
        return table;
    const int r = x.length() - y.length();
    table.entries[{0, r}] = 1;
    table.entries[{r, -r}] = 1;
    for (int j = 1; j < r; ++j)
        table.entries[{j, r - 2 * j}] = 2;
    return table;
}

BiLaurentPolynomial e_generating_function(const DihedralElement& x, const DihedralElement& y) {
    require_same_group(x, y, "e_generating_function");
    if (!bruhat_leq(y, x))
        throw std::domain_error("e_generating_function: requires x >= y in Bruhat order");
    BiLaurentPolynomial e;
    for (const auto& [ji, dim] : ext_closed_form(x, y).entries)
        e.add_term(QTExp{ji.first, ji.second}, dim);
    return e;
}

GabberJosephReport gabber_joseph_report(const DihedralElement& x, const DihedralElement& y) {
    require_same_group(x, y, "gabber_joseph_report");
    if (!bruhat_leq(y, x))
        throw std::domain_error("gabber_joseph_report: requires x >= y in Bruhat order");
    LaurentPolynomial ext_poly;
    for (const auto& [ji, dim] : ext_closed_form(x, y).entries)
        ext_poly.add_term(ji.first, dim);
    LaurentPolynomial r_poly = r_polynomial(y, x);
    return GabberJosephReport{x, y, ext_poly, r_poly, ext_poly - r_poly};
}

}  // namespace dihext
