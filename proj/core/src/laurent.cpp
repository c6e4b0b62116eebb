#include "dihext/laurent.hpp"

#include <algorithm>
#include <vector>

namespace dihext {

LaurentPolynomial bar_invert(const LaurentPolynomial& p) {
    LaurentPolynomial out;
    for (const auto& [e, c] : p.terms())
        out.add_term(-e, c);
    return out;
}

namespace {

void append_power(std::string& out, std::string_view var, int e, bool latex) {
    out += var;
    if (e == 1)
        return;
    if (latex) {
        out += "^{";
        out += std::to_string(e);
        out += "}";
    } else {
        out += "^";
        out += std::to_string(e);
    }
}

// Emits sign and |coefficient|; the caller appends the variable part.
// keep_unit: print |c| even when it is 1 (used for bare constants).
void append_coeff(std::string& out, bool first, const Int& c, bool keep_unit) {
    const bool neg = c < 0;
    if (first) {
        if (neg)
            out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    const Int a = abs(c);
    if (keep_unit || a != 1)
        out += a.str();
}

std::string render_uni(const LaurentPolynomial& p, std::string_view var, bool latex) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int e = it->first;
        append_coeff(out, first, it->second, e == 0);
        if (e != 0)
            append_power(out, var, e, latex);
        first = false;
    }
    return out;
}

std::string render_bi(const BiLaurentPolynomial& p, bool latex) {
    if (p.is_zero())
        return "0";
    std::vector<std::pair<QTExp, Int>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.q != b.first.q)
            return a.first.q < b.first.q;
        return a.first.t > b.first.t;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        append_coeff(out, first, c, e.q == 0 && e.t == 0);
        if (e.q != 0)
            append_power(out, "q", e.q, latex);
        if (e.t != 0)
            append_power(out, "t", e.t, latex);
        first = false;
    }
    return out;
}

}  // namespace

std::string to_string(const LaurentPolynomial& p, std::string_view var) {
    return render_uni(p, var, false);
}

std::string to_latex(const LaurentPolynomial& p, std::string_view var) {
    return render_uni(p, var, true);
}

std::string to_string(const BiLaurentPolynomial& p) { return render_bi(p, false); }

std::string to_latex(const BiLaurentPolynomial& p) { return render_bi(p, true); }

}  // namespace dihext
