// Exact Laurent polynomial arithmetic with arbitrary-precision integer
// coefficients: one formal variable with exponents in Z, and a two-variable
// variant used for generating functions in (q, t).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace dihext {

using Int = boost::multiprecision::cpp_int;

// Finitely supported exponent -> coefficient mapping; zero coefficients are
// never stored, so equality of maps is equality of polynomials.
template <class Exp>
class SparseLaurent {
  public:
    SparseLaurent() = default;

    static SparseLaurent monomial(Exp e, Int c) {
        SparseLaurent p;
        p.add_term(e, std::move(c));
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    Int coeff(const Exp& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Int(0) : it->second;
    }

    const std::map<Exp, Int>& terms() const { return c_; }

    // Adds c to the coefficient at e, dropping the term if it cancels.
    void add_term(const Exp& e, Int c) { accumulate(e, std::move(c)); }

    SparseLaurent& operator+=(const SparseLaurent& o) {
        for (const auto& [e, c] : o.c_)
            accumulate(e, c);
        return *this;
    }
    SparseLaurent& operator-=(const SparseLaurent& o) {
        for (const auto& [e, c] : o.c_)
            accumulate(e, -c);
        return *this;
    }
    SparseLaurent& operator*=(const SparseLaurent& o) {
        *this = *this * o;
        return *this;
    }
    SparseLaurent& operator*=(const Int& k) {
        if (k == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [e, c] : c_)
            c *= k;
        return *this;
    }

    friend SparseLaurent operator+(SparseLaurent a, const SparseLaurent& b) { return a += b; }
    friend SparseLaurent operator-(SparseLaurent a, const SparseLaurent& b) { return a -= b; }
    friend SparseLaurent operator-(const SparseLaurent& a) {
        SparseLaurent out;
        for (const auto& [e, c] : a.c_)
            out.c_.emplace(e, -c);
        return out;
    }
    friend SparseLaurent operator*(const SparseLaurent& a, const SparseLaurent& b) {
        SparseLaurent out;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_)
                out.accumulate(ea + eb, ca * cb);
        return out;
    }
    friend SparseLaurent operator*(SparseLaurent a, const Int& k) { return a *= k; }
    friend SparseLaurent operator*(const Int& k, SparseLaurent a) { return a *= k; }

    friend bool operator==(const SparseLaurent&, const SparseLaurent&) = default;

  private:
    void accumulate(const Exp& e, Int c) {
        if (c == 0)
            return;
        auto [it, inserted] = c_.try_emplace(e, Int(0));
        it->second += c;
        if (it->second == 0)
            c_.erase(it);
    }

    std::map<Exp, Int> c_;
};

struct QTExp {
    int q = 0;
    int t = 0;

    friend QTExp operator+(QTExp a, QTExp b) { return {a.q + b.q, a.t + b.t}; }
    auto operator<=>(const QTExp&) const = default;
};

using LaurentPolynomial = SparseLaurent<int>;
using BiLaurentPolynomial = SparseLaurent<QTExp>;

// Substitution v -> v^-1 (exponent negation); a ring involution.
LaurentPolynomial bar_invert(const LaurentPolynomial& p);

// Canonical text forms.  One variable: descending exponents, "v^-2"-style
// powers.  Two variables: ascending q-exponent, then descending t-exponent.
std::string to_string(const LaurentPolynomial& p, std::string_view var);
std::string to_latex(const LaurentPolynomial& p, std::string_view var);
std::string to_string(const BiLaurentPolynomial& p);
std::string to_latex(const BiLaurentPolynomial& p);

}  // namespace dihext
