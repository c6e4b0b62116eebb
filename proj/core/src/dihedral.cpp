#include "dihext/dihedral.hpp"

#include <stdexcept>

namespace dihext {

GroupParams::GroupParams(int m) : m_(m) {
    if (m < 2)
        throw std::invalid_argument("m must be a finite integer >= 2, got " + std::to_string(m));
}

DihedralElement DihedralElement::identity(GroupParams params) {
    return DihedralElement(params.m(), 0, Letter::s);
}

DihedralElement DihedralElement::word(Letter first, int length, GroupParams params) {
    if (length < 0 || length > params.m())
        throw std::invalid_argument("word length must lie in [0, m]");
    if (length == 0 || length == params.m())
        first = Letter::s;  // canonical form
    return DihedralElement(params.m(), length, first);
}

DihedralElement DihedralElement::longest(GroupParams params) {
    return DihedralElement(params.m(), params.m(), Letter::s);
}

Letter DihedralElement::last_letter() const {
    return length_ % 2 == 1 ? first_ : other(first_);
}

std::vector<Letter> DihedralElement::reduced_word() const {
    std::vector<Letter> w;
    w.reserve(static_cast<size_t>(length_));
    Letter g = first_;
    for (int k = 0; k < length_; ++k) {
        w.push_back(g);
        g = other(g);
    }
    return w;
}

std::vector<std::vector<Letter>> DihedralElement::reduced_words() const {
    if (is_identity())
        return {{}};
    std::vector<std::vector<Letter>> words{reduced_word()};
    if (is_longest()) {
        // w0 also has the t-first word.
        std::vector<Letter> alt;
        alt.reserve(static_cast<size_t>(length_));
        Letter g = Letter::t;
        for (int k = 0; k < length_; ++k) {
            alt.push_back(g);
            g = other(g);
        }
        words.push_back(std::move(alt));
    }
    return words;
}

std::string DihedralElement::to_string() const {
    if (is_identity())
        return "e";
    if (is_longest())
        return "w0";
    std::string out;
    for (Letter g : reduced_word())
        out.push_back(letter_char(g));
    return out;
}

DihedralElement parse_element(std::string_view text, GroupParams params) {
    if (text == "e")
        return DihedralElement::identity(params);
    if (text == "w0")
        return DihedralElement::longest(params);
    if (text.empty())
        throw std::invalid_argument("empty element text (write \"e\" for the identity)");

    Letter prev = Letter::s;  // only read when k > 0
    for (size_t k = 0; k < text.size(); ++k) {
        Letter g;
        if (text[k] == 's')
            g = Letter::s;
        else if (text[k] == 't')
            g = Letter::t;
        else
            throw std::invalid_argument(std::string("unknown token '") + text[k] +
                                        "' in element text \"" + std::string(text) + "\"");
        if (k > 0 && g == prev)
            throw std::invalid_argument("word \"" + std::string(text) +
                                        "\" is not reduced (repeated letter)");
        prev = g;
    }
    if (text.size() > static_cast<size_t>(params.m()))
        throw std::invalid_argument("word \"" + std::string(text) + "\" is longer than m = " +
                                    std::to_string(params.m()));
    Letter first = text[0] == 's' ? Letter::s : Letter::t;
    return DihedralElement::word(first, static_cast<int>(text.size()), params);
}

GenMultResult mult_gen(Side side, Letter g, const DihedralElement& w) {
    const GroupParams params = w.group();
    const int m = params.m();
    const int k = w.length();

    if (w.is_identity())
        return {DihedralElement::word(g, 1, params), +1};

    if (w.is_longest()) {
        // Both generators are descents of w0 on both sides: pick the reduced
        // word that starts (resp. ends) with g and cancel.
        if (side == Side::left)
            return {DihedralElement::word(other(g), m - 1, params), -1};
        // The length-(m-1) word ending in other(g) starts with other(g) when
        // m-1 is odd, with g when m-1 is even.
        Letter first = (m - 1) % 2 == 1 ? other(g) : g;
        return {DihedralElement::word(first, m - 1, params), -1};
    }

    if (side == Side::left) {
        if (g == w.first_letter()) {
            if (k == 1)
                return {DihedralElement::identity(params), -1};
            return {DihedralElement::word(other(g), k - 1, params), -1};
        }
        return {DihedralElement::word(g, k + 1, params), +1};
    }

    // side == right
    if (g == w.last_letter()) {
        if (k == 1)
            return {DihedralElement::identity(params), -1};
        return {DihedralElement::word(w.first_letter(), k - 1, params), -1};
    }
    return {DihedralElement::word(w.first_letter(), k + 1, params), +1};
}

bool bruhat_leq(const DihedralElement& x, const DihedralElement& y) {
    if (x.m() != y.m())
        throw std::invalid_argument("bruhat_leq: elements from different groups");
    return x == y || x.length() < y.length();
}

namespace {

bool is_subword(const std::vector<Letter>& u, const std::vector<Letter>& w) {
    size_t pos = 0;
    for (Letter g : w) {
        if (pos < u.size() && u[pos] == g)
            ++pos;
    }
    return pos == u.size();
}

}  // namespace

bool bruhat_leq_subword_oracle(const DihedralElement& x, const DihedralElement& y) {
    if (x.m() != y.m())
        throw std::invalid_argument("bruhat_leq_subword_oracle: elements from different groups");
    for (const auto& xw : x.reduced_words())
        for (const auto& yw : y.reduced_words())
            if (is_subword(xw, yw))
                return true;
    return false;
}

std::vector<DihedralElement> elements(GroupParams params) {
    std::vector<DihedralElement> out;
    out.reserve(static_cast<size_t>(2 * params.m()));
    out.push_back(DihedralElement::identity(params));
    for (int k = 1; k < params.m(); ++k) {
        out.push_back(DihedralElement::word(Letter::s, k, params));
        out.push_back(DihedralElement::word(Letter::t, k, params));
    }
    out.push_back(DihedralElement::longest(params));
    return out;
}

}  // namespace dihext
