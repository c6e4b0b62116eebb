// Combinatorics of the dihedral Coxeter system (W, S = {s,t}) of order 2m.
//
// Elements are kept in canonical form: the identity, or an alternating word
// determined by its first letter and its length.  The two alternating words
// of length m denote the same group element (the longest element w0); the
// canonical form stores that element with first letter s.  Consequently there
// are exactly two elements at each length 1..m-1 and one at lengths 0 and m.

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace dihext {

// The group I2(m), generated by s and t with (st)^m = e.  Only finite m >= 2
// is representable.
class GroupParams {
  public:
    explicit GroupParams(int m);
    int m() const { return m_; }

    friend bool operator==(GroupParams, GroupParams) = default;

  private:
    int m_;
};

enum class Letter : unsigned char { s = 0, t = 1 };

constexpr Letter other(Letter g) { return g == Letter::s ? Letter::t : Letter::s; }
constexpr char letter_char(Letter g) { return g == Letter::s ? 's' : 't'; }

enum class Side { left, right };

class DihedralElement {
  public:
    static DihedralElement identity(GroupParams params);
    // The element with reduced word first, other(first), first, ... of the
    // given length; length 0 gives the identity, length m canonicalizes the
    // first letter to s.
    static DihedralElement word(Letter first, int length, GroupParams params);
    static DihedralElement longest(GroupParams params);

    int m() const { return m_; }
    GroupParams group() const { return GroupParams(m_); }
    int length() const { return length_; }
    bool is_identity() const { return length_ == 0; }
    bool is_longest() const { return length_ == m_; }

    // First letter of the canonical reduced word; meaningless for the
    // identity (returns s).
    Letter first_letter() const { return first_; }
    Letter last_letter() const;

    // The canonical reduced word (for w0, the s-first one).
    std::vector<Letter> reduced_word() const;
    // All reduced words: one for most elements, two for w0, the empty word
    // for the identity.
    std::vector<std::vector<Letter>> reduced_words() const;

    // "e", "w0", or the alternating word, e.g. "stst".
    std::string to_string() const;

    // Orders by (m, length, s-first before t-first); within one group this is
    // the canonical output order.
    auto operator<=>(const DihedralElement&) const = default;

  private:
    DihedralElement(int m, int length, Letter first)
        : m_(m), length_(length), first_(first) {}

    int m_;
    int length_;
    Letter first_;
};

// Parses "e", "w0", or an alternating word over {s,t} of length <= m.
// Throws std::invalid_argument for non-reduced words, words longer than m,
// and unknown tokens.
DihedralElement parse_element(std::string_view text, GroupParams params);

struct GenMultResult {
    DihedralElement element;
    int sign;  // +1 if the length went up, -1 if it went down
};

// g*w (side = left) or w*g (side = right), in canonical form.  The length
// always changes by exactly one.
GenMultResult mult_gen(Side side, Letter g, const DihedralElement& w);

// Bruhat order.  For dihedral groups x <= y iff x = y or l(x) < l(y).
bool bruhat_leq(const DihedralElement& x, const DihedralElement& y);

// Subword characterization of the Bruhat order, by brute force over all
// reduced words of x and y.  Independent of bruhat_leq.
bool bruhat_leq_subword_oracle(const DihedralElement& x, const DihedralElement& y);

// All 2m elements: ascending length, s-first before t-first at equal length.
std::vector<DihedralElement> elements(GroupParams params);

}  // namespace dihext
