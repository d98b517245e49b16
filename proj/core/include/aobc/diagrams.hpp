#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aobc {

enum class Ori : std::uint8_t { Up = 0, Down = 1 };
using Word = std::vector<Ori>;

// ASCII encoding: '^' is up, 'v' is down.
Word parse_word(std::string_view s);
std::string word_str(const Word& w);
Word word_power(Ori o, std::size_t n);
Word operator+(Word a, const Word& b);

// One strand of a diagram, keyed by its inward endpoint (bottom up-letter or top down-letter).
// Endpoint ids: bottom letter i is i, top letter j is |bottom| + j.
struct Strand {
    int in = 0;
    int out = 0;
    std::uint8_t white = 0;
    std::uint32_t black = 0;
    auto operator<=>(const Strand&) const = default;
};

struct NormalDiagram {
    Word bottom;
    Word top;
    std::vector<Strand> strands;  // sorted by `in`

    int n_bottom() const { return static_cast<int>(bottom.size()); }
    bool is_bottom(int e) const { return e < n_bottom(); }
    Ori letter(int e) const { return is_bottom(e) ? bottom[e] : top[e - n_bottom()]; }
    int parity() const;
    std::uint32_t total_black() const;
    std::string endpoint_label(int e) const;  // "b2" or "t0"

    auto operator<=>(const NormalDiagram&) const = default;
};

// Inward endpoints in increasing id order: bottom up-letters, then top down-letters.
std::vector<int> inward_endpoints(const Word& bottom, const Word& top);
std::vector<int> outward_endpoints(const Word& bottom, const Word& top);

// black_bound is exclusive (black < bound); a bound of 0 or 1 both mean "no black dots".
// nullopt means unbounded and is rejected.
std::vector<NormalDiagram> enumerate_normal(const Word& bottom, const Word& top,
                                            std::optional<unsigned> black_bound);

std::string canonical_key(const NormalDiagram& d);
NormalDiagram strip_dots(const NormalDiagram& d);

struct ValidationMode {
    std::optional<unsigned> cyclotomic_ell;  // nullopt = affine
};
// Empty result means the diagram is valid.
std::vector<std::string> validate(const NormalDiagram& d, ValidationMode mode = {});

NormalDiagram identity_diagram(const Word& w);

std::string diagram_to_json(const NormalDiagram& d);
NormalDiagram diagram_from_json(const std::string& s);
std::string diagram_to_tikz(const NormalDiagram& d);

}  // namespace aobc
