#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aobc/diagrams.hpp"
#include "aobc/scalars.hpp"

namespace aobc {

// Primitive layers. `pos` is the leftmost affected index in the word below the layer
// (for Cup it is the insertion index).
//   Cup      1 -> ^v            Cap      v^ -> 1
//   Cross    ^^ -> ^^           InvCross ^v -> v^   (inverse of the sideways crossing)
//   Black/White  dot on the strand at pos, either orientation
//   Mark     inert marker used while reducing closed loops
enum class Gen : std::uint8_t { Cup, Cap, Cross, InvCross, Black, White, Mark };

struct Layer {
    Gen gen;
    int pos;
    bool operator==(const Layer&) const = default;
};
using Layers = std::vector<Layer>;

bool is_dot(Gen g);
Word apply_layer(const Layer& l, const Word& w);  // throws std::invalid_argument on mismatch
Word apply_layers(const Layers& ls, Word w);
Layers shifted(Layers ls, int by);

// Crossing of the letters at q, q+1 drawn from primitives, chosen by their orientations.
Layers typed_crossing(const Word& w, int q);

// Morphism: finitely supported combination of normal diagrams of a fixed type.
class Morphism {
public:
    Morphism() = default;
    Morphism(Word bottom, Word top) : bottom_(std::move(bottom)), top_(std::move(top)) {}
    static Morphism basis(const NormalDiagram& d, const Scalar& c = Scalar(1));
    static Morphism identity(const Word& w);

    const Word& bottom() const { return bottom_; }
    const Word& top() const { return top_; }
    const std::map<NormalDiagram, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(const NormalDiagram& d) const;
    int parity() const;  // -1 when not homogeneous, 0 for the zero morphism

    void add(const NormalDiagram& d, const Scalar& c);
    Morphism& operator+=(const Morphism& o);
    Morphism& operator-=(const Morphism& o);
    Morphism& operator*=(const Scalar& c);
    Morphism operator-() const;
    friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
    friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
    friend Morphism operator*(const Scalar& c, Morphism a) { return a *= c; }
    friend Morphism operator*(Morphism a, const Scalar& c) { return a *= c; }
    bool operator==(const Morphism& o) const;

    Morphism specialized(const DeltaSpec& delta) const;
    bool is_specialized() const;

    std::string to_json() const;
    static Morphism from_json(const std::string& s);
    std::string str() const;

private:
    Word bottom_, top_;
    std::map<NormalDiagram, Scalar> terms_;
};

struct LayerTerm {
    Scalar coeff;
    Layers layers;
};

// Formal combination of layer sequences of a fixed type; the generator-expression carrier.
class Expr {
public:
    Expr() = default;
    Expr(Word bottom, Word top) : bottom(std::move(bottom)), top(std::move(top)) {}
    static Expr atom(const Word& bottom, Layers layers, const Scalar& c = Scalar(1));

    Word bottom, top;
    std::vector<LayerTerm> terms;

    Expr& operator+=(const Expr& o);
    Expr& operator*=(const Scalar& c);
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, Expr b) { return a += (b *= Scalar(-1)); }
    friend Expr operator*(const Scalar& c, Expr a) { return a *= c; }
};
using GeneratorExpr = Expr;

namespace gen {
Expr id(const Word& w);
Expr lcup();      // 1 -> ^v
Expr lcap();      // v^ -> 1
Expr rcup();      // 1 -> v^
Expr rcap();      // ^v -> 1
Expr cross();     // ^^ -> ^^
Expr crossinv();  // ^v -> v^
Expr tcross();    // v^ -> ^v
Expr dcross();    // vv -> vv
Expr black(Ori o = Ori::Up);
Expr white(Ori o = Ori::Up);
// Down dots spelled out through the left zigzag.
Expr black_down_def();
Expr white_down_def();
Expr bubble(unsigned k);     // counterclockwise loop, k black dots on its right side
Expr cw_bubble(unsigned k);  // clockwise loop, k black dots on its right side
}  // namespace gen

Expr compose(const Expr& f, const Expr& g);  // f after g
Expr tensor(const Expr& f, const Expr& g);
Expr power(const Expr& f, unsigned k);
// S-expressions such as "(compose (tensor id1 lcap) (tensor lcup id1))".
Expr parse_expr(const std::string& s);

// Canonical representative of a normal diagram as a layer sequence; coefficients are relative to it.
Layers canonical_layers(const NormalDiagram& d);
Layers canonical_drawing(const NormalDiagram& d);  // dots ignored
Expr to_expr(const Morphism& m);

Morphism normalize(const Expr& e);
Morphism compose(const Morphism& f, const Morphism& g);
Morphism tensor(const Morphism& f, const Morphism& g);

// Closed counterclockwise loop with the given dots after internal reduction.
Scalar loop_value(unsigned black, unsigned white);
// Closed clockwise loop with `black` dots on its right (down) side.
Scalar cw_loop_value(unsigned black);

enum class Direction { Up, Down };
Morphism sigma(const Morphism& m, Direction dir);

// Polynomials in t, coefficient of t^i at index i.
using TPoly = std::vector<Scalar>;
TPoly parse_tpoly(const std::string& s, const std::string& var = "t", const std::string& bubble_symbol = "d");
std::string tpoly_str(const TPoly& p, const std::string& var = "t", const std::string& bubble_symbol = "d");
TPoly compute_g(const TPoly& f);                         // formal bubbles
TPoly compute_g(const TPoly& f, const DeltaSpec& delta);  // specialized

struct Cyclotomic {
    TPoly f;
    TPoly g;
    std::optional<DeltaSpec> delta;  // when set, all coefficients are specialized
    unsigned ell() const { return static_cast<unsigned>(f.size() - 1); }
    static Cyclotomic make(const TPoly& f, std::optional<DeltaSpec> delta);
};
Morphism cyclotomic_reduce(const Morphism& m, const Cyclotomic& cyc);

std::vector<NormalDiagram> hom_basis(const Word& bottom, const Word& top, unsigned ell);

// The defining relations and the down-dot definitions, as pairs of expressions.
struct EngineRelation {
    std::string id, lhs, rhs;
};
const std::vector<EngineRelation>& engine_relations();

struct EngineRelationResult {
    std::string id;
    unsigned checks = 0;  // the bare relation plus its wrapped copies
    unsigned failures = 0;
    std::string first_residual;
};
// Each relation is checked bare and then `wraps` times tensored with random identities and composed
// with random basis diagrams on words of length <= max_len. Deterministic for a given seed.
std::vector<EngineRelationResult> verify_engine_relations(std::uint64_t seed, unsigned wraps = 20, unsigned max_len = 3);

}  // namespace aobc
