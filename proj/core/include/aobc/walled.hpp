#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aobc/engine.hpp"

namespace aobc {

// Words in the walled Brauer-Clifford generators. Tokens:
//   s<i> c<i> x1 (the up side), sb<j> cb<j> xb1 (the down side), e1,
//   w<2k+1> and wb<k> for the central elements.
// Strands are numbered from the right on each side of the wall.
using WalledWord = std::vector<std::string>;

struct WordTerm {
    GR coeff;
    WalledWord word;
};
using WordCombination = std::vector<WordTerm>;

struct RelationInstance {
    std::string id;
    WordCombination lhs, rhs;
};

WalledWord parse_walled_word(const std::string& s);  // "e1 s1 e1" or "e1*s1*e1"; "1" is empty
std::string walled_word_str(const WalledWord& w);
// Throws std::invalid_argument when a token is unknown or out of range for (r, t).
void check_walled_word(const WalledWord& w, unsigned r, unsigned t);
int walled_parity(const WalledWord& w);

// The relation families instantiated for (r, t); wall relations only when r, t >= 1.
// kmax bounds the powers in the bubble relations: x1^{2k+1}, x1^{2k} for k <= kmax, xb1^k for k <= 2 kmax + 1.
std::vector<RelationInstance> relation_table(unsigned r, unsigned t, unsigned kmax = 2);
std::string relation_table_json(const std::vector<RelationInstance>& table);
std::vector<RelationInstance> relation_table_from_json(const std::string& s);

// Image of one generator in End(v^t ^^r). With no delta the bubbles stay formal.
Morphism phi(const std::string& gen, unsigned r, unsigned t, const std::optional<DeltaSpec>& delta = std::nullopt);
Morphism phi_word(const WordCombination& w, unsigned r, unsigned t,
                  const std::optional<DeltaSpec>& delta = std::nullopt);

struct RelationResult {
    std::string id;
    bool pass = false;
    std::string residual;  // Morphism::str of phi(lhs - rhs), empty when zero
};

struct PresentationReport {
    unsigned r = 0, t = 0;
    std::vector<RelationResult> relations;
    std::vector<RelationResult> extra;  // bubble parameter and g-identity checks
    bool all_pass() const;
    std::string to_json() const;
};

struct PresentationOptions {
    std::optional<DeltaSpec> delta;
    std::optional<TPoly> f;  // cyclotomic mode when set
    unsigned kmax = 2;
    const std::vector<RelationInstance>* table = nullptr;  // defaults to relation_table(r, t, kmax)
};
PresentationReport verify_presentation(unsigned r, unsigned t, const PresentationOptions& opt = {});

// (-1)^l phi(e1 f(x1)) - phi(e1 g(xb1)) with g = compute_g(f); zero when the identity holds.
Morphism g_identity_residual(const TPoly& f, unsigned r, unsigned t, const std::optional<DeltaSpec>& delta = std::nullopt);

// (r+t)! 2^{r+t} ell^{r+t}
std::uint64_t hom_dimension(unsigned r, unsigned t, unsigned ell);

}  // namespace aobc
