#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aobc/engine.hpp"

namespace aobc {

// Basis element of q(n): e_{i,j} (even) or f_{i,j} (odd), 1 <= i, j <= n.
struct QGen {
    bool odd = false;
    int i = 1, j = 1;
    auto operator<=>(const QGen&) const = default;
    bool lowering() const { return i > j; }
    bool raising() const { return i < j; }
};
using QComb = std::vector<std::pair<QGen, GR>>;
QComb bracket(const QGen& a, const QGen& b);  // super bracket [a, b]

using SVec = std::map<int, GR>;

// A q(n)-supermodule with an (interned) homogeneous basis.
class QModule {
public:
    explicit QModule(int n) : n_(n) {}
    virtual ~QModule() = default;
    int n() const { return n_; }
    virtual int parity(int b) const = 0;
    virtual SVec act(const QGen& g, int b) = 0;
    virtual std::string label(int b) const = 0;
    // Finite modules enumerate their basis; infinite ones return nullopt.
    virtual std::optional<int> dimension() const { return std::nullopt; }

private:
    int n_;
};

// V = C^{n|n}; basis index k < n is v_{k+1}, k >= n is v_{-(k-n+1)}.
class NaturalModule : public QModule {
public:
    using QModule::QModule;
    int parity(int b) const override { return b >= n() ? 1 : 0; }
    SVec act(const QGen& g, int b) override;
    std::string label(int b) const override;
    std::optional<int> dimension() const override { return 2 * n(); }
};

// V*, dual basis in the same indexing.
class DualModule : public QModule {
public:
    using QModule::QModule;
    int parity(int b) const override { return b >= n() ? 1 : 0; }
    SVec act(const QGen& g, int b) override;
    std::string label(int b) const override;
    std::optional<int> dimension() const override { return 2 * n(); }
};

class TrivialModule : public QModule {
public:
    using QModule::QModule;
    int parity(int) const override { return 0; }
    SVec act(const QGen&, int) override { return {}; }
    std::string label(int) const override { return "1"; }
    std::optional<int> dimension() const override { return 1; }
};

struct Weight {
    std::vector<GR> lambda;  // lambda_1 .. lambda_n
    // block data when built from blocks
    unsigned a = 0, b = 0, eps = 0;
    std::vector<unsigned> blocks;
    std::vector<GR> l;
    int n() const { return static_cast<int>(lambda.size()); }
};

Weight build_weight(unsigned a, unsigned b, unsigned eps, const std::vector<unsigned>& n_blocks,
                    const std::vector<GR>& l_values);
Weight plain_weight(std::vector<GR> lambda);

// Clifford algebra on the odd Cartan elements: h'_i^2 = lambda_i, h'_i = 0 when lambda_i = 0.
// Realized on the regular module of the nonzero part (dimension 2^{l(lambda)}); basis index is
// a bitmask over the nonzero positions, index 0 is the even highest weight vector.
class CliffordFiber {
public:
    explicit CliffordFiber(const Weight& w);
    int dimension() const { return 1 << static_cast<int>(nz_.size()); }
    // 2^{floor((l+1)/2)}, the irreducible dimension over an algebraically closed field
    int irreducible_dimension() const;
    int parity(int s) const;
    SVec h_odd(int i, int s) const;  // h'_i applied to basis vector s
    const GR& lambda(int i) const { return w_.lambda[i - 1]; }

private:
    Weight w_;
    std::vector<int> nz_;  // 1-based positions with lambda_i != 0
};

// Verma module U(g) (x)_{U(b)} fiber, truncated at PBW degree `cap`. Exceeding the cap throws.
class VermaModule : public QModule {
public:
    VermaModule(const Weight& w, unsigned cap);
    int parity(int b) const override;
    SVec act(const QGen& g, int b) override;
    std::string label(int b) const override;
    int highest_weight_vector() const { return hw_; }
    unsigned cap() const { return cap_; }
    const Weight& weight() const { return w_; }
    unsigned degree(int b) const { return static_cast<unsigned>(states_[b].mono.size()); }

private:
    struct State {
        std::vector<int> mono;  // sorted lowering-generator ids
        int fiber = 0;
        auto operator<=>(const State&) const = default;
    };
    Weight w_;
    CliffordFiber fiber_;
    unsigned cap_;
    std::vector<State> states_;
    std::map<State, int> index_;
    std::map<std::pair<QGen, int>, SVec> memo_;
    int hw_ = 0;

    int intern(const State& s);
    int gen_id(const QGen& g) const;
    QGen gen_of(int id) const;
    SVec act_state(const QGen& g, const std::vector<int>& mono, int fiber);
};

// Vectors in X_1 (x) ... (x) X_k (x) M, keyed by one basis index per factor.
using TKey = std::vector<int>;
using TVec = std::map<TKey, GR>;

class Psi {
public:
    Psi(int n, std::shared_ptr<QModule> m);
    int n() const { return n_; }
    QModule& module() { return *m_; }

    // Apply the layer sequence to v, which lives on `word` (x) M.
    TVec apply(const Layers& ls, const Word& word, TVec v);
    TVec apply(const Expr& e, const TVec& v);
    // Coefficients must be constant; throws std::invalid_argument on formal bubbles.
    TVec apply(const Morphism& m, const TVec& v);
    TVec apply_layer(const Layer& l, const Word& word, const TVec& v);

    // Full basis of word (x) M for finite M.
    std::vector<TKey> basis(const Word& word);
    // Matrix of the operator on word (x) M, columns indexed by basis(bottom), rows by basis(top).
    std::vector<std::vector<GR>> matrix(const Expr& e);
    std::vector<std::vector<GR>> matrix(const Morphism& m);

    int parity(const Word& word, const TKey& k);

private:
    int n_;
    std::shared_ptr<QModule> m_;
    NaturalModule v_;
    DualModule vd_;
    QModule& factor(const Word& word, std::size_t p);
    TVec act_tail(const QGen& g, const Word& word, std::size_t from, const TKey& k);
    TVec omega(const Word& word, std::size_t p, const TKey& k);
};

// Every engine relation as a matrix identity under Psi, once on the raw expressions and once on
// their normal forms.
struct FunctorCheck {
    std::string id;
    bool raw = false, normalized = false;
    bool pass() const { return raw && normalized; }
};
std::vector<FunctorCheck> verify_functor(int n, std::shared_ptr<QModule> m);

// Ordered basis key of a vector space of operators or vectors; rank over Q(i).
std::size_t rank(std::vector<std::vector<GR>> rows);
std::size_t independence_rank(const std::vector<TVec>& vectors);

// Sergeev central elements and the z_r polynomials.
GR z_r(unsigned r, const std::vector<GR>& lambda);
// sigma(S_r) on the highest weight vector via the recursion for sigma(x^0_{ii}(m)) modulo J.
GR sergeev_eigenvalue(unsigned r, const std::vector<GR>& lambda);
// Independent check: apply sigma(S_r) literally on the truncated Verma module and read off the
// scalar on v_lambda; throws if the result is not a multiple of v_lambda.
GR sergeev_on_verma(unsigned r, const Weight& w);
// delta_{2k-1} = -2 z_k(lambda), k = 1..kmax
DeltaSpec verma_delta(const Weight& w, unsigned kmax);

// Columns Psi(x_r^{b_r} ... x_1^{b_1})(w^0), beta' in {0..ell-1}^r listed lexicographically
// with beta_r most significant; rows are the union of basis keys, sorted.
struct CoefficientMatrix {
    std::vector<std::vector<unsigned>> betas;  // (beta_r, ..., beta_1)
    std::vector<TKey> rows;
    std::vector<std::vector<GR>> columns;
    std::vector<std::string> row_labels;
    std::vector<unsigned> row_degrees;  // PBW degree of the module part of each row
};
CoefficientMatrix coefficient_matrix(unsigned r, unsigned ell, const Weight& w, unsigned cap);
std::string coefficient_matrix_csv(const CoefficientMatrix& cm);

// Leading-term triangularity report for the coefficient matrix.
struct TriangularityReport {
    bool resolved = false;
    bool triangular = false;
    std::string note;
};
TriangularityReport unitriangularity(const CoefficientMatrix& cm, const Weight& w);

// Dominance of lambda(n) -> (z_1, ..., z_{a+b}) via exact interpolation on even grids.
struct DominanceReport {
    unsigned a = 0, b = 0, eps = 0;
    bool trivially_dominant = false;
    bool nonzero = false;
    std::string determinant;  // polynomial in n_1 .. n_{a+b}
    std::vector<std::string> z_polys;
    std::vector<unsigned> z_degrees;  // total degree of z_k in the n_i
    bool samples_consistent = false;  // interpolant agrees with a direct evaluation off the grid
};
DominanceReport dominance_check(unsigned a, unsigned b, unsigned eps, const std::vector<GR>& l_values);

}  // namespace aobc
