#include <functional>
#include <sstream>
#include <stdexcept>

#include "aobc/schurweyl.hpp"

namespace aobc {

GR z_r(unsigned r, const std::vector<GR>& lambda) {
    // chains i_1 < ... < i_s with exponents a_j summing to r - s; dp[m] over the chain built so far
    // tracks sum of prod lambda_{i_j} y_{i_j}^{a_j} * 2^{s-1}, m = sum (a_j + 1)
    if (r == 0) throw std::invalid_argument("z_r needs r >= 1");
    std::vector<GR> dp(r + 1);  // chains ending strictly before the current index
    GR total;
    for (const GR& l : lambda) {
        const GR y = l * l + l;
        std::vector<GR> ypow(r, GR(1));
        for (unsigned a = 1; a < r; ++a) ypow[a] = ypow[a - 1] * y;
        std::vector<GR> ending(r + 1);  // chains whose last index is this one
        for (unsigned m = 1; m <= r; ++m) {
            // start a chain here
            ending[m] += l * ypow[m - 1];
            for (unsigned prev = 1; prev < m; ++prev)
                ending[m] += GR(2) * dp[prev] * l * ypow[m - prev - 1];
        }
        for (unsigned m = 1; m <= r; ++m) dp[m] += ending[m];
    }
    total = dp[r];
    return -total;
}

GR sergeev_eigenvalue(unsigned r, const std::vector<GR>& lambda) {
    if (r == 0) throw std::invalid_argument("sergeev_eigenvalue needs r >= 1");
    const std::size_t n = lambda.size();
    // X_i(m) = sigma(x^0_{ii}(m)) evaluated on the highest weight vector, odd m only
    std::vector<GR> X(n);
    for (std::size_t i = 0; i < n; ++i) X[i] = -lambda[i];
    for (unsigned m = 3; m <= 2 * r - 1; m += 2) {
        std::vector<GR> next(n);
        GR below;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = X[i] * (lambda[i] * lambda[i] + lambda[i]) + GR(2) * below * lambda[i];
            below += X[i];
        }
        X = std::move(next);
    }
    GR s;
    for (const auto& x : X) s += x;
    return s;
}

GR sergeev_on_verma(unsigned r, const Weight& w) {
    if (r == 0) throw std::invalid_argument("sergeev_on_verma needs r >= 1");
    const int n = w.n();
    const unsigned m = 2 * r - 1;
    VermaModule M(w, m);
    const int hw = M.highest_weight_vector();
    auto act = [&](const QGen& g, const SVec& v) {
        SVec out;
        for (const auto& [b, c] : v)
            for (const auto& [b2, c2] : M.act(g, b)) {
                GR& slot = out[b2];
                slot += c * c2;
                if (slot.is_zero()) out.erase(b2);
            }
        return out;
    };
    auto axpy = [](SVec& out, const SVec& v, const GR& c) {
        for (const auto& [b, x] : v) {
            GR& slot = out[b];
            slot += c * x;
            if (slot.is_zero()) out.erase(b);
        }
    };
    SVec total;
    for (int i = 1; i <= n; ++i) {
        // sigma(x^p_{t,i}(k)) v = sum_s -sigma(x^p_{s,i}(k-1)) e_{t,s} v + c_p sigma(x^{1-p}_{s,i}(k-1)) f_{t,s} v
        // with c_0 = (-1)^{k-1}, c_1 = -(-1)^{k-1}; at k = 1 it is -e_{t,i} or -f_{t,i}
        std::map<std::pair<int, int>, SVec> layer;  // (t, p) -> vector still to be acted on
        layer[{i, 0}] = SVec{{hw, GR(1)}};
        for (unsigned k = m; k > 1; --k) {
            std::map<std::pair<int, int>, SVec> next;
            const long sk = (k - 1) % 2 ? -1 : 1;
            for (const auto& [tp, v] : layer) {
                const auto [t, p] = tp;
                for (int s = 1; s <= n; ++s) {
                    axpy(next[{s, p}], act(QGen{false, t, s}, v), GR(-1));
                    axpy(next[{s, 1 - p}], act(QGen{true, t, s}, v), GR(p == 0 ? sk : -sk));
                }
            }
            layer = std::move(next);
        }
        for (const auto& [tp, v] : layer) {
            const auto [t, p] = tp;
            axpy(total, act(QGen{p == 1, t, i}, v), GR(-1));
        }
    }
    GR value;
    for (const auto& [b, c] : total) {
        if (b != hw) throw std::logic_error("sigma(S_r) did not act on v_lambda by a scalar");
        value = c;
    }
    return value;
}

DeltaSpec verma_delta(const Weight& w, unsigned kmax) {
    DeltaSpec d;
    for (unsigned k = 1; k <= kmax; ++k) d.set(2 * k - 1, GR(-2) * z_r(k, w.lambda));
    return d;
}

// ------------------------------------------------------------ coefficient matrix

CoefficientMatrix coefficient_matrix(unsigned r, unsigned ell, const Weight& w, unsigned cap) {
    const int n = w.n();
    if (static_cast<int>(r) > n) throw std::invalid_argument("coefficient_matrix needs r <= n");
    if (ell == 0) throw std::invalid_argument("ell must be positive");
    auto verma = std::make_shared<VermaModule>(w, cap);
    Psi psi(n, verma);
    const Word word(r, Ori::Up);
    // w^0: strand k (counted from the right) carries v_{n-k+1}
    TKey w0(r + 1);
    for (unsigned k = 1; k <= r; ++k) w0[r - k] = n - static_cast<int>(k);
    w0[r] = verma->highest_weight_vector();

    CoefficientMatrix cm;
    std::vector<unsigned> beta(r, 0);  // (beta_r, ..., beta_1)
    std::vector<TVec> images;
    while (true) {
        cm.betas.push_back(beta);
        Layers ls;
        // x_r^{b_r} ... x_1^{b_1}: x_1 acts first
        for (unsigned k = 1; k <= r; ++k)
            for (unsigned t = 0; t < beta[r - k]; ++t) ls.push_back({Gen::Black, static_cast<int>(r - k)});
        images.push_back(psi.apply(ls, word, TVec{{w0, GR(1)}}));
        std::size_t pos = r;
        while (pos > 0 && ++beta[pos - 1] == ell) beta[--pos] = 0;
        if (pos == 0) break;
    }
    std::map<TKey, std::size_t> row_of;
    for (const auto& v : images)
        for (const auto& [k, c] : v) row_of.emplace(k, 0);
    std::size_t idx = 0;
    for (auto& [k, i] : row_of) {
        i = idx++;
        cm.rows.push_back(k);
        std::string lab;
        NaturalModule V(n);
        for (unsigned p = 0; p < r; ++p) lab += V.label(k[p]) + " (x) ";
        lab += verma->label(k[r]);
        cm.row_labels.push_back(lab);
        cm.row_degrees.push_back(verma->degree(k[r]));
    }
    for (const auto& v : images) {
        std::vector<GR> col(row_of.size());
        for (const auto& [k, c] : v) col[row_of.at(k)] = c;
        cm.columns.push_back(std::move(col));
    }
    return cm;
}

std::string coefficient_matrix_csv(const CoefficientMatrix& cm) {
    std::ostringstream os;
    os << "row";
    for (const auto& b : cm.betas) {
        os << ",\"(";
        for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
        os << ")\"";
    }
    os << "\n";
    for (std::size_t r = 0; r < cm.rows.size(); ++r) {
        os << '"' << cm.row_labels[r] << '"';
        for (const auto& col : cm.columns) os << ',' << col[r].str();
        os << "\n";
    }
    return os.str();
}

namespace {

unsigned weight_sum(const std::vector<unsigned>& b) {
    unsigned s = 0;
    for (unsigned x : b) s += x;
    return s;
}

// beta' < beta in the order used for triangularity
bool beta_less(const std::vector<unsigned>& bp, const std::vector<unsigned>& b) {
    const unsigned sp = weight_sum(bp), s = weight_sum(b);
    if (sp != s) return sp < s;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != bp[i]) return b[i] > bp[i];
    return false;
}

}  // namespace

TriangularityReport unitriangularity(const CoefficientMatrix& cm, const Weight&) {
    // For each beta look for a row with entry +-1 in column beta, zero in every column beta' < beta,
    // and PBW degree |beta|. A system of distinct such rows makes the matrix unitriangular.
    const std::size_t nb = cm.betas.size();
    std::vector<std::vector<std::size_t>> cand(nb);
    for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t r = 0; r < cm.rows.size(); ++r) {
            const GR& c = cm.columns[j][r];
            if (!(c == GR(1) || c == GR(-1))) continue;
            if (cm.row_degrees[r] != weight_sum(cm.betas[j])) continue;
            bool ok = true;
            for (std::size_t jp = 0; jp < nb && ok; ++jp)
                if (beta_less(cm.betas[jp], cm.betas[j]) && !cm.columns[jp][r].is_zero()) ok = false;
            if (ok) cand[j].push_back(r);
        }
    }
    std::map<std::size_t, std::size_t> owner;  // row -> beta
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t j, std::vector<bool>& seen) {
        for (std::size_t r : cand[j]) {
            if (seen[r]) continue;
            seen[r] = true;
            auto it = owner.find(r);
            if (it == owner.end() || augment(it->second, seen)) {
                owner[r] = j;
                return true;
            }
        }
        return false;
    };
    TriangularityReport rep;
    rep.resolved = true;
    std::size_t matched = 0;
    for (std::size_t j = 0; j < nb; ++j) {
        std::vector<bool> seen(cm.rows.size(), false);
        if (augment(j, seen)) ++matched;
    }
    rep.triangular = matched == nb;
    std::ostringstream os;
    os << "leading rows found for " << matched << " of " << nb << " columns";
    rep.note = os.str();
    if (!rep.triangular) rep.resolved = false;
    return rep;
}

// ------------------------------------------------------------ dominance

namespace {

using Mono = std::vector<unsigned>;

struct MPoly {
    std::map<Mono, mpq_class> t;

    void add(const Mono& m, const mpq_class& c) {
        if (sgn(c) == 0) return;
        mpq_class& s = t[m];
        s += c;
        if (sgn(s) == 0) t.erase(m);
    }
    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [m, c] : o.t) r.add(m, c);
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        MPoly r;
        for (const auto& [a, x] : t)
            for (const auto& [b, y] : o.t) {
                Mono m(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
                r.add(m, x * y);
            }
        return r;
    }
    MPoly scaled(const mpq_class& c) const {
        MPoly r;
        for (const auto& [m, x] : t) r.add(m, x * c);
        return r;
    }
    MPoly derivative(std::size_t v) const {
        MPoly r;
        for (const auto& [m, x] : t) {
            if (m[v] == 0) continue;
            Mono m2 = m;
            --m2[v];
            r.add(m2, x * m[v]);
        }
        return r;
    }
    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [m, x] : t) {
            unsigned s = 0;
            for (unsigned e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }
    mpq_class eval(const std::vector<mpq_class>& pt) const {
        mpq_class s = 0;
        for (const auto& [m, x] : t) {
            mpq_class term = x;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (unsigned e = 0; e < m[i]; ++e) term *= pt[i];
            s += term;
        }
        return s;
    }
    std::string str() const {
        if (t.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            const auto& [m, c] = *it;
            mpq_class a = abs(c);
            std::string mono;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "n" + std::to_string(i + 1);
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            std::string piece = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
            if (first)
                out = (sgn(c) < 0 ? "-" : "") + piece;
            else
                out += (sgn(c) < 0 ? " - " : " + ") + piece;
            first = false;
        }
        return out;
    }
};

MPoly determinant(const std::vector<std::vector<MPoly>>& a) {
    const std::size_t n = a.size();
    if (n == 0) {
        MPoly one;
        one.add(Mono{}, 1);
        return one;
    }
    if (n == 1) return a[0][0];
    MPoly det;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<MPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        det = det + (a[0][j] * determinant(minor)).scaled(j % 2 ? -1 : 1);
    }
    return det;
}

// Inverse of the Vandermonde matrix V[i][j] = x_i^j.
std::vector<std::vector<mpq_class>> vandermonde_inverse(const std::vector<mpq_class>& x) {
    const std::size_t n = x.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class p = 1;
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = p;
            p *= x[i];
        }
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (sgn(a[piv][c]) == 0) ++piv;
        std::swap(a[piv], a[c]);
        const mpq_class inv = 1 / a[c][c];
        for (auto& v : a[c]) v *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            const mpq_class f = a[i][c];
            for (std::size_t k = 0; k < 2 * n; ++k) a[i][k] -= f * a[c][k];
        }
    }
    std::vector<std::vector<mpq_class>> out(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

}  // namespace

DominanceReport dominance_check(unsigned a, unsigned b, unsigned eps, const std::vector<GR>& l_values) {
    DominanceReport rep;
    rep.a = a;
    rep.b = b;
    rep.eps = eps;
    const unsigned m = a + b;
    if (m == 0) {
        rep.trivially_dominant = true;
        rep.nonzero = true;
        rep.determinant = "1";
        rep.samples_consistent = true;
        return rep;
    }
    std::vector<GR> l = l_values;
    if (l.size() == b && a > 0) l.insert(l.begin(), a, GR(-1));
    for (const auto& x : l)
        if (!x.is_real()) throw std::invalid_argument("dominance_check needs rational l-values");
    const unsigned D = 2 * m;  // degree bound per variable
    std::vector<mpq_class> grid;
    for (unsigned k = 0; k <= D; ++k) grid.push_back(2 * (k + 1));
    const auto vinv = vandermonde_inverse(grid);
    const std::size_t g = grid.size();
    std::size_t npts = 1;
    for (unsigned i = 0; i < m; ++i) npts *= g;

    auto weight_at = [&](const std::vector<unsigned>& blocks) {
        std::vector<unsigned> nb = blocks;
        if (eps) nb.push_back(2);
        return build_weight(a, b, eps, nb, l).lambda;
    };
    auto digits = [&](std::size_t idx) {
        std::vector<std::size_t> d(m);
        for (unsigned i = 0; i < m; ++i) {
            d[i] = idx % g;
            idx /= g;
        }
        return d;
    };

    std::vector<MPoly> z(m);
    for (unsigned k = 1; k <= m; ++k) {
        std::vector<mpq_class> vals(npts);
        for (std::size_t idx = 0; idx < npts; ++idx) {
            auto d = digits(idx);
            std::vector<unsigned> blocks(m);
            for (unsigned i = 0; i < m; ++i) blocks[i] = static_cast<unsigned>(grid[d[i]].get_num().get_ui());
            vals[idx] = z_r(k, weight_at(blocks)).re();
        }
        // apply the inverse Vandermonde along each axis
        for (unsigned axis = 0; axis < m; ++axis) {
            std::size_t stride = 1;
            for (unsigned i = 0; i < axis; ++i) stride *= g;
            std::vector<mpq_class> next(npts, 0);
            for (std::size_t idx = 0; idx < npts; ++idx) {
                const std::size_t di = (idx / stride) % g;
                const std::size_t base = idx - di * stride;
                for (std::size_t e = 0; e < g; ++e) next[base + e * stride] += vinv[e][di] * vals[idx];
            }
            vals = std::move(next);
        }
        for (std::size_t idx = 0; idx < npts; ++idx) {
            auto d = digits(idx);
            Mono mono(d.begin(), d.end());
            z[k - 1].add(mono, vals[idx]);
        }
    }
    // off-grid check
    rep.samples_consistent = true;
    {
        std::vector<unsigned> blocks(m);
        std::vector<mpq_class> pt(m);
        for (unsigned i = 0; i < m; ++i) {
            blocks[i] = 2 * (D + 2 + i);
            pt[i] = blocks[i];
        }
        const auto lam = weight_at(blocks);
        for (unsigned k = 1; k <= m; ++k)
            if (z[k - 1].eval(pt) != z_r(k, lam).re()) rep.samples_consistent = false;
    }
    std::vector<std::vector<MPoly>> J(m, std::vector<MPoly>(m));
    for (unsigned k = 0; k < m; ++k) {
        rep.z_polys.push_back(z[k].str());
        rep.z_degrees.push_back(z[k].degree());
        for (unsigned s = 0; s < m; ++s) J[k][s] = z[k].derivative(s);
    }
    MPoly det = determinant(J);
    rep.determinant = det.str();
    rep.nonzero = !det.t.empty();
    return rep;
}

}  // namespace aobc
