#include <stdexcept>

#include "aobc/schurweyl.hpp"

namespace aobc {

namespace {

void add_to(TVec& out, const TKey& k, const GR& c) {
    if (c.is_zero()) return;
    GR& slot = out[k];
    slot += c;
    if (slot.is_zero()) out.erase(k);
}

int signed_index(int k, int n) { return k < n ? k + 1 : -(k - n + 1); }
int basis_index(int i, int n) { return i > 0 ? i - 1 : n + (-i) - 1; }

}  // namespace

Psi::Psi(int n, std::shared_ptr<QModule> m) : n_(n), m_(std::move(m)), v_(n), vd_(n) {
    if (!m_) m_ = std::make_shared<TrivialModule>(n);
    if (m_->n() != n) throw std::invalid_argument("module rank does not match n");
}

QModule& Psi::factor(const Word& word, std::size_t p) {
    if (p == word.size()) return *m_;
    return word[p] == Ori::Up ? static_cast<QModule&>(v_) : static_cast<QModule&>(vd_);
}

int Psi::parity(const Word& word, const TKey& k) {
    int p = 0;
    for (std::size_t i = 0; i < k.size(); ++i) p += factor(word, i).parity(k[i]);
    return p % 2;
}

// g acting on factors from..end through the coproduct.
TVec Psi::act_tail(const QGen& g, const Word& word, std::size_t from, const TKey& k) {
    TVec out;
    int passed = 0;
    for (std::size_t q = from; q < k.size(); ++q) {
        QModule& X = factor(word, q);
        const GR sign((g.odd && passed % 2) ? -1 : 1);
        for (const auto& [b, c] : X.act(g, k[q])) {
            TKey k2 = k;
            k2[q] = b;
            add_to(out, k2, sign * c);
        }
        passed += X.parity(k[q]);
    }
    return out;
}

// Omega = sum e~_ij (x) e_ji - sum f~_ij (x) f_ji on factor p and everything to its right.
TVec Psi::omega(const Word& word, std::size_t p, const TKey& k) {
    TVec out;
    const int n = n_;
    const int x = signed_index(k[p], n);
    const int xpar = x > 0 ? 0 : 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            // e~_ij = E_ij - E_{-i,-j};  f~_ij = E_{-i,j} - E_{i,-j}
            int ei = 0, fi = 0;
            GR ec, fc;
            if (x == j) { ei = i; ec = GR(1); fi = -i; fc = GR(1); }
            else if (x == -j) { ei = -i; ec = GR(-1); fi = i; fc = GR(-1); }
            else continue;
            TKey ke = k;
            ke[p] = basis_index(ei, n);
            for (const auto& [kk, c] : act_tail(QGen{false, j, i}, word, p + 1, ke)) add_to(out, kk, ec * c);
            TKey kf = k;
            kf[p] = basis_index(fi, n);
            const GR s(xpar ? -1 : 1);  // (-1)^{|x|}
            for (const auto& [kk, c] : act_tail(QGen{true, j, i}, word, p + 1, kf)) add_to(out, kk, s * fc * c);
        }
    return out;
}

TVec Psi::apply_layer(const Layer& l, const Word& word, const TVec& v) {
    const int p = l.pos;
    const int dim = 2 * n_;
    if (is_dot(l.gen) && l.gen != Gen::Mark && word.at(p) == Ori::Down) {
        Layers ex{{Gen::Cup, p + 1}, {l.gen, p + 1}, {Gen::Cap, p}};
        return apply(ex, word, v);
    }
    TVec out;
    for (const auto& [k, c] : v) {
        switch (l.gen) {
            case Gen::Mark:
                add_to(out, k, c);
                break;
            case Gen::Cup:
                for (int b = 0; b < dim; ++b) {
                    TKey k2 = k;
                    k2.insert(k2.begin() + p, {b, b});
                    add_to(out, k2, c);
                }
                break;
            case Gen::Cap:
                if (k[p] == k[p + 1]) {
                    TKey k2 = k;
                    k2.erase(k2.begin() + p, k2.begin() + p + 2);
                    add_to(out, k2, c);
                }
                break;
            case Gen::Cross:
            case Gen::InvCross: {
                TKey k2 = k;
                std::swap(k2[p], k2[p + 1]);
                const bool odd = factor(word, p).parity(k[p]) && factor(word, p + 1).parity(k[p + 1]);
                add_to(out, k2, odd ? -c : c);
                break;
            }
            case Gen::White: {
                // c(v_i) = (-1)^{[i]} sqrt(-1) v_{-i}, with the Koszul sign of the factors on the left
                int left = 0;
                for (int q = 0; q < p; ++q) left += factor(word, q).parity(k[q]);
                const int x = signed_index(k[p], n_);
                GR s = GR::i();
                if (x < 0) s = -s;
                if (left % 2) s = -s;
                TKey k2 = k;
                k2[p] = basis_index(-x, n_);
                add_to(out, k2, s * c);
                break;
            }
            case Gen::Black:
                for (const auto& [k2, c2] : omega(word, static_cast<std::size_t>(p), k)) add_to(out, k2, c * c2);
                break;
        }
    }
    return out;
}

TVec Psi::apply(const Layers& ls, const Word& word, TVec v) {
    Word cur = word;
    for (const auto& l : ls) {
        v = apply_layer(l, cur, v);
        cur = aobc::apply_layer(l, cur);
    }
    return v;
}

TVec Psi::apply(const Expr& e, const TVec& v) {
    TVec out;
    for (const auto& t : e.terms) {
        if (!t.coeff.is_constant()) throw std::invalid_argument("Psi: coefficient is not a constant: " + t.coeff.str());
        const GR c = t.coeff.constant_term();
        for (const auto& [k, x] : apply(t.layers, e.bottom, v)) add_to(out, k, c * x);
    }
    return out;
}

TVec Psi::apply(const Morphism& m, const TVec& v) { return apply(to_expr(m), v); }

std::vector<TKey> Psi::basis(const Word& word) {
    auto md = m_->dimension();
    if (!md) throw std::invalid_argument("Psi::basis needs a finite-dimensional module");
    std::vector<TKey> out{{}};
    for (std::size_t p = 0; p <= word.size(); ++p) {
        const int d = p == word.size() ? *md : 2 * n_;
        std::vector<TKey> next;
        for (const auto& k : out)
            for (int b = 0; b < d; ++b) {
                TKey k2 = k;
                k2.push_back(b);
                next.push_back(k2);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::vector<GR>> Psi::matrix(const Expr& e) {
    const auto cols = basis(e.bottom);
    const auto rows = basis(e.top);
    std::map<TKey, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    std::vector<std::vector<GR>> out(rows.size(), std::vector<GR>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [k, c] : apply(e, TVec{{cols[j], GR(1)}})) out[row_of.at(k)][j] = c;
    return out;
}

std::vector<std::vector<GR>> Psi::matrix(const Morphism& m) { return matrix(to_expr(m)); }

std::vector<FunctorCheck> verify_functor(int n, std::shared_ptr<QModule> m) {
    Psi psi(n, std::move(m));
    std::vector<FunctorCheck> out;
    for (const auto& rel : engine_relations()) {
        const Expr l = parse_expr(rel.lhs), r = parse_expr(rel.rhs);
        FunctorCheck c{rel.id};
        c.raw = psi.matrix(l) == psi.matrix(r);
        c.normalized = psi.matrix(normalize(l)) == psi.matrix(normalize(r));
        out.push_back(c);
    }
    return out;
}

std::size_t rank(std::vector<std::vector<GR>> rows) {
    std::size_t r = 0;
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const GR inv = GR(1) / rows[r][c];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const GR f = rows[i][c] * inv;
            for (std::size_t k = c; k < ncols; ++k)
                if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

std::size_t independence_rank(const std::vector<TVec>& vectors) {
    std::map<TKey, std::size_t> col;
    for (const auto& v : vectors)
        for (const auto& [k, c] : v) col.emplace(k, 0);
    std::size_t idx = 0;
    for (auto& [k, i] : col) i = idx++;
    std::vector<std::vector<GR>> rows;
    for (const auto& v : vectors) {
        std::vector<GR> row(col.size());
        for (const auto& [k, c] : v) row[col.at(k)] = c;
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows));
}

}  // namespace aobc
