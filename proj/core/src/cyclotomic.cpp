#include <map>
#include <stdexcept>

#include "aobc/engine.hpp"

namespace aobc {

namespace {

Morphism sigma_one(const NormalDiagram& d, const Scalar& c, Direction dir) {
    const Word up{Ori::Up}, down{Ori::Down};
    const Layers body = shifted(canonical_layers(d), 2);
    Layers ls;
    Word bottom;
    if (dir == Direction::Up) {
        if (d.bottom != up || d.top != up) throw std::invalid_argument("sigma up expects an endomorphism of ^");
        bottom = down;
        ls = {{Gen::Cup, 1}, {Gen::InvCross, 1}};
        Layers dd = typed_crossing(parse_word("vv^"), 0);
        ls.insert(ls.end(), dd.begin(), dd.end());
        ls.insert(ls.end(), body.begin(), body.end());
        ls.push_back({Gen::Cap, 1});
    } else {
        if (d.bottom != down || d.top != down) throw std::invalid_argument("sigma down expects an endomorphism of v");
        bottom = up;
        ls = {{Gen::Cup, 1}, {Gen::Cross, 0}};
        ls.insert(ls.end(), body.begin(), body.end());
        ls.push_back({Gen::InvCross, 1});
        ls.push_back({Gen::Cap, 1});
    }
    return normalize(Expr::atom(bottom, ls, c));
}

// Split on top-level '+'/'-' keeping the sign with each piece.
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == ' ') continue;
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-') && !cur.empty() && cur.back() != '^' && cur.back() != '*' &&
            cur.back() != '/') {
            out.push_back(cur);
            cur.clear();
        }
        cur += ch;
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

Morphism sigma(const Morphism& m, Direction dir) {
    Word b = (dir == Direction::Up) ? Word{Ori::Down} : Word{Ori::Up};
    Morphism r(b, b);
    for (const auto& [d, c] : m.terms()) r += sigma_one(d, c, dir);
    return r;
}

TPoly parse_tpoly(const std::string& s, const std::string& var, const std::string& bubble_symbol) {
    TPoly p;
    auto add = [&](unsigned e, const Scalar& c) {
        if (p.size() <= e) p.resize(e + 1);
        p[e] += c;
    };
    for (std::string term : split_terms(s)) {
        bool neg = false;
        while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            neg ^= term[0] == '-';
            term.erase(0, 1);
        }
        if (term.empty()) throw std::invalid_argument("empty term in polynomial: " + s);
        unsigned e = 0;
        std::string coeff;
        std::size_t start = 0;
        int depth = 0;
        for (std::size_t i = 0; i <= term.size(); ++i) {
            if (i < term.size()) {
                if (term[i] == '(') ++depth;
                if (term[i] == ')') --depth;
                if (term[i] != '*' || depth != 0) continue;
            }
            std::string f = term.substr(start, i - start);
            start = i + 1;
            if (f == var) {
                e += 1;
            } else if (f.rfind(var + "^", 0) == 0) {
                e += static_cast<unsigned>(std::stoul(f.substr(var.size() + 1)));
            } else {
                coeff += (coeff.empty() ? "" : "*") + f;
            }
        }
        Scalar c = coeff.empty() ? Scalar(1) : Scalar::parse(coeff, bubble_symbol);
        add(e, neg ? -c : c);
    }
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

std::string tpoly_str(const TPoly& p, const std::string& var, const std::string& bubble_symbol) {
    std::vector<std::string> pieces;
    for (std::size_t i = p.size(); i-- > 0;) {
        const Scalar& c = p[i];
        if (c.is_zero()) continue;
        if (i == 0) {
            pieces.push_back(c.str(bubble_symbol));
            continue;
        }
        std::string mono = var + (i > 1 ? "^" + std::to_string(i) : "");
        if (c == Scalar(1))
            pieces.push_back(mono);
        else if (c == Scalar(-1))
            pieces.push_back("-" + mono);
        else if (c.terms().size() == 1)
            pieces.push_back(c.str(bubble_symbol) + "*" + mono);
        else
            pieces.push_back("(" + c.str(bubble_symbol) + ")*" + mono);
    }
    if (pieces.empty()) return "0";
    std::string out = pieces[0];
    for (std::size_t k = 1; k < pieces.size(); ++k) {
        if (pieces[k][0] == '-')
            out += " - " + pieces[k].substr(1);
        else
            out += " + " + pieces[k];
    }
    return out;
}

TPoly compute_g(const TPoly& f) {
    if (f.empty() || !(f.back() == Scalar(1))) throw std::invalid_argument("compute_g: f must be monic");
    const std::size_t ell = f.size() - 1;
    TPoly g(ell + 1);
    for (std::size_t i = 0; i <= ell; ++i) {
        g[i] = f[i];
        for (std::size_t k = i + 1; k <= ell; ++k) g[i] += f[k] * Scalar::bubble(static_cast<unsigned>(k - i - 1));
    }
    return g;
}

TPoly compute_g(const TPoly& f, const DeltaSpec& delta) {
    TPoly g = compute_g(f);
    for (auto& c : g) c = Scalar(specialize(c, delta));
    return g;
}

Cyclotomic Cyclotomic::make(const TPoly& f, std::optional<DeltaSpec> delta) {
    if (f.size() < 2) throw std::invalid_argument("cyclotomic polynomial must have degree at least 1");
    Cyclotomic c;
    c.f = f;
    c.g = compute_g(f);
    if (delta) {
        for (auto& a : c.f) a = Scalar(specialize(a, *delta));
        for (auto& a : c.g) a = Scalar(specialize(a, *delta));
    }
    c.delta = std::move(delta);
    return c;
}

namespace {

// Remainder of t^m modulo the monic polynomial p.
TPoly power_mod(unsigned m, const TPoly& p) {
    const std::size_t ell = p.size() - 1;
    TPoly r(m + 1);
    r[m] = Scalar(1);
    for (std::size_t k = m; k >= ell && k <= m; --k) {
        if (r[k].is_zero()) continue;
        Scalar lead = r[k];
        for (std::size_t i = 0; i <= ell; ++i) r[k - ell + i] -= lead * p[i];
        if (k == ell) break;
    }
    r.resize(std::min<std::size_t>(r.size(), ell));
    return r;
}

class Reducer {
public:
    explicit Reducer(const Cyclotomic& c) : cyc_(c) {}

    Morphism reduce(const NormalDiagram& d) {
        auto it = memo_.find(d);
        if (it != memo_.end()) return it->second;
        Morphism out = compute(d);
        memo_.emplace(d, out);
        return out;
    }

private:
    const Cyclotomic& cyc_;
    std::map<NormalDiagram, Morphism> memo_;

    Morphism finish(Morphism m) const { return cyc_.delta ? m.specialized(*cyc_.delta) : m; }

    // The diagram with strand k's black dots replaced by a detour to the right edge carrying poly(x).
    Expr detoured(const NormalDiagram& d, std::size_t k, const TPoly& poly) const {
        NormalDiagram bare = d;
        bare.strands[k].black = 0;
        const Layers body = canonical_layers(bare);
        const bool at_bottom = d.is_bottom(d.strands[k].in);
        const Word w = at_bottom ? d.bottom : d.top;
        const int n = static_cast<int>(w.size());
        const int p = at_bottom ? d.strands[k].in : d.strands[k].in - d.n_bottom();
        Expr e(d.bottom, d.top);
        for (std::size_t m = 0; m < poly.size(); ++m) {
            if (poly[m].is_zero()) continue;
            Layers det;
            Word cur = w;
            auto add = [&](const Layers& ls) {
                for (const auto& l : ls) {
                    cur = apply_layer(l, cur);
                    det.push_back(l);
                }
            };
            for (int q = p; q + 1 < n; ++q) add(typed_crossing(cur, q));
            for (std::size_t j = 0; j < m; ++j) det.push_back({Gen::Black, n - 1});
            for (int q = n - 2; q >= p; --q) add(typed_crossing(cur, q));
            Layers ls;
            if (at_bottom) {
                ls = det;
                ls.insert(ls.end(), body.begin(), body.end());
            } else {
                ls = body;
                ls.insert(ls.end(), det.begin(), det.end());
            }
            e.terms.push_back({poly[m], std::move(ls)});
        }
        return e;
    }

    Morphism compute(const NormalDiagram& d) {
        const unsigned ell = cyc_.ell();
        std::size_t k = d.strands.size();
        for (std::size_t j = 0; j < d.strands.size() && k == d.strands.size(); ++j)
            if (d.strands[j].black >= ell) k = j;
        if (k == d.strands.size()) return Morphism::basis(d);
        const unsigned m = d.strands[k].black;
        const Ori o = d.letter(d.strands[k].in);
        const TPoly& rel = (o == Ori::Up) ? cyc_.f : cyc_.g;
        TPoly xm(m + 1);
        xm[m] = Scalar(1);
        // D = arc(x^m) - (arc(x^m) - D) and arc(x^m) = arc(x^m mod rel) in the quotient
        Morphism rest = normalize(detoured(d, k, xm));
        rest -= Morphism::basis(d);
        Morphism target = finish(normalize(detoured(d, k, power_mod(m, rel)))) - finish(rest);
        Morphism out(d.bottom, d.top);
        for (const auto& [e, c] : target.terms()) {
            if (e == d) throw std::logic_error("cyclotomic reduction did not lower the dot count");
            out += c * reduce(e);
        }
        return finish(out);
    }
};

}  // namespace

Morphism cyclotomic_reduce(const Morphism& m, const Cyclotomic& cyc) {
    Reducer r(cyc);
    Morphism out(m.bottom(), m.top());
    for (const auto& [d, c] : m.terms()) out += c * r.reduce(d);
    return cyc.delta ? out.specialized(*cyc.delta) : out;
}

}  // namespace aobc
