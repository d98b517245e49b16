#include "aobc/walled.hpp"

#include "json.hpp"
#include <sstream>
#include <stdexcept>

namespace aobc {

namespace {

struct Token {
    enum Kind { S, C, X, SB, CB, XB, E, W, WB } kind;
    unsigned idx = 0;
};

Token parse_token(const std::string& tok) {
    auto number = [&](std::size_t from) -> unsigned {
        if (from >= tok.size()) throw std::invalid_argument("missing index in token '" + tok + "'");
        for (std::size_t i = from; i < tok.size(); ++i)
            if (tok[i] < '0' || tok[i] > '9') throw std::invalid_argument("bad token '" + tok + "'");
        return static_cast<unsigned>(std::stoul(tok.substr(from)));
    };
    if (tok == "x1") return {Token::X, 1};
    if (tok == "xb1") return {Token::XB, 1};
    if (tok == "e1") return {Token::E, 1};
    if (tok.rfind("sb", 0) == 0) return {Token::SB, number(2)};
    if (tok.rfind("cb", 0) == 0) return {Token::CB, number(2)};
    if (tok.rfind("wb", 0) == 0) return {Token::WB, number(2)};
    if (tok[0] == 's') return {Token::S, number(1)};
    if (tok[0] == 'c') return {Token::C, number(1)};
    if (tok[0] == 'w') return {Token::W, number(1)};
    throw std::invalid_argument("unknown generator '" + tok + "'");
}

void check_token(const Token& k, const std::string& tok, unsigned r, unsigned t) {
    auto bad = [&] { throw std::invalid_argument("generator '" + tok + "' out of range for r=" + std::to_string(r) +
                                                 ", t=" + std::to_string(t)); };
    switch (k.kind) {
        case Token::S: if (k.idx < 1 || k.idx + 1 > r) bad(); break;
        case Token::C: if (k.idx < 1 || k.idx > r) bad(); break;
        case Token::X: if (r < 1) bad(); break;
        case Token::SB: if (k.idx < 1 || k.idx + 1 > t) bad(); break;
        case Token::CB: if (k.idx < 1 || k.idx > t) bad(); break;
        case Token::XB: if (t < 1) bad(); break;
        case Token::E: if (r < 1 || t < 1) bad(); break;
        case Token::W: if (k.idx % 2 == 0) bad(); break;
        case Token::WB: if (k.idx < 1) bad(); break;
    }
}

Word walled_object(unsigned r, unsigned t) {
    Word w(t, Ori::Down);
    w.insert(w.end(), r, Ori::Up);
    return w;
}

// Layers taking `w` to itself with the letter at p dragged to the right edge, `mid` applied there, and back.
Layers detour(const Word& w, int p, const Layers& mid) {
    const int n = static_cast<int>(w.size());
    Layers out;
    Word cur = w;
    auto add = [&](const Layers& ls) {
        for (const auto& l : ls) {
            cur = apply_layer(l, cur);
            out.push_back(l);
        }
    };
    for (int q = p; q + 1 < n; ++q) add(typed_crossing(cur, q));
    add(mid);
    for (int q = n - 2; q >= p; --q) add(typed_crossing(cur, q));
    return out;
}

Scalar central_value(const Token& k, const std::optional<DeltaSpec>& delta) {
    if (k.kind == Token::W) return delta ? Scalar(-delta->get(k.idx)) : -Scalar::bubble(k.idx);
    if (k.idx % 2 == 0) return Scalar();
    return delta ? Scalar(delta_prime(*delta, k.idx)) : delta_prime_formal(k.idx);
}

Expr phi_expr(const Token& k, unsigned r, unsigned t, const std::optional<DeltaSpec>& delta) {
    const Word w = walled_object(r, t);
    const int n = static_cast<int>(r + t);
    const int T = static_cast<int>(t);
    const Scalar sqrtm1(GR::i());
    switch (k.kind) {
        case Token::C: return Expr::atom(w, {{Gen::White, n - static_cast<int>(k.idx)}}, sqrtm1);
        case Token::CB: return Expr::atom(w, {{Gen::White, T - static_cast<int>(k.idx)}}, sqrtm1);
        case Token::S: return Expr::atom(w, {{Gen::Cross, n - static_cast<int>(k.idx) - 1}});
        case Token::SB: return Expr::atom(w, typed_crossing(w, T - static_cast<int>(k.idx) - 1));
        case Token::X: return Expr::atom(w, {{Gen::Black, n - 1}}, Scalar(-1));
        case Token::XB: return Expr::atom(w, detour(w, T - 1, {{Gen::Black, n - 1}}));
        case Token::E: {
            // bring the rightmost up strand next to the wall, cap it with the last down strand,
            // then reopen with a cup and carry the up strand back
            Layers ls;
            Word cur = w;
            auto add = [&](const Layer& l) {
                cur = apply_layer(l, cur);
                ls.push_back(l);
            };
            for (int q = n - 2; q >= T; --q) add({Gen::Cross, q});
            add({Gen::Cap, T - 1});
            for (const auto& l : shifted(gen::rcup().terms[0].layers, T - 1)) add(l);
            for (int q = T; q + 1 < n; ++q) add({Gen::Cross, q});
            return Expr::atom(w, ls);
        }
        case Token::W:
        case Token::WB: return Expr::atom(w, {}, central_value(k, delta));
    }
    throw std::logic_error("unreachable");
}

Morphism finish(Morphism m, const std::optional<DeltaSpec>& delta) { return delta ? m.specialized(*delta) : m; }

WordCombination word(const std::string& s, long c = 1) { return {WordTerm{GR(c), parse_walled_word(s)}}; }
WordCombination operator+(WordCombination a, const WordCombination& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
WordCombination none() { return {}; }

std::string idx(const std::string& g, unsigned i) { return g + std::to_string(i); }
std::string repeat(const std::string& g, unsigned k) {
    std::string s;
    for (unsigned i = 0; i < k; ++i) s += (i ? " " : "") + g;
    return s;
}
std::string cat(std::initializer_list<std::string> parts) {
    std::string s;
    for (const auto& p : parts)
        if (!p.empty()) s += (s.empty() ? "" : " ") + p;
    return s;
}

// Relations of the (affine) Hecke-Clifford algebra on one side of the wall.
// bar selects the dual side: c^2 = +1 and x2 = s1 x1 s1 - (1 + c1 c2) s1.
void hecke_clifford(std::vector<RelationInstance>& out, unsigned m, bool bar) {
    const std::string S = bar ? "sb" : "s", C = bar ? "cb" : "c", X = bar ? "xb1" : "x1";
    const std::string tag = bar ? "dual-" : "";
    auto add = [&](std::string id, WordCombination l, WordCombination r) {
        out.push_back({tag + std::move(id), std::move(l), std::move(r)});
    };
    for (unsigned i = 1; i < m; ++i) {
        add("s-square[" + std::to_string(i) + "]", word(cat({idx(S, i), idx(S, i)})), word("1"));
        if (i + 1 < m)
            add("braid[" + std::to_string(i) + "]", word(cat({idx(S, i), idx(S, i + 1), idx(S, i)})),
                word(cat({idx(S, i + 1), idx(S, i), idx(S, i + 1)})));
        for (unsigned j = i + 2; j < m; ++j)
            add("s-far-commute[" + std::to_string(i) + "," + std::to_string(j) + "]",
                word(cat({idx(S, i), idx(S, j)})), word(cat({idx(S, j), idx(S, i)})));
    }
    for (unsigned i = 1; i <= m; ++i) {
        add("c-square[" + std::to_string(i) + "]", word(cat({idx(C, i), idx(C, i)})), word("1", bar ? 1 : -1));
        for (unsigned j = i + 1; j <= m; ++j)
            add("c-anticommute[" + std::to_string(i) + "," + std::to_string(j) + "]",
                word(cat({idx(C, i), idx(C, j)})), word(cat({idx(C, j), idx(C, i)}), -1));
    }
    // s_i c_j s_i = c_{(j) s_i}
    for (unsigned i = 1; i < m; ++i)
        for (unsigned j = 1; j <= m; ++j) {
            const unsigned k = j == i ? i + 1 : j == i + 1 ? i : j;
            add("s-conjugates-c[" + std::to_string(i) + "," + std::to_string(j) + "]",
                word(cat({idx(S, i), idx(C, j), idx(S, i)})), word(idx(C, k)));
        }
    for (unsigned i = 1; i <= m; ++i)
        add("x-c[" + std::to_string(i) + "]", word(cat({X, idx(C, i)})), word(cat({idx(C, i), X}), i == 1 ? -1 : 1));
    for (unsigned j = 2; j < m; ++j)
        add("x-s[" + std::to_string(j) + "]", word(cat({idx(S, j), X})), word(cat({X, idx(S, j)})));
    if (m >= 2) {
        // x2 = s1 x1 s1 - s1 -+ c1 c2 s1
        const long cc = bar ? -1 : 1;
        auto x2_times = [&](const std::string& pre, const std::string& post) {
            return word(cat({pre, S + "1", X, S + "1", post})) + word(cat({pre, S + "1", post}), -1) +
                   word(cat({pre, C + "1", C + "2", S + "1", post}), cc);
        };
        add("x1-x2-commute", x2_times(X, ""), x2_times("", X));
    }
}

}  // namespace

WalledWord parse_walled_word(const std::string& s) {
    std::string t = s;
    for (char& ch : t)
        if (ch == '*' || ch == '.' || ch == '\t') ch = ' ';
    std::istringstream is(t);
    WalledWord w;
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        parse_token(tok);
        w.push_back(tok);
    }
    return w;
}

std::string walled_word_str(const WalledWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& g : w) s += (s.empty() ? "" : " ") + g;
    return s;
}

void check_walled_word(const WalledWord& w, unsigned r, unsigned t) {
    for (const auto& g : w) check_token(parse_token(g), g, r, t);
}

int walled_parity(const WalledWord& w) {
    int p = 0;
    for (const auto& g : w) {
        auto k = parse_token(g).kind;
        if (k == Token::C || k == Token::CB) ++p;
    }
    return p % 2;
}

std::vector<RelationInstance> relation_table(unsigned r, unsigned t, unsigned kmax) {
    std::vector<RelationInstance> out;
    hecke_clifford(out, r, false);
    hecke_clifford(out, t, true);
    auto add = [&](std::string id, WordCombination l, WordCombination rr) {
        out.push_back({std::move(id), std::move(l), std::move(rr)});
    };
    auto ij = [](const char* name, unsigned i, unsigned j) {
        return std::string(name) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    };
    auto one = [](const char* name, unsigned i) { return std::string(name) + "[" + std::to_string(i) + "]"; };
    // the two sides commute (super-commute for the odd generators)
    for (unsigned i = 1; i <= r; ++i)
        for (unsigned j = 1; j + 1 <= t; ++j)
            add(ij("c-sb-commute", i, j), word(cat({idx("sb", j), idx("c", i)})), word(cat({idx("c", i), idx("sb", j)})));
    for (unsigned i = 1; i + 1 <= r; ++i)
        for (unsigned j = 1; j <= t; ++j)
            add(ij("s-cb-commute", i, j), word(cat({idx("s", i), idx("cb", j)})), word(cat({idx("cb", j), idx("s", i)})));
    for (unsigned i = 1; i <= r; ++i)
        for (unsigned j = 1; j <= t; ++j)
            add(ij("c-cb-anticommute", i, j), word(cat({idx("c", i), idx("cb", j)})),
                word(cat({idx("cb", j), idx("c", i)}), -1));
    for (unsigned i = 1; i + 1 <= r; ++i)
        for (unsigned j = 1; j + 1 <= t; ++j)
            add(ij("s-sb-commute", i, j), word(cat({idx("s", i), idx("sb", j)})), word(cat({idx("sb", j), idx("s", i)})));
    if (r >= 1 && t >= 1) {
        add("e-c1-right", word("e1 c1"), word("e1 cb1"));
        add("e-c1-left", word("c1 e1"), word("cb1 e1"));
        add("e-square", word("e1 e1"), none());
        if (r >= 2) add("e-s1-e", word("e1 s1 e1"), word("e1"));
        if (t >= 2) add("e-sb1-e", word("e1 sb1 e1"), word("e1"));
        for (unsigned i = 2; i < r; ++i) add(one("e-s-commute", i), word(cat({idx("s", i), "e1"})), word(cat({"e1", idx("s", i)})));
        for (unsigned i = 2; i < t; ++i)
            add(one("e-sb-commute", i), word(cat({idx("sb", i), "e1"})), word(cat({"e1", idx("sb", i)})));
        if (r >= 2 && t >= 2) {
            add("e-s-sb-e-right", word("e1 s1 sb1 e1 s1"), word("e1 s1 sb1 e1 sb1"));
            add("e-s-sb-e-left", word("s1 e1 s1 sb1 e1"), word("sb1 e1 s1 sb1 e1"));
        }
        for (unsigned i = 2; i <= r; ++i) add(one("e-c-commute", i), word(cat({idx("c", i), "e1"})), word(cat({"e1", idx("c", i)})));
        for (unsigned i = 2; i <= t; ++i)
            add(one("e-cb-commute", i), word(cat({idx("cb", i), "e1"})), word(cat({"e1", idx("cb", i)})));
        add("e-c1-e", word("e1 c1 e1"), none());
        add("e-cb1-e", word("e1 cb1 e1"), none());
        // affine relations at the wall; the one involving a second cap-cup is not included
        add("e-dots-cancel-right", word("e1 x1") + word("e1 xb1"), none());
        add("e-dots-cancel-left", word("x1 e1") + word("xb1 e1"), none());
        if (r >= 2) add("e-x2-commute", word("e1 s1 x1 s1"), word("s1 x1 s1 e1"));
        if (t >= 2) add("e-xb2-commute", word("e1 sb1 xb1 sb1"), word("sb1 xb1 sb1 e1"));
        for (unsigned k = 0; k <= kmax; ++k) {
            add(one("e-odd-power-e", 2 * k + 1), word(cat({"e1", repeat("x1", 2 * k + 1), "e1"})),
                word(cat({idx("w", 2 * k + 1), "e1"})));
            add(one("e-even-power-e", 2 * k), word(cat({"e1", repeat("x1", 2 * k), "e1"})), none());
        }
        for (unsigned k = 1; k <= 2 * kmax + 1; ++k)
            add(one("e-bar-power-e", k), word(cat({"e1", repeat("xb1", k), "e1"})), word(cat({idx("wb", k), "e1"})));
        for (unsigned i = 1; i <= t; ++i) add(one("x-cb-commute", i), word(cat({"x1", idx("cb", i)})), word(cat({idx("cb", i), "x1"})));
        for (unsigned i = 1; i <= r; ++i) add(one("xb-c-commute", i), word(cat({"xb1", idx("c", i)})), word(cat({idx("c", i), "xb1"})));
        for (unsigned i = 1; i < t; ++i) add(one("x-sb-commute", i), word(cat({"x1", idx("sb", i)})), word(cat({idx("sb", i), "x1"})));
        for (unsigned i = 1; i < r; ++i) add(one("xb-s-commute", i), word(cat({"xb1", idx("s", i)})), word(cat({idx("s", i), "xb1"})));
    }
    return out;
}

std::string relation_table_json(const std::vector<RelationInstance>& table) {
    auto side = [](const WordCombination& w) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& t : w) a.push_back({{"coeff", t.coeff.str()}, {"word", walled_word_str(t.word)}});
        return a;
    };
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : table) j.push_back({{"id", r.id}, {"lhs", side(r.lhs)}, {"rhs", side(r.rhs)}});
    return j.dump(2);
}

std::vector<RelationInstance> relation_table_from_json(const std::string& s) {
    const auto j = nlohmann::json::parse(s);
    auto side = [](const nlohmann::json& a) {
        WordCombination w;
        for (const auto& t : a)
            w.push_back({t.contains("coeff") ? GR::parse(t.at("coeff").get<std::string>()) : GR(1),
                         parse_walled_word(t.at("word").get<std::string>())});
        return w;
    };
    std::vector<RelationInstance> out;
    for (const auto& r : j) out.push_back({r.at("id").get<std::string>(), side(r.at("lhs")), side(r.at("rhs"))});
    return out;
}

Morphism phi(const std::string& g, unsigned r, unsigned t, const std::optional<DeltaSpec>& delta) {
    const Token k = parse_token(g);
    check_token(k, g, r, t);
    return finish(normalize(phi_expr(k, r, t, delta)), delta);
}

Morphism phi_word(const WordCombination& w, unsigned r, unsigned t, const std::optional<DeltaSpec>& delta) {
    const Word obj = walled_object(r, t);
    Expr total(obj, obj);
    for (const auto& term : w) {
        check_walled_word(term.word, r, t);
        Expr e = gen::id(obj);
        for (const auto& g : term.word) e = compose(e, phi_expr(parse_token(g), r, t, delta));
        total += Scalar(term.coeff) * e;
    }
    return finish(normalize(total), delta);
}

bool PresentationReport::all_pass() const {
    for (const auto& v : {&relations, &extra})
        for (const auto& x : *v)
            if (!x.pass) return false;
    return true;
}

std::string PresentationReport::to_json() const {
    auto list = [](const std::vector<RelationResult>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& x : v) {
            nlohmann::json o{{"id", x.id}, {"pass", x.pass}};
            if (!x.pass) o["residual"] = x.residual;
            a.push_back(o);
        }
        return a;
    };
    nlohmann::json j{{"r", r}, {"t", t}, {"all_pass", all_pass()}, {"relations", list(relations)}, {"extra", list(extra)}};
    return j.dump(2);
}

namespace {

// phi of sum_i p_i * prefix var^i, with coefficients possibly involving bubbles
Morphism phi_poly(const TPoly& p, const std::string& prefix, const std::string& var, unsigned r, unsigned t,
                  const std::optional<DeltaSpec>& delta) {
    const Word obj = walled_object(r, t);
    Morphism out(obj, obj);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        const WordCombination w{{GR(1), parse_walled_word(cat({prefix, repeat(var, static_cast<unsigned>(i))}))}};
        out += p[i] * phi_word(w, r, t, delta);
    }
    return finish(out, delta);
}

RelationResult result(std::string id, const Morphism& m) {
    return {std::move(id), m.is_zero(), m.is_zero() ? std::string() : m.str()};
}

}  // namespace

Morphism g_identity_residual(const TPoly& f, unsigned r, unsigned t, const std::optional<DeltaSpec>& delta) {
    const TPoly g = delta ? compute_g(f, *delta) : compute_g(f);
    const long sign = ((f.size() - 1) % 2) ? -1 : 1;
    Morphism lhs = phi_poly(f, "e1", "x1", r, t, delta);
    return finish(Scalar(sign) * lhs - phi_poly(g, "e1", "xb1", r, t, delta), delta);
}

PresentationReport verify_presentation(unsigned r, unsigned t, const PresentationOptions& opt) {
    PresentationReport rep;
    rep.r = r;
    rep.t = t;
    const auto table = opt.table ? *opt.table : relation_table(r, t, opt.kmax);
    for (const auto& rel : table) {
        WordCombination diff = rel.lhs;
        for (auto term : rel.rhs) {
            term.coeff = -term.coeff;
            diff.push_back(std::move(term));
        }
        try {
            rep.relations.push_back(result(rel.id, phi_word(diff, r, t, opt.delta)));
        } catch (const std::exception& e) {
            rep.relations.push_back({rel.id, false, std::string("error: ") + e.what()});
        }
    }
    if (r >= 1 && t >= 1) {
        // the bubble parameters seen through the diagram calculus, independent of the wb tokens
        const Morphism e1 = phi("e1", r, t, opt.delta);
        for (unsigned k = 1; k <= 2 * opt.kmax + 1; ++k) {
            Scalar expect;
            if (k % 2) expect = opt.delta ? Scalar(delta_prime(*opt.delta, k)) : delta_prime_formal(k);
            const Morphism lhs = phi_word(word(cat({"e1", repeat("xb1", k), "e1"})), r, t, opt.delta);
            rep.extra.push_back(result("bubble-parameter[" + std::to_string(k) + "]", finish(lhs - expect * e1, opt.delta)));
        }
        if (opt.f) rep.extra.push_back(result("g-identity", g_identity_residual(*opt.f, r, t, opt.delta)));
    }
    if (opt.f) {
        const Cyclotomic cyc = Cyclotomic::make(*opt.f, opt.delta);
        if (r >= 1)
            rep.extra.push_back(result("cyclotomic-f(x1)", cyclotomic_reduce(phi_poly(cyc.f, "", "x1", r, t, opt.delta), cyc)));
        if (t >= 1)
            rep.extra.push_back(result("cyclotomic-g(xb1)", cyclotomic_reduce(phi_poly(cyc.g, "", "xb1", r, t, opt.delta), cyc)));
    }
    return rep;
}

std::uint64_t hom_dimension(unsigned r, unsigned t, unsigned ell) {
    std::uint64_t d = 1;
    for (unsigned i = 1; i <= r + t; ++i) d *= static_cast<std::uint64_t>(i) * 2 * ell;
    return d;
}

}  // namespace aobc
