#include "aobc/engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace aobc {

bool is_dot(Gen g) { return g == Gen::Black || g == Gen::White || g == Gen::Mark; }

Word apply_layer(const Layer& l, const Word& w) {
    const int n = static_cast<int>(w.size());
    const int q = l.pos;
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("layer mismatch (") + what + ") at " + std::to_string(q) + " on " +
                                    word_str(w));
    };
    Word r = w;
    switch (l.gen) {
        case Gen::Cup:
            if (q < 0 || q > n) fail("cup");
            r.insert(r.begin() + q, {Ori::Up, Ori::Down});
            break;
        case Gen::Cap:
            if (q < 0 || q + 1 >= n || w[q] != Ori::Down || w[q + 1] != Ori::Up) fail("cap");
            r.erase(r.begin() + q, r.begin() + q + 2);
            break;
        case Gen::Cross:
            if (q < 0 || q + 1 >= n || w[q] != Ori::Up || w[q + 1] != Ori::Up) fail("crossing");
            break;
        case Gen::InvCross:
            if (q < 0 || q + 1 >= n || w[q] != Ori::Up || w[q + 1] != Ori::Down) fail("inverse crossing");
            std::swap(r[q], r[q + 1]);
            break;
        default:
            if (q < 0 || q >= n) fail("dot");
    }
    return r;
}

Word apply_layers(const Layers& ls, Word w) {
    for (const auto& l : ls) w = apply_layer(l, w);
    return w;
}

Layers shifted(Layers ls, int by) {
    for (auto& l : ls) l.pos += by;
    return ls;
}

Layers typed_crossing(const Word& w, int q) {
    Ori a = w.at(q), b = w.at(q + 1);
    if (a == Ori::Up && b == Ori::Up) return {{Gen::Cross, q}};
    if (a == Ori::Up && b == Ori::Down) return {{Gen::InvCross, q}};
    if (a == Ori::Down && b == Ori::Up) return {{Gen::Cup, q + 2}, {Gen::Cross, q + 1}, {Gen::Cap, q}};
    return {{Gen::Cup, q + 2}, {Gen::Cup, q + 3}, {Gen::Cross, q + 2}, {Gen::Cap, q + 1}, {Gen::Cap, q}};
}

// ---------------------------------------------------------------- Morphism

Morphism Morphism::basis(const NormalDiagram& d, const Scalar& c) {
    Morphism m(d.bottom, d.top);
    m.add(d, c);
    return m;
}

Morphism Morphism::identity(const Word& w) { return basis(identity_diagram(w)); }

Scalar Morphism::coeff(const NormalDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Scalar() : it->second;
}

int Morphism::parity() const {
    int p = -2;
    for (const auto& [d, c] : terms_) {
        int q = d.parity();
        if (p == -2) p = q;
        if (p != q) return -1;
    }
    return p == -2 ? 0 : p;
}

void Morphism::add(const NormalDiagram& d, const Scalar& c) {
    if (c.is_zero()) return;
    if (d.bottom != bottom_ || d.top != top_) throw std::invalid_argument("Morphism::add: diagram type mismatch");
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Morphism& Morphism::operator+=(const Morphism& o) {
    if (o.bottom_ != bottom_ || o.top_ != top_) throw std::invalid_argument("Morphism: adding different types");
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
    if (o.bottom_ != bottom_ || o.top_ != top_) throw std::invalid_argument("Morphism: subtracting different types");
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
}

Morphism& Morphism::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, v] : terms_) v *= c;
    return *this;
}

Morphism Morphism::operator-() const {
    Morphism r = *this;
    for (auto& [d, v] : r.terms_) v = -v;
    return r;
}

bool Morphism::operator==(const Morphism& o) const {
    return bottom_ == o.bottom_ && top_ == o.top_ && terms_ == o.terms_;
}

Morphism Morphism::specialized(const DeltaSpec& delta) const {
    Morphism r(bottom_, top_);
    for (const auto& [d, c] : terms_) r.add(d, Scalar(specialize(c, delta)));
    return r;
}

bool Morphism::is_specialized() const {
    for (const auto& [d, c] : terms_)
        if (!c.is_constant()) return false;
    return true;
}

std::string Morphism::to_json() const {
    using nlohmann::json;
    json j;
    j["bottom"] = word_str(bottom_);
    j["top"] = word_str(top_);
    j["terms"] = json::array();
    for (const auto& [d, c] : terms_)
        j["terms"].push_back({{"diagram", json::parse(diagram_to_json(d))}, {"coeff", c.str()}});
    return j.dump();
}

Morphism Morphism::from_json(const std::string& s) {
    using nlohmann::json;
    json j = json::parse(s);
    Morphism m(parse_word(j.at("bottom").get<std::string>()), parse_word(j.at("top").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        Scalar c = t.contains("coeff") ? Scalar::parse(t["coeff"].get<std::string>()) : Scalar(1);
        m.add(diagram_from_json(t.at("diagram").dump()), c);
    }
    return m;
}

std::string Morphism::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ")*[";
        for (std::size_t k = 0; k < d.strands.size(); ++k) {
            const auto& s = d.strands[k];
            if (k) os << ' ';
            os << d.endpoint_label(s.in) << "->" << d.endpoint_label(s.out);
            if (s.white) os << ":w";
            if (s.black) os << ":x" << s.black;
        }
        os << ']';
    }
    return os.str();
}

// ---------------------------------------------------------------- Expr

Expr Expr::atom(const Word& bottom, Layers layers, const Scalar& c) {
    Expr e(bottom, apply_layers(layers, bottom));
    e.terms.push_back({c, std::move(layers)});
    return e;
}

Expr& Expr::operator+=(const Expr& o) {
    if (terms.empty() && bottom.empty() && top.empty()) {
        bottom = o.bottom;
        top = o.top;
    }
    if (o.bottom != bottom || o.top != top) throw std::invalid_argument("Expr: adding different types");
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

Expr& Expr::operator*=(const Scalar& c) {
    for (auto& t : terms) t.coeff *= c;
    return *this;
}

namespace gen {
const Word kUp{Ori::Up}, kDown{Ori::Down}, kEmpty{};
Expr id(const Word& w) { return Expr::atom(w, {}); }
Expr lcup() { return Expr::atom(kEmpty, {{Gen::Cup, 0}}); }
Expr lcap() { return Expr::atom({Ori::Down, Ori::Up}, {{Gen::Cap, 0}}); }
Expr rcup() { return Expr::atom(kEmpty, {{Gen::Cup, 0}, {Gen::InvCross, 0}}); }
Expr rcap() { return Expr::atom({Ori::Up, Ori::Down}, {{Gen::InvCross, 0}, {Gen::Cap, 0}}); }
Expr cross() { return Expr::atom({Ori::Up, Ori::Up}, {{Gen::Cross, 0}}); }
Expr crossinv() { return Expr::atom({Ori::Up, Ori::Down}, {{Gen::InvCross, 0}}); }
Expr tcross() {
    Word w{Ori::Down, Ori::Up};
    return Expr::atom(w, typed_crossing(w, 0));
}
Expr dcross() {
    Word w{Ori::Down, Ori::Down};
    return Expr::atom(w, typed_crossing(w, 0));
}
Expr black(Ori o) { return Expr::atom(Word{o}, {{Gen::Black, 0}}); }
Expr white(Ori o) { return Expr::atom(Word{o}, {{Gen::White, 0}}); }
Expr black_down_def() { return Expr::atom(kDown, {{Gen::Cup, 1}, {Gen::Black, 1}, {Gen::Cap, 0}}); }
Expr white_down_def() { return Expr::atom(kDown, {{Gen::Cup, 1}, {Gen::White, 1}, {Gen::Cap, 0}}); }
Expr bubble(unsigned k) {
    Layers ls{{Gen::Cup, 0}, {Gen::InvCross, 0}};
    for (unsigned i = 0; i < k; ++i) ls.push_back({Gen::Black, 1});
    ls.push_back({Gen::Cap, 0});
    return Expr::atom(kEmpty, ls);
}
Expr cw_bubble(unsigned k) {
    Layers ls{{Gen::Cup, 0}};
    for (unsigned i = 0; i < k; ++i) ls.push_back({Gen::Black, 1});
    ls.push_back({Gen::InvCross, 0});
    ls.push_back({Gen::Cap, 0});
    return Expr::atom(kEmpty, ls);
}
}  // namespace gen

Expr compose(const Expr& f, const Expr& g) {
    if (f.bottom != g.top)
        throw std::invalid_argument("compose: interface mismatch " + word_str(g.top) + " vs " + word_str(f.bottom));
    Expr r(g.bottom, f.top);
    for (const auto& tg : g.terms)
        for (const auto& tf : f.terms) {
            Layers ls = tg.layers;
            ls.insert(ls.end(), tf.layers.begin(), tf.layers.end());
            r.terms.push_back({tg.coeff * tf.coeff, std::move(ls)});
        }
    return r;
}

// Bubble coefficients of the left factor are spelled out as loops sitting just right of it;
// they are not central once other strands stand to their right.
Expr tensor(const Expr& f, const Expr& g) {
    const int shift = static_cast<int>(f.bottom.size());
    Expr r(f.bottom + g.bottom, f.top + g.top);
    for (const auto& tf : f.terms)
        for (const auto& [mono, c] : tf.coeff.terms()) {
            Layers loops;
            for (std::size_t k = 0; k < mono.size(); ++k)
                for (std::uint32_t e = 0; e < mono[k]; ++e) {
                    Layers b = gen::bubble(static_cast<unsigned>(2 * k + 1)).terms[0].layers;
                    b = shifted(b, shift);
                    loops.insert(loops.end(), b.begin(), b.end());
                }
            for (const auto& tg : g.terms) {
                Layers ls = shifted(tg.layers, shift);
                ls.insert(ls.end(), loops.begin(), loops.end());
                ls.insert(ls.end(), tf.layers.begin(), tf.layers.end());
                r.terms.push_back({tg.coeff * Scalar(c), std::move(ls)});
            }
        }
    return r;
}

Expr power(const Expr& f, unsigned k) {
    if (f.bottom != f.top) throw std::invalid_argument("power: not an endomorphism");
    Expr r = gen::id(f.bottom);
    for (unsigned i = 0; i < k; ++i) r = compose(f, r);
    return r;
}

// ---------------------------------------------------------------- s-expression parser

namespace {

struct SNode {
    std::string atom;
    std::vector<SNode> kids;
    bool is_list = false;
};

SNode parse_sexpr(const std::string& s, std::size_t& i) {
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (i >= s.size()) throw std::invalid_argument("unexpected end of expression");
    SNode n;
    if (s[i] == '(') {
        n.is_list = true;
        ++i;
        for (;;) {
            skip();
            if (i >= s.size()) throw std::invalid_argument("missing ')'");
            if (s[i] == ')') {
                ++i;
                break;
            }
            n.kids.push_back(parse_sexpr(s, i));
        }
        return n;
    }
    if (s[i] == '"') {
        std::size_t j = s.find('"', i + 1);
        if (j == std::string::npos) throw std::invalid_argument("unterminated string");
        n.atom = s.substr(i + 1, j - i - 1);
        i = j + 1;
        return n;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '(' && s[j] != ')') ++j;
    n.atom = s.substr(i, j - i);
    i = j;
    return n;
}

Expr build(const SNode& n) {
    if (!n.is_list) {
        const std::string& a = n.atom;
        if (a == "id" || a == "id0") return gen::id({});
        if (a == "id1" || a == "idu" || a == "id^") return gen::id({Ori::Up});
        if (a == "idd" || a == "idv") return gen::id({Ori::Down});
        if (a.rfind("id:", 0) == 0) return gen::id(parse_word(a.substr(3)));
        if (a == "lcup") return gen::lcup();
        if (a == "lcap") return gen::lcap();
        if (a == "rcup") return gen::rcup();
        if (a == "rcap") return gen::rcap();
        if (a == "cross" || a == "crossing" || a == "swap") return gen::cross();
        if (a == "crossinv" || a == "tinv") return gen::crossinv();
        if (a == "tcross") return gen::tcross();
        if (a == "dcross") return gen::dcross();
        if (a == "x" || a == "bdot" || a == "blackdot") return gen::black(Ori::Up);
        if (a == "c" || a == "wdot" || a == "whitedot") return gen::white(Ori::Up);
        if (a == "xd" || a == "bdotd" || a == "blackdot-down") return gen::black(Ori::Down);
        if (a == "cd" || a == "wdotd" || a == "whitedot-down") return gen::white(Ori::Down);
        if (a == "xd-def") return gen::black_down_def();
        if (a == "cd-def") return gen::white_down_def();
        throw std::invalid_argument("unknown atom: " + a);
    }
    if (n.kids.empty() || n.kids[0].is_list) throw std::invalid_argument("expected operator at list head");
    const std::string& op = n.kids[0].atom;
    auto arg = [&](std::size_t k) { return build(n.kids.at(k)); };
    auto count = [&](std::size_t k) { return static_cast<unsigned>(std::stoul(n.kids.at(k).atom)); };
    if (op == "compose" || op == "tensor") {
        if (n.kids.size() < 2) throw std::invalid_argument(op + " needs arguments");
        Expr r = arg(n.kids.size() - 1);
        for (std::size_t k = n.kids.size() - 1; k-- > 1;) r = (op == "compose") ? compose(arg(k), r) : tensor(arg(k), r);
        return r;
    }
    if (op == "add" || op == "+") {
        Expr r = arg(1);
        for (std::size_t k = 2; k < n.kids.size(); ++k) r += arg(k);
        return r;
    }
    if (op == "sub" || op == "-") {
        if (n.kids.size() == 2) return Scalar(-1) * arg(1);
        return arg(1) - arg(2);
    }
    if (op == "neg") return Scalar(-1) * arg(1);
    if (op == "scale" || op == "*") return Scalar::parse(n.kids.at(1).atom) * arg(2);
    if (op == "pow") return power(arg(1), count(2));
    if (op == "id") return gen::id(parse_word(n.kids.size() > 1 ? n.kids[1].atom : ""));
    if (op == "bubble") return gen::bubble(count(1));
    if (op == "cwbubble") return gen::cw_bubble(count(1));
    if (op == "x" || op == "c" || op == "xd" || op == "cd") {
        // (x k) = k-th power of the dot
        SNode a;
        a.atom = op;
        return power(build(a), count(1));
    }
    throw std::invalid_argument("unknown operator: " + op);
}

}  // namespace

Expr parse_expr(const std::string& s) {
    std::size_t i = 0;
    SNode root = parse_sexpr(s, i);
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i != s.size()) throw std::invalid_argument("trailing input after expression");
    return build(root);
}

// ---------------------------------------------------------------- canonical representatives

Layers canonical_drawing(const NormalDiagram& d) {
    const int nb = d.n_bottom();
    Layers out;
    // strand id carried by each current position
    Word w = d.bottom;
    std::vector<int> sid(nb, -1);
    for (std::size_t k = 0; k < d.strands.size(); ++k) {
        const auto& s = d.strands[k];
        if (d.is_bottom(s.in)) sid[s.in] = static_cast<int>(k);
        if (d.is_bottom(s.out)) sid[s.out] = static_cast<int>(k);
    }
    auto emit = [&](const Layers& ls) {
        for (const auto& l : ls) {
            w = apply_layer(l, w);
            out.push_back(l);
        }
    };
    auto cross_at = [&](int q) {
        emit(typed_crossing(w, q));
        std::swap(sid[q], sid[q + 1]);
    };
    // caps
    for (std::size_t k = 0; k < d.strands.size(); ++k) {
        const auto& s = d.strands[k];
        if (!(d.is_bottom(s.in) && d.is_bottom(s.out))) continue;
        int i = -1, j = -1;
        for (int p = 0; p < static_cast<int>(sid.size()); ++p)
            if (sid[p] == static_cast<int>(k)) (i < 0 ? i : j) = p;
        for (int q = j - 1; q > i; --q) cross_at(q);
        if (w[i] == Ori::Down)
            emit({{Gen::Cap, i}});
        else
            emit({{Gen::InvCross, i}, {Gen::Cap, i}});
        sid.erase(sid.begin() + i, sid.begin() + i + 2);
    }
    // target top index per position
    std::vector<int> target;
    for (int id : sid) {
        const auto& s = d.strands[id];
        int e = d.is_bottom(s.in) ? s.out : s.in;
        target.push_back(e - nb);
    }
    // cups at the right end
    for (const auto& s : d.strands) {
        if (d.is_bottom(s.in) || d.is_bottom(s.out)) continue;
        int i = std::min(s.in, s.out) - nb, j = std::max(s.in, s.out) - nb;
        int n = static_cast<int>(w.size());
        if (d.top[i] == Ori::Up)
            emit({{Gen::Cup, n}});
        else
            emit({{Gen::Cup, n}, {Gen::InvCross, n}});
        target.push_back(i);
        target.push_back(j);
    }
    // bubble sort into the top word
    for (bool moved = true; moved;) {
        moved = false;
        for (int q = 0; q + 1 < static_cast<int>(target.size()); ++q)
            if (target[q] > target[q + 1]) {
                emit(typed_crossing(w, q));
                std::swap(target[q], target[q + 1]);
                moved = true;
            }
    }
    if (w != d.top) throw std::logic_error("canonical_drawing: did not reach the top word");
    return out;
}

Layers canonical_layers(const NormalDiagram& d) {
    const int nb = d.n_bottom();
    Layers bb, bw, tw, tb;
    std::vector<int> bw_pos, tw_pos;
    for (const auto& s : d.strands) {
        if (d.is_bottom(s.in))
            for (std::uint32_t k = 0; k < s.black; ++k) bb.push_back({Gen::Black, s.in});
        else
            for (std::uint32_t k = 0; k < s.black; ++k) tb.push_back({Gen::Black, s.in - nb});
        if (s.white) (d.is_bottom(s.out) ? bw_pos : tw_pos).push_back(d.is_bottom(s.out) ? s.out : s.out - nb);
    }
    std::sort(bw_pos.rbegin(), bw_pos.rend());
    std::sort(tw_pos.rbegin(), tw_pos.rend());
    for (int p : bw_pos) bw.push_back({Gen::White, p});
    for (int p : tw_pos) tw.push_back({Gen::White, p});
    Layers r = bb;
    r.insert(r.end(), bw.begin(), bw.end());
    Layers mid = canonical_drawing(d);
    r.insert(r.end(), mid.begin(), mid.end());
    r.insert(r.end(), tw.begin(), tw.end());
    r.insert(r.end(), tb.begin(), tb.end());
    return r;
}

Expr to_expr(const Morphism& m) {
    Expr e(m.bottom(), m.top());
    for (const auto& [d, c] : m.terms()) e.terms.push_back({c, canonical_layers(d)});
    return e;
}

Morphism compose(const Morphism& f, const Morphism& g) { return normalize(compose(to_expr(f), to_expr(g))); }

Morphism tensor(const Morphism& f, const Morphism& g) { return normalize(tensor(to_expr(f), to_expr(g))); }

std::vector<NormalDiagram> hom_basis(const Word& bottom, const Word& top, unsigned ell) {
    return enumerate_normal(bottom, top, ell);
}

}  // namespace aobc
