// Rewriting layer sequences into the normal-diagram basis.
//
// A term is a coefficient times a bottom-to-top list of primitive layers. Dots travel one
// layer at a time: black dots backward to the inward end of their strand, white dots
// forward to the outward end. A black dot passing a crossing leaves correction terms
// with one black dot fewer, so the process terminates. Closed loops are first given a
// detour to the right edge, their dots are collected on that arc, and the loop is then
// replaced by its bubble value.

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aobc/engine.hpp"

namespace aobc {

namespace {

struct Topo {
    std::vector<int> off;       // node offset of each level
    std::vector<int> comp;      // node -> component
    std::vector<char> boundary; // component touches the bottom or the top
    int ncomp = 0;
    int node(int h, int p) const { return off[h] + p; }
};

struct Uf {
    std::vector<int> parent;
    explicit Uf(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct State {
    Scalar coeff;
    Layers L;
    std::vector<Word> lv;  // lv[h] is the word below layer h; lv[L.size()] is the top

    void rebuild(const Word& bottom) {
        lv.assign(1, bottom);
        lv.reserve(L.size() + 1);
        for (const auto& l : L) lv.push_back(apply_layer(l, lv.back()));
    }
    Ori ori_at(int h) const { return lv[h][L[h].pos]; }
    int size() const { return static_cast<int>(L.size()); }
};

Topo compute_topo(const State& s) {
    Topo t;
    const int nl = s.size();
    t.off.resize(nl + 2, 0);
    for (int h = 0; h <= nl; ++h) t.off[h + 1] = t.off[h] + static_cast<int>(s.lv[h].size());
    Uf uf(t.off[nl + 1]);
    for (int h = 0; h < nl; ++h) {
        const Layer& l = s.L[h];
        const int n = static_cast<int>(s.lv[h].size());
        const int q = l.pos;
        for (int p = 0; p < n; ++p) {
            int up = p;
            switch (l.gen) {
                case Gen::Cup:
                    if (p >= q) up = p + 2;
                    break;
                case Gen::Cap:
                    if (p == q || p == q + 1) up = -1;
                    else if (p > q + 1) up = p - 2;
                    break;
                case Gen::Cross:
                case Gen::InvCross:
                    if (p == q) up = q + 1;
                    else if (p == q + 1) up = q;
                    break;
                default:
                    break;
            }
            if (up >= 0) uf.unite(t.node(h, p), t.node(h + 1, up));
        }
        if (l.gen == Gen::Cup) uf.unite(t.node(h + 1, q), t.node(h + 1, q + 1));
        if (l.gen == Gen::Cap) uf.unite(t.node(h, q), t.node(h, q + 1));
    }
    const int total = t.off[nl + 1];
    t.comp.assign(total, -1);
    std::vector<int> label(total, -1);
    for (int x = 0; x < total; ++x) {
        int r = uf.find(x);
        if (label[r] < 0) label[r] = t.ncomp++;
        t.comp[x] = label[r];
    }
    t.boundary.assign(t.ncomp, 0);
    for (int p = 0; p < static_cast<int>(s.lv[0].size()); ++p) t.boundary[t.comp[t.node(0, p)]] = 1;
    for (int p = 0; p < static_cast<int>(s.lv[nl].size()); ++p) t.boundary[t.comp[t.node(nl, p)]] = 1;
    return t;
}

int comp_of_layer(const Topo& t, const State& s, int h) {
    const Layer& l = s.L[h];
    switch (l.gen) {
        case Gen::Cup:
            return t.comp[t.node(h + 1, l.pos)];
        default:
            return t.comp[t.node(h, l.pos)];
    }
}

bool touches(const Topo& t, const State& s, int h, const std::vector<char>& dead) {
    const Layer& l = s.L[h];
    switch (l.gen) {
        case Gen::Cup:
            return dead[t.comp[t.node(h + 1, l.pos)]];
        case Gen::Cross:
        case Gen::InvCross:
            return dead[t.comp[t.node(h, l.pos)]] || dead[t.comp[t.node(h, l.pos + 1)]];
        default:
            return dead[t.comp[t.node(h, l.pos)]];
    }
}

enum class Step { Moved, Stopped, Vanished };
enum class Mode { Settle, Collect };

bool forward_dir_up(Ori o) { return o == Ori::Up; }

class Normalizer {
public:
    Normalizer(Word bottom, Word top) : bottom_(std::move(bottom)), result_(bottom_, top) {}

    void push(Scalar c, Layers L) {
        if (!c.is_zero()) queue_.push_back({std::move(c), std::move(L), {}});
    }
    Morphism run() {
        while (!queue_.empty()) {
            State s = std::move(queue_.back());
            queue_.pop_back();
            process(std::move(s));
        }
        return std::move(result_);
    }

private:
    Word bottom_;
    Morphism result_;
    std::vector<State> queue_;

    void push_correction(const State& s, int lo, const Layers& repl, const Scalar& c) {
        Layers L(s.L.begin(), s.L.begin() + lo);
        L.insert(L.end(), repl.begin(), repl.end());
        L.insert(L.end(), s.L.begin() + lo + 2, s.L.end());
        push(c, std::move(L));
    }

    // Black dot at index h passing the crossing at k = h + dir: emit the correction terms.
    void black_through_crossing(const State& s, int h, int dir) {
        const int k = h + dir;
        const Layer& N = s.L[k];
        const int q = N.pos, p = s.L[h].pos;
        const bool forward = (dir == 1) == forward_dir_up(s.ori_at(h));
        const Scalar base = forward ? -s.coeff : s.coeff;
        const int lo = std::min(h, k);
        const Layers ww{{Gen::White, q + 1}, {Gen::White, q}};
        if (N.gen == Gen::Cross) {
            const bool br_tl = (dir == 1 && p == q + 1) || (dir == -1 && p == q);
            push_correction(s, lo, {}, br_tl ? base : -base);
            push_correction(s, lo, ww, -base);
        } else {
            const Layers e{{Gen::InvCross, q}, {Gen::Cap, q}, {Gen::Cup, q}, {Gen::InvCross, q}};
            const bool up_strand = (dir == 1 && p == q) || (dir == -1 && p == q + 1);
            Layers wew{{Gen::White, q}};
            wew.insert(wew.end(), e.begin(), e.end());
            wew.push_back({Gen::White, q + 1});
            push_correction(s, lo, e, up_strand ? base : -base);
            push_correction(s, lo, wew, -base);
        }
    }

    // Does the run of dot-like layers ahead of h (in direction dir) reach a Mark at the same position?
    static bool on_arc(const State& s, int h, int dir) {
        const int p = s.L[h].pos;
        for (int k = h + dir; k >= 0 && k < s.size(); k += dir) {
            const Layer& l = s.L[k];
            if (!is_dot(l.gen)) return false;
            if (l.pos != p) continue;
            if (l.gen == Gen::Mark) return true;
        }
        return false;
    }

    // Move the dot at index h one layer in direction dir.
    Step step(State& s, int& h, int dir, Mode mode) {
        const int k = h + dir;
        if (k < 0 || k >= s.size()) return Step::Stopped;
        Layer D = s.L[h];
        const Layer N = s.L[k];
        const int p = D.pos, q = N.pos;
        const int lo = std::min(h, k);
        auto swap_layers = [&](int newpos) {
            D.pos = newpos;
            if (dir == 1) {
                s.L[h] = N;
                s.L[k] = D;
                s.lv[h + 1] = apply_layer(N, s.lv[h]);
            } else {
                s.L[k] = D;
                s.L[h] = N;
                s.lv[k + 1] = s.lv[k];
            }
            h = k;
        };
        if (is_dot(N.gen)) {
            if (q != p) {
                if (D.gen == Gen::White && N.gen == Gen::White) s.coeff = -s.coeff;
                swap_layers(p);
                return Step::Moved;
            }
            if (N.gen == Gen::Mark) return Step::Stopped;
            if (mode == Mode::Collect && on_arc(s, h, dir)) return Step::Stopped;
            if (D.gen == Gen::White && N.gen == Gen::White) {
                if (s.ori_at(h) == Ori::Down) s.coeff = -s.coeff;
                s.L.erase(s.L.begin() + lo, s.L.begin() + lo + 2);
                s.lv.erase(s.lv.begin() + lo + 1, s.lv.begin() + lo + 3);
                return Step::Vanished;
            }
            if (D.gen == Gen::Black && N.gen == Gen::Black) {
                if (mode == Mode::Settle) return Step::Stopped;
                swap_layers(p);
                return Step::Moved;
            }
            s.coeff = -s.coeff;
            swap_layers(p);
            return Step::Moved;
        }
        switch (N.gen) {
            case Gen::Cup:
                if (dir == 1) {
                    swap_layers(p >= q ? p + 2 : p);
                } else if (p == q || p == q + 1) {
                    s.L[h].pos = 2 * q + 1 - p;
                } else {
                    swap_layers(p >= q + 2 ? p - 2 : p);
                }
                return Step::Moved;
            case Gen::Cap:
                if (dir == -1) {
                    swap_layers(p >= q ? p + 2 : p);
                } else if (p == q || p == q + 1) {
                    s.L[h].pos = 2 * q + 1 - p;
                } else {
                    swap_layers(p > q + 1 ? p - 2 : p);
                }
                return Step::Moved;
            default:  // crossings
                if (p != q && p != q + 1) {
                    swap_layers(p);
                    return Step::Moved;
                }
                if (D.gen == Gen::Black) black_through_crossing(s, h, dir);
                swap_layers(2 * q + 1 - p);
                return Step::Moved;
        }
    }

    int settle_dir(const State& s, int h) const {
        const bool up = forward_dir_up(s.ori_at(h));
        if (s.L[h].gen == Gen::Black) return up ? -1 : 1;
        return up ? 1 : -1;
    }

    // Nothing ahead that the dot still has to pass or absorb; a black queued behind another
    // black counts as settled until the front one has moved. Along a strand, whites end up
    // ahead of blacks.
    bool settled(const State& s, int h) const {
        const int dir = settle_dir(s, h);
        const Layer& D = s.L[h];
        for (int k = h + dir; k >= 0 && k < s.size(); k += dir) {
            const Layer& N = s.L[k];
            if (!is_dot(N.gen)) return false;
            if (N.pos != D.pos) continue;
            if (D.gen == Gen::White || N.gen == Gen::White) return false;
            return true;
        }
        return true;
    }

    void process(State s) {
        // marks left over from a parent term's loop reduction no longer mean anything
        std::erase_if(s.L, [](const Layer& l) { return l.gen == Gen::Mark; });
        s.rebuild(bottom_);
        Topo t = compute_topo(s);
        {
            std::vector<int> blacks(t.ncomp, 0);
            for (int h = 0; h < s.size(); ++h)
                if (s.L[h].gen == Gen::Black) ++blacks[comp_of_layer(t, s, h)];
            for (int c = 0; c < t.ncomp; ++c)
                if (!t.boundary[c] && blacks[c] == 0) return;  // a loop without black dots is zero
        }
        // 1. dots on strands with endpoints go to the ends of their strands
        for (;;) {
            int pick = -1;
            for (int h = 0; h < s.size() && pick < 0; ++h) {
                Gen g = s.L[h].gen;
                if ((g == Gen::Black || g == Gen::White) && t.boundary[comp_of_layer(t, s, h)] && !settled(s, h))
                    pick = h;
            }
            if (pick < 0) break;
            int h = pick;
            for (;;) {
                if (settled(s, h)) break;
                Step r = step(s, h, settle_dir(s, h), Mode::Settle);
                if (r != Step::Moved) break;
            }
            if (s.coeff.is_zero()) return;
            t = compute_topo(s);
        }
        // 2. loops: detour each to the right edge and collect its dots on the detour arc
        for (;;) {
            t = compute_topo(s);
            std::vector<char> has_mark(t.ncomp, 0);
            for (int h = 0; h < s.size(); ++h)
                if (s.L[h].gen == Gen::Mark) has_mark[comp_of_layer(t, s, h)] = 1;
            int hd = -1;
            for (int h = 0; h < s.size() && hd < 0; ++h) {
                Gen g = s.L[h].gen;
                int c = comp_of_layer(t, s, h);
                if ((g == Gen::Black || g == Gen::White) && !t.boundary[c] && !has_mark[c]) hd = h;
            }
            if (hd < 0) break;
            insert_detour(s, hd);
            collect(s);
            if (s.coeff.is_zero()) return;
        }
        // 3. evaluate and remove loops
        t = compute_topo(s);
        std::vector<char> dead(t.ncomp, 0);
        Scalar factor(1);
        for (int h = 0; h < s.size(); ++h) {
            if (s.L[h].gen != Gen::Mark) continue;
            int c = comp_of_layer(t, s, h);
            dead[c] = 1;
            factor *= coupon_value(s, h);
            if (factor.is_zero()) return;
        }
        if (std::any_of(dead.begin(), dead.end(), [](char x) { return x; })) {
            Layers kept;
            for (int h = 0; h < s.size(); ++h) {
                if (touches(t, s, h, dead)) continue;
                Layer l = s.L[h];
                int shift = 0;
                for (int p = 0; p < l.pos; ++p)
                    if (dead[t.comp[t.node(h, p)]]) ++shift;
                l.pos -= shift;
                kept.push_back(l);
            }
            s.L = std::move(kept);
            s.coeff *= factor;
            s.rebuild(bottom_);
            t = compute_topo(s);
        }
        emit(s, t);
    }

    void insert_detour(State& s, int hd) {
        const Ori o = s.ori_at(hd);
        const int ins = (o == Ori::Up) ? hd + 1 : hd;
        Word w = s.lv[ins];
        const int n = static_cast<int>(w.size());
        int p = s.L[hd].pos;
        Layers det;
        auto add = [&](const Layers& ls) {
            for (const auto& l : ls) {
                w = apply_layer(l, w);
                det.push_back(l);
            }
        };
        for (int q = p; q + 1 < n; ++q) add(typed_crossing(w, q));
        det.push_back({Gen::Mark, n - 1});
        for (int q = n - 2; q >= p; --q) add(typed_crossing(w, q));
        s.L.insert(s.L.begin() + ins, det.begin(), det.end());
        s.rebuild(bottom_);
    }

    // Move the dots of the loop carrying the newest mark forward until they sit next to it.
    void collect(State& s) {
        for (;;) {
            Topo t = compute_topo(s);
            std::vector<char> marked(t.ncomp, 0);
            for (int h = 0; h < s.size(); ++h)
                if (s.L[h].gen == Gen::Mark) marked[comp_of_layer(t, s, h)] = 1;
            int pick = -1;
            for (int h = 0; h < s.size() && pick < 0; ++h) {
                Gen g = s.L[h].gen;
                if (g != Gen::Black && g != Gen::White) continue;
                int c = comp_of_layer(t, s, h);
                if (t.boundary[c] || !marked[c]) continue;
                int dir = forward_dir_up(s.ori_at(h)) ? 1 : -1;
                if (!on_arc(s, h, dir)) pick = h;
            }
            if (pick < 0) return;
            int h = pick;
            for (;;) {
                int dir = forward_dir_up(s.ori_at(h)) ? 1 : -1;
                if (on_arc(s, h, dir)) break;
                Step r = step(s, h, dir, Mode::Collect);
                if (r == Step::Vanished) break;
                if (r == Step::Stopped) throw std::logic_error("loop dot stopped away from its arc");
            }
            if (s.coeff.is_zero()) return;
        }
    }

    // Value of the dots gathered next to the mark at index m, including the reordering sign.
    Scalar coupon_value(const State& s, int m) const {
        const int p = s.L[m].pos;
        const Ori o = s.ori_at(m);
        const int in_dir = (o == Ori::Up) ? -1 : 1;
        std::vector<Gen> ours_scan;  // from the mark outward against the orientation
        int sign = 1;
        int foreign_white_closer = 0;
        for (int k = m + in_dir; k >= 0 && k < s.size(); k += in_dir) {
            const Layer& l = s.L[k];
            if (!is_dot(l.gen)) break;
            if (l.pos != p) {
                if (l.gen == Gen::White) ++foreign_white_closer;
                continue;
            }
            if (l.gen == Gen::Mark) break;
            if (l.gen == Gen::White && foreign_white_closer % 2) sign = -sign;
            ours_scan.push_back(l.gen);
        }
        // list order (bottom to top)
        std::vector<Gen> seq = ours_scan;
        if (in_dir == -1) std::reverse(seq.begin(), seq.end());
        unsigned whites = 0, blacks = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] != Gen::White) {
                ++blacks;
                continue;
            }
            ++whites;
            for (std::size_t j = i + 1; j < seq.size(); ++j)
                if (seq[j] == Gen::Black) sign = -sign;
        }
        if (whites % 2) return Scalar();
        if (o == Ori::Down && (whites / 2) % 2) sign = -sign;
        Scalar v = (o == Ori::Up) ? Scalar::bubble(blacks) : cw_loop_value(blacks);
        return sign > 0 ? v : -v;
    }

    void emit(const State& s, const Topo& t) {
        const int nl = s.size();
        const int nb = static_cast<int>(s.lv[0].size());
        const Word& top = s.lv[nl];
        std::vector<int> ep_a(t.ncomp, -1), ep_b(t.ncomp, -1);
        auto put = [&](int c, int e) { (ep_a[c] < 0 ? ep_a[c] : ep_b[c]) = e; };
        for (int p = 0; p < nb; ++p) put(t.comp[t.node(0, p)], p);
        for (int p = 0; p < static_cast<int>(top.size()); ++p) put(t.comp[t.node(nl, p)], nb + p);
        NormalDiagram d{s.lv[0], top, {}};
        std::vector<int> strand_of(t.ncomp, -1);
        for (int c = 0; c < t.ncomp; ++c) {
            if (ep_a[c] < 0 || ep_b[c] < 0) throw std::logic_error("normalize: component without two endpoints");
            auto inward = [&](int e) { return e < nb ? s.lv[0][e] == Ori::Up : top[e - nb] == Ori::Down; };
            Strand st;
            st.in = inward(ep_a[c]) ? ep_a[c] : ep_b[c];
            st.out = inward(ep_a[c]) ? ep_b[c] : ep_a[c];
            d.strands.push_back(st);
        }
        std::sort(d.strands.begin(), d.strands.end());
        std::vector<int> index_of_in(nb + top.size(), -1);
        for (std::size_t k = 0; k < d.strands.size(); ++k) index_of_in[d.strands[k].in] = static_cast<int>(k);
        for (int c = 0; c < t.ncomp; ++c) {
            int in = (index_of_in[ep_a[c]] >= 0) ? ep_a[c] : ep_b[c];
            strand_of[c] = index_of_in[in];
        }
        // whites: canonical order is bottom-class before top-class, rightmost first within a class
        std::vector<std::pair<int, int>> keys;
        for (int h = 0; h < nl; ++h) {
            const Layer& l = s.L[h];
            if (l.gen != Gen::Black && l.gen != Gen::White) continue;
            Strand& st = d.strands[strand_of[t.comp[t.node(h, l.pos)]]];
            if (l.gen == Gen::Black) {
                ++st.black;
                continue;
            }
            if (++st.white > 1) throw std::logic_error("normalize: two white dots left on a strand");
            bool bottom_class = st.out < nb;
            int pos = bottom_class ? st.out : st.out - nb;
            keys.push_back({bottom_class ? 0 : 1, -pos});
        }
        int sign = 1;
        for (std::size_t i = 0; i < keys.size(); ++i)
            for (std::size_t j = i + 1; j < keys.size(); ++j)
                if (keys[j] < keys[i]) sign = -sign;
        result_.add(d, sign > 0 ? s.coeff : -s.coeff);
    }
};

}  // namespace

Morphism normalize(const Expr& e) {
    Normalizer nz(e.bottom, e.top);
    for (const auto& t : e.terms) nz.push(t.coeff, t.layers);
    return nz.run();
}

Scalar cw_loop_value(unsigned black) {
    if (black == 0) return Scalar();
    return delta_prime_formal(black);
}

Scalar loop_value(unsigned black, unsigned white) {
    Layers ls{{Gen::Cup, 0}, {Gen::InvCross, 0}};
    for (unsigned i = 0; i < white; ++i) ls.push_back({Gen::White, 1});
    for (unsigned i = 0; i < black; ++i) ls.push_back({Gen::Black, 1});
    ls.push_back({Gen::Cap, 0});
    Morphism m = normalize(Expr::atom({}, ls));
    return m.coeff(NormalDiagram{});
}

}  // namespace aobc
