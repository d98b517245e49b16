#include <bit>
#include <sstream>
#include <stdexcept>

#include "aobc/schurweyl.hpp"

namespace aobc {

QComb bracket(const QGen& a, const QGen& b) {
    // [e_ij, e_kl] = d_jk e_il - d_li e_kj
    // [e_ij, f_kl] = [f_ij, e_kl] = d_jk f_il - d_li f_kj
    // [f_ij, f_kl] = d_jk e_il + d_li e_kj
    QComb out;
    auto add = [&](bool odd, int i, int j, long c) { out.push_back({QGen{odd, i, j}, GR(c)}); };
    if (!a.odd && !b.odd) {
        if (a.j == b.i) add(false, a.i, b.j, 1);
        if (b.j == a.i) add(false, b.i, a.j, -1);
    } else if (a.odd != b.odd) {
        if (a.j == b.i) add(true, a.i, b.j, 1);
        if (b.j == a.i) add(true, b.i, a.j, -1);
    } else {
        if (a.j == b.i) add(false, a.i, b.j, 1);
        if (b.j == a.i) add(false, b.i, a.j, 1);
    }
    return out;
}

namespace {

int signed_index(int k, int n) { return k < n ? k + 1 : -(k - n + 1); }
int basis_index(int i, int n) { return i > 0 ? i - 1 : n + (-i) - 1; }
int bar(int i) { return i > 0 ? 0 : 1; }

// The matrix units making up a q(n) basis element.
std::vector<std::tuple<int, int, long>> units(const QGen& g) {
    if (!g.odd) return {{g.i, g.j, 1}, {-g.i, -g.j, 1}};
    return {{g.i, -g.j, 1}, {-g.i, g.j, 1}};
}

}  // namespace

SVec NaturalModule::act(const QGen& g, int b) {
    SVec out;
    const int c = signed_index(b, n());
    for (auto [a, bb, coef] : units(g))
        if (bb == c) out[basis_index(a, n())] += GR(coef);
    return out;
}

std::string NaturalModule::label(int b) const { return "v" + std::to_string(signed_index(b, n())); }

SVec DualModule::act(const QGen& g, int b) {
    // E_{a,b} vbar_i = -(-1)^{[a]([a]+[b])} d_{i,a} vbar_b
    SVec out;
    const int c = signed_index(b, n());
    for (auto [a, bb, coef] : units(g)) {
        if (a != c) continue;
        long sign = ((bar(a) * (bar(a) + bar(bb))) % 2) ? 1 : -1;
        out[basis_index(bb, n())] += GR(sign * coef);
    }
    return out;
}

std::string DualModule::label(int b) const { return "w" + std::to_string(signed_index(b, n())); }

Weight plain_weight(std::vector<GR> lambda) {
    Weight w;
    w.lambda = std::move(lambda);
    return w;
}

Weight build_weight(unsigned a, unsigned b, unsigned eps, const std::vector<unsigned>& n_blocks,
                    const std::vector<GR>& l_values) {
    if (eps > 1) throw std::invalid_argument("epsilon must be 0 or 1");
    const unsigned nb = a + b + eps;
    if (n_blocks.size() != nb)
        throw std::invalid_argument("expected " + std::to_string(nb) + " block sizes, got " +
                                    std::to_string(n_blocks.size()));
    std::vector<GR> l = l_values;
    if (l.size() == b && a > 0) l.insert(l.begin(), a, GR(-1));
    if (l.size() != a + b)
        throw std::invalid_argument("expected " + std::to_string(a + b) + " l-values, got " + std::to_string(l.size()));
    for (unsigned i = 0; i < nb; ++i)
        if (n_blocks[i] == 0 || n_blocks[i] % 2)
            throw std::invalid_argument("block size n_" + std::to_string(i + 1) + " must be even and positive");
    for (unsigned i = 0; i < a + b; ++i) {
        const GR& li = l[i];
        if (i < a) {
            if (!(li == GR(-1))) throw std::invalid_argument("l_" + std::to_string(i + 1) + " must be -1");
            continue;
        }
        if (li.is_real() && li.re().get_den() == 1 && li.re() >= -1)
            throw std::invalid_argument("l_" + std::to_string(i + 1) + " must avoid the nonnegative integers and -1");
    }
    Weight w;
    w.a = a;
    w.b = b;
    w.eps = eps;
    w.blocks = n_blocks;
    w.l = l;
    // block i+1 holds l_{i+1}, l_{i+1} - 1, ...; the trailing block is zero
    for (unsigned i = 0; i < nb; ++i)
        for (unsigned j = 1; j <= n_blocks[i]; ++j)
            w.lambda.push_back(i < a + b ? l[i] - GR(static_cast<long>(j) - 1) : GR());
    return w;
}

CliffordFiber::CliffordFiber(const Weight& w) : w_(w) {
    for (int i = 1; i <= w.n(); ++i)
        if (!w.lambda[i - 1].is_zero()) nz_.push_back(i);
    if (nz_.size() > 16) throw std::invalid_argument("Clifford fiber too large");
}

int CliffordFiber::irreducible_dimension() const { return 1 << ((static_cast<int>(nz_.size()) + 1) / 2); }

int CliffordFiber::parity(int s) const { return std::popcount(static_cast<unsigned>(s)) % 2; }

SVec CliffordFiber::h_odd(int i, int s) const {
    SVec out;
    int k = -1;
    for (std::size_t t = 0; t < nz_.size(); ++t)
        if (nz_[t] == i) k = static_cast<int>(t);
    if (k < 0) return out;
    const unsigned below = static_cast<unsigned>(s) & ((1u << k) - 1u);
    const long sign = (std::popcount(below) % 2) ? -1 : 1;
    if (!(s >> k & 1))
        out[s | (1 << k)] = GR(sign);
    else
        out[s & ~(1 << k)] = GR(sign) * lambda(i);
    return out;
}

VermaModule::VermaModule(const Weight& w, unsigned cap) : QModule(w.n()), w_(w), fiber_(w), cap_(cap) {
    hw_ = intern(State{{}, 0});
}

int VermaModule::intern(const State& s) {
    if (s.mono.size() > cap_)
        throw std::overflow_error("Verma truncation exceeded: degree " + std::to_string(s.mono.size()) + " > cap " +
                                  std::to_string(cap_));
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(states_.size());
    states_.push_back(s);
    index_.emplace(s, id);
    return id;
}

int VermaModule::gen_id(const QGen& g) const {
    // pairs (i, j), i > j, in order (2,1), (3,1), (3,2), ...
    int pair = (g.i - 1) * (g.i - 2) / 2 + (g.j - 1);
    return 2 * pair + (g.odd ? 1 : 0);
}

QGen VermaModule::gen_of(int id) const {
    int pair = id / 2;
    int i = 2;
    while (pair >= i - 1) {
        pair -= i - 1;
        ++i;
    }
    return QGen{(id % 2) == 1, i, pair + 1};
}

int VermaModule::parity(int b) const {
    int p = fiber_.parity(states_[b].fiber);
    for (int id : states_[b].mono) p += id % 2;
    return p % 2;
}

std::string VermaModule::label(int b) const {
    const State& s = states_[b];
    std::ostringstream os;
    for (int id : s.mono) {
        QGen g = gen_of(id);
        os << (g.odd ? 'f' : 'e') << g.i << ',' << g.j << '*';
    }
    os << "u" << s.fiber;
    return os.str();
}

SVec VermaModule::act(const QGen& g, int b) {
    auto key = std::make_pair(g, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    State s = states_[b];
    SVec out = act_state(g, s.mono, s.fiber);
    memo_.emplace(key, out);
    return out;
}

SVec VermaModule::act_state(const QGen& g, const std::vector<int>& mono, int fiber) {
    SVec out;
    auto add_all = [&](const SVec& v, const GR& c) {
        for (const auto& [k, x] : v) {
            GR& slot = out[k];
            slot += c * x;
            if (slot.is_zero()) out.erase(k);
        }
    };
    if (mono.empty()) {
        if (g.lowering()) {
            out[intern(State{{gen_id(g)}, fiber})] = GR(1);
        } else if (g.i == g.j) {
            if (!g.odd) {
                if (!fiber_.lambda(g.i).is_zero()) out[intern(State{{}, fiber})] = fiber_.lambda(g.i);
            } else {
                for (const auto& [s, c] : fiber_.h_odd(g.i, fiber)) out[intern(State{{}, s})] = c;
            }
        }
        return out;
    }
    const std::vector<int> rest(mono.begin() + 1, mono.end());
    if (g.lowering()) {
        const int gid = gen_id(g);
        if (gid < mono[0] || (gid == mono[0] && !g.odd)) {
            std::vector<int> m2 = mono;
            m2.insert(m2.begin(), gid);
            out[intern(State{m2, fiber})] = GR(1);
            return out;
        }
        if (gid == mono[0]) {  // odd square: g g = [g, g] / 2
            for (const auto& [t, c] : bracket(g, g)) add_all(act_state(t, rest, fiber), c * GR(mpq_class(1, 2)));
            return out;
        }
    }
    const QGen y = gen_of(mono[0]);
    for (const auto& [t, c] : bracket(g, y)) add_all(act_state(t, rest, fiber), c);
    const GR sign((g.odd && y.odd) ? -1 : 1);
    for (const auto& [st, c] : act_state(g, rest, fiber)) add_all(act(y, st), sign * c);
    return out;
}

}  // namespace aobc
