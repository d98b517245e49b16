#include <random>

#include "aobc/engine.hpp"

namespace aobc {

const std::vector<EngineRelation>& engine_relations() {
    static const std::vector<EngineRelation> rels{
        {"crossing-squared", "(compose cross cross)", "id:^^"},
        {"braid", "(compose (tensor cross id1) (tensor id1 cross) (tensor cross id1))",
         "(compose (tensor id1 cross) (tensor cross id1) (tensor id1 cross))"},
        {"zigzag-up", "(compose (tensor id1 lcap) (tensor lcup id1))", "id1"},
        {"zigzag-down", "(compose (tensor lcap idd) (tensor idd lcup))", "idd"},
        {"right-zigzag-up", "(compose (tensor rcap id1) (tensor id1 rcup))", "id1"},
        {"right-zigzag-down", "(compose (tensor idd rcap) (tensor rcup idd))", "idd"},
        {"sideways-inverse-left", "(compose crossinv tcross)", "id:v^"},
        {"sideways-inverse-right", "(compose tcross crossinv)", "id:^v"},
        {"white-squared", "(compose c c)", "id1"},
        {"white-through-crossing", "(compose cross (tensor c id1))", "(compose (tensor id1 c) cross)"},
        {"white-loop", "(compose rcap (tensor c idd) lcup)", "(scale 0 id)"},
        {"dot-anticommutes-white", "(compose x c)", "(neg (compose c x))"},
        {"dot-through-crossing", "(sub (compose (tensor x id1) cross) (compose cross (tensor id1 x)))",
         "(sub id:^^ (tensor c c))"},
        {"down-dot-definition", "xd", "xd-def"},
        {"down-white-definition", "cd", "cd-def"},
    };
    return rels;
}

namespace {

Word random_word(std::mt19937_64& rng, std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(rng() % 2 ? Ori::Up : Ori::Down);
    return w;
}

// A random basis diagram with bottom `b` (or top `b` when `below` is false) and a random other end.
std::optional<Expr> random_neighbour(std::mt19937_64& rng, const Word& b, bool below, unsigned max_len) {
    for (int attempt = 0; attempt < 20; ++attempt) {
        const Word other = random_word(rng, rng() % (max_len + 1));
        const auto ds = below ? enumerate_normal(other, b, 2) : enumerate_normal(b, other, 2);
        if (ds.empty()) continue;
        const auto& d = ds[rng() % ds.size()];
        return Expr::atom(d.bottom, canonical_layers(d));
    }
    return std::nullopt;
}

}  // namespace

std::vector<EngineRelationResult> verify_engine_relations(std::uint64_t seed, unsigned wraps, unsigned max_len) {
    std::mt19937_64 rng(seed);
    std::vector<EngineRelationResult> out;
    for (const auto& rel : engine_relations()) {
        EngineRelationResult res;
        res.id = rel.id;
        const Expr diff = parse_expr(rel.lhs) - parse_expr(rel.rhs);
        auto check = [&](const Expr& e) {
            ++res.checks;
            const Morphism m = normalize(e);
            if (m.is_zero()) return;
            ++res.failures;
            if (res.first_residual.empty()) res.first_residual = m.str();
        };
        check(diff);
        const std::size_t width = std::max(diff.bottom.size(), diff.top.size());
        for (unsigned k = 0; k < wraps; ++k) {
            const std::size_t room = max_len > width ? max_len - width : 0;
            const std::size_t pad = room ? rng() % (room + 1) : 0;
            const std::size_t left = pad ? rng() % (pad + 1) : 0;
            Expr e = tensor(gen::id(random_word(rng, left)), tensor(diff, gen::id(random_word(rng, pad - left))));
            if (auto pre = random_neighbour(rng, e.bottom, true, max_len)) e = compose(e, *pre);
            if (auto post = random_neighbour(rng, e.top, false, max_len)) e = compose(*post, e);
            check(e);
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace aobc
