#include "aobc/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace aobc {

using nlohmann::json;

Word parse_word(std::string_view s) {
    Word w;
    w.reserve(s.size());
    for (char ch : s) {
        if (ch == '^' || ch == 'u' || ch == 'U')
            w.push_back(Ori::Up);
        else if (ch == 'v' || ch == 'd' || ch == 'D')
            w.push_back(Ori::Down);
        else if (ch == ' ' || ch == '_' || ch == '.')
            continue;
        else
            throw std::invalid_argument(std::string("bad letter in word: ") + ch);
    }
    return w;
}

std::string word_str(const Word& w) {
    std::string s;
    for (Ori o : w) s += (o == Ori::Up) ? '^' : 'v';
    return s;
}

Word word_power(Ori o, std::size_t n) { return Word(n, o); }

Word operator+(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

int NormalDiagram::parity() const {
    int p = 0;
    for (const auto& s : strands) p += s.white;
    return p % 2;
}

std::uint32_t NormalDiagram::total_black() const {
    std::uint32_t t = 0;
    for (const auto& s : strands) t += s.black;
    return t;
}

std::string NormalDiagram::endpoint_label(int e) const {
    return is_bottom(e) ? "b" + std::to_string(e) : "t" + std::to_string(e - n_bottom());
}

std::vector<int> inward_endpoints(const Word& bottom, const Word& top) {
    std::vector<int> v;
    for (std::size_t i = 0; i < bottom.size(); ++i)
        if (bottom[i] == Ori::Up) v.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < top.size(); ++j)
        if (top[j] == Ori::Down) v.push_back(static_cast<int>(bottom.size() + j));
    return v;
}

std::vector<int> outward_endpoints(const Word& bottom, const Word& top) {
    std::vector<int> v;
    for (std::size_t i = 0; i < bottom.size(); ++i)
        if (bottom[i] == Ori::Down) v.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < top.size(); ++j)
        if (top[j] == Ori::Up) v.push_back(static_cast<int>(bottom.size() + j));
    return v;
}

namespace {

// Odometer over digits in [0, base); first digit most significant. Returns false on wrap.
bool odometer_step(std::vector<unsigned>& digits, unsigned base) {
    for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < base) return true;
        digits[k] = 0;
    }
    return false;
}

}  // namespace

std::vector<NormalDiagram> enumerate_normal(const Word& bottom, const Word& top,
                                            std::optional<unsigned> black_bound) {
    if (!black_bound) throw std::invalid_argument("enumerate_normal: unbounded black-dot enumeration");
    unsigned base = std::max(1u, *black_bound);
    auto in = inward_endpoints(bottom, top);
    auto out = outward_endpoints(bottom, top);
    std::vector<NormalDiagram> result;
    if (in.size() != out.size()) return result;
    std::size_t k = in.size();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<unsigned> white(k, 0);
        do {
            std::vector<unsigned> black(k, 0);
            do {
                NormalDiagram d{bottom, top, {}};
                for (std::size_t s = 0; s < k; ++s)
                    d.strands.push_back({in[s], out[perm[s]], static_cast<std::uint8_t>(white[s]), black[s]});
                result.push_back(std::move(d));
            } while (base > 1 && odometer_step(black, base));
        } while (odometer_step(white, 2));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

std::string canonical_key(const NormalDiagram& d) {
    std::ostringstream os;
    os << word_str(d.bottom) << '>' << word_str(d.top);
    for (const auto& s : d.strands) os << '|' << s.in << ':' << s.out << ':' << int(s.white) << ':' << s.black;
    return os.str();
}

NormalDiagram strip_dots(const NormalDiagram& d) {
    NormalDiagram r = d;
    for (auto& s : r.strands) s.black = 0;
    return r;
}

std::vector<std::string> validate(const NormalDiagram& d, ValidationMode mode) {
    std::vector<std::string> issues;
    auto in = inward_endpoints(d.bottom, d.top);
    auto out = outward_endpoints(d.bottom, d.top);
    if (in.size() != out.size()) issues.push_back("no bijection exists between the endpoint sets");
    std::vector<int> seen_in, seen_out;
    for (std::size_t k = 0; k < d.strands.size(); ++k) {
        const auto& s = d.strands[k];
        std::string tag = "strand " + std::to_string(k);
        if (!std::binary_search(in.begin(), in.end(), s.in)) issues.push_back(tag + ": source is not an inward endpoint");
        if (!std::binary_search(out.begin(), out.end(), s.out))
            issues.push_back(tag + ": target is not an outward endpoint");
        if (s.white > 1) issues.push_back(tag + ": at most one white dot");
        if (mode.cyclotomic_ell && s.black >= std::max(1u, *mode.cyclotomic_ell))
            issues.push_back(tag + ": black dots must be fewer than ell");
        if (k > 0 && d.strands[k - 1].in >= s.in) issues.push_back(tag + ": strands not sorted by source");
        seen_in.push_back(s.in);
        seen_out.push_back(s.out);
    }
    std::sort(seen_in.begin(), seen_in.end());
    std::sort(seen_out.begin(), seen_out.end());
    if (seen_in != in || seen_out != out) issues.push_back("matching is not a bijection");
    return issues;
}

NormalDiagram identity_diagram(const Word& w) {
    NormalDiagram d{w, w, {}};
    int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        if (w[i] == Ori::Up) d.strands.push_back({i, n + i, 0, 0});
    for (int i = 0; i < n; ++i)
        if (w[i] == Ori::Down) d.strands.push_back({n + i, i, 0, 0});
    return d;
}

std::string diagram_to_json(const NormalDiagram& d) {
    json j;
    j["bottom"] = word_str(d.bottom);
    j["top"] = word_str(d.top);
    j["pairs"] = json::array();
    j["white"] = json::array();
    j["black"] = json::array();
    for (const auto& s : d.strands) {
        j["pairs"].push_back({d.endpoint_label(s.in), d.endpoint_label(s.out)});
        j["white"].push_back(s.white);
        j["black"].push_back(s.black);
    }
    return j.dump();
}

NormalDiagram diagram_from_json(const std::string& text) {
    json j = json::parse(text);
    NormalDiagram d{parse_word(j.at("bottom").get<std::string>()), parse_word(j.at("top").get<std::string>()), {}};
    auto endpoint = [&](const json& v) -> int {
        if (v.is_number_integer()) return v.get<int>();
        std::string s = v.get<std::string>();
        if (s.size() < 2 || (s[0] != 'b' && s[0] != 't')) throw std::invalid_argument("bad endpoint label: " + s);
        int idx = std::stoi(s.substr(1));
        return s[0] == 'b' ? idx : d.n_bottom() + idx;
    };
    const auto& pairs = j.at("pairs");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        Strand s{endpoint(pairs[k].at(0)), endpoint(pairs[k].at(1)), 0, 0};
        if (j.contains("white")) s.white = j["white"].at(k).get<std::uint8_t>();
        if (j.contains("black")) s.black = j["black"].at(k).get<std::uint32_t>();
        d.strands.push_back(s);
    }
    std::sort(d.strands.begin(), d.strands.end());
    auto issues = validate(d);
    if (!issues.empty()) throw std::invalid_argument("invalid diagram: " + issues.front());
    return d;
}

std::string diagram_to_tikz(const NormalDiagram& d) {
    std::ostringstream os;
    const double h = 2.0;
    auto x = [&](int e) { return d.is_bottom(e) ? e : e - d.n_bottom(); };
    auto y = [&](int e) { return d.is_bottom(e) ? 0.0 : h; };
    os << "\\begin{tikzpicture}[scale=0.6,thick]\n";
    for (const auto& s : d.strands) {
        // draw from inward to outward endpoint so the arrow tip follows the orientation
        int a = s.in, b = s.out;
        bool a_bot = d.is_bottom(a), b_bot = d.is_bottom(b);
        os << "  \\draw[->] (" << x(a) << ',' << y(a) << ")";
        if (a_bot && b_bot)
            os << " to[out=up,in=up] ";
        else if (!a_bot && !b_bot)
            os << " to[out=down,in=down] ";
        else
            os << " to[out=" << (a_bot ? "up" : "down") << ",in=" << (a_bot ? "down" : "up") << "] ";
        os << '(' << x(b) << ',' << y(b) << ");\n";
        auto dot_at = [&](int e, double off) {
            double yy = d.is_bottom(e) ? off : h - off;
            return "(" + std::to_string(x(e)) + "," + std::to_string(yy) + ")";
        };
        if (s.black > 0) {
            os << "  \\filldraw " << dot_at(a, 0.35) << " circle (2.5pt)";
            if (s.black > 1) os << " node[right] {\\scriptsize $" << s.black << "$}";
            os << ";\n";
        }
        if (s.white) os << "  \\filldraw[fill=white] " << dot_at(b, 0.35) << " circle (2.5pt);\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace aobc
