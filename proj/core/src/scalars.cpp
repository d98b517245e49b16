#include "aobc/scalars.hpp"

#include <cctype>
#include <sstream>

namespace aobc {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Splits "a+b-c" at top-level signs, keeping the sign with each piece.
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char ch = s[k];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        bool exponent_sign = k > 0 && (s[k - 1] == '^');
        if (depth == 0 && (ch == '+' || ch == '-') && !exponent_sign) {
            if (!trim(cur).empty()) out.push_back(trim(cur));
            cur = (ch == '-') ? "-" : "";
            continue;
        }
        cur += ch;
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

std::vector<std::string> split_factors(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && ch == '*') {
            out.push_back(trim(cur));
            cur.clear();
            continue;
        }
        cur += ch;
    }
    out.push_back(trim(cur));
    return out;
}

std::string coeff_prefix(const GR& c, bool has_monomial) {
    // c is the absolute-signed coefficient already (caller handles leading sign for real/imag-only cases)
    if (!has_monomial) return c.str();
    if (c == GR(1)) return "";
    std::string s = c.str();
    if (c.is_real() && c.re().get_den() != 1) s = "(" + s + ")";
    return s + "*";
}

}  // namespace

std::string rational_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + raw);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + raw);
    return q;
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(i)");
    mpq_class n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return rational_str(re_);
    std::string ims;
    mpq_class aim = abs(im_);
    if (aim == 1)
        ims = "i";
    else if (aim.get_den() == 1)
        ims = rational_str(aim) + "*i";
    else
        ims = "(" + rational_str(aim) + ")*i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + ims;
    return "(" + rational_str(re_) + (sgn(im_) < 0 ? "-" : "+") + ims + ")";
}

GaussianRational GaussianRational::parse(const std::string& raw) {
    std::string s = trim(raw);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    GR total;
    for (const auto& term : split_terms(s)) {
        std::string t = term;
        bool neg = false;
        if (!t.empty() && t[0] == '-') {
            neg = true;
            t = trim(t.substr(1));
        }
        GR val(1);
        for (auto f : split_factors(t)) {
            if (f.size() >= 2 && f.front() == '(' && f.back() == ')') {
                val *= parse(f);
            } else if (f == "i" || f == "I") {
                val *= GR::i();
            } else if (!f.empty() && (f.back() == 'i' || f.back() == 'I')) {
                val *= GR(parse_rational(f.substr(0, f.size() - 1))) * GR::i();
            } else {
                val *= GR(parse_rational(f));
            }
        }
        if (neg) val = -val;
        total += val;
    }
    return total;
}

BubblePolynomial::BubblePolynomial(const GR& c) {
    if (!c.is_zero()) terms_[{}] = c;
}

BubblePolynomial BubblePolynomial::bubble(unsigned k) {
    BubblePolynomial p;
    if (k % 2 == 0) return p;
    BubbleMonomial m((k - 1) / 2 + 1, 0);
    m.back() = 1;
    p.terms_[m] = GR(1);
    return p;
}

bool BubblePolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GR BubblePolynomial::constant_term() const {
    auto it = terms_.find({});
    return it == terms_.end() ? GR() : it->second;
}

unsigned BubblePolynomial::max_index() const {
    unsigned mx = 0;
    for (const auto& [m, c] : terms_)
        if (!m.empty()) mx = std::max<unsigned>(mx, 2 * static_cast<unsigned>(m.size()) - 1);
    return mx;
}

void BubblePolynomial::add_term(const BubbleMonomial& m0, const GR& c) {
    if (c.is_zero()) return;
    BubbleMonomial m = m0;
    while (!m.empty() && m.back() == 0) m.pop_back();
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BubblePolynomial BubblePolynomial::operator-() const {
    BubblePolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

BubblePolynomial& BubblePolynomial::operator+=(const BubblePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BubblePolynomial& BubblePolynomial::operator-=(const BubblePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BubblePolynomial& BubblePolynomial::operator*=(const GR& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

BubblePolynomial& BubblePolynomial::operator*=(const BubblePolynomial& o) {
    if (o.is_constant()) return *this *= o.constant_term();
    if (is_constant()) {
        GR c = constant_term();
        *this = o;
        return *this *= c;
    }
    BubblePolynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            BubbleMonomial m(std::max(m1.size(), m2.size()), 0);
            for (std::size_t k = 0; k < m1.size(); ++k) m[k] += m1[k];
            for (std::size_t k = 0; k < m2.size(); ++k) m[k] += m2[k];
            r.add_term(m, c1 * c2);
        }
    *this = std::move(r);
    return *this;
}

std::string BubblePolynomial::str(const std::string& symbol) const {
    if (terms_.empty()) return "0";
    // higher total degree first, then by the map order reversed, so constants come last
    std::vector<std::pair<BubbleMonomial, GR>> items(terms_.begin(), terms_.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        unsigned da = 0, db = 0;
        for (auto e : a.first) da += e;
        for (auto e : b.first) db += e;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c0] : items) {
        std::string mono;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += symbol + std::to_string(2 * k + 1);
            if (m[k] > 1) mono += "^" + std::to_string(m[k]);
        }
        GR c = c0;
        bool neg = false;
        if ((c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
            neg = true;
            c = -c;
        }
        std::string piece = coeff_prefix(c, !mono.empty()) + mono;
        if (first)
            out += (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
        first = false;
    }
    return out;
}

BubblePolynomial BubblePolynomial::parse(const std::string& raw, const std::string& symbol) {
    BubblePolynomial total;
    std::string s = trim(raw);
    if (s == "0" || s.empty()) return total;
    for (const auto& term : split_terms(s)) {
        std::string t = term;
        bool neg = false;
        if (!t.empty() && t[0] == '-') {
            neg = true;
            t = trim(t.substr(1));
        }
        BubblePolynomial val(1);
        for (auto f : split_factors(t)) {
            if (f.rfind(symbol, 0) == 0 && f.size() > symbol.size() &&
                std::isdigit(static_cast<unsigned char>(f[symbol.size()]))) {
                std::string body = f.substr(symbol.size());
                unsigned e = 1;
                auto caret = body.find('^');
                if (caret != std::string::npos) {
                    e = static_cast<unsigned>(std::stoul(body.substr(caret + 1)));
                    body = body.substr(0, caret);
                }
                unsigned k = static_cast<unsigned>(std::stoul(body));
                for (unsigned r = 0; r < e; ++r) val *= bubble(k);
            } else {
                val *= BubblePolynomial(GR::parse(f));
            }
        }
        total += neg ? -val : val;
    }
    return total;
}

void DeltaSpec::set(unsigned k, const GR& v) {
    if (k % 2 == 0) {
        if (!v.is_zero()) throw std::invalid_argument("even bubble values must be zero");
        return;
    }
    values_[k] = v;
}

GR DeltaSpec::get(unsigned k) const {
    if (k % 2 == 0) return GR();
    auto it = values_.find(k);
    return it == values_.end() ? GR() : it->second;
}

GR specialize(const BubblePolynomial& p, const DeltaSpec& delta) {
    GR total;
    for (const auto& [m, c] : p.terms()) {
        GR v = c;
        for (std::size_t k = 0; k < m.size(); ++k) {
            GR d = delta.get(static_cast<unsigned>(2 * k + 1));
            for (std::uint32_t e = 0; e < m[k]; ++e) v *= d;
        }
        total += v;
    }
    return total;
}

BubblePolynomial delta_prime_formal(unsigned k) {
    if (k == 0) throw std::invalid_argument("delta_prime needs k >= 1");
    std::vector<BubblePolynomial> dp(k + 1);
    for (unsigned m = 1; m <= k; ++m) {
        BubblePolynomial v = BubblePolynomial::bubble(m);
        for (unsigned i = 1; 2 * i < m; ++i) v -= BubblePolynomial::bubble(2 * i - 1) * dp[m - 2 * i];
        dp[m] = v;
    }
    return dp[k];
}

GR delta_prime(const DeltaSpec& delta, unsigned k) {
    if (k == 0) throw std::invalid_argument("delta_prime needs k >= 1");
    std::vector<GR> dp(k + 1);
    for (unsigned m = 1; m <= k; ++m) {
        GR v = delta.get(m);
        for (unsigned i = 1; 2 * i < m; ++i) v -= delta.get(2 * i - 1) * dp[m - 2 * i];
        dp[m] = v;
    }
    return dp[k];
}

}  // namespace aobc
