#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace aobc {

// Element a + b*i of Q(i); both parts are canonical GMP rationals.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}
    GaussianRational(mpq_class re, mpq_class im = 0);
    static GaussianRational i() { return {0, 1}; }
    static GaussianRational parse(const std::string& s);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);
    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inverse() const;

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    // "3", "-1/2", "i", "(1/2)*i", "(1+2*i)"; standalone form, no surrounding parens for plain rationals
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

using GR = GaussianRational;

std::string rational_str(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

// Exponent vector: entry k is the power of the odd bubble D_{2k+1}. Trailing zeros trimmed.
using BubbleMonomial = std::vector<std::uint32_t>;

class BubblePolynomial {
public:
    BubblePolynomial() = default;
    BubblePolynomial(long c) : BubblePolynomial(GR(c)) {}
    BubblePolynomial(const GR& c);
    // D_k for odd k; D_k for even k is the zero polynomial.
    static BubblePolynomial bubble(unsigned k);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GR constant_term() const;
    const std::map<BubbleMonomial, GR>& terms() const { return terms_; }
    unsigned max_index() const;  // largest odd index occurring, 0 if constant

    BubblePolynomial operator-() const;
    BubblePolynomial& operator+=(const BubblePolynomial& o);
    BubblePolynomial& operator-=(const BubblePolynomial& o);
    BubblePolynomial& operator*=(const BubblePolynomial& o);
    BubblePolynomial& operator*=(const GR& c);
    friend BubblePolynomial operator+(BubblePolynomial a, const BubblePolynomial& b) { return a += b; }
    friend BubblePolynomial operator-(BubblePolynomial a, const BubblePolynomial& b) { return a -= b; }
    friend BubblePolynomial operator*(BubblePolynomial a, const BubblePolynomial& b) { return a *= b; }
    friend BubblePolynomial operator*(BubblePolynomial a, const GR& c) { return a *= c; }
    friend BubblePolynomial operator*(const GR& c, BubblePolynomial a) { return a *= c; }
    friend bool operator==(const BubblePolynomial& a, const BubblePolynomial& b) { return a.terms_ == b.terms_; }

    void add_term(const BubbleMonomial& m, const GR& c);

    // symbol is the letter used for bubbles: "D" gives D1^2*D3
    std::string str(const std::string& symbol = "D") const;
    static BubblePolynomial parse(const std::string& s, const std::string& symbol = "D");

private:
    std::map<BubbleMonomial, GR> terms_;
};

using Scalar = BubblePolynomial;

// Specialization delta_{2k-1}; even indices are zero by construction.
class DeltaSpec {
public:
    DeltaSpec() = default;
    void set(unsigned k, const GR& v);
    GR get(unsigned k) const;
    const std::map<unsigned, GR>& values() const { return values_; }

private:
    std::map<unsigned, GR> values_;
};

GR specialize(const BubblePolynomial& p, const DeltaSpec& delta);

// delta'_k from delta'_k - delta_k = - sum_{0<i<k/2} delta_{2i-1} delta'_{k-2i}
GR delta_prime(const DeltaSpec& delta, unsigned k);
// Same recursion with the bubbles kept formal.
BubblePolynomial delta_prime_formal(unsigned k);

}  // namespace aobc
