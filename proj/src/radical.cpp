#include "plap/radical.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <stdexcept>

namespace plap {

namespace {

using F120 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<120>>;
using F400 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;

template <typename F>
F eval_sum(const std::vector<QuadVal>& terms, F* scale) {
    F acc = 0, sc = 0;
    for (const auto& t : terms) {
        F c = F(boost::multiprecision::numerator(t.coef)) /
              F(boost::multiprecision::denominator(t.coef));
        F s = sqrt(F(t.rad));
        acc += c * s;
        sc += abs(c) * s;
    }
    if (scale) *scale = sc;
    return acc;
}

/// Splits d = square * free with free squarefree, by trial division.
/// Radicands beyond 2^62 are left untouched (never produced by the model
/// builders; grouping by the raw value is still sound for equality).
std::pair<BigInt, BigInt> split_square(const BigInt& d) {
    if (d <= 1 || d > BigInt("4611686018427387904")) return {1, d};
    long long n = d.convert_to<long long>();
    long long sq = 1, fr = 1;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) sq *= p;
        if (e & 1) fr *= p;
    }
    fr *= n;
    return {BigInt(sq), BigInt(fr)};
}

} // namespace

QuadVal::QuadVal(Rat c, BigInt d) : coef(std::move(c)), rad(std::move(d)) {
    if (rad < 0) throw std::invalid_argument("negative radicand");
    if (rad == 0 || coef == 0) { coef = 0; rad = 1; }
}

Rat QuadVal::as_rational() const {
    if (!is_rational()) throw std::logic_error("value is irrational");
    return coef;
}

double QuadVal::to_double() const {
    if (rad == 1) return rat_to_double(coef);
    F120 c = F120(boost::multiprecision::numerator(coef)) /
             F120(boost::multiprecision::denominator(coef));
    return (c * sqrt(F120(rad))).convert_to<double>();
}

int QuadVal::sign() const {
    if (coef == 0) return 0;
    return coef > 0 ? 1 : -1;
}

bool operator==(const QuadVal& a, const QuadVal& b) {
    if (a.sign() != b.sign()) return false;
    if (a.sign() == 0) return true;
    return a.squared() == b.squared();
}

bool q_less(const QuadVal& a, const QuadVal& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb;
    if (sa == 0) return false;
    if (sa > 0) return a.squared() < b.squared();
    return a.squared() > b.squared();
}

QuadVal q_scale(const QuadVal& a, const Rat& c) {
    return QuadVal(a.coef * c, a.rad);
}

std::string q_to_string(const QuadVal& a) {
    if (a.is_rational()) return rat_to_string(a.coef);
    return rat_to_string(a.coef) + "*sqrt(" + a.rad.str() + ")";
}

RadicalSum::RadicalSum(const QuadVal& v) {
    if (v.sign() != 0) {
        auto [sq, fr] = split_square(v.rad);
        terms.push_back(QuadVal(v.coef * Rat(sq), fr));
    }
}

RadicalSum::RadicalSum(const Rat& v) : RadicalSum(QuadVal(v)) {}

bool RadicalSum::is_rational() const {
    return terms.empty() || (terms.size() == 1 && terms[0].rad == 1);
}

Rat RadicalSum::as_rational() const {
    if (terms.empty()) return Rat(0);
    if (terms.size() == 1 && terms[0].rad == 1) return terms[0].coef;
    throw std::logic_error("value is irrational");
}

double RadicalSum::to_double() const {
    return eval_sum<F120>(terms, nullptr).convert_to<double>();
}

RadicalSum rs_add(const RadicalSum& a, const RadicalSum& b) {
    RadicalSum out;
    auto ia = a.terms.begin(), ib = b.terms.begin();
    while (ia != a.terms.end() || ib != b.terms.end()) {
        if (ib == b.terms.end() || (ia != a.terms.end() && ia->rad < ib->rad)) {
            out.terms.push_back(*ia++);
        } else if (ia == a.terms.end() || ib->rad < ia->rad) {
            out.terms.push_back(*ib++);
        } else {
            Rat c = ia->coef + ib->coef;
            if (c != 0) out.terms.push_back(QuadVal(c, ia->rad));
            ++ia; ++ib;
        }
    }
    return out;
}

RadicalSum rs_sub(const RadicalSum& a, const RadicalSum& b) {
    return rs_add(a, rs_scale(b, Rat(-1)));
}

RadicalSum rs_scale(const RadicalSum& a, const Rat& c) {
    RadicalSum out;
    if (c == 0) return out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) out.terms.push_back(QuadVal(t.coef * c, t.rad));
    return out;
}

bool operator==(const RadicalSum& a, const RadicalSum& b) {
    return a.terms.size() == b.terms.size() &&
           std::equal(a.terms.begin(), a.terms.end(), b.terms.begin(),
                      [](const QuadVal& x, const QuadVal& y) {
                          return x.rad == y.rad && x.coef == y.coef;
                      });
}

int rs_sign(const RadicalSum& a) {
    if (a.terms.empty()) return 0;
    if (a.terms.size() == 1) return a.terms[0].sign();
    bool allPos = true, allNeg = true;
    for (const auto& t : a.terms) {
        if (t.coef > 0) allNeg = false;
        if (t.coef < 0) allPos = false;
    }
    if (allPos) return 1;
    if (allNeg) return -1;
    F120 scale;
    F120 v = eval_sum<F120>(a.terms, &scale);
    if (abs(v) > scale * F120("1e-100")) return v > 0 ? 1 : -1;
    F400 scale4;
    F400 v4 = eval_sum<F400>(a.terms, &scale4);
    if (abs(v4) > scale4 * F400("1e-380")) return v4 > 0 ? 1 : -1;
    throw std::logic_error("radical sign resolution underflow");
}

bool rs_less(const RadicalSum& a, const RadicalSum& b) {
    return rs_sign(rs_sub(a, b)) < 0;
}

std::string rs_to_string(const RadicalSum& a) {
    if (a.terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (i) out += a.terms[i].coef >= 0 ? " + " : " ";
        out += q_to_string(a.terms[i]);
    }
    return out;
}

} // namespace plap
