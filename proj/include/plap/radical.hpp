#pragma once

#include "plap/rational.hpp"

#include <string>
#include <vector>

namespace plap {

/// Number of the form coef * sqrt(rad), rational coef, integer radicand >= 0.
/// The radicand is kept as given; equality and order go through exact squares,
/// so no squarefree reduction is required here.
struct QuadVal {
    Rat coef;
    BigInt rad;

    QuadVal() : coef(0), rad(1) {}
    QuadVal(Rat c) : coef(std::move(c)), rad(1) {}
    QuadVal(Rat c, BigInt d);

    bool is_rational() const { return rad == 1 || coef == 0; }
    Rat as_rational() const;
    double to_double() const;
    int sign() const;
    /// coef^2 * rad; carries the magnitude when combined with sign().
    Rat squared() const { return coef * coef * Rat(rad); }
};

bool operator==(const QuadVal& a, const QuadVal& b);
inline bool operator!=(const QuadVal& a, const QuadVal& b) { return !(a == b); }
bool q_less(const QuadVal& a, const QuadVal& b);
inline bool q_leq(const QuadVal& a, const QuadVal& b) { return !q_less(b, a); }
QuadVal q_scale(const QuadVal& a, const Rat& c);
inline QuadVal q_div(const QuadVal& a, const Rat& c) { return q_scale(a, Rat(1) / c); }
std::string q_to_string(const QuadVal& a);

/// Sum of QuadVal terms, canonicalized to distinct squarefree radicands.
/// Exact equality always; sign of a nonzero sum is decided by guarded
/// high-precision evaluation (terms here have radicands far below 2^62 and
/// moderate rational height, where 120 digits are decisive).
struct RadicalSum {
    std::vector<QuadVal> terms; // sorted by radicand, no zero coefs

    RadicalSum() = default;
    RadicalSum(const QuadVal& v);
    RadicalSum(const Rat& v);

    bool is_rational() const;
    Rat as_rational() const;
    bool is_zero() const { return terms.empty(); }
    double to_double() const;
};

RadicalSum rs_add(const RadicalSum& a, const RadicalSum& b);
RadicalSum rs_sub(const RadicalSum& a, const RadicalSum& b);
RadicalSum rs_scale(const RadicalSum& a, const Rat& c);
bool operator==(const RadicalSum& a, const RadicalSum& b);
inline bool operator!=(const RadicalSum& a, const RadicalSum& b) { return !(a == b); }
int rs_sign(const RadicalSum& a);
bool rs_less(const RadicalSum& a, const RadicalSum& b);
std::string rs_to_string(const RadicalSum& a);

} // namespace plap
