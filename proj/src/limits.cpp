#include "plap/limits.hpp"
#include "plap/errors.hpp"

#include <algorithm>
#include <cmath>

namespace plap {

namespace {

// r_k = nearbyint(horizon / √2^k) down to 5, at most 11 nodes; nearbyint
// (round half to even) is part of the frozen node layout.
std::vector<int> ladder(int first, int horizon) {
    std::vector<int> nodes;
    double v = horizon;
    while (nodes.size() < 11) {
        int r = static_cast<int>(std::nearbyint(v));
        if (r < 5 || r < first) break;
        if (nodes.empty() || nodes.back() != r) nodes.push_back(r);
        v /= std::sqrt(2.0);
    }
    return nodes;
}

struct Route {
    long double estimate = 0;
    long double correction = 0; // |E_m − E_{m−1}|
    bool valid = false;
};

// Neville tableau evaluated at 0; E_j is the degree-j estimate using the
// first j+1 nodes, and the last two diagonal entries give the correction.
Route neville_ld(const std::vector<long double>& xs, const std::vector<long double>& vs) {
    Route out;
    std::size_t m = xs.size();
    if (m < 3) return out;
    std::vector<long double> T(m);
    long double prev = 0, cur = 0;
    for (std::size_t j = 0; j < m; ++j) {
        T[j] = vs[j];
        for (std::size_t k = j; k-- > 0;)
            T[k] = (xs[k] * T[k + 1] - xs[j] * T[k]) / (xs[k] - xs[j]);
        prev = cur;
        cur = T[0];
        if (!std::isfinite(static_cast<double>(cur))) return out;
    }
    out.estimate = cur;
    out.correction = std::abs(cur - prev);
    out.valid = true;
    return out;
}

Route neville_exact(const std::vector<int>& nodes, const std::vector<Rat>& vs) {
    Route out;
    std::size_t m = nodes.size();
    if (m < 3) return out;
    std::vector<Rat> xs(m), T(m);
    for (std::size_t j = 0; j < m; ++j) xs[j] = Rat(1, nodes[j]);
    Rat prev = 0, cur = 0;
    for (std::size_t j = 0; j < m; ++j) {
        T[j] = vs[j];
        for (std::size_t k = j; k-- > 0;)
            T[k] = (xs[k] * T[k + 1] - xs[j] * T[k]) / (xs[k] - xs[j]);
        prev = cur;
        cur = T[0];
    }
    out.estimate = static_cast<long double>(rat_to_double(cur));
    out.correction = std::abs(static_cast<long double>(rat_to_double(cur - prev)));
    out.valid = true;
    return out;
}

} // namespace

LimitEstimate estimate_limit(const std::function<RadicalSum(int)>& seq, int first,
                             int horizon) {
    LimitEstimate est;
    est.windowFirst = first;
    est.windowLast = horizon;
    if (horizon < first) throw std::invalid_argument("empty limit window");

    std::vector<RadicalSum> vals;
    std::vector<double> dbl;
    for (int r = first; r <= horizon; ++r) {
        vals.push_back(seq(r));
        dbl.push_back(vals.back().to_double());
    }
    int count = static_cast<int>(vals.size());
    for (int i = std::max(0, count - 5); i < count; ++i) est.tailValues.push_back(dbl[i]);

    // stage 1: exactly constant tail
    int tailLen = std::max(8, count / 4); // ≤ count whenever count ≥ 8
    if (count >= 8) {
        bool constant = true;
        for (int i = count - tailLen; i < count && constant; ++i)
            if (!(vals[i] == vals[count - 1])) constant = false;
        if (constant) {
            est.status = LimitStatus::Converged;
            est.exactValue = vals[count - 1];
            est.value = dbl[count - 1];
            est.note = "constant tail";
            return est;
        }
    }

    std::vector<int> nodes = ladder(first, horizon);

    // stage 2: monotone growth
    if (count >= 8) {
        bool increasing = true;
        for (int i = count - tailLen + 1; i < count && increasing; ++i)
            if (dbl[i] <= dbl[i - 1]) increasing = false;
        if (increasing) {
            double last = dbl[count - 1];
            bool geometric = nodes.size() >= 3 && last >= 10.0;
            for (std::size_t k = 0; k + 1 < nodes.size() && geometric; ++k) {
                double hi = dbl[nodes[k] - first], lo = dbl[nodes[k + 1] - first];
                if (!(lo > 0) || hi / lo < 1.1) geometric = false;
            }
            if (last > 1e6 || geometric) {
                est.status = LimitStatus::DivergesToInfinity;
                est.note = "monotone growth";
                return est;
            }
        }
    }

    // stage 3: dual-route extrapolation
    if (nodes.size() >= 3) {
        bool allRational = true;
        std::vector<Rat> ratVals;
        std::vector<long double> xsR, xsS, vsLd;
        for (int r : nodes) {
            const RadicalSum& v = vals[r - first];
            if (allRational && v.is_rational())
                ratVals.push_back(v.is_zero() ? Rat(0) : v.as_rational());
            else
                allRational = false;
            xsR.push_back(1.0L / r);
            xsS.push_back(1.0L / std::sqrt(static_cast<long double>(r)));
            vsLd.push_back(static_cast<long double>(dbl[r - first]));
        }
        Route routeR = allRational ? neville_exact(nodes, ratVals) : neville_ld(xsR, vsLd);
        Route routeS = neville_ld(xsS, vsLd);
        const Route* pick = nullptr;
        const char* name = "";
        if (routeR.valid && (!routeS.valid || routeR.correction <= routeS.correction)) {
            pick = &routeR;
            name = allRational ? "extrapolated in 1/r (exact tableau)" : "extrapolated in 1/r";
        } else if (routeS.valid) {
            pick = &routeS;
            name = "extrapolated in 1/sqrt(r)";
        }
        if (pick) {
            double e = static_cast<double>(pick->estimate);
            double corr = static_cast<double>(pick->correction);
            if (corr <= 1e-5 * std::max(1.0, std::abs(e))) {
                est.status = LimitStatus::Converged;
                est.value = std::abs(e) <= 1e-7 ? 0.0 : e;
                est.note = name;
                if (std::abs(e) <= 1e-7 && e != 0) est.note += ", snapped to 0";
                return est;
            }
        }
    }

    est.status = LimitStatus::Inconclusive;
    est.note = "no stable extrapolation";
    return est;
}

} // namespace plap
