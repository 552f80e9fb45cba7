#pragma once

#include <map>
#include <vector>

#include "teich/numeric.hpp"
#include "teich/semifield.hpp"

namespace teich {

// Sparse multivariate Laurent polynomial with exponents in (1/2)Z, stored
// doubled, and integer coefficients. Exact arithmetic throughout.
struct LaurentPoly {
    int nvars = 0;
    std::map<std::vector<int>, Int> terms;  // doubled exponent vector -> coefficient

    LaurentPoly() = default;
    explicit LaurentPoly(int n) : nvars(n) {}

    static LaurentPoly constant(int nvars, Int c) {
        LaurentPoly p(nvars);
        if (c != 0) p.terms[std::vector<int>(nvars, 0)] = std::move(c);
        return p;
    }
    // x_i^(e2/2)
    static LaurentPoly monomial(int nvars, int i, int e2, Int c = Int(1)) {
        LaurentPoly p(nvars);
        std::vector<int> e(nvars, 0);
        e[i] = e2;
        if (c != 0) p.terms[std::move(e)] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms) {
            Int& t = terms[e];
            t += c;
            if (t == 0) terms.erase(e);
        }
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

    LaurentPoly operator-() const {
        LaurentPoly out(nvars);
        for (auto& [e, c] : terms) out.terms[e] = -c;
        return out;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out(a.nvars);
        for (auto& [ea, ca] : a.terms) {
            for (auto& [eb, cb] : b.terms) {
                std::vector<int> e(a.nvars);
                for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
                out.terms[std::move(e)] += ca * cb;
            }
        }
        for (auto it = out.terms.begin(); it != out.terms.end();) {
            if (it->second == 0) it = out.terms.erase(it);
            else ++it;
        }
        return out;
    }

    bool operator==(const LaurentPoly& o) const { return nvars == o.nvars && terms == o.terms; }

    bool positive_coefficients() const {
        for (auto& [e, c] : terms)
            if (c <= 0) return false;
        return true;
    }

    bool integer_exponents() const {
        for (auto& [e, c] : terms)
            for (int v : e)
                if (v % 2 != 0) return false;
        return true;
    }

    // componentwise max / min of exponent vectors over all terms (doubled)
    std::vector<int> highest_exponent() const {
        std::vector<int> out(nvars, 0);
        bool first = true;
        for (auto& [e, c] : terms) {
            if (first) { out = e; first = false; continue; }
            for (int i = 0; i < nvars; ++i) out[i] = std::max(out[i], e[i]);
        }
        return out;
    }
    std::vector<int> lowest_exponent() const {
        std::vector<int> out(nvars, 0);
        bool first = true;
        for (auto& [e, c] : terms) {
            if (first) { out = e; first = false; continue; }
            for (int i = 0; i < nvars; ++i) out[i] = std::min(out[i], e[i]);
        }
        return out;
    }

    // evaluate at positive rationals (half powers need perfect squares)
    Rat eval(const std::vector<Rat>& x) const {
        Rat acc(0);
        for (auto& [e, c] : terms) {
            Rat m(c);
            for (int i = 0; i < nvars; ++i)
                if (e[i] != 0) m *= PosRatSf::half_pow(x[i], e[i]);
            acc += m;
        }
        return acc;
    }

    double eval_double(const std::vector<double>& x) const {
        double acc = 0;
        for (auto& [e, c] : terms) {
            double m = to_double(Rat(c));
            for (int i = 0; i < nvars; ++i)
                if (e[i] != 0) m *= std::pow(x[i], 0.5 * e[i]);
            acc += m;
        }
        return acc;
    }
};

// max of affine forms <exponent, .>; the tropical analogue of a positive
// Laurent polynomial (coefficients dropped to 0)
struct PiecewiseLinear {
    int nvars = 0;
    std::vector<std::vector<int>> exps;  // doubled exponents

    Rat eval(const std::vector<Rat>& x) const {
        bool first = true;
        Rat best(0);
        for (auto& e : exps) {
            Rat v(0);
            for (int i = 0; i < nvars; ++i) v += Rat(e[i], 2) * x[i];
            if (first || v > best) { best = v; first = false; }
        }
        if (first) throw Error("empty piecewise-linear function");
        return best;
    }
};

inline PiecewiseLinear tropical_analogue_poly(const LaurentPoly& p) {
    for (auto& [e, c] : p.terms)
        if (c <= 0) throw NonPositiveCoefficient("tropical analogue needs positive coefficients");
    PiecewiseLinear out;
    out.nvars = p.nvars;
    if (p.terms.empty()) throw NonPositiveCoefficient("tropical analogue of the zero polynomial");
    for (auto& [e, c] : p.terms) out.exps.push_back(e);
    return out;
}

}  // namespace teich
