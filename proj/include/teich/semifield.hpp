#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "teich/numeric.hpp"

namespace teich {

struct MissingVariable : Error { using Error::Error; };
struct NonSquareHalfPower : Error { using Error::Error; };
struct DomainViolation : Error { using Error::Error; };
struct NonPositiveCoefficient : Error { using Error::Error; };
struct Diverged : Error { using Error::Error; };

enum class SemifieldTag { PosRat, PosFloat, TropQ, TropZ, TropR };

inline std::string tag_name(SemifieldTag t) {
    switch (t) {
        case SemifieldTag::PosRat: return "posrat";
        case SemifieldTag::PosFloat: return "posfloat";
        case SemifieldTag::TropQ: return "tropQ";
        case SemifieldTag::TropZ: return "tropZ";
        case SemifieldTag::TropR: return "tropR";
    }
    return "?";
}

inline SemifieldTag tag_from_name(const std::string& s) {
    if (s == "posrat") return SemifieldTag::PosRat;
    if (s == "posfloat") return SemifieldTag::PosFloat;
    if (s == "tropQ") return SemifieldTag::TropQ;
    if (s == "tropZ") return SemifieldTag::TropZ;
    if (s == "tropR") return SemifieldTag::TropR;
    throw Error("unknown semifield tag '" + s + "'");
}

// Each semifield provides (add, mul, one, inv, pow) plus conversion of a
// positive rational constant. Tropical tags send constants to 0.

struct PosRatSf {
    using Value = Rat;
    static constexpr SemifieldTag tag = SemifieldTag::PosRat;
    static constexpr bool tropical = false;
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value one() { return Rat(1); }
    static Value inv(const Value& a) { return Rat(1) / a; }
    static Value pow(const Value& a, long long n) { return pow_rat(a, n); }
    static Value constant(const Rat& c) {
        if (c <= 0) throw DomainViolation("nonpositive constant in positive semifield");
        return c;
    }
    static bool valid(const Value& a) { return a > 0; }
    static Value half_pow(const Value& a, long long n2) {  // a^(n2/2)
        if (n2 % 2 == 0) return pow(a, n2 / 2);
        auto r = sqrt_exact(a);
        if (!r) throw NonSquareHalfPower("half-integer power of a non-square rational");
        return pow(*r, n2);
    }
};

struct PosFloatSf {
    using Value = double;
    static constexpr SemifieldTag tag = SemifieldTag::PosFloat;
    static constexpr bool tropical = false;
    static Value add(Value a, Value b) { return a + b; }
    static Value mul(Value a, Value b) { return a * b; }
    static Value one() { return 1.0; }
    static Value inv(Value a) { return 1.0 / a; }
    static Value pow(Value a, long long n) { return std::pow(a, (double)n); }
    static Value constant(const Rat& c) {
        if (c <= 0) throw DomainViolation("nonpositive constant in positive semifield");
        return to_double(c);
    }
    static bool valid(Value a) { return a > 0 && std::isfinite(a); }
    static Value half_pow(Value a, long long n2) { return std::pow(a, 0.5 * (double)n2); }
};

struct TropQSf {
    using Value = Rat;
    static constexpr SemifieldTag tag = SemifieldTag::TropQ;
    static constexpr bool tropical = true;
    static Value add(const Value& a, const Value& b) { return a > b ? a : b; }
    static Value mul(const Value& a, const Value& b) { return a + b; }
    static Value one() { return Rat(0); }
    static Value inv(const Value& a) { return -a; }
    static Value pow(const Value& a, long long n) { return a * Rat(n); }
    static Value constant(const Rat& c) {
        if (c <= 0) throw DomainViolation("nonpositive constant in a semifield");
        return Rat(0);
    }
    static bool valid(const Value&) { return true; }
    static Value half_pow(const Value& a, long long n2) { return a * Rat(n2, 2); }
};

struct TropZSf {
    using Value = Int;
    static constexpr SemifieldTag tag = SemifieldTag::TropZ;
    static constexpr bool tropical = true;
    static Value add(const Value& a, const Value& b) { return a > b ? a : b; }
    static Value mul(const Value& a, const Value& b) { return a + b; }
    static Value one() { return Int(0); }
    static Value inv(const Value& a) { return -a; }
    static Value pow(const Value& a, long long n) { return a * n; }
    static Value constant(const Rat& c) {
        if (c <= 0) throw DomainViolation("nonpositive constant in a semifield");
        return Int(0);
    }
    static bool valid(const Value&) { return true; }
    static Value half_pow(const Value& a, long long n2) {
        Int p = a * n2;
        if (p % 2 != 0) throw DomainViolation("half-integer power leaves the integral tropical semifield");
        return p / 2;
    }
};

struct TropRSf {
    using Value = double;
    static constexpr SemifieldTag tag = SemifieldTag::TropR;
    static constexpr bool tropical = true;
    static Value add(Value a, Value b) { return a > b ? a : b; }
    static Value mul(Value a, Value b) { return a + b; }
    static Value one() { return 0.0; }
    static Value inv(Value a) { return -a; }
    static Value pow(Value a, long long n) { return a * (double)n; }
    static Value constant(const Rat& c) {
        if (c <= 0) throw DomainViolation("nonpositive constant in a semifield");
        return 0.0;
    }
    static bool valid(Value a) { return std::isfinite(a); }
    static Value half_pow(Value a, long long n2) { return a * 0.5 * (double)n2; }
};

// ---------------------------------------------------------------------------
// subtraction-free expressions

// Tree of constants, variables, sums, products and powers with exponents in
// (1/2)Z (stored doubled). No subtraction node exists by construction.
struct SfExpr {
    enum class Kind { Const, Var, Add, Mul, Pow };
    Kind kind = Kind::Const;
    Rat cval = Rat(1);
    std::string var;
    std::vector<SfExpr> kids;
    long long pow2 = 2;  // exponent*2 for Pow nodes

    static SfExpr constant(Rat c) {
        SfExpr e;
        e.kind = Kind::Const;
        e.cval = std::move(c);
        return e;
    }
    static SfExpr variable(std::string name) {
        SfExpr e;
        e.kind = Kind::Var;
        e.var = std::move(name);
        return e;
    }
    static SfExpr add(std::vector<SfExpr> kids) {
        SfExpr e;
        e.kind = Kind::Add;
        e.kids = std::move(kids);
        return e;
    }
    static SfExpr mul(std::vector<SfExpr> kids) {
        SfExpr e;
        e.kind = Kind::Mul;
        e.kids = std::move(kids);
        return e;
    }
    static SfExpr pow(SfExpr base, long long n) { return pow_half(std::move(base), 2 * n); }
    static SfExpr pow_half(SfExpr base, long long n2) {
        SfExpr e;
        e.kind = Kind::Pow;
        e.kids.push_back(std::move(base));
        e.pow2 = n2;
        return e;
    }

    size_t size() const {
        size_t n = 1;
        for (auto& k : kids) n += k.size();
        return n;
    }
};

template <class S>
typename S::Value sf_eval(const SfExpr& e, const std::map<std::string, typename S::Value>& env) {
    using V = typename S::Value;
    switch (e.kind) {
        case SfExpr::Kind::Const:
            return S::constant(e.cval);
        case SfExpr::Kind::Var: {
            auto it = env.find(e.var);
            if (it == env.end()) throw MissingVariable("unbound variable '" + e.var + "'");
            if (!S::valid(it->second)) throw DomainViolation("value outside the semifield domain");
            return it->second;
        }
        case SfExpr::Kind::Add: {
            V acc = sf_eval<S>(e.kids.front(), env);
            for (size_t i = 1; i < e.kids.size(); ++i) acc = S::add(acc, sf_eval<S>(e.kids[i], env));
            return acc;
        }
        case SfExpr::Kind::Mul: {
            V acc = sf_eval<S>(e.kids.front(), env);
            for (size_t i = 1; i < e.kids.size(); ++i) acc = S::mul(acc, sf_eval<S>(e.kids[i], env));
            return acc;
        }
        case SfExpr::Kind::Pow: {
            V base = sf_eval<S>(e.kids.front(), env);
            if (e.pow2 % 2 == 0) return S::pow(base, e.pow2 / 2);
            return S::half_pow(base, e.pow2);
        }
    }
    throw Error("bad expression node");
}

// log-domain evaluation: returns log f({exp(l_v)}) for inputs given as logs
inline double sf_eval_log(const SfExpr& e, const std::map<std::string, double>& logenv) {
    switch (e.kind) {
        case SfExpr::Kind::Const:
            if (e.cval <= 0) throw DomainViolation("nonpositive constant");
            return std::log(to_double(e.cval));
        case SfExpr::Kind::Var: {
            auto it = logenv.find(e.var);
            if (it == logenv.end()) throw MissingVariable("unbound variable '" + e.var + "'");
            return it->second;
        }
        case SfExpr::Kind::Add: {
            double m = -std::numeric_limits<double>::infinity();
            std::vector<double> ls;
            ls.reserve(e.kids.size());
            for (auto& k : e.kids) {
                ls.push_back(sf_eval_log(k, logenv));
                m = std::max(m, ls.back());
            }
            double s = 0;
            for (double l : ls) s += std::exp(l - m);
            return m + std::log(s);
        }
        case SfExpr::Kind::Mul: {
            double s = 0;
            for (auto& k : e.kids) s += sf_eval_log(k, logenv);
            return s;
        }
        case SfExpr::Kind::Pow:
            return 0.5 * (double)e.pow2 * sf_eval_log(e.kids.front(), logenv);
    }
    throw Error("bad expression node");
}

// eps * log f(exp(a_1/eps), ..., exp(a_n/eps)) for each eps in the list
inline std::vector<double> tropical_limit_probe(const SfExpr& e, const std::map<std::string, Rat>& env,
                                                const std::vector<Rat>& eps_list) {
    std::vector<double> out;
    for (const Rat& epsr : eps_list) {
        double eps = to_double(epsr);
        if (!(eps > 0)) throw DomainViolation("eps must be positive");
        std::map<std::string, double> logenv;
        for (auto& [k, v] : env) logenv[k] = to_double(v) / eps;
        double val = eps * sf_eval_log(e, logenv);
        if (!std::isfinite(val)) throw Diverged("tropical limit probe overflowed");
        out.push_back(val);
    }
    return out;
}

// ---------------------------------------------------------------------------
// s-expression serialization: (+ (^ a 3) (* 3 a (^ b 2)) 2)

inline std::string to_sexpr(const SfExpr& e) {
    switch (e.kind) {
        case SfExpr::Kind::Const:
            return to_string(e.cval);
        case SfExpr::Kind::Var:
            return e.var;
        case SfExpr::Kind::Add:
        case SfExpr::Kind::Mul: {
            std::string s = e.kind == SfExpr::Kind::Add ? "(+" : "(*";
            for (auto& k : e.kids) s += " " + to_sexpr(k);
            return s + ")";
        }
        case SfExpr::Kind::Pow: {
            std::string ex = e.pow2 % 2 == 0 ? std::to_string(e.pow2 / 2)
                                             : std::to_string(e.pow2) + "/2";
            return "(^ " + to_sexpr(e.kids.front()) + " " + ex + ")";
        }
    }
    throw Error("bad expression node");
}

namespace detail {
inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
}

inline SfExpr parse_sexpr_at(const std::string& s, size_t& i) {
    skip_ws(s, i);
    if (i >= s.size()) throw Error("unexpected end of s-expression");
    if (s[i] == '(') {
        ++i;
        skip_ws(s, i);
        if (i >= s.size()) throw Error("truncated s-expression");
        char op = s[i++];
        std::vector<SfExpr> kids;
        if (op == '^') {
            SfExpr base = parse_sexpr_at(s, i);
            skip_ws(s, i);
            size_t j = i;
            while (j < s.size() && s[j] != ')' && !std::isspace((unsigned char)s[j])) ++j;
            std::string tok = s.substr(i, j - i);
            i = j;
            skip_ws(s, i);
            if (i >= s.size() || s[i] != ')') throw Error("missing ')'");
            ++i;
            long long n2;
            auto slash = tok.find('/');
            if (slash != std::string::npos) {
                if (tok.substr(slash + 1) != "2") throw Error("power denominator must be 2");
                n2 = std::stoll(tok.substr(0, slash));
            } else {
                n2 = 2 * std::stoll(tok);
            }
            return SfExpr::pow_half(std::move(base), n2);
        }
        if (op != '+' && op != '*') throw Error(std::string("unknown operator '") + op + "'");
        while (true) {
            skip_ws(s, i);
            if (i >= s.size()) throw Error("missing ')'");
            if (s[i] == ')') {
                ++i;
                break;
            }
            kids.push_back(parse_sexpr_at(s, i));
        }
        if (kids.empty()) throw Error("empty operator node");
        return op == '+' ? SfExpr::add(std::move(kids)) : SfExpr::mul(std::move(kids));
    }
    size_t j = i;
    while (j < s.size() && s[j] != ')' && s[j] != '(' && !std::isspace((unsigned char)s[j])) ++j;
    std::string tok = s.substr(i, j - i);
    i = j;
    if (tok.empty()) throw Error("empty token");
    bool numeric = std::isdigit((unsigned char)tok[0]);
    if (numeric) return SfExpr::constant(parse_rat(tok));
    return SfExpr::variable(tok);
}
}  // namespace detail

inline SfExpr parse_sexpr(const std::string& s) {
    size_t i = 0;
    SfExpr e = detail::parse_sexpr_at(s, i);
    detail::skip_ws(s, i);
    if (i != s.size()) throw Error("trailing characters after s-expression");
    return e;
}

}  // namespace teich
