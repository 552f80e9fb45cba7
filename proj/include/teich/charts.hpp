#pragma once

#include <memory>
#include <vector>

#include "teich/semifield.hpp"
#include "teich/surface.hpp"

namespace teich {

struct NotAHoleVertex : Error { using Error::Error; };
struct NonIntegralPowerOnPositiveTag : Error { using Error::Error; };

// X-charts carry one semifield value per internal edge, A-charts one per
// edge. Values are indexed by edge id; X entries on external edges are
// present but never read.

template <class S>
struct XChart {
    TriPtr tri;
    std::vector<typename S::Value> values;

    XChart() = default;
    XChart(TriPtr t, std::vector<typename S::Value> v) : tri(std::move(t)), values(std::move(v)) {
        if ((int)values.size() != tri->num_edges()) throw Error("chart size mismatch");
        if constexpr (!S::tropical) {
            for (int e = 0; e < tri->num_edges(); ++e)
                if (tri->internal(e) && !S::valid(values[e]))
                    throw DomainViolation("X-chart value outside the semifield");
        }
    }
    bool operator==(const XChart& o) const {
        if (!tri->equal_marked(*o.tri)) return false;
        for (int e = 0; e < tri->num_edges(); ++e)
            if (tri->internal(e) && !(values[e] == o.values[e])) return false;
        return true;
    }
};

template <class S>
struct AChart {
    TriPtr tri;
    std::vector<typename S::Value> values;

    AChart() = default;
    AChart(TriPtr t, std::vector<typename S::Value> v) : tri(std::move(t)), values(std::move(v)) {
        if ((int)values.size() != tri->num_edges()) throw Error("chart size mismatch");
        for (auto& x : values)
            if (!S::valid(x)) throw DomainViolation("A-chart value outside the semifield");
    }
    // all external edges carry the multiplicative identity
    bool restricted_to_A0() const {
        for (int e = 0; e < tri->num_edges(); ++e)
            if (!tri->internal(e) && !(values[e] == S::one())) return false;
        return true;
    }
    bool operator==(const AChart& o) const {
        return tri->equal_marked(*o.tri) && values == o.values;
    }
};

template <class S>
XChart<S> all_ones_x(TriPtr t) {
    return XChart<S>(t, std::vector<typename S::Value>(t->num_edges(), S::one()));
}
template <class S>
AChart<S> all_ones_a(TriPtr t) {
    return AChart<S>(t, std::vector<typename S::Value>(t->num_edges(), S::one()));
}

// ---------------------------------------------------------------------------
// mutations: one engine over the abstract semifield; the tropical instances
// are literally the lamination coordinate rules

template <class S>
XChart<S> mutate_x(const XChart<S>& c, int alpha) {
    const Triangulation& t = *c.tri;
    EpsilonMatrix eps = epsilon_matrix(t);
    FlipResult fr = flip(t, alpha);
    auto vals = c.values;
    vals[alpha] = S::inv(c.values[alpha]);
    for (int b = 0; b < t.num_edges(); ++b) {
        if (b == alpha || !t.internal(b)) continue;
        int k = eps.at(alpha, b);
        if (k == 0) continue;
        typename S::Value factor =
            k > 0 ? S::pow(S::add(S::one(), c.values[alpha]), k)
                  : S::pow(S::add(S::one(), S::inv(c.values[alpha])), k);
        vals[b] = S::mul(c.values[b], factor);
    }
    return XChart<S>(share(std::move(fr.after)), std::move(vals));
}

template <class S>
AChart<S> mutate_a(const AChart<S>& c, int alpha) {
    const Triangulation& t = *c.tri;
    EpsilonMatrix eps = epsilon_matrix(t);
    FlipResult fr = flip(t, alpha);
    auto vals = c.values;
    typename S::Value pos = S::one(), neg = S::one();
    for (int d = 0; d < t.num_edges(); ++d) {
        int k = eps.at(alpha, d);
        if (k > 0) pos = S::mul(pos, S::pow(c.values[d], k));
        if (k < 0) neg = S::mul(neg, S::pow(c.values[d], -k));
    }
    vals[alpha] = S::mul(S::add(pos, neg), S::inv(c.values[alpha]));
    return AChart<S>(share(std::move(fr.after)), std::move(vals));
}

template <class S>
XChart<S> mutate_x_word(XChart<S> c, const FlipWord& w) {
    for (int e : w) c = mutate_x(c, e);
    return c;
}
template <class S>
AChart<S> mutate_a_word(AChart<S> c, const FlipWord& w) {
    for (int e : w) c = mutate_a(c, e);
    return c;
}

// x^a = prod_b (a_b)^(-eps^{ab})
template <class S>
XChart<S> p_map(const AChart<S>& c) {
    const Triangulation& t = *c.tri;
    EpsilonMatrix eps = epsilon_matrix(t);
    std::vector<typename S::Value> vals(t.num_edges(), S::one());
    for (int a = 0; a < t.num_edges(); ++a) {
        if (!t.internal(a)) continue;
        typename S::Value acc = S::one();
        for (int b = 0; b < t.num_edges(); ++b) {
            int k = eps.at(a, b);
            if (k != 0) acc = S::mul(acc, S::pow(c.values[b], -k));
        }
        vals[a] = acc;
    }
    return XChart<S>(c.tri, std::move(vals));
}

// ---------------------------------------------------------------------------
// per-vertex invariants and actions

// product (or tropical sum) over internal edges incident to the vertex,
// loops counted twice
template <class S>
typename S::Value hole_invariant_x(const XChart<S>& c, int v) {
    const auto& vert = c.tri->vertex(v);
    if (vert.kind != Triangulation::VertexKind::Hole)
        throw NotAHoleVertex("hole invariant of a cilium vertex");
    typename S::Value acc = S::one();
    for (int e : vert.edge_ends) acc = S::mul(acc, c.values[e]);
    return acc;
}

enum class VertexClass { Cilium, Puncture, HolePositive, HoleNegative };

template <class S>
std::vector<VertexClass> classify_vertices(const XChart<S>& c) {
    std::vector<VertexClass> out;
    for (int v = 0; v < c.tri->num_vertices(); ++v) {
        if (c.tri->vertex(v).kind == Triangulation::VertexKind::Cilium) {
            out.push_back(VertexClass::Cilium);
            continue;
        }
        auto inv = hole_invariant_x(c, v);
        auto one = S::one();
        if (inv == one) out.push_back(VertexClass::Puncture);
        else if (inv > one) out.push_back(VertexClass::HolePositive);
        else out.push_back(VertexClass::HoleNegative);
    }
    return out;
}

// multiply every edge incident to the vertex by t (loops twice)
template <class S>
AChart<S> r_action_a(const AChart<S>& c, int v, const typename S::Value& t) {
    auto vals = c.values;
    for (int e : c.tri->vertex(v).edge_ends) vals[e] = S::mul(vals[e], t);
    return AChart<S>(c.tri, std::move(vals));
}

// Horocycle area (positive tags) or collar value (tropical tags) at a hole
// vertex. The tropical form is the corner maximum of a_al + a_be - a_de. The
// positive form is half the sum over corners of a_de / (a_al a_be): the half
// makes the decorated punctured torus satisfy U^2+V^2+W^2 = UVW*A exactly,
// with A = 3 at U=V=W=1.
template <class S>
typename S::Value collar_or_area(const AChart<S>& c, int v) {
    const auto& vert = c.tri->vertex(v);
    if (vert.kind != Triangulation::VertexKind::Hole)
        throw NotAHoleVertex("collar/area of a cilium vertex");
    const Triangulation& tr = *c.tri;
    bool first = true;
    typename S::Value acc = S::one();
    for (int corner : vert.corners) {
        int t = corner / 3, k = corner % 3;
        int e_out = tr.edge_at(t, k);             // side at the corner
        int e_in = tr.edge_at(t, (k + 2) % 3);    // other side at the corner
        int e_opp = tr.edge_at(t, (k + 1) % 3);   // opposite side
        typename S::Value term;
        if constexpr (S::tropical) {
            term = S::mul(S::mul(c.values[e_out], c.values[e_in]), S::inv(c.values[e_opp]));
            acc = first ? term : S::add(acc, term);
        } else {
            term = S::mul(c.values[e_opp], S::inv(S::mul(c.values[e_out], c.values[e_in])));
            acc = first ? term : S::add(acc, term);
        }
        first = false;
    }
    if constexpr (!S::tropical) acc = S::mul(acc, S::inv(S::add(S::one(), S::one())));
    return acc;
}

// ---------------------------------------------------------------------------
// scaling and integrality

// tropical tags: multiply coordinates by u; positive tags: raise to an
// integral power u
template <class S, class Chart>
Chart scale_chart(const Chart& c, const Rat& u) {
    auto vals = c.values;
    if constexpr (S::tropical) {
        for (size_t i = 0; i < vals.size(); ++i) {
            if constexpr (std::is_same_v<typename S::Value, Int>) {
                Rat r = Rat(c.values[i]) * u;
                if (denominator(r) != 1)
                    throw DomainViolation("scaling leaves the integral tropical semifield");
                vals[i] = numerator(r);
            } else if constexpr (std::is_same_v<typename S::Value, Rat>) {
                vals[i] = c.values[i] * u;
            } else {
                vals[i] = c.values[i] * to_double(u);
            }
        }
    } else {
        if (denominator(u) != 1)
            throw NonIntegralPowerOnPositiveTag("non-integral power on a positive tag");
        long long n = numerator(u).template convert_to<long long>();
        for (auto& x : vals) x = S::pow(x, n);
    }
    return Chart(c.tri, std::move(vals));
}

struct IntegralityReport {
    bool is_integral = false;
    bool is_even = false;
};

// A tropical A-chart is integral when every value is in (1/2)Z and every
// triangle's side sum is an integer; even when all values are integers.
inline IntegralityReport integrality_predicates(const AChart<TropQSf>& c) {
    IntegralityReport rep;
    rep.is_integral = true;
    rep.is_even = true;
    for (auto& v : c.values) {
        Int den = denominator(v);
        if (den != 1) rep.is_even = false;
        if (den != 1 && den != 2) rep.is_integral = false;
    }
    if (rep.is_integral) {
        for (int t = 0; t < c.tri->num_triangles(); ++t) {
            const auto& tr = c.tri->triangle(t);
            Rat sum = c.values[tr[0]] + c.values[tr[1]] + c.values[tr[2]];
            if (denominator(sum) != 1) {
                rep.is_integral = false;
                break;
            }
        }
    }
    if (!rep.is_integral) rep.is_even = false;
    return rep;
}

}  // namespace teich
