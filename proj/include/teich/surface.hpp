#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "teich/numeric.hpp"

namespace teich {

struct InadmissibleSignature : Error { using Error::Error; };
struct BadGluing : Error { using Error::Error; };
struct CountMismatch : Error { using Error::Error; };
struct ExternalEdge : Error { using Error::Error; };
struct SelfFoldedEdge : Error { using Error::Error; };
struct InapplicableWord : Error { using Error::Error; };

// Genus plus cilia counts per boundary component (unordered).
struct SurfaceSig {
    int genus = 0;
    std::vector<int> boundary;  // p_i >= 0, kept sorted descending

    SurfaceSig() = default;
    SurfaceSig(int g, std::vector<int> p) : genus(g), boundary(std::move(p)) {
        std::sort(boundary.begin(), boundary.end(), std::greater<int>());
    }

    int s() const { return (int)boundary.size(); }
    int cilia() const { return std::accumulate(boundary.begin(), boundary.end(), 0); }
    int holes() const { return (int)std::count(boundary.begin(), boundary.end(), 0); }

    bool operator==(const SurfaceSig& o) const {
        return genus == o.genus && boundary == o.boundary;
    }
};

struct SurfaceCounts {
    int V, E, E0, F, n;
};

inline bool admissible(const SurfaceSig& sig) {
    if (sig.genus < 0 || sig.s() < 1) return false;
    for (int p : sig.boundary)
        if (p < 0) return false;
    int g = sig.genus, s = sig.s(), c = sig.cilia();
    int F = 4 * g - 4 + 2 * s + c;
    int n = 6 * g - 6 + 3 * s + c;
    return F >= 1 && n >= 0;
}

inline SurfaceCounts derive_counts(const SurfaceSig& sig) {
    if (!admissible(sig)) throw InadmissibleSignature("no triangulation exists for this signature");
    int g = sig.genus, s = sig.s(), c = sig.cilia(), h = sig.holes();
    SurfaceCounts out;
    out.V = h + c;
    out.E0 = c;
    out.E = 6 * g - 6 + 3 * s + 2 * c;
    out.n = 6 * g - 6 + 3 * s + c;
    out.F = 4 * g - 4 + 2 * s + c;
    return out;
}

// Marked triangulation of a ciliated surface. Triangles list their three
// edge ids in counterclockwise order; that order is the orientation.
// Everything else (slots, corners, vertices, boundary) is derived.
class Triangulation {
public:
    struct Slot {
        int tri = -1;
        int pos = -1;
        bool valid() const { return tri >= 0; }
    };

    enum class VertexKind { Hole, Cilium };  // circle link vs segment link

    struct Vertex {
        VertexKind kind;
        // corners in the order of the clockwise walk (cyclic for holes,
        // boundary-to-boundary for cilia); a corner is encoded 3*tri+pos
        std::vector<int> corners;
        // incident edge ids with multiplicity (one entry per edge-end)
        std::vector<int> edge_ends;
    };

    static Triangulation from_triangles(std::vector<std::array<int, 3>> tris, int num_edges) {
        Triangulation t;
        t.tris_ = std::move(tris);
        t.nedges_ = num_edges;
        t.derive();
        return t;
    }

    int num_triangles() const { return (int)tris_.size(); }
    int num_edges() const { return nedges_; }
    int edge_at(int tri, int pos) const { return tris_[tri][pos]; }
    const std::array<int, 3>& triangle(int t) const { return tris_[t]; }

    int slot_count(int e) const { return slots_[e][1].valid() ? 2 : 1; }
    bool internal(int e) const { return slot_count(e) == 2; }
    const std::array<Slot, 2>& slots(int e) const { return slots_[e]; }

    // the slot of edge e other than (tri,pos)
    Slot other_slot(int e, int tri, int pos) const {
        const auto& s = slots_[e];
        if (s[0].tri == tri && s[0].pos == pos) return s[1];
        return s[0];
    }

    std::vector<int> internal_edges() const {
        std::vector<int> out;
        for (int e = 0; e < nedges_; ++e)
            if (internal(e)) out.push_back(e);
        return out;
    }

    int num_vertices() const { return (int)vertices_.size(); }
    const Vertex& vertex(int v) const { return vertices_[v]; }
    int vertex_of_corner(int tri, int pos) const { return corner_vertex_[3 * tri + pos]; }

    const SurfaceSig& sig() const { return sig_; }
    SurfaceCounts counts() const { return derive_counts(sig_); }

    bool flippable(int e) const {
        return internal(e) && slots_[e][0].tri != slots_[e][1].tri;
    }

    // A flip is regular when no triangle of its quadrilateral is self-folded
    // and the flip does not create a self-folded triangle. The matrix and
    // coordinate flip rules are statements about regular flips; opposite-side
    // identifications (as in the punctured torus) are fine.
    bool flip_is_regular(int e) const {
        if (!flippable(e)) return false;
        auto s = slots_[e];
        int t1 = s[0].tri, i = s[0].pos, t2 = s[1].tri, j = s[1].pos;
        int b = tris_[t1][(i + 1) % 3], c = tris_[t1][(i + 2) % 3];
        int d = tris_[t2][(j + 1) % 3], ee = tris_[t2][(j + 2) % 3];
        return b != c && d != ee && c != d && b != ee;
    }

    // Marked equality: same triangles with same edge ids (rotation-insensitive).
    bool equal_marked(const Triangulation& o) const {
        return canonical_rows() == o.canonical_rows() && nedges_ == o.nedges_;
    }

private:
    std::vector<std::array<int, 3>> tris_;
    int nedges_ = 0;
    std::vector<std::array<Slot, 2>> slots_;
    std::vector<int> corner_vertex_;
    std::vector<Vertex> vertices_;
    SurfaceSig sig_;

    std::vector<std::array<int, 3>> canonical_rows() const {
        std::vector<std::array<int, 3>> rows;
        rows.reserve(tris_.size());
        for (auto& t : tris_) {
            std::array<int, 3> best = t;
            for (int r = 1; r < 3; ++r) {
                std::array<int, 3> rot = {t[r], t[(r + 1) % 3], t[(r + 2) % 3]};
                if (rot < best) best = rot;
            }
            rows.push_back(best);
        }
        std::sort(rows.begin(), rows.end());
        return rows;
    }

    // Corner pos of triangle tri sits at the start of side pos; side pos runs
    // corner pos -> corner pos+1. Gluing across an edge is orientation
    // reversing: corner(t,i) ~ corner(u,j+1), corner(t,i+1) ~ corner(u,j).
    void derive() {
        const int F = (int)tris_.size();
        if (F == 0) throw BadGluing("no triangles");
        slots_.assign(nedges_, {});
        for (int t = 0; t < F; ++t) {
            for (int k = 0; k < 3; ++k) {
                int e = tris_[t][k];
                if (e < 0 || e >= nedges_) throw BadGluing("edge id out of range");
                auto& s = slots_[e];
                if (!s[0].valid()) s[0] = {t, k};
                else if (!s[1].valid()) s[1] = {t, k};
                else throw BadGluing("edge used more than twice");
            }
        }
        for (int e = 0; e < nedges_; ++e)
            if (!slots_[e][0].valid()) throw BadGluing("unused edge id");

        // vertices by clockwise corner walk
        corner_vertex_.assign(3 * F, -1);
        vertices_.clear();
        for (int c0 = 0; c0 < 3 * F; ++c0) {
            if (corner_vertex_[c0] >= 0) continue;
            // rewind counterclockwise to a boundary start if there is one
            int c = c0;
            std::set<int> seen;
            bool circle = false;
            while (true) {
                if (seen.count(c)) { circle = true; break; }
                seen.insert(c);
                int t = c / 3, k = c % 3;
                int ein = tris_[t][(k + 2) % 3];  // side ending at this corner
                Slot os = other_slot(ein, t, (k + 2) % 3);
                if (!os.valid()) break;  // boundary reached: c starts the walk
                c = 3 * os.tri + os.pos;  // corner(u,j) with side j = the edge
            }
            Vertex v;
            v.kind = circle ? VertexKind::Hole : VertexKind::Cilium;
            int vid = (int)vertices_.size();
            int cur = c;
            while (true) {
                if (corner_vertex_[cur] >= 0) break;  // closed the circle
                corner_vertex_[cur] = vid;
                v.corners.push_back(cur);
                int t = cur / 3, k = cur % 3;
                int eout = tris_[t][k];
                Slot os = other_slot(eout, t, k);
                if (!os.valid()) break;  // boundary on the outgoing side
                cur = 3 * os.tri + ((os.pos + 1) % 3);
            }
            // edge-ends: incoming side of first corner, then the crossed side
            // of each corner in walk order
            {
                int t = v.corners.front() / 3, k = v.corners.front() % 3;
                if (v.kind == VertexKind::Cilium)
                    v.edge_ends.push_back(tris_[t][(k + 2) % 3]);
            }
            for (int cc : v.corners) v.edge_ends.push_back(tris_[cc / 3][cc % 3]);
            vertices_.push_back(std::move(v));
        }

        check_connected();
        derive_sig();
    }

    void check_connected() const {
        const int F = (int)tris_.size();
        std::vector<char> vis(F, 0);
        std::vector<int> stack = {0};
        vis[0] = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int k = 0; k < 3; ++k) {
                Slot os = other_slot(tris_[t][k], t, k);
                if (os.valid() && !vis[os.tri]) {
                    vis[os.tri] = 1;
                    stack.push_back(os.tri);
                }
            }
        }
        for (char c : vis)
            if (!c) throw BadGluing("triangulation is not connected");
    }

    void derive_sig() {
        const int F = (int)tris_.size();
        int E = nedges_;
        int V = (int)vertices_.size();
        int holes = 0;
        for (auto& v : vertices_)
            if (v.kind == VertexKind::Hole) ++holes;

        // boundary components: cycles of external edges linked through cilia
        std::vector<int> exts;
        for (int e = 0; e < E; ++e)
            if (!internal(e)) exts.push_back(e);
        std::set<int> unvisited(exts.begin(), exts.end());
        std::vector<int> cycle_sizes;
        while (!unvisited.empty()) {
            int start = *unvisited.begin();
            int e = start, size = 0;
            do {
                unvisited.erase(e);
                ++size;
                // follow the boundary: from edge e's slot, the next external
                // edge counterclockwise shares the cilium at corner pos+1
                Slot s = slots_[e][0];
                int t = s.tri, k = (s.pos + 1) % 3;
                // walk corners around that cilium until the outgoing boundary side
                while (true) {
                    Slot os = other_slot(tris_[t][k], t, k);
                    if (!os.valid()) break;
                    t = os.tri;
                    k = (os.pos + 1) % 3;
                }
                e = tris_[t][k];
            } while (e != start);
            cycle_sizes.push_back(size);
        }

        int s_total = holes + (int)cycle_sizes.size();
        if (s_total < 1) throw BadGluing("closed surface: no boundary component");
        int chi = V - E + F;
        // #F - #E + #V = 2 - 2g + h - s
        int twog = 2 + holes - s_total - chi;
        if (twog < 0 || twog % 2 != 0) throw BadGluing("inconsistent complex (bad genus)");

        std::vector<int> P(cycle_sizes.begin(), cycle_sizes.end());
        P.insert(P.end(), holes, 0);
        sig_ = SurfaceSig(twog / 2, std::move(P));

        SurfaceCounts want = derive_counts(sig_);
        if (want.V != V || want.E != E || want.F != F || want.E0 != (int)exts.size())
            throw CountMismatch("derived counts disagree with signature formulas");
    }
};

using TriPtr = std::shared_ptr<const Triangulation>;

inline TriPtr share(Triangulation t) { return std::make_shared<const Triangulation>(std::move(t)); }

// ---------------------------------------------------------------------------
// builders

// build from explicit side gluings; unglued sides become external edges
inline Triangulation build_triangulation(const SurfaceSig& sig,
                                         const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& gluing) {
    SurfaceCounts want = derive_counts(sig);
    int F = want.F;
    std::vector<std::array<int, 3>> tris(F, {-1, -1, -1});
    int next_edge = 0;
    for (auto& [a, b] : gluing) {
        auto [t1, k1] = a;
        auto [t2, k2] = b;
        if (t1 < 0 || t1 >= F || t2 < 0 || t2 >= F || k1 < 0 || k1 > 2 || k2 < 0 || k2 > 2)
            throw BadGluing("gluing side out of range");
        if (tris[t1][k1] != -1 || tris[t2][k2] != -1) throw BadGluing("side used twice");
        if (t1 == t2 && k1 == k2) throw BadGluing("side glued to itself");
        tris[t1][k1] = tris[t2][k2] = next_edge++;
    }
    for (auto& t : tris)
        for (auto& e : t)
            if (e == -1) e = next_edge++;
    Triangulation out = Triangulation::from_triangles(std::move(tris), next_edge);
    if (!(out.sig() == sig)) throw CountMismatch("gluing does not triangulate the given signature");
    return out;
}

// fan triangulation of the ciliated disc P=(n), n >= 3: triangles
// (apex, i, i+1); diagonals get the low edge ids
inline Triangulation disc_fan(int n) {
    SurfaceSig sig(0, {n});
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> glue;
    // triangle i has sides: 0 = diagonal to (i+1), 1 = boundary, 2 = diagonal to i
    for (int i = 0; i + 1 < n - 2; ++i) glue.push_back({{i, 0}, {i + 1, 2}});
    return build_triangulation(sig, glue);
}

// the unique combinatorial triangulation of the once-punctured torus:
// two triangles, three edges, each shared by both triangles
inline Triangulation punctured_torus() {
    // triangle A = (e0,e1,e2), triangle B = (e2,e0,e1): identifications as in
    // the square model with sides e0,e1 and diagonal e2
    std::vector<std::array<int, 3>> tris = {{0, 1, 2}, {2, 0, 1}};
    return Triangulation::from_triangles(std::move(tris), 3);
}

// octagon with a central quadrilateral: the two central triangles share a
// diagonal whose quad has four distinct internal sides (flip-rule fixture)
inline Triangulation octagon_central() {
    SurfaceSig sig(0, {8});
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> glue = {
        {{0, 0}, {1, 2}},  // central diagonal
        {{0, 1}, {2, 0}},  // quad side / ear
        {{0, 2}, {3, 0}},
        {{1, 0}, {4, 0}},
        {{1, 1}, {5, 0}},
    };
    return build_triangulation(sig, glue);
}

// ---------------------------------------------------------------------------
// epsilon matrix

struct EpsilonMatrix {
    int n = 0;
    std::vector<int> a;  // row-major
    int& at(int i, int j) { return a[i * n + j]; }
    int at(int i, int j) const { return a[i * n + j]; }
    bool operator==(const EpsilonMatrix& o) const { return n == o.n && a == o.a; }
};

inline EpsilonMatrix epsilon_matrix(const Triangulation& t) {
    EpsilonMatrix m;
    m.n = t.num_edges();
    m.a.assign((size_t)m.n * m.n, 0);
    for (int i = 0; i < t.num_triangles(); ++i) {
        const auto& tr = t.triangle(i);
        for (int k = 0; k < 3; ++k) {
            // side k is counterclockwise from side k+1 at their shared corner
            m.at(tr[k], tr[(k + 1) % 3]) += 1;
            m.at(tr[(k + 1) % 3], tr[k]) -= 1;
        }
    }
    return m;
}

// Coordinate-free flip rule for the epsilon matrix.
inline EpsilonMatrix transform_epsilon(const EpsilonMatrix& eps, int g) {
    EpsilonMatrix out = eps;
    int n = eps.n;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == g || b == g) {
                out.at(a, b) = -eps.at(a, b);
            } else {
                int ag = eps.at(a, g), gb = eps.at(g, b);
                out.at(a, b) = eps.at(a, b) + (ag * std::abs(gb) + std::abs(ag) * gb) / 2;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// flips

struct FlipResult {
    Triangulation after;
    // old edge id -> new edge id; ids are reused, so this is the identity,
    // kept explicit because relation words compose these maps
    std::vector<int> correspondence;
};

inline FlipResult flip(const Triangulation& t, int alpha) {
    if (!t.internal(alpha)) throw ExternalEdge("flip of an external edge");
    auto s = t.slots(alpha);
    if (s[0].tri == s[1].tri) throw SelfFoldedEdge("flip of a self-folded edge");
    int t1 = s[0].tri, i = s[0].pos;
    int t2 = s[1].tri, j = s[1].pos;
    int b = t.edge_at(t1, (i + 1) % 3), c = t.edge_at(t1, (i + 2) % 3);
    int d = t.edge_at(t2, (j + 1) % 3), e = t.edge_at(t2, (j + 2) % 3);

    std::vector<std::array<int, 3>> rows;
    rows.reserve(t.num_triangles());
    for (int k = 0; k < t.num_triangles(); ++k) {
        if (k == t1) rows.push_back({b, alpha, e});
        else if (k == t2) rows.push_back({c, d, alpha});
        else rows.push_back(t.triangle(k));
    }
    FlipResult out{Triangulation::from_triangles(std::move(rows), t.num_edges()), {}};
    out.correspondence.resize(t.num_edges());
    std::iota(out.correspondence.begin(), out.correspondence.end(), 0);
    return out;
}

using FlipWord = std::vector<int>;

inline Triangulation apply_word(const Triangulation& t, const FlipWord& w) {
    Triangulation cur = t;
    for (int e : w) {
        if (e < 0 || e >= cur.num_edges() || !cur.internal(e) || !cur.flippable(e))
            throw InapplicableWord("flip word not applicable at edge " + std::to_string(e));
        cur = flip(cur, e).after;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// isomorphism search (orientation preserving, ignores edge ids)

namespace detail {
inline bool try_iso(const Triangulation& t1, const Triangulation& t2, int tri0, int rot0,
                    std::vector<int>& edge_map) {
    int F = t1.num_triangles();
    std::vector<std::pair<int, int>> map(F, {-1, -1});  // tri -> (image tri, rot)
    std::vector<char> used(F, 0);
    edge_map.assign(t1.num_edges(), -1);
    std::vector<int> inv_edge(t2.num_edges(), -1);
    std::vector<int> stack = {0};
    map[0] = {tri0, rot0};
    used[tri0] = 1;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        auto [b, r] = map[a];
        for (int k = 0; k < 3; ++k) {
            int ea = t1.edge_at(a, k);
            int eb = t2.edge_at(b, (k + r) % 3);
            if (edge_map[ea] == -1 && inv_edge[eb] == -1) {
                edge_map[ea] = eb;
                inv_edge[eb] = ea;
            } else if (edge_map[ea] != eb || inv_edge[eb] != ea) {
                return false;
            }
            auto sa = t1.other_slot(ea, a, k);
            auto sb = t2.other_slot(eb, b, (k + r) % 3);
            if (sa.valid() != sb.valid()) return false;
            if (!sa.valid()) continue;
            int rot = (sb.pos - sa.pos % 3 + 6) % 3;
            if (map[sa.tri].first == -1) {
                if (used[sb.tri]) return false;
                map[sa.tri] = {sb.tri, rot};
                used[sb.tri] = 1;
                stack.push_back(sa.tri);
            } else if (map[sa.tri] != std::make_pair(sb.tri, rot)) {
                return false;
            }
        }
    }
    for (int e = 0; e < t1.num_edges(); ++e)
        if (edge_map[e] == -1) return false;
    return true;
}
}  // namespace detail

inline std::vector<std::vector<int>> all_isomorphisms(const Triangulation& t1, const Triangulation& t2) {
    std::vector<std::vector<int>> out;
    if (t1.num_triangles() != t2.num_triangles() || t1.num_edges() != t2.num_edges()) return out;
    for (int tri0 = 0; tri0 < t2.num_triangles(); ++tri0) {
        for (int rot = 0; rot < 3; ++rot) {
            std::vector<int> em;
            if (detail::try_iso(t1, t2, tri0, rot, em)) {
                if (std::find(out.begin(), out.end(), em) == out.end()) out.push_back(em);
            }
        }
    }
    return out;
}

inline std::optional<std::vector<int>> triangulations_isomorphic(const Triangulation& t1,
                                                                 const Triangulation& t2) {
    auto all = all_isomorphisms(t1, t2);
    if (all.empty()) return std::nullopt;
    // prefer witnesses moving the fewest edges, then lexicographic
    auto moved = [](const std::vector<int>& m) {
        int c = 0;
        for (int e = 0; e < (int)m.size(); ++e) c += (m[e] != e);
        return c;
    };
    std::sort(all.begin(), all.end(), [&](auto& x, auto& y) {
        int mx = moved(x), my = moved(y);
        return mx != my ? mx < my : x < y;
    });
    return all.front();
}

// ---------------------------------------------------------------------------
// relation verification (modular groupoid R.2 / R.4 / R.5)

struct RelationReport {
    bool equal = false;
    std::optional<std::vector<int>> witness;  // edge bijection t(w1) -> t(w2)
    std::string mismatch;
};

inline RelationReport verify_relation(const Triangulation& t, const FlipWord& w1, const FlipWord& w2) {
    Triangulation a = apply_word(t, w1);
    Triangulation b = apply_word(t, w2);
    RelationReport rep;
    auto iso = triangulations_isomorphic(a, b);
    if (iso) {
        rep.equal = true;
        rep.witness = *iso;
    } else {
        rep.mismatch = "resulting triangulations are not isomorphic";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// random triangulations (for property suites): random orientation-coherent
// gluings of F triangles, signature derived afterwards

inline std::optional<Triangulation> random_triangulation(std::mt19937_64& rng, int num_tris,
                                                         double glue_prob = 0.8) {
    std::vector<std::pair<int, int>> slots;
    for (int t = 0; t < num_tris; ++t)
        for (int k = 0; k < 3; ++k) slots.push_back({t, k});
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<std::array<int, 3>> tris(num_tris, {-1, -1, -1});
    int next = 0;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (slots.size() >= 2) {
        auto a = slots.back();
        slots.pop_back();
        if (tris[a.first][a.second] != -1) continue;
        if (coin(rng) > glue_prob) {
            tris[a.first][a.second] = next++;
            continue;
        }
        // find a partner
        int pick = -1;
        for (int i = (int)slots.size() - 1; i >= 0; --i) {
            if (tris[slots[i].first][slots[i].second] == -1) {
                pick = i;
                break;
            }
        }
        if (pick < 0) {
            tris[a.first][a.second] = next++;
            continue;
        }
        auto b = slots[pick];
        slots.erase(slots.begin() + pick);
        tris[a.first][a.second] = tris[b.first][b.second] = next++;
    }
    for (auto& t : tris)
        for (auto& e : t)
            if (e == -1) e = next++;
    try {
        return Triangulation::from_triangles(std::move(tris), next);
    } catch (const Error&) {
        return std::nullopt;
    }
}

// random admissible surface with g <= max_genus, c <= max_cilia and at least
// one flippable edge
inline Triangulation random_surface(std::mt19937_64& rng, int max_genus = 2, int max_cilia = 8,
                                    int max_tris = 8) {
    std::uniform_int_distribution<int> ntri(1, max_tris);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto t = random_triangulation(rng, ntri(rng));
        if (!t) continue;
        if (t->sig().genus > max_genus || t->sig().cilia() > max_cilia) continue;
        bool flippable = false;
        for (int e = 0; e < t->num_edges() && !flippable; ++e) flippable = t->flippable(e);
        if (!flippable) continue;
        return *t;
    }
    throw Error("random_surface: no admissible surface found");
}

// annulus with p cilia on one boundary component and q on the other, built
// from a fan of the (p+q+2)-gon with one pair of boundary sides glued
inline Triangulation annulus(int p, int q) {
    int n = p + q + 2;
    SurfaceSig sig(0, {p, q});
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> glue;
    for (int i = 0; i + 1 < n - 2; ++i) glue.push_back({{i, 0}, {i + 1, 2}});
    glue.push_back({{1, 1}, {q + 2, 1}});
    return build_triangulation(sig, glue);
}

}  // namespace teich
