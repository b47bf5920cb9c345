#include "limdens/gaifman.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace limdens {

GaifmanGraph GaifmanGraph::from_structure(const FiniteStructure& fs) {
    if (!fs.binary_names.empty())
        throw Error("gaifman graph is defined for unary-signature carriers");
    GaifmanGraph g;
    g.size = fs.size;
    std::vector<std::set<int>> nb(static_cast<size_t>(fs.size));
    for (const auto& table : fs.unary)
        for (int x = 0; x < fs.size; ++x) {
            int y = table[static_cast<size_t>(x)];
            if (y == x) continue;
            nb[static_cast<size_t>(x)].insert(y);
            nb[static_cast<size_t>(y)].insert(x);
        }
    g.adj.resize(static_cast<size_t>(fs.size));
    for (int x = 0; x < fs.size; ++x) g.adj[static_cast<size_t>(x)].assign(nb[static_cast<size_t>(x)].begin(), nb[static_cast<size_t>(x)].end());
    return g;
}

std::vector<int> GaifmanGraph::distances_from(int src) const {
    std::vector<int> dist(static_cast<size_t>(size), -1);
    std::deque<int> q{src};
    dist[static_cast<size_t>(src)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj[static_cast<size_t>(u)])
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

int gaifman_distance(const FiniteStructure& fs, int x, int y) {
    GaifmanGraph g = GaifmanGraph::from_structure(fs);
    return g.distances_from(x)[static_cast<size_t>(y)];
}

int Ball::local_index(int orig) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), orig);
    if (it == elements.end() || *it != orig) return -1;
    return static_cast<int>(it - elements.begin());
}

std::string Ball::to_dot() const {
    std::string out = "digraph ball {\n";
    for (int x = 0; x < size(); ++x) {
        std::string label = std::to_string(elements[static_cast<size_t>(x)]);
        for (size_t c = 0; c < centers.size(); ++c)
            if (centers[c] == elements[static_cast<size_t>(x)]) label += " *" + std::to_string(c);
        out += "  n" + std::to_string(x) + " [label=\"" + label + "\"];\n";
    }
    for (size_t f = 0; f < unary_names.size(); ++f)
        for (int x = 0; x < size(); ++x)
            if (unary[f][static_cast<size_t>(x)] >= 0)
                out += "  n" + std::to_string(x) + " -> n" + std::to_string(unary[f][static_cast<size_t>(x)]) +
                       " [label=\"" + unary_names[f] + "\"];\n";
    out += "}\n";
    return out;
}

Ball ball(const FiniteStructure& fs, const std::vector<int>& centers, int r) {
    if (r < 0) throw Error("ball radius must be nonnegative");
    GaifmanGraph g = GaifmanGraph::from_structure(fs);
    std::set<int> in_ball;
    for (int c : centers) {
        std::vector<int> dist = g.distances_from(c);
        for (int x = 0; x < fs.size; ++x)
            if (dist[static_cast<size_t>(x)] >= 0 && dist[static_cast<size_t>(x)] <= r) in_ball.insert(x);
    }
    Ball b;
    b.radius = r;
    b.centers = centers;
    b.elements.assign(in_ball.begin(), in_ball.end());
    b.unary_names = fs.unary_names;
    b.unary.assign(fs.unary_names.size(), std::vector<int>(in_ball.size(), -1));
    for (size_t f = 0; f < fs.unary_names.size(); ++f)
        for (int x = 0; x < b.size(); ++x) {
            int img = fs.unary[f][static_cast<size_t>(b.elements[static_cast<size_t>(x)])];
            b.unary[f][static_cast<size_t>(x)] = b.local_index(img);
        }
    return b;
}

Ball zchain_ball(int r) {
    Ball b;
    b.radius = r;
    int n = 2 * r + 1;
    b.elements.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) b.elements[static_cast<size_t>(i)] = i;
    b.centers = {r};
    b.unary_names = {"S", "S^-1"};
    b.unary.assign(2, std::vector<int>(static_cast<size_t>(n), -1));
    for (int i = 0; i + 1 < n; ++i) {
        b.unary[0][static_cast<size_t>(i)] = i + 1;
        b.unary[1][static_cast<size_t>(i + 1)] = i;
    }
    return b;
}

// --- canonical codes -----------------------------------------------------------

namespace {

constexpr uint8_t kOutside = 0xFE;

struct Component {
    std::vector<int> verts;               // local ball indices
    std::vector<int> center_positions;    // indices into the center tuple
};

std::vector<Component> components_of(const Ball& b) {
    int n = b.size();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int nc = 0;
    for (int s0 = 0; s0 < n; ++s0) {
        if (comp[static_cast<size_t>(s0)] >= 0) continue;
        std::deque<int> q{s0};
        comp[static_cast<size_t>(s0)] = nc;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (size_t f = 0; f < b.unary.size(); ++f) {
                int v = b.unary[f][static_cast<size_t>(u)];
                if (v >= 0 && comp[static_cast<size_t>(v)] < 0) {
                    comp[static_cast<size_t>(v)] = comp[static_cast<size_t>(u)];
                    q.push_back(v);
                }
                for (int w = 0; w < n; ++w)
                    if (b.unary[f][static_cast<size_t>(w)] == u && comp[static_cast<size_t>(w)] < 0) {
                        comp[static_cast<size_t>(w)] = comp[static_cast<size_t>(u)];
                        q.push_back(w);
                    }
            }
        }
        ++nc;
    }
    std::vector<Component> out(static_cast<size_t>(nc));
    for (int v = 0; v < n; ++v) out[static_cast<size_t>(comp[static_cast<size_t>(v)])].verts.push_back(v);
    for (size_t c = 0; c < b.centers.size(); ++c) {
        int li = b.local_index(b.centers[c]);
        if (li < 0) throw Error("center missing from its own ball");
        out[static_cast<size_t>(comp[static_cast<size_t>(li)])].center_positions.push_back(static_cast<int>(c));
    }
    return out;
}

// Canonical numbering of one component by minimizing the traversal code over
// all admissible starts and in-neighbor discovery orders.
struct Canonicalizer {
    const Ball& b;
    const Component& comp;
    std::vector<std::vector<std::vector<int>>> preimages;  // [symbol][vertex] -> list
    std::vector<uint8_t> best;
    bool have_best = false;

    Canonicalizer(const Ball& ball_, const Component& comp_) : b(ball_), comp(comp_) {
        int n = b.size();
        preimages.assign(b.unary.size(), std::vector<std::vector<int>>(static_cast<size_t>(n)));
        std::set<int> in_comp(comp.verts.begin(), comp.verts.end());
        for (size_t f = 0; f < b.unary.size(); ++f)
            for (int v : comp.verts) {
                int img = b.unary[f][static_cast<size_t>(v)];
                if (img >= 0 && in_comp.count(img)) preimages[f][static_cast<size_t>(img)].push_back(v);
            }
    }

    void run(int start) {
        std::vector<int> number(static_cast<size_t>(b.size()), -1);
        std::vector<int> order;
        number[static_cast<size_t>(start)] = 0;
        order.push_back(start);
        explore(order, number, 0);
    }

    // Expands the numbering breadth-first; branches over the discovery order
    // of same-symbol unvisited preimages.
    void explore(std::vector<int>& order, std::vector<int>& number, size_t qpos) {
        if (qpos == order.size()) {
            finish(order, number);
            return;
        }
        int u = order[qpos];
        // out-neighbors are forced
        for (size_t f = 0; f < b.unary.size(); ++f) {
            int v = b.unary[f][static_cast<size_t>(u)];
            if (v >= 0 && number[static_cast<size_t>(v)] < 0) {
                number[static_cast<size_t>(v)] = static_cast<int>(order.size());
                order.push_back(v);
            }
        }
        // unvisited preimages, symbol by symbol
        std::vector<std::vector<int>> pending;
        for (size_t f = 0; f < b.unary.size(); ++f) {
            std::vector<int> un;
            for (int w : preimages[f][static_cast<size_t>(u)])
                if (number[static_cast<size_t>(w)] < 0) un.push_back(w);
            if (!un.empty()) pending.push_back(std::move(un));
        }
        branch(order, number, qpos, pending, 0);
    }

    void branch(std::vector<int>& order, std::vector<int>& number, size_t qpos,
                std::vector<std::vector<int>>& pending, size_t pi) {
        if (pi == pending.size()) {
            std::vector<int> saved_order = order;
            std::vector<int> saved_number = number;
            explore(order, number, qpos + 1);
            order = std::move(saved_order);
            number = std::move(saved_number);
            return;
        }
        std::vector<int>& group = pending[pi];
        std::sort(group.begin(), group.end());
        do {
            int assigned = 0;
            for (int w : group)
                if (number[static_cast<size_t>(w)] < 0) {
                    number[static_cast<size_t>(w)] = static_cast<int>(order.size());
                    order.push_back(w);
                    ++assigned;
                }
            branch(order, number, qpos, pending, pi + 1);
            for (int i = 0; i < assigned; ++i) {
                number[static_cast<size_t>(order.back())] = -1;
                order.pop_back();
            }
        } while (std::next_permutation(group.begin(), group.end()));
    }

    void finish(const std::vector<int>& order, const std::vector<int>& number) {
        std::vector<uint8_t> code;
        code.reserve(order.size() * b.unary.size() + comp.center_positions.size() * 2 + 2);
        for (int u : order)
            for (size_t f = 0; f < b.unary.size(); ++f) {
                int v = b.unary[f][static_cast<size_t>(u)];
                code.push_back(v < 0 ? kOutside : static_cast<uint8_t>(number[static_cast<size_t>(v)]));
            }
        // center marks: (tuple position, canonical index), sorted by position
        for (int cp : comp.center_positions) {
            int li = b.local_index(b.centers[static_cast<size_t>(cp)]);
            code.push_back(static_cast<uint8_t>(cp));
            code.push_back(static_cast<uint8_t>(number[static_cast<size_t>(li)]));
        }
        if (!have_best || code < best) {
            best = std::move(code);
            have_best = true;
        }
    }
};

uint8_t shape_tag(const Ball& b, const Component& comp) {
    // Isomorphism-invariant tag: counts only. P = directed path, C = cycle,
    // R = rho (one branch point), G = anything else.
    size_t edges = 0;
    std::vector<int> indeg(static_cast<size_t>(b.size()), 0);
    std::set<int> in_comp(comp.verts.begin(), comp.verts.end());
    size_t defined_syms = 0;
    for (size_t f = 0; f < b.unary.size(); ++f) {
        bool any = false;
        for (int v : comp.verts) {
            int img = b.unary[f][static_cast<size_t>(v)];
            if (img >= 0 && in_comp.count(img)) {
                ++edges;
                ++indeg[static_cast<size_t>(img)];
                any = true;
            }
        }
        if (any) ++defined_syms;
    }
    if (defined_syms > 1) return 'G';
    size_t n = comp.verts.size();
    int max_in = 0;
    for (int v : comp.verts) max_in = std::max(max_in, indeg[static_cast<size_t>(v)]);
    if (edges == n && max_in == 1) return 'C';
    if (edges + 1 == n && max_in <= 1) return 'P';
    if (edges == n && max_in == 2) return 'R';
    return 'G';
}

}  // namespace

LocalTypeCode canonical_ball_code(const Ball& b) {
    if (b.size() > 200) throw Error("ball too large for canonical coding");
    std::vector<Component> comps = components_of(b);
    std::vector<std::vector<uint8_t>> codes;
    for (const Component& comp : comps) {
        Canonicalizer canon(b, comp);
        if (comp.center_positions.empty()) {
            for (int v : comp.verts) canon.run(v);
        } else {
            for (int cp : comp.center_positions) canon.run(b.local_index(b.centers[static_cast<size_t>(cp)]));
        }
        std::vector<uint8_t> code;
        code.push_back(shape_tag(b, comp));
        code.push_back(static_cast<uint8_t>(comp.verts.size()));
        code.insert(code.end(), canon.best.begin(), canon.best.end());
        codes.push_back(std::move(code));
    }
    std::sort(codes.begin(), codes.end());
    LocalTypeCode out;
    const char* magic = "LDB1";
    out.insert(out.end(), magic, magic + 4);
    out.push_back(static_cast<uint8_t>(b.unary.size()));
    out.push_back(static_cast<uint8_t>(codes.size()));
    for (const auto& c : codes) {
        out.push_back(static_cast<uint8_t>(c.size() >> 8));
        out.push_back(static_cast<uint8_t>(c.size() & 0xFF));
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

std::string code_hex(const LocalTypeCode& code) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (uint8_t byte : code) {
        out += digits[byte >> 4];
        out += digits[byte & 0xF];
    }
    return out;
}

// --- exact isomorphism search ----------------------------------------------------

namespace {

bool full_iso_check(const Ball& a, const Ball& b, const std::vector<int>& map_ab) {
    for (size_t f = 0; f < a.unary.size(); ++f)
        for (int i = 0; i < a.size(); ++i) {
            int ai = a.unary[f][static_cast<size_t>(i)];
            int bi = b.unary[f][static_cast<size_t>(map_ab[static_cast<size_t>(i)])];
            if (ai < 0 || bi < 0) {
                if ((ai < 0) != (bi < 0)) return false;
            } else if (map_ab[static_cast<size_t>(ai)] != bi) {
                return false;
            }
        }
    return true;
}

bool extend_iso(const Ball& a, const Ball& b, std::vector<int>& map_ab, std::vector<int>& map_ba) {
    int x = -1;
    for (int i = 0; i < a.size(); ++i)
        if (map_ab[static_cast<size_t>(i)] < 0) {
            x = i;
            break;
        }
    if (x < 0) return full_iso_check(a, b, map_ab);
    for (int y = 0; y < b.size(); ++y) {
        if (map_ba[static_cast<size_t>(y)] >= 0) continue;
        map_ab[static_cast<size_t>(x)] = y;
        map_ba[static_cast<size_t>(y)] = x;
        bool ok = true;
        for (size_t f = 0; f < a.unary.size() && ok; ++f)
            for (int i = 0; i < a.size() && ok; ++i) {
                if (map_ab[static_cast<size_t>(i)] < 0) continue;
                int ai = a.unary[f][static_cast<size_t>(i)];
                int bi = b.unary[f][static_cast<size_t>(map_ab[static_cast<size_t>(i)])];
                if (ai < 0 || bi < 0) {
                    if ((ai < 0) != (bi < 0)) ok = false;
                } else if (map_ab[static_cast<size_t>(ai)] >= 0 && map_ab[static_cast<size_t>(ai)] != bi) {
                    ok = false;
                }
            }
        if (ok && extend_iso(a, b, map_ab, map_ba)) return true;
        map_ab[static_cast<size_t>(x)] = -1;
        map_ba[static_cast<size_t>(y)] = -1;
    }
    return false;
}

}  // namespace

bool balls_isomorphic(const Ball& a, const Ball& b) {
    if (a.size() != b.size() || a.unary.size() != b.unary.size() ||
        a.centers.size() != b.centers.size())
        return false;
    std::vector<int> map_ab(static_cast<size_t>(a.size()), -1), map_ba(static_cast<size_t>(b.size()), -1);
    // centers are pinned
    for (size_t c = 0; c < a.centers.size(); ++c) {
        int x = a.local_index(a.centers[c]);
        int y = b.local_index(b.centers[c]);
        if (map_ab[static_cast<size_t>(x)] >= 0 && map_ab[static_cast<size_t>(x)] != y) return false;
        if (map_ba[static_cast<size_t>(y)] >= 0 && map_ba[static_cast<size_t>(y)] != x) return false;
        map_ab[static_cast<size_t>(x)] = y;
        map_ba[static_cast<size_t>(y)] = x;
    }
    return extend_iso(a, b, map_ab, map_ba);
}

// --- local sentences ---------------------------------------------------------------

bool local_sentence_eval(const FiniteStructure& fs, const LocalTypeCode& alpha, int r, int s,
                         int exact_budget) {
    if (s < 1) return true;
    std::vector<int> candidates;
    for (int x = 0; x < fs.size; ++x)
        if (canonical_ball_code(ball(fs, {x}, r)) == alpha) candidates.push_back(x);
    if (static_cast<int>(candidates.size()) < s) return false;
    GaifmanGraph g = GaifmanGraph::from_structure(fs);
    // pairwise "too close" relation among candidates
    std::vector<std::vector<char>> close(candidates.size(), std::vector<char>(candidates.size(), 0));
    for (size_t i = 0; i < candidates.size(); ++i) {
        std::vector<int> dist = g.distances_from(candidates[i]);
        for (size_t j = 0; j < candidates.size(); ++j) {
            int d = dist[static_cast<size_t>(candidates[j])];
            close[i][j] = (i != j && d >= 0 && d <= 2 * r) ? 1 : 0;
        }
    }
    // greedy packing
    {
        std::vector<size_t> chosen;
        for (size_t i = 0; i < candidates.size() && static_cast<int>(chosen.size()) < s; ++i) {
            bool ok = true;
            for (size_t c : chosen)
                if (close[i][c]) {
                    ok = false;
                    break;
                }
            if (ok) chosen.push_back(i);
        }
        if (static_cast<int>(chosen.size()) >= s) return true;
    }
    if (static_cast<int>(candidates.size()) > exact_budget)
        throw BudgetExceeded("too many candidates for exact local-sentence search");
    // exact search
    std::vector<size_t> chosen;
    auto rec = [&](auto&& self, size_t start) -> bool {
        if (static_cast<int>(chosen.size()) == s) return true;
        for (size_t i = start; i < candidates.size(); ++i) {
            bool ok = true;
            for (size_t c : chosen)
                if (close[i][c]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

// --- free vs quotient balls ----------------------------------------------------------

BallCheckResult free_vs_quotient_ball_check(const VarietySpec& spec, const Presentation& p,
                                            int r) {
    if (p.identities.size() != 1) throw Error("one-identity presentations only");
    GaifmanGroup g = gaifman_group(spec);
    if (!g.infinite()) return {false, false, "G(V) is finite; the lemma needs rank >= 1"};
    const Identity& id = p.identities.front();
    long long gap = std::llabs(g.pi1_of_term(id.lhs) - g.pi1_of_term(id.rhs));
    E0Bound e0 = e0_bound(g);
    if (gap <= e0.e0_slack * r) {
        return {false, false,
                "|Pi1(t1) - Pi1(t2)| = " + std::to_string(gap) + " <= (e0+4) r = " +
                    std::to_string(e0.e0_slack * r)};
    }
    StructureDescriptor quot = build_genbij(p, spec);
    const auto& lq = std::get<LatticeQuotient>(quot.value);

    // every term pair of length <= 2r, on every generator
    const int n = spec.signature.n_symbols();
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int depth) -> void {
        all.push_back(cur);
        if (depth == 2 * r) return;
        for (int sym = 0; sym < n; ++sym) {
            cur.push_back(sym);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    const int m = p.generator_count;
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
            Term u, v;
            u.syms = all[i];
            v.syms = all[j];
            std::vector<long long> du = abelianize_word(all[i], n), dv = abelianize_word(all[j], n);
            for (int bu = 0; bu < m; ++bu)
                for (int bv = 0; bv < m; ++bv) {
                    std::vector<long long> diff(static_cast<size_t>(n));
                    for (int t = 0; t < n; ++t) diff[static_cast<size_t>(t)] = dv[static_cast<size_t>(t)] - du[static_cast<size_t>(t)];
                    bool free_eq = bu == bv && g.lattice.contains(diff);
                    bool quot_eq = lq.data->term_equal(u, bu, v, bv);
                    if (free_eq != quot_eq) {
                        return {false, true,
                                "ball map not injective at u=" + print_word(all[i], spec.signature) +
                                    " base a" + std::to_string(bu + 1) + ", v=" +
                                    print_word(all[j], spec.signature) + " base a" + std::to_string(bv + 1)};
                    }
                }
        }
    return {true, true, ""};
}

}  // namespace limdens
