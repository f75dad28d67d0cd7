#include "hyp3/matching.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyp3/rng.hpp"

namespace hyp3 {

namespace {

struct Bipartite {
    std::vector<int> pos, neg; // indices into FootSet.feet
    std::vector<std::vector<int>> adj; // pos-local -> list of neg-local
};

Bipartite build_graph(const FootSet& fs, cplx s, double tol) {
    Bipartite g;
    for (int i = 0; i < int(fs.feet.size()); ++i)
        (fs.feet[i].orientation > 0 ? g.pos : g.neg).push_back(i);
    g.adj.resize(g.pos.size());
    for (std::size_t p = 0; p < g.pos.size(); ++p) {
        TorsorPoint target = tau_shift(fs.feet[g.pos[p]].p, s);
        for (std::size_t q = 0; q < g.neg.size(); ++q)
            if (torsor_distance(fs.feet[g.neg[q]].p, target) < tol) g.adj[p].push_back(int(q));
    }
    return g;
}

bool augment(const Bipartite& g, int p, std::vector<int>& match_p, std::vector<int>& match_n,
             std::vector<char>& vis) {
    for (int q : g.adj[p]) {
        if (vis[q]) continue;
        vis[q] = 1;
        if (match_n[q] < 0 || augment(g, match_n[q], match_p, match_n, vis)) {
            match_p[p] = q;
            match_n[q] = p;
            return true;
        }
    }
    return false;
}

} // namespace

MatchResult match_feet(const FootSet& fs, cplx s, double tol) {
    if (tol <= 0.0) throw GeomError(GeomError::Kind::BadParams, "match_feet: tol <= 0");
    Bipartite g = build_graph(fs, s, tol);
    MatchResult out;
    std::vector<int> match_p(g.pos.size(), -1), match_n(g.neg.size(), -1);
    for (std::size_t p = 0; p < g.pos.size(); ++p) {
        std::vector<char> vis(g.neg.size(), 0);
        augment(g, int(p), match_p, match_n, vis);
    }
    int unmatched = -1;
    for (std::size_t p = 0; p < g.pos.size(); ++p)
        if (match_p[p] < 0) { unmatched = int(p); break; }

    if (unmatched < 0 && g.pos.size() == g.neg.size()) {
        out.feasible = true;
        for (std::size_t p = 0; p < g.pos.size(); ++p) {
            int i = g.pos[p], j = g.neg[match_p[p]];
            out.pairs.push_back({i, j});
            out.max_error =
                std::max(out.max_error, torsor_distance(fs.feet[j].p, tau_shift(fs.feet[i].p, s)));
        }
        return out;
    }

    // deficient Hall set: positives alternating-reachable from an unmatched one
    if (unmatched >= 0) {
        std::vector<char> inset(g.pos.size(), 0);
        std::vector<int> stack{unmatched};
        inset[unmatched] = 1;
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            for (int q : g.adj[p]) {
                int p2 = match_n[q];
                if (p2 >= 0 && !inset[p2]) { inset[p2] = 1; stack.push_back(p2); }
            }
        }
        for (std::size_t p = 0; p < g.pos.size(); ++p)
            if (inset[p]) out.hall_witness.push_back(g.pos[p]);
    } else {
        // every positive matched but counts differ: the positive side itself
        // (or the whole negative side) witnesses the count deficiency
        const auto& side = g.pos.size() > g.neg.size() ? g.pos : g.neg;
        out.hall_witness.assign(side.begin(), side.end());
    }
    out.feasible = false;
    return out;
}

bool hall_feasible_bruteforce(const FootSet& fs, cplx s, double tol) {
    Bipartite g = build_graph(fs, s, tol);
    if (g.pos.size() != g.neg.size()) return false;
    int n = int(g.pos.size());
    if (n > 20) throw GeomError(GeomError::Kind::BadParams, "hall_feasible_bruteforce: set too large");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        unsigned nbr = 0;
        int size = 0;
        for (int p = 0; p < n; ++p)
            if (mask & (1u << p)) {
                ++size;
                for (int q : g.adj[p]) nbr |= 1u << q;
            }
        if (__builtin_popcount(nbr) < size) return false;
    }
    return true;
}

namespace {

// split a possibly wrapping interval [x, x+w) on a circle of circumference c
std::vector<std::pair<double, double>> unwrap(double x, double w, double c) {
    if (w >= c) return {{0.0, c}};
    x = std::fmod(x, c);
    if (x < 0.0) x += c;
    if (x + w <= c) return {{x, x + w}};
    return {{x, c}, {0.0, x + w - c}};
}

} // namespace

double rect_union_area(const std::vector<TorusRect>& rects, cplx hl) {
    double W = hl.real(), H = 2.0 * pi;
    struct Piece { double x0, x1, y0, y1; };
    std::vector<Piece> pieces;
    for (const auto& r : rects) {
        if (r.w <= 0.0 || r.h <= 0.0) continue;
        for (auto [x0, x1] : unwrap(r.x, std::min(r.w, W), W))
            for (auto [y0, y1] : unwrap(r.y + pi, std::min(r.h, H), H)) // shift y into [0, 2pi)
                pieces.push_back({x0, x1, y0, y1});
    }
    if (pieces.empty()) return 0.0;
    std::vector<double> xs;
    for (const auto& p : pieces) { xs.push_back(p.x0); xs.push_back(p.x1); }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        double xm = (xs[i] + xs[i + 1]) / 2.0, dx = xs[i + 1] - xs[i];
        std::vector<std::pair<double, double>> ys;
        for (const auto& p : pieces)
            if (p.x0 <= xm && xm < p.x1) ys.push_back({p.y0, p.y1});
        std::sort(ys.begin(), ys.end());
        double cov = 0.0, cur0 = 0.0, cur1 = -1.0;
        for (auto [y0, y1] : ys) {
            if (y0 > cur1) {
                if (cur1 > cur0) cov += cur1 - cur0;
                cur0 = y0; cur1 = y1;
            } else {
                cur1 = std::max(cur1, y1);
            }
        }
        if (cur1 > cur0) cov += cur1 - cur0;
        area += dx * cov;
    }
    return area;
}

GrowthResult neighborhood_growth(const std::vector<TorusRect>& rects, double eta, double Rbar,
                                 cplx hl) {
    if (eta <= 0.0 || Rbar <= 0.0)
        throw GeomError(GeomError::Kind::BadParams, "neighborhood_growth: eta, Rbar must be positive");
    double W = hl.real(), H = 2.0 * pi;
    std::vector<TorusRect> grown;
    for (const auto& r : rects)
        grown.push_back({r.x - eta, r.y - eta, std::min(r.w + 2.0 * eta, W), std::min(r.h + 2.0 * eta, H)});
    GrowthResult out;
    out.area = rect_union_area(rects, hl);
    out.grown_area = rect_union_area(grown, hl);
    if (out.area <= 0.0)
        throw GeomError(GeomError::Kind::BadParams, "neighborhood_growth: empty rectangle union");
    if (out.grown_area > 0.5 * W * H)
        throw GeomError(GeomError::Kind::NotApplicable,
                        "neighborhood_growth: |N_eta(A)| exceeds half the torus");
    out.ratio = out.grown_area / out.area;
    out.bound = 1.0 + eta / (2.0 * Rbar);
    return out;
}

bool Assembly::validate(double tol) const {
    std::vector<int> seen(nodes.size() * 3, 0);
    for (const auto& g : gluings) {
        if (g.node_a < 0 || g.node_a >= int(nodes.size()) || g.node_b < 0 ||
            g.node_b >= int(nodes.size()))
            return false;
        seen[g.node_a * 3 + g.cuff_a] += 1;
        seen[g.node_b * 3 + g.cuff_b] += 1;
        if (nodes[g.node_a].orientation * nodes[g.node_b].orientation != -1) return false;
        if (cl_distance(nodes[g.node_a].geometry.hl[g.cuff_a],
                        nodes[g.node_b].geometry.hl[g.cuff_b]) > tol)
            return false;
    }
    for (int s : seen)
        if (s != 1) return false;
    return true;
}

Assembly assemble(const std::vector<Pants>& pool, const std::array<cplx, 3>& shear, double tol,
                  double jitter, std::uint64_t seed) {
    if (pool.empty()) throw GeomError(GeomError::Kind::BadParams, "assemble: empty pool");
    const int n = int(pool.size());
    for (const auto& p : pool)
        for (int i = 0; i < 3; ++i)
            if (cl_distance(p.hl[i], pool[0].hl[i]) > 1e-9)
                throw GeomError(GeomError::Kind::CuffMismatch, "assemble: pool cuff lengths differ");

    Assembly a;
    for (int i = 0; i < 3; ++i) {
        a.curve_hl[i] = pool[0].hl[i].value();
        a.shear[i] = shear[i];
    }
    std::array<FootSet, 3> fs;
    for (int i = 0; i < 3; ++i)
        fs[i] = sample_feet(2 * n, a.curve_hl[i], SampleMode::tau_symmetric(shear[i], jitter),
                            splitmix64(seed + i));

    for (int k = 0; k < 2 * n; ++k) {
        PantsNode node;
        node.geometry = pool[k % n];
        node.orientation = k < n ? +1 : -1;
        for (int i = 0; i < 3; ++i) node.foot[i] = fs[i].feet[k].p;
        a.nodes.push_back(node);
    }
    for (int i = 0; i < 3; ++i) {
        MatchResult m = match_feet(fs[i], shear[i], tol);
        if (!m.feasible)
            throw GeomError(GeomError::Kind::Infeasible,
                            "assemble: no perfect matching on curve " + std::to_string(i));
        for (auto [p, q] : m.pairs) {
            Gluing gl;
            gl.node_a = p;
            gl.cuff_a = i;
            gl.node_b = q;
            gl.cuff_b = i;
            gl.curve = i;
            gl.shear = shear[i];
            gl.error = torsor_distance(a.nodes[q].foot[i], tau_shift(a.nodes[p].foot[i], shear[i]));
            a.gluings.push_back(gl);
        }
    }
    return a;
}

} // namespace hyp3
