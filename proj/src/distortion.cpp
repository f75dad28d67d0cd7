#include "hyp3/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#ifdef HYP3_HAVE_OPENMP
#include <omp.h>
#endif

namespace hyp3 {

namespace {

// plain 2x2 complex matrices, no PSL normalization
struct Mat2 {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};
};

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 add(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2 sub(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

double op_norm(const Mat2& m) {
    double t = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
    double det2 = std::norm(m.a * m.d - m.b * m.c);
    double disc = std::max(0.0, t * t - 4.0 * det2);
    return std::sqrt((t + std::sqrt(disc)) / 2.0);
}

Mat2 mat_X(cplx t) { return {std::exp(t / 2.0), 0.0, 0.0, std::exp(-t / 2.0)}; }

Mat2 mat_Y(cplx t) {
    return {std::cosh(t / 2.0), std::sinh(t / 2.0), std::sinh(t / 2.0), std::cosh(t / 2.0)};
}

Mat2 conjugated_factor(cplx a, cplx b) { return mul(mul(mat_Y(b), mat_X(a)), mat_Y(-b)); }

} // namespace

ProductEstimate product_estimate(const std::vector<cplx>& a, const std::vector<cplx>& b,
                                 const std::vector<cplx>& ap, const std::vector<cplx>& bp,
                                 double A, double B, double eps) {
    const std::size_t n = a.size();
    if (b.size() != n || ap.size() != n || bp.size() != n)
        throw GeomError(GeomError::Kind::BadParams, "product_estimate: length mismatch");
    double bsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) bsum += std::abs(a[i]) * std::exp(std::abs(b[i]));
    if (bsum > B)
        throw GeomError(GeomError::Kind::HypothesisViolated,
                        "product_estimate: sum |a_i| e^{|b_i|} exceeds B");
    for (std::size_t i = 0; i < n; ++i) {
        if (2.0 * std::abs(a[i]) * std::exp(std::abs(b[i].real()) + 1.0) > A)
            throw GeomError(GeomError::Kind::HypothesisViolated,
                            "product_estimate: 2 |a_i| e^{|Re b_i|+1} exceeds A at i=" + std::to_string(i));
        if (std::abs(b[i] - bp[i]) >= eps)
            throw GeomError(GeomError::Kind::HypothesisViolated,
                            "product_estimate: |b_i - b'_i| >= eps at i=" + std::to_string(i));
        if (std::abs(a[i] - ap[i]) >= eps * std::abs(a[i]))
            throw GeomError(GeomError::Kind::HypothesisViolated,
                            "product_estimate: |a_i - a'_i| >= eps |a_i| at i=" + std::to_string(i));
    }
    Mat2 prod, prod_p;
    Mat2 sum{0.0, 0.0, 0.0, 0.0}, sum_p{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        Mat2 f = conjugated_factor(a[i], b[i]);
        Mat2 fp = conjugated_factor(ap[i], bp[i]);
        prod = mul(prod, f);
        prod_p = mul(prod_p, fp);
        sum = add(sum, f);
        sum_p = add(sum_p, fp);
    }
    ProductEstimate out;
    out.lhs = op_norm(sub(prod, prod_p));
    out.sum_lhs = op_norm(sub(sum, sum_p));
    out.bound = 12.0 * std::exp(A + 2.0 * B) * B * eps;
    out.product_ok = out.lhs <= out.bound;
    out.sum_ok = out.sum_lhs <= out.bound;
    return out;
}

SequenceData derive_sequence_data(const GeodesicSequence& seq) {
    const std::size_t n = seq.geodesics.size();
    if (n < 2) throw GeomError(GeomError::Kind::NotSemiLinear, "sequence needs >= 2 geodesics");
    SequenceData out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        OrthoFrameData od = [&] {
            try {
                return common_orthogonal(seq.geodesics[i], seq.geodesics[i + 1]);
            } catch (const GeomError&) {
                throw GeomError(GeomError::Kind::NotSemiLinear,
                                "derive_sequence_data: no common orthogonal at " + std::to_string(i));
            }
        }();
        if (od.u.real() <= 1e-12)
            throw GeomError(GeomError::Kind::NotSemiLinear,
                            "derive_sequence_data: geodesics not disjoint at " + std::to_string(i));
        Isometry m_inv = od.normalizer.inverse();
        out.u.push_back(od.u);
        out.foot_near.push_back(Frame{m_inv});
        out.foot_far.push_back(Frame{m_inv * gen_X(od.u)});
    }
    out.v.assign(n - 1, cplx{0.0});
    for (std::size_t i = 1; i + 1 < n; ++i)
        out.v[i] = y_parameter(frame_to(out.foot_far[i - 1], out.foot_near[i]));
    return out;
}

std::vector<Frame> homologous_frames(const GeodesicSequence& seq, const Frame& x0) {
    SequenceData data = derive_sequence_data(seq);
    Geodesic g0 = frame_v_geodesic(x0);
    if (point_to_geodesic_distance(frame_vectors(x0).p, seq.geodesics[0]) > 1e-7 ||
        !sphere_close(g0.rep, seq.geodesics[0].rep, 1e-7) ||
        !sphere_close(g0.att, seq.geodesics[0].att, 1e-7))
        throw GeomError(GeomError::Kind::NotSemiLinear, "homologous_frames: x0 is not based on gamma_0");
    std::vector<Frame> xs{x0};
    for (std::size_t i = 0; i < data.u.size(); ++i) {
        cplx b = y_parameter(frame_to(xs.back(), data.foot_near[i]));
        Isometry step = gen_Y(b) * gen_X(data.u[i]) * gen_Y(-b);
        xs.push_back(right_act(xs.back(), step));
    }
    return xs;
}

namespace {

ConditionReport cond(const std::string& name, double margin) {
    return {name, margin > 0.0, margin};
}

} // namespace

SequenceChecks sequence_checks(const GeodesicSequence& seq, const GeodesicSequence& seq_p,
                               const GeodesicSequence& seq_pp, const SequenceParams& par) {
    if (seq.geodesics.size() != seq_p.geodesics.size() ||
        seq.geodesics.size() != seq_pp.geodesics.size())
        throw GeomError(GeomError::Kind::BadParams, "sequence_checks: unequal lengths");
    SequenceData d = derive_sequence_data(seq);
    SequenceData dp = derive_sequence_data(seq_p);
    SequenceData dpp = derive_sequence_data(seq_pp);

    SequenceChecks out;
    double m1 = 1e300, m2 = 1e300, m3 = 1e300, m4 = 1e300;
    for (std::size_t i = 1; i + 1 < seq.geodesics.size(); ++i) {
        m1 = std::min(m1, std::min(d.v[i].real() - par.Bminus, par.Bplus - d.v[i].real()));
        m2 = std::min(m2, par.Bminus * par.eps / (2.0 * par.R) - std::abs(dp.v[i] - d.v[i]));
    }
    for (std::size_t i = 0; i < d.u.size(); ++i) {
        double s = std::abs(d.u[i]) * std::exp(par.R / 2.0);
        m3 = std::min(m3, std::min(s - 1.0 / par.B, par.B - s));
        m4 = std::min(m4, par.eps * std::abs(d.u[i]) - std::abs(dp.u[i] - d.u[i]));
    }
    out.well_matched.push_back(cond("B- < Re v_i < B+", m1));
    out.well_matched.push_back(cond("|v'_i - v_i| < B- eps / 2R", m2));
    out.well_matched.push_back(cond("1/B < |u_i| e^{R/2} < B", m3));
    out.well_matched.push_back(cond("|u'_i - u_i| < eps |u_i|", m4));

    double r1 = 1e300, r2 = 1e300, r3 = 1e300;
    for (std::size_t i = 0; i < d.u.size(); ++i) {
        double s = std::abs(d.u[i]) * std::exp(par.R / 2.0);
        double sp = std::abs(dpp.u[i]) * std::exp(par.R / 2.0);
        r1 = std::min({r1, s - 1.0 / par.B, par.B - s, sp - 1.0 / par.B, par.B - sp});
    }
    for (std::size_t i = 1; i + 1 < seq.geodesics.size(); ++i) {
        r2 = std::min({r2, d.v[i].real() - par.Bminus, par.Bplus - d.v[i].real(),
                       dpp.v[i].real() - par.Bminus, par.Bplus - dpp.v[i].real()});
        r3 = std::min(r3, 1.0 / par.R - std::abs(d.v[i].real() - dpp.v[i].real()));
    }
    out.related.push_back(cond("1/B < |u_i| e^{R/2}, |u''_i| e^{R/2} < B", r1));
    out.related.push_back(cond("B- < Re v_i, Re v''_i < B+", r2));
    out.related.push_back(cond("|Re v_i - Re v''_i| < 1/R", r3));

    // Lemma 7.17 on the linear sequence: |sum v_i| <= D + 2 ln D - ln u_0 - ln u_{n-1} + 3
    double u_first = std::abs(dpp.u.front());
    double u_last = std::abs(dpp.u.back());
    if (u_first < 1.0 && u_last < 1.0) {
        double D = 0.0;
        try {
            D = complex_distance(seq_pp.geodesics.front(), seq_pp.geodesics.back()).re;
        } catch (const GeomError&) {
            D = 0.0;
        }
        if (D > 1.0) {
            cplx vsum{0.0};
            for (std::size_t i = 1; i + 1 < seq_pp.geodesics.size(); ++i) vsum += dpp.v[i];
            out.lemma717_applicable = true;
            out.lemma717_lhs = std::abs(vsum);
            out.lemma717_bound = D + 2.0 * std::log(D) - std::log(u_first) - std::log(u_last) + 3.0;
        }
    }
    return out;
}

double endpoint_distortion(const GeodesicSequence& seq, const GeodesicSequence& seq_p,
                           const Frame& x0, const Frame& x0p) {
    std::vector<Frame> xs = homologous_frames(seq, x0);
    std::vector<Frame> xsp = homologous_frames(seq_p, x0p);
    Isometry t = frame_to(xs.front(), xs.back());
    Isometry tp = frame_to(xsp.front(), xsp.back());
    return transport_distance(t, tp);
}

// ---- perfect model scan -----------------------------------------------------

namespace {

// chart of a pants: for each cuff the frame at the marking foot, v-axis along
// the cuff, u-axis along the arriving orthogeodesic
struct PantsChart {
    std::array<Isometry, 3> K;
};

PantsChart make_chart(const std::array<ComplexLength, 3>& hl) {
    Pants p = build_pants(hl[0], hl[1], hl[2]);
    HexagonFrames hf = build_hexagon_frames(p.hexagon());
    PantsChart ch;
    for (int j = 0; j < 3; ++j) {
        // cuff j occupies hexagon side 2j; the vertex frame travels along the
        // cuff, so convert with B(pi/2): new v = old u (cuff), new u = -old v
        ch.K[j] = hf.vertex[2 * j].g * gen_B(pi / 2);
    }
    return ch;
}

struct GluePort {
    int other_node{-1}, other_cuff{-1};
    cplx delta; // Y-offset across the gluing, i pi + s + (lattice-minimal foot error)
};

// per-node, per-cuff gluing ports of an assembly, with delta measured
// relative to the given shear targets. The reverse port carries the same
// delta: the crossing K_j Y(delta) B(pi) K_k^-1 is its own inverse pattern in
// PSL(2,C), so walking back reproduces the same lift.
std::vector<std::array<GluePort, 3>> glue_ports(const Assembly& a,
                                                const std::array<cplx, 3>& shear_target) {
    std::vector<std::array<GluePort, 3>> ports(a.nodes.size());
    for (const auto& g : a.gluings) {
        cplx hl = a.curve_hl[g.curve];
        cplx want = tau_shift(a.nodes[g.node_a].foot[g.curve], shear_target[g.curve]).v;
        cplx have = a.nodes[g.node_b].foot[g.curve].v;
        // lattice-minimal deviation of the measured foot from the target
        cplx dev = torsor_reduce(have - want, hl);
        double best = 1e300;
        cplx bestdev = dev;
        for (int m = -2; m <= 2; ++m)
            for (int k = -2; k <= 2; ++k) {
                cplx cand = dev + double(m) * hl + cplx{0.0, 2.0 * pi * k};
                if (std::abs(cand) < best) { best = std::abs(cand); bestdev = cand; }
            }
        cplx delta = cplx{0.0, pi} + shear_target[g.curve] + bestdev;
        ports[g.node_a][g.cuff_a] = {g.node_b, g.cuff_b, delta};
        ports[g.node_b][g.cuff_b] = {g.node_a, g.cuff_a, delta};
    }
    return ports;
}

// Paired lift of the good assembly and its model over one spanning walk of
// the universal cover; all pruning decisions are taken on the model side so
// the two frame lists stay aligned index by index.
struct PairedLift {
    std::vector<Isometry> good, model;
};

PairedLift build_paired_lift(const std::vector<PantsChart>& charts_good,
                             const std::vector<std::array<ComplexLength, 3>>& hls_good,
                             const std::vector<std::array<GluePort, 3>>& ports_good,
                             const PantsChart& chart_model,
                             const std::array<ComplexLength, 3>& hl_model,
                             const std::vector<std::array<GluePort, 3>>& ports_model, double D) {
    PairedLift lift;
    struct Item {
        int node;
        int entry_cuff; // -1 at the root
        Isometry Gg, Gm;
        int depth;
    };
    std::deque<Item> queue{{0, -1, Isometry::identity(), Isometry::identity(), 0}};
    Frame origin{chart_model.K[0]};
    H3Point origin_base = frame_vectors(origin).p;
    const double reach = 2.0 * std::asinh(D / 2.0) + 6.0; // hyperbolic ball radius
    const int max_nodes = 2048;
    int expanded = 0;
    while (!queue.empty() && expanded < max_nodes) {
        Item it = queue.front();
        queue.pop_front();
        ++expanded;
        for (int j = 0; j < 3; ++j) {
            for (int f = 0; f < 2; ++f) {
                Isometry gm = it.Gm * chart_model.K[j] * gen_Y(double(f) * hl_model[j].value());
                if (frame_metric(frame_to(origin, Frame{gm})) <= D) {
                    Isometry gg = it.Gg * charts_good[it.node].K[j] *
                                  gen_Y(double(f) * hls_good[it.node][j].value());
                    lift.model.push_back(gm);
                    lift.good.push_back(gg);
                }
            }
            if (j == it.entry_cuff) continue; // do not backtrack across the entry gluing
            const GluePort& pm = ports_model[it.node][j];
            const GluePort& pg = ports_good[it.node][j];
            Isometry gm_next = it.Gm * chart_model.K[j] * gen_Y(pm.delta) * gen_B(pi) *
                               chart_model.K[pm.other_cuff].inverse();
            H3Point entry = frame_vectors(Frame{gm_next * chart_model.K[pm.other_cuff]}).p;
            if (h3_distance(origin_base, entry) > reach) continue;
            Isometry gg_next = it.Gg * charts_good[it.node].K[j] * gen_Y(pg.delta) * gen_B(pi) *
                               charts_good[pg.other_node].K[pg.other_cuff].inverse();
            queue.push_back({pm.other_node, pm.other_cuff, gg_next, gm_next, it.depth + 1});
        }
    }
    return lift;
}

} // namespace

ScanResult perfect_model_scan(const Assembly& asmb, double D, const std::array<cplx, 3>& thl,
                              const std::array<cplx, 3>& target_shear, bool parallel) {
    if (!asmb.validate())
        throw GeomError(GeomError::Kind::NotSemiLinear, "perfect_model_scan: invalid assembly");

    // the perfect model: target half-lengths everywhere, feet exactly tau-shifted
    Assembly model = asmb;
    std::array<ComplexLength, 3> target_hl{ComplexLength(thl[0]), ComplexLength(thl[1]),
                                           ComplexLength(thl[2])};
    Pants perfect = build_pants(target_hl[0], target_hl[1], target_hl[2]);
    for (int c = 0; c < 3; ++c) {
        model.curve_hl[c] = thl[c];
        model.shear[c] = target_shear[c];
    }
    for (auto& nd : model.nodes) {
        nd.geometry = perfect;
        for (int c = 0; c < 3; ++c) nd.foot[c] = TorsorPoint(nd.foot[c].v, thl[c]);
    }
    for (auto& g : model.gluings) {
        g.shear = target_shear[g.curve];
        model.nodes[g.node_b].foot[g.curve] =
            tau_shift(model.nodes[g.node_a].foot[g.curve], target_shear[g.curve]);
        g.error = 0.0;
    }

    std::vector<PantsChart> charts_good;
    std::vector<std::array<ComplexLength, 3>> hls_good;
    for (const auto& nd : asmb.nodes) {
        charts_good.push_back(make_chart(nd.geometry.hl));
        hls_good.push_back(nd.geometry.hl);
    }
    PantsChart chart_model = make_chart(target_hl);

    auto ports_good = glue_ports(asmb, target_shear);
    auto ports_model = glue_ports(model, target_shear);

    PairedLift lift = build_paired_lift(charts_good, hls_good, ports_good, chart_model, target_hl,
                                        ports_model, D);

    const long n = long(lift.model.size());
    ScanResult out;
    out.model = model;
    out.frame_count = int(n);
    double worst = 0.0;
    long pairs = 0;
#ifdef HYP3_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(max : worst) reduction(+ : pairs) if (parallel)
#else
    (void)parallel;
#endif
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            Isometry mt = lift.model[i].inverse() * lift.model[j];
            if (frame_metric(mt) >= D) continue;
            Isometry gt = lift.good[i].inverse() * lift.good[j];
            worst = std::max(worst, transport_distance(mt, gt));
            ++pairs;
        }
    }
    out.max_distortion = worst;
    out.pair_count = pairs;
    return out;
}

ScanResult perfect_model_scan(const Assembly& asmb, double D, bool parallel) {
    return perfect_model_scan(asmb, D, asmb.curve_hl, asmb.shear, parallel);
}

// ---- quasisymmetry ----------------------------------------------------------

bool CrossRatioWindow::contains(cplx cr) const {
    double m = std::abs(cr);
    if (m < modulus_min || m > modulus_max) return false;
    if (std::abs(cr) < exclusion || std::abs(cr - 1.0) < exclusion) return false;
    return true;
}

cplx cross_ratio(cplx z1, cplx z2, cplx z3, cplx z4) {
    cplx den = (z1 - z4) * (z2 - z3);
    if (std::abs(den) < 1e-300)
        throw GeomError(GeomError::Kind::DegenerateQuadruple, "cross_ratio: degenerate quadruple");
    return (z1 - z3) * (z2 - z4) / den;
}

double quasisymmetry_defect(const std::vector<std::pair<cplx, cplx>>& pairs,
                            const CrossRatioWindow& window) {
    const std::size_t n = pairs.size();
    if (n < 4)
        throw GeomError(GeomError::Kind::BadParams, "quasisymmetry_defect: need >= 4 pairs");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(pairs[i].first - pairs[j].first) < 1e-14)
                throw GeomError(GeomError::Kind::DegenerateQuadruple,
                                "quasisymmetry_defect: repeated source point");
    double worst = 0.0;
    auto consider = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        cplx src = cross_ratio(pairs[i].first, pairs[j].first, pairs[k].first, pairs[l].first);
        if (!window.contains(src)) return;
        cplx img = cross_ratio(pairs[i].second, pairs[j].second, pairs[k].second, pairs[l].second);
        worst = std::max(worst, std::abs(img - src));
    };
    // exhaustive up to ~20k quadruples, deterministic stride beyond
    double total = double(n) * (n - 1) * (n - 2) * (n - 3) / 24.0;
    std::size_t stride = total <= 20000.0 ? 1 : std::size_t(total / 20000.0) + 1;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    if (count++ % stride == 0) consider(i, j, k, l);
    return worst;
}

} // namespace hyp3
