#include "hyp3/report.hpp"

#include <sstream>

namespace hyp3 {

int Report::pass_count() const {
    int n = 0;
    for (const auto& r : results) n += r.pass ? 1 : 0;
    return n;
}

int Report::fail_count() const { return int(results.size()) - pass_count(); }

double Report::max_violation() const {
    double v = 0.0;
    for (const auto& r : results)
        if (!r.pass) v = std::min(v, r.margin);
    return -v;
}

json Report::to_json() const {
    json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["seed"] = seed;
    j["trials"] = trials;
    j["params"] = json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["results"] = json::array();
    for (const auto& r : results)
        j["results"].push_back(json{{"case", r.name}, {"margin", r.margin}, {"pass", r.pass}});
    j["summary"] = json{{"pass_count", pass_count()},
                        {"fail_count", fail_count()},
                        {"max_violation", max_violation()}};
    return j;
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "case,margin,pass\n";
    for (const auto& r : results) os << r.name << "," << r.margin << "," << (r.pass ? 1 : 0) << "\n";
    return os.str();
}

json isometry_to_json(const Isometry& g) {
    auto pair = [](cplx z) { return json::array({z.real(), z.imag()}); };
    return json::array({pair(g.a), pair(g.b), pair(g.c), pair(g.d)});
}

Isometry isometry_from_json(const json& j) {
    auto ent = [&](int i) { return cplx{j.at(i).at(0).get<double>(), j.at(i).at(1).get<double>()}; };
    return canonicalize(ent(0), ent(1), ent(2), ent(3));
}

json complex_length_to_json(const ComplexLength& w) { return json::array({w.re, w.im}); }

ComplexLength complex_length_from_json(const json& j) {
    return ComplexLength{j.at(0).get<double>(), j.at(1).get<double>()};
}

json cycle_to_json(const FramedCycle& c) {
    json j;
    j["segments"] = json::array();
    for (const auto& w : c.segments) j["segments"].push_back(complex_length_to_json(w));
    j["joints"] = json::array();
    for (const auto& jt : c.joints) j["joints"].push_back(json::array({jt.theta, jt.psi}));
    return j;
}

FramedCycle cycle_from_json(const json& j) {
    FramedCycle c;
    for (const auto& w : j.at("segments")) c.segments.push_back(complex_length_from_json(w));
    for (const auto& jt : j.at("joints"))
        c.joints.push_back(Joint{jt.at(0).get<double>(), jt.at(1).get<double>()});
    if (c.joints.size() != c.segments.size())
        throw GeomError(GeomError::Kind::BadParams, "cycle_from_json: joint/segment count mismatch");
    return c;
}

json decomposition_to_json(const std::array<ComplexLength, 3>& hl, const std::array<cplx, 3>& shears,
                           const std::array<int, 3>& n, double R) {
    json j;
    j["hl"] = json::array();
    for (const auto& h : hl) j["hl"].push_back(complex_length_to_json(h));
    j["shears"] = json::array();
    for (const auto& s : shears) j["shears"].push_back(json::array({s.real(), s.imag()}));
    j["n"] = json::array({n[0], n[1], n[2]});
    j["R"] = R;
    return j;
}

json assembly_to_json(const Assembly& a) {
    json j;
    j["nodes"] = json::array();
    for (const auto& nd : a.nodes) {
        json hl = json::array();
        for (const auto& h : nd.geometry.hl) hl.push_back(complex_length_to_json(h));
        json feet = json::array();
        for (const auto& f : nd.foot) feet.push_back(json::array({f.v.real(), f.v.imag()}));
        j["nodes"].push_back(json{{"orientation", nd.orientation}, {"hl", hl}, {"feet", feet}});
    }
    j["edges"] = json::array();
    for (const auto& g : a.gluings)
        j["edges"].push_back(json{{"a", g.node_a},
                                  {"cuff_a", g.cuff_a},
                                  {"b", g.node_b},
                                  {"cuff_b", g.cuff_b},
                                  {"curve", g.curve},
                                  {"shear", json::array({g.shear.real(), g.shear.imag()})},
                                  {"error", g.error}});
    return j;
}

std::string footset_to_csv(const FootSet& fs) {
    std::ostringstream os;
    os.precision(17);
    os << "value_re,value_im,orientation,pants_id\n";
    for (const auto& f : fs.feet)
        os << f.p.v.real() << "," << f.p.v.imag() << "," << f.orientation << "," << f.pants_id << "\n";
    return os.str();
}

} // namespace hyp3
