#include "symcone/report.hpp"

#include <sstream>

namespace symcone::report {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json optional_bool(const std::optional<bool>& b) {
    if (!b) return nullptr;
    return *b;
}

std::string params_text(const ParamMap& p) {
    std::string out;
    for (const auto& [k, v] : p) {
        if (!out.empty()) out += ", ";
        out += k + " = " + to_string(v);
    }
    return out;
}

Json section_point(const SectionPoint& p) {
    Json j;
    j["member"] = p.member.to_string();
    j["coords"] = vector(p.coords);
    j["on_section"] = p.on_section;
    j["psd"] = p.psd;
    j["chart"] = p.chart ? vector(*p.chart) : Json(nullptr);
    return j;
}

}  // namespace

Json rational(const Rational& r) { return to_string(r); }

Json vector(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(rational(x));
    return j;
}

Json points(const std::vector<std::vector<Rational>>& pts) {
    Json j = Json::array();
    for (const auto& p : pts) j.push_back(vector(p));
    return j;
}

Json params(const ParamMap& p) {
    Json j = Json::object();
    for (const auto& [k, v] : p) j[k] = rational(v);
    return j;
}

Json matrix(const RationalMatrix& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vector(m.row(i)));
    return j;
}

Json psd(const PsdVerdict& v) {
    Json j;
    j["result"] = to_string(v.result);
    j["witness"] = v.witness ? vector(*v.witness) : Json(nullptr);
    j["criterion"] = v.criterion;
    j["checks"] = v.checks;
    if (v.cells) {
        Json c;
        c["interval"] = {rational(v.cells->lo), rational(v.cells->hi)};
        Json polys = Json::array();
        for (const auto& p : v.cells->polys) polys.push_back(p.to_string("t"));
        c["polys"] = polys;
        Json roots = Json::array();
        for (const auto& r : v.cells->roots) roots.push_back({rational(r.lo), rational(r.hi)});
        c["root_intervals"] = roots;
        c["samples"] = vector(v.cells->samples);
        c["active"] = v.cells->active;
        c["satisfied"] = v.cells->satisfied;
        j["cells"] = c;
    }
    j["cross_check_agrees"] = optional_bool(v.cross_check_agrees);
    return j;
}

Json det_check(const DetCheck& d) {
    Json j;
    j["id"] = d.id;
    j["computed"] = rational(d.computed);
    j["expected"] = rational(d.expected);
    j["matched"] = d.matched;
    return j;
}

Json certificate(const ExtremalityCertificate& c, bool include_matrix) {
    Json j;
    j["spec_id"] = c.spec_id;
    j["target"] = c.target.to_string();
    j["params"] = params(c.params);
    j["space"] = c.space;
    j["matrix_rows"] = c.matrix.rows();
    j["matrix_cols"] = c.matrix.cols();
    j["rank"] = c.rank;
    j["kernel_dim"] = c.kernel_dim;
    j["kernel"] = points(c.kernel);
    j["target_coords"] = vector(c.target_coords);
    j["kernel_contains_target"] = c.kernel_contains_target;
    j["certified"] = c.certified();
    j["det_identity"] = c.det_identity ? det_check(*c.det_identity) : Json(nullptr);
    j["border_consistent"] = optional_bool(c.border_consistent);
    if (include_matrix) j["matrix"] = matrix(c.matrix);
    return j;
}

Json sos(const SosObstruction& s, bool include_matrix) {
    Json j;
    j["spec_id"] = s.spec_id;
    j["conclusion"] = s.conclusion == SosConclusion::NOT_SOS ? "NOT_SOS" : "INCONCLUSIVE";
    j["half_space"] = s.half_space;
    j["zeros"] = points(s.zeros);
    j["matrix_rows"] = s.matrix.rows();
    j["matrix_cols"] = s.matrix.cols();
    j["rank"] = s.rank;
    j["kernel_dim"] = s.kernel_dim;
    j["zeros_verified"] = optional_bool(s.zeros_verified);
    j["det_identity"] = s.det_identity ? det_check(*s.det_identity) : Json(nullptr);
    if (include_matrix) j["matrix"] = matrix(s.matrix);
    return j;
}

Json identity_sample(const std::string& id, const IdentitySample& s) {
    Json j;
    j["id"] = id;
    j["params"] = params(s.params);
    j["holds"] = s.holds;
    j["detail"] = s.detail;
    return j;
}

Json identity_report(const IdentityReport& r) {
    Json j;
    j["id"] = r.id;
    j["samples"] = r.samples;
    j["passed"] = r.passed;
    j["rejected"] = r.rejected;
    j["ok"] = r.ok();
    j["seconds"] = r.seconds;
    j["first_failure"] = r.first_failure ? identity_sample(r.id, *r.first_failure) : Json(nullptr);
    return j;
}

Json general_position(const GeneralPosition& g) {
    Json j;
    j["ok"] = g.ok;
    j["failing"] = g.failing;
    j["det"] = det_check(g.det);
    return j;
}

Json atlas_row(const AtlasRow& r) {
    Json j;
    j["family"] = r.family;
    j["t"] = r.t ? rational(*r.t) : Json(nullptr);
    j["u"] = r.u ? rational(*r.u) : Json(nullptr);
    j["coords"] = vector(r.coords);
    static const char* names[] = {"P1", "P2", "P3", "C0", "Cb"};
    Json d = Json::object();
    for (std::size_t i = 0; i < r.disc.size() && i < 5; ++i)
        d[names[i]] = r.disc[i] ? rational(*r.disc[i]) : Json("undefined");
    j["disc"] = d;
    j["psd"] = to_string(r.psd);
    j["extremal_certified"] = optional_bool(r.extremal_certified);
    return j;
}

Json atlas(const std::vector<AtlasRow>& rows) {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(atlas_row(r));
    return j;
}

Json cross_section(const CrossSection& cs) {
    Json j;
    j["t"] = rational(cs.t);
    j["regime"] = cs.regime;
    j["regime_text"] = cs.regime_text;
    Json arcs = Json::array();
    for (const auto& a : cs.arcs) {
        Json aj;
        aj["family"] = a.family;
        aj["u_range"] = {rational(a.u_lo), rational(a.u_hi)};
        aj["lower_end_enclosure"] =
            a.lower_end ? Json({rational(a.lower_end->lo), rational(a.lower_end->hi)}) : Json(nullptr);
        Json samples = Json::array();
        for (const auto& s : a.samples) samples.push_back(section_point(s));
        aj["samples"] = samples;
        arcs.push_back(aj);
    }
    j["arcs"] = arcs;
    Json verts = Json::array();
    for (const auto& v : cs.vertices) verts.push_back(section_point(v));
    j["vertices"] = verts;
    Json segs = Json::array();
    for (const auto& s : cs.segments)
        segs.push_back({{"from", s.from}, {"to", s.to}, {"from_coords", vector(s.from_coords)},
                        {"to_coords", vector(s.to_coords)}});
    j["segments"] = segs;
    j["chart_basis"] = points(cs.chart_basis);
    return j;
}

std::vector<AtlasRow> cross_section_rows(const CrossSection& cs) {
    std::vector<AtlasRow> rows;
    for (const auto& a : cs.arcs)
        for (const auto& s : a.samples) rows.push_back(symcone::atlas_row(s.member));
    for (const auto& v : cs.vertices) rows.push_back(symcone::atlas_row(v.member));
    return rows;
}

// ---- text ----------------------------------------------------------------------

std::string human(const PsdVerdict& v) {
    std::ostringstream out;
    out << "result: " << to_string(v.result) << "\n";
    if (!v.criterion.empty()) out << "criterion: " << v.criterion << "\n";
    if (v.witness) out << "witness: " << to_string(*v.witness) << "\n";
    for (const auto& c : v.checks) out << "  " << c << "\n";
    if (v.cross_check_agrees) out << "cross-check agrees: " << yes_no(*v.cross_check_agrees) << "\n";
    return out.str();
}

std::string human(const DetCheck& d) {
    std::ostringstream out;
    out << d.id << ": " << (d.matched ? "matched" : "MISMATCH") << "\n";
    out << "  determinant: " << to_string(d.computed) << "\n";
    out << "  closed form: " << to_string(d.expected) << "\n";
    return out.str();
}

std::string human(const ExtremalityCertificate& c) {
    std::ostringstream out;
    out << "spec: " << c.spec_id << "  target: " << c.target.to_string() << "\n";
    if (!c.params.empty()) out << "params: " << params_text(c.params) << "\n";
    out << "space: " << c.space << "  matrix: " << c.matrix.rows() << "x" << c.matrix.cols() << "  rank: " << c.rank
        << "  kernel dim: " << c.kernel_dim << "\n";
    out << "kernel contains target: " << yes_no(c.kernel_contains_target) << "\n";
    if (c.kernel.size() == 1 && c.kernel[0].size() <= 10) out << "kernel: " << to_string(c.kernel[0]) << "\n";
    if (c.border_consistent) out << "bordered det consistent: " << yes_no(*c.border_consistent) << "\n";
    if (c.det_identity) out << human(*c.det_identity);
    out << (c.certified() ? "CERTIFIED extremal" : "NOT certified") << "\n";
    return out.str();
}

std::string human(const SosObstruction& s) {
    std::ostringstream out;
    out << "spec: " << s.spec_id << "  zeros: " << s.zeros.size() << "  half-degree space: " << s.half_space << "\n";
    out << "matrix: " << s.matrix.rows() << "x" << s.matrix.cols() << "  rank: " << s.rank
        << "  kernel dim: " << s.kernel_dim << "\n";
    if (s.zeros_verified) out << "zeros verified: " << yes_no(*s.zeros_verified) << "\n";
    if (s.det_identity) out << human(*s.det_identity);
    out << "conclusion: " << (s.conclusion == SosConclusion::NOT_SOS ? "NOT_SOS" : "INCONCLUSIVE") << "\n";
    return out.str();
}

std::string human(const std::string& id, const IdentitySample& s) {
    std::ostringstream out;
    out << id << " at " << params_text(s.params) << ": " << (s.holds ? "holds" : "FAILS") << "\n";
    if (!s.holds) out << "  " << s.detail << "\n";
    return out.str();
}

std::string human(const IdentityReport& r) {
    std::ostringstream out;
    out << (r.ok() ? "PASS " : "FAIL ") << r.id << "  " << r.passed << "/" << r.samples;
    if (r.rejected) out << "  (" << r.rejected << " redrawn)";
    out << "\n";
    if (r.first_failure)
        out << "  first failure at " << params_text(r.first_failure->params) << ": "
            << r.first_failure->detail.substr(0, 300) << "\n";
    return out.str();
}

std::string human(const GeneralPosition& g) {
    std::ostringstream out;
    out << "general position: " << yes_no(g.ok) << "\n";
    for (const auto& f : g.failing) out << "  fails: " << f << "\n";
    out << human(g.det);
    return out.str();
}

std::string human(const CrossSection& cs) {
    std::ostringstream out;
    out << "t = " << to_string(cs.t) << "  regime " << cs.regime << ": " << cs.regime_text << "\n";
    for (const auto& a : cs.arcs) {
        out << "arc " << a.family << "  u in [" << to_string(a.u_lo) << ", " << to_string(a.u_hi) << "]";
        if (a.lower_end)
            out << "  (lower end muB in [" << to_string(a.lower_end->lo) << ", " << to_string(a.lower_end->hi) << "])";
        out << "  " << a.samples.size() << " samples\n";
        for (const auto& s : a.samples)
            out << "  " << s.member.to_string() << "  " << to_string(s.coords)
                << (s.on_section && s.psd ? "" : "  CHECK FAILED") << "\n";
    }
    for (const auto& v : cs.vertices)
        out << "vertex " << v.member.to_string() << "  " << to_string(v.coords)
            << (v.on_section && v.psd ? "" : "  CHECK FAILED") << "\n";
    return out.str();
}

}  // namespace symcone::report
