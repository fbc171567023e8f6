// Python bindings. Rationals cross the boundary as strings ("p/q"); the
// package wrapper turns them into fractions.Fraction and parses JSON payloads.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "symcone/boundary.hpp"
#include "symcone/certify.hpp"
#include "symcone/families.hpp"
#include "symcone/identities.hpp"
#include "symcone/psd.hpp"
#include "symcone/report.hpp"

namespace py = pybind11;
using namespace symcone;
namespace rep = symcone::report;

namespace {

ParamMap to_params(const std::map<std::string, std::string>& in) {
    ParamMap p;
    for (const auto& [k, v] : in) p[k] = parse_rational(v);
    return p;
}

std::vector<Rational> to_vector(const std::vector<std::string>& in) {
    std::vector<Rational> v;
    for (const auto& s : in) v.push_back(parse_rational(s));
    return v;
}

FamilyId family(const std::string& text, const std::map<std::string, std::string>& params) {
    FamilyId id = parse_family(text);
    for (const auto& [k, v] : to_params(params)) id.params[k] = v;
    return id;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact symmetric-form cone computations";

    // later registrations are tried first, so the subclass goes last
    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", domain.ptr());
    py::register_exception<MembershipError>(m, "MembershipError", PyExc_ValueError);

    m.def("identity_ids", &identity_ids);
    m.def("check_identity", [](const std::string& id, const std::map<std::string, std::string>& params) {
        return rep::identity_sample(id, check_identity(id, to_params(params))).dump();
    });
    m.def(
        "sweep_identities",
        [](const std::vector<std::string>& ids, std::size_t samples, std::uint64_t seed, unsigned workers) {
            py::gil_scoped_release release;
            auto reports = sweep_identities(ids, samples, seed, workers);
            rep::Json j = rep::Json::array();
            for (const auto& r : reports) j.push_back(rep::identity_report(r));
            return j.dump();
        },
        py::arg("ids"), py::arg("samples") = 50, py::arg("seed") = 20260101, py::arg("workers") = 1);

    m.def("family_names", &family_names);
    m.def("evaluate", [](const std::string& fam, const std::map<std::string, std::string>& params,
                         const std::vector<std::string>& point) {
        return to_string(build(family(fam, params)).evaluate(to_vector(point)));
    });
    m.def("family_text", [](const std::string& fam, const std::map<std::string, std::string>& params) {
        return build(family(fam, params)).to_text();
    });
    m.def("psd_check", [](const std::string& fam, const std::map<std::string, std::string>& params) {
        FamilyId id = family(fam, params);
        PsdVerdict v;
        if (id.name == "g_tu") v = psd_gtu(id.param("t"), id.param("u"));
        else if (id.name == "f_uw") v = psd_fuw(id.param("u"), id.param("v"), id.param("w"));
        else v = psd_check(build(id));
        return rep::psd(v).dump();
    });

    m.def("spec_ids", [] {
        std::vector<std::string> out;
        for (const auto& s : spec_catalog()) out.push_back(s.id);
        return out;
    });
    m.def("certify", [](const std::string& spec, const std::map<std::string, std::string>& params) {
        auto p = to_params(params);
        const auto& info = spec_info(spec);
        ExtremalityCertificate c =
            info.kind == "full-cone" ? certify_extremal_full_cone(spec, p) : certify_catalog(spec, p);
        return rep::certificate(c).dump();
    });
    m.def("sos_obstruction", [](const std::string& spec, const std::map<std::string, std::string>& params) {
        return rep::sos(sos_catalog(spec, to_params(params))).dump();
    });

    m.def("discriminant", [](const std::string& id, const std::vector<std::string>& coords) {
        return to_string(eval_discriminant(parse_disc_id(id), to_vector(coords)));
    });
    m.def("cross_section", [](const std::string& t, int samples) {
        return rep::cross_section(cross_section(parse_rational(t), samples)).dump();
    });
    m.def(
        "extremal_atlas",
        [](const std::vector<std::string>& t_values, int u_samples) {
            AtlasGrid g = AtlasGrid::standard();
            if (!t_values.empty()) g.t_values = to_vector(t_values);
            if (u_samples > 0) g.u_samples = u_samples;
            return rep::atlas(extremal_atlas(g)).dump();
        },
        py::arg("t_values") = std::vector<std::string>{}, py::arg("u_samples") = 0);

    m.def("pF", [](const std::vector<std::string>& point, const std::string& w) {
        std::vector<std::string> out;
        for (const auto& x : pF(to_vector(point), parse_rational(w))) out.push_back(to_string(x));
        return out;
    });
    m.def("delta", [](int i, const std::vector<std::string>& point, const std::string& w) {
        return to_string(delta(i, to_vector(point), parse_rational(w)));
    });
    m.def("xi", [](const std::vector<std::string>& point, const std::string& w) {
        return to_string(xi(to_vector(point), parse_rational(w)));
    });
}
