#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symcone/boundary.hpp"
#include "symcone/certify.hpp"
#include "symcone/identities.hpp"
#include "symcone/psd.hpp"

// JSON documents and plain-text renderings of every result type. Rationals are
// always strings "num/den" (or "num"), so documents round-trip exactly.
namespace symcone::report {

using Json = nlohmann::ordered_json;

Json rational(const Rational& r);
Json vector(const std::vector<Rational>& v);
Json points(const std::vector<std::vector<Rational>>& pts);
Json params(const ParamMap& p);
Json matrix(const RationalMatrix& m);

Json psd(const PsdVerdict& v);
// include_matrix: also list every matrix row (large for the full-cone systems)
Json certificate(const ExtremalityCertificate& c, bool include_matrix = false);
Json sos(const SosObstruction& s, bool include_matrix = false);
Json det_check(const DetCheck& d);
Json identity_sample(const std::string& id, const IdentitySample& s);
Json identity_report(const IdentityReport& r);
Json general_position(const GeneralPosition& g);
Json atlas_row(const AtlasRow& r);
Json atlas(const std::vector<AtlasRow>& rows);
Json cross_section(const CrossSection& cs);

std::string human(const PsdVerdict& v);
std::string human(const ExtremalityCertificate& c);
std::string human(const SosObstruction& s);
std::string human(const DetCheck& d);
std::string human(const std::string& id, const IdentitySample& s);
std::string human(const IdentityReport& r);
std::string human(const GeneralPosition& g);
std::string human(const CrossSection& cs);

// Atlas-style rows (same columns as atlas_csv) for every point of a section.
std::vector<AtlasRow> cross_section_rows(const CrossSection& cs);

}  // namespace symcone::report
