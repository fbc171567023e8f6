#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symcone/families.hpp"
#include "symcone/matrix.hpp"
#include "symcone/symbasis.hpp"

namespace symcone {

using ParamMap = std::map<std::string, Rational>;

// Raised when a theorem's genericity hypotheses fail; the message lists the
// vanishing factors.
class HypothesisError : public DomainError {
public:
    explicit HypothesisError(const std::vector<std::string>& failed);
    const std::vector<std::string>& failed() const { return failed_; }

private:
    std::vector<std::string> failed_;
};

// Either the full monomial space of (nvars, degree) forms, in graded-lex
// order, or one of the symmetric bases.
struct FormSpace {
    int nvars = 3, degree = 0;
    std::optional<Space> sym;

    static FormSpace full(int nvars, int degree) { return {nvars, degree, std::nullopt}; }
    static FormSpace symmetric(Space s);
    std::size_t dim() const;
    std::vector<HomogeneousForm> basis() const;
    // Coordinates of f in this space (throws MembershipError if outside).
    std::vector<Rational> coords(const HomogeneousForm& f) const;
    std::string name() const;
};

// sum_k coeff_k * (d^orders_k f)(point)
struct Functional {
    struct Term {
        Rational coeff;
        std::vector<int> orders;
    };
    std::vector<Rational> point;
    std::vector<Term> terms;
    std::string label;

    static Functional value(std::vector<Rational> point);
    // derivative with orders[i] in variable i
    static Functional derivative(std::vector<Rational> point, std::vector<int> orders);
    Functional& plus(const Rational& c, std::vector<int> orders);

    Rational apply(const HomogeneousForm& f) const;
    Rational apply_monomial(const Exponent& e) const;
};

struct ConstraintSpec {
    std::string id;
    FormSpace space;
    std::vector<Functional> constraints;
};

RationalMatrix constraint_matrix(const ConstraintSpec& spec);

struct DetCheck {
    std::string id;
    Rational computed, expected;
    bool matched = false;
};

struct ExtremalityCertificate {
    std::string spec_id;
    FamilyId target;
    ParamMap params;
    std::string space;
    RationalMatrix matrix;
    std::size_t rank = 0, kernel_dim = 0;
    std::vector<std::vector<Rational>> kernel;
    std::vector<Rational> target_coords;
    bool kernel_contains_target = false;
    std::optional<DetCheck> det_identity;
    // Bordering with a unit row gives a nonzero det iff the kernel vector
    // has a nonzero entry there.
    std::optional<bool> border_consistent;
    bool certified() const { return kernel_dim == 1 && kernel_contains_target; }
};

enum class SosConclusion { NOT_SOS, INCONCLUSIVE };

struct SosObstruction {
    std::string spec_id;
    std::vector<std::vector<Rational>> zeros;
    std::string half_space;
    RationalMatrix matrix;
    std::size_t rank = 0, kernel_dim = 0;
    SosConclusion conclusion = SosConclusion::INCONCLUSIVE;
    // The form whose zeros these are vanishes at all of them.
    std::optional<bool> zeros_verified;
    std::optional<DetCheck> det_identity;
};

// A named system from the catalog.
struct SpecInfo {
    std::string id;
    std::string kind;  // "extremal", "sos", "full-cone"
    std::vector<std::string> params;
    std::string description;
};
const std::vector<SpecInfo>& spec_catalog();
const SpecInfo& spec_info(const std::string& id);

// Builds the constraint system of a catalog entry.
ConstraintSpec catalog_spec(const std::string& id, const ParamMap& params);
// The family member the catalog entry characterises.
FamilyId catalog_target(const std::string& id, const ParamMap& params);
// Hypotheses of the catalog entry that fail at these parameters.
std::vector<std::string> hypothesis_violations(const std::string& id, const ParamMap& params);

ExtremalityCertificate certify_extremal(const FamilyId& target, const ConstraintSpec& spec);
// Catalog route: checks hypotheses (HypothesisError), builds the system,
// attaches the determinant identity when the entry has one.
ExtremalityCertificate certify_catalog(const std::string& id, const ParamMap& params);

SosObstruction sos_obstruction(const std::vector<std::vector<Rational>>& zeros, int nvars, int half_degree,
                               const std::vector<Functional>& gradient_rows = {});
SosObstruction sos_catalog(const std::string& id, const ParamMap& params);

// Full-cone certificates for even forms (monomial space, orbit zeros).
ExtremalityCertificate certify_extremal_full_cone(const std::string& id, const ParamMap& params);

struct GeneralPosition {
    bool ok = false;
    std::vector<std::string> failing;
    DetCheck det;
};
GeneralPosition general_position_check(const Rational& u, const Rational& v, const Rational& w);

// Determinant identities: the elimination determinant against the closed
// formula (sign fixed per identity).
const std::vector<std::string>& det_identity_ids();
DetCheck verify_det_identity(const std::string& id, const ParamMap& params);

// Point sets used by the systems above.
std::vector<std::vector<Rational>> quartic_points(const Rational& t, const Rational& u);
std::vector<std::vector<Rational>> ten_points(const Rational& u, const Rational& v, const Rational& w);
std::vector<std::vector<Rational>> cubic_orbit_zeros();
std::vector<std::vector<Rational>> decic_orbit_zeros(const Rational& p, const Rational& q);
std::vector<std::vector<Rational>> sos_points_A(const Rational& p, const Rational& q);
std::vector<std::vector<Rational>> sos_points_B(const Rational& p, const Rational& q);

}  // namespace symcone
