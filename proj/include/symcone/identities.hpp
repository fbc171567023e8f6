#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcone/certify.hpp"

namespace symcone {

struct IdentityInfo {
    std::string id;
    std::string statement;
    std::vector<std::string> params;
    // "polynomial", "determinant", "discriminant" or "equality"
    std::string kind;
};

// One evaluation of an identity at fixed parameters.
struct IdentitySample {
    ParamMap params;
    bool holds = false;
    // first mismatching side pair, empty when the identity holds
    std::string detail;
};

struct IdentityReport {
    std::string id;
    std::size_t samples = 0;
    std::size_t passed = 0;
    // parameter points rejected by the domain (resampled)
    std::size_t rejected = 0;
    std::optional<IdentitySample> first_failure;
    double seconds = 0;
    bool ok() const { return samples > 0 && passed == samples; }
};

// Stable list, in catalog order.
const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(const std::string& id);
std::vector<std::string> identity_ids();

// Throws DomainError when the parameters are outside the identity's domain or
// a parameter is missing.
IdentitySample check_identity(const std::string& id, const ParamMap& params);

// Random rational parameters drawn from a stream derived from (seed, id), so
// results do not depend on the order or the thread a sweep runs in.
ParamMap sample_identity_params(const std::string& id, std::uint64_t seed, std::size_t index);

IdentityReport sweep_identity(const std::string& id, std::size_t samples, std::uint64_t seed);

// workers == 0 picks the hardware concurrency.
std::vector<IdentityReport> sweep_identities(const std::vector<std::string>& ids, std::size_t samples,
                                             std::uint64_t seed, unsigned workers = 1);

}  // namespace symcone
