#pragma once

// JSON documents: suite reports, certifications, generated instances and the catalog index.
// Output is deterministic: fixed key order, no timestamps, exact scalars as strings.

#include "ranklab/catalog.hpp"
#include "ranklab/extremal.hpp"

#include <string>
#include <vector>

namespace ranklab {

/// {"meta":{...},"entries":[...]} plus "audit" when the run was in audit mode.
std::string reportJson(const Report& report);

/// {"meta":{...},"certifications":[...],"summary":{...}}.
std::string certificationJson(const ExtremalConfig& config, const std::vector<CertificationRecord>& records);

/// id -> checker kind, input class, statement, erratum flag.
std::string catalogIndexJson();

struct GenRequest {
    std::string kind;
    std::size_t m = 3;
    std::vector<std::size_t> ranks;  // empty: drawn
    std::size_t count = 1;           // family size for idempotent-family
    std::string system = "z1";       // equation-system: z1, z8 or z11
    std::uint64_t seed = 1;
    std::uint32_t radicand = 0;
};

/// One generated instance with in-band property checks. Throws UsageError on a bad request.
std::string generateInstanceJson(const GenRequest& request);

}  // namespace ranklab
