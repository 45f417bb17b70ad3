#pragma once

// Maximal-subgroup order table for SL_11(q), the Q-divisibility scan, and
// self-contained JSON certificates for the generator pairs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slgen/arith.hpp"
#include "slgen/matrix.hpp"

namespace slgen::certify {

using arith::Natural;

/// One order value of a maximal-subgroup family. Cases 8 and 11 depend on a
/// subfield GF(q0) and carry one variant per admissible q0.
struct MaxSubVariant {
    std::optional<Natural> q0;
    Natural order;
};

struct MaxSubEntry {
    unsigned case_id = 0;
    std::string label;
    std::vector<MaxSubVariant> variants;
    bool applicable = false;
    /// Empty when applicable, otherwise the condition that fails.
    std::string reason;
};

/// The 14 families of maximal subgroups of SL_11(q). Orders are reported
/// even for inapplicable families whenever the formula makes sense.
std::vector<MaxSubEntry> maxsub_table(const Natural& q);

struct ScanRow {
    MaxSubEntry entry;
    /// Per variant: Q divides the order.
    std::vector<bool> variant_divisible;
    /// Applicable and some variant divisible.
    bool divisible = false;
};

struct ScanReport {
    Natural q;
    Natural Q;
    std::vector<ScanRow> rows;
    std::vector<unsigned> divisible_cases;
    /// Whether multiplying the case-8 orders by (q0 - 1) changes any verdict.
    bool case8_sensitive = false;
};

/// Same scan without the consistency check.
ScanReport q_divisibility_scan_unchecked(const Natural& q);
/// Throws ScanContradiction unless exactly case 7 is divisible by Q.
ScanReport q_divisibility_scan(const Natural& q);

using Certificate = nlohmann::json;

/// Full pipeline for one (n, q); the seed drives the MeatAxe.
Certificate certify(unsigned n, const Natural& q, std::uint64_t seed = 0);

struct VerifyReport {
    bool ok = false;
    std::string first_failure;
};

/// Recomputes every recorded claim from the serialized data.
VerifyReport verify(const Certificate& cert);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string serialize(const Certificate& cert);
/// Throws MalformedCertificate.
Certificate parse(const std::string& text);

nlohmann::json scan_to_json(const ScanReport& r);
/// {"p", "k", "poly"} with decimal-string entries.
nlohmann::json field_to_json(const ff::Field& f);
/// Row-major lists of canonical element codes.
nlohmann::json matrix_to_json(const matrix::Mat& m);

}  // namespace slgen::certify
