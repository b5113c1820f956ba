#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "sumorder/rectify.hpp"
#include "sumorder/result.hpp"
#include "sumorder/search.hpp"
#include "sumorder/verify.hpp"

namespace sumorder {

using ordered_json = nlohmann::ordered_json;

/// Rank-1 elements serialize as bare integers, higher ranks as arrays of
/// coordinates. All integers are emitted in decimal, bit-exact.
ordered_json element_to_json(const Element& e);
ordered_json elements_to_json(std::span<const Element> elems);

ordered_json certificate_to_json(const RectCertificate& cert);
/// Throws input_error on a structurally malformed document. The returned
/// certificate is not otherwise validated; run check_certificate for that.
RectCertificate certificate_from_json(const ordered_json& j);

ordered_json validity_to_json(const ValidityReport& report);
ordered_json result_to_json(const SequencingResult& result);

/// Timing is off by default so identical inputs serialize byte-identically;
/// include_timing adds wall-clock fields for interactive use.
ordered_json sweep_to_json(const SweepReport& report,
                           bool include_timing = false);
std::string sweep_to_csv(const SweepReport& report);

}  // namespace sumorder
