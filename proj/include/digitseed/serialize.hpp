#pragma once

#include "digitseed/crt.hpp"
#include "digitseed/search.hpp"

#include <optional>
#include <string>

namespace digitseed {

/// On-disk form of a cover and/or a congruence system for one (base, digit)
/// pair. All integers are decimal strings in the JSON rendering.
struct CoverDocument {
    Base base{};
    Digit digit;
    std::optional<BigInt> seed;
    std::optional<PrimeCover> cover;
    CongruenceSystem conditions;
};

std::string to_json(const CoverDocument& doc);
CoverDocument cover_document_from_json(const std::string& text);

std::string to_json(const CoverCertificate& cert);
std::string to_json(const ProgressionFamily& family);
ProgressionFamily family_from_json(const std::string& text);

/// One record per line plus a trailing summary block; stable for diffing.
std::string render_elimination_report(const EliminationReport& report);

std::string render_scan_report(const SequenceSpec& spec, const ScanReport& report);
std::string render_all_digit_report(const AllDigitReport& report);
std::string render_pandigital_report(const PandigitalReport& report);

}  // namespace digitseed
