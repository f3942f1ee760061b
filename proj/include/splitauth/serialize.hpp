#pragma once

// On-disk JSON formats. Points and messages are 1-based.
//
//   family: {"v": 17, "u": 2, "c": 2, "base_blocks": [[[1,2],[3,5]], ...]}
//   design: {"v": 17, "t": 2, "blocks": [[[1,2],[3,5]], ...]}
//   code:   {"u": 2, "v": 9, "rules": [...], "key_dist": ["1/9", ...],
//            "source_dist": ["1/2", "1/2"], "split_dist": [[["1/2","1/2"], ...], ...]}
//
// split_dist is optional (uniform when absent); its innermost lists follow
// the ascending message order of each cell.

#include "splitauth/acode.hpp"
#include "splitauth/construct.hpp"
#include "splitauth/security.hpp"
#include "splitauth/verify.hpp"

#include <string>
#include <string_view>

namespace splitauth {

enum class DocumentKind { kFamily, kDesign, kCode, kUnknown };

/// Throws ParseError for text that is not a JSON object.
DocumentKind detect_kind(std::string_view json_text);

std::string family_to_json(const BaseBlockFamily& family);
BaseBlockFamily family_from_json(std::string_view json_text);

std::string design_to_json(const SplittingDesign& design);
SplittingDesign design_from_json(std::string_view json_text);

/// Family documents are developed first.
SplittingDesign any_design_from_json(std::string_view json_text);

std::string code_to_json(const SplittingACode& code);
CodeTable code_table_from_json(std::string_view json_text);
SplittingACode code_from_json(std::string_view json_text);

std::string verification_to_json(const VerificationResult& result);
std::string report_to_json(const SecurityReport& report);
std::string audit_to_json(const AuditResult& result);

}  // namespace splitauth
