#include "splitauth/splitauth.h"

#include "splitauth/acode.hpp"
#include "splitauth/construct.hpp"
#include "splitauth/design_core.hpp"
#include "splitauth/error.hpp"
#include "splitauth/security.hpp"
#include "splitauth/serialize.hpp"
#include "splitauth/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

struct sa_family {
  splitauth::BaseBlockFamily value;
};

struct sa_design {
  splitauth::SplittingDesign value;
};

struct sa_verification {
  splitauth::VerificationResult value;
};

struct sa_code {
  splitauth::SplittingACode value;
};

struct sa_report {
  splitauth::SplittingACode code;
  splitauth::SecurityReport value;
};

struct sa_audit {
  std::optional<splitauth::SplittingACode> code;
  splitauth::AuditResult value;
};

namespace {

thread_local std::string last_error;

sa_status fail(sa_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
sa_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const splitauth::ParseError& e) {
    return fail(SA_ERR_PARSE, e.what());
  } catch (const splitauth::ValidationError& e) {
    return fail(SA_ERR_VALIDATION, e.what());
  } catch (const splitauth::DomainError& e) {
    return fail(SA_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SA_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SA_ERR_INTERNAL, "unknown exception");
  }
}

sa_status null_argument() { return fail(SA_ERR_ARGUMENT, "null argument"); }

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

splitauth::DesignParams to_params(const sa_params& p) {
  return splitauth::DesignParams{p.t, p.v, p.b, p.c, p.u, p.lambda};
}

sa_check to_check(splitauth::Check check) {
  switch (check) {
    case splitauth::Check::kPass: return SA_CHECK_PASS;
    case splitauth::Check::kFail: return SA_CHECK_FAIL;
    case splitauth::Check::kNotApplicable: return SA_CHECK_NOT_APPLICABLE;
  }
  return SA_CHECK_NOT_APPLICABLE;
}

std::string join(const std::vector<std::string>& items, const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += separator;
    out += items[i];
  }
  return out;
}

}  // namespace

extern "C" {

const char* sa_last_error(void) { return last_error.c_str(); }

const char* sa_status_name(sa_status status) {
  switch (status) {
    case SA_OK: return "ok";
    case SA_ERR_ARGUMENT: return "invalid argument";
    case SA_ERR_PARSE: return "parse error";
    case SA_ERR_VALIDATION: return "validation error";
    case SA_ERR_DOMAIN: return "domain error";
    case SA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sa_string_free(char* text) { std::free(text); }

sa_status sa_lambda_level(const sa_params* params, int s, char** out) {
  if (!params || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(splitauth::to_fraction_string(splitauth::lambda_level(to_params(*params), s)));
    return SA_OK;
  });
}

sa_status sa_admissible(const sa_params* params, int* all_pass, char** failures) {
  if (!params || !all_pass) return null_argument();
  return guarded([&] {
    const splitauth::AdmissibilityReport report = splitauth::admissible(to_params(*params));
    if (failures) *failures = copy_string(join(report.failures, "\n"));
    *all_pass = report.all_pass() ? 1 : 0;
    return SA_OK;
  });
}

sa_status sa_congruence(int v, int c, int u, sa_congruence_class* out) {
  if (!out) return null_argument();
  return guarded([&] {
    switch (splitauth::congruence_condition(v, c, u)) {
      case splitauth::Congruence::kOne: *out = SA_CONGRUENT_ONE; break;
      case splitauth::Congruence::kL: *out = SA_CONGRUENT_L; break;
      case splitauth::Congruence::kNeither: *out = SA_CONGRUENT_NEITHER; break;
    }
    return SA_OK;
  });
}

sa_status sa_family_generate(int c, int n, sa_family** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = new sa_family{splitauth::family_u2(c, n)};
    return SA_OK;
  });
}

sa_status sa_family_from_json(const char* json, sa_family** out) {
  if (!json || !out) return null_argument();
  return guarded([&] {
    *out = new sa_family{splitauth::family_from_json(json)};
    return SA_OK;
  });
}

sa_status sa_family_to_json(const sa_family* family, char** out) {
  if (!family || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(splitauth::family_to_json(family->value));
    return SA_OK;
  });
}

int sa_family_v(const sa_family* family) { return family ? family->value.v : 0; }

size_t sa_family_base_block_count(const sa_family* family) {
  return family ? family->value.base_blocks.size() : 0;
}

void sa_family_free(sa_family* family) { delete family; }

sa_status sa_family_develop(const sa_family* family, int t, sa_design** out) {
  if (!family || !out) return null_argument();
  return guarded([&] {
    *out = new sa_design{splitauth::develop_cyclic(family->value, t)};
    return SA_OK;
  });
}

sa_status sa_design_from_json(const char* json, sa_design** out) {
  if (!json || !out) return null_argument();
  return guarded([&] {
    *out = new sa_design{splitauth::any_design_from_json(json)};
    return SA_OK;
  });
}

sa_status sa_design_to_json(const sa_design* design, char** out) {
  if (!design || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(splitauth::design_to_json(design->value));
    return SA_OK;
  });
}

int sa_design_v(const sa_design* design) { return design ? design->value.v : 0; }

size_t sa_design_block_count(const sa_design* design) {
  return design ? design->value.blocks.size() : 0;
}

size_t sa_design_orbit_count(const sa_design* design) {
  if (!design || !design->value.provenance) return 0;
  return design->value.provenance->orbits.size();
}

sa_status sa_design_orbit_length(const sa_design* design, size_t index, int* out) {
  if (!design || !out) return null_argument();
  if (index >= sa_design_orbit_count(design)) {
    return fail(SA_ERR_DOMAIN, "orbit index out of range");
  }
  *out = design->value.provenance->orbits[index].length;
  return SA_OK;
}

void sa_design_free(sa_design* design) { delete design; }

sa_status sa_design_verify(const sa_design* design, int t, sa_verification** out) {
  if (!design || !out) return null_argument();
  return guarded([&] {
    *out = new sa_verification{splitauth::verify_design(design->value, t)};
    return SA_OK;
  });
}

int sa_verification_ok(const sa_verification* result) { return result && result->value.ok ? 1 : 0; }

sa_status sa_verification_params(const sa_verification* result, sa_params* out) {
  if (!result || !out) return null_argument();
  if (!result->value.params) return fail(SA_ERR_DOMAIN, "verification failed; no parameters");
  const splitauth::DesignParams& p = *result->value.params;
  *out = sa_params{p.t, p.v, p.b, p.c, p.u, p.lambda};
  return SA_OK;
}

sa_status sa_verification_summary(const sa_verification* result, char** out) {
  if (!result || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(result->value.summary());
    return SA_OK;
  });
}

sa_status sa_verification_to_json(const sa_verification* result, char** out) {
  if (!result || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(splitauth::verification_to_json(result->value));
    return SA_OK;
  });
}

void sa_verification_free(sa_verification* result) { delete result; }

sa_status sa_code_from_design(const sa_design* design, int t, sa_code** out) {
  if (!design || !out) return null_argument();
  return guarded([&] {
    *out = new sa_code{splitauth::code_from_design(design->value, t)};
    return SA_OK;
  });
}

sa_status sa_code_from_json(const char* json, sa_code** out) {
  if (!json || !out) return null_argument();
  return guarded([&] {
    if (splitauth::detect_kind(json) == splitauth::DocumentKind::kCode) {
      *out = new sa_code{splitauth::code_from_json(json)};
    } else {
      *out = new sa_code{splitauth::code_from_design(splitauth::any_design_from_json(json), 2)};
    }
    return SA_OK;
  });
}

sa_status sa_code_to_json(const sa_code* code, char** out) {
  if (!code || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(splitauth::code_to_json(code->value));
    return SA_OK;
  });
}

sa_status sa_code_render(const sa_code* code, sa_format format, char** out) {
  if (!code || !out) return null_argument();
  return guarded([&] {
    const splitauth::EncodingMatrix matrix = splitauth::render_matrix(code->value);
    switch (format) {
      case SA_FORMAT_TEXT: *out = copy_string(splitauth::matrix_to_text(matrix)); break;
      case SA_FORMAT_MARKDOWN: *out = copy_string(splitauth::matrix_to_markdown(matrix)); break;
      case SA_FORMAT_CSV: *out = copy_string(splitauth::matrix_to_csv(matrix)); break;
      case SA_FORMAT_JSON: *out = copy_string(splitauth::code_to_json(code->value)); break;
      default: return fail(SA_ERR_ARGUMENT, "unknown format");
    }
    return SA_OK;
  });
}

size_t sa_code_rule_count(const sa_code* code) { return code ? code->value.b() : 0; }
int sa_code_source_count(const sa_code* code) { return code ? code->value.u() : 0; }
int sa_code_message_count(const sa_code* code) { return code ? code->value.v() : 0; }

sa_status sa_code_encode(const sa_code* code, size_t rule, int source, int r, int* message) {
  if (!code || !message) return null_argument();
  return guarded([&] {
    *message = splitauth::encode(code->value, rule, source, r);
    return SA_OK;
  });
}

sa_status sa_code_decode(const sa_code* code, size_t rule, int message, int* source) {
  if (!code || !source) return null_argument();
  return guarded([&] {
    const std::optional<int> s = splitauth::decode(code->value, rule, message);
    *source = s ? *s : -1;
    return SA_OK;
  });
}

void sa_code_free(sa_code* code) { delete code; }

sa_status sa_code_analyze(const sa_code* code, int i_max, sa_report** out) {
  if (!code || !out) return null_argument();
  return guarded([&] {
    *out = new sa_report{code->value, splitauth::analyze(code->value, i_max)};
    return SA_OK;
  });
}

sa_status sa_report_pd(const sa_report* report, int i, char** out) {
  if (!report || !out) return null_argument();
  const auto it = report->value.pd.find(i);
  if (it == report->value.pd.end()) return fail(SA_ERR_DOMAIN, "order not analyzed");
  return guarded([&] {
    *out = copy_string(splitauth::to_fraction_string(it->second));
    return SA_OK;
  });
}

sa_status sa_report_bound(const sa_report* report, int i, char** out) {
  if (!report || !out) return null_argument();
  const auto it = report->value.bounds.find(i);
  if (it == report->value.bounds.end()) return fail(SA_ERR_DOMAIN, "order not analyzed");
  return guarded([&] {
    *out = copy_string(splitauth::to_fraction_string(it->second));
    return SA_OK;
  });
}

int sa_report_security_level(const sa_report* report) {
  return report ? report->value.security_level : -1;
}

sa_check sa_report_optimal(const sa_report* report) {
  return report ? to_check(report->value.optimal) : SA_CHECK_NOT_APPLICABLE;
}

int sa_report_perfect_secrecy(const sa_report* report) {
  return report && report->value.secrecy.perfect ? 1 : 0;
}

sa_status sa_report_to_text(const sa_report* report, char** out) {
  if (!report || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(splitauth::report_to_text(report->code, report->value));
    return SA_OK;
  });
}

sa_status sa_report_to_json(const sa_report* report, char** out) {
  if (!report || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(splitauth::report_to_json(report->value));
    return SA_OK;
  });
}

void sa_report_free(sa_report* report) { delete report; }

sa_status sa_audit_json(const char* json, int i_max, sa_audit** out) {
  if (!json || !out) return null_argument();
  return guarded([&] {
    splitauth::CodeTable table;
    if (splitauth::detect_kind(json) == splitauth::DocumentKind::kCode) {
      table = splitauth::code_table_from_json(json);
    } else {
      const splitauth::SplittingDesign design = splitauth::any_design_from_json(json);
      table.v = design.v;
      table.rules = design.blocks;
    }
    auto audit = std::make_unique<sa_audit>();
    audit->value = splitauth::audit(table, i_max);
    if (audit->value.report) {
      audit->code.emplace(table.v, table.rules, table.key_dist, table.source_dist,
                          table.split_dist);
    }
    *out = audit.release();
    return SA_OK;
  });
}

int sa_audit_passed(const sa_audit* audit) { return audit && audit->value.passed() ? 1 : 0; }

sa_status sa_audit_violations(const sa_audit* audit, char** out) {
  if (!audit || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(join(audit->value.violations, ","));
    return SA_OK;
  });
}

sa_status sa_audit_to_text(const sa_audit* audit, char** out) {
  if (!audit || !out) return null_argument();
  return guarded([&] {
    const splitauth::AuditResult& result = audit->value;
    std::string text;
    for (const splitauth::StructureDefect& d : result.defects) {
      text += "structure: rule e" + std::to_string(d.block_index + 1) + " violates " + d.clause +
              " (" + d.detail + ")\n";
    }
    if (result.verification) text += "design: " + result.verification->summary() + "\n";
    if (result.report) text += splitauth::report_to_text(*audit->code, *result.report);
    text += result.passed() ? "verdict: all claims hold\n"
                            : "verdict: FAILED (" + join(result.violations, ", ") + ")\n";
    *out = copy_string(text);
    return SA_OK;
  });
}

sa_status sa_audit_to_json(const sa_audit* audit, char** out) {
  if (!audit || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(splitauth::audit_to_json(audit->value));
    return SA_OK;
  });
}

void sa_audit_free(sa_audit* audit) { delete audit; }

}  // extern "C"
