// splitauth: construct, verify, convert and analyze splitting designs and
// splitting authentication codes. Links only against the C interface.
//
// Exit codes: 0 success, 1 a verification or security claim failed,
// 2 malformed input or usage error.

#include "splitauth/splitauth.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitMalformed = 2;

struct ApiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A claim (verification, security property) did not hold.
struct ClaimFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(sa_status status) {
  if (status != SA_OK) {
    throw ApiError(std::string(sa_status_name(status)) + ": " + sa_last_error());
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Family = std::unique_ptr<sa_family, Deleter<sa_family, sa_family_free>>;
using Design = std::unique_ptr<sa_design, Deleter<sa_design, sa_design_free>>;
using Verification =
    std::unique_ptr<sa_verification, Deleter<sa_verification, sa_verification_free>>;
using Code = std::unique_ptr<sa_code, Deleter<sa_code, sa_code_free>>;
using Report = std::unique_ptr<sa_report, Deleter<sa_report, sa_report_free>>;
using Audit = std::unique_ptr<sa_audit, Deleter<sa_audit, sa_audit_free>>;

// Takes ownership of a string returned by the library.
std::string take(char* text) {
  std::string out = text ? text : "";
  sa_string_free(text);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ApiError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ApiError("write to '" + path + "' failed");
}

Design load_design(const std::string& path) {
  const std::string json = read_input(path);
  sa_design* raw = nullptr;
  check(sa_design_from_json(json.c_str(), &raw));
  return Design(raw);
}

Verification verify(const sa_design* design, int t) {
  sa_verification* raw = nullptr;
  check(sa_design_verify(design, t, &raw));
  return Verification(raw);
}

std::string orbit_line(const sa_design* design) {
  const std::size_t count = sa_design_orbit_count(design);
  if (count == 0) return {};
  std::string line = "orbits:";
  bool all_full = true;
  for (std::size_t i = 0; i < count; ++i) {
    int length = 0;
    check(sa_design_orbit_length(design, i, &length));
    line += " " + std::to_string(length);
    all_full = all_full && length == sa_design_v(design);
  }
  return line + (all_full ? " (all full)\n" : " (short orbit present)\n");
}

Code code_from_verified(const sa_design* design, int t) {
  const Verification result = verify(design, t);
  if (!sa_verification_ok(result.get())) {
    throw ClaimFailure(take([&] {
      char* s = nullptr;
      check(sa_verification_summary(result.get(), &s));
      return s;
    }()));
  }
  sa_params params{};
  check(sa_verification_params(result.get(), &params));
  if (params.lambda != 1) {
    throw ClaimFailure("code construction needs lambda = 1, design has lambda = " +
                       std::to_string(params.lambda));
  }
  sa_code* raw = nullptr;
  check(sa_code_from_design(design, t, &raw));
  return Code(raw);
}

int cmd_gen_family(int c, int n, const std::string& out) {
  sa_family* raw = nullptr;
  check(sa_family_generate(c, n, &raw));
  const Family family(raw);
  char* json = nullptr;
  check(sa_family_to_json(family.get(), &json));
  write_output(out, take(json));
  return kExitOk;
}

int cmd_develop(const std::string& input, int t, const std::string& out) {
  const std::string json = read_input(input);
  sa_family* raw = nullptr;
  check(sa_family_from_json(json.c_str(), &raw));
  const Family family(raw);
  sa_design* developed = nullptr;
  check(sa_family_develop(family.get(), t, &developed));
  const Design design(developed);
  char* text = nullptr;
  check(sa_design_to_json(design.get(), &text));
  write_output(out, take(text));
  return kExitOk;
}

int cmd_verify(const std::string& input, int t, bool as_json, const std::string& out) {
  const Design design = load_design(input);
  const Verification result = verify(design.get(), t);
  char* text = nullptr;
  if (as_json) {
    check(sa_verification_to_json(result.get(), &text));
    write_output(out, take(text));
  } else {
    check(sa_verification_summary(result.get(), &text));
    write_output(out, take(text) + "\n" + orbit_line(design.get()));
  }
  return sa_verification_ok(result.get()) ? kExitOk : kExitClaimFailed;
}

int cmd_to_code(const std::string& input, int t, const std::string& out) {
  const Design design = load_design(input);
  const Code code = code_from_verified(design.get(), t);
  char* json = nullptr;
  check(sa_code_to_json(code.get(), &json));
  write_output(out, take(json));
  return kExitOk;
}

int cmd_analyze(const std::string& input, int i_max, bool as_json, const std::string& out) {
  const std::string json = read_input(input);
  sa_audit* raw = nullptr;
  check(sa_audit_json(json.c_str(), i_max, &raw));
  const Audit audit(raw);
  char* text = nullptr;
  check(as_json ? sa_audit_to_json(audit.get(), &text) : sa_audit_to_text(audit.get(), &text));
  write_output(out, take(text));
  if (!sa_audit_passed(audit.get())) {
    char* violations = nullptr;
    check(sa_audit_violations(audit.get(), &violations));
    std::cerr << "violated: " << take(violations) << "\n";
    return kExitClaimFailed;
  }
  return kExitOk;
}

int cmd_export(const std::string& input, sa_format format, const std::string& out) {
  const std::string json = read_input(input);
  sa_code* raw = nullptr;
  check(sa_code_from_json(json.c_str(), &raw));
  const Code code(raw);
  char* text = nullptr;
  check(sa_code_render(code.get(), format, &text));
  write_output(out, take(text));
  return kExitOk;
}

int cmd_demo(const std::string& which) {
  const int n = which == "table1" ? 1 : 2;
  sa_family* family_raw = nullptr;
  check(sa_family_generate(2, n, &family_raw));
  const Family family(family_raw);
  sa_design* design_raw = nullptr;
  check(sa_family_develop(family.get(), 2, &design_raw));
  const Design design(design_raw);
  const Code code = code_from_verified(design.get(), 2);

  char* matrix = nullptr;
  check(sa_code_render(code.get(), SA_FORMAT_TEXT, &matrix));
  std::string text = take(matrix) + "\n";

  const Verification result = verify(design.get(), 2);
  char* summary = nullptr;
  check(sa_verification_summary(result.get(), &summary));
  text += "design: " + take(summary) + "\n" + orbit_line(design.get());

  sa_report* report_raw = nullptr;
  check(sa_code_analyze(code.get(), 1, &report_raw));
  const Report report(report_raw);
  char* report_text = nullptr;
  check(sa_report_to_text(report.get(), &report_text));
  text += take(report_text);
  std::cout << text;

  const bool claims_hold = sa_report_security_level(report.get()) >= 1 &&
                           sa_report_optimal(report.get()) == SA_CHECK_PASS &&
                           sa_report_perfect_secrecy(report.get());
  return claims_hold ? kExitOk : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting designs and splitting authentication codes"};
  app.require_subcommand(1);

  std::string input;
  std::string out;
  int t = 2;
  int c = 0;
  int n = 0;
  int i_max = 1;
  bool as_json = false;
  std::string format = "text";
  std::string which;

  auto* gen = app.add_subcommand("gen-family", "Write the u=2 cyclic base-block family for (c, n)");
  gen->add_option("--c", c, "Part size c")->required()->check(CLI::PositiveNumber);
  gen->add_option("--n", n, "Number of base blocks n")->required()->check(CLI::PositiveNumber);
  gen->add_option("-o,--out", out, "Output path (default stdout)");

  auto* develop = app.add_subcommand("develop", "Develop a base-block family into a design");
  develop->add_option("input", input, "Family JSON ('-' for stdin)")->required();
  develop->add_option("--t", t, "Strength recorded in the design");
  develop->add_option("-o,--out", out, "Output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively verify a splitting design");
  verify_cmd->add_option("input", input, "Family or design JSON")->required();
  verify_cmd->add_option("--t", t, "Strength t");
  verify_cmd->add_flag("--json", as_json, "Emit a JSON report");
  verify_cmd->add_option("-o,--out", out, "Output path (default stdout)");

  auto* to_code = app.add_subcommand("to-code", "Convert a verified lambda=1 design into a code");
  to_code->add_option("input", input, "Family or design JSON")->required();
  to_code->add_option("--t", t, "Strength t (>= 2)");
  to_code->add_option("-o,--out", out, "Output path (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Audit every security claim of a code");
  analyze->add_option("input", input, "Code, design or family JSON")->required();
  analyze->add_option("--i-max", i_max, "Highest spoofing order to analyze");
  analyze->add_flag("--json", as_json, "Emit a JSON report");
  analyze->add_option("-o,--out", out, "Output path (default stdout)");

  auto* export_cmd = app.add_subcommand("export", "Render the encoding matrix");
  export_cmd->add_option("input", input, "Code, design or family JSON")->required();
  export_cmd->add_option("--format", format, "text, markdown, csv or json")
      ->check(CLI::IsMember({"text", "markdown", "csv", "json"}));
  export_cmd->add_option("-o,--out", out, "Output path (default stdout)");

  auto* demo = app.add_subcommand("demo", "Reproduce a reference encoding matrix with its report");
  demo->add_option("which", which, "table1 or table2")
      ->required()
      ->check(CLI::IsMember({"table1", "table2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*gen) return cmd_gen_family(c, n, out);
    if (*develop) return cmd_develop(input, t, out);
    if (*verify_cmd) return cmd_verify(input, t, as_json, out);
    if (*to_code) return cmd_to_code(input, t, out);
    if (*analyze) return cmd_analyze(input, i_max, as_json, out);
    if (*export_cmd) {
      static const std::map<std::string, sa_format> kFormats = {{"text", SA_FORMAT_TEXT},
                                                                {"markdown", SA_FORMAT_MARKDOWN},
                                                                {"csv", SA_FORMAT_CSV},
                                                                {"json", SA_FORMAT_JSON}};
      return cmd_export(input, kFormats.at(format), out);
    }
    if (*demo) return cmd_demo(which);
  } catch (const ClaimFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitClaimFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
