#include "splitauth/serialize.hpp"

#include "splitauth/error.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

namespace splitauth {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_object(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object at top level");
  return doc;
}

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& value = doc.at(key);
  if (!value.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return value.get<int>();
}

std::vector<Block> parse_blocks(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& blocks = doc.at(key);
  if (!blocks.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  std::vector<Block> result;
  for (const json& block : blocks) {
    if (!block.is_array()) throw ParseError(std::string("each entry of '") + key + "' must be a list of parts");
    Block parsed;
    for (const json& part : block) {
      if (!part.is_array()) throw ParseError("each part must be a list of points");
      Part points;
      for (const json& x : part) {
        if (!x.is_number_integer()) throw ParseError("points must be integers");
        points.push_back(x.get<int>());
      }
      parsed.push_back(std::move(points));
    }
    result.push_back(std::move(parsed));
  }
  return result;
}

std::vector<Rational> parse_weights(const json& value, const std::string& name) {
  if (!value.is_array()) throw ParseError("field '" + name + "' must be an array");
  std::vector<Rational> weights;
  for (const json& w : value) {
    if (w.is_string()) {
      weights.push_back(parse_rational(w.get<std::string>()));
    } else if (w.is_number_integer()) {
      weights.push_back(Rational(w.get<long long>()));
    } else {
      throw ParseError("weights in '" + name + "' must be \"p/q\" strings");
    }
  }
  return weights;
}

// Compact rendering of a list of blocks, one block per line.
std::string blocks_json(const std::vector<Block>& blocks, const std::string& indent) {
  if (blocks.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out += indent + "  " + json(blocks[i]).dump();
    out += i + 1 < blocks.size() ? ",\n" : "\n";
  }
  return out + indent + "]";
}

json weights_json(const std::vector<Rational>& weights) {
  json out = json::array();
  for (const Rational& w : weights) out.push_back(to_fraction_string(w));
  return out;
}

// Writes `fields` as a JSON object, one key per line, values verbatim.
std::string object_lines(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += "  " + json(fields[i].first).dump() + ": " + fields[i].second;
    out += i + 1 < fields.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

ordered_json report_object(const SecurityReport& report) {
  ordered_json out;
  ordered_json pd = ordered_json::object();
  ordered_json bounds = ordered_json::object();
  for (const auto& [i, value] : report.pd) pd[std::to_string(i)] = to_fraction_string(value);
  for (const auto& [i, value] : report.bounds) bounds[std::to_string(i)] = to_fraction_string(value);
  out["i_max"] = report.i_max;
  out["pd"] = pd;
  out["bounds"] = bounds;
  out["security_level"] = report.security_level;
  out["optimal"] = to_string(report.optimal);
  ordered_json secrecy;
  secrecy["perfect"] = report.secrecy.perfect;
  ordered_json priors = ordered_json::array();
  for (const Rational& p : report.secrecy.table.priors) priors.push_back(to_fraction_string(p));
  secrecy["priors"] = priors;
  ordered_json marginals = ordered_json::object();
  for (const auto& [m, p] : report.secrecy.table.message_marginals) {
    marginals[std::to_string(m)] = to_fraction_string(p);
  }
  secrecy["message_marginals"] = marginals;
  ordered_json posterior = ordered_json::array();
  for (const auto& [key, p] : report.secrecy.table.entries) {
    posterior.push_back({{"source", key.first + 1}, {"message", key.second},
                         {"p", to_fraction_string(p)}});
  }
  secrecy["posterior"] = posterior;
  secrecy["unreachable_messages"] = report.secrecy.table.unreachable_messages;
  out["secrecy"] = secrecy;
  return out;
}

ordered_json verification_object(const VerificationResult& result) {
  ordered_json out;
  out["ok"] = result.ok;
  out["summary"] = result.summary();
  if (result.params) {
    const DesignParams& p = *result.params;
    out["params"] = {{"t", p.t}, {"v", p.v}, {"b", p.b}, {"l", p.l()},
                     {"c", p.c}, {"u", p.u}, {"lambda", p.lambda}};
  }
  ordered_json defects = ordered_json::array();
  for (const StructureDefect& d : result.defects) {
    defects.push_back({{"block", d.block_index + 1}, {"clause", d.clause}, {"detail", d.detail}});
  }
  out["defects"] = defects;
  if (result.witness) {
    out["witness"] = {{"points", result.witness->points},
                      {"actual", result.witness->actual},
                      {"expected", result.witness->expected}};
  }
  return out;
}

}  // namespace

DocumentKind detect_kind(std::string_view json_text) {
  const json doc = parse_object(json_text);
  if (doc.contains("base_blocks")) return DocumentKind::kFamily;
  if (doc.contains("rules")) return DocumentKind::kCode;
  if (doc.contains("blocks")) return DocumentKind::kDesign;
  return DocumentKind::kUnknown;
}

std::string family_to_json(const BaseBlockFamily& family) {
  return object_lines({{"v", std::to_string(family.v)},
                       {"u", std::to_string(family.u)},
                       {"c", std::to_string(family.c)},
                       {"base_blocks", blocks_json(family.base_blocks, "  ")}});
}

BaseBlockFamily family_from_json(std::string_view json_text) {
  const json doc = parse_object(json_text);
  BaseBlockFamily family;
  family.v = require_int(doc, "v");
  family.u = require_int(doc, "u");
  family.c = require_int(doc, "c");
  family.base_blocks = parse_blocks(doc, "base_blocks");
  family.validate();
  return family;
}

std::string design_to_json(const SplittingDesign& design) {
  return object_lines({{"v", std::to_string(design.v)},
                       {"t", std::to_string(design.t)},
                       {"blocks", blocks_json(design.blocks, "  ")}});
}

SplittingDesign design_from_json(std::string_view json_text) {
  const json doc = parse_object(json_text);
  SplittingDesign design;
  design.v = require_int(doc, "v");
  design.t = doc.contains("t") ? require_int(doc, "t") : 2;
  design.blocks = parse_blocks(doc, "blocks");
  return design;
}

SplittingDesign any_design_from_json(std::string_view json_text) {
  switch (detect_kind(json_text)) {
    case DocumentKind::kFamily: {
      const json doc = parse_object(json_text);
      const int t = doc.contains("t") ? require_int(doc, "t") : 2;
      return develop_cyclic(family_from_json(json_text), t);
    }
    case DocumentKind::kDesign:
      return design_from_json(json_text);
    case DocumentKind::kCode: {
      const CodeTable table = code_table_from_json(json_text);
      return SplittingDesign{table.v, 2, table.rules, std::nullopt};
    }
    case DocumentKind::kUnknown:
      break;
  }
  throw ParseError("document is neither a family, a design nor a code");
}

std::string code_to_json(const SplittingACode& code) {
  std::vector<std::pair<std::string, std::string>> fields = {
      {"u", std::to_string(code.u())},
      {"v", std::to_string(code.v())},
      {"rules", blocks_json(code.rules(), "  ")},
      {"key_dist", weights_json(code.key_dist()).dump()},
      {"source_dist", weights_json(code.source_dist()).dump()},
  };
  if (!code.split_is_uniform()) {
    json split = json::array();
    for (const auto& per_rule : code.split_dist()) {
      json row = json::array();
      for (const auto& per_source : per_rule) row.push_back(weights_json(per_source));
      split.push_back(row);
    }
    fields.emplace_back("split_dist", split.dump());
  }
  return object_lines(fields);
}

CodeTable code_table_from_json(std::string_view json_text) {
  const json doc = parse_object(json_text);
  CodeTable table;
  table.v = require_int(doc, "v");
  table.rules = parse_blocks(doc, "rules");
  if (doc.contains("u")) {
    const int u = require_int(doc, "u");
    for (const Block& rule : table.rules) {
      if (static_cast<int>(rule.size()) != u) {
        throw ParseError("rule width does not match declared u=" + std::to_string(u));
      }
    }
  }
  if (doc.contains("key_dist")) table.key_dist = parse_weights(doc.at("key_dist"), "key_dist");
  if (doc.contains("source_dist")) {
    table.source_dist = parse_weights(doc.at("source_dist"), "source_dist");
  }
  if (doc.contains("split_dist")) {
    const json& split = doc.at("split_dist");
    if (!split.is_array()) throw ParseError("field 'split_dist' must be an array");
    std::vector<std::vector<std::vector<Rational>>> weights;
    for (const json& per_rule : split) {
      if (!per_rule.is_array()) throw ParseError("split_dist entries must be arrays");
      std::vector<std::vector<Rational>> row;
      for (const json& per_source : per_rule) row.push_back(parse_weights(per_source, "split_dist"));
      weights.push_back(std::move(row));
    }
    table.split_dist = std::move(weights);
  }
  return table;
}

SplittingACode code_from_json(std::string_view json_text) {
  CodeTable table = code_table_from_json(json_text);
  return SplittingACode(table.v, std::move(table.rules), std::move(table.key_dist),
                        std::move(table.source_dist), std::move(table.split_dist));
}

std::string verification_to_json(const VerificationResult& result) {
  return verification_object(result).dump(2) + "\n";
}

std::string report_to_json(const SecurityReport& report) {
  return report_object(report).dump(2) + "\n";
}

std::string audit_to_json(const AuditResult& result) {
  ordered_json out;
  out["passed"] = result.passed();
  out["violations"] = result.violations;
  ordered_json defects = ordered_json::array();
  for (const StructureDefect& d : result.defects) {
    defects.push_back({{"block", d.block_index + 1}, {"clause", d.clause}, {"detail", d.detail}});
  }
  out["defects"] = defects;
  if (result.verification) out["verification"] = verification_object(*result.verification);
  if (result.report) out["report"] = report_object(*result.report);
  return out.dump(2) + "\n";
}

}  // namespace splitauth
