// Copyright 2026 The eclosure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eclosure/report.hpp"

#include <sstream>

#include "eclosure/catalog.hpp"
#include "eclosure/completion.hpp"
#include "eclosure/error.hpp"
#include "eclosure/genset.hpp"
#include "eclosure/ptoy.hpp"
#include "eclosure/signatures.hpp"
#include "eclosure/spectrum.hpp"

namespace ecl {

const char* engine_version() { return "1.0.0"; }

Json cardinal_json(const Cardinal& c) {
  if (c.is_finite()) return Json(c.count());
  return Json(c.to_string());
}

Json envelope(const std::string& command, std::uint64_t seed) {
  Json j;
  j["schema"] = kReportSchema;
  j["version"] = engine_version();
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

Json family_json(const FamilyDesc& f) {
  Json j;
  j["expr"] = print_family(f);
  j["blocks"] = f.blocks.size();
  j["repeated"] = f.repeated;
  j["elements"] = cardinal_json(element_count(f));
  return j;
}

namespace {

Json point_json(const std::optional<PointRef>& p) {
  return p ? Json(p->to_string()) : Json(nullptr);
}

Json flag_json(const std::optional<Membership>& m) {
  return m ? Json(to_string(*m)) : Json(nullptr);
}

Json component_json(const ComponentInfo& c) {
  Json j;
  j["first_block"] = c.first_block;
  j["last_block"] = c.last_block == ComponentInfo::kThroughAllCopies ? Json("inf")
                                                                       : Json(c.last_block);
  j["label"] = to_string(c.label);
  j["eta"] = c.eta_class;
  j["periodic"] = c.periodic;
  j["size"] = cardinal_json(c.size);
  j["least"] = point_json(c.least);
  j["least_flag"] = flag_json(c.least_flag);
  j["greatest"] = point_json(c.greatest);
  j["greatest_flag"] = flag_json(c.greatest_flag);
  if (c.eta_class) j["point_flag"] = flag_json(c.point_flag);
  return j;
}

}  // namespace

Json completion_json(const FamilyDesc& f) {
  const CompletionDesc c = complete(f);
  Json j;
  j["new_points"] = cardinal_json(c.new_points);
  j["cardinality"] = cardinal_json(c.cardinality);
  j["dense_intervals"] = has_dense_interval(c);
  j["accumulation_points"] = cardinal_json(accumulation_points(f));
  Json limits = Json::array();
  for (const LimitPoint& lp : c.limit_points) limits.push_back(lp.to_string());
  j["limit_points"] = limits;
  Json comps = Json::array();
  for (const ComponentInfo& ci : components(f)) comps.push_back(component_json(ci));
  j["components"] = comps;
  if (auto closed = completion_as_family(c)) j["closure_family"] = print_family(*closed);
  return j;
}

Json genset_json(const FamilyDesc& f) {
  Json j;
  const auto g = least_generating_set(f);
  j["exists_least"] = g.has_value();
  if (!g) {
    j["required_points"] = nullptr;
    j["excluded_points"] = nullptr;
    return j;
  }
  j["required_points"] = cardinal_json(g->required_count);
  j["excluded_points"] = cardinal_json(g->excluded_count);
  Json classes = Json::array();
  for (const PointClass& pc : g->classes) {
    Json c;
    c["class"] = pc.to_string();
    c["membership"] = to_string(pc.membership);
    c["count"] = cardinal_json(pc.count);
    classes.push_back(c);
  }
  j["classes"] = classes;
  return j;
}

Json spectrum_json(const FamilyDesc& f) {
  const SpectrumValue v = e_spectrum(f);
  Json j;
  j["value"] = cardinal_json(v.value);
  j["exact"] = v.exact;
  j["text"] = v.to_string();
  if (v.exact) j["witness_construction"] = witness_construction(v.value);
  return j;
}

Json oracle_json(const VerifyReport& r) {
  Json j;
  j["depth"] = r.depth;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  Json rows = Json::array();
  for (const VerifyRow& row : r.rows) {
    Json x;
    x["name"] = row.name;
    x["passed"] = row.passed;
    x["checked"] = row.checked;
    x["inconclusive"] = row.inconclusive;
    x["detail"] = row.detail;
    rows.push_back(x);
  }
  j["checks"] = rows;
  return j;
}

Json build_report(const FamilyDesc& f, const ReportRequest& req) {
  Json j = envelope(req.command, req.seed);
  j["family"] = family_json(f);
  if (req.completion) j["completion"] = completion_json(f);
  if (req.genset) j["genset"] = genset_json(f);
  if (req.spectrum) j["spectrum"] = spectrum_json(f);
  if (req.oracle) j["oracle"] = oracle_json(verify(f, req.depth, req.seed));
  return j;
}

Json catalog_report() {
  Json j = envelope("catalog", 0);
  Json fams = Json::array();
  for (const CatalogEntry& e : builtin_catalog()) {
    const FamilyDesc f = parse_family(e.expr);
    const SpectrumValue v = e_spectrum(f);
    Json x;
    x["name"] = e.name;
    x["expr"] = print_family(f);
    x["new_points"] = cardinal_json(complete(f).new_points);
    x["exists_least"] = has_least_generating_set(f);
    x["spectrum"] = v.to_string();
    fams.push_back(x);
  }
  j["families"] = fams;
  Json table = Json::array();
  for (const SpectrumRow& r : spectrum_table()) {
    Json x;
    x["mu"] = cardinal_json(r.mu);
    x["witness"] = print_family(r.witness);
    x["construction"] = r.construction;
    x["spectrum"] = cardinal_json(r.computed.value);
    x["exact"] = r.computed.exact;
    table.push_back(x);
  }
  j["spectrum_table"] = table;
  return j;
}

namespace {

Json arity_list(const std::set<std::uint64_t>& s) {
  Json a = Json::array();
  for (std::uint64_t n : s) a.push_back(n);
  return a;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> v;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    const std::string t = item.substr(b, e - b + 1);
    if (t.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidArgument("not an arity: '" + t + "'");
    }
    try {
      v.push_back(std::stoull(t));
    } catch (const std::out_of_range&) {
      throw InvalidArgument("arity out of range: '" + t + "'");
    }
  }
  if (v.empty()) throw InvalidArgument("empty arity list");
  return v;
}

void need(const std::string& operand, const std::string& op) {
  if (operand.empty()) throw InvalidArgument(op + " needs two operands");
}

}  // namespace

Json sig_report(const std::string& op, const std::string& a, const std::string& b) {
  Json j = envelope("sig", 0);
  j["op"] = op;
  if (op == "uniformize") {
    const auto k = parse_list(a);
    Json in = Json::array();
    for (auto n : k) in.push_back(n);
    Json out = Json::array();
    for (auto n : uniformize(k)) out.push_back(n);
    j["input"] = in;
    j["result"] = out;
    return j;
  }
  const SignatureProfile p1 = SignatureProfile::parse(a);
  j["profiles"] = Json::array({p1.to_string()});
  if (op == "supp") {
    j["result"] = arity_list(supp(p1));
    return j;
  }
  if (op == "iilu") {
    const SignatureProfile e = iilu_expand(p1);
    j["result"] = e.to_string();
    j["is_iilu"] = e.is_iilu();
    return j;
  }
  need(b, op);
  const SignatureProfile p2 = SignatureProfile::parse(b);
  j["profiles"].push_back(p2.to_string());
  if (op == "dom") {
    j["result"] = dominates(p1, p2);
  } else if (op == "idom") {
    j["result"] = infinitely_dominates(p1, p2);
  } else if (op == "similar") {
    j["result"] = language_similar(p1, p2);
  } else {
    throw InvalidArgument("unknown sig op '" + op + "'");
  }
  return j;
}

Json ptoy_report(const std::string& op, const std::string& a, const std::string& b) {
  Json j = envelope("ptoy", 0);
  j["op"] = op;
  if (op == "hausdorff-demo") {
    const CardFamily u1 = CardFamily::parse(a.empty() ? "from(3) + omega" : a);
    const CardFamily u2 = CardFamily::parse(b.empty() ? "from(5) + omega" : b);
    j["input"] = Json::array({u1.to_string(), u2.to_string()});
    j["open"] = Json::array({is_open(u1), is_open(u2)});
    j["result"] = open_sets_intersect(u1, u2);
    j["t0_separates_1_2"] = t0_separates(1, 2);
    return j;
  }
  const CardFamily s = CardFamily::parse(a);
  j["input"] = s.to_string();
  if (op == "clp") {
    j["result"] = cl_p(s).to_string();
  } else if (op == "clpdr") {
    j["result"] = cl_p_dr(s).to_string();
  } else if (op == "genset") {
    j["result"] = has_minimal_generating_set_dP(s);
  } else if (op == "open") {
    j["result"] = is_open(s);
  } else if (op == "intersect") {
    need(b, op);
    const CardFamily t = CardFamily::parse(b);
    j["input"] = Json::array({s.to_string(), t.to_string()});
    j["result"] = open_sets_intersect(s, t);
  } else {
    throw InvalidArgument("unknown ptoy op '" + op + "'");
  }
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalars(const Json& a) {
  for (const auto& x : a) {
    if (x.is_structured()) return false;
  }
  return true;
}

void table(std::ostringstream& out, const Json& rows, const std::string& pad) {
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      width[c] = std::max(width[c], scalar_text(r.value(cols[c], Json())).size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    out << pad;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << cells[c];
      if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << "\n";
  };
  line(cols);
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    for (const auto& c : cols) cells.push_back(scalar_text(r.value(c, Json())));
    line(cells);
  }
}

void text(std::ostringstream& out, const Json& j, const std::string& pad) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << pad << k << ":\n";
      text(out, v, pad + "  ");
    } else if (v.is_array() && all_scalars(v) && !v.empty() && v.front().is_string()) {
      out << pad << k << ":\n";
      for (const auto& x : v) out << pad << "  - " << scalar_text(x) << "\n";
    } else if (v.is_array() && all_scalars(v)) {
      out << pad << k << ":";
      for (const auto& x : v) out << " " << scalar_text(x);
      out << "\n";
    } else if (v.is_array()) {
      out << pad << k << ":\n";
      table(out, v, pad + "  ");
    } else {
      out << pad << k << ": " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace

std::string render(const Json& report, const RenderOptions& opt) {
  if (opt.format == Format::kJson) return report.dump(opt.pretty ? 2 : -1) + "\n";
  std::ostringstream out;
  text(out, report, "");
  return out.str();
}

}  // namespace ecl
