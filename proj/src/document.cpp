#include "evconflict/document.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace evconflict {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what,
                       ErrorCode code = ErrorCode::Parse) {
  throw Error(code, path + ": " + what);
}

void reject_unknown_fields(const json& object, const std::string& path,
                           std::initializer_list<std::string_view> allowed) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (auto name : allowed) known = known || item.key() == name;
    if (!known) fail(path + "." + item.key(), "unknown field");
  }
}

const json& require_field(const json& object, const std::string& path, const char* name) {
  const auto it = object.find(name);
  if (it == object.end()) fail(path, std::string("missing field '") + name + "'");
  return *it;
}

std::vector<std::string> parse_labels(const json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected a list of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      fail(path + "[" + std::to_string(i) + "]", "expected a string label");
    }
    labels.push_back(value[i].get<std::string>());
  }
  return labels;
}

NamedBpa parse_bpa(const json& value, const Frame& frame, const std::string& path) {
  if (!value.is_object()) fail(path, "expected an object");
  reject_unknown_fields(value, path, {"name", "masses"});

  const json& name_value = require_field(value, path, "name");
  if (!name_value.is_string() || name_value.get<std::string>().empty()) {
    fail(path + ".name", "expected a non-empty string");
  }
  const std::string name = name_value.get<std::string>();
  const std::string owner = path + " ('" + name + "')";

  const json& masses = require_field(value, path, "masses");
  if (!masses.is_array()) fail(path + ".masses", "expected a list");

  std::vector<FocalElement> elements;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::string entry_path = path + ".masses[" + std::to_string(i) + "]";
    const json& entry = masses[i];
    if (!entry.is_object()) fail(entry_path, "expected an object");
    reject_unknown_fields(entry, entry_path, {"set", "mass"});

    const auto members = parse_labels(require_field(entry, entry_path, "set"), entry_path + ".set");
    SubsetMask set;
    try {
      set = parse_subset(frame, members);
    } catch (const Error& e) {
      fail(entry_path + ".set", e.what(), e.code());
    }

    const json& mass = require_field(entry, entry_path, "mass");
    if (!mass.is_number()) fail(entry_path + ".mass", "expected a number");
    const double m = mass.get<double>();
    if (m < 0.0) fail(entry_path + ".mass", "negative mass", ErrorCode::NegativeMass);
    if (set.empty() && m != 0.0) {
      fail(entry_path, "nonzero mass on the empty set", ErrorCode::EmptySetMass);
    }
    elements.push_back({set, m});
  }

  try {
    return {name, MassFunction::from_masks(frame, std::move(elements))};
  } catch (const Error& e) {
    fail(owner, e.what(), e.code());
  }
}

std::string syntax_error_message(const json::parse_error& e) {
  // nlohmann messages read "[json.exception.parse_error.101] parse error at line L, column C: ..."
  std::string what = e.what();
  const auto pos = what.find("] ");
  return pos == std::string::npos ? what : what.substr(pos + 2);
}

}  // namespace

const MassFunction& BpaDocument::find(std::string_view name) const {
  for (const auto& entry : bpas) {
    if (entry.name == name) return entry.bpa;
  }
  throw Error(ErrorCode::UnknownLabel, "no BPA named '" + std::string(name) + "' in document");
}

BpaDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, syntax_error_message(e));
  }
  if (!root.is_object()) fail("$", "expected an object with fields 'frame' and 'bpas'");
  reject_unknown_fields(root, "$", {"frame", "bpas"});

  auto labels = parse_labels(require_field(root, "$", "frame"), "$.frame");
  std::optional<Frame> frame;
  try {
    frame.emplace(make_frame(std::move(labels)));
  } catch (const Error& e) {
    fail("$.frame", e.what(), e.code());
  }

  const json& bpas = require_field(root, "$", "bpas");
  if (!bpas.is_array()) fail("$.bpas", "expected a list");

  BpaDocument doc{*frame, {}};
  std::set<std::string> names;
  for (std::size_t i = 0; i < bpas.size(); ++i) {
    const std::string path = "$.bpas[" + std::to_string(i) + "]";
    auto entry = parse_bpa(bpas[i], *frame, path);
    if (!names.insert(entry.name).second) {
      fail(path + ".name", "duplicate BPA name '" + entry.name + "'");
    }
    doc.bpas.push_back(std::move(entry));
  }
  return doc;
}

BpaDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string dump_document(const BpaDocument& doc) {
  ordered_json root;
  root["frame"] = doc.frame.labels();
  root["bpas"] = ordered_json::array();
  for (const auto& entry : doc.bpas) {
    ordered_json masses = ordered_json::array();
    for (const auto& e : entry.bpa.focal()) {
      masses.push_back({{"set", render_subset(doc.frame, e.set)}, {"mass", e.mass}});
    }
    root["bpas"].push_back({{"name", entry.name}, {"masses", std::move(masses)}});
  }
  return root.dump(2) + "\n";
}

std::string report_to_json(const ConflictReport& report, std::string_view first,
                           std::string_view second) {
  ordered_json root;
  root["pair"] = {std::string(first), std::string(second)};
  root["k"] = report.k;
  root["d_bba"] = report.d_bba;
  root["dif_betp"] = report.dif_betp;
  root["cor"] = report.cor ? ordered_json(*report.cor) : ordered_json(nullptr);
  root["r_bpa"] = report.r_bpa;
  root["k_r"] = report.k_r;
  if (report.liu) {
    root["liu"] = {{"k", report.liu->k},
                   {"dif_betp", report.liu->dif_betp},
                   {"epsilon", report.liu->epsilon},
                   {"in_conflict", report.liu->in_conflict}};
  } else {
    root["liu"] = nullptr;
  }
  return root.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (out) out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::Io, path.string() + ": cannot write file");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::Io, path.string() + ": cannot write file");
  }
}

}  // namespace evconflict
