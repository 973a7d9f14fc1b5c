// Copyright 2026 The exo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "exo/errors.hpp"
#include "exo/pulse.hpp"

namespace exo {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

/// Line numbers at which each element object of the root "gates" array
/// opens. Assumes `text` is already known to be valid JSON.
std::vector<std::size_t> gate_record_lines(std::string_view text) {
  std::vector<std::size_t> lines;
  std::vector<char> stack;
  std::string last_key;
  std::string current;
  bool in_string = false;
  bool escape = false;
  bool inside_gates = false;
  std::size_t line = 1;
  for (char ch : text) {
    if (ch == '\n') ++line;
    if (in_string) {
      if (escape) {
        escape = false;
      } else if (ch == '\\') {
        escape = true;
      } else if (ch == '"') {
        in_string = false;
        if (stack.size() == 1) last_key = current;
      } else {
        current.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        in_string = true;
        current.clear();
        break;
      case '{':
        if (inside_gates && stack.size() == 2) lines.push_back(line);
        stack.push_back('{');
        break;
      case '[':
        if (stack.size() == 1 && last_key == "gates") inside_gates = true;
        stack.push_back('[');
        break;
      case '}':
      case ']':
        if (!stack.empty()) stack.pop_back();
        if (stack.size() == 1) inside_gates = false;
        break;
      default:
        break;
    }
  }
  return lines;
}

[[noreturn]] void fail(const std::string& msg, std::size_t line, const std::string& field) {
  std::ostringstream os;
  os << "sequence parse error";
  if (line > 0) os << " at line " << line;
  if (!field.empty()) os << " (" << field << ")";
  os << ": " << msg;
  throw ParseError(os.str(), line, field);
}

int read_int(const json& obj, const char* key, std::size_t line, const std::string& path) {
  if (!obj.contains(key)) fail("missing field", line, path + key);
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) fail("expected an integer", line, path + key);
  return v.get<int>();
}

}  // namespace

std::string serialize(const ExchangeSequence& seq) {
  seq.validate();
  // Hand-laid so each gate record sits on its own line; number formatting
  // comes from nlohmann (shortest exact round-trip).
  std::ostringstream os;
  os << "{\n";
  os << "  \"version\": " << kFormatVersion << ",\n";
  os << "  \"code\": " << json(std::string(to_string(seq.code))).dump() << ",\n";
  os << "  \"n_physical\": " << seq.n_physical << ",\n";
  os << "  \"gates\": [";
  for (std::size_t i = 0; i < seq.gates.size(); ++i) {
    const auto& g = seq.gates[i];
    os << (i == 0 ? "\n" : ",\n") << "    {\"q1\": " << g.q1 << ", \"q2\": " << g.q2
       << ", \"t\": " << json(g.t).dump() << "}";
  }
  os << (seq.gates.empty() ? "]" : "\n  ]");
  if (!seq.barriers.empty()) os << ",\n  \"barriers\": " << json(seq.barriers).dump();
  os << "\n}\n";
  return os.str();
}

ExchangeSequence parse_sequence(std::string_view text, bool require_times) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(e.what(), line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), "");
  }
  if (!doc.is_object()) fail("document must be a JSON object", 1, "");

  const int version = read_int(doc, "version", 0, "");
  if (version != kFormatVersion) {
    fail("unsupported version " + std::to_string(version), 0, "version");
  }

  ExchangeSequence seq;
  if (!doc.contains("code") || !doc.at("code").is_string()) fail("expected a string", 0, "code");
  const auto code = code_from_string(doc.at("code").get<std::string>());
  if (!code) fail("unknown code '" + doc.at("code").get<std::string>() + "'", 0, "code");
  seq.code = *code;

  seq.n_physical = read_int(doc, "n_physical", 0, "");
  if (seq.n_physical < 2 || seq.n_physical > 10 || seq.n_physical % block_size(seq.code) != 0) {
    fail("register size must be a whole number of blocks in [2, 10]", 0, "n_physical");
  }

  if (!doc.contains("gates") || !doc.at("gates").is_array()) fail("expected an array", 0, "gates");
  const auto lines = gate_record_lines(text);
  const auto& gates = doc.at("gates");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const std::size_t line = i < lines.size() ? lines[i] : 0;
    const std::string path = "gates[" + std::to_string(i) + "].";
    const auto& rec = gates[i];
    if (!rec.is_object()) fail("gate record must be an object", line, path.substr(0, path.size() - 1));
    PulseGate g;
    g.q1 = read_int(rec, "q1", line, path);
    g.q2 = read_int(rec, "q2", line, path);
    if (rec.contains("t")) {
      if (!rec.at("t").is_number()) fail("expected a number", line, path + "t");
      g.t = rec.at("t").get<double>();
    } else if (require_times) {
      fail("missing field", line, path + "t");
    }
    if (g.q1 == g.q2) fail("q1 and q2 must differ", line, path + "q2");
    if (g.q1 < 1 || g.q1 > seq.n_physical) fail("qubit index out of range", line, path + "q1");
    if (g.q2 < 1 || g.q2 > seq.n_physical) fail("qubit index out of range", line, path + "q2");
    seq.gates.push_back(g);
  }

  if (doc.contains("barriers")) {
    const auto& b = doc.at("barriers");
    if (!b.is_array()) fail("expected an array", 0, "barriers");
    std::size_t prev = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::string path = "barriers[" + std::to_string(i) + "]";
      if (!b[i].is_number_unsigned()) fail("expected a non-negative integer", 0, path);
      const auto v = b[i].get<std::size_t>();
      if (v <= prev || v >= seq.gates.size()) fail("barrier out of order or out of range", 0, path);
      seq.barriers.push_back(v);
      prev = v;
    }
  }
  return seq;
}

ExchangeSequence read_sequence_file(const std::string& path, bool require_times) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open sequence file '" + path + "'", 0, "");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str(), require_times);
}

void write_sequence_file(const std::string& path, const ExchangeSequence& seq) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write sequence file '" + path + "'");
  out << serialize(seq);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace exo
