#include "monoalg/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "monoalg/error.hpp"

namespace monoalg {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::optional<Element>> entries_from_json(const json& f) {
  if (!f.is_array()) throw InvalidInput("\"f\" must be an array");
  std::vector<std::optional<Element>> out;
  for (const json& v : f) {
    if (v.is_null()) {
      out.emplace_back();
    } else if (v.is_number_integer()) {
      const auto x = v.get<std::int64_t>();
      if (x < 0 || x > std::numeric_limits<Element>::max()) {
        throw InvalidInput("table entry " + std::to_string(x) + " out of range");
      }
      out.emplace_back(static_cast<Element>(x));
    } else {
      throw InvalidInput("table entries must be integers or null, got " + v.dump());
    }
  }
  return out;
}

void check_declared_size(const json& doc, std::size_t actual) {
  if (!doc.contains("n")) return;
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != actual) {
    throw InvalidInput("\"n\" is " + doc["n"].dump() + " but the table has " + std::to_string(actual) +
                       " entries");
  }
}

std::vector<std::optional<Element>> entries_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::optional<Element>> out;
  std::string token;
  while (in >> token) {
    if (token == "_") {
      out.emplace_back();
      continue;
    }
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || x < 0 || x > std::numeric_limits<Element>::max()) {
      throw InvalidInput("bad table entry '" + token + "'");
    }
    out.emplace_back(static_cast<Element>(x));
  }
  return out;
}

std::string dot(std::size_t n, const std::vector<Edge>& edges) {
  std::ostringstream out;
  out << "digraph monounary {\n";
  for (std::size_t i = 0; i < n; ++i) out << "  " << i << " [label=\"" << i << "\"];\n";
  for (const auto& [a, b] : edges) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

bool looks_like_table(std::string_view text) {
  text = trim(text);
  if (text.empty()) return false;
  const char c = text.front();
  if (c == '{' || c == '[' || text.starts_with("f:")) return true;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0 && std::isspace(static_cast<unsigned char>(ch)) == 0 &&
        ch != '_') {
      return false;
    }
  }
  return true;
}

PartialMonounary parse_partial_table(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InvalidInput("empty table");
  if (text.front() == '{') {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("f")) throw InvalidInput("expected an object with key \"f\"");
    auto entries = entries_from_json(doc["f"]);
    check_declared_size(doc, entries.size());
    return PartialMonounary(std::move(entries));
  }
  if (text.front() == '[') return PartialMonounary(entries_from_json(parse_json(text)));
  if (text.starts_with("f:")) text.remove_prefix(2);
  return PartialMonounary(entries_from_text(text));
}

FiniteMonounary parse_table(std::string_view text) {
  const PartialMonounary p = parse_partial_table(text);
  if (!p.is_total()) throw InvalidInput("table has undefined entries; a total operation is required here");
  return p.to_total();
}

std::vector<std::vector<Element>> parse_multiunary(std::string_view text) {
  const json doc = parse_json(trim(text));
  if (!doc.is_object() || !doc.contains("ops") || !doc["ops"].is_array() || doc["ops"].empty()) {
    throw InvalidInput("expected an object with a nonempty array \"ops\"");
  }
  std::vector<std::vector<Element>> ops;
  for (const json& f : doc["ops"]) {
    std::vector<Element> table;
    for (const auto& e : entries_from_json(f)) {
      if (!e) throw InvalidInput("operations must be total");
      table.push_back(*e);
    }
    // Validates the range of each operation.
    FiniteMonounary checked(table);
    if (!ops.empty() && table.size() != ops.front().size()) throw InvalidInput("operations differ in length");
    check_declared_size(doc, table.size());
    ops.push_back(std::move(table));
  }
  return ops;
}

std::string to_json(const FiniteMonounary& algebra) {
  return json{{"n", algebra.size()}, {"f", algebra.table()}}.dump();
}

std::string to_json(const PartialMonounary& algebra) {
  json f = json::array();
  for (const auto& e : algebra.table()) f.push_back(e ? json(*e) : json(nullptr));
  return json{{"n", algebra.size()}, {"f", f}}.dump();
}

std::string to_dot(const FiniteMonounary& algebra) { return dot(algebra.size(), relational_form(algebra)); }

std::string to_dot(const PartialMonounary& algebra) { return dot(algebra.size(), relational_form(algebra)); }

}  // namespace monoalg
