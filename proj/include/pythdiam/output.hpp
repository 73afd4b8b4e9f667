#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pythdiam/natural.hpp"

namespace pythdiam {

enum class RecordKind { triple, solution, family_member, census, verification };

constexpr std::string_view to_string(RecordKind k) noexcept {
  switch (k) {
    case RecordKind::triple: return "triple";
    case RecordKind::solution: return "solution";
    case RecordKind::family_member: return "family-member";
    case RecordKind::census: return "census";
    case RecordKind::verification: return "verification";
  }
  return "?";
}

using FieldValue = std::variant<Natural, std::int64_t, std::string>;

/// A flat, ordered record. Field order is insertion order and is what every
/// writer emits.
struct OutputRecord {
  RecordKind kind = RecordKind::triple;
  std::vector<std::pair<std::string, FieldValue>> fields;

  OutputRecord& add(std::string key, FieldValue v) {
    fields.emplace_back(std::move(key), std::move(v));
    return *this;
  }
};

enum class OutputFormat { table, json, csv };

namespace detail {

inline std::string field_text(const FieldValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Natural>) return x.to_string();
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else return x;
      },
      v);
}

inline std::vector<std::string> header_of(const OutputRecord& r) {
  std::vector<std::string> h{"kind"};
  for (const auto& [k, v] : r.fields) h.push_back(k);
  return h;
}

inline std::vector<std::string> row_of(const OutputRecord& r) {
  std::vector<std::string> row{std::string(to_string(r.kind))};
  for (const auto& [k, v] : r.fields) row.push_back(field_text(v));
  return row;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// One top-level array; each record is an object with "kind" first, then its
/// fields in order. Integers wider than 64 bits are emitted as decimal strings.
inline void write_json(std::ostream& os, const std::vector<OutputRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json obj;
    obj["kind"] = std::string(to_string(r.kind));
    for (const auto& [k, v] : r.fields) {
      if (const auto* n = std::get_if<Natural>(&v)) {
        if (n->fits_u64()) obj[k] = n->to_u64();
        else obj[k] = n->to_string();
      } else if (const auto* i = std::get_if<std::int64_t>(&v)) {
        obj[k] = *i;
      } else {
        obj[k] = std::get<std::string>(v);
      }
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

/// Header row, then one row per record. A new header row is written whenever
/// the field set changes.
inline void write_csv(std::ostream& os, const std::vector<OutputRecord>& records) {
  std::vector<std::string> current;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << detail::csv_escape(cells[i]);
    }
    os << '\n';
  };
  for (const auto& r : records) {
    auto header = detail::header_of(r);
    if (header != current) {
      emit(header);
      current = std::move(header);
    }
    emit(detail::row_of(r));
  }
}

/// Space-aligned columns for humans, grouped like the CSV output.
inline void write_table(std::ostream& os, const std::vector<OutputRecord>& records) {
  std::size_t i = 0;
  while (i < records.size()) {
    const auto header = detail::header_of(records[i]);
    std::vector<std::vector<std::string>> rows{header};
    std::size_t j = i;
    while (j < records.size() && detail::header_of(records[j]) == header)
      rows.push_back(detail::row_of(records[j++]));
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) line += "  ";
        line += row[c];
        if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
      }
      os << line << '\n';
    }
    i = j;
    if (i < records.size()) os << '\n';
  }
}

inline void write_records(std::ostream& os, const std::vector<OutputRecord>& records,
                          OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::table: write_table(os, records); break;
    case OutputFormat::json: write_json(os, records); break;
    case OutputFormat::csv: write_csv(os, records); break;
  }
}

}  // namespace pythdiam
