#include "core/csv.hpp"

#include "core/error.hpp"
#include "core/io_util.hpp"

namespace scg {

CsvTable read_csv(const std::filesystem::path& path, char delimiter) {
  return parse_csv(read_file(path), delimiter);
}

CsvTable parse_csv(std::string_view text, char delimiter) {
  CsvTable table;
  size_t pos = 0;
  const size_t n = text.size();

  // Leading comment lines.
  while (pos < n && text[pos] == '#') {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = n;
    std::string_view line = text.substr(pos + 1, end - pos - 1);
    if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    table.comments.emplace_back(line);
    pos = (end == n) ? n : end + 1;
  }

  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_has_content = false;

  const auto push_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  const auto push_row = [&] {
    push_field();
    table.rows.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };

  while (pos < n) {
    const char c = text[pos];
    if (in_quotes) {
      if (c == '"') {
        if (pos + 1 < n && text[pos + 1] == '"') {
          field.push_back('"');
          ++pos;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
      row_has_content = true;
    } else if (c == delimiter) {
      push_field();
      row_has_content = true;
    } else if (c == '\r') {
      // swallowed; the '\n' that follows ends the row
    } else if (c == '\n') {
      if (row_has_content || !field.empty() || !row.empty()) push_row();
    } else {
      field.push_back(c);
      row_has_content = true;
    }
    ++pos;
  }
  if (in_quotes) throw_data("unterminated quoted field in CSV input");
  if (row_has_content || !field.empty() || !row.empty()) push_row();
  return table;
}

namespace {

bool needs_quoting(std::string_view field, char delimiter) {
  for (const char c : field) {
    if (c == delimiter || c == '"' || c == '\n' || c == '\r') return true;
  }
  return false;
}

void append_field(std::string& out, std::string_view field, char delimiter) {
  if (!needs_quoting(field, delimiter)) {
    out.append(field);
    return;
  }
  out.push_back('"');
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

}  // namespace

void CsvWriter::add_comment(std::string_view comment) {
  body_.append("# ");
  body_.append(comment);
  body_.push_back('\n');
}

void CsvWriter::add_row(const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) body_.push_back(delimiter_);
    append_field(body_, fields[i], delimiter_);
  }
  body_.push_back('\n');
}

std::string CsvWriter::str() const { return body_; }

void CsvWriter::save(const std::filesystem::path& path) const {
  write_file_atomic(path, body_);
}

}  // namespace scg
