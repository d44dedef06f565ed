#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace scg {

// RFC-4180 table: quoted fields may contain commas, quotes and newlines.
// Leading lines starting with '#' are treated as comments (the toolkit puts
// a provenance stamp there) and returned separately.
struct CsvTable {
  std::vector<std::string> comments;          // leading '#' lines, marker stripped
  std::vector<std::vector<std::string>> rows; // first row is the header
};

CsvTable read_csv(const std::filesystem::path& path, char delimiter = ',');
CsvTable parse_csv(std::string_view text, char delimiter = ',');

// Accumulates rows and renders the final file content; writing happens via
// write_file_atomic at save() time.
class CsvWriter {
 public:
  explicit CsvWriter(char delimiter = ',') : delimiter_(delimiter) {}

  void add_comment(std::string_view comment);
  void add_row(const std::vector<std::string>& fields);
  std::string str() const;
  void save(const std::filesystem::path& path) const;

 private:
  char delimiter_;
  std::string body_;
};

}  // namespace scg
