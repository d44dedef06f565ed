#include "core/patch.hpp"

#include <charconv>

#include "core/error.hpp"
#include "core/io_util.hpp"
#include "core/log.hpp"

namespace scg {

namespace {

bool starts_with(std::string_view line, std::string_view prefix) {
  return line.substr(0, prefix.size()) == prefix;
}

bool is_file_header(std::string_view line) {
  return starts_with(line, "diff ") || starts_with(line, "index ") ||
         starts_with(line, "--- ") || starts_with(line, "+++ ") ||
         line == "---" || line == "+++";
}

bool is_git_extended_header(std::string_view line) {
  return starts_with(line, "old mode") || starts_with(line, "new mode") ||
         starts_with(line, "new file mode") || starts_with(line, "deleted file mode") ||
         starts_with(line, "similarity index") || starts_with(line, "dissimilarity index") ||
         starts_with(line, "rename from") || starts_with(line, "rename to") ||
         starts_with(line, "copy from") || starts_with(line, "copy to") ||
         starts_with(line, "Binary files") || starts_with(line, "GIT binary patch");
}

// "+++ b/some/path" -> "some/path"; "+++ /dev/null" -> "".
std::string path_from_file_header(std::string_view line) {
  std::string_view rest = line.substr(4);
  const size_t tab = rest.find('\t');
  if (tab != std::string_view::npos) rest = rest.substr(0, tab);
  if (rest == "/dev/null") return "";
  if (starts_with(rest, "a/") || starts_with(rest, "b/")) rest = rest.substr(2);
  return std::string(rest);
}

// Parses "@@ -l[,s] +l[,s] @@ ..." and extracts the old/new line counts.
// Returns false when the header is malformed; the caller then falls back to
// marker-based hunk termination.
bool parse_hunk_counts(std::string_view line, int64_t* old_count, int64_t* new_count) {
  size_t pos = 2;  // past "@@"
  const auto skip_spaces = [&] {
    while (pos < line.size() && line[pos] == ' ') ++pos;
  };
  const auto read_range = [&](char sign, int64_t* count) {
    skip_spaces();
    if (pos >= line.size() || line[pos] != sign) return false;
    ++pos;
    int64_t start = 0;
    auto res = std::from_chars(line.data() + pos, line.data() + line.size(), start);
    if (res.ec != std::errc()) return false;
    pos = static_cast<size_t>(res.ptr - line.data());
    *count = 1;
    if (pos < line.size() && line[pos] == ',') {
      ++pos;
      res = std::from_chars(line.data() + pos, line.data() + line.size(), *count);
      if (res.ec != std::errc()) return false;
      pos = static_cast<size_t>(res.ptr - line.data());
    }
    return true;
  };
  if (!read_range('-', old_count)) return false;
  if (!read_range('+', new_count)) return false;
  skip_spaces();
  return starts_with(line.substr(pos), "@@");
}

}  // namespace

CommitPatch parse_patch(std::string_view patch_text, std::string commit_id,
                        int64_t timestamp) {
  if (commit_id.empty()) throw_argument("parse_patch: commit_id must be non-empty");

  CommitPatch patch;
  patch.commit_id = std::move(commit_id);
  patch.author_timestamp = timestamp;

  const std::string sanitized = sanitize_utf8(patch_text);
  const std::vector<std::string> lines = split_lines(sanitized);

  std::string current_file;
  bool in_hunk = false;
  bool counted = false;       // whether the hunk header carried usable counts
  int64_t old_left = 0;       // remaining old-side lines in the current hunk
  int64_t new_left = 0;       // remaining new-side lines in the current hunk

  for (const std::string& line : lines) {
    if (in_hunk && counted && old_left <= 0 && new_left <= 0) in_hunk = false;

    if (starts_with(line, "@@")) {
      int64_t oc = 0, nc = 0;
      counted = parse_hunk_counts(line, &oc, &nc);
      old_left = oc;
      new_left = nc;
      patch.hunks.push_back(Hunk{current_file, {}});
      in_hunk = true;
      continue;
    }

    if (!in_hunk) {
      if (starts_with(line, "+++ ")) current_file = path_from_file_header(line);
      else if (starts_with(line, "diff --git ")) {
        // "diff --git a/x b/y": take the second path
        const size_t b_pos = line.rfind(" b/");
        if (b_pos != std::string_view::npos) current_file = line.substr(b_pos + 3);
      }
      continue;  // headers, binary notes and stray prose are dropped
    }

    // Inside a hunk body.
    if (!line.empty() && line[0] == '\\') continue;  // "\ No newline at end of file"
    if (!counted && (is_file_header(line) || is_git_extended_header(line))) {
      in_hunk = false;
      if (starts_with(line, "+++ ")) current_file = path_from_file_header(line);
      continue;
    }

    Hunk& hunk = patch.hunks.back();
    if (!line.empty() && line[0] == '+') {
      hunk.lines.push_back({LineKind::Added, line.substr(1)});
      --new_left;
    } else if (!line.empty() && line[0] == '-') {
      hunk.lines.push_back({LineKind::Deleted, line.substr(1)});
      --old_left;
    } else {
      // Context; a leading blank marker is stripped, a fully empty line kept.
      std::string text = line.empty() ? line : (line[0] == ' ' ? line.substr(1) : line);
      hunk.lines.push_back({LineKind::Context, std::move(text)});
      --new_left;
      --old_left;
    }
  }

  if (patch.hunks.empty() && !sanitized.empty()) {
    log_warn("patch " + patch.commit_id + " contains no recognizable hunks");
  }
  return patch;
}

ChangeFragments split_changes(const CommitPatch& patch) {
  ChangeFragments fragments;
  for (const Hunk& hunk : patch.hunks) {
    bool has_added = false;
    bool has_deleted = false;
    for (const PatchLine& line : hunk.lines) {
      has_added |= line.kind == LineKind::Added;
      has_deleted |= line.kind == LineKind::Deleted;
    }
    const auto collect = [&](LineKind excluded) {
      std::string fragment;
      bool first = true;
      for (const PatchLine& line : hunk.lines) {
        if (line.kind == excluded) continue;
        if (!first) fragment.push_back('\n');
        fragment.append(line.text);
        first = false;
      }
      return fragment;
    };
    if (has_added) fragments.added.push_back(collect(LineKind::Deleted));
    if (has_deleted) fragments.deleted.push_back(collect(LineKind::Added));
  }
  return fragments;
}

}  // namespace scg
