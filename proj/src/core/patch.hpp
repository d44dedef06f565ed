#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scg {

enum class LineKind { Added, Deleted, Context };

struct PatchLine {
  LineKind kind;
  std::string text;  // marker character stripped

  bool operator==(const PatchLine&) const = default;
};

// One @@-delimited change block of a unified diff.
struct Hunk {
  std::string file_path;
  std::vector<PatchLine> lines;
};

struct CommitPatch {
  std::string commit_id;
  int64_t author_timestamp = 0;
  std::vector<Hunk> hunks;
};

// Parses unified-diff text into per-hunk Added/Deleted/Context lines. Header
// lines (diff/index/---/+++/@@ and git extended headers) never appear in hunk
// bodies; binary and mode-only diffs contribute no hunks. Malformed UTF-8 is
// replaced rather than rejected, and a patch without any hunk marker yields an
// empty CommitPatch with a warning.
CommitPatch parse_patch(std::string_view patch_text, std::string commit_id,
                        int64_t timestamp);

struct ChangeFragments {
  std::vector<std::string> added;    // one fragment per hunk that has added lines
  std::vector<std::string> deleted;  // one fragment per hunk that has deleted lines
};

// Splits a commit into per-hunk code fragments: the added side keeps
// context+added lines in order, the deleted side context+deleted lines.
// Hunks without added (resp. deleted) lines contribute no fragment on that
// side.
ChangeFragments split_changes(const CommitPatch& patch);

}  // namespace scg
