#pragma once

#include <string>
#include <vector>

#include "ef/perm_group.hpp"
#include "ef/verify.hpp"

namespace ef {

/// On-disk description of one permutation group:
///   { "name": str, "degree": int, "generators": [cycle strings],
///     "tags": [str], "provenance": str }
/// `tags` and `provenance` are optional in the file.
struct GroupFile {
  std::string name;
  int degree = 1;
  std::vector<std::string> generators;  // canonical cycle notation, 1-based
  std::vector<std::string> tags;
  std::string provenance;
};

/// Serializes with stable key order and 2-space indentation; ends in '\n'.
std::string group_file_json(const GroupFile& gf);

/// Parses and validates.  Throws ParseError for malformed JSON and
/// InvalidInput for structurally valid JSON with bad contents.  Generator
/// strings are checked against `degree` (ParseError on bad cycle syntax).
GroupFile group_file_from_json(const std::string& text);

GroupFile read_group_file(const std::string& path);
void write_group_file(const std::string& path, const GroupFile& gf);

/// Renders a group as a GroupFile with canonical generator strings, so that
/// to_group(to_group_file(name, g, ...)) equals g.
GroupFile to_group_file(const std::string& name, const PermGroup& g,
                        std::vector<std::string> tags = {},
                        std::string provenance = "");

PermGroup to_group(const GroupFile& gf);
CorpusEntry to_corpus_entry(const GroupFile& gf);

/// Loads every *.json file in `dir`, ordered by filename.  Throws
/// InvalidInput when `dir` is not a directory.
std::vector<CorpusEntry> load_corpus_dir(const std::string& dir);

}  // namespace ef
