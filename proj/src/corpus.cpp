#include "ef/corpus.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ef/cycles.hpp"
#include "ef/errors.hpp"

namespace ef {

std::string group_file_json(const GroupFile& gf) {
  nlohmann::ordered_json j;
  j["name"] = gf.name;
  j["degree"] = gf.degree;
  j["generators"] = gf.generators;
  j["tags"] = gf.tags;
  j["provenance"] = gf.provenance;
  return j.dump(2) + "\n";
}

GroupFile group_file_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad group file: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw InvalidInput("group file must be a JSON object");
  if (!j.contains("name") || !j["name"].is_string())
    throw InvalidInput("group file needs a string \"name\"");
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw InvalidInput("group file needs an integer \"degree\"");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InvalidInput("group file needs a \"generators\" array");

  GroupFile gf;
  gf.name = j["name"].get<std::string>();
  gf.degree = j["degree"].get<int>();
  if (gf.degree < 1) throw InvalidInput("degree must be at least 1");
  for (const auto& g : j["generators"]) {
    if (!g.is_string())
      throw InvalidInput("generators must be cycle strings");
    gf.generators.push_back(g.get<std::string>());
  }
  if (j.contains("tags")) {
    if (!j["tags"].is_array()) throw InvalidInput("tags must be an array");
    for (const auto& t : j["tags"]) {
      if (!t.is_string()) throw InvalidInput("tags must be strings");
      gf.tags.push_back(t.get<std::string>());
    }
  }
  if (j.contains("provenance") && j["provenance"].is_string())
    gf.provenance = j["provenance"].get<std::string>();

  // Validate the generator strings eagerly so a bad file fails on load, not
  // first use.
  for (const std::string& s : gf.generators) parse_cycles(s, gf.degree);
  return gf;
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return group_file_from_json(buf.str());
}

void write_group_file(const std::string& path, const GroupFile& gf) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write group file: " + path);
  out << group_file_json(gf);
}

GroupFile to_group_file(const std::string& name, const PermGroup& g,
                        std::vector<std::string> tags,
                        std::string provenance) {
  GroupFile gf;
  gf.name = name;
  gf.degree = g.degree();
  for (const Permutation& gen : g.generators())
    gf.generators.push_back(print_cycles(gen));
  gf.tags = std::move(tags);
  gf.provenance = std::move(provenance);
  return gf;
}

PermGroup to_group(const GroupFile& gf) {
  std::vector<Permutation> gens;
  gens.reserve(gf.generators.size());
  for (const std::string& s : gf.generators)
    gens.push_back(parse_cycles(s, gf.degree));
  return PermGroup(gf.degree, gens);
}

CorpusEntry to_corpus_entry(const GroupFile& gf) {
  CorpusEntry e;
  e.name = gf.name;
  e.group = to_group(gf);
  e.tags = gf.tags;
  return e;
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw InvalidInput("corpus path is not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir))
    if (de.is_regular_file() && de.path().extension() == ".json")
      files.push_back(de.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> corpus;
  corpus.reserve(files.size());
  for (const fs::path& p : files)
    corpus.push_back(to_corpus_entry(read_group_file(p.string())));
  return corpus;
}

}  // namespace ef
