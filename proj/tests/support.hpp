#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "shabda/sandhi.hpp"
#include "shabda/script.hpp"
#include "shabda/augment.hpp"

namespace testing_support {

inline const std::filesystem::path kDataDir = SHABDA_DATA_DIR_PATH;
inline const std::filesystem::path kFixtureDir = SHABDA_FIXTURE_DIR;

inline const shabda::ScriptTables& tables() {
  static const auto t = shabda::ScriptTables::load_dir(kDataDir);
  return t;
}

inline const shabda::RuleTable& default_rules() {
  static const auto r = shabda::RuleTable::load(kDataDir / "sandhi_rules.tsv");
  return r;
}

inline const shabda::AffixList& affixes() {
  static const auto a = shabda::AffixList::load(kDataDir / "hindi_affixes.tsv");
  return a;
}

inline std::vector<std::string> fixture_words() {
  std::ifstream in(kFixtureDir / "devanagari_words.txt");
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) words.push_back(line);
  return words;
}

inline shabda::RuleTable rules_from(const std::string& tsv) {
  std::istringstream in(tsv);
  return shabda::RuleTable::parse(in, "inline");
}

// Small table touching every category; used where the full table would make
// brute-force checks slow.
inline const shabda::RuleTable& toy_rules() {
  static const auto r = rules_from(
      "a\ta\tA\tvowel\n"
      "a\tA\tA\tvowel\n"
      "A\ta\tA\tvowel\n"
      "a\ti\te\tvowel\n"
      "a\tu\to\tvowel\n"
      "i\ta\tya\tvowel\n"
      "u\ta\tva\tvowel\n"
      "aH\ta\to'\tvisarga\n"
      "aH\tg\tog\tvisarga\n"
      "H\tc\tSc\tvisarga\n"
      "t\tg\tdg\tconsonant\n"
      "m\tk\tMk\tconsonant\n");
  return r;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace testing_support
