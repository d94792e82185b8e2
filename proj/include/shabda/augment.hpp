#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shabda/sandhi.hpp"
#include "shabda/script.hpp"
#include "shabda/segmenter.hpp"

namespace shabda {

enum class Domain { Administrative, Biotechnology, Chemistry, Other };

std::string_view to_string(Domain d);
/// Unknown names map to Domain::Other.
Domain parse_domain(std::string_view name);

struct DictEntry {
  std::string english;
  TaggedText hindi{{}, ScriptTag::Devanagari};
  Domain domain = Domain::Other;
  std::string target_language;
};

/// TSV `english<TAB>hindi<TAB>target_language<TAB>domain`.
std::vector<DictEntry> parse_dictionary(std::istream& in, const ScriptTables& tables,
                                        const std::string& source = "dictionary");

struct Affix {
  std::string suffix;            // Devanagari, UTF-8, NFC
  std::size_t min_stem_len = 2;  // code points left after stripping
};

/// Hindi inflectional suffixes in file order.
class AffixList {
 public:
  static constexpr std::size_t kMinStem = 2;

  AffixList() = default;
  explicit AffixList(std::vector<Affix> affixes);

  static AffixList load(const std::filesystem::path& path);
  static AffixList parse(std::istream& in, const std::string& source = "affixes");

  const std::vector<Affix>& affixes() const { return affixes_; }

 private:
  std::vector<Affix> affixes_;
};

/// Strips the longest listed suffix that leaves at least its minimum stem,
/// at most one per word; phrases are handled word by word.
TaggedText lemmatize_hindi(const TaggedText& word, const AffixList& affixes);

/// Output script for a language code: Devanagari for hi/mr/sa/ne/kok,
/// ISO-15919 for everything else.
ScriptTag script_for_language(std::string_view language);

struct AugmentContext {
  const ScriptTables& tables;
  const RuleTable& rules;
  const Lexicon& lexicon;
  const AffixList& affixes;
  SegmenterOptions segmenter{};
  std::optional<ScriptTag> output_script{};
};

struct AugmentedInput {
  std::string english;
  std::vector<TaggedText> segments;
  std::string rendered;
  bool coverage_flag = false;
  bool all_in_lexicon = false;  // every segment is a lexicon stem
};

inline constexpr std::string_view kSepToken = " <SEP> ";
inline constexpr std::string_view kInnerSepToken = " <isep> ";

/// english + " <SEP> " + segments joined by " <isep> "; english alone when
/// there are no segments.
std::string render_augmented(std::string_view english, std::span<const std::string> segments);

AugmentedInput build_augmented_input(const DictEntry& entry, const AugmentContext& context);

struct CoverageCounts {
  std::size_t entries = 0;
  std::size_t covered = 0;
  std::size_t all_in_lexicon = 0;
  /// covered / entries; 0 with `defined == false` for no entries.
  double fraction() const;
  double all_in_lexicon_fraction() const;
  bool defined() const { return entries > 0; }
};

struct CoverageReport {
  CoverageCounts overall;
  std::map<Domain, CoverageCounts> per_domain;
};

/// `results[i]` must belong to `entries[i]`.
CoverageReport coverage_report(std::span<const DictEntry> entries,
                               std::span<const AugmentedInput> results);

}  // namespace shabda
