#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shabda/sandhi.hpp"
#include "shabda/script.hpp"

namespace shabda {

struct SegInstance {
  TaggedText compound;
  std::vector<TaggedText> gold_segments;
  std::string source;
  std::size_t line = 0;  // 1-based line in the source file, 0 if synthetic

  std::vector<std::string> segment_texts() const;
};

/// Streaming reader for `compound<TAB>seg1+seg2+...` files. Blank and `#`
/// lines are skipped.
class SegCorpusReader {
 public:
  /// With `validate`, script violations throw ScriptViolation; without it
  /// they are left for prune_invalid.
  SegCorpusReader(std::istream& in, ScriptTag script, const ScriptTables& tables,
                  std::string source = "corpus", bool validate = true);

  std::optional<SegInstance> next();

 private:
  std::istream& in_;
  ScriptTag script_;
  const ScriptTables& tables_;
  std::string source_;
  bool validate_;
  std::size_t lineno_ = 0;
};

std::vector<SegInstance> load_seg_corpus(const std::filesystem::path& path, ScriptTag script,
                                         const ScriptTables& tables, bool validate = true);
std::vector<SegInstance> parse_seg_corpus(std::istream& in, ScriptTag script,
                                          const ScriptTables& tables,
                                          const std::string& source = "corpus",
                                          bool validate = true);

void write_seg_instance(std::ostream& out, const SegInstance& instance);

enum class PruneReason { ScriptViolation, EmptySegments, JoinFailure };

std::string_view to_string(PruneReason reason);

struct PruneOptions {
  bool check_script = true;
  bool check_empty = true;
  bool check_join = false;  // the shipped rule table is a subset of real sandhi
};

struct PrunedInstance {
  SegInstance instance;
  PruneReason reason;
  std::size_t index = 0;  // position in the input list
};

struct PruneResult {
  std::vector<SegInstance> kept;
  std::vector<PrunedInstance> pruned;
};

/// Checks run in the order script, empty, join; the first failure is the
/// recorded reason.
PruneResult prune_invalid(std::vector<SegInstance> instances, const RuleTable& rules,
                          const ScriptTables& tables, const PruneOptions& options = {});

/// Transliterates compounds and segments. Throws ConversionError.
std::vector<SegInstance> convert_corpus(const std::vector<SegInstance>& instances,
                                        ScriptTag target, const ScriptTables& tables);

struct CorpusStats {
  std::size_t instances = 0;
  std::size_t segments = 0;
  std::map<std::size_t, std::size_t> segment_histogram;  // segment count -> instances
  std::map<char32_t, std::size_t> inventory;             // code point -> occurrences
  std::size_t pruned = 0;
  std::map<std::string, std::size_t> pruned_reasons;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats stats(const std::vector<SegInstance>& instances,
                  const std::vector<PrunedInstance>& pruned = {});

}  // namespace shabda
