#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shabda/sandhi.hpp"

namespace shabda {

/// SLP1 stem frequencies.
class Lexicon {
 public:
  Lexicon() = default;

  void add(std::string_view stem, std::uint64_t count = 1);

  std::uint64_t count(std::string_view stem) const;
  bool contains(std::string_view stem) const { return count(stem) > 0; }
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  const std::map<std::string, std::uint64_t, std::less<>>& entries() const {
    return counts_;
  }

  /// log((count + alpha) / (total + alpha * (size + 1)))
  double log_prob(std::string_view stem, double alpha) const;

  /// TSV `stem<TAB>count`, `#` comments.
  static Lexicon load(const std::filesystem::path& path);
  static Lexicon parse(std::istream& in, const std::string& source = "lexicon");
  void write(std::ostream& out) const;

 private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
  std::uint64_t total_ = 0;
};

/// Counts every gold segment occurrence.
Lexicon build_lexicon(std::span<const std::vector<std::string>> corpus);

struct Segmentation {
  std::string compound;
  std::vector<std::string> segments;
  std::vector<std::size_t> locations;  // size() == segments.size() - 1
  double score = 0.0;
  bool verified = true;  // false for external predictions

  std::string joined() const;  // segments joined with "+"
};

struct SegmenterOptions {
  std::size_t k = 1;
  double alpha = 0.1;
  std::size_t max_segments = 8;
};

/// Sum of per-segment smoothed log-probabilities, left to right.
double segmentation_score(std::span<const std::string> segments,
                          const Lexicon& lexicon, double alpha);

/// Total order used to rank segmentations: higher score, then fewer
/// segments, then lexicographic on the "+"-joined form.
bool ranks_before(const Segmentation& a, const Segmentation& b);

/// Top-k segmentations of an SLP1 compound. The unsegmented word is always a
/// candidate, so the result is never empty.
std::vector<Segmentation> segment(std::string_view compound, const Lexicon& lexicon,
                                  const RuleTable& rules,
                                  const SegmenterOptions& options = {});

inline std::vector<Segmentation> segment(std::string_view compound,
                                         const Lexicon& lexicon,
                                         const RuleTable& rules, std::size_t k) {
  SegmenterOptions options;
  options.k = k;
  return segment(compound, lexicon, rules, options);
}

/// Left-to-right sandhi join of `segments` reproduces `compound`.
bool verify_segmentation(std::string_view compound,
                         std::span<const std::string> segments, const RuleTable& rules);

/// "&" + segments joined by "+" + "$". Throws EmptySegment.
std::string encode_target(std::span<const std::string> segments);

/// Lenient inverse of encode_target. Throws DecodeEmpty.
std::vector<std::string> decode_target(std::string_view marked);

struct PredictionRecord {
  std::string input;
  std::vector<std::string> gold;
  std::vector<std::string> pred;  // may be empty when a model emits nothing
};

/// JSON-lines: {"input": ..., "gold": [...], "pred": [...] | "&a+b$"}.
std::vector<PredictionRecord> load_predictions(const std::filesystem::path& path);
std::vector<PredictionRecord> parse_predictions(std::istream& in,
                                                const std::string& source = "predictions");

}  // namespace shabda
