#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shabda {

enum class SandhiCategory { Vowel, Visarga, Consonant, Concat };

std::string_view to_string(SandhiCategory c);
SandhiCategory parse_category(std::string_view name);

/// (left suffix, right prefix) -> fused surface form, all SLP1.
/// An empty `fused` is a deletion (written as ∅ in rule files).
struct SandhiRule {
  std::string left_suffix;
  std::string right_prefix;
  std::string fused;
  SandhiCategory category = SandhiCategory::Concat;

  bool is_deletion() const { return fused.empty(); }
  friend bool operator==(const SandhiRule&, const SandhiRule&) = default;
};

/// Index returned in place of a rule when two words are simply concatenated.
inline constexpr std::size_t kPlainConcat = std::numeric_limits<std::size_t>::max();

/// Ordered rule list; file order is priority. Immutable once built.
class RuleTable {
 public:
  RuleTable() = default;
  /// Throws DuplicateRule (line = 1-based rule position) or InvalidInput.
  explicit RuleTable(std::vector<SandhiRule> rules);

  static RuleTable load(const std::filesystem::path& path);
  static RuleTable parse(std::istream& in, const std::string& source = "rules");

  const std::vector<SandhiRule>& rules() const { return rules_; }
  const SandhiRule& operator[](std::size_t i) const { return rules_[i]; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  /// First rule (table order) whose patterns match the end of `left` and the
  /// start of `right`, or kPlainConcat.
  std::size_t first_match(std::string_view left, std::string_view right) const;

  /// Rules whose fused form starts with `head`, in priority order.
  std::span<const std::size_t> by_fused_head(char head) const;
  std::span<const std::size_t> deletions() const { return deletions_; }

 private:
  std::vector<SandhiRule> rules_;
  std::map<char, std::vector<std::size_t>> fused_index_;
  std::vector<std::size_t> deletions_;
  // Last byte of left_suffix -> rules; empty-suffix rules are merged into
  // every bucket so a single scan keeps table order.
  std::map<char, std::vector<std::size_t>> left_tail_index_;
  std::vector<std::size_t> empty_left_;
};

struct JoinResult {
  std::string text;
  std::size_t rule = kPlainConcat;
  /// Offset in `text` where the fused region begins (the cut point for a
  /// plain concatenation).
  std::size_t location = 0;
};

JoinResult join_detailed(std::string_view left, std::string_view right,
                         const RuleTable& table);

std::string join(std::string_view left, std::string_view right,
                 const RuleTable& table);

/// Left-to-right fold of `join` over the segments.
std::string join_all(std::span<const std::string> segments, const RuleTable& table);

struct SplitCandidate {
  std::string left;
  std::string right;
  std::size_t rule = kPlainConcat;  // the rule join() applies to (left, right)
  std::size_t location = 0;

  friend bool operator==(const SplitCandidate&, const SplitCandidate&) = default;
};

/// Every (left, right) with join(left, right) == compound that arises from
/// undoing a rule or cutting at an interior boundary. Ordered by location,
/// then rule priority (plain concatenation last); deduplicated on (left, right).
std::vector<SplitCandidate> split_candidates(std::string_view compound,
                                             const RuleTable& table);

}  // namespace shabda
