#include "shabda/sandhi.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "shabda/error.hpp"
#include "shabda/script.hpp"

namespace shabda {

namespace {

constexpr std::string_view kDeletionMark = "∅";

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

void require_word(std::string_view word) {
  if (word.empty()) throw InvalidInput("empty word");
  if (!is_slp1_word(word)) {
    throw InvalidInput("'" + std::string(word) + "' is not valid SLP1");
  }
}

bool valid_pattern(std::string_view p) {
  return std::all_of(p.begin(), p.end(), is_slp1_letter);
}

}  // namespace

std::string_view to_string(SandhiCategory c) {
  switch (c) {
    case SandhiCategory::Vowel:
      return "vowel";
    case SandhiCategory::Visarga:
      return "visarga";
    case SandhiCategory::Consonant:
      return "consonant";
    case SandhiCategory::Concat:
      return "concat";
  }
  return "?";
}

SandhiCategory parse_category(std::string_view name) {
  if (name == "vowel") return SandhiCategory::Vowel;
  if (name == "visarga") return SandhiCategory::Visarga;
  if (name == "consonant") return SandhiCategory::Consonant;
  if (name == "concat") return SandhiCategory::Concat;
  throw InvalidInput("unknown sandhi category '" + std::string(name) + "'");
}

RuleTable::RuleTable(std::vector<SandhiRule> rules) : rules_(std::move(rules)) {
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (r.category != SandhiCategory::Concat &&
        (r.left_suffix.empty() || r.right_prefix.empty())) {
      throw InvalidInput("rule " + std::to_string(i + 1) +
                         ": empty pattern outside a concat rule");
    }
    if (!valid_pattern(r.left_suffix) || !valid_pattern(r.right_prefix) ||
        !valid_pattern(r.fused)) {
      throw InvalidInput("rule " + std::to_string(i + 1) + ": pattern is not SLP1");
    }
    if (!seen.emplace(r.left_suffix, r.right_prefix).second) {
      throw DuplicateRule(i + 1, "rule " + std::to_string(i + 1) + ": duplicate pattern pair (" +
                                     r.left_suffix + ", " + r.right_prefix + ")");
    }
    if (r.is_deletion()) {
      deletions_.push_back(i);
    } else {
      fused_index_[r.fused.front()].push_back(i);
    }
    if (r.left_suffix.empty()) {
      empty_left_.push_back(i);
    } else {
      left_tail_index_[r.left_suffix.back()].push_back(i);
    }
  }
  if (!empty_left_.empty()) {
    for (auto& [tail, bucket] : left_tail_index_) {
      std::vector<std::size_t> merged;
      std::merge(bucket.begin(), bucket.end(), empty_left_.begin(), empty_left_.end(),
                 std::back_inserter(merged));
      bucket = std::move(merged);
    }
  }
}

RuleTable RuleTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse(in, path.string());
}

RuleTable RuleTable::parse(std::istream& in, const std::string& source) {
  std::vector<SandhiRule> rules;
  std::vector<std::size_t> lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    if (!line.empty() && line.back() == '\t') cells.emplace_back();
    if (cells.size() != 4) {
      throw ParseError(source, lineno, "expected 4 tab-separated columns");
    }
    SandhiRule rule;
    rule.left_suffix = cells[0];
    rule.right_prefix = cells[1];
    try {
      rule.category = parse_category(cells[3]);
    } catch (const InvalidInput& e) {
      throw ParseError(source, lineno, e.what());
    }
    if (cells[2] == kDeletionMark) {
      rule.fused.clear();
    } else if (cells[2].empty()) {
      throw ParseError(source, lineno, "empty fused form (use ∅ for deletion)");
    } else {
      rule.fused = cells[2];
    }
    rules.push_back(std::move(rule));
    lines.push_back(lineno);
  }
  try {
    return RuleTable(std::move(rules));
  } catch (const DuplicateRule& e) {
    throw DuplicateRule(lines[e.line() - 1], source + ":" +
                                                 std::to_string(lines[e.line() - 1]) +
                                                 ": duplicate pattern pair");
  } catch (const InvalidInput& e) {
    throw ParseError(source, lineno, e.what());
  }
}

std::size_t RuleTable::first_match(std::string_view left, std::string_view right) const {
  auto matches = [&](std::size_t i) {
    const auto& r = rules_[i];
    return ends_with(left, r.left_suffix) && starts_with(right, r.right_prefix);
  };
  const std::vector<std::size_t>* bucket = &empty_left_;
  if (!left.empty()) {
    auto it = left_tail_index_.find(left.back());
    if (it != left_tail_index_.end()) bucket = &it->second;
  }
  for (std::size_t i : *bucket) {
    if (matches(i)) return i;
  }
  return kPlainConcat;
}

std::span<const std::size_t> RuleTable::by_fused_head(char head) const {
  auto it = fused_index_.find(head);
  if (it == fused_index_.end()) return {};
  return it->second;
}

JoinResult join_detailed(std::string_view left, std::string_view right,
                         const RuleTable& table) {
  JoinResult result;
  result.rule = table.first_match(left, right);
  if (result.rule == kPlainConcat) {
    result.text.reserve(left.size() + right.size());
    result.text.append(left).append(right);
    result.location = left.size();
    return result;
  }
  const auto& r = table[result.rule];
  result.location = left.size() - r.left_suffix.size();
  result.text.append(left.substr(0, result.location));
  result.text.append(r.fused);
  result.text.append(right.substr(r.right_prefix.size()));
  return result;
}

std::string join(std::string_view left, std::string_view right, const RuleTable& table) {
  require_word(left);
  require_word(right);
  return join_detailed(left, right, table).text;
}

std::string join_all(std::span<const std::string> segments, const RuleTable& table) {
  if (segments.empty()) throw InvalidInput("no segments to join");
  std::string acc = segments.front();
  require_word(acc);
  for (std::size_t i = 1; i < segments.size(); ++i) {
    require_word(segments[i]);
    acc = join_detailed(acc, segments[i], table).text;
  }
  return acc;
}

std::vector<SplitCandidate> split_candidates(std::string_view compound,
                                             const RuleTable& table) {
  require_word(compound);
  const std::size_t n = compound.size();

  struct Raw {
    std::size_t location;
    std::size_t priority;
    std::string left;
    std::string right;
  };
  std::vector<Raw> raw;

  auto consider = [&](std::size_t p, std::size_t rule_index) {
    const auto& r = table[rule_index];
    if (p == 0 || p >= n) return;
    std::string left(compound.substr(0, p));
    left += r.left_suffix;
    std::string right = r.right_prefix;
    right.append(compound.substr(p + r.fused.size()));
    if (left.empty() || right.empty()) return;
    raw.push_back({p, rule_index, std::move(left), std::move(right)});
  };

  for (std::size_t p = 1; p < n; ++p) {
    for (std::size_t i : table.by_fused_head(compound[p])) {
      const auto& fused = table[i].fused;
      if (compound.substr(p, fused.size()) == fused) consider(p, i);
    }
    for (std::size_t i : table.deletions()) consider(p, i);
    raw.push_back({p, kPlainConcat, std::string(compound.substr(0, p)),
                   std::string(compound.substr(p))});
  }

  std::stable_sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    return std::tie(a.location, a.priority) < std::tie(b.location, b.priority);
  });

  std::vector<SplitCandidate> out;
  std::set<std::pair<std::string_view, std::string_view>> seen;
  for (const auto& c : raw) {
    if (!seen.emplace(c.left, c.right).second) continue;
    JoinResult j = join_detailed(c.left, c.right, table);
    if (j.text != compound || j.location == 0 || j.location >= n) continue;
    out.push_back({c.left, c.right, j.rule, j.location});
  }
  std::stable_sort(out.begin(), out.end(), [](const SplitCandidate& a, const SplitCandidate& b) {
    return std::tie(a.location, a.rule) < std::tie(b.location, b.rule);
  });
  return out;
}

}  // namespace shabda
