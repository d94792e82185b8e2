#include "shabda/metrics.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "shabda/error.hpp"
#include "shabda/unicode.hpp"

namespace shabda {

void ChrfParams::check() const {
  if (char_order < 1) throw InvalidInput("char n-gram order must be >= 1");
  if (word_order < 0) throw InvalidInput("word n-gram order must be >= 0");
  if (!(beta > 0.0)) throw InvalidInput("beta must be > 0");
}

ChrfStatistics& ChrfStatistics::operator+=(const ChrfStatistics& other) {
  if (orders.size() < other.orders.size()) orders.resize(other.orders.size());
  for (std::size_t i = 0; i < other.orders.size(); ++i) {
    orders[i].hypothesis += other.orders[i].hypothesis;
    orders[i].reference += other.orders[i].reference;
    orders[i].matched += other.orders[i].matched;
  }
  return *this;
}

namespace {

template <typename Seq>
NgramCounts count_order(const std::vector<Seq>& hyp, const std::vector<Seq>& ref, std::size_t n) {
  NgramCounts c;
  auto grams = [n](const std::vector<Seq>& units) {
    std::map<std::vector<Seq>, std::size_t> out;
    if (units.size() < n) return out;
    for (std::size_t i = 0; i + n <= units.size(); ++i) {
      ++out[std::vector<Seq>(units.begin() + static_cast<std::ptrdiff_t>(i),
                             units.begin() + static_cast<std::ptrdiff_t>(i + n))];
    }
    return out;
  };
  auto h = grams(hyp);
  auto r = grams(ref);
  for (auto& [g, k] : h) {
    c.hypothesis += k;
    if (auto it = r.find(g); it != r.end()) c.matched += std::min(k, it->second);
  }
  for (auto& [g, k] : r) c.reference += k;
  return c;
}

std::vector<std::u32string> words_of(const std::u32string& text) {
  std::vector<std::u32string> words;
  std::u32string cur;
  for (char32_t ch : text) {
    if (is_space(ch)) {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

std::vector<char32_t> chars_of(const std::u32string& text) {
  std::vector<char32_t> out;
  for (char32_t ch : text)
    if (!is_space(ch)) out.push_back(ch);
  return out;
}

}  // namespace

ChrfStatistics chrf_statistics(std::string_view hypothesis, std::string_view reference,
                               const ChrfParams& params) {
  params.check();
  const std::u32string hyp = to_u32(hypothesis);
  const std::u32string ref = to_u32(reference);
  ChrfStatistics stats;
  const auto hc = chars_of(hyp);
  const auto rc = chars_of(ref);
  for (int n = 1; n <= params.char_order; ++n)
    stats.orders.push_back(count_order(hc, rc, static_cast<std::size_t>(n)));
  const auto hw = words_of(hyp);
  const auto rw = words_of(ref);
  for (int n = 1; n <= params.word_order; ++n)
    stats.orders.push_back(count_order(hw, rw, static_cast<std::size_t>(n)));
  return stats;
}

double chrf_score(const ChrfStatistics& stats, const ChrfParams& params) {
  params.check();
  const double b2 = params.beta * params.beta;
  double sum = 0.0;
  std::size_t used = 0;
  for (const auto& o : stats.orders) {
    if (o.hypothesis == 0 && o.reference == 0) continue;
    ++used;
    if (o.hypothesis == 0 || o.reference == 0 || o.matched == 0) continue;
    const double p = static_cast<double>(o.matched) / static_cast<double>(o.hypothesis);
    const double r = static_cast<double>(o.matched) / static_cast<double>(o.reference);
    sum += (1.0 + b2) * p * r / (b2 * p + r);
  }
  return used == 0 ? 0.0 : 100.0 * sum / static_cast<double>(used);
}

double chrf_pp(std::string_view hypothesis, std::string_view reference, const ChrfParams& params) {
  if (chars_of(to_u32(reference)).empty()) throw EmptyReference("reference is empty");
  return chrf_score(chrf_statistics(hypothesis, reference, params), params);
}

CorpusChrf corpus_chrf(std::span<const std::string> hypotheses,
                       std::span<const std::string> references, const ChrfParams& params) {
  if (hypotheses.size() != references.size()) {
    throw InvalidInput("hypothesis and reference counts differ (" +
                       std::to_string(hypotheses.size()) + " vs " +
                       std::to_string(references.size()) + ")");
  }
  CorpusChrf out;
  ChrfStatistics pooled;
  double total = 0.0;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    if (chars_of(to_u32(references[i])).empty()) {
      throw EmptyReference("reference " + std::to_string(i + 1) + " is empty");
    }
    auto stats = chrf_statistics(hypotheses[i], references[i], params);
    double s = chrf_score(stats, params);
    out.per_item.push_back(s);
    total += s;
    pooled += stats;
  }
  if (!hypotheses.empty()) {
    out.pooled = chrf_score(pooled, params);
    out.mean = total / static_cast<double>(hypotheses.size());
  }
  return out;
}

std::set<std::size_t> align_locations(std::string_view compound,
                                      std::span<const std::string> segments) {
  if (segments.empty()) throw InvalidInput("no segments to align");
  std::u32string a = to_u32(compound);
  std::u32string b;
  std::size_t letters = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) b.push_back(U'+');
    auto s = to_u32(segments[i]);
    letters += s.size();
    b += s;
  }
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
  // cost[i][j]: compound[:i] against joined[:j]. '+' is free to skip and
  // never pairs with a compound character.
  std::vector<std::vector<std::size_t>> cost(n + 1, std::vector<std::size_t>(m + 1, kInf));
  cost[0][0] = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      std::size_t cur = cost[i][j];
      if (cur == kInf) continue;
      if (j < m) {
        std::size_t step = b[j] == U'+' ? 0 : 1;
        cost[i][j + 1] = std::min(cost[i][j + 1], cur + step);
      }
      if (i < n) cost[i + 1][j] = std::min(cost[i + 1][j], cur + 1);
      if (i < n && j < m && b[j] != U'+') {
        cost[i + 1][j + 1] = std::min(cost[i + 1][j + 1], cur + (a[i] == b[j] ? 0 : 1));
      }
    }
  }
  const std::size_t denom = std::max<std::size_t>({n, letters, 1});
  if (2 * cost[n][m] > denom) {
    throw UnalignableGold("segments do not align with '" + std::string(compound) + "'");
  }
  // Trace back, preferring to consume joined characters alone, then compound
  // characters alone, then pairs: boundaries land after as much of the
  // preceding segment as possible has been aligned.
  std::set<std::size_t> out;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    std::size_t cur = cost[i][j];
    if (j > 0) {
      std::size_t step = b[j - 1] == U'+' ? 0 : 1;
      if (cost[i][j - 1] != kInf && cost[i][j - 1] + step == cur) {
        if (b[j - 1] == U'+') out.insert(i);
        --j;
        continue;
      }
    }
    if (i > 0 && cost[i - 1][j] != kInf && cost[i - 1][j] + 1 == cur) {
      --i;
      continue;
    }
    // Diagonal must hold.
    --i;
    --j;
  }
  return out;
}

namespace {

std::vector<std::string> prepared(const std::vector<std::string>& segments,
                                  const SegCompareOptions& options) {
  if (options.normalize_anusvara == nullptr) return segments;
  std::vector<std::string> out;
  out.reserve(segments.size());
  for (const auto& s : segments) {
    out.push_back(normalize_anusvara({s, ScriptTag::Slp1}, *options.normalize_anusvara).text);
  }
  return out;
}

}  // namespace

bool split_correct(const PredictionRecord& record, const SegCompareOptions& options) {
  return prepared(record.pred, options) == prepared(record.gold, options);
}

bool location_correct(const PredictionRecord& record, const SegCompareOptions& options) {
  const auto gold = align_locations(record.input, prepared(record.gold, options));
  if (record.pred.empty()) return false;
  try {
    return align_locations(record.input, prepared(record.pred, options)) == gold;
  } catch (const UnalignableGold&) {
    return false;
  }
}

double lpa(std::span<const PredictionRecord> records, const SegCompareOptions& options) {
  return evaluate_segmentation(records, options).lpa;
}

double spa(std::span<const PredictionRecord> records, const SegCompareOptions& options) {
  if (records.empty()) return 0.0;
  std::size_t correct = 0;
  for (const auto& r : records) correct += split_correct(r, options) ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(records.size());
}

SegEvalResult prf_pm(std::span<const PredictionRecord> records, const SegCompareOptions& options) {
  SegEvalResult res;
  res.records = records.size();
  for (const auto& r : records) {
    auto pred = prepared(r.pred, options);
    auto gold = prepared(r.gold, options);
    if (pred == gold) ++res.pm_correct;
    res.predicted += pred.size();
    res.gold += gold.size();
    std::map<std::string, std::size_t> g;
    for (const auto& s : gold) ++g[s];
    for (const auto& s : pred) {
      auto it = g.find(s);
      if (it != g.end() && it->second > 0) {
        --it->second;
        ++res.matched;
      }
    }
  }
  auto ratio = [](std::size_t a, std::size_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  res.precision = ratio(res.matched, res.predicted);
  res.recall = ratio(res.matched, res.gold);
  res.f1 = res.precision + res.recall == 0.0
               ? 0.0
               : 2.0 * res.precision * res.recall / (res.precision + res.recall);
  res.pm = ratio(res.pm_correct, res.records);
  return res;
}

SegEvalResult evaluate_segmentation(std::span<const PredictionRecord> records,
                                    const SegCompareOptions& options) {
  SegEvalResult res = prf_pm(records, options);
  for (const auto& r : records) {
    if (split_correct(r, options)) ++res.spa_correct;
    if (location_correct(r, options)) ++res.lpa_correct;
  }
  if (!records.empty()) {
    res.lpa = static_cast<double>(res.lpa_correct) / static_cast<double>(records.size());
    res.spa = static_cast<double>(res.spa_correct) / static_cast<double>(records.size());
  }
  return res;
}

}  // namespace shabda
