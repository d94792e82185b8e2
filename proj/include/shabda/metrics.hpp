#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shabda/script.hpp"
#include "shabda/segmenter.hpp"

namespace shabda {

struct ChrfParams {
  int char_order = 6;
  int word_order = 2;
  double beta = 2.0;

  /// Throws InvalidInput when out of range.
  void check() const;
};

/// Clipped n-gram counts for one order.
struct NgramCounts {
  std::size_t hypothesis = 0;
  std::size_t reference = 0;
  std::size_t matched = 0;
};

/// Character orders 1..char_order followed by word orders 1..word_order.
struct ChrfStatistics {
  std::vector<NgramCounts> orders;

  ChrfStatistics& operator+=(const ChrfStatistics& other);
};

ChrfStatistics chrf_statistics(std::string_view hypothesis, std::string_view reference,
                               const ChrfParams& params = {});

/// Score in [0, 100] from (possibly pooled) statistics. Orders with no
/// n-grams on either side are left out of the average.
double chrf_score(const ChrfStatistics& stats, const ChrfParams& params = {});

/// chrF++ of one hypothesis. Throws EmptyReference.
double chrf_pp(std::string_view hypothesis, std::string_view reference,
               const ChrfParams& params = {});

struct CorpusChrf {
  double pooled = 0.0;  // document level: statistics summed over items
  double mean = 0.0;    // average of per-item scores
  std::vector<double> per_item;
};

CorpusChrf corpus_chrf(std::span<const std::string> hypotheses,
                       std::span<const std::string> references, const ChrfParams& params = {});

/// Boundary offsets of `segments` within `compound`, from a minimum edit
/// alignment of the compound with the "+"-joined segments. Throws
/// UnalignableGold when the normalized distance exceeds 0.5.
std::set<std::size_t> align_locations(std::string_view compound,
                                      std::span<const std::string> segments);

struct SegCompareOptions {
  /// When set, segments are anusvara-normalized (as SLP1) before comparison.
  const ScriptTables* normalize_anusvara = nullptr;
};

struct SegEvalResult {
  double lpa = 0.0;
  double spa = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double pm = 0.0;

  std::size_t records = 0;
  std::size_t lpa_correct = 0;
  std::size_t spa_correct = 0;
  std::size_t matched = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;
  std::size_t pm_correct = 0;
};

/// Location prediction accuracy. Gold must align with its input.
double lpa(std::span<const PredictionRecord> records, const SegCompareOptions& options = {});
/// Split prediction accuracy: exact segment-list equality.
double spa(std::span<const PredictionRecord> records, const SegCompareOptions& options = {});
/// Micro-averaged word-level P/R/F1 and sentence-level perfect match.
SegEvalResult prf_pm(std::span<const PredictionRecord> records,
                     const SegCompareOptions& options = {});
/// All segmentation metrics in one pass.
SegEvalResult evaluate_segmentation(std::span<const PredictionRecord> records,
                                    const SegCompareOptions& options = {});

/// Whether the prediction of one record has the same boundary set as gold.
bool location_correct(const PredictionRecord& record, const SegCompareOptions& options = {});
bool split_correct(const PredictionRecord& record, const SegCompareOptions& options = {});

}  // namespace shabda
