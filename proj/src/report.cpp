#include "shabda/report.hpp"

#include "shabda/error.hpp"
#include "shabda/unicode.hpp"

namespace shabda {

using nlohmann::json;

json to_json(const ChrfParams& params) {
  return {{"char_order", params.char_order}, {"word_order", params.word_order}, {"beta", params.beta}};
}

json to_json(const SegEvalResult& r) {
  return {{"scores",
           {{"lpa", r.lpa},
            {"spa", r.spa},
            {"precision", r.precision},
            {"recall", r.recall},
            {"f1", r.f1},
            {"pm", r.pm}}},
          {"counts",
           {{"records", r.records},
            {"lpa_correct", r.lpa_correct},
            {"spa_correct", r.spa_correct},
            {"matched", r.matched},
            {"predicted", r.predicted},
            {"gold", r.gold},
            {"pm_correct", r.pm_correct}}}};
}

json to_json(const CorpusStats& s) {
  json hist = json::object();
  for (const auto& [k, v] : s.segment_histogram) hist[std::to_string(k)] = v;
  json inv = json::object();
  for (const auto& [cp, v] : s.inventory) inv[to_utf8(std::u32string(1, cp))] = v;
  json reasons = json::object();
  for (const auto& [k, v] : s.pruned_reasons) reasons[k] = v;
  return {{"instances", s.instances},
          {"segments", s.segments},
          {"segment_histogram", hist},
          {"inventory", inv},
          {"pruned", s.pruned},
          {"pruned_reasons", reasons}};
}

json to_json(const CoverageCounts& c) {
  return {{"entries", c.entries},
          {"covered", c.covered},
          {"all_in_lexicon", c.all_in_lexicon},
          {"fraction", c.fraction()},
          {"all_in_lexicon_fraction", c.all_in_lexicon_fraction()},
          {"defined", c.defined()}};
}

json to_json(const CoverageReport& r) {
  json domains = json::object();
  for (const auto& [d, c] : r.per_domain) domains[std::string(to_string(d))] = to_json(c);
  return {{"overall", to_json(r.overall)}, {"per_domain", domains}};
}

}  // namespace shabda
