#include "shabda/segmenter.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "shabda/error.hpp"
#include "shabda/script.hpp"

namespace shabda {

void Lexicon::add(std::string_view stem, std::uint64_t count) {
  if (stem.empty()) throw InvalidInput("empty lexicon stem");
  if (count == 0) return;
  auto it = counts_.find(stem);
  if (it == counts_.end()) {
    counts_.emplace(std::string(stem), count);
  } else {
    it->second += count;
  }
  total_ += count;
}

std::uint64_t Lexicon::count(std::string_view stem) const {
  auto it = counts_.find(stem);
  return it == counts_.end() ? 0 : it->second;
}

double Lexicon::log_prob(std::string_view stem, double alpha) const {
  const double vocab = static_cast<double>(counts_.size() + 1);
  return std::log((static_cast<double>(count(stem)) + alpha) /
                  (static_cast<double>(total_) + alpha * vocab));
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse(in, path.string());
}

Lexicon Lexicon::parse(std::istream& in, const std::string& source) {
  Lexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    std::string stem = line.substr(0, tab);
    std::uint64_t count = 1;
    if (tab != std::string::npos) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(line.substr(tab + 1), &used);
        if (v < 1 || used != line.size() - tab - 1) throw std::invalid_argument("count");
        count = static_cast<std::uint64_t>(v);
      } catch (const std::exception&) {
        throw ParseError(source, lineno, "count must be a positive integer");
      }
    }
    if (!is_slp1_word(stem)) throw ParseError(source, lineno, "stem is not valid SLP1");
    lex.add(stem, count);
  }
  return lex;
}

void Lexicon::write(std::ostream& out) const {
  for (const auto& [stem, count] : counts_) out << stem << '\t' << count << '\n';
}

Lexicon build_lexicon(std::span<const std::vector<std::string>> corpus) {
  Lexicon lex;
  for (const auto& segments : corpus)
    for (const auto& s : segments) lex.add(s);
  return lex;
}

std::string Segmentation::joined() const {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) out.push_back('+');
    out += segments[i];
  }
  return out;
}

double segmentation_score(std::span<const std::string> segments, const Lexicon& lexicon,
                          double alpha) {
  double score = 0.0;
  for (const auto& s : segments) score += lexicon.log_prob(s, alpha);
  return score;
}

bool ranks_before(const Segmentation& a, const Segmentation& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.segments.size() != b.segments.size()) return a.segments.size() < b.segments.size();
  return a.segments < b.segments;
}

namespace {

// Top-k search over left-recursive splits. A state is (word, remaining
// segment budget, exclusive bound on the split location); the bound keeps
// boundary locations strictly increasing.
class Search {
 public:
  Search(const Lexicon& lexicon, const RuleTable& rules, const SegmenterOptions& options)
      : lexicon_(lexicon), rules_(rules), options_(options) {}

  const std::vector<Segmentation>& best(const std::string& word, std::size_t budget,
                                        std::size_t bound) {
    bound = std::min(bound, word.size());
    auto key = std::make_tuple(word, budget, bound);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<Segmentation> results;
    Segmentation whole;
    whole.compound = word;
    whole.segments = {word};
    whole.score = lexicon_.log_prob(word, options_.alpha);
    results.push_back(std::move(whole));

    if (budget >= 2) {
      for (const auto& cand : candidates(word)) {
        if (cand.location >= bound) continue;
        const double right_score = lexicon_.log_prob(cand.right, options_.alpha);
        for (const auto& sub : best(cand.left, budget - 1, cand.location)) {
          Segmentation s;
          s.compound = word;
          s.segments = sub.segments;
          s.segments.push_back(cand.right);
          s.locations = sub.locations;
          s.locations.push_back(cand.location);
          s.score = sub.score + right_score;
          results.push_back(std::move(s));
        }
      }
    }
    std::sort(results.begin(), results.end(), ranks_before);
    if (results.size() > options_.k) results.resize(options_.k);
    return memo_.emplace(std::move(key), std::move(results)).first->second;
  }

 private:
  const std::vector<SplitCandidate>& candidates(const std::string& word) {
    auto it = splits_.find(word);
    if (it == splits_.end()) it = splits_.emplace(word, split_candidates(word, rules_)).first;
    return it->second;
  }

  const Lexicon& lexicon_;
  const RuleTable& rules_;
  const SegmenterOptions& options_;
  std::map<std::tuple<std::string, std::size_t, std::size_t>, std::vector<Segmentation>> memo_;
  std::map<std::string, std::vector<SplitCandidate>, std::less<>> splits_;
};

}  // namespace

std::vector<Segmentation> segment(std::string_view compound, const Lexicon& lexicon,
                                  const RuleTable& rules, const SegmenterOptions& options) {
  if (!is_slp1_word(compound)) {
    throw InvalidInput("'" + std::string(compound) + "' is not valid SLP1");
  }
  if (options.k == 0) throw InvalidInput("k must be positive");
  if (options.max_segments == 0) throw InvalidInput("max_segments must be positive");
  Search search(lexicon, rules, options);
  std::string word(compound);
  return search.best(word, options.max_segments, word.size());
}

bool verify_segmentation(std::string_view compound, std::span<const std::string> segments,
                         const RuleTable& rules) {
  if (segments.empty()) return false;
  for (const auto& s : segments)
    if (!is_slp1_word(s)) return false;
  return join_all(segments, rules) == compound;
}

std::string encode_target(std::span<const std::string> segments) {
  if (segments.empty()) throw EmptySegment("no segments to encode");
  std::string out = "&";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (s.empty()) throw EmptySegment("segment " + std::to_string(i) + " is empty");
    if (s.find_first_of("&+$") != std::string::npos) {
      throw EmptySegment("segment '" + s + "' contains a reserved marker");
    }
    if (i) out.push_back('+');
    out += s;
  }
  out.push_back('$');
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> decode_target(std::string_view marked) {
  std::string_view body = trim(marked);
  if (!body.empty() && body.front() == '&') body.remove_prefix(1);
  if (!body.empty() && body.back() == '$') body.remove_suffix(1);
  std::vector<std::string> pieces;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto plus = body.find('+', start);
    auto piece = trim(body.substr(start, plus == std::string_view::npos ? std::string_view::npos
                                                                        : plus - start));
    if (!piece.empty()) pieces.emplace_back(piece);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  if (pieces.empty()) throw DecodeEmpty("'" + std::string(marked) + "' decodes to nothing");
  return pieces;
}

std::vector<PredictionRecord> load_predictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_predictions(in, path.string());
}

std::vector<PredictionRecord> parse_predictions(std::istream& in, const std::string& source) {
  using nlohmann::json;
  std::vector<PredictionRecord> records;
  std::string line;
  std::size_t lineno = 0;

  auto segments_of = [&](const json& value, const char* field,
                         bool allow_empty) -> std::vector<std::string> {
    std::vector<std::string> out;
    if (value.is_string()) {
      try {
        out = decode_target(value.get<std::string>());
      } catch (const DecodeEmpty&) {
        if (!allow_empty) throw ParseError(source, lineno, std::string(field) + " is empty");
      }
    } else if (value.is_array()) {
      for (const auto& v : value) {
        if (!v.is_string()) {
          throw ParseError(source, lineno, std::string(field) + " must hold strings");
        }
        out.push_back(v.get<std::string>());
      }
      if (out.empty() && !allow_empty) {
        throw ParseError(source, lineno, std::string(field) + " is empty");
      }
    } else {
      throw ParseError(source, lineno, std::string(field) + " must be an array or text");
    }
    return out;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(source, lineno, e.what());
    }
    if (!obj.is_object()) throw ParseError(source, lineno, "expected a JSON object");
    for (const char* key : {"input", "gold", "pred"}) {
      if (!obj.contains(key)) throw ParseError(source, lineno, std::string("missing '") + key + "'");
    }
    if (!obj["input"].is_string()) throw ParseError(source, lineno, "'input' must be text");
    PredictionRecord rec;
    rec.input = obj["input"].get<std::string>();
    rec.gold = segments_of(obj["gold"], "gold", false);
    rec.pred = segments_of(obj["pred"], "pred", true);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace shabda
