#include "shabda/augment.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "shabda/error.hpp"
#include "shabda/unicode.hpp"

namespace shabda {

namespace {

std::vector<std::u32string> split_words(const std::u32string& text) {
  std::vector<std::u32string> words;
  std::u32string cur;
  for (char32_t c : text) {
    if (is_space(c) || c == U'-') {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

bool ends_with(const std::u32string& s, const std::u32string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::Administrative:
      return "administrative";
    case Domain::Biotechnology:
      return "biotechnology";
    case Domain::Chemistry:
      return "chemistry";
    case Domain::Other:
      return "other";
  }
  return "other";
}

Domain parse_domain(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "administrative" || lower == "administration" || lower == "admin")
    return Domain::Administrative;
  if (lower == "biotechnology" || lower == "biotech") return Domain::Biotechnology;
  if (lower == "chemistry") return Domain::Chemistry;
  return Domain::Other;
}

std::vector<DictEntry> parse_dictionary(std::istream& in, const ScriptTables& tables,
                                        const std::string& source) {
  std::vector<DictEntry> entries;
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
    if (cells.size() < 2 || cells.size() > 4) {
      throw ParseError(source, lineno, "expected english<TAB>hindi[<TAB>language[<TAB>domain]]");
    }
    DictEntry e;
    e.english = cells[0];
    if (e.english.empty()) throw ParseError(source, lineno, "empty English term");
    e.hindi = {nfc(std::string_view(cells[1])), ScriptTag::Devanagari};
    if (auto v = validate(e.hindi, tables); !v.empty()) {
      throw ScriptViolation(lineno, v.front().offset, v.front().code_point);
    }
    if (cells.size() > 2) e.target_language = cells[2];
    if (cells.size() > 3) e.domain = parse_domain(cells[3]);
    entries.push_back(std::move(e));
  }
  return entries;
}

AffixList::AffixList(std::vector<Affix> affixes) : affixes_(std::move(affixes)) {
  for (auto& a : affixes_) {
    if (a.suffix.empty()) throw InvalidInput("empty affix pattern");
    if (a.min_stem_len < kMinStem) {
      throw InvalidInput("minimum stem length must be at least " + std::to_string(kMinStem));
    }
    a.suffix = nfc(std::string_view(a.suffix));
  }
}

AffixList AffixList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse(in, path.string());
}

AffixList AffixList::parse(std::istream& in, const std::string& source) {
  std::vector<Affix> affixes;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    Affix a;
    auto tab = line.find('\t');
    a.suffix = line.substr(0, tab);
    if (tab != std::string::npos) {
      try {
        std::size_t used = 0;
        int v = std::stoi(line.substr(tab + 1), &used);
        if (v < static_cast<int>(kMinStem) || used != line.size() - tab - 1) {
          throw std::invalid_argument("min");
        }
        a.min_stem_len = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw ParseError(source, lineno, "minimum stem length must be an integer >= 2");
      }
    }
    if (a.suffix.empty()) throw ParseError(source, lineno, "empty suffix");
    affixes.push_back(std::move(a));
  }
  return AffixList(std::move(affixes));
}

TaggedText lemmatize_hindi(const TaggedText& word, const AffixList& affixes) {
  if (word.script != ScriptTag::Devanagari) {
    throw WrongScript("lemmatization expects Devanagari input");
  }
  std::u32string text = nfc(to_u32(word.text));
  std::vector<std::u32string> suffixes;
  suffixes.reserve(affixes.affixes().size());
  for (const auto& a : affixes.affixes()) suffixes.push_back(to_u32(a.suffix));

  auto strip = [&](std::u32string w) {
    std::size_t best = suffixes.size();
    for (std::size_t i = 0; i < suffixes.size(); ++i) {
      const auto& suf = suffixes[i];
      if (!ends_with(w, suf) || w.size() - suf.size() < affixes.affixes()[i].min_stem_len) continue;
      if (best == suffixes.size() || suf.size() > suffixes[best].size()) best = i;
    }
    if (best != suffixes.size()) w.resize(w.size() - suffixes[best].size());
    return w;
  };

  // Rebuild the phrase so separators survive unchanged.
  std::u32string out;
  std::u32string cur;
  for (char32_t c : text) {
    if (is_space(c) || c == U'-') {
      if (!cur.empty()) out += strip(std::move(cur));
      cur.clear();
      out.push_back(c);
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out += strip(std::move(cur));
  return {to_utf8(out), ScriptTag::Devanagari};
}

ScriptTag script_for_language(std::string_view language) {
  std::string lower(language);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (std::string_view code : {"hi", "hin", "hindi", "mr", "mar", "marathi", "sa", "san",
                                "sanskrit", "ne", "nep", "nepali", "kok", "konkani"}) {
    if (lower == code) return ScriptTag::Devanagari;
  }
  return ScriptTag::Iso15919;
}

std::string render_augmented(std::string_view english, std::span<const std::string> segments) {
  std::string out(english);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    out += i == 0 ? kSepToken : kInnerSepToken;
    out += segments[i];
  }
  return out;
}

AugmentedInput build_augmented_input(const DictEntry& entry, const AugmentContext& ctx) {
  if (entry.english.empty()) throw InvalidInput("empty English term");
  if (entry.hindi.script != ScriptTag::Devanagari) {
    throw WrongScript("dictionary Hindi term must be Devanagari");
  }
  if (auto v = validate(entry.hindi, ctx.tables); !v.empty()) {
    throw UnmappableCharacter(v.front().offset, v.front().code_point);
  }
  const ScriptTag out_script =
      ctx.output_script.value_or(script_for_language(entry.target_language));

  TaggedText normalized = normalize_anusvara(entry.hindi, ctx.tables);
  TaggedText lemma = lemmatize_hindi(normalized, ctx.affixes);

  AugmentedInput result;
  result.english = entry.english;
  bool any_covered = false;
  bool all_known = true;
  std::vector<std::string> slp1_segments;
  for (const auto& word : split_words(to_u32(lemma.text))) {
    TaggedText slp1 = transliterate({to_utf8(word), ScriptTag::Devanagari}, ScriptTag::Slp1,
                                    ctx.tables);
    SegmenterOptions opts = ctx.segmenter;
    opts.k = 1;
    Segmentation best = segment(slp1.text, ctx.lexicon, ctx.rules, opts).front();
    const bool covered = best.segments.size() > 1 || ctx.lexicon.contains(best.segments.front());
    any_covered = any_covered || covered;
    for (auto& s : best.segments) {
      all_known = all_known && ctx.lexicon.contains(s);
      slp1_segments.push_back(std::move(s));
    }
  }

  result.coverage_flag = any_covered && !slp1_segments.empty();
  result.all_in_lexicon = result.coverage_flag && all_known;
  std::vector<std::string> rendered_segments;
  if (result.coverage_flag) {
    for (const auto& s : slp1_segments) {
      TaggedText t = transliterate({s, ScriptTag::Slp1}, out_script, ctx.tables);
      rendered_segments.push_back(t.text);
      result.segments.push_back(std::move(t));
    }
  }
  result.rendered = render_augmented(result.english, rendered_segments);
  return result;
}

double CoverageCounts::fraction() const {
  return entries == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(entries);
}

double CoverageCounts::all_in_lexicon_fraction() const {
  return entries == 0 ? 0.0 : static_cast<double>(all_in_lexicon) / static_cast<double>(entries);
}

CoverageReport coverage_report(std::span<const DictEntry> entries,
                               std::span<const AugmentedInput> results) {
  if (entries.size() != results.size()) {
    throw InvalidInput("coverage_report: entries and results differ in length");
  }
  CoverageReport report;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (CoverageCounts* c : {&report.overall, &report.per_domain[entries[i].domain]}) {
      ++c->entries;
      if (results[i].coverage_flag) ++c->covered;
      if (results[i].all_in_lexicon) ++c->all_in_lexicon;
    }
  }
  return report;
}

}  // namespace shabda
