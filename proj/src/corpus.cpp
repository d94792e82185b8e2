#include "shabda/corpus.hpp"

#include <fstream>

#include "shabda/error.hpp"
#include "shabda/unicode.hpp"

namespace shabda {

std::vector<std::string> SegInstance::segment_texts() const {
  std::vector<std::string> out;
  out.reserve(gold_segments.size());
  for (const auto& s : gold_segments) out.push_back(s.text);
  return out;
}

SegCorpusReader::SegCorpusReader(std::istream& in, ScriptTag script, const ScriptTables& tables,
                                 std::string source, bool validate)
    : in_(in), script_(script), tables_(tables), source_(std::move(source)), validate_(validate) {}

std::optional<SegInstance> SegCorpusReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++lineno_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(source_, lineno_, "expected compound<TAB>segments");
    }
    if (line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(source_, lineno_, "too many columns");
    }
    SegInstance inst;
    inst.source = source_;
    inst.line = lineno_;
    std::string compound;
    std::string segs;
    try {
      compound = nfc(std::string_view(line).substr(0, tab));
      segs = nfc(std::string_view(line).substr(tab + 1));
    } catch (const InvalidInput& e) {
      throw ParseError(source_, lineno_, e.what());
    }
    if (compound.empty()) throw ParseError(source_, lineno_, "empty compound");
    inst.compound = {compound, script_};
    std::size_t start = 0;
    while (start < segs.size()) {
      auto plus = segs.find('+', start);
      std::string piece = segs.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
      inst.gold_segments.push_back({piece, script_});
      if (plus == std::string::npos) break;
      start = plus + 1;
      if (start == segs.size()) inst.gold_segments.push_back({"", script_});
    }
    if (validate_) {
      auto v = validate(inst.compound, tables_);
      if (!v.empty()) throw ScriptViolation(lineno_, v.front().offset, v.front().code_point);
      // Offsets for segments are reported relative to the segment column.
      std::size_t base = 0;
      for (const auto& s : inst.gold_segments) {
        auto sv = validate(s, tables_);
        if (!sv.empty()) throw ScriptViolation(lineno_, base + sv.front().offset, sv.front().code_point);
        base += to_u32(s.text).size() + 1;
      }
    }
    return inst;
  }
  return std::nullopt;
}

std::vector<SegInstance> parse_seg_corpus(std::istream& in, ScriptTag script,
                                          const ScriptTables& tables, const std::string& source,
                                          bool validate) {
  SegCorpusReader reader(in, script, tables, source, validate);
  std::vector<SegInstance> out;
  while (auto inst = reader.next()) out.push_back(std::move(*inst));
  return out;
}

std::vector<SegInstance> load_seg_corpus(const std::filesystem::path& path, ScriptTag script,
                                         const ScriptTables& tables, bool validate) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_seg_corpus(in, script, tables, path.string(), validate);
}

void write_seg_instance(std::ostream& out, const SegInstance& instance) {
  out << instance.compound.text << '\t';
  for (std::size_t i = 0; i < instance.gold_segments.size(); ++i) {
    if (i) out << '+';
    out << instance.gold_segments[i].text;
  }
  out << '\n';
}

std::string_view to_string(PruneReason reason) {
  switch (reason) {
    case PruneReason::ScriptViolation:
      return "script-violation";
    case PruneReason::EmptySegments:
      return "empty-segments";
    case PruneReason::JoinFailure:
      return "join-failure";
  }
  return "?";
}

namespace {

bool script_ok(const SegInstance& inst, const ScriptTables& tables) {
  if (!validate(inst.compound, tables).empty()) return false;
  for (const auto& s : inst.gold_segments) {
    if (s.script != inst.compound.script || !validate(s, tables).empty()) return false;
  }
  return true;
}

bool segments_ok(const SegInstance& inst) {
  if (inst.gold_segments.empty()) return false;
  for (const auto& s : inst.gold_segments)
    if (s.text.empty()) return false;
  return true;
}

bool join_ok(const SegInstance& inst, const RuleTable& rules, const ScriptTables& tables) {
  try {
    auto slp1 = [&](const TaggedText& t) { return transliterate(t, ScriptTag::Slp1, tables).text; };
    std::vector<std::string> segs;
    for (const auto& s : inst.gold_segments) segs.push_back(slp1(s));
    for (const auto& s : segs)
      if (!is_slp1_word(s)) return false;
    return join_all(segs, rules) == slp1(inst.compound);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

PruneResult prune_invalid(std::vector<SegInstance> instances, const RuleTable& rules,
                          const ScriptTables& tables, const PruneOptions& options) {
  PruneResult result;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto& inst = instances[i];
    std::optional<PruneReason> reason;
    if (options.check_script && !script_ok(inst, tables)) {
      reason = PruneReason::ScriptViolation;
    } else if (options.check_empty && !segments_ok(inst)) {
      reason = PruneReason::EmptySegments;
    } else if (options.check_join && !join_ok(inst, rules, tables)) {
      reason = PruneReason::JoinFailure;
    }
    if (reason) {
      result.pruned.push_back({std::move(inst), *reason, i});
    } else {
      result.kept.push_back(std::move(inst));
    }
  }
  return result;
}

std::vector<SegInstance> convert_corpus(const std::vector<SegInstance>& instances,
                                        ScriptTag target, const ScriptTables& tables) {
  std::vector<SegInstance> out;
  out.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    try {
      SegInstance c;
      c.source = inst.source;
      c.line = inst.line;
      c.compound = transliterate(inst.compound, target, tables);
      for (const auto& s : inst.gold_segments) c.gold_segments.push_back(transliterate(s, target, tables));
      out.push_back(std::move(c));
    } catch (const UnmappableCharacter& e) {
      throw ConversionError(i, e);
    }
  }
  return out;
}

CorpusStats stats(const std::vector<SegInstance>& instances,
                  const std::vector<PrunedInstance>& pruned) {
  CorpusStats s;
  s.instances = instances.size();
  for (const auto& inst : instances) {
    s.segments += inst.gold_segments.size();
    ++s.segment_histogram[inst.gold_segments.size()];
    for (char32_t c : to_u32(inst.compound.text)) ++s.inventory[c];
  }
  s.pruned = pruned.size();
  for (const auto& p : pruned) ++s.pruned_reasons[std::string(to_string(p.reason))];
  return s;
}

}  // namespace shabda
