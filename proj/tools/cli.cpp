#include "cli.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "shabda/augment.hpp"
#include "shabda/corpus.hpp"
#include "shabda/error.hpp"
#include "shabda/metrics.hpp"
#include "shabda/report.hpp"
#include "shabda/sandhi.hpp"
#include "shabda/script.hpp"
#include "shabda/segmenter.hpp"
#include "shabda/unicode.hpp"

#ifndef SHABDA_DEFAULT_DATA_DIR
#define SHABDA_DEFAULT_DATA_DIR "data"
#endif

namespace shabda::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string config;
  std::string data_dir;
  std::string rules;
  std::string lexicon;
  std::string affixes;
  std::string input;
  std::string output;
  std::string from;
  std::string to;
  std::size_t k = 1;
  double beta = 2.0;
  int char_n = 6;
  int word_n = 2;
  bool per_item = false;
  unsigned jobs = 1;

  std::string hyp;
  std::string ref;
  std::string predictions;
  std::string gold;
  bool normalize_anusvara = false;
  std::string coverage_report;
  bool join_check = false;
  bool no_script_check = false;
  bool no_empty_check = false;
  std::string pruned_report;
};

// Result of processing one input line.
struct LineResult {
  std::string out;   // written verbatim, newline included
  std::string warn;  // written to stderr verbatim
  std::optional<std::string> error;
};

using LineFn = std::function<LineResult(const std::string& line, std::size_t lineno)>;

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> split_segments(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& word : split_ws(s)) {
    for (auto& piece : decode_target(word)) out.push_back(std::move(piece));
  }
  return out;
}

// Order-preserving line processing. With one job, every line is handled as
// soon as it is read.
int process_lines(std::istream& in, std::ostream& out, std::ostream& err, unsigned jobs,
                  const LineFn& fn) {
  const std::size_t batch = jobs <= 1 ? 1 : 256 * static_cast<std::size_t>(jobs);
  std::size_t lineno = 0;
  std::vector<std::string> lines;
  std::vector<LineResult> results;
  auto run_one = [&](std::size_t i, std::size_t first) {
    try {
      results[i] = fn(lines[i], first + i);
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  };
  while (true) {
    lines.clear();
    std::string line;
    while (lines.size() < batch && std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
    if (lines.empty()) break;
    const std::size_t first = lineno + 1;
    lineno += lines.size();
    results.assign(lines.size(), LineResult{});
    if (jobs <= 1 || lines.size() == 1) {
      for (std::size_t i = 0; i < lines.size(); ++i) run_one(i, first);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(lines.size()));
      for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < lines.size(); i = next++) run_one(i, first);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].error) {
        out.flush();
        err << "line " << first + i << ": " << *results[i].error << '\n';
        return kExitData;
      }
      out << results[i].out;
      err << results[i].warn;
    }
  }
  return kExitOk;
}

fs::path data_dir(const Config& cfg) {
  if (!cfg.data_dir.empty()) return cfg.data_dir;
  if (const char* env = std::getenv("SHABDA_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return SHABDA_DEFAULT_DATA_DIR;
}

fs::path existing(const fs::path& p) {
  if (!fs::exists(p)) throw IoError("file not found: " + p.string());
  return p;
}

ScriptTables load_tables(const Config& cfg) {
  const auto dir = data_dir(cfg);
  return ScriptTables::load(existing(dir / "translit.tsv"), existing(dir / "varga.tsv"));
}

RuleTable load_rules(const Config& cfg) {
  return RuleTable::load(existing(cfg.rules.empty() ? data_dir(cfg) / "sandhi_rules.tsv"
                                                    : fs::path(cfg.rules)));
}

Lexicon load_lexicon(const Config& cfg) {
  if (cfg.lexicon.empty()) return Lexicon{};
  return Lexicon::load(existing(cfg.lexicon));
}

AffixList load_affixes(const Config& cfg) {
  return AffixList::load(existing(cfg.affixes.empty() ? data_dir(cfg) / "hindi_affixes.tsv"
                                                      : fs::path(cfg.affixes)));
}

ScriptTag script_or(const std::string& name, ScriptTag fallback) {
  if (name.empty()) return fallback;
  try {
    return parse_script(name);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

ChrfParams chrf_params(const Config& cfg) {
  ChrfParams p{cfg.char_n, cfg.word_n, cfg.beta};
  try {
    p.check();
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  return p;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(existing(path));
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string joined(const std::vector<std::string>& segs) {
  std::string s;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i) s.push_back('+');
    s += segs[i];
  }
  return s;
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_translit(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const ScriptTag from = script_or(cfg.from, ScriptTag::Devanagari);
  const ScriptTag to = script_or(cfg.to, ScriptTag::Slp1);
  const auto tables = load_tables(cfg);
  return process_lines(in, out, err, cfg.jobs, [&](const std::string& line, std::size_t) {
    return LineResult{transliterate({line, from}, to, tables).text + '\n', {}, {}};
  });
}

int cmd_normalize(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const ScriptTag script = script_or(cfg.from, ScriptTag::Slp1);
  if (script == ScriptTag::Iso15919) throw UsageError("normalize works on devanagari or slp1");
  const auto tables = load_tables(cfg);
  return process_lines(in, out, err, cfg.jobs, [&](const std::string& line, std::size_t lineno) {
    TaggedText t{line, script};
    LineResult r;
    r.out = normalize_anusvara(t, tables).text + '\n';
    for (const auto& w : anusvara_warnings(t, tables)) {
      r.warn += "line " + std::to_string(lineno) + ": word-final anusvara at offset " +
                std::to_string(w.offset) + " left unchanged\n";
    }
    return r;
  });
}

int cmd_sandhi_join(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto rules = load_rules(cfg);
  return process_lines(in, out, err, cfg.jobs, [&](const std::string& line, std::size_t) {
    std::string text;
    for (const auto& word : split_ws(line)) {
      if (!text.empty()) text.push_back(' ');
      text += join_all(decode_target(word), rules);
    }
    return LineResult{text + '\n', {}, {}};
  });
}

int cmd_sandhi_split(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto rules = load_rules(cfg);
  return process_lines(in, out, err, cfg.jobs, [&](const std::string& line, std::size_t) {
    LineResult r;
    for (const auto& word : split_ws(line)) {
      for (const auto& c : split_candidates(word, rules)) {
        const auto category = c.rule == kPlainConcat ? SandhiCategory::Concat : rules[c.rule].category;
        r.out += word + '\t' + c.left + '+' + c.right + '\t' + std::to_string(c.location) + '\t' +
                 std::string(to_string(category)) + '\n';
      }
    }
    return r;
  });
}

int cmd_segment(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.k == 0) throw UsageError("-k must be positive");
  const auto rules = load_rules(cfg);
  const auto lexicon = load_lexicon(cfg);
  SegmenterOptions opts;
  opts.k = cfg.k;
  return process_lines(in, out, err, cfg.jobs, [&](const std::string& line, std::size_t) {
    std::vector<std::vector<Segmentation>> per_word;
    std::size_t ranks = 1;
    for (const auto& word : split_ws(line)) {
      per_word.push_back(segment(word, lexicon, rules, opts));
      ranks = std::max(ranks, per_word.back().size());
    }
    std::string text;
    for (std::size_t r = 0; r < ranks; ++r) {
      if (r) text.push_back('\t');
      for (std::size_t w = 0; w < per_word.size(); ++w) {
        if (w) text.push_back(' ');
        const auto& alts = per_word[w];
        text += alts[std::min(r, alts.size() - 1)].joined();
      }
    }
    return LineResult{text + '\n', {}, {}};
  });
}

int cmd_encode(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return process_lines(in, out, err, cfg.jobs, [&](const std::string& line, std::size_t) {
    std::string text;
    for (const auto& word : split_ws(line)) {
      if (!text.empty()) text.push_back(' ');
      text += encode_target(decode_target(word));
    }
    return LineResult{text + '\n', {}, {}};
  });
}

int cmd_decode(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return process_lines(in, out, err, cfg.jobs, [&](const std::string& line, std::size_t) {
    std::string text;
    for (const auto& word : split_ws(line)) {
      if (!text.empty()) text.push_back(' ');
      text += joined(decode_target(word));
    }
    return LineResult{text + '\n', {}, {}};
  });
}

int cmd_augment(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto tables = load_tables(cfg);
  const auto rules = load_rules(cfg);
  const auto lexicon = load_lexicon(cfg);
  const auto affixes = load_affixes(cfg);
  AugmentContext ctx{tables, rules, lexicon, affixes};
  if (!cfg.to.empty()) ctx.output_script = script_or(cfg.to, ScriptTag::Iso15919);

  std::mutex mu;
  std::map<std::size_t, std::pair<DictEntry, AugmentedInput>> seen;
  int rc = process_lines(in, out, err, cfg.jobs, [&](const std::string& line, std::size_t lineno) {
    std::istringstream one(line);
    auto entries = parse_dictionary(one, tables, "line " + std::to_string(lineno));
    if (entries.empty()) return LineResult{};
    auto result = build_augmented_input(entries.front(), ctx);
    std::string text = result.english + '\t' + result.rendered + '\t' +
                       (result.coverage_flag ? "true" : "false") + '\n';
    if (!cfg.coverage_report.empty()) {
      std::lock_guard lock(mu);
      seen.emplace(lineno, std::pair{entries.front(), std::move(result)});
    }
    return LineResult{std::move(text), {}, {}};
  });
  if (rc != kExitOk || cfg.coverage_report.empty()) return rc;
  std::vector<DictEntry> entries;
  std::vector<AugmentedInput> results;
  for (auto& [_, pair] : seen) {
    entries.push_back(std::move(pair.first));
    results.push_back(std::move(pair.second));
  }
  std::ofstream rep(cfg.coverage_report);
  if (!rep) throw IoError("cannot write " + cfg.coverage_report);
  write_json(rep, to_json(coverage_report(entries, results)));
  return kExitOk;
}

int cmd_eval_seg(const Config& cfg, std::istream& in, std::ostream& out) {
  std::vector<PredictionRecord> records;
  std::string corpus_name;
  if (!cfg.predictions.empty()) {
    if (!cfg.gold.empty()) throw UsageError("use either --predictions or --gold, not both");
    records = load_predictions(existing(cfg.predictions));
    corpus_name = cfg.predictions;
  } else if (!cfg.gold.empty()) {
    const ScriptTag script = script_or(cfg.from, ScriptTag::Slp1);
    const auto tables = load_tables(cfg);
    auto gold = load_seg_corpus(existing(cfg.gold), script, tables);
    corpus_name = cfg.gold;
    std::string line;
    std::size_t lineno = 0;
    for (const auto& inst : gold) {
      if (!std::getline(in, line)) {
        throw InvalidInput("predictions end after " + std::to_string(lineno) + " lines; gold has " +
                           std::to_string(gold.size()));
      }
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      PredictionRecord rec;
      for (char c : inst.compound.text)
        if (c != ' ' && c != '\t') rec.input.push_back(c);
      for (const auto& s : inst.gold_segments)
        for (auto& piece : split_ws(s.text)) rec.gold.push_back(std::move(piece));
      try {
        rec.pred = split_segments(line);
      } catch (const DecodeEmpty&) {
        rec.pred.clear();
      }
      records.push_back(std::move(rec));
    }
    if (std::getline(in, line)) {
      throw InvalidInput("more predictions than gold instances (" + std::to_string(gold.size()) + ")");
    }
  } else {
    throw UsageError("eval-seg needs --predictions FILE or --gold FILE");
  }

  std::optional<ScriptTables> tables;
  SegCompareOptions opts;
  if (cfg.normalize_anusvara) {
    tables = load_tables(cfg);
    opts.normalize_anusvara = &*tables;
  }
  auto result = evaluate_segmentation(records, opts);
  json report = to_json(result);
  report["corpus"] = corpus_name;
  report["metric"] = "segmentation";
  report["parameters"] = {{"normalize_anusvara", cfg.normalize_anusvara}};
  if (cfg.per_item) {
    json items = json::array();
    for (const auto& r : records) {
      items.push_back({{"input", r.input},
                       {"gold", joined(r.gold)},
                       {"pred", joined(r.pred)},
                       {"location_correct", location_correct(r, opts)},
                       {"split_correct", split_correct(r, opts)}});
    }
    report["items"] = std::move(items);
  }
  write_json(out, report);
  return kExitOk;
}

int cmd_eval_chrf(const Config& cfg, std::ostream& out) {
  if (cfg.hyp.empty() || cfg.ref.empty()) throw UsageError("eval-chrf needs --hyp and --ref");
  const auto params = chrf_params(cfg);
  const auto hyps = read_lines(cfg.hyp);
  const auto refs = read_lines(cfg.ref);
  auto scores = corpus_chrf(hyps, refs, params);
  json report;
  report["corpus"] = cfg.ref;
  report["metric"] = "chrF++";
  report["parameters"] = to_json(params);
  report["scores"] = {{"chrf_pp", scores.pooled}, {"chrf_pp_mean", scores.mean}};
  report["counts"] = {{"items", hyps.size()}};
  if (cfg.per_item) report["items"] = scores.per_item;
  write_json(out, report);
  return kExitOk;
}

int cmd_corpus_stats(const Config& cfg, std::istream& in, std::ostream& out) {
  const ScriptTag script = script_or(cfg.from, ScriptTag::Slp1);
  const auto tables = load_tables(cfg);
  SegCorpusReader reader(in, script, tables, cfg.input.empty() ? "stdin" : cfg.input);
  CorpusStats total;
  while (auto inst = reader.next()) {
    auto s = stats({*inst});
    ++total.instances;
    total.segments += s.segments;
    for (auto& [k, v] : s.segment_histogram) total.segment_histogram[k] += v;
    for (auto& [k, v] : s.inventory) total.inventory[k] += v;
  }
  write_json(out, to_json(total));
  return kExitOk;
}

int cmd_prune(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const ScriptTag script = script_or(cfg.from, ScriptTag::Slp1);
  const auto tables = load_tables(cfg);
  const auto rules = load_rules(cfg);
  PruneOptions opts;
  opts.check_script = !cfg.no_script_check;
  opts.check_empty = !cfg.no_empty_check;
  opts.check_join = cfg.join_check;

  std::unique_ptr<std::ofstream> report_file;
  if (!cfg.pruned_report.empty()) {
    report_file = std::make_unique<std::ofstream>(cfg.pruned_report);
    if (!*report_file) throw IoError("cannot write " + cfg.pruned_report);
  }
  std::ostream& report = report_file ? *report_file : err;
  SegCorpusReader reader(in, script, tables, cfg.input.empty() ? "stdin" : cfg.input, false);
  while (auto inst = reader.next()) {
    const std::size_t line = inst->line;
    std::vector<SegInstance> one;
    one.push_back(std::move(*inst));
    auto result = prune_invalid(std::move(one), rules, tables, opts);
    for (const auto& kept : result.kept) write_seg_instance(out, kept);
    for (const auto& p : result.pruned) report << line << '\t' << to_string(p.reason) << '\n';
  }
  return kExitOk;
}

void apply_config(const Config& flags, Config& cfg, CLI::App& app) {
  if (flags.config.empty()) return;
  std::ifstream in(existing(flags.config));
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(flags.config, 0, e.what());
  }
  if (!j.is_object()) throw ParseError(flags.config, 0, "config must be a JSON object");
  auto given = [&](const std::string& flag) {
    for (CLI::App* a = &app; a != nullptr;) {
      CLI::Option* opt = nullptr;
      try {
        opt = a->get_option(flag);
      } catch (const CLI::OptionNotFound&) {
      }
      if (opt != nullptr && opt->count() > 0) return true;
      auto subs = a->get_subcommands();
      a = subs.empty() ? nullptr : subs.front();
    }
    return false;
  };
  auto pick = [&](const char* key, const std::string& flag, auto& field) {
    if (!j.contains(key) || given(flag)) return;
    try {
      j.at(key).get_to(field);
    } catch (const json::exception& e) {
      throw ParseError(flags.config, 0, std::string("bad value for '") + key + "': " + e.what());
    }
  };
  pick("data_dir", "--data-dir", cfg.data_dir);
  pick("rules", "--rules", cfg.rules);
  pick("lexicon", "--lexicon", cfg.lexicon);
  pick("affixes", "--affixes", cfg.affixes);
  pick("from", "--from", cfg.from);
  pick("to", "--to", cfg.to);
  pick("k", "-k", cfg.k);
  pick("beta", "--beta", cfg.beta);
  pick("char_n", "--char-n", cfg.char_n);
  pick("word_n", "--word-n", cfg.word_n);
  pick("per_item", "--per-item", cfg.per_item);
  pick("jobs", "--jobs", cfg.jobs);
  pick("normalize_anusvara", "--normalize-anusvara", cfg.normalize_anusvara);
  pick("join_check", "--join-check", cfg.join_check);
  pick("no_script_check", "--no-script-check", cfg.no_script_check);
  pick("no_empty_check", "--no-empty-check", cfg.no_empty_check);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sanskrit segmentation, sandhi, transliteration and evaluation toolkit", "shabda"};
  app.require_subcommand(1);
  app.fallthrough();
  Config flags;

  app.add_option("--config", flags.config, "JSON config file; command-line flags win");
  app.add_option("--data-dir", flags.data_dir, "Directory with default tables (env SHABDA_DATA_DIR)");
  app.add_option("--rules", flags.rules, "Sandhi rule TSV");
  app.add_option("--lexicon", flags.lexicon, "Lexicon TSV (stem<TAB>count)");
  app.add_option("--affixes", flags.affixes, "Hindi affix list");
  app.add_option("--from", flags.from, "Input script: devanagari | slp1 | iso15919");
  app.add_option("--to", flags.to, "Output script: devanagari | slp1 | iso15919");
  app.add_option("-k", flags.k, "Number of segmentations per word");
  app.add_option("--beta", flags.beta, "chrF++ recall weight");
  app.add_option("--char-n", flags.char_n, "chrF++ character n-gram order");
  app.add_option("--word-n", flags.word_n, "chrF++ word n-gram order");
  app.add_flag("--per-item", flags.per_item, "Include per-item scores in reports");
  app.add_option("--jobs", flags.jobs, "Worker threads for per-line commands")
      ->check(CLI::Range(1u, 256u));
  app.add_option("-i,--input", flags.input, "Read from FILE instead of stdin");
  app.add_option("-o,--output", flags.output, "Write to FILE instead of stdout");

  auto* translit = app.add_subcommand("translit", "Transliterate lines between scripts");
  auto* normalize = app.add_subcommand("normalize", "Anusvara to varga nasal before stops");
  auto* sjoin = app.add_subcommand("sandhi-join", "Join '+'-separated SLP1 words with sandhi");
  auto* ssplit = app.add_subcommand("sandhi-split", "List sandhi split candidates");
  auto* seg = app.add_subcommand("segment", "Segment SLP1 compounds");
  auto* enc = app.add_subcommand("encode", "a+b -> &a+b$");
  auto* dec = app.add_subcommand("decode", "&a+b$ -> a+b");
  auto* aug = app.add_subcommand("augment", "Build augmented translation inputs from a dictionary TSV");
  aug->add_option("--coverage-report", flags.coverage_report, "Write coverage JSON to FILE");
  auto* eseg = app.add_subcommand("eval-seg", "LPA, SPA, P/R/F1 and PM");
  eseg->add_option("--predictions", flags.predictions, "JSON-lines predictions file");
  eseg->add_option("--gold", flags.gold, "Gold corpus TSV; predictions are read line by line");
  eseg->add_flag("--normalize-anusvara", flags.normalize_anusvara,
                 "Normalize anusvara in segments before comparing");
  auto* echrf = app.add_subcommand("eval-chrf", "Corpus chrF++");
  echrf->add_option("--hyp", flags.hyp, "Hypotheses, one per line");
  echrf->add_option("--ref", flags.ref, "References, one per line");
  auto* cstats = app.add_subcommand("corpus-stats", "Summary statistics of a segmentation corpus");
  auto* prune = app.add_subcommand("prune", "Drop invalid corpus instances");
  prune->add_flag("--join-check", flags.join_check, "Also drop gold splits that do not re-join");
  prune->add_flag("--no-script-check", flags.no_script_check, "Skip script validation");
  prune->add_flag("--no-empty-check", flags.no_empty_check, "Skip the empty-segment check");
  prune->add_option("--pruned-report", flags.pruned_report, "Write line<TAB>reason to FILE");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("shabda");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Config cfg = flags;
    apply_config(flags, cfg, app);
    if (cfg.jobs == 0) cfg.jobs = 1;

    std::ifstream file_in;
    std::istream* src = &in;
    if (!cfg.input.empty()) {
      file_in.open(existing(cfg.input));
      if (!file_in) throw IoError("cannot open " + cfg.input);
      src = &file_in;
    }
    std::ofstream file_out;
    std::ostream* dst = &out;
    if (!cfg.output.empty()) {
      file_out.open(cfg.output, std::ios::binary);
      if (!file_out) throw IoError("cannot write " + cfg.output);
      dst = &file_out;
    }

    int rc = kExitOk;
    if (translit->parsed()) rc = cmd_translit(cfg, *src, *dst, err);
    else if (normalize->parsed()) rc = cmd_normalize(cfg, *src, *dst, err);
    else if (sjoin->parsed()) rc = cmd_sandhi_join(cfg, *src, *dst, err);
    else if (ssplit->parsed()) rc = cmd_sandhi_split(cfg, *src, *dst, err);
    else if (seg->parsed()) rc = cmd_segment(cfg, *src, *dst, err);
    else if (enc->parsed()) rc = cmd_encode(cfg, *src, *dst, err);
    else if (dec->parsed()) rc = cmd_decode(cfg, *src, *dst, err);
    else if (aug->parsed()) rc = cmd_augment(cfg, *src, *dst, err);
    else if (eseg->parsed()) rc = cmd_eval_seg(cfg, *src, *dst);
    else if (echrf->parsed()) rc = cmd_eval_chrf(cfg, *dst);
    else if (cstats->parsed()) rc = cmd_corpus_stats(cfg, *src, *dst);
    else if (prune->parsed()) rc = cmd_prune(cfg, *src, *dst, err);
    dst->flush();
    return rc;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kExitData;
  } catch (const ScriptViolation& e) {
    err << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace shabda::cli
