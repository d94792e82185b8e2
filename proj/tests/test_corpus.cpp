#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "shabda/corpus.hpp"
#include "shabda/error.hpp"
#include "support.hpp"

using namespace shabda;
using testing_support::default_rules;
using testing_support::tables;

namespace {

std::vector<SegInstance> parse(const std::string& text, ScriptTag script = ScriptTag::Slp1,
                               bool validate = true) {
  std::istringstream in(text);
  return parse_seg_corpus(in, script, tables(), "test", validate);
}

SegInstance inst(const std::string& compound, std::vector<std::string> segs,
                 ScriptTag script = ScriptTag::Slp1) {
  SegInstance i;
  i.compound = {compound, script};
  for (auto& s : segs) i.gold_segments.push_back({s, script});
  i.source = "test";
  return i;
}

}  // namespace

TEST_CASE("load: examples") {
  auto c = parse("tatrApi\ttatra+api\n");
  REQUIRE(c.size() == 1);
  CHECK(c[0].gold_segments.size() == 2);
  CHECK(c[0].segment_texts() == std::vector<std::string>{"tatra", "api"});
  CHECK(c[0].line == 1);

  auto blanks = parse("\n# header\ntatrApi\ttatra+api\n\n   \nnarendra\tnara+indra\n");
  REQUIRE(blanks.size() == 2);
  CHECK(blanks[1].line == 6);

  try {
    parse("tatrApi\ttatra+api\ntatZra\ttat+ra\n");
    FAIL("expected ScriptViolation");
  } catch (const ScriptViolation& e) {
    CHECK(e.line() == 2);
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse("tatrApi tatra+api\n"), ParseError);
  CHECK_THROWS_AS(parse("\ttatra+api\n"), ParseError);
  CHECK_THROWS_AS(load_seg_corpus("/nonexistent.tsv", ScriptTag::Slp1, tables()), IoError);
}

TEST_CASE("load: Devanagari corpus") {
  auto c = parse("तत्रापि\tतत्र+अपि\n", ScriptTag::Devanagari);
  REQUIRE(c.size() == 1);
  CHECK(c[0].compound.script == ScriptTag::Devanagari);
  CHECK(c[0].gold_segments[1].text == "अपि");
}

TEST_CASE("load: streaming reader yields records one at a time") {
  std::istringstream in("a\ta\nb\tb\n");
  SegCorpusReader reader(in, ScriptTag::Slp1, tables());
  auto first = reader.next();
  REQUIRE(first);
  CHECK(first->compound.text == "a");
  CHECK(reader.next()->compound.text == "b");
  CHECK_FALSE(reader.next());
}

TEST_CASE("prune_invalid: examples") {
  std::vector<SegInstance> in = {inst("tatrApi", {"tatra", "api"}), inst("xyz", {}),
                                 inst("abc", {"a", "q"})};
  PruneOptions all;
  all.check_join = true;
  auto r = prune_invalid(in, default_rules(), tables(), all);
  REQUIRE(r.kept.size() == 1);
  CHECK(r.kept[0].compound.text == "tatrApi");
  REQUIRE(r.pruned.size() == 2);
  CHECK(r.pruned[0].reason == PruneReason::EmptySegments);
  CHECK(r.pruned[0].index == 1);
  CHECK(r.pruned[1].reason == PruneReason::JoinFailure);
  CHECK(to_string(PruneReason::JoinFailure) == "join-failure");

  // join check is off by default
  auto d = prune_invalid(in, default_rules(), tables());
  CHECK(d.kept.size() == 2);
}

TEST_CASE("prune_invalid: script check and toggles") {
  auto c = parse("tatrApi\ttatra+api\ntaZra\ttaZ+ra\nab\ta++b\n", ScriptTag::Slp1, false);
  REQUIRE(c.size() == 3);
  auto r = prune_invalid(c, default_rules(), tables());
  REQUIRE(r.pruned.size() == 2);
  CHECK(r.pruned[0].reason == PruneReason::ScriptViolation);
  CHECK(r.pruned[1].reason == PruneReason::EmptySegments);

  PruneOptions none;
  none.check_script = false;
  none.check_empty = false;
  CHECK(prune_invalid(c, default_rules(), tables(), none).pruned.empty());
}

TEST_CASE("prune_invalid: join check works on Devanagari corpora too") {
  auto c = parse("तत्रापि\tतत्र+अपि\nतत्रापि\tतत+अपि\n", ScriptTag::Devanagari);
  PruneOptions o;
  o.check_join = true;
  auto r = prune_invalid(c, default_rules(), tables(), o);
  CHECK(r.kept.size() == 1);
  CHECK(r.pruned.size() == 1);
}

TEST_CASE("property: pruning partitions the input and is idempotent") {
  std::mt19937 rng(4);
  std::vector<SegInstance> in;
  const std::vector<std::pair<std::string, std::vector<std::string>>> pool = {
      {"tatrApi", {"tatra", "api"}}, {"narendra", {"nara", "indra"}}, {"xyz", {}},
      {"abc", {"a", "q"}},           {"devAlaya", {"deva", "Alaya"}}, {"tatpuruza", {"tat", "puruza"}}};
  for (int i = 0; i < 200; ++i) {
    auto& p = pool[rng() % pool.size()];
    in.push_back(inst(p.first, p.second));
  }
  PruneOptions o;
  o.check_join = true;
  auto r = prune_invalid(in, default_rules(), tables(), o);
  CHECK(r.kept.size() + r.pruned.size() == in.size());
  std::vector<bool> seen(in.size(), false);
  for (auto& p : r.pruned) seen[p.index] = true;
  std::size_t k = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (seen[i]) continue;
    REQUIRE(k < r.kept.size());
    CHECK(r.kept[k].compound.text == in[i].compound.text);
    ++k;
  }
  CHECK(k == r.kept.size());
  auto again = prune_invalid(r.kept, default_rules(), tables(), o);
  CHECK(again.pruned.empty());
  CHECK(again.kept.size() == r.kept.size());
}

TEST_CASE("convert_corpus") {
  auto deva = parse("तत्रापि\tतत्र+अपि\nनरेन्द्र\tनर+इन्द्र\n", ScriptTag::Devanagari);
  auto slp = convert_corpus(deva, ScriptTag::Slp1, tables());
  REQUIRE(slp.size() == 2);
  CHECK(slp[0].compound == TaggedText{"tatrApi", ScriptTag::Slp1});
  CHECK(slp[1].segment_texts() == std::vector<std::string>{"nara", "indra"});
  CHECK(convert_corpus(slp, ScriptTag::Slp1, tables())[1].compound.text == "narendra");

  auto back = convert_corpus(slp, ScriptTag::Devanagari, tables());
  for (std::size_t i = 0; i < deva.size(); ++i) {
    CHECK(back[i].compound == deva[i].compound);
    CHECK(back[i].gold_segments == deva[i].gold_segments);
  }
  auto iso = convert_corpus(slp, ScriptTag::Iso15919, tables());
  auto round = convert_corpus(iso, ScriptTag::Slp1, tables());
  CHECK(round[0].compound == slp[0].compound);

  auto tamil = deva;
  tamil.push_back(inst("தமிழ்", {"தமிழ்"}, ScriptTag::Devanagari));
  try {
    convert_corpus(tamil, ScriptTag::Slp1, tables());
    FAIL("expected ConversionError");
  } catch (const ConversionError& e) {
    CHECK(e.instance() == 2);
    CHECK(e.code_point() == 0x0BA4);
  }
}

TEST_CASE("stats") {
  std::vector<SegInstance> c = {inst("ab", {"a", "b"}), inst("abc", {"a", "b", "c"})};
  auto s = stats(c);
  CHECK(s.instances == 2);
  CHECK(s.segments == 5);
  CHECK(s.segment_histogram == std::map<std::size_t, std::size_t>{{2, 1}, {3, 1}});
  CHECK(s.inventory.at(U'a') == 2);
  CHECK(s.pruned == 0);

  CHECK(stats({}) == CorpusStats{});

  std::vector<SegInstance> rev(c.rbegin(), c.rend());
  CHECK(stats(rev) == s);

  std::vector<PrunedInstance> pruned = {{inst("xyz", {}), PruneReason::EmptySegments, 3}};
  auto sp = stats(c, pruned);
  CHECK(sp.pruned == 1);
  CHECK(sp.pruned_reasons.at("empty-segments") == 1);
}

TEST_CASE("write_seg_instance roundtrips through the reader") {
  auto c = parse("tatrApi\ttatra+api\nnarendra\tnara+indra\n");
  std::ostringstream out;
  for (auto& i : c) write_seg_instance(out, i);
  CHECK(out.str() == "tatrApi\ttatra+api\nnarendra\tnara+indra\n");
}
