#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "shabda/error.hpp"
#include "shabda/sandhi.hpp"
#include "support.hpp"

using namespace shabda;
using testing_support::default_rules;
using testing_support::rules_from;

namespace {

bool has_pair(const std::vector<SplitCandidate>& cs, const std::string& l, const std::string& r) {
  return std::any_of(cs.begin(), cs.end(),
                     [&](const SplitCandidate& c) { return c.left == l && c.right == r; });
}

}  // namespace

TEST_CASE("join: worked examples") {
  CHECK(join("tatra", "api", default_rules()) == "tatrApi");
  CHECK(join("nara", "indra", default_rules()) == "narendra");
  CHECK(join("tat", "puruza", default_rules()) == "tatpuruza");
}

TEST_CASE("join: one example per shipped class") {
  const auto& r = default_rules();
  CHECK(join("deva", "Alaya", r) == "devAlaya");
  CHECK(join("kavi", "indra", r) == "kavIndra");
  CHECK(join("guru", "upadeSa", r) == "gurUpadeSa");
  CHECK(join("sUrya", "udaya", r) == "sUryodaya");
  CHECK(join("maha", "fzi", r) == "maharzi");
  CHECK(join("eka", "eka", r) == "ekEka");
  CHECK(join("jala", "oGa", r) == "jalOGa");
  CHECK(join("iti", "Adi", r) == "ityAdi");
  CHECK(join("su", "Agata", r) == "svAgata");
  CHECK(join("pitf", "AjYA", r) == "pitrAjYA");
  CHECK(join("rAmaH", "api", r) == "rAmo'pi");
  CHECK(join("rAmaH", "gacCati", r) == "rAmogacCati");
  CHECK(join("hariH", "gacCati", r) == "harirgacCati");
  CHECK(join("rAmaH", "ca", r) == "rAmaSca");
  CHECK(join("jagat", "ISa", r) == "jagadISa");
  CHECK(join("aham", "karomi", r) == "ahaMkaromi");
  CHECK(join("vane", "asti", r) == "vane'sti");
}

TEST_CASE("join: detailed result reports rule and location") {
  auto j = join_detailed("tatra", "api", default_rules());
  CHECK(j.text == "tatrApi");
  REQUIRE(j.rule != kPlainConcat);
  CHECK(default_rules()[j.rule].fused == "A");
  CHECK(j.location == 4);
  auto c = join_detailed("tat", "puruza", default_rules());
  CHECK(c.rule == kPlainConcat);
  CHECK(c.location == 3);
}

TEST_CASE("join: first matching rule wins") {
  auto t = rules_from("a\ti\te\tvowel\nra\ti\tX\tvowel\n");
  CHECK(join("nara", "indra", t) == "narendra");
  auto t2 = rules_from("ra\ti\tX\tvowel\na\ti\te\tvowel\n");
  CHECK(join("nara", "indra", t2) == "naXndra");
}

TEST_CASE("join: errors") {
  CHECK_THROWS_AS(join("", "api", default_rules()), InvalidInput);
  CHECK_THROWS_AS(join("tatra", "", default_rules()), InvalidInput);
  CHECK_THROWS_AS(join("tatra", "a+pi", default_rules()), InvalidInput);
  CHECK_THROWS_AS(join("तत्र", "api", default_rules()), InvalidInput);
}

TEST_CASE("join: empty table degrades to concatenation") {
  RuleTable empty;
  CHECK(join("tatra", "api", empty) == "tatraapi");
}

TEST_CASE("split_candidates: worked examples") {
  const auto t = split_candidates("tatrApi", default_rules());
  CHECK(has_pair(t, "tatra", "api"));
  CHECK(split_candidates("a", default_rules()).empty());
  const auto n = split_candidates("narendra", default_rules());
  CHECK(has_pair(n, "nara", "indra"));
}

TEST_CASE("split_candidates: candidate for tatra+api records the rule and location") {
  for (const auto& c : split_candidates("tatrApi", default_rules())) {
    if (c.left == "tatra" && c.right == "api") {
      CHECK(c.location == 4);
      REQUIRE(c.rule != kPlainConcat);
      CHECK(default_rules()[c.rule].category == SandhiCategory::Vowel);
    }
  }
}

TEST_CASE("split_candidates: agrees with a brute-force oracle") {
  std::mt19937 rng(11);
  const auto& rules = default_rules();
  for (int i = 0; i < 150; ++i) {
    std::string w = oracle::random_stem(rng, 1, 3) + oracle::random_stem(rng, 1, 2);
    CAPTURE(w);
    auto got = split_candidates(w, rules);
    auto want = oracle::splits(w, rules);
    std::set<std::tuple<std::string, std::string, std::size_t>> a, b;
    for (auto& c : got) a.insert({c.left, c.right, c.location});
    for (auto& c : want) b.insert({c.left, c.right, c.location});
    CHECK(a == b);
    CHECK(got.size() == a.size());
  }
}

TEST_CASE("split_candidates: ordered by location, then rule priority") {
  for (const std::string w : {"tatrApi", "narendra", "sUryodaya", "rAmo'pi", "harirgacCati"}) {
    auto cs = split_candidates(w, default_rules());
    CHECK(std::is_sorted(cs.begin(), cs.end(), [](const SplitCandidate& a, const SplitCandidate& b) {
      return std::pair(a.location, a.rule) < std::pair(b.location, b.rule);
    }));
    for (const auto& c : cs) {
      CHECK(c.location > 0);
      CHECK(c.location < w.size());
    }
  }
}

TEST_CASE("split_candidates: invalid input") {
  CHECK_THROWS_AS(split_candidates("", default_rules()), InvalidInput);
  CHECK_THROWS_AS(split_candidates("ta tra", default_rules()), InvalidInput);
}

TEST_CASE("property: soundness and determinism") {
  std::mt19937 rng(3);
  const auto& rules = default_rules();
  for (int i = 0; i < 300; ++i) {
    std::string w = oracle::random_stem(rng, 2, 5);
    auto first = split_candidates(w, rules);
    for (const auto& c : first) {
      CHECK(join(c.left, c.right, rules) == w);
      CHECK(join_detailed(c.left, c.right, rules).rule == c.rule);
    }
    CHECK(split_candidates(w, rules) == first);
  }
}

TEST_CASE("property: roundtrip completeness for every rule") {
  const auto& rules = default_rules();
  std::mt19937 rng(5);
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const auto& rule = rules[i];
    for (int rep = 0; rep < 3; ++rep) {
      std::string a = oracle::random_stem(rng) + rule.left_suffix;
      std::string b = rule.right_prefix + oracle::random_stem(rng);
      auto j = join_detailed(a, b, rules);
      if (j.rule != i) continue;  // shadowed by an earlier rule for this pair
      auto cs = split_candidates(j.text, rules);
      auto it = std::find_if(cs.begin(), cs.end(), [&](const SplitCandidate& c) {
        return c.left == a && c.right == b;
      });
      CAPTURE(a);
      CAPTURE(b);
      REQUIRE(it != cs.end());
      CHECK(it->rule == i);
    }
  }
}

TEST_CASE("property: appending a rule keeps rule-derived candidates") {
  const auto base_text = testing_support::slurp(testing_support::kDataDir / "sandhi_rules.tsv");
  const auto base = rules_from(base_text);
  const auto extended = rules_from(base_text + "ka\tta\tkwa\tconsonant\nOt\tq\tOqq\tconsonant\n");
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    std::string w = oracle::random_stem(rng, 2, 4);
    auto after = split_candidates(w, extended);
    for (const auto& c : split_candidates(w, base)) {
      if (c.rule == kPlainConcat) continue;
      CHECK(has_pair(after, c.left, c.right));
    }
  }
}

TEST_CASE("rule table: loading") {
  auto t = rules_from("# comment\na\ta\tA\tvowel\n\na\ti\te\tvowel\nt\tg\tdg\tconsonant\n");
  CHECK(t.size() == 3);
  CHECK(t[1].fused == "e");
  CHECK(rules_from("").empty());
  CHECK(join("nara", "indra", rules_from("")) == "naraindra");

  auto del = rules_from("aH\ta\t∅\tvisarga\n");
  CHECK(del[0].is_deletion());
  CHECK(join("rAmaH", "asti", del) == "rAmsti");

  CHECK_THROWS_AS(rules_from("a\ta\tA\tvowel\na\ta\tA\tvowel\n"), DuplicateRule);
  try {
    rules_from("a\ta\tA\tvowel\na\ti\te\tvowel\na\ta\tAA\tvowel\n");
  } catch (const DuplicateRule& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(rules_from("a\ta\tA\n"), ParseError);
  CHECK_THROWS_AS(rules_from("a\ta\tA\tvowels\n"), ParseError);
  CHECK_THROWS_AS(rules_from("\ta\tA\tvowel\n"), ParseError);
  CHECK_THROWS_AS(rules_from("ā\ta\tA\tvowel\n"), ParseError);
  try {
    rules_from("a\ta\tA\tvowel\n\nx\ty\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(RuleTable::load("/nonexistent/rules.tsv"), IoError);
}

TEST_CASE("rule table: shipped table is well formed") {
  const auto& rules = default_rules();
  CHECK(rules.size() > 100);
  std::size_t indexed = rules.deletions().size();
  for (char c = 0; c < 127; ++c) indexed += rules.by_fused_head(c).size();
  CHECK(indexed == rules.size());
  for (const auto& r : rules.rules()) {
    CHECK(is_slp1_word(r.left_suffix));
    CHECK(is_slp1_word(r.right_prefix));
    CHECK(r.category != SandhiCategory::Concat);
  }
  CHECK(to_string(SandhiCategory::Visarga) == "visarga");
  CHECK(parse_category("consonant") == SandhiCategory::Consonant);
}
