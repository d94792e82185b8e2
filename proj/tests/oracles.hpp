// Independent reference implementations used by the unit tests and the
// acceptance binary. Nothing here calls the code under test except join(),
// which defines what a valid split is.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "shabda/sandhi.hpp"
#include "shabda/script.hpp"
#include "shabda/segmenter.hpp"
#include "shabda/unicode.hpp"

namespace oracle {

// chrF++ by naive counting. Per order, F_beta simplifies to
// (1+b^2) m / (b^2 |ref| + |hyp|), which avoids computing P and R at all.
inline double chrf(const std::string& hyp_utf8, const std::string& ref_utf8, int char_n = 6,
                   int word_n = 2, double beta = 2.0) {
  using U = std::u32string;
  auto strip = [](const U& s) {
    U out;
    for (char32_t c : s)
      if (!shabda::is_space(c)) out += c;
    return out;
  };
  auto words = [](const U& s) {
    std::vector<U> out(1);
    for (char32_t c : s) {
      if (shabda::is_space(c)) {
        if (!out.back().empty()) out.emplace_back();
      } else {
        out.back() += c;
      }
    }
    if (out.back().empty()) out.pop_back();
    return out;
  };
  auto grams_of = [](const auto& units, int n) {
    using Unit = std::decay_t<decltype(units[0])>;
    std::vector<std::vector<Unit>> g;
    for (int i = 0; i + n <= static_cast<int>(units.size()); ++i)
      g.emplace_back(units.begin() + i, units.begin() + i + n);
    return g;
  };
  auto score_order = [&](const auto& h, const auto& r, double& sum, int& used) {
    if (h.empty() && r.empty()) return;
    ++used;
    // clipped matches: for every distinct hypothesis gram, min of both counts
    double m = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      bool first = true;
      for (std::size_t j = 0; j < i; ++j)
        if (h[j] == h[i]) first = false;
      if (!first) continue;
      long ch = std::count(h.begin(), h.end(), h[i]);
      long cr = std::count(r.begin(), r.end(), h[i]);
      m += static_cast<double>(std::min(ch, cr));
    }
    const double b2 = beta * beta;
    if (m > 0) sum += (1 + b2) * m / (b2 * static_cast<double>(r.size()) + static_cast<double>(h.size()));
  };
  const U hyp = shabda::to_u32(hyp_utf8);
  const U ref = shabda::to_u32(ref_utf8);
  const U hc = strip(hyp), rc = strip(ref);
  std::vector<char32_t> hcv(hc.begin(), hc.end()), rcv(rc.begin(), rc.end());
  const auto hw = words(hyp), rw = words(ref);
  double sum = 0;
  int used = 0;
  for (int n = 1; n <= char_n; ++n) score_order(grams_of(hcv, n), grams_of(rcv, n), sum, used);
  for (int n = 1; n <= word_n; ++n) score_order(grams_of(hw, n), grams_of(rw, n), sum, used);
  return used == 0 ? 0.0 : 100.0 * sum / used;
}

// Every (left, right) whose join is `w`, found by trying each rule at every
// interior span plus every plain cut.
struct Split {
  std::string left, right;
  std::size_t location;
};

inline std::vector<Split> splits(const std::string& w, const shabda::RuleTable& rules) {
  std::vector<Split> out;
  std::set<std::pair<std::string, std::string>> seen;
  auto consider = [&](std::string l, std::string r) {
    if (l.empty() || r.empty()) return;
    if (!shabda::is_slp1_word(l) || !shabda::is_slp1_word(r)) return;
    auto j = shabda::join_detailed(l, r, rules);
    if (j.text != w || j.location == 0 || j.location >= w.size()) return;
    if (!seen.insert({l, r}).second) return;
    out.push_back({std::move(l), std::move(r), j.location});
  };
  for (std::size_t i = 0; i <= w.size(); ++i) {
    consider(w.substr(0, i), w.substr(i));
    for (const auto& rule : rules.rules()) {
      if (w.compare(i, rule.fused.size(), rule.fused) != 0 || i + rule.fused.size() > w.size())
        continue;
      consider(w.substr(0, i) + rule.left_suffix,
               rule.right_prefix + w.substr(i + rule.fused.size()));
    }
  }
  return out;
}

struct Analysis {
  std::vector<std::string> segments;
  double score;
};

// All segment lists reachable by splitting the rightmost segment off,
// recursively, with strictly increasing split locations.
inline void enumerate(const std::string& w, std::size_t budget, std::size_t bound,
                      const shabda::RuleTable& rules, std::vector<std::string>& suffix,
                      std::set<std::vector<std::string>>& out,
                      std::map<std::string, std::vector<Split>>& memo) {
  std::vector<std::string> whole{w};
  whole.insert(whole.end(), suffix.rbegin(), suffix.rend());
  out.insert(whole);
  if (budget < 2) return;
  auto it = memo.find(w);
  if (it == memo.end()) it = memo.emplace(w, splits(w, rules)).first;
  const auto candidates = it->second;
  for (const auto& s : candidates) {
    if (s.location >= bound) continue;
    suffix.push_back(s.right);
    enumerate(s.left, budget - 1, s.location, rules, suffix, out, memo);
    suffix.pop_back();
  }
}

inline double log_prob(const std::map<std::string, std::uint64_t>& lex, const std::string& s,
                       double alpha) {
  double total = 0;
  for (auto& [_, c] : lex) total += static_cast<double>(c);
  auto it = lex.find(s);
  double c = it == lex.end() ? 0.0 : static_cast<double>(it->second);
  return std::log((c + alpha) / (total + alpha * static_cast<double>(lex.size() + 1)));
}

// Every analysis, best first (score desc, fewer segments, list order).
inline std::vector<Analysis> rank_all(const std::string& w,
                                      const std::map<std::string, std::uint64_t>& lex,
                                      const shabda::RuleTable& rules, double alpha = 0.1,
                                      std::size_t max_segments = 8) {
  std::set<std::vector<std::string>> found;
  std::vector<std::string> suffix;
  std::map<std::string, std::vector<Split>> memo;
  enumerate(w, max_segments, w.size(), rules, suffix, found, memo);
  std::vector<Analysis> all;
  for (const auto& segs : found) {
    double s = 0;
    for (const auto& seg : segs) s += log_prob(lex, seg, alpha);
    all.push_back({segs, s});
  }
  std::sort(all.begin(), all.end(), [](const Analysis& a, const Analysis& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.segments.size() != b.segments.size()) return a.segments.size() < b.segments.size();
    return a.segments < b.segments;
  });
  return all;
}

inline bool unambiguous(const std::vector<Analysis>& ranked) {
  return ranked.size() == 1 || ranked[0].score - ranked[1].score > 1e-9;
}

// Random SLP1 word drawn from a small syllable inventory.
inline std::string random_stem(std::mt19937& rng, int min_syl = 1, int max_syl = 3) {
  static const std::vector<std::string> onsets = {"k", "g", "c", "j", "t", "d", "n", "p", "b", "m",
                                                  "y", "r", "l", "v", "S", "s", "h", "D", "B", "kz",
                                                  "tr", "pr", "st", ""};
  static const std::vector<std::string> vowels = {"a", "a", "a", "A", "i", "I", "u", "U", "e", "o",
                                                  "E", "O", "f"};
  std::uniform_int_distribution<int> syl(min_syl, max_syl);
  std::uniform_int_distribution<std::size_t> on(0, onsets.size() - 1), vo(0, vowels.size() - 1);
  std::string w;
  int n = syl(rng);
  for (int i = 0; i < n; ++i) {
    std::string o = onsets[on(rng)];
    if (i > 0 && o.empty()) o = "r";
    w += o + vowels[vo(rng)];
  }
  std::uniform_int_distribution<int> coda(0, 9);
  switch (coda(rng)) {
    case 0: w += "t"; break;
    case 1: w += "m"; break;
    case 2: w += "H"; break;
    default: break;
  }
  return w;
}

}  // namespace oracle
