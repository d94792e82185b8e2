#include "shabda/script.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "shabda/error.hpp"
#include "shabda/unicode.hpp"

namespace shabda {

namespace {

constexpr char32_t kVirama = 0x094D;
constexpr char32_t kNukta = 0x093C;
constexpr char32_t kAnusvaraDeva = 0x0902;
constexpr char32_t kInherentDeva = 0x0905;

bool is_deva_consonant(char32_t c) {
  return (c >= 0x0915 && c <= 0x0939) || (c >= 0x0958 && c <= 0x095F);
}

bool is_deva_vowel_sign(char32_t c) {
  return (c >= 0x093E && c <= 0x094C) || c == 0x0962 || c == 0x0963 ||
         c == 0x093A || c == 0x093B || c == 0x094E || c == 0x094F;
}

bool is_deva_independent_vowel(char32_t c) {
  return (c >= 0x0904 && c <= 0x0914) || c == 0x0960 || c == 0x0961;
}

bool is_deva_block(char32_t c) { return c >= 0x0900 && c <= 0x097F; }

int script_index(ScriptTag s) { return static_cast<int>(s); }

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, '\t')) cells.push_back(cell);
  if (!line.empty() && line.back() == '\t') cells.emplace_back();
  return cells;
}

bool skip_line(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line.empty() || line.front() == '#';
}

std::ifstream open_or_throw(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw IoError("cannot open " + p.string());
  return in;
}

}  // namespace

std::string_view to_string(ScriptTag tag) {
  switch (tag) {
    case ScriptTag::Devanagari:
      return "devanagari";
    case ScriptTag::Slp1:
      return "slp1";
    case ScriptTag::Iso15919:
      return "iso15919";
  }
  return "?";
}

ScriptTag parse_script(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "devanagari" || lower == "deva") return ScriptTag::Devanagari;
  if (lower == "slp1") return ScriptTag::Slp1;
  if (lower == "iso15919" || lower == "iso" || lower == "iso-15919")
    return ScriptTag::Iso15919;
  throw InvalidInput("unknown script '" + std::string(name) + "'");
}

bool is_slp1_letter(char c) {
  static constexpr std::string_view kLetters =
      "aAiIuUfFxXeEoOMH~'kKgGNcCjJYwWqQRtTdDnpPbBmyrlvSzshL";
  return c != '\0' && kLetters.find(c) != std::string_view::npos;
}

bool is_slp1_word(std::string_view word) {
  return !word.empty() && std::all_of(word.begin(), word.end(), is_slp1_letter);
}

ScriptTables ScriptTables::load(const std::filesystem::path& translit_tsv,
                                const std::filesystem::path& varga_tsv) {
  auto t = open_or_throw(translit_tsv);
  auto v = open_or_throw(varga_tsv);
  return parse(t, v);
}

ScriptTables ScriptTables::load_dir(const std::filesystem::path& dir) {
  return load(dir / "translit.tsv", dir / "varga.tsv");
}

ScriptTables ScriptTables::parse(std::istream& translit, std::istream& varga) {
  ScriptTables tables;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(translit, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    auto cells = split_tabs(line);
    if (cells.size() != 3) {
      throw ParseError("translit", lineno, "expected 3 tab-separated columns");
    }
    std::u32string deva = nfc(to_u32(cells[0]));
    if (deva.size() != 1 || !is_deva_block(deva[0])) {
      throw ParseError("translit", lineno,
                       "devanagari column must be one Devanagari code point");
    }
    char32_t d = deva[0];
    tables.devanagari_mapped_.insert(d);
    for (auto [column, scheme] :
         {std::pair{1, &tables.slp1_}, std::pair{2, &tables.iso_}}) {
      std::u32string key = nfc(to_u32(cells[static_cast<std::size_t>(column)]));
      if (key.empty()) throw ParseError("translit", lineno, "empty latin unit");
      scheme->from_devanagari.emplace(d, key);
      scheme->max_unit = std::max(scheme->max_unit, key.size());
      scheme->legal.insert(key.begin(), key.end());
      if (d == kInherentDeva && scheme->inherent.empty()) scheme->inherent = key;
      auto it = scheme->units.find(key);
      if (is_deva_vowel_sign(d)) {
        if (it == scheme->units.end()) {
          scheme->units.emplace(key, LatinUnit{UnitKind::Vowel, 0, d});
        } else if (it->second.kind == UnitKind::Vowel &&
                   it->second.vowel_sign == 0) {
          it->second.vowel_sign = d;
        }
      } else if (it == scheme->units.end()) {
        UnitKind kind = is_deva_consonant(d)          ? UnitKind::Consonant
                        : is_deva_independent_vowel(d) ? UnitKind::Vowel
                                                       : UnitKind::Other;
        scheme->units.emplace(key, LatinUnit{kind, d, 0});
      } else if (it->second.devanagari == 0) {
        it->second.devanagari = d;
      }
    }
  }
  if (tables.slp1_.inherent.empty() || tables.iso_.inherent.empty()) {
    throw ParseError("translit", lineno, "table has no row for the inherent vowel");
  }
  tables.iso_.legal.insert(U':');

  lineno = 0;
  int block = -1;
  int row = 0;
  std::array<bool, 3> seen{};
  while (std::getline(varga, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    if (line.front() == '@') {
      if (block >= 0 && row != kVargas) {
        throw ParseError("varga", lineno, "block has fewer than 5 rows");
      }
      block = script_index(parse_script(line.substr(1)));
      if (seen[static_cast<std::size_t>(block)]) {
        throw ParseError("varga", lineno, "duplicate script block");
      }
      seen[static_cast<std::size_t>(block)] = true;
      row = 0;
      continue;
    }
    if (block < 0) throw ParseError("varga", lineno, "row outside a script block");
    if (row >= kVargas) throw ParseError("varga", lineno, "block has more than 5 rows");
    auto cells = split_tabs(line);
    if (cells.size() != kVargas) {
      throw ParseError("varga", lineno, "expected 5 tab-separated columns");
    }
    for (int col = 0; col < kVargas; ++col) {
      std::u32string cell = nfc(to_u32(cells[static_cast<std::size_t>(col)]));
      if (cell.empty()) throw ParseError("varga", lineno, "empty cell");
      tables.varga_[static_cast<std::size_t>(block)][static_cast<std::size_t>(row)]
                   [static_cast<std::size_t>(col)] = to_utf8(cell);
      if (col < kVargas - 1) {
        if (!tables.varga_stop_rows_[static_cast<std::size_t>(block)]
                 .emplace(cell, row)
                 .second) {
          throw ParseError("varga", lineno, "varga table is not bijective");
        }
      }
    }
    ++row;
  }
  if (block >= 0 && row != kVargas) {
    throw ParseError("varga", lineno, "block has fewer than 5 rows");
  }
  for (std::size_t s = 0; s < 3; ++s) {
    if (!seen[s]) throw ParseError("varga", lineno, "missing script block");
    std::unordered_set<std::string> distinct;
    for (auto& r : tables.varga_[s])
      for (auto& c : r) distinct.insert(c);
    if (distinct.size() != kVargas * kVargas) {
      throw ParseError("varga", lineno, "varga table is not bijective");
    }
  }
  return tables;
}

const std::string& ScriptTables::varga(ScriptTag script, int row, int column) const {
  return varga_.at(static_cast<std::size_t>(script_index(script)))
      .at(static_cast<std::size_t>(row))
      .at(static_cast<std::size_t>(column));
}

const ScriptTables::LatinScheme& ScriptTables::scheme(ScriptTag script) const {
  return script == ScriptTag::Iso15919 ? iso_ : slp1_;
}

bool ScriptTables::is_legal(ScriptTag script, char32_t c) const {
  if (is_space(c) || is_marker(c) || is_passthrough(c)) return true;
  if (script == ScriptTag::Devanagari) return is_deva_block(c);
  return scheme(script).legal.contains(c);
}

namespace {

struct LatinWriter {
  std::u32string out;
  std::size_t last_start = std::u32string::npos;
  std::size_t last_len = 0;
};

}  // namespace

TaggedText transliterate(const TaggedText& input, ScriptTag target,
                         const ScriptTables& tables) {
  std::u32string text = nfc(to_u32(input.text));
  if (input.script == target) return {to_utf8(text), target};

  if (input.script != ScriptTag::Devanagari && target != ScriptTag::Devanagari) {
    auto pivot = transliterate(input, ScriptTag::Devanagari, tables);
    return transliterate(pivot, target, tables);
  }

  if (input.script == ScriptTag::Devanagari) {
    const auto& scheme = tables.scheme(target);
    const bool hiatus = target == ScriptTag::Iso15919;
    LatinWriter w;
    auto emit = [&](const std::u32string& unit) {
      if (hiatus && w.last_start != std::u32string::npos) {
        std::u32string joined = w.out.substr(w.last_start) + unit;
        std::size_t longest = 0;
        for (std::size_t len = std::min(scheme.max_unit, joined.size()); len > 0; --len) {
          if (scheme.units.contains(joined.substr(0, len))) {
            longest = len;
            break;
          }
        }
        if (longest > w.last_len) w.out.push_back(U':');
      }
      w.last_start = w.out.size();
      w.last_len = unit.size();
      w.out += unit;
    };
    auto lookup = [&](std::size_t offset) -> const std::u32string& {
      auto it = scheme.from_devanagari.find(text[offset]);
      if (it == scheme.from_devanagari.end())
        throw UnmappableCharacter(offset, text[offset]);
      return it->second;
    };
    for (std::size_t i = 0; i < text.size();) {
      char32_t c = text[i];
      if (is_space(c) || is_marker(c) || is_passthrough(c)) {
        w.out.push_back(c);
        w.last_start = std::u32string::npos;
        ++i;
        continue;
      }
      if (is_deva_consonant(c)) {
        emit(lookup(i));
        std::size_t j = i + 1;
        if (j < text.size() && is_deva_vowel_sign(text[j])) {
          emit(lookup(j));
          i = j + 1;
        } else if (j < text.size() && text[j] == kVirama) {
          i = j + 1;
        } else if (j < text.size() && text[j] == kNukta) {
          throw UnmappableCharacter(j, text[j]);
        } else {
          emit(scheme.inherent);
          i = j;
        }
        continue;
      }
      if (is_deva_vowel_sign(c) || c == kVirama || c == kNukta) {
        throw UnmappableCharacter(i, c);
      }
      emit(lookup(i));
      ++i;
    }
    return {to_utf8(w.out), target};
  }

  // Latin -> Devanagari.
  const auto& scheme = tables.scheme(input.script);
  const bool iso = input.script == ScriptTag::Iso15919;
  std::u32string out;
  bool pending = false;
  auto close = [&] {
    if (pending) out.push_back(kVirama);
    pending = false;
  };
  for (std::size_t i = 0; i < text.size();) {
    char32_t c = text[i];
    if (is_space(c) || is_marker(c) || is_passthrough(c)) {
      close();
      out.push_back(c);
      ++i;
      continue;
    }
    if (iso && c == U':') {
      ++i;
      continue;
    }
    const ScriptTables::LatinUnit* unit = nullptr;
    std::size_t len = std::min(scheme.max_unit, text.size() - i);
    for (; len > 0; --len) {
      auto it = scheme.units.find(text.substr(i, len));
      if (it != scheme.units.end()) {
        unit = &it->second;
        break;
      }
    }
    if (unit == nullptr) throw UnmappableCharacter(i, c);
    switch (unit->kind) {
      case ScriptTables::UnitKind::Consonant:
        close();
        out.push_back(unit->devanagari);
        pending = true;
        break;
      case ScriptTables::UnitKind::Vowel:
        if (pending) {
          if (unit->vowel_sign != 0) out.push_back(unit->vowel_sign);
          pending = false;
        } else {
          if (unit->devanagari == 0) throw UnmappableCharacter(i, c);
          out.push_back(unit->devanagari);
        }
        break;
      case ScriptTables::UnitKind::Other:
        close();
        out.push_back(unit->devanagari);
        break;
    }
    i += len;
  }
  close();
  return {to_utf8(out), ScriptTag::Devanagari};
}

TaggedText normalize_anusvara(const TaggedText& input, const ScriptTables& tables) {
  if (input.script == ScriptTag::Iso15919) {
    throw WrongScript("anusvara normalization requires Devanagari or SLP1 input");
  }
  const bool deva = input.script == ScriptTag::Devanagari;
  const char32_t anusvara = deva ? kAnusvaraDeva : U'M';
  const auto s = static_cast<std::size_t>(script_index(input.script));
  const auto& stops = tables.varga_stop_rows_[s];

  std::u32string text = nfc(to_u32(input.text));
  std::u32string out;
  out.reserve(text.size() + 4);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char32_t c = text[i];
    if (c == anusvara && i + 1 < text.size()) {
      auto it = stops.find(std::u32string(1, text[i + 1]));
      bool nukta = i + 2 < text.size() && text[i + 2] == kNukta;
      if (it != stops.end() && !nukta) {
        out += to_u32(tables.varga_[s][static_cast<std::size_t>(it->second)]
                                   [ScriptTables::kVargas - 1]);
        if (deva) out.push_back(kVirama);
        continue;
      }
    }
    out.push_back(c);
  }
  return {to_utf8(out), input.script};
}

std::vector<Violation> validate(const TaggedText& input, const ScriptTables& tables) {
  std::vector<Violation> violations;
  std::u32string text;
  try {
    text = nfc(to_u32(input.text));
  } catch (const InvalidInput&) {
    return {Violation{0, 0xFFFD}};
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!tables.is_legal(input.script, text[i])) violations.push_back({i, text[i]});
  }
  return violations;
}

std::vector<Violation> anusvara_warnings(const TaggedText& input,
                                         const ScriptTables& tables) {
  (void)tables;
  std::vector<Violation> warnings;
  if (input.script == ScriptTag::Iso15919) return warnings;
  const char32_t anusvara =
      input.script == ScriptTag::Devanagari ? kAnusvaraDeva : U'M';
  std::u32string text = nfc(to_u32(input.text));
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != anusvara) continue;
    std::size_t j = i + 1;
    while (j < text.size() && is_passthrough(text[j])) ++j;
    if (j == text.size() || is_space(text[j]) || is_marker(text[j])) {
      warnings.push_back({i, anusvara});
    }
  }
  return warnings;
}

}  // namespace shabda
