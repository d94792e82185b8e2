#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace shabda {

enum class ScriptTag { Devanagari, Slp1, Iso15919 };

std::string_view to_string(ScriptTag tag);
/// Accepts "devanagari"/"deva", "slp1", "iso15919"/"iso" (case-insensitive).
ScriptTag parse_script(std::string_view name);

/// UTF-8 text labelled with the script it is written in.
struct TaggedText {
  std::string text;
  ScriptTag script = ScriptTag::Slp1;

  friend bool operator==(const TaggedText&, const TaggedText&) = default;
};

struct Violation {
  std::size_t offset = 0;  // code points into the NFC text
  char32_t code_point = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// The standard SLP1 letters (one ASCII byte per sound).
bool is_slp1_letter(char c);
bool is_slp1_word(std::string_view word);

/// Character-mapping and varga tables, loaded once and shared read-only.
class ScriptTables {
 public:
  static constexpr int kVargas = 5;

  static ScriptTables load(const std::filesystem::path& translit_tsv,
                           const std::filesystem::path& varga_tsv);
  /// Loads translit.tsv and varga.tsv from `dir`.
  static ScriptTables load_dir(const std::filesystem::path& dir);
  static ScriptTables parse(std::istream& translit, std::istream& varga);

  /// Varga consonant at (row, column), both 0-based, as a UTF-8 string.
  const std::string& varga(ScriptTag script, int row, int column) const;

  bool is_legal(ScriptTag script, char32_t c) const;

 private:
  friend TaggedText transliterate(const TaggedText&, ScriptTag,
                                  const ScriptTables&);
  friend TaggedText normalize_anusvara(const TaggedText&, const ScriptTables&);
  friend std::vector<Violation> anusvara_warnings(const TaggedText&,
                                                  const ScriptTables&);

  enum class UnitKind { Consonant, Vowel, Other };

  struct LatinUnit {
    UnitKind kind = UnitKind::Other;
    char32_t devanagari = 0;  // consonant, independent vowel or sign
    char32_t vowel_sign = 0;  // dependent form; 0 for the inherent vowel
  };

  struct LatinScheme {
    std::map<std::u32string, LatinUnit> units;
    std::unordered_map<char32_t, std::u32string> from_devanagari;
    std::u32string inherent;
    std::size_t max_unit = 1;
    std::unordered_set<char32_t> legal;
  };

  const LatinScheme& scheme(ScriptTag script) const;
  void finish();

  LatinScheme slp1_;
  LatinScheme iso_;
  std::unordered_set<char32_t> devanagari_mapped_;
  // [script][row][column]
  std::array<std::array<std::array<std::string, kVargas>, kVargas>, 3> varga_{};
  // Per script: first code point of columns 1-4 -> (row, needs exact unit).
  std::array<std::unordered_map<std::u32string, int>, 3> varga_stop_rows_{};
};

TaggedText transliterate(const TaggedText& input, ScriptTag target,
                         const ScriptTables& tables);

/// Anusvara before a varga stop (columns 1-4) becomes that varga's nasal;
/// in Devanagari the nasal carries a virama. Other anusvaras are kept.
TaggedText normalize_anusvara(const TaggedText& input,
                              const ScriptTables& tables);

std::vector<Violation> validate(const TaggedText& input,
                                const ScriptTables& tables);

/// Word-final anusvaras, which normalization leaves unchanged.
std::vector<Violation> anusvara_warnings(const TaggedText& input,
                                         const ScriptTables& tables);

}  // namespace shabda
