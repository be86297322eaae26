#include "catmt/corpusio.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

#include "catmt/util.h"

namespace catmt {

CategorySet::CategorySet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (size_t i = 0; i < labels_.size(); ++i) {
    for (size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j])
        throw DataError("duplicate category label: " + labels_[i]);
    }
  }
}

int CategorySet::id_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

CategorySet CategorySet::read(const std::string& path) {
  std::vector<std::string> labels;
  for (const auto& line : read_lines(path)) {
    std::string l = trim(line);
    if (!l.empty()) labels.push_back(l);
  }
  if (labels.size() < 2) throw DataError(path + ": need at least 2 category labels");
  return CategorySet(labels);
}

void CategorySet::write(const std::string& path) const { write_lines(path, labels_); }

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

bool all_digits_with_separators(const std::string& t) {
  bool digit_seen = false;
  for (size_t i = 0; i < t.size(); ++i) {
    unsigned char c = t[i];
    if (std::isdigit(c)) {
      digit_seen = true;
    } else if ((c == '.' || c == ',') && i > 0 && i + 1 < t.size() &&
               std::isdigit(static_cast<unsigned char>(t[i - 1])) &&
               std::isdigit(static_cast<unsigned char>(t[i + 1]))) {
      // thousands/decimal separator
    } else {
      return false;
    }
  }
  return digit_seen;
}

bool digit_letter_mix(const std::string& t) {
  bool digit = false, letter = false;
  for (unsigned char c : t) {
    if (std::isdigit(c))
      digit = true;
    else if (std::isalpha(c) || c >= 0x80)
      letter = true;
    else
      return false;
  }
  return digit && letter;
}

const char* kAtomicTokens[] = {"<unk>", "<s>", "</s>", "<num>", "<spec>"};

bool is_atomic(const std::string& t) {
  for (const char* a : kAtomicTokens)
    if (t == a) return true;
  return false;
}

// Split a whitespace-free chunk into runs of word chars and runs of
// punctuation. '.' and ',' between digits stay attached to the number.
void split_chunk(const std::string& chunk, TokenSeq& out) {
  if (is_atomic(chunk)) {
    out.push_back(chunk);
    return;
  }
  std::string cur;
  bool cur_word = false;
  for (size_t i = 0; i < chunk.size(); ++i) {
    unsigned char c = chunk[i];
    bool word = is_word_char(c);
    if (!word && (c == '.' || c == ',') && i > 0 && i + 1 < chunk.size() &&
        std::isdigit(static_cast<unsigned char>(chunk[i - 1])) &&
        std::isdigit(static_cast<unsigned char>(chunk[i + 1]))) {
      word = true;
    }
    if (!cur.empty() && word != cur_word) {
      out.push_back(cur);
      cur.clear();
    }
    cur.push_back(static_cast<char>(c));
    cur_word = word;
  }
  if (!cur.empty()) out.push_back(cur);
}

}  // namespace

TokenSeq preprocess(const std::string& raw, const PreprocessConfig& cfg) {
  TokenSeq tokens;
  for (const auto& chunk : split_ws(raw)) split_chunk(chunk, tokens);
  for (auto& t : tokens) {
    if (is_atomic(t)) continue;
    if (cfg.number_placeholder && all_digits_with_separators(t)) {
      t = "<num>";
    } else if (cfg.spec_placeholder && digit_letter_mix(t)) {
      t = "<spec>";
    } else if (cfg.lowercase) {
      t = lowercase(t);
    }
  }
  return tokens;
}

namespace {

std::string line_error(const std::string& path, size_t lineno, const std::string& what) {
  return path + ":" + std::to_string(lineno) + ": " + what;
}

}  // namespace

Corpus read_corpus(const std::string& path, CorpusFormat format, const CategorySet& cats) {
  Corpus records;
  const auto lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = split(lines[i], '\t');
    ParallelRecord rec;
    if (format == CorpusFormat::kTrain) {
      if (fields.size() != 3)
        throw DataError(line_error(path, i + 1, "expected 3 tab-separated fields, got " +
                                                    std::to_string(fields.size())));
      rec.source = split_ws(fields[0]);
      rec.target = split_ws(fields[1]);
      rec.category = cats.id_of(fields[2]);
      if (rec.category < 0)
        throw DataError(line_error(path, i + 1, "unknown category label '" + fields[2] + "'"));
      if (rec.source.empty() || rec.target.empty())
        throw DataError(line_error(path, i + 1, "empty source or target side"));
    } else {
      if (fields.size() < 3)
        throw DataError(line_error(path, i + 1, "expected source, category and >=1 reference"));
      rec.source = split_ws(fields[0]);
      rec.category = cats.id_of(fields[1]);
      if (rec.category < 0)
        throw DataError(line_error(path, i + 1, "unknown category label '" + fields[1] + "'"));
      rec.target = split_ws(fields[2]);
      for (size_t r = 3; r < fields.size(); ++r) rec.extra_refs.push_back(split_ws(fields[r]));
      if (rec.source.empty())
        throw DataError(line_error(path, i + 1, "empty source side"));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_corpus(const Corpus& records, const std::string& path, CorpusFormat format,
                  const CategorySet& cats) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open file for writing: " + path);
  for (const auto& rec : records) {
    if (format == CorpusFormat::kTrain) {
      out << join(rec.source) << '\t' << join(rec.target) << '\t' << cats.label(rec.category)
          << '\n';
    } else {
      out << join(rec.source) << '\t' << cats.label(rec.category) << '\t' << join(rec.target);
      for (const auto& ref : rec.extra_refs) out << '\t' << join(ref);
      out << '\n';
    }
  }
}

Vocabulary::Vocabulary() {
  add("<unk>");
  add("<s>");
  add("</s>");
  add("<num>");
  add("<spec>");
}

WordId Vocabulary::add(const std::string& token) {
  auto it = index_.find(token);
  if (it != index_.end()) return it->second;
  WordId id = static_cast<WordId>(words_.size());
  words_.push_back(token);
  index_.emplace(token, id);
  return id;
}

WordId Vocabulary::lookup(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? kUnk : it->second;
}

bool Vocabulary::contains(const std::string& token) const {
  return index_.find(token) != index_.end();
}

std::vector<WordId> Vocabulary::map(const TokenSeq& tokens) const {
  std::vector<WordId> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(lookup(t));
  return ids;
}

Vocabulary Vocabulary::load(const std::string& path) {
  Vocabulary v;
  const auto lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string t = trim(lines[i]);
    if (t.empty()) continue;
    if (static_cast<int>(i) < kNumReserved) {
      if (t != v.words_[i])
        throw DataError(path + ": reserved entry mismatch at line " + std::to_string(i + 1));
    } else {
      v.add(t);
    }
  }
  return v;
}

void Vocabulary::save(const std::string& path) const { write_lines(path, words_); }

Vocabulary build_vocabulary(const std::vector<const TokenSeq*>& corpus, int max_size,
                            int min_count) {
  if (max_size < Vocabulary::kNumReserved)
    throw UsageError("vocabulary max_size must be >= " +
                     std::to_string(Vocabulary::kNumReserved));
  std::unordered_map<std::string, int64_t> counts;
  for (const TokenSeq* seq : corpus)
    for (const auto& t : *seq)
      if (!is_atomic(t)) ++counts[t];

  std::vector<std::pair<std::string, int64_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  Vocabulary v;
  for (const auto& [tok, cnt] : ranked) {
    if (cnt < min_count) break;
    if (v.size() >= max_size) break;
    v.add(tok);
  }
  return v;
}

Vocabulary build_vocabulary(const Corpus& corpus, bool target_side, int max_size, int min_count) {
  std::vector<const TokenSeq*> seqs;
  seqs.reserve(corpus.size());
  for (const auto& rec : corpus) seqs.push_back(target_side ? &rec.target : &rec.source);
  return build_vocabulary(seqs, max_size, min_count);
}

}  // namespace catmt
