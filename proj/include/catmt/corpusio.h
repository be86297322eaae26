#ifndef CATMT_CORPUSIO_H
#define CATMT_CORPUSIO_H

#include <string>
#include <unordered_map>
#include <vector>

#include "catmt/types.h"

namespace catmt {

struct PreprocessConfig {
  bool lowercase = true;
  bool number_placeholder = true;  // all-digit tokens -> <num>
  bool spec_placeholder = true;    // digit/letter mixes (6S, 1080p) -> <spec>
};

// Whitespace/punctuation tokenization followed by the placeholder rules,
// all-digits first, digit-letter mix second. Idempotent.
TokenSeq preprocess(const std::string& raw, const PreprocessConfig& cfg = {});

enum class CorpusFormat {
  kTrain,    // source \t target \t category_label
  kDevTest,  // source \t category_label \t ref1 [\t ref2 ...]
};

Corpus read_corpus(const std::string& path, CorpusFormat format, const CategorySet& cats);
void write_corpus(const Corpus& records, const std::string& path, CorpusFormat format,
                  const CategorySet& cats);

class Vocabulary {
 public:
  static constexpr WordId kUnk = 0;
  static constexpr WordId kBos = 1;
  static constexpr WordId kEos = 2;
  static constexpr WordId kNum = 3;
  static constexpr WordId kSpec = 4;
  static constexpr int kNumReserved = 5;

  Vocabulary();

  WordId lookup(const std::string& token) const;  // kUnk for unknown tokens
  const std::string& word(WordId id) const { return words_.at(id); }
  int size() const { return static_cast<int>(words_.size()); }
  bool contains(const std::string& token) const;

  std::vector<WordId> map(const TokenSeq& tokens) const;

  static Vocabulary load(const std::string& path);
  void save(const std::string& path) const;

  // Frequency-ranked vocabulary, ties broken lexicographically; tokens with
  // count < min_count are dropped, total size capped at max_size.
  friend Vocabulary build_vocabulary(const std::vector<const TokenSeq*>& corpus, int max_size,
                                     int min_count);

 private:
  WordId add(const std::string& token);
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> index_;
};

Vocabulary build_vocabulary(const std::vector<const TokenSeq*>& corpus, int max_size,
                            int min_count = 1);
Vocabulary build_vocabulary(const Corpus& corpus, bool target_side, int max_size,
                            int min_count = 1);

}  // namespace catmt

#endif
