#ifndef CATMT_GENERATOR_H
#define CATMT_GENERATOR_H

#include <cstdint>
#include <string>
#include <vector>

#include "catmt/types.h"

namespace catmt {

// Synthetic polysemy corpus. Every record is a short "title": one polysemous
// source word whose correct translation is a pure function of (word,
// category), surrounded by filler words drawn from a shared pool and a
// category-specific pool. Targets follow source order up to adjacent swaps.
struct GeneratorSpec {
  int n_train = 5000;
  int n_dev = 500;
  int n_test = 500;
  int n_categories = 6;
  int n_polysemous = 20;
  double sense_skew = 0.8;  // probability of the majority sense
  int filler_vocab_size = 1200;
  int title_len_min = 3;
  int title_len_max = 8;
  double swap_prob = 0.1;
  uint64_t seed = 1;

  void validate() const;
  static GeneratorSpec read(const std::string& path);
  void write(const std::string& path) const;
};

// Answer key for one dev/test record; `source_word` is empty when the record
// carries no polysemous word.
struct PolysemyKey {
  std::string source_word;
  std::string expected_target;
};

struct SyntheticData {
  CategorySet categories;
  Corpus train, dev, test;
  std::vector<std::string> poly_words;
  // sense_table[word][category] = correct target token
  std::vector<std::vector<std::string>> sense_table;
  // majority_sense[word] = the target token of the most frequent sense
  std::vector<std::string> majority_sense;
  std::vector<PolysemyKey> dev_key, test_key;
};

SyntheticData generate_synthetic(const GeneratorSpec& spec);

void write_polysemy_key(const std::vector<PolysemyKey>& key, const std::string& path);
std::vector<PolysemyKey> read_polysemy_key(const std::string& path);

}  // namespace catmt

#endif
