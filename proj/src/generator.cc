#include "catmt/generator.h"

#include <algorithm>
#include <fstream>

#include "catmt/util.h"

namespace catmt {

void GeneratorSpec::validate() const {
  if (n_train < 1 || n_dev < 0 || n_test < 0) throw UsageError("generator: bad split sizes");
  if (n_categories < 2) throw UsageError("generator: n_categories must be >= 2");
  if (n_polysemous < 0) throw UsageError("generator: n_polysemous must be >= 0");
  if (!(sense_skew > 0.5 && sense_skew < 1.0))
    throw UsageError("generator: sense_skew must be in (0.5, 1.0)");
  if (filler_vocab_size < 2 * n_categories)
    throw UsageError("generator: filler_vocab_size must be >= 2 * n_categories");
  if (n_polysemous > filler_vocab_size)
    throw UsageError("generator: n_polysemous exceeds capacity (filler_vocab_size)");
  if (title_len_min < 1 || title_len_max < title_len_min)
    throw UsageError("generator: bad title_len_range");
  if (swap_prob < 0.0 || swap_prob > 1.0) throw UsageError("generator: bad swap_prob");
}

GeneratorSpec GeneratorSpec::read(const std::string& path) {
  GeneratorSpec spec;
  for (const auto& [key, value] : read_kv_file(path)) {
    if (key == "n_train") spec.n_train = std::stoi(value);
    else if (key == "n_dev") spec.n_dev = std::stoi(value);
    else if (key == "n_test") spec.n_test = std::stoi(value);
    else if (key == "n_categories") spec.n_categories = std::stoi(value);
    else if (key == "n_polysemous") spec.n_polysemous = std::stoi(value);
    else if (key == "sense_skew") spec.sense_skew = std::stod(value);
    else if (key == "filler_vocab_size") spec.filler_vocab_size = std::stoi(value);
    else if (key == "title_len_min") spec.title_len_min = std::stoi(value);
    else if (key == "title_len_max") spec.title_len_max = std::stoi(value);
    else if (key == "swap_prob") spec.swap_prob = std::stod(value);
    else if (key == "seed") spec.seed = std::stoull(value);
    else throw DataError(path + ": unknown generator key '" + key + "'");
  }
  spec.validate();
  return spec;
}

void GeneratorSpec::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out << "n_train = " << n_train << "\nn_dev = " << n_dev << "\nn_test = " << n_test
      << "\nn_categories = " << n_categories << "\nn_polysemous = " << n_polysemous
      << "\nsense_skew = " << format_double(sense_skew)
      << "\nfiller_vocab_size = " << filler_vocab_size << "\ntitle_len_min = " << title_len_min
      << "\ntitle_len_max = " << title_len_max << "\nswap_prob = " << format_double(swap_prob)
      << "\nseed = " << seed << "\n";
}

namespace {

const char* kCategoryNames[] = {"electronics", "clothing", "kitchen", "toys",  "motors",
                                "music",       "sports",   "garden",  "office"};

std::vector<std::string> make_labels(int n) {
  std::vector<std::string> labels;
  constexpr int kPool = static_cast<int>(std::size(kCategoryNames));
  for (int i = 0; i < n - 1; ++i)
    labels.push_back(i < kPool ? kCategoryNames[i] : "cat" + std::to_string(i));
  labels.push_back("other");
  return labels;
}

struct Pools {
  std::vector<std::string> shared_src, shared_tgt;
  std::vector<std::vector<std::string>> cat_src, cat_tgt;  // per category
};

Pools make_filler_pools(const GeneratorSpec& spec) {
  Pools pools;
  int shared = spec.filler_vocab_size / 2;
  int rest = spec.filler_vocab_size - shared;
  pools.cat_src.resize(spec.n_categories);
  pools.cat_tgt.resize(spec.n_categories);
  int next = 0;
  for (int i = 0; i < shared; ++i, ++next) {
    pools.shared_src.push_back("src" + std::to_string(next));
    pools.shared_tgt.push_back("tgt" + std::to_string(next));
  }
  for (int i = 0; i < rest; ++i, ++next) {
    int c = i % spec.n_categories;
    pools.cat_src[c].push_back("src" + std::to_string(next));
    pools.cat_tgt[c].push_back("tgt" + std::to_string(next));
  }
  return pools;
}

}  // namespace

SyntheticData generate_synthetic(const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  SyntheticData data;
  data.categories = CategorySet(make_labels(spec.n_categories));
  const int C = spec.n_categories;

  // Sense tables: each polysemous word has a majority sense covering a random
  // half of the categories and a minority sense covering the rest.
  std::vector<std::vector<int>> majority_cats(spec.n_polysemous), minority_cats(spec.n_polysemous);
  data.sense_table.assign(spec.n_polysemous, std::vector<std::string>(C));
  for (int k = 0; k < spec.n_polysemous; ++k) {
    data.poly_words.push_back("pword" + std::to_string(k));
    std::string maj = "sense" + std::to_string(k) + "a";
    std::string min = "sense" + std::to_string(k) + "b";
    data.majority_sense.push_back(maj);
    std::vector<int> cats(C);
    for (int c = 0; c < C; ++c) cats[c] = c;
    rng.shuffle(cats);
    int n_major = (C + 1) / 2;
    for (int c = 0; c < C; ++c) {
      if (c < n_major) {
        majority_cats[k].push_back(cats[c]);
        data.sense_table[k][cats[c]] = maj;
      } else {
        minority_cats[k].push_back(cats[c]);
        data.sense_table[k][cats[c]] = min;
      }
    }
    std::sort(majority_cats[k].begin(), majority_cats[k].end());
    std::sort(minority_cats[k].begin(), minority_cats[k].end());
  }

  const Pools pools = make_filler_pools(spec);

  auto gen_record = [&](PolysemyKey* key) {
    ParallelRecord rec;
    int len = static_cast<int>(rng.next_int(spec.title_len_min, spec.title_len_max));
    int poly_word = -1, poly_pos = -1;
    if (spec.n_polysemous > 0) {
      poly_word = static_cast<int>(rng.next_below(spec.n_polysemous));
      poly_pos = static_cast<int>(rng.next_below(len));
      bool majority = rng.bernoulli(spec.sense_skew);
      const auto& group = majority ? majority_cats[poly_word] : minority_cats[poly_word];
      rec.category = group[rng.next_below(group.size())];
    } else {
      rec.category = static_cast<int>(rng.next_below(C));
    }
    rec.source.resize(len);
    rec.target.resize(len);
    for (int p = 0; p < len; ++p) {
      if (p == poly_pos) {
        rec.source[p] = data.poly_words[poly_word];
        rec.target[p] = data.sense_table[poly_word][rec.category];
      } else if (rng.bernoulli(0.5)) {
        size_t f = rng.next_below(pools.shared_src.size());
        rec.source[p] = pools.shared_src[f];
        rec.target[p] = pools.shared_tgt[f];
      } else {
        const auto& src_pool = pools.cat_src[rec.category];
        size_t f = rng.next_below(src_pool.size());
        rec.source[p] = src_pool[f];
        rec.target[p] = pools.cat_tgt[rec.category][f];
      }
    }
    for (int p = 0; p + 1 < len; ++p)
      if (rng.bernoulli(spec.swap_prob)) std::swap(rec.target[p], rec.target[p + 1]);
    if (key) {
      if (poly_word >= 0) {
        key->source_word = data.poly_words[poly_word];
        key->expected_target = data.sense_table[poly_word][rec.category];
      } else {
        key->source_word.clear();
        key->expected_target.clear();
      }
    }
    return rec;
  };

  for (int i = 0; i < spec.n_train; ++i) data.train.push_back(gen_record(nullptr));
  for (int i = 0; i < spec.n_dev; ++i) {
    PolysemyKey key;
    data.dev.push_back(gen_record(&key));
    data.dev_key.push_back(key);
  }
  for (int i = 0; i < spec.n_test; ++i) {
    PolysemyKey key;
    data.test.push_back(gen_record(&key));
    data.test_key.push_back(key);
  }
  return data;
}

void write_polysemy_key(const std::vector<PolysemyKey>& key, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open file for writing: " + path);
  for (size_t i = 0; i < key.size(); ++i)
    out << i << '\t' << key[i].source_word << '\t' << key[i].expected_target << '\n';
}

std::vector<PolysemyKey> read_polysemy_key(const std::string& path) {
  std::vector<PolysemyKey> key;
  const auto lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto fields = split(lines[i], '\t');
    if (fields.size() != 3)
      throw DataError(path + ":" + std::to_string(i + 1) + ": expected 3 fields");
    key.push_back({fields[1], fields[2]});
  }
  return key;
}

}  // namespace catmt
