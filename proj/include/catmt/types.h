#ifndef CATMT_TYPES_H
#define CATMT_TYPES_H

#include <cstdint>
#include <string>
#include <vector>

namespace catmt {

using Token = std::string;
using TokenSeq = std::vector<std::string>;
using WordId = int32_t;

// Category label set; line order in the sidecar file defines ids.
class CategorySet {
 public:
  CategorySet() = default;
  explicit CategorySet(std::vector<std::string> labels);

  int id_of(const std::string& label) const;  // -1 if unknown
  const std::string& label(int id) const { return labels_.at(id); }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  static CategorySet read(const std::string& path);
  void write(const std::string& path) const;

 private:
  std::vector<std::string> labels_;
};

// One sentence pair with its category. Dev/test records keep the first
// reference in `target` and any further references in `extra_refs`.
struct ParallelRecord {
  TokenSeq source;
  TokenSeq target;
  int category = -1;
  std::vector<TokenSeq> extra_refs;

  std::vector<TokenSeq> references() const {
    std::vector<TokenSeq> refs{target};
    refs.insert(refs.end(), extra_refs.begin(), extra_refs.end());
    return refs;
  }

  bool operator==(const ParallelRecord& o) const = default;
};

using Corpus = std::vector<ParallelRecord>;

}  // namespace catmt

#endif
