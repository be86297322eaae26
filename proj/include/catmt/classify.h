#ifndef CATMT_CLASSIFY_H
#define CATMT_CLASSIFY_H

#include <string>
#include <unordered_map>
#include <vector>

#include "catmt/types.h"

namespace catmt {

// Multinomial naive Bayes over bags of words, log space, additive-alpha
// smoothing with one extra "unseen" outcome per category. Tokens never seen
// in training are skipped at prediction time, so an all-unseen input falls
// back to the priors.
class ClassifierModel {
 public:
  ClassifierModel() = default;

  int n_categories() const { return static_cast<int>(log_prior_.size()); }
  double alpha() const { return alpha_; }
  const std::vector<double>& log_priors() const { return log_prior_; }
  double log_likelihood(const std::string& token, int category) const;
  double unseen_log_likelihood(int category) const { return unseen_loglik_.at(category); }

  // (argmax category, posterior over categories). Empty input or no known
  // token returns the prior argmax. Ties break toward the lowest id.
  std::pair<int, std::vector<double>> predict(const TokenSeq& tokens) const;

  void save(const std::string& path, const CategorySet& cats) const;
  static ClassifierModel load(const std::string& path, CategorySet* cats = nullptr);

  friend ClassifierModel train_classifier(const Corpus& labeled, int n_categories, double alpha);

 private:
  double alpha_ = 1.0;
  std::vector<double> log_prior_;
  std::vector<double> unseen_loglik_;                              // per category
  std::unordered_map<std::string, std::vector<double>> loglik_;   // token -> per category
};

ClassifierModel train_classifier(const Corpus& labeled, int n_categories, double alpha = 1.0);

// Applies predict() to every record's source side. Records that already have
// a category keep it unless `overwrite` is set.
Corpus label_corpus(const ClassifierModel& model, const Corpus& records, bool overwrite = false);

}  // namespace catmt

#endif
