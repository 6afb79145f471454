#pragma once

#include <cstdint>
#include <string>

#include "mdlct/codetable.hpp"
#include "mdlct/dataset.hpp"

namespace mdlct {

/// Two-class compressed-length classifier. A sample goes to the class whose
/// table encodes it shorter; ties go to the second class.
class ClassifierModel {
 public:
  /// Both tables must share one alphabet, so unseen items are rejected
  /// identically for either class.
  ClassifierModel(CodeTable first, std::string first_label, CodeTable second,
                  std::string second_label);

  const CodeTable& first() const { return first_; }
  const CodeTable& second() const { return second_; }
  const std::string& first_label() const { return first_label_; }
  const std::string& second_label() const { return second_label_; }
  const Itemset& alphabet() const { return first_.alphabet(); }

 private:
  CodeTable first_;
  CodeTable second_;
  std::string first_label_;
  std::string second_label_;
};

/// second_label iff ℓ(t | second) <= ℓ(t | first), else first_label.
/// Items outside the shared alphabet raise DomainError.
const std::string& classify(const ClassifierModel& model, const Itemset& t);

/// Confusion counts and rates with malware as the positive class. Samples
/// containing items outside the model alphabet are skipped and counted.
struct Metrics {
  std::uint64_t true_positive = 0;
  std::uint64_t false_positive = 0;
  std::uint64_t true_negative = 0;
  std::uint64_t false_negative = 0;
  std::uint64_t skipped = 0;

  std::uint64_t evaluated() const {
    return true_positive + false_positive + true_negative + false_negative;
  }
  double accuracy() const;
  /// Benign samples flagged malware / benign samples evaluated.
  double fpr() const;
  /// Malware samples labeled benign / malware samples evaluated. This is
  /// also the evasion rate of unmodified malware.
  double fnr() const;
};

/// The model's labels must be exactly "benign" and "malware" (in either
/// slot) so confusion cells are well defined.
Metrics evaluate(const ClassifierModel& model, const LabeledDataset& data);

}  // namespace mdlct
