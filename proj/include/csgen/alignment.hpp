#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "csgen/corpus.hpp"
#include "csgen/matrix.hpp"

namespace csgen {

// Reserved empty-alignment token prepended to every source sentence.
inline constexpr const char* kNullToken = "<NULL>";

// Lexical translation table t(target_word | source_word) from IBM Model 1.
// Probabilities are normalized per source word.
class TranslationTable {
 public:
  // Returns t(target | source), 0.0 for unseen words or pairs.
  double prob(const std::string& target_word, const std::string& source_word) const;

  bool has_source(const std::string& word) const { return src_index_.count(word) > 0; }
  bool has_target(const std::string& word) const { return tgt_index_.count(word) > 0; }

  const std::vector<std::string>& source_vocab() const { return src_vocab_; }
  const std::vector<std::string>& target_vocab() const { return tgt_vocab_; }

  // Sum_f t(f|e) for one source word; 1.0 +- 1e-6 after training.
  double source_mass(const std::string& source_word) const;

 private:
  friend TranslationTable train_ibm1(std::span<const ParallelPair>, int);
  friend TranslationTable load_translation_table(const std::filesystem::path&);
  friend double ibm1_log_likelihood(std::span<const ParallelPair>, const TranslationTable&);
  friend void save_translation_table(const TranslationTable&, const std::filesystem::path&);

  int src_id(const std::string& word) const;
  int tgt_id(const std::string& word) const;
  int intern_src(const std::string& word);
  int intern_tgt(const std::string& word);

  std::vector<std::string> src_vocab_;
  std::vector<std::string> tgt_vocab_;
  std::unordered_map<std::string, int> src_index_;
  std::unordered_map<std::string, int> tgt_index_;
  // probs_[source_id] -> (target_id -> t(target|source))
  std::vector<std::unordered_map<int, double>> probs_;
};

// EM training of IBM Model 1 with uniform initialization. Deterministic for
// a fixed pair order; a NULL source token is implicit in every sentence.
TranslationTable train_ibm1(std::span<const ParallelPair> pairs, int iterations);

// Corpus log-likelihood sum_pairs sum_{f in t} ln( sum_e t(f|e) / (|s|+1) ).
double ibm1_log_likelihood(std::span<const ParallelPair> pairs, const TranslationTable& table);

// G[i][j] = t(target_i | source_j), floored at `oov_floor` so that unseen
// words or pairs never zero out a whole product.
ScoreMatrix giza_matrix(const ParallelPair& pair, const TranslationTable& table,
                        double oov_floor = 1e-6);

// TSV: target_word <TAB> source_word <TAB> prob, sorted by (source, target).
void save_translation_table(const TranslationTable& table, const std::filesystem::path& path);
TranslationTable load_translation_table(const std::filesystem::path& path);

// Shifted, squashed inverse document frequency: I(w) = sigmoid(a*idf(w) - b).
struct IdfModel {
  std::unordered_map<std::string, double> idf;
  double a = 1.0;
  double b = 0.0;
  double max_idf = 0.0;  // substituted for unseen words (rarest)

  double squashed(const std::string& word) const;
};

// idf(w) = ln(N / df(w)) with document frequencies counted over sentences.
// When b is not given it defaults to a * median(idf), mapping the median
// word to 0.5.
IdfModel build_idf_model(std::span<const std::vector<std::string>> sentences, double a = 1.0,
                         std::optional<double> b = std::nullopt);

}  // namespace csgen
