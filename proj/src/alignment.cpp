#include "csgen/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "csgen/errors.hpp"
#include "jsonl.hpp"

namespace csgen {

namespace {

// Sentence pair with words mapped to vocabulary ids; source includes NULL.
struct IdPair {
  std::vector<int> src;  // src[0] == NULL id
  std::vector<int> tgt;
};

std::vector<int> sorted_keys(const std::unordered_map<int, double>& m) {
  std::vector<int> keys;
  keys.reserve(m.size());
  for (const auto& [k, v] : m) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

int TranslationTable::src_id(const std::string& word) const {
  auto it = src_index_.find(word);
  return it == src_index_.end() ? -1 : it->second;
}

int TranslationTable::tgt_id(const std::string& word) const {
  auto it = tgt_index_.find(word);
  return it == tgt_index_.end() ? -1 : it->second;
}

int TranslationTable::intern_src(const std::string& word) {
  auto [it, inserted] = src_index_.emplace(word, static_cast<int>(src_vocab_.size()));
  if (inserted) {
    src_vocab_.push_back(word);
    probs_.emplace_back();
  }
  return it->second;
}

int TranslationTable::intern_tgt(const std::string& word) {
  auto [it, inserted] = tgt_index_.emplace(word, static_cast<int>(tgt_vocab_.size()));
  if (inserted) tgt_vocab_.push_back(word);
  return it->second;
}

double TranslationTable::prob(const std::string& target_word,
                              const std::string& source_word) const {
  int e = src_id(source_word);
  int f = tgt_id(target_word);
  if (e < 0 || f < 0) return 0.0;
  const auto& row = probs_[static_cast<std::size_t>(e)];
  auto it = row.find(f);
  return it == row.end() ? 0.0 : it->second;
}

double TranslationTable::source_mass(const std::string& source_word) const {
  int e = src_id(source_word);
  if (e < 0) return 0.0;
  double sum = 0.0;
  const auto& row = probs_[static_cast<std::size_t>(e)];
  for (int f : sorted_keys(row)) sum += row.at(f);
  return sum;
}

TranslationTable train_ibm1(std::span<const ParallelPair> pairs, int iterations) {
  if (pairs.empty()) throw ValidationError("train_ibm1: empty parallel corpus");
  if (iterations < 1) throw ValidationError("train_ibm1: iterations must be >= 1");

  TranslationTable table;
  table.intern_src(kNullToken);

  std::vector<IdPair> corpus;
  corpus.reserve(pairs.size());
  for (const ParallelPair& pair : pairs) {
    if (pair.source.tokens.empty() || pair.target_tokens.empty()) {
      throw ValidationError("train_ibm1: empty sentence in pair " + pair.source.id);
    }
    IdPair ids;
    ids.src.push_back(0);  // NULL
    for (const std::string& w : pair.source.tokens) ids.src.push_back(table.intern_src(w));
    for (const std::string& w : pair.target_tokens) ids.tgt.push_back(table.intern_tgt(w));
    corpus.push_back(std::move(ids));
  }

  // Uniform initialization over the target words each source word co-occurs
  // with, which is already a valid per-source distribution.
  for (const IdPair& pair : corpus) {
    for (int e : pair.src) {
      auto& row = table.probs_[static_cast<std::size_t>(e)];
      for (int f : pair.tgt) row.emplace(f, 0.0);
    }
  }
  for (auto& row : table.probs_) {
    if (row.empty()) continue;
    double uniform = 1.0 / static_cast<double>(row.size());
    for (int f : sorted_keys(row)) row[f] = uniform;
  }

  std::vector<std::unordered_map<int, double>> counts(table.probs_.size());
  std::vector<double> totals(table.probs_.size());
  for (int iter = 0; iter < iterations; ++iter) {
    for (auto& c : counts) c.clear();
    std::fill(totals.begin(), totals.end(), 0.0);

    for (const IdPair& pair : corpus) {
      for (int f : pair.tgt) {
        double denom = 0.0;
        for (int e : pair.src) denom += table.probs_[static_cast<std::size_t>(e)].at(f);
        for (int e : pair.src) {
          double delta = table.probs_[static_cast<std::size_t>(e)].at(f) / denom;
          counts[static_cast<std::size_t>(e)][f] += delta;
          totals[static_cast<std::size_t>(e)] += delta;
        }
      }
    }

    for (std::size_t e = 0; e < table.probs_.size(); ++e) {
      if (totals[e] == 0.0) continue;
      auto& row = table.probs_[e];
      for (int f : sorted_keys(counts[e])) row[f] = counts[e].at(f) / totals[e];
    }
  }
  return table;
}

double ibm1_log_likelihood(std::span<const ParallelPair> pairs, const TranslationTable& table) {
  double ll = 0.0;
  for (const ParallelPair& pair : pairs) {
    double log_len = std::log(static_cast<double>(pair.source.tokens.size()) + 1.0);
    for (const std::string& f : pair.target_tokens) {
      double sum = table.prob(f, kNullToken);
      for (const std::string& e : pair.source.tokens) sum += table.prob(f, e);
      ll += std::log(sum) - log_len;
    }
  }
  return ll;
}

ScoreMatrix giza_matrix(const ParallelPair& pair, const TranslationTable& table,
                        double oov_floor) {
  ScoreMatrix matrix(pair.target_tokens.size(), pair.source.tokens.size());
  for (std::size_t i = 0; i < pair.target_tokens.size(); ++i) {
    for (std::size_t j = 0; j < pair.source.tokens.size(); ++j) {
      matrix.at(i, j) = std::max(table.prob(pair.target_tokens[i], pair.source.tokens[j]),
                                 oov_floor);
    }
  }
  return matrix;
}

void save_translation_table(const TranslationTable& table, const std::filesystem::path& path) {
  std::ofstream out = detail::open_output(path);
  std::vector<int> src_order(table.src_vocab_.size());
  for (std::size_t i = 0; i < src_order.size(); ++i) src_order[i] = static_cast<int>(i);
  std::sort(src_order.begin(), src_order.end(), [&](int a, int b) {
    return table.src_vocab_[static_cast<std::size_t>(a)] <
           table.src_vocab_[static_cast<std::size_t>(b)];
  });
  char buf[64];
  for (int e : src_order) {
    const auto& row = table.probs_[static_cast<std::size_t>(e)];
    std::vector<int> tgt_order = sorted_keys(row);
    std::sort(tgt_order.begin(), tgt_order.end(), [&](int a, int b) {
      return table.tgt_vocab_[static_cast<std::size_t>(a)] <
             table.tgt_vocab_[static_cast<std::size_t>(b)];
    });
    for (int f : tgt_order) {
      std::snprintf(buf, sizeof(buf), "%.17g", row.at(f));
      out << table.tgt_vocab_[static_cast<std::size_t>(f)] << '\t'
          << table.src_vocab_[static_cast<std::size_t>(e)] << '\t' << buf << '\n';
    }
  }
}

TranslationTable load_translation_table(const std::filesystem::path& path) {
  std::ifstream in = detail::open_input(path);
  TranslationTable table;
  table.intern_src(kNullToken);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw detail::record_error(path, line_no, "expected target<TAB>source<TAB>prob");
    }
    std::string target = line.substr(0, tab1);
    std::string source = line.substr(tab1 + 1, tab2 - tab1 - 1);
    double prob = 0.0;
    try {
      prob = std::stod(line.substr(tab2 + 1));
    } catch (const std::exception&) {
      throw detail::record_error(path, line_no, "prob must be a number");
    }
    if (!std::isfinite(prob) || prob < 0.0 || prob > 1.0 + 1e-9) {
      throw detail::record_error(path, line_no, "prob out of [0,1]");
    }
    int e = table.intern_src(source);
    int f = table.intern_tgt(target);
    table.probs_[static_cast<std::size_t>(e)][f] = prob;
  }
  return table;
}

double IdfModel::squashed(const std::string& word) const {
  auto it = idf.find(word);
  double raw = it == idf.end() ? max_idf : it->second;
  return 1.0 / (1.0 + std::exp(-(a * raw - b)));
}

IdfModel build_idf_model(std::span<const std::vector<std::string>> sentences, double a,
                         std::optional<double> b) {
  if (sentences.empty()) throw ValidationError("build_idf_model: no sentences");
  std::unordered_map<std::string, std::size_t> df;
  for (const auto& sentence : sentences) {
    std::set<std::string> unique(sentence.begin(), sentence.end());
    for (const std::string& w : unique) ++df[w];
  }
  IdfModel model;
  model.a = a;
  double n = static_cast<double>(sentences.size());
  for (const auto& [word, count] : df) {
    double raw = std::log(n / static_cast<double>(count));
    model.idf.emplace(word, raw);
    model.max_idf = std::max(model.max_idf, raw);
  }
  if (b.has_value()) {
    model.b = *b;
  } else {
    std::vector<double> values;
    values.reserve(model.idf.size());
    for (const auto& [word, raw] : model.idf) values.push_back(raw);
    std::sort(values.begin(), values.end());
    double median = values.empty() ? 0.0
                    : values.size() % 2 == 1
                        ? values[values.size() / 2]
                        : 0.5 * (values[values.size() / 2 - 1] + values[values.size() / 2]);
    model.b = a * median;
  }
  return model;
}

}  // namespace csgen
