#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace csgen {

// A tokenized sentence with an integer sentiment label (-1/0/+1 for the
// three-class task; any small integer set works, e.g. 0/1 for hate speech).
struct LabeledSentence {
  std::string id;
  std::vector<std::string> tokens;
  int label = 0;
};

using Corpus = std::vector<LabeledSentence>;

// A source sentence paired with its target-language translation, joined by id.
struct ParallelPair {
  LabeledSentence source;
  std::vector<std::string> target_tokens;
};

enum class CorpusFormat { Jsonl, Tsv };

// Splits on ASCII whitespace; bytes are passed through verbatim, so UTF-8
// tokens survive untouched. Inputs are expected to be NFC-normalized already.
std::vector<std::string> split_tokens(std::string_view text);

// JSONL: one object per line, {id, text | tokens, label}.
// TSV: id <TAB> label <TAB> text.
// Errors name the offending line number; duplicate ids are rejected.
Corpus load_labeled_corpus(const std::filesystem::path& path,
                           CorpusFormat format = CorpusFormat::Jsonl);

// Canonical JSONL form: {"id":...,"tokens":[...],"label":...} per line.
// load() of canonical output round-trips byte-identically.
std::string corpus_to_jsonl(const Corpus& corpus);
void save_labeled_corpus(const Corpus& corpus, const std::filesystem::path& path);

// JSONL {id, target_tokens}, joined 1:1 against `corpus` by id. Every corpus
// sentence must have exactly one pair record and vice versa.
std::vector<ParallelPair> load_parallel_pairs(const Corpus& corpus,
                                              const std::filesystem::path& path);

// Self-contained pair file: {id, target_tokens, tokens | text, label?}.
// Used by `align` when no separate corpus file is given.
std::vector<ParallelPair> load_standalone_pairs(const std::filesystem::path& path);

}  // namespace csgen
