#include "csgen/corpus.hpp"

#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "jsonl.hpp"

namespace csgen {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string> tokens_from_json(const json& record, const std::filesystem::path& path,
                                          std::size_t line_no) {
  std::vector<std::string> tokens;
  if (record.contains("tokens")) {
    const json& arr = record.at("tokens");
    if (!arr.is_array()) throw detail::record_error(path, line_no, "tokens must be an array");
    for (const json& t : arr) {
      if (!t.is_string()) throw detail::record_error(path, line_no, "tokens must be strings");
      tokens.push_back(t.get<std::string>());
    }
  } else if (record.contains("text")) {
    tokens = split_tokens(record.at("text").get<std::string>());
  } else {
    throw detail::record_error(path, line_no, "missing text");
  }
  if (tokens.empty()) throw detail::record_error(path, line_no, "empty token sequence");
  for (const std::string& t : tokens) {
    if (is_blank(t)) throw detail::record_error(path, line_no, "blank token");
  }
  return tokens;
}

int label_from_json(const json& record, const std::filesystem::path& path, std::size_t line_no) {
  if (!record.contains("label")) throw detail::record_error(path, line_no, "missing label");
  const json& label = record.at("label");
  if (!label.is_number_integer()) {
    throw detail::record_error(path, line_no, "label must be an integer");
  }
  return label.get<int>();
}

std::string id_from_json(const json& record, const std::filesystem::path& path,
                         std::size_t line_no) {
  if (!record.contains("id")) throw detail::record_error(path, line_no, "missing id");
  const json& id = record.at("id");
  if (id.is_string()) return id.get<std::string>();
  if (id.is_number_integer()) return std::to_string(id.get<long long>());
  throw detail::record_error(path, line_no, "id must be a string or integer");
}

Corpus load_jsonl_corpus(const std::filesystem::path& path) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  detail::for_each_jsonl_record(path, [&](std::size_t line_no, const json& record) {
    LabeledSentence s;
    s.id = id_from_json(record, path, line_no);
    if (!seen.insert(s.id).second) {
      throw detail::record_error(path, line_no, "duplicate id " + s.id);
    }
    s.tokens = tokens_from_json(record, path, line_no);
    s.label = label_from_json(record, path, line_no);
    corpus.push_back(std::move(s));
  });
  return corpus;
}

Corpus load_tsv_corpus(const std::filesystem::path& path) {
  std::ifstream in = detail::open_input(path);
  Corpus corpus;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw detail::record_error(path, line_no, "expected id<TAB>label<TAB>text");
    }
    LabeledSentence s;
    s.id = line.substr(0, tab1);
    if (s.id.empty()) throw detail::record_error(path, line_no, "missing id");
    if (!seen.insert(s.id).second) {
      throw detail::record_error(path, line_no, "duplicate id " + s.id);
    }
    try {
      std::size_t used = 0;
      std::string field = line.substr(tab1 + 1, tab2 - tab1 - 1);
      s.label = std::stoi(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw detail::record_error(path, line_no, "label must be an integer");
    }
    s.tokens = split_tokens(std::string_view(line).substr(tab2 + 1));
    if (s.tokens.empty()) throw detail::record_error(path, line_no, "empty token sequence");
    corpus.push_back(std::move(s));
  }
  return corpus;
}

}  // namespace

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

Corpus load_labeled_corpus(const std::filesystem::path& path, CorpusFormat format) {
  return format == CorpusFormat::Jsonl ? load_jsonl_corpus(path) : load_tsv_corpus(path);
}

std::string corpus_to_jsonl(const Corpus& corpus) {
  std::string out;
  for (const LabeledSentence& s : corpus) {
    ordered_json record;
    record["id"] = s.id;
    record["tokens"] = s.tokens;
    record["label"] = s.label;
    out += record.dump();
    out += '\n';
  }
  return out;
}

void save_labeled_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out = detail::open_output(path);
  out << corpus_to_jsonl(corpus);
}

std::vector<ParallelPair> load_parallel_pairs(const Corpus& corpus,
                                              const std::filesystem::path& path) {
  std::unordered_map<std::string, std::vector<std::string>> targets;
  detail::for_each_jsonl_record(path, [&](std::size_t line_no, const json& record) {
    std::string id = id_from_json(record, path, line_no);
    if (!record.contains("target_tokens")) {
      throw detail::record_error(path, line_no, "missing target_tokens");
    }
    std::vector<std::string> tokens;
    for (const json& t : record.at("target_tokens")) tokens.push_back(t.get<std::string>());
    if (tokens.empty()) throw detail::record_error(path, line_no, "empty target_tokens");
    if (!targets.emplace(id, std::move(tokens)).second) {
      throw detail::record_error(path, line_no, "duplicate id " + id);
    }
  });

  std::vector<ParallelPair> pairs;
  pairs.reserve(corpus.size());
  for (const LabeledSentence& s : corpus) {
    auto it = targets.find(s.id);
    if (it == targets.end()) {
      throw ValidationError(path.string() + ": no pair for sentence id " + s.id);
    }
    pairs.push_back(ParallelPair{s, it->second});
    targets.erase(it);
  }
  if (!targets.empty()) {
    throw ValidationError(path.string() + ": pair id " + targets.begin()->first +
                          " does not occur in the corpus");
  }
  return pairs;
}

std::vector<ParallelPair> load_standalone_pairs(const std::filesystem::path& path) {
  std::vector<ParallelPair> pairs;
  std::unordered_set<std::string> seen;
  detail::for_each_jsonl_record(path, [&](std::size_t line_no, const json& record) {
    ParallelPair p;
    p.source.id = id_from_json(record, path, line_no);
    if (!seen.insert(p.source.id).second) {
      throw detail::record_error(path, line_no, "duplicate id " + p.source.id);
    }
    p.source.tokens = tokens_from_json(record, path, line_no);
    p.source.label = record.contains("label") ? label_from_json(record, path, line_no) : 0;
    if (!record.contains("target_tokens")) {
      throw detail::record_error(path, line_no, "missing target_tokens");
    }
    for (const json& t : record.at("target_tokens")) {
      p.target_tokens.push_back(t.get<std::string>());
    }
    if (p.target_tokens.empty()) {
      throw detail::record_error(path, line_no, "empty target_tokens");
    }
    pairs.push_back(std::move(p));
  });
  return pairs;
}

}  // namespace csgen
