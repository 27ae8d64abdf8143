#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csgen {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files, violated preconditions, bad configuration.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Bracketed-tree syntax error. Offsets are 1-based character positions.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Every candidate target span scored zero under a max-similarity objective.
class NoAlignmentSignal : public Error {
 public:
  explicit NoAlignmentSignal(const std::string& what) : Error(what) {}
};

// None of the four selection methods produced a target segment.
class SegmentSelectionFailed : public Error {
 public:
  explicit SegmentSelectionFailed(const std::string& what) : Error(what) {}
};

// All projected candidates for a segment were cut off before ranking.
class CandidateFiltered : public Error {
 public:
  explicit CandidateFiltered(const std::string& what) : Error(what) {}
};

// A transliteration provider failed or broke its token-count contract.
class ProjectionError : public Error {
 public:
  explicit ProjectionError(const std::string& what) : Error(what) {}
};

// Not enough sentences of a required label to satisfy the sample counts.
class StratificationError : public Error {
 public:
  StratificationError(int label, std::size_t need, std::size_t have)
      : Error("stratified sample needs " + std::to_string(need) + " sentences of label " +
              std::to_string(label) + " but only " + std::to_string(have) + " are available"),
        label_(label),
        need_(need),
        have_(have) {}
  int label() const { return label_; }
  std::size_t need() const { return need_; }
  std::size_t have() const { return have_; }

 private:
  int label_;
  std::size_t need_;
  std::size_t have_;
};

}  // namespace csgen
