#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "indom/bitset.hpp"

namespace indom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid input: bad endpoint, self-loop, malformed side artifact.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A size or width limit was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// The input is not in the graph class a solver requires. The witness is a
// class-specific obstruction (an induced P4 for cographs, the stuck vertex
// for distance-hereditary recognition).
class ClassMismatch : public Error {
 public:
  ClassMismatch(std::string graph_class, std::vector<Vertex> witness, const std::string& what)
      : Error(what), graph_class_(std::move(graph_class)), witness_(std::move(witness)) {}
  const std::string& graph_class() const { return graph_class_; }
  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  std::string graph_class_;
  std::vector<Vertex> witness_;
};

}  // namespace indom
