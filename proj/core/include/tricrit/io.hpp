#pragma once

#include <stdexcept>
#include <string>

#include "tricrit/enumerate.hpp"
#include "tricrit/graph.hpp"

namespace tricrit {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GraphClass { LocalTree, PointGraph, Distinguishing };
const char* graph_class_name(GraphClass c);

/// On-disk form of a graph: version, class, vertex records with ids, edges.
/// In memory the vertices are dense 0..V-1 in document order; ids keeps the
/// document id of each dense vertex.
struct GraphDocument {
  int version = 1;
  GraphClass cls = GraphClass::Distinguishing;
  Graph graph;
  std::vector<int> ids;
};

/// Strict parse of the JSON document format. Throws ParseError on anything
/// malformed: bad JSON, unsupported version, duplicate or negative ids,
/// unknown kinds, kinds outside the class alphabet, signs off whites, edges
/// to missing ids, self loops, duplicate edges.
GraphDocument parse_document(const std::string& text);

/// UTF-8 JSON with stable key order; parse(serialize(d)) == d.
std::string serialize_document(const GraphDocument& doc);

/// Export-only DOT rendering; vertex shape and label encode kind and sign.
std::string to_dot(const GraphDocument& doc);

GraphDocument document_for(const LocalTree& t);
GraphDocument document_for(const PointGraph& g);
GraphDocument document_for(const DistinguishingGraph& g);

ValidationReport validate_document(const GraphDocument& doc);

/// Balanced-parenthesis circle arrangement, e.g. "(())" or "()()"; each
/// "(...)" is one circle. Throws ParseError on unbalanced input.
CircleArrangement parse_arrangement(const std::string& text);

/// Comma-separated matrix with a header row of type indices.
std::string matrix_csv(const PairCountMatrix& m);

}  // namespace tricrit
