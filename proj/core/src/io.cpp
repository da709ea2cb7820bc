#include "tricrit/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tricrit {

using ordered_json = nlohmann::ordered_json;

const char* graph_class_name(GraphClass c) {
  switch (c) {
    case GraphClass::LocalTree: return "local-tree";
    case GraphClass::PointGraph: return "point-graph";
    case GraphClass::Distinguishing: return "distinguishing";
  }
  return "?";
}

namespace {

GraphClass class_from_name(const std::string& name) {
  if (name == "local-tree") return GraphClass::LocalTree;
  if (name == "point-graph") return GraphClass::PointGraph;
  if (name == "distinguishing") return GraphClass::Distinguishing;
  throw ParseError("unknown class \"" + name + "\"");
}

VertexKind kind_from_name(const std::string& name) {
  if (name == "region") return VertexKind::Region;
  if (name == "white") return VertexKind::White;
  if (name == "black") return VertexKind::Black;
  if (name == "gray") return VertexKind::Gray;
  if (name == "t") return VertexKind::Junction;
  throw ParseError("unknown kind \"" + name + "\"");
}

bool kind_allowed(GraphClass cls, VertexKind k) {
  switch (cls) {
    case GraphClass::LocalTree:
      return k == VertexKind::Region;
    case GraphClass::PointGraph:
      return k == VertexKind::White || k == VertexKind::Black || k == VertexKind::Gray;
    case GraphClass::Distinguishing:
      return k != VertexKind::Region;
  }
  return false;
}

}  // namespace

GraphDocument parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("version") || !j["version"].is_number_integer())
    throw ParseError("missing integer \"version\"");
  if (j["version"].get<int>() != 1)
    throw ParseError("unsupported version " + j["version"].dump());
  if (!j.contains("class") || !j["class"].is_string())
    throw ParseError("missing string \"class\"");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("missing array \"vertices\"");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("missing array \"edges\"");

  GraphDocument doc;
  doc.version = 1;
  doc.cls = class_from_name(j["class"].get<std::string>());

  std::map<int, int> dense;  // id -> dense index
  for (const auto& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_number_integer())
      throw ParseError("vertex record needs an integer \"id\"");
    int id = v["id"].get<int>();
    if (id < 0) throw ParseError("vertex id " + std::to_string(id) + " is negative");
    if (dense.count(id)) throw ParseError("duplicate vertex id " + std::to_string(id));
    if (!v.contains("kind") || !v["kind"].is_string())
      throw ParseError("vertex record needs a string \"kind\"");
    VertexKind kind = kind_from_name(v["kind"].get<std::string>());
    if (!kind_allowed(doc.cls, kind))
      throw ParseError(std::string("kind \"") + kind_name(kind) + "\" not allowed in class \"" +
                       graph_class_name(doc.cls) + "\"");
    Sign sign = +1;
    if (v.contains("sign")) {
      if (kind != VertexKind::White) throw ParseError("sign on a non-white vertex");
      if (!v["sign"].is_number_integer() ||
          (v["sign"].get<int>() != 1 && v["sign"].get<int>() != -1))
        throw ParseError("sign must be +1 or -1");
      sign = v["sign"].get<int>();
    }
    if (doc.graph.vertex_count() >= Graph::kMaxVertices)
      throw ParseError("too many vertices (limit 64)");
    dense[id] = doc.graph.add_vertex(kind, sign);
    doc.ids.push_back(id);
  }

  std::set<std::pair<int, int>> seen;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge must be a pair of vertex ids");
    int a = e[0].get<int>(), b = e[1].get<int>();
    auto ia = dense.find(a), ib = dense.find(b);
    if (ia == dense.end() || ib == dense.end())
      throw ParseError("edge references missing vertex id");
    if (a == b) throw ParseError("self loop at id " + std::to_string(a));
    auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert({key.first, key.second}).second)
      throw ParseError("duplicate edge [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    doc.graph.add_edge(ia->second, ib->second);
  }
  return doc;
}

std::string serialize_document(const GraphDocument& doc) {
  ordered_json j;
  j["version"] = 1;
  j["class"] = graph_class_name(doc.cls);
  j["vertices"] = ordered_json::array();
  for (int v = 0; v < doc.graph.vertex_count(); ++v) {
    ordered_json rec;
    rec["id"] = doc.ids[static_cast<std::size_t>(v)];
    rec["kind"] = kind_name(doc.graph.kind[static_cast<std::size_t>(v)]);
    if (doc.graph.kind[static_cast<std::size_t>(v)] == VertexKind::White)
      rec["sign"] = doc.graph.sign[static_cast<std::size_t>(v)];
    j["vertices"].push_back(std::move(rec));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : doc.graph.edge_list()) {
    int ia = doc.ids[static_cast<std::size_t>(a)], ib = doc.ids[static_cast<std::size_t>(b)];
    edges.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(edges.begin(), edges.end());
  j["edges"] = ordered_json::array();
  for (auto [a, b] : edges) j["edges"].push_back(ordered_json::array({a, b}));
  return j.dump(2) + "\n";
}

std::string to_dot(const GraphDocument& doc) {
  std::ostringstream os;
  os << "graph g {\n";
  os << "  node [fontname=\"Helvetica\"];\n";
  for (int v = 0; v < doc.graph.vertex_count(); ++v) {
    int id = doc.ids[static_cast<std::size_t>(v)];
    os << "  v" << id << " [";
    switch (doc.graph.kind[static_cast<std::size_t>(v)]) {
      case VertexKind::Region:
        os << "shape=circle, label=\"" << id << "\"";
        break;
      case VertexKind::White:
        os << "shape=circle, style=filled, fillcolor=white, label=\"" << id
           << (doc.graph.sign[static_cast<std::size_t>(v)] > 0 ? "+" : "-") << "\"";
        break;
      case VertexKind::Black:
        os << "shape=circle, style=filled, fillcolor=black, fontcolor=white, label=\"" << id << "\"";
        break;
      case VertexKind::Gray:
        os << "shape=circle, style=filled, fillcolor=gray, label=\"" << id << "\"";
        break;
      case VertexKind::Junction:
        os << "shape=point, label=\"\"";
        break;
    }
    os << "];\n";
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : doc.graph.edge_list()) {
    int ia = doc.ids[static_cast<std::size_t>(a)], ib = doc.ids[static_cast<std::size_t>(b)];
    edges.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

GraphDocument wrap(GraphClass cls, const Graph& g) {
  GraphDocument doc;
  doc.cls = cls;
  doc.graph = g;
  doc.ids.resize(g.kind.size());
  for (int v = 0; v < g.vertex_count(); ++v) doc.ids[static_cast<std::size_t>(v)] = v;
  return doc;
}

}  // namespace

GraphDocument document_for(const LocalTree& t) { return wrap(GraphClass::LocalTree, t.graph); }
GraphDocument document_for(const PointGraph& g) { return wrap(GraphClass::PointGraph, g.graph); }
GraphDocument document_for(const DistinguishingGraph& g) {
  return wrap(GraphClass::Distinguishing, g.graph);
}

ValidationReport validate_document(const GraphDocument& doc) {
  switch (doc.cls) {
    case GraphClass::LocalTree:
      return validate_local_tree(LocalTree{doc.graph});
    case GraphClass::PointGraph:
      return validate_point_graph(as_point_graph(doc.graph));
    case GraphClass::Distinguishing:
      return validate_distinguishing(as_distinguishing(doc.graph));
  }
  return {};
}

CircleArrangement parse_arrangement(const std::string& text) {
  CircleArrangement out;
  std::vector<int> stack;
  for (char c : text) {
    if (c == '(') {
      out.parent.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(out.circle_count() - 1);
    } else if (c == ')') {
      if (stack.empty()) throw ParseError("unbalanced ')'");
      stack.pop_back();
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      continue;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'");
    }
  }
  if (!stack.empty()) throw ParseError("unbalanced '('");
  return out;
}

std::string matrix_csv(const PairCountMatrix& m) {
  std::ostringstream os;
  os << "type";
  for (int j = 0; j < m.size(); ++j) os << "," << j + 1;
  os << "\n";
  for (int i = 0; i < m.size(); ++i) {
    os << i + 1;
    for (int j = 0; j < m.size(); ++j)
      os << "," << m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    os << "\n";
  }
  return os.str();
}

}  // namespace tricrit
