#include "tricrit/signs.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "tricrit/canon.hpp"

namespace tricrit {

namespace {

void require_valid(const DistinguishingGraph& g) {
  ValidationReport r = validate_distinguishing(g);
  if (!r.ok()) throw std::invalid_argument("invalid distinguishing graph: " + r.summary());
}

}  // namespace

FullSignAssignment propagate_signs(const DistinguishingGraph& d, int seed_black, Sign seed_sign) {
  require_valid(d);
  const Graph& g = d.graph;
  if (seed_black < 0 || seed_black >= g.vertex_count() ||
      g.kind[static_cast<std::size_t>(seed_black)] != VertexKind::Black)
    throw std::invalid_argument("seed vertex is not black");
  if (seed_sign != +1 && seed_sign != -1) throw std::invalid_argument("seed sign must be +1 or -1");

  FullSignAssignment out;
  out.sign.assign(g.kind.size(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.kind[static_cast<std::size_t>(v)] == VertexKind::White)
      out.sign[static_cast<std::size_t>(v)] = g.sign[static_cast<std::size_t>(v)];

  // Walk the black-gray tree. Each junction joins one black and one gray
  // vertex there; sign(black) * sign(gray) = sign(white neighbor).
  out.sign[static_cast<std::size_t>(seed_black)] = seed_sign;
  std::queue<int> frontier;
  frontier.push(seed_black);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int t : g.neighbors(u)) {
      if (g.kind[static_cast<std::size_t>(t)] != VertexKind::Junction) continue;
      int white = -1, other = -1;
      for (int x : g.neighbors(t)) {
        if (g.kind[static_cast<std::size_t>(x)] == VertexKind::White) white = x;
        else if (x != u) other = x;
      }
      if (white < 0 || other < 0) continue;
      if (out.sign[static_cast<std::size_t>(other)] != 0) continue;
      out.sign[static_cast<std::size_t>(other)] =
          out.sign[static_cast<std::size_t>(u)] * out.sign[static_cast<std::size_t>(white)];
      frontier.push(other);
    }
  }

  for (int t = 0; t < g.vertex_count(); ++t) {
    if (g.kind[static_cast<std::size_t>(t)] != VertexKind::Junction) continue;
    int product = 1;
    for (int x : g.neighbors(t)) product *= out.sign[static_cast<std::size_t>(x)];
    if (product != +1) throw std::logic_error("junction sign product violated after propagation");
  }
  return out;
}

DistinguishingGraph swap_with_signs(const DistinguishingGraph& d) {
  require_valid(d);
  const std::vector<int> blacks = d.graph.vertices_of(VertexKind::Black);
  FullSignAssignment full = propagate_signs(d, blacks.front(), +1);
  DistinguishingGraph out;
  out.n = d.n;
  out.graph = d.graph;
  for (int v = 0; v < out.graph.vertex_count(); ++v) {
    switch (d.graph.kind[static_cast<std::size_t>(v)]) {
      case VertexKind::White:
        out.graph.kind[static_cast<std::size_t>(v)] = VertexKind::Black;
        out.graph.sign[static_cast<std::size_t>(v)] = +1;
        break;
      case VertexKind::Black:
        out.graph.kind[static_cast<std::size_t>(v)] = VertexKind::White;
        out.graph.sign[static_cast<std::size_t>(v)] = full.sign[static_cast<std::size_t>(v)];
        break;
      default:
        out.graph.sign[static_cast<std::size_t>(v)] = +1;
        break;
    }
  }
  return out;
}

std::vector<SignOrbit> sign_orbits(const DistinguishingGraph& d) {
  std::vector<std::vector<int>> auts = automorphisms(d);  // validates
  const std::vector<int> whites = d.graph.vertices_of(VertexKind::White);
  const int n = static_cast<int>(whites.size());

  std::vector<int> white_pos(d.graph.kind.size(), -1);
  for (int i = 0; i < n; ++i) white_pos[static_cast<std::size_t>(whites[static_cast<std::size_t>(i)])] = i;
  // Automorphisms restricted to white positions.
  std::vector<std::vector<int>> white_perms;
  for (const auto& a : auts) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      p[static_cast<std::size_t>(i)] =
          white_pos[static_cast<std::size_t>(a[static_cast<std::size_t>(whites[static_cast<std::size_t>(i)])])];
    white_perms.push_back(std::move(p));
  }

  // Bit k set <=> white k carries -1. Lexicographic order of the sign vector
  // is numeric order of the mask with bit 0 most significant, so compare
  // reversed masks.
  const unsigned total = 1u << n;
  auto apply_perm = [&](unsigned mask, const std::vector<int>& p) {
    unsigned out = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) out |= 1u << p[static_cast<std::size_t>(i)];
    return out;
  };
  auto lex_key = [&](unsigned mask) {
    unsigned key = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) key |= 1u << (n - 1 - i);
    return key;
  };

  std::vector<bool> seen(total, false);
  std::vector<SignOrbit> orbits;
  for (unsigned start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::vector<unsigned> orbit;
    std::queue<unsigned> frontier;
    seen[start] = true;
    frontier.push(start);
    while (!frontier.empty()) {
      unsigned m = frontier.front();
      frontier.pop();
      orbit.push_back(m);
      unsigned flipped = ~m & (total - 1);
      if (!seen[flipped]) {
        seen[flipped] = true;
        frontier.push(flipped);
      }
      for (const auto& p : white_perms) {
        unsigned im = apply_perm(m, p);
        if (!seen[im]) {
          seen[im] = true;
          frontier.push(im);
        }
      }
    }
    unsigned rep = *std::min_element(orbit.begin(), orbit.end(), [&](unsigned a, unsigned b) {
      return lex_key(a) < lex_key(b);
    });
    SignOrbit o;
    o.size = static_cast<int>(orbit.size());
    for (int i = 0; i < n; ++i) o.representative.push_back(((rep >> i) & 1u) ? -1 : +1);
    orbits.push_back(std::move(o));
  }
  // +1 sorts before -1, so the all-positive orbit comes first.
  std::sort(orbits.begin(), orbits.end(), [](const SignOrbit& a, const SignOrbit& b) {
    for (std::size_t i = 0; i < a.representative.size() && i < b.representative.size(); ++i)
      if (a.representative[i] != b.representative[i]) return a.representative[i] > b.representative[i];
    return a.representative.size() < b.representative.size();
  });
  return orbits;
}

bool oriented_signs(const DistinguishingGraph& d) {
  Sign first = 0;
  for (int v = 0; v < d.graph.vertex_count(); ++v) {
    if (d.graph.kind[static_cast<std::size_t>(v)] != VertexKind::White) continue;
    if (first == 0) first = d.graph.sign[static_cast<std::size_t>(v)];
    if (d.graph.sign[static_cast<std::size_t>(v)] != first) return false;
  }
  return true;
}

DistinguishingGraph with_white_signs(const DistinguishingGraph& d, const std::vector<Sign>& signs) {
  const std::vector<int> whites = d.graph.vertices_of(VertexKind::White);
  if (signs.size() != whites.size())
    throw std::invalid_argument("sign vector length must equal the white count");
  DistinguishingGraph out = d;
  for (std::size_t i = 0; i < whites.size(); ++i) {
    if (signs[i] != +1 && signs[i] != -1) throw std::invalid_argument("signs must be +1 or -1");
    out.graph.sign[static_cast<std::size_t>(whites[i])] = signs[i];
  }
  return out;
}

}  // namespace tricrit
