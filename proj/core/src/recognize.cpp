#include "gsc/recognize.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "gsc/cutset.hpp"
#include "gsc/graph6.hpp"

namespace gsc {

bool is_triangle(const Graph& g) {
  return g.vertex_count() == 3 && g.edge_count() == 3;
}

bool is_prism(const Graph& g) {
  if (g.vertex_count() != 6 || g.edge_count() != 9) return false;
  for (int v = 0; v < 6; ++v)
    if (g.degree(v) != 3) return false;
  return triangles(g).size() == 2;
}

namespace {

struct MemoEntry {
  bool member = false;
  std::optional<GeneratingSequence> certificate;  // labeled like the memo key's graph
};

class Memo {
 public:
  std::optional<MemoEntry> find(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& key, MemoEntry entry) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(key, std::move(entry));
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::string, MemoEntry> map_;
};

Memo& memo() {
  static Memo m;
  return m;
}

// Relabel by (degree, id). Graphs that coincide after this cheap partial
// canonicalization share a memo entry; everything is computed in the
// relabeled coordinates so stored certificates match the key exactly.
struct SortedForm {
  Graph graph;
  std::vector<int> new_to_old;
};

SortedForm degree_sorted(const Graph& g) {
  int n = g.vertex_count();
  SortedForm out;
  out.new_to_old.resize(static_cast<std::size_t>(n));
  std::iota(out.new_to_old.begin(), out.new_to_old.end(), 0);
  std::sort(out.new_to_old.begin(), out.new_to_old.end(), [&](int a, int b) {
    return std::make_pair(g.degree(a), a) < std::make_pair(g.degree(b), b);
  });
  std::vector<int> old_to_new(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) old_to_new[static_cast<std::size_t>(out.new_to_old[static_cast<std::size_t>(i)])] = i;
  Graph h(n);
  for (auto [u, v] : g.edges())
    h.add_edge(old_to_new[static_cast<std::size_t>(u)], old_to_new[static_cast<std::size_t>(v)]);
  out.graph = std::move(h);
  return out;
}

// First piece containing all of `want` together with its pairwise edges.
// Exists for every edge or triangle of a built graph, since glued cliques
// never straddle pieces.
int piece_containing_clique(const GeneratingSequence& s, VertexSet want) {
  auto wv = want.to_vector();
  for (int i = 0; i < s.size(); ++i) {
    const Piece& p = s.pieces[static_cast<std::size_t>(i)];
    if (!want.subset_of(piece_vertices(p))) continue;
    auto pe = piece_edges(p);
    auto adjacent = [&](int a, int b) {
      for (auto [x, y] : pe)
        if ((x == a && y == b) || (x == b && y == a)) return true;
      return false;
    };
    bool ok = true;
    for (std::size_t a = 0; a < wv.size(); ++a)
      for (std::size_t b = a + 1; b < wv.size(); ++b)
        ok = ok && adjacent(wv[a], wv[b]);
    if (ok) return i + 1;
  }
  return -1;
}

RecognitionResult recognize_impl(const Graph& g);

// The decomposition body. Assumes g connected with at least 3 vertices;
// results are labeled like g.
RecognitionResult classify(const Graph& g) {
  RecognitionResult r;
  const std::string g6 = to_graph6(g);
  const int n = g.vertex_count();
  const int m = g.edge_count();

  if (m != 2 * n - 3) {
    r.trace.push_back({g6, "has " + std::to_string(m) + " edges, membership needs exactly " +
                               std::to_string(2 * n - 3)});
    return r;
  }
  if (is_triangle(g)) {
    Piece root;
    root.kind = PieceKind::K3;
    root.attach = AttachKind::Root;
    root.fresh = {0, 1, 2};
    r.member = true;
    r.certificate = GeneratingSequence{{root}};
    r.trace.push_back({g6, "base graph: triangle"});
    return r;
  }
  if (is_prism(g)) {
    r.member = true;
    r.certificate = GeneratingSequence{{detail::prism_root_piece(g)}};
    r.trace.push_back({g6, "base graph: prism"});
    return r;
  }

  auto cc = has_clique_cutset(g, {2, 3});
  if (!cc) {
    r.trace.push_back({g6, "not a base graph and no edge or triangle cutset"});
    return r;
  }

  const VertexSet clique = cc->clique;
  auto parts = components_within(g, g.vertices() - clique);
  {
    std::string ids;
    for (int c : clique.to_vector()) ids += (ids.empty() ? "" : ",") + std::to_string(c);
    r.trace.push_back({g6, (clique.size() == 2 ? "edge cutset {" : "triangle cutset {") + ids +
                               "}, " + std::to_string(parts.size()) + " parts"});
  }

  // Every part of a member splits into a member again, so the first failure
  // settles non-membership; no backtracking over cutset choices is needed.
  GeneratingSequence assembled;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::vector<int> old_to_new;
    Graph part = induced_subgraph(g, parts[j] | clique, &old_to_new);
    RecognitionResult sub = recognize_impl(part);
    r.trace.insert(r.trace.end(), sub.trace.begin(), sub.trace.end());
    if (!sub.member) return r;

    std::vector<int> back(static_cast<std::size_t>(part.vertex_count()), -1);
    for (int v = 0; v < n; ++v)
      if (old_to_new[static_cast<std::size_t>(v)] >= 0)
        back[static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(v)])] = v;

    if (j == 0) {
      assembled = detail::relabel_sequence(*sub.certificate, back);
      continue;
    }

    // Later parts re-enter through the cutset clique: re-root their
    // sequence at a piece containing it, then turn that root into a gluing
    // onto the clique, which the assembled graph already has.
    VertexSet clique_part;
    for (int c : clique.to_vector()) clique_part.add(old_to_new[static_cast<std::size_t>(c)]);
    int at = piece_containing_clique(*sub.certificate, clique_part);
    assert(at >= 1);
    GeneratingSequence rr = reroot(*sub.certificate, at);

    GeneratingSequence tail;
    tail.pieces.push_back(detail::attach_form(rr.pieces.front(), clique_part));
    tail.pieces.insert(tail.pieces.end(), rr.pieces.begin() + 1, rr.pieces.end());
    tail = detail::relabel_sequence(tail, back);
    assembled.pieces.insert(assembled.pieces.end(), tail.pieces.begin(), tail.pieces.end());
  }

  r.member = true;
  r.certificate = std::move(assembled);
  return r;
}

RecognitionResult recognize_impl(const Graph& g) {
  SortedForm sf = degree_sorted(g);
  const std::string key = to_graph6(sf.graph);

  if (auto hit = memo().find(key)) {
    RecognitionResult r;
    r.member = hit->member;
    if (hit->certificate) r.certificate = detail::relabel_sequence(*hit->certificate, sf.new_to_old);
    r.trace.push_back({to_graph6(g), hit->member ? "already classified: member"
                                                 : "already classified: non-member"});
    return r;
  }

  RecognitionResult on_key = classify(sf.graph);
  memo().store(key, {on_key.member, on_key.certificate});

  RecognitionResult r;
  r.member = on_key.member;
  if (on_key.certificate) r.certificate = detail::relabel_sequence(*on_key.certificate, sf.new_to_old);
  r.trace = std::move(on_key.trace);
  return r;
}

}  // namespace

RecognitionResult recognize(const Graph& g) {
  if (g.vertex_count() < 3) throw std::invalid_argument("recognition needs at least 3 vertices");
  if (!is_connected(g)) throw std::invalid_argument("recognition needs a connected graph");
  RecognitionResult r = recognize_impl(g);
  assert(!r.member || (r.certificate && build(*r.certificate) == g));
  return r;
}

bool recognize_via_theorem(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > 2 * n - 3)
    throw std::invalid_argument("out of regime: " + std::to_string(m) + " edges exceeds 2n-3");
  return m == 2 * n - 3 && !find_stable_cutset(g).has_value();
}

}  // namespace gsc
