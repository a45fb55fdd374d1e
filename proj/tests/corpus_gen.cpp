// Enumerates every graph on 1..8 vertices up to isomorphism and writes one
// graph6 file per order into the directory given as argv[1]. Deliberately
// self-contained: its own canonical form, connectivity test, and graph6
// encoder, so the corpora are independent of the library under test.
//
// The enumeration extends each (n-1)-vertex representative by one vertex
// with every possible neighborhood, then dedupes by an exact canonical
// form: the minimum adjacency code over all vertex orderings compatible
// with an iterated-refinement coloring. Equal codes mean equal relabeled
// adjacency matrices, so the form is exact, and the published counts are
// re-checked before anything is written.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace {

constexpr int kMaxN = 8;

struct SmallGraph {
  int n = 0;
  std::array<std::uint8_t, kMaxN> adj{};  // adj[v] = neighbor bitmask
};

// Published counts of graphs up to isomorphism (all / connected).
constexpr long kAllCounts[kMaxN + 1] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
constexpr long kConnectedCounts[kMaxN + 1] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};

// Adjacency code of the graph relabeled by perm (perm[new] = old): the
// upper-triangle bits in column-major order, first pair most significant.
std::uint64_t code_under(const SmallGraph& g, const std::array<int, kMaxN>& perm) {
  std::uint64_t code = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      code <<= 1;
      code |= (g.adj[perm[i]] >> perm[j]) & 1u;
    }
  return code;
}

// Iterated neighborhood refinement: start from degrees, repeatedly split
// classes by the multiset of neighbor colors, with class ids assigned in
// sorted-signature order so the partition itself is isomorphism-invariant.
std::array<int, kMaxN> refine_colors(const SmallGraph& g) {
  std::array<int, kMaxN> color{};
  for (int v = 0; v < g.n; ++v) color[v] = std::popcount(g.adj[v]);

  for (int round = 0; round < kMaxN; ++round) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      for (int w = 0; w < g.n; ++w)
        if ((g.adj[v] >> w) & 1u) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> order(sig.begin(), sig.begin() + g.n);
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());

    std::array<int, kMaxN> next{};
    for (int v = 0; v < g.n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(order.begin(), order.end(), sig[v]) - order.begin());
    if (std::equal(color.begin(), color.begin() + g.n, next.begin())) break;
    color = next;
  }
  return color;
}

// Exact canonical form: minimum code over every ordering that lists the
// refinement classes in class order and permutes freely inside each class.
std::uint64_t canonical_code(const SmallGraph& g) {
  auto color = refine_colors(g);

  // Colors are dense class indices after refinement.
  int nclasses = 1 + *std::max_element(color.begin(), color.begin() + g.n);
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(nclasses));
  for (int v = 0; v < g.n; ++v) classes[static_cast<std::size_t>(color[v])].push_back(v);

  std::uint64_t best = ~0ull;
  std::array<int, kMaxN> perm{};
  // Odometer over per-class permutations (each class kept sorted between
  // next_permutation sweeps).
  while (true) {
    int pos = 0;
    for (const auto& cl : classes)
      for (int v : cl) perm[pos++] = v;
    best = std::min(best, code_under(g, perm));

    std::size_t k = 0;
    while (k < classes.size() &&
           !std::next_permutation(classes[k].begin(), classes[k].end()))
      ++k;
    if (k == classes.size()) break;
  }
  return best;
}

bool connected(const SmallGraph& g) {
  if (g.n == 0) return false;
  std::uint8_t seen = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.n; ++w)
      if (((g.adj[v] >> w) & 1u) && !((seen >> w) & 1u)) {
        seen |= std::uint8_t(1u << w);
        stack.push_back(w);
      }
  }
  return seen == (1u << g.n) - 1u;
}

// Independent short-form graph6 encoder.
std::string graph6_line(const SmallGraph& g) {
  std::string out(1, static_cast<char>(g.n + 63));
  int bit = 0, acc = 0;
  auto push = [&](int b) {
    acc = (acc << 1) | b;
    if (++bit == 6) {
      out += static_cast<char>(acc + 63);
      bit = 0;
      acc = 0;
    }
  };
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) push((g.adj[i] >> j) & 1u);
  if (bit > 0) out += static_cast<char>((acc << (6 - bit)) + 63);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s OUTPUT_DIR\n", argv[0]);
    return 2;
  }
  std::filesystem::path outdir = argv[1];
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) {
    std::fprintf(stderr, "cannot create %s: %s\n", outdir.c_str(), ec.message().c_str());
    return 2;
  }

  std::vector<SmallGraph> level{SmallGraph{1, {}}};
  bool all_ok = true;

  for (int n = 1; n <= kMaxN; ++n) {
    if (n > 1) {
      // Extend every (n-1)-representative by one vertex, every neighborhood.
      std::vector<SmallGraph> next;
      std::unordered_set<std::uint64_t> seen;
      for (const SmallGraph& g : level) {
        for (unsigned s = 0; s < (1u << (n - 1)); ++s) {
          SmallGraph h = g;
          h.n = n;
          h.adj[n - 1] = static_cast<std::uint8_t>(s);
          for (int v = 0; v < n - 1; ++v)
            if ((s >> v) & 1u) h.adj[v] |= std::uint8_t(1u << (n - 1));
          if (seen.insert(canonical_code(h)).second) next.push_back(h);
        }
      }
      level = std::move(next);
    }

    long total = static_cast<long>(level.size());
    long conn = static_cast<long>(std::count_if(level.begin(), level.end(), connected));
    std::printf("n=%d: %ld graphs (%ld connected)\n", n, total, conn);
    if (total != kAllCounts[n] || conn != kConnectedCounts[n]) {
      std::fprintf(stderr, "n=%d: expected %ld graphs (%ld connected)\n", n, kAllCounts[n],
                   kConnectedCounts[n]);
      all_ok = false;
    }

    std::vector<std::string> lines;
    lines.reserve(level.size());
    for (const SmallGraph& g : level) lines.push_back(graph6_line(g));
    std::sort(lines.begin(), lines.end());

    std::ofstream out(outdir / ("all_n" + std::to_string(n) + ".g6"));
    for (const auto& line : lines) out << line << '\n';
    if (!out) {
      std::fprintf(stderr, "write failed for n=%d\n", n);
      return 2;
    }
  }

  if (!all_ok) {
    std::fprintf(stderr, "enumeration self-check failed\n");
    return 1;
  }
  return 0;
}
