#include "gsc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <sstream>
#include <thread>

#include "gsc/cutset.hpp"
#include "gsc/generating.hpp"
#include "gsc/graph6.hpp"
#include "gsc/recognize.hpp"
#include "gsc/serialize.hpp"

namespace gsc {

void VerificationReport::merge(const VerificationReport& other) {
  if (check.empty()) check = other.check;
  if (corpus_id.empty()) corpus_id = other.corpus_id;
  processed += other.processed;
  skipped += other.skipped;
  passed += other.passed;
  failed += other.failed;
  parse_errors.insert(parse_errors.end(), other.parse_errors.begin(), other.parse_errors.end());
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  wall_ms += other.wall_ms;
}

namespace {

// One graph's worth of work: look at g, record pass/fail/skip into rep.
using CheckFn = void (*)(const Graph&, const std::string&, VerificationReport&,
                         const VerifyOptions&);

// Chunked worker pool. Each chunk fills its own partial report; the merge
// happens in chunk order, so the final report does not depend on thread
// scheduling.
VerificationReport run_corpus(const std::vector<std::string>& lines, const std::string& corpus_id,
                              const VerifyOptions& opt, const char* check_name, CheckFn check) {
  const auto t0 = std::chrono::steady_clock::now();
  const long total = static_cast<long>(lines.size());
  const long chunk = opt.chunk_size > 0 ? opt.chunk_size : 1024;
  const long nchunks = (total + chunk - 1) / chunk;

  int threads = opt.parallelism > 0 ? opt.parallelism
                                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(std::min<long>(threads < 1 ? 1 : threads, std::max(1l, nchunks)));

  std::vector<VerificationReport> partial(static_cast<std::size_t>(std::max(1l, nchunks)));
  std::atomic<long> next{0};

  auto work = [&]() {
    for (;;) {
      long c = next.fetch_add(1);
      if (c >= nchunks) return;
      VerificationReport& rep = partial[static_cast<std::size_t>(c)];
      const long hi = std::min(total, (c + 1) * chunk);
      for (long i = c * chunk; i < hi; ++i) {
        const std::string& line = lines[static_cast<std::size_t>(i)];
        if (line.empty()) continue;
        Graph g;
        try {
          g = from_graph6(line);
        } catch (const Graph6ParseError& e) {
          rep.parse_errors.push_back({i + 1, e.what()});
          continue;
        }
        check(g, line, rep, opt);
      }
    }
  };

  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  VerificationReport out;
  out.check = check_name;
  out.corpus_id = corpus_id;
  for (const auto& p : partial) out.merge(p);
  out.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

void check_theorem1(const Graph& g, const std::string& line, VerificationReport& rep,
                    const VerifyOptions& opt) {
  const int n = g.vertex_count();
  if (g.edge_count() > 2 * n - 4 || !is_connected(g)) {
    ++rep.skipped;
    return;
  }
  ++rep.processed;
  auto cert = find_stable_cutset(g);
  if (!cert) {
    ++rep.failed;
    rep.counterexamples.push_back({line, "no stable cutset found"});
    return;
  }
  if (!is_valid_stable_cutset(g, *cert)) {
    ++rep.failed;
    rep.counterexamples.push_back({line, "stable cutset certificate does not validate"});
    return;
  }
  ++rep.passed;
  if (opt.collect_witnesses) rep.witnesses.push_back({line, to_json_text(*cert)});
}

void check_corollary3(const Graph& g, const std::string& line, VerificationReport& rep,
                      const VerifyOptions& opt) {
  const int n = g.vertex_count();
  if (g.edge_count() > 2 * n - 4 || !is_connected(g)) {
    ++rep.skipped;
    return;
  }
  ++rep.processed;

  std::vector<int> cut_vertices;
  for (int v = 0; v < n; ++v) {
    VertexSet rest = g.vertices();
    rest.remove(v);
    if (components_within(g, rest).size() > 1) cut_vertices.push_back(v);
  }

  bool all_ok = true;
  std::string first_problem;
  for (int x = 0; x < n && all_ok; ++x) {
    if (cut_vertices.size() == 1 && cut_vertices[0] == x) continue;  // inadmissible
    if (opt.x_filter && !opt.x_filter(g, x)) continue;
    auto cert = find_stable_cutset_avoiding(g, x);
    if (!cert) {
      all_ok = false;
      first_problem = "no stable cutset avoiding vertex " + std::to_string(x);
    } else if (cert->cutset.contains(x)) {
      all_ok = false;
      first_problem = "returned cutset contains the avoided vertex " + std::to_string(x);
    } else if (!is_valid_stable_cutset(g, *cert)) {
      all_ok = false;
      first_problem = "certificate for avoided vertex " + std::to_string(x) + " does not validate";
    } else if (opt.collect_witnesses) {
      rep.witnesses.push_back(
          {line, "{\"x\":" + std::to_string(x) + ",\"certificate\":" + to_json_text(*cert) + "}"});
    }
  }

  if (all_ok) {
    ++rep.passed;
  } else {
    ++rep.failed;
    rep.counterexamples.push_back({line, first_problem});
  }
}

void check_theorem5(const Graph& g, const std::string& line, VerificationReport& rep,
                    const VerifyOptions& opt) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n < 3 || m > 2 * n - 3 || !is_connected(g)) {
    ++rep.skipped;
    return;
  }
  ++rep.processed;

  if (m <= 2 * n - 4) {
    // Below the extremal count, generated graphs cannot occur, so the claim
    // reduces to a stable cutset existing.
    auto cert = find_stable_cutset(g);
    if (cert && is_valid_stable_cutset(g, *cert)) {
      ++rep.passed;
      if (opt.collect_witnesses) rep.witnesses.push_back({line, to_json_text(*cert)});
    } else {
      ++rep.failed;
      rep.counterexamples.push_back(
          {line, cert ? "stable cutset certificate does not validate" : "no stable cutset found"});
    }
    return;
  }

  // Extremal case: exactly one of {stable cutset, generated} must hold.
  auto cut = find_stable_cutset(g);
  auto rec = recognize(g);
  if (cut && rec.member) {
    ++rep.failed;
    rep.counterexamples.push_back({line, "both a stable cutset and a generating sequence exist"});
    return;
  }
  if (!cut && !rec.member) {
    ++rep.failed;
    rep.counterexamples.push_back({line, "neither a stable cutset nor a generating sequence"});
    return;
  }
  if (cut) {
    if (!is_valid_stable_cutset(g, *cut)) {
      ++rep.failed;
      rep.counterexamples.push_back({line, "stable cutset certificate does not validate"});
      return;
    }
    ++rep.passed;
    if (opt.collect_witnesses) rep.witnesses.push_back({line, to_json_text(*cut)});
    return;
  }
  if (!rec.certificate || build(*rec.certificate) != g) {
    ++rep.failed;
    rep.counterexamples.push_back({line, "generating sequence does not rebuild the input"});
    return;
  }
  ++rep.passed;
  if (opt.collect_witnesses) rep.witnesses.push_back({line, to_json_text(*rec.certificate)});
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

VerificationReport verify_theorem1(const std::vector<std::string>& lines,
                                   const std::string& corpus_id, const VerifyOptions& options) {
  return run_corpus(lines, corpus_id, options, "theorem1", check_theorem1);
}

VerificationReport verify_theorem1(std::istream& corpus, const std::string& corpus_id,
                                   const VerifyOptions& options) {
  return verify_theorem1(read_lines(corpus), corpus_id, options);
}

VerificationReport verify_corollary3(const std::vector<std::string>& lines,
                                     const std::string& corpus_id, const VerifyOptions& options) {
  return run_corpus(lines, corpus_id, options, "corollary3", check_corollary3);
}

VerificationReport verify_corollary3(std::istream& corpus, const std::string& corpus_id,
                                     const VerifyOptions& options) {
  return verify_corollary3(read_lines(corpus), corpus_id, options);
}

VerificationReport verify_theorem5(const std::vector<std::string>& lines,
                                   const std::string& corpus_id, const VerifyOptions& options) {
  return run_corpus(lines, corpus_id, options, "theorem5", check_theorem5);
}

VerificationReport verify_theorem5(std::istream& corpus, const std::string& corpus_id,
                                   const VerifyOptions& options) {
  return verify_theorem5(read_lines(corpus), corpus_id, options);
}

std::string summarize(const VerificationReport& report) {
  std::ostringstream out;
  out << report.check << " on " << report.corpus_id << ": processed " << report.processed
      << ", passed " << report.passed << ", failed " << report.failed << ", skipped "
      << report.skipped << ", parse errors " << report.parse_errors.size() << " ("
      << static_cast<long>(report.wall_ms) << " ms)";

  const std::size_t cap = 20;
  for (std::size_t i = 0; i < report.counterexamples.size() && i < cap; ++i)
    out << "\n  counterexample " << report.counterexamples[i].graph6 << ": "
        << report.counterexamples[i].detail;
  if (report.counterexamples.size() > cap)
    out << "\n  ... and " << (report.counterexamples.size() - cap) << " more counterexamples";
  for (std::size_t i = 0; i < report.parse_errors.size() && i < cap; ++i)
    out << "\n  line " << report.parse_errors[i].line_number << ": "
        << report.parse_errors[i].message;
  if (report.parse_errors.size() > cap)
    out << "\n  ... and " << (report.parse_errors.size() - cap) << " more parse errors";
  return out.str();
}

}  // namespace gsc
