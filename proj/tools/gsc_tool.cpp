// Command-line front end: verify theorem corpora, search stable cutsets,
// recognize membership, generate random members, audit structural claims,
// and convert between formats. One graph6 line per graph on input; "-"
// means stdin. Exit status: 0 ok, 1 verification failures, 2 usage or
// input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsc/claims.hpp"
#include "gsc/cutset.hpp"
#include "gsc/dot.hpp"
#include "gsc/generating.hpp"
#include "gsc/graph6.hpp"
#include "gsc/recognize.hpp"
#include "gsc/serialize.hpp"
#include "gsc/verify.hpp"

namespace {

struct Corpus {
  std::string id;
  std::vector<std::string> lines;
};

std::vector<std::string> lines_from_stream(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Each input file becomes one corpus; no files (or "-") means stdin.
std::vector<Corpus> load_corpora(const std::vector<std::string>& paths) {
  std::vector<Corpus> corpora;
  if (paths.empty()) {
    corpora.push_back({"stdin", lines_from_stream(std::cin)});
    return corpora;
  }
  for (const auto& path : paths) {
    if (path == "-") {
      corpora.push_back({"stdin", lines_from_stream(std::cin)});
      continue;
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    corpora.push_back({path, lines_from_stream(in)});
  }
  return corpora;
}

std::string whole_input(const std::vector<std::string>& paths) {
  std::ostringstream buf;
  for (const auto& corpus : load_corpora(paths))
    for (const auto& line : corpus.lines) buf << line << '\n';
  return buf.str();
}

std::string ids_text(const gsc::VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::string piece_text(const gsc::Piece& p) {
  std::string out = p.kind == gsc::PieceKind::K3 ? "K3" : "prism";
  switch (p.attach) {
    case gsc::AttachKind::Root:
      out += " root";
      break;
    case gsc::AttachKind::Edge:
      out += " on edge (" + std::to_string(p.targets[0]) + "," + std::to_string(p.targets[1]) + ")";
      if (p.kind == gsc::PieceKind::Prism)
        out += p.glue == gsc::PrismEdgeGlue::Matching ? " via matching" : " via triangle";
      break;
    case gsc::AttachKind::Triangle:
      out += " on triangle (" + std::to_string(p.targets[0]) + "," + std::to_string(p.targets[1]) +
             "," + std::to_string(p.targets[2]) + ")";
      break;
  }
  if (!p.fresh.empty()) {
    out += " fresh";
    for (int f : p.fresh) out += " " + std::to_string(f);
  }
  return out;
}

// Runs fn once per nonempty line; parse and precondition problems go to
// stderr with their line number and flip the exit status to 2.
int for_each_graph(const std::vector<Corpus>& corpora,
                   const std::function<void(const gsc::Graph&)>& fn) {
  int status = 0;
  for (const auto& corpus : corpora) {
    long ln = 0;
    for (const auto& line : corpus.lines) {
      ++ln;
      if (line.empty()) continue;
      try {
        fn(gsc::from_graph6(line));
      } catch (const std::exception& e) {
        std::cerr << corpus.id << ":" << ln << ": " << e.what() << "\n";
        status = 2;
      }
    }
  }
  return status;
}

int default_parallelism() {
  if (const char* env = std::getenv("GSC_PARALLELISM")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // auto
}

int run_verify(const std::string& theorem, const std::vector<std::string>& paths,
               const std::string& format, const gsc::VerifyOptions& options) {
  auto run_one = [&](const std::vector<std::string>& lines, const std::string& id) {
    if (theorem == "1") return gsc::verify_theorem1(lines, id, options);
    if (theorem == "5") return gsc::verify_theorem5(lines, id, options);
    return gsc::verify_corollary3(lines, id, options);
  };

  gsc::VerificationReport merged;
  bool first = true;
  for (const auto& corpus : load_corpora(paths)) {
    gsc::VerificationReport rep = run_one(corpus.lines, corpus.id);
    std::cerr << gsc::summarize(rep) << "\n";
    if (first) {
      merged = std::move(rep);
      first = false;
    } else {
      merged.corpus_id += "+" + rep.corpus_id;
      rep.corpus_id.clear();
      rep.check.clear();
      merged.merge(rep);
    }
  }

  if (format == "json")
    std::cout << gsc::to_json_text(merged) << "\n";
  else
    std::cout << gsc::summarize(merged) << "\n";

  if (merged.failed > 0) return 1;
  if (!merged.parse_errors.empty()) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphs with 2n-3 edges and no stable cutset: build, recognize, verify"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "check a theorem over graph6 corpora");
  std::string theorem;
  std::vector<std::string> verify_in;
  std::string verify_format = "json";
  gsc::VerifyOptions verify_options;
  verify_options.parallelism = default_parallelism();
  verify->add_option("--theorem", theorem, "which statement to check: 1, 5 or cor3")
      ->required()
      ->check(CLI::IsMember({"1", "5", "cor3"}));
  verify->add_option("--in", verify_in, "graph6 corpus files (default stdin)");
  verify->add_option("--format", verify_format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("-j,--parallelism", verify_options.parallelism,
                     "worker threads (default $GSC_PARALLELISM or all cores)");
  verify->add_option("--chunk-size", verify_options.chunk_size, "lines per work unit");
  verify->add_flag("--witnesses", verify_options.collect_witnesses,
                   "record a witness for every passing graph");

  // cutset
  auto* cutset = app.add_subcommand("cutset", "find a stable cutset per input graph");
  std::vector<std::string> cutset_in;
  std::string cutset_format = "json";
  int avoid = -1;
  cutset->add_option("--in", cutset_in, "graph6 files (default stdin)");
  cutset->add_option("--avoid", avoid, "vertex the cutset must not contain");
  cutset->add_option("--format", cutset_format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));

  // recognize
  auto* recognize = app.add_subcommand("recognize", "decide membership, with certificate");
  std::vector<std::string> recognize_in;
  std::string recognize_format = "json";
  recognize->add_option("--in", recognize_in, "graph6 files (default stdin)");
  recognize->add_option("--format", recognize_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random member");
  int pieces = 1;
  std::uint64_t seed = 0;
  std::string emit = "graph6";
  gen->add_option("--pieces", pieces, "number of pieces")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--emit", emit, "what to print")
      ->check(CLI::IsMember({"graph6", "dot", "sequence"}));

  // audit
  auto* audit = app.add_subcommand("audit", "evaluate the structural claims 6-14");
  std::vector<std::string> audit_in;
  std::string audit_format = "json";
  audit->add_option("--in", audit_in, "graph6 files (default stdin)");
  audit->add_option("--format", audit_format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));

  // convert
  auto* convert = app.add_subcommand("convert", "translate between formats");
  std::vector<std::string> convert_in;
  std::string from = "graph6", to = "dot";
  convert->add_option("--in", convert_in, "input files (default stdin)");
  convert->add_option("--from", from, "input format")
      ->check(CLI::IsMember({"graph6", "sequence"}));
  convert->add_option("--to", to, "output format")->check(CLI::IsMember({"dot", "graph6"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage problems exit 2
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(theorem, verify_in, verify_format, verify_options);

    if (app.got_subcommand(cutset)) {
      return for_each_graph(load_corpora(cutset_in), [&](const gsc::Graph& g) {
        auto cert = avoid >= 0 ? gsc::find_stable_cutset_avoiding(g, avoid)
                               : gsc::find_stable_cutset(g);
        if (cutset_format == "dot") {
          gsc::DotStyle style;
          if (cert) style.filled_vertices = cert->cutset;
          std::cout << gsc::to_dot(g, style);
        } else if (cutset_format == "json") {
          std::cout << (cert ? gsc::to_json_text(*cert) : "null") << "\n";
        } else if (cert) {
          std::cout << "cutset " << ids_text(cert->cutset) << " sides " << ids_text(cert->side_a)
                    << " " << ids_text(cert->side_b) << "\n";
        } else {
          std::cout << "none\n";
        }
      });
    }

    if (app.got_subcommand(recognize)) {
      return for_each_graph(load_corpora(recognize_in), [&](const gsc::Graph& g) {
        gsc::RecognitionResult r = gsc::recognize(g);
        if (recognize_format == "json") {
          std::cout << gsc::to_json_text(r) << "\n";
        } else if (r.member) {
          std::cout << "member, " << r.certificate->size() << " pieces\n";
          for (const auto& p : r.certificate->pieces) std::cout << "  " << piece_text(p) << "\n";
        } else {
          std::cout << "non-member\n";
          for (const auto& t : r.trace) std::cout << "  " << t.graph6 << ": " << t.reason << "\n";
        }
      });
    }

    if (app.got_subcommand(gen)) {
      gsc::GeneratingSequence s = gsc::random_gsc(pieces, seed);
      if (emit == "sequence")
        std::cout << gsc::to_json_text(s) << "\n";
      else if (emit == "dot")
        std::cout << gsc::to_dot(gsc::build(s));
      else
        std::cout << gsc::to_graph6(gsc::build(s)) << "\n";
      return 0;
    }

    if (app.got_subcommand(audit)) {
      return for_each_graph(load_corpora(audit_in), [&](const gsc::Graph& g) {
        gsc::ClaimAudit a = gsc::audit_claims(g);
        if (audit_format == "json") {
          std::cout << gsc::to_json_text(a) << "\n";
        } else if (audit_format == "dot") {
          // Mark the first failing claim's structure for quick inspection.
          gsc::DotStyle style;
          for (int c = gsc::ClaimAudit::kFirstClaim; c <= gsc::ClaimAudit::kLastClaim; ++c) {
            const auto& f = a.claim(c);
            if (f.holds) continue;
            for (const auto& s : f.vertex_sets) style.filled_vertices |= s;
            style.bold_edges = f.edges;
            break;
          }
          std::cout << gsc::to_dot(g, style);
        } else {
          for (int c = gsc::ClaimAudit::kFirstClaim; c <= gsc::ClaimAudit::kLastClaim; ++c) {
            const auto& f = a.claim(c);
            std::cout << "claim " << c << ": " << (f.holds ? "holds" : "fails");
            if (!f.holds && !f.note.empty()) std::cout << " (" << f.note << ")";
            std::cout << "\n";
          }
        }
      });
    }

    if (app.got_subcommand(convert)) {
      if (from == "sequence") {
        gsc::GeneratingSequence s = gsc::sequence_from_json_text(whole_input(convert_in));
        gsc::Graph g = gsc::build(s);
        if (to == "graph6")
          std::cout << gsc::to_graph6(g) << "\n";
        else
          std::cout << gsc::to_dot(g);
        return 0;
      }
      return for_each_graph(load_corpora(convert_in), [&](const gsc::Graph& g) {
        if (to == "graph6")
          std::cout << gsc::to_graph6(g) << "\n";
        else
          std::cout << gsc::to_dot(g);
      });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
