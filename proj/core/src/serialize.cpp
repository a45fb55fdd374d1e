#include "gsc/serialize.hpp"

#include <stdexcept>

#include <json.hpp>

namespace gsc {

namespace {

using Json = nlohmann::ordered_json;

Json ids_json(const VertexSet& s) { return Json(s.to_vector()); }

Json edges_json(const std::vector<std::pair<int, int>>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back(Json::array({u, v}));
  return out;
}

Json cut_json(const CutCertificate& cert) {
  Json j;
  j["cutset"] = ids_json(cert.cutset);
  j["sideA"] = ids_json(cert.side_a);
  j["sideB"] = ids_json(cert.side_b);
  return j;
}

Json piece_json(const Piece& p) {
  Json j;
  j["kind"] = p.kind == PieceKind::K3 ? "K3" : "Prism";
  switch (p.attach) {
    case AttachKind::Root:
      j["attach"] = "root";
      break;
    case AttachKind::Edge: {
      Json a;
      a["edge"] = Json::array({p.targets[0], p.targets[1]});
      if (p.kind == PieceKind::Prism)
        a["via"] = p.glue == PrismEdgeGlue::Matching ? "matching" : "triangle";
      j["attach"] = std::move(a);
      break;
    }
    case AttachKind::Triangle: {
      Json a;
      a["triangle"] = Json::array({p.targets[0], p.targets[1], p.targets[2]});
      j["attach"] = std::move(a);
      break;
    }
  }
  j["fresh"] = Json(p.fresh);
  return j;
}

Json sequence_json(const GeneratingSequence& s) {
  Json out = Json::array();
  for (const auto& p : s.pieces) out.push_back(piece_json(p));
  return out;
}

int int_field(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<int>();
}

Piece piece_from_json(const Json& pj) {
  if (!pj.is_object()) throw std::invalid_argument("each piece must be a JSON object");
  Piece p;

  const auto kind = pj.find("kind");
  if (kind == pj.end() || !kind->is_string())
    throw std::invalid_argument("piece is missing a string \"kind\"");
  if (*kind == "K3")
    p.kind = PieceKind::K3;
  else if (*kind == "Prism" || *kind == "prism")
    p.kind = PieceKind::Prism;
  else
    throw std::invalid_argument("unknown piece kind " + kind->dump());

  const auto attach = pj.find("attach");
  if (attach == pj.end()) throw std::invalid_argument("piece is missing \"attach\"");
  if (attach->is_string() && *attach == "root") {
    p.attach = AttachKind::Root;
  } else if (attach->is_object() && attach->contains("edge")) {
    const Json& e = (*attach)["edge"];
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("\"edge\" must list exactly 2 vertex ids");
    p.attach = AttachKind::Edge;
    p.targets = {int_field(e[0], "edge id"), int_field(e[1], "edge id"), -1};
    if (attach->contains("via")) {
      const Json& via = (*attach)["via"];
      if (p.kind != PieceKind::Prism)
        throw std::invalid_argument("\"via\" is only meaningful for prism pieces");
      if (via == "matching")
        p.glue = PrismEdgeGlue::Matching;
      else if (via == "triangle")
        p.glue = PrismEdgeGlue::Triangle;
      else
        throw std::invalid_argument("\"via\" must be \"matching\" or \"triangle\"");
    }
  } else if (attach->is_object() && attach->contains("triangle")) {
    const Json& t = (*attach)["triangle"];
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("\"triangle\" must list exactly 3 vertex ids");
    p.attach = AttachKind::Triangle;
    p.targets = {int_field(t[0], "triangle id"), int_field(t[1], "triangle id"),
                 int_field(t[2], "triangle id")};
  } else {
    throw std::invalid_argument("\"attach\" must be \"root\", {\"edge\":[i,j]} or {\"triangle\":[i,j,k]}");
  }

  if (pj.contains("fresh")) {
    const Json& f = pj["fresh"];
    if (!f.is_array()) throw std::invalid_argument("\"fresh\" must be an array");
    for (const auto& v : f) p.fresh.push_back(int_field(v, "fresh id"));
  }
  return p;
}

}  // namespace

std::string to_json_text(const CutCertificate& cert) { return cut_json(cert).dump(); }

std::string to_json_text(const MatchingCutCertificate& cert) {
  Json j;
  j["sideA"] = ids_json(cert.side_a);
  j["sideB"] = ids_json(cert.side_b);
  j["edges"] = edges_json({cert.edges.begin(), cert.edges.end()});
  return j.dump();
}

std::string to_json_text(const GeneratingSequence& s) { return sequence_json(s).dump(); }

std::string to_json_text(const RecognitionResult& r) {
  Json j;
  if (r.member && r.certificate) {
    j["verdict"] = "member";
    j["certificate"] = sequence_json(*r.certificate);
  } else {
    j["verdict"] = "non-member";
    Json trace = Json::array();
    for (const auto& entry : r.trace) {
      Json t;
      t["graph6"] = entry.graph6;
      t["reason"] = entry.reason;
      trace.push_back(std::move(t));
    }
    j["trace"] = std::move(trace);
  }
  return j.dump();
}

std::string to_json_text(const ClaimAudit& audit) {
  Json j;
  for (int number = ClaimAudit::kFirstClaim; number <= ClaimAudit::kLastClaim; ++number) {
    const ClaimFinding& f = audit.claim(number);
    Json cj;
    cj["holds"] = f.holds;
    if (!f.holds) {
      Json w;
      if (!f.vertex_sets.empty()) {
        Json sets = Json::array();
        for (const auto& s : f.vertex_sets) sets.push_back(ids_json(s));
        w["vertices"] = std::move(sets);
      }
      if (!f.edges.empty()) w["edges"] = edges_json(f.edges);
      if (!f.note.empty()) w["note"] = f.note;
      cj["witness"] = std::move(w);
    }
    j["claim" + std::to_string(number)] = std::move(cj);
  }
  return j.dump();
}

std::string to_json_text(const VerificationReport& report) {
  Json j;
  j["check"] = report.check;
  j["corpus"] = report.corpus_id;
  j["processed"] = report.processed;
  j["skipped"] = report.skipped;
  j["passed"] = report.passed;
  j["failed"] = report.failed;
  j["wallMs"] = report.wall_ms;

  Json pe = Json::array();
  for (const auto& p : report.parse_errors) {
    Json e;
    e["line"] = p.line_number;
    e["message"] = p.message;
    pe.push_back(std::move(e));
  }
  j["parseErrors"] = std::move(pe);

  Json cx = Json::array();
  for (const auto& c : report.counterexamples) {
    Json e;
    e["graph6"] = c.graph6;
    e["detail"] = c.detail;
    cx.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(cx);

  if (!report.witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& w : report.witnesses) {
      Json e;
      e["graph6"] = w.graph6;
      e["witness"] = Json::parse(w.witness_json);
      ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
  }
  return j.dump();
}

GeneratingSequence sequence_from_json_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("a sequence must be a JSON array of pieces");

  GeneratingSequence s;
  try {
    for (const auto& pj : j) s.pieces.push_back(piece_from_json(pj));
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed piece: ") + e.what());
  }
  return s;
}

}  // namespace gsc
