#pragma once

#include <string>
#include <string_view>

#include "gsc/claims.hpp"
#include "gsc/cutset.hpp"
#include "gsc/generating.hpp"
#include "gsc/recognize.hpp"
#include "gsc/verify.hpp"

namespace gsc {

/// JSON renderings of the certificate and report types. Kept as plain
/// strings so the public headers stay free of any particular JSON library.
///
/// Shapes:
///   cut certificate   {"cutset":[...],"sideA":[...],"sideB":[...]}
///   matching cut      {"sideA":[...],"sideB":[...],"edges":[[u,v],...]}
///   sequence          [{"kind":"K3","attach":"root","fresh":[...]}, ...]
///                     attach is "root", {"edge":[i,j]} or
///                     {"triangle":[i,j,k]}; prism edge attachments carry
///                     "via":"matching"|"triangle" inside the edge object
///   recognition       {"verdict":"member","certificate":[...]} or
///                     {"verdict":"non-member","trace":[{"graph6":...,
///                      "reason":...}, ...]}
///   audit             {"claim6":{"holds":true}, ...}; failing claims add
///                     "witness" with vertices/edges/note
///   report            counters plus parse errors and counterexamples
std::string to_json_text(const CutCertificate& cert);
std::string to_json_text(const MatchingCutCertificate& cert);
std::string to_json_text(const GeneratingSequence& s);
std::string to_json_text(const RecognitionResult& r);
std::string to_json_text(const ClaimAudit& audit);
std::string to_json_text(const VerificationReport& report);

/// Parse a sequence from its JSON form. Structural problems (bad kinds,
/// missing fields, non-integer ids) raise std::invalid_argument; the result
/// is not otherwise validated, run validate() for that.
GeneratingSequence sequence_from_json_text(std::string_view text);

}  // namespace gsc
