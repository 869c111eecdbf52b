#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "boxchrom/constructions.hpp"
#include "boxchrom/solver.hpp"

namespace bxc {

/// Color-count 5-tuple (|C1|, |C1 u C2|, |C2|, |C2 u C3|, |C3|) over three
/// designated box subsets, ordered componentwise.
struct Signature {
  int c1 = 0, c12 = 0, c2 = 0, c23 = 0, c3 = 0;
  bool operator==(const Signature&) const = default;
};

Signature signature(const Coloring& c, const std::set<std::string>& a1,
                    const std::set<std::string>& a2, const std::set<std::string>& a3);

/// Componentwise >=; a partial order, incomparable pairs compare false both ways.
bool signature_geq(const Signature& s, const Signature& t);

struct Claim1Result {
  bool pass = false;
  long long enumerated = 0;
  std::optional<Coloring> counterexample;
};

/// Enumerates all canonical proper colorings of the gadget and checks that
/// every signature dominates one of the three threshold signatures.
Claim1Result check_claim1(const Arrangement& x);

struct Claim2Result {
  bool pass = false;
  long long nodes = 0;
  std::optional<Coloring> counterexample;
};

/// Pass iff no proper coloring keeps every region at 3 or fewer colors.
Claim2Result check_claim2(const Arrangement& y, const SolveOptions& opts = {});

/// True iff every pair in S x T is an edge. Throws EmptyRegion on an empty set.
bool full_overlap(const ConflictGraph& g, const std::set<std::string>& s,
                  const std::set<std::string>& t);

/// Structured, re-checkable record of the chromatic-number claim.
using Certificate = nlohmann::ordered_json;

/// Verifies the structural premises of the composition argument on the given
/// graph and emits the lower-bound record concluding chi >= 8.
/// Throws StructureError naming the first failing premise.
Certificate verify_composition(const ZStructure& zs, const ConflictGraph& g);

struct CertifyOptions {
  SolveOptions solve;
  bool export_cnf7 = false;  // also embed the 7-colorability CNF of abstract Z
};

/// End-to-end certification that the two-floor arrangement has chromatic
/// number exactly 8. Any failing stage aborts with the stage named.
Certificate certify_z(const CertifyOptions& opts = {});

/// Replays the internal consistency of a stored certificate.
bool recheck_certificate(const Certificate& cert);

}  // namespace bxc
