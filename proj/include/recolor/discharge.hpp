#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolor/detect.hpp"
#include "recolor/graph.hpp"
#include "recolor/rational.hpp"

namespace recolor {

enum class ElementKind { VertexElem, FaceElem };

struct ChargeElement {
  ElementKind kind = ElementKind::VertexElem;
  int id = 0;
  bool operator<(const ChargeElement& o) const {
    if (kind != o.kind) return kind < o.kind;
    return id < o.id;
  }
  bool operator==(const ChargeElement& o) const { return kind == o.kind && id == o.id; }
};

struct ChargeTransfer {
  ChargeElement from, to;
  Rat amount;
  std::string rule;
};

struct ChargeLedger {
  std::vector<std::pair<ChargeElement, Rat>> initial;  // vertices then faces, ascending
  std::vector<ChargeTransfer> transfers;
  std::vector<std::pair<ChargeElement, Rat>> final;

  Rat total_initial() const;
  Rat total_final() const;
  Rat final_of(const ChargeElement& e) const;
  // Line-oriented text: "element vertex|face <id> <initial> <final>" then
  // "transfer <kind> <id> <kind> <id> <amount> <rule>".
  std::string serialize() const;
};

// Rule application without precondition checks (unit tests drive the rules on
// arbitrary graphs).  girth4 requires a connected Euler-valid embedding.
ChargeLedger compute_girth4_ledger(const GraphView& g);
ChargeLedger compute_mad175_ledger(const GraphView& g);
ChargeLedger compute_mad229_ledger(const GraphView& g);

struct AuditReport {
  bool preconditions_hold = false;
  std::optional<ConfigMatch> found_config;  // set when a detector refutes them
  std::vector<std::string> notes;
  ChargeLedger ledger;
  Rat bound;                                 // required final charge
  Rat min_final;                             // over the audited elements
  bool bound_holds = false;
  std::vector<ChargeElement> violations;
};

// The three audits.  Each computes the ledger, reports whether the
// configuration-freeness preconditions hold, and checks the final-charge
// bound (>= 0 per element for the vertex-face argument; >= 17/5 and
// >= 2+4/9 per vertex for the two mad arguments).  On inputs that satisfy
// an audit's preconditions the bound holding is exactly the structural
// lemma, machine-checked per instance.
AuditReport audit_girth4(const GraphView& g);
AuditReport audit_mad175(const GraphView& g);
AuditReport audit_mad229(const GraphView& g);

AuditReport run_audit(const GraphView& g, const std::string& lemma);

}  // namespace recolor
