#include "oddcycle/report.hpp"

#include <sstream>

namespace oddcycle {

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const BigInt& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

Json to_json(const MatchingProfile& profile) {
  Json out = Json::array();
  for (const BigInt& c : profile.counts) out.push_back(c.get_str());
  return out;
}

Json to_json(const AlgebraicRoot& root, int digits) {
  return Json{{"decimal", root.to_decimal(digits)},
              {"lo", root.lo().get_str()},
              {"hi", root.hi().get_str()},
              {"polynomial", to_json(root.polynomial())}};
}

Json to_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const KelmansResult& s : trace.steps) {
    Json moved = Json::array();
    for (Vertex w : s.step.moved) {
      moved.push_back(Json::array({s.step.co_beneficiary, w}));
    }
    steps.push_back(Json{{"phase", std::string(to_string(s.step.phase))},
                         {"u", s.step.beneficiary},
                         {"v", s.step.co_beneficiary},
                         {"moved", std::move(moved)},
                         {"graph6", write_graph6(s.graph)}});
  }
  return Json{{"start", write_graph6(trace.start)},
              {"steps", std::move(steps)},
              {"final", write_graph6(trace.final_graph())}};
}

Json to_json(const Orientation& o) {
  return Json{{"graph6", write_graph6(o.base())}, {"mask", o.mask_hex()}};
}

Json to_json(const VerificationReport& report) {
  Json counterexamples = Json::array();
  for (const Counterexample& c : report.counterexamples) {
    counterexamples.push_back(Json{{"graph6", c.graph6}, {"detail", c.detail}});
  }
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) {
    witnesses.push_back(
        Json{{"label", w.label}, {"graph6", w.graph6}, {"value", w.value}});
  }
  return Json{{"suite", report.suite},
              {"universe", report.universe},
              {"verdict", report.passed() ? "PASS" : "FAIL"},
              {"checked", report.checked},
              {"counterexample_total", report.counterexample_total},
              {"counterexamples", std::move(counterexamples)},
              {"witnesses", std::move(witnesses)},
              {"notes", report.notes},
              {"seconds", report.seconds}};
}

std::string to_table(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite     " << report.suite << '\n'
      << "universe  " << report.universe << '\n'
      << "checked   " << report.checked << '\n'
      << "verdict   " << (report.passed() ? "PASS" : "FAIL") << '\n';
  if (report.counterexample_total > 0) {
    out << "counterexamples (" << report.counterexample_total << ")\n";
    for (const Counterexample& c : report.counterexamples) {
      out << "  " << c.graph6 << "  " << c.detail << '\n';
    }
  }
  if (!report.witnesses.empty()) {
    out << "witnesses\n";
    for (const Witness& w : report.witnesses) {
      out << "  " << w.label << "  " << w.graph6 << "  " << w.value << '\n';
    }
  }
  for (const std::string& note : report.notes) out << "note      " << note << '\n';
  out << "seconds   " << report.seconds << '\n';
  return out.str();
}

}  // namespace oddcycle
