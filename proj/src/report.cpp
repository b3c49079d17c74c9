#include "twistchar/report.hpp"

#include <sstream>

namespace twistchar {

using nlohmann::json;

namespace {

std::string ints_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<std::string> class_names(const CoreClass& cls) {
  std::vector<std::string> names;
  if (cls.is_empty) names.push_back("empty");
  if (cls.single_row) names.push_back("single-row(" + std::to_string(*cls.single_row) + ")");
  if (cls.symplectic) names.push_back("symplectic");
  if (cls.orthogonal) names.push_back("orthogonal");
  if (cls.self_conjugate) names.push_back("self-conjugate");
  return names;
}

}  // namespace

std::string to_string(SignRule rule) {
  return rule == SignRule::Expanded ? "expanded" : "simplified";
}

std::optional<SignRule> parse_sign_rule(const std::string& name) {
  if (name == "simplified") return SignRule::Simplified;
  if (name == "expanded") return SignRule::Expanded;
  return std::nullopt;
}

std::string tuple_string(const std::vector<Partition>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].to_string();
  return s + ")";
}

json coeffs_json(const CycloElem& x) {
  json out = json::array();
  for (const auto& c : x.coeffs()) out.push_back(c.get_str());
  return out;
}

json report_json(const VerificationReport& r) {
  json j;
  j["theorem"] = to_string(r.theorem);
  j["lambda"] = r.lambda.parts();
  j["t"] = r.t;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["match"] = r.match;
  j["predicted_vanishing"] = r.predicted_vanishing;
  j["vanishing_confirmed"] = r.vanishing_confirmed();
  j["sign_rule"] = to_string(r.sign_rule);
  j["epsilon"] = r.sign_exponent ? json(*r.sign_exponent) : json(nullptr);
  j["sigma_sign"] = r.sigma_sign;
  json trials = json::array();
  for (const auto& tr : r.trials) {
    json p = json::array();
    for (const auto& x : tr.point) p.push_back(x.get_str());
    trials.push_back({{"seed", tr.seed},
                      {"point", p},
                      {"lhs", coeffs_json(tr.lhs)},
                      {"rhs", coeffs_json(tr.rhs)},
                      {"match", tr.match}});
  }
  j["trials"] = trials;
  return j;
}

json record_json(const ScanRecord& rec) {
  if (rec.report) return report_json(*rec.report);
  const auto& c = rec.scan_case;
  return {{"theorem", to_string(c.theorem)},
          {"lambda", c.lambda.parts()},
          {"t", c.t},
          {"n", c.n},
          {"seed", c.seed},
          {"match", false},
          {"error", rec.error}};
}

json summary_json(const ScanSummary& s) {
  return {{"summary",
           {{"cases", s.cases},
            {"match", s.matches},
            {"mismatch", s.mismatches},
            {"vanish_confirmed", s.vanish_confirmed},
            {"sampling_failures", s.sampling_failures}}}};
}

json classify_json(const Partition& lambda, int t, int n) {
  const CoreClass cls = classify_core(lambda, t, n);
  const FrobeniusCoords fr = frobenius(lambda);
  json quotient = json::array();
  for (const auto& q : t_quotient(lambda, t, t * n)) quotient.push_back(q.parts());
  return {{"lambda", lambda.parts()},
          {"size", lambda.size()},
          {"t", t},
          {"n", n},
          {"beta", beta_set(lambda, t * n).entries},
          {"residue_counts", residue_counts(lambda, t, t * n).counts},
          {"core", cls.core.parts()},
          {"core_rank", cls.rank},
          {"quotient", quotient},
          {"frobenius", {{"arms", fr.arms}, {"legs", fr.legs}}},
          {"classes", class_names(cls)},
          {"sigma_sign", sigma_sign(lambda, t, n)}};
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << to_string(r.theorem) << " lambda=" << r.lambda.to_string() << " t=" << r.t
     << " n=" << r.n << " seed=" << r.seed << "\n";
  os << "  predicted vanishing: " << (r.predicted_vanishing ? "yes" : "no") << "\n";
  if (r.sign_exponent)
    os << "  epsilon (" << to_string(r.sign_rule) << "): " << *r.sign_exponent << "\n";
  os << "  sgn sigma: " << r.sigma_sign << "\n";
  for (const auto& tr : r.trials) {
    os << "  x = (";
    for (std::size_t i = 0; i < tr.point.size(); ++i) os << (i ? ", " : "") << tr.point[i];
    os << ")\n    lhs = " << tr.lhs.to_string() << "\n    rhs = " << tr.rhs.to_string()
       << "\n    " << (tr.match ? "match" : "MISMATCH") << "\n";
  }
  os << "  result: " << (r.match ? "match" : "MISMATCH") << "\n";
  return os.str();
}

std::string record_text(const ScanRecord& rec) {
  const auto& c = rec.scan_case;
  std::ostringstream os;
  os << to_string(c.theorem) << "\t" << c.t << "\t" << c.n << "\t" << c.lambda.to_string()
     << "\t" << c.seed << "\t";
  if (!rec.report) {
    os << "sampling-failure";
  } else if (!rec.report->match) {
    os << "MISMATCH";
  } else {
    os << (rec.report->vanishing_confirmed() ? "vanish" : "match");
  }
  return os.str();
}

std::string summary_text(const ScanSummary& s) {
  std::ostringstream os;
  os << "cases " << s.cases << ", match " << s.matches << ", mismatch " << s.mismatches
     << ", vanish-confirmed " << s.vanish_confirmed;
  if (s.sampling_failures) os << ", sampling failures " << s.sampling_failures;
  return os.str();
}

std::string classify_text(const Partition& lambda, int t, int n) {
  const CoreClass cls = classify_core(lambda, t, n);
  const FrobeniusCoords fr = frobenius(lambda);
  std::ostringstream os;
  os << "partition   " << lambda.to_string() << "  (size " << lambda.size() << ", length "
     << lambda.length() << ")\n";
  os << "beta (m=" << t * n << ")  " << ints_string(beta_set(lambda, t * n).entries) << "\n";
  os << "residues    " << ints_string(residue_counts(lambda, t, t * n).counts) << "\n";
  os << "core        " << cls.core.to_string() << "  (rank " << cls.rank << ")\n";
  os << "quotient    " << tuple_string(t_quotient(lambda, t, t * n)) << "\n";
  os << "frobenius   (" << ints_string(fr.arms) << " | " << ints_string(fr.legs) << ")\n";
  os << "sgn sigma   " << sigma_sign(lambda, t, n) << "\n";
  os << "class       ";
  const auto names = class_names(cls);
  if (names.empty()) os << "none";
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
  os << "\n";
  return os.str();
}

}  // namespace twistchar
