#include "toposcope/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "toposcope/lattice.hpp"

namespace topo {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skip: return "SKIP";
  }
  return "?";
}

void VerificationReport::add(const std::string& claim, std::uint64_t instances,
                             std::optional<std::string> counterexample) {
  evidence.push_back({claim, instances, std::move(counterexample)});
}

void VerificationReport::set_param(const std::string& key, const std::string& value) {
  for (auto& [k, v] : params)
    if (k == key) {
      v = value;
      return;
    }
  params.emplace_back(key, value);
  std::sort(params.begin(), params.end());
}

void VerificationReport::finalize() {
  if (verdict == Verdict::Skip) return;
  verdict = Verdict::Pass;
  for (const auto& e : evidence)
    if (e.counterexample) verdict = Verdict::Fail;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) p[k] = v;
  j["params"] = p;
  j["verdict"] = verdict_name(r.verdict);
  nlohmann::ordered_json ev = nlohmann::ordered_json::array();
  for (const auto& e : r.evidence) {
    nlohmann::ordered_json je;
    je["claim"] = e.claim;
    je["instances"] = e.instances;
    if (e.counterexample) je["counterexample"] = *e.counterexample;
    ev.push_back(je);
  }
  j["evidence"] = ev;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string lattice_dot(int n) {
  if (n < 0 || n > 3) fail(errc::too_large, "lattice diagrams are drawn for n <= 3");
  const auto ts = enumerate_topologies(n);
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box,fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < ts.size(); ++i)
    out += "  t" + std::to_string(i) + " [label=\"" + ts[i].encode() + "\"];\n";
  // Covering pairs: strictly coarser with nothing strictly between.
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (!ts[j].strictly_finer_than(ts[i])) continue;
      bool cover = true;
      for (std::size_t k = 0; k < ts.size() && cover; ++k)
        if (ts[k].strictly_finer_than(ts[i]) && ts[j].strictly_finer_than(ts[k])) cover = false;
      if (cover) out += "  t" + std::to_string(i) + " -> t" + std::to_string(j) + ";\n";
    }
  out += "}\n";
  return out;
}

std::string specialization_dot(const FiniteTopology& t) {
  const int n = t.ground_size();
  const Preorder p = t.specialization();
  std::string out = "digraph specialization {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < n; ++x) out += "  p" + std::to_string(x) + " [label=\"" + std::to_string(x) + "\"];\n";
  // Hasse edges of the preorder: strict pairs with no strict point between.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !p.leq(x, y) || p.leq(y, x)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z) {
        if (z == x || z == y) continue;
        if (p.leq(x, z) && !p.leq(z, x) && p.leq(z, y) && !p.leq(y, z)) cover = false;
      }
      if (cover) out += "  p" + std::to_string(x) + " -> p" + std::to_string(y) + ";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace topo
