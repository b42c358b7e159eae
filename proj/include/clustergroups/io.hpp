#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clustergroups/braid_graph.hpp"
#include "clustergroups/errors.hpp"
#include "clustergroups/quiver.hpp"
#include "clustergroups/theorems.hpp"
#include "clustergroups/triangulation.hpp"

namespace clustergroups {

using nlohmann::json;

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// --- quivers -------------------------------------------------------------
// Text format: first line `n`, then one line `source target multiplicity`
// per arrow bundle. JSON format: {"n": int, "arrows": [[s, t, m], ...]}.

inline std::string quiver_to_text(const Quiver& q) {
  std::string out = std::to_string(q.vertex_count()) + "\n";
  for (const Arrow& a : q.arrows())
    out += std::to_string(a.source) + " " + std::to_string(a.target) + " " +
           std::to_string(a.mult) + "\n";
  return out;
}

inline Quiver quiver_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n)) throw ParseError("expected a vertex count");
  std::vector<Arrow> arrows;
  int s = 0, t = 0, m = 0;
  while (in >> s) {
    if (!(in >> t >> m))
      throw ParseError("expected `source target multiplicity` per line");
    arrows.push_back({s, t, m});
  }
  try {
    return Quiver(n, std::move(arrows));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back({a.source, a.target, a.mult});
  return {{"n", q.vertex_count()}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const json& j) {
  try {
    std::vector<Arrow> arrows;
    for (const auto& entry : j.at("arrows"))
      arrows.push_back({entry.at(0).get<int>(), entry.at(1).get<int>(),
                        entry.size() > 2 ? entry.at(2).get<int>() : 1});
    return Quiver(j.at("n").get<int>(), std::move(arrows));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad quiver JSON: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

// Accepts either format: JSON when the first non-blank byte is '{'.
inline Quiver quiver_from_string(std::string_view text) {
  std::size_t at = text.find_first_not_of(" \t\r\n");
  if (at != std::string_view::npos && text[at] == '{')
    return quiver_from_json(parse_json(text));
  return quiver_from_text(text);
}

inline std::string to_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph {\n";
  for (int v = 1; v <= q.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Arrow& a : q.arrows())
    for (int k = 0; k < a.mult; ++k)
      out << "  " << a.source << " -> " << a.target << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_string(const MutationTypeA& type) {
  if (type.parts.empty()) return "A_0";
  std::string out;
  for (std::size_t i = 0; i < type.parts.size(); ++i) {
    if (i) out += " + ";
    out += "A_" + std::to_string(type.parts[i]);
  }
  return out;
}

// --- triangulations ------------------------------------------------------
// Component JSON: {"m": int, "diagonals": [[a, b], ...],
//                  "labels": {"1": [a, b], ...}} with global labels;
// a MultiTriangulation is a JSON array of components. Labels may be omitted
// everywhere, in which case diagonals are numbered 1..n component by
// component in diagonal order.

inline json multi_triangulation_to_json(const MultiTriangulation& mt) {
  json out = json::array();
  for (std::size_t c = 0; c < mt.components().size(); ++c) {
    const Triangulation& t = mt.components()[c];
    json diagonals = json::array();
    for (const Diagonal& d : t.diagonals())
      diagonals.push_back({d.first, d.second});
    json labels = json::object();
    for (const auto& [label, ref] : mt.labels())
      if (ref.first == static_cast<int>(c))
        labels[std::to_string(label)] = {ref.second.first, ref.second.second};
    out.push_back({{"m", t.polygon_size()},
                   {"diagonals", diagonals},
                   {"labels", labels}});
  }
  return out;
}

inline MultiTriangulation multi_triangulation_from_json(const json& j) {
  try {
    json components = j.is_array() ? j : json::array({j});
    std::vector<Triangulation> pieces;
    std::map<int, MultiTriangulation::DiagonalRef> labels;
    bool any_labels = false, all_labels = true;
    for (const auto& entry : components) {
      std::vector<Diagonal> diagonals;
      for (const auto& d : entry.at("diagonals"))
        diagonals.push_back(
            make_diagonal(d.at(0).get<int>(), d.at(1).get<int>()));
      int c = static_cast<int>(pieces.size());
      pieces.push_back(Triangulation(entry.at("m").get<int>(), diagonals));
      if (entry.contains("labels") && !entry["labels"].empty()) {
        any_labels = true;
        for (const auto& [key, value] : entry["labels"].items())
          labels[std::stoi(key)] = {
              c, make_diagonal(value.at(0).get<int>(), value.at(1).get<int>())};
      } else if (!pieces.back().diagonals().empty()) {
        all_labels = false;
      }
    }
    if (any_labels && !all_labels)
      throw ParseError("either label every component or none");
    if (!any_labels) {
      int next = 1;
      labels.clear();
      for (std::size_t c = 0; c < pieces.size(); ++c)
        for (const Diagonal& d : pieces[c].diagonals())
          labels[next++] = {static_cast<int>(c), d};
    }
    return MultiTriangulation(std::move(pieces), std::move(labels));
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad triangulation JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("labels must be keyed by integers");
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

// --- braid graphs --------------------------------------------------------
// JSON: {"vertices": int, "edges": {"i": [x, y], ...}, "blocks": [[...]]}.

inline json braid_graph_to_json(const BraidGraph& g) {
  json edges = json::object();
  for (const auto& [label, e] : g.graph.edges)
    edges[std::to_string(label)] = {e.first, e.second};
  return {{"vertices", g.graph.vertex_count},
          {"edges", edges},
          {"blocks", g.blocks}};
}

inline BraidGraph braid_graph_from_json(const json& j) {
  try {
    BraidGraph g;
    g.graph.vertex_count = j.at("vertices").get<int>();
    for (const auto& [key, value] : j.at("edges").items()) {
      int x = value.at(0).get<int>(), y = value.at(1).get<int>();
      g.graph.edges[std::stoi(key)] = {std::min(x, y), std::max(x, y)};
    }
    g.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad braid graph JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("edges must be keyed by integers");
  }
}

// --- verification reports ------------------------------------------------

inline json report_to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const Failure& f : r.failures)
    failures.push_back({{"instance", f.instance},
                        {"expected", f.expected},
                        {"actual", f.actual}});
  return {{"statement", r.statement},
          {"checked", r.checked},
          {"failures", failures},
          {"inconclusive", r.inconclusive},
          {"ms", r.ms}};
}

inline VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.statement = j.at("statement").get<std::string>();
    r.checked = j.at("checked").get<std::uint64_t>();
    for (const auto& f : j.at("failures"))
      r.failures.push_back({f.at("instance").get<std::string>(),
                            f.at("expected").get<std::string>(),
                            f.at("actual").get<std::string>()});
    r.inconclusive = j.at("inconclusive").get<std::vector<std::string>>();
    r.ms = j.at("ms").get<std::int64_t>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
}

// Human-readable report block.
inline std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.passed() ? (r.conclusive() ? "PASS" : "INCONCLUSIVE") : "FAIL")
      << "  " << r.statement << "  (" << r.checked << " checks, "
      << r.failures.size() << " failures, " << r.ms << " ms)\n";
  for (const Failure& f : r.failures)
    out << "  failure: " << f.instance << "\n    expected " << f.expected
        << "\n    actual   " << f.actual << "\n";
  for (const std::string& note : r.inconclusive)
    out << "  inconclusive: " << note << "\n";
  return out.str();
}

}  // namespace clustergroups
