// cgq: quivers of mutation-Dynkin type A, their triangulations, braid
// graphs, cluster-style presentations, and exhaustive verification suites.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clustergroups/io.hpp"

namespace cg = clustergroups;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

std::string read_input(const std::string& path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cg::ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw cg::Error("cannot write " + out_path);
  out << text;
}

cg::Quiver load_quiver(const std::string& path) {
  return cg::quiver_from_string(read_input(path));
}

struct Caps {
  std::size_t class_cap = cg::kDefaultClassCap;
  std::size_t coset_cap = cg::kDefaultCosetCap;
  std::size_t element_cap = cg::kDefaultElementCap;
};

void add_cap_options(CLI::App* cmd, Caps& caps) {
  cmd->add_option("--cap-class", caps.class_cap, "Mutation class size cap");
  cmd->add_option("--cap-cosets", caps.coset_cap, "Coset table cap");
  cmd->add_option("--cap-elements", caps.element_cap,
                  "Generated group element cap");
}

std::set<int> parse_subset(const std::string& text) {
  std::set<int> subset;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) subset.insert(std::stoi(item));
  return subset;
}

cg::VerificationReport merge_reports(
    std::string statement, std::vector<cg::VerificationReport> parts) {
  cg::VerificationReport merged;
  merged.statement = std::move(statement);
  for (cg::VerificationReport& part : parts) {
    merged.checked += part.checked;
    merged.ms += part.ms;
    for (cg::Failure& f : part.failures) {
      f.instance = part.statement + " " + f.instance;
      merged.failures.push_back(std::move(f));
    }
    for (std::string& note : part.inconclusive)
      merged.inconclusive.push_back(part.statement + " " + std::move(note));
  }
  return merged;
}

int emit_report(const cg::VerificationReport& report, bool as_json,
                const std::string& out_path) {
  write_output(out_path, as_json ? cg::report_to_json(report).dump(2)
                                 : cg::report_to_text(report));
  if (!report.passed()) return kExitFailure;
  if (!report.conclusive()) return kExitInconclusive;
  return kExitPass;
}

int run_verify(const std::string& suite, std::optional<int> m,
               std::optional<int> n, const std::string& quiver_path,
               const std::string& subset_text, std::optional<int> a,
               std::optional<int> b, int depth, const Caps& caps, bool as_json,
               const std::string& out_path) {
  auto corpus = [&](auto&& per_quiver,
                    const std::string& name) -> cg::VerificationReport {
    if (!quiver_path.empty()) return per_quiver(load_quiver(quiver_path));
    if (!n) throw cg::ParseError(name + " needs --quiver or --n");
    std::vector<cg::VerificationReport> parts;
    auto representatives = cg::type_a_class_representatives(*n);
    for (const cg::Quiver& q : representatives) parts.push_back(per_quiver(q));
    return merge_reports(name + "(n=" + std::to_string(*n) + ", " +
                             std::to_string(representatives.size()) +
                             " class representatives)",
                         std::move(parts));
  };

  cg::VerificationReport report;
  if (suite == "flip-mutation") {
    if (!m) throw cg::ParseError("flip-mutation needs --m");
    report = cg::verify_flip_mutation(*m);
  } else if (suite == "braid-graph") {
    if (!n) throw cg::ParseError("braid-graph needs --n");
    report = cg::verify_braid_graph_well_defined(*n);
  } else if (suite == "group-iso") {
    report = corpus(
        [&](const cg::Quiver& q) {
          return cg::verify_group_iso(q, caps.class_cap, caps.coset_cap,
                                      caps.element_cap);
        },
        "group-iso");
  } else if (suite == "lattice" || suite == "partition-lattice") {
    report = corpus(
        [&](const cg::Quiver& q) {
          return cg::verify_partition_lattice(q, caps.class_cap);
        },
        "partition-lattice");
  } else if (suite == "lattice-iso") {
    report = corpus(
        [&](const cg::Quiver& q) {
          return cg::verify_lattice_isomorphism(q, caps.class_cap,
                                                caps.element_cap);
        },
        "lattice-iso");
  } else if (suite == "generator-intersection") {
    report = corpus(
        [&](const cg::Quiver& q) {
          return cg::verify_generator_intersection(q, caps.class_cap);
        },
        "generator-intersection");
  } else if (suite == "parabolic") {
    auto one = [&](const cg::Quiver& q) {
      if (!subset_text.empty())
        return cg::verify_parabolic_presentation(q, parse_subset(subset_text),
                                                 caps.class_cap,
                                                 caps.coset_cap,
                                                 caps.element_cap);
      return cg::verify_parabolic_presentations(
          q, caps.class_cap, caps.coset_cap, caps.element_cap);
    };
    report = corpus(one, "parabolic");
  } else if (suite == "order" || suite == "mutation-invariance") {
    if (!quiver_path.empty())
      report = cg::verify_mutation_invariance(load_quiver(quiver_path), depth,
                                              caps.class_cap, caps.coset_cap);
    else if (n)
      report = cg::verify_mutation_invariance(cg::linear_quiver(*n), depth,
                                              caps.class_cap, caps.coset_cap);
    else
      throw cg::ParseError("order needs --quiver or --n");
  } else if (suite == "direct-product") {
    if (!a || !b) throw cg::ParseError("direct-product needs --a and --b");
    report = cg::verify_direct_product(cg::linear_quiver(*a),
                                       cg::linear_quiver(*b), caps.coset_cap);
  } else {
    throw cg::UnknownSuite("unknown suite: " + suite);
  }
  return emit_report(report, as_json, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cgq: cluster quivers of mutation-Dynkin type A and their groups"};
  app.require_subcommand(1);

  bool as_json = false;
  bool as_dot = false;
  std::string out_path;
  std::string input;
  Caps caps;

  auto add_io = [&](CLI::App* cmd, bool dot_allowed = false) {
    cmd->add_flag("--json", as_json, "Emit JSON");
    if (dot_allowed) cmd->add_flag("--dot", as_dot, "Emit DOT");
    cmd->add_option("--out", out_path, "Write output to a file");
  };

  std::vector<int> mutate_vertices;
  CLI::App* mutate_cmd =
      app.add_subcommand("mutate", "Mutate a quiver at a sequence of vertices");
  mutate_cmd
      ->add_option("quiver", input, "Quiver file (text or JSON, - = stdin)")
      ->required();
  mutate_cmd->add_option("vertices", mutate_vertices,
                         "Vertices, applied in order");
  add_io(mutate_cmd, true);

  CLI::App* mclass_cmd = app.add_subcommand(
      "mutation-class", "All members of the mutation class up to isomorphism");
  mclass_cmd->add_option("quiver", input)->required();
  add_cap_options(mclass_cmd, caps);
  add_io(mclass_cmd);

  CLI::App* type_cmd =
      app.add_subcommand("type", "Mutation-Dynkin type A detection");
  type_cmd->add_option("quiver", input)->required();
  add_cap_options(type_cmd, caps);
  add_io(type_cmd);

  CLI::App* quiver_of_cmd = app.add_subcommand(
      "quiver-of", "Quiver of a labelled triangulation (JSON input)");
  quiver_of_cmd->add_option("triangulation", input)->required();
  add_io(quiver_of_cmd, true);

  CLI::App* triangulation_cmd = app.add_subcommand(
      "triangulation-of", "A labelled triangulation realising the quiver");
  triangulation_cmd->add_option("quiver", input)->required();
  add_cap_options(triangulation_cmd, caps);
  add_io(triangulation_cmd);

  CLI::App* braid_cmd =
      app.add_subcommand("braid-graph", "Braid graph of a type A quiver");
  braid_cmd->add_option("quiver", input)->required();
  add_cap_options(braid_cmd, caps);
  add_io(braid_cmd, true);

  CLI::App* presentation_cmd =
      app.add_subcommand("presentation", "Cluster presentation of a quiver");
  presentation_cmd->add_option("quiver", input)->required();
  add_io(presentation_cmd);

  CLI::App* order_cmd = app.add_subcommand(
      "order", "Group order of the cluster presentation by coset enumeration");
  order_cmd->add_option("quiver", input)->required();
  add_cap_options(order_cmd, caps);
  add_io(order_cmd);

  std::string suite, subset_text;
  std::optional<int> opt_m, opt_n, opt_a, opt_b;
  int depth = 0;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite");
  verify_cmd
      ->add_option("suite", suite,
                   "flip-mutation | braid-graph | group-iso | lattice | "
                   "lattice-iso | generator-intersection | parabolic | "
                   "order | direct-product")
      ->required();
  verify_cmd->add_option("--m", opt_m, "Polygon size");
  verify_cmd->add_option("--n", opt_n, "Type A rank (runs all class reps)");
  verify_cmd->add_option("--quiver", input, "Quiver file");
  verify_cmd->add_option("--subset", subset_text,
                         "Generator subset, e.g. 1,3,4 (parabolic)");
  verify_cmd->add_option("--a", opt_a, "First component rank");
  verify_cmd->add_option("--b", opt_b, "Second component rank");
  verify_cmd->add_option("--depth", depth, "Mutation BFS depth (0 = closure)");
  add_cap_options(verify_cmd, caps);
  add_io(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (mutate_cmd->parsed()) {
      cg::Quiver q = load_quiver(input);
      for (int v : mutate_vertices) q = cg::mutate(q, v);
      write_output(out_path, as_dot    ? cg::to_dot(q)
                             : as_json ? cg::quiver_to_json(q).dump(2)
                                       : cg::quiver_to_text(q));
    } else if (mclass_cmd->parsed()) {
      auto members = cg::mutation_class(load_quiver(input), caps.class_cap);
      if (as_json) {
        cg::json quivers = cg::json::array();
        for (const cg::Quiver& q : members)
          quivers.push_back(cg::quiver_to_json(q));
        write_output(
            out_path,
            cg::json{{"count", members.size()}, {"quivers", quivers}}.dump(2));
      } else {
        std::string text = "count " + std::to_string(members.size()) + "\n";
        for (const cg::Quiver& q : members) text += cg::to_string(q) + "\n";
        write_output(out_path, text);
      }
    } else if (type_cmd->parsed()) {
      auto type = cg::mutation_type_a(load_quiver(input), caps.class_cap);
      if (as_json) {
        cg::json out;
        out["parts"] = type ? cg::json(type->parts) : cg::json(nullptr);
        write_output(out_path, out.dump(2));
      } else {
        write_output(out_path, type ? cg::to_string(*type) + "\n"
                                    : "not of mutation-Dynkin type A\n");
      }
    } else if (quiver_of_cmd->parsed()) {
      auto mt =
          cg::multi_triangulation_from_json(cg::parse_json(read_input(input)));
      cg::LabeledQuiver lq = cg::quiver_of_labeled(mt);
      if (as_dot)
        write_output(out_path, cg::to_dot(lq.quiver));
      else if (as_json)
        write_output(out_path,
                     cg::json{{"quiver", cg::quiver_to_json(lq.quiver)},
                              {"labels", lq.labels}}
                         .dump(2));
      else
        write_output(out_path, cg::quiver_to_text(lq.quiver));
    } else if (triangulation_cmd->parsed()) {
      auto mt = cg::triangulation_of_quiver(load_quiver(input), caps.class_cap);
      write_output(out_path, cg::multi_triangulation_to_json(mt).dump(2));
    } else if (braid_cmd->parsed()) {
      auto graph = cg::braid_graph(
          cg::triangulation_of_quiver(load_quiver(input), caps.class_cap));
      write_output(out_path, as_dot ? cg::to_dot(graph)
                                    : cg::braid_graph_to_json(graph).dump(2));
    } else if (presentation_cmd->parsed()) {
      cg::Presentation p = cg::presentation_from_quiver(load_quiver(input));
      if (as_json) {
        write_output(out_path, cg::json{{"generators", p.generator_count},
                                        {"relators", p.relators}}
                                   .dump(2));
      } else {
        std::string text = "generators " + std::to_string(p.generator_count) +
                           "\n" + cg::presentation_to_text(p) + "\n";
        for (const cg::Word& relator : p.relators)
          text += cg::word_to_text(relator) + "\n";
        write_output(out_path, text);
      }
    } else if (order_cmd->parsed()) {
      std::uint64_t order = cg::group_order(
          cg::presentation_from_quiver(load_quiver(input)), caps.coset_cap);
      write_output(out_path, std::to_string(order) + "\n");
    } else if (verify_cmd->parsed()) {
      return run_verify(suite, opt_m, opt_n, input, subset_text, opt_a, opt_b,
                        depth, caps, as_json, out_path);
    }
  } catch (const cg::CapExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const cg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitPass;
}
