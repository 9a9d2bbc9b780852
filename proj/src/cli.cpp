#include "lpa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "lpa/errors.hpp"
#include "lpa/expression.hpp"
#include "lpa/structure.hpp"

namespace lpa::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string graph_file;
  std::string ring = "q";
  std::string set;
  std::vector<std::string> exprs;
  std::optional<std::size_t> bound;
  std::string format = "text";
  bool oracle = false;
};

std::vector<std::string> split_set(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

class OracleDisagreement : public Error {
 public:
  using Error::Error;
};

// Text form of a report: one "key: value" line per entry; arrays of objects
// become indented "- k: v, k: v" lines.
void render_text(const Json& report, std::ostream& out) {
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  for (const auto& [key, value] : report.items()) {
    if (value.is_array()) {
      out << key << ":" << (value.empty() ? " []" : "") << '\n';
      for (const auto& item : value) {
        out << "  - ";
        if (item.is_object()) {
          bool first = true;
          for (const auto& [k, v] : item.items()) {
            out << (first ? "" : ", ") << k << ": " << scalar(v);
            first = false;
          }
        } else {
          out << scalar(item);
        }
        out << '\n';
      }
    } else {
      out << key << ": " << scalar(value) << '\n';
    }
  }
}

Json reasons_json(const std::vector<SimplicityReason>& reasons, const Graph& g,
                  const Ring& r) {
  Json arr = Json::array();
  for (const auto& reason : reasons)
    arr.push_back({{"criterion", reason.name()}, {"witness", reason.witness(g, r)}});
  return arr;
}

const std::string& require_expr(const Options& o, std::size_t n) {
  if (o.exprs.size() < n + 1)
    throw PreconditionError("this subcommand needs " + std::to_string(n + 1) +
                            " --expr argument(s)");
  return o.exprs[n];
}

VertexSet require_set(const Options& o, const Graph& g) {
  return VertexSet::of(g, split_set(o.set));
}

// Each handler returns the report plus a bare text form for value-style
// commands (empty when the key/value rendering should be used).
struct Report {
  Json json = Json::object();
  std::string bare;
};

Report cmd_check_simplicity(const Options& o, const Graph& g, const Ring& r) {
  SimplicityVerdict v = is_simple(g, r);
  Report rep;
  rep.json["ring"] = r.display_name();
  rep.json["simple"] = v.simple;
  rep.json["graded_simple"] = v.graded_simple;
  rep.json["ring_simple"] = v.ring_simple;
  rep.json["no_nontrivial_hs"] = v.no_nontrivial_hs;
  rep.json["condition_l"] = v.condition_l;
  rep.json["reasons"] = reasons_json(v.reasons, g, r);
  if (o.oracle) {
    LeavittPathAlgebra alg(g, r);
    bool oracle = bruteforce_simplicity_oracle(alg);
    rep.json["oracle_simple"] = oracle;
    if (oracle != v.simple)
      throw OracleDisagreement("brute-force ideal closure says simple=" +
                               std::string(oracle ? "true" : "false"));
  }
  return rep;
}

Report cmd_check_graded(const Options&, const Graph& g, const Ring& r) {
  GradedSimplicity v = is_graded_simple(g, r);
  Report rep;
  rep.json["ring"] = r.display_name();
  rep.json["graded_simple"] = v.graded_simple;
  rep.json["reasons"] = reasons_json(v.reasons, g, r);
  return rep;
}

Report cmd_condition_l(const Options& o, const Graph& g, const Ring&) {
  auto cycle = find_exitless_cycle(g);
  Report rep;
  rep.json["condition_l"] = !cycle.has_value();
  if (cycle) rep.json["exitless_cycle"] = cycle->to_string(g);
  if (o.oracle) {
    bool oracle = condition_L_by_enumeration(g);
    rep.json["oracle_condition_l"] = oracle;
    if (oracle != !cycle.has_value())
      throw OracleDisagreement("simple-cycle enumeration disagrees on Condition (L)");
  }
  return rep;
}

Report cmd_closure(const Options& o, const Graph& g, const Ring&) {
  VertexSet x = require_set(o, g);
  VertexSet c = closure(g, x);
  Report rep;
  rep.json["set"] = x.to_string(g);
  rep.json["closure"] = c.to_string(g);
  if (o.oracle) {
    VertexSet b = brute_force_closure(g, x, o.bound.value_or(kDefaultSubsetBound));
    rep.json["oracle_closure"] = b.to_string(g);
    if (!(b == c))
      throw OracleDisagreement("brute-force closure is " + b.to_string(g));
  }
  rep.bare = c.to_string(g);
  return rep;
}

Report cmd_hs_subsets(const Options& o, const Graph& g, const Ring&) {
  auto all = all_hereditary_saturated(g, o.bound.value_or(kDefaultSubsetBound));
  Report rep;
  Json arr = Json::array();
  for (const auto& h : all) arr.push_back(h.to_string(g));
  rep.json["count"] = all.size();
  rep.json["nontrivial"] = has_nontrivial_hs(g);
  rep.json["subsets"] = arr;
  if (o.oracle && (all.size() > 2) != has_nontrivial_hs(g))
    throw OracleDisagreement("singleton-closure test disagrees with the subset sweep");
  return rep;
}

Report cmd_center(const Options& o, const Graph& g, const Ring& r) {
  LeavittPathAlgebra alg(g, r);
  CenterDescription c = center(alg);
  Report rep;
  rep.json["kind"] = c.kind == CenterDescription::Kind::kZero ? "zero" : "central-scalars";
  Json basis = Json::array();
  for (const auto& b : c.basis) basis.push_back(b.to_string());
  rep.json["basis"] = basis;
  if (o.oracle) {
    auto oracle = bruteforce_center_oracle(alg);
    Json ob = Json::array();
    for (const auto& b : oracle) ob.push_back(b.to_string());
    rep.json["oracle_basis"] = ob;
    FiniteModel model(alg);
    std::vector<FiniteModel::Vector> ours, theirs, both;
    for (const auto& b : c.basis) ours.push_back(model.coordinates(b));
    for (const auto& b : oracle) theirs.push_back(model.coordinates(b));
    both = ours;
    both.insert(both.end(), theirs.begin(), theirs.end());
    std::size_t rank = model.rank(both);
    if (rank != model.rank(ours) || rank != model.rank(theirs))
      throw OracleDisagreement("commutant solve spans a different center");
  }
  return rep;
}

Report cmd_normalize(const Options& o, const Graph& g, const Ring& r) {
  LeavittPathAlgebra alg(g, r);
  AlgebraElement x = parse_expression(require_expr(o, 0), alg);
  Report rep;
  rep.json["element"] = x.to_string();
  Json degrees = Json::array();
  for (int d : x.support()) degrees.push_back(d);
  rep.json["support"] = degrees;
  rep.bare = x.to_string();
  return rep;
}

Report cmd_mul(const Options& o, const Graph& g, const Ring& r) {
  LeavittPathAlgebra alg(g, r);
  if (o.exprs.size() < 2) throw PreconditionError("mul needs at least two --expr arguments");
  AlgebraElement p = parse_expression(o.exprs.front(), alg);
  for (std::size_t i = 1; i < o.exprs.size(); ++i) p = p * parse_expression(o.exprs[i], alg);
  Report rep;
  rep.json["product"] = p.to_string();
  rep.bare = p.to_string();
  return rep;
}

Report cmd_reduce(const Options& o, const Graph& g, const Ring& r) {
  LeavittPathAlgebra alg(g, r);
  AlgebraElement a = parse_expression(require_expr(o, 0), alg);
  DegreeZeroCertificate c = reduce_degree_zero(a, o.bound.value_or(kDefaultReductionSlack));
  Report rep;
  rep.json["alpha"] = c.alpha.to_string(g);
  rep.json["beta"] = c.beta.to_string(g);
  rep.json["vertex"] = g.vertex_name(c.vertex);
  rep.json["k"] = c.k.to_string();
  rep.json["verified"] = verify_certificate(a, c);
  return rep;
}

Report cmd_quotient(const Options& o, const Graph& g, const Ring& r) {
  VertexSet h = require_set(o, g);
  LeavittPathAlgebra alg(g, r);
  QuotientMap psi(alg, h);
  Report rep;
  std::ostringstream graph_text;
  write_graph(graph_text, psi.target().graph());
  rep.json["graph"] = graph_text.str();
  std::string bare = graph_text.str();
  if (!o.exprs.empty()) {
    AlgebraElement image = psi(parse_expression(o.exprs.front(), alg));
    rep.json["image"] = image.to_string();
    bare += "# image: " + image.to_string() + "\n";
  }
  rep.bare = bare;
  if (!bare.empty() && bare.back() == '\n') rep.bare.pop_back();
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leavitt path algebra toolkit: simplicity, centers and normal forms"};
  app.require_subcommand(1, 1);
  Options o;

  using Handler = Report (*)(const Options&, const Graph&, const Ring&);
  struct Sub {
    const char* name;
    const char* help;
    Handler fn;
  };
  const Sub subs[] = {
      {"check-simplicity", "Decide simplicity with per-criterion witnesses", cmd_check_simplicity},
      {"check-graded", "Decide graded simplicity", cmd_check_graded},
      {"check-condition-l", "Check that every cycle has an exit", cmd_condition_l},
      {"closure", "Hereditary saturated closure of --set", cmd_closure},
      {"hs-subsets", "List every hereditary saturated subset", cmd_hs_subsets},
      {"center", "Center of a simple Leavitt path algebra", cmd_center},
      {"normalize", "Normal form of --expr", cmd_normalize},
      {"mul", "Product of the --expr arguments, left to right", cmd_mul},
      {"reduce", "Find alpha, beta, v, k with alpha^* a beta = k v", cmd_reduce},
      {"quotient", "Quotient graph by --set, optionally mapping --expr", cmd_quotient},
  };
  std::vector<std::pair<CLI::App*, Handler>> registered;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("graph", o.graph_file, "Graph file")->required();
    sub->add_option("--ring", o.ring, "q | fp:<p> | z | zmod:<n> | mat:<k>:<q|fp:p>");
    sub->add_option("--set", o.set, "Comma separated vertex ids");
    sub->add_option("--expr", o.exprs, "Element expression (repeatable)");
    sub->add_option("--bound", o.bound, "Search or sweep bound");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--oracle", o.oracle, "Cross-check with a brute-force oracle");
    registered.emplace_back(sub, s.fn);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kPreconditionViolated;
  }

  try {
    Graph g = load_graph(o.graph_file);
    Ring r = Ring::parse(o.ring);
    Report rep;
    for (auto& [sub, fn] : registered)
      if (sub->parsed()) rep = fn(o, g, r);
    if (o.format == "json") {
      out << rep.json.dump(2) << '\n';
    } else if (!rep.bare.empty()) {
      out << rep.bare << '\n';
    } else {
      render_text(rep.json, out);
    }
    return kOk;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kOracleBoundExceeded;
  } catch (const OracleDisagreement& e) {
    err << "oracle disagreement: " << e.what() << '\n';
    return kPreconditionViolated;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolated;
  }
}

}  // namespace lpa::cli
