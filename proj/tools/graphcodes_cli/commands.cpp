#include "graphcodes_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcodes/codes.hpp"
#include "graphcodes/eulerian3.hpp"
#include "graphcodes/gf.hpp"
#include "graphcodes/graph.hpp"
#include "graphcodes/toric.hpp"
#include "graphcodes_cli/report.hpp"
#include "graphcodes_cli/verify.hpp"

namespace graphcodes::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string graph_file;
  std::string family;
  std::vector<int> params;
  int q = 0;
  int d = -1;
  int d_max = -1;
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::uint64_t> cap;
  bool json = false;
  std::vector<int> seed_order;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t cap_or(const Options& o, std::uint64_t fallback) { return o.cap.value_or(fallback); }

Graph load_graph(const Options& o) {
  if (o.graph_file.empty() == o.family.empty()) throw UsageError("give exactly one of --graph and --family");
  Graph g = [&] {
    if (!o.family.empty()) return build_family(o.family, o.params);
    std::ifstream in(o.graph_file);
    if (!in) throw UsageError("cannot open graph file: " + o.graph_file);
    return parse_graph(in);
  }();
  if (!o.seed_order.empty()) g = g.permuted(o.seed_order);
  return g;
}

std::string graph_name(const Options& o) {
  if (o.graph_file.size()) return o.graph_file;
  std::string name = o.family;
  for (std::size_t i = 0; i < o.params.size(); ++i) name += (i ? "," : ":") + std::to_string(o.params[i]);
  return name;
}

Field need_field(const Options& o) {
  if (o.q == 0) throw UsageError("--q is required");
  return Field::make(o.q);
}

int need_d(const Options& o) {
  if (o.d < 0) throw UsageError("--d is required");
  return o.d;
}

int need_dmax(const Options& o) {
  if (o.d_max < 0) throw UsageError("--dmax is required");
  return o.d_max;
}

json header(const std::string& command, const Options& o) {
  json j{{"schema", kSchemaVersion}, {"command", command}, {"graph", graph_name(o)}};
  if (o.q) j["q"] = o.q;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string method_name(MinDistMethod m) {
  switch (m) {
    case MinDistMethod::Exhaustive:
      return "exhaustive";
    case MinDistMethod::InformationSet:
      return "information_set";
    case MinDistMethod::Automatic:
      break;
  }
  return "automatic";
}

std::string opt_str(const std::optional<BigInt>& v) { return v ? v->str() : "-"; }

int cmd_summarize(const Options& o, std::ostream& out) {
  const auto sm = summarize(load_graph(o));
  if (o.json) {
    auto j = header("summarize", o);
    j.update({{"n", sm.n}, {"s", sm.s}, {"b0", sm.b0}, {"bipartite", sm.bipartite}, {"gamma", sm.gamma}});
    emit(out, j);
  } else {
    out << "n " << sm.n << "\ns " << sm.s << "\nb0 " << sm.b0 << "\nbipartite " << (sm.bipartite ? "yes" : "no")
        << "\ngamma " << sm.gamma << '\n';
  }
  return kExitOk;
}

int cmd_length(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const Field f = need_field(o);
  const auto x = parameterize(g, f, cap_or(o, kDefaultTorusCap));
  if (o.json) {
    auto j = header("length", o);
    j["length"] = x.size();
    j["expected_length"] = big_to_json(expected_length(summarize(g), f));
    emit(out, j);
  } else {
    out << x.size() << '\n';
  }
  return kExitOk;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const Field f = need_field(o);
  const int d = need_d(o);
  const auto x = parameterize(load_graph(o), f, cap_or(o, kDefaultTorusCap));
  const auto k = dimension(x, d, cap_or(o, kDefaultMonomialCap));
  if (o.json) {
    auto j = header("dim", o);
    j.update({{"d", d}, {"dim", k}, {"length", x.size()}});
    emit(out, j);
  } else {
    out << k << '\n';
  }
  return kExitOk;
}

int cmd_reg(const Options& o, std::ostream& out) {
  const Field f = need_field(o);
  const auto x = parameterize(load_graph(o), f, cap_or(o, kDefaultTorusCap));
  const auto h = hilbert_function(x, cap_or(o, kDefaultMonomialCap));
  const int reg = static_cast<int>(h.size()) - 1;
  if (o.json) {
    auto j = header("reg", o);
    j.update({{"reg", reg}, {"hilbert_function", h}, {"length", x.size()}});
    emit(out, j);
  } else {
    out << reg << '\n';
  }
  return kExitOk;
}

int cmd_mindist(const Options& o, std::ostream& out) {
  const Field f = need_field(o);
  const int d = need_d(o);
  const auto x = parameterize(load_graph(o), f, cap_or(o, kDefaultTorusCap));
  const auto code = make_code(x, d, cap_or(o, kDefaultMonomialCap));
  const auto r = minimum_distance(code.generator, f, o.budget);
  if (o.json) {
    auto j = header("mindist", o);
    j.update({{"d", d},
              {"mindist", r.distance},
              {"dim", code.k},
              {"length", code.m},
              {"method", method_name(r.method)},
              {"work", big_to_json(r.work)}});
    emit(out, j);
  } else {
    out << r.distance << '\n';
  }
  return kExitOk;
}

int cmd_profile(const Options& o, std::ostream& out, std::ostream& err) {
  const Field f = need_field(o);
  const int d_max = need_dmax(o);
  const auto x = parameterize(load_graph(o), f, cap_or(o, kDefaultTorusCap));
  const auto p = distance_profile(x, d_max, o.budget, cap_or(o, kDefaultMonomialCap));
  if (o.json) {
    auto j = header("profile", o);
    json rows = json::array();
    for (const auto& r : p.rows)
      rows.push_back({{"d", r.d}, {"dim", r.dim}, {"mindist", r.distance}, {"singleton", r.singleton_bound}});
    j.update({{"length", x.size()}, {"rows", rows}, {"complete", p.complete}});
    if (!p.complete) j.update({{"stopped_at", *p.stopped_at}, {"required", big_to_json(*p.required)}});
    emit(out, j);
  } else {
    out << std::setw(4) << "d" << std::setw(10) << "dim" << std::setw(12) << "mindist" << std::setw(12) << "singleton"
        << '\n';
    for (const auto& r : p.rows)
      out << std::setw(4) << r.d << std::setw(10) << r.dim << std::setw(12) << r.distance << std::setw(12)
          << r.singleton_bound << '\n';
  }
  if (!p.complete) {
    err << "budget exceeded at d = " << *p.stopped_at << "; required: " << *p.required << '\n';
    return kExitRefused;
  }
  return kExitOk;
}

int cmd_ternary(const std::string& what, const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const std::uint64_t subset_cap = cap_or(o, kDefaultSubsetCap);
  auto j = header("ternary " + what, o);
  j["q"] = 3;
  if (what == "reg") {
    const auto m = max_parity_join(g, subset_cap);
    if (o.json) {
      j.update({{"reg", m.reg()}, {"mu", m.mu}, {"witness", m.witness.indices()}});
      emit(out, j);
    } else {
      out << m.reg() << '\n';
    }
    return kExitOk;
  }
  const int d = need_d(o);
  j["d"] = d;
  if (what == "dim") {
    const auto k = dim_ternary(g, d, subset_cap);
    if (o.json) {
      j["dim"] = k;
      emit(out, j);
    } else {
      out << k << '\n';
    }
  } else if (what == "joins") {
    const auto joins = enumerate_Jd(g, d, subset_cap);
    if (o.json) {
      json list = json::array();
      for (auto e : joins) list.push_back(e.indices());
      j["joins"] = list;
      emit(out, j);
    } else {
      for (auto e : joins) out << to_string(e) << '\n';
    }
  } else {
    const auto basis = standard_monomials(g, d, cap_or(o, kDefaultCycleSpaceCap));
    if (o.json) {
      json list = json::array();
      for (const auto& m : basis) list.push_back(m.exponents());
      j["basis"] = list;
      emit(out, j);
    } else {
      for (const auto& m : basis) out << to_string(m) << '\n';
    }
  }
  return kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw UsageError("--family is required");
  out << format_graph(load_graph(o));
  return kExitOk;
}

void print_report(const VerifyReport& r, std::ostream& out) {
  out << "graph " << r.graph_name << "  n=" << r.n << " s=" << r.s << " q=" << r.q << " |X|=" << opt_str(r.length)
      << '\n';
  out << std::setw(4) << "d" << std::setw(10) << "dim" << std::setw(12) << "mindist" << std::setw(12) << "singleton"
      << '\n';
  for (const auto& row : r.degrees)
    out << std::setw(4) << row.d << std::setw(10) << opt_str(row.dim) << std::setw(12) << opt_str(row.mindist)
        << std::setw(12) << opt_str(row.singleton) << '\n';
  out << "reg bruteforce=" << opt_str(r.regularity.bruteforce) << " closed_form=" << opt_str(r.regularity.closed_form)
      << " parity_join=" << opt_str(r.regularity.ternary_parity_join) << '\n';
  for (const auto& c : r.checks) {
    out << std::left << std::setw(8) << to_string(c.status) << std::setw(30) << c.check << std::right;
    out << " d=" << (c.d ? std::to_string(*c.d) : std::string("-"));
    out << " observed=" << opt_str(c.observed) << ' ' << to_string(c.relation) << ' ' << opt_str(c.expected);
    if (c.upper) out << ".." << c.upper->str();
    if (!c.reason.empty()) out << "  (" << c.reason << ')';
    out << '\n';
  }
  out << "pass " << r.count(Status::Pass) << "  fail " << r.count(Status::Fail) << "  skipped "
      << r.count(Status::Skipped) << '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
  need_field(o);
  VerifyOptions vo;
  vo.budget = o.budget;
  if (o.cap) vo.torus_cap = vo.monomial_cap = vo.subset_cap = *o.cap;
  vo.graph_name = graph_name(o);
  if (o.family == "parallel_composition") vo.parallel_lengths = o.params;
  const auto report = verify(load_graph(o), o.q, need_dmax(o), vo);
  if (o.json)
    emit(out, to_json(report));
  else
    print_report(report, out);
  return report.failed() ? kExitFail : kExitOk;
}

std::vector<int> parse_perm(const std::string& text) {
  std::vector<int> perm;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      perm.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--seed-order expects a comma-separated permutation, got: " + text);
    }
  }
  return perm;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parameterized codes over graphs", "graphcodes"};
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  std::string seed_order;
  app.add_option("--graph", o.graph_file, "Graph file (\"n s\" header, then one \"u v\" per edge)");
  app.add_option("--family", o.family,
                 "Built-in family: path, cycle, complete, complete_bipartite, complete_multipartite, "
                 "parallel_composition");
  app.add_option("--params", o.params, "Family parameters")->delimiter(',');
  app.add_option("--q", o.q, "Field size (prime power <= 256)");
  app.add_option("--d", o.d, "Degree");
  app.add_option("--dmax", o.d_max, "Largest degree");
  app.add_option("--budget", o.budget, "Minimum-distance budget (codewords)");
  app.add_option("--cap", o.cap, "Override every enumeration cap");
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--seed-order", seed_order, "Edge permutation, e.g. 3,1,2");

  auto* summarize_cmd = app.add_subcommand("summarize", "Graph invariants n, s, b0, bipartite, gamma");
  auto* length_cmd = app.add_subcommand("length", "|X| by enumeration");
  auto* dim_cmd = app.add_subcommand("dim", "dim C_X(d)");
  auto* reg_cmd = app.add_subcommand("reg", "Index of regularity");
  auto* mindist_cmd = app.add_subcommand("mindist", "Minimum distance of C_X(d)");
  auto* profile_cmd = app.add_subcommand("profile", "dim and minimum distance for d = 0..dmax");
  auto* ternary_cmd = app.add_subcommand("ternary", "Combinatorial answers over GF(3)");
  ternary_cmd->require_subcommand(1);
  auto* t_dim = ternary_cmd->add_subcommand("dim", "sum of |J_{d-2i}|");
  auto* t_reg = ternary_cmd->add_subcommand("reg", "Largest parity join minus one");
  auto* t_joins = ternary_cmd->add_subcommand("joins", "List J_d");
  auto* t_basis = ternary_cmd->add_subcommand("basis", "List the standard monomials of degree d");
  auto* family_cmd = app.add_subcommand("family", "Print a built-in family as a graph file");
  auto* verify_cmd = app.add_subcommand("verify", "Check brute force against every applicable closed form");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!seed_order.empty()) o.seed_order = parse_perm(seed_order);
    if (*summarize_cmd) return cmd_summarize(o, out);
    if (*length_cmd) return cmd_length(o, out);
    if (*dim_cmd) return cmd_dim(o, out);
    if (*reg_cmd) return cmd_reg(o, out);
    if (*mindist_cmd) return cmd_mindist(o, out);
    if (*profile_cmd) return cmd_profile(o, out, err);
    if (*t_dim) return cmd_ternary("dim", o, out);
    if (*t_reg) return cmd_ternary("reg", o, out);
    if (*t_joins) return cmd_ternary("joins", o, out);
    if (*t_basis) return cmd_ternary("basis", o, out);
    if (*family_cmd) return cmd_family(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << "\nrequired: " << e.required() << '\n';
    return kExitRefused;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\nrequired: " << e.required() << '\n';
    return kExitRefused;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidGraph& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotAPrimePower& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedFamily& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace graphcodes::cli
