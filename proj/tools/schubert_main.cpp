// Command-line front end: Schubert and skew Schubert polynomials, rc-graphs,
// increasing chains, Littlewood-Richardson tables and the verification suites.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schubert/io.hpp"
#include "schubert/verify.hpp"

namespace {

using namespace schubert;
using schubert::io::json;

std::string default_format() {
  const char* env = std::getenv("SCHUBERT_FORMAT");
  if (env && std::string(env) == "json") return "json";
  return "text";
}

int infer_n(int n, std::initializer_list<const Permutation*> perms) {
  int m = 0;
  for (const auto* p : perms) m = std::max(m, p->size());
  return n > 0 ? n : m;
}

std::string chain_text(const LabeledChain& chain) {
  std::string out = chain.start().to_string();
  for (std::size_t s = 0; s < chain.size(); ++s) {
    const auto& l = chain.labels()[s];
    out += " -(" + std::to_string(l.k) + "," + std::to_string(l.b) + ")-> " + chain.path()[s + 1].to_string();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert polynomials, skew Schubert polynomials and Bruhat chains"};
  app.require_subcommand(1);

  std::string format = default_format();
  int n = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "Ambient size (default: longest permutation given)");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string perm_a, perm_b;
  std::string method;
  bool expand = false;
  std::string out_file;
  std::string render;
  std::string type;
  std::string suite = "all";
  std::uint64_t seed = 1;

  auto* schubert_cmd = app.add_subcommand("schubert", "Schubert polynomial S_w");
  schubert_cmd->add_option("w", perm_a, "Permutation")->required();
  schubert_cmd->add_option("--method", method, "rcgraph | chain")->check(CLI::IsMember({"rcgraph", "chain"}));
  add_common(schubert_cmd);

  auto* skew_cmd = app.add_subcommand("skew", "Skew Schubert polynomial S_{w/u}");
  skew_cmd->add_option("w", perm_a, "Upper permutation")->required();
  skew_cmd->add_option("u", perm_b, "Lower permutation")->required();
  skew_cmd->add_option("--method", method, "normalform | chains | lr")
      ->check(CLI::IsMember({"normalform", "chains", "lr"}));
  skew_cmd->add_flag("--expand", expand, "Print the expansion in the Schubert basis");
  add_common(skew_cmd);

  auto* lr_cmd = app.add_subcommand("lr", "Structure constants c^w_{u,v}");
  lr_cmd->add_option("u", perm_a, "First factor")->required();
  lr_cmd->add_option("v", perm_b, "Second factor")->required();
  lr_cmd->add_option("--out", out_file, "Append rows to this newline-delimited JSON cache");
  add_common(lr_cmd);

  auto* rc_cmd = app.add_subcommand("rcgraphs", "Enumerate the rc-graphs of w");
  rc_cmd->add_option("w", perm_a, "Permutation")->required();
  rc_cmd->add_option("--render", render, "json | ascii")->check(CLI::IsMember({"json", "ascii"}));
  add_common(rc_cmd);

  auto* chains_cmd = app.add_subcommand("chains", "Enumerate increasing chains from u to w");
  chains_cmd->add_option("u", perm_a, "Start")->required();
  chains_cmd->add_option("w", perm_b, "End")->required();
  chains_cmd->add_option("--type", type, "Only chains of this type, e.g. 1,2,0");
  add_common(chains_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember({"bijection", "routes", "corollary", "pieri", "stability", "all"}));
  verify_cmd->add_option("--seed", seed, "Seed for sampled suites");
  add_common(verify_cmd);

  CLI11_PARSE(app, argc, argv);
  const bool as_json = format == "json";

  try {
    if (*schubert_cmd) {
      const Permutation w = Permutation::parse(perm_a);
      const int size = infer_n(n, {&w});
      const auto m = method == "chain" ? SchubertMethod::kChain : SchubertMethod::kRcGraph;
      const Polynomial p = schubert::schubert(w, size, m);
      std::cout << (as_json ? io::polynomial_to_json(p, size).dump() : p.to_string()) << '\n';
    } else if (*skew_cmd) {
      const Permutation w = Permutation::parse(perm_a);
      const Permutation u = Permutation::parse(perm_b);
      const int size = infer_n(n, {&w, &u});
      SkewMethod m = SkewMethod::kNormalForm;
      if (method == "chains") m = SkewMethod::kChains;
      if (method == "lr") m = SkewMethod::kLr;
      const Polynomial p = skew(w, u, size, m);
      if (expand) {
        std::cout << io::expansion_to_json(expand_in_schubert_basis(p, size)).dump() << '\n';
      } else {
        std::cout << (as_json ? io::polynomial_to_json(p, size).dump() : p.to_string()) << '\n';
      }
    } else if (*lr_cmd) {
      const Permutation u = Permutation::parse(perm_a);
      const Permutation v = Permutation::parse(perm_b);
      const int size = infer_n(n, {&u, &v});
      const auto rows = io::lr_records(u, v, lr_coefficients(u, v, size));
      if (!out_file.empty()) {
        io::LrCache cache(out_file);
        const auto written = cache.append(rows);
        std::cerr << "appended " << written << " of " << rows.size() << " rows to " << out_file << '\n';
      } else {
        for (const auto& r : rows) {
          if (as_json) {
            std::cout << io::lr_record_to_json(r).dump() << '\n';
          } else {
            std::cout << r.w << ' ' << r.c << '\n';
          }
        }
      }
    } else if (*rc_cmd) {
      const Permutation given = Permutation::parse(perm_a);
      const Permutation w = embed(given, infer_n(n, {&given}));
      if (render.empty()) render = as_json ? "json" : "ascii";
      RcGraphs graphs(w);
      bool first = true;
      while (auto graph = graphs.next()) {
        if (render == "json") {
          std::cout << io::rcgraph_to_json(*graph).dump() << '\n';
        } else {
          if (!first) std::cout << '\n';
          std::cout << graph->render_ascii() << std::flush;
        }
        first = false;
      }
    } else if (*chains_cmd) {
      const Permutation u0 = Permutation::parse(perm_a);
      const Permutation w0 = Permutation::parse(perm_b);
      const int size = infer_n(n, {&u0, &w0});
      const Permutation u = embed(u0, size);
      const Permutation w = embed(w0, size);
      std::optional<Composition> alpha;
      if (!type.empty()) {
        alpha = io::parse_composition(type);
        alpha->resize(std::max<std::size_t>(alpha->size(), size - 1), 0);
      }
      IncreasingChains chains(u, w);
      while (auto chain = chains.next()) {
        if (alpha) {
          Composition t = chain_type(*chain);
          t.resize(alpha->size(), 0);
          if (t != *alpha) continue;
        }
        std::cout << (as_json ? io::chain_to_json(*chain).dump() : chain_text(*chain)) << '\n';
      }
    } else if (*verify_cmd) {
      const int size = n > 0 ? n : 4;
      bool ok = true;
      for (const auto& report : verify::run_suites(suite, size, seed)) {
        ok = ok && report.passed();
        if (as_json) {
          std::cout << json{{"suite", report.name},
                            {"n", size},
                            {"passed", report.passed()},
                            {"checks", report.checks},
                            {"failures", report.failures}}
                           .dump()
                    << '\n';
        } else {
          std::cout << report.name << " n=" << size << ": " << (report.passed() ? "pass" : "FAIL") << " ("
                    << report.checks << " checks)\n";
          for (const auto& f : report.failures) std::cout << "  " << f << '\n';
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
