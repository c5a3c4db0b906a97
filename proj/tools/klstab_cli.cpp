// Command-line front end: stability queries, tables, chains, region plots
// and the brute-force verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "CLI11.hpp"
#include "json.hpp"

#include "klstab/brillnoether.hpp"
#include "klstab/json_io.hpp"
#include "klstab/lowrank.hpp"
#include "klstab/oracle.hpp"
#include "klstab/svg_plot.hpp"
#include "klstab/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace klstab;

namespace {

[[noreturn]] void usage_error(const std::string& msg) { throw std::invalid_argument(msg); }

enum class Fmt { Text, Json, Csv, Latex };

Fmt parse_format(const std::string& name, bool allow_csv = false, bool allow_latex = false) {
  if (name == "text") return Fmt::Text;
  if (name == "json") return Fmt::Json;
  if (name == "csv" && allow_csv) return Fmt::Csv;
  if (name == "latex" && allow_latex) return Fmt::Latex;
  usage_error("unsupported format '" + name + "' for this subcommand");
}

SegreProfile load_profile(const std::string& path) {
  std::string text;
  if (path.empty()) {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) usage_error("cannot open profile file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  SegreProfile p = json::parse(text).get<SegreProfile>();
  validate_profile(p);
  return p;
}

std::string segre_list(const SegreProfile& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.segre.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p.segre[i]);
  }
  return out + "]";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

i64 sweep_guard_from_env() {
  const char* raw = std::getenv("KLSTAB_MAX_SWEEP");
  if (raw == nullptr) return 10000;
  try {
    const i64 v = std::stoll(raw);
    if (v < 1) usage_error("KLSTAB_MAX_SWEEP must be positive");
    return v;
  } catch (const std::invalid_argument&) {
    usage_error("KLSTAB_MAX_SWEEP is not an integer");
  } catch (const std::out_of_range&) {
    usage_error("KLSTAB_MAX_SWEEP is out of range");
  }
}

// ---------------------------------------------------------------------- //

int run_nonempty(i64 n, i64 d, i64 g, i64 k, i64 l, Fmt fmt) {
  const BundleType b{n, d};
  const KL kl{k, l};
  const bool verdict = nonempty(b, g, kl);
  if (fmt == Fmt::Json) {
    json per_m = json::array();
    for (i64 m = 1; m < n; ++m) {
      const i64 lhs = k * (n - m) + m * l;
      const i64 rhs = m * (n - m) * (g - 1) + delta_m(n, d, g, m);
      per_m.push_back(json{{"m", m}, {"lhs", lhs}, {"rhs", rhs}, {"ok", lhs < rhs}});
    }
    emit(json{{"n", n}, {"d", d}, {"g", g}, {"k", k}, {"l", l}, {"per_m", per_m},
              {"nonempty", verdict}});
    return 0;
  }
  std::cout << "n=" << n << " d=" << d << " g=" << g << " k=" << k << " l=" << l << "\n";
  for (i64 m = 1; m < n; ++m) {
    const i64 lhs = k * (n - m) + m * l;
    const i64 rhs = m * (n - m) * (g - 1) + delta_m(n, d, g, m);
    std::cout << "  m=" << m << ": k(n-m)+m*l = " << lhs << "  vs  m(n-m)(g-1)+delta_m = " << rhs
              << "  [" << (lhs < rhs ? "ok" : "violated") << "]\n";
  }
  std::cout << "verdict: " << (verdict ? "nonempty" : "empty") << "\n";
  return 0;
}

int run_stable_check(const std::string& profile_path, i64 k, i64 l, Fmt fmt) {
  const SegreProfile p = load_profile(profile_path);
  const i64 n = p.bundle.rank;
  std::vector<i64> violating;
  for (i64 m = 1; m < n; ++m)
    if (p.segre[m - 1] <= k * (n - m) + m * l) violating.push_back(m);
  const bool stable = violating.empty();
  if (fmt == Fmt::Json) {
    emit(json{{"profile", p}, {"k", k}, {"l", l}, {"stable", stable},
              {"violating_m", violating}});
    return 0;
  }
  std::cout << "profile: rank " << n << " degree " << p.bundle.degree << " segre "
            << segre_list(p) << "\n";
  if (stable) {
    std::cout << "(" << k << "," << l << ")-stable: yes\n";
  } else {
    std::cout << "(" << k << "," << l << ")-stable: no; violating m:";
    for (i64 m : violating) std::cout << " " << m;
    std::cout << "\n";
  }
  return 0;
}

int run_dims(i64 n, i64 d, i64 g, i64 k, i64 l, Fmt fmt) {
  const ComplementReport rep = complement_dims(BundleType{n, d}, g, KL{k, l});
  if (fmt == Fmt::Json) {
    emit(json(rep));
    return 0;
  }
  std::cout << "n=" << n << " d=" << d << " g=" << g << " k=" << k << " l=" << l
            << "  (point in R1)\n";
  for (size_t i = 0; i < rep.s_tilde.size(); ++i) {
    std::cout << "  s_tilde[m=" << (i + 1) << "] = "
              << (rep.s_tilde[i] ? std::to_string(*rep.s_tilde[i]) : "absent") << "\n";
  }
  if (rep.dim_complement) {
    std::cout << "  s_delta = " << *rep.s_delta << "\n";
    std::cout << "  dim(non-stable-locus) = " << *rep.dim_complement << "\n";
    std::cout << "  codim = " << *rep.codim << "\n";
    std::cout << "  dim(moduli) = " << moduli_dimension(n, g) << "\n";
  } else {
    std::cout << "  complement empty: every stable bundle is (" << k << "," << l
              << ")-stable\n";
  }
  return 0;
}

int run_chain_rank2(i64 d, i64 g, Fmt fmt) {
  const Rank2Chain chain = rank2_chain(d, g);
  if (fmt == Fmt::Json) {
    emit(json(chain));
    return 0;
  }
  std::cout << "t-stability chain for rank 2, d=" << d << ", g=" << g << "\n";
  std::cout << "  A_t is empty exactly for t >= " << chain.empty_from << "\n";
  std::cout << "  A_" << chain.full_moduli_t << " is the full moduli space\n";
  std::cout << "  every indecomposable bundle is t-stable for t <= "
            << chain.indecomposable_floor << "\n";
  for (const auto& link : chain.links) {
    std::cout << "  t=" << link.t << ": ";
    switch (link.relation) {
      case ChainRelation::EqualParity:
        std::cout << "A_" << link.t << " = A_" << link.t + 1 << "  (parity)";
        break;
      case ChainRelation::Strict:
        std::cout << "A_" << link.t << " strictly contains A_" << link.t + 1;
        break;
      case ChainRelation::BothEmpty:
        std::cout << "A_" << link.t << " = A_" << link.t + 1 << "  (both empty)";
        break;
    }
    std::cout << "\n";
  }
  return 0;
}

std::string symbolic_bound(i64 offset) {
  return offset == 0 ? std::string("2g") : "2g" + std::to_string(offset);
}

int run_table_rank3(i64 g, Fmt fmt) {
  const Rank3Table t = rank3_table(g);
  switch (fmt) {
    case Fmt::Json:
      emit(json(t));
      return 0;
    case Fmt::Csv: {
      std::cout << "g,d_mod_3,bound_2k_plus_l,bound_k_plus_2l\n";
      for (const auto& row : t.rows)
        std::cout << g << "," << row.d_mod_3 << "," << row.bound_2k_l << "," << row.bound_k_2l
                  << "\n";
      return 0;
    }
    case Fmt::Latex: {
      std::cout << "\\begin{table}[h]\n  \\centering\n\\begin{tabular}{|c||c|}\\hline\n";
      std::cout << " & $g\\equiv " << g % 3 << "\\mod 3$ \\\\ \\hline\n";
      for (const auto& row : t.rows) {
        std::cout << "$d\\equiv " << row.d_mod_3 << "\\mod 3$ & $A_{(k,l)}(3,d)\\neq\\emptyset$"
                  << " iff $2k+l< " << symbolic_bound(row.bound_2k_l - 2 * g) << ",$ $k+2l<"
                  << symbolic_bound(row.bound_k_2l - 2 * g) << ".$ \\\\ \\hline\n";
      }
      std::cout << "\\end{tabular}\n\\caption{Non-emptiness for $A_{(k,l)}(3,d).$}\n"
                << "\\end{table}\n";
      return 0;
    }
    case Fmt::Text:
      std::cout << "rank-3 nonemptiness bounds for g=" << g << " (g mod 3 = " << g % 3 << ")\n";
      for (const auto& row : t.rows)
        std::cout << "  d mod 3 = " << row.d_mod_3 << ": 2k+l < " << row.bound_2k_l
                  << "  and  k+2l < " << row.bound_k_2l << "\n";
      return 0;
  }
  return 0;
}

int run_jh(const std::string& profile_path, i64 g, i64 window, Fmt fmt) {
  const SegreProfile p = load_profile(profile_path);
  const JHType type = jh_classify(p);
  const auto witness =
      window > 0 ? jh_region_witness(p, g, window) : jh_region_witness(p, g);
  if (fmt == Fmt::Json) {
    emit(json{{"profile", p},
              {"type", to_string(type)},
              {"witness", witness ? json(*witness) : json(nullptr)}});
    return 0;
  }
  std::cout << "profile: rank 3 degree " << p.bundle.degree << " segre " << segre_list(p)
            << "\n";
  std::cout << "filtration type: " << to_string(type) << "\n";
  if (witness) {
    std::cout << "witness: (" << witness->k << "," << witness->l << ") in "
              << (type == JHType::PlaneFirst ? "R3k" : "R3l") << "\n";
  } else {
    std::cout << "witness: none (not (k,l)-stable anywhere on R3)\n";
  }
  return 0;
}

int run_bn(i64 n, i64 d, i64 g, i64 r, bool has_kl, i64 k, i64 l, Fmt fmt) {
  const BNPoint point{BundleType{n, d}, r, g};
  const BNRegion region = bn_region(point);
  if (fmt == Fmt::Json) {
    json j{{"bundle", point.bundle},
           {"sections", r},
           {"genus", g},
           {"mu", bn_mu(point).str()},
           {"lambda", bn_lambda(point).str()},
           {"region", to_string(region)},
           {"bmno_applicable", bmno_applicable(point)}};
    if (has_kl) {
      j["excluded_kl"] = bn_kl_excluded(point, KL{k, l});
      const auto forced = bn_forced_stratum(point, KL{k, l});
      j["forced_strata"] = forced ? json(*forced) : json::array();
    }
    emit(j);
    return 0;
  }
  std::cout << "point: n=" << n << " d=" << d << " r=" << r << " g=" << g
            << "  mu=" << bn_mu(point).str() << " lambda=" << bn_lambda(point).str() << "\n";
  std::cout << "region: " << to_string(region) << "\n";
  std::cout << "bmno_applicable: " << (bmno_applicable(point) ? "yes" : "no") << "\n";
  if (has_kl) {
    std::cout << "excluded at (" << k << "," << l << "): "
              << (bn_kl_excluded(point, KL{k, l}) ? "yes" : "no") << "\n";
    const auto forced = bn_forced_stratum(point, KL{k, l});
    if (forced) {
      std::cout << "forced strata:";
      for (const auto& c : *forced)
        std::cout << " s_" << c.m
                  << (c.relation == StratumConstraint::Relation::Eq ? " = " : " >= ") << c.s
                  << ";";
      std::cout << "\n";
    } else {
      std::cout << "forced strata: none (outside the treated cases)\n";
    }
  }
  return 0;
}

int run_plot(i64 n, i64 g, i64 window, const std::string& out_path) {
  const std::string svg = region_plot_svg(n, g, window);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) usage_error("cannot open output file '" + out_path + "'");
  out << svg;
  if (!out) usage_error("failed writing '" + out_path + "'");
  return 0;
}

int run_verify(const std::string& scope_name, Fmt fmt, i64 max_points) {
  const auto scope = parse_scope(scope_name);
  if (!scope) usage_error("unknown verify scope '" + scope_name + "'");
  const auto reports = run_verification(*scope, max_points);
  bool all_passed = true;
  for (const auto& rep : reports) all_passed &= rep.passed;
  if (fmt == Fmt::Json) {
    json items = json::array();
    for (const auto& rep : reports)
      items.push_back(json{{"scope", rep.scope},
                           {"passed", rep.passed},
                           {"checked", rep.checked},
                           {"mismatches", rep.mismatches}});
    emit(json{{"reports", items}, {"passed", all_passed}});
  } else {
    for (const auto& rep : reports) {
      std::cout << "verify " << rep.scope << ": " << (rep.passed ? "PASS" : "FAIL") << " ("
                << rep.checked << " checks)\n";
      size_t shown = 0;
      for (const auto& miss : rep.mismatches) {
        if (shown++ == 50) {
          std::cout << "  ... and " << rep.mismatches.size() - 50 << " more\n";
          break;
        }
        std::cout << "  mismatch: " << miss << "\n";
      }
    }
    std::cout << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (k,l)-stability calculator for vector bundles on a smooth curve"};
  app.require_subcommand(1);

  i64 n = 2, d = 0, g = 2, k = 0, l = 0, r = 0, window = 0;
  std::string format = "text", out_path, profile_path, scope = "all";

  const auto add_bundle = [&](CLI::App* cmd, bool with_kl = true) {
    cmd->add_option("-n,--rank", n, "bundle rank")->required();
    cmd->add_option("-d,--degree", d, "bundle degree")->required();
    cmd->add_option("-g,--genus", g, "curve genus")->required();
    if (with_kl) {
      cmd->add_option("-k", k, "stability parameter k")->required();
      cmd->add_option("-l", l, "stability parameter l")->required();
    }
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->capture_default_str();
  };

  auto* cmd_nonempty = app.add_subcommand(
      "nonempty", "decide whether any (k,l)-stable bundle of this type exists");
  add_bundle(cmd_nonempty);
  add_format(cmd_nonempty);

  auto* cmd_stable = app.add_subcommand(
      "stable-check", "test a Segre profile (JSON on stdin or --profile) for (k,l)-stability");
  cmd_stable->add_option("-k", k, "stability parameter k")->required();
  cmd_stable->add_option("-l", l, "stability parameter l")->required();
  cmd_stable->add_option("--profile", profile_path, "profile JSON file (default: stdin)");
  add_format(cmd_stable);

  auto* cmd_dims = app.add_subcommand(
      "dims", "dimension and codimension of the non-(k,l)-stable locus (R1 only)");
  add_bundle(cmd_dims);
  add_format(cmd_dims);

  auto* cmd_chain = app.add_subcommand("chain-rank2", "the rank-2 t-stability chain");
  cmd_chain->add_option("-d,--degree", d, "bundle degree")->required();
  cmd_chain->add_option("-g,--genus", g, "curve genus")->required();
  add_format(cmd_chain);

  auto* cmd_table = app.add_subcommand("table-rank3", "rank-3 nonemptiness bounds by d mod 3");
  cmd_table->add_option("-g,--genus", g, "curve genus")->required();
  add_format(cmd_table);

  auto* cmd_jh = app.add_subcommand(
      "jh", "filtration type of a strictly semistable rank-3 profile, with region witness");
  cmd_jh->add_option("-g,--genus", g, "curve genus")->required();
  cmd_jh->add_option("--profile", profile_path, "profile JSON file (default: stdin)");
  cmd_jh->add_option("--window", window, "witness search window (default 3g)");
  add_format(cmd_jh);

  auto* cmd_bn = app.add_subcommand(
      "bn", "section-count region report and (k,l) exclusion consequences");
  cmd_bn->add_option("-n,--rank", n, "bundle rank")->required();
  cmd_bn->add_option("-d,--degree", d, "bundle degree")->required();
  cmd_bn->add_option("-g,--genus", g, "curve genus")->required();
  cmd_bn->add_option("-r,--sections", r, "required independent sections")->required();
  cmd_bn->add_option("-k", k, "stability parameter k");
  cmd_bn->add_option("-l", l, "stability parameter l");
  add_format(cmd_bn);

  auto* cmd_plot = app.add_subcommand("plot-regions", "SVG of the (k,l) region layout");
  cmd_plot->add_option("-n,--rank", n, "bundle rank")->required();
  cmd_plot->add_option("-g,--genus", g, "curve genus")->required();
  cmd_plot->add_option("--window", window, "half-width of the lattice window (default n*g)");
  cmd_plot->add_option("--out", out_path, "output SVG path")->required();

  auto* cmd_verify = app.add_subcommand(
      "verify", "recompute everything by brute force and compare");
  cmd_verify->add_option("scope", scope,
                         "one of nonempty, dims, table, rank2, jh, bn, all")
      ->capture_default_str();
  add_format(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_nonempty))
      return run_nonempty(n, d, g, k, l, parse_format(format));
    if (app.got_subcommand(cmd_stable))
      return run_stable_check(profile_path, k, l, parse_format(format));
    if (app.got_subcommand(cmd_dims)) return run_dims(n, d, g, k, l, parse_format(format));
    if (app.got_subcommand(cmd_chain)) return run_chain_rank2(d, g, parse_format(format));
    if (app.got_subcommand(cmd_table))
      return run_table_rank3(g, parse_format(format, /*allow_csv=*/true, /*allow_latex=*/true));
    if (app.got_subcommand(cmd_jh)) return run_jh(profile_path, g, window, parse_format(format));
    if (app.got_subcommand(cmd_bn)) {
      const bool has_k = cmd_bn->count("-k") > 0;
      const bool has_l = cmd_bn->count("-l") > 0;
      if (has_k != has_l) usage_error("bn: give both -k and -l or neither");
      return run_bn(n, d, g, r, has_k, k, l, parse_format(format));
    }
    if (app.got_subcommand(cmd_plot)) return run_plot(n, g, window, out_path);
    if (app.got_subcommand(cmd_verify))
      return run_verify(scope, parse_format(format), sweep_guard_from_env());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
