#include "eqrim_cli/cli.hpp"

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eqrim/abacus.hpp"
#include "eqrim/eqlr.hpp"
#include "eqrim/error.hpp"
#include "eqrim/facschur.hpp"
#include "eqrim/identities.hpp"
#include "eqrim/parallel.hpp"
#include "eqrim/partition.hpp"
#include "eqrim/qh.hpp"

namespace eqrim::cli {

namespace {

using nlohmann::json;

enum class Format { kText, kJson, kLatex };

struct Settings {
  int k = 0;
  int n = 0;
  int N = 0;
  Format format = Format::kText;
  bool diagnostics = false;
  std::string cache_path;
  int jobs = 1;
  // mult / classical
  std::string lhs;
  std::string rhs;
  std::vector<std::string> positional;
  // schur
  bool jt = false;
  int shift = 0;
  int cyclic = 0;
  // verify
  std::string suite;
  int max_d = 2;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
};

std::string partition_text(const Partition& p) { return "(" + (p.empty() ? std::string{} : to_string(p)) + ")"; }

// lhs and rhs come from --lhs/--rhs or, failing that, two positionals.
std::pair<Partition, Partition> operands(const Settings& s) {
  std::vector<std::string> texts = s.positional;
  if (!s.lhs.empty() || !s.rhs.empty()) {
    if (s.lhs.empty() || s.rhs.empty() || !texts.empty()) throw ParseError("give both --lhs and --rhs, or two partitions");
    texts = {s.lhs, s.rhs};
  }
  if (texts.size() != 2) throw ParseError("expected two partitions, got " + std::to_string(texts.size()));
  return {parse_partition(texts[0]), parse_partition(texts[1])};
}

Partition single_operand(const Settings& s) {
  if (s.positional.size() != 1) throw ParseError("expected one partition, got " + std::to_string(s.positional.size()));
  return parse_partition(s.positional[0]);
}

void require_box(const Partition& p, int k, int n, const char* role) {
  if (!in_box(p, k, n)) {
    throw DomainError(std::string(role) + " partition " + partition_text(p) + " does not fit in the " +
                      std::to_string(k) + " x " + std::to_string(n - k) + " box");
  }
}

std::unique_ptr<ExpansionCache> open_cache(const Settings& s, std::ostream& err) {
  if (s.cache_path.empty()) return nullptr;
  auto cache = std::make_unique<ExpansionCache>(s.cache_path);
  for (const auto& w : cache->warnings()) err << "cache: " << w << "\n";
  return cache;
}

std::string render(const QClass& c, Format f) {
  switch (f) {
    case Format::kJson:
      return json(c).dump(2);
    case Format::kLatex:
      return to_latex(c);
    case Format::kText:
      break;
  }
  return to_string(c);
}

std::string render(const ClassicalExpansion& e, Format f) {
  if (f == Format::kJson) return json(e).dump(2);
  if (f == Format::kText) return to_string(e);
  if (e.terms.empty()) return "0";
  std::string out;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (!(it->second == TPoly(1))) out += "\\left(" + to_latex(it->second) + "\\right) ";
    out += "\\sigma_{" + (it->first.empty() ? std::string("\\emptyset") : "(" + to_string(it->first) + ")") + "}";
  }
  return out;
}

int cmd_mult(const Settings& s, std::ostream& out, std::ostream& err) {
  auto [lhs, rhs] = operands(s);
  require_box(lhs, s.k, s.n, "left");
  require_box(rhs, s.k, s.n, "right");
  auto cache = open_cache(s, err);
  std::vector<PhiContribution> diag;
  ClassicalExpansion lifted = lifted_product(lhs, rhs, s.k, s.n, cache.get());
  QClass result = phi_reduce(lifted, s.n, s.diagnostics ? &diag : nullptr);
  if (!s.diagnostics) {
    out << render(result, s.format) << "\n";
    return kOk;
  }
  auto image = [&](const PhiContribution& c) {
    QClass q(s.k, s.n);
    if (c.reduction) q.add(c.reduction->core, c.reduction->d, c.contribution);
    return q;
  };
  if (s.format == Format::kJson) {
    json contributions = json::array();
    for (const auto& c : diag) {
      json entry{{"gamma", c.gamma.parts()}, {"coefficient", c.coefficient}, {"image", image(c)}};
      if (c.reduction) {
        entry["core"] = c.reduction->core.parts();
        entry["d"] = c.reduction->d;
        entry["heights"] = c.reduction->heights;
        entry["sign"] = c.reduction->sign;
      }
      contributions.push_back(std::move(entry));
    }
    out << json{{"result", result}, {"lifted", lifted}, {"contributions", contributions}}.dump(2) << "\n";
    return kOk;
  }
  out << "lifted product in Gr(" << s.k << "," << 2 * s.n - 1 << "):\n  " << render(lifted, s.format) << "\n";
  out << "contributions:\n";
  for (const auto& c : diag) {
    out << "  " << partition_text(c.gamma) << ": (" << to_string(c.coefficient) << ") -> ";
    if (!c.reduction) {
      out << "0 (core leaves the box)\n";
      continue;
    }
    out << render(image(c), s.format == Format::kLatex ? Format::kLatex : Format::kText) << "  [core "
        << partition_text(c.reduction->core) << ", d=" << c.reduction->d << ", sign "
        << (c.reduction->sign > 0 ? "+1" : "-1") << "]\n";
  }
  out << "result:\n  " << render(result, s.format) << "\n";
  return kOk;
}

int cmd_classical(const Settings& s, std::ostream& out, std::ostream& err) {
  auto [lhs, rhs] = operands(s);
  require_box(lhs, s.k, s.N, "left");
  require_box(rhs, s.k, s.N, "right");
  auto cache = open_cache(s, err);
  out << render(classical_eqlr(lhs, rhs, s.k, s.N, cache.get()), s.format) << "\n";
  return kOk;
}

int cmd_pieri(const Settings& s, std::ostream& out) {
  Partition p = single_operand(s);
  require_box(p, s.k, s.n, "the");
  out << render(quantum_pieri(p, s.k, s.n), s.format) << "\n";
  return kOk;
}

int cmd_core(const Settings& s, std::ostream& out) {
  Partition p = single_operand(s);
  if (p.length() > s.k) throw DomainError("partition " + partition_text(p) + " has more than k rows");
  RimHookReduction strip = strip_rim_hooks(p, s.n, s.k);
  bool in = in_box(strip.core, s.k, s.n);
  auto [flush, moves] = make_flush(abacus_from_partition(p, s.k, s.n));
  Partition abacus_core = abacus_to_partition(flush);
  bool agrees = abacus_core == strip.core && moves == strip.d;
  if (s.format == Format::kJson) {
    out << json{{"partition", p.parts()},
                {"core", strip.core.parts()},
                {"d", strip.d},
                {"heights", strip.heights},
                {"sign", strip.sign},
                {"in_box", in},
                {"abacus_agrees", agrees}}
               .dump(2)
        << "\n";
  } else {
    out << "core: " << partition_text(strip.core) << (in ? "" : "  (outside the box, phi sends it to 0)") << "\n";
    out << "d: " << strip.d << "\n";
    out << "heights:";
    for (int h : strip.heights) out << " " << h;
    out << "\nsign: " << (strip.sign > 0 ? "+1" : "-1") << "\n";
    out << "abacus flush after " << moves << " moves, " << (agrees ? "agrees" : "DISAGREES") << ":\n"
        << render(flush);
  }
  return agrees ? kOk : kInvariant;
}

int cmd_schur(const Settings& s, std::ostream& out) {
  Partition p = single_operand(s);
  WeightSeq w{s.shift};
  XPoly v = s.cyclic > 0 ? cyclic_factorial_schur(p, s.k, s.cyclic, w)
            : s.jt       ? jacobi_trudi(p, s.k, w)
                         : factorial_schur_ssyt(p, s.k, w);
  if (s.format == Format::kJson) {
    json terms = json::array();
    for (const auto& [e, c] : v.terms()) {
      terms.push_back({{"x", std::vector<int>(e.begin(), e.begin() + s.k)}, {"c", c}});
    }
    out << json{{"k", s.k}, {"terms", terms}}.dump(2) << "\n";
  } else {
    out << to_string(v) << "\n";
  }
  return kOk;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  auto cache = open_cache(s, err);
  VerifyOptions o;
  o.jobs = effective_jobs(s.jobs);
  o.cache = cache.get();
  o.max_d = s.max_d;
  if (s.sample > 0) o.sample = s.sample;
  o.seed = s.seed;
  auto reports = run_suite(s.suite, s.k, s.n, o);
  bool ok = true;
  json all = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (s.format == Format::kJson) {
      all.push_back(r);
    } else {
      out << to_table(r);
    }
  }
  if (s.format == Format::kJson) out << all.dump(2) << "\n";
  return ok ? kOk : kVerificationFailed;
}

void add_format(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format: text, json or latex")
      ->transform(CLI::CheckedTransformer(
                      std::map<std::string, Format>{
                          {"text", Format::kText}, {"json", Format::kJson}, {"latex", Format::kLatex}},
                      CLI::ignore_case)
                      .description(""))
      ->type_name("FORMAT");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Equivariant quantum Littlewood-Richardson coefficients by the rim hook rule"};
  app.name("eqrim");
  app.require_subcommand(1);

  auto* mult = app.add_subcommand("mult", "Product in QH_T^*(Gr(k,n))");
  mult->add_option("--k", s.k)->required();
  mult->add_option("--n", s.n)->required();
  mult->add_option("--lhs", s.lhs, "Left partition, e.g. 2,1 (0 for the empty one)");
  mult->add_option("--rhs", s.rhs, "Right partition");
  mult->add_option("partitions", s.positional);
  mult->add_flag("--diagnostics", s.diagnostics, "Show the lifted product and every phi contribution");
  mult->add_option("--cache", s.cache_path, "Append-only cache of classical expansions");
  add_format(mult, s);

  auto* classical = app.add_subcommand("classical", "Product in H_T^*(Gr(k,N))");
  classical->add_option("--k", s.k)->required();
  classical->add_option("--N", s.N)->required();
  classical->add_option("--lhs", s.lhs);
  classical->add_option("--rhs", s.rhs);
  classical->add_option("partitions", s.positional);
  classical->add_option("--cache", s.cache_path);
  add_format(classical, s);

  auto* core = app.add_subcommand("core", "n-core, hook heights and sign of a partition");
  core->add_option("--k", s.k)->required();
  core->add_option("--n", s.n)->required();
  core->add_option("partition", s.positional);
  add_format(core, s);

  auto* schur = app.add_subcommand("schur", "Factorial Schur polynomial in k variables");
  schur->add_option("--k", s.k)->required();
  schur->add_flag("--jt", s.jt, "Use the Jacobi-Trudi determinant");
  schur->add_option("--shift", s.shift, "Weight index shift: factors read t_{shift+i}");
  schur->add_option("--cyclic", s.cyclic, "Reduce weight indices mod this n");
  schur->add_option("partition", s.positional);
  add_format(schur, s);

  auto* pieri = app.add_subcommand("pieri", "sigma_1 times a class by the quantum Pieri rule");
  pieri->add_option("--k", s.k)->required();
  pieri->add_option("--n", s.n)->required();
  pieri->add_option("partition", s.positional);
  add_format(pieri, s);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suites = "all";
  for (const auto& name : suite_names()) suites += ", " + name;
  verify->add_option("suite", s.suite, "One of: " + suites)->required();
  verify->add_option("--k", s.k)->required();
  verify->add_option("--n", s.n)->required();
  verify->add_option("--jobs", s.jobs, "Worker threads, 0 for all cores");
  verify->add_option("--cache", s.cache_path);
  verify->add_option("--max-d", s.max_d, "Largest q-degree checked");
  verify->add_option("--sample", s.sample, "Check a random sample of this many cases");
  verify->add_option("--seed", s.seed, "Seed for --sample");
  add_format(verify, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*mult) return cmd_mult(s, out, err);
    if (*classical) return cmd_classical(s, out, err);
    if (*core) return cmd_core(s, out);
    if (*schur) return cmd_schur(s, out);
    if (*pieri) return cmd_pieri(s, out);
    if (*verify) return cmd_verify(s, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kOutsideBox;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const ArithmeticOverflow& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}

}  // namespace eqrim::cli
