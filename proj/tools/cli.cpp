#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "output_record.hpp"
#include "permsum/constructors.hpp"
#include "permsum/errors.hpp"
#include "permsum/search.hpp"
#include "permsum/seeds.hpp"
#include "permsum/tree.hpp"

namespace permsum::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct CommonFlags {
  bool json = false;
  std::optional<double> timeout;
  std::optional<std::uint64_t> nodes;
  int workers = 1;
  bool no_symmetry = false;
};

// Thrown for anything that should exit with kExitInvalid.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Functional functional_arg(const std::string& text) {
  auto f = parse_functional(text);
  if (!f) {
    throw UsageError("unknown functional '" + text +
                     "' (expected dif, cycdif, prod, sum, cycsum, sqdif or cycsqdif)");
  }
  return *f;
}

// Recomputes the value of perm before anything is printed.
void attach_verified(OutputRecord& rec, Functional f, const Permutation& perm) {
  Witness w(perm, f);
  rec.perm = w.perm();
  rec.value = w.value();
  rec.n = perm.size();
  rec.functional = std::string(name(f));
}

OutputRecord cmd_construct(const std::string& fname, int n, const std::string& target_text) {
  const Functional f = functional_arg(fname);
  const Rational target = Rational::parse(target_text);
  OutputRecord rec;
  rec.command = "construct";
  Permutation perm = Permutation::identity(1);
  switch (f) {
    case Functional::kDif:
      if (!target.is_integer()) {
        throw UsageError("no construction for non-integer dif targets; use search");
      }
      perm = integer_witness(n, target.to_integer());
      break;
    case Functional::kCycDif:
      if (!target.is_zero()) throw UsageError("cycdif construction exists only for target 0");
      if (n < 8) throw UsageError("excluded: cycdif = 0 is constructed only for n >= 8");
      perm = zero_cycdif(n);
      break;
    case Functional::kProd:
      if (target != Rational(1)) throw UsageError("prod construction exists only for target 1");
      if (n < 6) throw UsageError("excluded: prod = 1 is constructed only for n >= 6");
      perm = prod_one(n);
      break;
    default:
      throw UsageError("no construction for " + std::string(name(f)) + "; use search");
  }
  attach_verified(rec, f, perm);
  if (*rec.value != target) {
    throw ConstructionFailure("constructed " + to_string(perm) + " evaluates to " + rec.value->to_string() +
                              ", not " + target.to_string());
  }
  rec.target = target;
  return rec;
}

OutputRecord cmd_eval(const std::string& fname, const std::string& perm_text) {
  const Functional f = functional_arg(fname);
  OutputRecord rec;
  rec.command = "eval";
  attach_verified(rec, f, parse_permutation(perm_text));
  return rec;
}

EnumerateOptions enumerate_options(const CommonFlags& flags) {
  EnumerateOptions opts;
  if (flags.timeout) opts.time_budget = std::chrono::duration<double>(*flags.timeout);
  opts.node_budget = flags.nodes;
  opts.workers = flags.workers;
  opts.symmetry_reduction = !flags.no_symmetry;
  return opts;
}

OutputRecord cmd_values(int n, const std::string& fname, bool integers_only, const CommonFlags& flags) {
  const Functional f = functional_arg(fname);
  OutputRecord rec;
  rec.command = "values";
  rec.n = n;
  rec.functional = std::string(name(f));
  const EnumerateOptions opts = enumerate_options(flags);
  std::vector<Rational> values;
  try {
    if (integers_only && f == Functional::kDif) {
      for (long long m : integer_values(n, 9, opts)) values.emplace_back(m);
    } else {
      ValueSet set = enumerate_values(f, n, opts);
      for (auto& v : set.values) {
        if (!integers_only || v.is_integer()) values.push_back(std::move(v));
      }
    }
  } catch (const BudgetExceeded& e) {
    rec.status = Status::kBudgetExceeded;
    rec.message = e.what();
    return rec;
  }
  rec.values = std::move(values);
  return rec;
}

OutputRecord cmd_search(const std::string& fname, int n, const std::string& target_text, bool closest,
                        bool progress, const CommonFlags& flags, std::ostream& err) {
  const Functional f = functional_arg(fname);
  const Rational target = Rational::parse(target_text);
  SearchOptions opts;
  if (flags.timeout) opts.time_budget = std::chrono::duration<double>(*flags.timeout);
  opts.node_budget = flags.nodes;
  opts.workers = flags.workers;
  opts.symmetry_reduction = !flags.no_symmetry;
  opts.order = closest ? CandidateOrder::kClosest : CandidateOrder::kAscending;
  if (progress) {
    opts.on_progress = [&err](const Progress& p) {
      err << "progress: nodes=" << p.nodes << " depth=" << p.depth;
      if (p.best_deviation) err << " best_deviation=" << p.best_deviation->to_string();
      if (p.best) err << " best=" << to_string(*p.best);
      err << "\n";
    };
  }
  SearchResult result = find_witness(f, n, target, opts);

  OutputRecord rec;
  rec.command = "search";
  rec.n = n;
  rec.functional = std::string(name(f));
  rec.target = target;
  rec.nodes = result.nodes;
  switch (result.status) {
    case SearchStatus::kFound:
      rec.status = Status::kFound;
      attach_verified(rec, f, result.witnesses.front().perm());
      if (*rec.value != target) {
        throw ConstructionFailure("search returned a permutation that does not hit the target");
      }
      break;
    case SearchStatus::kExhausted:
      rec.status = Status::kExhausted;
      rec.message = "no permutation attains the target";
      break;
    case SearchStatus::kBudgetExceeded:
      rec.status = Status::kBudgetExceeded;
      rec.message = "budget exhausted before the search space was covered";
      break;
  }
  return rec;
}

std::vector<SeedClaim> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read table '" + path + "'");
  std::vector<SeedClaim> claims;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string label, fname, expected, perm;
    if (!(fields >> label)) continue;
    if (!(fields >> fname >> expected >> perm)) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'name functional value perm'");
    }
    std::vector<int> entries;
    std::istringstream items(perm);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        entries.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw UsageError(path + ":" + std::to_string(lineno) + ": bad entry '" + item + "'");
      }
    }
    claims.push_back(SeedClaim{label, std::move(entries), functional_arg(fname), Rational::parse(expected),
                               std::nullopt, std::nullopt});
  }
  return claims;
}

OutputRecord cmd_verify(const std::string& suite, const std::string& table_path) {
  std::vector<SeedClaim> claims;
  if (!table_path.empty()) {
    claims = load_table(table_path);
  } else if (suite == "paper") {
    claims = cycsqdif_witnesses();
  } else if (suite == "seeds") {
    claims = construction_seeds();
  } else if (suite == "all") {
    claims = construction_seeds();
    const auto& w = cycsqdif_witnesses();
    claims.insert(claims.end(), w.begin(), w.end());
  } else {
    throw UsageError("unknown suite '" + suite + "' (expected paper, seeds or all)");
  }
  OutputRecord rec;
  rec.command = "verify";
  std::vector<CheckLine> lines;
  std::size_t passed = 0;
  for (const auto& check : verify_claims(claims)) {
    passed += check.ok ? 1 : 0;
    lines.push_back({check.name, check.ok, check.detail});
  }
  rec.message = std::to_string(passed) + "/" + std::to_string(lines.size()) + " passed";
  rec.status = passed == lines.size() ? Status::kOk : Status::kError;
  rec.checks = std::move(lines);
  return rec;
}

OutputRecord cmd_tree(int n) {
  if (n < 6) throw UsageError("tree needs n >= 6 (prod = 1 has no permutation below that), got n = " +
                              std::to_string(n));
  OutputRecord rec;
  rec.command = "tree";
  attach_verified(rec, Functional::kProd, prod_one(n));
  if (*rec.value != Rational(1)) throw ConstructionFailure("prod_one does not evaluate to 1");
  rec.dot = to_dot(increasing_tree(*rec.perm), "delta_" + std::to_string(n));
  return rec;
}

void emit(const OutputRecord& rec, const CommonFlags& flags, std::ostream& out) {
  if (flags.json) {
    out << to_json(rec).dump() << "\n";
  } else {
    out << to_text(rec);
  }
}

int exit_code(const OutputRecord& rec) {
  switch (rec.status) {
    case Status::kOk:
    case Status::kFound:
      return kExitOk;
    case Status::kExhausted:
    case Status::kBudgetExceeded:
      return kExitNotFound;
    case Status::kError:
      return rec.command == "verify" ? kExitNotFound : kExitInvalid;
  }
  return kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation, construction and search of permutations with rational-sum conditions",
               "permsum"};
  app.require_subcommand(1);
  app.fallthrough();
  CommonFlags flags;
  app.add_flag("--json", flags.json, "Emit one JSON record instead of text");
  app.add_option("--timeout", flags.timeout, "Time budget in seconds (search, values)")
      ->check(CLI::PositiveNumber);
  app.add_option("--nodes", flags.nodes, "Node budget (search, values)")->check(CLI::PositiveNumber);
  app.add_option("--workers", flags.workers, "Worker threads (search, values)")->check(CLI::PositiveNumber);
  app.add_flag("--no-symmetry", flags.no_symmetry, "Disable symmetry reduction");

  std::string fname, target, perm_text, suite, table_path;
  int n = 0;
  bool integers_only = false;
  bool closest = false;
  bool progress = false;

  auto* construct = app.add_subcommand("construct", "Build a permutation attaining a proven value");
  construct->add_option("functional", fname)->required();
  construct->add_option("n", n)->required();
  construct->add_option("target", target)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a functional exactly on a permutation");
  eval->add_option("functional", fname)->required();
  eval->add_option("perm", perm_text, "Comma-separated entries, e.g. 1,4,2,5,3,6")->required();

  auto* values = app.add_subcommand("values", "List every value a functional attains over S_n");
  values->add_option("n", n)->required();
  values->add_option("functional", fname)->required();
  values->add_flag("--integers-only", integers_only, "Only integer values");

  auto* search = app.add_subcommand("search", "Search for a permutation attaining a target");
  search->add_option("functional", fname)->required();
  search->add_option("n", n)->required();
  search->add_option("target", target)->required();
  search->add_flag("--closest-first", closest, "Try entries that move the sum toward the target first");
  search->add_flag("--progress", progress, "Report progress on stderr");

  auto* verify = app.add_subcommand("verify", "Re-evaluate embedded permutations against their claims");
  verify->add_option("suite", suite, "paper, seeds or all")->default_val("all");
  verify->add_option("--table", table_path, "Verify claims from a file: 'name functional value perm' per line");

  auto* tree = app.add_subcommand("tree", "DOT increasing binary tree of the prod = 1 permutation");
  tree->add_option("n", n)->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  const auto start = Clock::now();
  OutputRecord rec;
  try {
    if (*construct) {
      rec = cmd_construct(fname, n, target);
    } else if (*eval) {
      rec = cmd_eval(fname, perm_text);
    } else if (*values) {
      rec = cmd_values(n, fname, integers_only, flags);
    } else if (*search) {
      rec = cmd_search(fname, n, target, closest, progress, flags, err);
    } else if (*verify) {
      rec = cmd_verify(suite, table_path);
    } else if (*tree) {
      rec = cmd_tree(n);
    }
  } catch (const ConstructionFailure& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const SeedVerificationError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    // UsageError, InvalidArgument, Inadmissible.
    rec = OutputRecord{};
    rec.command = app.get_subcommands().front()->get_name();
    rec.status = Status::kError;
    rec.message = e.what();
    err << "error: " << e.what() << "\n";
    if (flags.json) out << to_json(rec).dump() << "\n";
    return kExitInvalid;
  }
  rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  emit(rec, flags, out);
  return exit_code(rec);
}

}  // namespace permsum::cli
