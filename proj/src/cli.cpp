#include "sumsetlab/cli.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "sumsetlab/abelian_verify.hpp"
#include "sumsetlab/constructions.hpp"
#include "sumsetlab/error.hpp"
#include "sumsetlab/report_json.hpp"
#include "sumsetlab/set_io.hpp"
#include "sumsetlab/sl2.hpp"

namespace sumsetlab::cli {
namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string format = "json";
  unsigned parallel = 1;
  std::uint64_t order_cap = 0;

  std::uint64_t cap() const { return order_cap != 0 ? order_cap : default_order_cap(); }
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  Json config;
  Json result;
  bool pass = true;
  Table csv;
  // Set when the report is still printed but the run counts as a usage error.
  std::optional<std::string> usage_error;
};

struct Trial {
  Json detail;
  bool pass = true;
  std::vector<std::string> row;
};

std::string cell(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

// Runs fn(0..count-1), optionally on several threads; results stay in
// trial order so the report does not depend on scheduling.
std::vector<Trial> run_trials(std::uint64_t count, unsigned parallel,
                              const std::function<Trial(std::uint64_t)>& fn) {
  std::vector<Trial> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::uint64_t> next{0};
  const auto worker = [&] {
    for (std::uint64_t t; (t = next++) < count;) {
      try {
        results[t] = fn(t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(parallel, 1U), std::max<std::uint64_t>(count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

// Folds trial results into `outcome`: detail list, pass count, CSV rows.
void collect(Outcome& outcome, std::vector<Trial> trials, std::vector<std::string> header) {
  Json details = Json::array();
  std::uint64_t passed = 0;
  outcome.csv.header = std::move(header);
  for (auto& t : trials) {
    if (t.pass) ++passed;
    outcome.pass = outcome.pass && t.pass;
    outcome.csv.rows.push_back(std::move(t.row));
    details.push_back(std::move(t.detail));
  }
  outcome.result["trials_passed"] = passed;
  outcome.result["trials"] = std::move(details);
}

void scalar_table(Outcome& outcome) {
  std::vector<std::string> row;
  for (const auto& [key, value] : outcome.result.items()) {
    if (value.is_structured()) continue;
    outcome.csv.header.push_back(key);
    row.push_back(cell(value));
  }
  outcome.csv.rows.push_back(std::move(row));
}

// ---- Abelian commands -------------------------------------------------------

struct SumsetArgs {
  std::string group, a_path, b_path;
};

Outcome cmd_sumset(const SumsetArgs& args, const Common& common) {
  const GroupSpec spec = parse_group_spec(args.group, common.cap());
  const GroupSet a = load_group_set(args.a_path, spec);
  const GroupSet b = load_group_set(args.b_path, spec);
  const GroupSet sum = sumset(a, b);
  Outcome o;
  o.config["group"] = spec.to_string();
  o.config["a"] = args.a_path;
  o.config["b"] = args.b_path;
  o.result["order"] = spec.order();
  o.result["a_size"] = a.size();
  o.result["b_size"] = b.size();
  o.result["sum_size"] = sum.size();
  o.result["covers"] = is_cover(sum);
  o.result["sum"] = group_set_to_json(sum);
  o.result["sum_bitmask_hex"] = to_bitmask_hex(sum.bits());
  scalar_table(o);
  return o;
}

struct Example1Args {
  std::uint64_t p = 3;
  unsigned k = 2;
  bool json = false;
};

Outcome cmd_example1(const Example1Args& args, const Common& common) {
  const Example1Report report = check_example1(args.p, args.k, common.cap());
  Outcome o;
  o.config["p"] = args.p;
  o.config["k"] = args.k;
  o.result = to_json(report);
  o.pass = report.pass;
  o.csv.header = {"j", "size", "size_expected", "matches_structure", "covers"};
  for (const auto& step : report.chain) {
    o.csv.rows.push_back({std::to_string(step.j), std::to_string(step.size),
                          std::to_string(step.size_expected),
                          step.matches_structure ? "true" : "false",
                          step.covers ? "true" : "false"});
  }
  return o;
}

struct Theorem1Args {
  std::string group;
  std::uint64_t m = 2;
  std::optional<std::uint64_t> k;
  std::uint64_t trials = 10;
  double density = 0.5;
};

Outcome cmd_theorem1(const Theorem1Args& args, const Common& common) {
  const GroupSpec spec = parse_group_spec(args.group, common.cap());
  if (args.m < 1) throw DomainError("--m must be >= 1");
  std::optional<BoundValue> bound;
  if (args.m >= 2 && (spec.order() >= 4 || !args.k)) bound = theorem1_bound(args.m, spec.order());
  if (!args.k && !bound) throw DomainError("--K is required when m = 1");
  const std::uint64_t k = args.k ? *args.k : bound->k;
  if (k < 1) throw DomainError("--K must be >= 1");

  Outcome o;
  o.config["group"] = spec.to_string();
  o.config["m"] = args.m;
  o.config["K"] = args.k ? Json(*args.k) : Json(nullptr);
  o.config["trials"] = args.trials;
  o.config["seed"] = common.seed;
  o.config["density"] = args.density;
  o.result["order"] = spec.order();
  o.result["bound"] = bound ? to_json(*bound) : Json(nullptr);
  o.result["K"] = k;
  o.result["sets_per_trial"] = 2 * k;

  auto trials = run_trials(args.trials, common.parallel, [&](std::uint64_t t) {
    const std::uint64_t seed = common.seed + t;
    Rng rng(seed);
    std::vector<GroupSet> family;
    for (std::uint64_t i = 0; i < 2 * k; ++i) {
      family.push_back(random_cover_set(spec, args.m, args.density, rng));
    }
    const Theorem1Report report = verify_theorem1(family, args.m);
    Trial trial;
    trial.detail["trial"] = t;
    trial.detail["seed"] = seed;
    trial.detail["report"] = to_json(report);
    trial.pass = report.pass;
    trial.row = {std::to_string(t), std::to_string(seed), report.pass ? "true" : "false",
                 std::to_string(report.halves[0].size), std::to_string(report.halves[1].size),
                 std::to_string(report.total_size)};
    return trial;
  });
  collect(o, std::move(trials), {"trial", "seed", "pass", "half1_size", "half2_size", "total_size"});
  return o;
}

struct PlunneckeArgs {
  std::string group;
  std::uint64_t trials = 100;
};

Outcome cmd_plunnecke(const PlunneckeArgs& args, const Common& common) {
  const GroupSpec spec = parse_group_spec(args.group, common.cap());
  Outcome o;
  o.config["group"] = spec.to_string();
  o.config["trials"] = args.trials;
  o.config["seed"] = common.seed;
  o.result["order"] = spec.order();
  const std::uint64_t n = spec.order();
  auto trials = run_trials(args.trials, common.parallel, [&](std::uint64_t t) {
    const std::uint64_t seed = common.seed + t;
    Rng rng(seed);
    const std::uint64_t k = rng.between(2, 4);
    // Nested draw skews sizes toward small sets, where the bound is tight.
    const GroupSet a = GroupSet::from_elements(spec, rng.sample_subset(n, rng.between(1, rng.between(1, n))));
    const GroupSet b = GroupSet::from_elements(spec, rng.sample_subset(n, rng.between(1, rng.between(1, n))));
    const PlunneckeReport report = check_plunnecke(a, b, k);
    Trial trial;
    trial.detail["trial"] = t;
    trial.detail["seed"] = seed;
    trial.detail["report"] = to_json(report);
    trial.pass = report.pass;
    trial.row = {std::to_string(t), std::to_string(seed), std::to_string(k),
                 std::to_string(report.a_size), std::to_string(report.b_size),
                 cell(Json(report.alpha)), std::to_string(report.lhs), cell(Json(report.rhs)),
                 report.pass ? "true" : "false"};
    return trial;
  });
  collect(o, std::move(trials), {"trial", "seed", "k", "a_size", "b_size", "alpha", "lhs", "rhs", "pass"});
  return o;
}

struct KpnArgs {
  std::uint64_t p = 2;
  std::uint64_t n = 1;
  bool exact = false;
  std::optional<std::uint64_t> k_max;
  std::uint64_t budget = kDefaultKpnBudget;
};

Outcome cmd_kpn(const KpnArgs& args, const Common& common) {
  const std::uint64_t k_max = args.k_max ? *args.k_max : args.p + 1;
  const KpnReport report = kpn_exact_small(args.p, args.n, k_max, args.budget, common.seed, common.cap());
  Outcome o;
  o.config["p"] = args.p;
  o.config["n"] = args.n;
  o.config["exact"] = args.exact;
  o.config["k_max"] = k_max;
  o.config["budget"] = args.budget;
  o.config["seed"] = common.seed;
  o.result = to_json(report);
  o.result["upper_bounds"] = args.n >= 1 ? to_json(kpn_upper(args.p, args.n)) : Json(nullptr);
  if (args.exact && !report.exact) {
    o.usage_error = "exhaustive search does not fit the budget of " + std::to_string(args.budget) +
                    " tuples; the result is empirical";
  }
  scalar_table(o);
  return o;
}

struct BasisArgs {
  std::uint64_t p = 2;
  std::uint64_t n = 1;
  bool random = false;
};

Outcome cmd_basis(const BasisArgs& args, const Common& common) {
  const ElementMultiset basis = args.random ? random_basis(args.p, args.n, common.seed, common.cap())
                                            : standard_basis(args.p, args.n, common.cap());
  const GroupSpec& spec = basis.spec();
  const std::size_t rank = rank_mod_p(basis_rows(basis), args.p);
  const GroupSet sums = subset_sums(basis);
  const bool power_identity = is_cover(m_fold(sums, args.p - 1));
  Outcome o;
  o.config["p"] = args.p;
  o.config["n"] = args.n;
  o.config["random"] = args.random;
  o.config["seed"] = common.seed;
  o.result["group"] = spec.to_string();
  o.result["vectors"] = basis_rows(basis);
  o.result["rank"] = rank;
  o.result["subset_sums_size"] = sums.size();
  o.result["additive_basis"] = is_cover(sums);
  o.result["power_identity"] = power_identity;
  o.pass = rank == args.n && power_identity;
  scalar_table(o);
  return o;
}

// ---- SL_2 commands -----------------------------------------------------------

struct Sl2Args {
  std::uint64_t p = 5;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> size;
  std::optional<std::uint64_t> k;
  double density = kDefaultSl2Density;
};

Outcome cmd_sl2_info(const Sl2Args& args, const Common& common) {
  const SL2Ptr group = SL2Group::create(args.p, common.cap());
  Outcome o;
  o.config["p"] = args.p;
  o.result["order"] = group->order();
  o.result["order_formula"] = args.p * args.p * args.p - args.p;
  o.result["multiplication_table"] = group->has_table();
  if (args.p >= 3) {
    const QuasirandomInfo info = quasirandom_info(args.p);
    o.result["quasirandom"] = to_json(info);
    o.result["theorem4_bound"] = info.delta > 0 ? to_json(theorem4_bound(info.delta)) : Json(nullptr);
  } else {
    o.result["quasirandom"] = nullptr;
    o.result["theorem4_bound"] = nullptr;
  }
  scalar_table(o);
  return o;
}

SL2Set random_sl2_set(const SL2Ptr& group, Rng& rng, std::uint64_t size) {
  return SL2Set::from_elements(group, rng.sample_subset(group->order(), size));
}

Outcome cmd_sl2_ruzsa(const Sl2Args& args, const Common& common) {
  const SL2Ptr group = SL2Group::create(args.p, common.cap());
  const std::uint64_t n = group->order();
  Outcome o;
  o.config["p"] = args.p;
  o.config["trials"] = args.trials;
  o.config["seed"] = common.seed;
  o.result["order"] = n;
  auto trials = run_trials(args.trials, common.parallel, [&](std::uint64_t t) {
    const std::uint64_t seed = common.seed + t;
    Rng rng(seed);
    const SL2Set a = random_sl2_set(group, rng, rng.between(1, rng.between(1, n)));
    const SL2Set b = random_sl2_set(group, rng, rng.between(1, rng.between(1, n)));
    const SL2Set c = random_sl2_set(group, rng, rng.between(1, rng.between(1, n)));
    const RuzsaReport report = check_ruzsa(a, b, c);
    Trial trial;
    trial.detail["trial"] = t;
    trial.detail["seed"] = seed;
    trial.detail["report"] = to_json(report);
    trial.pass = report.pass;
    trial.row = {std::to_string(t), std::to_string(seed), std::to_string(report.ac_size),
                 cell(Json(report.bound)), std::to_string(report.min_representations),
                 report.pass ? "true" : "false"};
    return trial;
  });
  collect(o, std::move(trials), {"trial", "seed", "ac_inv_size", "bound", "min_representations", "pass"});
  return o;
}

Outcome cmd_sl2_gowers(const Sl2Args& args, const Common& common) {
  const SL2Ptr group = SL2Group::create(args.p, common.cap());
  const std::uint64_t n = group->order();
  const std::uint64_t size = *args.size;
  if (size < 1 || size > n) {
    throw DomainError("--size must lie in [1, " + std::to_string(n) + "]");
  }
  Outcome o;
  o.config["p"] = args.p;
  o.config["size"] = size;
  o.config["trials"] = args.trials;
  o.config["seed"] = common.seed;
  o.result["order"] = n;
  o.result["quasirandom"] = to_json(quasirandom_info(args.p));
  auto trials = run_trials(args.trials, common.parallel, [&](std::uint64_t t) {
    const std::uint64_t seed = common.seed + t;
    Rng rng(seed);
    const SL2Set a = random_sl2_set(group, rng, size);
    const SL2Set b = random_sl2_set(group, rng, size);
    const SL2Set c = random_sl2_set(group, rng, size);
    const GowersReport report = check_gowers(a, b, c);
    Trial trial;
    trial.detail["trial"] = t;
    trial.detail["seed"] = seed;
    trial.detail["report"] = to_json(report);
    trial.pass = report.pass;
    trial.row = {std::to_string(t), std::to_string(seed), report.premise_met ? "true" : "false",
                 std::to_string(report.product_size), report.covers ? "true" : "false",
                 report.pass ? "true" : "false"};
    return trial;
  });
  collect(o, std::move(trials), {"trial", "seed", "premise_met", "product_size", "covers", "pass"});
  return o;
}

Outcome cmd_sl2_theorem4(const Sl2Args& args, const Common& common) {
  const SL2Ptr group = SL2Group::create(args.p, common.cap());
  const QuasirandomInfo info = quasirandom_info(args.p);
  if (!(info.delta > 0)) throw DomainError("p = " + std::to_string(args.p) + " gives delta = 0");
  const Theorem4Bound bound = theorem4_bound(info.delta);
  const std::uint64_t k = args.k ? *args.k : bound.k;
  if (k < 1) throw DomainError("--K must be >= 1");
  Outcome o;
  o.config["p"] = args.p;
  o.config["K"] = args.k ? Json(*args.k) : Json(nullptr);
  o.config["trials"] = args.trials;
  o.config["seed"] = common.seed;
  o.config["density"] = args.density;
  o.result["order"] = group->order();
  o.result["quasirandom"] = to_json(info);
  o.result["bound"] = to_json(bound);
  o.result["K"] = k;
  o.result["sets_per_trial"] = 3 * k;
  auto trials = run_trials(args.trials, common.parallel, [&](std::uint64_t t) {
    const std::uint64_t seed = common.seed + t;
    Rng rng(seed);
    std::vector<SL2Set> family;
    for (std::uint64_t i = 0; i < 3 * k; ++i) {
      family.push_back(random_difference_cover(group, args.density, rng));
    }
    const Theorem4Report report = verify_theorem4(family);
    Trial trial;
    trial.detail["trial"] = t;
    trial.detail["seed"] = seed;
    trial.detail["report"] = to_json(report);
    trial.pass = report.pass;
    trial.row = {std::to_string(t), std::to_string(seed), report.pass ? "true" : "false",
                 std::to_string(report.blocks[0].size), std::to_string(report.blocks[1].size),
                 std::to_string(report.blocks[2].size), std::to_string(report.total_size)};
    return trial;
  });
  collect(o, std::move(trials),
          {"trial", "seed", "pass", "block1_size", "block2_size", "block3_size", "total_size"});
  return o;
}

Outcome cmd_sl2_remark12(const Sl2Args& args, const Common& common) {
  const Remark12Report report = remark12(args.p, args.trials, common.seed, args.density, common.cap());
  Outcome o;
  o.config["p"] = args.p;
  o.config["trials"] = args.trials;
  o.config["seed"] = common.seed;
  o.config["density"] = args.density;
  o.result = to_json(report);
  o.pass = report.pass;
  if (!report.applies) {
    o.usage_error = "the twelve-set statement needs p >= 7; at p = " + std::to_string(args.p) +
                    " the bound gives K = " + std::to_string(report.bound.k) + " (" +
                    std::to_string(3 * report.bound.k) + " sets)";
  }
  o.csv.header = {"trial", "pass", "total_size"};
  for (std::size_t t = 0; t < report.runs.size(); ++t) {
    o.csv.rows.push_back({std::to_string(t), report.runs[t].pass ? "true" : "false",
                          std::to_string(report.runs[t].total_size)});
  }
  return o;
}

// ---- output -----------------------------------------------------------------

void write_report(std::ostream& out, const std::string& command, const Outcome& o,
                  const std::string& format, double wall_ms) {
  if (format == "csv") {
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(o.csv.header);
    for (const auto& row : o.csv.rows) line(row);
    return;
  }
  if (format == "text") {
    out << "command: " << command << '\n';
    for (const auto& [key, value] : o.result.items()) {
      if (!value.is_structured()) out << key << ": " << cell(value) << '\n';
    }
    out << "pass: " << (o.pass ? "true" : "false") << '\n';
    return;
  }
  Json doc;
  doc["command"] = command;
  doc["config"] = o.config;
  doc["result"] = o.result;
  doc["pass"] = o.pass;
  doc["wall_time_ms"] = wall_ms;
  out << doc.dump(2) << '\n';
}

void add_common(CLI::App* app, Common& common) {
  app->add_option("--seed", common.seed, "Base seed; trial t uses seed + t");
  app->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--parallel", common.parallel, "Worker threads for independent trials")
      ->check(CLI::PositiveNumber);
  app->add_option("--order-cap", common.order_cap,
                  "Maximum group order (overrides SUMSETLAB_ORDER_CAP)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumset, product set, and covering verification toolkit", "sumsetlab"};
  app.require_subcommand(1);
  Common common;
  std::function<Outcome()> action;
  std::string command;

  SumsetArgs sumset_args;
  auto* sumset_cmd = app.add_subcommand("sumset", "Compute A + B for two set files");
  sumset_cmd->add_option("--group", sumset_args.group, "Group spec, e.g. Z3^4")->required();
  sumset_cmd->add_option("--a", sumset_args.a_path, "JSON set file for A")->required();
  sumset_cmd->add_option("--b", sumset_args.b_path, "JSON set file for B")->required();
  add_common(sumset_cmd, common);
  sumset_cmd->callback([&] {
    command = "sumset";
    action = [&] { return cmd_sumset(sumset_args, common); };
  });

  Example1Args ex_args;
  auto* ex_cmd = app.add_subcommand("example1", "Build the log-log lower-bound family over Z_p^(2^k)");
  ex_cmd->add_option("--p", ex_args.p, "Modulus p")->required();
  ex_cmd->add_option("--k", ex_args.k, "Levels k (n = 2^k)")->required();
  ex_cmd->add_flag("--json", ex_args.json, "JSON output (default)");
  add_common(ex_cmd, common);
  ex_cmd->callback([&] {
    command = "example1";
    action = [&] { return cmd_example1(ex_args, common); };
  });

  Theorem1Args t1_args;
  auto* t1_cmd = app.add_subcommand("theorem1", "Random trials of the Abelian covering theorem");
  t1_cmd->add_option("--group", t1_args.group, "Group spec")->required();
  t1_cmd->add_option("--m", t1_args.m, "Fold count m in mA_i = G")->required();
  t1_cmd->add_option("--K", t1_args.k, "Half-family size K (default: the theorem's bound)");
  t1_cmd->add_option("--trials", t1_args.trials, "Number of trials");
  t1_cmd->add_option("--density", t1_args.density, "Density of the random sets");
  add_common(t1_cmd, common);
  t1_cmd->callback([&] {
    command = "theorem1";
    action = [&] { return cmd_theorem1(t1_args, common); };
  });

  PlunneckeArgs pl_args;
  auto* pl_cmd = app.add_subcommand("plunnecke", "Random instances of |kA| <= alpha^k |B|");
  pl_cmd->add_option("--group", pl_args.group, "Group spec")->required();
  pl_cmd->add_option("--trials", pl_args.trials, "Number of trials");
  add_common(pl_cmd, common);
  pl_cmd->callback([&] {
    command = "plunnecke";
    action = [&] { return cmd_plunnecke(pl_args, common); };
  });

  KpnArgs kpn_args;
  auto* kpn_cmd = app.add_subcommand("kpn", "Search for the least k making unions of k bases additive");
  kpn_cmd->add_option("--p", kpn_args.p, "Prime p")->required();
  kpn_cmd->add_option("--n", kpn_args.n, "Dimension n")->required();
  kpn_cmd->add_flag("--exact", kpn_args.exact, "Fail unless the search is exhaustive");
  kpn_cmd->add_option("--k-max", kpn_args.k_max, "Largest k to try (default p + 1)");
  kpn_cmd->add_option("--budget", kpn_args.budget, "Tuples per k before switching to sampling");
  add_common(kpn_cmd, common);
  kpn_cmd->callback([&] {
    command = "kpn";
    action = [&] { return cmd_kpn(kpn_args, common); };
  });

  BasisArgs basis_args;
  auto* basis_cmd = app.add_subcommand("basis", "Standard or random basis of Z_p^n and its subset sums");
  basis_cmd->add_option("--p", basis_args.p, "Prime p")->required();
  basis_cmd->add_option("--n", basis_args.n, "Dimension n")->required();
  basis_cmd->add_flag("--random", basis_args.random, "Random invertible basis");
  add_common(basis_cmd, common);
  basis_cmd->callback([&] {
    command = "basis";
    action = [&] { return cmd_basis(basis_args, common); };
  });

  auto* sl2_cmd = app.add_subcommand("sl2", "Checks in SL_2(Z_p)");
  sl2_cmd->require_subcommand(1);
  Sl2Args sl2_args;
  const auto sl2_sub = [&](const std::string& name, const std::string& help,
                           std::uint64_t default_trials,
                           Outcome (*fn)(const Sl2Args&, const Common&)) {
    auto* sub = sl2_cmd->add_subcommand(name, help);
    sub->add_option("--p", sl2_args.p, "Prime p")->required();
    add_common(sub, common);
    sub->callback([&, name, default_trials, fn, sub] {
      command = "sl2 " + name;
      const CLI::Option* trials_opt = sub->get_option_no_throw("--trials");
      if (trials_opt == nullptr || trials_opt->count() == 0) sl2_args.trials = default_trials;
      action = [&, fn] { return fn(sl2_args, common); };
    });
    return sub;
  };
  sl2_sub("info", "Order, quasirandomness degree and bounds", 0, cmd_sl2_info);
  auto* ruzsa_cmd = sl2_sub("ruzsa", "Random triples against the Ruzsa triangle inequality", 200, cmd_sl2_ruzsa);
  ruzsa_cmd->add_option("--trials", sl2_args.trials, "Number of trials");
  auto* gowers_cmd = sl2_sub("gowers", "Random triples of a fixed size against ABC = G", 100, cmd_sl2_gowers);
  gowers_cmd->add_option("--size", sl2_args.size, "Size of each random set")->required();
  gowers_cmd->add_option("--trials", sl2_args.trials, "Number of trials");
  auto* t4_cmd = sl2_sub("theorem4", "Random trials of the quasirandom product covering theorem", 10, cmd_sl2_theorem4);
  t4_cmd->add_option("--trials", sl2_args.trials, "Number of trials");
  t4_cmd->add_option("--K", sl2_args.k, "Block size K (default: the theorem's bound)");
  t4_cmd->add_option("--density", sl2_args.density, "Density of the random sets");
  auto* r12_cmd = sl2_sub("remark12", "Twelve-set covering for p >= 7", 10, cmd_sl2_remark12);
  r12_cmd->add_option("--trials", sl2_args.trials, "Number of trials");
  r12_cmd->add_option("--density", sl2_args.density, "Density of the random sets");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = action();
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    write_report(out, command, outcome, common.format, wall_ms);
    if (outcome.usage_error) {
      err << "error: " << *outcome.usage_error << '\n';
      return kExitUsage;
    }
    return outcome.pass ? kExitPass : kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sumsetlab::cli
