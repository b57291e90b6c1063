// Command-line front end: exact distributions of cherries and pitchforks on
// ranked trees, enumeration, identity probabilities, Monte Carlo estimates,
// and the self-verification suite. Exit codes: 0 success, 1 computation or
// verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankedtree/big_rational.hpp"
#include "rankedtree/count_table.hpp"
#include "rankedtree/distributions.hpp"
#include "rankedtree/enumeration.hpp"
#include "rankedtree/simulate.hpp"
#include "rankedtree/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using rankedtree::BigRational;

struct OutputOptions {
  std::string format;  // empty = subcommand default
  std::string path;    // empty = stdout
};

void add_output_flags(CLI::App* command, OutputOptions* options) {
  command->add_option("--format", options->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  command->add_option("--out", options->path, "Write output to a file");
}

// Keeps the file stream alive while handing out a generic ostream.
class OutputTarget {
 public:
  std::ostream& open(const std::string& path) {
    if (path.empty()) {
      return std::cout;
    }
    file_.open(path);
    if (!file_) {
      throw std::runtime_error("cannot open output file: " + path);
    }
    return file_;
  }

 private:
  std::ofstream file_;
};

std::string pick_format(const OutputOptions& options, const char* fallback) {
  return options.format.empty() ? fallback : options.format;
}

// One row of a distribution dump: outcome cells plus an exact probability.
struct TableRow {
  std::vector<std::pair<std::string, std::int64_t>> outcomes;
  BigRational value;
};

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows,
                     const std::string& value_name) {
  if (rows.empty()) {
    return;
  }
  for (const auto& [name, unused] : rows.front().outcomes) {
    (void)unused;
    out << name << ",";
  }
  out << value_name << "_num," << value_name << "_den," << value_name
      << "_float\n";
  for (const TableRow& row : rows) {
    for (const auto& [name, outcome] : row.outcomes) {
      (void)name;
      out << outcome << ",";
    }
    out << numerator(row.value) << "," << denominator(row.value) << ","
        << rankedtree::to_decimal_string(row.value) << "\n";
  }
}

void write_table_json(std::ostream& out, Json header,
                      const std::vector<TableRow>& rows,
                      const std::string& value_name) {
  Json entries = Json::array();
  for (const TableRow& row : rows) {
    Json entry;
    for (const auto& [name, outcome] : row.outcomes) {
      entry[name] = outcome;
    }
    entry[value_name] = rankedtree::to_fraction_string(row.value);
    entry[value_name + "_float"] = rankedtree::to_double(row.value);
    entries.push_back(std::move(entry));
  }
  header["entries"] = std::move(entries);
  out << header.dump(2) << "\n";
}

void emit_table(std::ostream& out, const std::string& format, Json header,
                const std::vector<TableRow>& rows,
                const std::string& value_name) {
  if (format == "json") {
    write_table_json(out, std::move(header), rows, value_name);
  } else {
    write_table_csv(out, rows, value_name);
  }
}

void run_counts(std::ostream& out, const std::string& format, int m) {
  const rankedtree::JointCountTable table = rankedtree::joint_count_table(m);
  if (format == "csv") {
    out << "o,r,count,probability_num,probability_den,probability_float\n";
    for (const auto& [state, count] : table.nonzero_entries()) {
      const BigRational p{count * rankedtree::pow2(m - state.first),
                          rankedtree::factorial(m)};
      out << state.first << "," << state.second << "," << count << ","
          << numerator(p) << "," << denominator(p) << ","
          << rankedtree::to_decimal_string(p) << "\n";
    }
    return;
  }
  Json document;
  document["m"] = m;
  Json entries = Json::array();
  for (const auto& [state, count] : table.nonzero_entries()) {
    const BigRational p{count * rankedtree::pow2(m - state.first),
                        rankedtree::factorial(m)};
    Json entry;
    entry["o"] = state.first;
    entry["r"] = state.second;
    entry["count"] = count.str();
    entry["prob"] = rankedtree::to_fraction_string(p);
    entries.push_back(std::move(entry));
  }
  document["entries"] = std::move(entries);
  out << document.dump(2) << "\n";
}

void run_dist_cherries(std::ostream& out, const std::string& format, int n) {
  const auto distribution = rankedtree::cherry_distribution(n);
  std::vector<TableRow> rows;
  for (const auto& [o, p] : distribution.entries()) {
    rows.push_back({{{"cherries", o}}, p});
  }
  emit_table(out, format, Json{{"kind", "cherries"}, {"n", n}}, rows,
             "probability");
}

void run_dist_pitchforks(std::ostream& out, const std::string& format,
                         int m) {
  const auto distribution = rankedtree::pitchfork_distribution(m);
  std::vector<TableRow> rows;
  for (const auto& [r, p] : distribution.entries()) {
    rows.push_back({{{"pitchforks", r}}, p});
  }
  emit_table(out, format, Json{{"kind", "pitchforks"}, {"m", m}}, rows,
             "probability");
}

void run_dist_joint(std::ostream& out, const std::string& format, int m) {
  const auto distribution = rankedtree::joint_distribution(m);
  std::vector<TableRow> rows;
  for (const auto& [outcome, p] : distribution.entries()) {
    rows.push_back(
        {{{"cherries", outcome.first}, {"pitchforks", outcome.second}}, p});
  }
  emit_table(out, format, Json{{"kind", "joint"}, {"m", m}}, rows,
             "probability");
}

void run_conditional(std::ostream& out, const std::string& format, int m,
                     int cherries, bool cherries_given,
                     const std::string& summary) {
  const rankedtree::JointCountTable table = rankedtree::joint_count_table(m);
  if (summary == "mean") {
    std::vector<TableRow> rows;
    for (const auto& [o, value] :
         rankedtree::conditional_pitchfork_means(table)) {
      rows.push_back({{{"cherries", o}}, value});
    }
    emit_table(out, format, Json{{"kind", "conditional-mean"}, {"m", m}},
               rows, "mean");
    return;
  }
  std::vector<TableRow> rows;
  const auto append_group = [&](int o) {
    const auto conditional =
        rankedtree::conditional_pitchfork_distribution(table, o);
    for (const auto& [r, p] : conditional.entries()) {
      rows.push_back({{{"cherries", o}, {"pitchforks", r}}, p});
    }
  };
  if (cherries_given) {
    append_group(cherries);
  } else {
    for (int o = table.min_cherries(); o <= table.max_cherries(); ++o) {
      append_group(o);
    }
  }
  emit_table(out, format, Json{{"kind", "conditional"}, {"m", m}}, rows,
             "probability");
}

void run_identity(std::ostream& out, const std::string& format, int n) {
  const BigRational p = rankedtree::identity_probability(n);
  if (format == "json") {
    Json document;
    document["n"] = n;
    document["probability"] = rankedtree::to_fraction_string(p);
    document["probability_float"] = rankedtree::to_double(p);
    out << document.dump(2) << "\n";
  } else if (format == "csv") {
    out << "n,probability_num,probability_den,probability_float\n"
        << n << "," << numerator(p) << "," << denominator(p) << ","
        << rankedtree::to_decimal_string(p) << "\n";
  } else {
    out << rankedtree::to_fraction_string(p) << " "
        << rankedtree::to_decimal_string(p) << "\n";
  }
}

void run_moments(std::ostream& out, const std::string& format, int n) {
  const int m = n - 1;
  const rankedtree::JointCountTable table = rankedtree::joint_count_table(m);
  const auto cherries = rankedtree::cherry_distribution(table);
  const auto pitchforks = rankedtree::pitchfork_distribution(table);
  const BigRational expected_o = rankedtree::mean(cherries);
  const BigRational variance_o = rankedtree::variance(cherries);
  const BigRational expected_r = rankedtree::mean(pitchforks);
  if (format == "json") {
    Json document;
    document["n"] = n;
    document["m"] = m;
    document["E_o"] = rankedtree::to_fraction_string(expected_o);
    document["Var_o"] = rankedtree::to_fraction_string(variance_o);
    document["E_r"] = rankedtree::to_fraction_string(expected_r);
    document["E_o_float"] = rankedtree::to_double(expected_o);
    document["Var_o_float"] = rankedtree::to_double(variance_o);
    document["E_r_float"] = rankedtree::to_double(expected_r);
    out << document.dump(2) << "\n";
  } else if (format == "csv") {
    out << "statistic,value_num,value_den,value_float\n";
    const std::pair<const char*, const BigRational*> rows[]{
        {"E_o", &expected_o}, {"Var_o", &variance_o}, {"E_r", &expected_r}};
    for (const auto& [name, value] : rows) {
      out << name << "," << numerator(*value) << "," << denominator(*value)
          << "," << rankedtree::to_decimal_string(*value) << "\n";
    }
  } else {
    out << "E_o = " << rankedtree::to_fraction_string(expected_o) << "\n"
        << "Var_o = " << rankedtree::to_fraction_string(variance_o) << "\n"
        << "E_r = " << rankedtree::to_fraction_string(expected_r) << "\n";
  }
}

void run_euler(std::ostream& out, const std::string& format, int k) {
  const std::vector<rankedtree::BigInt> counts = rankedtree::euler_numbers(k);
  if (format == "json") {
    Json document;
    document["k"] = k;
    Json values = Json::array();
    for (const rankedtree::BigInt& count : counts) {
      values.push_back(count.str());
    }
    document["counts"] = std::move(values);
    out << document.dump(2) << "\n";
  } else if (format == "csv") {
    out << "n,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i) {
      out << i + 1 << "," << counts[i] << "\n";
    }
  } else {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      out << (i == 0 ? "" : ",") << counts[i];
    }
    out << "\n";
  }
}

void run_enumerate(std::ostream& out, int m) {
  // Count first via the cheap recurrence so the header precedes the stream.
  const rankedtree::BigInt count = rankedtree::euler_numbers(m + 1).back();
  out << "m=" << m << " count=" << count << "\n";
  rankedtree::for_each_increasing_tree(
      m, [&](const rankedtree::IncreasingTree& tree) {
        const auto parents = tree.parents();
        for (std::size_t i = 0; i < parents.size(); ++i) {
          out << (i == 0 ? "" : ",") << parents[i];
        }
        out << "\n";
      });
}

Json histogram_to_json(const std::map<int, std::int64_t>& histogram) {
  Json object = Json::object();
  for (const auto& [outcome, count] : histogram) {
    object[std::to_string(outcome)] = count;
  }
  return object;
}

void run_simulate(std::ostream& out, const std::string& format,
                  const rankedtree::SimConfig& config, bool identity) {
  const rankedtree::EmpiricalSummary summary =
      identity ? rankedtree::estimate_identity_probability(config)
               : rankedtree::estimate_statistics(config);
  if (format == "csv") {
    out << "histogram,outcome,count\n";
    for (const auto& [outcome, count] : summary.cherry_histogram) {
      out << "cherries," << outcome << "," << count << "\n";
    }
    for (const auto& [outcome, count] : summary.pitchfork_histogram) {
      out << "pitchforks," << outcome << "," << count << "\n";
    }
    return;
  }
  Json document;
  document["config"] = Json{{"n", config.n},
                            {"samples", config.samples},
                            {"seed", config.seed},
                            {"workers", config.workers}};
  document["cherry_histogram"] = histogram_to_json(summary.cherry_histogram);
  document["pitchfork_histogram"] =
      histogram_to_json(summary.pitchfork_histogram);
  document["cherry_mean"] = summary.cherry_mean;
  document["cherry_variance"] = summary.cherry_variance;
  document["cherry_se"] = summary.cherry_se;
  document["pitchfork_mean"] = summary.pitchfork_mean;
  document["pitchfork_variance"] = summary.pitchfork_variance;
  document["pitchfork_se"] = summary.pitchfork_se;
  document["identity_trials"] = summary.identity_trials;
  document["identity_matches"] = summary.identity_matches;
  document["identity_fraction"] = summary.identity_fraction;
  document["identity_se"] = summary.identity_se;
  out << document.dump(2) << "\n";
}

int run_verify(std::ostream& out, const std::string& format,
               const rankedtree::VerifyOptions& options) {
  const std::vector<rankedtree::CheckResult> results =
      rankedtree::run_verification(options);
  int passed = 0;
  if (format == "json") {
    Json document;
    Json checks = Json::array();
    for (const rankedtree::CheckResult& result : results) {
      checks.push_back(Json{{"name", result.name},
                            {"passed", result.passed},
                            {"detail", result.detail}});
      passed += result.passed ? 1 : 0;
    }
    document["checks"] = std::move(checks);
    document["all_passed"] = rankedtree::all_passed(results);
    out << document.dump(2) << "\n";
  } else {
    for (const rankedtree::CheckResult& result : results) {
      if (result.passed) {
        out << "ok " << result.name << "\n";
        ++passed;
      } else {
        out << "FAIL " << result.name << ": " << result.detail << "\n";
      }
    }
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return rankedtree::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact cherry/pitchfork distributions on ranked trees under the "
      "coalescent, with enumeration and Monte Carlo cross-checks"};
  app.require_subcommand(1);

  OutputOptions output;
  int exit_code = 0;
  OutputTarget target;

  int m = 1;
  int n = 2;
  int k = 1;
  int cherries = 0;
  std::string summary;

  CLI::App* counts = app.add_subcommand(
      "counts", "Exact N_m(o, r) counts of increasing trees by size");
  counts->add_option("--m", m, "Tree size")->required();
  add_output_flags(counts, &output);
  counts->callback([&] {
    run_counts(target.open(output.path), pick_format(output, "json"), m);
  });

  CLI::App* dist = app.add_subcommand(
      "dist", "Exact distributions of cherries and pitchforks");
  dist->require_subcommand(1);
  CLI::App* dist_cherries = dist->add_subcommand(
      "cherries", "Cherry distribution of ranked trees with n leaves");
  dist_cherries->add_option("--n", n, "Number of leaves")->required();
  add_output_flags(dist_cherries, &output);
  dist_cherries->callback([&] {
    run_dist_cherries(target.open(output.path), pick_format(output, "csv"),
                      n);
  });
  CLI::App* dist_pitchforks = dist->add_subcommand(
      "pitchforks", "Pitchfork distribution of increasing trees of size m");
  dist_pitchforks->add_option("--m", m, "Tree size")->required();
  add_output_flags(dist_pitchforks, &output);
  dist_pitchforks->callback([&] {
    run_dist_pitchforks(target.open(output.path), pick_format(output, "csv"),
                        m);
  });
  CLI::App* dist_joint =
      dist->add_subcommand("joint", "Joint (cherries, pitchforks) distribution");
  dist_joint->add_option("--m", m, "Tree size")->required();
  add_output_flags(dist_joint, &output);
  dist_joint->callback([&] {
    run_dist_joint(target.open(output.path), pick_format(output, "csv"), m);
  });

  CLI::App* conditional = app.add_subcommand(
      "conditional", "Conditional pitchfork distribution given cherries");
  conditional->add_option("--m", m, "Tree size")->required();
  CLI::Option* cherries_option =
      conditional->add_option("--cherries", cherries, "Condition on o");
  conditional->add_option("--summary", summary,
                          "Emit per-o summaries instead of tables")
      ->check(CLI::IsMember({"mean"}));
  add_output_flags(conditional, &output);
  conditional->callback([&] {
    run_conditional(target.open(output.path), pick_format(output, "csv"), m,
                    cherries, !cherries_option->empty(), summary);
  });

  CLI::App* identity = app.add_subcommand(
      "identity", "Probability that two independent ranked trees coincide");
  identity->add_option("--n", n, "Number of leaves")->required();
  add_output_flags(identity, &output);
  identity->callback([&] {
    run_identity(target.open(output.path), pick_format(output, "plain"), n);
  });

  CLI::App* moments = app.add_subcommand(
      "moments", "Exact cherry and pitchfork moments at n leaves");
  moments->add_option("--n", n, "Number of leaves")->required();
  add_output_flags(moments, &output);
  moments->callback([&] {
    run_moments(target.open(output.path), pick_format(output, "plain"), n);
  });

  CLI::App* euler =
      app.add_subcommand("euler", "Ranked tree counts |R_1|..|R_k|");
  euler->add_option("--k", k, "Number of terms")->required();
  add_output_flags(euler, &output);
  euler->callback([&] {
    run_euler(target.open(output.path), pick_format(output, "plain"), k);
  });

  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "Brute-force dump of all increasing trees of size m");
  enumerate_cmd->add_option("--m", m, "Tree size")->required();
  add_output_flags(enumerate_cmd, &output);
  enumerate_cmd->callback(
      [&] { run_enumerate(target.open(output.path), m); });

  rankedtree::SimConfig sim_config;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo coalescent sampling");
  simulate->require_subcommand(1);
  const auto add_sim_flags = [&](CLI::App* sub) {
    sub->add_option("--n", sim_config.n, "Number of leaves")->required();
    sub->add_option("--samples", sim_config.samples, "Number of replicates")
        ->required();
    sub->add_option("--seed", sim_config.seed, "RNG seed")->required();
    sub->add_option("--workers", sim_config.workers, "Parallel substreams");
    add_output_flags(sub, &output);
  };
  CLI::App* sim_stats = simulate->add_subcommand(
      "stats", "Empirical cherry/pitchfork statistics");
  add_sim_flags(sim_stats);
  sim_stats->callback([&] {
    run_simulate(target.open(output.path), pick_format(output, "json"),
                 sim_config, /*identity=*/false);
  });
  CLI::App* sim_identity = simulate->add_subcommand(
      "identity", "Empirical pairwise identity fraction");
  add_sim_flags(sim_identity);
  sim_identity->callback([&] {
    run_simulate(target.open(output.path), pick_format(output, "json"),
                 sim_config, /*identity=*/true);
  });

  rankedtree::VerifyOptions verify_options;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the full invariant suite");
  verify->add_option("--max-m", verify_options.max_enumeration_size,
                     "Enumeration bound for oracle equivalence");
  verify->add_option("--max-closed", verify_options.max_closed_form_size,
                     "Size bound for closed-form identities");
  add_output_flags(verify, &output);
  verify->callback([&] {
    exit_code = run_verify(target.open(output.path),
                           pick_format(output, "plain"), verify_options);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
