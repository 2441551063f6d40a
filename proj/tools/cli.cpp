#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>

#include "hypgrp/boundary.hpp"
#include "hypgrp/cayley.hpp"
#include "hypgrp/cloud_io.hpp"
#include "hypgrp/errors.hpp"
#include "hypgrp/isoperimetry.hpp"
#include "hypgrp/quasimetric.hpp"
#include "hypgrp/version.hpp"
#include "report.hpp"

namespace hypgrp::cli {

  namespace {

    using nlohmann::json;

    struct Options {
      // global
      std::string output;
      int         threads = 0;
      std::uint64_t seed  = 0;
      bool        serial  = false;

      // inputs
      std::string pres;
      std::string cloud;

      // words and generators
      std::string word;
      std::string from;
      std::string to;
      std::string delta;
      std::string new_gens;

      // cayley
      std::size_t radius           = 2;
      std::size_t limit            = kDefaultBallLimit;
      std::size_t cap              = 64;
      std::size_t invariance_checks = 0;

      // isoperimetry
      std::size_t   max_area        = AreaBudget{}.max_area;
      std::size_t   max_factors     = AreaBudget{}.max_factors;
      std::optional<std::uint64_t> nodes;
      unsigned      weight_exponent = 2;
      std::size_t   max_length      = 8;
      bool          cyclic          = false;

      // clouds
      std::optional<double> snowflake;
      std::optional<double> epsilon;
      double                tolerance = 1e-12;
      std::vector<double>   radii;
      std::size_t           octaves   = 0;
      std::size_t           iterate   = 0;
      std::string           write_cloud;

      // boundary
      std::size_t rank          = 2;
      std::size_t depth         = 4;
      std::size_t levels        = 10;
      std::size_t point_limit   = kDefaultBoundaryLimit;
      bool        doubling      = false;
      bool        dimension     = false;
    };

    struct Outcome {
      json                     config;
      json                     results;
      json                     flags = json::object();
      std::vector<std::string> warnings;
    };

    Execution execution(Options const& o) {
      return o.serial ? Execution::Serial : Execution::Parallel;
    }

    std::uint64_t default_nodes() {
      char const* env = std::getenv(kNodeBudgetVariable);
      if (env == nullptr || *env == '\0') {
        return AreaBudget{}.max_nodes;
      }
      char*                    end   = nullptr;
      unsigned long long const value = std::strtoull(env, &end, 10);
      if (*end != '\0' || value == 0) {
        throw InputError(std::string(kNodeBudgetVariable)
                         + " must be a positive integer");
      }
      return value;
    }

    AreaBudget budget(Options const& o) {
      AreaBudget b;
      b.max_area        = o.max_area;
      b.max_factors     = o.max_factors;
      b.max_nodes       = o.nodes ? *o.nodes : default_nodes();
      b.weight_exponent = o.weight_exponent;
      return b;
    }

    json budget_json(AreaBudget const& b) {
      return {{"max_area", b.max_area},
              {"max_factors", b.max_factors},
              {"max_nodes", b.max_nodes},
              {"weight_exponent", b.weight_exponent}};
    }

    std::vector<Word> word_list(std::string const& text, Alphabet const& a) {
      std::vector<Word> words;
      std::size_t       start = 0;
      while (start <= text.size()) {
        auto const  comma = text.find(',', start);
        auto const  piece = text.substr(
            start, comma == std::string::npos ? std::string::npos
                                               : comma - start);
        if (!piece.empty()) {
          words.push_back(parse_word(piece, a));
        }
        if (comma == std::string::npos) {
          break;
        }
        start = comma + 1;
      }
      if (words.empty()) {
        throw InputError("empty generator list");
      }
      return words;
    }

    TrivialityOracle load_oracle(Options const& o, json& config) {
      config["pres"] = o.pres;
      auto oracle    = make_oracle(load_presentation(o.pres));
      config["oracle"] = strategy_name(oracle.strategy());
      return oracle;
    }

    PointCloud load(Options const& o, json& config) {
      config["cloud"] = o.cloud;
      PointCloud c    = load_cloud(o.cloud);
      if (o.snowflake) {
        config["snowflake"] = *o.snowflake;
        c                   = snowflake(c, *o.snowflake);
      }
      return c;
    }

    std::vector<double> grid(Options const&      o,
                             PointCloud const&   c,
                             Outcome&            out) {
      RadiusGrid g;
      if (!o.radii.empty()) {
        out.config["radii"] = o.radii;
        g                   = clip_radii(c, o.radii);
      } else {
        out.config["octaves"] = o.octaves;
        g                     = dyadic_radii(c, o.octaves);
      }
      out.warnings.insert(out.warnings.end(), g.warnings.begin(),
                          g.warnings.end());
      return g.radii;
    }

    void write_json_file(std::string const& path, json const& j) {
      std::ofstream file(path);
      if (!file) {
        throw InputError("cannot write '" + path + "'");
      }
      file << j.dump(2) << '\n';
    }

    Outcome cmd_ball(Options const& o) {
      Outcome out;
      auto    oracle      = load_oracle(o, out.config);
      out.config["radius"] = o.radius;
      out.config["limit"]  = o.limit;
      CayleyBall const b   = build_ball(oracle, o.radius, o.limit);
      out.results["ball"]  = report::ball(b, oracle);

      if (!o.new_gens.empty()) {
        out.config["new_gens"] = o.new_gens;
        out.config["cap"]      = o.cap;
        auto const gens        = word_list(o.new_gens, oracle.alphabet());
        out.results["comparability"] = report::comparability(
            compare_generating_sets(oracle, gens, o.radius, o.cap), oracle);
      }
      if (o.invariance_checks > 0) {
        out.config["invariance_checks"] = o.invariance_checks;
        out.config["cap"]               = o.cap;
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
        std::size_t                                violations = 0;
        json                                       checks     = json::array();
        for (std::size_t i = 0; i < o.invariance_checks; ++i) {
          Word const& d = b.elements[pick(rng)];
          std::vector<std::pair<Word, Word>> const pair{
              {b.elements[pick(rng)], b.elements[pick(rng)]}};
          auto const r = check_left_invariance(oracle, d, pair, o.cap);
          violations += r.violations;
          checks.push_back(report::invariance(r, oracle)["entries"][0]);
          checks.back()["delta"] = oracle.format(d);
        }
        out.results["left_invariance"] = {{"checks", std::move(checks)},
                                          {"violations", violations}};
        out.flags["left_invariant"]    = violations == 0;
      }
      return out;
    }

    Outcome cmd_dist(Options const& o) {
      Outcome out;
      auto    oracle    = load_oracle(o, out.config);
      out.config["from"] = o.from;
      out.config["to"]   = o.to;
      out.config["cap"]  = o.cap;
      Word const from    = parse_word(o.from, oracle.alphabet());
      Word const to      = parse_word(o.to, oracle.alphabet());
      out.results["distance"] = distance(oracle, from, to, o.cap);
      if (!o.delta.empty()) {
        out.config["delta"] = o.delta;
        std::vector<std::pair<Word, Word>> const pair{{from, to}};
        auto const r = check_left_invariance(
            oracle, parse_word(o.delta, oracle.alphabet()), pair, o.cap);
        out.results["left_invariance"] = report::invariance(r, oracle);
        out.flags["left_invariant"]    = r.ok();
      }
      return out;
    }

    Outcome cmd_area(Options const& o) {
      Outcome out;
      auto    oracle     = load_oracle(o, out.config);
      auto const b       = budget(o);
      out.config["word"]   = o.word;
      out.config["budget"] = budget_json(b);
      auto const cert = area(oracle, parse_word(o.word, oracle.alphabet()), b);
      out.results     = report::certificate(cert, oracle);
      out.flags["exact"] = cert.exact;
      return out;
    }

    Outcome cmd_scan(Options const& o) {
      Outcome out;
      auto    oracle = load_oracle(o, out.config);
      ScanOptions options;
      options.max_length      = o.max_length;
      options.budget          = budget(o);
      options.cyclic_symmetry = o.cyclic;
      options.execution       = execution(o);
      out.config["maxlen"]          = o.max_length;
      out.config["cyclic_symmetry"] = o.cyclic;
      out.config["budget"]          = budget_json(options.budget);
      auto const r       = hyperbolicity_scan(oracle, options);
      out.results        = report::scan(r, oracle);
      out.flags["all_exact"] = r.all_exact;
      out.flags["vacuous"]   = r.vacuous();
      out.flags["undecided"] = r.undecided.size();
      if (!r.undecided.empty()) {
        out.warnings.push_back(std::to_string(r.undecided.size())
                               + " words left undecided by the oracle");
      }
      return out;
    }

    Outcome cmd_qaudit(Options const& o) {
      Outcome          out;
      PointCloud const c = load(o, out.config);
      out.config["tolerance"] = o.tolerance;
      auto const q            = quasimetric_constant(c, execution(o));
      out.results = {{"points", c.size()},
                     {"diameter", c.diameter()},
                     {"min_gap", c.min_gap()},
                     {"quasimetric", report::quasimetric(q)},
                     {"is_metric", is_metric(c, o.tolerance)},
                     {"is_ultrametric", is_ultrametric(c, o.tolerance)}};
      if (c.size() >= 2) {
        double      worst = 0.0;
        std::size_t at    = 0;
        for (std::size_t p = 0; p < c.size(); ++p) {
          double const l = lipschitz_constant(c, c.row(p));
          if (l > worst) {
            worst = l;
            at    = p;
          }
        }
        out.results["distance_function_lipschitz"]
            = {{"max", worst}, {"point", at}};
      }
      out.flags["metric"] = out.results["is_metric"];
      return out;
    }

    Outcome cmd_metrize(Options const& o) {
      Outcome          out;
      PointCloud const c = load(o, out.config);
      out.config["epsilon"]
          = o.epsilon ? json(*o.epsilon) : json("auto");
      auto const m = chain_metrize(c, o.epsilon, execution(o));
      bool const metric = is_metric(m.rho, o.tolerance);
      bool const comp   = comparable(c, m.rho, m.c_prime, m.delta, o.tolerance);
      out.results = {{"epsilon", m.epsilon},
                     {"delta", m.delta},
                     {"c_prime", m.c_prime},
                     {"rho_is_metric", metric},
                     {"comparable", comp}};
      if (!o.write_cloud.empty()) {
        out.config["write_cloud"] = o.write_cloud;
        write_json_file(o.write_cloud, cloud_to_json(m.rho));
      }
      if (!metric || !comp) {
        throw InvariantViolation("chain metrization failed re-verification");
      }
      out.flags["verified"] = true;
      return out;
    }

    Outcome cmd_doubling(Options const& o) {
      Outcome          out;
      PointCloud const c     = load(o, out.config);
      auto const       radii = grid(o, c, out);
      auto const covers      = doubling_constant_estimate(c, radii, execution(o));
      out.results["covers"]  = report::covers(covers);
      out.results["measure"] = report::measure(
          measure_doubling_check(c, radii, execution(o)));
      if (o.iterate > 0) {
        out.config["iterate"] = o.iterate;
        std::size_t checks    = 0;
        std::size_t largest   = 0;
        for (double r : radii) {
          for (std::size_t x = 0; x < c.size(); ++x) {
            for (std::size_t l = 1; l <= o.iterate; ++l) {
              auto const it
                  = doubling_iterate_check(c, x, r, l, covers.constant);
              ++checks;
              largest = std::max(largest, it.count);
            }
          }
        }
        out.results["iterate"] = {{"levels", o.iterate},
                                  {"checks", checks},
                                  {"largest_count", largest}};
        out.flags["iterate_passed"] = true;
      }
      return out;
    }

    Outcome cmd_dimension(Options const& o) {
      Outcome          out;
      PointCloud const c = load(o, out.config);
      auto const       radii = grid(o, c, out);
      out.results            = report::fit(boxcount_dimension(c, radii));
      return out;
    }

    Outcome cmd_boundary(Options const& o) {
      Outcome out;
      double const eps = o.epsilon ? *o.epsilon : std::log(3.0);
      out.config["rank"]    = o.rank;
      out.config["depth"]   = o.depth;
      out.config["epsilon"] = eps;
      out.config["limit"]   = o.point_limit;
      auto const b = boundary_approx(o.rank, o.depth, o.point_limit);
      VisualQuasimetric const v(eps);
      PointCloud const        c = boundary_cloud(b, v, execution(o));
      out.results = report::boundary(b);
      out.results["classification"] = to_string(elementary_check(o.rank));
      out.results["is_ultrametric"] = is_ultrametric(c, 0.0);
      out.results["is_metric"]      = is_metric(c);
      if (o.doubling) {
        std::vector<double> radii;
        for (std::size_t k = 0; k <= o.levels; ++k) {
          radii.push_back(std::ldexp(1.0, -static_cast<int>(k)));
        }
        out.config["doubling_levels"] = o.levels;
        out.results["measure"] = report::measure(
            measure_doubling_check(c, radii, execution(o)));
      }
      if (o.dimension) {
        out.config["octaves"] = o.octaves;
        auto const g          = dyadic_radii(c, o.octaves);
        out.warnings.insert(out.warnings.end(), g.warnings.begin(),
                            g.warnings.end());
        out.results["dimension"] = report::fit(boxcount_dimension(c, g.radii));
      }
      if (!o.write_cloud.empty()) {
        out.config["write_cloud"] = o.write_cloud;
        write_json_file(o.write_cloud, cloud_to_json(c));
      }
      out.flags["ultrametric"] = out.results["is_ultrametric"];
      return out;
    }

    void add_budget(CLI::App* sub, Options& o) {
      sub->add_option("--max-area", o.max_area, "Largest area tried")
          ->capture_default_str();
      sub->add_option("--max-factors", o.max_factors,
                      "Largest number of factors")
          ->capture_default_str();
      sub->add_option("--nodes", o.nodes,
                      std::string("Node budget (default from ")
                          + kNodeBudgetVariable + " or 10000000)");
      sub->add_option("--weight-exponent", o.weight_exponent,
                      "Power of the relator length in the relator cost")
          ->capture_default_str();
    }

    void add_cloud(CLI::App* sub, Options& o) {
      sub->add_option("--cloud", o.cloud, "Point cloud (.json or CSV)")
          ->required();
      sub->add_option("--snowflake", o.snowflake,
                      "Replace d by d^a before the analysis");
    }

    void add_grid(CLI::App* sub, Options& o) {
      sub->add_option("--radii", o.radii, "Explicit radii")->delimiter(',');
      sub->add_option("--octaves", o.octaves,
                      "Dyadic radii diam*2^-k, k = 1..octaves (0 = down to "
                      "the smallest gap)")
          ->capture_default_str();
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    Options  o;
    CLI::App app{"Word metrics, isoperimetric areas and quasimetric "
                 "analysis for finitely presented groups",
                 "hypgrp"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-o,--output", o.output, "Write the report to a file");
    app.add_option("--threads", o.threads, "Cap on worker threads")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", o.seed, "Seed for sampled checks")
        ->capture_default_str();
    app.add_flag("--serial", o.serial, "Use the serial reference kernels");

    auto* ball = app.add_subcommand("ball", "Cayley ball about the identity");
    ball->add_option("--pres", o.pres, "Presentation file")->required();
    ball->add_option("--radius", o.radius)->capture_default_str();
    ball->add_option("--limit", o.limit)->capture_default_str();
    ball->add_option("--new-gens", o.new_gens,
                     "Comma-separated generating set to compare against");
    ball->add_option("--cap", o.cap, "BFS step cap")->capture_default_str();
    ball->add_option("--invariance-checks", o.invariance_checks,
                     "Number of seeded left-translation checks");

    auto* dist = app.add_subcommand("dist", "Word-metric distance");
    dist->add_option("--pres", o.pres)->required();
    dist->add_option("--from", o.from);
    dist->add_option("--to", o.to);
    dist->add_option("--cap", o.cap)->capture_default_str();
    dist->add_option("--delta", o.delta,
                     "Also check invariance under left translation by delta");

    auto* area = app.add_subcommand("area", "Isoperimetric area of a word");
    area->add_option("--pres", o.pres)->required();
    area->add_option("--word", o.word)->required();
    add_budget(area, o);

    auto* scan = app.add_subcommand("scan", "Linear-isoperimetric scan");
    scan->add_option("--pres", o.pres)->required();
    scan->add_option("--maxlen", o.max_length)->capture_default_str();
    scan->add_flag("--cyclic", o.cyclic,
                   "Keep one word per class of rotations");
    add_budget(scan, o);

    auto* qaudit = app.add_subcommand("qaudit", "Quasimetric audit");
    add_cloud(qaudit, o);
    qaudit->add_option("--tolerance", o.tolerance)->capture_default_str();

    auto* metrize = app.add_subcommand("metrize", "Chain metrization");
    add_cloud(metrize, o);
    metrize->add_option("--epsilon", o.epsilon,
                        "Exponent (default log 2 / log 2C)");
    metrize->add_option("--tolerance", o.tolerance)->capture_default_str();
    metrize->add_option("--write-cloud", o.write_cloud,
                        "Write the metric as a JSON cloud");

    auto* doubling = app.add_subcommand("doubling", "Doubling constants");
    add_cloud(doubling, o);
    add_grid(doubling, o);
    doubling->add_option("--iterate", o.iterate,
                         "Check iterated covers for l = 1..L");

    auto* dimension = app.add_subcommand("dimension", "Box-count dimension");
    add_cloud(dimension, o);
    add_grid(dimension, o);

    auto* boundary = app.add_subcommand("boundary",
                                        "Free-group boundary approximation");
    boundary->add_option("--rank", o.rank)->capture_default_str();
    boundary->add_option("--depth", o.depth)->capture_default_str();
    boundary->add_option("--epsilon", o.epsilon, "Visual parameter (ln 3)");
    boundary->add_option("--limit", o.point_limit)->capture_default_str();
    boundary->add_flag("--doubling", o.doubling,
                       "Measure doubling over radii 2^-k");
    boundary->add_option("--levels", o.levels, "Largest k for --doubling")
        ->capture_default_str();
    boundary->add_flag("--dimension", o.dimension, "Box-count dimension");
    boundary->add_option("--octaves", o.octaves)->capture_default_str();
    boundary->add_option("--write-cloud", o.write_cloud);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kOk : kInput;
    }

    std::map<std::string, std::function<Outcome(Options const&)>> const
        commands{{"ball", cmd_ball},         {"dist", cmd_dist},
                 {"area", cmd_area},         {"scan", cmd_scan},
                 {"qaudit", cmd_qaudit},     {"metrize", cmd_metrize},
                 {"doubling", cmd_doubling}, {"dimension", cmd_dimension},
                 {"boundary", cmd_boundary}};
    std::string const command = app.get_subcommands().front()->get_name();

    try {
      set_thread_limit(o.threads);
      auto const start  = std::chrono::steady_clock::now();
      Outcome    result = commands.at(command)(o);
      auto const stop   = std::chrono::steady_clock::now();

      result.config["command"] = command;
      result.config["seed"]    = o.seed;
      result.config["serial"]  = o.serial;
      json report{
          {"tool", "hypgrp"},
          {"version", kVersion},
          {"schema_version", kSchemaVersion},
          {"command", command},
          {"config", std::move(result.config)},
          {"results", std::move(result.results)},
          {"flags", std::move(result.flags)},
          {"warnings", result.warnings},
          {"timing",
           {{"wall_seconds",
             std::chrono::duration<double>(stop - start).count()},
            {"threads", o.threads}}}};
      for (auto const& w : result.warnings) {
        err << "warning: " << w << '\n';
      }
      if (o.output.empty()) {
        out << report.dump(2) << '\n';
      } else {
        write_json_file(o.output, report);
      }
      return kOk;
    } catch (InputError const& e) {
      err << "error: " << e.what() << '\n';
      return kInput;
    } catch (InvariantError const& e) {
      err << "invariant failure: " << e.what() << '\n';
      return kInvariant;
    } catch (BudgetExceeded const& e) {
      err << "budget exhausted: " << e.what() << " (area >= "
          << e.lower_bound() << ")\n";
      return kBudget;
    } catch (BudgetError const& e) {
      err << "budget exhausted: " << e.what() << '\n';
      return kBudget;
    }
  }

}  // namespace hypgrp::cli
