// relrole: positional and role analysis of multirelational graphs.
//
// Exit codes: 0 success, 1 invalid input or configuration, 2 a
// verification failed (non-nesting hierarchy, imperfect blockmodel, broken
// homomorphism). Artifacts go to --out, summaries to stdout, logs to stderr.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "relrole/blockmodel.hpp"
#include "relrole/equivalence.hpp"
#include "relrole/error.hpp"
#include "relrole/fixtures.hpp"
#include "relrole/homomorphism.hpp"
#include "relrole/io.hpp"
#include "relrole/report.hpp"
#include "relrole/semigroup.hpp"
#include "relrole/truncated.hpp"

namespace fs = std::filesystem;
using namespace relrole;

namespace {

  struct AnalysisConfig {
    std::string input;
    std::string fixture;
    std::string out;
    unsigned    threads = 1;
    unsigned    seed    = 0;  // reserved; every command is deterministic

    // partition
    std::string metric = "euclidean";
    std::size_t blocks = 0;
    double      threshold = -1.0;
    bool        exact = false;
    std::string relations;

    std::string partition;
    std::string delta = "auto";

    std::size_t cap         = 100'000;
    std::size_t table_limit = 1024;
    std::string table       = "txt";

    std::size_t k      = 18;
    std::string round  = "2";
    std::string rule   = "half-even";

    std::vector<std::string> hierarchy;
    std::string              fixture_name;
  };

  [[noreturn]] void bad_flag(std::string const& what) {
    throw InputError("cli", InputError::Kind::invalid_argument, what);
  }

  AnyGraph load_input(AnalysisConfig const& cfg) {
    if (!cfg.fixture.empty()) {
      if (!cfg.input.empty()) {
        bad_flag("--input and --fixture are mutually exclusive");
      }
      return fixtures::get(cfg.fixture).graph;
    }
    if (cfg.input.empty()) {
      bad_flag("this command needs --input MANIFEST or --fixture NAME");
    }
    return load_graph(cfg.input);
  }

  MultirelationalGraph boolean_input(AnalysisConfig const& cfg) {
    auto g = load_input(cfg);
    if (auto const* b = std::get_if<MultirelationalGraph>(&g)) {
      return *b;
    }
    bad_flag("this command needs a Boolean graph, but the input has "
             "weighted entries");
  }

  WeightedMultirelationalGraph weighted_input(AnalysisConfig const& cfg) {
    auto g = load_input(cfg);
    if (auto const* b = std::get_if<MultirelationalGraph>(&g)) {
      return to_weighted(*b);
    }
    return std::get<WeightedMultirelationalGraph>(g);
  }

  Partition load_cli_partition(AnalysisConfig const&           cfg,
                               std::vector<std::string> const& labels) {
    if (!cfg.partition.empty()) {
      return load_partition(cfg.partition, labels);
    }
    if (!cfg.fixture.empty()) {
      if (auto p = fixtures::get(cfg.fixture).partition) {
        return *p;
      }
    }
    bad_flag("this command needs --partition FILE");
  }

  // Writes `text` to <out>/<name> when --out is set. Returns whether it did.
  bool write_artifact(AnalysisConfig const& cfg,
                      std::string const&    name,
                      std::string const&    text) {
    if (cfg.out.empty()) {
      return false;
    }
    fs::create_directories(cfg.out);
    std::ofstream f(fs::path(cfg.out) / name, std::ios::binary);
    if (!f) {
      throw InputError("cli", InputError::Kind::io, "cannot write " + name);
    }
    f << text;
    std::clog << "wrote " << (fs::path(cfg.out) / name).string() << '\n';
    return true;
  }

  std::string dump(ordered_json const& j) {
    return j.dump(2) + "\n";
  }

  RoundingPolicy parse_policy(AnalysisConfig const& cfg) {
    RoundingRule rule;
    if (cfg.rule == "half-even") {
      rule = RoundingRule::half_even;
    } else if (cfg.rule == "half-up") {
      rule = RoundingRule::half_up;
    } else {
      bad_flag("--rule must be half-even or half-up");
    }
    if (cfg.round == "none") {
      return RoundingPolicy::none();
    }
    unsigned digits = 0;
    try {
      std::size_t used = 0;
      digits           = static_cast<unsigned>(std::stoul(cfg.round, &used));
      if (used != cfg.round.size()) {
        throw std::invalid_argument(cfg.round);
      }
    } catch (std::exception const&) {
      bad_flag("--round must be none or a number of digits");
    }
    if (digits > RoundingPolicy::max_digits) {
      bad_flag("--round must be at most 12 digits");
    }
    return RoundingPolicy::per_step(digits, rule);
  }

  std::vector<std::size_t> relation_subset(MultirelationalGraph const& g,
                                           std::string const&          csv) {
    std::vector<std::size_t> out;
    if (csv.empty()) {
      return out;
    }
    std::stringstream ss(csv);
    std::string       name;
    while (std::getline(ss, name, ',')) {
      out.push_back(g.relation_index(name));
    }
    return out;
  }

  std::string partition_text(Partition const&                p,
                             std::vector<std::string> const& labels) {
    std::ostringstream os;
    for (std::size_t b = 0; b < p.num_blocks(); ++b) {
      os << (b ? " " : "") << p.block_labels()[b] << "={";
      for (std::size_t t = 0; t < p.block(b).size(); ++t) {
        os << (t ? "," : "") << labels[p.block(b)[t]];
      }
      os << '}';
    }
    return os.str();
  }

  // --- subcommands --------------------------------------------------------

  int cmd_ingest(AnalysisConfig const& cfg) {
    auto g = load_input(cfg);
    std::visit(
        [](auto const& x) {
          using G       = std::decay_t<decltype(x)>;
          bool weighted = std::is_same_v<G, WeightedMultirelationalGraph>;
          std::cout << "nodes: " << x.num_nodes() << "\nrelations: " << x.num_relations()
                    << "\nkind: " << (weighted ? "weighted" : "boolean") << '\n';
          for (auto const& rel : x.relations()) {
            std::cout << "  " << rel.name;
            if constexpr (std::is_same_v<G, MultirelationalGraph>) {
              std::cout << " (" << rel.matrix.count() << " ties)";
            }
            std::cout << '\n';
          }
        },
        g);
    return 0;
  }

  int cmd_partition(AnalysisConfig const& cfg) {
    auto      g = boolean_input(cfg);
    Partition p;
    ordered_json extra;
    if (cfg.exact) {
      p = structural_partition(g, relation_subset(g, cfg.relations));
    } else {
      Metric metric;
      if (cfg.metric == "euclidean") {
        metric = Metric::euclidean;
      } else if (cfg.metric == "cosine") {
        metric = Metric::cosine_distance;
      } else {
        bad_flag("--metric must be euclidean or cosine");
      }
      if ((cfg.blocks > 0) == (cfg.threshold >= 0.0)) {
        bad_flag("give exactly one of --blocks K and --threshold T");
      }
      DistanceOptions opts{relation_subset(g, cfg.relations), cfg.threads};
      auto            d = distance_matrix(g, metric, opts);
      if (!d.zero_profile_pairs.empty()) {
        std::clog << "note: " << d.zero_profile_pairs.size()
                  << " node pairs compared against an all-zero profile "
                     "(cosine distance set to 1, or 0 for two zero profiles)\n";
      }
      p = cfg.blocks > 0 ? agglomerate(d, NumBlocks{cfg.blocks})
                         : agglomerate(d, Threshold{cfg.threshold});
      write_artifact(cfg, "distances.json", dump(distance_json(d, g.node_labels())));
    }
    auto text = partition_to_json(p, g.node_labels()) + "\n";
    if (write_artifact(cfg, "partition.json", text)) {
      std::cout << p.num_blocks() << " blocks: " << partition_text(p, g.node_labels())
                << '\n';
    } else {
      std::cout << text;
    }
    return 0;
  }

  template <typename Matrix>
  DensityBlockmodel blockmodel_of(BasicGraph<Matrix> const& g,
                                  AnalysisConfig const&     cfg) {
    auto p = load_cli_partition(cfg, g.node_labels());
    return density_blockmodel(g, p).first;
  }

  void write_matrices(AnalysisConfig const&               cfg,
                      std::string const&                  prefix,
                      std::vector<std::string> const&     nodes,
                      std::vector<Relation<BoolMatrix>>   bools,
                      std::vector<Relation<WeightMatrix>> weights) {
    if (cfg.out.empty()) {
      return;
    }
    if (!bools.empty()) {
      save_graph(MultirelationalGraph(nodes, std::move(bools)),
                 cfg.out,
                 prefix + ".json",
                 prefix + "_");
    } else {
      save_graph(WeightedMultirelationalGraph(nodes, std::move(weights)),
                 cfg.out,
                 prefix + ".json",
                 prefix + "_");
    }
  }

  int cmd_density(AnalysisConfig const& cfg) {
    auto g  = load_input(cfg);
    auto bm = std::visit([&](auto const& x) { return blockmodel_of(x, cfg); }, g);
    auto j  = blockmodel_json(bm);
    if (bm.weighted_input) {
      std::clog << "note: weighted input; densities are block sums of weights "
                   "divided by block sizes\n";
    }
    write_matrices(cfg, "density", bm.graph.node_labels(), {}, bm.graph.relations());
    if (!write_artifact(cfg, "density_summary.json", dump(j))) {
      std::cout << dump(j);
    } else {
      std::cout << "perfect: " << (bm.is_perfect ? "yes" : "no") << '\n';
      for (auto const& rel : bm.graph.relations()) {
        std::cout << rel.name << " = " << matrix_text(rel.matrix) << '\n';
      }
    }
    return 0;
  }

  int cmd_image(AnalysisConfig const& cfg, bool lean) {
    auto g  = load_input(cfg);
    auto bm = std::visit([&](auto const& x) { return blockmodel_of(x, cfg); }, g);
    ordered_json j = blockmodel_json(bm);
    j["method"]    = lean ? "lean_fit" : "alpha_density";
    j["deltas"]    = ordered_json::object();
    j["images"]    = ordered_json::object();
    std::vector<Relation<BoolMatrix>> images;
    for (std::size_t s = 0; s < bm.graph.num_relations(); ++s) {
      auto const& rel = bm.graph.relation(s);
      BoolMatrix  img;
      if (lean) {
        img = lean_fit(rel.matrix);
      } else {
        Rational delta;
        if (cfg.delta == "auto") {
          auto const* b = std::get_if<MultirelationalGraph>(&g);
          if (!b) {
            bad_flag("--delta auto needs a Boolean input graph");
          }
          auto dd = default_delta(b->relation(s).matrix);
          if (dd.zero_matrix) {
            bad_flag("relation \"" + rel.name
                     + "\" has no ties; give an explicit --delta");
          }
          delta = dd.delta;
        } else {
          auto v = parse_rational(cfg.delta);
          if (!v) {
            bad_flag("--delta must be auto or a number in (0,1]");
          }
          delta = *v;
        }
        img                        = image_matrix(rel.matrix, delta);
        j["deltas"][rel.name]      = to_exact_string(delta);
      }
      j["images"][rel.name] = to_json(img);
      images.push_back({rel.name, img});
    }
    auto const prefix = lean ? std::string("leanfit") : std::string("image");
    write_matrices(cfg, prefix, bm.graph.node_labels(), images, {});
    if (!write_artifact(cfg, prefix + "_summary.json", dump(j))) {
      std::cout << dump(j);
    } else {
      for (auto const& rel : images) {
        std::cout << rel.name << ":\n" << matrix_text(rel.matrix);
      }
    }
    return 0;
  }

  int cmd_semigroup(AnalysisConfig const& cfg) {
    auto g = boolean_input(cfg);
    auto s = generate_semigroup(g.matrices(), {cfg.cap, cfg.threads, cfg.table_limit});
    auto names = g.relation_names();
    auto j     = semigroup_json(s, names);
    std::clog << "semigroup: " << s.size() << " elements ("
              << s.size() - (s.zero_index() ? 1 : 0) << " without zero)\n";
    bool wrote = write_artifact(cfg, "semigroup.json", dump(j));
    if (cfg.table == "json") {
      if (!wrote) {
        std::cout << dump(j);
      }
    } else if (cfg.table == "txt") {
      if (s.has_table()) {
        auto text = multiplication_table(s, names);
        write_artifact(cfg, "table.txt", text);
        std::cout << text;
      } else {
        std::cout << s.size() << " elements; table omitted above "
                  << cfg.table_limit << " elements (raise --table-limit)\n";
      }
    } else {
      bad_flag("--table must be txt or json");
    }
    return 0;
  }

  int cmd_truncate(AnalysisConfig const& cfg) {
    auto g      = weighted_input(cfg);
    auto policy = parse_policy(cfg);
    auto s      = generate_truncated(g.matrices(),
                                cfg.k,
                                policy,
                                {cfg.cap, cfg.threads, cfg.table_limit});
    auto names  = g.relation_names();
    auto j      = truncated_json(s, names);
    auto text   = truncated_listing(s, names);
    if (!write_artifact(cfg, "truncated.json", dump(j))) {
      std::cout << text;
    } else {
      write_artifact(cfg, "truncated.txt", text);
      std::cout << text;
    }
    return 0;
  }

  int cmd_verify_hom(AnalysisConfig const& cfg) {
    auto g   = boolean_input(cfg);
    auto p   = load_cli_partition(cfg, g.node_labels());
    auto hom = induced_hom(g, p, {cfg.cap, cfg.threads, cfg.table_limit});
    auto j   = hom_json(hom, g.relation_names());
    if (!write_artifact(cfg, "homomorphism.json", dump(j))) {
      std::cout << dump(j);
    } else {
      std::cout << "homomorphism verified: " << hom.source->size() << " -> "
                << hom.target->size() << " elements, "
                << (hom.surjective ? "surjective" : "not surjective") << '\n';
    }
    return hom.surjective ? 0 : 2;
  }

  int cmd_verify_functor(AnalysisConfig const& cfg) {
    auto g = boolean_input(cfg);
    std::vector<fs::path> paths(cfg.hierarchy.begin(), cfg.hierarchy.end());
    auto h   = load_hierarchy(paths, g.node_labels());
    auto rep = check_functoriality(g, h, {cfg.cap, cfg.threads, cfg.table_limit});
    auto j   = functoriality_json(rep);
    if (!write_artifact(cfg, "functoriality.json", dump(j))) {
      std::cout << dump(j);
    } else {
      for (auto const& t : rep.triples) {
        std::cout << "SG(pi_" << t.i << t.j << ") = SG(pi_" << t.k << t.j
                  << ") o SG(pi_" << t.i << t.k << "): "
                  << (t.passed() ? "pass" : "FAIL") << '\n';
      }
      std::cout << (rep.passed() ? "functoriality holds" : "functoriality FAILED")
                << " (" << rep.triples.size() << " triples)\n";
    }
    return rep.passed() ? 0 : 2;
  }

  int cmd_report(AnalysisConfig const& cfg) {
    auto         g = load_input(cfg);
    ordered_json j;
    std::ostringstream os;
    auto policy = parse_policy(cfg);

    if (auto const* wg = std::get_if<WeightedMultirelationalGraph>(&g)) {
      auto s = generate_truncated(wg->matrices(), cfg.k, policy,
                                  {cfg.cap, cfg.threads, cfg.table_limit});
      j["truncated"] = truncated_json(s, wg->relation_names());
      os << "== truncated semigroup of relations ==\n"
         << truncated_listing(s, wg->relation_names());
    } else {
      auto const& bg    = std::get<MultirelationalGraph>(g);
      auto        names = bg.relation_names();
      auto const& nodes = bg.node_labels();

      os << "== structural equivalence ==\n";
      j["structural"] = ordered_json::object();
      for (std::size_t s = 0; s < bg.num_relations(); ++s) {
        auto p = structural_partition(bg, {s});
        j["structural"][names[s]] = partition_to_json(p, nodes);
        os << names[s] << " only: " << partition_text(p, nodes) << '\n';
      }
      auto all = structural_partition(bg);
      os << "all relations: " << partition_text(all, nodes) << '\n';

      auto sg = generate_semigroup(bg.matrices(), {cfg.cap, cfg.threads, cfg.table_limit});
      j["semigroup"] = semigroup_json(sg, names);
      os << "\n== semigroup of relations (" << sg.size() << " elements, "
         << sg.size() - (sg.zero_index() ? 1 : 0) << " without zero) ==\n";
      if (sg.has_table()) {
        os << multiplication_table(sg, names);
      }

      std::optional<Partition> p;
      if (!cfg.partition.empty() || !cfg.fixture.empty()) {
        p = load_cli_partition(cfg, nodes);
      }
      if (p) {
        auto [bm, q] = density_blockmodel(bg, *p);
        j["blockmodel"] = blockmodel_json(bm);
        os << "\n== density matrices for " << partition_text(*p, nodes) << " ==\n";
        for (auto const& rel : bm.graph.relations()) {
          os << rel.name << " = " << matrix_text(rel.matrix) << '\n';
        }
        os << "\n== image matrices (delta = fraction of ties) ==\n";
        j["images"] = ordered_json::object();
        for (std::size_t s = 0; s < bg.num_relations(); ++s) {
          auto dd = default_delta(bg.relation(s).matrix);
          if (dd.zero_matrix) {
            os << names[s] << ": no ties, skipped\n";
            continue;
          }
          auto img = image_matrix(bm.graph.relation(s).matrix, dd.delta);
          j["images"][names[s]] = {{"delta", to_exact_string(dd.delta)},
                                   {"matrix", to_json(img)}};
          os << names[s] << " (delta = " << to_exact_string(dd.delta) << "):\n"
             << matrix_text(img);
        }
        os << "\n== lean fit ==\n";
        for (auto const& rel : bm.graph.relations()) {
          os << rel.name << ":\n" << matrix_text(lean_fit(rel.matrix));
        }
        if (bm.is_perfect) {
          auto hom = induced_hom(bg, *p, {cfg.cap, cfg.threads, cfg.table_limit});
          j["induced_hom"] = hom_json(hom, names);
          os << "\ninduced homomorphism: " << hom.source->size() << " -> "
             << hom.target->size() << " elements\n";
        } else {
          j["induced_hom"] = nullptr;
          os << "\ninduced homomorphism: not defined, blockmodel is not perfect\n";
        }
        auto ts = generate_truncated(bm.graph.matrices(), cfg.k, policy,
                                     {cfg.cap, cfg.threads, cfg.table_limit});
        j["truncated"] = truncated_json(ts, names);
        os << "\n== truncated semigroup of the densities ==\n"
           << truncated_listing(ts, names);
      }
    }
    write_artifact(cfg, "report.json", dump(j));
    std::cout << os.str();
    return 0;
  }

  int cmd_fixtures(AnalysisConfig const& cfg) {
    if (cfg.fixture_name.empty()) {
      for (auto const& name : fixtures::names()) {
        std::cout << name << "  " << fixtures::get(name).description << '\n';
      }
      return 0;
    }
    auto f = fixtures::get(cfg.fixture_name);
    if (cfg.out.empty()) {
      bad_flag("fixtures NAME needs --out DIR");
    }
    fixtures::write(f, cfg.out);
    std::cout << "wrote fixture " << f.name << " to " << cfg.out << '\n';
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positional and role analysis of multirelational graphs"};
  app.fallthrough();
  app.require_subcommand(1);
  AnalysisConfig cfg;

  app.add_option("--input", cfg.input, "graph manifest (JSON)");
  app.add_option("--fixture", cfg.fixture, "use a bundled dataset instead of --input");
  app.add_option("--out", cfg.out, "output directory for artifacts");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--seed", cfg.seed, "reserved; all commands are deterministic");

  auto* ingest = app.add_subcommand("ingest", "validate a graph and print a summary");

  auto* part = app.add_subcommand("partition", "partition the nodes");
  part->add_option("--metric", cfg.metric, "euclidean or cosine");
  part->add_option("--blocks", cfg.blocks, "number of blocks");
  part->add_option("--threshold", cfg.threshold, "largest linkage to merge at");
  part->add_flag("--exact", cfg.exact, "structural equivalence");
  part->add_option("--relations", cfg.relations, "comma-separated relation subset");

  auto* density = app.add_subcommand("density", "density matrices of a partition");
  density->add_option("--partition", cfg.partition, "partition JSON");

  auto* image = app.add_subcommand("image", "image matrices (alpha-density criterion)");
  image->add_option("--partition", cfg.partition, "partition JSON");
  image->add_option("--delta", cfg.delta, "auto or a threshold in (0,1]");

  auto* lean = app.add_subcommand("leanfit", "image matrices with a 1 at every nonzero block");
  lean->add_option("--partition", cfg.partition, "partition JSON");

  auto* sg = app.add_subcommand("semigroup", "Boolean semigroup of relations");
  sg->add_option("--cap", cfg.cap, "maximum number of elements");
  sg->add_option("--table", cfg.table, "txt or json");
  sg->add_option("--table-limit", cfg.table_limit, "largest semigroup to tabulate");

  auto* tr = app.add_subcommand("truncate", "k-truncated max-times semigroup");
  tr->add_option("--k", cfg.k, "truncation depth")->check(CLI::PositiveNumber);
  tr->add_option("--round", cfg.round, "none or number of decimal digits");
  tr->add_option("--rule", cfg.rule, "half-even or half-up");
  tr->add_option("--cap", cfg.cap, "maximum number of elements");
  tr->add_option("--table-limit", cfg.table_limit, "largest semigroup to tabulate");

  auto* vh = app.add_subcommand("verify-hom", "check the homomorphism induced by a perfect partition");
  vh->add_option("--partition", cfg.partition, "partition JSON");
  vh->add_option("--cap", cfg.cap, "maximum number of elements");

  auto* vf = app.add_subcommand("verify-functor", "check functoriality over a nested hierarchy");
  vf->add_option("--hierarchy", cfg.hierarchy, "partition files, fine to coarse")->required();
  vf->add_option("--cap", cfg.cap, "maximum number of elements");

  auto* rep = app.add_subcommand("report", "one-shot analysis of a dataset");
  rep->add_option("--partition", cfg.partition, "partition JSON");
  rep->add_option("--k", cfg.k, "truncation depth")->check(CLI::PositiveNumber);
  rep->add_option("--round", cfg.round, "none or number of decimal digits");
  rep->add_option("--rule", cfg.rule, "half-even or half-up");
  rep->add_option("--cap", cfg.cap, "maximum number of elements");
  rep->add_option("--table-limit", cfg.table_limit, "largest semigroup to tabulate");

  auto* fx = app.add_subcommand("fixtures", "list or write bundled datasets");
  fx->add_option("name", cfg.fixture_name, "fixture to write");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*ingest) return cmd_ingest(cfg);
    if (*part) return cmd_partition(cfg);
    if (*density) return cmd_density(cfg);
    if (*image) return cmd_image(cfg, false);
    if (*lean) return cmd_image(cfg, true);
    if (*sg) return cmd_semigroup(cfg);
    if (*tr) return cmd_truncate(cfg);
    if (*vh) return cmd_verify_hom(cfg);
    if (*vf) return cmd_verify_functor(cfg);
    if (*rep) return cmd_report(cfg);
    if (*fx) return cmd_fixtures(cfg);
  } catch (VerificationError const& e) {
    std::cerr << "error [" << e.module() << "]: " << e.what() << '\n';
    return 2;
  } catch (InternalError const& e) {
    std::cerr << "error [" << e.module() << "]: " << e.what() << '\n';
    return 2;
  } catch (Error const& e) {
    std::cerr << "error [" << e.module() << "]: " << e.what() << '\n';
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
