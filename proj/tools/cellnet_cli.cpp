// cellnet — command-line front end for the coupled-cell-network library.
//
// Subcommands: validate, show, union, minimal, reduce, equiv, classes,
// synchrony, monoid, construct, reproduce.  Global flags: --json for machine
// output, --jobs N for worker threads.  Exit codes: 0 success, 1 domain
// error (error name printed verbatim on stderr), 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cellnet/construct.hpp"
#include "cellnet/enumeration.hpp"
#include "cellnet/equivalence.hpp"
#include "cellnet/errors.hpp"
#include "cellnet/io.hpp"
#include "cellnet/monoid.hpp"
#include "cellnet/network.hpp"
#include "cellnet/synchrony.hpp"

namespace {

using cellnet::Network;
using nlohmann::json;

struct Options {
  bool json = false;
  unsigned jobs = 0;
};

// Block strings of the balanced 2-block partitions, for catalog entries.
std::vector<std::string> two_block_synchrony(const Network& net) {
  std::vector<std::string> out;
  for (const cellnet::CellPartition& p : cellnet::synchrony_partitions(net))
    if (p.block_count() == 2) out.push_back(p.to_string());
  return out;
}

json catalog_entry(const Network& rep, int index) {
  json j = cellnet::network_to_json(rep);
  j["class_index"] = index;
  j["synchrony_2d"] = two_block_synchrony(rep);
  return j;
}

void print_network_text(const Network& net) {
  std::cout << net.n() << " cells, " << net.k() << " input"
            << (net.k() == 1 ? "" : "s");
  if (!net.label().empty()) std::cout << "  (" << net.label() << ")";
  std::cout << "\n";
  for (int l = 1; l <= net.k(); ++l) {
    std::cout << "  type " << l << ": [";
    for (int i = 1; i <= net.n(); ++i)
      std::cout << (i > 1 ? " " : "") << net.input(l)(i);
    std::cout << "]\n";
  }
}

int cmd_validate(const std::string& file, const Options& opt) {
  Network net = cellnet::read_network_file(file);
  if (opt.json) {
    json j{{"ok", true}, {"cells", net.n()}, {"inputs", net.k()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "ok: " << net.n() << " cells, " << net.k() << " inputs\n";
  }
  return 0;
}

int cmd_show(const std::string& file, bool dot, const Options& opt) {
  Network net = cellnet::read_network_file(file);
  if (dot)
    std::cout << cellnet::to_dot(net);
  else if (opt.json)
    std::cout << cellnet::network_to_json(net).dump() << "\n";
  else
    print_network_text(net);
  return 0;
}

int cmd_union(const std::vector<std::string>& files, const Options&) {
  std::vector<Network> nets;
  for (const std::string& f : files) nets.push_back(cellnet::read_network_file(f));
  std::cout << cellnet::network_to_json(cellnet::union_nets(nets)).dump()
            << "\n";
  return 0;
}

int cmd_minimal(const std::string& file, const Options& opt) {
  bool m = cellnet::is_minimal(cellnet::read_network_file(file));
  if (opt.json)
    std::cout << json{{"minimal", m}}.dump() << "\n";
  else
    std::cout << "minimal: " << (m ? "yes" : "no") << "\n";
  return 0;
}

int cmd_reduce(const std::string& file, const Options&) {
  Network red = cellnet::reduce_to_minimal(cellnet::read_network_file(file));
  std::cout << cellnet::network_to_json(red).dump() << "\n";
  return 0;
}

int cmd_equiv(const std::string& fa, const std::string& fb,
              const Options& opt) {
  bool eq = cellnet::ode_equivalent(cellnet::read_network_file(fa),
                                    cellnet::read_network_file(fb));
  if (opt.json)
    std::cout << json{{"ode_equivalent", eq}}.dump() << "\n";
  else
    std::cout << "ODE-equivalent: " << (eq ? "yes" : "no") << "\n";
  return 0;
}

int cmd_classes(int cells, int inputs, bool connected, std::string out_file,
                const Options& opt) {
  std::vector<Network> reps =
      cellnet::minimal_class_catalog(cells, inputs, connected, opt.jobs);
  if (out_file.empty())
    out_file = "catalog_n" + std::to_string(cells) + "_k" +
               std::to_string(inputs) + ".jsonl";
  std::ofstream out(out_file);
  if (!out) throw cellnet::ParseError("cannot open " + out_file + " for writing");
  for (std::size_t i = 0; i < reps.size(); ++i)
    out << catalog_entry(reps[i], static_cast<int>(i) + 1).dump() << "\n";
  if (opt.json)
    std::cout << json{{"classes", reps.size()}, {"file", out_file}}.dump()
              << "\n";
  else
    std::cout << reps.size() << " classes (catalog written to " << out_file
              << ")\n";
  return 0;
}

int cmd_synchrony(const std::string& file, const Options& opt) {
  Network net = cellnet::read_network_file(file);
  std::vector<cellnet::CellPartition> parts =
      cellnet::synchrony_partitions(net);
  if (opt.json) {
    json arr = json::array();
    for (const auto& p : parts)
      arr.push_back(
          json{{"blocks", p.to_string()}, {"assignment", p.assignment()}});
    std::cout << json{{"partitions", arr}}.dump() << "\n";
  } else {
    if (parts.empty()) std::cout << "(no nontrivial balanced partitions)\n";
    for (const auto& p : parts) std::cout << p.to_string() << "\n";
  }
  return 0;
}

int cmd_monoid(const std::string& file, bool fundamental, const Options& opt) {
  Network net = cellnet::read_network_file(file);
  cellnet::MonoidTable t = cellnet::closure(net.inputs());
  if (opt.json) {
    json j{{"size", t.size()},
           {"generators", t.generator_indices()},
           {"table", t.table()}};
    if (fundamental) j["fundamental"] = cellnet::is_fundamental(net);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "monoid size: " << t.size() << "\n";
    std::cout << cellnet::print_table(t);
    if (fundamental)
      std::cout << "fundamental: "
                << (cellnet::is_fundamental(net) ? "yes" : "no") << "\n";
  }
  return 0;
}

void print_network_lines(const std::vector<Network>& nets, const Options& opt) {
  for (const Network& g : nets) {
    if (opt.json)
      std::cout << cellnet::network_to_json(g).dump() << "\n";
    else
      std::cout << cellnet::digest(g) << "\n";
  }
}

int cmd_construct(const std::string& what, int cells,
                  const std::string& input_file, const Options& opt) {
  if (what == "dimension") {
    std::cout << cellnet::full_span_dimension(cells) << "\n";
  } else if (what == "basis") {
    print_network_lines(cellnet::valency_one_basis(cells), opt);
  } else if (what == "ff") {
    print_network_lines(cellnet::feed_forward_family(cells), opt);
  } else if (what == "universal") {
    Network u = cellnet::universal_representative(cells);
    if (opt.json)
      std::cout << cellnet::network_to_json(u).dump() << "\n";
    else
      std::cout << cellnet::digest(u) << "\n";
  } else if (what == "alg1") {
    if (input_file.empty())
      throw CLI::ValidationError("construct alg1 requires --input FILE");
    Network g = cellnet::algorithm1(cellnet::read_network_file(input_file));
    if (opt.json)
      std::cout << cellnet::network_to_json(g).dump() << "\n";
    else
      std::cout << cellnet::digest(g) << "\n";
  } else if (what == "alg2") {
    print_network_lines(cellnet::algorithm2(cells), opt);
  } else if (what == "lower-bound") {
    print_network_lines(cellnet::lower_bound_family(cells), opt);
  } else {
    throw CLI::ValidationError("unknown construction \"" + what + "\"");
  }
  return 0;
}

// ----------------------------------------------------------- reproductions

int reproduce_dim(const Options& opt) {
  json arr = json::array();
  for (int n = 2; n <= 5; ++n) {
    int d = cellnet::full_span_dimension(n);
    if (opt.json)
      arr.push_back(json{{"n", n}, {"dimension", d}});
    else
      std::cout << "n=" << n << ": dimension " << d << " (n(n-1)+1 = "
                << n * (n - 1) + 1 << ")\n";
  }
  if (opt.json) std::cout << arr.dump() << "\n";
  return 0;
}

int reproduce_table1(const Options& opt) {
  std::vector<Network> reps = cellnet::one_input_classes(3);
  json arr = json::array();
  for (const Network& r : reps) {
    std::vector<std::string> syn = two_block_synchrony(r);
    if (opt.json) {
      json j = cellnet::network_to_json(r);
      j["synchrony_2d"] = syn;
      arr.push_back(std::move(j));
    } else {
      std::cout << cellnet::digest(r) << "  synchrony:";
      if (syn.empty()) std::cout << " -";
      for (const std::string& s : syn) std::cout << " " << s;
      std::cout << "\n";
    }
  }
  if (opt.json) std::cout << arr.dump() << "\n";
  if (!opt.json)
    std::cout << reps.size() << " one-input classes on 3 cells\n";
  return 0;
}

int reproduce_thm48(const Options& opt) {
  // Count ordered/unordered minimal pairs of distinct non-identity maps.
  cellnet::EnumerateOptions eo;
  eo.exclude_identity = true;
  std::vector<Network> maps = cellnet::enumerate_one_input(3, eo);
  long unordered = 0;
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      Network u = cellnet::union_nets({maps[i], maps[j]});
      if (cellnet::is_minimal(u)) ++unordered;
    }
  long iso = cellnet::intermediate_isomorphism_count(3, 2);
  std::vector<Network> reps =
      cellnet::minimal_class_catalog(3, 2, /*connected_only=*/true, opt.jobs);
  if (opt.json) {
    std::cout << json{{"one_input_networks", maps.size()},
                      {"ordered_minimal_pairs", 2 * unordered},
                      {"unordered_minimal_pairs", unordered},
                      {"isomorphism_classes", iso},
                      {"connected_ode_classes", reps.size()}}
                     .dump()
              << "\n";
  } else {
    std::cout << maps.size() << " one-input networks\n"
              << 2 * unordered << " ordered minimal pairs ("
              << unordered << " unordered)\n"
              << iso << " pair classes in the family-by-family tally\n"
              << reps.size() << " connected ODE-classes:\n";
    for (std::size_t i = 0; i < reps.size(); ++i)
      std::cout << "  " << i + 1 << ": " << cellnet::digest(reps[i]) << "\n";
  }
  return 0;
}

int reproduce_thm_synchrony(const Options& opt) {
  std::vector<Network> reps =
      cellnet::minimal_class_catalog(3, 2, /*connected_only=*/true, opt.jobs);
  std::map<int, int> dist;
  for (const Network& r : reps) ++dist[cellnet::count_2d_synchrony(r)];
  if (opt.json) {
    json j;
    for (int c = 0; c <= 3; ++c) j[std::to_string(c)] = dist[c];
    std::cout << j.dump() << "\n";
  } else {
    for (int c = 0; c <= 3; ++c)
      std::cout << dist[c] << " classes with " << c
                << " two-dimensional synchrony subspace"
                << (c == 1 ? "" : "s") << "\n";
  }
  return 0;
}

// All multiplication tables of 3-element monoids up to isomorphism,
// enumerated from scratch (identity element 1; free entries brute-forced and
// filtered by associativity, then canonicalized).
std::vector<std::vector<std::vector<int>>> three_element_monoids() {
  std::vector<std::vector<std::vector<int>>> found;
  std::vector<int> free_entries(4, 1);  // products 2*2, 2*3, 3*2, 3*3
  for (;;) {
    std::vector<std::vector<int>> t{
        {1, 2, 3},
        {2, free_entries[0], free_entries[1]},
        {3, free_entries[2], free_entries[3]}};
    bool assoc = true;
    for (int a = 1; a <= 3 && assoc; ++a)
      for (int b = 1; b <= 3 && assoc; ++b)
        for (int c = 1; c <= 3 && assoc; ++c)
          assoc = t[static_cast<std::size_t>(
                        t[static_cast<std::size_t>(a - 1)]
                         [static_cast<std::size_t>(b - 1)] -
                        1)][static_cast<std::size_t>(c - 1)] ==
                  t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(
                      t[static_cast<std::size_t>(b - 1)]
                       [static_cast<std::size_t>(c - 1)] -
                      1)];
    if (assoc) {
      // Canonicalize over the only nontrivial identity-preserving bijection
      // (swap elements 2 and 3).
      auto swap23 = [&t]() {
        std::vector<std::vector<int>> s(3, std::vector<int>(3));
        auto f = [](int x) { return x == 2 ? 3 : (x == 3 ? 2 : 1); };
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            s[static_cast<std::size_t>(f(i + 1) - 1)]
             [static_cast<std::size_t>(f(j + 1) - 1)] =
                 f(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        return s;
      };
      std::vector<std::vector<int>> canon = std::min(t, swap23());
      if (std::find(found.begin(), found.end(), canon) == found.end())
        found.push_back(canon);
    }
    std::size_t p = 0;
    while (p < 4 && free_entries[p] == 3) free_entries[p++] = 1;
    if (p == 4) break;
    ++free_entries[p];
  }
  std::sort(found.begin(), found.end());
  return found;
}

int reproduce_prop_monoids(const Options& opt) {
  std::vector<Network> reps =
      cellnet::minimal_class_catalog(3, 2, /*connected_only=*/true, opt.jobs);
  std::vector<std::vector<std::vector<int>>> types = three_element_monoids();
  json arr = json::array();
  int with_monoid = 0, fundamental_count = 0;
  for (const Network& r : reps) {
    if (!cellnet::has_three_element_monoid(r)) continue;
    ++with_monoid;
    cellnet::MonoidTable t = cellnet::closure(r.inputs());
    std::vector<std::vector<int>> canon = cellnet::canonical_table(t);
    auto it = std::find(types.begin(), types.end(), canon);
    int type_index = static_cast<int>(it - types.begin()) + 1;
    bool fund = cellnet::is_fundamental(r);
    if (fund) ++fundamental_count;
    if (opt.json) {
      json j = cellnet::network_to_json(r);
      j["monoid_type"] = type_index;
      j["fundamental"] = fund;
      arr.push_back(std::move(j));
    } else {
      std::cout << cellnet::digest(r) << "  monoid type T" << type_index
                << "/" << types.size() << "  fundamental: "
                << (fund ? "yes" : "no") << "\n";
    }
  }
  if (opt.json) {
    std::cout << json{{"three_element_monoid_networks", with_monoid},
                      {"monoid_types_total", types.size()},
                      {"fundamental", fundamental_count},
                      {"networks", arr}}
                     .dump()
              << "\n";
  } else {
    std::cout << with_monoid << " networks with a closed 3-element monoid; "
              << fundamental_count << " fundamental; " << types.size()
              << " monoid types exist in total\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled cell networks with asymmetric inputs"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--jobs", opt.jobs, "worker threads (0 = hardware default)");

  std::string file_a, file_b, out_file, construct_what, reproduce_what,
      input_file;
  std::vector<std::string> files;
  bool dot = false, connected = false, fundamental = false;
  int cells = 0, inputs = 2;

  CLI::App* validate = app.add_subcommand("validate", "parse and check a network file");
  validate->add_option("file", file_a)->required();

  CLI::App* show = app.add_subcommand("show", "print a network (text, --json or --dot)");
  show->add_option("file", file_a)->required();
  show->add_flag("--dot", dot, "emit DOT");

  CLI::App* uni = app.add_subcommand("union", "union of networks on the same cells");
  uni->add_option("files", files)->expected(-2);

  CLI::App* minimal = app.add_subcommand("minimal", "test minimality");
  minimal->add_option("file", file_a)->required();

  CLI::App* reduce = app.add_subcommand("reduce", "drop inputs until minimal");
  reduce->add_option("file", file_a)->required();

  CLI::App* equiv = app.add_subcommand("equiv", "test ODE-equivalence of two networks");
  equiv->add_option("a", file_a)->required();
  equiv->add_option("b", file_b)->required();

  CLI::App* classes = app.add_subcommand("classes", "catalog of minimal ODE-classes");
  classes->add_option("--cells", cells)->required();
  classes->add_option("--inputs", inputs)->required();
  classes->add_flag("--connected", connected, "connected networks only");
  classes->add_option("--out", out_file, "catalog output path (JSON lines)");

  CLI::App* synchrony = app.add_subcommand("synchrony", "balanced partitions of a network");
  synchrony->add_option("file", file_a)->required();

  CLI::App* monoid = app.add_subcommand("monoid", "symmetry monoid of a network");
  monoid->add_option("file", file_a)->required();
  monoid->add_flag("--fundamental", fundamental, "also test fundamentality");

  CLI::App* construct = app.add_subcommand("construct", "explicit constructions");
  construct
      ->add_option("what", construct_what,
                   "basis|dimension|ff|universal|alg1|alg2|lower-bound")
      ->required();
  construct->add_option("--cells", cells);
  construct->add_option("--input", input_file, "input network (alg1)");

  CLI::App* reproduce = app.add_subcommand("reproduce", "recompute the headline classifications");
  reproduce
      ->add_option("what", reproduce_what,
                   "table1|thm-48|thm-synchrony|prop-monoids|dim")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(file_a, opt);
    if (*show) return cmd_show(file_a, dot, opt);
    if (*uni) return cmd_union(files, opt);
    if (*minimal) return cmd_minimal(file_a, opt);
    if (*reduce) return cmd_reduce(file_a, opt);
    if (*equiv) return cmd_equiv(file_a, file_b, opt);
    if (*classes) return cmd_classes(cells, inputs, connected, out_file, opt);
    if (*synchrony) return cmd_synchrony(file_a, opt);
    if (*monoid) return cmd_monoid(file_a, fundamental, opt);
    if (*construct) {
      if (construct_what != "alg1" && construct_what != "dimension" &&
          cells == 0)
        throw CLI::ValidationError("construct " + construct_what +
                                   " requires --cells N");
      if (construct_what == "dimension" && cells == 0)
        throw CLI::ValidationError("construct dimension requires --cells N");
      return cmd_construct(construct_what, cells, input_file, opt);
    }
    if (*reproduce) {
      if (reproduce_what == "dim") return reproduce_dim(opt);
      if (reproduce_what == "table1") return reproduce_table1(opt);
      if (reproduce_what == "thm-48") return reproduce_thm48(opt);
      if (reproduce_what == "thm-synchrony") return reproduce_thm_synchrony(opt);
      if (reproduce_what == "prop-monoids") return reproduce_prop_monoids(opt);
      throw CLI::ValidationError("unknown reproduction \"" + reproduce_what +
                                 "\"");
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const cellnet::DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
