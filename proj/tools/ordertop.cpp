// Command-line front end: finite poset/topology analyses plus order oracles
// for the countable counterexample gallery.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordertop/grammar.hpp"
#include "ordertop/suite.hpp"
#include "ordertop/topology.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kExhausted = 2;
constexpr int kUsage = 64;
constexpr int kDataError = 65;
constexpr int kInternal = 70;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ordertop::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordertop::FinitePoset load_poset(const std::string& path) {
  return ordertop::FinitePoset::parse_text(slurp(path));
}

std::vector<ordertop::ProductPoint> load_points(const std::string& path) {
  std::vector<ordertop::ProductPoint> out;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    out.push_back(ordertop::parse_product_point(line));
  }
  return out;
}

std::vector<ordertop::Nat> parse_letters(const std::string& csv) {
  std::vector<ordertop::Nat> out;
  std::string cur;
  std::istringstream ss(csv);
  while (std::getline(ss, cur, ',')) {
    if (cur.empty()) throw ordertop::ParseError("empty letter in list: " + csv);
    out.emplace_back(cur, 10);
  }
  return out;
}

int cmd_poset_check(const std::string& file) {
  try {
    ordertop::FinitePoset p = load_poset(file);
    std::cout << "ok: poset with " << p.size() << " elements\n";
    return kOk;
  } catch (const ordertop::CycleError& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return kRefuted;
  }
}

int cmd_poset_sober(const std::string& file) {
  auto space = ordertop::alexandrov_space(load_poset(file));
  std::cout << space.sobriety_json() << "\n";
  return kOk;
}

int cmd_poset_irreducibles(const std::string& file) {
  ordertop::FinitePoset p = load_poset(file);
  auto space = ordertop::alexandrov_space(p);
  for (const auto& c : space.irreducible_closed_sets()) {
    std::string line = "{";
    bool first = true;
    for (std::size_t i : c.indices()) {
      if (!first) line += ",";
      line += p.label(i);
      first = false;
    }
    std::cout << line << "}\n";
  }
  return kOk;
}

int cmd_poset_sigma(const std::string& file) {
  std::cout << ordertop::open_set_lattice(load_poset(file)).to_text();
  return kOk;
}

int cmd_poset_compare_product(const std::string& file_l, const std::string& file_p) {
  ordertop::FinitePoset l = load_poset(file_l);
  ordertop::FinitePoset p = load_poset(file_p);
  ordertop::FinitePoset sl = ordertop::open_set_lattice(l);
  ordertop::FinitePoset sp = ordertop::open_set_lattice(p);
  auto lhs = ordertop::product_space(ordertop::alexandrov_space(sl), ordertop::alexandrov_space(sp));
  auto rhs = ordertop::alexandrov_space(sl.product(sp));
  bool equal = ordertop::spaces_equal(lhs, rhs);
  bool sup_ok = ordertop::sup_map_jointly_continuous(sl).continuous &&
                ordertop::sup_map_jointly_continuous(sp).continuous;
  std::cout << (equal ? "equal" : "different") << " (" << lhs.opens().count()
            << " opens); sup map " << (sup_ok ? "continuous" : "discontinuous") << "\n";
  return equal && sup_ok ? kOk : kRefuted;
}

int cmd_poset_dot(const std::string& file) {
  std::cout << load_poset(file).to_dot();
  return kOk;
}

int cmd_gallery_leq(const std::string& sa, const std::string& sb) {
  ordertop::AnyElement a = ordertop::parse_element(sa);
  ordertop::AnyElement b = ordertop::parse_element(sb);
  if (a.index() != b.index())
    throw ordertop::ParseError("elements live in different structures");
  bool verdict = false;
  switch (a.index()) {
    case 0:
      verdict = ordertop::b_leq(std::get<0>(a), std::get<0>(b));
      break;
    case 1:
      verdict = ordertop::p1_leq(std::get<1>(a), std::get<1>(b));
      break;
    case 2:
      verdict = ordertop::p2_leq(std::get<2>(a), std::get<2>(b));
      break;
    default:
      verdict = ordertop::p12_leq(std::get<3>(a), std::get<3>(b));
      break;
  }
  std::cout << (verdict ? "true" : "false") << "\n";
  return verdict ? kOk : kRefuted;
}

int cmd_gallery_a_member(const std::string& sx, const std::string& sy) {
  ordertop::ProductPoint p{ordertop::parse_p1_point(sx), ordertop::parse_p2_point(sy)};
  auto witness = ordertop::a_member(p);
  if (witness) {
    std::cout << "true witness=" << ordertop::to_string(*witness) << "\n";
    return kOk;
  }
  std::cout << "false\n";
  return kRefuted;
}

int cmd_gallery_chain(const std::string& m1, const std::string& m2, const std::string& n,
                      const std::string& letters) {
  auto chain = ordertop::interleave_chain(ordertop::Nat(m1, 10), ordertop::Nat(m2, 10),
                                          ordertop::Nat(n, 10), parse_letters(letters));
  for (const auto& link : chain.links) {
    std::cout << link.rule << ": " << ordertop::to_string(link.lo) << " <= "
              << ordertop::to_string(link.hi) << "\n";
  }
  std::cout << "final: " << ordertop::to_string(chain.final_elem) << "\n";
  return kOk;
}

int cmd_gallery_escape(const std::string& f1, const std::string& f2, std::uint64_t budget) {
  auto r = ordertop::a_escape(load_points(f1), load_points(f2), budget);
  if (std::holds_alternative<ordertop::Exhausted>(r)) {
    std::cout << "exhausted budget=" << std::get<ordertop::Exhausted>(r).budget << "\n";
    return kExhausted;
  }
  std::cout << ordertop::to_string(std::get<ordertop::ProductPoint>(r)) << "\n";
  return kOk;
}

int cmd_gallery_suite(std::uint32_t bound, std::uint32_t samples, std::uint64_t seed) {
  ordertop::suite::SuiteConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.window.max_m = bound;
  cfg.window.max_n = bound;
  bool all = true;
  for (const auto& res : ordertop::suite::run_all(cfg)) {
    std::cout << (res.passed ? "[PASS] " : "[FAIL] ") << res.name << " (" << res.detail << ")\n";
    std::cerr << "  " << res.name << ": " << res.seconds << "s\n";
    all = all && res.passed;
  }
  return all ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite sobriety checks and countable dcpo order oracles"};
  app.require_subcommand(1);
  int rc = kUsage;
  std::string file, file2, elem_a, elem_b, letters;
  std::string m1, m2, n;
  std::uint64_t budget = 10000, seed = 0x0f2d5eed0001ull;
  std::uint32_t bound = 4, samples = 10;

  auto* poset = app.add_subcommand("poset", "finite poset and topology commands");
  poset->require_subcommand(1);
  auto* check = poset->add_subcommand("check", "validate the order axioms of a poset file");
  check->add_option("file", file)->required();
  check->callback([&] { rc = cmd_poset_check(file); });
  auto* sober = poset->add_subcommand("sober", "sobriety report as JSON");
  sober->add_option("file", file)->required();
  sober->callback([&] { rc = cmd_poset_sober(file); });
  auto* irr = poset->add_subcommand("irreducibles", "list the irreducible closed sets");
  irr->add_option("file", file)->required();
  irr->callback([&] { rc = cmd_poset_irreducibles(file); });
  auto* sigma = poset->add_subcommand("sigma", "emit the open-set lattice as a poset file");
  sigma->add_option("file", file)->required();
  sigma->callback([&] { rc = cmd_poset_sigma(file); });
  auto* cmp = poset->add_subcommand("compare-product",
                                    "compare product topology with the product-order topology");
  cmp->add_option("fileL", file)->required();
  cmp->add_option("fileP", file2)->required();
  cmp->callback([&] { rc = cmd_poset_compare_product(file, file2); });
  auto* dot = poset->add_subcommand("dot", "Hasse diagram in DOT format");
  dot->add_option("file", file)->required();
  dot->callback([&] { rc = cmd_poset_dot(file); });

  auto* gallery = app.add_subcommand("gallery", "countable counterexample order oracles");
  gallery->require_subcommand(1);
  auto* leq = gallery->add_subcommand("leq", "order query over the element grammar");
  leq->add_option("a", elem_a)->required();
  leq->add_option("b", elem_b)->required();
  leq->callback([&] { rc = cmd_gallery_leq(elem_a, elem_b); });
  auto* amem = gallery->add_subcommand("a-member", "membership of (p1, p2) in the witness set A");
  amem->add_option("p1", elem_a)->required();
  amem->add_option("p2", elem_b)->required();
  amem->callback([&] { rc = cmd_gallery_a_member(elem_a, elem_b); });
  auto* chain = gallery->add_subcommand("chain", "interleaving chain with per-link verdicts");
  chain->add_option("--m1", m1)->required();
  chain->add_option("--m2", m2)->required();
  chain->add_option("--n", n)->required();
  chain->add_option("--letters", letters, "comma-separated letters")->required();
  chain->callback([&] { rc = cmd_gallery_chain(m1, m2, n, letters); });
  auto* escape = gallery->add_subcommand("escape", "diagonal point of A avoiding two ideals");
  escape->add_option("--f1", file, "file of product points")->required();
  escape->add_option("--f2", file2, "file of product points")->required();
  escape->add_option("--budget", budget);
  escape->callback([&] { rc = cmd_gallery_escape(file, file2, budget); });
  auto* suite = gallery->add_subcommand("suite", "run the property suites");
  suite->add_option("--bound", bound, "truncation window bound");
  suite->add_option("--samples", samples, "base sample count (100 = full scale)");
  suite->add_option("--seed", seed);
  suite->callback([&] { rc = cmd_gallery_suite(bound, samples, seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage/message
    return e.get_exit_code() == 0 ? kOk : kUsage;
  } catch (const ordertop::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const ordertop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return rc;
}
