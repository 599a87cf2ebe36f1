#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <json.hpp>
#include <sstream>

#include "monoalg/enumeration.hpp"
#include "monoalg/error.hpp"
#include "monoalg/homogeneity.hpp"
#include "monoalg/io.hpp"
#include "monoalg/iso.hpp"
#include "monoalg/orbits.hpp"
#include "monoalg/semilinear.hpp"
#include "monoalg/symbolic.hpp"

namespace monoalg::cli {

namespace {

// Keys keep insertion order so that reports read top to bottom.
using json = nlohmann::ordered_json;

// Exit status of a command that ran to completion.
enum Status { kOk = 0, kFails = 1, kError = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::optional<FiniteMonounary> finite;
  std::optional<PartialMonounary> partial;
  std::vector<std::vector<Element>> ops;
  std::optional<SymbolicAlgebra> symbolic;
  std::optional<Corpus> corpus;
};

std::string read_source(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw InvalidInput("cannot read " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

// More than one table line, or a "#" header, means a corpus file.
bool looks_like_corpus(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t tables = 0;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') return true;
    if (!looks_like_table(line) || line[first] == '{' || line[first] == '[') return false;
    ++tables;
  }
  return tables > 1;
}

Input load(const std::string& arg) {
  const std::string text = read_source(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  Input in;
  if (first != std::string::npos && text[first] == '{' && text.find("\"ops\"") != std::string::npos) {
    in.ops = parse_multiunary(text);
  } else if (looks_like_corpus(text)) {
    std::istringstream stream(text);
    in.corpus = read_corpus(stream);
  } else if (looks_like_table(text)) {
    PartialMonounary p = parse_partial_table(text);
    if (p.is_total()) in.finite = p.to_total();
    in.partial = std::move(p);
  } else {
    in.symbolic = parse_symbolic(text);
  }
  return in;
}

const FiniteMonounary& need_finite(const Input& in) {
  if (!in.finite) throw UsageError("this command needs a finite table with every entry defined");
  return *in.finite;
}

const SymbolicAlgebra& need_symbolic(const Input& in) {
  if (!in.symbolic) throw UsageError("this command needs a symbolic expression such as \"2*A[3; w, 2]\"");
  return *in.symbolic;
}

json cardinal_json(Cardinal c) { return c.is_omega() ? json("w") : json(c.value()); }

json symbolic_properties(const SymbolicAlgebra& s) {
  return {{"normal_form", to_string(s)},
          {"locally_finite", is_locally_finite(s)},
          {"ulf", is_ulf(s)},
          {"o1", cardinal_json(o1(s))},
          {"omega_categorical", is_omega_categorical(s)},
          {"uh", is_ultrahomogeneous(s)},
          {"homogeneous", is_homogeneous(s)},
          {"transitive", is_transitive(s)},
          {"phom", is_partially_homogeneous(s)}};
}

json lattice_json(const FiniteMonounary& a, std::size_t bound) {
  const LatticeReport r = classify_lattice(a, bound);
  const auto pattern = partial_pattern(a);
  return {{"f", a.table()},
          {"transitive", r.transitive},
          {"phom1", r.partially_1_homogeneous},
          {"phom2", r.partially_2_homogeneous},
          {"phom", r.partially_homogeneous},
          {"uh", r.ultrahomogeneous},
          {"homogeneous", r.homogeneous},
          {"hom2", r.homogeneous_2},
          {"hom1", r.homogeneous_1},
          {"pattern", pattern ? json(to_string(*pattern)) : json(nullptr)},
          {"violations", r.violations()}};
}

std::vector<std::vector<Element>> group_orbits(const std::vector<Permutation>& group, std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<char> seen(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x] != 0) continue;
    std::vector<Element> orbit;
    for (const auto& g : group) {
      const auto y = static_cast<std::size_t>(g[x]);
      if (seen[y] == 0) {
        seen[y] = 1;
        orbit.push_back(static_cast<Element>(y));
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int main(const std::vector<std::string>& args) {
    CLI::App app{"Monounary algebras: isomorphism, orbits, homogeneity and symbolic normal forms", "monoalg"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", json_, "Print reports as JSON");
    app.add_flag("--oracle", oracle_, "Use brute-force oracles instead of the fast deciders");
    app.add_option("--bound", bound_, "Largest algebra the brute-force oracles accept (default: $MONOALG_BOUND or 8)")
        ->check(CLI::PositiveNumber);

    auto* analyze = app.add_subcommand("analyze", "Structure and properties of an algebra");
    analyze->add_option("input", input_, "Table, symbolic expression, or file")->required();

    auto* iso = app.add_subcommand("iso", "Decide isomorphism of two finite algebras");
    iso->add_option("first", input_, "First table or file")->required();
    iso->add_option("second", second_, "Second table or file")->required();

    auto* aut = app.add_subcommand("aut", "Automorphism group");
    aut->add_option("input", input_)->required();
    aut->add_option("--max", max_list_, "List the automorphisms only if there are at most this many")
        ->capture_default_str();

    auto* orbits = app.add_subcommand("orbits", "n-orbit profile o_1, ..., o_n");
    orbits->add_option("input", input_)->required();
    orbits->add_option("--n", n_, "Largest arity")->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "Check one property; exit 0 if it holds, 1 if not");
    check->add_option("property", property_,
                      "uh, 1uh, hom, hom-n, phom, phom-n, transitive, omega-cat, ulf, lf, pseudoforest-uh, multi-uh")
        ->required();
    check->add_option("input", input_)->required();
    check->add_option("--n", n_, "Subalgebra size for hom-n and phom-n")->check(CLI::PositiveNumber);

    auto* classify = app.add_subcommand("classify", "Membership in every class of the lattice of conditions");
    classify->add_option("input", input_, "Table, symbolic expression, or corpus file")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Normal form of a finite ultrahomogeneous algebra");
    decompose_cmd->add_option("input", input_)->required();

    auto* limit = app.add_subcommand("limit", "Fraisse limit F or F_k");
    limit->add_option("--kind", kind_, "F or Fk")->required()->check(CLI::IsMember({"F", "Fk"}));
    limit->add_option("--k", k_, "Preimage bound for Fk")->check(CLI::PositiveNumber);

    auto* instantiate_cmd = app.add_subcommand("instantiate", "Finite table of a symbolic algebra");
    instantiate_cmd->add_option("input", input_)->required();
    instantiate_cmd->add_option("--w", w_, "Value substituted for w")->required()->check(CLI::PositiveNumber);

    auto* truncate_cmd = app.add_subcommand("truncate", "Cut every profile to at most h levels");
    // "-h" would clash with --h.
    truncate_cmd->set_help_flag("--help", "Print this help message and exit");
    truncate_cmd->add_option("input", input_)->required();
    truncate_cmd->add_option("--h", h_, "Number of levels kept")->required();
    truncate_cmd->add_option("--max-cycle", max_cycle_, "Expand families up to this cycle size")
        ->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "Algebras of size n up to isomorphism");
    enumerate->add_option("--n", n_, "Size")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--threads", threads_, "Worker threads (0: hardware concurrency)");
    enumerate->add_flag("--count", count_only_, "Print the counts for sizes 1..n only");
    enumerate->add_flag("--random", random_, "Print one uniformly random table of size n instead");
    enumerate->add_option("--seed", seed_, "Seed for --random")->capture_default_str();

    auto* semilinear = app.add_subcommand("semilinear", "Induced order on A_c and its automorphisms");
    semilinear->add_option("input", input_)->required();
    semilinear->add_option("--root", root_, "Cyclic element c")->required();

    auto* dot = app.add_subcommand("export-dot", "Relational form as a Graphviz digraph");
    dot->add_option("input", input_)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      if (!args.empty() && !args.front().starts_with("-") && app.get_subcommand_no_throw(args.front()) == nullptr) {
        err_ << "error: unknown command '" << args.front() << "'\n";
      } else {
        err_ << "error: " << e.what() << "\n";
      }
      return kError;
    }

    bound_ = bound_ != 0 ? bound_ : oracle_bound_from_env();
    try {
      const std::string verb = app.get_subcommands().front()->get_name();
      if (verb == "analyze") return do_analyze();
      if (verb == "iso") return do_iso();
      if (verb == "aut") return do_aut();
      if (verb == "orbits") return do_orbits();
      if (verb == "check") return do_check();
      if (verb == "classify") return do_classify();
      if (verb == "decompose") return do_decompose();
      if (verb == "limit") return do_limit();
      if (verb == "instantiate") return do_instantiate();
      if (verb == "truncate") return do_truncate();
      if (verb == "enumerate") return do_enumerate();
      if (verb == "semilinear") return do_semilinear();
      return do_dot();
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << "\n";
    } catch (const BoundExceeded& e) {
      err_ << "error: " << e.what() << "\n";
    } catch (const InvalidInput& e) {
      err_ << "error: " << e.what() << "\n";
    }
    return kError;
  }

 private:
  void emit(const json& report) {
    if (json_) {
      out_ << report.dump() << "\n";
      return;
    }
    for (const auto& [key, value] : report.items()) {
      out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }

  int verdict(const std::string& key, bool holds, json extra = json::object()) {
    json report{{key, holds}};
    report.update(extra);
    emit(report);
    return holds ? kOk : kFails;
  }

  int do_analyze() {
    const Input in = load(input_);
    if (in.symbolic) {
      json r{{"kind", "symbolic"}};
      r.update(symbolic_properties(*in.symbolic));
      emit(r);
      return kOk;
    }
    if (!in.ops.empty()) {
      const MultiunaryVerdict v = multiunary_brute_check(in.ops, bound_);
      emit({{"kind", "multiunary"}, {"n", in.ops.front().size()}, {"ops", in.ops},
            {"uh1", v.one_ultrahomogeneous}, {"uh", v.ultrahomogeneous}});
      return kOk;
    }
    if (in.corpus) throw UsageError("analyze takes one algebra; use classify for a corpus");
    if (!in.finite) {
      const PartialMonounary& p = *in.partial;
      const bool loops = p.has_loop();
      emit({{"kind", "partial"}, {"n", p.size()}, {"f", json::parse(to_json(p))["f"]}, {"domain", p.domain()},
            {"loop_free", !loops},
            {"pseudoforest_uh", loops ? json(nullptr) : json(pseudoforest_ultrahomogeneous(p))}});
      return kOk;
    }
    const FiniteMonounary& a = *in.finite;
    const StructureReport s = structure_report(a);
    const bool uh = is_ultrahomogeneous(a);
    const auto pattern = partial_pattern(a);
    emit({{"kind", "finite"},
          {"n", a.size()},
          {"f", a.table()},
          {"components", s.components},
          {"cycle_sizes", s.cycle_sizes},
          {"cyclic", s.cyclic},
          {"leaves", s.leaves},
          {"height", s.height},
          {"automorphisms", automorphism_count(a)},
          {"one_orbits", one_orbits(a)},
          {"transitive", is_transitive(a)},
          {"uh", uh},
          {"phom", pattern.has_value()},
          {"pattern", pattern ? json(to_string(*pattern)) : json(nullptr)},
          {"normal_form", uh ? json(to_string(decompose(a))) : json(nullptr)}});
    return kOk;
  }

  int do_iso() {
    const FiniteMonounary a = need_finite(load(input_));
    const FiniteMonounary b = need_finite(load(second_));
    std::optional<std::vector<Element>> map;
    if (oracle_) {
      if (a.size() > bound_) throw BoundExceeded("isomorphism oracle: size exceeds the oracle bound");
      if (a.size() == b.size()) {
        // Every bijection, in lexicographic order.
        std::vector<Element> pi(a.size());
        std::iota(pi.begin(), pi.end(), 0);
        do {
          bool ok = true;
          for (std::size_t x = 0; x < a.size() && ok; ++x) ok = pi[static_cast<std::size_t>(a.table()[x])] == b(pi[x]);
          if (ok) {
            map = pi;
            break;
          }
        } while (std::next_permutation(pi.begin(), pi.end()));
      }
    } else {
      map = extend_to_isomorphism(a, b, {});
    }
    return verdict("isomorphic", map.has_value(), {{"isomorphism", map ? json(*map) : json(nullptr)}});
  }

  int do_aut() {
    const FiniteMonounary a = need_finite(load(input_));
    if (oracle_) {
      const auto group = brute_force_automorphisms(a, bound_);
      emit({{"count", group.size()}, {"automorphisms", group}});
      return kOk;
    }
    const std::uint64_t count = automorphism_count(a);
    json r{{"count", count}};
    r["automorphisms"] = count <= max_list_ ? json(enumerate_automorphisms(a, max_list_)) : json(nullptr);
    emit(r);
    return kOk;
  }

  int do_orbits() {
    const FiniteMonounary a = need_finite(load(input_));
    const std::size_t k = n_ == 0 ? 1 : n_;
    std::vector<std::uint64_t> profile;
    if (oracle_) {
      for (std::size_t i = 1; i <= k; ++i) profile.push_back(n_orbit_count_bruteforce(a, i, kDefaultTupleBound, bound_));
    } else {
      profile = orbit_profile(a, k);
    }
    emit({{"profile", profile}});
    return kOk;
  }

  std::size_t need_n(const char* prop) const {
    if (n_ == 0) throw UsageError(std::string(prop) + " needs --n");
    return n_;
  }

  int do_check() {
    const Input in = load(input_);
    const std::string& p = property_;
    static const std::map<std::string, std::string> keys{
        {"uh", "uh"},           {"1uh", "uh1"},     {"hom", "homogeneous"},       {"hom-n", "hom_n"},
        {"phom", "phom"},       {"phom-n", "phom_n"}, {"transitive", "transitive"}, {"omega-cat", "omega_categorical"},
        {"ulf", "ulf"},         {"lf", "locally_finite"}, {"pseudoforest-uh", "pseudoforest_uh"},
        {"multi-uh", "multi_uh"}};
    const auto key = keys.find(p);
    if (key == keys.end()) throw UsageError("unknown property '" + p + "'");

    if (in.symbolic) {
      const SymbolicAlgebra& s = *in.symbolic;
      if (p == "uh" || p == "1uh") return verdict(key->second, is_ultrahomogeneous(s));
      if (p == "hom") return verdict(key->second, is_homogeneous(s));
      if (p == "phom") return verdict(key->second, is_partially_homogeneous(s));
      if (p == "transitive") return verdict(key->second, is_transitive(s));
      if (p == "omega-cat") return verdict(key->second, is_omega_categorical(s));
      if (p == "ulf") return verdict(key->second, is_ulf(s));
      if (p == "lf") return verdict(key->second, is_locally_finite(s));
      throw UsageError("property '" + p + "' is not available for symbolic input");
    }
    if (!in.ops.empty()) {
      const MultiunaryVerdict v = multiunary_brute_check(in.ops, bound_);
      if (p == "uh" || p == "multi-uh") return verdict(key->second, v.ultrahomogeneous);
      if (p == "1uh") return verdict(key->second, v.one_ultrahomogeneous);
      throw UsageError("property '" + p + "' is not available for several operations");
    }
    if (in.corpus) throw UsageError("check takes one algebra; use classify for a corpus");
    if (p == "pseudoforest-uh") {
      const PartialMonounary& g = *in.partial;
      return verdict(key->second, oracle_ ? digraph_ultrahomogeneous_oracle(g, bound_) : pseudoforest_ultrahomogeneous(g));
    }
    const FiniteMonounary& a = need_finite(in);
    if (p == "uh") return verdict(key->second, oracle_ ? is_ultrahomogeneous_oracle(a, bound_) : is_ultrahomogeneous(a));
    // 1-ultrahomogeneity and ultrahomogeneity coincide for monounary algebras,
    // so the fast path answers both.
    if (p == "1uh") return verdict(key->second, oracle_ ? is_1_ultrahomogeneous_oracle(a, bound_) : is_ultrahomogeneous(a));
    if (p == "hom") {
      if (!oracle_) return verdict(key->second, is_ultrahomogeneous(a));
      bool all = true;
      for (std::size_t k = 1; k <= a.size() && all; ++k) all = is_n_homogeneous(a, k, bound_);
      return verdict(key->second, all);
    }
    if (p == "hom-n") {
      const std::size_t k = need_n("hom-n");
      return verdict(key->second, is_n_homogeneous(a, k, bound_), {{"n", k}});
    }
    if (p == "phom-n") {
      const std::size_t k = need_n("phom-n");
      return verdict(key->second, is_partially_n_homogeneous(a, k, bound_), {{"n", k}});
    }
    if (p == "phom") {
      return verdict(key->second, oracle_ ? is_partially_homogeneous_oracle(a, bound_) : is_partially_homogeneous(a));
    }
    if (p == "transitive") {
      if (!oracle_) return verdict(key->second, is_transitive(a));
      return verdict(key->second, group_orbits(brute_force_automorphisms(a, bound_), a.size()).size() == 1);
    }
    // Finite algebras are uniformly locally finite and ω-categorical.
    if (p == "omega-cat" || p == "ulf" || p == "lf") return verdict(key->second, true);
    throw UsageError("property '" + p + "' needs several operations");
  }

  int do_classify() {
    const Input in = load(input_);
    if (in.symbolic) {
      emit(symbolic_properties(*in.symbolic));
      return kOk;
    }
    if (in.corpus) {
      json reports = json::array();
      std::size_t violations = 0;
      for (const auto& a : in.corpus->representatives) {
        reports.push_back(lattice_json(a, bound_));
        violations += reports.back()["violations"].size();
      }
      if (json_) {
        emit({{"n", in.corpus->n}, {"count", reports.size()}, {"violations", violations}, {"reports", reports}});
      } else {
        for (const auto& r : reports) {
          out_ << json(r["f"]).dump() << (r["uh"].get<bool>() ? " uh" : "") << (r["phom"].get<bool>() ? " phom" : "")
               << (r["transitive"].get<bool>() ? " transitive" : "");
          for (const auto& v : r["violations"]) out_ << " [violates " << v.get<std::string>() << "]";
          out_ << "\n";
        }
        out_ << "# " << reports.size() << " algebras, " << violations << " violations\n";
      }
      return kOk;
    }
    emit(lattice_json(need_finite(in), bound_));
    return kOk;
  }

  int do_decompose() {
    emit({{"normal_form", to_string(decompose(need_finite(load(input_))))}});
    return kOk;
  }

  int do_limit() {
    if (kind_ == "Fk" && k_ == 0) throw UsageError("--kind Fk needs --k");
    const SymbolicAlgebra s = kind_ == "F" ? fraisse_limit(LimitKind::kAll) : fraisse_limit(LimitKind::kBounded, k_);
    emit(symbolic_properties(s));
    return kOk;
  }

  int do_instantiate() {
    const FiniteMonounary a = instantiate(need_symbolic(load(input_)), w_);
    if (json_) {
      out_ << to_json(a) << "\n";
    } else {
      out_ << "f:";
      for (Element x : a.table()) out_ << ' ' << x;
      out_ << "\n";
    }
    return kOk;
  }

  int do_truncate() {
    SymbolicAlgebra s = truncate(need_symbolic(load(input_)), h_);
    if (max_cycle_ != 0) s = materialize(s, max_cycle_);
    emit({{"normal_form", to_string(s)}});
    return kOk;
  }

  int do_enumerate() {
    if (random_) {
      const FiniteMonounary a = random_algebra(n_, seed_);
      emit(json::parse(to_json(a)));
      return kOk;
    }
    if (n_ > kMaxEnumerationSize) {
      throw BoundExceeded("enumeration is limited to n <= " + std::to_string(kMaxEnumerationSize));
    }
    if (count_only_) {
      emit({{"counts", counts(n_, threads_)}});
      return kOk;
    }
    const Corpus corpus = enumerate_up_to_iso(n_, threads_);
    if (json_) {
      json tables = json::array();
      for (const auto& a : corpus.representatives) tables.push_back(a.table());
      emit({{"n", corpus.n}, {"count", tables.size()}, {"tables", tables}});
    } else {
      write_corpus(out_, corpus);
    }
    return kOk;
  }

  int do_semilinear() {
    const FiniteMonounary a = need_finite(load(input_));
    const InducedPoset p = build_order(a, root_);
    const AutEquality eq = check_aut_equality(a, root_, bound_);
    emit({{"root", root_},
          {"elements", p.elements},
          {"covers", p.covers},
          {"equal", eq.equal},
          {"automorphisms", eq.algebra_side},
          {"difference", eq.difference}});
    return eq.equal ? kOk : kFails;
  }

  int do_dot() {
    const Input in = load(input_);
    if (!in.partial) throw UsageError("export-dot needs a table");
    const std::string dot = to_dot(*in.partial);
    if (json_) {
      out_ << json{{"dot", dot}}.dump() << "\n";
    } else {
      out_ << dot;
    }
    return kOk;
  }

  std::ostream& out_;
  std::ostream& err_;

  bool json_ = false;
  bool oracle_ = false;
  std::size_t bound_ = 0;
  std::string input_;
  std::string second_;
  std::string property_;
  std::size_t n_ = 0;
  std::uint64_t max_list_ = 1000;
  std::string kind_;
  std::uint64_t k_ = 0;
  std::uint64_t w_ = 0;
  std::uint64_t h_ = 0;
  std::uint64_t max_cycle_ = 0;
  unsigned threads_ = 0;
  bool count_only_ = false;
  bool random_ = false;
  std::uint64_t seed_ = 1;
  Element root_ = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).main(args);
}

}  // namespace monoalg::cli
