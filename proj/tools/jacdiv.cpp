// Command-line driver: reads a map file and runs one pipeline stage.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jacdiv/degree2.hpp"
#include "jacdiv/errors.hpp"
#include "jacdiv/geometry.hpp"
#include "jacdiv/parser.hpp"
#include "jacdiv/report.hpp"

namespace {

using namespace jacdiv;

struct Flags {
  std::string map_file;
  std::optional<std::uint64_t> seed;
  std::optional<int> bound;
  std::optional<int> max_degree;
  std::optional<std::string> order;
  bool json = false;
  bool no_timing = false;
  std::string point;
  std::optional<std::size_t> factor_index;
  std::string expr;
};

constexpr std::uint64_t kDefaultSeed = 20240611;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open map file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class Driver {
 public:
  Driver(const std::string& command, const Flags& flags)
      : command_(command), flags_(flags), spec_(parse_map(read_file(flags.map_file))), map_(spec_.map()) {
    options_.seed = flags.seed.value_or(spec_.seed.value_or(kDefaultSeed));
    options_.bound = flags.bound.value_or(spec_.bound.value_or(1000));
    if (flags.max_degree) options_.groebner.max_degree = *flags.max_degree;
    order_ = flags.order.value_or(spec_.order.value_or("grevlex"));
    report_.seed = options_.seed;
    report_.variables = map_.ctx().names();
    report_.image_variables = image_ctx(map_.ctx()).names();
  }

  int run() {
    auto start = std::chrono::steady_clock::now();
    if (command_ == "jacobian") {
      jacobian();
    } else if (command_ == "classify") {
      classify();
    } else if (command_ == "image") {
      image();
    } else if (command_ == "fiber") {
      fiber_stage();
    } else if (command_ == "degree") {
      degree();
    } else if (command_ == "involution") {
      involution_stage();
    } else if (command_ == "verify") {
      verify();
    } else {
      everything();
    }
    if (!flags_.no_timing) {
      report_.timing = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (flags_.json) {
      std::cout << to_json(report_);
    } else {
      std::cout << text_.str();
      if (report_.timing) std::cout << "time: " << *report_.timing << " s\n";
      std::cout << "seed: " << report_.seed << "\n";
    }
    return 0;
  }

 private:
  void jacobian() {
    Poly jac = jacobian_det(map_);
    report_.jacobian = render(jac);
    text_ << "jacobian: " << render(jac) << "\n";
    if (!jac.is_constant()) {
      auto f = factor(jac, options_.factor);
      text_ << "factors: " << to_string(f.unit);
      for (const auto& [h, m] : f.factors) text_ << " * (" << render(h) << ")" << (m > 1 ? "^" + std::to_string(m) : "");
      text_ << "\n";
    }
  }

  const std::vector<DivisorReport>& divisors() {
    if (!divisors_) divisors_ = classify_jacobian_divisors(map_, options_);
    return *divisors_;
  }

  void classify() {
    if (!report_.jacobian) {
      report_.jacobian = render(jacobian_det(map_));
      text_ << "jacobian: " << *report_.jacobian << "\n";
    }
    report_.divisor_reports.clear();
    if (divisors().empty()) text_ << "no divisors: the Jacobian determinant is constant\n";
    std::size_t k = 1;
    for (const auto& d : divisors()) {
      auto e = to_entry(d);
      text_ << "[" << k++ << "] " << e.factor << "  multiplicity " << e.multiplicity << "  " << e.divisor_class
            << "  (irreducibility " << e.irreducibility << ")\n";
      if (e.witness) text_ << "    witness: " << e.witness->first << ", " << e.witness->second << "\n";
      if (e.image_polynomial) text_ << "    image polynomial: " << *e.image_polynomial << "\n";
      if (e.branching_quotient) text_ << "    pullback / h^2: " << *e.branching_quotient << "\n";
      if (e.conormal) text_ << "    conormal check: " << (*e.conormal ? "true" : "false") << "\n";
      report_.divisor_reports.push_back(std::move(e));
    }
  }

  void image() {
    Poly h(map_.ctx());
    if (!flags_.expr.empty()) {
      h = parse_poly(flags_.expr, map_.ctx());
    } else {
      std::size_t k = flags_.factor_index.value_or(1);
      const auto& ds = divisors();
      if (k == 0 || k > ds.size()) throw InputError("image: factor index out of range");
      h = ds[k - 1].factor;
    }
    auto img = image_closure(h, map_, options_.groebner);
    std::vector<Poly> gens = img.basis();
    if (order_ == "lex" && !img.is_zero_ideal()) {
      gens = buchberger(Ideal(img.ctx(), gens), MonomialOrder::lex(img.ctx().size()), options_.groebner).basis();
    }
    ImageEntry e;
    e.factor = render(h);
    for (const auto& g : gens) e.ideal.push_back(render(g));
    e.dimension = ideal_dimension(img);
    text_ << "image of V(" << e.factor << "): <";
    for (std::size_t i = 0; i < e.ideal.size(); ++i) text_ << (i ? ", " : "") << e.ideal[i];
    text_ << ">  dimension " << e.dimension << "\n";
    if (e.dimension == static_cast<int>(map_.size()) - 1) {
      e.image_polynomial = render(image_polynomial(h, map_, options_.groebner));
      text_ << "image polynomial: " << *e.image_polynomial << "\n";
    } else {
      text_ << "contracted\n";
    }
    report_.image = std::move(e);
  }

  void fiber_stage() {
    if (flags_.point.empty()) throw InputError("fiber: --point is required");
    auto target = parse_point(flags_.point);
    auto f = fiber(map_, target, options_.groebner);
    report_.fiber = to_entry(f, target);
    if (f.finite) {
      text_ << "fiber: finite, " << f.count << " point(s) counted with multiplicity\n";
      for (const auto& p : report_.fiber->solutions) {
        text_ << "  (";
        for (std::size_t i = 0; i < p.size(); ++i) text_ << (i ? ", " : "") << p[i];
        text_ << ")\n";
      }
    } else {
      text_ << "fiber: infinite, dimension " << f.dimension << "\n";
    }
  }

  void degree() {
    report_.degree = map_degree(map_, options_);
    text_ << "degree: " << *report_.degree << "\n";
  }

  const Involution& theta() {
    if (!theta_) theta_ = involution(map_, options_);
    return *theta_;
  }

  void involution_stage() {
    const auto& t = theta();
    std::vector<std::string> comps;
    for (const auto& c : t.components) comps.push_back(render(c));
    report_.involution_components = comps;
    report_.verification_flags["map_invariant"] = t.preserves_map;
    report_.verification_flags["involutive"] = t.is_involutive;
    report_.verification_flags["jacobian_anti_invariant"] = t.negates_jacobian;
    text_ << "involution:\n";
    for (std::size_t i = 0; i < comps.size(); ++i) text_ << "  " << map_.ctx().name(i) << " -> " << comps[i] << "\n";
    text_ << std::boolalpha << "phi o theta = phi: " << t.preserves_map << "\ntheta o theta = id: " << t.is_involutive
          << "\n";
  }

  bool has_contracted() {
    for (const auto& d : divisors()) {
      if (d.divisor_class == DivisorClass::Contracted) return true;
    }
    return false;
  }

  void verify() {
    if (!report_.degree) degree();
    if (*report_.degree != 2) throw InputError("verify: the map has degree " + std::to_string(*report_.degree));
    involution_stage();
    Poly s = normalize(jacobian_det(map_));
    auto& flags = report_.verification_flags;
    flags["anti_invariance"] = verify_anti_invariance(theta(), s);
    flags["auxiliary_gcd"] = auxiliary_gcd_check(map_, s);
    if (!has_contracted()) {
      auto a = anti_invariant(map_, options_);
      report_.anti_invariant = to_entry(a);
      flags["denominators_in_subalgebra"] = denominator_check(theta(), map_, options_.groebner);
      text_ << "anti-invariant: s = " << report_.anti_invariant->s << ", S = " << report_.anti_invariant->S
            << ", jacobian = " << report_.anti_invariant->scale << " * s\n";
    }
    for (const auto& [k, v] : flags) text_ << k << ": " << (v ? "true" : "false") << "\n";
  }

  void everything() {
    jacobian();
    Poly jac = jacobian_det(map_);
    if (jac.is_zero()) {
      text_ << "map is not dominant\n";
      return;
    }
    classify();
    degree();
    if (*report_.degree == 2) verify();
  }

  std::string command_;
  Flags flags_;
  MapSpec spec_;
  PolyMap map_;
  GeometryOptions options_;
  std::string order_;
  Report report_;
  std::ostringstream text_;
  std::optional<std::vector<DivisorReport>> divisors_;
  std::optional<Involution> theta_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian divisors, branching and degree-two involutions of polynomial maps"};
  app.require_subcommand(1, 1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"jacobian", "Jacobian determinant and its factorization"},
      {"classify", "Classify each irreducible factor of the Jacobian"},
      {"image", "Image closure of a hypersurface V(h)"},
      {"fiber", "Preimage of a point"},
      {"degree", "Degree of the map by generic fiber counting"},
      {"involution", "Deck involution of a degree-two map"},
      {"verify", "Degree-two identities: anti-invariance, denominators, auxiliary gcd"},
      {"report", "Everything applicable"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("map", flags.map_file, "Map file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", flags.seed, "Random seed (default from the map file, else 20240611)");
    sub->add_option("--bound", flags.bound, "Sampling box [-B, B] for random points (default 1000)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-degree", flags.max_degree, "Groebner degree cap (default 40)")->check(CLI::PositiveNumber);
    sub->add_option("--order", flags.order, "Order for printed ideals")->check(CLI::IsMember({"lex", "grevlex"}));
    sub->add_flag("--json", flags.json, "Print the report as JSON");
    sub->add_flag("--no-timing", flags.no_timing, "Omit wall time so output is reproducible");
    if (name == "fiber") sub->add_option("--point", flags.point, "Target point, e.g. 1,-2/3")->required();
    if (name == "image") {
      sub->add_option("--factor", flags.factor_index, "1-based index into the classify output");
      sub->add_option("--expr", flags.expr, "Polynomial h defining the hypersurface");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    return Driver(app.get_subcommands().front()->get_name(), flags).run();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "INVARIANT VIOLATION (contradicts the theory): " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
