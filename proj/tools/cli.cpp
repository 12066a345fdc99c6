#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "modlift/classification.hpp"
#include "modlift/errors.hpp"
#include "modlift/group_cache.hpp"
#include "modlift/lift_engine.hpp"
#include "modlift/matrix_io.hpp"
#include "modlift/pascal_lemma.hpp"
#include "modlift/sl2.hpp"

namespace modlift::cli {
namespace {

struct FieldChoice {
  std::uint32_t p;
  unsigned r;
};

FieldChoice resolve_q(std::uint64_t q, bool allow_large) {
  const auto pr = factor_prime_power(q);
  if (!pr) throw DomainError("q=" + std::to_string(q) + " is not a prime power");
  if (!allow_large && !is_supported_q(q)) {
    throw DomainError("q=" + std::to_string(q) + " is outside the supported set {2,3,4,5,7,8,9}; pass --allow-large");
  }
  if (pr->first > 255) throw DomainError("p must be below 256");
  return {pr->first, pr->second};
}

LiftPath parse_path(const std::string& name) {
  if (name == "borel") return LiftPath::Borel;
  if (name == "full") return LiftPath::Full;
  return LiftPath::Both;
}

std::vector<std::string> slot_names(GroupPath path) {
  if (path == GroupPath::Borel) return {"alpha", "gamma"};
  return {"alpha", "beta", "gamma"};
}

void attach_cache(LiftOptions& options) {
  if (auto cache = GroupCache::from_environment()) options.group_source = cache->source();
}

struct RepArgs {
  std::uint64_t q = 0;
  std::string module;
  std::string out;
  bool allow_large = false;
};

int cmd_rep(const RepArgs& args, std::ostream& out) {
  const FieldChoice f = resolve_q(args.q, args.allow_large);
  const RepresentationSpec spec = RepresentationSpec::parse(f.p, f.r, args.module);
  const GaloisField field(f.p, f.r);
  const GeneratorImages images = generator_images(field, spec);

  std::error_code ec;
  std::filesystem::create_directories(args.out, ec);
  if (ec) throw IoError("cannot create " + args.out + ": " + ec.message());
  const std::pair<const char*, const ResidueMatrix*> files[] = {
      {"alpha", &images.alpha}, {"beta", &images.beta}, {"gamma", &images.gamma}};
  for (const auto& [name, m] : files) {
    const std::filesystem::path path = std::filesystem::path(args.out) / (std::string(name) + ".json");
    write_matrix_file(path, to_matrix_file(*m, f.r));
    out << path.string() << "  " << m->rows() << "x" << m->cols() << " over F_" << f.p << "\n";
  }
  return kOk;
}

struct CheckArgs {
  std::uint64_t q = 0;
  std::string module;
  unsigned s = 2;
  std::string path = "borel";
  std::string emit_witness;
  bool allow_large = false;
  std::size_t unknown_cap = kDefaultUnknownCap;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const FieldChoice f = resolve_q(args.q, args.allow_large);
  const RepresentationSpec spec = RepresentationSpec::parse(f.p, f.r, args.module);
  LiftOptions options;
  options.s_max = args.s;
  options.path = parse_path(args.path);
  options.unknown_cap = args.unknown_cap;
  attach_cache(options);

  const LiftReport report = lift_to_precision(spec, options);
  const bool reached = report.achieved_precision >= args.s;
  out << "module " << spec.label() << " over F_" << args.q << " (p=" << f.p << ", r=" << f.r << "), dimension "
      << report.dimension << "\n";
  out << "path " << to_string(options.path) << ", group order " << report.group_order << "\n";
  for (const LevelDiagnostics& level : report.levels) {
    out << "  p^" << level.from_level << " -> p^" << level.from_level + 1 << ": "
        << (level.consistent ? "consistent" : "inconsistent") << ", unknowns " << level.unknowns << ", equations "
        << level.equations << ", rank " << level.rank << ", nullity " << level.nullity << "\n";
  }
  if (report.full_path_liftable) {
    out << "full-group path: " << (*report.full_path_liftable ? "lift" : "no-lift") << " (agrees)\n";
  }
  out << "precision " << report.achieved_precision << " of " << args.s << "\n";
  out << (reached ? "lift" : "no-lift") << "\n";

  if (!args.emit_witness.empty() && report.liftable) {
    if (!witness_validate(report)) throw std::logic_error("witness failed validation");
    std::error_code ec;
    std::filesystem::create_directories(args.emit_witness, ec);
    if (ec) throw IoError("cannot create " + args.emit_witness + ": " + ec.message());
    const auto names = slot_names(report.path);
    const Witness& w = *report.witness;
    for (std::size_t slot = 0; slot < w.generator_images.size(); ++slot) {
      const std::filesystem::path path = std::filesystem::path(args.emit_witness) / (names[slot] + ".json");
      write_matrix_file(path, to_matrix_file(w.generator_images[slot], f.r));
      out << "witness " << path.string() << "\n";
    }
  }
  return reached ? kOk : kNegative;
}

struct TableArgs {
  std::uint64_t max_q = 9;
  unsigned s = 2;
  std::string format = "text";
  std::string path = "borel";
  bool expected = false;
  bool allow_large = false;
  bool timing = false;
  unsigned jobs = 1;
};

int cmd_table(const TableArgs& args, std::ostream& out) {
  TableOptions options;
  options.max_q = args.max_q;
  options.allow_large = args.allow_large;
  options.jobs = args.jobs;
  options.lift.s_max = args.s;
  options.lift.path = parse_path(args.path);
  attach_cache(options.lift);
  const std::vector<ClassificationRow> rows = classify_table(options);

  // A cell counts as a lift when it reaches the requested precision.
  auto decision = [&](const ClassificationRow& row) { return row.precision >= args.s; };
  std::size_t mismatches = 0;
  for (const ClassificationRow& row : rows) {
    if (args.expected && decision(row) != row.expected) ++mismatches;
  }

  if (args.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const ClassificationRow& row : rows) {
      nlohmann::json cell{{"q", row.q},
                          {"p", row.p},
                          {"r", row.r},
                          {"module", row.module},
                          {"decision", decision(row) ? "lift" : "no-lift"},
                          {"path", row.path},
                          {"precision", row.precision},
                          {"group_order", row.group_order},
                          {"seconds", row.seconds}};
      if (args.expected) cell["expected"] = row.expected ? "lift" : "no-lift";
      doc.push_back(std::move(cell));
    }
    out << doc.dump(2) << "\n";
  } else {
    out << std::left << std::setw(4) << "q" << std::setw(8) << "module" << std::setw(10) << "decision";
    if (args.expected) out << std::setw(10) << "expected";
    out << std::setw(7) << "path" << std::setw(11) << "precision" << "order";
    if (args.timing) out << "  seconds";
    out << "\n";
    for (const ClassificationRow& row : rows) {
      out << std::setw(4) << row.q << std::setw(8) << row.module << std::setw(10)
          << (decision(row) ? "lift" : "no-lift");
      if (args.expected) out << std::setw(10) << (row.expected ? "lift" : "no-lift");
      out << std::setw(7) << row.path << std::setw(11) << row.precision << row.group_order;
      if (args.timing) out << "  " << std::fixed << std::setprecision(3) << row.seconds;
      out << "\n";
    }
    if (args.expected) out << "mismatches: " << mismatches << "\n";
  }
  return mismatches == 0 ? kOk : kNegative;
}

struct PascalArgs {
  std::size_t n = 0;
  std::optional<unsigned> lmax;
};

int cmd_pascal(const PascalArgs& args, std::ostream& out) {
  if (args.n < 3) throw DomainError("--n must be at least 3");
  const unsigned lmax = args.lmax.value_or(static_cast<unsigned>(args.n - 2));
  if (lmax < 1 || lmax + 2 > args.n) {
    throw DomainError("--lmax must lie in 1.." + std::to_string(args.n - 2));
  }
  bool all = true;
  for (unsigned ell = 1; ell <= lmax; ++ell) {
    const PascalLemmaReport report = pascal_lemma_check(args.n, ell);
    for (const PascalIdentity& id : report.identities) {
      out << "l=" << ell << "  " << id.name << "  expected " << id.expected << "  got " << id.actual << "  "
          << (id.pass ? "pass" : "FAIL") << "\n";
    }
    all = all && report.all_pass();
  }
  out << (all ? "all identities hold" : "some identities fail") << "\n";
  return all ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lifting SL2(q) representations from F_p to Z/p^sZ", "modlift"};
  app.require_subcommand(1);

  RepArgs rep;
  auto* rep_cmd = app.add_subcommand("rep", "Write the generator images of a module as matrix files");
  rep_cmd->add_option("--q", rep.q, "Field size")->required();
  rep_cmd->add_option("--module", rep.module, "V1..Vp, Lambda, dual(...), twistK(...)")->required();
  rep_cmd->add_option("--out", rep.out, "Output directory")->required();
  rep_cmd->add_flag("--allow-large", rep.allow_large, "Permit q outside the supported set");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide whether a module lifts to Z/p^sZ");
  check_cmd->add_option("--q", check.q, "Field size")->required();
  check_cmd->add_option("--module", check.module, "Module label")->required();
  check_cmd->add_option("--s", check.s, "Target precision")->check(CLI::Range(2, 6));
  check_cmd->add_option("--path", check.path, "Group used for the decision")
      ->check(CLI::IsMember({"borel", "full", "both"}));
  check_cmd->add_option("--emit-witness", check.emit_witness, "Directory for witness generator images");
  check_cmd->add_option("--unknown-cap", check.unknown_cap, "Unknown limit for the full-group path");
  check_cmd->add_flag("--allow-large", check.allow_large, "Permit q outside the supported set");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Classify V1..Vp and Lambda for every q up to --max-q");
  table_cmd->add_option("--max-q", table.max_q, "Largest field size");
  table_cmd->add_option("--s", table.s, "Target precision")->check(CLI::Range(2, 6));
  table_cmd->add_option("--format", table.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  table_cmd->add_option("--path", table.path, "Group used for each decision")
      ->check(CLI::IsMember({"borel", "full", "both"}));
  table_cmd->add_option("--jobs", table.jobs, "Worker threads")->check(CLI::Range(1, 256));
  table_cmd->add_flag("--expected", table.expected, "Compare with the known classification");
  table_cmd->add_flag("--timing", table.timing, "Add wall time per cell to text output");
  table_cmd->add_flag("--allow-large", table.allow_large, "Include q outside the supported set");

  PascalArgs pascal;
  auto* pascal_cmd = app.add_subcommand("pascal", "Verify the Pascal matrix identities");
  pascal_cmd->add_option("--n", pascal.n, "Matrix size")->required();
  pascal_cmd->add_option("--lmax", pascal.lmax, "Largest exponent (default n-2)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*rep_cmd) return cmd_rep(rep, out);
    if (*check_cmd) return cmd_check(check, out);
    if (*table_cmd) return cmd_table(table, out);
    if (*pascal_cmd) return cmd_pascal(pascal, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCap;
  }
  return kInvalid;
}

}  // namespace modlift::cli
