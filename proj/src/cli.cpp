#include "tcone/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tcone/cone.hpp"
#include "tcone/error.hpp"
#include "tcone/groebner.hpp"
#include "tcone/textio.hpp"

namespace tcone::cli {

namespace {

void add_common(CLI::App* sub, Invocation& inv) {
  sub->add_option("input", inv.input, "ideal file")->required();
  sub->add_option("--order", inv.order, "monomial order: lex, grlex or grevlex")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  sub->add_flag("--json", inv.json, "emit JSON instead of text");
}

void add_schedule(CLI::App* sub, Invocation& inv) {
  sub->add_option("--t0", inv.schedule.t0, "first ray parameter")->check(CLI::PositiveNumber);
  sub->add_option("--factor", inv.schedule.factor, "geometric factor between steps (> 1)");
  sub->add_option("--steps", inv.schedule.steps, "number of schedule steps")->check(CLI::PositiveNumber);
  sub->add_option("--decay-threshold", inv.thresholds.ratio_decay, "pass needs last/first below this");
  sub->add_option("--plateau-tolerance", inv.thresholds.plateau_tolerance, "relative spread counted as plateau");
}

void add_verify(CLI::App* sub, Invocation& inv, Command which, std::vector<std::pair<CLI::App*, Command>>& table) {
  add_common(sub, inv);
  sub->add_option("--seed", inv.seed, "random seed");
  switch (which) {
    case Command::VerifyRatio:
      sub->add_option("--direction", inv.direction, "direction v, e.g. \"0,0,1\"")->required();
      add_schedule(sub, inv);
      break;
    case Command::VerifyDistance:
      sub->add_option("--direction", inv.direction, "direction v, e.g. \"0,0,1\"")->required();
      add_schedule(sub, inv);
      sub->add_option("--residual-tolerance", inv.thresholds.residual_tolerance, "normalized residual for landing");
      sub->add_option("--perturbations", inv.perturbations, "random restarts per step")
          ->check(CLI::NonNegativeNumber);
      break;
    case Command::VerifySample:
      sub->add_option("--radius", inv.radius, "far-point radius R")->check(CLI::PositiveNumber);
      sub->add_option("--trials", inv.trials, "number of sampling trials")->check(CLI::PositiveNumber);
      sub->add_option("--sample-residual", inv.thresholds.sample_residual, "cone residual bound per direction");
      sub->add_option("--sample-fraction", inv.thresholds.sample_fraction, "fraction of directions that must pass");
      break;
    default:
      break;
  }
  table.emplace_back(sub, which);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return kSuccess;
    case Verdict::Fail:
      return kVerdictFail;
    case Verdict::Inconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

ComplexPoint parse_direction(const std::string& text, const VariableContext& ctx) {
  return ComplexPoint(parse_point(text, ctx).values);
}

}  // namespace

std::optional<Invocation> parse_arguments(const std::vector<std::string>& args, std::ostream& out,
                                          std::ostream& err, int& exit_code) {
  Invocation inv;
  CLI::App app{"Tangent cones at infinity of affine varieties", "tcone"};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, Command>> table;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the ideal");
  add_common(gb, inv);
  table.emplace_back(gb, Command::Gb);

  auto* cone = app.add_subcommand("cone", "tangent cone at infinity");
  add_common(cone, inv);
  table.emplace_back(cone, Command::Cone);

  auto* member = app.add_subcommand("member", "exact membership of a point in the cone at infinity");
  add_common(member, inv);
  member->add_option("--point", inv.point, "rational point, e.g. \"0,0,1\"")->required();
  table.emplace_back(member, Command::Member);

  add_verify(app.add_subcommand("verify-ratio", "growth-ratio test along a ray"), inv, Command::VerifyRatio, table);
  add_verify(app.add_subcommand("verify-distance", "distance-ratio test along a ray"), inv, Command::VerifyDistance,
             table);
  add_verify(app.add_subcommand("verify-sample", "far-point direction sampling (hypersurfaces)"), inv,
             Command::VerifySample, table);

  auto* verify = app.add_subcommand("verify", "numeric verification (ratio, distance, sample)");
  verify->require_subcommand(1);
  add_verify(verify->add_subcommand("ratio", "growth-ratio test along a ray"), inv, Command::VerifyRatio, table);
  add_verify(verify->add_subcommand("distance", "distance-ratio test along a ray"), inv, Command::VerifyDistance,
             table);
  add_verify(verify->add_subcommand("sample", "far-point direction sampling (hypersurfaces)"), inv,
             Command::VerifySample, table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    return std::nullopt;
  }
  for (const auto& [sub, which] : table) {
    if (sub->parsed()) inv.command = which;
  }
  if (!(inv.schedule.factor > 1.0)) {
    err << "error: --factor must be greater than 1\n";
    exit_code = kUsageError;
    return std::nullopt;
  }
  exit_code = kSuccess;
  return inv;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    const IdealFile file = parse_ideal(read_file(inv.input), inv.input);
    const MonomialOrder order = MonomialOrder::from_name(inv.order);

    switch (inv.command) {
      case Command::Gb: {
        const Basis basis = buchberger(file.polynomials, order);
        out << (inv.json ? render_json(basis) : render_text(basis));
        return kSuccess;
      }
      case Command::Cone: {
        const ConeDescription cone = tangent_cone_at_infinity(file.polynomials, order);
        out << (inv.json ? render_json(cone) : render_text(cone));
        return kSuccess;
      }
      case Command::Member: {
        const ParsedPoint point = parse_point(inv.point, *file.variables);
        if (!point.exact) throw Error("member needs a real rational point");
        const bool inside = cone_membership(tangent_cone_at_infinity(file.polynomials, order), *point.exact);
        if (inv.json) {
          out << "{\n  \"member\": " << (inside ? "true" : "false") << "\n}\n";
        } else {
          out << (inside ? "true" : "false") << "\n";
        }
        return kSuccess;
      }
      case Command::VerifyRatio:
      case Command::VerifyDistance: {
        const Basis basis = buchberger(file.polynomials, order);
        const ComplexPoint v = parse_direction(inv.direction, *file.variables);
        VerificationReport report;
        if (inv.command == Command::VerifyRatio) {
          report = loj_ratio_schedule(basis.generators, v, inv.schedule, inv.thresholds);
          report.seed = inv.seed;
        } else {
          DistanceOptions options;
          options.seed = inv.seed;
          options.perturbations = inv.perturbations;
          options.residual_tolerance = inv.thresholds.residual_tolerance;
          report = distance_ratio_report(basis.generators, v, inv.schedule, options, inv.thresholds);
        }
        out << (inv.json ? render_json(report) : render_text(report));
        return verdict_code(report.verdict);
      }
      case Command::VerifySample: {
        std::size_t nonzero = 0;
        for (const auto& p : file.polynomials) nonzero += p.is_zero() ? 0 : 1;
        if (nonzero != 1) {
          throw Error("verify sample works on hypersurfaces only; the ideal file has " + std::to_string(nonzero) +
                      " generators");
        }
        const Polynomial* f = nullptr;
        for (const auto& p : file.polynomials) {
          if (!p.is_zero()) f = &p;
        }
        const ConeDescription cone = tangent_cone_at_infinity(file.polynomials, order);
        const VerificationReport report = sampling_report(*f, cone, inv.radius, inv.trials, inv.seed, inv.thresholds);
        out << (inv.json ? render_json(report) : render_text(report));
        return verdict_code(report.verdict);
      }
    }
  } catch (const ParseError& e) {
    err << inv.input << ":" << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int code = kSuccess;
  const auto inv = parse_arguments(args, out, err, code);
  if (!inv) return code;
  return run(*inv, out, err);
}

}  // namespace tcone::cli
