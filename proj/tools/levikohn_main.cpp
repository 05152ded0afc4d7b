#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "levikohn/commands.hpp"
#include "levikohn/error.hpp"
#include "levikohn/problem.hpp"

namespace {

int fail(int code, const std::string& msg) {
  std::cerr << "levikohn: " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace levikohn;

  CLI::App app{"Levi-form analysis and Kohn multiplier ideals for polynomial domains", "levikohn"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "json";
  CommandFlags flags;
  std::string fields;

  const char* commands[][2] = {
      {"levi", "symbolic Levi matrix on the graph frame, trace and determinant"},
      {"classify", "eigen-signature, q-convexity margin and Z(q) at points and samples"},
      {"kohn", "run the multiplier-ideal chain; on a stuck chain also compute holomorphic dimension"},
      {"holdim", "holomorphic dimension of a variety in the boundary"},
      {"brackets", "Lie bracket flag of vector fields tangent to a submanifold"},
      {"tangency", "order of tangency of a holomorphic map to the boundary"},
      {"ctangent", "check that a submanifold of the boundary is complex tangential"}};

  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, "problem file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--q", flags.q, "form degree q");
    sub->add_option("--max-steps", flags.max_steps, "chain steps (kohn) or bracket depth (brackets)");
    sub->add_option("--samples", flags.samples, "number of sample points");
    sub->add_option("--seed", flags.seed, "random seed");
    sub->add_option("--tol", flags.tol, "numerical tolerance");
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--metric", flags.metric, "euclidean, graph, or a metric named in the problem file");
    sub->add_option("--max-order", flags.max_order, "largest tangency order examined");
    sub->add_option("--map", flags.map, "holomorphic map name");
    sub->add_option("--variety", flags.variety, "variety name");
    sub->add_option("--point", flags.point, "point name");
    sub->add_option("--fields", fields, "comma-separated vector field names");
    sub->add_flag("--timings", flags.timings, "include wall-clock timings (breaks byte-determinism)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorClass::Input);
  }

  try {
    const Command cmd = parse_command(app.get_subcommands().front()->get_name());
    for (std::size_t pos = 0; !fields.empty() && pos <= fields.size();) {
      const auto comma = fields.find(',', pos);
      const auto end = comma == std::string::npos ? fields.size() : comma;
      if (end > pos) flags.fields.push_back(fields.substr(pos, end - pos));
      pos = end + 1;
    }
    const ProblemFile problem = load_problem(input);
    const Report report = run_command(cmd, problem, flags);
    std::cout << emit_report(report, format == "text" ? ReportFormat::Text : ReportFormat::Json);
    return report.exit_code();
  } catch (const Error& e) {
    const char* label = e.error_class() == ErrorClass::Input    ? "input error: "
                        : e.error_class() == ErrorClass::Budget ? "budget exhausted: "
                                                                : "internal error: ";
    return fail(static_cast<int>(e.error_class()), label + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    return fail(static_cast<int>(ErrorClass::Input), std::string("input error: ") + e.what());
  } catch (const std::exception& e) {
    return fail(static_cast<int>(ErrorClass::Internal), std::string("internal error: ") + e.what());
  }
}
