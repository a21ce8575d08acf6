#include "dissect/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dissect/commands.hpp"
#include "dissect/errors.hpp"
#include "dissect/render.hpp"
#include "dissect/version.hpp"

namespace dissect::cli {

namespace {

constexpr const char* kLimitEnv = "DISSECT_FACE_LIMIT";

struct Common {
  std::string family;
  int m = 0;
  int n = 0;
  std::string format = "json";
  std::optional<std::uint64_t> limit;
  std::string out_path;
  bool timing = false;
};

std::uint64_t face_limit(const Common& c) {
  if (c.limit) return *c.limit;
  if (const char* env = std::getenv(kLimitEnv); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (env[used] == '\0') return value;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError(std::string(kLimitEnv) + " must be a non-negative integer, got '" + env + "'");
  }
  return kDefaultFaceLimit;
}

ComplexParams params_of(const Common& c) { return ComplexParams(parse_family(c.family), c.m, c.n); }

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to a sibling temporary and renames, so readers never see a
// partially written file.
void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << text;
    if (!f.flush()) throw std::runtime_error("cannot write '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

Face load_face(const std::string& path) {
  const std::string text = read_input(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FaceDocumentError(std::string("face document is not JSON: ") + e.what(), -1);
  }
  return face_from_json(doc);
}

NamedComplex load_facet_list(const std::string& path) {
  std::istringstream in(read_input(path));
  return read_facet_list(in);
}

void add_params(CLI::App* cmd, Common& c) {
  cmd->add_option("--family", c.family, "Family A or B")->required()->check(CLI::IsMember({"A", "B"}));
  cmd->add_option("--m", c.m, "Divisibility m >= 1")->required();
  cmd->add_option("--n", c.n, "Rank n >= 1")->required();
}

void add_output(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  cmd->add_flag("--timing", c.timing, "Add wall-clock timing to the report");
}

void add_limit(CLI::App* cmd, Common& c) {
  cmd->add_option("--limit", c.limit, std::string("Face budget (default 10^7, env ") + kLimitEnv + ")");
}

Json error_report(const std::string& command, const std::string& kind, const std::string& message) {
  Json report = make_report(command);
  report["error"] = Json{{"kind", kind}, {"message", message}};
  return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized cluster complexes as polygon dissections", "dissect"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Common c;
  std::optional<int> up_to;
  bool list_faces = false;
  bool export_list = false;
  bool no_order = false;
  std::string face_path;
  std::string facets_path;
  std::string a_list;
  std::string eps_list;
  std::string suite = "all";

  CLI::App* count = app.add_subcommand("count", "Closed-form f-, h- and Narayana vectors");
  add_params(count, c);
  add_output(count, c);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate faces and compare with the closed form");
  add_params(enumerate, c);
  add_output(enumerate, c);
  add_limit(enumerate, c);
  enumerate->add_option("--up-to", up_to, "Largest face size to enumerate");
  enumerate->add_flag("--list", list_faces, "Include every face in the report");

  CLI::App* facets = app.add_subcommand("facets", "List facets, or export them as a facet list");
  add_params(facets, c);
  add_output(facets, c);
  add_limit(facets, c);
  facets->add_flag("--export", export_list, "Write the plain-text facet-list format");

  CLI::App* encode_cmd = app.add_subcommand("encode", "Apply the bijection to a type-B face");
  encode_cmd->add_option("--face", face_path, "Face document (JSON file, - for stdin)")->required();
  add_output(encode_cmd, c);

  CLI::App* decode_cmd = app.add_subcommand("decode", "Invert the bijection");
  decode_cmd->add_option("--a", a_list, "Weakly increasing labels, comma separated")->required();
  decode_cmd->add_option("--eps", eps_list, "0/1 flags, comma separated")->required();
  decode_cmd->add_option("--m", c.m, "Divisibility m >= 1")->required();
  decode_cmd->add_option("--n", c.n, "Rank n >= 1")->required();
  add_output(decode_cmd, c);

  CLI::App* shelling = app.add_subcommand("shelling", "Vertex decomposition and shelling certificate");
  shelling->add_option("--family", c.family)->check(CLI::IsMember({"A", "B"}));
  shelling->add_option("--m", c.m);
  shelling->add_option("--n", c.n);
  shelling->add_option("--facets", facets_path, "Facet-list file instead of a dissection complex");
  shelling->add_flag("--no-order", no_order, "Omit the shelling order from the report");
  add_output(shelling, c);
  add_limit(shelling, c);

  CLI::App* homology = app.add_subcommand("homology", "Reduced homology ranks");
  homology->add_option("--family", c.family)->check(CLI::IsMember({"A", "B"}));
  homology->add_option("--m", c.m);
  homology->add_option("--n", c.n);
  homology->add_option("--facets", facets_path, "Facet-list file instead of a dissection complex");
  add_output(homology, c);
  add_limit(homology, c);

  CLI::App* verify = app.add_subcommand("verify", "Run invariant suites");
  add_params(verify, c);
  add_output(verify, c);
  add_limit(verify, c);
  verify->add_option("--suite", suite)->check(CLI::IsMember(verify_suites()));

  CLI::App* render = app.add_subcommand("render", "Draw a face as SVG");
  render->add_option("--face", face_path, "Face document (JSON file, - for stdin)")->required();
  render->add_option("--out", c.out_path, "SVG output file (stdout when absent)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dissect: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const auto emit = [&](const std::string& text) {
    if (c.out_path.empty()) out << text;
    else write_atomically(c.out_path, text);
  };
  const auto emit_report = [&](const Json& report) {
    emit(c.format == "table" ? render_table(report) : report.dump(2) + "\n");
  };
  const auto fail = [&](const std::string& kind, const std::string& message, int code, Json extra = Json::object()) {
    err << "dissect " << command << ": " << message << "\n";
    if (command != "render" && c.format == "json") {
      Json report = error_report(command, kind, message);
      for (auto& [key, value] : extra.items()) report["error"][key] = value;
      out << report.dump(2) << "\n";
    }
    return code;
  };

  const auto started = std::chrono::steady_clock::now();
  try {
    const auto has_params = [&] { return !c.family.empty() || c.m != 0 || c.n != 0; };
    if (chosen == shelling || chosen == homology) {
      if (facets_path.empty() == !has_params() || (has_params() && (c.family.empty() || c.m == 0 || c.n == 0))) {
        return fail("usage", "give either --facets FILE or all of --family, --m, --n", kExitUsage);
      }
    }

    Json report;
    bool violated = false;
    if (chosen == count) {
      report = cmd_count(params_of(c));
    } else if (chosen == enumerate) {
      report = cmd_enumerate(params_of(c), {.up_to = up_to, .list_faces = list_faces, .face_limit = face_limit(c)});
      violated = !report["agree"].get<bool>();
    } else if (chosen == facets) {
      if (export_list) {
        emit(export_facet_list(params_of(c), face_limit(c)));
        return kExitOk;
      }
      report = cmd_facets(params_of(c), face_limit(c));
      violated = !report["all_regions_m_plus_2_gons"].get<bool>();
    } else if (chosen == encode_cmd) {
      report = cmd_encode(load_face(face_path));
      violated = !report["round_trip"].get<bool>();
    } else if (chosen == decode_cmd) {
      report = cmd_decode({parse_int_list(a_list), parse_int_list(eps_list)}, c.m, c.n);
      violated = !report["round_trip"].get<bool>();
    } else if (chosen == shelling) {
      const ShellingRequest request{.include_order = !no_order, .face_limit = face_limit(c)};
      if (facets_path.empty()) {
        report = cmd_shelling(params_of(c), request);
        violated = !report["vertex_decomposable"].get<bool>() || !report["shelling_verified"].get<bool>();
      } else {
        report = cmd_shelling(load_facet_list(facets_path), request);
      }
    } else if (chosen == homology) {
      report = facets_path.empty() ? cmd_homology(params_of(c), face_limit(c))
                                   : cmd_homology(load_facet_list(facets_path), face_limit(c));
    } else if (chosen == verify) {
      VerifyOutcome outcome = cmd_verify(params_of(c), suite, face_limit(c));
      report = std::move(outcome.report);
      violated = !outcome.passed;
    } else if (chosen == render) {
      emit(render_svg(load_face(face_path)));
      return kExitOk;
    }

    if (c.timing) {
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - started;
      report["timing"] = Json{{"elapsed_ms", elapsed.count()}};
    }
    emit_report(report);
    return violated ? kExitViolation : kExitOk;
  } catch (const ResourceLimitError& e) {
    return fail("resource_limit", e.what(), kExitResource,
                Json{{"projected", e.projected()}, {"limit", e.limit()}});
  } catch (const FaceDocumentError& e) {
    Json extra = Json::object();
    if (e.diagonal_index() >= 0) extra["diagonal_index"] = e.diagonal_index();
    return fail("invalid_face", e.what(), kExitUsage, extra);
  } catch (const CLI::ValidationError& e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const InvalidImageError& e) {
    return fail("invalid_image", e.what(), kExitUsage);
  } catch (const MalformedFaceError& e) {
    return fail("invalid_face", e.what(), kExitUsage);
  } catch (const std::invalid_argument& e) {
    return fail("invalid_argument", e.what(), kExitUsage);
  } catch (const std::out_of_range& e) {
    return fail("invalid_argument", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return fail("io", e.what(), kExitUsage);
  }
}

}  // namespace dissect::cli
