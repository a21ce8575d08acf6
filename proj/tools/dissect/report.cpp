#include "dissect/report.hpp"

#include <sstream>

#include "dissect/version.hpp"

namespace dissect::cli {

Json make_report(const std::string& command) {
  return Json{{"schema", kReportSchema}, {"version", kVersion}, {"command", command}};
}

Json big(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) return value.convert_to<std::int64_t>();
  return value.str();
}

Json bigs(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const BigInt& v : values) out.push_back(big(v));
  return out;
}

namespace {

bool is_scalar_list(const Json& value) {
  if (!value.is_array()) return false;
  for (const Json& x : value) {
    if (x.is_object()) return false;
    if (x.is_array() && !is_scalar_list(x)) return false;
  }
  return true;
}

void emit(std::ostringstream& out, const std::string& key, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (value.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) emit(out, k, v, indent + 1);
  } else if (value.is_array() && !is_scalar_list(value)) {
    out << pad << key << ":\n";
    std::size_t i = 0;
    for (const Json& v : value) emit(out, "[" + std::to_string(i++) + "]", v, indent + 1);
  } else if (value.is_string()) {
    out << pad << key << ": " << value.get<std::string>() << '\n';
  } else {
    out << pad << key << ": " << value.dump() << '\n';
  }
}

}  // namespace

std::string render_table(const Json& report) {
  std::ostringstream out;
  for (const auto& [k, v] : report.items()) emit(out, k, v, 0);
  return out.str();
}

}  // namespace dissect::cli
