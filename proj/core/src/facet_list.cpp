#include "dissect/facet_list.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace dissect {

NamedComplex read_facet_list(std::istream& in) {
  NamedComplex out;
  std::unordered_map<std::string, Vertex> ids;
  std::vector<Simplex> facets;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string token;
    Simplex facet;
    bool any = false;
    while (tokens >> token) {
      if (!any && token[0] == '#') break;
      any = true;
      if (token == "{}") continue;
      auto [it, fresh] = ids.try_emplace(token, static_cast<Vertex>(out.names.size()));
      if (fresh) out.names.push_back(token);
      facet.push_back(it->second);
    }
    if (any) facets.push_back(make_simplex(std::move(facet)));
  }
  out.complex = AbstractComplex(std::move(facets));
  return out;
}

void write_facet_list(std::ostream& out, const AbstractComplex& complex, const std::vector<std::string>& names) {
  for (const Simplex& f : complex.facets()) {
    if (f.empty()) {
      out << "{}\n";
      continue;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      const auto v = static_cast<std::size_t>(f[i]);
      if (v < names.size()) out << names[v];
      else out << f[i];
    }
    out << '\n';
  }
}

}  // namespace dissect
