#include "orbcat/exports.hpp"

#include <sstream>

namespace orbcat {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const FinCategory& c, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << escape(name) << "\" {\n";
  for (int o = 0; o < c.num_objects(); ++o)
    out << "  n" << o << " [label=\"" << escape(c.objects[o]) << "\"];\n";
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    out << "  n" << c.mor_dom[m] << " -> n" << c.mor_cod[m] << " [label=\""
        << escape(c.mor_label[m]) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace orbcat
