#include "ramsey/arrowing.hpp"
#include "ramsey/errors.hpp"

#include <sstream>

namespace ramsey {

std::string export_dimacs(const Graph &host, const Target &red,
                          const Target &blue, std::size_t copy_cap) {
  const EdgeIndex index(host);
  const CopySet red_copies = enumerate_copies(host, index, red, copy_cap);
  const CopySet blue_copies = enumerate_copies(host, index, blue, copy_cap);
  if (red_copies.overflow || blue_copies.overflow)
    throw LimitError("export_dimacs: more than " + std::to_string(copy_cap) +
                     " copies of a target");

  std::ostringstream out;
  out << "c host edges -> variables (true = red)\n";
  out << "c red target " << red.name() << ": " << red_copies.size()
      << " copies, each needs a blue edge\n";
  out << "c blue target " << blue.name() << ": " << blue_copies.size()
      << " copies, each needs a red edge\n";
  for (int e = 0; e < index.size(); ++e)
    out << "c edge " << index.edge(e).first << ' ' << index.edge(e).second
        << " var " << e + 1 << '\n';
  out << "p cnf " << index.size() << ' '
      << red_copies.size() + blue_copies.size() << '\n';
  for (std::size_t i = 0; i < red_copies.size(); ++i) {
    for (auto e : red_copies.copy(i))
      out << '-' << e + 1 << ' ';
    out << "0\n";
  }
  for (std::size_t i = 0; i < blue_copies.size(); ++i) {
    for (auto e : blue_copies.copy(i))
      out << e + 1 << ' ';
    out << "0\n";
  }
  return out.str();
}

} // namespace ramsey
