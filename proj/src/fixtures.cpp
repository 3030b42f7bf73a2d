#include "chi/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace chi {

namespace {

constexpr std::string_view kDelta1 = "# standard 1-simplex\n0 1\n";
constexpr std::string_view kDelta2 = "# standard 2-simplex\n0 1 2\n";
constexpr std::string_view kDelta3 = "# standard 3-simplex\n0 1 2 3\n";
constexpr std::string_view kDelta4 = "# standard 4-simplex\n0 1 2 3 4\n";
constexpr std::string_view kDelta5 = "# standard 5-simplex\n0 1 2 3 4 5\n";

constexpr std::string_view kCircle =
    "# boundary of the 2-simplex, a circle\n"
    "0 1\n1 2\n0 2\n";

// minimal 6-vertex triangulation, antipodal quotient of the icosahedron
constexpr std::string_view kRp2 =
    "# real projective plane, minimal triangulation\n"
    "0 1 2\n0 2 3\n0 1 5\n0 4 5\n0 3 4\n"
    "1 2 4\n2 4 5\n2 3 5\n1 3 5\n1 3 4\n";

// 7-vertex torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7
constexpr std::string_view kTorus =
    "# 7-vertex torus\n"
    "0 1 3\n1 2 4\n2 3 5\n3 4 6\n0 4 5\n1 5 6\n0 2 6\n"
    "0 2 3\n1 3 4\n2 4 5\n3 5 6\n0 4 6\n0 1 5\n1 2 6\n";

// 9-vertex Klein bottle: 3x3 grid with one orientation-reversing wrap
constexpr std::string_view kKlein =
    "# 9-vertex Klein bottle\n"
    "0 1 4\n0 3 4\n3 4 7\n3 6 7\n0 6 7\n0 1 6\n"
    "1 2 5\n1 4 5\n4 5 8\n4 7 8\n1 7 8\n1 2 7\n"
    "0 2 3\n2 3 5\n3 5 6\n5 6 8\n0 2 8\n0 6 8\n";

const std::vector<Fixture> kFixtures = {
    {"delta1", "standard 1-simplex", kDelta1},
    {"delta2", "standard 2-simplex", kDelta2},
    {"delta3", "standard 3-simplex", kDelta3},
    {"delta4", "standard 4-simplex", kDelta4},
    {"delta5", "standard 5-simplex", kDelta5},
    {"circle", "boundary of the 2-simplex", kCircle},
    {"rp2", "real projective plane, 6 vertices", kRp2},
    {"torus", "torus, 7 vertices", kTorus},
    {"klein", "Klein bottle, 9 vertices", kKlein},
};

}  // namespace

const std::vector<Fixture>& fixtures() { return kFixtures; }

std::string_view fixture_text(std::string_view name) {
  for (const auto& f : kFixtures)
    if (f.name == name) return f.text;
  throw ValidationError("unknown fixture: " + std::string(name));
}

SimplicialComplex load_complex(const std::string& name_or_path) {
  for (const auto& f : kFixtures)
    if (f.name == name_or_path) return SimplicialComplex::parse(f.text);
  std::ifstream in(name_or_path);
  if (!in) throw ValidationError("no such fixture or file: " + name_or_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return SimplicialComplex::parse(ss.str());
}

}  // namespace chi
