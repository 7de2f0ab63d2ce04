#ifndef LIEC_CLASSIFY_HPP
#define LIEC_CLASSIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "liec/errors.hpp"
#include "liec/graph.hpp"

namespace liec {

// A connected graph admits no locally irregular edge coloring exactly when it
// is an odd-length path, an odd-length cycle, or a member of the triangle
// family: subcubic cacti whose cycles are vertex-disjoint triangles joined by
// odd-length paths, with even-length pendant paths allowed at triangle
// vertices of degree 3.
enum class Colorability { Colorable, OddPath, OddCycle, TriangleFamily };

std::string to_string(Colorability c);

struct TriangleFamilyWitness {
    std::vector<std::array<int, 3>> triangles;   // sorted vertex triples
    std::vector<std::vector<int>> connectors;    // vertex paths between two triangles (odd length)
    std::vector<std::vector<int>> pendants;      // vertex paths from a triangle vertex to a leaf (even length)
};

struct ColorabilityClass {
    Colorability tag = Colorability::Colorable;
    std::optional<TriangleFamilyWitness> witness; // present when tag == TriangleFamily
};

// Structural membership test for the triangle family; returns the witness
// decomposition on success. Requires a connected input.
std::optional<TriangleFamilyWitness> recognize_triangle_family(const Graph &g);

// Re-checks a witness against the graph (disjoint triangles, path parities,
// maximum degree 3, full edge coverage).
bool validate_witness(const Graph &g, const TriangleFamilyWitness &w);

// Requires a connected input. K3 counts as OddCycle (it is also a triangle
// family member; recognize_triangle_family still accepts it).
ColorabilityClass classify(const Graph &g);

// Thrown by solvers handed a non-colorable graph.
class NotColorableError : public std::runtime_error {
  public:
    explicit NotColorableError(ColorabilityClass cls)
        : std::runtime_error("graph is not colorable: " + to_string(cls.tag)), cls_(std::move(cls)) {}
    const ColorabilityClass &cls() const { return cls_; }

  private:
    ColorabilityClass cls_;
};

} // namespace liec

#endif
