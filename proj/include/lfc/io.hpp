// JSON documents, SVG rendering and bundled example inputs.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lfc/lazy_complex.hpp"

namespace lfc {

using Json = nlohmann::ordered_json;

class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message);
  std::string path;
};

enum class Strictness { kStrict, kLax };

struct Document {
  std::string schema_version = "1";
  std::string kind;  // complex | fan | seed | window | report
  Json payload;
};

Document parse_document(const std::string& text, Strictness mode = Strictness::kStrict);
std::string serialize(const Document& doc);

Json to_json(const Scalar& s);
Json to_json(const Vec& v);
Json to_json(const Polyhedron& p);
Json to_json(const Complex& c);
Json to_json(const SubdivisionSeed& seed);
Json to_json(const WindowReport& r);
Json to_json(const std::vector<MaterializedCell>& cells);

Scalar scalar_from_json(const Json& j, const std::string& path, Strictness mode = Strictness::kStrict);
Vec vec_from_json(const Json& j, const std::string& path, Strictness mode = Strictness::kStrict);
Polyhedron polyhedron_from_json(const Json& j, const std::string& path, Strictness mode = Strictness::kStrict);
Complex complex_from_json(const Json& j, const std::string& path, Strictness mode = Strictness::kStrict);
Fan fan_from_json(const Json& j, const std::string& path, Strictness mode = Strictness::kStrict);
/// Rebuilds the seed without re-running the construction checks, so that a
/// tampered seed can still be inspected by validate_window.
SubdivisionSeed seed_from_json(const Json& j, const std::string& path, Strictness mode = Strictness::kStrict);

Document make_document(const std::string& kind, Json payload);

/// "x0:x1,y0:y1,..." → box.
Polyhedron parse_window(const std::string& text);
/// "x,y,..." → point.
Vec parse_point(const std::string& text);

/// Cells of the window clipped to it, drawn with cells of Φ shaded.
std::string render_svg(const SubdivisionSeed& seed, const Polyhedron& window);

struct ExampleBundle {
  Complex phi;
  Fan sigma;
  std::optional<Complex> pi;
  std::string cls;
};
/// "one", "three" or "square-zonotopal".
ExampleBundle bundled_example(const std::string& name);
std::vector<std::string> bundled_example_names();

}  // namespace lfc
