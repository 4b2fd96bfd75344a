#pragma once

#include <hilb/quiver.hpp>
#include <hilb/tangent.hpp>
#include <hilb/theory.hpp>
#include <hilb/verify.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hilb {

using Json = nlohmann::ordered_json;

/// Line-oriented ideal description:
///
///   # comment
///   vars: x y z
///   deg x = (1, 2)        one line per variable, or none for the standard grading
///   gen: y^3 - x^3*z      one line per generator
struct IdealInputFile {
  RingPtr ring;
  std::vector<Polynomial> generators;

  Ideal ideal() const { return Ideal(ring, generators); }
};

/// Throws ParseError (with line number in the message) or InputError.
IdealInputFile parse_ideal_file(std::string_view text, MonomialOrder order = MonomialOrder::grevlex());
IdealInputFile read_ideal_file(const std::filesystem::path& path, MonomialOrder order = MonomialOrder::grevlex());

Json to_json(const VerificationReport& r);
Json to_json(const ParityReport& r);
Json to_json(const TheoryReport& r);

struct GoldenComparison {
  bool equal = true;
  std::vector<std::string> mismatched_keys;
};

/// Key-by-key exact comparison of two reports, ignoring "timings".
GoldenComparison compare_golden(const Json& report, const Json& golden);
/// Throws InputError when the file cannot be read or parsed.
GoldenComparison compare_golden_file(const Json& report, const std::filesystem::path& golden);

}  // namespace hilb
