#ifndef NCMAX_IO_HPP
#define NCMAX_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ncmax/ingest.hpp"
#include "ncmax/profile.hpp"
#include "ncmax/step_function.hpp"

namespace ncmax {

// Profile JSON: {"atoms":[{"value":x,"weight":w},...]}, canonicalized on load.
nlohmann::json profile_to_json(const SpectralProfile& p);
SpectralProfile profile_from_json(const nlohmann::json& j);

// StepFunction CSV: header "t,v"; row (t, v) means value v on [prev t, t).
std::string step_to_csv(const StepFunction& f);
StepFunction step_from_csv(std::istream& in);

// Matrix CSV: one row per matrix row. Matrix JSON: {"rows":r,"cols":c,"entries":[...]}
DenseMatrix matrix_from_csv(std::istream& in);
nlohmann::json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const nlohmann::json& j);

SpectralProfile load_profile_file(const std::string& path);  // by extension/content
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace ncmax

#endif
