#include "ncmax/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ncmax {

using nlohmann::json;

nlohmann::json profile_to_json(const SpectralProfile& p) {
    json atoms = json::array();
    for (const Atom& a : p.atoms()) atoms.push_back({{"value", a.value}, {"weight", a.weight}});
    return json{{"atoms", atoms}};
}

SpectralProfile profile_from_json(const json& j) {
    if (!j.contains("atoms") || !j["atoms"].is_array())
        throw std::invalid_argument("profile JSON: missing \"atoms\" array");
    std::vector<Atom> atoms;
    for (const auto& a : j["atoms"])
        atoms.push_back({a.at("value").get<double>(), a.at("weight").get<double>()});
    return SpectralProfile(std::move(atoms));
}

std::string step_to_csv(const StepFunction& f) {
    std::ostringstream os;
    os << "t,v\n" << std::setprecision(17);
    for (std::size_t i = 0; i < f.pieces(); ++i)
        os << f.breakpoints()[i] << "," << f.values()[i] << "\n";
    return os.str();
}

StepFunction step_from_csv(std::istream& in) {
    std::string line;
    std::vector<double> breaks, values;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.rfind("t,", 0) == 0) continue;  // optional header
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("step CSV: expected 't,v' rows");
        breaks.push_back(std::stod(line.substr(0, comma)));
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    return StepFunction(std::move(breaks), std::move(values));
}

DenseMatrix matrix_from_csv(std::istream& in) {
    DenseMatrix m;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        int cols = 0;
        while (std::getline(ss, cell, ',')) {
            m.entries.push_back(std::stod(cell));
            ++cols;
        }
        if (m.rows == 0)
            m.cols = cols;
        else if (cols != m.cols)
            throw std::invalid_argument("matrix CSV: ragged rows");
        ++m.rows;
    }
    return m;
}

nlohmann::json matrix_to_json(const DenseMatrix& m) {
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", m.entries}};
}

DenseMatrix matrix_from_json(const json& j) {
    DenseMatrix m;
    m.rows = j.at("rows").get<int>();
    m.cols = j.at("cols").get<int>();
    m.entries = j.at("entries").get<std::vector<double>>();
    if (m.entries.size() != static_cast<std::size_t>(m.rows) * m.cols)
        throw std::invalid_argument("matrix JSON: entries size mismatch");
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

SpectralProfile load_profile_file(const std::string& path) {
    std::string text = read_file(path);
    // profile JSON, matrix JSON, matrix CSV, or step CSV by content
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        json j = json::parse(text);
        if (j.contains("atoms")) return profile_from_json(j);
        if (j.contains("entries")) return profile_from_matrix(matrix_from_json(j));
        throw std::invalid_argument(path + ": unrecognized JSON input");
    }
    std::istringstream in(text);
    if (text.rfind("t,", 0) == 0) {
        StepFunction f = step_from_csv(in);
        std::vector<double> breaks{0.0};
        for (double b : f.breakpoints()) breaks.push_back(b);
        return profile_from_stepfn(RealStepFunction(std::move(breaks), f.values()));
    }
    return profile_from_matrix(matrix_from_csv(in));
}

}  // namespace ncmax
