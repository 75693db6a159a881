#include "ratcomb/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ratcomb/error.hpp"

namespace ratcomb {

SeriesFile to_series_file(const EgfSeries& s) {
    SeriesFile file;
    file.order = s.order();
    file.coeffs.reserve(s.order() + 1);
    for (const Rational& c : s.coeffs()) file.coeffs.push_back(c.str());
    return file;
}

EgfSeries from_series_file(const SeriesFile& file) {
    if (file.kind != "egf")
        throw ParseError("series file: kind must be \"egf\", got \"" + file.kind + "\"");
    if (file.coeffs.size() != file.order + 1)
        throw ParseError("series file: coeffs length must be order + 1");
    std::vector<Rational> coeffs;
    coeffs.reserve(file.coeffs.size());
    for (const std::string& text : file.coeffs)
        coeffs.push_back(Rational::from_string(text, /*strict=*/true));
    return EgfSeries(std::move(coeffs));
}

std::string render_series_file(const SeriesFile& file) {
    nlohmann::json j;
    j["kind"] = file.kind;
    j["order"] = file.order;
    j["coeffs"] = file.coeffs;
    return j.dump() + "\n";
}

SeriesFile parse_series_file(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("series file: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("order") ||
        !j.contains("coeffs"))
        throw ParseError("series file: expected object with kind/order/coeffs");
    SeriesFile file;
    try {
        file.kind = j.at("kind").get<std::string>();
        file.order = j.at("order").get<std::size_t>();
        file.coeffs = j.at("coeffs").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("series file: bad field types: ") + e.what());
    }
    return file;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

EgfSeries load_series_file(const std::string& path) {
    return from_series_file(parse_series_file(read_text_file(path)));
}

void write_series_file(const std::string& path, const EgfSeries& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file \"" + path + "\"");
    out << render_series_file(to_series_file(s));
}

} // namespace ratcomb
