#include "json_io.hpp"

#include <nlohmann/json.hpp>

namespace divkit {

namespace {

double number_field(const Json& j, const char* what) {
    if (!j.is_number())
        fail(ErrorCode::parse_error, std::string(what) + " must be a number");
    return j.get<double>();
}

std::string label_field(const Json& j, const char* what) {
    if (!j.is_string())
        fail(ErrorCode::parse_error, std::string(what) + " must be a string label");
    return j.get<std::string>();
}

std::vector<std::string> label_array(const Json& j, const char* what) {
    if (!j.is_array() || j.empty())
        fail(ErrorCode::parse_error, std::string(what) + " must be a nonempty array");
    std::vector<std::string> out;
    for (const auto& e : j) out.push_back(label_field(e, what));
    return out;
}

std::vector<std::vector<double>> matrix_field(const Json& j, const char* what) {
    if (!j.is_array() || j.empty())
        fail(ErrorCode::parse_error, std::string(what) + " must be a nonempty matrix");
    std::vector<std::vector<double>> out;
    for (const auto& row : j) {
        if (!row.is_array())
            fail(ErrorCode::parse_error, std::string(what) + " rows must be arrays");
        std::vector<double> r;
        for (const auto& e : row) r.push_back(number_field(e, what));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

DiscreteDistribution distribution_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("atoms"))
        fail(ErrorCode::parse_error, "distribution JSON needs an \"atoms\" array");
    const Json& atoms = j.at("atoms");
    if (!atoms.is_array() || atoms.empty())
        fail(ErrorCode::parse_error, "\"atoms\" must be a nonempty array");
    std::vector<Atom> out;
    for (const auto& a : atoms) {
        if (!a.is_object() || !a.contains("label") || !a.contains("p"))
            fail(ErrorCode::parse_error, "each atom needs \"label\" and \"p\"");
        out.push_back({label_field(a.at("label"), "atom label"),
                       number_field(a.at("p"), "atom mass")});
    }
    return DiscreteDistribution(std::move(out));
}

JointDistribution joint_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("pmf"))
        fail(ErrorCode::parse_error, "joint JSON needs \"x\", \"y\" and \"pmf\"");
    return JointDistribution(label_array(j.at("x"), "joint x labels"),
                             label_array(j.at("y"), "joint y labels"),
                             matrix_field(j.at("pmf"), "joint pmf"));
}

StochasticKernel kernel_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("rows"))
        fail(ErrorCode::parse_error, "kernel JSON needs \"source\", \"target\" and \"rows\"");
    return StochasticKernel(label_array(j.at("source"), "kernel source labels"),
                            label_array(j.at("target"), "kernel target labels"),
                            matrix_field(j.at("rows"), "kernel rows"));
}

Json to_json(const DiscreteDistribution& d) {
    Json atoms = Json::array();
    for (const auto& a : d.atoms()) atoms.push_back({{"label", a.label}, {"p", a.mass}});
    return Json{{"atoms", atoms}};
}

Json to_json(const JointDistribution& j) {
    return Json{{"x", j.x_labels()}, {"y", j.y_labels()}, {"pmf", j.cells()}};
}

Json to_json(const StochasticKernel& k) {
    return Json{{"source", k.source_labels()}, {"target", k.target_labels()},
                {"rows", k.rows()}};
}

Json ext_real_to_json(ExtReal v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::parse_error, "malformed JSON");
    return j;
}

DiscreteDistribution distribution_from_text(const std::string& text) {
    return distribution_from_json(parse_json_text(text));
}

JointDistribution joint_from_text(const std::string& text) {
    return joint_from_json(parse_json_text(text));
}

StochasticKernel kernel_from_text(const std::string& text) {
    return kernel_from_json(parse_json_text(text));
}

} // namespace divkit
