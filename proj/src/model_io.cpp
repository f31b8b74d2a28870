#include "eimq/model_io.hpp"

#include <json.hpp>

#include "eimq/errors.hpp"
#include "eimq/text.hpp"

namespace eimq::io {

using nlohmann::json;

namespace {

template <EimScalar Scalar>
json scalar_to_json(Scalar v) {
    if constexpr (std::same_as<Scalar, double>) {
        return v;
    } else {
        return json::array({v.real(), v.imag()});
    }
}

template <EimScalar Scalar>
json scalar_vector_to_json(const std::vector<Scalar>& vs) {
    json arr = json::array();
    for (const Scalar& v : vs) arr.push_back(scalar_to_json(v));
    return arr;
}

json interval_list_to_json(const std::vector<Interval>& box) {
    json arr = json::array();
    for (const Interval& iv : box) arr.push_back(json::array({iv.lo, iv.hi}));
    return arr;
}

const json& need(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw MalformedFieldError(std::string("missing field '") + key + "'");
    return *it;
}

double as_double(const json& j, const char* key) {
    if (!j.is_number()) throw MalformedFieldError(std::string("field '") + key + "' is not a number");
    return j.get<double>();
}

template <EimScalar Scalar>
Scalar scalar_from_json(const json& j, const char* key) {
    if constexpr (std::same_as<Scalar, double>) {
        return as_double(j, key);
    } else {
        if (!j.is_array() || j.size() != 2)
            throw MalformedFieldError(std::string("field '") + key + "' is not an [re, im] pair");
        return {as_double(j[0], key), as_double(j[1], key)};
    }
}

template <EimScalar Scalar>
std::vector<Scalar> scalar_vector_from_json(const json& j, const char* key) {
    if (!j.is_array()) throw MalformedFieldError(std::string("field '") + key + "' is not an array");
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(scalar_from_json<Scalar>(e, key));
    return out;
}

std::vector<double> double_vector_from_json(const json& j, const char* key) {
    return scalar_vector_from_json<double>(j, key);
}

std::vector<std::size_t> index_vector_from_json(const json& j, const char* key) {
    if (!j.is_array()) throw MalformedFieldError(std::string("field '") + key + "' is not an array");
    std::vector<std::size_t> out;
    out.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_number_unsigned())
            throw MalformedFieldError(std::string("field '") + key + "' holds a non-index value");
        out.push_back(e.get<std::size_t>());
    }
    return out;
}

StopReason stop_reason_from_string(const std::string& s) {
    if (s == "tolerance reached") return StopReason::ToleranceReached;
    if (s == "max_M reached") return StopReason::MaxTermsReached;
    if (s == "family exhausted") return StopReason::FamilyExhausted;
    throw MalformedFieldError("unknown stop reason '" + s + "'");
}

template <EimScalar Scalar>
json payload_to_json(const ModelFile<Scalar>& file) {
    const MagicModel<Scalar>& model = file.model;
    json payload;
    payload["family"] = {
        {"id", model.family_tag},
        {"value_kind", std::same_as<Scalar, double> ? "real" : "complex"},
        {"box", interval_list_to_json(model.box)},
    };
    payload["grid"] = scalar_vector_to_json(model.grid);
    payload["magic"] = {
        {"point_indices", model.magic_point_indices},
        {"point_values", scalar_vector_to_json(model.magic_points)},
        {"param_indices", model.magic_param_indices},
        {"params", scalar_vector_to_json(model.magic_params)},
    };
    payload["matrices"] = {
        {"b", scalar_vector_to_json(model.b)},
        {"basis_coeffs", scalar_vector_to_json(model.basis_coeffs)},
        {"basis_grid", scalar_vector_to_json(model.basis_grid)},
    };
    payload["weights"] = scalar_vector_to_json(model.weights);
    payload["training"] = {
        {"history", scalar_vector_to_json(model.history)},
        {"pivots", scalar_vector_to_json(model.pivots)},
        {"initial_sup", model.initial_sup},
        {"tolerance", model.tolerance},
        {"max_terms", model.max_terms},
        {"stop_reason", to_string(file.stop_reason)},
    };
    payload["config"] = file.config_echo;
    return payload;
}

template <EimScalar Scalar>
ModelFile<Scalar> payload_from_json(const json& payload) {
    ModelFile<Scalar> file;
    MagicModel<Scalar>& model = file.model;

    const json& family = need(payload, "family");
    model.family_tag = need(family, "id").get<std::string>();
    const json& box = need(family, "box");
    if (!box.is_array()) throw MalformedFieldError("family box is not an array");
    for (const json& iv : box) {
        if (!iv.is_array() || iv.size() != 2)
            throw MalformedFieldError("box entry is not an interval");
        model.box.push_back({as_double(iv[0], "box"), as_double(iv[1], "box")});
    }

    model.grid = double_vector_from_json(need(payload, "grid"), "grid");

    const json& magic = need(payload, "magic");
    model.magic_point_indices = index_vector_from_json(need(magic, "point_indices"), "point_indices");
    model.magic_points = double_vector_from_json(need(magic, "point_values"), "point_values");
    model.magic_param_indices = index_vector_from_json(need(magic, "param_indices"), "param_indices");
    model.magic_params = double_vector_from_json(need(magic, "params"), "params");

    const json& matrices = need(payload, "matrices");
    model.b = scalar_vector_from_json<Scalar>(need(matrices, "b"), "b");
    model.basis_coeffs = scalar_vector_from_json<Scalar>(need(matrices, "basis_coeffs"), "basis_coeffs");
    model.basis_grid = scalar_vector_from_json<Scalar>(need(matrices, "basis_grid"), "basis_grid");

    model.weights = scalar_vector_from_json<Scalar>(need(payload, "weights"), "weights");

    const json& training = need(payload, "training");
    model.history = double_vector_from_json(need(training, "history"), "history");
    model.pivots = double_vector_from_json(need(training, "pivots"), "pivots");
    model.initial_sup = as_double(need(training, "initial_sup"), "initial_sup");
    model.tolerance = as_double(need(training, "tolerance"), "tolerance");
    model.max_terms = need(training, "max_terms").get<std::size_t>();
    file.stop_reason = stop_reason_from_string(need(training, "stop_reason").get<std::string>());

    const json& config = need(payload, "config");
    if (!config.is_object()) throw MalformedFieldError("config echo is not an object");
    for (auto it = config.begin(); it != config.end(); ++it) {
        if (!it.value().is_string())
            throw MalformedFieldError("config echo value for '" + it.key() + "' is not a string");
        file.config_echo[it.key()] = it.value().get<std::string>();
    }

    // dimension consistency
    const std::size_t M = model.magic_points.size();
    if (model.magic_point_indices.size() != M || model.magic_param_indices.size() != M ||
        model.b.size() != M * M || model.basis_coeffs.size() != M * M ||
        model.basis_grid.size() != M * model.grid.size() ||
        model.history.size() != M || model.pivots.size() != M ||
        (M > 0 && !model.box.empty() && model.magic_params.size() != M * model.box.size()))
        throw MalformedFieldError("matrix dimensions are inconsistent with M = " +
                                  std::to_string(M));
    for (std::size_t idx : model.magic_point_indices)
        if (idx >= model.grid.size())
            throw MalformedFieldError("magic point index out of range");
    if (!model.weights.empty() && model.weights.size() != M)
        throw MalformedFieldError("weight vector length is inconsistent");
    return file;
}

} // namespace

template <EimScalar Scalar>
std::string serialize(const ModelFile<Scalar>& file) {
    json payload = payload_to_json(file);
    const std::string body = payload.dump();
    json doc;
    doc["format"] = "eimquad-model";
    doc["format_version"] = kFormatVersion;
    doc["checksum"] = text::fnv1a64_hex(body);
    doc["payload"] = std::move(payload);
    return doc.dump(1) + "\n";
}

template <EimScalar Scalar>
void save(const std::filesystem::path& path, const ModelFile<Scalar>& file) {
    text::atomic_write(path, serialize(file));
}

AnyModelFile deserialize(const std::string& content) {
    try {
        json doc = json::parse(content, nullptr, false);
        if (doc.is_discarded()) throw MalformedFieldError("file is not valid JSON");
        if (!doc.is_object()) throw MalformedFieldError("top level is not an object");
        if (need(doc, "format").get<std::string>() != "eimquad-model")
            throw MalformedFieldError("not an eimquad model file");
        const json& version = need(doc, "format_version");
        if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
            throw UnsupportedVersionError("unsupported format version " + version.dump() +
                                          " (expected " + std::to_string(kFormatVersion) + ")");
        const json& payload = need(doc, "payload");
        const std::string checksum = need(doc, "checksum").get<std::string>();
        if (text::fnv1a64_hex(payload.dump()) != checksum)
            throw ChecksumMismatchError("payload checksum mismatch");

        const std::string kind = need(need(payload, "family"), "value_kind").get<std::string>();
        if (kind == "real") return payload_from_json<double>(payload);
        if (kind == "complex") return payload_from_json<std::complex<double>>(payload);
        throw MalformedFieldError("unknown value kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw MalformedFieldError(std::string("malformed model file: ") + e.what());
    }
}

AnyModelFile load(const std::filesystem::path& path) {
    return deserialize(text::read_file(path));
}

template std::string serialize<double>(const ModelFile<double>&);
template std::string serialize<std::complex<double>>(const ModelFile<std::complex<double>>&);
template void save<double>(const std::filesystem::path&, const ModelFile<double>&);
template void save<std::complex<double>>(const std::filesystem::path&,
                                         const ModelFile<std::complex<double>>&);

} // namespace eimq::io
